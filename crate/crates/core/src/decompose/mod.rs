//! Constructive decomposition of lattice polygons.
//!
//! The recursion follows strong induction on the vertex count:
//!
//! - a triangle is refined (three ways at its smallest interior lattice point,
//!   or two ways at its first non-corner boundary point) until every piece is
//!   elementary (`I = 0`, `B = 3`);
//! - a convex polygon with more vertices is cut along a good chord;
//! - a non-convex polygon is reduced by filling its first hull pocket, which
//!   yields a filled polygon and a pocket polygon, both with fewer vertices.
//!
//! The three-way triangle refinement is recorded as two nested splits, the
//! outer one along a two-segment path, so the tree stays binary.

mod convex;
mod pocket;
mod split;
mod triangle;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::exact::LatticePoint;
use crate::lattice::{CountError, PickCounts};
use crate::polygon::{is_convex, validate_polygon, Polygon, VertexList};

pub use convex::find_good_linepath_convex;
pub use pocket::{find_pocket, first_pocket_start, PocketDecomposition};
pub(crate) use split::chord_touches_boundary;
pub use split::{is_good_path, path_inner_lattice_count, split_sides, subdivide, SplitPath};
pub use triangle::{
    first_interior_point, is_elementary, split_triangle, unimodular_witness, TriangleSplit, UnimodularWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("expected a triangle, got {0} vertices")]
    NotATriangle(usize),
    #[error("triangle is not elementary")]
    NotElementary,
    #[error("triangle is already elementary")]
    AlreadyElementary,
    #[error("path endpoints must be polygon vertices")]
    EndpointsNotVertices,
    #[error("a path needs at least 2 vertices, got {0}")]
    PathTooShort(usize),
    #[error("no good linepath found")]
    NoGoodLinepath,
    #[error("polygon is convex and has no pocket")]
    PolygonConvex,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("negative or impossible recombined counts: {0}")]
    NegativeCount(#[from] CountError),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// Certificate tree: leaves are elementary triangles, inner nodes record
/// how their polygon was cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf {
        triangle: Polygon,
        witness: UnimodularWitness,
    },
    /// `parent` is the union of `left` and `right`, which share `path`.
    Split {
        parent: Polygon,
        path: SplitPath,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
    /// `parent` is the filled polygon minus the pocket.
    PocketSplit {
        parent: Polygon,
        pocket: PocketDecomposition,
        filled_tree: Box<DecompositionTree>,
        pocket_tree: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn polygon(&self) -> &Polygon {
        match self {
            DecompositionTree::Leaf { triangle, .. } => triangle,
            DecompositionTree::Split { parent, .. } => parent,
            DecompositionTree::PocketSplit { parent, .. } => parent,
        }
    }

    pub fn children(&self) -> Option<[&DecompositionTree; 2]> {
        match self {
            DecompositionTree::Leaf { .. } => None,
            DecompositionTree::Split { left, right, .. } => Some([left, right]),
            DecompositionTree::PocketSplit { filled_tree, pocket_tree, .. } => Some([filled_tree, pocket_tree]),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.fold(&|_| 1, &|a, b| a + b)
    }

    /// Edges on the longest root-to-leaf path; a single leaf has depth 0.
    pub fn depth(&self) -> usize {
        self.fold(&|_| 0, &|a, b| 1 + a.max(b))
    }

    pub fn pocket_split_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 0,
            DecompositionTree::Split { left, right, .. } => left.pocket_split_count() + right.pocket_split_count(),
            DecompositionTree::PocketSplit { filled_tree, pocket_tree, .. } => {
                1 + filled_tree.pocket_split_count() + pocket_tree.pocket_split_count()
            }
        }
    }

    fn fold<R>(&self, leaf: &impl Fn(&Self) -> R, join: &impl Fn(R, R) -> R) -> R {
        match self.children() {
            None => leaf(self),
            Some([a, b]) => join(a.fold(leaf, join), b.fold(leaf, join)),
        }
    }
}

/// Which kind of node a recombination belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionKind {
    /// The parent is the union of the two children.
    Split,
    /// The parent is the first child (filled) minus the second (pocket).
    PocketSplit,
}

/// Recombines child counts across a cut whose path carries `inner` lattice
/// points besides its two endpoints.
///
/// For `p = q1 ∪ q2`: `I = I1 + I2 + S`, `B = B1 + B2 - 2S - 2`,
/// `A = A1 + A2`. For `p = filled - pocket` the same identities are solved for
/// `p`. Both preserve the Pick residual: the parent's is the sum (or
/// difference) of the children's.
pub fn pick_union_counts(
    kind: UnionKind,
    c1: &PickCounts,
    c2: &PickCounts,
    inner: &BigInt,
) -> Result<PickCounts, DecomposeError> {
    let (i, b, a) = match kind {
        UnionKind::Split => (
            c1.interior() + c2.interior() + inner,
            c1.boundary() + c2.boundary() - inner * 2 - 2,
            c1.area2() + c2.area2(),
        ),
        UnionKind::PocketSplit => (
            c1.interior() - c2.interior() - inner,
            c1.boundary() - c2.boundary() + inner * 2 + 2,
            c1.area2() - c2.area2(),
        ),
    };
    if inner.is_negative() {
        return Err(CountError { interior: i, boundary: b, area2: a }.into());
    }
    Ok(PickCounts::new(i, b, a)?)
}

fn invariant(msg: String) -> DecomposeError {
    DecomposeError::InternalInvariantViolation(msg)
}

fn polygon_of(vts: Vec<LatticePoint>, what: &str) -> Result<Polygon, DecomposeError> {
    validate_polygon(VertexList::new(vts)).map_err(|e| invariant(format!("{what}: {e}")))
}

fn split_node(parent: &Polygon, path: SplitPath) -> Result<(Polygon, Polygon, SplitPath), DecomposeError> {
    let sub = subdivide(parent.vertices(), &[path.start(), path.end()])
        .ok_or_else(|| invariant(format!("path endpoints of {parent} are not on its boundary")))?;
    let (a, b) = split_sides(&sub, path.vertices()).ok_or_else(|| invariant(format!("degenerate path in {parent}")))?;
    Ok((polygon_of(a, "first side of a split")?, polygon_of(b, "second side of a split")?, path))
}

fn decompose_triangle(tri: &Polygon) -> Result<DecompositionTree, DecomposeError> {
    if is_elementary(tri)? {
        return Ok(DecompositionTree::Leaf { triangle: tri.clone(), witness: unimodular_witness(tri)? });
    }
    let v = tri.vertices();
    match split_triangle(tri)? {
        TriangleSplit::Boundary { point, opposite, children } => {
            let path = SplitPath::trusted(vec![opposite, point]);
            let [left, right] = children;
            Ok(DecompositionTree::Split {
                parent: tri.clone(),
                path,
                left: Box::new(decompose_triangle(&left)?),
                right: Box::new(decompose_triangle(&right)?),
            })
        }
        TriangleSplit::Interior { point, children } => {
            let [c0, c1, c2] = children;
            let outer = SplitPath::new(tri, vec![v[0].clone(), point.clone(), v[2].clone()])?;
            let (quad, rest, outer) = split_node(tri, outer)?;
            let inner = SplitPath::new(&quad, vec![v[1].clone(), point])?;
            let (q0, q1, inner) = split_node(&quad, inner)?;
            if (&q0, &q1, &rest) != (&c0, &c1, &c2) {
                return Err(invariant(format!("three-way refinement of {tri} disagrees with its sides")));
            }
            let quad_tree = DecompositionTree::Split {
                parent: quad,
                path: inner,
                left: Box::new(decompose_triangle(&q0)?),
                right: Box::new(decompose_triangle(&q1)?),
            };
            Ok(DecompositionTree::Split {
                parent: tri.clone(),
                path: outer,
                left: Box::new(quad_tree),
                right: Box::new(decompose_triangle(&rest)?),
            })
        }
    }
}

/// Decomposes a polygon all the way down to elementary triangles.
pub fn decompose(poly: &Polygon) -> Result<DecompositionTree, DecomposeError> {
    if poly.len() == 3 {
        return decompose_triangle(poly);
    }
    if is_convex(poly) {
        let path = find_good_linepath_convex(poly)?;
        let (left, right, path) = split_node(poly, path)?;
        if left.len() >= poly.len() || right.len() >= poly.len() {
            return Err(invariant(format!("chord split of {poly} did not reduce the vertex count")));
        }
        return Ok(DecompositionTree::Split {
            parent: poly.clone(),
            path,
            left: Box::new(decompose(&left)?),
            right: Box::new(decompose(&right)?),
        });
    }
    let pd = find_pocket(poly)?;
    let filled_tree = decompose(&pd.filled)?;
    let pocket_tree = decompose(&pd.pocket)?;
    Ok(DecompositionTree::PocketSplit {
        parent: poly.clone(),
        pocket: pd,
        filled_tree: Box::new(filled_tree),
        pocket_tree: Box::new(pocket_tree),
    })
}
