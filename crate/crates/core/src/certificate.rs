//! Decomposition certificates and their checker.
//!
//! A [`Certificate`] is plain data: every node carries its own vertex list and
//! the producer's choices (paths, rotations, witnesses), but no counts. The
//! checker validates each node against its children from scratch, counts the
//! leaves directly and recombines upward, so a certificate is only as
//! trustworthy as the checks below, never as its producer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::{
    chord_touches_boundary, is_good_path, path_inner_lattice_count, pick_union_counts, split_sides, subdivide,
    DecompositionTree, UnimodularWitness, UnionKind,
};
use crate::exact::LatticePoint;
use crate::lattice::{area2, boundary_count, convex_interior_count, pick_area2, PickCounts};
use crate::polygon::{hull_interior_flags, signed_area2, validate_polygon, Polygon, VertexList};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub format_version: String,
    pub polygon: Vec<LatticePoint>,
    pub tree: CertNode,
}

/// One node of a certificate. Nothing here is trusted: vertex lists need not
/// be polygons and `children` may have any length until checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertNode {
    Leaf {
        polygon: Vec<LatticePoint>,
        witness: UnimodularWitness,
    },
    Split {
        polygon: Vec<LatticePoint>,
        path: Vec<LatticePoint>,
        children: Vec<CertNode>,
    },
    /// Children are `[filled, pocket]`; `path` is the pocket path.
    Pocket {
        polygon: Vec<LatticePoint>,
        rotation: u64,
        path: Vec<LatticePoint>,
        children: Vec<CertNode>,
    },
}

impl CertNode {
    pub fn polygon(&self) -> &[LatticePoint] {
        match self {
            CertNode::Leaf { polygon, .. } | CertNode::Split { polygon, .. } | CertNode::Pocket { polygon, .. } => {
                polygon
            }
        }
    }

    pub fn children(&self) -> &[CertNode] {
        match self {
            CertNode::Leaf { .. } => &[],
            CertNode::Split { children, .. } | CertNode::Pocket { children, .. } => children,
        }
    }

    pub fn children_mut(&mut self) -> Option<&mut Vec<CertNode>> {
        match self {
            CertNode::Leaf { .. } => None,
            CertNode::Split { children, .. } | CertNode::Pocket { children, .. } => Some(children),
        }
    }

    fn from_tree(tree: &DecompositionTree) -> Self {
        let polygon = tree.polygon().vertices().to_vec();
        match tree {
            DecompositionTree::Leaf { witness, .. } => CertNode::Leaf { polygon, witness: witness.clone() },
            DecompositionTree::Split { path, left, right, .. } => CertNode::Split {
                polygon,
                path: path.vertices().to_vec(),
                children: vec![CertNode::from_tree(left), CertNode::from_tree(right)],
            },
            DecompositionTree::PocketSplit { pocket, filled_tree, pocket_tree, .. } => CertNode::Pocket {
                polygon,
                rotation: pocket.rotation as u64,
                path: pocket.pocket_path.clone(),
                children: vec![CertNode::from_tree(filled_tree), CertNode::from_tree(pocket_tree)],
            },
        }
    }
}

impl Certificate {
    pub fn from_tree(tree: &DecompositionTree) -> Self {
        Certificate {
            format_version: FORMAT_VERSION.to_string(),
            polygon: tree.polygon().vertices().to_vec(),
            tree: CertNode::from_tree(tree),
        }
    }

    /// Node at `path`, if it exists.
    pub fn node(&self, path: &TreePath) -> Option<&CertNode> {
        path.0.iter().try_fold(&self.tree, |n, &i| n.children().get(i as usize))
    }

    pub fn node_mut(&mut self, path: &TreePath) -> Option<&mut CertNode> {
        let mut n = &mut self.tree;
        for &i in &path.0 {
            n = n.children_mut()?.get_mut(i as usize)?;
        }
        Some(n)
    }

    /// Every node path in preorder.
    pub fn node_paths(&self) -> Vec<TreePath> {
        let mut out = Vec::new();
        let mut stack = vec![(TreePath::root(), &self.tree)];
        while let Some((p, n)) = stack.pop() {
            for (i, c) in n.children().iter().enumerate().rev() {
                stack.push((p.child(i), c));
            }
            out.push(p);
        }
        out
    }
}

/// Child indices from the root, displayed as `root/0/1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TreePath(pub Vec<u32>);

impl TreePath {
    pub fn root() -> Self {
        TreePath(Vec::new())
    }

    pub fn child(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i as u32);
        TreePath(v)
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, "/{i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    RootPolygon,
    Polygon,
    Arity,
    LeafShape,
    WitnessDeterminant,
    WitnessImage,
    SplitPath,
    SplitSides,
    PocketRotation,
    PocketPath,
    PocketFrontier,
    FillingChord,
    PocketChildren,
    PocketInside,
    Counts,
    Area,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::RootPolygon => "root-polygon",
            Rule::Polygon => "polygon",
            Rule::Arity => "arity",
            Rule::LeafShape => "leaf-shape",
            Rule::WitnessDeterminant => "witness-det",
            Rule::WitnessImage => "witness-image",
            Rule::SplitPath => "split-path",
            Rule::SplitSides => "split-sides",
            Rule::PocketRotation => "pocket-rotation",
            Rule::PocketPath => "pocket-path",
            Rule::PocketFrontier => "pocket-frontier",
            Rule::FillingChord => "filling-chord",
            Rule::PocketChildren => "pocket-children",
            Rule::PocketInside => "pocket-inside",
            Rule::Counts => "counts",
            Rule::Area => "area",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: TreePath,
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.path, self.rule, self.message)
    }
}

/// Outcome of [`check_certificate`]. `root_counts` and `residual` are only
/// available when every node checked out, since counts recombined across a
/// broken node mean nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub root_counts: Option<PickCounts>,
    pub residual: Option<BigInt>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.valid { "valid" } else { "invalid" })?;
        if let Some(c) = &self.root_counts {
            writeln!(f, "root: {c}")?;
        }
        if let Some(r) = &self.residual {
            writeln!(f, "residual: {r}")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MalformedCertificate {
    #[error("malformed certificate at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unsupported certificate format_version {0:?} (this checker reads version \"1\")")]
    Version(String),
    #[error("malformed certificate at {path}: {message}")]
    Structure { path: TreePath, message: String },
}

struct Checker {
    violations: Vec<Violation>,
}

impl Checker {
    fn flag(&mut self, path: &TreePath, rule: Rule, message: impl Into<String>) {
        self.violations.push(Violation { path: path.clone(), rule, message: message.into() });
    }

    /// Checks `node` and its subtree; returns the recombined counts when the
    /// whole subtree is sound.
    fn node(&mut self, node: &CertNode, at: &TreePath) -> Option<PickCounts> {
        let before = self.violations.len();
        let child_counts: Vec<Option<PickCounts>> =
            node.children().iter().enumerate().map(|(i, c)| self.node(c, &at.child(i))).collect();

        let poly = match validate_polygon(VertexList::new(node.polygon().to_vec())) {
            Ok(p) => Some(p),
            Err(e) => {
                self.flag(at, Rule::Polygon, e.to_string());
                None
            }
        };
        let counts = match (node, poly) {
            (CertNode::Leaf { witness, .. }, Some(p)) => self.leaf(&p, witness, at),
            (CertNode::Split { path, children, .. }, Some(p)) => self.split(&p, path, children, &child_counts, at),
            (CertNode::Pocket { rotation, path, children, .. }, Some(p)) => {
                self.pocket(&p, *rotation, path, children, &child_counts, at)
            }
            (_, None) => None,
        };
        if self.violations.len() != before {
            return None;
        }
        counts
    }

    fn leaf(&mut self, p: &Polygon, w: &UnimodularWitness, at: &TreePath) -> Option<PickCounts> {
        if p.len() != 3 {
            self.flag(at, Rule::LeafShape, format!("a leaf needs 3 vertices, got {}", p.len()));
            return None;
        }
        let det = w.det();
        if !det.abs().is_one() {
            self.flag(at, Rule::WitnessDeterminant, format!("|det| = {} instead of 1", det.abs()));
        }
        let image = w.unit_triangle_image();
        if image[..] != *p.vertices() {
            self.flag(
                at,
                Rule::WitnessImage,
                format!("witness maps the unit triangle to [{}, {}, {}], not {p}", image[0], image[1], image[2]),
            );
        }
        let i = convex_interior_count(p).expect("triangles are convex");
        self.counts(at, PickCounts::new(i, boundary_count(p), area2(p)))
    }

    fn counts<E: fmt::Display>(&mut self, at: &TreePath, c: Result<PickCounts, E>) -> Option<PickCounts> {
        c.map_err(|e| self.flag(at, Rule::Counts, e.to_string())).ok()
    }

    fn arity(&mut self, children: &[CertNode], at: &TreePath) -> bool {
        if children.len() != 2 {
            self.flag(at, Rule::Arity, format!("expected 2 children, got {}", children.len()));
            return false;
        }
        true
    }

    fn split(
        &mut self,
        p: &Polygon,
        path: &[LatticePoint],
        children: &[CertNode],
        child_counts: &[Option<PickCounts>],
        at: &TreePath,
    ) -> Option<PickCounts> {
        let arity_ok = self.arity(children, at);
        if path.len() < 2 {
            self.flag(at, Rule::SplitPath, format!("a path needs at least 2 vertices, got {}", path.len()));
            return None;
        }
        let ends = [&path[0], &path[path.len() - 1]];
        let Some(sub) = subdivide(p.vertices(), &ends) else {
            self.flag(at, Rule::SplitPath, "path endpoints are not on the polygon boundary");
            return None;
        };
        let sub = validate_polygon(VertexList::new(sub)).expect("subdividing an edge keeps a polygon valid");
        if !is_good_path(&sub, path).unwrap_or(false) {
            self.flag(at, Rule::SplitPath, "path is not a good path of the polygon");
            return None;
        }
        let (a, b) = split_sides(sub.vertices(), path)?;
        if !arity_ok {
            return None;
        }
        if children[0].polygon() != a || children[1].polygon() != b {
            self.flag(at, Rule::SplitSides, "children are not the two sides of the path");
            return None;
        }
        let [Some(c0), Some(c1)] = child_counts else { return None };
        let s = path_inner_lattice_count(path);
        let c = self.counts(at, pick_union_counts(UnionKind::Split, c0, c1, &s))?;
        self.area(p, c, at)
    }

    fn pocket(
        &mut self,
        p: &Polygon,
        rotation: u64,
        path: &[LatticePoint],
        children: &[CertNode],
        child_counts: &[Option<PickCounts>],
        at: &TreePath,
    ) -> Option<PickCounts> {
        let arity_ok = self.arity(children, at);
        let n = p.len();
        let Some(rot) = usize::try_from(rotation).ok().filter(|&r| r < n) else {
            self.flag(at, Rule::PocketRotation, format!("rotation {rotation} out of range for {n} vertices"));
            return None;
        };
        let rotated = p.rotated(rot);
        let r = rotated.vertices();
        if path.len() < 3 || path.len() > n - 1 || path[..] != r[..path.len()] {
            self.flag(at, Rule::PocketPath, "pocket path is not a prefix of the rotated vertex list");
            return None;
        }
        let flags = hull_interior_flags(p);
        let k = path.len() - 1;
        let frontier_ends = !flags[rot] && !flags[(rot + k) % n];
        let interior_run = (1..k).all(|j| flags[(rot + j) % n]);
        if !frontier_ends || !interior_run {
            self.flag(
                at,
                Rule::PocketFrontier,
                "pocket path must run between hull-frontier vertices through hull-interior ones",
            );
            return None;
        }
        let (a, b) = (&path[0], &path[k]);
        if chord_touches_boundary(p.vertices(), b, a) {
            self.flag(at, Rule::FillingChord, format!("filling chord {b}-{a} meets the polygon elsewhere"));
            return None;
        }
        let mut filled = vec![a.clone()];
        filled.extend_from_slice(&r[k..]);
        if !arity_ok {
            return None;
        }
        if children[0].polygon() != filled || children[1].polygon() != path {
            self.flag(at, Rule::PocketChildren, "children are not the filled polygon and the pocket");
            return None;
        }
        let filled = validate_polygon(VertexList::new(filled)).ok()?;
        if !is_good_path(&filled, path).unwrap_or(false) {
            self.flag(at, Rule::PocketInside, "pocket path does not run inside the filled polygon");
            return None;
        }
        let [Some(c0), Some(c1)] = child_counts else { return None };
        let s = path_inner_lattice_count(path);
        let c = self.counts(at, pick_union_counts(UnionKind::PocketSplit, c0, c1, &s))?;
        self.area(p, c, at)
    }

    fn area(&mut self, p: &Polygon, c: PickCounts, at: &TreePath) -> Option<PickCounts> {
        let direct = area2(p);
        if *c.area2() != direct {
            self.flag(at, Rule::Area, format!("recombined area2 {} but the shoelace gives {direct}", c.area2()));
            return None;
        }
        Some(c)
    }
}

/// Re-verifies every node of `cert` and recombines counts up to the root.
///
/// All violations are collected, sorted by tree path. The report is valid
/// iff there are none and the root residual `area2 - (2I + B - 2)` is zero.
pub fn check_certificate(cert: &Certificate) -> Result<CheckReport, MalformedCertificate> {
    if cert.format_version != FORMAT_VERSION {
        return Err(MalformedCertificate::Version(cert.format_version.clone()));
    }
    let mut ck = Checker { violations: Vec::new() };
    let root = TreePath::root();
    if cert.tree.polygon() != cert.polygon {
        ck.flag(&root, Rule::RootPolygon, "tree root does not carry the certified polygon");
    }
    let counts = ck.node(&cert.tree, &root);
    let residual = counts.as_ref().map(|c| signed_area2(&cert.polygon).abs() - pick_area2(c.interior(), c.boundary()));
    ck.violations.sort_by(|a, b| a.path.cmp(&b.path));
    let valid = ck.violations.is_empty() && residual.as_ref().is_some_and(|r| r.sign() == num_bigint::Sign::NoSign);
    let root_counts = if ck.violations.is_empty() { counts } else { None };
    Ok(CheckReport { valid, violations: ck.violations, root_counts, residual })
}

// Wire format. Integers travel as decimal strings.

type WirePoint = [String; 2];

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireCertificate {
    format_version: String,
    polygon: Vec<WirePoint>,
    tree: WireNode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireNode {
    kind: String,
    polygon: Vec<WirePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<WireWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    path: Option<Vec<WirePoint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    children: Option<Vec<WireNode>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireWitness {
    m: [[String; 2]; 2],
    t: WirePoint,
}

fn wire_point(p: &LatticePoint) -> WirePoint {
    [p.x.to_string(), p.y.to_string()]
}

fn wire_points(ps: &[LatticePoint]) -> Vec<WirePoint> {
    ps.iter().map(wire_point).collect()
}

fn to_wire(node: &CertNode) -> WireNode {
    let blank = |kind: &str, polygon: &[LatticePoint]| WireNode {
        kind: kind.to_string(),
        polygon: wire_points(polygon),
        witness: None,
        rotation: None,
        path: None,
        children: None,
    };
    match node {
        CertNode::Leaf { polygon, witness } => WireNode {
            witness: Some(WireWitness {
                m: witness.m.clone().map(|row| row.map(|v| v.to_string())),
                t: wire_point(&witness.translation),
            }),
            ..blank("leaf", polygon)
        },
        CertNode::Split { polygon, path, children } => WireNode {
            path: Some(wire_points(path)),
            children: Some(children.iter().map(to_wire).collect()),
            ..blank("split", polygon)
        },
        CertNode::Pocket { polygon, rotation, path, children } => WireNode {
            rotation: Some(*rotation),
            path: Some(wire_points(path)),
            children: Some(children.iter().map(to_wire).collect()),
            ..blank("pocket", polygon)
        },
    }
}

/// Canonical decimal: optional minus, no leading zeros, no `-0`.
fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && !(s.starts_with('-') && digits == "0");
    canonical.then(|| BigInt::from_str(s).expect("checked decimal"))
}

fn from_wire_point(p: &WirePoint, at: &TreePath) -> Result<LatticePoint, MalformedCertificate> {
    match (parse_int(&p[0]), parse_int(&p[1])) {
        (Some(x), Some(y)) => Ok(LatticePoint::new(x, y)),
        _ => Err(structure(at, format!("coordinates [{:?}, {:?}] are not canonical decimal integers", p[0], p[1]))),
    }
}

fn from_wire_points(ps: &[WirePoint], at: &TreePath) -> Result<Vec<LatticePoint>, MalformedCertificate> {
    ps.iter().map(|p| from_wire_point(p, at)).collect()
}

fn structure(at: &TreePath, message: impl Into<String>) -> MalformedCertificate {
    MalformedCertificate::Structure { path: at.clone(), message: message.into() }
}

fn from_wire(w: WireNode, at: &TreePath) -> Result<CertNode, MalformedCertificate> {
    let polygon = from_wire_points(&w.polygon, at)?;
    let allowed: &[&str] = match w.kind.as_str() {
        "leaf" => &["witness"],
        "split" => &["path", "children"],
        "pocket" => &["rotation", "path", "children"],
        other => return Err(structure(at, format!("unknown node kind {other:?}"))),
    };
    let present = [
        ("witness", w.witness.is_some()),
        ("rotation", w.rotation.is_some()),
        ("path", w.path.is_some()),
        ("children", w.children.is_some()),
    ];
    for (field, is_present) in present {
        if is_present != allowed.contains(&field) {
            let verb = if is_present { "must not have" } else { "is missing" };
            return Err(structure(at, format!("{} node {verb} field {field:?}", w.kind)));
        }
    }
    let children = |cs: Vec<WireNode>| -> Result<Vec<CertNode>, MalformedCertificate> {
        cs.into_iter().enumerate().map(|(i, c)| from_wire(c, &at.child(i))).collect()
    };
    Ok(match w.kind.as_str() {
        "leaf" => {
            let wit = w.witness.expect("checked above");
            let mut m: [[BigInt; 2]; 2] = Default::default();
            for (r, row) in wit.m.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    m[r][c] =
                        parse_int(v).ok_or_else(|| structure(at, format!("witness entry {v:?} is not an integer")))?;
                }
            }
            let translation = from_wire_point(&wit.t, at)?;
            CertNode::Leaf { polygon, witness: UnimodularWitness { m, translation } }
        }
        "split" => CertNode::Split {
            polygon,
            path: from_wire_points(&w.path.expect("checked above"), at)?,
            children: children(w.children.expect("checked above"))?,
        },
        _ => CertNode::Pocket {
            polygon,
            rotation: w.rotation.expect("checked above"),
            path: from_wire_points(&w.path.expect("checked above"), at)?,
            children: children(w.children.expect("checked above"))?,
        },
    })
}

/// Canonical compact JSON.
pub fn serialize(cert: &Certificate) -> Vec<u8> {
    let wire = WireCertificate {
        format_version: cert.format_version.clone(),
        polygon: wire_points(&cert.polygon),
        tree: to_wire(&cert.tree),
    };
    serde_json::to_vec(&wire).expect("certificate serialization cannot fail")
}

pub fn deserialize(bytes: &[u8]) -> Result<Certificate, MalformedCertificate> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    // Decomposition trees of large polygons nest far deeper than serde_json's
    // default limit; grow the stack on demand instead.
    de.disable_recursion_limit();
    let de = serde_stacker::Deserializer::new(&mut de);
    let wire = WireCertificate::deserialize(de).map_err(|e| MalformedCertificate::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if wire.format_version != FORMAT_VERSION {
        return Err(MalformedCertificate::Version(wire.format_version));
    }
    let root = TreePath::root();
    Ok(Certificate {
        format_version: wire.format_version,
        polygon: from_wire_points(&wire.polygon, &root)?,
        tree: from_wire(wire.tree, &root)?,
    })
}
