//! Random lattice polygons by angular-sort rejection sampling.
//!
//! Each attempt draws `n` distinct lattice points from `[0, bound]^2`, orders
//! them by angle around their centroid and keeps the result if it is simple.
//! The output is star-shaped with respect to the centroid, which biases the
//! corpus but is plenty for property campaigns.

use std::collections::BTreeSet;

use lattice_pick_core::{convex_hull, validate_polygon, LatticePoint, Polygon, VertexList};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const DEFAULT_MAX_RETRIES: u32 = 1000;
pub const MAX_RETRIES_ENV: &str = "LATTICE_PICK_MAX_RETRIES";
/// Keeps centroid arithmetic comfortably inside `i128`.
pub const MAX_BOUND: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub vertex_count: usize,
    pub coord_bound: u64,
    pub seed: u64,
    pub max_retries: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("coordinate bound {0} exceeds the generator limit {MAX_BOUND}")]
    BoundTooLarge(u64),
    #[error("{0} is not a valid retry count")]
    BadRetries(String),
    #[error("no simple {vertex_count}-gon in [0, {bound}]^2 after {attempts} attempts")]
    Exhausted { vertex_count: usize, bound: u64, attempts: u32 },
}

/// Retry budget from the environment, or the default.
pub fn max_retries_from_env() -> Result<u32, GenError> {
    match std::env::var(MAX_RETRIES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| GenError::BadRetries(v)),
        Err(_) => Ok(DEFAULT_MAX_RETRIES),
    }
}

fn check(cfg: &GeneratorConfig) -> Result<(), GenError> {
    if cfg.vertex_count < 3 {
        return Err(GenError::TooFewVertices(cfg.vertex_count));
    }
    if cfg.coord_bound > MAX_BOUND {
        return Err(GenError::BoundTooLarge(cfg.coord_bound));
    }
    Ok(())
}

/// Whether `n` distinct points fit in the box at all.
fn room_for(n: usize, bound: u64) -> bool {
    let side = bound as u128 + 1;
    side * side >= n as u128
}

fn draw(rng: &mut ChaCha8Rng, n: usize, bound: u64) -> Vec<(i128, i128)> {
    let mut seen = BTreeSet::new();
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.random_range(0..=bound) as i128, rng.random_range(0..=bound) as i128);
        if seen.insert(p) {
            pts.push(p);
        }
    }
    pts
}

/// Sorts by exact angle around the centroid, ties by distance.
fn angular_sort(pts: &mut [(i128, i128)]) {
    let n = pts.len() as i128;
    let (sx, sy) = pts.iter().fold((0, 0), |(a, b), p| (a + p.0, b + p.1));
    let rel = |p: &(i128, i128)| (p.0 * n - sx, p.1 * n - sy);
    let upper = |v: (i128, i128)| v.1 > 0 || (v.1 == 0 && v.0 > 0);
    pts.sort_by(|a, b| {
        let (u, v) = (rel(a), rel(b));
        upper(v)
            .cmp(&upper(u))
            .then_with(|| 0.cmp(&(u.0 * v.1 - u.1 * v.0)))
            .then_with(|| (u.0 * u.0 + u.1 * u.1).cmp(&(v.0 * v.0 + v.1 * v.1)))
    });
}

fn to_polygon(pts: &[(i128, i128)]) -> Option<Polygon> {
    let vts = pts.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
    validate_polygon(VertexList::new(vts)).ok()
}

/// A simple polygon with exactly `vertex_count` vertices; identical configs
/// give identical polygons.
pub fn generate(cfg: &GeneratorConfig) -> Result<Polygon, GenError> {
    check(cfg)?;
    let exhausted = |attempts| GenError::Exhausted { vertex_count: cfg.vertex_count, bound: cfg.coord_bound, attempts };
    if !room_for(cfg.vertex_count, cfg.coord_bound) {
        return Err(exhausted(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.max_retries {
        let mut pts = draw(&mut rng, cfg.vertex_count, cfg.coord_bound);
        angular_sort(&mut pts);
        if let Some(p) = to_polygon(&pts) {
            return Ok(p);
        }
    }
    Err(exhausted(cfg.max_retries))
}

/// The convex hull of `vertex_count` random points, as a polygon on its
/// corners. With `edge_points`, the first lattice point inside each hull edge
/// (if any) is inserted as an extra collinear vertex.
pub fn generate_convex(cfg: &GeneratorConfig, edge_points: bool) -> Result<Polygon, GenError> {
    check(cfg)?;
    let exhausted = |attempts| GenError::Exhausted { vertex_count: cfg.vertex_count, bound: cfg.coord_bound, attempts };
    if !room_for(cfg.vertex_count, cfg.coord_bound) {
        return Err(exhausted(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.max_retries {
        let pts: Vec<LatticePoint> = draw(&mut rng, cfg.vertex_count, cfg.coord_bound)
            .into_iter()
            .map(|(x, y)| LatticePoint::new(x, y))
            .collect();
        let Ok(hull) = convex_hull(&pts) else { continue };
        let vts = if edge_points { with_edge_points(&hull) } else { hull };
        if let Ok(p) = validate_polygon(VertexList::new(vts)) {
            return Ok(p);
        }
    }
    Err(exhausted(cfg.max_retries))
}

fn with_edge_points(hull: &[LatticePoint]) -> Vec<LatticePoint> {
    let n = hull.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (a, b) = (&hull[i], &hull[(i + 1) % n]);
        out.push(a.clone());
        let g = lattice_pick_core::gcd_width(a, b);
        if g > 1.into() {
            out.push(LatticePoint::new(&a.x + (&b.x - &a.x) / &g, &a.y + (&b.y - &a.y) / &g));
        }
    }
    out
}
