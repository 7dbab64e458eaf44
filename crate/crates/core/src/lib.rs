//! Exact lattice-polygon kernel.
//!
//! Computes Pick counts for simple lattice polygons and builds checkable
//! decomposition certificates: triangles are refined down to elementary
//! triangles, convex polygons are split along interior chords, and non-convex
//! polygons are reduced by filling a pocket of their convex hull.

mod kernel;

pub mod certificate;
pub mod decompose;
pub mod exact;
pub mod lattice;
pub mod polygon;

pub use exact::{
    gcd_width, orientation, point_on_segment, segment_intersection, LatticePoint, Orientation, PointOnSegment,
    RationalPoint, Segment, SegmentIntersection,
};
pub use lattice::{
    area2, boundary_count, convex_interior_count, interior_count, pick_area2, verify_pick, PickCounts, PickReport,
};
pub use polygon::{
    classify_point, convex_hull, extreme_point_count, is_convex, is_simple, rotate_vertices, validate_polygon, EdgeId,
    PointLocation, Polygon, PolygonError, VertexList,
};
