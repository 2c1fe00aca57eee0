//! Exact-arithmetic polygon transformations: pops, popturns, pocket flips
//! and flipturns, the alternating polygon family `A(x, y, sigma)`, and
//! search tools for pop convexification.
//!
//! All coordinates are exact rationals. Vertex indices are 0-based.

pub mod alternating;
pub mod error;
pub mod exec;
pub mod numeric;
pub mod polygon;
pub mod random;
pub mod search;
pub mod transforms;

pub use alternating::{canonical_example, recover_spec, AlternatingSpec, CanonicalKind, Membership, Sign, SignVector};
pub use error::{GeometryError, PolygonError, SpecError};
pub use exec::Execution;
pub use numeric::{
    orientation, reflect_across_line, reflect_across_point, segments_intersect, IntersectionMode, Orientation,
    Point, Rational, Segment,
};
pub use polygon::{ClassificationReport, Polygon, ScaleneFlags};
pub use search::{
    canonical_key, exhaustive_family_search, exhaustive_family_search_with, search_pop_convexification,
    FamilyReport, SearchConfig, SearchOutcome, SearchStatus,
};
pub use transforms::{
    convexify_by_flips, convexify_by_flips_observed, find_pockets, pocket_flip, pocket_flipturn, pop, popturn,
    ConvexifyOutcome, FlipMode, Pocket, PocketStrategy, PopSequence, DEFAULT_FLIP_CAP,
};
