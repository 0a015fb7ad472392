//! Closed orientable surfaces as polygon gluing words, simple closed curves as
//! transverse chord diagrams, and the machinery to build and certify complete
//! 1-systems: curve collections that pairwise intersect exactly once.

pub mod arrangement;
pub mod complex;
pub mod construct;
pub mod curve;
pub mod error;
pub mod form;
pub mod format;
pub mod linalg;
pub mod reduce;
pub mod report;
pub mod search;
pub mod stabilize;
pub mod systems;
pub mod torus;

pub use arrangement::{union_map, CurveMap, Region};
pub use complex::{EdgeToken, Face, OneRelatorPresentation, PolygonComplex, SurfaceInfo};
pub use curve::{ChordArc, ChordCurve, Diagnostics, Passage};
pub use error::{Error, Result};

/// Exact position along a side, strictly between 0 and 1 for passages.
pub type Param = num_rational::Ratio<i64>;
