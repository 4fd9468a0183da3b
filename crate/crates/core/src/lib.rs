//! Diffusion chip-firing on simple graphs, with perturbation from the
//! 0-configuration.
//!
//! - [`graph`]: graphs, vertex subsets, generators and domination predicates.
//! - [`engine`]: the firing rule, period detection and orientations.
//! - [`quiescence`]: perturbation, CCD, 0-invoking and 0₂-invoking tests.
//! - [`enumeration`]: exhaustive counts and searches.
//! - [`paths`]: closed forms for paths.

pub mod engine;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod paths;
pub mod quiescence;
pub mod subsets;

pub use engine::{Configuration, EdgeOrientation, Orientation, PeriodReport};
pub use error::{EngineError, GraphError, PathError, SearchError};
pub use graph::{GeneratorSpec, Graph, VertexSet};
