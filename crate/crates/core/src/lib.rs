//! Shifted simplicial complexes, threshold graphs and the complexes built from a graph.
//!
//! Faces are stored as bitmasks over vertices `1..=n` (bit `v - 1` for vertex `v`), so every
//! object here is limited to [`MAX_VERTICES`] vertices. The algorithms are exponential by nature
//! and are meant for small, exhaustively checkable inputs.
//!
//! Modules:
//!
//! * [`face`], [`complex`], [`graph`], [`io`]: the basic objects and their text formats.
//! * [`shifted`]: labelings, shiftedness checks, the padded componentwise order and `star_d`.
//! * [`ds`]: construction strings over `D`, `S` and `|`.
//! * [`threshold`]: recognition by elimination, creation sequences and weight certificates.
//! * [`graphical`]: independence, dominance and neighborhood complexes, flag/balanced/pencil.
//! * [`enumerate`], [`verify`]: exhaustive enumeration and the verification harness.

pub mod complex;
pub mod ds;
pub mod enumerate;
mod error;
pub mod face;
pub mod graph;
pub mod graphical;
pub mod io;
pub mod shifted;
pub mod threshold;
pub mod verify;

pub use complex::{FVector, SimplicialComplex};
pub use ds::{DsString, DsToken};
pub use error::{Error, Result};
pub use face::{Face, Vertex};
pub use graph::Graph;
pub use shifted::VertexLabeling;
pub use threshold::{CreationSequence, Step, ThresholdCertificate};

/// Largest vertex count any object can carry.
pub const MAX_VERTICES: usize = 32;

/// Bound for operations that enumerate every face or every subset of the ground set.
pub const ENUMERATION_LIMIT: usize = 25;
