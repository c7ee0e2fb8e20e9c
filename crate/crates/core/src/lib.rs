//! Triangular fully packed loop configurations (TFPLs), Wieland drift and
//! exhaustive enumeration, with checks of the counting identities for
//! boundaries of excess at most two.

pub mod drift;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod phi;
pub mod render;
pub mod tfpl;
pub mod verify;
pub mod words;

pub use drift::{wieland_left, wieland_right, Direction};
pub use enumerate::{count_tables, enumerate_tfpls, CountTable};
pub use error::{DriftError, TableError, TfplError, Violation, WordError};
pub use grid::{Edge, Grid, Vertex};
pub use phi::{phi, psi, PhiCase, PhiTriple};
pub use tfpl::{BoundaryTriple, Tfpl};
pub use verify::VerificationReport;
pub use words::Word;
