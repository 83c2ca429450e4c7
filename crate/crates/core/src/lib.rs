//! Categorification obstructions for fusion rings.
//!
//! * [`ring`] and [`catalog`]: fusion rings, their axioms and FP dimensions.
//! * [`chartab`]: character tables and the lifting predicates built on them.
//! * [`spectra`]: the zero and one spectrum criteria as exhaustive searches.
//! * [`localizer`]: localization systems `E_k`, the linking equation and the
//!   two-subsystem Groebner pipeline.
//! * [`tpe`]: triangular prism equations over tetrahedron variables.
//! * [`shell`]: the `prism` command line.

pub mod catalog;
pub mod chartab;
pub mod error;
pub mod expr;
pub mod localizer;
pub mod report;
pub mod ring;
pub mod shell;
pub mod spectra;
pub mod tpe;

pub use catalog::catalog;
pub use error::PrismError;
pub use ring::{AxiomReport, FpData, FusionRing};
