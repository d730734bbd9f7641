//! Exact-arithmetic toolkit for polymatroids on small ground sets: validated
//! rank tables, lattice-point polytopes, multisymmetric lifts, weighted fans,
//! intersection degrees, and rational-matrix realizations. Everything is
//! integer or rational arithmetic; there is no floating point in the crate.

pub mod acceptance;
pub mod chow;
pub mod error;
pub mod fans;
pub mod ground;
pub mod instances;
pub mod lift;
pub mod linalg;
pub mod polymatroid;
pub mod polytopes;
pub mod rado;
pub mod realization;
pub mod subset;

pub use error::{CoreError, ValidationError};
pub use ground::GroundData;
pub use lift::GroundMap;
pub use polymatroid::Polymatroid;
pub use rado::SetSequence;
pub use subset::Subset;
