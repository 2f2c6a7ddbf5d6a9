//! Combinatorial decision procedures for steady and splitting non-commutative
//! crepant resolutions of toric and abelian quotient singularities.

pub mod abgroup;
pub mod dimer;
pub mod error;
pub mod intlat;
pub mod nccr;
pub mod polygon;
mod polyhedral;
pub mod toric;

use num_bigint::BigInt;

pub use abgroup::{FinAbGroup, GroupElement};
pub use error::{ConeError, DecisionError, DimerError, GroupError, LatticeError};
pub use dimer::{DimerModel, DimerReport};
pub use nccr::{ClassSet, DecisionReport};
pub use polygon::LatticePolygon;
pub use toric::{ClassGroup, ConeData, QuotientPresentation};

/// Arbitrary-precision integer matrix.
pub type IntMatrix = intlat::Matrix<BigInt>;
/// Smith decomposition of an [`IntMatrix`].
pub type SmithDecomposition = intlat::Smith<BigInt>;
