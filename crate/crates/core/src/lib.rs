//! Exact computations in the Homfly skein of the rectangle (the Hecke algebra
//! `H_n`) and of the annulus.
//!
//! The crate builds the row/column symmetrizer idempotents `E_λ` of `H_n`,
//! evaluates braid closures with the Markov trace, applies the meridian map
//! and expands closures in the basis `Q_λ` of the annulus skein. Everything
//! is exact over `Q(v, s)`.

pub mod annulus;
pub mod braids;
pub mod cprime;
pub mod hecke;
pub mod partitions;
pub mod scalars;
pub mod trace;
pub mod verify;

pub use braids::{parse_braid, BraidError, BraidWord, Permutation};
pub use hecke::{HeckeElement, HeckeError};
pub use partitions::{Partition, PartitionError, StandardTableau, SymFunction};
pub use scalars::{delta, qint, LaurentPoly, RationalFunction, ScalarError};
