//! Exact-arithmetic toolkit for two families of characters of the complex
//! reflection group `G(d,1,n)`:
//!
//! * cellular characters of the commutative Jucys-Murphy subalgebra
//!   ([`jm`]), together with closed forms of the Calogero-Moser cellular
//!   characters of `G(d,1,2)` ([`gd12`]);
//! * constructible characters read off the canonical basis of a level-`d`
//!   Fock space of `U_q(sl_∞)` ([`fock`]).
//!
//! [`conjecture`] translates between the two parameter spaces and compares
//! the resulting character sets.
//!
//! Everything is exact: rationals and integers are arbitrary precision, no
//! floating point is used anywhere.

pub mod combinatorics;
pub mod conjecture;
pub mod cyclotomic;
pub mod error;
pub mod fock;
pub mod gd12;
pub mod jm;
pub mod qlaurent;
pub mod symbol;

pub use combinatorics::{BoxCoord, CharacterSum, DPartition, Partition, StandardTableau};
pub use conjecture::{check_conjecture, ConjectureInput, ConjectureVerdict, VerdictMode};
pub use error::{Error, Result};
pub use fock::{CanonicalBasis, FockVector};
pub use jm::{CMParams, CellDecomposition};
pub use qlaurent::{LaurentPoly, Rational};
pub use symbol::{ChargeVector, Symbol};
