//! Exact Eisenstein-integer arithmetic, multiplicative characters with Gauss
//! and Jacobi sums, cubic and quadratic residue symbols, and the
//! representation theorems deciding when 2 is a cube modulo a prime.

pub mod arith;
pub mod characters;
pub mod eisenstein;
pub mod error;
pub mod representations;
pub mod solvability;
pub mod symbols;
pub mod unity;
pub mod verify;

pub use eisenstein::{classify_rational_prime, EisensteinInt, Norm, PrimeClass};
pub use error::{Error, Result};
pub use unity::CubicValue;
