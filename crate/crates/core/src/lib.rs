//! Verification library for biquadratic residues modulo primes `p = 1 (mod 8)`.
//!
//! Every closed form here (Jacobsthal sums, pair counts over quadratic and
//! quartic residues, the sign of the permutations that reorder the quartic
//! residues) is paired with a brute-force evaluation, and the [`scan`] module
//! runs those comparisons over ranges of primes.

pub mod arith;
pub mod counts;
pub mod cyclo;
pub mod error;
mod identity;
pub mod jacobsthal;
pub mod perm;
pub mod scan;

pub use arith::{PrimeContext, QuarticClass};
pub use error::{Error, Result};
pub use identity::Identity;
