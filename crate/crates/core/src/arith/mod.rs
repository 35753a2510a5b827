//! Modular arithmetic core: residues, residue symbols, the decomposition
//! `p = a^2 + 4 b^2`, primitive roots and prime enumeration.

mod context;
mod decompose;
mod modulus;
mod primes;

pub use context::{legendre, quartic_class, quartic_symbol, PrimeContext, QuarticClass, TABLE_LIMIT};
pub use decompose::{decompose, decompose_cornacchia};
pub use modulus::{mod_pow, Modulus, Residue, MAX_MODULUS};
pub use primes::{
    divisors, euler_phi, factor, is_primitive_root, is_prime, mobius, primes_in_range,
    primitive_roots, small_primes, smallest_primitive_root, Congruence,
};
