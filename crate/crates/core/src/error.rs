use thiserror::Error;

/// Errors raised by the verification library.
///
/// Mathematical disagreements between a closed form and its brute-force
/// oracle are never errors; they are reported as data by the scan. The
/// variants here cover violated preconditions and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is not congruent to 1 mod 4")]
    NotOneModFour(u64),
    #[error("prime {0} is not congruent to 1 mod 8")]
    NotOneModEight(u64),
    #[error("modulus {0} exceeds the supported bound 2^62")]
    TooLarge(u64),
    #[error("{value} is divisible by p = {p}")]
    ZeroResidue { value: i64, p: u64 },
    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { g: u64, p: u64 },
    #[error("a primitive root is required for p = {0} (p = 1 mod 16)")]
    MissingRoot(u64),
    #[error("target sequence is not a permutation of the source: {0}")]
    NotAPermutation(String),
    #[error("residue {value} is neither 1 nor -1 modulo {p}")]
    NotASign { value: u64, p: u64 },
    #[error("{numerator} is not divisible by {denominator}")]
    NotIntegral { numerator: i64, denominator: i64 },
    #[error("n = {n} exceeds the floating-point bound {bound}")]
    FloatBound { n: u64, bound: u64 },
    #[error("inconsistent arguments: {0}")]
    InvalidArgument(String),
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
