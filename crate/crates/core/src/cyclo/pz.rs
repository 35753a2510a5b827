use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which [`p_eval_numeric`] runs.
pub const NUMERIC_BOUND: u64 = 64;

/// A fourth root of unity in `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Phase {
    /// `i^e`.
    pub fn from_power(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Phase::One,
            1 => Phase::I,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn power(self) -> i64 {
        match self {
            Phase::One => 0,
            Phase::I => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Phase::One | Phase::MinusOne)
    }

    pub fn square(self) -> Phase {
        Phase::from_power(2 * self.power())
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            Phase::One => Complex64::new(1.0, 0.0),
            Phase::I => Complex64::new(0.0, 1.0),
            Phase::MinusOne => Complex64::new(-1.0, 0.0),
            Phase::MinusI => Complex64::new(0.0, -1.0),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::One => "1",
            Phase::I => "i",
            Phase::MinusOne => "-1",
            Phase::MinusI => "-i",
        })
    }
}

/// `P(zeta) = prod_{1<=i<j<=n} (zeta^(kj) - zeta^(ki))` with `zeta^k` a
/// primitive `n`-th root of unity, as `phase * n^(n/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormPz {
    pub n: u64,
    /// `n^n`, the squared magnitude.
    pub magnitude_sq: BigUint,
    /// `n^(n/2)` for even `n`.
    pub magnitude: Option<BigUint>,
    pub phase: Phase,
    /// The exponent `e` in the `(-1)^e` factor of the matching case.
    pub sign_exponent: i64,
}

impl ClosedFormPz {
    /// `P(zeta)^2` as an exact integer: the squared phase times `n^n`.
    pub fn squared(&self) -> BigInt {
        let mag = BigInt::from(self.magnitude_sq.clone());
        match self.phase.square() {
            Phase::One => mag,
            _ => -mag,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.n as f64;
        self.phase.to_complex() * n.powf(n / 2.0)
    }
}

/// 2-adic valuation of a positive integer.
pub fn nu2(n: u64) -> u32 {
    n.trailing_zeros()
}

/// The four-case closed form of `P(zeta)`.
pub fn p_closed(n: u64) -> Result<ClosedFormPz> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let ni = n as i64;
    let (sign_exponent, imaginary) = if n % 2 == 0 {
        if nu2(n) == 1 {
            ((ni - 2) / 4, false)
        } else {
            ((ni - 4) / 4, true)
        }
    } else if n % 4 == 1 {
        ((ni - 1) / 4, false)
    } else {
        ((ni + 1) / 4, true)
    };
    let phase = Phase::from_power(2 * sign_exponent + imaginary as i64);
    let base = BigUint::from(n);
    let exp = u32::try_from(n).map_err(|_| Error::Overflow("computing n^n"))?;
    Ok(ClosedFormPz {
        n,
        magnitude_sq: base.pow(exp),
        magnitude: (n % 2 == 0).then(|| base.pow(exp / 2)),
        phase,
        sign_exponent,
    })
}

/// `(-1)^((n^2+n+2)/2) * n^n`, the identity the closed form must square to.
pub fn p_squared_formula(n: u64) -> Result<BigInt> {
    let exp = u32::try_from(n).map_err(|_| Error::Overflow("computing n^n"))?;
    let mag = BigInt::from(BigUint::from(n).pow(exp));
    let e = (n as u128 * n as u128 + n as u128 + 2) / 2;
    Ok(if e % 2 == 0 { mag } else { -mag })
}

/// `P(zeta)` in floating point with `zeta = exp(2 pi i / (p-1))`.
pub fn p_eval_numeric(n: u64, k: u64, p_minus_1: u64) -> Result<Complex64> {
    if n == 0 || k.checked_mul(n) != Some(p_minus_1) {
        return Err(Error::InvalidArgument(format!(
            "k * n = {k} * {n} does not equal {p_minus_1}"
        )));
    }
    if n > NUMERIC_BOUND {
        return Err(Error::FloatBound {
            n,
            bound: NUMERIC_BOUND,
        });
    }
    let root = |j: u64| {
        let e = (k * j) % p_minus_1;
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / p_minus_1 as f64)
    };
    let powers: Vec<Complex64> = (1..=n).map(root).collect();
    let mut acc = Complex64::new(1.0, 0.0);
    for (j, &zj) in powers.iter().enumerate() {
        for &zi in &powers[..j] {
            acc *= zj - zi;
        }
    }
    Ok(acc)
}

/// `|numeric - closed| / |closed|`.
pub fn relative_error(numeric: Complex64, closed: &ClosedFormPz) -> f64 {
    let c = closed.to_complex();
    (numeric - c).norm() / c.norm()
}
