use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest supported modulus. Every product of two residues fits in a `u128`
/// and every sum of two residues fits in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// A prime modulus with precomputed reduction constants.
///
/// For moduli below 2^32 the product of two residues fits in a `u64`, and
/// reduction uses a Barrett quotient estimate instead of a hardware division.
/// Larger moduli fall back to `u128` remainders.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    // floor((2^64 - 1) / p) when p < 2^32, otherwise 0
    barrett: u64,
}

impl Modulus {
    /// Panics if `p < 2` or `p > MAX_MODULUS`.
    pub fn new(p: u64) -> Self {
        assert!((2..=MAX_MODULUS).contains(&p), "modulus {p} out of range");
        let barrett = if p < (1 << 32) { u64::MAX / p } else { 0 };
        Modulus { p, barrett }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.p
    }

    #[inline]
    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        if self.barrett != 0 {
            let x = a * b;
            let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
            // the estimate is short by at most 2
            let mut r = x - q * self.p;
            if r >= self.p {
                r -= self.p;
            }
            if r >= self.p {
                r -= self.p;
            }
            r
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// `base^exp mod p`, with `0^0 = 1`.
    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut base = self.reduce(base);
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, or `None` for zero. Assumes `p` is prime.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = self.reduce(a);
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Interprets `a` as a sign: `1 -> Some(1)`, `p - 1 -> Some(-1)`.
    #[inline]
    pub fn as_sign(self, a: u64) -> Option<i8> {
        if a == 1 {
            Some(1)
        } else if a == self.p - 1 {
            Some(-1)
        } else {
            None
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(self, a: u64) -> i64 {
        let a = self.reduce(a);
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.p)
    }
}

/// `base^exp mod p` for `2 <= p <= 2^62`. By convention `0^0 = 1`.
pub fn mod_pow(base: u64, exp: u64, p: u64) -> u64 {
    Modulus::new(p).pow(base, exp)
}

/// A residue bound to its modulus. Mixing residues of different moduli in
/// one operation is a usage error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        Residue {
            value: modulus.reduce_i64(value),
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: Modulus) -> Self {
        Residue {
            value: modulus.reduce(value),
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Residue {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Option<Self> {
        self.modulus.inv(self.value).map(|value| Residue {
            value,
            modulus: self.modulus,
        })
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus.p, other.modulus.p,
            "arithmetic on residues modulo different primes"
        );
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.p)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pow_examples() {
        assert_eq!(mod_pow(3, 4, 17), 13);
        assert_eq!(mod_pow(2, 16, 17), 1);
        assert_eq!(mod_pow(11, 1, 17), 11);
        assert_eq!(mod_pow(0, 0, 17), 1);
        assert_eq!(mod_pow(0, 5, 17), 0);
    }

    #[test]
    fn large_modulus_uses_wide_path() {
        // 2^61 - 1 is prime
        let p = (1u64 << 61) - 1;
        let m = Modulus::new(p);
        assert_eq!(m.pow(3, p - 1), 1);
        let x = p - 5;
        assert_eq!(m.mul(x, m.inv(x).unwrap()), 1);
    }

    #[test]
    fn signs_and_symmetric_representatives() {
        let m = Modulus::new(17);
        assert_eq!(m.as_sign(1), Some(1));
        assert_eq!(m.as_sign(16), Some(-1));
        assert_eq!(m.as_sign(4), None);
        assert_eq!(m.signed(16), -1);
        assert_eq!(m.signed(8), 8);
        assert_eq!(m.signed(9), -8);
    }

    #[test]
    #[should_panic(expected = "different primes")]
    fn mismatched_moduli_panic() {
        let a = Residue::new(3, Modulus::new(17));
        let b = Residue::new(3, Modulus::new(13));
        let _ = a * b;
    }

    #[test]
    fn residue_ops() {
        let m = Modulus::new(17);
        let a = Residue::new(-1, m);
        assert_eq!(a.value(), 16);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + Residue::new(2, m)).value(), 1);
        assert_eq!((-a).value(), 1);
        assert_eq!(Residue::new(13, m).inv().unwrap().value(), 4);
    }

    proptest! {
        #[test]
        fn barrett_matches_wide_remainder(p in 2u64..(1 << 32), a in any::<u64>(), b in any::<u64>()) {
            let m = Modulus::new(p);
            let (a, b) = (a % p, b % p);
            prop_assert_eq!(m.mul(a, b), ((a as u128 * b as u128) % p as u128) as u64);
        }
    }
}
