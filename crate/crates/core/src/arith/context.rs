use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::decompose::decompose;
use super::modulus::{Modulus, MAX_MODULUS};
use super::primes::{is_prime, smallest_primitive_root};
use crate::error::{Error, Result};

/// Residue tables are only built below this bound; above it the character
/// lookups fall back to modular exponentiation.
pub const TABLE_LIMIT: u64 = 1 << 27;

/// The value of `m^((p-1)/4)` for `p = 1 (mod 4)`, one of the four fourth
/// roots of unity `1, i, -1, -i` with `i = 2b/a (mod p)`.
///
/// The discriminant is the exponent of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[repr(u8)]
pub enum QuarticClass {
    One = 0,
    I = 1,
    MinusOne = 2,
    MinusI = 3,
}

impl QuarticClass {
    pub const ALL: [QuarticClass; 4] = [
        QuarticClass::One,
        QuarticClass::I,
        QuarticClass::MinusOne,
        QuarticClass::MinusI,
    ];

    #[inline]
    pub fn from_exponent(e: u64) -> Self {
        Self::ALL[(e % 4) as usize]
    }

    #[inline]
    pub fn exponent(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn is_quadratic_residue(self) -> bool {
        matches!(self, QuarticClass::One | QuarticClass::MinusOne)
    }

    /// Legendre symbol of any element of this class.
    #[inline]
    pub fn legendre(self) -> i8 {
        if self.is_quadratic_residue() {
            1
        } else {
            -1
        }
    }

    /// Rational quartic symbol: 1 on fourth powers, -1 on everything else.
    #[inline]
    pub fn chi4(self) -> i8 {
        if self == QuarticClass::One {
            1
        } else {
            -1
        }
    }

    /// The fourth root of unity this class stands for, as a residue.
    pub fn value(self, ctx: &PrimeContext) -> u64 {
        let m = ctx.modulus();
        match self {
            QuarticClass::One => 1,
            QuarticClass::I => ctx.two_b_over_a(),
            QuarticClass::MinusOne => ctx.p() - 1,
            QuarticClass::MinusI => m.neg(ctx.two_b_over_a()),
        }
    }
}

impl fmt::Display for QuarticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuarticClass::One => "1",
            QuarticClass::I => "2b/a",
            QuarticClass::MinusOne => "-1",
            QuarticClass::MinusI => "-2b/a",
        })
    }
}

const ZERO_SLOT: u8 = u8::MAX;

/// One byte per residue: the quartic class exponent, or `ZERO_SLOT` at 0.
struct ClassTable(Vec<u8>);

/// A prime `p = 1 (mod 4)` with its decomposition `p = a^2 + 4 b^2`
/// (`a = -1 mod 4`, `b > 0`) and a lazily built table of quartic classes.
///
/// Immutable after construction apart from the table, which is initialized
/// at most once; the context can be shared across threads.
pub struct PrimeContext {
    modulus: Modulus,
    a: i64,
    b: u64,
    i4: u64,
    generator: u64,
    table: OnceLock<ClassTable>,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let (a, b) = decompose(p)?;
        let modulus = Modulus::new(p);
        let a_inv = modulus
            .inv(modulus.reduce_i64(a))
            .expect("a is a unit since p = a^2 + 4b^2 is prime");
        let i4 = modulus.mul(modulus.reduce(2 * b), a_inv);
        Ok(PrimeContext {
            modulus,
            a,
            b,
            i4,
            generator: smallest_primitive_root(p),
            table: OnceLock::new(),
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.modulus.get()
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `a` reduced into `[0, p)`.
    pub fn a_mod_p(&self) -> u64 {
        self.modulus.reduce_i64(self.a)
    }

    pub fn residue_class_16(&self) -> u64 {
        self.p() % 16
    }

    /// `2b * a^-1 mod p`, a primitive fourth root of unity.
    pub fn two_b_over_a(&self) -> u64 {
        self.i4
    }

    /// The smallest primitive root.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn is_one_mod_eight(&self) -> bool {
        self.p() % 8 == 1
    }

    pub fn require_one_mod_eight(&self) -> Result<()> {
        if self.is_one_mod_eight() {
            Ok(())
        } else {
            Err(Error::NotOneModEight(self.p()))
        }
    }

    /// `(p - 1) / 4`.
    pub fn quarter(&self) -> u64 {
        (self.p() - 1) / 4
    }

    fn table(&self) -> Option<&ClassTable> {
        if self.p() > TABLE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| self.build_table()))
    }

    // One pass over the powers of the generator g: the class of g^k is read
    // off from k mod 4, oriented by whether g^((p-1)/4) is 2b/a or -2b/a.
    fn build_table(&self) -> ClassTable {
        let p = self.p();
        let m = self.modulus;
        let omega = m.pow(self.generator, self.quarter());
        let flip = omega != self.i4;
        debug_assert!(!flip || omega == m.neg(self.i4));
        let mut classes = vec![ZERO_SLOT; p as usize];
        let mut x = 1u64;
        for k in 0..p - 1 {
            let e = if flip { (4 - k % 4) % 4 } else { k % 4 };
            classes[x as usize] = e as u8;
            x = m.mul(x, self.generator);
        }
        ClassTable(classes)
    }

    /// Quartic class of a residue in `[0, p)`; `None` for zero.
    #[inline]
    pub fn class_of(&self, x: u64) -> Option<QuarticClass> {
        match self.table() {
            Some(t) => {
                let e = t.0[x as usize];
                (e != ZERO_SLOT).then(|| QuarticClass::from_exponent(e as u64))
            }
            None => classify_by_power(x, self),
        }
    }

    /// Legendre symbol of a residue in `[0, p)`.
    #[inline]
    pub fn legendre_of(&self, x: u64) -> i8 {
        self.class_of(x).map_or(0, QuarticClass::legendre)
    }

    /// Rational quartic symbol of a residue in `[0, p)`.
    #[inline]
    pub fn chi4_of(&self, x: u64) -> i8 {
        self.class_of(x).map_or(0, QuarticClass::chi4)
    }

    /// Checks `g` is a primitive root and reduces it into `[0, p)`.
    pub fn check_primitive_root(&self, g: u64) -> Result<u64> {
        let p = self.p();
        if super::primes::is_primitive_root(g, p) {
            Ok(g % p)
        } else {
            Err(Error::NotPrimitiveRoot { g, p })
        }
    }
}

impl fmt::Debug for PrimeContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeContext")
            .field("p", &self.p())
            .field("a", &self.a)
            .field("b", &self.b)
            .field("residue_class_16", &self.residue_class_16())
            .field("table_built", &self.table.get().is_some())
            .finish()
    }
}

fn classify_by_power(x: u64, ctx: &PrimeContext) -> Option<QuarticClass> {
    let x = ctx.modulus.reduce(x);
    if x == 0 {
        return None;
    }
    let v = ctx.modulus.pow(x, ctx.quarter());
    QuarticClass::ALL.into_iter().find(|c| c.value(ctx) == v)
}

/// Legendre symbol `(x/p)` by Euler's criterion.
pub fn legendre(x: i64, p: u64) -> i8 {
    let m = Modulus::new(p);
    let x = m.reduce_i64(x);
    if x == 0 {
        return 0;
    }
    if m.pow(x, (p - 1) / 2) == 1 {
        1
    } else {
        -1
    }
}

/// Rational quartic residue symbol: 0 if `p | x`, 1 if `x` is a fourth power
/// modulo `p`, -1 otherwise (quadratic non-residues included).
pub fn quartic_symbol(x: i64, p: u64) -> Result<i8> {
    if p % 4 != 1 {
        return Err(Error::NotOneModFour(p));
    }
    let m = Modulus::new(p);
    let x = m.reduce_i64(x);
    if x == 0 {
        return Ok(0);
    }
    Ok(if m.pow(x, (p - 1) / 4) == 1 { 1 } else { -1 })
}

/// Classifies `m^((p-1)/4)` against `1, 2b/a, -1, -2b/a` by direct
/// exponentiation (the table in [`PrimeContext`] is an independent route).
pub fn quartic_class(m: i64, ctx: &PrimeContext) -> Result<QuarticClass> {
    let r = ctx.modulus.reduce_i64(m);
    if r == 0 {
        return Err(Error::ZeroResidue {
            value: m,
            p: ctx.p(),
        });
    }
    Ok(classify_by_power(r, ctx).expect("m^((p-1)/4) is a fourth root of unity"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::{primes_in_range, Congruence};

    #[test]
    fn symbol_examples() {
        assert_eq!(legendre(2, 17), 1);
        assert_eq!(legendre(0, 17), 0);
        assert_eq!(legendre(3, 17), -1);
        assert_eq!(legendre(-1, 17), 1);
        assert_eq!(quartic_symbol(2, 17).unwrap(), -1);
        assert_eq!(quartic_symbol(1, 17).unwrap(), 1);
        assert_eq!(quartic_symbol(13, 17).unwrap(), 1);
        assert_eq!(quartic_symbol(34, 17).unwrap(), 0);
        assert!(quartic_symbol(2, 19).is_err());
    }

    #[test]
    fn class_examples() {
        let ctx = PrimeContext::new(17).unwrap();
        assert_eq!(ctx.two_b_over_a(), 13);
        assert_eq!(quartic_class(1, &ctx).unwrap(), QuarticClass::One);
        assert_eq!(quartic_class(3, &ctx).unwrap(), QuarticClass::I);
        assert_eq!(quartic_class(2, &ctx).unwrap(), QuarticClass::MinusOne);
        assert_eq!(quartic_class(6, &ctx).unwrap(), QuarticClass::MinusI);
        assert!(matches!(
            quartic_class(34, &ctx),
            Err(Error::ZeroResidue { .. })
        ));
    }

    #[test]
    fn fourth_powers_mod_17() {
        let fourth: Vec<u64> = (1..17u64)
            .filter(|&x| quartic_symbol(x as i64, 17).unwrap() == 1)
            .collect();
        assert_eq!(fourth, vec![1, 4, 13, 16]);
    }

    #[test]
    fn table_agrees_with_exponentiation() {
        for p in primes_in_range(5, 1500, Some(Congruence::new(1, 4))) {
            let ctx = PrimeContext::new(p).unwrap();
            assert_eq!(ctx.class_of(0), None);
            for x in 1..p {
                let c = quartic_class(x as i64, &ctx).unwrap();
                assert_eq!(ctx.class_of(x), Some(c), "p = {p}, x = {x}");
                assert_eq!(ctx.legendre_of(x), legendre(x as i64, p));
                assert_eq!(ctx.chi4_of(x) as i64, quartic_symbol(x as i64, p).unwrap() as i64);
            }
        }
    }

    #[test]
    fn fourth_powers_by_enumeration() {
        for p in [13u64, 17, 29, 41, 73] {
            let m = Modulus::new(p);
            let fourth: std::collections::BTreeSet<u64> = (1..p).map(|y| m.pow(y, 4)).collect();
            for x in 1..p {
                let expected = if fourth.contains(&x) { 1 } else { -1 };
                assert_eq!(quartic_symbol(x as i64, p).unwrap(), expected);
            }
        }
    }

    #[test]
    fn context_rejects_bad_primes() {
        assert!(matches!(PrimeContext::new(15), Err(Error::NotPrime(15))));
        assert!(matches!(PrimeContext::new(23), Err(Error::NotOneModFour(23))));
        let ctx = PrimeContext::new(13).unwrap();
        assert!(matches!(ctx.require_one_mod_eight(), Err(Error::NotOneModEight(13))));
        assert!(ctx.check_primitive_root(3).is_err());
        assert_eq!(ctx.check_primitive_root(2).unwrap(), 2);
    }

    #[test]
    fn large_prime_falls_back_to_exponentiation() {
        let p = 1_000_000_009;
        let ctx = PrimeContext::new(p).unwrap();
        for x in [2u64, 3, 5, 12345, p - 1] {
            assert_eq!(ctx.legendre_of(x), legendre(x as i64, p));
        }
    }
}
