use serde::{Deserialize, Serialize};

use crate::arith::{Modulus, PrimeContext, QuarticClass};
use crate::error::{Error, Result};
use crate::identity::Identity;

use super::pairs::{epsilon, lambda_and_d};

/// Residues in `(0, p/2)` split by the value of `x^((p-1)/4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSets {
    pub omega_1: Vec<u64>,
    pub omega_minus1: Vec<u64>,
    /// Quadratic residues: `omega_1` and `omega_minus1` merged.
    pub omega_r: Vec<u64>,
    pub omega_i: Vec<u64>,
    pub omega_minus_i: Vec<u64>,
}

impl OmegaSets {
    pub fn class(&self, c: QuarticClass) -> &[u64] {
        match c {
            QuarticClass::One => &self.omega_1,
            QuarticClass::I => &self.omega_i,
            QuarticClass::MinusOne => &self.omega_minus1,
            QuarticClass::MinusI => &self.omega_minus_i,
        }
    }
}

pub fn omega_sets(ctx: &PrimeContext) -> Result<OmegaSets> {
    ctx.require_one_mod_eight()?;
    let mut sets = OmegaSets {
        omega_1: Vec::new(),
        omega_minus1: Vec::new(),
        omega_r: Vec::new(),
        omega_i: Vec::new(),
        omega_minus_i: Vec::new(),
    };
    for x in 1..=ctx.p() / 2 {
        let c = ctx.class_of(x).expect("nonzero");
        if c.is_quadratic_residue() {
            sets.omega_r.push(x);
        }
        match c {
            QuarticClass::One => sets.omega_1.push(x),
            QuarticClass::I => sets.omega_i.push(x),
            QuarticClass::MinusOne => sets.omega_minus1.push(x),
            QuarticClass::MinusI => sets.omega_minus_i.push(x),
        }
    }
    Ok(sets)
}

/// `(-1)^e` as a residue.
pub(crate) fn sign_residue(e: i64, m: Modulus) -> u64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        m.get() - 1
    }
}

fn product(values: &[u64], m: Modulus) -> u64 {
    values.iter().fold(1, |acc, &t| m.mul(acc, t))
}

fn product_of_squares(values: &[u64], m: Modulus) -> u64 {
    values.iter().fold(1, |acc, &t| m.mul(acc, m.mul(t, t)))
}

/// Products of `t^2` over three of the Omega sets, with the values the
/// closed forms predict for them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSquareProducts {
    pub prod_i: u64,
    pub prod_one: u64,
    pub prod_minus_one: u64,
    /// `(-1)^((p+7)/8) * 2b/a`
    pub expected_i: u64,
    /// `(-1)^((p+7)/8)`
    pub expected_one: u64,
    /// `(-1)^((p-1)/8)`
    pub expected_minus_one: u64,
}

impl OmegaSquareProducts {
    pub fn identities(&self) -> [Identity; 3] {
        [
            Identity::new("prod t^2 over Omega_2b/a", self.expected_i as i64, self.prod_i as i64),
            Identity::new("prod t^2 over Omega_1", self.expected_one as i64, self.prod_one as i64),
            Identity::new(
                "prod t^2 over Omega_-1",
                self.expected_minus_one as i64,
                self.prod_minus_one as i64,
            ),
        ]
    }

    pub fn holds(&self) -> bool {
        self.identities().iter().all(Identity::holds)
    }
}

pub fn omega_square_products(ctx: &PrimeContext) -> Result<OmegaSquareProducts> {
    let sets = omega_sets(ctx)?;
    let m = ctx.modulus();
    let p = ctx.p() as i64;
    let plus7 = sign_residue((p + 7) / 8, m);
    Ok(OmegaSquareProducts {
        prod_i: product_of_squares(&sets.omega_i, m),
        prod_one: product_of_squares(&sets.omega_1, m),
        prod_minus_one: product_of_squares(&sets.omega_minus1, m),
        expected_i: m.mul(plus7, ctx.two_b_over_a()),
        expected_one: plus7,
        expected_minus_one: sign_residue((p - 1) / 8, m),
    })
}

/// The sign parameters attached to a prime (and, for `p = 1 mod 16`, to a
/// primitive root). Bits are `0` for `+1` and `1` for `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignParams {
    /// Product of `Omega_1`.
    pub a_p: u64,
    /// Product of `Omega_-1`.
    pub b_p: u64,
    /// `(-1)^beta = A_p`, defined for `p = 9 mod 16`.
    pub beta: Option<u8>,
    /// `(-1)^gamma = 2b B_p / a`, defined for `p = 9 mod 16`.
    pub gamma: Option<u8>,
    /// `(-1)^delta = A_p / g^((p-1)/4)`, defined for `p = 1 mod 16`.
    pub delta: Option<u8>,
    /// `(-1)^mu = 2b B_p / (a g^((p-1)/4))`, defined for `p = 1 mod 16`.
    pub mu: Option<u8>,
    pub g: Option<u64>,
    pub lambda: u8,
    pub d_p: u64,
    pub epsilon_count: u64,
    pub epsilon_parity: u8,
}

impl SignParams {
    /// `A_p^2 = (-1)^((p+7)/8)` and `B_p^2 = (-1)^((p-1)/8)`.
    pub fn identities(&self, ctx: &PrimeContext) -> [Identity; 2] {
        let m = ctx.modulus();
        let p = ctx.p() as i64;
        [
            Identity::new(
                "A_p^2",
                sign_residue((p + 7) / 8, m) as i64,
                m.mul(self.a_p, self.a_p) as i64,
            ),
            Identity::new(
                "B_p^2",
                sign_residue((p - 1) / 8, m) as i64,
                m.mul(self.b_p, self.b_p) as i64,
            ),
        ]
    }
}

pub(crate) fn sign_bit(value: u64, m: Modulus) -> Result<u8> {
    match m.as_sign(value) {
        Some(1) => Ok(0),
        Some(_) => Ok(1),
        None => Err(Error::NotASign {
            value,
            p: m.get(),
        }),
    }
}

/// `A_p`, `B_p`, `2b B_p / a` without the pair counts.
pub(crate) fn omega_products(ctx: &PrimeContext) -> Result<(u64, u64, u64)> {
    let sets = omega_sets(ctx)?;
    let m = ctx.modulus();
    let a_p = product(&sets.omega_1, m);
    let b_p = product(&sets.omega_minus1, m);
    let scaled_b = m.mul(ctx.two_b_over_a(), b_p);
    Ok((a_p, b_p, scaled_b))
}

pub fn sign_params(ctx: &PrimeContext, g: Option<u64>) -> Result<SignParams> {
    ctx.require_one_mod_eight()?;
    let m = ctx.modulus();
    let (a_p, b_p, scaled_b) = omega_products(ctx)?;
    let (d_p, lambda) = lambda_and_d(ctx)?;
    let epsilon_count = epsilon(ctx)?;
    let mut params = SignParams {
        a_p,
        b_p,
        beta: None,
        gamma: None,
        delta: None,
        mu: None,
        g: None,
        lambda,
        d_p,
        epsilon_count,
        epsilon_parity: (epsilon_count % 2) as u8,
    };
    if ctx.residue_class_16() == 9 {
        params.beta = Some(sign_bit(a_p, m)?);
        params.gamma = Some(sign_bit(scaled_b, m)?);
    } else {
        let g = match g {
            Some(g) => ctx.check_primitive_root(g)?,
            None => return Err(Error::MissingRoot(ctx.p())),
        };
        let g_quarter_inv = m.inv(m.pow(g, ctx.quarter())).expect("unit");
        params.g = Some(g);
        params.delta = Some(sign_bit(m.mul(a_p, g_quarter_inv), m)?);
        params.mu = Some(sign_bit(m.mul(scaled_b, g_quarter_inv), m)?);
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{primes_in_range, Congruence};

    #[test]
    fn omega_sets_at_17() {
        let ctx = PrimeContext::new(17).unwrap();
        let s = omega_sets(&ctx).unwrap();
        assert_eq!(s.omega_1, vec![1, 4]);
        assert_eq!(s.omega_minus1, vec![2, 8]);
        assert_eq!(s.omega_i, vec![3, 5]);
        assert_eq!(s.omega_minus_i, vec![6, 7]);
        assert_eq!(s.omega_r, vec![1, 2, 4, 8]);
    }

    #[test]
    fn omega_sets_partition_half_range() {
        for p in primes_in_range(17, 2000, Some(Congruence::new(1, 8))) {
            let ctx = PrimeContext::new(p).unwrap();
            let s = omega_sets(&ctx).unwrap();
            let q = ((p - 1) / 8) as usize;
            let mut all = Vec::new();
            for c in QuarticClass::ALL {
                assert_eq!(s.class(c).len(), q, "p = {p}");
                for &x in s.class(c) {
                    assert_eq!(ctx.modulus().pow(x, ctx.quarter()), c.value(&ctx));
                }
                all.extend_from_slice(s.class(c));
            }
            all.sort_unstable();
            assert_eq!(all, (1..=p / 2).collect::<Vec<_>>());
            let mut r = s.omega_1.clone();
            r.extend(&s.omega_minus1);
            r.sort_unstable();
            assert_eq!(r, s.omega_r);
        }
    }

    #[test]
    fn rejects_five_mod_eight() {
        let ctx = PrimeContext::new(13).unwrap();
        assert!(matches!(omega_sets(&ctx), Err(Error::NotOneModEight(13))));
        assert!(sign_params(&ctx, Some(2)).is_err());
    }

    #[test]
    fn square_products_at_17() {
        let ctx = PrimeContext::new(17).unwrap();
        let sq = omega_square_products(&ctx).unwrap();
        assert_eq!(sq.prod_one, 16);
        assert_eq!(sq.expected_one, 16);
        assert_eq!(sq.prod_minus_one, 1);
        assert_eq!(sq.expected_minus_one, 1);
        assert_eq!(sq.prod_i, 4);
        assert_eq!(sq.expected_i, 4);
        assert!(sq.holds());
    }

    #[test]
    fn sign_params_at_17() {
        let ctx = PrimeContext::new(17).unwrap();
        let sp = sign_params(&ctx, Some(3)).unwrap();
        assert_eq!(sp.a_p, 4);
        assert_eq!(sp.b_p, 16);
        assert_eq!(sp.delta, Some(1));
        assert_eq!(sp.mu, Some(1));
        assert_eq!(sp.beta, None);
        assert_eq!(sp.gamma, None);
        assert_eq!((sp.d_p, sp.lambda), (5, 1));
        assert_eq!(sp.epsilon_count, 4);
        assert!(sp.identities(&ctx).iter().all(Identity::holds));
        assert!(matches!(sign_params(&ctx, None), Err(Error::MissingRoot(17))));
        assert!(matches!(
            sign_params(&ctx, Some(2)),
            Err(Error::NotPrimitiveRoot { g: 2, p: 17 })
        ));
    }

    #[test]
    fn class_gate_at_41() {
        let ctx = PrimeContext::new(41).unwrap();
        let sp = sign_params(&ctx, None).unwrap();
        assert!(sp.beta.is_some() && sp.gamma.is_some());
        assert!(sp.delta.is_none() && sp.mu.is_none());
        assert_eq!(sp.lambda as u64, sp.d_p % 2);
    }
}
