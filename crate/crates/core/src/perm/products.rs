use serde::{Deserialize, Serialize};

use crate::arith::{Modulus, PrimeContext};
use crate::counts::{lambda_and_d, omega_products, sign_residue};
use crate::error::{Error, Result};

use super::sequences::{seq_d, seq_f};
use super::sign::{perm_sign, Sign};

/// `prod_{i<j} (v_j - v_i) mod p`.
pub(crate) fn vandermonde(values: &[u64], m: Modulus) -> u64 {
    let mut acc = 1;
    for (j, &vj) in values.iter().enumerate() {
        for &vi in &values[..j] {
            acc = m.mul(acc, m.sub(vj, vi));
        }
    }
    acc
}

/// `W_p = prod_{i<j} (a_j^2 - a_i^2) mod p`, directly.
pub fn w_product(ctx: &PrimeContext) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    Ok(vandermonde(&seq_d(ctx), ctx.modulus()))
}

/// `S_p = prod_{i<j} (b_j - b_i) mod p` over the ascending fourth-power
/// residues, `j` running up to `(p-1)/4` inclusive.
pub fn s_product(ctx: &PrimeContext) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    Ok(vandermonde(&seq_f(ctx), ctx.modulus()))
}

/// The evaluated closed form for `W_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma23 {
    pub chi4_two: i8,
    pub residue_class_16: u64,
    pub lambda: u8,
    /// Numerator of the exponent over 32, e.g. `p - 3 - 2a + 8b`.
    pub exponent_numerator: i64,
    /// `A_p` when `chi_4(2) = 1`, `2b B_p / a` otherwise.
    pub base: u64,
    pub value: u64,
}

impl Lemma23 {
    pub fn case_label(&self) -> String {
        format!(
            "p=={} mod 16, chi4(2)={:+}",
            self.residue_class_16, self.chi4_two
        )
    }
}

pub(crate) fn lemma23_from(
    ctx: &PrimeContext,
    lambda: u8,
    a_p: u64,
    scaled_b: u64,
) -> Result<Lemma23> {
    let (p, a, b) = (ctx.p() as i64, ctx.a(), ctx.b() as i64);
    let chi4_two = ctx.chi4_of(2);
    let class16 = ctx.residue_class_16();
    let shift = if class16 == 9 { -3 } else { 29 };
    let (eight_b, base) = if chi4_two == 1 {
        (8 * b, a_p)
    } else {
        (-8 * b, scaled_b)
    };
    let numerator = p + shift - 2 * a + eight_b;
    if numerator % 32 != 0 {
        return Err(Error::NotIntegral {
            numerator,
            denominator: 32,
        });
    }
    let m = ctx.modulus();
    let value = m.mul(sign_residue(lambda as i64 + numerator / 32, m), base);
    Ok(Lemma23 {
        chi4_two,
        residue_class_16: class16,
        lambda,
        exponent_numerator: numerator,
        base,
        value,
    })
}

pub fn lemma23(ctx: &PrimeContext) -> Result<Lemma23> {
    ctx.require_one_mod_eight()?;
    let (_, lambda) = lambda_and_d(ctx)?;
    let (a_p, _, scaled_b) = omega_products(ctx)?;
    lemma23_from(ctx, lambda, a_p, scaled_b)
}

/// Closed-form value of `W_p mod p`.
pub fn lemma23_closed(ctx: &PrimeContext) -> Result<u64> {
    lemma23(ctx).map(|l| l.value)
}

/// `sgn(rho_p) = S_p / W_p (mod p)`, both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SProductCheck {
    pub s_p: u64,
    pub w_p: u64,
    /// `S_p W_p^{-1} mod p`.
    pub ratio: u64,
    pub direct: Sign,
}

impl SProductCheck {
    pub fn ratio_sign(&self, ctx: &PrimeContext) -> Option<Sign> {
        Sign::from_residue(self.ratio, ctx.modulus())
    }

    pub fn holds(&self, ctx: &PrimeContext) -> bool {
        self.ratio_sign(ctx) == Some(self.direct)
    }
}

pub fn s_product_check(ctx: &PrimeContext) -> Result<SProductCheck> {
    ctx.require_one_mod_eight()?;
    let m = ctx.modulus();
    let (d, f) = (seq_d(ctx), seq_f(ctx));
    let s_p = vandermonde(&f, m);
    let w_p = vandermonde(&d, m);
    let ratio = m.mul(s_p, m.inv(w_p).expect("W_p is a unit"));
    Ok(SProductCheck {
        s_p,
        w_p,
        ratio,
        direct: perm_sign(&d, &f)?,
    })
}
