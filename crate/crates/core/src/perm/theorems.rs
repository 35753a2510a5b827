use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{primitive_roots, PrimeContext};
use crate::counts::{epsilon, lambda_and_d, omega_products, sign_bit};
use crate::cyclo::g_poly_unchecked;
use crate::error::{Error, Result};

use super::products::{lemma23_from, s_product_check, w_product, Lemma23};
use super::sequences::TauKernel;
use super::sign::Sign;

/// Both predictions for `sgn(tau_p(g))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAPrediction {
    pub case: String,
    /// Numerator of the exponent over 32 in the printed formula.
    pub published_numerator: i64,
    /// `None` when the exponent is not an integer.
    pub published: Option<Sign>,
    /// `W_p` closed form times `G(g)^{-1}`; `None` when that is not `+-1`.
    pub recomposed: Option<Sign>,
    pub recomposed_residue: u64,
}

/// Direct sign against its predictions for one prime (and one root).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignRecord {
    pub p: u64,
    pub g: Option<u64>,
    pub case: String,
    pub direct_sign: Sign,
    pub published_prediction: Option<Sign>,
    pub recomposed_prediction: Option<Sign>,
    /// Direct `W_p` equals its closed form.
    pub lemma23_w_check: bool,
    pub published_agrees: bool,
    pub recomposed_agrees: bool,
}

impl SignRecord {
    pub fn new(
        p: u64,
        g: Option<u64>,
        case: String,
        direct_sign: Sign,
        published_prediction: Option<Sign>,
        recomposed_prediction: Option<Sign>,
        lemma23_w_check: bool,
    ) -> Self {
        SignRecord {
            p,
            g,
            case,
            direct_sign,
            published_prediction,
            recomposed_prediction,
            lemma23_w_check,
            published_agrees: published_prediction == Some(direct_sign),
            recomposed_agrees: recomposed_prediction == Some(direct_sign),
        }
    }
}

/// Per-prime data shared by every root: `lambda_p`, `A_p`, `2b B_p / a`,
/// the evaluated `W_p` closed form, the direct `W_p`, and the sign kernel.
#[derive(Clone, Debug)]
pub struct TauAnalysis<'a> {
    ctx: &'a PrimeContext,
    lambda: u8,
    a_p: u64,
    scaled_b: u64,
    lemma23: Lemma23,
    w_p: u64,
    kernel: TauKernel,
}

impl<'a> TauAnalysis<'a> {
    pub fn new(ctx: &'a PrimeContext) -> Result<Self> {
        ctx.require_one_mod_eight()?;
        let (_, lambda) = lambda_and_d(ctx)?;
        let (a_p, _, scaled_b) = omega_products(ctx)?;
        Ok(TauAnalysis {
            ctx,
            lambda,
            a_p,
            scaled_b,
            lemma23: lemma23_from(ctx, lambda, a_p, scaled_b)?,
            w_p: w_product(ctx)?,
            kernel: TauKernel::new(ctx)?,
        })
    }

    pub fn lemma23(&self) -> &Lemma23 {
        &self.lemma23
    }

    pub fn w_product(&self) -> u64 {
        self.w_p
    }

    pub fn lemma23_holds(&self) -> bool {
        self.w_p == self.lemma23.value
    }

    pub fn case_label(&self) -> String {
        self.lemma23.case_label()
    }

    pub fn direct(&self, g: u64) -> Result<Sign> {
        let g = self.ctx.check_primitive_root(g)?;
        Ok(self.kernel.sign(self.ctx, g))
    }

    pub fn predict(&self, g: u64) -> Result<TheoremAPrediction> {
        let g = self.ctx.check_primitive_root(g)?;
        Ok(self.predict_unchecked(g))
    }

    fn predict_unchecked(&self, g: u64) -> TheoremAPrediction {
        let ctx = self.ctx;
        let m = ctx.modulus();
        let (p, a, b) = (ctx.p() as i64, ctx.a(), ctx.b() as i64);
        let plus = ctx.chi4_of(2) == 1;
        let (shift, bit) = if ctx.residue_class_16() == 9 {
            if plus {
                (11, sign_bit(self.a_p, m))
            } else {
                (-21, sign_bit(self.scaled_b, m))
            }
        } else {
            let twist_inv = m.inv(m.pow(g, ctx.quarter())).expect("unit");
            if plus {
                (-5, sign_bit(m.mul(self.a_p, twist_inv), m))
            } else {
                (27, sign_bit(m.mul(self.scaled_b, twist_inv), m))
            }
        };
        let numerator = 3 * p + shift - 2 * a + 8 * b;
        let published = match bit {
            Ok(bit) if numerator % 32 == 0 => Some(Sign::from_exponent(
                self.lambda as i64 + bit as i64 + numerator / 32,
            )),
            _ => None,
        };
        let g_inv = m.inv(g_poly_unchecked(ctx, g)).expect("G(g) is a unit");
        let recomposed_residue = m.mul(self.lemma23.value, g_inv);
        TheoremAPrediction {
            case: self.case_label(),
            published_numerator: numerator,
            published,
            recomposed: Sign::from_residue(recomposed_residue, m),
            recomposed_residue,
        }
    }

    pub fn record(&self, g: u64) -> Result<SignRecord> {
        let g = self.ctx.check_primitive_root(g)?;
        Ok(self.record_unchecked(g))
    }

    fn record_unchecked(&self, g: u64) -> SignRecord {
        let pred = self.predict_unchecked(g);
        SignRecord::new(
            self.ctx.p(),
            Some(g),
            pred.case,
            self.kernel.sign(self.ctx, g),
            pred.published,
            pred.recomposed,
            self.lemma23_holds(),
        )
    }

    /// Records for every primitive root, ascending in `g`.
    pub fn records_all(&self) -> Vec<SignRecord> {
        primitive_roots(self.ctx.p())
            .into_par_iter()
            .map(|g| self.record_unchecked(g))
            .collect()
    }

    /// Direct signs for every primitive root, ascending in `g`.
    pub fn signs_all(&self) -> Vec<(u64, Sign)> {
        primitive_roots(self.ctx.p())
            .into_par_iter()
            .map(|g| (g, self.kernel.sign(self.ctx, g)))
            .collect()
    }
}

/// Published and recomposed predictions of `sgn(tau_p(g))`.
pub fn theorem_a_predict(ctx: &PrimeContext, g: u64) -> Result<TheoremAPrediction> {
    TauAnalysis::new(ctx)?.predict(g)
}

/// `sgn(rho_p)` against `(-1)^(lambda_p + epsilon_p)` (published) and the sign
/// of `S_p / W_p` (recomposed).
pub fn theorem_b_record(ctx: &PrimeContext) -> Result<SignRecord> {
    ctx.require_one_mod_eight()?;
    let (_, lambda) = lambda_and_d(ctx)?;
    let eps = epsilon(ctx)?;
    let s = s_product_check(ctx)?;
    let (a_p, _, scaled_b) = omega_products(ctx)?;
    let l23 = lemma23_from(ctx, lambda, a_p, scaled_b)?;
    Ok(SignRecord::new(
        ctx.p(),
        None,
        l23.case_label(),
        s.direct,
        Some(Sign::from_exponent(lambda as i64 + eps as i64)),
        s.ratio_sign(ctx),
        l23.value == s.w_p,
    ))
}

fn require_class16(ctx: &PrimeContext, class: u64) -> Result<()> {
    ctx.require_one_mod_eight()?;
    if ctx.residue_class_16() != class {
        return Err(Error::InvalidArgument(format!(
            "p = {} is not {class} mod 16",
            ctx.p()
        )));
    }
    Ok(())
}

/// Evaluated pairing `sgn(tau(g)) sgn(tau(g^{-1})) = -1` over all roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingSummary {
    pub roots: u64,
    pub anti_paired: u64,
}

impl PairingSummary {
    pub fn holds(&self) -> bool {
        self.roots == self.anti_paired
    }
}

pub(crate) fn pairing_from(ctx: &PrimeContext, signs: &[(u64, Sign)]) -> PairingSummary {
    let m = ctx.modulus();
    let lookup = |g: u64| {
        let i = signs.binary_search_by_key(&g, |&(r, _)| r).expect("inverse of a root is a root");
        signs[i].1
    };
    let anti_paired = signs
        .iter()
        .filter(|&&(g, s)| s * lookup(m.inv(g).expect("unit")) == Sign::Minus)
        .count() as u64;
    PairingSummary {
        roots: signs.len() as u64,
        anti_paired,
    }
}

pub fn tau_pairing(ctx: &PrimeContext) -> Result<PairingSummary> {
    require_class16(ctx, 1)?;
    Ok(pairing_from(ctx, &TauAnalysis::new(ctx)?.signs_all()))
}

pub fn tau_pairing_check(ctx: &PrimeContext) -> Result<bool> {
    tau_pairing(ctx).map(|s| s.holds())
}

pub fn g_independence_check(ctx: &PrimeContext) -> Result<bool> {
    require_class16(ctx, 9)?;
    let signs = TauAnalysis::new(ctx)?.signs_all();
    Ok(signs.windows(2).all(|w| w[0].1 == w[1].1))
}

/// Number of primitive roots with each sign of `tau_p(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Balance {
    pub plus: u64,
    pub minus: u64,
}

impl Balance {
    pub fn from_signs(signs: &[(u64, Sign)]) -> Self {
        let plus = signs.iter().filter(|s| s.1 == Sign::Plus).count() as u64;
        Balance {
            plus,
            minus: signs.len() as u64 - plus,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.plus == self.minus
    }
}

pub fn balance(ctx: &PrimeContext) -> Result<Balance> {
    Ok(Balance::from_signs(&TauAnalysis::new(ctx)?.signs_all()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{euler_phi, primes_in_range, Congruence};
    use crate::cyclo::denominator_product;
    use crate::perm::sgn_tau_direct;

    #[test]
    fn seventeen_triple() {
        let ctx = PrimeContext::new(17).unwrap();
        let pred = theorem_a_predict(&ctx, 3).unwrap();
        assert_eq!(pred.recomposed, Some(Sign::Plus));
        assert_eq!(pred.published, Some(Sign::Minus));
        // 3*17 + 27 + 2 + 16 = 96
        assert_eq!(pred.published_numerator, 96);
        let rec = TauAnalysis::new(&ctx).unwrap().record(3).unwrap();
        assert_eq!(rec.direct_sign, Sign::Plus);
        assert!(rec.recomposed_agrees && !rec.published_agrees);
        assert!(rec.lemma23_w_check);
    }

    #[test]
    fn theorem_b_at_17() {
        let ctx = PrimeContext::new(17).unwrap();
        let r = theorem_b_record(&ctx).unwrap();
        assert_eq!(r.direct_sign, Sign::Minus);
        assert_eq!(r.published_prediction, Some(Sign::Minus));
        assert_eq!(r.recomposed_prediction, Some(Sign::Minus));
        assert!(r.published_agrees && r.recomposed_agrees && r.lemma23_w_check);
    }

    #[test]
    fn structure_for_small_primes() {
        assert!(tau_pairing_check(&PrimeContext::new(17).unwrap()).unwrap());
        assert!(tau_pairing_check(&PrimeContext::new(97).unwrap()).unwrap());
        for p in [41, 73, 89] {
            assert!(g_independence_check(&PrimeContext::new(p).unwrap()).unwrap());
        }
        let ctx41 = PrimeContext::new(41).unwrap();
        assert_eq!(primitive_roots(41).len(), 16);
        assert!(tau_pairing_check(&ctx41).is_err());
        assert!(g_independence_check(&PrimeContext::new(17).unwrap()).is_err());
        let b = balance(&PrimeContext::new(17).unwrap()).unwrap();
        assert_eq!((b.plus, b.minus), (4, 4));
    }

    #[test]
    fn recomposed_equals_direct_quotient() {
        // sgn(tau) = W_p / prod (g^4j - g^4i) with the denominator computed directly
        for p in primes_in_range(17, 500, Some(Congruence::new(1, 8))) {
            let ctx = PrimeContext::new(p).unwrap();
            let an = TauAnalysis::new(&ctx).unwrap();
            let m = ctx.modulus();
            for rec in an.records_all() {
                let g = rec.g.unwrap();
                let den = denominator_product(&ctx, g).unwrap();
                let q = m.mul(an.w_product(), m.inv(den).unwrap());
                assert_eq!(Sign::from_residue(q, m), Some(rec.direct_sign), "p={p} g={g}");
                assert!(rec.recomposed_agrees, "p={p} g={g}");
                assert_eq!(rec.direct_sign, sgn_tau_direct(&ctx, g).unwrap());
            }
            let signs = an.signs_all();
            assert_eq!(signs.len() as u64, euler_phi(p - 1));
            if ctx.residue_class_16() == 1 {
                assert!(pairing_from(&ctx, &signs).holds());
                assert!(Balance::from_signs(&signs).is_balanced());
            } else {
                assert!(signs.windows(2).all(|w| w[0].1 == w[1].1));
            }
        }
    }
}
