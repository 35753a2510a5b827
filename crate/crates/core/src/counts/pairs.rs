use serde::{Deserialize, Serialize};

use crate::arith::PrimeContext;
use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::jacobsthal::phi2_closed;

/// Quadratic residues in `(0, p/2)`, ascending.
pub fn half_residues(ctx: &PrimeContext) -> Vec<u64> {
    (1..=ctx.p() / 2)
        .filter(|&x| ctx.legendre_of(x) == 1)
        .collect()
}

fn half_residue_squares(ctx: &PrimeContext) -> Vec<u64> {
    let m = ctx.modulus();
    half_residues(ctx).into_iter().map(|x| m.mul(x, x)).collect()
}

fn nonzero(t: i64, ctx: &PrimeContext) -> Result<u64> {
    let r = ctx.modulus().reduce_i64(t);
    if r == 0 {
        Err(Error::ZeroResidue { value: t, p: ctx.p() })
    } else {
        Ok(r)
    }
}

/// `N_p(t)`: pairs `0 < x < y < p/2` of quadratic residues with
/// `y^2 - x^2 = t (mod p)`, by enumeration.
pub fn n_count(t: i64, ctx: &PrimeContext) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    let t = nonzero(t, ctx)?;
    let m = ctx.modulus();
    let sq = half_residue_squares(ctx);
    let mut count = 0;
    for (j, &y2) in sq.iter().enumerate() {
        count += sq[..j].iter().filter(|&&x2| m.sub(y2, x2) == t).count() as u64;
    }
    Ok(count)
}

/// `N_p(t)` for every `t` in `[0, p)` from a single pass over the pairs.
pub fn n_counts_all(ctx: &PrimeContext) -> Result<Vec<u64>> {
    ctx.require_one_mod_eight()?;
    let m = ctx.modulus();
    let sq = half_residue_squares(ctx);
    let mut hist = vec![0u64; ctx.p() as usize];
    for (j, &y2) in sq.iter().enumerate() {
        for &x2 in &sq[..j] {
            hist[m.sub(y2, x2) as usize] += 1;
        }
    }
    Ok(hist)
}

fn exact_div(numerator: i64, denominator: i64) -> Result<i64> {
    if numerator % denominator == 0 {
        Ok(numerator / denominator)
    } else {
        Err(Error::NotIntegral {
            numerator,
            denominator,
        })
    }
}

/// Closed form of `N_p(t) + N_p(-t)`:
///
/// ```text
/// (p - 3 - 2a + 2 phi_2(t)) / 16              if (t/p) = -1
/// (p - 7 + 2a + 2 phi_2(t) - 4 chi_4(t)) / 16  if (t/p) = 1
/// ```
///
/// with `phi_2` taken from its own closed form. Fails if the numerator is not
/// a multiple of 16.
pub fn n_sum_closed(t: i64, ctx: &PrimeContext) -> Result<i64> {
    ctx.require_one_mod_eight()?;
    let t_red = nonzero(t, ctx)?;
    let (p, a) = (ctx.p() as i64, ctx.a());
    let phi2 = phi2_closed(t, ctx)?;
    let numerator = if ctx.legendre_of(t_red) == -1 {
        p - 3 - 2 * a + 2 * phi2
    } else {
        p - 7 + 2 * a + 2 * phi2 - 4 * ctx.chi4_of(t_red) as i64
    };
    exact_div(numerator, 16)
}

/// The four double character sums whose total is `16 (N_p(t) + N_p(-t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofSums {
    pub s1: i64,
    pub s2: i64,
    pub s3: i64,
    pub s4: i64,
}

impl ProofSums {
    /// Closed-form values:
    /// `S1 = p - 3 - 2(t/p)`,
    /// `S2 = S3 = phi_2(t) - 2 chi_4(t) [(t/p) = 1]`,
    /// `S4 = psi_4(-t^2) = -2 + 2 (t/p) a`.
    pub fn expected(t: i64, ctx: &PrimeContext) -> Result<ProofSums> {
        let t_red = nonzero(t, ctx)?;
        let p = ctx.p() as i64;
        let leg = ctx.legendre_of(t_red) as i64;
        let phi2 = phi2_closed(t, ctx)?;
        let s23 = if leg == 1 {
            phi2 - 2 * ctx.chi4_of(t_red) as i64
        } else {
            phi2
        };
        Ok(ProofSums {
            s1: p - 3 - 2 * leg,
            s2: s23,
            s3: s23,
            s4: -2 + 2 * leg * ctx.a(),
        })
    }

    pub fn total(&self) -> i64 {
        self.s1 + self.s2 + self.s3 + self.s4
    }

    pub fn identities(&self, expected: &ProofSums) -> [Identity; 4] {
        [
            Identity::new("S1", expected.s1, self.s1),
            Identity::new("S2", expected.s2, self.s2),
            Identity::new("S3", expected.s3, self.s3),
            Identity::new("S4", expected.s4, self.s4),
        ]
    }
}

/// Evaluates `S1..S4` term by term.
///
/// The inner sum over `y` is resolved exactly per `x`: the number of `y` in
/// `[1, p)` with `y^2 = c` is `1 + (c/p)` for `c != 0`, and the sum of `(y/p)`
/// over those roots is `2 chi_4(c)` when `c` is a nonzero square (because `-1`
/// is a square). This keeps each sum `O(p)` instead of `O(p^2)`.
pub fn proof_sums(t: i64, ctx: &PrimeContext) -> Result<ProofSums> {
    let t = nonzero(t, ctx)?;
    let m = ctx.modulus();
    let roots = |c: u64| -> i64 {
        if c == 0 {
            0
        } else {
            1 + ctx.legendre_of(c) as i64
        }
    };
    let root_character = |c: u64| -> i64 {
        if c != 0 && ctx.legendre_of(c) == 1 {
            2 * ctx.chi4_of(c) as i64
        } else {
            0
        }
    };
    let mut sums = ProofSums {
        s1: 0,
        s2: 0,
        s3: 0,
        s4: 0,
    };
    for x in 1..ctx.p() {
        let x2 = m.mul(x, x);
        let leg_x = ctx.legendre_of(x) as i64;
        let plus = m.add(x2, t);
        let n_plus = roots(plus);
        sums.s1 += n_plus;
        sums.s2 += leg_x * n_plus;
        sums.s3 += leg_x * roots(m.sub(x2, t));
        sums.s4 += leg_x * root_character(plus);
    }
    Ok(sums)
}

/// `d_p`, the number of pairs `0 < x < y < p/2` of quadratic residues with
/// `{y^2 - x^2}_p > p/2`, and `lambda_p = d_p mod 2`.
pub fn lambda_and_d(ctx: &PrimeContext) -> Result<(u64, u8)> {
    ctx.require_one_mod_eight()?;
    let m = ctx.modulus();
    let half = ctx.p() / 2;
    let sq = half_residue_squares(ctx);
    let mut d = 0u64;
    for (j, &y2) in sq.iter().enumerate() {
        d += sq[..j].iter().filter(|&&x2| m.sub(y2, x2) > half).count() as u64;
    }
    Ok((d, (d % 2) as u8))
}

/// `lambda_p` from the sign of the sine product
/// `prod_{i<j} sin(2 pi (a_j^2 - a_i^2) / p)` in floating point.
///
/// Each factor has magnitude at least `sin(pi/p)`; returns `None` when that
/// lower bound on the product underflows `f64`, since the sign would no
/// longer be trustworthy.
pub fn lambda_sine(ctx: &PrimeContext) -> Result<Option<u8>> {
    ctx.require_one_mod_eight()?;
    let p = ctx.p() as f64;
    let n = ctx.quarter() as f64;
    let log_bound = n * (n - 1.0) / 2.0 * (std::f64::consts::PI / p).sin().ln();
    if log_bound < f64::MIN_POSITIVE.ln() + 10.0 {
        return Ok(None);
    }
    let squares: Vec<f64> = half_residues(ctx)
        .iter()
        .map(|&x| (x * x) as f64)
        .collect();
    let mut prod = 1.0f64;
    for (j, &y2) in squares.iter().enumerate() {
        for &x2 in &squares[..j] {
            prod *= (2.0 * std::f64::consts::PI * (y2 - x2) / p).sin();
        }
    }
    Ok(Some(if prod > 0.0 { 0 } else { 1 }))
}

/// Fourth-power residues in `(0, p/2)`, ascending.
pub fn half_quartic_residues(ctx: &PrimeContext) -> Vec<u64> {
    (1..=ctx.p() / 2).filter(|&x| ctx.chi4_of(x) == 1).collect()
}

/// `epsilon_p`: ordered pairs `(x, y)` of fourth-power residues with
/// `x + y < p/2`, diagonal included.
pub fn epsilon(ctx: &PrimeContext) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    let q = half_quartic_residues(ctx);
    let limit = (ctx.p() - 1) / 2;
    // x + y < p/2  <=>  y <= (p - 1)/2 - x
    Ok(q.iter()
        .map(|&x| q.partition_point(|&y| y + x <= limit) as u64)
        .sum())
}
