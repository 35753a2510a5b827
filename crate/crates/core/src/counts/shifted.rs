use serde::{Deserialize, Serialize};

use crate::arith::{PrimeContext, QuarticClass};
use crate::error::{Error, Result};
use crate::identity::Identity;

use super::pairs::epsilon;

fn nonzero(m: i64, ctx: &PrimeContext) -> Result<u64> {
    let r = ctx.modulus().reduce_i64(m);
    if r == 0 {
        Err(Error::ZeroResidue { value: m, p: ctx.p() })
    } else {
        Ok(r)
    }
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

/// Brute-force statistics of `A_m = {1 <= x <= p-1 : (x/p) = ((x+m)/p) = 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmStats {
    pub m: u64,
    pub size: u64,
    /// `sum_{x in A_m} chi_4(x^2 + m x)`
    pub quartic_sum: i64,
    /// `#{x in A_m : chi_4(x) = 1}`
    pub quartic_count: u64,
}

fn scan_am(m: u64, ctx: &PrimeContext) -> AmStats {
    let md = ctx.modulus();
    let mut stats = AmStats {
        m,
        size: 0,
        quartic_sum: 0,
        quartic_count: 0,
    };
    for x in 1..ctx.p() {
        let y = md.add(x, m);
        if y == 0 || ctx.legendre_of(x) != 1 || ctx.legendre_of(y) != 1 {
            continue;
        }
        stats.size += 1;
        stats.quartic_sum += ctx.chi4_of(md.mul(x, y)) as i64;
        if ctx.chi4_of(x) == 1 {
            stats.quartic_count += 1;
        }
    }
    stats
}

pub fn am_stats(m: i64, ctx: &PrimeContext) -> Result<AmStats> {
    Ok(scan_am(nonzero(m, ctx)?, ctx))
}

pub fn a_m_set(m: i64, ctx: &PrimeContext) -> Result<Vec<u64>> {
    let m = nonzero(m, ctx)?;
    let md = ctx.modulus();
    Ok((1..ctx.p())
        .filter(|&x| {
            let y = md.add(x, m);
            y != 0 && ctx.legendre_of(x) == 1 && ctx.legendre_of(y) == 1
        })
        .collect())
}

/// `#A_m = (p - 3 - 2 (m/p)) / 4`.
pub fn a_m_size_closed(m: i64, ctx: &PrimeContext) -> Result<i64> {
    let m = nonzero(m, ctx)?;
    exact_div(ctx.p() as i64 - 3 - 2 * ctx.legendre_of(m) as i64, 4)
}

/// Brute-force `sum_{x in A_m} chi_4(x^2 + m x)`.
pub fn quartic_sum_over_am(m: i64, ctx: &PrimeContext) -> Result<i64> {
    ctx.require_one_mod_eight()?;
    am_stats(m, ctx).map(|s| s.quartic_sum)
}

/// `(-1 + a (m/p)) / 2`.
pub fn quartic_sum_closed(m: i64, ctx: &PrimeContext) -> Result<i64> {
    ctx.require_one_mod_eight()?;
    let m = nonzero(m, ctx)?;
    exact_div(-1 + ctx.a() * ctx.legendre_of(m) as i64, 2)
}

/// Brute-force `#{x in A_m : chi_4(x) = 1}`.
pub fn quartic_count_in_am(m: i64, ctx: &PrimeContext) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    am_stats(m, ctx).map(|s| s.quartic_count)
}

/// Four-case closed form of `#{x in A_m : chi_4(x) = 1}`:
/// `(p - 1 + 4b)/8` and `(p - 1 - 4b)/8` for `m` in class `2b/a` and
/// `-2b/a`, `(p - 7 + 2a)/8` and `(p - 3 - 2a)/8` for `chi_4(m) = 1` and
/// `m` a square but not a fourth power.
pub fn quartic_count_closed(m: i64, ctx: &PrimeContext) -> Result<i64> {
    ctx.require_one_mod_eight()?;
    let m = nonzero(m, ctx)?;
    let (p, a, b) = (ctx.p() as i64, ctx.a(), ctx.b() as i64);
    let numerator = match ctx.class_of(m).expect("nonzero") {
        QuarticClass::I => p - 1 + 4 * b,
        QuarticClass::MinusI => p - 1 - 4 * b,
        QuarticClass::One => p - 7 + 2 * a,
        QuarticClass::MinusOne => p - 3 - 2 * a,
    };
    exact_div(numerator, 8)
}

/// Counts over `L_m = {1 <= x <= p-1-m : (x/p) = ((x+m)/p) = 1}` split by
/// the quartic symbols of `x` and `x + m` (`r_pm`: `chi_4(x) = 1`,
/// `chi_4(x+m) = -1`, and so on).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RmRecord {
    pub m: u64,
    pub l_m_size: u64,
    pub a_m_size: u64,
    pub r_pp: u64,
    pub r_mm: u64,
    pub r_pm: u64,
    pub r_mp: u64,
    /// `#{x in L_m : chi_4(x) = 1}`
    pub quartic_in_l: u64,
    /// `sum_{x in L_m} chi_4(x^2 + m x)`
    pub quartic_sum_l: i64,
}

impl RmRecord {
    /// Identities involving `L_m` alone.
    pub fn identities(&self) -> [Identity; 6] {
        let r = |v: u64| v as i64;
        let signed = r(self.r_pp) + r(self.r_mm) - r(self.r_pm) - r(self.r_mp);
        [
            Identity::new("r+- = r-+", r(self.r_pm), r(self.r_mp)),
            Identity::new(
                "r++ + r-- + r+- + r-+ = #L_m",
                r(self.l_m_size),
                r(self.r_pp) + r(self.r_mm) + r(self.r_pm) + r(self.r_mp),
            ),
            Identity::new("r++ + r-- - r+- - r-+ = quartic sum", self.quartic_sum_l, signed),
            Identity::new("r++ + r+- = quartic count", r(self.quartic_in_l), r(self.r_pp) + r(self.r_pm)),
            Identity::new(
                "r-- + r-+ = #L_m - quartic count",
                r(self.l_m_size) - r(self.quartic_in_l),
                r(self.r_mm) + r(self.r_mp),
            ),
            // 4 r++ = 4 Q - #L + Sigma, kept in integers
            Identity::new(
                "r++ closed form (x4)",
                4 * r(self.quartic_in_l) - r(self.l_m_size) + self.quartic_sum_l,
                4 * r(self.r_pp),
            ),
        ]
    }
}

/// Identities pairing `L_m` with `L_{p-m}` against the `A_m` closed forms.
pub fn rm_pair_identities(
    rec: &RmRecord,
    partner: &RmRecord,
    ctx: &PrimeContext,
) -> Result<[Identity; 3]> {
    let m = rec.m as i64;
    Ok([
        Identity::new(
            "#L_m + #L_(p-m) = #A_m",
            a_m_size_closed(m, ctx)?,
            (rec.l_m_size + partner.l_m_size) as i64,
        ),
        Identity::new(
            "quartic sums over L_m, L_(p-m)",
            quartic_sum_closed(m, ctx)?,
            rec.quartic_sum_l + partner.quartic_sum_l,
        ),
        Identity::new(
            "quartic counts over L_m, L_(p-m)",
            quartic_count_closed(m, ctx)?,
            (rec.quartic_in_l + partner.quartic_in_l) as i64,
        ),
    ])
}

pub fn rm_record(m: u64, ctx: &PrimeContext) -> Result<RmRecord> {
    ctx.require_one_mod_eight()?;
    let p = ctx.p();
    if m == 0 || m >= p {
        return Err(Error::InvalidArgument(format!("m = {m} outside [1, p - 1]")));
    }
    let md = ctx.modulus();
    let mut rec = RmRecord {
        m,
        l_m_size: 0,
        a_m_size: scan_am(m, ctx).size,
        r_pp: 0,
        r_mm: 0,
        r_pm: 0,
        r_mp: 0,
        quartic_in_l: 0,
        quartic_sum_l: 0,
    };
    for x in 1..p - m {
        let y = x + m;
        if ctx.legendre_of(x) != 1 || ctx.legendre_of(y) != 1 {
            continue;
        }
        rec.l_m_size += 1;
        rec.quartic_sum_l += ctx.chi4_of(md.mul(x, y)) as i64;
        match (ctx.chi4_of(x) == 1, ctx.chi4_of(y) == 1) {
            (true, true) => rec.r_pp += 1,
            (false, false) => rec.r_mm += 1,
            (true, false) => rec.r_pm += 1,
            (false, true) => rec.r_mp += 1,
        }
        if ctx.chi4_of(x) == 1 {
            rec.quartic_in_l += 1;
        }
    }
    Ok(rec)
}

/// `sum_{0 < m < p/2} r_{p-m}^{++}`, which should equal `epsilon_p`.
pub fn epsilon_via_r(ctx: &PrimeContext) -> Result<u64> {
    let p = ctx.p();
    (1..=p / 2).try_fold(0u64, |acc, m| Ok(acc + rm_record(p - m, ctx)?.r_pp))
}

/// `(epsilon_p, epsilon via r-sum)`.
pub fn epsilon_identity(ctx: &PrimeContext) -> Result<Identity> {
    Ok(Identity::new(
        "epsilon = sum r_(p-m)^++",
        epsilon(ctx)? as i64,
        epsilon_via_r(ctx)? as i64,
    ))
}
