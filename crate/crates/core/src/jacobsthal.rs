//! Jacobsthal sums
//!
//! ```text
//! phi_k(m) = sum_{x=1}^{p-1} (x/p) ((x^k + m)/p)
//! psi_k(m) = sum_{x=1}^{p-1} ((x^k + m)/p)
//! ```
//!
//! evaluated by direct summation over the cached Legendre table, together
//! with the four-valued closed form of `phi_2` and the doubling identity
//! `psi_2k = psi_k + phi_k`.

use serde::{Deserialize, Serialize};

use crate::arith::{PrimeContext, QuarticClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobsthalResult {
    pub p: u64,
    pub k: u64,
    /// Reduced into `[1, p - 1]`.
    pub m: u64,
    pub phi: i64,
    pub psi: i64,
}

fn reduce_nonzero(m: i64, ctx: &PrimeContext) -> Result<u64> {
    let r = ctx.modulus().reduce_i64(m);
    if r == 0 {
        Err(Error::ZeroResidue { value: m, p: ctx.p() })
    } else {
        Ok(r)
    }
}

/// Both sums in one pass.
pub fn jacobsthal(m: i64, k: u64, ctx: &PrimeContext) -> Result<JacobsthalResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let m_red = reduce_nonzero(m, ctx)?;
    let modulus = ctx.modulus();
    let (mut phi, mut psi) = (0i64, 0i64);
    for x in 1..ctx.p() {
        let xk = match k {
            1 => x,
            2 => modulus.mul(x, x),
            4 => {
                let x2 = modulus.mul(x, x);
                modulus.mul(x2, x2)
            }
            _ => modulus.pow(x, k),
        };
        let outer = ctx.legendre_of(modulus.add(xk, m_red)) as i64;
        psi += outer;
        phi += ctx.legendre_of(x) as i64 * outer;
    }
    Ok(JacobsthalResult {
        p: ctx.p(),
        k,
        m: m_red,
        phi,
        psi,
    })
}

pub fn phi_k(m: i64, k: u64, ctx: &PrimeContext) -> Result<i64> {
    jacobsthal(m, k, ctx).map(|r| r.phi)
}

pub fn psi_k(m: i64, k: u64, ctx: &PrimeContext) -> Result<i64> {
    jacobsthal(m, k, ctx).map(|r| r.psi)
}

/// `phi_2(m)` from the quartic class of `m`: `2a`, `4b`, `-2a`, `-4b` for the
/// classes `1`, `2b/a`, `-1`, `-2b/a`.
pub fn phi2_closed(m: i64, ctx: &PrimeContext) -> Result<i64> {
    let r = reduce_nonzero(m, ctx)?;
    let class = ctx.class_of(r).expect("nonzero");
    Ok(phi2_for_class(class, ctx))
}

pub(crate) fn phi2_for_class(class: QuarticClass, ctx: &PrimeContext) -> i64 {
    let (a, b) = (ctx.a(), ctx.b() as i64);
    match class {
        QuarticClass::One => 2 * a,
        QuarticClass::I => 4 * b,
        QuarticClass::MinusOne => -2 * a,
        QuarticClass::MinusI => -4 * b,
    }
}

/// `psi_2k(m) == psi_k(m) + phi_k(m)`, evaluated by brute force. Returns
/// `false` on a violation or when `p | m`.
pub fn check_doubling(m: i64, k: u64, ctx: &PrimeContext) -> bool {
    match (jacobsthal(m, k, ctx), jacobsthal(m, 2 * k, ctx)) {
        (Ok(base), Ok(doubled)) => doubled.psi == base.psi + base.phi,
        _ => false,
    }
}
