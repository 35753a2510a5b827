use serde::{Deserialize, Serialize};

use crate::arith::{divisors, euler_phi, is_prime, mobius, primitive_roots, Modulus};
use crate::error::{Error, Result};

/// Largest prime accepted by [`cyclotomic_split_check`].
pub const SPLIT_CHECK_BOUND: u64 = 500;

/// Coefficients, constant term first.
pub type IntPoly = Vec<i128>;

fn mul_binomial(poly: &mut IntPoly, d: usize) -> Result<()> {
    // poly * (x^d - 1)
    let old = std::mem::take(poly);
    let mut out = vec![0i128; old.len() + d];
    for (i, &c) in old.iter().enumerate() {
        out[i] = out[i].checked_sub(c).ok_or(Error::Overflow("expanding x^d - 1"))?;
        out[i + d] = out[i + d]
            .checked_add(c)
            .ok_or(Error::Overflow("expanding x^d - 1"))?;
    }
    *poly = out;
    Ok(())
}

fn div_binomial(poly: &mut IntPoly, d: usize) -> Result<()> {
    // long division by x^d - 1 from the top coefficient down
    if poly.len() <= d {
        return Err(Error::InvalidArgument("division by x^d - 1 is not exact".into()));
    }
    let qlen = poly.len() - d;
    let mut q = vec![0i128; qlen];
    let mut rem = poly.clone();
    for i in (0..qlen).rev() {
        let c = rem[i + d];
        q[i] = c;
        rem[i + d] = 0;
        rem[i] = rem[i].checked_add(c).ok_or(Error::Overflow("dividing by x^d - 1"))?;
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::InvalidArgument("division by x^d - 1 is not exact".into()));
    }
    *poly = q;
    Ok(())
}

/// `Phi_n(x) = prod_{d | n} (x^d - 1)^mu(n/d)` over the integers.
pub fn cyclotomic_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut poly: IntPoly = vec![1];
    let ds = divisors(n);
    for &d in &ds {
        if mobius(n / d) == 1 {
            mul_binomial(&mut poly, d as usize)?;
        }
    }
    for &d in &ds {
        if mobius(n / d) == -1 {
            div_binomial(&mut poly, d as usize)?;
        }
    }
    Ok(poly)
}

/// Result of comparing `Phi_(p-1) mod p` with `prod_{g primitive} (x - g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCheck {
    pub p: u64,
    pub degree: u64,
    pub root_count: u64,
    pub matches: bool,
}

pub fn cyclotomic_split(p: u64) -> Result<SplitCheck> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > SPLIT_CHECK_BOUND {
        return Err(Error::InvalidArgument(format!(
            "split check is limited to p <= {SPLIT_CHECK_BOUND}"
        )));
    }
    let m = Modulus::new(p);
    let phi: Vec<u64> = cyclotomic_poly(p - 1)?
        .into_iter()
        .map(|c| c.rem_euclid(p as i128) as u64)
        .collect();
    let roots = primitive_roots(p);
    let mut prod = vec![1u64];
    for &g in &roots {
        // prod * (x - g)
        let mut next = vec![0u64; prod.len() + 1];
        for (i, &c) in prod.iter().enumerate() {
            next[i + 1] = m.add(next[i + 1], c);
            next[i] = m.sub(next[i], m.mul(c, g));
        }
        prod = next;
    }
    Ok(SplitCheck {
        p,
        degree: (phi.len() - 1) as u64,
        root_count: roots.len() as u64,
        matches: phi == prod && roots.len() as u64 == euler_phi(p - 1),
    })
}

/// `Phi_(p-1)(x) = prod_{g primitive} (x - g) (mod p)`.
pub fn cyclotomic_split_check(p: u64) -> Result<bool> {
    cyclotomic_split(p).map(|c| c.matches)
}
