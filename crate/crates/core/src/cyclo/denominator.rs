use crate::arith::PrimeContext;
use crate::counts::sign_residue;
use crate::error::Result;
use crate::perm::vandermonde;

use super::pz::nu2;

/// `G(g) mod p` with `n = (p-1)/4`: `(-1)^((n-2)/4) n^(n/2)` when
/// `nu_2(n) = 1`, `(-1)^((n-4)/4) n^(n/2) g^((p-1)/4)` otherwise.
pub fn g_poly_value(ctx: &PrimeContext, g: u64) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    let g = ctx.check_primitive_root(g)?;
    Ok(g_poly_unchecked(ctx, g))
}

pub(crate) fn g_poly_unchecked(ctx: &PrimeContext, g: u64) -> u64 {
    let m = ctx.modulus();
    let n = ctx.quarter();
    let mag = m.pow(n % ctx.p(), n / 2);
    if nu2(n) == 1 {
        m.mul(sign_residue(((n - 2) / 4) as i64, m), mag)
    } else {
        let twist = m.pow(g, n);
        m.mul(m.mul(sign_residue(((n - 4) / 4) as i64, m), mag), twist)
    }
}

/// `prod_{1<=i<j<=(p-1)/4} (g^(4j) - g^(4i)) mod p`, directly.
pub fn denominator_product(ctx: &PrimeContext, g: u64) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    let g = ctx.check_primitive_root(g)?;
    Ok(vandermonde(&crate::perm::seq_e(ctx, g), ctx.modulus()))
}

/// The denominator value as printed in the proof of the sign formula:
/// `(-1)^(floor(p/16)+1) chi_4(2)` for `p = 9 mod 16` and
/// `(-1)^floor(p/16) chi_4(2) g^((p-1)/4)` for `p = 1 mod 16`.
pub fn denominator_floor_form(ctx: &PrimeContext, g: u64) -> Result<u64> {
    ctx.require_one_mod_eight()?;
    let g = ctx.check_primitive_root(g)?;
    let m = ctx.modulus();
    let floor = (ctx.p() / 16) as i64;
    let chi = sign_residue((ctx.chi4_of(2) == -1) as i64, m);
    Ok(if ctx.residue_class_16() == 9 {
        m.mul(sign_residue(floor + 1, m), chi)
    } else {
        let twist = m.pow(g, ctx.quarter());
        m.mul(m.mul(sign_residue(floor, m), chi), twist)
    })
}
