use serde::{Deserialize, Serialize};

use crate::arith::PrimeContext;
use crate::counts::half_residues;
use crate::error::{Error, Result};

use super::sign::{perm_sign, Sign};

/// The three arrangements of the fourth-power residues in `(0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSequences {
    pub p: u64,
    pub g: Option<u64>,
    /// `{a_i^2}_p` for the quadratic residues `a_1 < ... < a_n` in `(0, p/2)`.
    pub seq_d: Vec<u64>,
    /// `{g^(4i)}_p` for `i = 1..n`.
    pub seq_e: Option<Vec<u64>>,
    /// Fourth-power residues in ascending order.
    pub seq_f: Vec<u64>,
}

pub(crate) fn seq_d(ctx: &PrimeContext) -> Vec<u64> {
    let m = ctx.modulus();
    half_residues(ctx).into_iter().map(|x| m.mul(x, x)).collect()
}

pub(crate) fn seq_e(ctx: &PrimeContext, g: u64) -> Vec<u64> {
    let m = ctx.modulus();
    let h = m.pow(g, 4);
    let mut v = 1;
    (0..ctx.quarter())
        .map(|_| {
            v = m.mul(v, h);
            v
        })
        .collect()
}

pub(crate) fn seq_f(ctx: &PrimeContext) -> Vec<u64> {
    (1..ctx.p()).filter(|&x| ctx.chi4_of(x) == 1).collect()
}

pub fn build_sequences(ctx: &PrimeContext, g: Option<u64>) -> Result<ResidueSequences> {
    ctx.require_one_mod_eight()?;
    let g = g.map(|g| ctx.check_primitive_root(g)).transpose()?;
    let seqs = ResidueSequences {
        p: ctx.p(),
        g,
        seq_d: seq_d(ctx),
        seq_e: g.map(|g| seq_e(ctx, g)),
        seq_f: seq_f(ctx),
    };
    let mut sorted = seqs.seq_d.clone();
    sorted.sort_unstable();
    let mut others = vec![&seqs.seq_f];
    others.extend(seqs.seq_e.as_ref());
    for other in others {
        let mut o = other.clone();
        o.sort_unstable();
        if o != sorted {
            return Err(Error::NotAPermutation(format!(
                "residue sequences differ as multisets for p = {}",
                ctx.p()
            )));
        }
    }
    Ok(seqs)
}

/// `sgn(tau_p(g))`: the sign taking `seq_d` to `seq_e(g)`.
pub fn sgn_tau_direct(ctx: &PrimeContext, g: u64) -> Result<Sign> {
    let s = build_sequences(ctx, Some(g))?;
    perm_sign(&s.seq_d, s.seq_e.as_ref().expect("requested"))
}

/// `sgn(rho_p)`: the sign taking `seq_d` to `seq_f`.
pub fn sgn_rho_direct(ctx: &PrimeContext) -> Result<Sign> {
    let s = build_sequences(ctx, None)?;
    perm_sign(&s.seq_d, &s.seq_f)
}

/// Reusable evaluator of `sgn(tau_p(g))` for many roots of one prime.
///
/// Holds the position of each fourth-power residue in `seq_d`; each root
/// then costs `n` multiplications and a cycle count of the inverse index map,
/// `sgn = (-1)^(n - cycles)`. This is a second route to the same sign as the
/// inversion count in [`perm_sign`].
#[derive(Clone, Debug)]
pub struct TauKernel {
    p: u64,
    pos: Vec<u32>,
}

impl TauKernel {
    pub fn new(ctx: &PrimeContext) -> Result<Self> {
        ctx.require_one_mod_eight()?;
        let mut pos = vec![u32::MAX; ctx.p() as usize];
        for (i, v) in seq_d(ctx).into_iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        Ok(TauKernel { p: ctx.p(), pos })
    }

    /// Caller guarantees `g` is a primitive root of the kernel's prime.
    pub fn sign(&self, ctx: &PrimeContext, g: u64) -> Sign {
        debug_assert_eq!(ctx.p(), self.p);
        let m = ctx.modulus();
        let h = m.pow(g, 4);
        let mut v = 1;
        let idx: Vec<u32> = (0..ctx.quarter())
            .map(|_| {
                v = m.mul(v, h);
                self.pos[v as usize]
            })
            .collect();
        let mut seen = vec![false; idx.len()];
        let mut cycles = 0usize;
        for start in 0..idx.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = idx[i] as usize;
            }
        }
        Sign::from_parity((idx.len() - cycles) % 2 == 1)
    }
}
