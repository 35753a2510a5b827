use std::cell::OnceCell;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{primitive_roots, PrimeContext};
use crate::counts::{
    a_m_size_closed, am_stats, epsilon_identity, n_counts_all, n_sum_closed, omega_square_products,
    proof_sums, quartic_count_closed, quartic_sum_closed, rm_pair_identities, rm_record,
    sign_params, AmStats, ProofSums,
};
use crate::cyclo::{cyclotomic_split, denominator_floor_form, denominator_product, g_poly_value};
use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::jacobsthal::{jacobsthal, phi2_closed};
use crate::perm::{pairing_from, s_product_check, theorem_b_record, Sign, TauAnalysis};

use super::config::{Check, RootsMode, ScanConfig};
use super::record::CheckRecord;

/// `expected` value recorded when a closed form has a non-integral value.
pub const NON_INTEGRAL: i64 = i64::MIN;

#[derive(Clone, Copy)]
enum Kind {
    T,
    M,
}

impl Kind {
    fn salt(self) -> u64 {
        match self {
            Kind::T => 0x7474_7474,
            Kind::M => 0x6d6d_6d6d,
        }
    }
}

fn closed(r: Result<i64>) -> Result<i64> {
    match r {
        Err(Error::NotIntegral { .. }) => Ok(NON_INTEGRAL),
        other => other,
    }
}

/// Checks for one prime, sharing the per-prime work between them.
pub(crate) struct PrimeJob<'a> {
    cfg: &'a ScanConfig,
    ctx: &'a PrimeContext,
    t_items: OnceCell<Vec<u64>>,
    m_items: OnceCell<Vec<u64>>,
    am: OnceCell<Vec<AmStats>>,
    analysis: OnceCell<TauAnalysis<'a>>,
    signs: OnceCell<Vec<(u64, Sign)>>,
}

impl<'a> PrimeJob<'a> {
    pub(crate) fn new(cfg: &'a ScanConfig, ctx: &'a PrimeContext) -> Self {
        PrimeJob {
            cfg,
            ctx,
            t_items: OnceCell::new(),
            m_items: OnceCell::new(),
            am: OnceCell::new(),
            analysis: OnceCell::new(),
            signs: OnceCell::new(),
        }
    }

    fn p(&self) -> u64 {
        self.ctx.p()
    }

    fn signed(&self, x: u64) -> i64 {
        self.ctx.modulus().signed(x)
    }

    fn sample(&self, kind: Kind) -> Vec<u64> {
        let p = self.p();
        let n = (p - 1) as usize;
        if self.cfg.enumerates(p) || n <= self.cfg.sample_size {
            return (1..p).collect();
        }
        let seed = self.cfg.seed ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ kind.salt();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked: Vec<u64> = rand::seq::index::sample(&mut rng, n, self.cfg.sample_size)
            .into_iter()
            .map(|i| i as u64 + 1)
            .collect();
        picked.sort_unstable();
        picked
    }

    fn items(&self, kind: Kind) -> &[u64] {
        let cell = match kind {
            Kind::T => &self.t_items,
            Kind::M => &self.m_items,
        };
        cell.get_or_init(|| self.sample(kind))
    }

    fn am(&self) -> Result<&[AmStats]> {
        if self.am.get().is_none() {
            let stats = self
                .items(Kind::M)
                .iter()
                .map(|&m| am_stats(m as i64, self.ctx))
                .collect::<Result<Vec<_>>>()?;
            let _ = self.am.set(stats);
        }
        Ok(self.am.get().expect("set above"))
    }

    fn analysis(&self) -> Result<&TauAnalysis<'a>> {
        if self.analysis.get().is_none() {
            let _ = self.analysis.set(TauAnalysis::new(self.ctx)?);
        }
        Ok(self.analysis.get().expect("set above"))
    }

    fn signs(&self) -> Result<&[(u64, Sign)]> {
        if self.signs.get().is_none() {
            let s = self.analysis()?.signs_all();
            let _ = self.signs.set(s);
        }
        Ok(self.signs.get().expect("set above"))
    }

    fn roots(&self) -> Vec<u64> {
        match self.cfg.roots_mode {
            RootsMode::First => vec![self.ctx.generator()],
            RootsMode::All => primitive_roots(self.p()),
        }
    }

    /// Summary plus failure records for identities evaluated at each item.
    fn sweep<F>(&self, check: Check, kind: Kind, mut f: F) -> Result<Vec<CheckRecord>>
    where
        F: FnMut(usize, u64) -> Result<Vec<Identity>>,
    {
        let items = self.items(kind);
        let mut names: Vec<&'static str> = Vec::new();
        let mut agreed: Vec<i64> = Vec::new();
        let mut failures: Vec<Vec<CheckRecord>> = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            for (k, id) in f(i, x)?.into_iter().enumerate() {
                if k == names.len() {
                    names.push(id.name);
                    agreed.push(0);
                    failures.push(Vec::new());
                }
                if id.holds() {
                    agreed[k] += 1;
                } else {
                    let r = CheckRecord::new(self.p(), check.name(), id.name, id.expected, id.actual);
                    failures[k].push(match kind {
                        Kind::T => r.with_t(x as i64),
                        Kind::M => r.with_m(x),
                    });
                }
            }
        }
        let mut out = Vec::new();
        for (k, name) in names.into_iter().enumerate() {
            out.push(CheckRecord::new(
                self.p(),
                check.name(),
                name,
                items.len() as i64,
                agreed[k],
            ));
            out.append(&mut failures[k]);
        }
        Ok(out)
    }

    pub(crate) fn run(&self, check: Check) -> Result<Vec<CheckRecord>> {
        let ctx = self.ctx;
        let p = self.p();
        let name = check.name();
        match check {
            Check::Lemma21 => self.sweep(check, Kind::M, |_, m| {
                let m = m as i64;
                let j1 = jacobsthal(m, 1, ctx)?;
                let j2 = jacobsthal(m, 2, ctx)?;
                let j4 = jacobsthal(m, 4, ctx)?;
                Ok(vec![
                    Identity::new("phi_2 closed form", phi2_closed(m, ctx)?, j2.phi),
                    Identity::new("psi_2 = psi_1 + phi_1", j1.psi + j1.phi, j2.psi),
                    Identity::new("psi_4 = psi_2 + phi_2", j2.psi + j2.phi, j4.psi),
                ])
            }),
            Check::Lemma22 => {
                let hist = n_counts_all(ctx)?;
                self.sweep(check, Kind::T, |_, t| {
                    let sum = hist[t as usize] + hist[(p - t) as usize];
                    let mut ids = vec![Identity::new(
                        "N(t)+N(-t)",
                        closed(n_sum_closed(t as i64, ctx))?,
                        sum as i64,
                    )];
                    let expected = ProofSums::expected(t as i64, ctx)?;
                    ids.extend(proof_sums(t as i64, ctx)?.identities(&expected));
                    Ok(ids)
                })
            }
            Check::OmegaProducts => {
                let sq = omega_square_products(ctx)?;
                let sp = sign_params(ctx, Some(ctx.generator()))?;
                Ok(sq
                    .identities()
                    .into_iter()
                    .chain(sp.identities(ctx))
                    .map(|id| {
                        CheckRecord::new(
                            p,
                            name,
                            id.name,
                            self.signed(id.expected as u64),
                            self.signed(id.actual as u64),
                        )
                    })
                    .collect())
            }
            Check::Lemma23 => {
                let an = self.analysis()?;
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    an.case_label(),
                    self.signed(an.lemma23().value),
                    self.signed(an.w_product()),
                )])
            }
            Check::Lemma31 => {
                let am = self.am()?;
                self.sweep(check, Kind::M, |i, m| {
                    Ok(vec![Identity::new(
                        "#A_m",
                        closed(a_m_size_closed(m as i64, ctx))?,
                        am[i].size as i64,
                    )])
                })
            }
            Check::Lemma32 => {
                let am = self.am()?;
                self.sweep(check, Kind::M, |i, m| {
                    Ok(vec![Identity::new(
                        "sum of chi_4(x^2+mx) over A_m",
                        closed(quartic_sum_closed(m as i64, ctx))?,
                        am[i].quartic_sum,
                    )])
                })
            }
            Check::Lemma33 => {
                let am = self.am()?;
                self.sweep(check, Kind::M, |i, m| {
                    Ok(vec![Identity::new(
                        "#{x in A_m : chi_4(x) = 1}",
                        closed(quartic_count_closed(m as i64, ctx))?,
                        am[i].quartic_count as i64,
                    )])
                })
            }
            Check::Eq31 => {
                let mut out = self.sweep(check, Kind::M, |_, m| {
                    let rec = rm_record(m, ctx)?;
                    let partner = rm_record(p - m, ctx)?;
                    let mut ids = rec.identities().to_vec();
                    ids.extend(rm_pair_identities(&rec, &partner, ctx)?);
                    Ok(ids)
                })?;
                if self.cfg.enumerates(p) {
                    let id = epsilon_identity(ctx)?;
                    out.push(CheckRecord::new(p, name, id.name, id.expected, id.actual));
                }
                Ok(out)
            }
            Check::SProduct => {
                let s = s_product_check(ctx)?;
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    "S_p/W_p = sgn(rho_p)",
                    s.direct.into(),
                    self.signed(s.ratio),
                )])
            }
            Check::ThmA => {
                let an = self.analysis()?;
                let records = match self.cfg.roots_mode {
                    RootsMode::All => an.records_all(),
                    RootsMode::First => vec![an.record(ctx.generator())?],
                };
                let opt = |s: Option<Sign>| s.map_or(0, i64::from);
                Ok(records
                    .into_iter()
                    .flat_map(|r| {
                        let g = r.g.expect("per-root record");
                        [
                            CheckRecord::new(
                                p,
                                name,
                                format!("{} published", r.case),
                                r.direct_sign.into(),
                                opt(r.published_prediction),
                            )
                            .with_g(g),
                            CheckRecord::new(
                                p,
                                name,
                                format!("{} recomposed", r.case),
                                r.direct_sign.into(),
                                opt(r.recomposed_prediction),
                            )
                            .with_g(g),
                        ]
                    })
                    .collect())
            }
            Check::ThmB => {
                let r = theorem_b_record(ctx)?;
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    "sgn(rho_p) = (-1)^(lambda+epsilon)",
                    r.published_prediction.map_or(0, i64::from),
                    r.direct_sign.into(),
                )])
            }
            Check::GIndependence => {
                let signs = self.signs()?;
                let first = signs.first().map(|s| s.1);
                let same = signs.iter().filter(|s| Some(s.1) == first).count();
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    "constant sign over primitive roots",
                    signs.len() as i64,
                    same as i64,
                )])
            }
            Check::Pairing => {
                let s = pairing_from(ctx, self.signs()?);
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    "sgn(tau(g)) sgn(tau(1/g)) = -1",
                    s.roots as i64,
                    s.anti_paired as i64,
                )])
            }
            Check::Balance => {
                let signs = self.signs()?;
                let plus = signs.iter().filter(|s| s.1 == Sign::Plus).count() as i64;
                Ok(vec![CheckRecord::new(
                    p,
                    name,
                    "#{+1} = #{-1}",
                    signs.len() as i64 - plus,
                    plus,
                )])
            }
            Check::CycloDenominator => {
                let mut out = Vec::new();
                let floor_case = format!("floor form, p=={} mod 16", ctx.residue_class_16());
                for g in self.roots() {
                    let direct = self.signed(denominator_product(ctx, g)?);
                    let gv = self.signed(g_poly_value(ctx, g)?);
                    let fl = self.signed(denominator_floor_form(ctx, g)?);
                    out.push(CheckRecord::new(p, name, "G(g)", gv, direct).with_g(g));
                    out.push(CheckRecord::new(p, name, floor_case.clone(), fl, direct).with_g(g));
                }
                Ok(out)
            }
            Check::CycloSplit => {
                let s = cyclotomic_split(p)?;
                Ok(vec![
                    CheckRecord::new(p, name, "Phi_(p-1) = prod (x - g) mod p", 1, s.matches as i64),
                    CheckRecord::new(p, name, "deg Phi_(p-1) = #roots", s.root_count as i64, s.degree as i64),
                ])
            }
        }
    }
}
