//! `biquad`: scans and per-prime reports for fourth-power residue identities.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use biquad_core::arith::primitive_roots;
use biquad_core::counts::{
    am_stats, a_m_size_closed, epsilon, lambda_and_d, n_count, n_sum_closed, omega_sets,
    proof_sums, quartic_count_closed, quartic_sum_closed, rm_record, ProofSums,
};
use biquad_core::cyclo::{
    cyclotomic_split, denominator_floor_form, denominator_product, g_poly_value, p_closed,
    p_eval_numeric, relative_error, NUMERIC_BOUND,
};
use biquad_core::jacobsthal::{jacobsthal, phi2_closed};
use biquad_core::perm::{build_sequences, theorem_b_record, Sign, TauAnalysis};
use biquad_core::scan::{
    report_summarize, run_scan, verify, write_jsonl, Check, ClassFilter, OutputFormat, RootsMode,
    ScanConfig, DEFAULT_SEED,
};
use biquad_core::{Error, PrimeContext, Result};

#[derive(Parser)]
#[command(name = "biquad", version, about = "Check closed forms for fourth-power residues against brute force")]
struct Cli {
    /// Worker threads for scans.
    #[arg(long, global = true, env = "BIQUAD_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Seed for the sampled values of t and m.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable check for one prime.
    Verify(VerifyArgs),
    /// Run checks over a range of primes and write the records.
    Scan(ScanArgs),
    /// Jacobsthal sums phi_k(m), psi_k(m).
    Jacobsthal(JacobsthalArgs),
    /// Pair counts, Omega sets and the A_m family.
    Counts(CountsArgs),
    /// Permutation signs and their predictions.
    Perm(PermArgs),
    /// P(zeta) closed form, G(g) and the cyclotomic split.
    Cyclo(CycloArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    prime: u64,
    /// Visit every primitive root in the per-root checks.
    #[arg(long)]
    all_roots: bool,
    /// Enumerate every t and m even for large p.
    #[arg(long)]
    exhaustive: bool,
    /// Print the records as JSON lines instead of the summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 17)]
    min: u64,
    #[arg(long, default_value_t = 10_000)]
    max: u64,
    /// 1mod8, 9mod16, 1mod16 or all (every p = 1 mod 4).
    #[arg(long, default_value = "1mod8")]
    filter: ClassFilter,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Roots for the per-root checks: first or all.
    #[arg(long, default_value = "first")]
    roots: RootsMode,
    /// Enumerate every t and m even for p >= 2000.
    #[arg(long)]
    exhaustive: bool,
    /// Output file for the records.
    #[arg(long)]
    out: PathBuf,
    /// jsonl or csv.
    #[arg(long, default_value = "jsonl")]
    format: OutputFormat,
    /// Skip the summary table.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct JacobsthalArgs {
    #[arg(long)]
    prime: u64,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, default_value_t = 2)]
    k: u64,
}

#[derive(Args)]
struct CountsArgs {
    #[arg(long)]
    prime: u64,
    /// Report N_p(t) + N_p(-t) and the sums S1..S4 for this t.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    /// Report A_m, L_m and the r counts for this m.
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args)]
struct PermArgs {
    #[arg(long)]
    prime: u64,
    #[arg(long, conflicts_with = "all_roots")]
    root: Option<u64>,
    #[arg(long)]
    all_roots: bool,
    #[arg(long)]
    print_sequences: bool,
}

#[derive(Args)]
struct CycloArgs {
    /// Closed form and numeric value of P(zeta) for this n.
    #[arg(long, conflicts_with = "prime")]
    n: Option<u64>,
    /// With --n: the k in zeta^k, so that p - 1 = k n.
    #[arg(long, default_value_t = 1, requires = "n")]
    k: u64,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, requires = "prime")]
    root: Option<u64>,
    /// With --prime: compare Phi_(p-1) mod p against the primitive roots.
    #[arg(long, requires = "prime")]
    split: bool,
}

fn fmt_sign(s: Option<Sign>) -> String {
    s.map_or_else(|| "n/a".to_string(), |s| s.to_string())
}

fn header(out: &mut impl Write, ctx: &PrimeContext) -> io::Result<()> {
    write!(out, "p = {} (a = {}, b = {}", ctx.p(), ctx.a(), ctx.b())?;
    if ctx.is_one_mod_eight() {
        write!(
            out,
            ", p == {} mod 16, chi4(2) = {:+}",
            ctx.residue_class_16(),
            ctx.chi4_of(2)
        )?;
    }
    writeln!(out, ")")
}

fn run_verify(cli: &Cli, a: &VerifyArgs, out: &mut impl Write) -> Result<()> {
    let report = verify(a.prime, a.all_roots, a.exhaustive, cli.seed)?;
    if a.json {
        write_jsonl(out, &report.records)?;
    } else {
        write!(out, "{}", report_summarize(&report))?;
    }
    Ok(())
}

fn run_scan_cmd(cli: &Cli, a: &ScanArgs, out: &mut impl Write) -> Result<()> {
    let cfg = ScanConfig {
        min_p: a.min,
        max_p: a.max,
        class_filter: a.filter,
        checks: Check::parse_list(&a.checks)?,
        roots_mode: a.roots,
        workers: cli.workers,
        output_path: Some(a.out.clone()),
        output_format: a.format,
        seed: cli.seed,
        exhaustive: a.exhaustive,
        ..ScanConfig::default()
    };
    let report = run_scan(&cfg)?;
    if !a.quiet {
        write!(out, "{}", report_summarize(&report))?;
    }
    Ok(())
}

fn run_jacobsthal(a: &JacobsthalArgs, out: &mut impl Write) -> Result<()> {
    let ctx = PrimeContext::new(a.prime)?;
    let r = jacobsthal(a.m, a.k, &ctx)?;
    writeln!(out, "phi_{}({}) = {}", a.k, r.m, r.phi)?;
    writeln!(out, "psi_{}({}) = {}", a.k, r.m, r.psi)?;
    if a.k == 2 {
        writeln!(out, "phi_2 closed form = {}", phi2_closed(a.m, &ctx)?)?;
    }
    Ok(())
}

fn run_counts(a: &CountsArgs, out: &mut impl Write) -> Result<()> {
    let ctx = PrimeContext::new(a.prime)?;
    header(out, &ctx)?;
    if ctx.is_one_mod_eight() {
        let sets = omega_sets(&ctx)?;
        writeln!(out, "Omega_1 = {:?}", sets.omega_1)?;
        writeln!(out, "Omega_-1 = {:?}", sets.omega_minus1)?;
        let (d, lambda) = lambda_and_d(&ctx)?;
        writeln!(out, "d_p = {d}, lambda_p = {lambda}, epsilon_p = {}", epsilon(&ctx)?)?;
    }
    if let Some(t) = a.t {
        let n = n_count(t, &ctx)? + n_count(-t, &ctx)?;
        writeln!(out, "N(t) + N(-t) = {n}, closed form = {}", n_sum_closed(t, &ctx)?)?;
        let s = proof_sums(t, &ctx)?;
        let e = ProofSums::expected(t, &ctx)?;
        for id in s.identities(&e) {
            writeln!(out, "  {id}")?;
        }
    }
    if let Some(m) = a.m {
        let st = am_stats(m as i64, &ctx)?;
        writeln!(out, "#A_m = {}, closed form = {}", st.size, a_m_size_closed(m as i64, &ctx)?)?;
        if ctx.is_one_mod_eight() {
            writeln!(
                out,
                "sum chi4(x^2+mx) over A_m = {}, closed form = {}",
                st.quartic_sum,
                quartic_sum_closed(m as i64, &ctx)?
            )?;
            writeln!(
                out,
                "#{{x in A_m : chi4(x) = 1}} = {}, closed form = {}",
                st.quartic_count,
                quartic_count_closed(m as i64, &ctx)?
            )?;
            let r = rm_record(m, &ctx)?;
            writeln!(
                out,
                "#L_m = {}, r++ = {}, r-- = {}, r+- = {}, r-+ = {}",
                r.l_m_size, r.r_pp, r.r_mm, r.r_pm, r.r_mp
            )?;
        }
    }
    Ok(())
}

fn run_perm(a: &PermArgs, out: &mut impl Write) -> Result<()> {
    let ctx = PrimeContext::new(a.prime)?;
    header(out, &ctx)?;
    let an = TauAnalysis::new(&ctx)?;
    let b = theorem_b_record(&ctx)?;
    writeln!(
        out,
        "sgn(rho_p) = {}, (-1)^(lambda+epsilon) = {}, S_p/W_p = {}",
        b.direct_sign,
        fmt_sign(b.published_prediction),
        fmt_sign(b.recomposed_prediction)
    )?;
    writeln!(
        out,
        "W_p = {}, closed form = {} [{}]",
        an.w_product(),
        an.lemma23().value,
        an.case_label()
    )?;
    let roots = if a.all_roots {
        primitive_roots(ctx.p())
    } else {
        vec![a.root.unwrap_or(ctx.generator())]
    };
    if a.print_sequences {
        let s = build_sequences(&ctx, None)?;
        writeln!(out, "seq_d = {:?}", s.seq_d)?;
        writeln!(out, "seq_f = {:?}", s.seq_f)?;
    }
    writeln!(out, "{:>8} {:>7} {:>10} {:>11}", "g", "direct", "published", "recomposed")?;
    for g in roots {
        let r = an.record(g)?;
        writeln!(
            out,
            "{:>8} {:>7} {:>10} {:>11}",
            g,
            r.direct_sign.to_string(),
            fmt_sign(r.published_prediction),
            fmt_sign(r.recomposed_prediction)
        )?;
        if a.print_sequences {
            let s = build_sequences(&ctx, Some(g))?;
            writeln!(out, "  seq_e = {:?}", s.seq_e.unwrap_or_default())?;
        }
    }
    Ok(())
}

fn run_cyclo(a: &CycloArgs, out: &mut impl Write) -> Result<()> {
    if let Some(n) = a.n {
        let c = p_closed(n)?;
        match &c.magnitude {
            Some(mag) => writeln!(out, "P(zeta) = {} * {}", c.phase, mag)?,
            None => writeln!(out, "P(zeta) = {} * sqrt({})", c.phase, c.magnitude_sq)?,
        }
        if n <= NUMERIC_BOUND {
            let z = p_eval_numeric(n, a.k, n * a.k)?;
            writeln!(
                out,
                "numeric = {:.6e} + {:.6e} i, relative error {:.3e}",
                z.re,
                z.im,
                relative_error(z, &c)
            )?;
        }
        return Ok(());
    }
    let Some(p) = a.prime else {
        writeln!(out, "nothing to do: pass --n or --prime")?;
        return Ok(());
    };
    if a.split {
        let s = cyclotomic_split(p)?;
        writeln!(
            out,
            "Phi_{}(x) mod {p}: degree {}, {} primitive roots, splits: {}",
            p - 1,
            s.degree,
            s.root_count,
            s.matches
        )?;
    }
    if a.root.is_some() || !a.split {
        let ctx = PrimeContext::new(p)?;
        let g = a.root.unwrap_or(ctx.generator());
        writeln!(out, "G({g}) = {}", g_poly_value(&ctx, g)?)?;
        writeln!(out, "direct product = {}", denominator_product(&ctx, g)?)?;
        writeln!(out, "floor form = {}", denominator_floor_form(&ctx, g)?)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Verify(a) => run_verify(cli, a, &mut out),
        Command::Scan(a) => run_scan_cmd(cli, a, &mut out),
        Command::Jacobsthal(a) => run_jacobsthal(a, &mut out),
        Command::Counts(a) => run_counts(a, &mut out),
        Command::Perm(a) => run_perm(a, &mut out),
        Command::Cyclo(a) => run_cyclo(a, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        // stdout closed early, e.g. piped into `head`
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
