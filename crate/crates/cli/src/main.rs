//! Command-line front end: verification grids, functional-equation
//! checks, value tables, kernel timings, and the discrepancy ledger.
//!
//! Exit codes: 0 when everything evaluated is Equal or NotApplicable,
//! 1 when any verdict (or series check) disagrees, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use fibbern_core::bernoulli::{
    bernoulli_akiyama_tanigawa, bernoulli_number, bernoulli_sequence_recurrence,
};
use fibbern_core::egf::{check_functional_equation, FunctionalEq};
use fibbern_core::exact::{rational_string, QuadExt};
use fibbern_core::identities::{
    discrepancy_ledger, sample_points, verify_grid_opts, EvalContext, GridSpec, IdentityId,
};
use fibbern_core::sequences::{fib, fib_iterative, lucas};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "fibbern",
    version,
    about = "Exact verification of Fibonacci-Lucas-Bernoulli identities over Q(sqrt 5)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate identity grids and report Equal/Unequal/NotApplicable counts
    Verify(VerifyArgs),
    /// Check a generating-function equation coefficient-exactly
    Series(SeriesArgs),
    /// Print a value table (bernoulli, fib, lucas)
    Table(TableArgs),
    /// Time the computational kernels (wall time only)
    Bench(BenchArgs),
    /// Print the discrepancy ledger with its machine evidence
    Ledger(LedgerArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Identity tag globs, comma separated (e.g. "L1*,T9A")
    #[arg(long, value_delimiter = ',', default_value = "*")]
    ids: Vec<String>,
    #[arg(long, default_value_t = 30)]
    n_max: u32,
    #[arg(long, default_value_t = 8)]
    j_max: i64,
    /// m range as LO:HI
    #[arg(long, default_value = "-5:5", value_parser = parse_m_range)]
    m_range: (i64, i64),
    #[arg(long, default_value_t = 6)]
    q_max: i64,
    /// EGF truncation order echoed into the report
    #[arg(long, default_value_t = 32)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (defaults to the available parallelism)
    #[arg(long, env = "FIBBERN_JOBS")]
    jobs: Option<usize>,
    /// Testing aid: corrupt this identity's right-hand side so the
    /// exit-code contract can be exercised
    #[arg(long, value_name = "TAG")]
    inject_fault: Option<String>,
}

#[derive(clap::Args)]
struct SeriesArgs {
    /// Equation tag (EGF_F_SQ, EGF_L_SQ, FL_ID, TANH_FORM, COTH_FORM,
    /// H_RELATION) or "all"
    #[arg(long, default_value = "all")]
    eq: String,
    #[arg(long, default_value_t = 1)]
    j: i64,
    #[arg(long, default_value_t = 32)]
    order: usize,
    /// Evaluation point for H_RELATION: integer, p/q, alpha, beta, or
    /// sqrt5 (defaults to the whole sample set)
    #[arg(long)]
    x: Option<String>,
}

#[derive(clap::Args)]
struct TableArgs {
    /// Which sequence: bernoulli, fib, or lucas
    #[arg(long)]
    seq: String,
    #[arg(long, default_value_t = 12)]
    max: u32,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 200)]
    bernoulli_max: usize,
    #[arg(long, default_value_t = 100_000)]
    fib_max: i64,
}

#[derive(clap::Args)]
struct LedgerArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_m_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got '{}'", s))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound '{}'", lo))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound '{}'", hi))?;
    if lo > hi {
        return Err(format!("empty range {}:{}", lo, hi));
    }
    Ok((lo, hi))
}

fn parse_point(s: &str) -> Result<QuadExt, String> {
    match s.trim() {
        "alpha" | "α" => return Ok(QuadExt::alpha()),
        "beta" | "β" => return Ok(QuadExt::beta()),
        "sqrt5" | "√5" => return Ok(QuadExt::sqrt5()),
        _ => {}
    }
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num
            .parse()
            .map_err(|_| format!("bad numerator in '{}'", s))?;
        let d: i64 = den
            .parse()
            .map_err(|_| format!("bad denominator in '{}'", s))?;
        if d == 0 {
            return Err("zero denominator".to_string());
        }
        return Ok(QuadExt::from_parts(n, d, 0, 1));
    }
    t.parse::<i64>().map(QuadExt::from_int).map_err(|_| {
        format!(
            "cannot parse point '{}' (use integer, p/q, alpha, beta, sqrt5)",
            s
        )
    })
}

fn usage_error(message: &str, synopsis: &str) -> ExitCode {
    eprintln!("error: {}", message);
    eprintln!("usage: {}", synopsis);
    ExitCode::from(2)
}

const VERIFY_SYNOPSIS: &str = "fibbern verify [--ids GLOB[,GLOB...]] [--n-max N] [--j-max J] \
    [--m-range LO:HI] [--q-max Q] [--order N] [--format text|json|csv] [--out PATH] [--jobs N]";
const SERIES_SYNOPSIS: &str =
    "fibbern series --eq EGF_F_SQ|EGF_L_SQ|FL_ID|TANH_FORM|COTH_FORM|H_RELATION|all \
    [--j J] [--order N] [--x POINT]";
const TABLE_SYNOPSIS: &str = "fibbern table --seq bernoulli|fib|lucas [--max N]";

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away (e.g. | head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Series(args) => run_series(args),
        Command::Table(args) => run_table(args),
        Command::Bench(args) => run_bench(args),
        Command::Ledger(args) => run_ledger(args),
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let mut ids: Vec<IdentityId> = Vec::new();
    for pattern in &args.ids {
        let matched = IdentityId::matching(pattern);
        if matched.is_empty() {
            return usage_error(
                &format!("--ids '{}' matches no catalog identity", pattern),
                VERIFY_SYNOPSIS,
            );
        }
        ids.extend(matched);
    }
    ids.sort_unstable();
    ids.dedup();

    let fault = match &args.inject_fault {
        None => None,
        Some(tag) => match IdentityId::from_tag(tag) {
            Some(id) => Some(id),
            None => {
                return usage_error(
                    &format!("--inject-fault '{}' is not a catalog identity", tag),
                    VERIFY_SYNOPSIS,
                );
            }
        },
    };

    let grid = GridSpec {
        n_max: args.n_max,
        j_max: args.j_max,
        m_lo: args.m_range.0,
        m_hi: args.m_range.1,
        q_max: args.q_max,
        order: args.order,
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));

    let n_ctx = (grid.n_max as usize + 2).max(32);
    let hi = (grid.j_max * 2 * (grid.n_max as i64 + 2)).max(64) + grid.m_hi.abs() + 8;
    let lo = -(grid.m_hi.abs().max(grid.m_lo.abs()) + grid.j_max * 2 + 8);
    let ctx = EvalContext::new(n_ctx, lo, hi);

    let report = verify_grid_opts(&ctx, &ids, &grid, jobs, fault);
    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, rendered) {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            return ExitCode::from(2);
        }
    } else {
        print!("{}", rendered);
        let _ = std::io::stdout().flush();
    }
    if report.unequal() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_series(args: SeriesArgs) -> ExitCode {
    let eqs: Vec<FunctionalEq> = if args.eq == "all" {
        FunctionalEq::ALL.to_vec()
    } else {
        match FunctionalEq::from_tag(&args.eq) {
            Some(eq) => vec![eq],
            None => {
                return usage_error(
                    &format!("--eq '{}' is not a functional equation", args.eq),
                    SERIES_SYNOPSIS,
                );
            }
        }
    };
    let xs: Vec<QuadExt> = match &args.x {
        Some(raw) => match parse_point(raw) {
            Ok(p) => vec![p],
            Err(e) => return usage_error(&format!("--x: {}", e), SERIES_SYNOPSIS),
        },
        None => sample_points(),
    };

    let mut ok = true;
    for eq in eqs {
        let runs: Vec<Option<&QuadExt>> = if eq == FunctionalEq::HRelation {
            xs.iter().map(Some).collect()
        } else {
            vec![None]
        };
        for x in runs {
            match check_functional_equation(eq, args.j, args.order, x) {
                Ok(v) if v.confirmed => {
                    let at = x.map(|p| format!(" at x = {}", p)).unwrap_or_default();
                    println!(
                        "{} j={}{}: confirmed to order {}",
                        eq.tag(),
                        args.j,
                        at,
                        v.order
                    );
                }
                Ok(v) => {
                    ok = false;
                    let (idx, lhs, rhs) = v.first_mismatch.expect("unconfirmed has mismatch");
                    println!(
                        "{} j={}: MISMATCH at z^{}: lhs = {}, rhs = {}",
                        eq.tag(),
                        args.j,
                        idx,
                        lhs,
                        rhs
                    );
                }
                Err(e) => return usage_error(&e.to_string(), SERIES_SYNOPSIS),
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_table(args: TableArgs) -> ExitCode {
    match args.seq.as_str() {
        "bernoulli" => {
            for n in 0..=args.max {
                println!("{}: {}", n, rational_string(&bernoulli_number(n as usize)));
            }
        }
        "fib" => {
            for n in 0..=args.max {
                println!("{}: {}", n, fib(n as i64));
            }
        }
        "lucas" => {
            for n in 0..=args.max {
                println!("{}: {}", n, lucas(n as i64));
            }
        }
        other => {
            return usage_error(
                &format!("--seq '{}' is not one of bernoulli, fib, lucas", other),
                TABLE_SYNOPSIS,
            );
        }
    }
    ExitCode::SUCCESS
}

fn run_bench(args: BenchArgs) -> ExitCode {
    // cross-check exactly first, then time
    let reference = bernoulli_sequence_recurrence(args.bernoulli_max);
    assert_eq!(
        reference[args.bernoulli_max],
        bernoulli_akiyama_tanigawa(args.bernoulli_max),
        "bernoulli routes disagree"
    );
    assert_eq!(
        fib(args.fib_max),
        fib_iterative(args.fib_max),
        "fib routes disagree"
    );

    let t = Instant::now();
    let table = bernoulli_sequence_recurrence(args.bernoulli_max);
    println!(
        "bernoulli recurrence      B_0..B_{:<6} {:>12.3?}",
        args.bernoulli_max,
        t.elapsed()
    );
    let t = Instant::now();
    let at = bernoulli_akiyama_tanigawa(args.bernoulli_max);
    println!(
        "akiyama-tanigawa          B_{:<10} {:>12.3?}",
        args.bernoulli_max,
        t.elapsed()
    );
    assert_eq!(table[args.bernoulli_max], at);

    let t = Instant::now();
    let fast = fib(args.fib_max);
    println!(
        "fib fast doubling         F_{:<10} {:>12.3?}",
        args.fib_max,
        t.elapsed()
    );
    let t = Instant::now();
    let naive = fib_iterative(args.fib_max);
    println!(
        "fib naive iteration       F_{:<10} {:>12.3?}",
        args.fib_max,
        t.elapsed()
    );
    assert_eq!(fast, naive);
    ExitCode::SUCCESS
}

fn run_ledger(args: LedgerArgs) -> ExitCode {
    let ctx = EvalContext::new(12, -20, 80);
    let entries = discrepancy_ledger();
    match args.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    let ev = e.evidence(&ctx);
                    serde_json::json!({
                        "key": e.key,
                        "identities": e.identities,
                        "printed_form": e.printed_form,
                        "corrected_form": e.corrected_form,
                        "evidence": ev,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("ledger serializes")
            );
        }
        _ => {
            for e in &entries {
                let ev = e.evidence(&ctx);
                println!("{}  [{}]", e.key, e.identities.join(", "));
                println!("  printed:   {}", e.printed_form);
                println!("  corrected: {}", e.corrected_form);
                println!("  evidence ({}):", ev.witness);
                if let Some(p) = &ev.printed_value {
                    println!("    printed form value:   {}", p);
                }
                println!("    corrected lhs = {}", ev.corrected_lhs);
                println!("    corrected rhs = {}", ev.corrected_rhs);
                println!(
                    "    oracle lhs = {}, oracle rhs = {}",
                    ev.oracle_lhs, ev.oracle_rhs
                );
                println!(
                    "    corrected matches oracle: {}; printed matches oracle: {}",
                    ev.corrected_matches_oracle,
                    ev.printed_matches_oracle
                        .map(|b| b.to_string())
                        .unwrap_or_else(|| "not evaluable as printed".to_string())
                );
                println!();
            }
        }
    }
    ExitCode::SUCCESS
}
