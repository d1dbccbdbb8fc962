//! The `degenpoly` binary: evaluate and tabulate polynomial families,
//! run the identity suite over parameter grids, and print p-adic
//! convergence reports.
//!
//! Exit codes: 0 when everything requested passed, 1 when at least one
//! identity or equation check failed, 2 for usage and domain errors
//! (unknown ids, bad indices, work-cap violations, malformed arguments).

use clap::{Args, Parser, Subcommand, ValueEnum};
use degenpoly::bernstein::{bernstein, bernstein2};
use degenpoly::degenerate::{euler_polynomial, falling_factorial, higher_order_euler, Sign};
use degenpoly::identities::{self, IdentityCase, Params, Verdict, VerificationReport};
use degenpoly::padic::{self, PadicContext};
use degenpoly::{MPoly, Var};
use degenpoly_cli::output::EquationRow;
use degenpoly_cli::{fexpr, output};
use rayon::prelude::*;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "degenpoly",
    version,
    about = "Exact computations with degenerate Euler and Bernstein polynomials"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one member of a polynomial family
    Eval(EvalArgs),
    /// Tabulate a family over an index range
    Table(TableArgs),
    /// Check identities over their parameter grids
    Verify(VerifyArgs),
    /// Fermionic-sum convergence and functional-equation reports
    Padic(PadicArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Degenerate Euler polynomial E_n(x)
    Euler,
    /// Higher-order degenerate Euler polynomial, order k
    #[value(name = "euler-higher")]
    EulerHigher,
    /// Degenerate Bernstein basis polynomial B_{k,n}(x)
    Bernstein,
    /// Two-variable degenerate Bernstein polynomial B_{k,n}(x1, x2)
    #[value(name = "bernstein2")]
    Bernstein2,
    /// Degenerate falling factorial (x)_n
    Fallfact,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Euler => "euler",
            Family::EulerHigher => "euler-higher",
            Family::Bernstein => "bernstein",
            Family::Bernstein2 => "bernstein2",
            Family::Fallfact => "fallfact",
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum PolyFormat {
    Latex,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    family: Family,
    /// Index n
    #[arg(long)]
    n: Option<u32>,
    /// Second index k (order for euler-higher)
    #[arg(long)]
    k: Option<u32>,
    /// Substitute a variable first, e.g. --set lambda=0 (repeatable)
    #[arg(long = "set", value_name = "VAR=VALUE")]
    set: Vec<String>,
    #[arg(long, value_enum, default_value_t = PolyFormat::Latex)]
    format: PolyFormat,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    family: Family,
    /// Largest n to tabulate
    #[arg(long)]
    nmax: u32,
    /// Largest k for the Bernstein families (defaults to --nmax)
    #[arg(long)]
    kmax: Option<u32>,
    /// Fixed order k for euler-higher
    #[arg(long)]
    k: Option<u32>,
    /// Substitute a variable first, e.g. --set lambda=0 (repeatable)
    #[arg(long = "set", value_name = "VAR=VALUE")]
    set: Vec<String>,
    #[arg(long, value_enum, default_value_t = PolyFormat::Latex)]
    format: PolyFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check the whole registry (the default when no --id is given)
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Check only these ids (repeatable)
    #[arg(long = "id", value_name = "ID")]
    ids: Vec<String>,
    /// Largest n in each case's grid
    #[arg(long, default_value_t = 6)]
    nmax: u32,
    /// Largest k in each case's grid (defaults to --nmax)
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
    /// Self-test: flip the designated coefficient of this case's builder
    /// and expect fail verdicts
    #[arg(long, value_name = "ID")]
    mutate: Option<String>,
    /// Fill the elapsed_ms column (off by default so identical runs have
    /// byte-identical output)
    #[arg(long)]
    timings: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum PadicCheck {
    /// Convergence of S_N[(x0 + t)_n] to the degenerate Euler value
    #[value(name = "euler-integral")]
    EulerIntegral,
    /// Exactness of S_N[f(t+1)] + S_N[f] = f(0) + f(p^N)
    #[value(name = "functional-eq")]
    FunctionalEq,
    /// Convergence of the factored double sum of (t)_k (t')_{n-k}
    #[value(name = "double-integral")]
    DoubleIntegral,
}

#[derive(Args)]
struct PadicArgs {
    #[arg(value_enum)]
    check: PadicCheck,
    /// Odd prime base
    #[arg(long)]
    p: u64,
    /// Deepest level N to report
    #[arg(long = "Nmax")]
    nmax: u32,
    /// Index n (euler-integral, double-integral)
    #[arg(long)]
    n: Option<u32>,
    /// Index k (double-integral)
    #[arg(long)]
    k: Option<u32>,
    /// Evaluation point x0, a rational
    #[arg(long, default_value = "0")]
    x: String,
    /// Value of λ, a rational
    #[arg(long, default_value = "0")]
    lambda: String,
    /// Integrand for functional-eq: a rational constant, t, t^K or fallfact:K
    #[arg(long)]
    f: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run() -> Result<i32, String> {
    init_thread_pool()?;
    match Cli::parse().cmd {
        Cmd::Eval(a) => run_eval(a),
        Cmd::Table(a) => run_table(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Padic(a) => run_padic(a),
    }
}

/// The verify grid runs on rayon; DEGENPOLY_THREADS caps the pool.
fn init_thread_pool() -> Result<(), String> {
    let Ok(raw) = std::env::var("DEGENPOLY_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| format!("DEGENPOLY_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| format!("thread pool: {e}"))
}

fn need_n(fam: Family, n: Option<u32>) -> Result<u32, String> {
    n.ok_or_else(|| format!("{} requires --n", fam.name()))
}

fn need_k(fam: Family, k: Option<u32>) -> Result<u32, String> {
    k.ok_or_else(|| format!("{} requires --k", fam.name()))
}

fn no_k(fam: Family, k: Option<u32>) -> Result<(), String> {
    if k.is_some() {
        return Err(format!("{} does not take --k", fam.name()));
    }
    Ok(())
}

fn family_member(fam: Family, n: Option<u32>, k: Option<u32>) -> Result<MPoly, String> {
    match fam {
        Family::Euler => {
            no_k(fam, k)?;
            Ok(euler_polynomial(need_n(fam, n)?, Var::X))
        }
        Family::EulerHigher => {
            let (n, k) = (need_n(fam, n)?, need_k(fam, k)?);
            if k == 0 {
                return Err("euler-higher needs an order --k of at least 1".into());
            }
            Ok(higher_order_euler(k, n, Var::X))
        }
        Family::Bernstein => Ok(bernstein(need_k(fam, k)?, need_n(fam, n)?)),
        Family::Bernstein2 => Ok(bernstein2(need_k(fam, k)?, need_n(fam, n)?)),
        Family::Fallfact => {
            no_k(fam, k)?;
            Ok(falling_factorial(Var::X, need_n(fam, n)?, Sign::Plus))
        }
    }
}

fn run_eval(a: EvalArgs) -> Result<i32, String> {
    let bindings = fexpr::parse_bindings(&a.set)?;
    let poly = family_member(a.family, a.n, a.k)?.substitute(&bindings);
    print_poly(&poly, a.format);
    Ok(0)
}

fn print_poly(p: &MPoly, f: PolyFormat) {
    match f {
        PolyFormat::Latex => println!("{}", output::poly_to_latex(p)),
        PolyFormat::Json => println!("{}", poly_json_line(p)),
        PolyFormat::Csv => print!("{}", output::poly_to_csv(p)),
    }
}

fn poly_json_line(p: &MPoly) -> String {
    serde_json::to_string(&output::poly_to_json(p)).expect("polynomial serialization cannot fail")
}

fn run_table(a: TableArgs) -> Result<i32, String> {
    let bindings = fexpr::parse_bindings(&a.set)?;
    let k_max = a.kmax.unwrap_or(a.nmax);
    let mut rows: Vec<(String, MPoly)> = Vec::new();
    match a.family {
        Family::Euler => {
            no_k(a.family, a.k)?;
            for n in 0..=a.nmax {
                rows.push((Params::for_n(n).to_string(), euler_polynomial(n, Var::X)));
            }
        }
        Family::Fallfact => {
            no_k(a.family, a.k)?;
            for n in 0..=a.nmax {
                rows.push((
                    Params::for_n(n).to_string(),
                    falling_factorial(Var::X, n, Sign::Plus),
                ));
            }
        }
        Family::EulerHigher => {
            let k = need_k(a.family, a.k)?;
            if k == 0 {
                return Err("euler-higher needs an order --k of at least 1".into());
            }
            for n in 0..=a.nmax {
                rows.push((
                    Params::for_nk(n, k).to_string(),
                    higher_order_euler(k, n, Var::X),
                ));
            }
        }
        Family::Bernstein | Family::Bernstein2 => {
            no_k(a.family, a.k)?;
            for n in 0..=a.nmax {
                for k in 0..=n.min(k_max) {
                    let p = match a.family {
                        Family::Bernstein => bernstein(k, n),
                        _ => bernstein2(k, n),
                    };
                    rows.push((Params::for_nk(n, k).to_string(), p));
                }
            }
        }
    }
    let rows: Vec<(String, MPoly)> = rows
        .into_iter()
        .map(|(label, p)| (label, p.substitute(&bindings)))
        .collect();
    match a.format {
        PolyFormat::Latex => print!("{}", output::table_to_latex(&rows)),
        PolyFormat::Json => println!("{}", output::table_to_json(&rows)),
        PolyFormat::Csv => print!("{}", output::table_to_csv(&rows)),
    }
    Ok(0)
}

/// One unit of verify work: either a grid point to run, or a placeholder
/// for a case whose grid is empty at the requested bounds.
enum Job<'a> {
    Run(&'a IdentityCase, Params),
    Skipped(&'a IdentityCase),
}

fn run_verify(a: VerifyArgs) -> Result<i32, String> {
    let n_max = a.nmax;
    let k_max = a.kmax.unwrap_or(a.nmax);
    if n_max < 1 || k_max < 1 {
        return Err("grid bounds must be at least 1".into());
    }
    let cases: Vec<&IdentityCase> = if a.ids.is_empty() {
        identities::registry().iter().collect()
    } else {
        a.ids
            .iter()
            .map(|id| {
                identities::lookup(id).ok_or_else(|| format!("unknown identity id: {id}"))
            })
            .collect::<Result<_, _>>()?
    };
    if let Some(m) = &a.mutate {
        if identities::lookup(m).is_none() {
            return Err(format!("unknown identity id: {m}"));
        }
    }
    let mutate = a.mutate.as_deref();

    let mut jobs: Vec<Job> = Vec::new();
    for case in &cases {
        let points = case.grid(n_max, k_max);
        if points.is_empty() {
            jobs.push(Job::Skipped(case));
        } else {
            jobs.extend(points.into_iter().map(|p| Job::Run(case, p)));
        }
    }
    // Indexed parallel map, so report order matches job order exactly.
    let reports: Vec<VerificationReport> = jobs
        .par_iter()
        .map(|job| match job {
            Job::Run(case, params) => {
                identities::verify_case(case, params, mutate == Some(case.id))
            }
            Job::Skipped(case) => VerificationReport {
                id: case.id,
                params: Params::none(),
                verdict: Verdict::Skipped,
                residual: None,
                elapsed: Duration::ZERO,
            },
        })
        .collect();

    match a.format {
        ReportFormat::Csv => print!("{}", output::reports_to_csv(&reports, a.timings)),
        ReportFormat::Json => println!("{}", output::reports_to_json(&reports, a.timings)),
    }
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    Ok(if failed { 1 } else { 0 })
}

fn run_padic(a: PadicArgs) -> Result<i32, String> {
    let lambda0 = fexpr::parse_rational(&a.lambda)?;
    match a.check {
        PadicCheck::EulerIntegral => {
            let n = a.n.ok_or("euler-integral requires --n")?;
            let x0 = fexpr::parse_rational(&a.x)?;
            let ctx = PadicContext::new(a.p, a.nmax).map_err(|e| e.to_string())?;
            let rep = padic::euler_integral_check(n, &x0, &lambda0, &ctx)
                .map_err(|e| e.to_string())?;
            print_convergence(&rep, a.format);
            Ok(0)
        }
        PadicCheck::DoubleIntegral => {
            let n = a.n.ok_or("double-integral requires --n")?;
            let k = a.k.ok_or("double-integral requires --k")?;
            let ctx = PadicContext::new(a.p, a.nmax).map_err(|e| e.to_string())?;
            let rep = padic::double_integral_check(k, n, &lambda0, &ctx)
                .map_err(|e| e.to_string())?;
            print_convergence(&rep, a.format);
            Ok(0)
        }
        PadicCheck::FunctionalEq => {
            let expr = a.f.as_deref().ok_or("functional-eq requires --f")?;
            let f = fexpr::parse_integrand(expr, &lambda0)?;
            let mut rows = Vec::new();
            for level in 1..=a.nmax {
                let (lhs, rhs) =
                    padic::functional_equation_check(&f, a.p, level).map_err(|e| e.to_string())?;
                rows.push(EquationRow { level, lhs, rhs });
            }
            match a.format {
                ReportFormat::Csv => print!("{}", output::equation_rows_to_csv(&rows)),
                ReportFormat::Json => println!("{}", output::equation_rows_to_json(&rows)),
            }
            let failed = rows.iter().any(|r| r.lhs != r.rhs);
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn print_convergence(rep: &padic::ConvergenceReport, f: ReportFormat) {
    match f {
        ReportFormat::Csv => print!("{}", output::convergence_to_csv(rep)),
        ReportFormat::Json => println!("{}", output::convergence_to_json(rep)),
    }
}
