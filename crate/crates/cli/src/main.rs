use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lambdasimp::motives::{
    adhm_motive_with, bb_motive, motive_simp, motivic_vocabulary, report_json, sweep, AdhmConfig, Curve,
};
use lambdasimp::simplifier::{lambda_simp, to_sigma_basis};
use lambdasimp::universal::{splitting_check, Family, UniversalCache};
use lambdasimp::{parse, Error, Polynomial, Vocabulary};

#[derive(Parser, Debug)]
#[command(name = "lambdasimp", version, about = "λ-ring simplification and motives of twisted Higgs moduli")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for persisted Grothendieck polynomials.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simplify an expression to its canonical polynomial.
    Simplify(SimplifyArgs),
    /// Print a universal polynomial.
    Universal(UniversalArgs),
    /// Motive from the Bialynicki-Birula formula.
    Bb(Triple),
    /// Motive from the ADHM plethystic prediction.
    Adhm(AdhmArgs),
    /// Compare both motives over a grid of parameters.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct SimplifyArgs {
    /// Comma separated generator names.
    #[arg(long, value_delimiter = ',', conflicts_with = "curves")]
    vars: Vec<String>,
    /// Comma separated curve genera; enables L, X<i> and H<i>.
    #[arg(long, value_delimiter = ',')]
    curves: Vec<usize>,
    /// The expression, or @path to read it from a file.
    #[arg(long)]
    expr: String,
    /// Rewrite the result in the σ basis.
    #[arg(long, conflicts_with = "curves")]
    sigma_basis: bool,
}

#[derive(Args, Debug)]
struct UniversalArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    /// Compare against the splitting-principle oracle.
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct Triple {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    p: usize,
}

#[derive(Args, Debug)]
struct AdhmArgs {
    #[command(flatten)]
    triple: Triple,
    /// Fixed t-window for H_r, as MIN:MAX.
    #[arg(long, value_name = "MIN:MAX", value_parser = parse_window, allow_hyphen_values = true)]
    t_window: Option<(i64, i64)>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_range)]
    g: Span,
    #[arg(long, value_parser = parse_range)]
    r: Span,
    #[arg(long, value_parser = parse_range)]
    p: Span,
    /// Write the JSON report here.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Record wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected MIN:MAX")?;
    let lo = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let hi = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Inclusive range `A..B` or a single value.
#[derive(Debug, Clone)]
struct Span(Vec<usize>);

fn parse_range(s: &str) -> Result<Span, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let lo: usize = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let hi: usize = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(Span((lo..=hi).collect()))
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SyntaxError { .. } | Error::UnknownGenerator(_) | Error::InvalidArgument(_) => {
                Failure::Usage(format!("{}: {e}", e.name()))
            }
            e => Failure::Compute(e),
        }
    }
}

fn poly_out(p: &Polynomial, json: bool) -> String {
    if json {
        p.to_json_string()
    } else {
        p.render_canonical()
    }
}

fn read_expr(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn simplify(a: &SimplifyArgs, json: bool) -> Result<String, Failure> {
    let text = read_expr(&a.expr)?;
    if !a.curves.is_empty() {
        let curves = a
            .curves
            .iter()
            .enumerate()
            .map(|(i, &g)| Curve::new(i + 1, g))
            .collect::<lambdasimp::Result<Vec<_>>>()?;
        let e = parse(&text, &motivic_vocabulary(&curves))?;
        return Ok(poly_out(&motive_simp(&e, &curves)?, json));
    }
    if a.vars.is_empty() {
        return Err(Failure::Usage("simplify needs --vars or --curves".into()));
    }
    let vocab = Vocabulary::new(a.vars.iter().map(|v| v.trim()))?;
    let e = parse(&text, &vocab)?;
    let mut p = lambda_simp(&e, vocab.len())?;
    if a.sigma_basis {
        p = to_sigma_basis(&p)?;
    }
    Ok(poly_out(&p, json))
}

fn universal(a: &UniversalArgs, cache: &UniversalCache, json: bool) -> Result<String, Failure> {
    if a.check {
        let ok = splitting_check(cache, a.family, a.n, a.m)?;
        if !ok {
            return Err(Failure::Compute(Error::InvalidArgument(format!(
                "{} n={} disagrees with the splitting-principle oracle",
                a.family, a.n
            ))));
        }
        return Ok(if json {
            format!("{{\"family\":\"{}\",\"n\":{},\"check\":true}}", a.family, a.n)
        } else {
            "ok".into()
        });
    }
    Ok(poly_out(&*cache.get(a.family, a.n, a.m)?, json))
}

fn verify(a: &VerifyArgs, jobs: usize, json: bool) -> Result<(String, bool), Failure> {
    let stderr = std::io::stderr();
    let reports = sweep(&a.g.0, &a.r.0, &a.p.0, jobs, a.timings, |res| {
        if let Ok(r) = res {
            let _ = writeln!(stderr.lock(), "done g={} r={} p={} equal={}", r.g, r.r, r.p, r.equal);
        }
    })?;
    let report = report_json(&reports);
    if let Some(path) = &a.report {
        fs::write(path, &report).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let all = reports.iter().all(|r| r.equal);
    let out = if json {
        report
    } else {
        let mut lines: Vec<String> = reports
            .iter()
            .map(|r| {
                let verdict = if r.equal { "equal" } else { "DIFFERENT" };
                format!("g={} r={} p={} {verdict}", r.g, r.r, r.p)
            })
            .collect();
        lines.push(format!("{}/{} equal", reports.iter().filter(|r| r.equal).count(), reports.len()));
        lines.join("\n")
    };
    Ok((out, all))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let json = cli.json;
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    match &cli.command {
        Command::Simplify(a) => Ok((simplify(a, json)?, true)),
        Command::Universal(a) => {
            let cache = match &cli.cache_dir {
                Some(dir) => UniversalCache::with_dir(dir)?,
                None => UniversalCache::new(),
            };
            Ok((universal(a, &cache, json)?, true))
        }
        Command::Bb(t) => Ok((poly_out(&bb_motive(t.g, t.r, t.p)?, json), true)),
        Command::Adhm(a) => {
            let cfg = AdhmConfig {
                window: a.t_window,
                ..AdhmConfig::default()
            };
            let t = &a.triple;
            Ok((poly_out(&adhm_motive_with(t.g, t.r, t.p, &cfg)?.motive, json), true))
        }
        Command::Verify(a) => verify(a, jobs, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}
