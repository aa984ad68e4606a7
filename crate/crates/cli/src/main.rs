//! Command-line front end: verify a configuration, sweep a parameter space,
//! tabulate splitting, or reconstruct an L-polynomial from counts.
//!
//! Exit codes: 0 for a positive verdict (or a completed report), 1 for a
//! well-formed negative verdict, 2 for invalid input.

mod render;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use classnum::curve::{self, Certificate, LPolynomial, PlaceCountTable, Verdict};
use classnum::rayclass::{RayClassField, SubextensionSpec, ValidatedConfig};
use classnum::{Error, FieldChar, Poly};

/// Enumeration cap for sweeps and tables: q^d candidates per degree.
const MAX_SWEEP_CANDIDATES: u64 = 1 << 22;

#[derive(Parser)]
#[command(
    name = "classnum",
    version,
    about = "Exact class-number-one verification for subextensions of ray class fields of F_q(x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one configuration (q, m, S, n) and report the class number
    Verify(VerifyArgs),
    /// Sweep all (m, S) pairs of given degrees and list class-number-one hits
    Search(SearchArgs),
    /// Print the decomposition of every place of K up to a degree bound
    Tabulate(TabulateArgs),
    /// Reconstruct the L-polynomial and h = L(1) from place counts
    Lpoly(LpolyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// Field characteristic (a prime)
    #[arg(long)]
    q: u16,
    /// Conductor m, in the polynomial text grammar
    #[arg(long)]
    modulus: String,
    /// Split place S
    #[arg(long)]
    split: String,
    /// Degree n of the subextension F/K
    #[arg(long)]
    degree: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the JSON certificate to this path
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    q: u16,
    /// Degree of the conductor m
    #[arg(long)]
    modulus_degree: usize,
    /// Degree of the split place S
    #[arg(long)]
    split_degree: usize,
    /// Degree n of the subextension F/K
    #[arg(long)]
    degree: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the full JSON report (all certificates) to this path
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TabulateArgs {
    #[arg(long)]
    q: u16,
    #[arg(long)]
    modulus: String,
    #[arg(long)]
    split: String,
    #[arg(long)]
    degree: u64,
    /// Largest place degree to tabulate
    #[arg(long)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LpolyArgs {
    #[arg(long)]
    q: u16,
    #[arg(long)]
    genus: u64,
    /// Comma-separated place counts B_1,...,B_genus (empty for genus 0)
    #[arg(long, num_args = 0..=1, default_missing_value = "")]
    counts: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct SearchHit {
    m: Poly,
    #[serde(rename = "S")]
    s: Poly,
}

#[derive(Serialize)]
struct SearchReport {
    q: u64,
    modulus_degree: usize,
    split_degree: usize,
    n: u64,
    scanned: usize,
    hits: Vec<SearchHit>,
    certificates: Vec<Certificate>,
}

enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lib(e) => write!(f, "{e}"),
            Self::Io(path, e) => write!(f, "cannot write {}: {e}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Tabulate(args) => cmd_tabulate(args),
        Command::Lpoly(args) => cmd_lpoly(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn parse_config(q: u16, modulus: &str, split: &str, degree: u64) -> Result<ValidatedConfig, Error> {
    let field = FieldChar::new(q)?;
    let m = Poly::parse(modulus, field)?;
    let s = Poly::parse(split, field)?;
    let rcf = RayClassField::new(m, s)?;
    rcf.validate(SubextensionSpec::new(degree))
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let cfg = parse_config(args.q, &args.modulus, &args.split, args.degree)?;
    let cert = curve::verify_counterexample(&cfg)?;
    let json = to_json(&cert);
    if let Some(path) = &args.output {
        write_output(path, &json)?;
    }
    match args.format {
        Format::Text => print!("{}", render::verify_text(&cfg, &cert)?),
        Format::Json => println!("{json}"),
    }
    Ok(verdict_exit(cert.verdict))
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode, CliError> {
    let field = FieldChar::new(args.q)?;
    let moduli = enumerate_capped(field, args.modulus_degree)?;
    let splits = enumerate_capped(field, args.split_degree)?;
    let mut pairs = Vec::new();
    for m in &moduli {
        for s in &splits {
            if m != s {
                pairs.push((m.clone(), s.clone()));
            }
        }
    }
    // The n-conditions depend only on (q, deg m, deg S, n), so one
    // representative pair decides them for the whole sweep: an impossible
    // shape is rejected uniformly before any work happens.
    if let Some((m, s)) = pairs.first() {
        RayClassField::new(m.clone(), s.clone())?.validate(SubextensionSpec::new(args.degree))?;
    }
    let certificates: Vec<Certificate> = pairs
        .par_iter()
        .map(|(m, s)| {
            let cfg = RayClassField::new(m.clone(), s.clone())?
                .validate(SubextensionSpec::new(args.degree))?;
            curve::verify_counterexample(&cfg)
        })
        .collect::<Result<_, _>>()
        .map_err(CliError::Lib)?;
    let hits: Vec<SearchHit> = certificates
        .iter()
        .filter(|c| c.verdict == Verdict::ClassNumberOne)
        .map(|c| SearchHit { m: c.config.m.clone(), s: c.config.s.clone() })
        .collect();
    let report = SearchReport {
        q: field.q64(),
        modulus_degree: args.modulus_degree,
        split_degree: args.split_degree,
        n: args.degree,
        scanned: certificates.len(),
        hits,
        certificates,
    };
    let json = to_json(&report);
    if let Some(path) = &args.output {
        write_output(path, &json)?;
    }
    match args.format {
        Format::Text => print!("{}", render::search_text(&report)),
        Format::Json => println!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tabulate(args: TabulateArgs) -> Result<ExitCode, CliError> {
    let cfg = parse_config(args.q, &args.modulus, &args.split, args.degree)?;
    check_enumeration_cap(cfg.rcf().field(), args.max_degree)?;
    let rows = render::decomposition_rows(&cfg, args.max_degree)?;
    match args.format {
        Format::Text => print!("{}", render::tabulate_text(&cfg, &rows)),
        Format::Json => println!("{}", to_json(&rows)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lpoly(args: LpolyArgs) -> Result<ExitCode, CliError> {
    let field = FieldChar::new(args.q)?;
    let counts = parse_counts(&args.counts)?;
    if counts.len() != args.genus as usize {
        return Err(Error::InconsistentCounts(format!(
            "expected {} counts for genus {}, got {}",
            args.genus,
            args.genus,
            counts.len()
        ))
        .into());
    }
    let table = PlaceCountTable::from_counts(&counts);
    let point_counts = table.point_counts(args.genus as usize)?;
    let l = LPolynomial::from_point_counts(field, args.genus, &point_counts)?;
    let h = l.class_number()?;
    match args.format {
        Format::Text => {
            println!("L coefficients: {}", render::int_list(l.coefficients()));
            println!("class number: {h}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct LpolyReport {
                q: u64,
                genus: u64,
                counts: Vec<u64>,
                l_poly: Vec<i128>,
                class_number: u64,
            }
            let report = LpolyReport {
                q: field.q64(),
                genus: args.genus,
                counts,
                l_poly: l.coefficients().to_vec(),
                class_number: h,
            };
            println!("{}", to_json(&report));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_counts(text: &str) -> Result<Vec<u64>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim().parse::<u64>().map_err(|_| {
                Error::InconsistentCounts(format!("malformed count {:?}", part.trim()))
            })
        })
        .collect()
}

fn check_enumeration_cap(field: FieldChar, max_degree: usize) -> Result<(), Error> {
    let q = field.q64();
    if let Some(d) = (1..=max_degree)
        .find(|&d| q.checked_pow(d as u32).is_none_or(|total| total > MAX_SWEEP_CANDIDATES))
    {
        return Err(Error::SizeCap(format!(
            "enumerating places of degree {d} needs {q}^{d} > 2^22 candidates"
        )));
    }
    Ok(())
}

fn enumerate_capped(field: FieldChar, degree: usize) -> Result<Vec<Poly>, Error> {
    if degree == 0 {
        return Err(Error::SizeCap("place degrees start at 1".into()));
    }
    check_enumeration_cap(field, degree)?;
    Ok(Poly::monic_irreducibles(field, degree))
}

fn verdict_exit(verdict: Verdict) -> ExitCode {
    match verdict {
        Verdict::ClassNumberOne => ExitCode::SUCCESS,
        Verdict::ClassNumberGreaterThanOne => ExitCode::from(1),
        Verdict::Invalid => ExitCode::from(2),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn write_output(path: &Path, json: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{json}\n"))
        .map_err(|e| CliError::Io(path.to_path_buf(), e))
}
