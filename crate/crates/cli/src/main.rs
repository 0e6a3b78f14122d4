//! `octowitt` — table emission, vector decomposition, operator application
//! and batch verification over exact octonion–Clifford arithmetic.
//!
//! Exit status: 0 on success, 1 when verification reports failures, 2 on
//! usage or input errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use octowitt::diffops::{dirac, hermitian_derivative, twistor_derivative, FirstOrderOperator, Polynomial};
use octowitt::rational::Rational;
use octowitt::tables::{self, TableFormat, TableKind};
use octowitt::verify::{self, VerifyConfig};
use octowitt::witt;

#[derive(Parser)]
#[command(
    name = "octowitt",
    version,
    about = "Exact octonion-Clifford Witt basis toolkit: tables, decompositions, operators, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// The seven oriented multiplication triples
    Fano,
    /// Full 8x8 signed basis product table
    OctonionMul,
    /// Sign exponents of the involutions on conjugated basis elements
    Sigma,
    /// Signs of the involutions on the basis
    Jsigns,
    /// The Witt elements per block
    Witt,
    /// Twistor vectors over formal coordinates
    Twistor,
    /// Hermitian variables over formal coordinates
    Hermitian,
}

impl From<Kind> for TableKind {
    fn from(k: Kind) -> TableKind {
        match k {
            Kind::Fano => TableKind::Fano,
            Kind::OctonionMul => TableKind::OctonionMul,
            Kind::Sigma => TableKind::Sigma,
            Kind::Jsigns => TableKind::JSigns,
            Kind::Witt => TableKind::Witt,
            Kind::Twistor => TableKind::Twistor,
            Kind::Hermitian => TableKind::Hermitian,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print an algebra table
    Tables {
        #[arg(value_enum)]
        kind: Kind,
        /// Block count (used by the witt table)
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a vector of 8n rationals into per-block frames
    Decompose {
        /// Inline JSON array of 8n rationals; omit to read --input or stdin
        coords: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Read the coordinate JSON from a file
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every identity suite and emit a report
    Verify {
        #[arg(long = "n-max", default_value_t = 2)]
        n_max: usize,
        /// Random samples per sampled check
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// RNG seed; falls back to OCTOWITT_SEED, then 42
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the JSON report to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Apply an operator to a polynomial with tensor coefficients
    Apply {
        /// Operator spec: dirac | twistor:i[:block] | hermitian:i[:block]
        #[arg(long)]
        operator: String,
        /// Inline polynomial JSON; omit to read --input or stdin
        poly: Option<String>,
        /// Read the polynomial JSON from a file
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Tables { kind, n, format } => {
            let fmt = match format {
                Format::Text => TableFormat::Text,
                Format::Json => TableFormat::Json,
            };
            let rendered = tables::render(kind.into(), n, fmt)?;
            print!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { coords, n, input, format } => {
            let raw = read_payload(coords, input)?;
            let coords = parse_coords(&raw)?;
            let decomposition = witt::witt_decompose(&coords, n)?;
            match format {
                Format::Json => print!("{}", decompose_json(&decomposition)),
                Format::Text => print!("{}", decompose_text(&decomposition)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n_max, samples, seed, format, report } => {
            if !(1..=8).contains(&n_max) {
                bail!("--n-max must be in 1..=8");
            }
            let seed = resolve_seed(seed)?;
            let cfg = VerifyConfig { n_max, samples, seed };
            let result = verify::run(&cfg);
            if let Some(path) = report {
                std::fs::write(&path, result.to_json_string())
                    .with_context(|| format!("writing report to {}", path.display()))?;
            }
            match format {
                Format::Text => print!("{}", result.to_text()),
                Format::Json => print!("{}", result.to_json_string()),
            }
            Ok(if result.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Apply { operator, poly, input } => {
            let raw = read_payload(poly, input)?;
            let poly: Polynomial =
                serde_json::from_str(&raw).context("parsing polynomial JSON")?;
            let op = parse_operator(&operator, poly.nvars())?;
            let result = op.apply(&poly);
            let mut out = serde_json::to_string_pretty(&result)?;
            out.push('\n');
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("OCTOWITT_SEED") {
        Ok(v) => v.parse::<u64>().with_context(|| format!("OCTOWITT_SEED=`{v}` is not a u64")),
        Err(_) => Ok(42),
    }
}

/// Inline argument, file, or stdin, in that precedence.
fn read_payload(inline: Option<String>, input: Option<PathBuf>) -> anyhow::Result<String> {
    if let Some(s) = inline {
        return Ok(s);
    }
    if let Some(path) = input {
        return std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()));
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
    Ok(buf)
}

/// Accepts a JSON array whose entries are `"num/den"` strings or plain
/// integers.
fn parse_coords(raw: &str) -> anyhow::Result<Vec<Rational>> {
    let value: serde_json::Value = serde_json::from_str(raw).context("parsing coordinate JSON")?;
    let arr = match value {
        serde_json::Value::Array(a) => a,
        _ => bail!("coordinates must be a JSON array"),
    };
    arr.into_iter()
        .map(|v| match v {
            serde_json::Value::String(s) => {
                s.parse::<Rational>().map_err(|e| anyhow::anyhow!("{e}"))
            }
            serde_json::Value::Number(n) => {
                let i = n.as_i64().ok_or_else(|| anyhow::anyhow!("non-integer number {n}"))?;
                Ok(Rational::from(i))
            }
            other => bail!("coordinate entries must be strings or integers, got {other}"),
        })
        .collect()
}

fn parse_operator(spec: &str, nvars: usize) -> anyhow::Result<FirstOrderOperator> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = "expected dirac | twistor:i[:block] | hermitian:i[:block]";
    match parts.as_slice() {
        ["dirac"] => Ok(dirac(nvars)?),
        [name @ ("twistor" | "hermitian"), rest @ ..] if !rest.is_empty() && rest.len() <= 2 => {
            let i: usize = rest[0].parse().with_context(|| format!("bad frame index; {usage}"))?;
            if i > 7 {
                bail!("frame index {i} out of range 0..=7");
            }
            let block: usize = if rest.len() == 2 {
                rest[1].parse().with_context(|| format!("bad block index; {usage}"))?
            } else {
                0
            };
            if nvars == 0 || !nvars.is_multiple_of(8) {
                bail!("polynomial has {nvars} variables, which is not a positive multiple of 8");
            }
            let n = nvars / 8;
            if *name == "twistor" {
                Ok(twistor_derivative(i, block, n)?)
            } else {
                Ok(hermitian_derivative(i, block, n)?)
            }
        }
        _ => bail!("unknown operator `{spec}`; {usage}"),
    }
}

fn decompose_json(d: &witt::WittDecomposition) -> String {
    let blocks: Vec<serde_json::Value> = d
        .blocks
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let twistor: Vec<&[Rational; 8]> = (0..8).map(|i| b.twistor.vector(i)).collect();
            let hermitian: Vec<_> = (0..8).map(|i| b.hermitian.z(i)).collect();
            serde_json::json!({
                "block": k,
                "twistor": twistor,
                "hermitian": hermitian,
            })
        })
        .collect();
    let v = serde_json::json!({
        "n": d.n,
        "blocks": blocks,
        "reconstruction_exact": d.reconstruction_exact,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("decomposition serializes");
    s.push('\n');
    s
}

fn decompose_text(d: &witt::WittDecomposition) -> String {
    let mut out = String::new();
    for (k, b) in d.blocks.iter().enumerate() {
        out.push_str(&format!("block {k}\n"));
        for i in 0..8 {
            let coords: Vec<String> = b.twistor.vector(i).iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("  X{i} = [{}]\n", coords.join(", ")));
        }
        for i in 0..8 {
            out.push_str(&format!("  Z{i} = {}\n", b.hermitian.z(i)));
        }
    }
    out.push_str(&format!("reconstruction_exact: {}\n", d.reconstruction_exact));
    out
}
