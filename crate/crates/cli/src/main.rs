//! Command-line front end: reads matrices and parameters, runs one library
//! operation and prints a JSON report on standard output.

mod input;
mod report;

use std::process::ExitCode;

use binhorn::decomp::{andean_report, enumerate_decompositions};
use binhorn::geometry::normalized_volume;
use binhorn::model::{compute_a, is_pointed, validate_b};
use binhorn::rank::{degree_cross_check, generic_rank};
use binhorn::series::{
    horn_classical_operators, horn_system_operators, solution_basis, verify_annihilation, Scalar,
    SolveOptions,
};
use binhorn::subgraph::{bounded_atlas, DEFAULT_CAP};
use binhorn::{Error, HornInput};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "binhorn",
    version,
    about = "Exact computations for binomial Horn systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that B has full column rank and a mixed column span.
    Validate(Common),
    /// Compute the grading matrix A with A·B = 0.
    Complement(Common),
    /// List block decompositions of B and the Andean directions.
    Decompose(Common),
    /// Enumerate the bounded subgraphs of M.
    Subgraphs(Common),
    /// Normalized volume of conv(0, columns of A).
    Volume(Common),
    /// Generic holonomic rank.
    Rank(Common),
    /// Classical Horn operators q_k(θ) - z_k p_k(θ) for parameters c.
    HornOps(Common),
    /// Truncated series solution basis at a parameter beta.
    Solve(Common),
    /// Solve, then check every series against the Horn system at beta.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// Matrix B (file path or inline JSON).
    #[arg(long = "B")]
    b: Option<String>,
    /// Grading matrix A, or the configuration for `volume`.
    #[arg(long = "A")]
    a: Option<String>,
    /// Square matrix M for `subgraphs`.
    #[arg(long = "M")]
    m: Option<String>,
    /// Parameter vector, e.g. "1/2,1/3".
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Horn parameters c for `horn-ops`.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Lattice word-length bound for series.
    #[arg(long, default_value_t = 6)]
    truncate: u64,
    /// Cyclotomic order available for character values.
    #[arg(long = "field-root", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    field_root: u32,
    /// Number of degree levels explored when enumerating subgraphs.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Accept an A whose columns span a proper sublattice of Z^d.
    #[arg(long)]
    allow_sublattice: bool,
    /// Compact JSON output (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output.
    #[arg(long)]
    pretty: bool,
}

enum Failure {
    Input(String),
    Lib(Error),
    /// A report was produced but the outcome is negative.
    Report(Value, u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Dimension(_) | Error::Convention(_) | Error::Degenerate(_) | Error::Field(_) => 2,
        Error::InfiniteRank => 3,
        Error::Resonance(_) | Error::NotVeryGeneric(_) => 4,
        Error::CapExceeded { .. } => 5,
        _ => 1,
    }
}

type Outcome = Result<Value, Failure>;

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref()
        .ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn matrix(v: &Option<String>, flag: &str) -> Result<binhorn::linalg::IntMatrix, Failure> {
    input::read_matrix(required(v, flag)?).map_err(Failure::Input)
}

fn horn_input(o: &Common) -> Result<HornInput, Failure> {
    let b = matrix(&o.b, "B")?;
    Ok(match &o.a {
        None => HornInput::new(b)?,
        Some(_) => {
            let a = matrix(&o.a, "A")?;
            if o.allow_sublattice {
                HornInput::with_a_sublattice(b, a)?
            } else {
                HornInput::with_a(b, a)?
            }
        }
    })
}

fn beta(o: &Common, input: &HornInput) -> Result<Vec<binhorn::Rat>, Failure> {
    let beta = input::parse_vector(required(&o.beta, "beta")?).map_err(Failure::Input)?;
    input.check_beta(&beta)?;
    Ok(beta)
}

fn header(input: &HornInput) -> Value {
    json!({ "B": report::matrix(input.b()), "A": report::matrix(input.a()), "A_index": report::int(input.a_index()) })
}

fn validate(o: &Common) -> Outcome {
    let b = matrix(&o.b, "B")?;
    let r = validate_b(&b)?;
    let mut out = json!({ "B": report::matrix(&b), "report": report::b_report(&r) });
    if !r.is_valid() {
        return Err(Failure::Report(out, 2));
    }
    let a = match &o.a {
        Some(_) => matrix(&o.a, "A")?,
        None => compute_a(&b)?,
    };
    out["A"] = report::matrix(&a);
    out["pointedness"] = report::pointedness(&is_pointed(&a)?);
    if o.a.is_some() {
        match horn_input(o) {
            Ok(input) => out["A_index"] = report::int(input.a_index()),
            Err(Failure::Lib(e)) => {
                out["error"] = json!(e.to_string());
                return Err(Failure::Report(out, exit_code(&e)));
            }
            Err(f) => return Err(f),
        }
    }
    Ok(out)
}

fn complement(o: &Common) -> Outcome {
    let b = matrix(&o.b, "B")?;
    let a = compute_a(&b)?;
    Ok(json!({ "B": report::matrix(&b), "A": report::matrix(&a), "d": a.rows() }))
}

fn decompose(o: &Common) -> Outcome {
    let input = horn_input(o)?;
    let decomps = enumerate_decompositions(&input)?;
    let mut out = header(&input);
    out["decompositions"] = Value::Array(decomps.iter().map(report::decomposition).collect());
    out["andean"] = report::andean(&andean_report(&decomps, input.d()));
    Ok(out)
}

fn subgraphs(o: &Common) -> Outcome {
    let m = matrix(&o.m, "M")?;
    if !m.is_square() || m.det()?.eq(&0.into()) {
        return Err(Failure::Input("M must be square and invertible".into()));
    }
    Ok(report::atlas(&bounded_atlas(&m, o.cap)?))
}

fn volume(o: &Common) -> Outcome {
    let a = matrix(&o.a, "A")?;
    let mut out = report::volume(&normalized_volume(&a)?);
    out["A"] = report::matrix(&a);
    Ok(out)
}

fn rank(o: &Common) -> Outcome {
    let input = horn_input(o)?;
    let r = generic_rank(&input, o.cap)?;
    let cross = degree_cross_check(&input)?;
    let mut out = report::rank(&r, cross.as_ref());
    let header = header(&input);
    for (k, v) in header.as_object().expect("object") {
        out[k] = v.clone();
    }
    if r.finite_total().is_none() {
        return Err(Failure::Report(out, 3));
    }
    Ok(out)
}

fn horn_ops(o: &Common) -> Outcome {
    let b = matrix(&o.b, "B")?;
    let c = input::parse_vector(required(&o.c, "c")?).map_err(Failure::Input)?;
    let cs: Vec<Scalar> = c.into_iter().map(Scalar::from_rat).collect();
    let ops = horn_classical_operators(&b, &cs)?;
    Ok(
        json!({ "B": report::matrix(&b), "operators": ops.iter().map(report::horn_operator).collect::<Vec<_>>() }),
    )
}

fn options(o: &Common) -> SolveOptions {
    SolveOptions {
        truncation: o.truncate,
        field_root: o.field_root,
        cap: o.cap,
    }
}

fn solve(o: &Common) -> Outcome {
    let input = horn_input(o)?;
    let beta = beta(o, &input)?;
    let basis = solution_basis(&input, &beta, options(o))?;
    let mut out = report::basis(&basis);
    out["beta"] = report::rats(&beta);
    out["truncation"] = json!(o.truncate);
    out["field_root"] = json!(o.field_root);
    Ok(out)
}

fn verify(o: &Common) -> Outcome {
    let input = horn_input(o)?;
    let beta = beta(o, &input)?;
    let basis = solution_basis(&input, &beta, options(o))?;
    let ops = horn_system_operators(&input, &beta);
    let mut passed = true;
    let results: Vec<Value> = basis
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let r = verify_annihilation(&ops, &e.series);
            passed &= r.passed;
            json!({
                "index": i + 1,
                "rowset": report::one_based(&e.rowset_jbar),
                "passed": r.passed,
                "checks": r.checks.iter().map(report::operator_check).collect::<Vec<_>>(),
            })
        })
        .collect();
    let out = json!({
        "beta": report::rats(&beta),
        "truncation": o.truncate,
        "operators": ops.iter().map(|x| x.describe()).collect::<Vec<_>>(),
        "passed": passed,
        "results": results,
    });
    if !passed {
        return Err(Failure::Report(out, 1));
    }
    Ok(out)
}

fn render(command: &str, mut v: Value, pretty: bool) -> String {
    v["schema"] = json!("1");
    v["command"] = json!(command);
    if pretty {
        serde_json::to_string_pretty(&v).expect("JSON values serialize")
    } else {
        serde_json::to_string(&v).expect("JSON values serialize")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, o, outcome) = match &cli.command {
        Command::Validate(o) => ("validate", o, validate(o)),
        Command::Complement(o) => ("complement", o, complement(o)),
        Command::Decompose(o) => ("decompose", o, decompose(o)),
        Command::Subgraphs(o) => ("subgraphs", o, subgraphs(o)),
        Command::Volume(o) => ("volume", o, volume(o)),
        Command::Rank(o) => ("rank", o, rank(o)),
        Command::HornOps(o) => ("horn-ops", o, horn_ops(o)),
        Command::Solve(o) => ("solve", o, solve(o)),
        Command::Verify(o) => ("verify", o, verify(o)),
    };
    match outcome {
        Ok(v) => {
            println!("{}", render(name, v, o.pretty));
            ExitCode::SUCCESS
        }
        Err(Failure::Report(v, code)) => {
            println!("{}", render(name, v, o.pretty));
            eprintln!("binhorn {name}: negative outcome (exit {code})");
            ExitCode::from(code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("binhorn {name}: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("binhorn {name}: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
