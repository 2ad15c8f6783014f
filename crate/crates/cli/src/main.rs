use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dspin::action::{act, ActionKind};
use dspin::dist::{plane_eigenvalue, plane_indices, rotate_dist, Branch};
use dspin::fault::{with_fault, Fault};
use dspin::json::{self, StateFile};
use dspin::repr::{dim_hk0, eigen_poly, half_weight, hw_half, hw_integer, integer_weight, torus_weight};
use dspin::selftest;
use dspin::spin::{exp_bivector, SpinElement};
use dspin::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dspin", version, about = "Exact discrete Clifford and Spin(m) calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity suites; DSPIN_FAULT=r-xi-sign injects a defect.
    Selftest {
        #[arg(long)]
        suite: Option<String>,
    },
    /// Rotate a polynomial or distribution state in the (1,2)-plane.
    Rotate(RotateArgs),
    /// Same as rotate, but the input must be a distribution.
    DistRotate(RotateArgs),
    /// Harmonic dimension table: closed formula against the kernel rank.
    Dims {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Eigenfunctions of xi_1 del_2 + xi_2 del_1 of degree k (m = 2).
    Eigenbasis {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Highest weight vector with its verified torus weight.
    Hw {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        half: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(clap::Args)]
struct RotateArgs {
    #[arg(long)]
    m: usize,
    /// H0, H1, L, H0perp, H1perp or Lperp.
    #[arg(long, default_value = "H0")]
    action: String,
    /// "sym" for the symbolic angle t1, or a rational multiple of pi such
    /// as "1/3 pi".
    #[arg(long)]
    angle: String,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Identity(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::NotEigenvector => Failure::Identity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, PartialEq)]
enum Angle {
    Symbolic,
    /// Multiple of pi.
    Numeric(f64),
}

fn parse_angle(s: &str) -> Result<Angle, Failure> {
    let s = s.trim();
    if s == "sym" {
        return Ok(Angle::Symbolic);
    }
    let bad = || Failure::Usage(format!("angle {s:?} is neither \"sym\" nor \"p/q pi\""));
    let body = s.strip_suffix("pi").ok_or_else(bad)?.trim();
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None if body.is_empty() => ("1", "1"),
        None => (body, "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Angle::Numeric(p as f64 / q as f64 * PI))
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn rotate(args: &RotateArgs, dist_only: bool) -> Result<(), Failure> {
    let kind = ActionKind::parse(&args.action).ok_or_else(|| Failure::Usage(format!("unknown action {:?}", args.action)))?;
    let angle = parse_angle(&args.angle)?;
    let text = fs::read_to_string(&args.input).map_err(|e| Failure::Usage(format!("{}: {e}", args.input.display())))?;
    let state = json::state_from_json(&text)?;
    let dim = match &state {
        StateFile::Poly(f) => f.dim(),
        StateFile::Dist(d) => d.dim(),
    };
    if dim != args.m {
        return Err(Error::DimensionMismatch(args.m, dim).into());
    }
    let s: SpinElement = exp_bivector(kind.family(), args.m, &[(1, (2, 1))])?;
    let rotated = match state {
        StateFile::Poly(_) if dist_only => return Err(Failure::Usage("dist-rotate needs a distribution input".into())),
        StateFile::Poly(f) => StateFile::Poly(act(kind, &s, &f)?),
        StateFile::Dist(_) if kind != ActionKind::H0 => {
            return Err(Failure::Usage(format!("distributions rotate under H0 only, not {}", kind.name())))
        }
        StateFile::Dist(d) => StateFile::Dist(rotate_dist(&s, &d)?),
    };
    let out = match (angle, args.format) {
        (Angle::Symbolic, Format::Json) => json::state_to_json(&rotated),
        (Angle::Symbolic, Format::Text) => match &rotated {
            StateFile::Poly(f) => f.to_string(),
            StateFile::Dist(d) => d.to_string(),
        },
        (Angle::Numeric(t), Format::Json) => json::state_to_numeric_json(&rotated, &[t])?,
        (Angle::Numeric(t), Format::Text) => {
            let v: Value = serde_json::from_str(&json::state_to_numeric_json(&rotated, &[t])?).expect("own output");
            numeric_text(&v)
        }
    };
    emit(&out, args.output.as_ref())
}

fn numeric_text(v: &Value) -> String {
    let mut lines = Vec::new();
    for term in v["terms"].as_array().into_iter().flatten() {
        for b in term["blades"].as_array().into_iter().flatten() {
            let word: Vec<&str> = b["word"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            lines.push(format!(
                "{} [{}] {:+.12} {:+.12}i",
                term["index"],
                word.join(" "),
                b["re"].as_f64().unwrap_or(f64::NAN),
                b["im"].as_f64().unwrap_or(f64::NAN)
            ));
        }
    }
    if lines.is_empty() {
        "0".into()
    } else {
        lines.join("\n")
    }
}

fn parsed(s: &str) -> Value {
    serde_json::from_str(s).expect("own output is valid JSON")
}

fn dims(m: usize, kmax: usize, format: Format) -> Result<(), Failure> {
    let rows = (0..=kmax).map(|k| dim_hk0(m, k)).collect::<Result<Vec<_>, _>>()?;
    let out = match format {
        Format::Json => json::dims_to_json(m, &rows),
        Format::Text => {
            let mut t = format!("m = {m}\n  k  formula  rank");
            for d in &rows {
                let mark = if d.formula_matches() { "" } else { "  (differs)" };
                t.push_str(&format!("\n{:>3}  {:>7}  {:>4}{mark}", d.k, d.formula, d.rank));
            }
            t
        }
    };
    emit(&out, None)
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Plus => "+",
        Branch::Minus => "-",
    }
}

fn eigenbasis(k: usize, format: Format) -> Result<(), Failure> {
    let mut entries = Vec::new();
    for (i, br) in plane_indices(k) {
        entries.push((i, br, plane_eigenvalue(k, i, br), eigen_poly(k, i, br)?));
    }
    let out = match format {
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|(i, br, lambda, f)| {
                    json!({"i": i, "branch": branch_name(*br), "eigenvalue": lambda, "state": parsed(&json::poly_to_json(f))})
                })
                .collect();
            serde_json::to_string_pretty(&Value::Array(list)).expect("serializable")
        }
        Format::Text => entries
            .iter()
            .map(|(i, br, lambda, f)| format!("i={i} branch={} eigenvalue={lambda}: {f}", branch_name(*br)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(&out, None)
}

fn hw(m: usize, k: usize, half: bool, format: Format) -> Result<(), Failure> {
    let (state, kind, expected) = if half {
        (hw_half(m, k)?, ActionKind::L, half_weight(m, k))
    } else {
        (hw_integer(m, k)?, ActionKind::H0, integer_weight(k))
    };
    let weight = torus_weight(kind, &state)?;
    if weight != expected {
        return Err(Failure::Identity(format!("{} weight is {weight}, expected {expected}", kind.name())));
    }
    let out = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "action": kind.name(),
            "weight": parsed(&json::scalar_to_json(&weight)),
            "state": parsed(&json::poly_to_json(&state)),
        }))
        .expect("serializable"),
        Format::Text => format!("{} weight {weight}\n{state}", kind.name()),
    };
    emit(&out, None)
}

fn run_selftest(suite: Option<&str>) -> Result<(), Failure> {
    let fault = match std::env::var("DSPIN_FAULT") {
        Ok(name) if !name.is_empty() => {
            Some(Fault::parse(&name).ok_or_else(|| Failure::Usage(format!("unknown fault {name:?}")))?)
        }
        _ => None,
    };
    let suites: Vec<&str> = suite.into_iter().collect();
    let mut stdout = io::stdout().lock();
    let passed = with_fault(fault, || selftest::run(&suites, &mut stdout))?;
    let _ = stdout.flush();
    if passed {
        Ok(())
    } else {
        Err(Failure::Identity("self-test failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Selftest { suite } => run_selftest(suite.as_deref()),
        Command::Rotate(args) => rotate(args, false),
        Command::DistRotate(args) => rotate(args, true),
        Command::Dims { m, kmax, format } => dims(*m, *kmax, *format),
        Command::Eigenbasis { k, format } => eigenbasis(*k, *format),
        Command::Hw { m, k, half, format } => hw(*m, *k, *half, *format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("sym").ok(), Some(Angle::Symbolic));
        assert_eq!(parse_angle("1/3 pi").ok(), Some(Angle::Numeric(PI / 3.0)));
        assert_eq!(parse_angle("-2 pi").ok(), Some(Angle::Numeric(-2.0 * PI)));
        assert_eq!(parse_angle("0 pi").ok(), Some(Angle::Numeric(0.0)));
        assert_eq!(parse_angle("pi").ok(), Some(Angle::Numeric(PI)));
        assert!(parse_angle("1/0 pi").is_err());
        assert!(parse_angle("0.5").is_err());
    }
}
