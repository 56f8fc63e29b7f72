use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use monoform::decomp::combined_primary_components;
use monoform::invariants::max_ideal_floor_bound;
use monoform::poly::irreducible_hrep;
use monoform::scan::{scan, ScanConfig};
use monoform::*;

const TOOL: &str = "monoform";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "monoform",
    version,
    about = "Exact invariants of monomial ideals"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Omit the timing field.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Ideal such as "x1^2, x1*x2, x2^2".
    ideal: String,
    /// Number of variables; at least the largest index used.
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ordinary,
    Symbolic,
    Irreducible,
}

impl From<Family> for PowerFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Ordinary => PowerFamily::Ordinary,
            Family::Symbolic => PowerFamily::Symbolic,
            Family::Irreducible => PowerFamily::Irreducible,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Body {
    Newton,
    Symbolic,
    Irreducible,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Any,
    Squarefree,
    Mprimary,
}

impl From<Shape> for IdealShape {
    fn from(s: Shape) -> Self {
        match s {
            Shape::Any => IdealShape::Any,
            Shape::Squarefree => IdealShape::Squarefree,
            Shape::Mprimary => IdealShape::Mprimary,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Irredundant irreducible decomposition and combined primary components.
    Decompose(Source),
    /// Associated primes, maximal associated primes and big-height.
    Ass(Source),
    /// Minimal generators of a power.
    Power {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
    },
    /// Newton, symbolic or irreducible polyhedron.
    Polyhedron {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum)]
        kind: Body,
    },
    /// Initial degree.
    Alpha(Source),
    /// Waldschmidt constant.
    Waldschmidt(Source),
    /// Naive Waldschmidt constant.
    NaiveWaldschmidt(Source),
    /// Initial degree, both constants and the lower bounds between them.
    Bounds(Source),
    /// α(I_m)/m for m = 1..=max.
    Sequence {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
    },
    /// Checks the proven bounds on seeded random ideals and tabulates the
    /// conjectural ones.
    Scan {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "any")]
        shape: Shape,
    },
    /// Closed-form naive Waldschmidt constant of 𝔪ₙᵈ, cross-checked by LP.
    MaxIdealFormula {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Decompose(_) => "decompose",
            Command::Ass(_) => "ass",
            Command::Power { .. } => "power",
            Command::Polyhedron { .. } => "polyhedron",
            Command::Alpha(_) => "alpha",
            Command::Waldschmidt(_) => "waldschmidt",
            Command::NaiveWaldschmidt(_) => "naive-waldschmidt",
            Command::Bounds(_) => "bounds",
            Command::Sequence { .. } => "sequence",
            Command::Scan { .. } => "scan",
            Command::MaxIdealFormula { .. } => "max-ideal-formula",
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

#[derive(Serialize)]
struct ErrorReport {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    position: Option<usize>,
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_ratio_string())
}

fn echo(ideal: &MonomialIdeal) -> Value {
    json!({
        "text": format_ideal(ideal),
        "nvars": ideal.nvars(),
        "generators": ideal.generators(),
    })
}

fn generators(ideal: &MonomialIdeal) -> Value {
    json!({
        "text": format_ideal(ideal),
        "generators": ideal.generators(),
    })
}

/// Returns the input echo, the result payload and whether the run passed.
fn run(command: &Command) -> Result<(Value, Value, bool)> {
    let load = |src: &Source| parse_ideal(&src.ideal, src.nvars);
    let out = match command {
        Command::Decompose(src) => {
            let i = load(src)?;
            let d = irreducible_decomposition(&i)?;
            let combined: Vec<Value> = combined_primary_components(&i)?
                .into_iter()
                .map(|(p, q)| json!({ "prime": p, "component": generators(&q) }))
                .collect();
            let result = json!({ "components": d.components(), "combined_primary": combined });
            (echo(&i), result)
        }
        Command::Ass(src) => {
            let i = load(src)?;
            let result = json!({
                "ass": ass_primes(&i)?,
                "max": max_primes(&i)?,
                "big_height": big_height(&i)?,
            });
            (echo(&i), result)
        }
        Command::Power { src, kind, m } => {
            let i = load(src)?;
            let p = PowerFamily::from(*kind).power(&i, *m)?;
            (echo(&i), generators(&p))
        }
        Command::Polyhedron { src, kind } => {
            let i = load(src)?;
            let result = match kind {
                Body::Newton => json!({ "generators": PolyhedronVRep::newton(&i)?.generators() }),
                Body::Symbolic => {
                    let spec = sp_spec(&i)?;
                    let comps: Vec<Value> = spec
                        .components()
                        .iter()
                        .map(|c| json!({ "prime": c.prime, "generators": c.body.generators() }))
                        .collect();
                    json!({ "components": comps })
                }
                Body::Irreducible => {
                    let h = irreducible_hrep::<Rational>(&irreducible_decomposition(&i)?);
                    let mut v = serde_json::to_value(&h).expect("serializable");
                    if i.nvars() == 2 {
                        v["vertices"] =
                            serde_json::to_value(h.vertices_2d()?).expect("serializable");
                    }
                    v
                }
            };
            (echo(&i), result)
        }
        Command::Alpha(src) => {
            let i = load(src)?;
            let a = Rational::from_int(i.alpha()? as i64);
            (echo(&i), json!({ "value": rat(&a) }))
        }
        Command::Waldschmidt(src) => {
            let i = load(src)?;
            let v = waldschmidt::<Rational>(&i)?;
            (echo(&i), json!({ "value": rat(&v) }))
        }
        Command::NaiveWaldschmidt(src) => {
            let i = load(src)?;
            let v = naive_waldschmidt::<Rational>(&i)?;
            (echo(&i), json!({ "value": rat(&v) }))
        }
        Command::Bounds(src) => {
            let i = load(src)?;
            let report = bounds_report::<Rational>(&i)?;
            (
                echo(&i),
                serde_json::to_value(report).expect("serializable"),
            )
        }
        Command::Sequence { src, kind, max } => {
            let i = load(src)?;
            let values: Vec<Value> = alpha_sequence::<Rational>(&i, (*kind).into(), *max)?
                .iter()
                .map(rat)
                .collect();
            (echo(&i), json!({ "values": values }))
        }
        Command::Scan { count, seed, shape } => {
            let config = ScanConfig {
                count: *count,
                seed: *seed,
                shape: (*shape).into(),
            };
            let report = scan(config);
            let ok = report.ok;
            return Ok((
                serde_json::to_value(config).expect("serializable"),
                serde_json::to_value(report).expect("serializable"),
                ok,
            ));
        }
        Command::MaxIdealFormula { n, d } => {
            let value = naive_waldschmidt_max_ideal_power::<Rational>(*n, *d)?;
            let n_vars =
                usize::try_from(*n).map_err(|_| Error::InvalidArgument("n too large".into()))?;
            let d_exp =
                u32::try_from(*d).map_err(|_| Error::InvalidArgument("d too large".into()))?;
            let power = MonomialIdeal::maximal(n_vars).power(d_exp)?;
            let lp = naive_waldschmidt::<Rational>(&power)?;
            let result = json!({
                "value": rat(&value),
                "lp_agrees": lp == value,
                "floor_bound": max_ideal_floor_bound(*n, *d),
            });
            (json!({ "n": n, "d": d }), result)
        }
    };
    Ok((out.0, out.1, true))
}

fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if item.is_object() {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            format!(
                "[{}]",
                items.iter().map(inline).collect::<Vec<_>>().join(", ")
            )
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn emit<T: Serialize>(report: &T, pretty: bool) {
    let value = serde_json::to_value(report).expect("serializable");
    if pretty {
        let mut s = String::new();
        render(&value, 0, &mut s);
        print!("{s}");
    } else {
        println!("{value}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(raw) = std::env::var(GENERATOR_CAP_ENV) {
        match raw.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => set_generator_cap(cap),
            _ => {
                eprintln!("error: {GENERATOR_CAP_ENV} must be a positive integer, got `{raw}`");
                return ExitCode::from(2);
            }
        }
    }

    let command = cli.command.name();
    let start = Instant::now();
    match run(&cli.command) {
        Ok((input, result, ok)) => {
            let timing_ms = (!cli.no_timing).then(|| start.elapsed().as_secs_f64() * 1000.0);
            emit(
                &RunReport {
                    tool: TOOL,
                    version: VERSION,
                    command,
                    input,
                    result,
                    timing_ms,
                },
                cli.pretty,
            );
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let position = match &e {
                Error::Parse { position, .. } => Some(*position),
                _ => None,
            };
            emit(
                &ErrorReport {
                    tool: TOOL,
                    version: VERSION,
                    command,
                    error: ErrorBody {
                        kind: e.kind(),
                        message: e.to_string(),
                        position,
                    },
                },
                cli.pretty,
            );
            ExitCode::from(1)
        }
    }
}
