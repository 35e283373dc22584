use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cameral::rootdata::{Family, RootDatum, DEFAULT_MAX_GROUP_ORDER};
use cameral::Error;

mod commands;
mod render;

/// Exact checks on root data, Weyl-group cohomology, cameral covers and
/// Hitchin-base dimensions. Prints one JSON report per run.
#[derive(Parser, Debug)]
#[command(name = "cameral", version)]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Include wall-clock duration in the report.
    #[arg(long, global = true)]
    timing: bool,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,

    /// Largest Weyl group that may be enumerated.
    #[arg(long, global = true, env = "CAMERAL_MAX_GROUP_ORDER", default_value_t = DEFAULT_MAX_GROUP_ORDER)]
    max_group_order: usize,

    /// Largest number of candidate divisors enumerated over a finite field.
    #[arg(long, global = true, env = "CAMERAL_MAX_ENUM", default_value_t = cameral::rank1::DEFAULT_MAX_ENUM)]
    max_enum: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct DatumArgs {
    /// Classical family: GL, SL, PGL, Sp or SO.
    #[arg(long = "type", value_name = "FAMILY", requires = "n", conflicts_with = "datum")]
    pub family: Option<String>,

    /// Matrix size.
    #[arg(long)]
    pub n: Option<usize>,

    /// Path to a root datum in JSON.
    #[arg(long, value_name = "FILE")]
    pub datum: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, coroots, Weyl group order, degrees and primitivity.
    Rootdata(DatumArgs),
    /// Exhaustive scan of the ramification cocycle identity.
    Ramcheck {
        #[command(flatten)]
        datum: DatumArgs,
        /// Only check the identity element.
        #[arg(long)]
        identity_only: bool,
    },
    /// Decides whether the normalizer extension splits.
    Titsclass {
        #[command(flatten)]
        datum: DatumArgs,
        /// Also build and verify an explicit splitting.
        #[arg(long)]
        witness: bool,
    },
    /// Spectral/cameral roundtrip for a GL(n) cover.
    Cover {
        /// Cover as JSON, e.g. '{"n": 2, "coefficients": ["2", "-3"]}'.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        json: Option<String>,
        /// Path to a cover in JSON.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Rank-one torsor experiment on y² = f(x) over F_q.
    Rank1 {
        /// Odd prime power.
        #[arg(long)]
        q: u32,
        /// Genus; a default curve is chosen.
        #[arg(long, conflicts_with = "f", required_unless_present = "f")]
        g: Option<usize>,
        /// f as a polynomial ("x^5+x+1") or coefficients low degree first ("1,1,0,0,0,1").
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
    },
    /// Hitchin base and Prym dimensions.
    Hitchin {
        #[command(flatten)]
        datum: DatumArgs,
        /// Genus of the base curve; repeat or comma-separate for a table.
        #[arg(long, required = true, value_delimiter = ',')]
        g: Vec<u32>,
    },
    /// Runs the built-in acceptance checks.
    Selftest {
        /// Restrict to these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
    },
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Value,
    results: Value,
    passed: bool,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    duration_ms: Option<u128>,
}

/// A failure before any check ran: bad input (exit 2) or a runtime error
/// such as an exhausted budget (exit 1, still reported).
pub enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedFamily { .. } | Error::InvalidDatum(_) | Error::InvalidCurve(_) | Error::Precondition(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other),
        }
    }
}

/// Operation-specific results and the overall pass flag.
pub type Outcome = (Value, bool);

fn inputs(command: &Command) -> Value {
    match command {
        Command::Rootdata(d) => d.echo(),
        Command::Ramcheck { datum, identity_only } => json!({ "datum": datum.echo(), "identity_only": identity_only }),
        Command::Titsclass { datum, witness } => json!({ "datum": datum.echo(), "witness": witness }),
        Command::Cover { json, file } => match (json, file) {
            (Some(j), _) => serde_json::from_str(j).unwrap_or_else(|_| json!(j)),
            (None, Some(p)) => json!({ "file": p.display().to_string() }),
            _ => Value::Null,
        },
        Command::Rank1 { q, g, f } => json!({ "q": q, "g": g, "f": f }),
        Command::Hitchin { datum, g } => json!({ "datum": datum.echo(), "g": g }),
        Command::Selftest { only } => json!({ "only": only }),
    }
}

impl DatumArgs {
    pub fn load(&self) -> Result<RootDatum, Failure> {
        if let Some(path) = &self.datum {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            return serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())));
        }
        let (Some(family), Some(n)) = (&self.family, self.n) else {
            return Err(Failure::Usage("give --type and --n, or --datum".into()));
        };
        let family: Family = family.parse()?;
        Ok(cameral::rootdata::build_classical(family, n)?)
    }

    pub fn echo(&self) -> Value {
        match (&self.datum, &self.family) {
            (Some(p), _) => json!({ "datum": p.display().to_string() }),
            (None, Some(f)) => json!({ "type": f, "n": self.n }),
            _ => Value::Null,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let budgets = commands::Budgets { max_group_order: cli.max_group_order, max_enum: cli.max_enum };
    let (name, result) = match &cli.command {
        Command::Rootdata(d) => ("rootdata", commands::rootdata(d, budgets)),
        Command::Ramcheck { datum, identity_only } => ("ramcheck", commands::ramcheck(datum, *identity_only, budgets)),
        Command::Titsclass { datum, witness } => ("titsclass", commands::titsclass(datum, *witness, budgets)),
        Command::Cover { json, file } => ("cover", commands::cover(json.as_deref(), file.as_deref(), cli.seed)),
        Command::Rank1 { q, g, f } => ("rank1", commands::rank1(*q, *g, f.as_deref(), budgets)),
        Command::Hitchin { datum, g } => ("hitchin", commands::hitchin(datum, g)),
        Command::Selftest { only } => ("selftest", commands::selftest(only, cli.seed)),
    };
    let (results, passed) = match result {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Runtime(e)) => (json!({ "error": e.to_string() }), false),
    };
    let report = RunReport {
        command: name.to_string(),
        inputs: inputs(&cli.command),
        results,
        passed,
        seed: cli.seed,
        duration_ms: cli.timing.then(|| start.elapsed().as_millis()),
    };
    if cli.pretty {
        print!("{}", render::table(&serde_json::to_value(&report).expect("report serializes")));
    } else {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
