//! Command-line front end of the `rnc` binary.

use crate::arrangements::{
    generic_hilbert, ComponentShape, Configuration, HilbertOptions, RankBackend, WeightVector,
};
use crate::defectivity::{defect_check, defect_sweep, DefectQuery};
use crate::error::Error;
use crate::feasibility::{atlas, build_witness, verify_witness, Classifier, ClassifyOptions};
use crate::rnc::RationalCurve;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NO_PATH: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Modular,
}

#[derive(Debug, Parser)]
#[command(name = "rnc", version, about = "Rational normal curves through generic linear spaces")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// Seed for all sampling.
    #[arg(long, global = true, env = "RNC_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Rank computation for Hilbert function queries.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    pub backend: Backend,
    /// Largest degree tried by the Bezout rule.
    #[arg(long = "d-max", global = true, default_value_t = 3)]
    pub d_max: usize,
    /// Number of successive projections explored.
    #[arg(long, global = true, default_value_t = 2)]
    pub depth: usize,
    /// Output format; json by default, csv for atlas.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a weight vector.
    Classify {
        #[arg(short = 'n')]
        n: usize,
        /// Comma-separated counts l_0,...,l_{n-2}.
        weights: String,
    },
    /// Build and verify a witness curve.
    Witness {
        #[arg(short = 'n')]
        n: usize,
        weights: String,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Verify a curve against a configuration. Either file may be a witness.
    Verify {
        curve: PathBuf,
        config: Option<PathBuf>,
    },
    /// Classify every weight vector within the parameter count bound.
    Atlas {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Hilbert function of a generic configuration.
    Hilbert {
        /// JSON query {"n", "components": [{"dim", "mult"}], "d", "seed"}; '-' reads stdin.
        #[arg(long, conflicts_with_all = ["n", "components", "d"])]
        query: Option<PathBuf>,
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Components as dim or dim:mult, comma-separated.
        #[arg(long)]
        components: Option<String>,
        #[arg(short = 'd')]
        d: Option<usize>,
    },
    /// Defectivity of P^1 x P^m x P^m in multidegree (2,1,1).
    Defect {
        #[arg(long)]
        m: usize,
        /// A single s; all s = 1..2m+2 when omitted.
        #[arg(long)]
        s: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertQuery {
    pub n: usize,
    pub components: Vec<ComponentShape>,
    pub d: usize,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertAnswer {
    pub hf: usize,
    pub ideal_dim: usize,
    pub seeds_agreed: bool,
    pub values: Vec<usize>,
    pub seeds: Vec<u64>,
    pub exact: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidInput(_) | Error::DimensionMismatch { .. } => EXIT_PARSE,
            Error::NoConstructivePath(_) => EXIT_NO_PATH,
            Error::VerificationFailed(_) => EXIT_VERIFY,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| fail(EXIT_FAILURE, e.to_string()))?
    } else {
        std::fs::read_to_string(path).map_err(|e| fail(EXIT_FAILURE, format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn field<T: serde::de::DeserializeOwned>(v: &serde_json::Value, key: &str) -> Result<T, Failure> {
    let inner = v.get(key).unwrap_or(v);
    serde_json::from_value(inner.clone()).map_err(|e| fail(EXIT_PARSE, format!("{key}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn parse_components(s: &str) -> Result<Vec<ComponentShape>, Failure> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (dim, mult) = tok.split_once(':').unwrap_or((tok, "1"));
            match (dim.parse(), mult.parse()) {
                (Ok(dim), Ok(mult)) if mult > 0 => Ok(ComponentShape { dim, mult }),
                _ => Err(fail(EXIT_PARSE, format!("bad component '{tok}' (dim or dim:mult)"))),
            }
        })
        .collect()
}

fn write_out(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| fail(EXIT_FAILURE, format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| fail(EXIT_FAILURE, e.to_string())),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let run = &cli.run;
    let copts = ClassifyOptions { seed: run.seed, d_max: run.d_max, depth: run.depth };
    let hopts = HilbertOptions {
        backend: match run.backend {
            Backend::Exact => RankBackend::Exact,
            Backend::Modular => RankBackend::Modular,
        },
        normalize: true,
        seed: run.seed,
    };
    let emit = |s: String, stdout: &mut dyn Write| stdout.write_all(s.as_bytes()).map_err(|e| fail(EXIT_FAILURE, e.to_string()));
    match &cli.command {
        Command::Classify { n, weights } => {
            let l = WeightVector::parse(*n, weights)?;
            let v = Classifier::new(copts).classify(&l)?;
            let text = match run.format.unwrap_or(Format::Json) {
                Format::Text => format!("{} in P^{}: {} [{}]\n", v.weight, n, v.status, v.certificate.rule_name()),
                _ => to_json(&v),
            };
            emit(text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Witness { n, weights, out } => {
            let l = WeightVector::parse(*n, weights)?;
            let w = build_witness(&l, run.seed)?;
            write_out(out, &to_json(&w), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { curve, config } => {
            let cv = read_json(curve)?;
            let c: RationalCurve = field(&cv, "curve")?;
            let cfg: Configuration = match config {
                Some(p) => field(&read_json(p)?, "configuration")?,
                None => field(&cv, "configuration")?,
            };
            let report = verify_witness(&c, &cfg).map_err(|e| fail(EXIT_VERIFY, e.to_string()))?;
            emit(to_json(&report), stdout)?;
            Ok(if report.ok { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Atlas { n, out } => {
            if *n < 2 {
                return Err(fail(EXIT_PARSE, "atlas needs n >= 2"));
            }
            let a = atlas(*n, &copts)?;
            let text = match run.format.unwrap_or(Format::Csv) {
                Format::Json => to_json(&a),
                Format::Text => {
                    let c = &a.counts;
                    format!("P^{}: {} feasible, {} non-feasible, {} unknown\n", n, c.feasible, c.non_feasible, c.unknown)
                }
                Format::Csv => a.to_csv(),
            };
            write_out(out, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Hilbert { query, n, components, d } => {
            let q: HilbertQuery = match query {
                Some(p) => field(&read_json(p)?, "query")?,
                None => HilbertQuery {
                    n: n.ok_or_else(|| fail(EXIT_PARSE, "missing -n"))?,
                    components: match components {
                        Some(c) => parse_components(c)?,
                        None => vec![],
                    },
                    d: d.ok_or_else(|| fail(EXIT_PARSE, "missing -d"))?,
                    seed: None,
                },
            };
            let ev = generic_hilbert(q.n, &q.components, q.d, q.seed.unwrap_or(run.seed), &hopts)?;
            let ans = HilbertAnswer {
                hf: ev.hf,
                ideal_dim: ev.ideal_dim,
                seeds_agreed: ev.seeds_agreed,
                values: ev.values,
                seeds: ev.seeds,
                exact: ev.exact,
            };
            emit(to_json(&ans), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Defect { m, s } => {
            let text = match s {
                Some(s) => to_json(&defect_check(&DefectQuery::new(*m, *s)?, run.seed, &hopts)?),
                None => to_json(&defect_sweep(*m, run.seed, &hopts)?),
            };
            emit(text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
