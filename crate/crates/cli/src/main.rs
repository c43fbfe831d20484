use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ringinv::job::{self, exit};
use ringinv::{render, Command, JobSpec};
use ringinv_core::oracle::CATALOG;
use ringinv_core::Error;
use serde_json::Value;

/// Exact generalized inverses in Z_n and small matrix rings.
///
/// Exit codes: 0 found or all pass, 1 none, 2 counterexample, 3 budget
/// exceeded, 64 usage or malformed input, 65 ring has no involution,
/// 66 ring is infinite, 70 internal error.
#[derive(Parser)]
#[command(name = "ringinv", version)]
struct Cli {
    /// Read a JSON job spec from a file, or from stdin with `-`.
    #[arg(long, global = false)]
    job: Option<String>,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Subcommand)]
enum Sub {
    /// Compute a named inverse of one element.
    Compute {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        element: String,
        /// inner, group, drazin, moore-penrose, core, dual-core, ef-mp, e-core,
        /// f-dual-core, w-core, v-dual-core, right-w-core, left-v-dual-core,
        /// bc, pq, bott-duffin
        #[arg(long)]
        inverse: String,
        #[arg(long)]
        e: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
        /// bc: full, right_hybrid, left_hybrid, annihilator.
        /// pq: djordjevic-wei, image-kernel, bott-duffin.
        #[arg(long)]
        flavor: Option<String>,
    },
    /// List an inverse set such as a{1,2} on a finite ring.
    Enumerate {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        element: String,
        /// Comma list, e.g. "1,2" or "2,5,1^2".
        #[arg(long)]
        equations: String,
        /// Print only the cardinality.
        #[arg(long)]
        count_only: bool,
    },
    /// Inverses with prescribed ideals.
    Prescribe {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        element: String,
        /// JSON object with right_prin, right_ann, left_prin, left_ann.
        #[arg(long)]
        constraints: String,
        /// one, outer or reflexive.
        #[arg(long)]
        mode: String,
    },
    /// Run catalog entries exhaustively.
    Verify {
        #[arg(long)]
        ring: Option<String>,
        /// Comma list of ids, or "all".
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long)]
        max_cases: Option<u64>,
    },
    /// Print the theorem catalog.
    Catalog,
}

fn json_arg(text: &str) -> Result<Value, Error> {
    let t = text.trim();
    if t.starts_with('[') || t.starts_with('{') || t.starts_with('"') {
        serde_json::from_str(t).map_err(|e| Error::Parse(format!("{t}: {e}")))
    } else {
        Ok(Value::String(t.to_string()))
    }
}

fn ring_arg(text: &str) -> Result<Value, Error> {
    json_arg(text)
}

fn build(sub: Sub) -> Result<JobSpec, Error> {
    let mut options = BTreeMap::new();
    let (command, ring, element) = match sub {
        Sub::Compute { ring, element, inverse, e, f, w, v, b, c, p, q, flavor } => {
            options.insert("inverse".into(), Value::String(inverse));
            for (k, val) in [("e", e), ("f", f), ("w", w), ("v", v), ("b", b), ("c", c), ("p", p), ("q", q)] {
                if let Some(val) = val {
                    options.insert(k.into(), json_arg(&val)?);
                }
            }
            if let Some(fl) = flavor {
                options.insert("flavor".into(), Value::String(fl));
            }
            (Command::Compute, Some(ring_arg(&ring)?), Some(json_arg(&element)?))
        }
        Sub::Enumerate { ring, element, equations, count_only } => {
            options.insert("equations".into(), Value::String(equations));
            if count_only {
                options.insert("count_only".into(), Value::Bool(true));
            }
            (Command::Enumerate, Some(ring_arg(&ring)?), Some(json_arg(&element)?))
        }
        Sub::Prescribe { ring, element, constraints, mode } => {
            options.insert("constraints".into(), serde_json::from_str(&constraints).map_err(|e| Error::MalformedConstraint(format!("constraints: {e}")))?);
            options.insert("mode".into(), Value::String(mode));
            (Command::Prescribe, Some(ring_arg(&ring)?), Some(json_arg(&element)?))
        }
        Sub::Verify { ring, theorems, max_cases } => {
            options.insert("theorems".into(), Value::String(theorems));
            if let Some(n) = max_cases {
                options.insert("max_cases".into(), Value::from(n));
            }
            (Command::Verify, ring.as_deref().map(ring_arg).transpose()?, None)
        }
        Sub::Catalog => unreachable!("handled before building a job"),
    };
    Ok(JobSpec { command, ring, element, options })
}

fn emit(out: job::JobOutput) -> ExitCode {
    for line in &out.log {
        eprintln!("{line}");
    }
    if let Some(err) = out.json.get("error") {
        eprintln!("ringinv: {}", err["message"].as_str().unwrap_or("error"));
        if let Some(cat) = err.get("catalog") {
            eprintln!("known theorem ids: {}", cat.as_array().map(|v| v.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", ")).unwrap_or_default());
        }
    }
    print!("{}", render(&out.json));
    ExitCode::from(out.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let spec = match (cli.job, cli.command) {
        (Some(_), Some(_)) => Err(Error::Parse("--job cannot be combined with a subcommand".into())),
        (Some(path), None) => {
            let mut text = String::new();
            let read = if path == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(&path).map(|t| text = t)
            };
            read.map_err(|e| Error::Parse(format!("reading {path}: {e}"))).and_then(|_| job::parse_job(&text))
        }
        (None, Some(Sub::Catalog)) => {
            let list: Vec<Value> = CATALOG
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "statement": c.statement,
                        "scope": c.scope,
                        "needs_involution": c.needs_involution,
                    })
                })
                .collect();
            print!("{}", render(&Value::Array(list)));
            return ExitCode::from(exit::OK);
        }
        (None, Some(sub)) => build(sub),
        (None, None) => Err(Error::Parse("expected a subcommand or --job".into())),
    };
    match spec {
        Ok(spec) => emit(ringinv::run(&spec)),
        Err(e) => emit(job::error_output(&e)),
    }
}
