//! Job specs and their execution.

use std::collections::BTreeMap;

use rayon::prelude::*;
use ringinv_core::field::{PrimeField, Rationals, ScalarSpec};
use ringinv_core::geninv::{
    core_report, count_inverse_set, drazin_inverse, enumerate_inverse_set, group_inverse, inner_inverse,
    moore_penrose_report, CoreKind, EquationSet, InverseReport,
};
use ringinv_core::ideal::{IdealLattice, Side};
use ringinv_core::oracle::{self, Budget, Status, VerificationReport};
use ringinv_core::prescribed::{
    one_inverse_family, prescribed_inverse, prescribed_set, validate_constraints, IdealConstraints, Mode,
};
use ringinv_core::ring::{MatrixRing, RingSpec, Zn};
use ringinv_core::special::{
    bc_inverse, e_core, f_dual_core, left_v_dual_core, pq_inverse, right_w_core, v_dual_core, w_core, weighted_mp,
    BcFlavor, PqFlavor, Witnessed,
};
use ringinv_core::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::codec;

/// Stable process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const NONE: u8 = 1;
    pub const COUNTEREXAMPLE: u8 = 2;
    pub const BUDGET: u8 = 3;
    pub const USAGE: u8 = 64;
    pub const NO_INVOLUTION: u8 = 65;
    pub const INFINITE: u8 = 66;
    pub const INTERNAL: u8 = 70;
}

pub const INVERSE_NAMES: [&str; 16] = [
    "inner",
    "group",
    "drazin",
    "moore-penrose",
    "core",
    "dual-core",
    "ef-mp",
    "e-core",
    "f-dual-core",
    "w-core",
    "v-dual-core",
    "right-w-core",
    "left-v-dual-core",
    "bc",
    "pq",
    "bott-duffin",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Compute,
    Enumerate,
    Prescribe,
    Verify,
}

/// One command with its inputs. `ring` is a shorthand string or a JSON spec.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, Value>,
}

/// Output document and exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct JobOutput {
    pub json: Value,
    pub exit: u8,
    /// Diagnostics such as per-theorem timings, kept out of `json`.
    pub log: Vec<String>,
}

impl JobOutput {
    pub fn new(json: Value, exit: u8) -> Self {
        JobOutput { json, exit, log: Vec::new() }
    }
}

pub fn parse_job(text: &str) -> Result<JobSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("job spec: {e}")))
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedInvolution => exit::NO_INVOLUTION,
        Error::NotEnumerable => exit::INFINITE,
        Error::Internal(_) => exit::INTERNAL,
        _ => exit::USAGE,
    }
}

pub fn error_output(e: &Error) -> JobOutput {
    let kind = match e {
        Error::RingMismatch(_) => "ring_mismatch",
        Error::UnsupportedInvolution => "unsupported_involution",
        Error::NotEnumerable => "not_enumerable",
        Error::SideMismatch => "side_mismatch",
        Error::InvalidSpec(_) => "invalid_spec",
        Error::Precondition(_) => "precondition",
        Error::Undecidable(_) => "undecidable",
        Error::MalformedConstraint(_) => "malformed_constraint",
        Error::Parse(_) => "parse",
        Error::Internal(_) => "internal",
    };
    let mut err = json!({"kind": kind, "message": e.to_string()});
    if let Error::Precondition(m) = e {
        if m.starts_with("unknown theorem id") {
            err["catalog"] = json!(oracle::CATALOG.iter().map(|c| c.id).collect::<Vec<_>>());
        }
    }
    JobOutput::new(json!({ "error": err }), exit_code(e))
}

/// Runs a job; library errors become an error document with their exit code.
pub fn run(job: &JobSpec) -> JobOutput {
    match run_inner(job) {
        Ok(out) => out,
        Err(e) => error_output(&e),
    }
}

fn run_inner(job: &JobSpec) -> Result<JobOutput> {
    let spec = match &job.ring {
        Some(v) => codec::ring_from_json(v)?,
        None if job.command == Command::Verify => {
            // Unknown ids are reported before the ring is needed.
            check_theorems(job)?;
            return Err(Error::Parse("missing ring".into()));
        }
        None => return Err(Error::Parse("missing ring".into())),
    };
    macro_rules! dispatch {
        ($r:ident => $body:expr) => {
            match &spec {
                RingSpec::Modular(n) => {
                    let $r = &Zn::new(*n)?;
                    $body
                }
                RingSpec::Matrix { size, scalars: ScalarSpec::Rationals, involution } => {
                    let $r = &MatrixRing::new(Rationals, *size, *involution)?;
                    $body
                }
                RingSpec::Matrix { size, scalars: ScalarSpec::PrimeField(p), involution } => {
                    let $r = &MatrixRing::new(PrimeField::new(*p)?, *size, *involution)?;
                    $body
                }
            }
        };
    }
    let mut out = dispatch!(r => match job.command {
        Command::Compute => compute(r, job),
        Command::Enumerate => enumerate(r, job),
        Command::Prescribe => prescribe(r, job),
        Command::Verify => verify(r, job),
    })?;
    if let Value::Object(m) = &mut out.json {
        m.insert("ring".into(), codec::ring_to_json(&spec));
        m.insert("command".into(), serde_json::to_value(job.command).expect("command serializes"));
    }
    Ok(out)
}

fn opt_str<'a>(job: &'a JobSpec, key: &str) -> Result<Option<&'a str>> {
    match job.options.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s)),
        Some(v) => Err(Error::Parse(format!("option {key} must be a string, got {v}"))),
    }
}

fn req_str<'a>(job: &'a JobSpec, key: &str) -> Result<&'a str> {
    opt_str(job, key)?.ok_or_else(|| Error::Parse(format!("missing option {key}")))
}

fn element<R: IdealLattice>(r: &R, job: &JobSpec) -> Result<R::Elem> {
    let v = job.element.as_ref().ok_or_else(|| Error::Parse("missing element".into()))?;
    codec::parse_elem(r, v)
}

fn opt_elem<R: IdealLattice>(r: &R, job: &JobSpec, key: &str) -> Result<R::Elem> {
    let v = job.options.get(key).ok_or_else(|| Error::Parse(format!("missing option {key}")))?;
    codec::parse_elem(r, v)
}

fn found<R: IdealLattice>(r: &R, a: &R::Elem, x: Option<R::Elem>, reason: impl Into<String>) -> InverseReport<R> {
    match x {
        Some(x) => InverseReport::unique(r, a, x),
        None => InverseReport::none(a, reason),
    }
}

fn from_result<R: IdealLattice>(r: &R, a: &R::Elem, x: core::result::Result<R::Elem, String>) -> InverseReport<R> {
    match x {
        Ok(x) => InverseReport::unique(r, a, x),
        Err(why) => InverseReport::none(a, why),
    }
}

fn witnessed<R: IdealLattice>(r: &R, a: &R::Elem, w: Witnessed<R::Elem>, eqs: &[u8], what: &str) -> InverseReport<R> {
    match w.witness {
        None => InverseReport::none(a, format!("no {what}")),
        Some(x) => match &w.members {
            Some(ms) if ms.len() == 1 => InverseReport::unique(r, a, ms[0].clone()),
            _ => InverseReport::family(a, format!("{what}s, one witness {}", r.render(&x)), w.members, EquationSet::of(eqs))
                .with_note(format!("witness {}", r.render(&x))),
        },
    }
}

fn compute<R: IdealLattice>(r: &R, job: &JobSpec) -> Result<JobOutput> {
    let name = req_str(job, "inverse")?;
    let a = element(r, job)?;
    let rep = match name {
        "inner" => inner_inverse(r, &a)?,
        "group" => group_inverse(r, &a)?,
        "drazin" => drazin_inverse(r, &a)?,
        "moore-penrose" => moore_penrose_report(r, &a)?,
        "core" => core_report(r, &a, CoreKind::Core)?,
        "dual-core" => core_report(r, &a, CoreKind::DualCore)?,
        "ef-mp" => {
            let (e, f) = (opt_elem(r, job, "e")?, opt_elem(r, job, "f")?);
            found(r, &a, weighted_mp(r, &a, &e, &f)?, "no weighted Moore-Penrose inverse")
        }
        "e-core" => {
            let e = opt_elem(r, job, "e")?;
            found(r, &a, e_core(r, &a, &e)?, "no e-core inverse")
        }
        "f-dual-core" => {
            let f = opt_elem(r, job, "f")?;
            found(r, &a, f_dual_core(r, &a, &f)?, "no f-dual core inverse")
        }
        "w-core" => from_result(r, &a, w_core(r, &a, &opt_elem(r, job, "w")?)?),
        "v-dual-core" => from_result(r, &a, v_dual_core(r, &a, &opt_elem(r, job, "v")?)?),
        "right-w-core" => witnessed(r, &a, right_w_core(r, &a, &opt_elem(r, job, "w")?)?, &[1, 3, 7], "right w-core inverse"),
        "left-v-dual-core" => {
            witnessed(r, &a, left_v_dual_core(r, &a, &opt_elem(r, job, "v")?)?, &[1, 4, 9], "left v-dual core inverse")
        }
        "bc" => {
            let (b, c) = (opt_elem(r, job, "b")?, opt_elem(r, job, "c")?);
            let flavor = BcFlavor::parse(opt_str(job, "flavor")?.unwrap_or("full"))?;
            let bc = bc_inverse(r, &a, &b, &c, flavor)?;
            let mut rep = found(r, &a, bc.result.clone(), bc.reason.clone().unwrap_or_default());
            if let Some(x) = &bc.closed_form {
                rep = rep.with_note(format!("b(cab)^(1)c = {}", r.render(x)));
            }
            if bc.invertible_case == Some(true) {
                rep = rep.with_note("cab is invertible and b(cab)^-1 c is the hybrid inverse");
            }
            rep
        }
        "pq" | "bott-duffin" => {
            let p = opt_elem(r, job, "p")?;
            let (q, flavor) = if name == "bott-duffin" {
                (p.clone(), PqFlavor::BottDuffin)
            } else {
                let flavor = match opt_str(job, "flavor")?.unwrap_or("djordjevic-wei") {
                    "djordjevic-wei" => PqFlavor::DjordjevicWei,
                    "image-kernel" => PqFlavor::ImageKernel,
                    "bott-duffin" => PqFlavor::BottDuffin,
                    other => return Err(Error::Parse(format!("unknown pq flavor {other:?}"))),
                };
                (opt_elem(r, job, "q")?, flavor)
            };
            let pq = pq_inverse(r, &a, &p, &q, flavor)?;
            let mut rep = found(r, &a, pq.result.clone(), pq.reason.clone().unwrap_or_default());
            for n in pq.notes {
                rep = rep.with_note(n);
            }
            rep
        }
        other => {
            return Err(Error::Parse(format!("unknown inverse {other:?}; expected one of {}", INVERSE_NAMES.join(", "))))
        }
    };
    let mut m = codec::inverse_report(r, &rep);
    m.insert("inverse".into(), name.into());
    let exit = if rep.result().is_some() || matches!(&rep.outcome, ringinv_core::geninv::Outcome::Family { .. }) {
        exit::OK
    } else {
        exit::NONE
    };
    Ok(JobOutput::new(Value::Object(m), exit))
}

fn enumerate<R: IdealLattice>(r: &R, job: &JobSpec) -> Result<JobOutput> {
    let eqs = EquationSet::parse(req_str(job, "equations")?)?;
    let a = element(r, job)?;
    if r.size().is_none() {
        return Err(Error::NotEnumerable);
    }
    let count_only = job.options.get("count_only").and_then(Value::as_bool).unwrap_or(false);
    if count_only {
        let n = count_inverse_set(r, &a, &eqs)?;
        return Ok(JobOutput::new(n.into(), exit::OK));
    }
    let mut m = Map::new();
    m.insert("element".into(), codec::elem(r, &a));
    m.insert("equations".into(), eqs.to_string().into());
    {
        let xs = enumerate_inverse_set(r, &a, &eqs)?;
        m.insert("count".into(), xs.len().into());
        m.insert("members".into(), codec::elems(r, &xs));
    }
    Ok(JobOutput::new(Value::Object(m), exit::OK))
}

fn constraints<R: IdealLattice>(r: &R, v: &Value) -> Result<IdealConstraints<R::Ideal>> {
    let obj = v.as_object().ok_or_else(|| Error::MalformedConstraint("constraints must be an object".into()))?;
    let mut c = IdealConstraints::default();
    for (k, body) in obj {
        let (slot, side) = match k.as_str() {
            "right_prin" => (&mut c.right_prin, Side::Right),
            "right_ann" => (&mut c.right_ann, Side::Right),
            "left_prin" => (&mut c.left_prin, Side::Left),
            "left_ann" => (&mut c.left_ann, Side::Left),
            other => return Err(Error::MalformedConstraint(format!("unknown constraint {other:?}"))),
        };
        *slot = Some(codec::parse_ideal(r, side, body)?);
    }
    validate_constraints(r, &c)?;
    Ok(c)
}

fn prescribe<R: IdealLattice>(r: &R, job: &JobSpec) -> Result<JobOutput> {
    let a = element(r, job)?;
    let c = constraints(r, job.options.get("constraints").ok_or_else(|| Error::Parse("missing option constraints".into()))?)?;
    let shape = validate_constraints(r, &c)?;
    let mode = req_str(job, "mode")?;
    let mut m = Map::new();
    m.insert("element".into(), codec::elem(r, &a));
    m.insert("mode".into(), mode.into());
    m.insert("shape".into(), shape.as_str().into());
    let found_any = match mode {
        "one" => match one_inverse_family(r, &a, &c)? {
            Ok(f) => {
                m.insert("status".into(), "family".into());
                m.insert(
                    "family".into(),
                    json!({
                        "inner": codec::elem(r, &f.inner),
                        "left_mult": codec::elem(r, &f.left_mult),
                        "right_mult": codec::elem(r, &f.right_mult),
                        "base": codec::elem(r, &f.base),
                        "formula": "left_mult a1 right_mult + (1 - a1 a) y (1 - a a1)",
                        "over_all_inner": f.over_all_inner,
                        "free_parameter": f.free_parameter_role,
                    }),
                );
                if let Some(ms) = &f.members {
                    m.insert("count".into(), ms.len().into());
                    m.insert("members".into(), codec::elems(r, ms));
                }
                true
            }
            Err(why) => {
                m.insert("status".into(), "none".into());
                m.insert("reason".into(), why.into());
                false
            }
        },
        "outer" | "reflexive" => {
            let reflexive = mode == "reflexive";
            if shape.is_pair() {
                match prescribed_inverse(r, &a, &c, reflexive)? {
                    Ok(x) => {
                        m.insert("status".into(), "found".into());
                        m.insert("result".into(), codec::elem(r, &x));
                        true
                    }
                    Err(why) => {
                        m.insert("status".into(), "none".into());
                        m.insert("reason".into(), why.into());
                        false
                    }
                }
            } else {
                if r.size().is_none() {
                    return Err(Error::MalformedConstraint(format!(
                        "shape {} does not determine a unique inverse; set listing needs a finite ring",
                        shape.as_str()
                    )));
                }
                let xs = prescribed_set(r, &a, &c, if reflexive { Mode::Reflexive } else { Mode::Outer })?;
                m.insert("status".into(), if xs.is_empty() { "none" } else { "family" }.into());
                m.insert("count".into(), xs.len().into());
                m.insert("members".into(), codec::elems(r, &xs));
                !xs.is_empty()
            }
        }
        other => return Err(Error::Parse(format!("unknown mode {other:?}; expected one, outer or reflexive"))),
    };
    Ok(JobOutput::new(Value::Object(m), if found_any { exit::OK } else { exit::NONE }))
}

fn theorem_ids(job: &JobSpec) -> Result<Vec<&'static str>> {
    let ids: Vec<String> = match job.options.get("theorems") {
        None | Some(Value::Null) => vec![String::from("all")],
        Some(Value::String(s)) => s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect(),
        Some(Value::Array(xs)) => xs.iter().map(|x| x.as_str().map(String::from).ok_or_else(|| Error::Parse("theorem ids must be strings".into()))).collect::<Result<_>>()?,
        Some(v) => return Err(Error::Parse(format!("theorems must be a string or list, got {v}"))),
    };
    if ids.iter().any(|i| i == "all") {
        return Ok(oracle::CATALOG.iter().map(|c| c.id).collect());
    }
    ids.iter()
        .map(|i| oracle::lookup(i).map(|c| c.id).ok_or_else(|| Error::Precondition(format!("unknown theorem id {i}"))))
        .collect()
}

fn check_theorems(job: &JobSpec) -> Result<()> {
    theorem_ids(job).map(|_| ())
}

fn verify<R: IdealLattice>(r: &R, job: &JobSpec) -> Result<JobOutput> {
    let ids = theorem_ids(job)?;
    let budget = Budget { max_cases: job.options.get("max_cases").and_then(Value::as_u64) };
    let mut log = Vec::new();
    let reports: Vec<VerificationReport> = ids
        .par_iter()
        .map(|id| {
            let start = std::time::Instant::now();
            oracle::verify(r, id, budget).map(|rep| (rep, start.elapsed()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .map(|(rep, took)| {
            log.push(format!("{} on {}: {} ({} cases, {took:.2?})", rep.theorem, rep.ring, rep.status.as_str(), rep.cases_checked));
            rep
        })
        .collect();
    let exit = if reports.iter().any(|r| r.status == Status::Fail) {
        exit::COUNTEREXAMPLE
    } else if reports.iter().any(|r| r.status == Status::Incomplete) {
        exit::BUDGET
    } else {
        exit::OK
    };
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let summary = json!({
        "pass": count(Status::Pass),
        "fail": count(Status::Fail),
        "incomplete": count(Status::Incomplete),
        "not_applicable": count(Status::NotApplicable),
    });
    Ok(JobOutput {
        json: json!({
            "reports": reports.iter().map(codec::verification_report).collect::<Vec<_>>(),
            "summary": summary,
        }),
        exit,
        log,
    })
}

/// Canonical pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
