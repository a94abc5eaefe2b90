//! One query in, one JSON document out. Shared by the command line tool and
//! the C interface.

use serde_json::{json, Map, Value as Json};

use crate::error::{Error, Result};
use crate::fringe;
use crate::integers::nth_prime;
use crate::laurent;
use crate::ring::{Decision, Kind, Limits, Mode, Ring};
use crate::syntax::{parse_descriptor, parse_element, parse_stage};
use crate::value::Value;

pub const COMMANDS: &[&str] = &[
    "divisors",
    "units",
    "irreducible",
    "prime",
    "associates",
    "factor",
    "reduce",
    "member",
    "stage-trace",
    "parse",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Query {
    pub command: String,
    pub ring: String,
    pub elems: Vec<String>,
    /// `limit`, `stage:K` or `at-stage:K`.
    pub mode: Option<String>,
    pub max_tuples: Option<u64>,
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: Json,
    pub exit_code: i32,
}

impl Outcome {
    /// Pretty-printed document with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("json");
        s.push('\n');
        s
    }
}

pub fn parse_mode(text: &str) -> Result<Mode> {
    let t = text.trim();
    if t == "limit" {
        return Ok(Mode::Limit);
    }
    let k = t
        .strip_prefix("at-stage:")
        .or_else(|| t.strip_prefix("stage:"))
        .unwrap_or(t);
    parse_stage(k)
        .map(Mode::AtStage)
        .ok_or_else(|| Error::Validation(format!("bad mode `{text}`; use limit or stage:K")))
}

fn decision(d: Decision) -> Json {
    Json::String(d.to_string())
}

fn arity(q: &Query, n: usize) -> Result<()> {
    if q.elems.len() == n {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "{} takes {n} element argument(s), got {}",
            q.command,
            q.elems.len()
        )))
    }
}

fn texts(r: &Ring, vs: &[Value]) -> Result<Vec<String>> {
    vs.iter().map(|v| r.format(v)).collect()
}

/// Split `p = a·b` for a destroyed prime, in the ring `r` or the base of a
/// fringe ring over it.
fn split_of(r: &Ring, v: &Value) -> Result<Option<(String, String)>> {
    let (base, n) = match (r.kind(), v) {
        (Kind::Laurent { .. }, Value::Laurent(l)) => (r.clone(), laurent_integer(l)),
        (Kind::Fringe { base, .. }, Value::Fringe(c)) if c.len() == 1 => {
            let x = base.from_ambient(&c[0].num, &c[0].den)?;
            match &x {
                Value::Laurent(l) => (base.clone(), laurent_integer(l)),
                _ => return Ok(None),
            }
        }
        _ => return Ok(None),
    };
    let (Some(stages), Some(n)) = (base.laurent_stages(), n) else {
        return Ok(None);
    };
    let Some((a, b)) = laurent::split_witness(&stages, &num_traits::Signed::abs(&n)) else {
        return Ok(None);
    };
    Ok(Some((
        base.format(&Value::Laurent(a))?,
        base.format(&Value::Laurent(b))?,
    )))
}

fn laurent_integer(l: &crate::value::Laurent) -> Option<num_bigint::BigInt> {
    if l.terms.len() != 1 {
        return None;
    }
    let (e, c) = l.terms.iter().next()?;
    e.iter().all(|&x| x == 0).then(|| c.clone())
}

fn execute(q: &Query, out: &mut Map<String, Json>) -> Result<()> {
    if !COMMANDS.contains(&q.command.as_str()) {
        return Err(Error::Validation(format!("unknown command `{}`", q.command)));
    }
    let mut ring = parse_descriptor(&q.ring)?;
    let mut limits: Limits = ring.limits();
    if let Some(t) = q.max_tuples {
        limits.max_tuples = t;
    }
    if let Some(d) = q.max_degree {
        limits.max_degree = d;
    }
    ring = ring.with_limits(limits);
    out.insert("ring".into(), json!(ring.to_string()));
    if let Some(m) = &q.mode {
        let mode = parse_mode(m)?;
        if !ring.is_staged() {
            return Err(Error::Validation(format!(
                "--mode applies only to staged descriptors, not {ring}"
            )));
        }
        out.insert(
            "mode".into(),
            json!(match mode {
                Mode::Limit => "limit".to_string(),
                Mode::AtStage(k) => format!("stage:{k}"),
            }),
        );
        ring = ring.with_mode(mode)?.with_limits(limits);
        out.insert("effective_ring".into(), json!(ring.to_string()));
    }
    let elem = |i: usize| -> Result<Value> { parse_element(&ring, &q.elems[i]) };
    match q.command.as_str() {
        "divisors" => {
            arity(q, 1)?;
            let a = elem(0)?;
            let ds = ring.divisors(&a)?;
            out.insert("elem".into(), json!(ring.format(&a)?));
            out.insert("count".into(), json!(ds.len()));
            out.insert("divisors".into(), json!(texts(&ring, &ds)?));
        }
        "units" => {
            arity(q, 0)?;
            out.insert("units".into(), json!(texts(&ring, &ring.units()?)?));
        }
        "irreducible" => {
            arity(q, 1)?;
            let a = elem(0)?;
            let d = ring.is_irreducible(&a)?;
            out.insert("elem".into(), json!(ring.format(&a)?));
            out.insert("result".into(), decision(d));
            if d == Decision::False {
                if let Some((x, y)) = split_of(&ring, &a)? {
                    out.insert("witness".into(), json!([x, y]));
                }
            }
        }
        "prime" => {
            arity(q, 1)?;
            let a = elem(0)?;
            let d = ring.is_prime(&a)?;
            out.insert("elem".into(), json!(ring.format(&a)?));
            out.insert("result".into(), decision(d));
            if let (Decision::False, Kind::Fringe { base, .. }, Value::Fringe(c)) =
                (d, ring.kind(), &a)
            {
                if !ring.is_zero(&a) && !ring.is_unit(&a)? {
                    match fringe::fringe_not_prime_witness(&base, c) {
                        Ok(f) => {
                            out.insert(
                                "witness".into(),
                                json!({
                                    "multiplier": ring.format(&Value::Fringe(f.clone()))?,
                                    "product": ring.format(&Value::Fringe(
                                        fringe::mul(&base.core(), c, &f)?
                                    ))?,
                                }),
                            );
                        }
                        Err(Error::ArgumentIsPrimeCandidate) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        "associates" => {
            arity(q, 2)?;
            let (a, b) = (elem(0)?, elem(1)?);
            let mut unit = Json::Null;
            for u in ring.units()? {
                if ring.mul(&a, &u)? == b {
                    unit = json!(ring.format(&u)?);
                    break;
                }
            }
            out.insert("elems".into(), json!([ring.format(&a)?, ring.format(&b)?]));
            out.insert("result".into(), json!(!unit.is_null()));
            out.insert("unit".into(), unit);
        }
        "factor" => {
            arity(q, 1)?;
            let a = elem(0)?;
            let f = ring.factor_irreducibles(&a)?;
            out.insert("elem".into(), json!(ring.format(&a)?));
            out.insert("unit".into(), json!(ring.format(&f.unit)?));
            out.insert("factors".into(), json!(texts(&ring, &f.factors)?));
        }
        "reduce" => {
            arity(q, 2)?;
            if !ring.has_divisor_function() {
                return Err(Error::Unsupported(format!("{ring} has no divisor function")));
            }
            let (a, b) = (elem(0)?, elem(1)?);
            let (c, d) = crate::fractions::reduce(&ring, &a, &b)?;
            out.insert("num".into(), json!(ring.format(&c)?));
            out.insert("den".into(), json!(ring.format(&d)?));
        }
        "member" => {
            arity(q, 1)?;
            match elem(0) {
                Ok(a) => {
                    out.insert("member".into(), json!(true));
                    out.insert("elem".into(), json!(ring.format(&a)?));
                }
                Err(Error::NotInRing(reason)) => {
                    out.insert("member".into(), json!(false));
                    out.insert("reason".into(), json!(reason));
                }
                Err(e) => return Err(e),
            }
        }
        "stage-trace" => {
            arity(q, 0)?;
            let full = parse_descriptor(&q.ring)?.with_limits(limits);
            let schedule = full
                .schedule()
                .ok_or_else(|| Error::Validation(format!("{full} has no schedule")))?
                .clone();
            out.insert("schedule".into(), json!(schedule.entries()));
            let top = schedule.entries().iter().copied().max().map_or(0, |m| m + 1);
            let mut stages = Vec::new();
            for k in 0..=schedule.len() {
                let rk = full.at_stage(k)?;
                let mut rows = Vec::new();
                for i in 0..=top {
                    let p = nth_prime(i);
                    let v = rk.from_int(&p);
                    rows.push(json!({
                        "index": i,
                        "p": p.to_string(),
                        "prime": decision(rk.is_prime(&v)?),
                        "irreducible": decision(rk.is_irreducible(&v)?),
                    }));
                }
                stages.push(json!({ "stage": k, "ring": rk.to_string(), "primes": rows }));
            }
            out.insert("stages".into(), json!(stages));
        }
        "parse" => {
            if q.elems.len() > 1 {
                arity(q, 1)?;
            }
            out.insert("variables".into(), json!(ring.variables()));
            out.insert("divisor_function".into(), json!(ring.has_divisor_function()));
            if !q.elems.is_empty() {
                let a = elem(0)?;
                out.insert("elem".into(), json!(ring.format(&a)?));
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

pub fn run_query(q: &Query) -> Outcome {
    let mut out = Map::new();
    out.insert("command".into(), json!(q.command));
    match execute(q, &mut out) {
        Ok(()) => Outcome {
            json: Json::Object(out),
            exit_code: 0,
        },
        Err(e) => {
            out.insert(
                "error".into(),
                json!({ "kind": e.kind(), "message": e.to_string() }),
            );
            Outcome {
                json: Json::Object(out),
                exit_code: e.exit_code(),
            }
        }
    }
}
