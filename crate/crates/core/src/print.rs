//! Canonical text for elements, accepted back by the element parser.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::fractions::frac_new;
use crate::ring::{Kind, Ring};
use crate::value::{Fraction, QuadInt, Value};

fn is_sum(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ")
}

fn is_plain(s: &str) -> bool {
    let body = s.split_once('^').map_or(s, |(b, e)| {
        if e.chars().all(|c| c.is_ascii_digit()) {
            b
        } else {
            "("
        }
    });
    !body.is_empty() && body.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Joins signed terms: `["x^2", "-3*x", "1"]` becomes `x^2 - 3*x + 1`.
fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

/// `coeff · mono`, with `1` and `-1` folded and sums parenthesized.
fn scaled(coeff: &str, mono: &str) -> String {
    if mono.is_empty() {
        return coeff.to_string();
    }
    match coeff {
        "1" => mono.to_string(),
        "-1" => format!("-{mono}"),
        c if is_sum(c) => format!("({c})*{mono}"),
        c => format!("{c}*{mono}"),
    }
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

fn quad(z: &QuadInt) -> String {
    let mut terms = Vec::new();
    if !z.a.is_zero() {
        terms.push(z.a.to_string());
    }
    if !z.b.is_zero() {
        terms.push(scaled(&z.b.to_string(), "s"));
    }
    join_terms(&terms)
}

fn laurent_term(vars: &[String], e: &[i64], c: &BigInt) -> String {
    let mono: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &x)| x != 0)
        .map(|(v, &x)| power(v, x))
        .collect();
    let mono = mono.join("*");
    if c.is_one() || (-c).is_one() {
        if mono.is_empty() {
            return c.to_string();
        }
        return if c.is_negative() { format!("-{mono}") } else { mono };
    }
    if mono.is_empty() {
        c.to_string()
    } else {
        format!("{c}*{mono}")
    }
}

impl Ring {
    /// Canonical text of an element of this ring.
    pub fn format(&self, v: &Value) -> Result<String> {
        Ok(match (self.kind(), v) {
            (Kind::Int, Value::Int(n)) => n.to_string(),
            (Kind::Quad(_), Value::Quad(z)) => quad(z),
            (Kind::Poly { base, var }, Value::Poly(c)) => {
                let mut terms = Vec::new();
                for (i, x) in c.iter().enumerate().rev() {
                    if base.is_zero(x) {
                        continue;
                    }
                    terms.push(scaled(&base.format(x)?, &power(var, i as i64)));
                }
                join_terms(&terms)
            }
            (Kind::Dest { base, q, var }, Value::Dest(c)) => {
                let mut terms = Vec::new();
                for (i, x) in c.iter().enumerate().rev() {
                    if base.is_zero(x) {
                        continue;
                    }
                    let k = crate::destroy::e(i);
                    let coeff = if k == 0 {
                        base.format(x)?
                    } else {
                        let f = frac_new(&base, x.clone(), base.pow(q, k as u32)?)?;
                        format_fraction(&base, &f)?
                    };
                    terms.push(scaled(&coeff, &power(var, i as i64)));
                }
                join_terms(&terms)
            }
            (Kind::Laurent { stages }, Value::Laurent(l)) => {
                let vars: Vec<String> = stages.iter().map(|s| s.var.clone()).collect();
                let terms: Vec<String> = l
                    .terms
                    .iter()
                    .rev()
                    .map(|(e, c)| laurent_term(&vars, e, c))
                    .collect();
                join_terms(&terms)
            }
            (Kind::Fringe { base, var }, Value::Fringe(c)) => {
                let core = base.core();
                let mut terms = Vec::new();
                for (i, f) in c.iter().enumerate().rev() {
                    if crate::fractions::frac_is_zero(f) {
                        continue;
                    }
                    terms.push(scaled(&format_fraction(&core, f)?, &power(var, i as i64)));
                }
                join_terms(&terms)
            }
            _ => {
                return Err(crate::error::Error::TagMismatch {
                    expected: self.to_string(),
                    found: format!("{v:?}"),
                })
            }
        })
    }
}

/// `num/den`, or just `num` for denominator 1. Sums are parenthesized, and
/// so is any denominator that is not a bare symbol or number.
pub fn format_fraction(base: &Ring, f: &Fraction) -> Result<String> {
    let num = base.format(&f.num)?;
    if base.is_one(&f.den) {
        return Ok(num);
    }
    let den = base.format(&f.den)?;
    let num = if is_sum(&num) { format!("({num})") } else { num };
    let den = if is_plain(&den) { den } else { format!("({den})") };
    Ok(format!("{num}/{den}"))
}
