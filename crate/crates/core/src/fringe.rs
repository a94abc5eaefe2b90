//! The ring `A = R + yR + y²F[y]`, `F` the fraction field of `R`.
//!
//! Coefficients are canonical fractions over the core of `R` (Z, or the
//! polynomial ring in the stage variables of an irreducible-destroying
//! tower). Primality is decided completely: `p` is prime iff it is
//! irreducible in `F[y]` and `p(0)` is a unit of `R`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fractions::{self, frac_add, frac_cmp, frac_is_zero, frac_mul, frac_neg};
use crate::poly;
use crate::ring::{Decision, Ring};
use crate::value::{Fraction, Value};

fn trim(mut v: Vec<Fraction>) -> Vec<Fraction> {
    while v.last().is_some_and(frac_is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn add(core: &Ring, a: &[Fraction], b: &[Fraction]) -> Result<Vec<Fraction>> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => frac_add(core, x, y)?,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        });
    }
    Ok(trim(out))
}

pub(crate) fn neg(core: &Ring, a: &[Fraction]) -> Result<Vec<Fraction>> {
    a.iter().map(|c| frac_neg(core, c)).collect()
}

pub(crate) fn mul(core: &Ring, a: &[Fraction], b: &[Fraction]) -> Result<Vec<Fraction>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let zero = fractions::frac_from(core, core.zero());
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if frac_is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = frac_add(core, &out[i + j], &frac_mul(core, x, y)?)?;
        }
    }
    Ok(trim(out))
}

pub(crate) fn cmp(core: &Ring, a: &[Fraction], b: &[Fraction]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            let o = frac_cmp(core, x, y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// `p(0)` as an element of `R`.
fn constant_term(r: &Ring, p: &[Fraction]) -> Result<Value> {
    match p.first() {
        None => Ok(r.zero()),
        Some(c) => r.from_ambient(&c.num, &c.den),
    }
}

/// `U(A) = U(R)`: units of `F[y]` are constants, and a constant of `A` with
/// inverse in `A` is a unit of `R`.
pub(crate) fn is_unit(r: &Ring, p: &[Fraction]) -> Result<bool> {
    if p.len() != 1 {
        return Ok(false);
    }
    r.is_unit(&constant_term(r, p)?)
}

/// Accepts iff the constant and linear coefficients lie in `R`.
pub fn fringe_member(r: &Ring, p: &[Fraction]) -> Result<bool> {
    for c in p.iter().take(2) {
        match r.from_ambient(&c.num, &c.den) {
            Ok(_) => {}
            Err(Error::NotInRing(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

fn max_abs_int(v: &Value, acc: &mut BigInt) {
    match v {
        Value::Int(n) => {
            if n.abs() > *acc {
                *acc = n.abs();
            }
        }
        Value::Poly(c) => c.iter().for_each(|x| max_abs_int(x, acc)),
        _ => {}
    }
}

/// Irreducibility of a non-constant `p` in `F[y]`. Denominators are
/// cleared and the content removed over the core ring (a UFD); by Gauss's
/// lemma `p` is reducible in `F[y]` iff the primitive part has a divisor in
/// `core[y]` of degree strictly between 0 and `deg p`.
pub fn irreducible_in_fy(r: &Ring, p: &[Fraction]) -> Result<bool> {
    if p.len() < 2 {
        return Err(Error::ConstantArgument);
    }
    if p.len() == 2 {
        return Ok(true);
    }
    let limits = r.limits();
    let cb = r.core();
    let nvars = cb.variables().len();
    if nvars > limits.max_core_vars {
        return Err(Error::SearchCap {
            what: "core variables".into(),
            needed: nvars.to_string(),
            cap: limits.max_core_vars.to_string(),
        });
    }
    let deg = p.len() - 1;
    if deg > limits.max_degree {
        return Err(Error::SearchCap {
            what: "y-degree".into(),
            needed: deg.to_string(),
            cap: limits.max_degree.to_string(),
        });
    }
    let parts: Vec<(Value, Value)> = p.iter().map(|c| (c.num.clone(), c.den.clone())).collect();
    let mut dens: Vec<Value> = Vec::new();
    for (_, d) in &parts {
        if !cb.is_one(d) && !dens.contains(d) {
            dens.push(d.clone());
        }
    }
    let mut f = Vec::with_capacity(parts.len());
    for (n, d) in &parts {
        let mut t = n.clone();
        for e in &dens {
            if e != d {
                t = cb.mul(&t, e)?;
            }
        }
        f.push(t);
    }
    let f = primitive_part(&cb, f)?;
    let mut height = BigInt::zero();
    f.iter().for_each(|c| max_abs_int(c, &mut height));
    if height > BigInt::from(limits.max_height) {
        return Err(Error::SearchCap {
            what: "coefficient height".into(),
            needed: height.to_string(),
            cap: limits.max_height.to_string(),
        });
    }
    for g in poly::poly_divisors(&cb, &f)? {
        let dg = g.len() - 1;
        if dg > 0 && dg < deg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Divides out a greatest common divisor of the coefficients, found with
/// the fraction-reduction machinery: `gcd(a, b) = a / c` where
/// `reduce(a, b) = (c, d)`.
fn primitive_part(cb: &Ring, f: Vec<Value>) -> Result<Vec<Value>> {
    let mut g: Option<Value> = None;
    for c in f.iter().filter(|c| !cb.is_zero(c)) {
        g = Some(match g {
            None => c.clone(),
            Some(g) => {
                let (a, _) = fractions::reduce(cb, &g, c)?;
                cb.div_exact(&g, &a)?.ok_or(Error::NotDivisible)?
            }
        });
        if g.as_ref().is_some_and(|g| cb.is_unit(g).unwrap_or(false)) {
            return Ok(f);
        }
    }
    let Some(g) = g else { return Ok(f) };
    f.iter()
        .map(|c| cb.div_exact(c, &g)?.ok_or(Error::NotDivisible))
        .collect()
}

/// Prime iff irreducible in `F[y]` and `p(0)` is a unit of `R`. The unit
/// test runs first, so the answer for a nonunit constant term never needs
/// the search.
pub fn fringe_is_prime(r: &Ring, p: &[Fraction]) -> Result<bool> {
    if p.len() < 2 {
        return Ok(false);
    }
    if !r.is_unit(&constant_term(r, p)?)? {
        return Ok(false);
    }
    irreducible_in_fy(r, p)
}

/// Constants are irreducible in `A` iff irreducible in `R`, since divisors
/// of constants are constants. Non-constants are not classified.
pub fn fringe_is_irreducible(r: &Ring, p: &[Fraction]) -> Result<Decision> {
    if p.len() != 1 {
        return Ok(Decision::Unsupported);
    }
    r.is_irreducible(&constant_term(r, p)?)
}

/// For `p(0)` not a unit: `f = y/b` with `b = p(0)`, or `b = 2` when
/// `p(0) = 0`. Then `p·f ∈ A` while `f ∉ A`, which rules out primality.
/// Both memberships are checked before returning.
pub fn fringe_not_prime_witness(r: &Ring, p: &[Fraction]) -> Result<Vec<Fraction>> {
    let core = r.core();
    let p0 = constant_term(r, p)?;
    if r.is_unit(&p0)? {
        return Err(Error::ArgumentIsPrimeCandidate);
    }
    let b = match p.first() {
        Some(c) if !r.is_zero(&p0) => c.clone(),
        _ => fractions::frac_from(&core, core.from_i64(2)),
    };
    let inv = fractions::frac_inv(&core, &b)?;
    let zero = fractions::frac_from(&core, core.zero());
    let f = vec![zero, inv];
    let pf = mul(&core, p, &f)?;
    if !fringe_member(r, &pf)? || fringe_member(r, &f)? {
        return Err(Error::Validation("non-primality witness failed its check".into()));
    }
    Ok(f)
}
