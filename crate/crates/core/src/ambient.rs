//! Every construction lives inside the fraction field of a polynomial "core"
//! ring over Z or Z[√−d]. Elements move to that superstructure as a
//! (numerator, denominator) pair and come back through the construction's
//! membership test.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fractions::frac_new;
use crate::laurent;
use crate::poly;
use crate::ring::{Kind, Ring};
use crate::value::{Fraction, QuadInt, Value};

pub(crate) fn build_core(r: &Ring) -> Ring {
    let limits = r.limits();
    let c = match r.kind() {
        Kind::Int => Ring::int(),
        Kind::Quad(d) => Ring::quad(d.clone()).expect("validated"),
        Kind::Poly { base, var } | Kind::Dest { base, var, .. } | Kind::Fringe { base, var } => {
            Ring::poly(&base.core(), var).expect("validated")
        }
        Kind::Laurent { stages } => {
            let mut c = Ring::int();
            for s in stages {
                c = Ring::poly(&c, &s.var).expect("validated");
            }
            c
        }
    };
    c.with_limits(limits)
}

/// The core value of a named symbol: a variable of the core tower, or `s`
/// for `√−d`.
pub fn core_symbol(core: &Ring, name: &str) -> Option<Value> {
    match core.kind() {
        Kind::Int => None,
        Kind::Quad(_) => (name == "s").then(|| Value::Quad(QuadInt::new(0, 1))),
        Kind::Poly { base, var } => {
            if var == name {
                Some(Value::Poly(vec![base.zero(), base.one()]))
            } else {
                core_symbol(&base, name).map(|v| Value::Poly(poly::constant(&base, v)))
            }
        }
        _ => None,
    }
}

/// Sum of `n_i · y^i` over a common denominator. `parts[i] = (n_i, d_i)` in
/// `cb`; returns the numerator polynomial and the common denominator.
fn common_denominator(cb: &Ring, parts: &[(Value, Value)]) -> Result<(Vec<Value>, Value)> {
    let mut dens: Vec<Value> = Vec::new();
    for (_, d) in parts {
        if !cb.is_one(d) && !dens.contains(d) {
            dens.push(d.clone());
        }
    }
    let l = cb.product(&dens)?;
    let mut num = Vec::with_capacity(parts.len());
    for (n, d) in parts {
        let mut t = n.clone();
        for e in &dens {
            if e != d {
                t = cb.mul(&t, e)?;
            }
        }
        num.push(t);
    }
    Ok((poly::trim(cb, num), l))
}

fn as_core_poly(v: &Value) -> &[Value] {
    match v {
        Value::Poly(c) => c,
        _ => &[],
    }
}

/// `num/den` as a polynomial in the outermost core variable with a
/// denominator from the next core ring down, if it is one.
fn split_top(cb: &Ring, num: &Value, den: &Value) -> Result<Option<(Vec<Value>, Value)>> {
    let (n, d) = (as_core_poly(num), as_core_poly(den));
    if d.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if d.len() == 1 {
        return Ok(Some((n.to_vec(), d[0].clone())));
    }
    let (q, r, l) = poly::pseudo_divmod(cb, n, d)?;
    if !r.is_empty() {
        return Ok(None);
    }
    Ok(Some((q, l)))
}

/// Core monomial map of a value of `Z[x_0]…[x_{k−1}]`.
fn core_terms(k: usize, v: &Value, prefix: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, BigInt>) {
    if k == 0 {
        if let Value::Int(n) = v {
            if !n.is_zero() {
                let mut e = prefix.clone();
                e.reverse();
                out.insert(e, n.clone());
            }
        }
        return;
    }
    if let Value::Poly(c) = v {
        for (i, x) in c.iter().enumerate() {
            prefix.push(i as i64);
            core_terms(k - 1, x, prefix, out);
            prefix.pop();
        }
    }
}

fn core_from_terms(core: &Ring, terms: &BTreeMap<Vec<i64>, BigInt>) -> Result<Value> {
    let mut acc = core.zero();
    for (e, c) in terms {
        let mut t = core.from_int(c);
        for (j, &x) in e.iter().enumerate() {
            let v = core_symbol(core, &core.variables()[j]).expect("core variable");
            t = core.mul(&t, &core.pow(&v, x as u32)?)?;
        }
        acc = core.add(&acc, &t)?;
    }
    Ok(acc)
}

impl Ring {
    /// `v` as numerator and denominator in [`Ring::core`].
    pub fn to_ambient(&self, v: &Value) -> Result<(Value, Value)> {
        let core = self.core();
        match (self.kind(), v) {
            (Kind::Int, _) | (Kind::Quad(_), _) => Ok((v.clone(), core.one())),
            (Kind::Poly { base, .. }, Value::Poly(c)) => {
                let parts = c.iter().map(|x| base.to_ambient(x)).collect::<Result<Vec<_>>>()?;
                lift_parts(&base.core(), &parts)
            }
            (Kind::Dest { base, q, .. }, Value::Dest(c)) => {
                let cb = base.core();
                let (qa, qb) = base.to_ambient(q)?;
                let mut parts = Vec::with_capacity(c.len());
                for (i, x) in c.iter().enumerate() {
                    let (a, b) = base.to_ambient(x)?;
                    let k = crate::destroy::e(i) as u32;
                    parts.push((
                        cb.mul(&a, &cb.pow(&qb, k)?)?,
                        cb.mul(&b, &cb.pow(&qa, k)?)?,
                    ));
                }
                lift_parts(&cb, &parts)
            }
            (Kind::Laurent { stages }, Value::Laurent(l)) => {
                let k = stages.len();
                let mut shift = vec![0i64; k];
                for e in l.terms.keys() {
                    for (s, &x) in shift.iter_mut().zip(e) {
                        *s = (*s).max(-x);
                    }
                }
                let num: BTreeMap<Vec<i64>, BigInt> = l
                    .terms
                    .iter()
                    .map(|(e, c)| (e.iter().zip(&shift).map(|(a, b)| a + b).collect(), c.clone()))
                    .collect();
                let mut den = BTreeMap::new();
                den.insert(shift, BigInt::one());
                Ok((core_from_terms(&core, &num)?, core_from_terms(&core, &den)?))
            }
            (Kind::Fringe { base, .. }, Value::Fringe(c)) => {
                let parts: Vec<(Value, Value)> =
                    c.iter().map(|f| (f.num.clone(), f.den.clone())).collect();
                lift_parts(&base.core(), &parts)
            }
            _ => Err(Error::TagMismatch {
                expected: self.to_string(),
                found: format!("{v:?}"),
            }),
        }
    }

    /// The element of this ring equal to `num/den` (both in
    /// [`Ring::core`]), or `NotInRing` naming the failed constraint.
    pub fn from_ambient(&self, num: &Value, den: &Value) -> Result<Value> {
        let core = self.core();
        if core.is_zero(den) {
            return Err(Error::DivisionByZero);
        }
        match self.kind() {
            Kind::Int | Kind::Quad(_) => self.div_exact(num, den)?.ok_or_else(|| {
                Error::NotInRing(format!(
                    "{}/{} is not in {self}",
                    self.format_or_debug(num),
                    self.format_or_debug(den)
                ))
            }),
            Kind::Poly { base, var } => {
                let cb = base.core();
                let (q, l) = split_top(&cb, num, den)?
                    .ok_or_else(|| Error::NotInRing(format!("not a polynomial in {var}")))?;
                let mut out = Vec::with_capacity(q.len());
                for (i, c) in q.iter().enumerate() {
                    out.push(base.from_ambient(c, &l).map_err(|e| nest(e, var, i))?);
                }
                Ok(Value::Poly(poly::trim(&base, out)))
            }
            Kind::Dest { base, q: qv, var } => {
                let cb = base.core();
                let (q, l) = split_top(&cb, num, den)?
                    .ok_or_else(|| Error::NotInRing(format!("not a polynomial in {var}")))?;
                let (qa, qb) = base.to_ambient(qv)?;
                let mut out = Vec::with_capacity(q.len());
                for (i, c) in q.iter().enumerate() {
                    let k = crate::destroy::e(i) as u32;
                    let n = cb.mul(c, &cb.pow(&qa, k)?)?;
                    let d = cb.mul(&l, &cb.pow(&qb, k)?)?;
                    let v = base.from_ambient(&n, &d).map_err(|_| {
                        Error::NotInRing(if k == 0 {
                            format!("coefficient of {var}^{i} is not in {base}")
                        } else {
                            format!(
                                "coefficient of {var}^{i} times {}^{k} is not in {base}",
                                base.format_or_debug(qv)
                            )
                        })
                    })?;
                    out.push(v);
                }
                Ok(Value::Dest(poly::trim(&base, out)))
            }
            Kind::Laurent { stages } => {
                let k = stages.len();
                let (mut n, mut d) = (num.clone(), den.clone());
                let mut dt = BTreeMap::new();
                core_terms(k, &d, &mut Vec::new(), &mut dt);
                if dt.len() != 1 {
                    let f = frac_new(&core, n, d)?;
                    n = f.num;
                    d = f.den;
                    dt.clear();
                    core_terms(k, &d, &mut Vec::new(), &mut dt);
                }
                if dt.len() != 1 {
                    return Err(Error::NotInRing("not a Laurent polynomial".into()));
                }
                let (m, c) = dt.into_iter().next().unwrap();
                let mut nt = BTreeMap::new();
                core_terms(k, &n, &mut Vec::new(), &mut nt);
                let rat = nt
                    .into_iter()
                    .map(|(e, x)| (e.iter().zip(&m).map(|(a, b)| a - b).collect(), (x, c.clone())))
                    .collect();
                laurent::laur_member(stages, &rat)
                    .map(Value::Laurent)
                    .map_err(Error::NotInRing)
            }
            Kind::Fringe { base, var } => {
                let cb = base.core();
                let (q, l) = split_top(&cb, num, den)?
                    .ok_or_else(|| Error::NotInRing(format!("not a polynomial in {var}")))?;
                let mut out = Vec::with_capacity(q.len());
                for (i, c) in q.iter().enumerate() {
                    let f = frac_new(&cb, c.clone(), l.clone())?;
                    if i < 2 {
                        base.from_ambient(&f.num, &f.den).map_err(|_| {
                            Error::NotInRing(format!(
                                "coefficient of {var}^{i} is not in {base}"
                            ))
                        })?;
                    }
                    out.push(f);
                }
                while out.last().is_some_and(crate::fractions::frac_is_zero) {
                    out.pop();
                }
                Ok(Value::Fringe(out))
            }
        }
    }

    pub(crate) fn format_or_debug(&self, v: &Value) -> String {
        self.format(v).unwrap_or_else(|_| format!("{v:?}"))
    }

    /// Fringe coefficients as fractions over the core of the base.
    pub fn fringe_coeffs<'a>(&self, v: &'a Value) -> Option<&'a [Fraction]> {
        match v {
            Value::Fringe(c) => Some(c),
            _ => None,
        }
    }
}

fn nest(e: Error, var: &str, i: usize) -> Error {
    match e {
        Error::NotInRing(m) => Error::NotInRing(format!("coefficient of {var}^{i}: {m}")),
        other => other,
    }
}

fn lift_parts(cb: &Ring, parts: &[(Value, Value)]) -> Result<(Value, Value)> {
    let (num, l) = common_denominator(cb, parts)?;
    Ok((Value::Poly(num), Value::Poly(poly::constant(cb, l))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_round_trip() {
        let r = Ring::staged_irred(
            crate::ring::EnumerationSchedule::new(vec![0, 2]).unwrap(),
            vec!["x0".into(), "x1".into()],
        )
        .unwrap();
        let core = r.core();
        let x0 = core_symbol(&core, "x0").unwrap();
        let two = core.from_i64(2);
        let v = r.from_ambient(&two, &x0).unwrap();
        let (n, d) = r.to_ambient(&v).unwrap();
        assert_eq!(r.from_ambient(&n, &d).unwrap(), v);
        assert!(matches!(r.from_ambient(&core.one(), &x0), Err(Error::NotInRing(_))));
    }
}
