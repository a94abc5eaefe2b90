//! The field of fractions of an SCFFD.
//!
//! Canonical form: the pair is reduced by [`reduce`] and the denominator is
//! the least of its associates under [`Ring::cmp`]. Equality of the field
//! elements is cross-multiplication; for canonical forms over a UFD it is
//! also structural.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::value::{Fraction, Value};

pub fn frac_is_zero(x: &Fraction) -> bool {
    match &x.num {
        Value::Int(n) => n.is_zero(),
        Value::Quad(z) => z.a.is_zero() && z.b.is_zero(),
        Value::Poly(c) | Value::Dest(c) => c.is_empty(),
        Value::Laurent(l) => l.terms.is_empty(),
        Value::Fringe(c) => c.is_empty(),
    }
}

/// `a / 1`
pub fn frac_from(base: &Ring, a: Value) -> Fraction {
    Fraction {
        num: a,
        den: base.one(),
    }
}

/// Reduces `a / b`: among the common divisors `S = D(a) ∩ D(b)`, divide
/// both by the `r ∈ S` with the most members of `S` dividing it, the least
/// such `r` on ties. The result has only unit common divisors.
pub fn reduce(base: &Ring, a: &Value, b: &Value) -> Result<(Value, Value)> {
    if base.is_zero(b) {
        return Err(Error::DivisionByZero);
    }
    if base.is_zero(a) {
        return Ok((base.zero(), base.one()));
    }
    let da = base.divisors(a)?;
    let db: HashSet<Value> = base.divisors(b)?.into_iter().collect();
    let s: Vec<Value> = da.into_iter().filter(|d| db.contains(d)).collect();
    let mut best: Option<(&Value, usize)> = None;
    for r in &s {
        let mut count = 0;
        for t in &s {
            if base.div_exact(r, t)?.is_some() {
                count += 1;
            }
        }
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((r, count));
        }
    }
    let r = best.map(|(r, _)| r.clone()).unwrap_or_else(|| base.one());
    let c = base.div_exact(a, &r)?.ok_or(Error::NotDivisible)?;
    let d = base.div_exact(b, &r)?.ok_or(Error::NotDivisible)?;
    Ok((c, d))
}

/// Multiplies both parts by the unit making the denominator least among
/// its associates.
fn normalize(base: &Ring, num: Value, den: Value) -> Result<(Value, Value)> {
    let mut best: Option<(Value, Value)> = None;
    for u in base.units()? {
        let d = base.mul(&den, &u)?;
        if best
            .as_ref()
            .is_none_or(|(_, bd)| base.cmp(&d, bd) == Ordering::Less)
        {
            best = Some((u, d));
        }
    }
    let (u, d) = best.expect("unit group is nonempty");
    Ok((base.mul(&num, &u)?, d))
}

/// Canonical fraction `num / den`.
pub fn frac_new(base: &Ring, num: Value, den: Value) -> Result<Fraction> {
    if base.is_zero(&den) {
        return Err(Error::DivisionByZero);
    }
    if base.is_zero(&num) {
        return Ok(Fraction {
            num,
            den: base.one(),
        });
    }
    if let (Value::Int(a), Value::Int(b)) = (&num, &den) {
        let g = a.gcd(b);
        let (mut a, mut b) = (a / &g, b / &g);
        if b.is_negative() {
            a = -a;
            b = -b;
        }
        return Ok(Fraction {
            num: Value::Int(a),
            den: Value::Int(b),
        });
    }
    let (c, d) = if base.is_unit(&den)? || base.is_unit(&num)? {
        (num, den)
    } else {
        reduce(base, &num, &den)?
    };
    let (c, d) = normalize(base, c, d)?;
    Ok(Fraction { num: c, den: d })
}

pub fn frac_add(base: &Ring, x: &Fraction, y: &Fraction) -> Result<Fraction> {
    if x.den == y.den {
        return frac_new(base, base.add(&x.num, &y.num)?, x.den.clone());
    }
    let n = base.add(&base.mul(&x.num, &y.den)?, &base.mul(&y.num, &x.den)?)?;
    frac_new(base, n, base.mul(&x.den, &y.den)?)
}

pub fn frac_neg(base: &Ring, x: &Fraction) -> Result<Fraction> {
    Ok(Fraction {
        num: base.neg(&x.num)?,
        den: x.den.clone(),
    })
}

pub fn frac_sub(base: &Ring, x: &Fraction, y: &Fraction) -> Result<Fraction> {
    frac_add(base, x, &frac_neg(base, y)?)
}

pub fn frac_mul(base: &Ring, x: &Fraction, y: &Fraction) -> Result<Fraction> {
    frac_new(base, base.mul(&x.num, &y.num)?, base.mul(&x.den, &y.den)?)
}

pub fn frac_inv(base: &Ring, x: &Fraction) -> Result<Fraction> {
    if frac_is_zero(x) {
        return Err(Error::DivisionByZero);
    }
    frac_new(base, x.den.clone(), x.num.clone())
}

pub fn frac_div(base: &Ring, x: &Fraction, y: &Fraction) -> Result<Fraction> {
    frac_mul(base, x, &frac_inv(base, y)?)
}

/// Field equality: `a·d = b·c`.
pub fn frac_eq(base: &Ring, x: &Fraction, y: &Fraction) -> Result<bool> {
    Ok(base.mul(&x.num, &y.den)? == base.mul(&y.num, &x.den)?)
}

/// `a/b ∈ A` iff `b | a`; returns the quotient.
pub fn in_base(base: &Ring, x: &Fraction) -> Result<Option<Value>> {
    base.div_exact(&x.num, &x.den)
}

pub fn frac_cmp(base: &Ring, x: &Fraction, y: &Fraction) -> Ordering {
    base.cmp(&x.num, &y.num)
        .then_with(|| base.cmp(&x.den, &y.den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::QuadInt;

    fn q5() -> Ring {
        Ring::quad(5).unwrap()
    }

    fn qv(a: i64, b: i64) -> Value {
        Value::Quad(QuadInt::new(a, b))
    }

    #[test]
    fn integer_examples() {
        let z = Ring::int();
        let half = frac_new(&z, Value::int(1), Value::int(2)).unwrap();
        let third = frac_new(&z, Value::int(1), Value::int(3)).unwrap();
        assert_eq!(
            frac_add(&z, &half, &third).unwrap(),
            frac_new(&z, Value::int(5), Value::int(6)).unwrap()
        );
        let two = frac_from(&z, Value::int(2));
        assert_eq!(frac_mul(&z, &half, &two).unwrap(), frac_from(&z, Value::int(1)));
        assert_eq!(reduce(&z, &Value::int(6), &Value::int(4)).unwrap(), (Value::int(3), Value::int(2)));
        assert_eq!(reduce(&z, &Value::int(0), &Value::int(4)).unwrap(), (Value::int(0), Value::int(1)));
        assert_eq!(in_base(&z, &frac_new(&z, Value::int(6), Value::int(3)).unwrap()).unwrap(), Some(Value::int(2)));
        assert_eq!(in_base(&z, &half).unwrap(), None);
    }

    #[test]
    fn integer_fast_path_matches_reduce() {
        let z = Ring::int();
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if b == 0 || a == 0 {
                    continue;
                }
                let (c, d) = reduce(&z, &Value::int(a), &Value::int(b)).unwrap();
                let (c, d) = normalize(&z, c, d).unwrap();
                let f = frac_new(&z, Value::int(a), Value::int(b)).unwrap();
                assert_eq!((f.num, f.den), (c, d), "{a}/{b}");
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        let r = q5();
        let a = qv(2, 2);
        let (c, d) = reduce(&r, &a, &qv(6, 0)).unwrap();
        assert_eq!((c, d), (qv(1, 1), qv(3, 0)));
        let (c, d) = reduce(&r, &qv(2, 0), &qv(1, 1)).unwrap();
        assert!(r.are_associates(&c, &qv(2, 0)).unwrap());
        assert!(r.are_associates(&d, &qv(1, 1)).unwrap());
        let lhs = frac_new(&r, qv(2, 0), qv(1, 1)).unwrap();
        let rhs = frac_new(&r, qv(1, -1), qv(3, 0)).unwrap();
        assert!(frac_eq(&r, &lhs, &rhs).unwrap());
        assert_ne!(lhs, rhs);
        let x = frac_new(&r, qv(6, 0), qv(1, 1)).unwrap();
        assert_eq!(in_base(&r, &x).unwrap(), Some(qv(1, -1)));
        let inv = frac_inv(&r, &frac_new(&r, qv(1, 1), qv(3, 0)).unwrap()).unwrap();
        assert_eq!(inv, frac_new(&r, qv(3, 0), qv(1, 1)).unwrap());
    }
}
