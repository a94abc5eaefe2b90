//! Factorization in the flagged UFDs by methods that share no code with the
//! interpolation search: trial division in Z, and rational roots plus a
//! bounded quadratic-factor search in Z[x].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::integers::positive_divisors;
use crate::ring::{Kind, Ring};
use crate::value::Value;

/// Positive prime factors of `n ≠ 0`, with multiplicity.
pub fn int_prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        while (&m % &p).is_zero() {
            out.push(p.clone());
            m /= &p;
        }
        p += 1;
    }
    if m > BigInt::one() {
        out.push(m);
    }
    out
}

type ZPoly = Vec<BigInt>;

fn ztrim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

/// Exact quotient in Z[x], if any.
fn zdiv(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    if f.len() < g.len() {
        return None;
    }
    let mut r = f.to_vec();
    let lg = g.last()?;
    let mut q = vec![BigInt::zero(); f.len() - g.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + g.len() - 1];
        let (c, rem) = top.div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| ztrim(q))
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    positive_divisors(n.magnitude())
        .into_iter()
        .flat_map(|d| {
            let d = BigInt::from(d);
            [d.clone(), -d]
        })
        .collect()
}

fn linear_factor(f: &[BigInt]) -> Option<ZPoly> {
    if f[0].is_zero() {
        return Some(vec![BigInt::zero(), BigInt::one()]);
    }
    let lc = f.last().unwrap();
    for q in positive_divisors(lc.magnitude()) {
        let q = BigInt::from(q);
        for p in signed_divisors(&f[0]) {
            if !p.gcd(&q).is_one() {
                continue;
            }
            let g = vec![-p.clone(), q.clone()];
            if zdiv(f, &g).is_some() {
                return Some(g);
            }
        }
    }
    None
}

fn quadratic_factor(f: &[BigInt]) -> Option<ZPoly> {
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound: BigInt = BigInt::from(2) * (norm2.sqrt() + 1u32);
    let lc = f.last().unwrap();
    for a in positive_divisors(lc.magnitude()) {
        let a = BigInt::from(a);
        for c in signed_divisors(&f[0]) {
            let mut b = -bound.clone();
            while b <= bound {
                let g = vec![c.clone(), b.clone(), a.clone()];
                if zdiv(f, &g).is_some() {
                    return Some(g);
                }
                b += 1;
            }
        }
    }
    None
}

fn to_value(f: &[BigInt]) -> Value {
    Value::Poly(f.iter().cloned().map(Value::Int).collect())
}

/// Irreducible factors of a nonzero nonunit of a flagged UFD; their product
/// equals the input up to a unit.
pub fn ufd_factor(r: &Ring, a: &Value) -> Result<Vec<Value>> {
    match (r.kind(), a) {
        (Kind::Int, Value::Int(n)) => Ok(int_prime_factors(n).into_iter().map(Value::Int).collect()),
        (Kind::Poly { base, .. }, Value::Poly(c)) if matches!(base.kind(), Kind::Int) => {
            let mut f: ZPoly = c.iter().map(|v| v.as_int().cloned().unwrap_or_default()).collect();
            let content = f.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            let mut out: Vec<Value> = int_prime_factors(&content)
                .into_iter()
                .map(|p| Value::Poly(vec![Value::Int(p)]))
                .collect();
            for x in f.iter_mut() {
                *x /= &content;
            }
            while f.len() > 2 {
                let g = linear_factor(&f).or_else(|| {
                    if f.len() > 4 {
                        quadratic_factor(&f)
                    } else {
                        None
                    }
                });
                match g {
                    Some(g) => {
                        f = zdiv(&f, &g).expect("checked factor");
                        out.push(to_value(&g));
                    }
                    None if f.len() <= 6 => break,
                    None => {
                        // degree ≥ 6 with no factor of degree ≤ 2
                        let rest = r.factor_irreducibles(&to_value(&f))?;
                        out.extend(rest.factors);
                        return Ok(out);
                    }
                }
            }
            if f.len() > 1 {
                out.push(to_value(&f));
            }
            Ok(out)
        }
        _ => Ok(r.factor_irreducibles(a)?.factors),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_factors() {
        let f = int_prime_factors(&BigInt::from(-360));
        let want: Vec<BigInt> = [2, 2, 2, 3, 3, 5].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(f, want);
    }

    #[test]
    fn quartic_with_quadratic_factors() {
        let r = Ring::poly(&Ring::int(), "x").unwrap();
        // (x² + 1)(x² + x + 2) = x⁴ + x³ + 3x² + x + 2
        let f = to_value(&[2, 1, 3, 1, 1].map(BigInt::from));
        let fs = ufd_factor(&r, &f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(r.product(&fs).unwrap(), f);
    }
}
