//! Irreducible-destroying towers `R_{k+1} = R_k[x_k, p/x_k]`.
//!
//! Elements are Laurent polynomials with integer coefficients. `R_k` is the
//! free Z-module on the monomials `x^e` scaled by `Π_{e_j < 0} p_j^(−e_j)`, so
//! a Laurent polynomial lies in `R_k` iff every term `c·x^e` has that product
//! dividing `c`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::integers::{int_order, is_prime_int, nth_prime};
use crate::ring::{Decision, EnumerationSchedule, Mode, Ring, Stage};
use crate::value::{Laurent, Value};

pub(crate) fn from_int(k: usize, n: &BigInt) -> Laurent {
    let mut terms = BTreeMap::new();
    if !n.is_zero() {
        terms.insert(vec![0; k], n.clone());
    }
    Laurent { terms }
}

pub(crate) fn monomial(k: usize, j: usize, exp: i64, c: BigInt) -> Laurent {
    let mut e = vec![0; k];
    e[j] = exp;
    let mut terms = BTreeMap::new();
    if !c.is_zero() {
        terms.insert(e, c);
    }
    Laurent { terms }
}

pub fn laur_add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut terms = a.terms.clone();
    for (e, c) in &b.terms {
        let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(e);
        }
    }
    Laurent { terms }
}

pub(crate) fn add(a: &Laurent, b: &Laurent) -> Laurent {
    laur_add(a, b)
}

pub(crate) fn neg(a: &Laurent) -> Laurent {
    Laurent {
        terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
    }
}

pub fn laur_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Laurent { terms }
}

pub(crate) fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    laur_mul(a, b)
}

/// Term count first, then terms from the largest exponent vector down.
pub(crate) fn cmp(a: &Laurent, b: &Laurent) -> Ordering {
    a.terms.len().cmp(&b.terms.len()).then_with(|| {
        for ((ea, ca), (eb, cb)) in a.terms.iter().rev().zip(b.terms.iter().rev()) {
            let o = ea.cmp(eb).then_with(|| int_order(ca, cb));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// `Π_{e_j < 0} p_j^(−e_j)`: what a coefficient at exponent `e` must be
/// divisible by.
fn required(stages: &[Stage], e: &[i64]) -> BigInt {
    let mut r = BigInt::one();
    for (s, &x) in stages.iter().zip(e) {
        if x < 0 {
            r *= num_traits::pow(s.prime.clone(), (-x) as usize);
        }
    }
    r
}

/// Membership of a Laurent polynomial with rational coefficients
/// `num/den`. On failure returns the violated constraint.
pub fn laur_member(
    stages: &[Stage],
    terms: &BTreeMap<Vec<i64>, (BigInt, BigInt)>,
) -> std::result::Result<Laurent, String> {
    let mut out = BTreeMap::new();
    for (e, (n, d)) in terms {
        if e.len() != stages.len() {
            return Err("exponent vector does not match the stages".into());
        }
        let (c, r) = n.div_rem(d);
        if !r.is_zero() {
            return Err(format!("coefficient {n}/{d} is not an integer"));
        }
        if c.is_zero() {
            continue;
        }
        let req = required(stages, e);
        if !(&c % &req).is_zero() {
            let names: Vec<String> = stages
                .iter()
                .zip(e)
                .filter(|(_, &x)| x < 0)
                .map(|(s, &x)| format!("{}^{}", s.var, x))
                .collect();
            return Err(format!(
                "coefficient {c} of {} is not divisible by {req}",
                names.join("*")
            ));
        }
        out.insert(e.clone(), c);
    }
    Ok(Laurent { terms: out })
}

/// Units are the monomials whose inverse passes membership; in `R_k` that
/// leaves exactly `±1`.
pub fn laur_is_unit(stages: &[Stage], f: &Laurent) -> bool {
    if f.terms.len() != 1 {
        return false;
    }
    let (e, c) = f.terms.iter().next().unwrap();
    let inv_e: Vec<i64> = e.iter().map(|x| -x).collect();
    let mut t = BTreeMap::new();
    t.insert(inv_e, (BigInt::one(), c.clone()));
    laur_member(stages, &t).is_ok()
}

fn as_integer(k: usize, f: &Laurent) -> Option<BigInt> {
    match f.terms.len() {
        0 => Some(BigInt::zero()),
        1 => {
            let (e, c) = f.terms.iter().next().unwrap();
            (e.len() == k && e.iter().all(|&x| x == 0)).then(|| c.clone())
        }
        _ => None,
    }
}

/// Irreducibility of integer constants: a prime stays irreducible unless
/// its stage has split it, composites never are. Other elements are not
/// classified.
pub(crate) fn integer_irreducible(stages: &[Stage], f: &Laurent) -> Decision {
    let Some(n) = as_integer(stages.len(), f) else {
        return Decision::Unsupported;
    };
    if !is_prime_int(&n) {
        return Decision::False;
    }
    let p = n.abs();
    Decision::from_bool(!stages.iter().any(|s| s.prime == p))
}

/// `R_k` is a UFD, so on integers primality coincides with irreducibility.
pub(crate) fn integer_prime(stages: &[Stage], f: &Laurent) -> Decision {
    integer_irreducible(stages, f)
}

/// Factorization witness `p = x_j · (p/x_j)` for a destroyed prime.
pub fn split_witness(stages: &[Stage], p: &BigInt) -> Option<(Laurent, Laurent)> {
    let k = stages.len();
    let j = stages.iter().position(|s| &s.prime == p)?;
    Some((
        monomial(k, j, 1, BigInt::one()),
        monomial(k, j, -1, p.clone()),
    ))
}

/// Result of [`irred_status`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredStatus {
    pub irreducible: bool,
    pub witness: Option<(Value, Value)>,
}

/// Irreducibility of `p_i` in a staged irreducible-destroying ring. A
/// negative answer carries the split `p_i = x_j · (p_i/x_j)`, checked here:
/// the factors multiply back to `p_i` and neither is a unit.
pub fn irred_status(r: &Ring, i: u64, mode: Mode) -> Result<IrredStatus> {
    let rk = r.with_mode(mode)?;
    let stages = rk.laurent_stages().ok_or_else(|| {
        Error::Validation(format!("{rk} is not an irreducible-destroying tower"))
    })?;
    let p = nth_prime(i);
    match split_witness(&stages, &p) {
        None => Ok(IrredStatus {
            irreducible: true,
            witness: None,
        }),
        Some((a, b)) => {
            let prod = laur_mul(&a, &b);
            if prod != from_int(stages.len(), &p)
                || laur_is_unit(&stages, &a)
                || laur_is_unit(&stages, &b)
            {
                return Err(Error::Validation(format!("split witness for {p} failed")));
            }
            Ok(IrredStatus {
                irreducible: false,
                witness: Some((Value::Laurent(a), Value::Laurent(b))),
            })
        }
    }
}

pub fn staged_irred_build(schedule: EnumerationSchedule, vars: Vec<String>) -> Result<Ring> {
    if vars.len() != schedule.len() {
        return Err(Error::Validation(format!(
            "{} primes but {} variables",
            schedule.len(),
            vars.len()
        )));
    }
    let mut tower = Ring::int();
    for (idx, var) in schedule.entries().iter().zip(&vars) {
        tower = Ring::irred_destroy(&tower, &nth_prime(*idx), var)?;
    }
    Ok(Ring::staged_irred_from_tower(schedule, vars, &tower))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stages(ps: &[(i64, &str)]) -> Vec<Stage> {
        ps.iter()
            .map(|&(p, v)| Stage {
                prime: BigInt::from(p),
                var: v.to_string(),
            })
            .collect()
    }

    fn rat(entries: &[(Vec<i64>, i64, i64)]) -> BTreeMap<Vec<i64>, (BigInt, BigInt)> {
        entries
            .iter()
            .map(|(e, n, d)| (e.clone(), (BigInt::from(*n), BigInt::from(*d))))
            .collect()
    }

    #[test]
    fn generator_relation() {
        let st = stages(&[(2, "x0")]);
        let x = monomial(1, 0, 1, BigInt::one());
        let y = monomial(1, 0, -1, BigInt::from(2));
        assert_eq!(laur_mul(&x, &y), from_int(1, &BigInt::from(2)));
        let yy = laur_mul(&y, &y);
        assert_eq!(yy, monomial(1, 0, -2, BigInt::from(4)));
        assert!(laur_member(&st, &rat(&[(vec![-2], 4, 1)])).is_ok());
    }

    #[test]
    fn membership_examples() {
        let st = stages(&[(2, "x0")]);
        assert!(laur_member(&st, &rat(&[(vec![-1], 2, 1)])).is_ok());
        assert!(laur_member(&st, &rat(&[(vec![-1], 1, 1)])).is_err());
        assert!(laur_member(&st, &rat(&[(vec![1], 1, 1), (vec![0], 3, 1)])).is_ok());
        assert!(laur_member(&st, &rat(&[(vec![0], 1, 2)])).is_err());
    }

    #[test]
    fn units_are_plus_minus_one() {
        let st = stages(&[(2, "x0"), (5, "x1")]);
        assert!(laur_is_unit(&st, &from_int(2, &BigInt::one())));
        assert!(laur_is_unit(&st, &from_int(2, &BigInt::from(-1))));
        assert!(!laur_is_unit(&st, &monomial(2, 0, 1, BigInt::one())));
        assert!(!laur_is_unit(&st, &monomial(2, 1, -1, BigInt::from(5))));
        assert!(!laur_is_unit(&st, &from_int(2, &BigInt::from(2))));
    }

    #[test]
    fn integer_classification() {
        let st = stages(&[(2, "x0"), (5, "x1")]);
        let n = |v: i64| from_int(2, &BigInt::from(v));
        assert_eq!(integer_irreducible(&st, &n(2)), Decision::False);
        assert_eq!(integer_irreducible(&st, &n(3)), Decision::True);
        assert_eq!(integer_irreducible(&st, &n(-5)), Decision::False);
        assert_eq!(integer_irreducible(&st, &n(6)), Decision::False);
        assert_eq!(
            integer_irreducible(&st, &monomial(2, 0, 1, BigInt::one())),
            Decision::Unsupported
        );
    }

    #[test]
    fn status_with_witness() {
        let r = staged_irred_build(
            EnumerationSchedule::new(vec![0, 2]).unwrap(),
            vec!["x0".into(), "x1".into()],
        )
        .unwrap();
        let s = irred_status(&r, 0, Mode::Limit).unwrap();
        assert!(!s.irreducible);
        assert!(s.witness.is_some());
        assert!(irred_status(&r, 1, Mode::Limit).unwrap().irreducible);
        assert!(irred_status(&r, 0, Mode::AtStage(0)).unwrap().irreducible);
    }
}
