//! Destroying the primality of one prime `q` of an SCFFD `A`: the ring `B` of
//! polynomials `a₀ + a₁x + (a₂/q²)x² + ⋯ + (aₙ/qⁿ)xⁿ`, and its staged
//! iteration over an enumeration schedule.

use crate::error::{Error, Result};
use crate::integers::nth_prime;
use crate::poly::{self, FracPoly};
use crate::ring::{Decision, EnumerationSchedule, Mode, Ring};
use crate::value::Value;

/// Exponent of `q` in the denominator of the degree-`i` coefficient.
pub fn e(i: usize) -> usize {
    if i < 2 {
        0
    } else {
        i
    }
}

fn qpow(base: &Ring, q: &Value, k: usize) -> Result<Value> {
    base.pow(q, k as u32)
}

/// Product in `B`; the numerator at degree `k` is
/// `Σ_{i+j=k} n_i n_j q^(e(k) − e(i) − e(j))`, every exponent being 0, 1 or 2.
pub fn dest_mul(base: &Ring, q: &Value, f: &[Value], g: &[Value]) -> Result<Vec<Value>> {
    if f.is_empty() || g.is_empty() {
        return Ok(Vec::new());
    }
    let q2 = base.mul(q, q)?;
    let mut out = vec![base.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if base.is_zero(a) {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            let k = i + j;
            let mut t = base.mul(a, b)?;
            match e(k) - e(i) - e(j) {
                0 => {}
                1 => t = base.mul(&t, q)?,
                2 => t = base.mul(&t, &q2)?,
                _ => unreachable!(),
            }
            out[k] = base.add(&out[k], &t)?;
        }
    }
    Ok(poly::trim(base, out))
}

/// `f(q^j)` for `j ≥ deg f`, an element of `A`.
fn eval_at_qpow(base: &Ring, q: &Value, f: &[Value], j: usize) -> Result<Value> {
    let mut acc = base.zero();
    for (i, n) in f.iter().enumerate() {
        let t = base.mul(n, &qpow(base, q, j * i - e(i))?)?;
        acc = base.add(&acc, &t)?;
    }
    Ok(acc)
}

/// Numerators scaled to the common denominator `q^E`, `E = e(deg f)`:
/// `f = f̃ / q^E` with `f̃ ∈ A[x]`.
fn lift(base: &Ring, q: &Value, f: &[Value]) -> Result<(Vec<Value>, usize)> {
    let top = e(f.len().saturating_sub(1));
    let v = f
        .iter()
        .enumerate()
        .map(|(i, n)| base.mul(n, &qpow(base, q, top - e(i))?))
        .collect::<Result<Vec<_>>>()?;
    Ok((v, top))
}

/// Membership of `Q / l` (coefficientwise over `A`) in `B`.
fn member_scaled(base: &Ring, q: &Value, num: &[Value], l: &Value) -> Result<Option<Vec<Value>>> {
    let mut out = Vec::with_capacity(num.len());
    for (i, c) in num.iter().enumerate() {
        let t = base.mul(c, &qpow(base, q, e(i))?)?;
        match base.div_exact(&t, l)? {
            Some(n) => out.push(n),
            None => return Ok(None),
        }
    }
    Ok(Some(poly::trim(base, out)))
}

/// `f / g` in `B`, when it exists.
pub fn dest_div_exact(base: &Ring, q: &Value, f: &[Value], g: &[Value]) -> Result<Option<Vec<Value>>> {
    if g.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if f.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if f.len() < g.len() {
        return Ok(None);
    }
    // f/g = (f̃ q^Eg) / (g̃ q^Ef)
    let (ft, ef) = lift(base, q, f)?;
    let (gt, eg) = lift(base, q, g)?;
    let ft = poly::scale(base, &ft, &qpow(base, q, eg)?)?;
    let (quo, rem, l) = poly::pseudo_divmod(base, &ft, &gt)?;
    if !rem.is_empty() {
        return Ok(None);
    }
    let l = base.mul(&l, &qpow(base, q, ef)?)?;
    member_scaled(base, q, &quo, &l)
}

/// Membership in `B` of a polynomial over the fraction field of `A`: the
/// degree-`i` coefficient `a/b` is allowed iff `b | a·q^e(i)`.
pub fn dest_member(base: &Ring, q: &Value, p: &FracPoly) -> Result<Option<Vec<Value>>> {
    let mut out = Vec::with_capacity(p.coeffs.len());
    for (i, c) in p.coeffs.iter().enumerate() {
        let t = base.mul(&c.num, &qpow(base, q, e(i))?)?;
        match base.div_exact(&t, &c.den)? {
            Some(n) => out.push(n),
            None => return Ok(None),
        }
    }
    Ok(Some(poly::trim(base, out)))
}

/// `D(f)` in `B`: interpolation at the first `n + 1` powers `q^j`, `j ≥ n`,
/// where `f` does not vanish.
pub fn dest_divisors(base: &Ring, q: &Value, f: &[Value]) -> Result<Vec<Vec<Value>>> {
    if f.is_empty() {
        return Err(Error::ZeroArgument);
    }
    let n = f.len() - 1;
    if n == 0 {
        return Ok(base
            .divisors(&f[0])?
            .into_iter()
            .map(|d| vec![d])
            .collect());
    }
    let mut points = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    let mut j = n;
    while points.len() < n + 1 {
        let v = eval_at_qpow(base, q, f, j)?;
        if !base.is_zero(&v) {
            points.push(qpow(base, q, j)?);
            values.push(v);
        }
        j += 1;
    }
    let mult = (0..=n)
        .map(|k| qpow(base, q, e(k)))
        .collect::<Result<Vec<_>>>()?;
    let mut found = Vec::new();
    for g in poly::kronecker(base, &points, &values, &mult)? {
        if dest_div_exact(base, q, f, &g)?.is_some() {
            found.push(g);
        }
    }
    poly::close_under_units(base, found)
}

/// Primality of constants: an associate of `q` is not prime, any other
/// constant keeps its status from `A`. Non-constants are not classified.
pub fn dest_is_prime(base: &Ring, q: &Value, f: &[Value]) -> Result<Decision> {
    match f.len() {
        0 => Ok(Decision::False),
        1 => {
            if base.are_associates(&f[0], q)? {
                Ok(Decision::False)
            } else {
                base.is_prime(&f[0])
            }
        }
        _ => Ok(Decision::Unsupported),
    }
}

/// The tower `A_k` destroying `p_α(0), …, p_α(k−1)` with variable `vars[j]`
/// at stage `j`.
pub fn staged_build(schedule: EnumerationSchedule, vars: Vec<String>) -> Result<Ring> {
    if vars.len() != schedule.len() {
        return Err(Error::Validation(format!(
            "{} primes but {} variables",
            schedule.len(),
            vars.len()
        )));
    }
    let mut tower = Ring::int();
    for (idx, var) in schedule.entries().iter().zip(&vars) {
        let q = tower.from_int(&nth_prime(*idx));
        tower = Ring::destroy(&tower, &q, var)?;
    }
    Ok(Ring::staged_from_tower(schedule, vars, &tower))
}

/// Primality of `p_i` in the staged ring, at the limit or as seen at a stage.
pub fn staged_is_prime(r: &Ring, i: u64, mode: Mode) -> Result<bool> {
    let rk = r.with_mode(mode)?;
    let p = rk.from_int(&nth_prime(i));
    rk.is_prime(&p)?.as_bool().ok_or_else(|| {
        Error::Unsupported(format!("primality of p_{i} in {rk}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractions::frac_new;

    fn b2() -> Ring {
        Ring::destroy(&Ring::int(), &Value::int(2), "x").unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Value> {
        v.iter().map(|&c| Value::int(c)).collect()
    }

    #[test]
    fn multiplication_bookkeeping() {
        let z = Ring::int();
        let q = Value::int(2);
        let x = ints(&[0, 1]);
        assert_eq!(dest_mul(&z, &q, &x, &x).unwrap(), ints(&[0, 0, 4]));
        // 2 · (2/4)x² = x²
        assert_eq!(dest_mul(&z, &q, &ints(&[2]), &ints(&[0, 0, 2])).unwrap(), ints(&[0, 0, 4]));
        assert_eq!(dest_mul(&z, &q, &x, &ints(&[1])).unwrap(), x);
    }

    #[test]
    fn membership() {
        let z = Ring::int();
        let q = Value::int(2);
        let fp = |c: Vec<(i64, i64)>| FracPoly {
            coeffs: c
                .into_iter()
                .map(|(a, b)| frac_new(&z, Value::int(a), Value::int(b)).unwrap())
                .collect(),
        };
        assert_eq!(dest_member(&z, &q, &fp(vec![(0, 1), (1, 2)])).unwrap(), None);
        assert_eq!(
            dest_member(&z, &q, &fp(vec![(0, 1), (0, 1), (3, 4)])).unwrap(),
            Some(ints(&[0, 0, 3]))
        );
        assert_eq!(dest_member(&z, &q, &fp(vec![(0, 1), (0, 1), (1, 3)])).unwrap(), None);
    }

    #[test]
    fn q_divides_x_squared_but_not_x() {
        let b = b2();
        let two = Value::Dest(ints(&[2]));
        let x = Value::Dest(ints(&[0, 1]));
        let x2 = b.mul(&x, &x).unwrap();
        let w = b.divides(&two, &x2).unwrap().unwrap();
        assert_eq!(b.mul(&two, &w).unwrap(), x2);
        assert_eq!(b.divides(&two, &x).unwrap(), None);
        assert_eq!(b.is_prime(&two).unwrap(), Decision::False);
        assert_eq!(b.is_prime(&Value::Dest(ints(&[3]))).unwrap(), Decision::True);
        assert_eq!(b.is_prime(&x).unwrap(), Decision::Unsupported);
    }

    #[test]
    fn divisors_of_x() {
        let b = b2();
        let d = b.divisors(&Value::Dest(ints(&[0, 1]))).unwrap();
        for c in [ints(&[1]), ints(&[-1]), ints(&[0, 1]), ints(&[0, -1])] {
            assert!(d.contains(&Value::Dest(c)));
        }
        for v in &d {
            if let Value::Dest(c) = v {
                if c.len() == 1 {
                    assert!(b.is_unit(v).unwrap());
                }
            }
        }
    }

    #[test]
    fn staged_towers() {
        let s = staged_build(EnumerationSchedule::new(vec![0, 2]).unwrap(), vec!["x0".into(), "x1".into()])
            .unwrap();
        assert!(!staged_is_prime(&s, 0, Mode::Limit).unwrap());
        assert!(staged_is_prime(&s, 1, Mode::Limit).unwrap());
        assert!(!staged_is_prime(&s, 2, Mode::Limit).unwrap());
        assert!(staged_is_prime(&s, 2, Mode::AtStage(1)).unwrap());
        assert_eq!(
            EnumerationSchedule::new(vec![1, 1]).unwrap_err(),
            Error::RepeatedIndex(1)
        );
    }
}
