//! Polynomials over an infinite SCFFD: dense arithmetic, Lagrange
//! interpolation over the fraction field, exact division, and divisor
//! enumeration by Kronecker's method.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fractions::{self, frac_add, frac_mul, frac_new, frac_sub};
use crate::ring::Ring;
use crate::value::{Fraction, Value};

/// Polynomial over the fraction field of a base ring, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracPoly {
    pub coeffs: Vec<Fraction>,
}

impl FracPoly {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

pub(crate) fn trim(base: &Ring, mut v: Vec<Value>) -> Vec<Value> {
    while v.last().is_some_and(|c| base.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn constant(base: &Ring, c: Value) -> Vec<Value> {
    trim(base, vec![c])
}

pub(crate) fn add(base: &Ring, a: &[Value], b: &[Value]) -> Result<Vec<Value>> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => base.add(x, y)?,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        });
    }
    Ok(trim(base, out))
}

pub(crate) fn neg(base: &Ring, a: &[Value]) -> Result<Vec<Value>> {
    a.iter().map(|c| base.neg(c)).collect()
}

pub(crate) fn sub(base: &Ring, a: &[Value], b: &[Value]) -> Result<Vec<Value>> {
    add(base, a, &neg(base, b)?)
}

pub(crate) fn mul(base: &Ring, a: &[Value], b: &[Value]) -> Result<Vec<Value>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = base.mul(x, y)?;
            out[i + j] = base.add(&out[i + j], &t)?;
        }
    }
    Ok(trim(base, out))
}

pub(crate) fn scale(base: &Ring, a: &[Value], c: &Value) -> Result<Vec<Value>> {
    let v = a.iter().map(|x| base.mul(x, c)).collect::<Result<Vec<_>>>()?;
    Ok(trim(base, v))
}

/// `a · x^k`
pub(crate) fn shift(base: &Ring, a: &[Value], k: usize) -> Vec<Value> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut v = vec![base.zero(); k];
    v.extend_from_slice(a);
    v
}

pub(crate) fn cmp(base: &Ring, a: &[Value], b: &[Value]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            let o = base.cmp(x, y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Horner evaluation.
pub fn poly_eval(base: &Ring, f: &[Value], a: &Value) -> Result<Value> {
    let mut acc = base.zero();
    for c in f.iter().rev() {
        acc = base.mul(&acc, a)?;
        acc = base.add(&acc, c)?;
    }
    Ok(acc)
}

/// `f / g` in `A[x]` by long division with exact leading-coefficient steps.
pub(crate) fn div_exact(base: &Ring, f: &[Value], g: &[Value]) -> Result<Option<Vec<Value>>> {
    if g.is_empty() {
        return Err(Error::DivisionByZero);
    }
    if f.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if f.len() < g.len() {
        return Ok(None);
    }
    let lg = g.last().unwrap();
    let mut q = vec![base.zero(); f.len() - g.len() + 1];
    let mut r = f.to_vec();
    while !r.is_empty() {
        if r.len() < g.len() {
            return Ok(None);
        }
        let Some(c) = base.div_exact(r.last().unwrap(), lg)? else {
            return Ok(None);
        };
        let k = r.len() - g.len();
        let t = shift(base, &scale(base, g, &c)?, k);
        r = sub(base, &r, &t)?;
        q[k] = c;
    }
    Ok(Some(trim(base, q)))
}

/// Pseudo-division: returns `(Q, R, l)` with `l·f = Q·g + R`, `deg R < deg g`,
/// where `l` is a power of the leading coefficient of `g`.
pub(crate) fn pseudo_divmod(
    base: &Ring,
    f: &[Value],
    g: &[Value],
) -> Result<(Vec<Value>, Vec<Value>, Value)> {
    if g.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let lg = g.last().unwrap().clone();
    if f.len() < g.len() {
        return Ok((Vec::new(), f.to_vec(), base.one()));
    }
    let mut e = f.len() - g.len() + 1;
    let mut q: Vec<Value> = Vec::new();
    let mut r = f.to_vec();
    while !r.is_empty() && r.len() >= g.len() {
        let k = r.len() - g.len();
        let s = shift(base, &[r.last().unwrap().clone()], k);
        q = add(base, &scale(base, &q, &lg)?, &s)?;
        r = sub(
            base,
            &scale(base, &r, &lg)?,
            &mul(base, &s, g)?,
        )?;
        e -= 1;
    }
    let le = base.pow(&lg, e as u32)?;
    let l = base.pow(&lg, (f.len() - g.len() + 1) as u32)?;
    Ok((scale(base, &q, &le)?, scale(base, &r, &le)?, l))
}

/// Evaluation points: the first `count` elements of the canonical
/// enumeration of the base at which `f` does not vanish.
pub fn choose_eval_points(base: &Ring, f: &[Value], count: usize) -> Result<Vec<Value>> {
    if f.is_empty() {
        return Err(Error::ZeroArgument);
    }
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let a = base.enumerate(i);
        if !base.is_zero(&poly_eval(base, f, &a)?) {
            out.push(a);
        }
        i += 1;
    }
    Ok(out)
}

/// Lagrange data for fixed nodes: `den · p(x) = Σ b_i · weights[i](x)` for
/// the unique `p` of degree `≤ n` with `p(a_i) = b_i`.
pub(crate) struct Lagrange {
    pub den: Value,
    pub weights: Vec<Vec<Value>>,
}

pub(crate) fn lagrange(base: &Ring, points: &[Value]) -> Result<Lagrange> {
    let m = points.len();
    if m == 0 {
        return Err(Error::Validation("interpolation needs at least one node".into()));
    }
    let mut dens = Vec::with_capacity(m);
    let mut nums = Vec::with_capacity(m);
    for i in 0..m {
        let mut d = base.one();
        let mut n = vec![base.one()];
        for j in 0..m {
            if i == j {
                continue;
            }
            let diff = base.sub(&points[i], &points[j])?;
            if base.is_zero(&diff) {
                return Err(Error::DuplicateNode);
            }
            d = base.mul(&d, &diff)?;
            n = mul(base, &n, &[base.neg(&points[j])?, base.one()])?;
        }
        dens.push(d);
        nums.push(n);
    }
    let den = base.product(&dens)?;
    let mut weights = Vec::with_capacity(m);
    for i in 0..m {
        let mut w = nums[i].clone();
        for (k, d) in dens.iter().enumerate() {
            if k != i {
                w = scale(base, &w, d)?;
            }
        }
        w.resize(m, base.zero());
        weights.push(w);
    }
    Ok(Lagrange { den, weights })
}

/// The unique `p ∈ F[x]` of degree at most `n` through `n + 1` points.
pub fn interpolate(base: &Ring, points: &[(Value, Value)]) -> Result<FracPoly> {
    let nodes: Vec<Value> = points.iter().map(|(a, _)| a.clone()).collect();
    let lag = lagrange(base, &nodes)?;
    let m = points.len();
    let mut coeffs = Vec::with_capacity(m);
    for k in 0..m {
        let mut c = base.zero();
        for (i, (_, b)) in points.iter().enumerate() {
            c = base.add(&c, &base.mul(b, &lag.weights[i][k])?)?;
        }
        coeffs.push(frac_new(base, c, lag.den.clone())?);
    }
    Ok(frac_trim(coeffs))
}

fn frac_trim(mut v: Vec<Fraction>) -> FracPoly {
    while v.last().is_some_and(fractions::frac_is_zero) {
        v.pop();
    }
    FracPoly { coeffs: v }
}

pub fn fracpoly_from(base: &Ring, f: &[Value]) -> FracPoly {
    FracPoly {
        coeffs: f.iter().map(|c| fractions::frac_from(base, c.clone())).collect(),
    }
}

pub fn fracpoly_eval(base: &Ring, p: &FracPoly, a: &Value) -> Result<Fraction> {
    let x = fractions::frac_from(base, a.clone());
    let mut acc = fractions::frac_from(base, base.zero());
    for c in p.coeffs.iter().rev() {
        acc = frac_add(base, &frac_mul(base, &acc, &x)?, c)?;
    }
    Ok(acc)
}

/// Coefficient-wise membership of `p` in `A[x]`.
pub fn fracpoly_in_base(base: &Ring, p: &FracPoly) -> Result<Option<Vec<Value>>> {
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        match fractions::in_base(base, c)? {
            Some(v) => out.push(v),
            None => return Ok(None),
        }
    }
    Ok(Some(trim(base, out)))
}

/// Long division in `F[x]`.
pub fn poly_divmod(base: &Ring, f: &FracPoly, g: &FracPoly) -> Result<(FracPoly, FracPoly)> {
    let Some(lg) = g.coeffs.last() else {
        return Err(Error::DivisionByZero);
    };
    let inv = fractions::frac_inv(base, lg)?;
    let mut r = f.coeffs.clone();
    let mut q = vec![fractions::frac_from(base, base.zero()); f.coeffs.len().saturating_sub(g.coeffs.len()) + 1];
    while r.len() >= g.coeffs.len() && !r.is_empty() {
        let k = r.len() - g.coeffs.len();
        let c = frac_mul(base, r.last().unwrap(), &inv)?;
        for (j, gj) in g.coeffs.iter().enumerate() {
            r[k + j] = frac_sub(base, &r[k + j], &frac_mul(base, &c, gj)?)?;
        }
        q[k] = c;
        r = frac_trim(r).coeffs;
    }
    Ok((frac_trim(q), frac_trim(r)))
}

/// Whether `g | f` in `A[x]`, with the cofactor.
pub fn poly_divides(base: &Ring, g: &[Value], f: &[Value]) -> Result<Option<Vec<Value>>> {
    if g.is_empty() {
        return Ok(if f.is_empty() { Some(Vec::new()) } else { None });
    }
    div_exact(base, f, g)
}

/// Canonical-least representative of each associate class in a sorted
/// divisor list.
fn associate_reps(base: &Ring, ds: &[Value], units: &[Value]) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    for d in ds {
        let mut least = true;
        for u in units {
            let ud = base.mul(u, d)?;
            if base.cmp(&ud, d) == Ordering::Less {
                least = false;
                break;
            }
        }
        if least {
            out.push(d.clone());
        }
    }
    Ok(out)
}

/// Kronecker search. For every tuple `(b_0, …, b_n) ∈ Π D(values[i])`, with
/// `b_0` ranging over associate-class representatives only, interpolate
/// `den · g = C` and keep `g` when every `C_k · mult[k]` is divisible by
/// `den`. Returns the numerator vectors `C_k · mult[k] / den`, trimmed.
pub(crate) fn kronecker(
    base: &Ring,
    points: &[Value],
    values: &[Value],
    mult: &[Value],
) -> Result<Vec<Vec<Value>>> {
    let lag = lagrange(base, points)?;
    let units = base.units()?;
    let mut choices = Vec::with_capacity(values.len());
    for (i, v) in values.iter().enumerate() {
        let ds = base.divisors(v)?;
        choices.push(if i == 0 {
            associate_reps(base, &ds, &units)?
        } else {
            ds
        });
    }
    let total = choices
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    let cap = base.limits().max_tuples;
    if total > cap as u128 {
        return Err(Error::SearchCap {
            what: "interpolation tuples".into(),
            needed: total.to_string(),
            cap: cap.to_string(),
        });
    }
    if let Some(out) = kronecker_small(&lag, &choices, mult)? {
        return Ok(out);
    }
    kronecker_generic(base, &lag, &choices, mult)
}

fn kronecker_generic(
    base: &Ring,
    lag: &Lagrange,
    choices: &[Vec<Value>],
    mult: &[Value],
) -> Result<Vec<Vec<Value>>> {
    let m = choices.len();
    let mut scaled: Vec<Vec<Vec<Value>>> = Vec::with_capacity(m);
    for (i, ch) in choices.iter().enumerate() {
        let mut row = Vec::with_capacity(ch.len());
        for b in ch {
            let v = lag.weights[i]
                .iter()
                .map(|w| base.mul(w, b))
                .collect::<Result<Vec<_>>>()?;
            row.push(v);
        }
        scaled.push(row);
    }
    let one = base.one();
    let mut idx = vec![0usize; m];
    let mut partial = vec![vec![base.zero(); m]; m + 1];
    let mut from = 0;
    let mut out = Vec::new();
    loop {
        for i in from..m {
            let next = partial[i]
                .iter()
                .zip(&scaled[i][idx[i]])
                .map(|(x, y)| base.add(x, y))
                .collect::<Result<Vec<_>>>()?;
            partial[i + 1] = next;
        }
        let c = &partial[m];
        let mut nums = Vec::with_capacity(m);
        let mut ok = true;
        for (k, ck) in c.iter().enumerate() {
            let t = if mult[k] == one {
                ck.clone()
            } else {
                base.mul(ck, &mult[k])?
            };
            match base.div_exact(&t, &lag.den)? {
                Some(n) => nums.push(n),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            out.push(trim(base, nums));
        }
        // odometer
        let mut j = m;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < choices[j].len() {
                break;
            }
            idx[j] = 0;
        }
        from = j;
    }
}

fn to_i128(v: &Value) -> Option<i128> {
    v.as_int().and_then(|n| n.to_i128())
}

/// Machine-integer version of the search for integer bases with small data.
fn kronecker_small(
    lag: &Lagrange,
    choices: &[Vec<Value>],
    mult: &[Value],
) -> Result<Option<Vec<Vec<Value>>>> {
    let m = choices.len();
    if to_i128(&lag.den).is_none() {
        return Ok(None);
    }
    // bound |C_k · mult_k| before committing to i128
    let limit = BigInt::one() << 120;
    for k in 0..m {
        let mut bound = BigInt::zero();
        for i in 0..m {
            let Some(w) = lag.weights[i][k].as_int() else {
                return Ok(None);
            };
            let mut bmax = BigInt::zero();
            for b in &choices[i] {
                let Some(b) = b.as_int() else { return Ok(None) };
                bmax = bmax.max(b.abs());
            }
            bound += w.abs() * bmax;
        }
        let Some(mk) = mult[k].as_int() else {
            return Ok(None);
        };
        if bound * mk.abs() >= limit {
            return Ok(None);
        }
    }
    let den = to_i128(&lag.den).unwrap();
    let mult: Vec<i128> = mult.iter().map(|v| to_i128(v).unwrap()).collect();
    let mut scaled: Vec<Vec<Vec<i128>>> = Vec::with_capacity(m);
    for (i, ch) in choices.iter().enumerate() {
        let w: Vec<i128> = lag.weights[i].iter().map(|x| to_i128(x).unwrap()).collect();
        scaled.push(
            ch.iter()
                .map(|b| {
                    let b = to_i128(b).unwrap();
                    w.iter().map(|x| x * b).collect()
                })
                .collect(),
        );
    }
    let mut idx = vec![0usize; m];
    let mut partial = vec![vec![0i128; m]; m + 1];
    let mut from = 0;
    let mut out = Vec::new();
    loop {
        for i in from..m {
            let (lo, hi) = partial.split_at_mut(i + 1);
            for (k, slot) in hi[0].iter_mut().enumerate() {
                *slot = lo[i][k] + scaled[i][idx[i]][k];
            }
        }
        let c = &partial[m];
        if c.iter().zip(&mult).all(|(ck, mk)| (ck * mk) % den == 0) {
            let mut nums: Vec<Value> = c
                .iter()
                .zip(&mult)
                .map(|(ck, mk)| Value::Int(BigInt::from(ck * mk / den)))
                .collect();
            while nums.last().is_some_and(|v| v.as_int().unwrap().is_zero()) {
                nums.pop();
            }
            out.push(nums);
        }
        let mut j = m;
        loop {
            if j == 0 {
                return Ok(Some(out));
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < choices[j].len() {
                break;
            }
            idx[j] = 0;
        }
        from = j;
    }
}

/// Closes a list of polynomial divisors under multiplication by the
/// (constant) units of the base, then sorts.
pub(crate) fn close_under_units(base: &Ring, found: Vec<Vec<Value>>) -> Result<Vec<Vec<Value>>> {
    let units = base.units()?;
    let mut out = Vec::with_capacity(found.len() * units.len());
    for g in &found {
        for u in &units {
            out.push(scale(base, g, u)?);
        }
    }
    out.sort_by(|a, b| cmp(base, a, b));
    out.dedup();
    Ok(out)
}

/// `D(f)` in `A[x]` by interpolation at `n + 1` points of the canonical
/// enumeration.
pub fn poly_divisors(base: &Ring, f: &[Value]) -> Result<Vec<Vec<Value>>> {
    if f.is_empty() {
        return Err(Error::ZeroArgument);
    }
    let n = f.len() - 1;
    if n == 0 {
        // divisors of a constant are constants (degree additivity)
        return Ok(base
            .divisors(&f[0])?
            .into_iter()
            .map(|d| vec![d])
            .collect());
    }
    let points = choose_eval_points(base, f, n + 1)?;
    let values = points
        .iter()
        .map(|a| poly_eval(base, f, a))
        .collect::<Result<Vec<_>>>()?;
    let ones = vec![base.one(); n + 1];
    let mut found = Vec::new();
    for g in kronecker(base, &points, &values, &ones)? {
        if div_exact(base, f, &g)?.is_some() {
            found.push(g);
        }
    }
    close_under_units(base, found)
}
