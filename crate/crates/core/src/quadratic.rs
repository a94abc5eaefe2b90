//! Imaginary quadratic rings Z[√−d]: norm-driven divisor enumeration and a
//! primality decision by exhaustive search of the finite quotient ring.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::integers::{int_order, positive_divisors};
use crate::value::QuadInt;

pub fn quad_norm(d: &BigInt, z: &QuadInt) -> BigInt {
    &z.a * &z.a + d * &z.b * &z.b
}

pub fn quad_add(z: &QuadInt, w: &QuadInt) -> QuadInt {
    QuadInt {
        a: &z.a + &w.a,
        b: &z.b + &w.b,
    }
}

pub fn quad_neg(z: &QuadInt) -> QuadInt {
    QuadInt {
        a: -&z.a,
        b: -&z.b,
    }
}

pub fn quad_mul(d: &BigInt, z: &QuadInt, w: &QuadInt) -> QuadInt {
    QuadInt {
        a: &z.a * &w.a - d * &z.b * &w.b,
        b: &z.a * &w.b + &z.b * &w.a,
    }
}

pub fn quad_is_zero(z: &QuadInt) -> bool {
    z.a.is_zero() && z.b.is_zero()
}

/// Order by (norm, a, b), coordinates compared with [`int_order`].
pub fn quad_order(d: &BigInt, z: &QuadInt, w: &QuadInt) -> Ordering {
    quad_norm(d, z)
        .cmp(&quad_norm(d, w))
        .then_with(|| int_order(&z.a, &w.a))
        .then_with(|| int_order(&z.b, &w.b))
}

/// Every `a + b√−d` with `a² + d·b² = n`, sorted by [`quad_order`].
pub fn elements_of_norm(d: &BigInt, n: &BigInt) -> Vec<QuadInt> {
    let mut out = Vec::new();
    if n.is_negative() {
        return out;
    }
    if n.is_zero() {
        out.push(QuadInt::new(0, 0));
        return out;
    }
    let bound = (n / d).sqrt();
    let mut b = -bound.clone();
    while b <= bound {
        let rest = n - d * &b * &b;
        if !rest.is_negative() {
            let a = rest.sqrt();
            if &a * &a == rest {
                out.push(QuadInt::new(a.clone(), b.clone()));
                if !a.is_zero() {
                    out.push(QuadInt::new(-a, b.clone()));
                }
            }
        }
        b += 1;
    }
    out.sort_by(|x, y| quad_order(d, x, y));
    out
}

/// The quotient `z / w` when it lies in Z[√−d].
pub fn quad_divide_exact(d: &BigInt, z: &QuadInt, w: &QuadInt) -> Result<Option<QuadInt>> {
    let n = quad_norm(d, w);
    if n.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // z · conj(w) / N(w)
    let re = &z.a * &w.a + d * &z.b * &w.b;
    let im = &z.b * &w.a - &z.a * &w.b;
    let (qa, ra) = re.div_rem(&n);
    let (qb, rb) = im.div_rem(&n);
    Ok(if ra.is_zero() && rb.is_zero() {
        Some(QuadInt { a: qa, b: qb })
    } else {
        None
    })
}

/// Divisors of a nonzero `z`: every element whose norm divides `N(z)` and
/// which divides `z` exactly.
pub fn divisors_quad(d: &BigInt, z: &QuadInt) -> Result<Vec<QuadInt>> {
    if quad_is_zero(z) {
        return Err(Error::ZeroArgument);
    }
    let n = quad_norm(d, z);
    let mut out = Vec::new();
    for m in positive_divisors(n.magnitude()) {
        for w in elements_of_norm(d, &BigInt::from(m)) {
            if quad_divide_exact(d, z, &w)?.is_some() {
                out.push(w);
            }
        }
    }
    out.sort_by(|x, y| quad_order(d, x, y));
    Ok(out)
}

/// Z[√−d] / (z) as an explicit lattice quotient with `N(z)` residues
/// `(x, y)`, `0 ≤ x < n1`, `0 ≤ y < n2`.
struct Quotient {
    d: i128,
    n1: i128,
    n2: i128,
    shift: i128,
}

impl Quotient {
    fn new(d: i128, a: i128, b: i128) -> Quotient {
        let norm = a * a + d * b * b;
        // the ideal is spanned by (a, b) and (−d·b, a)
        let e = b.extended_gcd(&a);
        let (g, s, t) = if e.gcd < 0 {
            (-e.gcd, -e.x, -e.y)
        } else {
            (e.gcd, e.x, e.y)
        };
        let n1 = norm / g;
        let shift = (s * a - t * d * b).rem_euclid(n1);
        Quotient {
            d,
            n1,
            n2: g,
            shift,
        }
    }

    fn reduce(&self, x: i128, y: i128) -> (i128, i128) {
        let k = y.div_euclid(self.n2);
        let y = y - k * self.n2;
        let x = (x - k * self.shift).rem_euclid(self.n1);
        (x, y)
    }

    fn order(&self) -> i128 {
        self.n1 * self.n2
    }

    fn residue(&self, idx: i128) -> (i128, i128) {
        (idx % self.n1, idx / self.n1)
    }

    fn mul(&self, u: (i128, i128), v: (i128, i128)) -> (i128, i128) {
        self.reduce(u.0 * v.0 - self.d * u.1 * v.1, u.0 * v.1 + u.1 * v.0)
    }
}

/// `z` is prime iff it is a nonzero nonunit and Z[√−d]/(z) has no zero
/// divisors. The search is quadratic in `N(z)`; `max_order` bounds it.
pub fn is_prime_quad(d: &BigInt, z: &QuadInt, max_order: u64) -> Result<bool> {
    let n = quad_norm(d, z);
    if n.is_zero() || n.is_one() {
        return Ok(false);
    }
    let too_big = || Error::SearchCap {
        what: "quotient ring order".into(),
        needed: n.to_string(),
        cap: max_order.to_string(),
    };
    if n > BigInt::from(max_order) {
        return Err(too_big());
    }
    let (dd, a, b) = match (d.to_i128(), z.a.to_i128(), z.b.to_i128()) {
        (Some(dd), Some(a), Some(b)) if dd < (1i128 << 60) => (dd, a, b),
        _ => return Err(too_big()),
    };
    let q = Quotient::new(dd, a, b);
    debug_assert_eq!(BigInt::from(q.order()), n);
    for i in 1..q.order() {
        let u = q.residue(i);
        for j in i..q.order() {
            if q.mul(u, q.residue(j)) == (0, 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Units of Z[√−d]: {±1}, plus ±√−1 when d = 1.
pub fn quad_units(d: &BigInt) -> Vec<QuadInt> {
    elements_of_norm(d, &BigInt::one())
}

pub(crate) fn parse_d(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::Validation(format!("Quad({d}): d must be positive")));
    }
    let m: BigUint = d.magnitude().clone();
    let mut k = BigUint::from(2u32);
    while &k * &k <= m {
        if (&m % (&k * &k)).is_zero() {
            return Err(Error::Validation(format!("Quad({d}): d must be squarefree")));
        }
        k += 1u32;
    }
    Ok(())
}
