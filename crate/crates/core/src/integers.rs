//! The integers as an SCFFD: trial-division divisor sets, primality, and the
//! increasing list of rational primes.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Canonical order on integers: by absolute value, positive before negative.
/// This is also the canonical enumeration order 0, 1, −1, 2, −2, …
pub fn int_order(a: &BigInt, b: &BigInt) -> Ordering {
    a.magnitude()
        .cmp(b.magnitude())
        .then_with(|| (a.sign() == Sign::Minus).cmp(&(b.sign() == Sign::Minus)))
}

/// The `i`-th integer in the enumeration 0, 1, −1, 2, −2, …
pub fn int_enum(i: u64) -> BigInt {
    let k = BigInt::from(i.div_ceil(2));
    if i % 2 == 1 {
        k
    } else {
        -k
    }
}

/// Positive divisors of `n > 0`, ascending.
pub fn positive_divisors(n: &BigUint) -> Vec<BigUint> {
    if let Some(m) = n.to_u64() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut i = 1u64;
        while i.saturating_mul(i) <= m {
            if m % i == 0 {
                small.push(BigUint::from(i));
                if i != m / i {
                    large.push(BigUint::from(m / i));
                }
            }
            i += 1;
        }
        small.extend(large.into_iter().rev());
        return small;
    }
    let root = n.sqrt();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigUint::one();
    while i <= root {
        if (n % &i).is_zero() {
            let co = n / &i;
            if co != i {
                large.push(co);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All integer divisors of a nonzero `n`, sorted by [`int_order`].
pub fn divisors_int(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = Vec::new();
    for d in positive_divisors(n.magnitude()) {
        let d = BigInt::from(d);
        out.push(-d.clone());
        out.push(d);
    }
    out.sort_by(int_order);
    Ok(out)
}

/// Primality in Z; associates of primes are prime, 0 and ±1 are not.
pub fn is_prime_int(n: &BigInt) -> bool {
    let m = n.magnitude();
    if m <= &BigUint::one() {
        return false;
    }
    if let Some(m) = m.to_u64() {
        if m < 4 {
            return true;
        }
        if m % 2 == 0 {
            return false;
        }
        let mut i = 3u64;
        while i.saturating_mul(i) <= m {
            if m % i == 0 {
                return false;
            }
            i += 2;
        }
        return true;
    }
    let root = m.sqrt();
    let mut i = BigUint::from(2u32);
    while i <= root {
        if (m % &i).is_zero() {
            return false;
        }
        i += 1u32;
    }
    true
}

/// `p_0 = 2, p_1 = 3, p_2 = 5, …`
pub fn nth_prime(i: u64) -> BigInt {
    let mut seen = 0u64;
    let mut c = 2u64;
    loop {
        if is_prime_int(&BigInt::from(c)) {
            if seen == i {
                return BigInt::from(c);
            }
            seen += 1;
        }
        c += 1;
    }
}

/// Index of `p` in the prime list, if `p` is a positive prime.
pub fn prime_index(p: &BigInt) -> Option<u64> {
    if !p.is_positive() || !is_prime_int(p) {
        return None;
    }
    let mut idx = 0u64;
    let mut c = BigInt::from(2);
    while &c < p {
        if is_prime_int(&c) {
            idx += 1;
        }
        c += 1;
    }
    Some(idx)
}

pub(crate) fn div_exact_int(a: &BigInt, b: &BigInt) -> Result<Option<BigInt>> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_rem(b);
    Ok(if r.is_zero() { Some(q) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn divisors_of_six() {
        let d = divisors_int(&BigInt::from(6)).unwrap();
        assert_eq!(d, ints(&[1, -1, 2, -2, 3, -3, 6, -6]));
    }

    #[test]
    fn divisors_match_trial_division() {
        for n in -60i64..=60 {
            if n == 0 {
                continue;
            }
            let mut brute: Vec<BigInt> = (-n.abs()..=n.abs())
                .filter(|&d| d != 0 && n % d == 0)
                .map(BigInt::from)
                .collect();
            brute.sort_by(int_order);
            assert_eq!(divisors_int(&BigInt::from(n)).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn zero_has_no_divisor_set() {
        assert_eq!(divisors_int(&BigInt::zero()), Err(Error::ZeroArgument));
    }

    #[test]
    fn primality() {
        assert!(is_prime_int(&BigInt::from(7)));
        assert!(is_prime_int(&BigInt::from(-7)));
        assert!(!is_prime_int(&BigInt::from(1)));
        assert!(!is_prime_int(&BigInt::from(0)));
        assert!(!is_prime_int(&BigInt::from(91)));
        assert!(is_prime_int(&BigInt::from(2)));
    }

    #[test]
    fn prime_list() {
        assert_eq!(nth_prime(0), BigInt::from(2));
        assert_eq!(nth_prime(1), BigInt::from(3));
        assert_eq!(nth_prime(4), BigInt::from(11));
        assert_eq!(prime_index(&BigInt::from(11)), Some(4));
        assert_eq!(prime_index(&BigInt::from(12)), None);
    }

    #[test]
    fn enumeration_order() {
        let first: Vec<BigInt> = (0..5).map(int_enum).collect();
        assert_eq!(first, ints(&[0, 1, -1, 2, -2]));
        let mut sorted = first.clone();
        sorted.sort_by(int_order);
        assert_eq!(sorted, first);
    }
}
