//! Raw element payloads. A [`Value`] only has meaning relative to the
//! [`Ring`](crate::Ring) that produced it; every constructor in this crate
//! returns values in canonical form, so structural equality is ring equality.

use std::collections::BTreeMap;

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Quad(QuadInt),
    /// Coefficients over the base ring, lowest degree first, no trailing zeros.
    Poly(Vec<Value>),
    /// Numerators `n_i` of a prime-destroying extension; the coefficient of
    /// `x^i` is `n_i / q^e(i)` with `e(0) = e(1) = 0` and `e(i) = i` otherwise.
    Dest(Vec<Value>),
    Laurent(Laurent),
    /// Coefficients in the fraction field of the core ring, lowest degree first.
    Fringe(Vec<Fraction>),
}

/// `a + b·√−d` for the fixed `d` of the enclosing ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }
}

/// Laurent polynomial with integer coefficients in the stage variables of an
/// irreducible-destroying tower. Every exponent vector has one entry per
/// stage; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

/// A quotient `num / den` over some SCFFD; canonical when reduced and the
/// denominator is the least of its associates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub num: Value,
    pub den: Value,
}

impl Value {
    pub fn int(n: impl Into<BigInt>) -> Value {
        Value::Int(n.into())
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }
}
