//! Ring descriptors and the uniform element interface.
//!
//! A [`Ring`] is a handle on an immutable descriptor tree plus the search
//! limits used by the exponential divisor searches. Every operation is a pure
//! function of its inputs; the only interior state is a cache of the unit
//! group, which is never observable.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::destroy;
use crate::error::{Error, Result};
use crate::fringe;
use crate::integers::{self, int_order};
use crate::laurent;
use crate::poly;
use crate::quadratic::{self, quad_add, quad_is_zero, quad_mul, quad_neg, quad_order};
use crate::value::{Fraction, Laurent, QuadInt, Value};

/// Finite injective sequence of prime indices, the finite stand-in for an
/// enumeration of a c.e. set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnumerationSchedule(Vec<u64>);

impl EnumerationSchedule {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &e in &entries {
            if !seen.insert(e) {
                return Err(Error::RepeatedIndex(e));
            }
        }
        Ok(EnumerationSchedule(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.0.contains(&i)
    }

    pub fn truncate(&self, k: usize) -> EnumerationSchedule {
        EnumerationSchedule(self.0[..k.min(self.0.len())].to_vec())
    }
}

/// One stage of an irreducible-destroying tower: the integer prime whose
/// irreducibility is destroyed and the variable that splits it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Stage {
    pub prime: BigInt,
    pub var: String,
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Int,
    Quad {
        d: BigInt,
    },
    Poly {
        base: Arc<Node>,
        var: String,
    },
    Destroy {
        base: Arc<Node>,
        q: Value,
        var: String,
    },
    Staged {
        schedule: EnumerationSchedule,
        vars: Vec<String>,
        tower: Arc<Node>,
    },
    IrredDestroy {
        base: Arc<Node>,
        p: BigInt,
        var: String,
        stages: Vec<Stage>,
    },
    StagedIrred {
        schedule: EnumerationSchedule,
        vars: Vec<String>,
        tower: Arc<Node>,
    },
    Fringe {
        base: Arc<Node>,
        var: String,
    },
}

/// A descriptor node. Equality and hashing look only at the descriptor.
#[derive(Debug)]
pub struct Node {
    desc: Descriptor,
    units: OnceLock<Vec<Value>>,
    core: OnceLock<Arc<Node>>,
}

impl Node {
    fn new(desc: Descriptor) -> Arc<Node> {
        Arc::new(Node {
            desc,
            units: OnceLock::new(),
            core: OnceLock::new(),
        })
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.desc
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc
    }
}

impl Eq for Node {}

impl Hash for Node {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.desc.hash(state)
    }
}

/// Bounds on the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Candidate tuples examined by one interpolation divisor search.
    pub max_tuples: u64,
    /// Largest y-degree accepted by the fraction-field irreducibility test.
    pub max_degree: usize,
    /// Largest number of core variables under a fringe ring.
    pub max_core_vars: usize,
    /// Largest integer coefficient (after clearing denominators) accepted by
    /// the fraction-field irreducibility test.
    pub max_height: u64,
    /// Largest quotient ring searched by the quadratic primality test.
    pub max_quotient: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tuples: 1_000_000,
            max_degree: 4,
            max_core_vars: 2,
            max_height: 50,
            max_quotient: 20_000,
        }
    }
}

/// Three-valued answer of the irreducibility and primality predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    True,
    False,
    Unsupported,
}

impl Decision {
    pub fn from_bool(b: bool) -> Decision {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::True => Some(true),
            Decision::False => Some(false),
            Decision::Unsupported => None,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::True => "true",
            Decision::False => "false",
            Decision::Unsupported => "unsupported",
        })
    }
}

/// Query mode for staged descriptors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Limit,
    AtStage(usize),
}

/// Result of [`Ring::factor_irreducibles`]: `unit · Π factors = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Value,
    pub factors: Vec<Value>,
}

/// Resolved view of a node with staged wrappers stripped.
pub(crate) enum Kind<'a> {
    Int,
    Quad(&'a BigInt),
    Poly { base: Ring, var: &'a str },
    Dest { base: Ring, q: &'a Value, var: &'a str },
    Laurent { stages: &'a [Stage] },
    Fringe { base: Ring, var: &'a str },
}

#[derive(Clone, Debug)]
pub struct Ring {
    node: Arc<Node>,
    limits: Limits,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.node, &other.node) || self.node == other.node
    }
}

impl Eq for Ring {}

fn resolve(node: &Node) -> &Node {
    match &node.desc {
        Descriptor::Staged { tower, .. } | Descriptor::StagedIrred { tower, .. } => resolve(tower),
        _ => node,
    }
}

fn check_var(var: &str) -> Result<()> {
    let mut chars = var.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(Error::Validation(format!("`{var}` is not an identifier")));
    }
    if var == "s" {
        return Err(Error::Validation(
            "`s` is reserved for the square root symbol".into(),
        ));
    }
    Ok(())
}

impl Ring {
    fn from_desc(desc: Descriptor, limits: Limits) -> Ring {
        Ring {
            node: Node::new(desc),
            limits,
        }
    }

    pub(crate) fn child(&self, node: &Arc<Node>) -> Ring {
        Ring {
            node: node.clone(),
            limits: self.limits,
        }
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.node.desc
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn with_limits(&self, limits: Limits) -> Ring {
        Ring {
            node: self.node.clone(),
            limits,
        }
    }

    // ---- construction -------------------------------------------------

    pub fn int() -> Ring {
        Ring::from_desc(Descriptor::Int, Limits::default())
    }

    pub fn quad(d: impl Into<BigInt>) -> Result<Ring> {
        let d = d.into();
        quadratic::parse_d(&d)?;
        Ok(Ring::from_desc(Descriptor::Quad { d }, Limits::default()))
    }

    pub fn poly(base: &Ring, var: &str) -> Result<Ring> {
        check_var(var)?;
        base.require_scffd("Poly")?;
        base.require_fresh_var(var)?;
        Ok(Ring::from_desc(
            Descriptor::Poly {
                base: base.node.clone(),
                var: var.to_string(),
            },
            base.limits,
        ))
    }

    /// Adjoin `x` with `q | x²`, `q ∤ x`; `q` must be prime in `base`.
    pub fn destroy(base: &Ring, q: &Value, var: &str) -> Result<Ring> {
        check_var(var)?;
        base.require_scffd("Destroy")?;
        base.require_fresh_var(var)?;
        match base.is_prime(q)? {
            Decision::True => {}
            Decision::False => {
                return Err(Error::Validation(format!(
                    "{} is not prime in {}",
                    base.format(q)?,
                    base
                )))
            }
            Decision::Unsupported => {
                return Err(Error::Validation(format!(
                    "primality of {} in {} is not decided",
                    base.format(q)?,
                    base
                )))
            }
        }
        Ok(Ring::from_desc(
            Descriptor::Destroy {
                base: base.node.clone(),
                q: q.clone(),
                var: var.to_string(),
            },
            base.limits,
        ))
    }

    /// The stage-k tower destroying the primality of `p_α(0), …, p_α(k−1)`.
    pub fn staged(schedule: EnumerationSchedule, vars: Vec<String>) -> Result<Ring> {
        destroy::staged_build(schedule, vars)
    }

    pub(crate) fn staged_from_tower(
        schedule: EnumerationSchedule,
        vars: Vec<String>,
        tower: &Ring,
    ) -> Ring {
        Ring::from_desc(
            Descriptor::Staged {
                schedule,
                vars,
                tower: tower.node.clone(),
            },
            tower.limits,
        )
    }

    /// `base[x, p/x]` for an integer prime `p` still irreducible in `base`.
    pub fn irred_destroy(base: &Ring, p: &BigInt, var: &str) -> Result<Ring> {
        check_var(var)?;
        base.require_fresh_var(var)?;
        let mut stages = match base.kind() {
            Kind::Int => Vec::new(),
            Kind::Laurent { stages } => stages.to_vec(),
            _ => {
                return Err(Error::Validation(format!(
                    "IrredDestroy needs Z or an IrredDestroy tower as base, got {base}"
                )))
            }
        };
        if !p.is_positive() || !integers::is_prime_int(p) {
            return Err(Error::Validation(format!("{p} is not a positive integer prime")));
        }
        if stages.iter().any(|s| &s.prime == p) {
            return Err(Error::Validation(format!(
                "{p} is already destroyed in {base}"
            )));
        }
        stages.push(Stage {
            prime: p.clone(),
            var: var.to_string(),
        });
        Ok(Ring::from_desc(
            Descriptor::IrredDestroy {
                base: base.node.clone(),
                p: p.clone(),
                var: var.to_string(),
                stages,
            },
            base.limits,
        ))
    }

    pub fn staged_irred(schedule: EnumerationSchedule, vars: Vec<String>) -> Result<Ring> {
        laurent::staged_irred_build(schedule, vars)
    }

    pub(crate) fn staged_irred_from_tower(
        schedule: EnumerationSchedule,
        vars: Vec<String>,
        tower: &Ring,
    ) -> Ring {
        Ring::from_desc(
            Descriptor::StagedIrred {
                schedule,
                vars,
                tower: tower.node.clone(),
            },
            tower.limits,
        )
    }

    /// `R + yR + y²F[y]` inside `F[y]`, `F` the fraction field of `R`.
    pub fn fringe(base: &Ring, var: &str) -> Result<Ring> {
        check_var(var)?;
        base.require_fresh_var(var)?;
        match base.kind() {
            Kind::Int | Kind::Laurent { .. } => {}
            _ => {
                return Err(Error::Validation(format!(
                    "Fringe needs Z or an IrredDestroy tower as base, got {base}"
                )))
            }
        }
        Ok(Ring::from_desc(
            Descriptor::Fringe {
                base: base.node.clone(),
                var: var.to_string(),
            },
            base.limits,
        ))
    }

    fn require_scffd(&self, what: &str) -> Result<()> {
        if self.has_divisor_function() {
            Ok(())
        } else {
            Err(Error::Validation(format!(
                "{what} needs an infinite SCFFD base, got {self}"
            )))
        }
    }

    fn require_fresh_var(&self, var: &str) -> Result<()> {
        if self.variables().iter().any(|v| v == var) {
            Err(Error::Validation(format!(
                "variable `{var}` already used in {self}"
            )))
        } else {
            Ok(())
        }
    }

    /// Variables along the descriptor path, outermost last.
    pub fn variables(&self) -> Vec<String> {
        match &self.node.desc {
            Descriptor::Int | Descriptor::Quad { .. } => Vec::new(),
            Descriptor::Poly { base, var }
            | Descriptor::Destroy { base, var, .. }
            | Descriptor::IrredDestroy { base, var, .. }
            | Descriptor::Fringe { base, var } => {
                let mut v = self.child(base).variables();
                v.push(var.clone());
                v
            }
            Descriptor::Staged { tower, .. } | Descriptor::StagedIrred { tower, .. } => {
                self.child(tower).variables()
            }
        }
    }

    pub(crate) fn kind(&self) -> Kind<'_> {
        let node = resolve(&self.node);
        match &node.desc {
            Descriptor::Int => Kind::Int,
            Descriptor::Quad { d } => Kind::Quad(d),
            Descriptor::Poly { base, var } => Kind::Poly {
                base: self.child(base),
                var,
            },
            Descriptor::Destroy { base, q, var } => Kind::Dest {
                base: self.child(base),
                q,
                var,
            },
            Descriptor::IrredDestroy { stages, .. } => Kind::Laurent { stages },
            Descriptor::Fringe { base, var } => Kind::Fringe {
                base: self.child(base),
                var,
            },
            Descriptor::Staged { .. } | Descriptor::StagedIrred { .. } => unreachable!(),
        }
    }

    /// The polynomial ring over Z or Z[√−d] in which this ring's elements are
    /// written with a common denominator.
    pub fn core(&self) -> Ring {
        let node = resolve(&self.node);
        if let Some(c) = node.core.get() {
            return self.child(c);
        }
        let c = crate::ambient::build_core(self);
        let _ = node.core.set(c.node.clone());
        c.with_limits(self.limits)
    }

    /// Stages of an irreducible-destroying tower; `Z` is the empty tower.
    pub fn laurent_stages(&self) -> Option<Vec<Stage>> {
        match self.kind() {
            Kind::Int => Some(Vec::new()),
            Kind::Laurent { stages } => Some(stages.to_vec()),
            _ => None,
        }
    }

    /// Whether this construction carries a divisor function (is an SCFFD).
    pub fn has_divisor_function(&self) -> bool {
        matches!(
            self.kind(),
            Kind::Int | Kind::Quad(_) | Kind::Poly { .. } | Kind::Dest { .. }
        )
    }

    /// Flagged UFDs: Z and polynomial towers over Z.
    pub fn is_ufd(&self) -> bool {
        match self.kind() {
            Kind::Int => true,
            Kind::Poly { base, .. } => base.is_ufd(),
            _ => false,
        }
    }

    /// Whether the descriptor contains a staged node.
    pub fn is_staged(&self) -> bool {
        match &self.node.desc {
            Descriptor::Staged { .. } | Descriptor::StagedIrred { .. } => true,
            Descriptor::Int | Descriptor::Quad { .. } => false,
            Descriptor::Poly { base, .. }
            | Descriptor::Destroy { base, .. }
            | Descriptor::IrredDestroy { base, .. }
            | Descriptor::Fringe { base, .. } => self.child(base).is_staged(),
        }
    }

    /// The schedule of the first staged node on the descriptor path.
    pub fn schedule(&self) -> Option<&EnumerationSchedule> {
        fn find(node: &Node) -> Option<&EnumerationSchedule> {
            match &node.desc {
                Descriptor::Staged { schedule, .. } | Descriptor::StagedIrred { schedule, .. } => {
                    Some(schedule)
                }
                Descriptor::Int | Descriptor::Quad { .. } => None,
                Descriptor::Poly { base, .. }
                | Descriptor::Destroy { base, .. }
                | Descriptor::IrredDestroy { base, .. }
                | Descriptor::Fringe { base, .. } => find(base),
            }
        }
        find(&self.node)
    }

    /// The ring seen by an observer at stage `k`: every staged node is cut
    /// down to its first `k` stages.
    pub fn at_stage(&self, k: usize) -> Result<Ring> {
        if !self.is_staged() {
            return Err(Error::Validation(format!(
                "stage modes apply only to staged descriptors, not {self}"
            )));
        }
        self.truncate(k)
    }

    pub fn with_mode(&self, mode: Mode) -> Result<Ring> {
        match mode {
            Mode::Limit => Ok(self.clone()),
            Mode::AtStage(k) => self.at_stage(k),
        }
    }

    fn truncate(&self, k: usize) -> Result<Ring> {
        let r = match &self.node.desc {
            Descriptor::Int | Descriptor::Quad { .. } => self.clone(),
            Descriptor::Staged { schedule, vars, .. } => {
                let k = k.min(schedule.len());
                Ring::staged(schedule.truncate(k), vars[..k].to_vec())?
            }
            Descriptor::StagedIrred { schedule, vars, .. } => {
                let k = k.min(schedule.len());
                Ring::staged_irred(schedule.truncate(k), vars[..k].to_vec())?
            }
            Descriptor::Poly { base, var } => Ring::poly(&self.child(base).truncate(k)?, var)?,
            Descriptor::Destroy { base, q, var } => {
                let b = self.child(base);
                let nb = b.truncate(k)?;
                let text = b.format(q)?;
                let q2 = crate::syntax::parse_element(&nb, &text)?;
                Ring::destroy(&nb, &q2, var)?
            }
            Descriptor::IrredDestroy { base, p, var, .. } => {
                Ring::irred_destroy(&self.child(base).truncate(k)?, p, var)?
            }
            Descriptor::Fringe { base, var } => {
                Ring::fringe(&self.child(base).truncate(k)?, var)?
            }
        };
        Ok(r.with_limits(self.limits))
    }

    // ---- arithmetic ---------------------------------------------------

    pub fn zero(&self) -> Value {
        match self.kind() {
            Kind::Int => Value::Int(BigInt::zero()),
            Kind::Quad(_) => Value::Quad(QuadInt::new(0, 0)),
            Kind::Poly { .. } => Value::Poly(Vec::new()),
            Kind::Dest { .. } => Value::Dest(Vec::new()),
            Kind::Laurent { .. } => Value::Laurent(Laurent::default()),
            Kind::Fringe { .. } => Value::Fringe(Vec::new()),
        }
    }

    pub fn one(&self) -> Value {
        self.from_int(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Value {
        self.from_int(&BigInt::from(n))
    }

    pub fn from_int(&self, n: &BigInt) -> Value {
        match self.kind() {
            Kind::Int => Value::Int(n.clone()),
            Kind::Quad(_) => Value::Quad(QuadInt::new(n.clone(), 0)),
            Kind::Poly { base, .. } => Value::Poly(poly::constant(&base, base.from_int(n))),
            Kind::Dest { base, .. } => Value::Dest(poly::constant(&base, base.from_int(n))),
            Kind::Laurent { stages } => Value::Laurent(laurent::from_int(stages.len(), n)),
            Kind::Fringe { base, .. } => {
                if n.is_zero() {
                    return Value::Fringe(Vec::new());
                }
                let core = base.core();
                Value::Fringe(vec![Fraction {
                    num: core.from_int(n),
                    den: core.one(),
                }])
            }
        }
    }

    pub fn is_zero(&self, a: &Value) -> bool {
        match a {
            Value::Int(n) => n.is_zero(),
            Value::Quad(z) => quad_is_zero(z),
            Value::Poly(c) | Value::Dest(c) => c.is_empty(),
            Value::Laurent(l) => l.terms.is_empty(),
            Value::Fringe(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Value) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value> {
        Ok(match (self.kind(), a, b) {
            (Kind::Int, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (Kind::Quad(_), Value::Quad(x), Value::Quad(y)) => Value::Quad(quad_add(x, y)),
            (Kind::Poly { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                Value::Poly(poly::add(&base, x, y)?)
            }
            (Kind::Dest { base, .. }, Value::Dest(x), Value::Dest(y)) => {
                Value::Dest(poly::add(&base, x, y)?)
            }
            (Kind::Laurent { .. }, Value::Laurent(x), Value::Laurent(y)) => {
                Value::Laurent(laurent::add(x, y))
            }
            (Kind::Fringe { base, .. }, Value::Fringe(x), Value::Fringe(y)) => {
                Value::Fringe(fringe::add(&base.core(), x, y)?)
            }
            _ => return Err(self.shape_error(a)),
        })
    }

    pub fn neg(&self, a: &Value) -> Result<Value> {
        Ok(match (self.kind(), a) {
            (Kind::Int, Value::Int(x)) => Value::Int(-x),
            (Kind::Quad(_), Value::Quad(x)) => Value::Quad(quad_neg(x)),
            (Kind::Poly { base, .. }, Value::Poly(x)) => Value::Poly(poly::neg(&base, x)?),
            (Kind::Dest { base, .. }, Value::Dest(x)) => Value::Dest(poly::neg(&base, x)?),
            (Kind::Laurent { .. }, Value::Laurent(x)) => Value::Laurent(laurent::neg(x)),
            (Kind::Fringe { base, .. }, Value::Fringe(x)) => {
                Value::Fringe(fringe::neg(&base.core(), x)?)
            }
            _ => return Err(self.shape_error(a)),
        })
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Result<Value> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        Ok(match (self.kind(), a, b) {
            (Kind::Int, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (Kind::Quad(d), Value::Quad(x), Value::Quad(y)) => Value::Quad(quad_mul(d, x, y)),
            (Kind::Poly { base, .. }, Value::Poly(x), Value::Poly(y)) => {
                Value::Poly(poly::mul(&base, x, y)?)
            }
            (Kind::Dest { base, q, .. }, Value::Dest(x), Value::Dest(y)) => {
                Value::Dest(destroy::dest_mul(&base, q, x, y)?)
            }
            (Kind::Laurent { .. }, Value::Laurent(x), Value::Laurent(y)) => {
                Value::Laurent(laurent::mul(x, y))
            }
            (Kind::Fringe { base, .. }, Value::Fringe(x), Value::Fringe(y)) => {
                Value::Fringe(fringe::mul(&base.core(), x, y)?)
            }
            _ => return Err(self.shape_error(a)),
        })
    }

    pub fn pow(&self, a: &Value, e: u32) -> Result<Value> {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a Value>) -> Result<Value> {
        let mut acc = self.one();
        for v in items {
            acc = self.mul(&acc, v)?;
        }
        Ok(acc)
    }

    fn shape_error(&self, a: &Value) -> Error {
        Error::TagMismatch {
            expected: self.to_string(),
            found: format!("{a:?}"),
        }
    }

    /// Checks that `a` has the payload shape of this ring.
    pub fn owns(&self, a: &Value) -> bool {
        match (self.kind(), a) {
            (Kind::Int, Value::Int(_)) | (Kind::Quad(_), Value::Quad(_)) => true,
            (Kind::Poly { base, .. }, Value::Poly(c)) | (Kind::Dest { base, .. }, Value::Dest(c)) => {
                c.iter().all(|x| base.owns(x))
            }
            (Kind::Laurent { stages }, Value::Laurent(l)) => {
                l.terms.keys().all(|e| e.len() == stages.len())
            }
            (Kind::Fringe { .. }, Value::Fringe(_)) => true,
            _ => false,
        }
    }

    /// Frozen total order on canonical forms: integers by absolute value
    /// (positive first), quadratic integers by (norm, a, b), polynomials by
    /// (degree, coefficients from the leading one down).
    pub fn cmp(&self, a: &Value, b: &Value) -> Ordering {
        match (self.kind(), a, b) {
            (Kind::Int, Value::Int(x), Value::Int(y)) => int_order(x, y),
            (Kind::Quad(d), Value::Quad(x), Value::Quad(y)) => quad_order(d, x, y),
            (Kind::Poly { base, .. }, Value::Poly(x), Value::Poly(y))
            | (Kind::Dest { base, .. }, Value::Dest(x), Value::Dest(y)) => poly::cmp(&base, x, y),
            (Kind::Laurent { .. }, Value::Laurent(x), Value::Laurent(y)) => laurent::cmp(x, y),
            (Kind::Fringe { base, .. }, Value::Fringe(x), Value::Fringe(y)) => {
                fringe::cmp(&base.core(), x, y)
            }
            _ => format!("{a:?}").cmp(&format!("{b:?}")),
        }
    }

    pub fn sort_dedup(&self, v: &mut Vec<Value>) {
        v.sort_by(|a, b| self.cmp(a, b));
        v.dedup();
    }

    /// The `i`-th element of the canonical enumeration: the integers
    /// 0, 1, −1, 2, −2, … embedded as constants.
    pub fn enumerate(&self, i: u64) -> Value {
        self.from_int(&integers::int_enum(i))
    }

    // ---- divisibility -------------------------------------------------

    /// `a / b` when it exists in the ring.
    pub fn div_exact(&self, a: &Value, b: &Value) -> Result<Option<Value>> {
        if self.is_zero(b) {
            return Err(Error::DivisionByZero);
        }
        match (self.kind(), a, b) {
            (Kind::Int, Value::Int(x), Value::Int(y)) => {
                Ok(integers::div_exact_int(x, y)?.map(Value::Int))
            }
            (Kind::Quad(d), Value::Quad(x), Value::Quad(y)) => {
                Ok(quadratic::quad_divide_exact(d, x, y)?.map(Value::Quad))
            }
            (Kind::Poly { base, .. }, Value::Poly(f), Value::Poly(g)) => {
                Ok(poly::div_exact(&base, f, g)?.map(Value::Poly))
            }
            (Kind::Dest { base, q, .. }, Value::Dest(f), Value::Dest(g)) => {
                Ok(destroy::dest_div_exact(&base, q, f, g)?.map(Value::Dest))
            }
            (Kind::Laurent { .. }, _, _) | (Kind::Fringe { .. }, _, _) => {
                if self.is_unit(b)? {
                    let inv = self.unit_inverse(b)?;
                    return Ok(Some(self.mul(a, &inv)?));
                }
                Err(Error::Unsupported(format!(
                    "{self} has no divisibility procedure"
                )))
            }
            _ => Err(self.shape_error(a)),
        }
    }

    fn unit_inverse(&self, u: &Value) -> Result<Value> {
        let one = self.one();
        for v in self.units()? {
            if self.mul(u, &v)? == one {
                return Ok(v);
            }
        }
        Err(Error::NotDivisible)
    }

    /// `D(a)`: every divisor of a nonzero `a`, sorted by [`Ring::cmp`].
    pub fn divisors(&self, a: &Value) -> Result<Vec<Value>> {
        if self.is_zero(a) {
            return Err(Error::ZeroArgument);
        }
        let mut out = match (self.kind(), a) {
            (Kind::Int, Value::Int(n)) => integers::divisors_int(n)?
                .into_iter()
                .map(Value::Int)
                .collect(),
            (Kind::Quad(d), Value::Quad(z)) => quadratic::divisors_quad(d, z)?
                .into_iter()
                .map(Value::Quad)
                .collect(),
            (Kind::Poly { base, .. }, Value::Poly(f)) => poly::poly_divisors(&base, f)?
                .into_iter()
                .map(Value::Poly)
                .collect(),
            (Kind::Dest { base, q, .. }, Value::Dest(f)) => destroy::dest_divisors(&base, q, f)?
                .into_iter()
                .map(Value::Dest)
                .collect(),
            (Kind::Laurent { .. }, _) | (Kind::Fringe { .. }, _) => {
                if self.is_unit(a)? {
                    self.units()?
                } else {
                    return Err(Error::Unsupported(format!(
                        "{self} has no divisor function"
                    )));
                }
            }
            _ => return Err(self.shape_error(a)),
        };
        self.sort_dedup(&mut out);
        Ok(out)
    }

    /// `U = D(1)`. For the two constructions without a divisor function the
    /// unit group {1, −1} is known from the construction and certified by
    /// their own unit tests.
    pub fn units(&self) -> Result<Vec<Value>> {
        let node = resolve(&self.node);
        if let Some(u) = node.units.get() {
            return Ok(u.clone());
        }
        let u = match self.kind() {
            Kind::Laurent { .. } | Kind::Fringe { .. } => {
                vec![self.one(), self.from_i64(-1)]
            }
            _ => self.divisors(&self.one())?,
        };
        let _ = node.units.set(u.clone());
        Ok(u)
    }

    pub fn is_unit(&self, a: &Value) -> Result<bool> {
        if self.is_zero(a) {
            return Ok(false);
        }
        match (self.kind(), a) {
            (Kind::Laurent { stages }, Value::Laurent(l)) => Ok(laurent::laur_is_unit(stages, l)),
            (Kind::Fringe { base, .. }, Value::Fringe(c)) => fringe::is_unit(&base, c),
            _ => Ok(self.units()?.contains(a)),
        }
    }

    pub fn are_associates(&self, a: &Value, b: &Value) -> Result<bool> {
        for u in self.units()? {
            if &self.mul(a, &u)? == b {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether `a | b`, with the witness `c` such that `a·c = b`.
    pub fn divides(&self, a: &Value, b: &Value) -> Result<Option<Value>> {
        if self.is_zero(b) {
            return Ok(Some(self.zero()));
        }
        if self.is_zero(a) {
            return Ok(None);
        }
        self.div_exact(b, a)
    }

    pub fn is_irreducible(&self, a: &Value) -> Result<Decision> {
        if self.is_zero(a) || self.is_unit(a)? {
            return Ok(Decision::False);
        }
        match (self.kind(), a) {
            (Kind::Laurent { stages }, Value::Laurent(l)) => {
                Ok(laurent::integer_irreducible(stages, l))
            }
            (Kind::Fringe { base, .. }, Value::Fringe(c)) => fringe::fringe_is_irreducible(&base, c),
            _ => {
                let units = self.units()?;
                for d in self.divisors(a)? {
                    if units.contains(&d) {
                        continue;
                    }
                    if !self.are_associates(a, &d)? {
                        return Ok(Decision::False);
                    }
                }
                Ok(Decision::True)
            }
        }
    }

    pub fn is_prime(&self, a: &Value) -> Result<Decision> {
        if self.is_zero(a) || self.is_unit(a)? {
            return Ok(Decision::False);
        }
        match (self.kind(), a) {
            (Kind::Int, Value::Int(n)) => Ok(Decision::from_bool(integers::is_prime_int(n))),
            (Kind::Quad(d), Value::Quad(z)) => Ok(Decision::from_bool(quadratic::is_prime_quad(
                d,
                z,
                self.limits.max_quotient,
            )?)),
            (Kind::Poly { base, .. }, Value::Poly(f)) => {
                if self.is_ufd() {
                    self.is_irreducible(a)
                } else if f.len() == 1 {
                    // A[x]/(c) ≅ (A/c)[x]: constants keep their status
                    base.is_prime(&f[0])
                } else {
                    Ok(Decision::Unsupported)
                }
            }
            (Kind::Dest { base, q, .. }, Value::Dest(f)) => destroy::dest_is_prime(&base, q, f),
            (Kind::Laurent { stages }, Value::Laurent(l)) => Ok(laurent::integer_prime(stages, l)),
            (Kind::Fringe { base, .. }, Value::Fringe(c)) => {
                Ok(Decision::from_bool(fringe::fringe_is_prime(&base, c)?))
            }
            _ => Err(self.shape_error(a)),
        }
    }

    /// Splits `a` by repeatedly taking the least nonunit proper divisor.
    pub fn factor_irreducibles(&self, a: &Value) -> Result<Factorization> {
        if self.is_zero(a) {
            return Err(Error::ZeroArgument);
        }
        if self.is_unit(a)? {
            return Err(Error::UnitArgument);
        }
        if !self.has_divisor_function() {
            return Err(Error::Unsupported(format!(
                "{self} has no divisor function"
            )));
        }
        let mut factors = Vec::new();
        let mut stack = vec![a.clone()];
        while let Some(x) = stack.pop() {
            let units = self.units()?;
            let mut split = None;
            for d in self.divisors(&x)? {
                if units.contains(&d) || self.are_associates(&x, &d)? {
                    continue;
                }
                split = Some(d);
                break;
            }
            match split {
                None => factors.push(x),
                Some(d) => {
                    let c = self.div_exact(&x, &d)?.ok_or(Error::NotDivisible)?;
                    stack.push(c);
                    stack.push(d);
                }
            }
        }
        let prod = self.product(&factors)?;
        let unit = self.div_exact(a, &prod)?.ok_or(Error::NotDivisible)?;
        Ok(Factorization { unit, factors })
    }

    /// Divisor set rebuilt from an irreducible factorization, as the set of
    /// all `u·p₁^l₁⋯p_m^l_m`. Only for flagged UFDs.
    pub fn divisors_from_factorization(&self, a: &Value) -> Result<Vec<Value>> {
        if !self.is_ufd() {
            return Err(Error::NotUfd(self.to_string()));
        }
        if self.is_zero(a) {
            return Err(Error::ZeroArgument);
        }
        let units = self.units()?;
        let factors = if units.contains(a) {
            Vec::new()
        } else {
            crate::oracle::ufd_factor(self, a)?
        };
        // group into associate classes with multiplicities
        let mut classes: Vec<(Value, u32)> = Vec::new();
        'outer: for f in factors {
            for (p, k) in classes.iter_mut() {
                if self.are_associates(p, &f)? {
                    *k += 1;
                    continue 'outer;
                }
            }
            classes.push((f, 1));
        }
        let mut out = units.clone();
        for (p, k) in &classes {
            let mut next = Vec::new();
            for d in &out {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..*k {
                    acc = self.mul(&acc, p)?;
                    next.push(acc.clone());
                }
            }
            out = next;
        }
        self.sort_dedup(&mut out);
        Ok(out)
    }

    /// Constant-term view: the base element of a degree-0 polynomial-like
    /// value, `None` otherwise.
    pub fn constant_part(&self, a: &Value) -> Option<Value> {
        match (self.kind(), a) {
            (Kind::Poly { base, .. }, Value::Poly(c)) | (Kind::Dest { base, .. }, Value::Dest(c)) => {
                match c.len() {
                    0 => Some(base.zero()),
                    1 => Some(c[0].clone()),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Degree in the outermost variable, for polynomial-like rings.
    pub fn degree(&self, a: &Value) -> Option<usize> {
        match a {
            Value::Poly(c) | Value::Dest(c) => Some(c.len().saturating_sub(1)),
            Value::Fringe(c) => Some(c.len().saturating_sub(1)),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[String]| v.join(", ");
        match &self.node.desc {
            Descriptor::Int => write!(f, "Z"),
            Descriptor::Quad { d } => write!(f, "Quad({d})"),
            Descriptor::Poly { base, var } => write!(f, "Poly({}, {var})", self.child(base)),
            Descriptor::Destroy { base, q, var } => {
                let b = self.child(base);
                let qs = b.format(q).map_err(|_| fmt::Error)?;
                write!(f, "Destroy({b}, {qs}, {var})")
            }
            Descriptor::Staged { schedule, vars, .. } => {
                let p: Vec<String> = schedule.entries().iter().map(|i| i.to_string()).collect();
                write!(f, "Staged(primes=[{}], vars=[{}])", list(&p), list(vars))
            }
            Descriptor::IrredDestroy { base, p, var, .. } => {
                write!(f, "IrredDestroy({}, {p}, {var})", self.child(base))
            }
            Descriptor::StagedIrred { schedule, vars, .. } => {
                let p: Vec<String> = schedule.entries().iter().map(|i| i.to_string()).collect();
                write!(f, "StagedIrred(primes=[{}], vars=[{}])", list(&p), list(vars))
            }
            Descriptor::Fringe { base, var } => write!(f, "Fringe({}, {var})", self.child(base)),
        }
    }
}

/// A ring-tagged element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub ring: Ring,
    pub value: Value,
}

impl Element {
    pub fn new(ring: &Ring, value: Value) -> Result<Element> {
        if !ring.owns(&value) {
            return Err(ring.shape_error(&value));
        }
        Ok(Element {
            ring: ring.clone(),
            value,
        })
    }

    fn check(&self, r: &Ring) -> Result<()> {
        if &self.ring == r {
            Ok(())
        } else {
            Err(Error::TagMismatch {
                expected: r.to_string(),
                found: self.ring.to_string(),
            })
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.ring.format(&self.value).map_err(|_| fmt::Error)?;
        f.write_str(&s)
    }
}

/// `D(a)` together with the element it divides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    pub target: Element,
    pub members: Vec<Element>,
}

fn tag(r: &Ring, v: Value) -> Element {
    Element {
        ring: r.clone(),
        value: v,
    }
}

pub fn ring_add(r: &Ring, a: &Element, b: &Element) -> Result<Element> {
    a.check(r)?;
    b.check(r)?;
    Ok(tag(r, r.add(&a.value, &b.value)?))
}

pub fn ring_mul(r: &Ring, a: &Element, b: &Element) -> Result<Element> {
    a.check(r)?;
    b.check(r)?;
    Ok(tag(r, r.mul(&a.value, &b.value)?))
}

pub fn divisors(r: &Ring, a: &Element) -> Result<DivisorSet> {
    a.check(r)?;
    let members = r
        .divisors(&a.value)?
        .into_iter()
        .map(|v| tag(r, v))
        .collect();
    Ok(DivisorSet {
        target: a.clone(),
        members,
    })
}

pub fn units(r: &Ring) -> Result<Vec<Element>> {
    Ok(r.units()?.into_iter().map(|v| tag(r, v)).collect())
}

pub fn is_unit(r: &Ring, a: &Element) -> Result<bool> {
    a.check(r)?;
    r.is_unit(&a.value)
}

pub fn are_associates(r: &Ring, a: &Element, b: &Element) -> Result<bool> {
    a.check(r)?;
    b.check(r)?;
    r.are_associates(&a.value, &b.value)
}

pub fn divides(r: &Ring, a: &Element, b: &Element) -> Result<Option<Element>> {
    a.check(r)?;
    b.check(r)?;
    Ok(r.divides(&a.value, &b.value)?.map(|v| tag(r, v)))
}

pub fn is_irreducible(r: &Ring, a: &Element) -> Result<Decision> {
    a.check(r)?;
    r.is_irreducible(&a.value)
}

pub fn is_prime(r: &Ring, a: &Element) -> Result<Decision> {
    a.check(r)?;
    r.is_prime(&a.value)
}

pub fn factor_irreducibles(r: &Ring, a: &Element) -> Result<Factorization> {
    a.check(r)?;
    r.factor_irreducibles(&a.value)
}

pub fn divisors_from_factorization(r: &Ring, a: &Element) -> Result<DivisorSet> {
    a.check(r)?;
    let members = r
        .divisors_from_factorization(&a.value)?
        .into_iter()
        .map(|v| tag(r, v))
        .collect();
    Ok(DivisorSet {
        target: a.clone(),
        members,
    })
}

pub fn canonical_order(a: &Element, b: &Element) -> Result<Ordering> {
    b.check(&a.ring)?;
    Ok(a.ring.cmp(&a.value, &b.value))
}
