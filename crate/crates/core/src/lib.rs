//! Exact arithmetic in rings with a computable divisor function: the
//! integers, imaginary quadratic orders, polynomial extensions, fields of
//! fractions, and towers built by destroying primes or irreducibles.

pub mod error;
pub mod value;
pub mod integers;
pub mod quadratic;
pub mod ring;
pub mod poly;
pub mod fractions;
pub mod destroy;
pub mod laurent;
mod ambient;
pub mod fringe;
pub mod oracle;
mod print;
pub mod syntax;
pub mod query;

pub use error::{Error, Result};
pub use print::format_fraction;
pub use query::{run_query, Outcome, Query};
pub use ring::{
    Decision, Descriptor, DivisorSet, Element, EnumerationSchedule, Factorization, Limits, Mode,
    Ring, Stage,
};
pub use syntax::{parse_descriptor, parse_element};
pub use value::{Fraction, Laurent, QuadInt, Value};
