//! Exact rationals for degree averages and the sufficient-condition values.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

pub type Rational = Ratio<i64>;

/// `⌈r⌉` for an exact rational.
pub fn ceil(r: &Rational) -> i64 {
    r.ceil().to_integer()
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Renders `p/q` in lowest terms, or `p` when the denominator is one.
pub fn display(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    display(r).serialize(s)
}

pub(crate) fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    r.as_ref().map(display).serialize(s)
}
