//! Exact-rational sufficient conditions for global minimality.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Partition;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoComponentClass {
    Strict,
    Equality,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoComponentCheck {
    pub class: TwoComponentClass,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
}

/// `ℓ − 2ℓ²/n` against 1 for `K_{n−ℓ} ∪ K_ℓ`, with `ℓ` the smaller side.
pub fn check_two_component_condition(n: usize, l: usize) -> Result<TwoComponentCheck> {
    if l == 0 || 2 * l > n {
        return Err(Error::Precondition(format!("need 1 <= l <= n/2, got n = {n}, l = {l}")));
    }
    let (n, l) = (n as i64, l as i64);
    let value = Rational::from_integer(l) - Rational::new(2 * l * l, n);
    let one = Rational::from_integer(1);
    let class = if value < one {
        TwoComponentClass::Strict
    } else if value == one {
        TwoComponentClass::Equality
    } else {
        TwoComponentClass::Violated
    };
    Ok(TwoComponentCheck { class, value })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiComponentCheck {
    pub satisfied: bool,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
}

/// `n₁ − Σ n_i² / n`, satisfied when below 1. Always nonnegative.
pub fn check_multi_component_condition(p: &Partition) -> MultiComponentCheck {
    let n = p.n() as i64;
    let sq: i64 = p.sizes().iter().map(|&s| (s * s) as i64).sum();
    let value = Rational::from_integer(p.largest() as i64) - Rational::new(sq, n);
    debug_assert!(value >= Rational::from_integer(0));
    MultiComponentCheck { satisfied: value < Rational::from_integer(1), value }
}

/// All `(n, ℓ)` with `3 ≤ n ≤ n_max`, `1 ≤ ℓ ≤ n/2` and `2ℓ² − nℓ + n = 0`.
pub fn discriminant_equality_scan(n_max: usize) -> Result<Vec<(usize, usize)>> {
    if n_max < 9 {
        return Err(Error::Precondition(format!("scan needs n_max >= 9, got {n_max}")));
    }
    let mut roots = Vec::new();
    for n in 3..=n_max {
        for l in 1..=n / 2 {
            let (n_, l_) = (n as i64, l as i64);
            if 2 * l_ * l_ - n_ * l_ + n_ == 0 {
                roots.push((n, l));
            }
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn two_component_examples() {
        let c = check_two_component_condition(9, 3).unwrap();
        assert_eq!((c.class, c.value), (TwoComponentClass::Equality, r(1, 1)));
        for n in (2..40).step_by(2) {
            let c = check_two_component_condition(n, n / 2).unwrap();
            assert_eq!((c.class, c.value), (TwoComponentClass::Strict, r(0, 1)));
        }
        let c = check_two_component_condition(24, 6).unwrap();
        assert_eq!((c.class, c.value), (TwoComponentClass::Violated, r(3, 1)));
        assert!(check_two_component_condition(9, 5).is_err());
        assert!(check_two_component_condition(9, 0).is_err());
    }

    #[test]
    fn multi_component_examples() {
        let c = check_multi_component_condition(&Partition::new(vec![5, 5, 5]).unwrap());
        assert_eq!((c.satisfied, c.value), (true, r(0, 1)));
        let c = check_multi_component_condition(&Partition::new(vec![6, 3]).unwrap());
        assert_eq!((c.satisfied, c.value), (false, r(1, 1)));
        let c = check_multi_component_condition(&Partition::new(vec![10, 10, 10, 2]).unwrap());
        assert_eq!((c.satisfied, c.value), (true, r(1, 2)));
        let c = check_multi_component_condition(&Partition::padded(vec![4, 4], 9).unwrap());
        assert_eq!((c.satisfied, c.value), (true, r(1, 3)));
    }

    #[test]
    fn multi_component_value_nonnegative_and_float_consistent() {
        for n in 1..=16 {
            for p in Partition::all_of(n) {
                let c = check_multi_component_condition(&p);
                assert!(c.value >= r(0, 1), "{p:?}");
                let sq: usize = p.sizes().iter().map(|s| s * s).sum();
                let f = p.largest() as f64 - sq as f64 / n as f64;
                assert!((f - rational::to_f64(&c.value)).abs() < 1e-12);
                if (f - 1.0).abs() > 1e-9 {
                    assert_eq!(c.satisfied, f < 1.0);
                }
            }
        }
    }

    #[test]
    fn discriminant_scan() {
        assert_eq!(discriminant_equality_scan(100).unwrap(), [(8, 2), (9, 3)]);
        assert_eq!(discriminant_equality_scan(9).unwrap(), [(8, 2), (9, 3)]);
        assert!(discriminant_equality_scan(8).is_err());
        // the scan roots are exactly the equality cases of the two-component check
        for n in 3..=100 {
            for l in 1..=n / 2 {
                let eq = check_two_component_condition(n, l).unwrap().class == TwoComponentClass::Equality;
                assert_eq!(eq, [(8, 2), (9, 3)].contains(&(n, l)), "({n},{l})");
            }
        }
    }
}
