//! Exact rational numbers for density values.
//!
//! Subgraph densities, grads and orientation bounds are ratios of small
//! integers; comparing them through floating point would make maximizers
//! ambiguous. This type keeps every value as a reduced fraction with a
//! positive denominator and compares by cross multiplication in 128 bits.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A reduced fraction `numerator / denominator` with `denominator > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    numerator: i64,
    denominator: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Builds the reduced form of `numerator / denominator`.
    ///
    /// Panics if `denominator == 0`.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "rational with zero denominator");
        let sign = if denominator < 0 { -1 } else { 1 };
        let g = gcd(numerator, denominator).max(1);
        Rational {
            numerator: sign * numerator / g,
            denominator: sign * denominator / g,
        }
    }

    pub fn zero() -> Self {
        Rational { numerator: 0, denominator: 1 }
    }

    pub fn from_integer(value: i64) -> Self {
        Rational { numerator: value, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// Smallest integer `>=` the value.
    pub fn ceil(&self) -> i64 {
        self.numerator.div_euclid(self.denominator)
            + if self.numerator.rem_euclid(self.denominator) != 0 { 1 } else { 0 }
    }

    /// Largest integer `<=` the value.
    pub fn floor(&self) -> i64 {
        self.numerator.div_euclid(self.denominator)
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational::new(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational::new(
            self.numerator * other.denominator - other.numerator * self.denominator,
            self.denominator * other.denominator,
        )
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational::new(self.numerator * other.numerator, self.denominator * other.denominator)
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross multiplication preserves order
        let lhs = self.numerator as i128 * other.denominator as i128;
        let rhs = other.numerator as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}
