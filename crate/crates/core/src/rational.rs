//! Exact rationals and rational coordinate vectors.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact rational; always in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i128>;

/// A point with exact rational coordinates. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector {
    coords: Vec<Rational>,
}

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        QVector {
            coords: alloc::vec![Rational::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector {
            coords: coords
                .iter()
                .map(|&c| Rational::from_integer(c as i128))
                .collect(),
        }
    }

    /// `coords / denom`.
    pub fn from_scaled(coords: &[i64], denom: i64) -> Self {
        QVector {
            coords: coords
                .iter()
                .map(|&c| Rational::new(c as i128, denom as i128))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Coordinate `i` (1-based).
    pub fn coord(&self, i: usize) -> Rational {
        self.coords[i - 1]
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| *c >= Rational::zero())
    }

    /// Every coordinate is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero() || c.is_one())
    }

    /// Least common denominator `q` and the integer vector `z = q * self`.
    /// Requires nonnegative coordinates.
    pub fn common_denominator(&self) -> (u64, Vec<u64>) {
        let q = self.coords.iter().fold(1i128, |acc, c| acc.lcm(c.denom()));
        let z = self
            .coords
            .iter()
            .map(|c| (c.numer() * (q / c.denom())) as u64)
            .collect();
        (q as u64, z)
    }

    /// Each coordinate as `p/q` in lowest terms, or `p` for integers.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(ToString::to_string).collect()
    }

    /// Inverse of [`QVector::to_strings`].
    pub fn parse_strings<S: AsRef<str>>(items: &[S]) -> Option<QVector> {
        items
            .iter()
            .map(|s| s.as_ref().trim().parse::<Rational>().ok())
            .collect::<Option<Vec<_>>>()
            .map(QVector::new)
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
