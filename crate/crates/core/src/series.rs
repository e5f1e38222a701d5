//! Truncated formal power series with integer coefficients.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// `c_0 + c_1 t + ... + c_D t^D`, exact through degree `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries<T = i64> {
    coeffs: Vec<T>,
}

pub type Series = TruncatedSeries<i64>;

impl<T: Clone + Signed> TruncatedSeries<T> {
    /// Coefficients `c_0..=c_D`. An empty list is rejected: a series needs a bound.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return input("a truncated series needs at least the constant term");
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn one(bound: usize) -> Self {
        let mut coeffs = vec![T::zero(); bound + 1];
        coeffs[0] = T::one();
        TruncatedSeries { coeffs }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Option<&T> {
        self.coeffs.get(j)
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(bound + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    /// Product, truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.bound().min(other.bound());
        let coeffs = (0..=d)
            .map(|k| (0..=k).fold(T::zero(), |acc, i| acc + self.coeffs[i].clone() * other.coeffs[k - i].clone()))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.bound().min(other.bound());
        TruncatedSeries { coeffs: (0..=d).map(|k| self.coeffs[k].clone() - other.coeffs[k].clone()).collect() }
    }

    /// Multiplicative inverse through the same bound. Requires `c_0 = ±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if !(c0 == T::one() || c0 == -T::one()) {
            return input("series inverse needs a unit constant term");
        }
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(c0.clone());
        for k in 1..self.coeffs.len() {
            let s = (1..=k).fold(T::zero(), |acc, i| acc + self.coeffs[i].clone() * out[k - i].clone());
            // c0 * b_k = -s and c0 = c0^{-1}
            out.push(-(s * c0.clone()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `s(-t)`.
    pub fn alternate(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }
}

impl Series {
    /// Hilbert series `1/(1-t)^n` of a polynomial ring in `n` variables.
    pub fn polynomial_ring(n: usize, bound: usize) -> Self {
        let coeffs = (0..=bound)
            .map(|d| if n == 0 { i64::from(d == 0) } else { choose(n + d - 1, d) })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// `C(n, k)` for small arguments.
pub fn choose(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i as i128 + 1);
    }
    r as i64
}

impl<T: fmt::Display + Zero + Signed + Clone> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let one = a.is_one();
            match k {
                0 => write!(f, "{a}")?,
                1 if one => write!(f, "t")?,
                1 => write!(f, "{a}t")?,
                _ if one => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_quotient_series() {
        let h = Series::new(vec![1, 5, 15, 33, 60, 97]).unwrap();
        assert_eq!(h.inverse().unwrap().coeffs(), &[1, -5, 10, -8, -5, 18]);
        let hb = Series::new(vec![1, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(&hb.inverse().unwrap().coeffs()[..5], &[1, -2, 2, -1, -1]);
        assert_eq!(Series::one(4).inverse().unwrap(), Series::one(4));
    }

    #[test]
    fn inverse_round_trip() {
        let h = Series::new(vec![1, 3, -2, 7, 0, 4, 1]).unwrap();
        assert_eq!(h.mul(&h.inverse().unwrap()), Series::one(6));
        assert!(Series::new(vec![2, 1]).unwrap().inverse().is_err());
    }

    #[test]
    fn polynomial_ring_series() {
        assert_eq!(Series::polynomial_ring(5, 5).coeffs(), &[1, 5, 15, 35, 70, 126]);
        assert_eq!(Series::polynomial_ring(1, 3).coeffs(), &[1, 1, 1, 1]);
        assert_eq!(Series::polynomial_ring(0, 2).coeffs(), &[1, 0, 0]);
        // the inverse is (1 - t)^n
        let inv = Series::polynomial_ring(3, 5).inverse().unwrap();
        assert_eq!(inv.coeffs(), &[1, -3, 3, -1, 0, 0]);
    }

    #[test]
    fn display() {
        let h = Series::new(vec![1, -5, 0, 1]).unwrap();
        assert_eq!(h.to_string(), "1 - 5t + t^3 + O(t^4)");
    }
}
