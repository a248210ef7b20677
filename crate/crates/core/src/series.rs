//! Truncated power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `c_0 + c_1 T + ... + c_M T^M`, truncated at order `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Self { coeffs }
    }

    pub fn from_integers<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = BigRational::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// `exp(g)` for a series `g` with zero constant term, via
    /// `n f_n = sum_{k=1}^{n} k g_k f_{n-k}`.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let order = self.order();
        let mut f = vec![BigRational::zero(); order + 1];
        f[0] = BigRational::one();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += BigRational::from_integer(k.into()) * &self.coeffs[k] * &f[n - k];
            }
            f[n] = acc / BigRational::from_integer(n.into());
        }
        Self { coeffs: f }
    }

    /// `(1 - c T)^e` for any integer exponent, via the generalized binomial
    /// series `sum_n binom(e, n) (-c)^n T^n`.
    pub fn binomial_power(c: &BigInt, e: i64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        let neg_c = BigRational::from_integer(-c.clone());
        for n in 0..=order {
            coeffs.push(term.clone());
            let n = n as i64;
            term =
                term * BigRational::from_integer((e - n).into()) / BigRational::from_integer((n + 1).into()) * &neg_c;
        }
        Self { coeffs }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = n == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(T^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_geometric_log() {
        // log(1/(1-2T)) = sum 2^n T^n / n
        let g = RationalSeries::new(
            (0..=4)
                .map(|n| {
                    if n == 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::from(2).pow(n as u32), BigInt::from(n))
                    }
                })
                .collect(),
        );
        assert_eq!(g.exp(), RationalSeries::from_integers([1, 2, 4, 8, 16]));
    }

    #[test]
    fn binomial_powers() {
        let s = RationalSeries::binomial_power(&BigInt::from(1), -2, 4);
        assert_eq!(s, RationalSeries::from_integers([1, 2, 3, 4, 5]));
        let s = RationalSeries::binomial_power(&BigInt::from(3), 2, 3);
        assert_eq!(s, RationalSeries::from_integers([1, -6, 9, 0]));
        let s = RationalSeries::binomial_power(&BigInt::from(2), 0, 2);
        assert_eq!(s, RationalSeries::one(2));
    }

    #[test]
    fn display() {
        let s = RationalSeries::from_integers([1, 3, -7, 0]);
        assert_eq!(s.to_string(), "1 + 3T - 7T^2 + O(T^4)");
    }
}
