//! Zeta-polynomials, point counts and the zeta functions built from them.
//!
//! Every morphism `spec D_q -> X` sends the closed point to some point `p`
//! of `X` and is then a homomorphism from the stalk units at `p` to the
//! cyclic group `C_(q-1)`. Counting therefore reduces to
//! `sum_p #Hom(O_p^x, C_(q-1))`, and for `gcd(q - 1, e) = 1` each term is
//! `(q - 1)^rank`, giving `N(x) = sum_p (x - 1)^(rank p)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, gcd, is_prime, prime_powers_up_to};
use crate::error::{SchemeError, ZetaError};
use crate::scheme::{glue, points_exponent, F1Scheme, GlobalPoint};
use crate::series::RationalSeries;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaPolynomial {
    /// `a_0 .. a_n` with `N(x) = sum a_i x^i`; trailing zeros trimmed.
    coeffs_monomial: Vec<i64>,
    /// One rank per global point: `N(x) = sum (x - 1)^r`. Sorted ascending.
    ranks: Vec<u32>,
}

impl ZetaPolynomial {
    pub fn from_ranks(mut ranks: Vec<u32>) -> Self {
        ranks.sort_unstable();
        let degree = ranks.last().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![0i128; degree + 1];
        for &r in &ranks {
            for k in 0..=r {
                let sign = if (r - k) % 2 == 0 { 1 } else { -1 };
                coeffs[k as usize] += sign * binomial(r, k).expect("binomial fits in i128");
            }
        }
        let mut coeffs_monomial: Vec<i64> = coeffs
            .into_iter()
            .map(|c| i64::try_from(c).expect("zeta coefficient fits in i64"))
            .collect();
        while coeffs_monomial.len() > 1 && *coeffs_monomial.last().unwrap() == 0 {
            coeffs_monomial.pop();
        }
        Self { coeffs_monomial, ranks }
    }

    pub fn coeffs_monomial(&self) -> &[i64] {
        &self.coeffs_monomial
    }

    /// `b_0 .. b_n` with `N(x) = sum b_r (x - 1)^r`: points of each rank.
    pub fn coeffs_shifted(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.ranks.last().map_or(1, |&r| r as usize + 1)];
        for &r in &self.ranks {
            out[r as usize] += 1;
        }
        out
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs_monomial.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs_monomial.iter().all(|&c| c == 0) {
            None
        } else {
            Some(self.coeffs_monomial.len() - 1)
        }
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs_monomial
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * x + BigInt::from(c))
    }

    pub fn evaluate_u64(&self, x: u64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// Expands the shifted form with exact integers, independently of the
    /// stored monomial coefficients.
    pub fn expand_shifted(&self) -> Vec<BigInt> {
        let degree = self.ranks.last().copied().unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); degree + 1];
        for &r in &self.ranks {
            // (x - 1)^r by repeated multiplication
            let mut poly = vec![BigInt::one()];
            for _ in 0..r {
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c;
                }
                poly = next;
            }
            for (i, c) in poly.into_iter().enumerate() {
                out[i] += c;
            }
        }
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        out
    }

    /// `N(1)`: the number of rank-zero points.
    pub fn euler_characteristic(&self) -> i64 {
        self.coeffs_monomial.iter().sum()
    }

    /// `sum (x-1)^r` grouped by rank, e.g. `3 + 3(x-1) + (x-1)^2`.
    pub fn shifted_string(&self) -> String {
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for &r in &self.ranks {
            match counts.last_mut() {
                Some((last, c)) if *last == r => *c += 1,
                _ => counts.push((r, 1)),
            }
        }
        if counts.is_empty() {
            return "0".into();
        }
        counts
            .iter()
            .map(|&(r, c)| {
                let base = match r {
                    0 => String::new(),
                    1 => "(x-1)".into(),
                    _ => format!("(x-1)^{r}"),
                };
                match (r, c) {
                    (0, c) => c.to_string(),
                    (_, 1) => base,
                    (_, c) => format!("{c}{base}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ZetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs_monomial.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || mag != 1 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn zeta_polynomial(x: &F1Scheme) -> Result<ZetaPolynomial, SchemeError> {
    Ok(zeta_from_points(&glue(x)?))
}

pub fn zeta_from_points(points: &[GlobalPoint]) -> ZetaPolynomial {
    ZetaPolynomial::from_ranks(points.iter().map(GlobalPoint::rank).collect())
}

/// `#Hom(spec D_q, X)` for any `q >= 2`; equals `#X(F_q)` for prime powers.
pub fn exact_count(x: &F1Scheme, q: u64) -> Result<BigUint, SchemeError> {
    Ok(count_from_points(&glue(x)?, q))
}

pub fn count_from_points(points: &[GlobalPoint], q: u64) -> BigUint {
    assert!(q >= 2, "counts are defined for q >= 2");
    points.iter().map(|p| p.stalk_units.hom_count_cyclic(q - 1)).sum()
}

/// Prime powers `q <= bound` with `gcd(q - 1, e) = 1`, plus the smallest
/// `2^n` produced by the construction `2^n = 2 mod m` (`m` the odd part of `e`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeQs {
    pub qs: Vec<u64>,
    pub least_power_of_two: u64,
}

pub fn coprime_qs(e: u64, bound: u64) -> CoprimeQs {
    assert!(e >= 1, "exponent must be positive");
    let qs = prime_powers_up_to(bound)
        .into_iter()
        .filter(|&q| gcd(q - 1, e) == 1)
        .collect();
    let n = power_of_two_exponents(e).next().expect("infinite family");
    CoprimeQs {
        qs,
        least_power_of_two: 1u64 << n,
    }
}

/// The exponents `n` with `2^n = 2 (mod m)`, `m` the odd part of `e`;
/// for each, `gcd(2^n - 1, e) = 1`. The family is infinite: it is
/// `n_0 + k * ord_m(2)`.
pub fn power_of_two_exponents(e: u64) -> impl Iterator<Item = u32> {
    let mut m = e;
    while m.is_multiple_of(2) {
        m /= 2;
    }
    let first = (1u32..)
        .find(|&n| m == 1 || pow_mod(2, n as u64, m) == 2 % m)
        .expect("2 is a unit modulo an odd number");
    let period = if m == 1 {
        1
    } else {
        (1u32..).find(|&k| pow_mod(2, k as u64, m) == 1).unwrap()
    };
    (0u32..).map(move |k| first + k * period)
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub fn euler_char(x: &F1Scheme) -> Result<i64, SchemeError> {
    Ok(zeta_polynomial(x)?.euler_characteristic())
}

/// `prod (s - k)^(a_k)` over the nonzero coefficients `a_k` of `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaFactored {
    pub factors: Vec<(u32, i64)>,
}

impl ZetaFactored {
    pub fn from_polynomial(n: &ZetaPolynomial) -> Self {
        Self {
            factors: n
                .coeffs_monomial()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(k, &a)| (k as u32, a))
                .collect(),
        }
    }

    pub fn evaluate(&self, s: f64) -> f64 {
        self.factors
            .iter()
            .map(|&(k, a)| (s - k as f64).powi(a as i32))
            .product()
    }
}

impl fmt::Display for ZetaFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for &(k, a) in &self.factors {
            if k == 0 {
                write!(f, "s")?;
            } else {
                write!(f, "(s-{k})")?;
            }
            if a != 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

pub fn zeta_factored(x: &F1Scheme) -> Result<ZetaFactored, SchemeError> {
    Ok(ZetaFactored::from_polynomial(&zeta_polynomial(x)?))
}

/// Formal Betti numbers `[a_0, 0, a_1, 0, ..., a_n]`. Meaningful as Betti
/// numbers only when the ascended scheme is smooth and projective, which is
/// not checked.
pub fn betti(x: &F1Scheme) -> Result<Vec<i64>, SchemeError> {
    Ok(betti_from_polynomial(&zeta_polynomial(x)?))
}

pub fn betti_from_polynomial(n: &ZetaPolynomial) -> Vec<i64> {
    let a = n.coeffs_monomial();
    let mut out = Vec::with_capacity(2 * a.len());
    for (i, &c) in a.iter().enumerate() {
        if i > 0 {
            out.push(0);
        }
        out.push(c);
    }
    out
}

/// `Z(p, T) = prod_k (1 - p^k T)^(-a_k)`, stored as `(k, a_k)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalZeta {
    pub p: u64,
    pub factors: Vec<(u32, i64)>,
}

impl LocalZeta {
    /// Power series expansion through `T^order`.
    pub fn expand(&self, order: usize) -> RationalSeries {
        self.factors.iter().fold(RationalSeries::one(order), |acc, &(k, a)| {
            let c = BigInt::from(self.p).pow(k);
            acc.mul_truncated(&RationalSeries::binomial_power(&c, -a, order))
        })
    }
}

impl fmt::Display for LocalZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for &(k, a) in &self.factors {
            match k {
                0 => write!(f, "(1-T)")?,
                _ => write!(f, "(1-{}T)", BigInt::from(self.p).pow(k))?,
            }
            if a != -1 {
                write!(f, "^{}", -a)?;
            }
        }
        Ok(())
    }
}

pub fn weil_local_zeta(x: &F1Scheme, p: u64) -> Result<LocalZeta, ZetaError> {
    if !is_prime(p) {
        return Err(ZetaError::InvalidPrime(p));
    }
    let n = zeta_polynomial(x)?;
    Ok(LocalZeta {
        p,
        factors: ZetaFactored::from_polynomial(&n).factors,
    })
}

/// `exp(sum_{n=1}^{M} T^n / n * #X(F_{p^n}))` truncated at order `M`,
/// from exact counts.
pub fn weil_series(x: &F1Scheme, p: u64, order: usize) -> Result<RationalSeries, ZetaError> {
    if !is_prime(p) {
        return Err(ZetaError::InvalidPrime(p));
    }
    let points = glue(x)?;
    let mut log = vec![num_rational::BigRational::zero(); order + 1];
    let mut q = 1u64;
    for (n, slot) in log.iter_mut().enumerate().skip(1) {
        q = q
            .checked_mul(p)
            .ok_or_else(|| ZetaError::InvalidArgument(format!("{p}^{n} overflows")))?;
        let count = BigInt::from(count_from_points(&points, q));
        *slot = num_rational::BigRational::new(count, BigInt::from(n));
    }
    Ok(RationalSeries::new(log).exp())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeilCheck {
    Pass,
    /// Coefficient `index` differs.
    Fail {
        index: usize,
    },
    /// `gcd(p^n - 1, e) != 1` at this `n`, so counts need not follow `N`.
    Skipped {
        n: usize,
    },
}

/// Compares [`weil_series`] with the expansion of [`weil_local_zeta`].
pub fn weil_consistency(x: &F1Scheme, p: u64, order: usize) -> Result<WeilCheck, ZetaError> {
    if !is_prime(p) {
        return Err(ZetaError::InvalidPrime(p));
    }
    let e = points_exponent(&glue(x)?);
    let mut q = 1u64;
    for n in 1..=order {
        q *= p;
        if gcd(q - 1, e) != 1 {
            return Ok(WeilCheck::Skipped { n });
        }
    }
    let series = weil_series(x, p, order)?;
    let expected = weil_local_zeta(x, p)?.expand(order);
    Ok(match (0..=order).find(|&i| series.coeff(i) != expected.coeff(i)) {
        None => WeilCheck::Pass,
        Some(index) => WeilCheck::Fail { index },
    })
}

pub const DEFAULT_SOULE_EPS: f64 = 1e-4;

/// Numerical `lim_{p -> 1} Z(p, p^-s)^-1 / (p - 1)^N(1)`.
///
/// Evaluated at `p = 1 + eps` and `p = 1 + eps/2` with one Richardson step.
/// Each factor `(1 - p^(k-s)) / (p - 1)` is computed through `expm1` and
/// `ln_1p` so that cancellation near `p = 1` stays harmless.
pub fn soule_limit(x: &F1Scheme, s: f64, eps: f64) -> Result<f64, ZetaError> {
    if !(eps > 0.0 && eps <= 0.01) {
        return Err(ZetaError::InvalidArgument(format!("eps = {eps} outside (0, 0.01]")));
    }
    if !s.is_finite() {
        return Err(ZetaError::InvalidArgument(format!("s = {s}")));
    }
    let factored = zeta_factored(x)?;
    let at = |h: f64| -> f64 {
        let t = h.ln_1p();
        factored
            .factors
            .iter()
            .map(|&(k, a)| (-((k as f64 - s) * t).exp_m1() / h).powi(a as i32))
            .product()
    };
    let (coarse, fine) = (at(eps), at(eps / 2.0));
    let value = 2.0 * fine - coarse;
    if !coarse.is_finite() || !fine.is_finite() || !value.is_finite() {
        return Err(ZetaError::NumericDomain(format!("non-finite value at s = {s}")));
    }
    Ok(value)
}
