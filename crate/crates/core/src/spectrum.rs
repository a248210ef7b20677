//! Prime spectra of monoid charts and the unit groups of their stalks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;
use crate::error::SpectrumError;
use crate::monoid::{FiniteMonoid, SplitMonoid};

pub const DEFAULT_MAX_FINITE_SIZE: usize = 16;
pub const DEFAULT_MAX_CONE_RANK: u32 = 20;

/// Enumeration bounds for spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumLimits {
    pub max_finite_size: usize,
    pub max_cone_rank: u32,
}

impl Default for SpectrumLimits {
    fn default() -> Self {
        Self {
            max_finite_size: DEFAULT_MAX_FINITE_SIZE,
            max_cone_rank: DEFAULT_MAX_CONE_RANK,
        }
    }
}

/// An affine chart: the coordinate monoid of `spec(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonoidChart {
    Finite(FiniteMonoid),
    Split(SplitMonoid),
}

impl fmt::Display for MonoidChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidChart::Finite(m) => write!(f, "finite({} elements)", m.size()),
            MonoidChart::Split(s) => write!(f, "{s}"),
        }
    }
}

/// A prime ideal of a chart.
///
/// Finite charts store the ideal as a bitset over element ids. Split charts
/// store the set of cone coordinates whose positive powers lie in the ideal,
/// plus whether the adjoined zero is in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PrimeIdeal {
    Finite(u32),
    Split { cone: u32, zero: bool },
}

impl PrimeIdeal {
    /// The empty ideal (generic point).
    pub fn generic_finite() -> Self {
        PrimeIdeal::Finite(0)
    }

    fn sort_key(&self) -> (u32, u32, u32) {
        match *self {
            PrimeIdeal::Finite(bits) => (bits.count_ones(), 0, bits),
            PrimeIdeal::Split { cone, zero } => (cone.count_ones() + u32::from(zero), u32::from(zero), cone),
        }
    }

    /// Canonical ordering: by size, then by encoding.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }

    pub fn is_generic(&self) -> bool {
        match *self {
            PrimeIdeal::Finite(bits) => bits == 0,
            PrimeIdeal::Split { cone, zero } => cone == 0 && !zero,
        }
    }
}

impl MonoidChart {
    pub fn spectrum(&self) -> Result<Vec<PrimeIdeal>, SpectrumError> {
        self.spectrum_with(&SpectrumLimits::default())
    }

    pub fn spectrum_with(&self, limits: &SpectrumLimits) -> Result<Vec<PrimeIdeal>, SpectrumError> {
        match self {
            MonoidChart::Finite(m) => spectrum_finite_bounded(m, limits.max_finite_size),
            MonoidChart::Split(s) => spectrum_split_bounded(s, limits.max_cone_rank),
        }
    }

    pub fn stalk_units(&self, p: &PrimeIdeal) -> Result<FgAbelianGroup, SpectrumError> {
        stalk_units(self, p)
    }

    /// Human-readable prime in the `p{...}` point syntax.
    pub fn describe_prime(&self, p: &PrimeIdeal) -> String {
        let items: Vec<String> = match (self, *p) {
            (MonoidChart::Finite(m), PrimeIdeal::Finite(bits)) => m
                .elements()
                .filter(|&x| bits >> x & 1 == 1)
                .map(|x| element_token(m.name(x)))
                .collect(),
            (MonoidChart::Split(_), PrimeIdeal::Split { cone, zero }) => {
                let mut v: Vec<String> = zero.then(|| "zero".to_string()).into_iter().collect();
                v.extend((0..32).filter(|j| cone >> j & 1 == 1).map(|j| format!("x{j}")));
                v
            }
            _ => vec!["?".into()],
        };
        format!("p{{{}}}", items.join(","))
    }
}

fn element_token(name: &str) -> String {
    let ident = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "zero";
    if ident {
        name.to_string()
    } else {
        format!("{name:?}")
    }
}

fn complement_is_face(m: &FiniteMonoid, ideal: u32) -> bool {
    let n = m.size();
    let in_face = |x: usize| ideal >> x & 1 == 0;
    if !in_face(m.identity()) {
        return false;
    }
    for a in 0..n {
        for b in a..n {
            // S is product-closed and divisor-closed: ab in S iff a, b in S
            if (in_face(a) && in_face(b)) != in_face(m.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// All prime ideals of a finite monoid, sorted by size then bitset value.
pub fn spectrum_finite(m: &FiniteMonoid) -> Result<Vec<PrimeIdeal>, SpectrumError> {
    spectrum_finite_bounded(m, DEFAULT_MAX_FINITE_SIZE)
}

pub fn spectrum_finite_bounded(m: &FiniteMonoid, bound: usize) -> Result<Vec<PrimeIdeal>, SpectrumError> {
    let n = m.size();
    if n > bound || n > 31 {
        return Err(SpectrumError::SizeExceeded {
            size: n,
            bound: bound.min(31),
        });
    }
    let mut primes: Vec<PrimeIdeal> = (0u32..1 << n)
        .filter(|&bits| complement_is_face(m, bits))
        .map(PrimeIdeal::Finite)
        .collect();
    primes.sort_by(PrimeIdeal::canonical_cmp);
    Ok(primes)
}

/// All prime ideals of a split monoid, canonically ordered.
pub fn spectrum_split(s: &SplitMonoid) -> Result<Vec<PrimeIdeal>, SpectrumError> {
    spectrum_split_bounded(s, DEFAULT_MAX_CONE_RANK)
}

pub fn spectrum_split_bounded(s: &SplitMonoid, bound: u32) -> Result<Vec<PrimeIdeal>, SpectrumError> {
    let b = s.cone_rank();
    if b > bound || b > 31 {
        return Err(SpectrumError::SizeExceeded {
            size: b as usize,
            bound: bound.min(31) as usize,
        });
    }
    let mut primes = Vec::new();
    if s.has_zero() {
        primes.push(PrimeIdeal::Split { cone: 0, zero: false });
    }
    for cone in 0u32..1 << b {
        primes.push(PrimeIdeal::Split {
            cone,
            zero: s.has_zero(),
        });
    }
    primes.sort_by(PrimeIdeal::canonical_cmp);
    Ok(primes)
}

/// Unit group of the stalk at `p`, i.e. `Quot(S_p)` for the face `S_p = A \ p`.
pub fn stalk_units(chart: &MonoidChart, p: &PrimeIdeal) -> Result<FgAbelianGroup, SpectrumError> {
    match (chart, *p) {
        (MonoidChart::Finite(m), PrimeIdeal::Finite(bits)) => {
            if m.size() > 31 || bits >> m.size() != 0 || !complement_is_face(m, bits) {
                return Err(SpectrumError::NotPrime(chart.describe_prime(p)));
            }
            let face: Vec<usize> = m.elements().filter(|&x| bits >> x & 1 == 0).collect();
            Ok(m.completion_of_submonoid(&face))
        }
        (MonoidChart::Split(s), PrimeIdeal::Split { cone, zero }) => {
            let b = s.cone_rank();
            let in_range = b >= 32 || cone >> b == 0;
            let well_formed = in_range && (s.has_zero() && (zero || cone == 0) || !s.has_zero() && !zero);
            if !well_formed {
                return Err(SpectrumError::NotPrime(chart.describe_prime(p)));
            }
            if s.has_zero() && !zero {
                return Ok(FgAbelianGroup::trivial());
            }
            let rank = s.free_rank() + b - cone.count_ones();
            Ok(FgAbelianGroup::free(rank).product(&s.torsion_group()))
        }
        _ => Err(SpectrumError::NotPrime(format!("{p:?} does not match the chart kind"))),
    }
}
