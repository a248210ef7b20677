//! Finitely generated abelian groups `Z^r x Z/d1 x ... x Z/dt` in invariant-factor form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd};
use crate::error::AlgebraError;
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    rank: u32,
    invariant_factors: Vec<u64>,
}

impl FgAbelianGroup {
    /// `factors` must be a divisibility chain of integers `>= 2`.
    pub fn new(rank: u32, factors: Vec<u64>) -> Result<Self, AlgebraError> {
        if factors.iter().any(|&d| d < 2) || factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(AlgebraError::NotDivisibilityChain(factors));
        }
        Ok(Self {
            rank,
            invariant_factors: factors,
        })
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: u32) -> Self {
        Self {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(0, &[n])
    }

    /// `Z^rank` times the product of cyclic groups of the given orders, normalized.
    /// Orders of 0 or 1 contribute nothing.
    pub fn from_cyclic_orders(rank: u32, orders: &[u64]) -> Self {
        let mut by_prime: HashMap<u64, Vec<u32>> = HashMap::new();
        for &n in orders.iter().filter(|&&n| n >= 2) {
            for (p, k) in factorize(n) {
                by_prime.entry(p).or_default().push(k);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, k) in exps.into_iter().enumerate() {
                factors[len - 1 - slot] *= p.pow(k);
            }
        }
        Self {
            rank,
            invariant_factors: factors,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Largest invariant factor, or 1 when torsion-free.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn torsion_order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn product(&self, other: &Self) -> Self {
        let orders: Vec<u64> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .copied()
            .collect();
        Self::from_cyclic_orders(self.rank + other.rank, &orders)
    }

    /// Number of homomorphisms into the cyclic group of order `m`:
    /// `m^rank * prod gcd(d_i, m)`.
    pub fn hom_count_cyclic(&self, m: u64) -> BigUint {
        assert!(m >= 1, "cyclic target must have order >= 1");
        let torsion: BigUint = self
            .invariant_factors
            .iter()
            .map(|&d| BigUint::from(gcd(d, m)))
            .product();
        BigUint::from(m).pow(self.rank) * torsion
    }
}

pub fn hom_count_cyclic(g: &FgAbelianGroup, m: u64) -> BigUint {
    g.hom_count_cyclic(m)
}

pub fn exponent(g: &FgAbelianGroup) -> u64 {
    g.exponent()
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" x "))
    }
}

impl FromStr for FgAbelianGroup {
    type Err = AlgebraError;

    /// Parses the [`Display`](fmt::Display) form, e.g. `Z^2 x Z/2 x Z/4` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::BadGroupDescriptor(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0u32;
        let mut orders = Vec::new();
        for part in s.split(" x ").map(str::trim) {
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r.parse::<u32>().map_err(|_| bad())?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                orders.push(d.parse::<u64>().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_cyclic_orders(rank, &orders))
    }
}

/// Abelian group presented by generators (columns) and relations (rows).
pub fn group_from_presentation(m: &IntMatrix) -> Result<FgAbelianGroup, AlgebraError> {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let rank = u32::try_from(m.cols() - nonzero).expect("rank fits in u32");
    let factors = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.to_u64().ok_or_else(|| AlgebraError::Overflow(d.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    FgAbelianGroup::new(rank, factors)
}

/// Invariant factors of a finite abelian group given by its elements and
/// multiplication.
///
/// Generators are picked greedily (largest order first, lowest id on ties);
/// each new generator `g` contributes the relation `g^m = w` where `m` is
/// the least power landing in the subgroup generated so far. The resulting
/// triangular relation matrix is reduced by SNF.
pub fn finite_group_invariants(
    elements: &[usize],
    identity: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> FgAbelianGroup {
    let order_of = |x: usize| {
        let (mut y, mut k) = (x, 1u64);
        while y != identity {
            y = mul(y, x);
            k += 1;
        }
        k
    };
    let mut by_order: Vec<(u64, usize)> = elements.iter().map(|&x| (order_of(x), x)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut reps: HashMap<usize, Vec<i64>> = HashMap::from([(identity, Vec::new())]);
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let mut gens = 0usize;

    while reps.len() < elements.len() {
        let &(_, g) = by_order
            .iter()
            .find(|(_, x)| !reps.contains_key(x))
            .expect("group closure smaller than element list");
        let slot = gens;
        gens += 1;
        for v in reps.values_mut() {
            v.push(0);
        }
        for row in &mut relations {
            row.push(0);
        }
        // Least m with g^m in the current subgroup.
        let (mut power, mut m) = (g, 1i64);
        while !reps.contains_key(&power) {
            power = mul(power, g);
            m += 1;
        }
        let mut row: Vec<i64> = reps[&power].iter().map(|c| -c).collect();
        row[slot] += m;
        relations.push(row);

        let base: Vec<(usize, Vec<i64>)> = reps.iter().map(|(k, v)| (*k, v.clone())).collect();
        let mut gj = identity;
        for j in 1..m {
            gj = mul(gj, g);
            for (h, v) in &base {
                let mut w = v.clone();
                w[slot] = j;
                reps.entry(mul(*h, gj)).or_insert(w);
            }
        }
    }

    let matrix = IntMatrix::with_shape(relations.len(), gens, &relations);
    group_from_presentation(&matrix).expect("finite group factors fit in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let g = FgAbelianGroup::from_cyclic_orders(1, &[4, 6, 1]);
        assert_eq!(g.invariant_factors(), &[2, 12]);
        assert_eq!(g.rank(), 1);
        assert_eq!(FgAbelianGroup::cyclic(1), FgAbelianGroup::trivial());
        assert_eq!(
            FgAbelianGroup::from_cyclic_orders(0, &[2, 3]),
            FgAbelianGroup::cyclic(6)
        );
        assert!(FgAbelianGroup::new(0, vec![4, 6]).is_err());
        assert!(FgAbelianGroup::new(0, vec![1]).is_err());
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(FgAbelianGroup::free(3).exponent(), 1);
        assert_eq!(FgAbelianGroup::new(0, vec![2, 4]).unwrap().exponent(), 4);
        assert_eq!(FgAbelianGroup::trivial().exponent(), 1);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(FgAbelianGroup::free(1).hom_count_cyclic(4), 4u32.into());
        assert_eq!(FgAbelianGroup::cyclic(2).hom_count_cyclic(4), 2u32.into());
        let g = FgAbelianGroup::new(1, vec![2]).unwrap();
        assert_eq!(g.hom_count_cyclic(4), 8u32.into());
    }

    #[test]
    fn presentations() {
        let g = group_from_presentation(&IntMatrix::zeros(0, 3)).unwrap();
        assert_eq!(g, FgAbelianGroup::free(3));
        let g = group_from_presentation(&IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert_eq!(g, FgAbelianGroup::cyclic(2));
        let g = group_from_presentation(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]])).unwrap();
        assert_eq!(g, FgAbelianGroup::new(1, vec![2]).unwrap());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "Z", "Z^2 x Z/2 x Z/4", "Z/240"] {
            let g: FgAbelianGroup = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert!("Q".parse::<FgAbelianGroup>().is_err());
    }

    #[test]
    fn finite_invariants_of_c2_times_c4() {
        // Z/2 x Z/4 as pairs (a, b) encoded a * 4 + b.
        let elems: Vec<usize> = (0..8).collect();
        let mul = |x: usize, y: usize| ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
        let g = finite_group_invariants(&elems, 0, mul);
        assert_eq!(g.invariant_factors(), &[2, 4]);
        let g = finite_group_invariants(&[0], 0, mul);
        assert!(g.is_trivial());
    }
}
