//! `GL_n(A)`: monomial matrices with unit entries, `A^x^n ⋊ Per(n)`.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::monoid::FiniteMonoid;

/// Row `i` has its single nonzero entry `diag[i]` in column `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub perm: Vec<usize>,
    pub diag: Vec<usize>,
}

impl MonomialMatrix {
    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        (self.perm[row] == col).then_some(self.diag[row])
    }

    pub fn is_permutation_matrix(&self, one: usize) -> bool {
        self.diag.iter().all(|&d| d == one)
    }
}

pub struct GeneralLinear<'a> {
    base: &'a FiniteMonoid,
    n: usize,
    units: Vec<usize>,
}

impl<'a> GeneralLinear<'a> {
    pub fn new(base: &'a FiniteMonoid, n: usize) -> Self {
        Self {
            base,
            n,
            units: base.unit_elements(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> MonomialMatrix {
        MonomialMatrix {
            perm: (0..self.n).collect(),
            diag: vec![self.base.identity(); self.n],
        }
    }

    pub fn contains(&self, m: &MonomialMatrix) -> bool {
        if m.perm.len() != self.n || m.diag.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        m.perm
            .iter()
            .all(|&c| c < self.n && !std::mem::replace(&mut seen[c], true))
            && m.diag.iter().all(|d| self.units.contains(d))
    }

    pub fn multiply(&self, m: &MonomialMatrix, n: &MonomialMatrix) -> MonomialMatrix {
        MonomialMatrix {
            perm: m.perm.iter().map(|&j| n.perm[j]).collect(),
            diag: (0..self.n)
                .map(|i| self.base.mul(m.diag[i], n.diag[m.perm[i]]))
                .collect(),
        }
    }

    pub fn invert(&self, m: &MonomialMatrix) -> MonomialMatrix {
        let mut perm = vec![0; self.n];
        let mut diag = vec![self.base.identity(); self.n];
        for i in 0..self.n {
            perm[m.perm[i]] = i;
            diag[m.perm[i]] = self.base.inverse(m.diag[i]).expect("entries are units");
        }
        MonomialMatrix { perm, diag }
    }

    /// `|A^x|^n * n!`
    pub fn order(&self) -> BigUint {
        BigUint::from(self.units.len()).pow(self.n as u32) * factorial(self.n as u64)
    }

    /// All elements, permutations in lexicographic order, then diagonals.
    pub fn enumerate(&self) -> impl Iterator<Item = MonomialMatrix> + '_ {
        permutations(self.n).into_iter().flat_map(move |perm| {
            let total = self.units.len().pow(self.n as u32);
            (0..total).map(move |mut code| {
                let diag = (0..self.n)
                    .map(|_| {
                        let u = self.units[code % self.units.len()];
                        code /= self.units.len();
                        u
                    })
                    .collect();
                MonomialMatrix {
                    perm: perm.clone(),
                    diag,
                }
            })
        })
    }

    pub fn display<'m>(&'m self, m: &'m MonomialMatrix) -> impl fmt::Display + 'm {
        DisplayMatrix { gl: self, m }
    }
}

struct DisplayMatrix<'g, 'a> {
    gl: &'g GeneralLinear<'a>,
    m: &'g MonomialMatrix,
}

impl fmt::Display for DisplayMatrix<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.gl.n)
            .map(|i| {
                let cells: Vec<&str> = (0..self.gl.n)
                    .map(|j| self.m.entry(i, j).map_or("0", |e| self.gl.base.name(e)))
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts rows of (column, unit) choices with pairwise distinct columns.
    fn brute_order(units: usize, n: usize) -> u64 {
        let choices = (n * units) as u64;
        (0..choices.pow(n as u32))
            .filter(|&code| {
                let mut c = code;
                let mut cols = Vec::new();
                for _ in 0..n {
                    cols.push((c % choices) as usize / units);
                    c /= choices;
                }
                cols.sort_unstable();
                cols.windows(2).all(|w| w[0] != w[1])
            })
            .count() as u64
    }

    #[test]
    fn orders() {
        let d3 = FiniteMonoid::d_monoid(3);
        let gl = GeneralLinear::new(&d3, 2);
        assert_eq!(gl.order(), BigUint::from(8u32));
        assert_eq!(brute_order(2, 2), 8);
        assert_eq!(gl.enumerate().count(), 8);
        let t = FiniteMonoid::trivial();
        assert_eq!(GeneralLinear::new(&t, 3).order(), BigUint::from(6u32));
        let c5 = FiniteMonoid::cyclic_group(5);
        assert_eq!(GeneralLinear::new(&c5, 1).order(), BigUint::from(5u32));
    }

    #[test]
    fn order_matches_enumeration() {
        for (m, u) in [
            (FiniteMonoid::trivial(), 1),
            (FiniteMonoid::idempotent_pair(), 1),
            (FiniteMonoid::cyclic_group(2), 2),
            (FiniteMonoid::cyclic_group(3), 3),
            (FiniteMonoid::d_monoid(5), 4),
        ] {
            for n in 1..=3 {
                let gl = GeneralLinear::new(&m, n);
                assert_eq!(gl.order(), BigUint::from(brute_order(u, n)));
                assert_eq!(BigUint::from(gl.enumerate().count()), gl.order());
                assert!(gl.enumerate().all(|x| gl.contains(&x)));
            }
        }
    }

    #[test]
    fn group_laws() {
        let c3 = FiniteMonoid::cyclic_group(3);
        let gl = GeneralLinear::new(&c3, 3);
        let all: Vec<_> = gl.enumerate().collect();
        let id = gl.identity();
        for (i, x) in all.iter().enumerate().step_by(7) {
            let y = &all[(i * 31 + 5) % all.len()];
            let z = &all[(i * 17 + 2) % all.len()];
            assert_eq!(gl.multiply(&gl.multiply(x, y), z), gl.multiply(x, &gl.multiply(y, z)));
            assert_eq!(gl.multiply(x, &gl.invert(x)), id);
            assert_eq!(gl.multiply(&gl.invert(x), x), id);
            assert_eq!(gl.multiply(&id, x), *x);
        }
    }

    #[test]
    fn product_is_matrix_product() {
        let c2 = FiniteMonoid::cyclic_group(2);
        let gl = GeneralLinear::new(&c2, 3);
        let all: Vec<_> = gl.enumerate().collect();
        for x in all.iter().step_by(5) {
            for y in all.iter().step_by(11) {
                let p = gl.multiply(x, y);
                for i in 0..3 {
                    for k in 0..3 {
                        let dense = (0..3).find_map(|j| Some(c2.mul(x.entry(i, j)?, y.entry(j, k)?)));
                        assert_eq!(p.entry(i, k), dense);
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        let c2 = FiniteMonoid::cyclic_group(2);
        let gl = GeneralLinear::new(&c2, 2);
        let m = MonomialMatrix {
            perm: vec![1, 0],
            diag: vec![1, 0],
        };
        assert_eq!(gl.display(&m).to_string(), "[[0, g], [1, 0]]");
    }
}
