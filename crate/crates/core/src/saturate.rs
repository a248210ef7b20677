//! Enumeration of a finitely presented commutative monoid by coset
//! enumeration on its right Cayley graph.
//!
//! Nodes are discovered breadth-first (word length order). Every defining
//! relation, every commutator `g*h = h*g` and, when a zero is adjoined,
//! every absorbing law is traced from every node; coincidences are merged
//! with a union-find that keeps the oldest node as representative.

use std::collections::VecDeque;

use crate::error::MonoidError;
use crate::monoid::{format_word, FiniteMonoid, Presentation};
use crate::unionfind::UnionFind;

struct Enumeration {
    gens: usize,
    edges: Vec<Vec<Option<usize>>>,
    words: Vec<Vec<u32>>,
    uf: UnionFind,
    live: usize,
}

impl Enumeration {
    fn new(gens: usize) -> Self {
        Self {
            gens,
            edges: vec![vec![None; gens]],
            words: vec![vec![0; gens]],
            uf: UnionFind::new(1),
            live: 1,
        }
    }

    fn step(&mut self, node: usize, g: usize) -> usize {
        let node = self.uf.find(node);
        match self.edges[node][g] {
            Some(t) => self.uf.find(t),
            None => {
                let id = self.uf.push();
                let mut w = self.words[node].clone();
                w[g] += 1;
                self.words.push(w);
                self.edges.push(vec![None; self.gens]);
                self.edges[node][g] = Some(id);
                self.live += 1;
                id
            }
        }
    }

    fn trace(&mut self, node: usize, seq: &[usize]) -> usize {
        seq.iter().fold(node, |n, &g| self.step(n, g))
    }

    fn coincide(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::from([(a, b)]);
        while let Some((a, b)) = queue.pop_front() {
            let (ra, rb) = (self.uf.find(a), self.uf.find(b));
            if ra == rb {
                continue;
            }
            let (keep, gone) = (ra.min(rb), ra.max(rb));
            self.uf.union_into(keep, gone);
            self.live -= 1;
            for g in 0..self.gens {
                if let Some(t) = self.edges[gone][g] {
                    match self.edges[keep][g] {
                        Some(s) => queue.push_back((s, t)),
                        None => self.edges[keep][g] = Some(t),
                    }
                }
            }
        }
    }
}

fn expand(word: &[u32]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
        .collect()
}

/// Enumerates the monoid presented by `p`, failing once more than `cap`
/// distinct elements are alive.
pub fn saturate(p: &Presentation, cap: usize) -> Result<FiniteMonoid, MonoidError> {
    assert!(cap >= 1, "saturation cap must be positive");
    let user_gens = p.generators.len();
    let gens = user_gens + usize::from(p.has_zero);

    let mut relations: Vec<(Vec<usize>, Vec<usize>)> =
        p.relations.iter().map(|(l, r)| (expand(l), expand(r))).collect();
    for i in 0..gens {
        for j in i + 1..gens {
            relations.push((vec![i, j], vec![j, i]));
        }
    }
    if p.has_zero {
        let z = user_gens;
        for g in 0..gens {
            relations.push((vec![z, g], vec![z]));
        }
    }

    let mut en = Enumeration::new(gens);
    let mut i = 0;
    while i < en.edges.len() {
        if en.uf.find(i) == i {
            for (lhs, rhs) in &relations {
                if en.uf.find(i) != i {
                    break;
                }
                let a = en.trace(i, lhs);
                let b = en.trace(i, rhs);
                en.coincide(a, b);
            }
            if en.uf.find(i) == i {
                for g in 0..gens {
                    en.step(i, g);
                }
            }
        }
        if en.live > cap {
            return Err(MonoidError::CapExceeded { cap });
        }
        i += 1;
    }

    let roots: Vec<usize> = (0..en.edges.len()).filter(|&n| en.uf.find(n) == n).collect();
    let mut index = vec![usize::MAX; en.edges.len()];
    for (k, &r) in roots.iter().enumerate() {
        index[r] = k;
    }
    let size = roots.len();
    let mut cayley = vec![0; size * size];
    for (a, &ra) in roots.iter().enumerate() {
        for (b, &rb) in roots.iter().enumerate() {
            let word = expand(&en.words[rb].clone());
            let t = en.trace(ra, &word);
            cayley[a * size + b] = index[en.uf.find(t)];
        }
    }
    let names = roots
        .iter()
        .map(|&r| {
            let w = &en.words[r];
            if p.has_zero && w[user_gens] > 0 {
                "0".to_string()
            } else {
                format_word(&p.generators, &w[..user_gens])
            }
        })
        .collect();
    Ok(FiniteMonoid::from_parts_unchecked(cayley, size, 0, None, names).with_detected_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{monoids_isomorphic, presentation_of, verify_monoid, SplitMonoid};

    fn pres(gens: &[&str], rels: Vec<(Vec<u32>, Vec<u32>)>, zero: bool) -> Presentation {
        Presentation::new(gens.iter().map(|s| s.to_string()).collect(), rels, zero).unwrap()
    }

    #[test]
    fn idempotent_generator() {
        let m = saturate(&pres(&["a"], vec![(vec![2], vec![1])], false), 10).unwrap();
        assert_eq!(m.size(), 2);
        assert!(monoids_isomorphic(&m, &FiniteMonoid::idempotent_pair()));
        assert_eq!(m.element_names(), &["1", "a"]);
    }

    #[test]
    fn cyclic_group() {
        let m = saturate(&pres(&["g"], vec![(vec![3], vec![0])], false), 10).unwrap();
        assert_eq!(m.size(), 3);
        assert!(m.is_group());
        assert!(verify_monoid(&m).is_valid());
    }

    #[test]
    fn free_monoid_exceeds_cap() {
        let err = saturate(&pres(&["t"], vec![], false), 100).unwrap_err();
        assert_eq!(err, MonoidError::CapExceeded { cap: 100 });
    }

    #[test]
    fn d_monoid_from_split() {
        let p = presentation_of(&SplitMonoid::new(0, 0, vec![3], true).unwrap());
        let m = saturate(&p, 100).unwrap();
        assert_eq!(m.size(), 4);
        assert!(monoids_isomorphic(&m, &FiniteMonoid::d_monoid(4)));
    }

    #[test]
    fn adjoined_zero() {
        let m = saturate(&pres(&["g"], vec![(vec![2], vec![0])], true), 10).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(m.zero().map(|z| m.name(z)), Some("0"));
        assert!(monoids_isomorphic(&m, &FiniteMonoid::d_monoid(3)));
    }

    #[test]
    fn two_generator_quotient() {
        // a^2 = a, b^3 = 1, a*b = a: {1, b, b^2, a}
        let m = saturate(
            &pres(
                &["a", "b"],
                vec![
                    (vec![2, 0], vec![1, 0]),
                    (vec![0, 3], vec![0, 0]),
                    (vec![1, 1], vec![1, 0]),
                ],
                false,
            ),
            50,
        )
        .unwrap();
        assert_eq!(m.size(), 4);
        assert!(verify_monoid(&m).is_valid());
        assert_eq!(m.zero().map(|z| m.name(z)), Some("a"));
    }
}
