#![allow(dead_code)]

use f1_core::monoid::monoids_isomorphic;
use f1_core::scheme::{affine_space, d_scheme, idempotent_point, mu, proj_space, spec_f1, torus};
use f1_core::{F1Scheme, FiniteMonoid};

pub fn zoo() -> Vec<F1Scheme> {
    let mut out = vec![spec_f1()];
    out.extend((1..=4).map(affine_space));
    out.extend((1..=3).map(proj_space));
    out.push(torus(1));
    out.push(torus(2));
    out.extend([2, 3, 4, 6].map(mu));
    out.extend((2..=10).map(d_scheme));
    out.push(idempotent_point());
    out
}

/// Every commutative monoid with at most `max` elements, up to isomorphism.
pub fn small_monoids(max: usize) -> Vec<FiniteMonoid> {
    let mut out: Vec<FiniteMonoid> = Vec::new();
    for n in 1..=max {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let total = n.pow(pairs.len() as u32);
        for code in 0..total {
            let mut table = vec![vec![0; n]; n];
            table[0] = (0..n).collect();
            for (x, row) in table.iter_mut().enumerate() {
                row[0] = x;
            }
            let mut c = code;
            for &(i, j) in &pairs {
                table[i][j] = c % n;
                table[j][i] = c % n;
                c /= n;
            }
            let Ok(m) = FiniteMonoid::from_table(&table, 0, None) else {
                continue;
            };
            if !out.iter().any(|o| monoids_isomorphic(o, &m)) {
                out.push(m);
            }
        }
    }
    out
}

pub fn prime_powers(bound: u64) -> Vec<u64> {
    f1_core::arith::prime_powers_up_to(bound)
}
