mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use f1_core::monoid::monoids_isomorphic;
use f1_core::spectrum::spectrum_finite;
use f1_core::{
    group_completion_finite, presentation_of, saturate, smith_normal_form, units, FgAbelianGroup, FiniteMonoid,
    IntMatrix, PrimeIdeal, SplitMonoid,
};

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn snf_identity(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&(&s.u * &m) * &s.v), &s.d);
        prop_assert!(s.d.is_diagonal());
        prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }
}

/// `#Hom(Z^r x Z/d1 x ..., Z/m)` by enumerating generator images.
fn brute_homs(rank: u32, factors: &[u64], m: u64) -> u64 {
    let slots = rank as usize + factors.len();
    let mut count = 0;
    for code in 0..m.pow(slots as u32) {
        let mut c = code;
        let ok = (0..slots).all(|i| {
            let x = c % m;
            c /= m;
            i < rank as usize || (factors[i - rank as usize] * x).is_multiple_of(m)
        });
        count += u64::from(ok);
    }
    count
}

#[test]
fn hom_count_matches_enumeration() {
    let mut chains: Vec<Vec<u64>> = vec![vec![]];
    for a in 2..=12u64 {
        chains.push(vec![a]);
        for b in (a..=12).filter(|b| b % a == 0) {
            chains.push(vec![a, b]);
        }
    }
    for rank in 0..=2 {
        for chain in &chains {
            let g = FgAbelianGroup::new(rank, chain.clone()).unwrap();
            for m in 1..=12 {
                assert_eq!(g.hom_count_cyclic(m), brute_homs(rank, chain, m).into(), "{g} m={m}");
            }
        }
    }
}

#[test]
fn completion_of_zero_and_group_monoids() {
    for m in common::small_monoids(4) {
        if m.has_zero() {
            assert!(group_completion_finite(&m).is_trivial());
        }
        if m.is_group() {
            assert_eq!(group_completion_finite(&m), units(&m));
        }
    }
    for n in 1..=8 {
        let c = FiniteMonoid::cyclic_group(n);
        assert_eq!(
            group_completion_finite(&c),
            FgAbelianGroup::from_cyclic_orders(0, &[n as u64])
        );
        assert!(group_completion_finite(&FiniteMonoid::d_monoid(n + 1)).is_trivial());
    }
}

/// `u -> e*u` is a homomorphism from the units onto part of `Quot(m) = e*m`
/// whose kernel is the stabilizer of `e`, so units embed exactly when no
/// nontrivial unit fixes `e`. Absence of a zero is not enough.
#[test]
fn units_map_to_completion() {
    let mut collapsing = Vec::new();
    for m in common::small_monoids(4).into_iter().filter(|m| !m.has_zero()) {
        let e = m.minimal_idempotent();
        let us = m.unit_elements();
        let images: BTreeSet<usize> = us.iter().map(|&u| m.mul(e, u)).collect();
        let stabilizer = us.iter().filter(|&&u| m.mul(u, e) == e).count();
        assert_eq!(images.len() * stabilizer, us.len());
        if stabilizer > 1 {
            collapsing.push(m.table());
        }
        if m.is_group() || m.idempotents().len() == 1 {
            assert_eq!(images.len(), us.len());
        }
    }
    // C2 acting trivially on an ideal copy of C2
    assert!(collapsing.contains(&vec![
        vec![0, 1, 2, 3],
        vec![1, 1, 2, 1],
        vec![2, 2, 1, 2],
        vec![3, 1, 2, 0]
    ]));
}

#[test]
fn finite_split_monoids_saturate() {
    for torsion in [vec![], vec![2], vec![3], vec![2, 2], vec![2, 4], vec![6]] {
        for zero in [false, true] {
            let s = SplitMonoid::new(0, 0, torsion.clone(), zero).unwrap();
            let m = saturate(&presentation_of(&s), 4096).unwrap();
            let mut expected = FiniteMonoid::trivial();
            for &d in &torsion {
                expected = expected.direct_product(&FiniteMonoid::cyclic_group(d as usize));
            }
            if zero {
                let n = expected.size();
                let mut table = expected.table();
                for row in table.iter_mut() {
                    row.push(n);
                }
                table.push(vec![n; n + 1]);
                expected = FiniteMonoid::from_table(&table, expected.identity(), None).unwrap();
            }
            assert!(monoids_isomorphic(&m, &expected), "{s}");
        }
    }
}

#[test]
fn presentations_round_trip() {
    for m in common::small_monoids(4) {
        let (p, _, _) = m.presentation();
        let back = saturate(&p, 64).unwrap();
        assert!(monoids_isomorphic(&m, &back), "{p}");
    }
}

/// Primes by definition: complement contains 1, is product closed and divisor closed.
fn primes_by_definition(m: &FiniteMonoid) -> BTreeSet<u32> {
    let n = m.size();
    (0u32..1 << n)
        .filter(|&bits| {
            let face = |x: usize| bits >> x & 1 == 0;
            face(m.identity())
                && (0..n).all(|a| {
                    (0..n).all(|b| {
                        let ab = m.mul(a, b);
                        (!(face(a) && face(b)) || face(ab)) && (!face(ab) || (face(a) && face(b)))
                    })
                })
        })
        .collect()
}

fn face_duality(m: &FiniteMonoid) {
    let got: BTreeSet<u32> = spectrum_finite(m)
        .unwrap()
        .into_iter()
        .map(|p| match p {
            PrimeIdeal::Finite(bits) => bits,
            other => panic!("{other:?}"),
        })
        .collect();
    assert_eq!(got, primes_by_definition(m));
    assert!(got.contains(&0));
}

#[test]
fn face_duality_small_monoids() {
    for m in common::small_monoids(4) {
        face_duality(&m);
    }
    let pair = FiniteMonoid::idempotent_pair();
    for m in [
        FiniteMonoid::d_monoid(8),
        FiniteMonoid::cyclic_group(8),
        pair.direct_product(&pair).direct_product(&pair),
        pair.direct_product(&FiniteMonoid::cyclic_group(4)),
        FiniteMonoid::d_monoid(4).direct_product(&pair),
        FiniteMonoid::d_monoid(3).direct_product(&FiniteMonoid::d_monoid(3)),
    ] {
        assert!(m.size() <= 9);
        face_duality(&m);
    }
}
