mod common;

use std::sync::Arc;

use proptest::prelude::*;

use f1_core::module::{free_module, wedge_sequence, BASEPOINT};
use f1_core::projective::{idempotent_endomorphisms, ProjectiveOptions};
use f1_core::{
    enumerate_projectives, is_isomorphic, k0_q, k_plus, q_compose, strong_exact_check, FgAbelianGroup, FiniteMonoid,
    GeneralLinear, Morphism, PointedModule, QSpan,
};

fn revalidate(m: &PointedModule) {
    let action = m
        .base()
        .elements()
        .flat_map(|a| (0..m.size()).map(move |x| m.act(a, x)))
        .collect();
    PointedModule::new(m.base().clone(), m.size(), action, Some(m.labels().to_vec())).unwrap();
}

#[test]
fn projectives_of_small_monoids() {
    for m in common::small_monoids(4) {
        let inv = enumerate_projectives(&m, 12).unwrap();
        assert!(inv.unique_decomposition, "{:?}", m.table());
        assert_eq!(inv.found_above_rank_one, 0, "{:?}", m.table());
        for p in &inv.projectives {
            revalidate(&p.module);
            assert!(p.witness.is_idempotent());
            p.witness.as_morphism(&inv.base).unwrap();
            assert!(is_isomorphic(&p.witness.image(&inv.base), &p.module).unwrap());
            assert_eq!(inv.classify(&p.module).as_ref(), Some(&p.summands));
        }
        for ind in &inv.indecomposables {
            assert!(ind.module.is_indecomposable());
        }
        // retracts of F_1 and F_2 are all listed
        for n in 1..=2 {
            for e in idempotent_endomorphisms(&inv.base, n) {
                let img = e.image(&inv.base);
                if img.size() <= 12 {
                    assert!(inv.find(&img).is_some(), "{:?} rank {n}", m.table());
                }
            }
        }
    }
}

#[test]
fn k0_agrees_with_indecomposables_on_small_monoids() {
    let opts = ProjectiveOptions::default();
    for m in common::small_monoids(4) {
        let r = f1_core::projective::k0_q_with(&m, &opts).unwrap();
        assert!(r.agree, "{:?}: {} vs {}", m.table(), r.group, r.free_on_indecomposables);
        assert_eq!(r.non_split_sequences, 0);
        assert_eq!(r.truncated_pairs, 0);
        // class map is additive over wedges
        let objs = &r.inventory.projectives;
        for x in objs.iter().take(4) {
            for y in objs.iter().take(4) {
                let w = f1_core::wedge(&x.module, &y.module).unwrap();
                let sum: Vec<i64> = r
                    .class_of(&x.module)
                    .unwrap()
                    .iter()
                    .zip(r.class_of(&y.module).unwrap())
                    .map(|(a, b)| a + b)
                    .collect();
                assert_eq!(r.class_of(&w).unwrap(), sum);
            }
        }
    }
}

#[test]
fn split_k0_differs_from_k_plus_on_cyclic_groups() {
    for n in 2..=4 {
        let c = FiniteMonoid::cyclic_group(n);
        let q = k0_q(&c, 12).unwrap().group;
        let plus = k_plus(&c, 0).unwrap().group;
        assert_eq!(q, FgAbelianGroup::free(1));
        assert_ne!(q, plus);
    }
}

/// Spans out of `y`: the identity and, for each base object `w`, the
/// inclusion `y >-> y v w` and the section of `w v y ->> y`.
fn spans_from(y: &PointedModule, base: &[PointedModule]) -> Vec<QSpan> {
    let mut out = vec![QSpan::identity(y)];
    for w in base {
        out.push(QSpan::from_mono(&wedge_sequence(y, w).unwrap().0).unwrap());
        out.push(QSpan::from_epi(&wedge_sequence(w, y).unwrap().1).unwrap());
    }
    out
}

fn check_associativity(base: &[PointedModule]) -> usize {
    let mut checked = 0;
    for x in base {
        for s1 in spans_from(x, base) {
            for s2 in spans_from(s1.target(), base) {
                for s3 in spans_from(s2.target(), base) {
                    let left = q_compose(&q_compose(&s1, &s2).unwrap(), &s3).unwrap();
                    let right = q_compose(&s1, &q_compose(&s2, &s3).unwrap()).unwrap();
                    assert!(left.is_isomorphic(&right));
                    checked += 1;
                }
            }
        }
    }
    checked
}

#[test]
fn q_compose_is_associative() {
    let pair = Arc::new(FiniteMonoid::idempotent_pair());
    let plus = free_module(&pair, 1);
    let small = plus.submodule(&[2]).unwrap().source().clone();
    assert_eq!(check_associativity(&[plus, small]), 250);
    let c2 = Arc::new(FiniteMonoid::cyclic_group(2));
    assert_eq!(check_associativity(&[free_module(&c2, 1)]), 27);
}

#[test]
fn exactness_decoys_fail() {
    let pair = Arc::new(FiniteMonoid::idempotent_pair());
    let plus = free_module(&pair, 1);
    let small = plus.submodule(&[2]).unwrap().source().clone();
    let (i, j) = wedge_sequence(&plus, &small).unwrap();
    let y = i.target().clone();
    let zero_map = |s: &PointedModule, t: &PointedModule| Morphism::zero(s, t).unwrap();
    let decoys = [
        // i not injective: A+ ->> A a+ inside the middle
        (
            Morphism::new(plus.clone(), y.clone(), vec![0, 3, 3]).unwrap(),
            j.clone(),
        ),
        // kernel too small: zero map in
        (zero_map(&plus, &y), j.clone()),
        // cokernel not surjective: zero map out
        (i.clone(), zero_map(&y, &small)),
        // j kills everything, so its kernel is larger than im(i)
        (i.clone(), zero_map(&y, &PointedModule::zero(pair.clone()))),
        // image of i is the wrong summand
        (
            Morphism::new(small.clone(), y.clone(), vec![BASEPOINT, 3]).unwrap(),
            j.clone(),
        ),
    ];
    for (a, b) in &decoys {
        assert!(!strong_exact_check(a, b).unwrap());
    }
    // j folds two copies outside im(i): right kernel, but not a cokernel
    let y3 = f1_core::wedge(&f1_core::wedge(&small, &small).unwrap(), &small).unwrap();
    let i3 = Morphism::new(small.clone(), y3.clone(), vec![0, 1]).unwrap();
    let fold = Morphism::new(y3.clone(), small.clone(), vec![0, 0, 1, 1]).unwrap();
    assert!(fold.is_surjective());
    assert!(!strong_exact_check(&i3, &fold).unwrap());
    assert!(strong_exact_check(&i, &j).unwrap());
}

proptest! {
    #[test]
    fn gl_group_laws(a in 0usize..6144, b in 0usize..6144, c in 0usize..6144) {
        let v = FiniteMonoid::cyclic_group(2).direct_product(&FiniteMonoid::cyclic_group(2));
        let gl = GeneralLinear::new(&v, 4);
        let all: Vec<_> = gl.enumerate().collect();
        prop_assert_eq!(all.len(), 6144);
        let (x, y, z) = (&all[a], &all[b], &all[c]);
        prop_assert_eq!(gl.multiply(&gl.multiply(x, y), z), gl.multiply(x, &gl.multiply(y, z)));
        prop_assert_eq!(gl.multiply(x, &gl.invert(x)), gl.identity());
    }
}
