//! Fixtures shared by the criterion benches.

use f1_core::scheme::{affine_space, d_scheme, mu, proj_space, torus};
use f1_core::{F1Scheme, FiniteMonoid};

/// Schemes of growing spectrum size.
pub fn schemes() -> Vec<F1Scheme> {
    vec![
        proj_space(2),
        proj_space(4),
        affine_space(6),
        torus(3),
        mu(6),
        d_scheme(9),
    ]
}

/// Finite monoids for the K-theory benches: a pair of idempotents and small groups.
pub fn k_bases() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("pair", FiniteMonoid::idempotent_pair()),
        ("c2", FiniteMonoid::cyclic_group(2)),
        ("c3", FiniteMonoid::cyclic_group(3)),
    ]
}
