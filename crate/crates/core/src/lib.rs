//! Exact computations for monoid schemes over the field with one element.
//!
//! Schemes are finite gluings of monoid spectra. From the unit groups of
//! their stalks this crate computes zeta-polynomials, point counts over
//! `D_q = C_(q-1) ∪ {0}`, F1-zeta functions, Euler characteristics and
//! local Weil zeta functions. A K-theory layer covers monomial matrix
//! groups, projective pointed modules and the Grothendieck group of the
//! split exact structure. Brute-force oracles for the central counts live
//! in [`oracle`].

pub mod abelian;
pub mod arith;
pub mod dsl;
pub mod error;
pub mod gl;
pub mod kplus;
pub mod matrix;
pub mod module;
pub mod monoid;
pub mod oracle;
pub mod projective;
pub mod qspan;
pub mod saturate;
pub mod scheme;
pub mod series;
pub mod snf;
pub mod spectrum;
pub mod unionfind;
pub mod zeta;

pub use abelian::{group_from_presentation, hom_count_cyclic, FgAbelianGroup};
pub use dsl::{load, parse, Document, DslError, SchemeFile};
pub use error::{AlgebraError, KError, MonoidError, OracleError, SchemeError, SpectrumError, ZetaError};
pub use gl::{GeneralLinear, MonomialMatrix};
pub use kplus::{k_plus, stable_stems, KPlus};
pub use matrix::IntMatrix;
pub use module::{
    cokernel, free_module, is_isomorphic, kernel, pullback, strong_exact_check, wedge, Morphism, PointedModule,
};
pub use monoid::{
    group_completion_finite, idempotents, presentation_of, units, verify_monoid, FiniteMonoid, Presentation,
    SplitMonoid, ValidationReport, Violation,
};
pub use oracle::{hom_count_oracle, scheme_count_oracle, OracleOptions};
pub use projective::{enumerate_projectives, k0_q, K0Result, Projective, ProjectiveInventory};
pub use qspan::{q_compose, QSpan};
pub use saturate::saturate;
pub use scheme::{
    affine_space, d_scheme, glue, idempotent_point, mu, proj_space, scheme_exponent, scheme_rank, spec_f1, torus,
    ChartPoint, F1Scheme, GlobalPoint, PointRef,
};
pub use series::RationalSeries;
pub use snf::{smith_normal_form, SmithForm};
pub use spectrum::{spectrum_finite, spectrum_split, stalk_units, MonoidChart, PrimeIdeal};
pub use zeta::{
    betti, coprime_qs, euler_char, exact_count, soule_limit, weil_consistency, weil_local_zeta, weil_series,
    zeta_factored, zeta_polynomial, LocalZeta, WeilCheck, ZetaFactored, ZetaPolynomial,
};
