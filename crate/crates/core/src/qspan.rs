//! Morphisms of Quillen's Q-construction on pointed modules: isomorphism
//! classes of spans `X <<- S >-> Y`.

use crate::error::KError;
use crate::module::{kernel, pullback, strong_exact_check, Morphism, PointedModule};

/// A span `X <<- S >-> Y`, read as a morphism `X -> Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSpan {
    kernel_leg: Morphism,
    cokernel_leg: Morphism,
}

impl QSpan {
    /// Checks that the legs share their source, that the kernel leg is
    /// injective and that the cokernel leg is the cokernel of its kernel.
    pub fn new(kernel_leg: Morphism, cokernel_leg: Morphism) -> Result<Self, KError> {
        if kernel_leg.source() != cokernel_leg.source() {
            return Err(KError::InvalidLeg("legs have different middle objects".into()));
        }
        if !kernel_leg.is_injective() {
            return Err(KError::InvalidLeg("kernel leg is not injective".into()));
        }
        if !strong_exact_check(&kernel(&cokernel_leg), &cokernel_leg)? {
            return Err(KError::InvalidLeg(
                "cokernel leg is not an admissible epimorphism".into(),
            ));
        }
        Ok(Self {
            kernel_leg,
            cokernel_leg,
        }
        .canonical())
    }

    pub fn identity(y: &PointedModule) -> Self {
        Self {
            kernel_leg: Morphism::identity(y),
            cokernel_leg: Morphism::identity(y),
        }
    }

    /// `i_! : X -> Y` for an admissible mono `i: X >-> Y`.
    pub fn from_mono(i: &Morphism) -> Result<Self, KError> {
        Self::new(i.clone(), Morphism::identity(i.source()))
    }

    /// `j^! : X -> Y` for an admissible epi `j: Y ->> X`.
    pub fn from_epi(j: &Morphism) -> Result<Self, KError> {
        Self::new(Morphism::identity(j.source()), j.clone())
    }

    pub fn middle(&self) -> &PointedModule {
        self.kernel_leg.source()
    }

    pub fn kernel_leg(&self) -> &Morphism {
        &self.kernel_leg
    }

    pub fn cokernel_leg(&self) -> &Morphism {
        &self.cokernel_leg
    }

    /// `X` in `X <<- S >-> Y`.
    pub fn source(&self) -> &PointedModule {
        self.cokernel_leg.target()
    }

    /// `Y` in `X <<- S >-> Y`.
    pub fn target(&self) -> &PointedModule {
        self.kernel_leg.target()
    }

    /// Representative whose middle carrier is ordered like its image under
    /// the kernel leg. Two spans with the same ends are isomorphic exactly
    /// when their canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let k = self.kernel_leg.map();
        let mut order: Vec<usize> = (0..k.len()).collect();
        order.sort_by_key(|&m| k[m]);
        let mut perm = vec![0; k.len()];
        for (pos, &m) in order.iter().enumerate() {
            perm[m] = pos;
        }
        let middle = self.middle().relabel(&perm);
        let reorder = |f: &Morphism| {
            let mut map = vec![0; k.len()];
            for m in 0..k.len() {
                map[perm[m]] = f.apply(m);
            }
            Morphism::new(middle.clone(), f.target().clone(), map).expect("relabelling preserves equivariance")
        };
        Self {
            kernel_leg: reorder(&self.kernel_leg),
            cokernel_leg: reorder(&self.cokernel_leg),
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.source() == other.source() && self.target() == other.target() && self.canonical() == other.canonical()
    }
}

/// Composite `X -> Y -> Z` of `s1: X -> Y` and `s2: Y -> Z`, with middle `S x_Y T`.
pub fn q_compose(s1: &QSpan, s2: &QSpan) -> Result<QSpan, KError> {
    if s1.target() != s2.source() {
        return Err(KError::NotComposable(
            "target of the first span is not the source of the second".into(),
        ));
    }
    let (_, to_s, to_t) = pullback(&s1.kernel_leg, &s2.cokernel_leg)?;
    let span = QSpan {
        kernel_leg: to_t.then(&s2.kernel_leg)?,
        cokernel_leg: to_s.then(&s1.cokernel_leg)?,
    };
    Ok(span.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{cokernel, free_module, is_isomorphic, wedge_sequence};
    use crate::monoid::FiniteMonoid;
    use std::sync::Arc;

    fn setup() -> (PointedModule, PointedModule) {
        let a = Arc::new(FiniteMonoid::idempotent_pair());
        let plus = free_module(&a, 1);
        let small = plus.submodule(&[2]).unwrap().source().clone();
        (plus, small)
    }

    #[test]
    fn identity_is_neutral() {
        let (plus, small) = setup();
        let (i, j) = wedge_sequence(&plus, &small).unwrap();
        for s in [QSpan::from_mono(&i).unwrap(), QSpan::from_epi(&j).unwrap()] {
            let left = q_compose(&QSpan::identity(s.source()), &s).unwrap();
            let right = q_compose(&s, &QSpan::identity(s.target())).unwrap();
            assert!(left.is_isomorphic(&s));
            assert!(right.is_isomorphic(&s));
        }
    }

    #[test]
    fn epi_after_mono_kernel() {
        // j^! i_! with i: X >-> Y and j: W ->> Y
        let (plus, small) = setup();
        let (i, _) = wedge_sequence(&plus, &small).unwrap();
        let y = i.target().clone();
        let (_, j) = wedge_sequence(&small, &y).unwrap();
        let composite = q_compose(&QSpan::from_mono(&i).unwrap(), &QSpan::from_epi(&j).unwrap()).unwrap();
        let ker_j = kernel(&j).source().clone();
        let ker_j1 = kernel(composite.cokernel_leg()).source().clone();
        assert!(is_isomorphic(&ker_j1, &ker_j).unwrap());
    }

    #[test]
    fn fiber_product_size_by_enumeration() {
        let (plus, small) = setup();
        let inc = plus.submodule(&[2]).unwrap();
        let s1 = QSpan::from_mono(&inc).unwrap();
        let (i, _) = wedge_sequence(&plus, &small).unwrap();
        let s2 = QSpan::from_mono(&i).unwrap();
        let c = q_compose(&s1, &s2).unwrap();
        let brute = (0..s1.middle().size())
            .flat_map(|x| (0..s2.middle().size()).map(move |y| (x, y)))
            .filter(|&(x, y)| s1.kernel_leg().apply(x) == s2.cokernel_leg().apply(y))
            .count();
        assert_eq!(brute, 2);
        assert_eq!(c.middle().size(), brute);
    }

    #[test]
    fn not_composable() {
        let (plus, small) = setup();
        let err = q_compose(&QSpan::identity(&plus), &QSpan::identity(&small)).unwrap_err();
        assert!(matches!(err, KError::NotComposable(_)));
    }

    #[test]
    fn invalid_legs() {
        let (plus, _) = setup();
        let inc = plus.submodule(&[2]).unwrap();
        // collapsing map plus -> plus/small used as kernel leg
        let q = cokernel(&inc);
        assert!(QSpan::new(q.clone(), q).is_err());
    }
}
