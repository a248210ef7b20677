//! F1-schemes of finite type: affine charts glued along identified points.
//!
//! Underlying spaces are finite, and everything computed downstream depends
//! only on the unit groups of the stalks, so gluing is recorded at point
//! level and validated by comparing stalk invariants.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;
use crate::arith::lcm;
use crate::error::SchemeError;
use crate::monoid::{FiniteMonoid, SplitMonoid};
use crate::spectrum::{MonoidChart, PrimeIdeal, SpectrumLimits};
use crate::unionfind::UnionFind;

/// A point of one chart, addressed by chart index and prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointRef {
    pub chart: usize,
    pub prime: PrimeIdeal,
}

impl PointRef {
    pub fn new(chart: usize, prime: PrimeIdeal) -> Self {
        Self { chart, prime }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: usize,
    pub prime: PrimeIdeal,
    pub stalk_units: FgAbelianGroup,
}

impl ChartPoint {
    pub fn point_ref(&self) -> PointRef {
        PointRef::new(self.chart, self.prime)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F1Scheme {
    pub name: String,
    pub charts: Vec<MonoidChart>,
    pub chart_names: Vec<String>,
    pub identifications: Vec<(PointRef, PointRef)>,
}

/// An equivalence class of chart points; members are in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalPoint {
    pub members: Vec<ChartPoint>,
    pub stalk_units: FgAbelianGroup,
}

impl GlobalPoint {
    pub fn rank(&self) -> u32 {
        self.stalk_units.rank()
    }

    /// The canonical (first) chart point of the class.
    pub fn representative(&self) -> &ChartPoint {
        &self.members[0]
    }
}

impl F1Scheme {
    pub fn affine(name: impl Into<String>, chart: MonoidChart) -> Self {
        Self {
            name: name.into(),
            charts: vec![chart],
            chart_names: vec!["U0".into()],
            identifications: Vec::new(),
        }
    }

    /// All chart points in canonical order (chart id, then prime order).
    pub fn chart_points(&self, limits: &SpectrumLimits) -> Result<Vec<ChartPoint>, SchemeError> {
        let mut out = Vec::new();
        for (id, chart) in self.charts.iter().enumerate() {
            for prime in chart.spectrum_with(limits)? {
                let stalk_units = chart.stalk_units(&prime)?;
                out.push(ChartPoint {
                    chart: id,
                    prime,
                    stalk_units,
                });
            }
        }
        Ok(out)
    }

    pub fn describe_point(&self, p: &PointRef) -> String {
        let chart = self
            .chart_names
            .get(p.chart)
            .cloned()
            .unwrap_or_else(|| format!("#{}", p.chart));
        match self.charts.get(p.chart) {
            Some(c) => format!("{chart}.{}", c.describe_prime(&p.prime)),
            None => format!("{chart}.{:?}", p.prime),
        }
    }

    pub fn glue(&self) -> Result<Vec<GlobalPoint>, SchemeError> {
        glue(self)
    }
}

/// Closes the identifications under equivalence and returns one global
/// point per class, ordered by its canonical member.
pub fn glue(x: &F1Scheme) -> Result<Vec<GlobalPoint>, SchemeError> {
    glue_with(x, &SpectrumLimits::default())
}

pub fn glue_with(x: &F1Scheme, limits: &SpectrumLimits) -> Result<Vec<GlobalPoint>, SchemeError> {
    let points = x.chart_points(limits)?;
    let index: HashMap<PointRef, usize> = points.iter().enumerate().map(|(i, p)| (p.point_ref(), i)).collect();
    let mut uf = UnionFind::new(points.len());
    for (a, b) in &x.identifications {
        let lookup = |p: &PointRef| {
            index
                .get(p)
                .copied()
                .ok_or_else(|| SchemeError::UnknownPoint(x.describe_point(p)))
        };
        let (ia, ib) = (lookup(a)?, lookup(b)?);
        if points[ia].stalk_units != points[ib].stalk_units {
            return Err(SchemeError::IncompatibleGluing {
                left: x.describe_point(a),
                right: x.describe_point(b),
                left_stalk: points[ia].stalk_units.to_string(),
                right_stalk: points[ib].stalk_units.to_string(),
            });
        }
        uf.union(ia, ib);
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..points.len() {
        let root = uf.find(i);
        classes.entry(root).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
    classes.sort_by_key(|members| members[0]);
    Ok(classes
        .into_iter()
        .map(|members| {
            let stalk_units = points[members[0]].stalk_units.clone();
            GlobalPoint {
                members: members.into_iter().map(|i| points[i].clone()).collect(),
                stalk_units,
            }
        })
        .collect())
}

/// Maximum stalk rank over all global points.
pub fn scheme_rank(x: &F1Scheme) -> Result<u32, SchemeError> {
    Ok(points_rank(&glue(x)?))
}

/// Least common multiple of the stalk exponents.
pub fn scheme_exponent(x: &F1Scheme) -> Result<u64, SchemeError> {
    Ok(points_exponent(&glue(x)?))
}

pub fn points_rank(points: &[GlobalPoint]) -> u32 {
    points.iter().map(GlobalPoint::rank).max().unwrap_or(0)
}

pub fn points_exponent(points: &[GlobalPoint]) -> u64 {
    points.iter().fold(1, |acc, p| lcm(acc, p.stalk_units.exponent()))
}

fn split_chart(a: u32, b: u32, torsion: Vec<u64>, zero: bool) -> MonoidChart {
    MonoidChart::Split(SplitMonoid::new(a, b, torsion, zero).expect("builder descriptors are valid"))
}

/// `spec F1`, the spectrum of the trivial monoid.
pub fn spec_f1() -> F1Scheme {
    F1Scheme::affine("spec F1", split_chart(0, 0, vec![], false))
}

pub fn affine_space(n: u32) -> F1Scheme {
    F1Scheme::affine(format!("A^{n}"), split_chart(0, n, vec![], false))
}

pub fn torus(k: u32) -> F1Scheme {
    F1Scheme::affine(format!("Gm^{k}"), split_chart(k, 0, vec![], false))
}

/// `spec` of the cyclic group of order `n`.
pub fn mu(n: usize) -> F1Scheme {
    F1Scheme::affine(format!("mu_{n}"), MonoidChart::Finite(FiniteMonoid::cyclic_group(n)))
}

/// `spec D_k`.
pub fn d_scheme(k: usize) -> F1Scheme {
    F1Scheme::affine(format!("spec D_{k}"), MonoidChart::Finite(FiniteMonoid::d_monoid(k)))
}

/// `spec {1, a}` with `a^2 = a`.
pub fn idempotent_point() -> F1Scheme {
    F1Scheme::affine("spec {1,a}", MonoidChart::Finite(FiniteMonoid::idempotent_pair()))
}

pub const MAX_PROJECTIVE_DIM: u32 = 6;

/// Projective `n`-space from its standard `n + 1` affine charts.
///
/// Chart `i` is free on the coordinates `x_j / x_i`, `j != i` (ascending).
/// A point of chart `i` is determined by the set `J` of homogeneous
/// coordinates that are invertible there, so global points are the
/// nonempty subsets `J` of `{0..n}` and carry stalk rank `|J| - 1`. Each
/// chart point is identified with its counterpart in the least chart of `J`.
pub fn proj_space(n: u32) -> F1Scheme {
    assert!(
        n <= MAX_PROJECTIVE_DIM,
        "projective space dimension {n} exceeds {MAX_PROJECTIVE_DIM}"
    );
    let charts = (0..=n).map(|_| split_chart(0, n, vec![], false)).collect();
    let chart_names = (0..=n).map(|i| format!("U{i}")).collect();
    // cone coordinate c of chart i stands for homogeneous index coord(i, c)
    let coord = |i: u32, c: u32| if c < i { c } else { c + 1 };
    let prime_of = |i: u32, set: u32| {
        let cone = (0..n)
            .filter(|&c| set >> coord(i, c) & 1 == 0)
            .fold(0u32, |m, c| m | 1 << c);
        PrimeIdeal::Split { cone, zero: false }
    };
    let mut identifications = Vec::new();
    for set in 1u32..1 << (n + 1) {
        let first = set.trailing_zeros();
        for i in (first + 1..=n).filter(|&i| set >> i & 1 == 1) {
            identifications.push((
                PointRef::new(i as usize, prime_of(i, set)),
                PointRef::new(first as usize, prime_of(first, set)),
            ));
        }
    }
    F1Scheme {
        name: format!("P^{n}"),
        charts,
        chart_names,
        identifications,
    }
}
