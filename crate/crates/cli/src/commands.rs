use f1_core::arith::{gcd, prime_powers_up_to};
use f1_core::gl::GeneralLinear;
use f1_core::oracle::scheme_count_oracle_with;
use f1_core::projective::{describe, k0_q_with, ProjectiveOptions};
use f1_core::scheme::{glue_with, points_exponent, GlobalPoint};
use f1_core::zeta::{betti_from_polynomial, count_from_points, zeta_from_points};
use f1_core::{k_plus, Document, F1Scheme, OracleError, OracleOptions, ZetaFactored};

use crate::error::CliError;
use crate::report::{
    CountRow, GlOrder, K0Block, KPlusRow, KReport, PointRow, Polynomial, PrimeRow, SchemeReport, SpecReport,
    Verification,
};

/// Highest `GL_n` reported by `f1 k`.
pub const GL_MAX_DIM: usize = 4;
/// Highest `K_i` reported by `f1 k`.
pub const K_PLUS_MAX: u32 = 7;

pub struct Context {
    pub doc: Document,
    pub threads: usize,
}

impl Context {
    fn scheme(&self, name: &str) -> Result<&F1Scheme, CliError> {
        self.doc
            .scheme(name)
            .ok_or_else(|| CliError::semantic(name, "no such scheme"))
    }

    fn oracle_options(&self) -> OracleOptions {
        OracleOptions {
            threads: self.threads,
            search_limit: self.doc.settings.oracle_search_limit,
            max_generators: self.doc.settings.oracle_max_generators,
        }
    }

    fn points(&self, x: &F1Scheme) -> Result<Vec<GlobalPoint>, CliError> {
        Ok(glue_with(x, &self.doc.settings.spectrum)?)
    }

    /// Oracle count, or `None` when the search space is out of bounds.
    fn oracle(&self, x: &F1Scheme, q: u64) -> Result<Option<String>, CliError> {
        match scheme_count_oracle_with(x, q, &self.oracle_options(), &self.doc.settings.spectrum) {
            Ok(n) => Ok(Some(n.to_string())),
            Err(OracleError::SearchSpaceExceeded { .. } | OracleError::TooManyGenerators { .. }) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    pub fn zeta(&self, name: &str) -> Result<SchemeReport, CliError> {
        let x = self.scheme(name)?;
        let points = self.points(x)?;
        let n = zeta_from_points(&points);
        let rows = points
            .iter()
            .map(|p| PointRow {
                members: p.members.iter().map(|m| x.describe_point(&m.point_ref())).collect(),
                rank: p.rank(),
                invariant_factors: p.stalk_units.invariant_factors().to_vec(),
                stalk: p.stalk_units.to_string(),
            })
            .collect();
        Ok(SchemeReport {
            scheme: x.name.clone(),
            polynomial: Polynomial {
                monomial: n.to_string(),
                shifted: n.shifted_string(),
                coefficients: n.coeffs_monomial().to_vec(),
                shifted_coefficients: n.coeffs_shifted(),
            },
            exponent: points_exponent(&points),
            euler_characteristic: n.euler_characteristic(),
            zeta: ZetaFactored::from_polynomial(&n).to_string(),
            betti: betti_from_polynomial(&n),
            points: rows,
            counts: None,
            verification: None,
        })
    }

    fn count_rows(&self, name: &str, qs: &[u64], report: &SchemeReport) -> Result<Vec<CountRow>, CliError> {
        let x = self.scheme(name)?;
        let points = self.points(x)?;
        let n = zeta_from_points(&points);
        qs.iter()
            .map(|&q| {
                if q < 2 {
                    return Err(CliError::Usage(format!("q = {q}: counts need q >= 2")));
                }
                Ok(CountRow {
                    q,
                    exact: count_from_points(&points, q).to_string(),
                    oracle: self.oracle(x, q)?,
                    polynomial: n.evaluate_u64(q).to_string(),
                    coprime: gcd(q - 1, report.exponent) == 1,
                })
            })
            .collect()
    }

    pub fn count(&self, name: &str, qs: &[u64]) -> Result<SchemeReport, CliError> {
        let mut report = self.zeta(name)?;
        report.counts = Some(self.count_rows(name, qs, &report)?);
        Ok(report)
    }

    /// Formula against oracle at every prime power up to `qmax`, and against
    /// `N(q)` where `gcd(q - 1, e) = 1`.
    pub fn verify(&self, name: &str, qmax: u64) -> Result<SchemeReport, CliError> {
        let mut report = self.zeta(name)?;
        let qs = prime_powers_up_to(qmax);
        let rows = self.count_rows(name, &qs, &report)?;
        let mut v = Verification {
            qmax,
            coprime: Vec::new(),
            excluded: Vec::new(),
            failures: Vec::new(),
            unchecked: Vec::new(),
            passed: false,
        };
        for row in &rows {
            if row.coprime {
                v.coprime.push(row.q);
                if row.exact != row.polynomial {
                    v.failures.push(format!(
                        "q = {}: #X(F_q) = {} but N(q) = {}",
                        row.q, row.exact, row.polynomial
                    ));
                }
            } else {
                v.excluded.push(row.q);
            }
            match &row.oracle {
                Some(o) if *o != row.exact => v.failures.push(format!(
                    "q = {}: formula gives {} but the oracle counts {o}",
                    row.q, row.exact
                )),
                Some(_) => {}
                None => v.unchecked.push(row.q),
            }
        }
        v.passed = v.failures.is_empty() && v.unchecked.is_empty();
        report.counts = Some(rows);
        report.verification = Some(v);
        Ok(report)
    }

    pub fn spec(&self, name: &str) -> Result<SpecReport, CliError> {
        let m = self
            .doc
            .monoid(name)
            .ok_or_else(|| CliError::semantic(name, "no such monoid"))?;
        let primes = m
            .chart
            .spectrum_with(&self.doc.settings.spectrum)?
            .into_iter()
            .map(|p| {
                let units = m.chart.stalk_units(&p)?;
                Ok(PrimeRow {
                    prime: m.chart.describe_prime(&p),
                    rank: units.rank(),
                    invariant_factors: units.invariant_factors().to_vec(),
                    stalk: units.to_string(),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(SpecReport {
            monoid: m.name.clone(),
            chart: m.chart.to_string(),
            presentation: m.presentation.to_string(),
            primes,
        })
    }

    pub fn k(&self, name: &str, cap: Option<usize>) -> Result<KReport, CliError> {
        let base = self.doc.finite_monoid(name)?;
        let cap = cap.unwrap_or(self.doc.settings.k0_cap);
        let gl_orders = (1..=GL_MAX_DIM)
            .map(|n| GlOrder {
                n,
                order: GeneralLinear::new(&base, n).order().to_string(),
            })
            .collect();
        let k_plus = (0..=K_PLUS_MAX)
            .map(|i| {
                k_plus(&base, i).map(|k| KPlusRow {
                    index: k.index,
                    group: k.group.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let k0 = k0_q_with(&base, &ProjectiveOptions::with_cap(cap))?;
        Ok(KReport {
            monoid: name.to_string(),
            order: base.size(),
            units: base.units().to_string(),
            gl_orders,
            k_plus,
            k0: K0Block {
                size_cap: cap,
                group: k0.group.to_string(),
                free_on_indecomposables: k0.free_on_indecomposables.to_string(),
                agree: k0.agree,
                indecomposables: k0
                    .inventory
                    .indecomposables
                    .iter()
                    .map(|p| describe(&p.module))
                    .collect(),
                objects: k0.objects,
                relations: k0.relations,
                exact_sequences: k0.exact_sequences,
                non_split_sequences: k0.non_split_sequences,
                truncated_pairs: k0.truncated_pairs,
                unique_decomposition: k0.inventory.unique_decomposition,
            },
        })
    }
}
