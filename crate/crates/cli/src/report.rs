//! Report types shared by the text and JSON outputs.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Everything a command prints. JSON carries a `kind` tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Output {
    Zeta(SchemeReport),
    Count(SchemeReport),
    Verify(SchemeReport),
    Spec(SpecReport),
    K(KReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    /// Monomial basis, e.g. `x^2 + x + 1`.
    pub monomial: String,
    /// Basis of powers of `x - 1`, e.g. `3 + 3(x-1) + (x-1)^2`.
    pub shifted: String,
    pub coefficients: Vec<i64>,
    pub shifted_coefficients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRow {
    /// Chart points making up this point, canonical member first.
    pub members: Vec<String>,
    pub rank: u32,
    pub invariant_factors: Vec<u64>,
    pub stalk: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub q: u64,
    /// `#X(F_q)`, decimal.
    pub exact: String,
    /// Brute-force count, absent when outside the search bounds.
    pub oracle: Option<String>,
    /// `N(q)`, decimal.
    pub polynomial: String,
    pub coprime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub qmax: u64,
    pub coprime: Vec<u64>,
    pub excluded: Vec<u64>,
    pub failures: Vec<String>,
    /// Prime powers whose oracle count did not fit the search bounds.
    pub unchecked: Vec<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeReport {
    pub scheme: String,
    pub polynomial: Polynomial,
    pub exponent: u64,
    pub euler_characteristic: i64,
    pub zeta: String,
    pub betti: Vec<i64>,
    pub points: Vec<PointRow>,
    pub counts: Option<Vec<CountRow>>,
    pub verification: Option<Verification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub prime: String,
    pub rank: u32,
    pub invariant_factors: Vec<u64>,
    pub stalk: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecReport {
    pub monoid: String,
    pub chart: String,
    pub presentation: String,
    pub primes: Vec<PrimeRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlOrder {
    pub n: usize,
    pub order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPlusRow {
    pub index: u32,
    pub group: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K0Block {
    pub size_cap: usize,
    pub group: String,
    pub free_on_indecomposables: String,
    pub agree: bool,
    pub indecomposables: Vec<String>,
    pub objects: usize,
    pub relations: usize,
    pub exact_sequences: usize,
    pub non_split_sequences: usize,
    pub truncated_pairs: usize,
    pub unique_decomposition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KReport {
    pub monoid: String,
    pub order: usize,
    pub units: String,
    pub gl_orders: Vec<GlOrder>,
    pub k_plus: Vec<KPlusRow>,
    pub k0: K0Block,
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "  {}", line(header.to_vec()));
    for row in rows {
        let _ = writeln!(out, "  {}", line(row.iter().map(String::as_str).collect()));
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for SchemeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "scheme {}", self.scheme);
        let _ = writeln!(s, "N(x) = {}", self.polynomial.monomial);
        let _ = writeln!(s, "     = {}", self.polynomial.shifted);
        let _ = writeln!(s, "exponent e = {}", self.exponent);
        let _ = writeln!(s, "chi = {}", self.euler_characteristic);
        let _ = writeln!(s, "zeta = {}", self.zeta);
        let _ = writeln!(s, "betti = [{}]", list(&self.betti));
        let _ = writeln!(s, "points ({}):", self.points.len());
        let rows: Vec<Vec<String>> = self
            .points
            .iter()
            .map(|p| vec![p.members.join(" = "), p.rank.to_string(), p.stalk.clone()])
            .collect();
        table(&mut s, &["point", "rank", "units"], &rows);
        if let Some(counts) = &self.counts {
            let _ = writeln!(s, "counts:");
            let rows: Vec<Vec<String>> = counts
                .iter()
                .map(|c| {
                    vec![
                        c.q.to_string(),
                        c.exact.clone(),
                        c.oracle.clone().unwrap_or_else(|| "-".into()),
                        c.polynomial.clone(),
                        if c.coprime { "yes" } else { "no" }.into(),
                    ]
                })
                .collect();
            table(&mut s, &["q", "exact", "oracle", "N(q)", "coprime"], &rows);
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(
                s,
                "prime powers q <= {} with gcd(q-1, {}) = 1: [{}]",
                v.qmax,
                self.exponent,
                list(&v.coprime)
            );
            let _ = writeln!(s, "excluded by coprimality: [{}]", list(&v.excluded));
            if !v.unchecked.is_empty() {
                let _ = writeln!(s, "oracle out of bounds at: [{}]", list(&v.unchecked));
            }
            for failure in &v.failures {
                let _ = writeln!(s, "FAILED: {failure}");
            }
            let _ = writeln!(s, "verification {}", if v.passed { "passed" } else { "failed" });
        }
        f.write_str(s.trim_end())
    }
}

impl fmt::Display for SpecReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "monoid {} = {}", self.monoid, self.chart);
        let _ = writeln!(s, "presentation {}", self.presentation);
        let _ = writeln!(s, "primes ({}):", self.primes.len());
        let rows: Vec<Vec<String>> = self
            .primes
            .iter()
            .map(|p| vec![p.prime.clone(), p.rank.to_string(), p.stalk.clone()])
            .collect();
        table(&mut s, &["prime", "rank", "units"], &rows);
        f.write_str(s.trim_end())
    }
}

impl fmt::Display for KReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = writeln!(s, "monoid {} (order {}, units {})", self.monoid, self.order, self.units);
        let _ = writeln!(s, "GL_n orders:");
        let rows: Vec<Vec<String>> = self
            .gl_orders
            .iter()
            .map(|g| vec![g.n.to_string(), g.order.clone()])
            .collect();
        table(&mut s, &["n", "|GL_n|"], &rows);
        let _ = writeln!(s, "K+ groups:");
        let rows: Vec<Vec<String>> = self
            .k_plus
            .iter()
            .map(|k| vec![k.index.to_string(), k.group.clone()])
            .collect();
        table(&mut s, &["i", "K_i"], &rows);
        let k0 = &self.k0;
        let _ = writeln!(s, "K0 of projectives up to size {}: {}", k0.size_cap, k0.group);
        let _ = writeln!(s, "  indecomposables: {}", k0.indecomposables.join("  "));
        let _ = writeln!(
            s,
            "  free on indecomposables: {} ({})",
            k0.free_on_indecomposables,
            if k0.agree { "agrees" } else { "differs" }
        );
        let _ = writeln!(
            s,
            "  {} objects, {} relations, {} exact sequences ({} non-split), {} truncated pairs",
            k0.objects, k0.relations, k0.exact_sequences, k0.non_split_sequences, k0.truncated_pairs
        );
        let _ = writeln!(s, "  unique decomposition: {}", k0.unique_decomposition);
        f.write_str(s.trim_end())
    }
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Zeta(r) | Output::Count(r) | Output::Verify(r) => r.fmt(f),
            Output::Spec(r) => r.fmt(f),
            Output::K(r) => r.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::Context;

    fn context(file: &str) -> Context {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../corpus")
            .join(file);
        Context {
            doc: f1_core::load(&std::fs::read_to_string(path).unwrap()).unwrap(),
            threads: 2,
        }
    }

    fn round_trip(o: Output) {
        let json = serde_json::to_string(&o).unwrap();
        let back: Output = serde_json::from_str(&json).unwrap();
        assert_eq!(back, o);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn json_round_trips() {
        let zoo = context("zoo.f1");
        round_trip(Output::Zeta(zoo.zeta("P2").unwrap()));
        round_trip(Output::Count(zoo.count("Mu6", &[2, 7, 13]).unwrap()));
        round_trip(Output::Verify(zoo.verify("D5", 16).unwrap()));
        round_trip(Output::Spec(context("monoids.f1").spec("Two").unwrap()));
        round_trip(Output::K(context("ktheory.f1").k("C3", Some(8)).unwrap()));
    }

    #[test]
    fn text_mirrors_fields() {
        let r = context("glued.f1").count("P2", &[4]).unwrap();
        let text = r.to_string();
        assert!(text.contains("N(x) = x^2 + x + 1"));
        assert!(text.contains("     = 3 + 3(x-1) + (x-1)^2"));
        assert_eq!(r.polynomial.shifted_coefficients, vec![3, 3, 1]);
        assert_eq!(r.counts.unwrap()[0].exact, "21");
    }
}
