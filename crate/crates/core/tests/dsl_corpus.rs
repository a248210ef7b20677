use std::fs;
use std::path::PathBuf;

use f1_core::oracle::{hom_count_oracle_with, search_space, OracleOptions};
use f1_core::{exact_count, load, parse, zeta_polynomial, F1Scheme};

fn corpus() -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "f1"))
        .collect();
    files.sort();
    assert!(files.len() >= 4);
    files
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect()
}

#[test]
fn corpus_round_trips() {
    for (path, text) in corpus() {
        let ast = parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let printed = ast.to_string();
        assert_eq!(parse(&printed).unwrap(), ast, "{}", path.display());
    }
}

#[test]
fn corpus_resolves() {
    for (path, text) in corpus() {
        load(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    }
}

#[test]
fn oracle_matches_spectral_formula_on_corpus_monoids() {
    let opts = OracleOptions {
        threads: 4,
        ..OracleOptions::default()
    };
    let mut checked = 0;
    for (_, text) in corpus() {
        let doc = load(&text).unwrap();
        for m in &doc.monoids {
            let x = F1Scheme::affine(&m.name, m.chart.clone());
            for k in 2..=32u64 {
                if search_space(&m.presentation, k) > opts.search_limit {
                    continue;
                }
                let brute = hom_count_oracle_with(&m.presentation, k, &opts).unwrap();
                assert_eq!(exact_count(&x, k).unwrap(), brute.into(), "{} k={k}", m.name);
                checked += 1;
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn glued_schemes_match_builders() {
    let text = fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/glued.f1")).unwrap();
    let doc = load(&text).unwrap();
    for (name, expected) in [
        ("P1", "x + 1"),
        ("P2", "x^2 + x + 1"),
        ("Bubble", "3"),
        ("Joined", "x^2 + 1"),
    ] {
        let n = zeta_polynomial(doc.scheme(name).unwrap()).unwrap();
        assert_eq!(n.to_string(), expected, "{name}");
    }
}
