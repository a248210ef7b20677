//! Brute-force point counts: monoid homomorphisms into `D_k = C_(k-1) ∪ {0}`
//! enumerated one assignment at a time, with no spectral theory.

use std::collections::HashSet;
use std::thread;

use num_bigint::BigUint;

use crate::error::OracleError;
use crate::monoid::{presentation_with_layout, Presentation, Word};
use crate::scheme::{glue_with, F1Scheme, PointRef};
use crate::spectrum::{MonoidChart, PrimeIdeal, SpectrumLimits};

pub const MAX_ORACLE_GENERATORS: usize = 8;
pub const DEFAULT_SEARCH_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub threads: usize,
    pub search_limit: u128,
    pub max_generators: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            search_limit: DEFAULT_SEARCH_LIMIT,
            max_generators: MAX_ORACLE_GENERATORS,
        }
    }
}

/// Elements of `D_k` are `0..k-1` (exponents of a generator of `C_(k-1)`)
/// and `k-1` for zero.
#[derive(Debug, Clone, Copy)]
struct Dk {
    k: u64,
}

impl Dk {
    fn zero(self) -> u64 {
        self.k - 1
    }

    fn mul(self, x: u64, y: u64) -> u64 {
        if x == self.zero() || y == self.zero() {
            self.zero()
        } else {
            (x + y) % (self.k - 1)
        }
    }

    fn eval(self, values: &[u64], word: &[u32]) -> u64 {
        let mut acc = 0;
        for (&v, &e) in values.iter().zip(word) {
            if e == 0 {
                continue;
            }
            if v == self.zero() {
                return self.zero();
            }
            acc = (acc + v * u64::from(e)) % (self.k - 1);
        }
        acc
    }
}

/// Number of assignments the oracle examines.
pub fn search_space(p: &Presentation, k: u64) -> u128 {
    let slots = p.generators.len() + usize::from(p.has_zero);
    u128::from(k).checked_pow(slots as u32).unwrap_or(u128::MAX)
}

fn check_bounds(p: &Presentation, k: u64, opts: &OracleOptions) -> Result<(), OracleError> {
    if k < 2 {
        return Err(OracleError::BadTarget(k));
    }
    if p.generators.len() > opts.max_generators {
        return Err(OracleError::TooManyGenerators {
            gens: p.generators.len(),
            bound: opts.max_generators,
        });
    }
    let space = search_space(p, k);
    if space > opts.search_limit {
        return Err(OracleError::SearchSpaceExceeded {
            space,
            limit: opts.search_limit,
        });
    }
    Ok(())
}

/// `values` holds generator images, then the image of the adjoined zero if any.
fn is_hom(p: &Presentation, d: Dk, values: &[u64]) -> bool {
    let n = p.generators.len();
    let gens = &values[..n];
    if p.has_zero {
        let w = values[n];
        if d.mul(w, w) != w || gens.iter().any(|&g| d.mul(w, g) != w) {
            return false;
        }
    }
    p.relations.iter().all(|(l, r)| d.eval(gens, l) == d.eval(gens, r))
}

/// Visits every homomorphism, partitioned by the image of the first slot.
fn for_each_hom<T: Send>(
    p: &Presentation,
    k: u64,
    opts: &OracleOptions,
    init: impl Fn() -> T + Sync,
    visit: impl Fn(&mut T, &[u64]) + Sync,
) -> Result<Vec<T>, OracleError> {
    check_bounds(p, k, opts)?;
    let slots = p.generators.len() + usize::from(p.has_zero);
    let d = Dk { k };
    let run = |first: u64, acc: &mut T| {
        let mut values = vec![0u64; slots];
        if slots == 0 {
            if is_hom(p, d, &values) {
                visit(acc, &values);
            }
            return;
        }
        values[0] = first;
        loop {
            if is_hom(p, d, &values) {
                visit(acc, &values);
            }
            let mut i = slots - 1;
            loop {
                if i == 0 {
                    return;
                }
                values[i] += 1;
                if values[i] < k {
                    break;
                }
                values[i] = 0;
                i -= 1;
            }
        }
    };
    let firsts: Vec<u64> = if slots == 0 { vec![0] } else { (0..k).collect() };
    let threads = opts.threads.clamp(1, firsts.len());
    if threads == 1 {
        let mut acc = init();
        for &f in &firsts {
            run(f, &mut acc);
        }
        return Ok(vec![acc]);
    }
    Ok(thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let (run, init, firsts) = (&run, &init, &firsts);
                s.spawn(move || {
                    let mut acc = init();
                    for &f in firsts.iter().skip(t).step_by(threads) {
                        run(f, &mut acc);
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle thread panicked"))
            .collect()
    }))
}

/// `#Hom(A, D_k)` for the monoid presented by `p`, by exhaustive search.
pub fn hom_count_oracle(p: &Presentation, k: u64) -> Result<u64, OracleError> {
    hom_count_oracle_with(p, k, &OracleOptions::default())
}

pub fn hom_count_oracle_with(p: &Presentation, k: u64, opts: &OracleOptions) -> Result<u64, OracleError> {
    let parts = for_each_hom(p, k, opts, || 0u64, |n, _| *n += 1)?;
    Ok(parts.into_iter().sum())
}

type PrimeOf = Box<dyn Fn(&[u64], u64) -> PrimeIdeal + Sync>;

/// A chart's presentation with a rule reading off the prime `phi^-1(0)`
/// from generator images.
struct ChartProbe {
    presentation: Presentation,
    prime_of: PrimeOf,
}

fn probe(chart: &MonoidChart) -> ChartProbe {
    match chart {
        MonoidChart::Finite(m) => {
            let (presentation, _, words) = m.presentation();
            let words: Vec<Word> = words;
            let prime_of = move |values: &[u64], k: u64| {
                let d = Dk { k };
                let bits = words
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| d.eval(values, w) == d.zero())
                    .fold(0u32, |acc, (x, _)| acc | 1 << x);
                PrimeIdeal::Finite(bits)
            };
            ChartProbe {
                presentation,
                prime_of: Box::new(prime_of),
            }
        }
        MonoidChart::Split(s) => {
            let (presentation, layout) = presentation_with_layout(s);
            let prime_of = move |values: &[u64], k: u64| {
                let zero = k - 1;
                let cone = layout
                    .cone
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| values[g] == zero)
                    .fold(0u32, |acc, (j, _)| acc | 1 << j);
                PrimeIdeal::Split {
                    cone,
                    zero: layout.zero.is_some_and(|z| values[z] == zero),
                }
            };
            ChartProbe {
                presentation,
                prime_of: Box::new(prime_of),
            }
        }
    }
}

/// `#X(D_q)` by enumerating homomorphisms from every chart; each point is
/// counted once, in the chart holding the canonical member of its class.
pub fn scheme_count_oracle(x: &F1Scheme, q: u64) -> Result<BigUint, OracleError> {
    scheme_count_oracle_with(x, q, &OracleOptions::default(), &SpectrumLimits::default())
}

pub fn scheme_count_oracle_with(
    x: &F1Scheme,
    q: u64,
    opts: &OracleOptions,
    limits: &SpectrumLimits,
) -> Result<BigUint, OracleError> {
    let points = glue_with(x, limits)?;
    let canonical: HashSet<PointRef> = points.iter().map(|p| p.representative().point_ref()).collect();
    let probes: Vec<ChartProbe> = x.charts.iter().map(probe).collect();
    for pr in &probes {
        check_bounds(&pr.presentation, q, opts)?;
    }
    let mut total = BigUint::from(0u32);
    for (chart, pr) in probes.iter().enumerate() {
        let parts = for_each_hom(
            &pr.presentation,
            q,
            opts,
            || 0u64,
            |n, values| {
                let prime = (pr.prime_of)(values, q);
                if canonical.contains(&PointRef::new(chart, prime)) {
                    *n += 1;
                }
            },
        )?;
        total += parts.into_iter().sum::<u64>();
    }
    Ok(total)
}

/// Search space of the largest chart presentation.
pub fn scheme_search_space(x: &F1Scheme, q: u64) -> u128 {
    x.charts
        .iter()
        .map(|c| search_space(&probe(c).presentation, q))
        .max()
        .unwrap_or(1)
}
