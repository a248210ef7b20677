//! Projective pointed modules (retracts of free modules) and the
//! Grothendieck group of the split exact structure on them.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::thread;

use crate::abelian::{group_from_presentation, FgAbelianGroup};
use crate::error::KError;
use crate::matrix::IntMatrix;
use crate::module::{
    cokernel, find_isomorphism, free_element, free_module, injective_morphisms, is_isomorphic, strong_exact_check,
    wedge, wedge_all, ModuleSignature, Morphism, PointedModule, BASEPOINT,
};
use crate::monoid::FiniteMonoid;

pub const DEFAULT_SIZE_CAP: usize = 12;
/// Free ranks `n` with `|F_n|^n` above this are not scanned exhaustively.
pub const DEFAULT_SCAN_BUDGET: u128 = 1 << 16;
/// Largest middle object searched for exact sequences in [`k0_q`].
pub const DEFAULT_EXACT_CAP: usize = 7;
/// Injections examined per pair of objects in [`k0_q`].
pub const DEFAULT_INJECTION_LIMIT: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectiveOptions {
    pub size_cap: usize,
    pub scan_budget: u128,
    pub exact_cap: usize,
    pub injection_limit: usize,
}

impl Default for ProjectiveOptions {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
            scan_budget: DEFAULT_SCAN_BUDGET,
            exact_cap: DEFAULT_EXACT_CAP,
            injection_limit: DEFAULT_INJECTION_LIMIT,
        }
    }
}

impl ProjectiveOptions {
    pub fn with_cap(size_cap: usize) -> Self {
        Self {
            size_cap,
            ..Self::default()
        }
    }
}

/// An idempotent endomorphism of `free_module(A, rank)`, given as a map on
/// its carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    pub rank: usize,
    pub map: Vec<usize>,
}

impl Idempotent {
    pub fn free(&self, base: &Arc<FiniteMonoid>) -> PointedModule {
        free_module(base, self.rank)
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.iter().all(|&y| self.map[y] == y)
    }

    pub fn as_morphism(&self, base: &Arc<FiniteMonoid>) -> Result<Morphism, KError> {
        let f = self.free(base);
        Morphism::new(f.clone(), f, self.map.clone())
    }

    /// The retract cut out by the idempotent.
    pub fn image(&self, base: &Arc<FiniteMonoid>) -> PointedModule {
        let f = self.free(base);
        let img: Vec<usize> = self.map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        f.submodule(&img).expect("images are submodules").source().clone()
    }
}

/// Every idempotent endomorphism of `free_module(A, n)`, by exhaustive
/// search over the images of the `n` generators.
pub fn idempotent_endomorphisms(base: &Arc<FiniteMonoid>, n: usize) -> Vec<Idempotent> {
    let f = free_module(base, n);
    let size = f.size();
    let a = base.as_ref();
    let build = |gens: &[usize]| -> Vec<usize> {
        let mut map = vec![BASEPOINT; size];
        for (c, &v) in gens.iter().enumerate() {
            for x in a.elements() {
                map[free_element(a, c, x)] = f.act(x, v);
            }
        }
        map
    };
    // phi(v_c) = v_c on generator images is equivalent to idempotence
    let fixes = |gens: &[usize]| {
        gens.iter().all(|&v| {
            if v == BASEPOINT {
                return true;
            }
            let (c, x) = ((v - 1) / a.size(), (v - 1) % a.size());
            f.act(x, gens[c]) == v
        })
    };
    if n == 0 {
        return vec![Idempotent {
            rank: 0,
            map: vec![BASEPOINT],
        }];
    }
    let scan = |first: usize| {
        let mut out = Vec::new();
        let mut gens = vec![0; n];
        gens[0] = first;
        loop {
            if fixes(&gens) {
                out.push(Idempotent {
                    rank: n,
                    map: build(&gens),
                });
            }
            let mut c = n - 1;
            loop {
                if c == 0 {
                    return out;
                }
                gens[c] += 1;
                if gens[c] < size {
                    break;
                }
                gens[c] = 0;
                c -= 1;
            }
        }
    };
    let threads = thread::available_parallelism().map_or(1, |p| p.get()).min(size);
    let space = (size as u128).pow(n as u32);
    if threads <= 1 || space < 4096 {
        return (0..size).flat_map(scan).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let scan = &scan;
                s.spawn(move || (t..size).step_by(threads).map(|v| (v, scan(v))).collect::<Vec<_>>())
            })
            .collect();
        let mut parts: Vec<(usize, Vec<Idempotent>)> = handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan thread panicked"))
            .collect();
        parts.sort_by_key(|p| p.0);
        parts.into_iter().flat_map(|p| p.1).collect()
    })
}

#[derive(Debug, Clone)]
pub struct Projective {
    pub module: PointedModule,
    /// Multiplicity of each indecomposable class in the wedge decomposition.
    pub summands: Vec<usize>,
    pub witness: Idempotent,
}

impl Projective {
    pub fn size(&self) -> usize {
        self.module.size()
    }
}

/// Projectives over `A` up to isomorphism with carrier at most the cap.
#[derive(Debug, Clone)]
pub struct ProjectiveInventory {
    pub base: Arc<FiniteMonoid>,
    pub size_cap: usize,
    /// Nonzero indecomposable classes, ordered by carrier size.
    pub indecomposables: Vec<Projective>,
    /// All wedges of indecomposables within the cap, the zero module first.
    pub projectives: Vec<Projective>,
    /// No two distinct multisets of indecomposables gave isomorphic wedges.
    pub unique_decomposition: bool,
    /// Free ranks whose idempotents were scanned exhaustively.
    pub scanned_ranks: Vec<usize>,
    /// Indecomposables first met above rank 1.
    pub found_above_rank_one: usize,
}

impl ProjectiveInventory {
    /// Index of the indecomposable isomorphic to `m`.
    pub fn indecomposable_index(&self, m: &PointedModule) -> Option<usize> {
        find_in(self.indecomposables.iter().map(|p| &p.module), m)
    }

    /// Multiplicities of indecomposable summands of `m`, if every summand is
    /// a known indecomposable.
    pub fn classify(&self, m: &PointedModule) -> Option<Vec<usize>> {
        let mut counts = vec![0; self.indecomposables.len()];
        for comp in m.components() {
            let part = m.submodule(&comp).ok()?.source().clone();
            counts[self.indecomposable_index(&part)?] += 1;
        }
        Some(counts)
    }

    /// Index of the listed projective isomorphic to `m`.
    pub fn find(&self, m: &PointedModule) -> Option<usize> {
        if self.unique_decomposition {
            let counts = self.classify(m)?;
            return self.projectives.iter().position(|p| p.summands == counts);
        }
        find_in(self.projectives.iter().map(|p| &p.module), m)
    }
}

fn find_in<'a>(mut candidates: impl Iterator<Item = &'a PointedModule>, m: &PointedModule) -> Option<usize> {
    candidates.position(|c| matches!(find_isomorphism(c, m), Ok(Some(_))))
}

struct ClassRegistry {
    classes: Vec<(PointedModule, Idempotent)>,
    buckets: HashMap<ModuleSignature, Vec<usize>>,
}

impl ClassRegistry {
    fn lookup(&self, m: &PointedModule) -> Option<usize> {
        self.buckets
            .get(&m.signature())?
            .iter()
            .copied()
            .find(|&i| matches!(find_isomorphism(&self.classes[i].0, m), Ok(Some(_))))
    }

    fn insert(&mut self, m: PointedModule, witness: Idempotent) -> bool {
        if self.lookup(&m).is_some() {
            return false;
        }
        self.buckets.entry(m.signature()).or_default().push(self.classes.len());
        self.classes.push((m, witness));
        true
    }
}

/// Enumerates projectives as retracts of free modules.
///
/// Every idempotent of `F_n` is found by exhaustive scan for each rank
/// whose search space `|F_n|^n` fits the budget (rank 1 always). The
/// wedge summands of the images give the indecomposable classes, each
/// with an idempotent on `F_n` projecting onto it. Projectives are then
/// all wedges of indecomposables within the size cap, witnessed by
/// block sums of those idempotents.
pub fn enumerate_projectives(base: &FiniteMonoid, size_cap: usize) -> Result<ProjectiveInventory, KError> {
    enumerate_projectives_with(base, &ProjectiveOptions::with_cap(size_cap))
}

pub fn enumerate_projectives_with(
    base: &FiniteMonoid,
    opts: &ProjectiveOptions,
) -> Result<ProjectiveInventory, KError> {
    let base = Arc::new(base.clone());
    let cap = opts.size_cap;
    if base.size() + 1 > cap {
        return Err(KError::CapExceeded {
            size: base.size() + 1,
            cap,
        });
    }
    let mut registry = ClassRegistry {
        classes: Vec::new(),
        buckets: HashMap::new(),
    };
    let mut scanned_ranks = Vec::new();
    let mut found_above_rank_one = 0;
    for n in 1.. {
        let size = (n * base.size() + 1) as u128;
        if n > 1 && size.checked_pow(n as u32).is_none_or(|s| s > opts.scan_budget) {
            break;
        }
        scanned_ranks.push(n);
        for e in idempotent_endomorphisms(&base, n) {
            let f = e.free(&base);
            let img_elems: Vec<usize> = e.map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
            let img = f.submodule(&img_elems)?;
            for comp in img.source().components() {
                let members: BTreeSet<usize> = comp.iter().map(|&x| img.apply(x)).collect();
                if members.len() + 1 > cap {
                    continue;
                }
                let part = f
                    .submodule(&members.iter().copied().collect::<Vec<_>>())?
                    .source()
                    .clone();
                let projection = e
                    .map
                    .iter()
                    .map(|y| if members.contains(y) { *y } else { BASEPOINT })
                    .collect();
                let witness = Idempotent {
                    rank: n,
                    map: projection,
                };
                if registry.insert(part, witness) && n > 1 {
                    found_above_rank_one += 1;
                }
            }
        }
    }
    let mut classes = registry.classes;
    classes.sort_by(|x, y| {
        x.0.size()
            .cmp(&y.0.size())
            .then_with(|| x.0.signature().cmp(&y.0.signature()))
    });
    let k = classes.len();
    let indecomposables: Vec<Projective> = classes
        .iter()
        .enumerate()
        .map(|(i, (m, w))| {
            let mut summands = vec![0; k];
            summands[i] = 1;
            Projective {
                module: m.clone(),
                summands,
                witness: w.clone(),
            }
        })
        .collect();

    let mut projectives: Vec<Projective> = Vec::new();
    let mut buckets: HashMap<ModuleSignature, Vec<usize>> = HashMap::new();
    let mut unique = true;
    let mut stack = vec![(0usize, Vec::<usize>::new(), 1usize)];
    let mut multisets = Vec::new();
    while let Some((from, chosen, size)) = stack.pop() {
        multisets.push(chosen.clone());
        for (i, ind) in indecomposables.iter().enumerate().skip(from) {
            let next = size + ind.size() - 1;
            if next <= cap {
                let mut c = chosen.clone();
                c.push(i);
                stack.push((i, c, next));
            }
        }
    }
    multisets.sort_by(|x, y| {
        let sx: usize = x.iter().map(|&i| indecomposables[i].size() - 1).sum();
        let sy: usize = y.iter().map(|&i| indecomposables[i].size() - 1).sum();
        sx.cmp(&sy).then_with(|| x.cmp(y))
    });
    for chosen in multisets {
        let parts: Vec<PointedModule> = chosen.iter().map(|&i| indecomposables[i].module.clone()).collect();
        let module = wedge_all(&base, &parts)?;
        let mut summands = vec![0; k];
        for &i in &chosen {
            summands[i] += 1;
        }
        let sig = module.signature();
        let bucket = buckets.entry(sig).or_default();
        if bucket
            .iter()
            .any(|&j| matches!(find_isomorphism(&projectives[j].module, &module), Ok(Some(_))))
        {
            unique = false;
            continue;
        }
        bucket.push(projectives.len());
        let witness = block_sum(&base, chosen.iter().map(|&i| &indecomposables[i].witness));
        projectives.push(Projective {
            module,
            summands,
            witness,
        });
    }
    Ok(ProjectiveInventory {
        base,
        size_cap: cap,
        indecomposables,
        projectives,
        unique_decomposition: unique,
        scanned_ranks,
        found_above_rank_one,
    })
}

/// Block-diagonal idempotent on the free module of summed rank.
fn block_sum<'a>(base: &FiniteMonoid, blocks: impl Iterator<Item = &'a Idempotent>) -> Idempotent {
    let per = base.size();
    let mut rank = 0;
    let mut map = vec![BASEPOINT];
    for b in blocks {
        let shift = |y: usize| if y == BASEPOINT { BASEPOINT } else { y + rank * per };
        map.extend(b.map[1..].iter().map(|&y| shift(y)));
        rank += b.rank;
    }
    Idempotent { rank, map }
}

/// Grothendieck group of projectives with relations from wedges and
/// strong exact sequences.
#[derive(Debug, Clone)]
pub struct K0Result {
    /// Cokernel of the relation matrix.
    pub group: FgAbelianGroup,
    /// Free abelian group on the indecomposable classes.
    pub free_on_indecomposables: FgAbelianGroup,
    pub agree: bool,
    pub generator_labels: Vec<String>,
    pub objects: usize,
    pub relations: usize,
    pub exact_sequences: usize,
    pub non_split_sequences: usize,
    /// Pairs whose injections were not all examined.
    pub truncated_pairs: usize,
    pub inventory: ProjectiveInventory,
}

impl K0Result {
    /// Class of `m` in the basis of indecomposables.
    pub fn class_of(&self, m: &PointedModule) -> Option<Vec<i64>> {
        self.inventory
            .classify(m)
            .map(|c| c.into_iter().map(|x| x as i64).collect())
    }
}

pub fn k0_q(base: &FiniteMonoid, size_cap: usize) -> Result<K0Result, KError> {
    k0_q_with(base, &ProjectiveOptions::with_cap(size_cap))
}

pub fn k0_q_with(base: &FiniteMonoid, opts: &ProjectiveOptions) -> Result<K0Result, KError> {
    let inv = enumerate_projectives_with(base, opts)?;
    let objs = &inv.projectives;
    let cols = objs.len();
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    let relation = |y: usize, x: usize, z: usize| {
        let mut r = vec![0i64; cols];
        r[y] += 1;
        r[x] -= 1;
        r[z] -= 1;
        r
    };
    for i in 0..cols {
        for j in i..cols {
            if objs[i].size() + objs[j].size() - 1 > inv.size_cap {
                continue;
            }
            let w = wedge(&objs[i].module, &objs[j].module)?;
            let idx = inv.find(&w).expect("wedges within the cap are listed");
            rows.insert(relation(idx, i, j));
        }
    }
    let mut exact = 0;
    let mut non_split = 0;
    let mut truncated_pairs = 0;
    for (y, oy) in objs.iter().enumerate().filter(|(_, o)| o.size() <= opts.exact_cap) {
        for (x, ox) in objs
            .iter()
            .enumerate()
            .filter(|(_, o)| o.size() <= oy.size() && o.size() > 1)
        {
            let (maps, truncated) = injective_morphisms(&ox.module, &oy.module, opts.injection_limit)?;
            truncated_pairs += usize::from(truncated);
            let mut seen_images = BTreeSet::new();
            for map in maps {
                let mut img = map.clone();
                img.sort_unstable();
                if !seen_images.insert(img) {
                    continue;
                }
                let i = Morphism::new(ox.module.clone(), oy.module.clone(), map)?;
                let j = cokernel(&i);
                let Some(z) = inv.find(j.target()) else {
                    continue;
                };
                if !strong_exact_check(&i, &j)? {
                    continue;
                }
                exact += 1;
                if !is_isomorphic(&oy.module, &wedge(&ox.module, j.target())?)? {
                    non_split += 1;
                }
                rows.insert(relation(y, x, z));
            }
        }
    }
    let rows: Vec<Vec<i64>> = rows.into_iter().collect();
    let matrix = IntMatrix::with_shape(rows.len(), cols, &rows);
    let group = group_from_presentation(&matrix).map_err(|e| KError::InvalidModule(e.to_string()))?;
    let free = FgAbelianGroup::free(inv.indecomposables.len() as u32);
    let generator_labels = inv.indecomposables.iter().map(|p| describe(&p.module)).collect();
    Ok(K0Result {
        agree: group == free,
        group,
        free_on_indecomposables: free,
        generator_labels,
        objects: cols,
        relations: rows.len(),
        exact_sequences: exact,
        non_split_sequences: non_split,
        truncated_pairs,
        inventory: inv,
    })
}

/// `{*, 1, a}`-style carrier listing.
pub fn describe(m: &PointedModule) -> String {
    format!("{{{}}}", m.labels().join(", "))
}
