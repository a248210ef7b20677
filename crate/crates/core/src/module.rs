//! Finite pointed modules over a finite commutative monoid and the maps
//! between them: kernels, cokernels, pullbacks and strong exactness.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::KError;
use crate::monoid::FiniteMonoid;

/// Basepoint of every module.
pub const BASEPOINT: usize = 0;

/// A finite pointed set (basepoint `0`) with an action of `A` fixing the basepoint.
#[derive(Clone)]
pub struct PointedModule {
    base: Arc<FiniteMonoid>,
    size: usize,
    /// `action[a * size + x] = a . x`
    action: Vec<usize>,
    labels: Vec<String>,
}

impl PartialEq for PointedModule {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.action == other.action && same_base(&self.base, &other.base)
    }
}

impl Eq for PointedModule {}

impl fmt::Debug for PointedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointedModule")
            .field("size", &self.size)
            .field("labels", &self.labels)
            .finish()
    }
}

fn same_base(a: &Arc<FiniteMonoid>, b: &Arc<FiniteMonoid>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl PointedModule {
    /// Validates the module axioms exhaustively.
    pub fn new(
        base: Arc<FiniteMonoid>,
        size: usize,
        action: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, KError> {
        let n = base.size();
        if size == 0 || action.len() != n * size {
            return Err(KError::InvalidModule(format!(
                "action table of length {} for {} elements and carrier {}",
                action.len(),
                n,
                size
            )));
        }
        let labels = labels.unwrap_or_else(|| default_labels(size));
        if labels.len() != size {
            return Err(KError::InvalidModule("wrong number of labels".into()));
        }
        let m = Self {
            base,
            size,
            action,
            labels,
        };
        m.check_axioms()?;
        Ok(m)
    }

    fn check_axioms(&self) -> Result<(), KError> {
        let a = &self.base;
        if let Some(&bad) = self.action.iter().find(|&&y| y >= self.size) {
            return Err(KError::InvalidModule(format!("action value {bad} out of range")));
        }
        for x in 0..self.size {
            if self.act(a.identity(), x) != x {
                return Err(KError::InvalidModule(format!("1 . {x} != {x}")));
            }
        }
        for g in a.elements() {
            if self.act(g, BASEPOINT) != BASEPOINT {
                return Err(KError::InvalidModule(format!("{} moves the basepoint", a.name(g))));
            }
            for h in a.elements() {
                for x in 0..self.size {
                    if self.act(g, self.act(h, x)) != self.act(a.mul(g, h), x) {
                        return Err(KError::InvalidModule(format!(
                            "{} . ({} . {x}) != ({} {}) . {x}",
                            a.name(g),
                            a.name(h),
                            a.name(g),
                            a.name(h)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero(base: Arc<FiniteMonoid>) -> Self {
        let n = base.size();
        Self {
            base,
            size: 1,
            action: vec![BASEPOINT; n],
            labels: vec!["*".into()],
        }
    }

    pub fn base(&self) -> &Arc<FiniteMonoid> {
        &self.base
    }

    /// Carrier size, basepoint included.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.action[a * self.size + x]
    }

    pub fn same_base(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base)
    }

    /// Partition of the non-basepoint elements into wedge summands: the
    /// connected components of `x ~ a.x`. Components are sorted by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.size];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.size];
        for a in self.base.elements() {
            for x in 1..self.size {
                let y = self.act(a, x);
                if y != BASEPOINT && y != x {
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        let mut out = Vec::new();
        for start in 1..self.size {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.components().len() == 1
    }

    /// The submodule on `elements` (basepoint added), relabelled in
    /// ascending order, with its inclusion.
    pub fn submodule(&self, elements: &[usize]) -> Result<Morphism, KError> {
        let mut keep: Vec<usize> = elements.to_vec();
        keep.push(BASEPOINT);
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let size = keep.len();
        let mut action = Vec::with_capacity(self.base.size() * size);
        for a in self.base.elements() {
            for &x in &keep {
                let y = index[self.act(a, x)];
                if y == usize::MAX {
                    return Err(KError::InvalidModule("subset is not closed under the action".into()));
                }
                action.push(y);
            }
        }
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let sub = Self {
            base: self.base.clone(),
            size,
            action,
            labels,
        };
        Morphism::new(sub, self.clone(), keep)
    }

    /// Moves element `x` to position `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut action = vec![0; self.action.len()];
        let mut labels = vec![String::new(); self.size];
        for a in self.base.elements() {
            for x in 0..self.size {
                action[a * self.size + perm[x]] = perm[self.act(a, x)];
            }
        }
        for x in 0..self.size {
            labels[perm[x]] = self.labels[x].clone();
        }
        Self {
            base: self.base.clone(),
            size: self.size,
            action,
            labels,
        }
    }

    /// Per-element data preserved by isomorphisms.
    fn element_signature(&self, x: usize) -> (usize, Vec<(bool, bool)>) {
        let mut orbit: Vec<usize> = self.base.elements().map(|a| self.act(a, x)).collect();
        let pattern = self
            .base
            .elements()
            .map(|a| {
                let y = self.act(a, x);
                (y == BASEPOINT, y == x)
            })
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        (orbit.len(), pattern)
    }

    /// An isomorphism-invariant fingerprint used for bucketing.
    pub fn signature(&self) -> ModuleSignature {
        let mut elems: Vec<_> = (0..self.size).map(|x| self.element_signature(x)).collect();
        elems.sort();
        let mut comps: Vec<usize> = self.components().iter().map(Vec::len).collect();
        comps.sort_unstable();
        ModuleSignature {
            size: self.size,
            components: comps,
            elements: elems,
        }
    }
}

fn default_labels(size: usize) -> Vec<String> {
    std::iter::once("*".to_string())
        .chain((1..size).map(|i| i.to_string()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleSignature {
    size: usize,
    components: Vec<usize>,
    elements: Vec<(usize, Vec<(bool, bool)>)>,
}

/// `A^+` wedged `n` times, `A^+ = A` plus a new basepoint. An absorbing
/// element of `A` stays an ordinary element of `A^+`.
pub fn free_module(base: &Arc<FiniteMonoid>, n: usize) -> PointedModule {
    let a = base.as_ref();
    let per = a.size();
    let size = n * per + 1;
    let mut action = vec![BASEPOINT; per * size];
    let mut labels = vec!["*".to_string(); size];
    for c in 0..n {
        for x in a.elements() {
            let id = free_element(a, c, x);
            labels[id] = if n == 1 {
                a.name(x).to_string()
            } else {
                format!("{}_{c}", a.name(x))
            };
            for g in a.elements() {
                action[g * size + id] = free_element(a, c, a.mul(g, x));
            }
        }
    }
    PointedModule {
        base: base.clone(),
        size,
        action,
        labels,
    }
}

/// Element of `free_module(base, n)` standing for `x` in copy `c`.
pub fn free_element(base: &FiniteMonoid, c: usize, x: usize) -> usize {
    1 + c * base.size() + x
}

/// Coproduct identifying basepoints. Elements of `m` come first.
pub fn wedge(m: &PointedModule, n: &PointedModule) -> Result<PointedModule, KError> {
    if !m.same_base(n) {
        return Err(KError::BaseMismatch);
    }
    let size = m.size + n.size - 1;
    let shift = |y: usize| if y == BASEPOINT { BASEPOINT } else { y + m.size - 1 };
    let mut action = Vec::with_capacity(m.base.size() * size);
    for a in m.base.elements() {
        action.extend((0..m.size).map(|x| m.act(a, x)));
        action.extend((1..n.size).map(|x| shift(n.act(a, x))));
    }
    let labels = m
        .labels
        .iter()
        .cloned()
        .chain(n.labels[1..].iter().map(|l| format!("{l}'")))
        .collect();
    Ok(PointedModule {
        base: m.base.clone(),
        size,
        action,
        labels,
    })
}

/// Wedge of a list of modules (the zero module for an empty list).
pub fn wedge_all(base: &Arc<FiniteMonoid>, parts: &[PointedModule]) -> Result<PointedModule, KError> {
    parts
        .iter()
        .try_fold(PointedModule::zero(base.clone()), |acc, m| wedge(&acc, m))
}

/// Searches for an equivariant pointed bijection `m -> n`.
pub fn find_isomorphism(m: &PointedModule, n: &PointedModule) -> Result<Option<Vec<usize>>, KError> {
    if !m.same_base(n) {
        return Err(KError::BaseMismatch);
    }
    if m.size != n.size || m.signature() != n.signature() {
        return Ok(None);
    }
    let mut found = None;
    search_injective(m, n, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    Ok(found)
}

/// All injective morphisms `m -> n`, at most `limit` of them. The flag
/// reports whether the search was cut short.
pub fn injective_morphisms(
    m: &PointedModule,
    n: &PointedModule,
    limit: usize,
) -> Result<(Vec<Vec<usize>>, bool), KError> {
    if !m.same_base(n) {
        return Err(KError::BaseMismatch);
    }
    let mut out = Vec::new();
    let mut truncated = false;
    if m.size <= n.size {
        search_injective(m, n, &mut |map| {
            if out.len() == limit {
                truncated = true;
                return true;
            }
            out.push(map.to_vec());
            false
        });
    }
    Ok((out, truncated))
}

type ElementSig = (usize, Vec<(bool, bool)>);

/// Backtracking over injective equivariant maps. An injective module map
/// preserves each element's annihilator, stabilizer and orbit size, so
/// candidates are filtered by element signature. `visit` returns `true` to stop.
fn search_injective(m: &PointedModule, n: &PointedModule, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let sig_m: Vec<_> = (0..m.size).map(|x| m.element_signature(x)).collect();
    let sig_n: Vec<_> = (0..n.size).map(|x| n.element_signature(x)).collect();
    let mut map = vec![usize::MAX; m.size];
    let mut used = vec![false; n.size];
    map[BASEPOINT] = BASEPOINT;
    used[BASEPOINT] = true;
    let mut state = Search {
        m,
        n,
        sig_m: &sig_m,
        sig_n: &sig_n,
        map: &mut map,
        used: &mut used,
    };
    state.extend(visit);
}

struct Search<'a> {
    m: &'a PointedModule,
    n: &'a PointedModule,
    sig_m: &'a [ElementSig],
    sig_n: &'a [ElementSig],
    map: &'a mut [usize],
    used: &'a mut [bool],
}

impl Search<'_> {
    fn extend(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let Some(x) = (0..self.m.size).find(|&x| self.map[x] == usize::MAX) else {
            return visit(self.map);
        };
        for y in 0..self.n.size {
            if self.used[y] || self.sig_m[x] != self.sig_n[y] {
                continue;
            }
            let mut trail = Vec::new();
            let stop = self.assign(x, y, &mut trail) && self.extend(visit);
            for z in trail {
                self.used[self.map[z]] = false;
                self.map[z] = usize::MAX;
            }
            if stop {
                return true;
            }
        }
        false
    }

    /// Sets `map[x] = y` and propagates `map[a.x] = a.y`, recording new entries in `trail`.
    fn assign(&mut self, x: usize, y: usize, trail: &mut Vec<usize>) -> bool {
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            if self.map[x] != usize::MAX {
                if self.map[x] != y {
                    return false;
                }
                continue;
            }
            if self.used[y] || self.sig_m[x] != self.sig_n[y] {
                return false;
            }
            self.map[x] = y;
            self.used[y] = true;
            trail.push(x);
            for a in self.m.base.elements() {
                stack.push((self.m.act(a, x), self.n.act(a, y)));
            }
        }
        true
    }
}

pub fn is_isomorphic(m: &PointedModule, n: &PointedModule) -> Result<bool, KError> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// A basepoint-preserving equivariant map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: PointedModule,
    target: PointedModule,
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(source: PointedModule, target: PointedModule, map: Vec<usize>) -> Result<Self, KError> {
        if !source.same_base(&target) {
            return Err(KError::BaseMismatch);
        }
        if map.len() != source.size {
            return Err(KError::NotEquivariant(format!(
                "map has {} entries for a carrier of {}",
                map.len(),
                source.size
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.size) {
            return Err(KError::NotEquivariant(format!("image {y} out of range")));
        }
        if map[BASEPOINT] != BASEPOINT {
            return Err(KError::NotEquivariant("basepoint not preserved".into()));
        }
        for a in source.base.elements() {
            for x in 0..source.size {
                if map[source.act(a, x)] != target.act(a, map[x]) {
                    return Err(KError::NotEquivariant(format!(
                        "f({} . {}) != {} . f({})",
                        source.base.name(a),
                        source.labels[x],
                        source.base.name(a),
                        source.labels[x]
                    )));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(m: &PointedModule) -> Self {
        Self {
            source: m.clone(),
            target: m.clone(),
            map: (0..m.size).collect(),
        }
    }

    pub fn zero(source: &PointedModule, target: &PointedModule) -> Result<Self, KError> {
        Self::new(source.clone(), target.clone(), vec![BASEPOINT; source.size])
    }

    pub fn source(&self) -> &PointedModule {
        &self.source
    }

    pub fn target(&self) -> &PointedModule {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism, KError> {
        if self.target != next.source {
            return Err(KError::NotComposable("target and source differ".into()));
        }
        Ok(Morphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == BASEPOINT)
    }

    pub fn image_elements(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Inclusion of the preimage of the basepoint.
pub fn kernel(f: &Morphism) -> Morphism {
    let elems: Vec<usize> = (0..f.source.size).filter(|&x| f.map[x] == BASEPOINT).collect();
    f.source.submodule(&elems).expect("kernels are submodules")
}

/// Projection onto the quotient collapsing the image to the basepoint.
pub fn cokernel(f: &Morphism) -> Morphism {
    let p = &f.target;
    let mut in_image = vec![false; p.size];
    for &y in &f.map {
        in_image[y] = true;
    }
    let mut index = vec![BASEPOINT; p.size];
    let mut labels = vec!["*".to_string()];
    for y in 0..p.size {
        if !in_image[y] {
            index[y] = labels.len();
            labels.push(p.labels[y].clone());
        }
    }
    let size = labels.len();
    let mut action = vec![BASEPOINT; p.base.size() * size];
    for a in p.base.elements() {
        for y in (0..p.size).filter(|&y| !in_image[y]) {
            action[a * size + index[y]] = index[p.act(a, y)];
        }
    }
    let quotient = PointedModule {
        base: p.base.clone(),
        size,
        action,
        labels,
    };
    Morphism {
        source: p.clone(),
        target: quotient,
        map: index,
    }
}

/// Fiber product `M x_P N` with its two projections.
pub fn pullback(f: &Morphism, g: &Morphism) -> Result<(PointedModule, Morphism, Morphism), KError> {
    if !f.source.same_base(&g.source) {
        return Err(KError::BaseMismatch);
    }
    if f.target != g.target {
        return Err(KError::NotComposable("pullback legs have different targets".into()));
    }
    let mut pairs = vec![(BASEPOINT, BASEPOINT)];
    for x in 0..f.source.size {
        for y in 0..g.source.size {
            if (x, y) != (BASEPOINT, BASEPOINT) && f.map[x] == g.map[y] {
                pairs.push((x, y));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let size = pairs.len();
    let base = f.source.base.clone();
    let mut action = Vec::with_capacity(base.size() * size);
    for a in base.elements() {
        for &(x, y) in &pairs {
            action.push(index[&(f.source.act(a, x), g.source.act(a, y))]);
        }
    }
    let labels = pairs
        .iter()
        .map(|&(x, y)| {
            if (x, y) == (BASEPOINT, BASEPOINT) {
                "*".to_string()
            } else {
                format!("({},{})", f.source.labels[x], g.source.labels[y])
            }
        })
        .collect();
    let fiber = PointedModule {
        base,
        size,
        action,
        labels,
    };
    let p1 = Morphism::new(fiber.clone(), f.source.clone(), pairs.iter().map(|p| p.0).collect())?;
    let p2 = Morphism::new(fiber.clone(), g.source.clone(), pairs.iter().map(|p| p.1).collect())?;
    Ok((fiber, p1, p2))
}

/// `i` is a kernel of `j` and `j` a cokernel of `i`.
///
/// Checked against the canonical kernel and cokernel: `i` must be a
/// bijection onto `j^-1(*)`, and `j` must induce a bijection from the
/// quotient `Y / im(i)` onto `Z`.
pub fn strong_exact_check(i: &Morphism, j: &Morphism) -> Result<bool, KError> {
    if i.target != j.source {
        return Err(KError::NotComposable("middle objects differ".into()));
    }
    let ker = kernel(j);
    let kernel_ok = i.is_injective() && i.image_elements() == ker.image_elements();
    if !kernel_ok {
        return Ok(false);
    }
    let coker = cokernel(i);
    // j factors through the quotient; the induced map must be bijective.
    let mut induced = vec![usize::MAX; coker.target.size];
    for y in 0..j.source.size {
        let q = coker.map[y];
        if induced[q] != usize::MAX && induced[q] != j.map[y] {
            return Ok(false);
        }
        induced[q] = j.map[y];
    }
    let mut hit = vec![false; j.target.size];
    for &z in &induced {
        if hit[z] {
            return Ok(false);
        }
        hit[z] = true;
    }
    Ok(hit.into_iter().all(|h| h))
}

/// Canonical split sequence `X -> X ∨ Z -> Z`.
pub fn wedge_sequence(x: &PointedModule, z: &PointedModule) -> Result<(Morphism, Morphism), KError> {
    let y = wedge(x, z)?;
    let i = Morphism::new(x.clone(), y.clone(), (0..x.size).collect())?;
    let proj = (0..y.size)
        .map(|e| if e < x.size { BASEPOINT } else { e - x.size + 1 })
        .collect();
    let j = Morphism::new(y, z.clone(), proj)?;
    Ok((i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ia() -> Arc<FiniteMonoid> {
        Arc::new(FiniteMonoid::idempotent_pair())
    }

    #[test]
    fn free_modules() {
        let c3 = Arc::new(FiniteMonoid::cyclic_group(3));
        let f = free_module(&c3, 1);
        assert_eq!(f.size(), 4);
        assert_eq!(f.labels(), &["*", "1", "g", "g^2"]);
        assert!(free_module(&c3, 0).is_zero());
        assert_eq!(free_module(&ia(), 2).size(), 5);
        let d3 = Arc::new(FiniteMonoid::d_monoid(3));
        let f = free_module(&d3, 2);
        assert_eq!(f.size(), 7);
        assert_eq!(f.act(2, free_element(&d3, 1, 1)), free_element(&d3, 1, 2));
    }

    #[test]
    fn wedges_and_isos() {
        let a = ia();
        let plus = free_module(&a, 1);
        let zero = PointedModule::zero(a.clone());
        assert!(is_isomorphic(&wedge(&plus, &zero).unwrap(), &plus).unwrap());
        assert!(is_isomorphic(&wedge(&plus, &plus).unwrap(), &free_module(&a, 2)).unwrap());
        let aa = plus.submodule(&[2]).unwrap().source().clone();
        assert_eq!(aa.size(), 2);
        assert!(!is_isomorphic(&plus, &aa).unwrap());
        let other = Arc::new(FiniteMonoid::cyclic_group(2));
        assert_eq!(is_isomorphic(&plus, &free_module(&other, 1)), Err(KError::BaseMismatch));
    }

    #[test]
    fn iso_finds_permuted_copy() {
        let a = ia();
        let m = wedge(
            &free_module(&a, 1),
            &free_module(&a, 1).submodule(&[2]).unwrap().source().clone(),
        )
        .unwrap();
        let perm = vec![0, 3, 1, 2];
        let shuffled = m.relabel(&perm);
        let iso = find_isomorphism(&m, &shuffled).unwrap().unwrap();
        Morphism::new(m.clone(), shuffled.clone(), iso).unwrap();
    }

    #[test]
    fn injections_counted() {
        let t = Arc::new(FiniteMonoid::trivial());
        let x = free_module(&t, 2);
        let y = free_module(&t, 4);
        let (maps, truncated) = injective_morphisms(&x, &y, 1000).unwrap();
        assert_eq!(maps.len(), 12);
        assert!(!truncated);
        let (maps, truncated) = injective_morphisms(&x, &y, 5).unwrap();
        assert_eq!(maps.len(), 5);
        assert!(truncated);
        for map in maps {
            assert!(Morphism::new(x.clone(), y.clone(), map).unwrap().is_injective());
        }
    }

    #[test]
    fn module_axioms_checked() {
        let a = ia();
        // a moves the basepoint
        assert!(PointedModule::new(a.clone(), 2, vec![0, 1, 1, 1], None).is_err());
        assert!(PointedModule::new(a.clone(), 2, vec![0, 1, 0, 1], None).is_ok());
        assert!(PointedModule::new(a, 2, vec![0, 1, 0], None).is_err());
    }

    #[test]
    fn kernels_cokernels() {
        let plus = free_module(&ia(), 1);
        let id = Morphism::identity(&plus);
        assert!(kernel(&id).source().is_zero());
        assert!(cokernel(&id).target().is_zero());
        let z = Morphism::zero(&plus, &plus).unwrap();
        assert_eq!(kernel(&z).source().size(), 3);
        assert_eq!(cokernel(&z).target().size(), 3);
        assert!(matches!(
            Morphism::new(plus.clone(), plus.clone(), vec![0, 2, 1]),
            Err(KError::NotEquivariant(_))
        ));
    }

    #[test]
    fn pullback_along_identities() {
        let plus = free_module(&ia(), 1);
        let id = Morphism::identity(&plus);
        let (p, _, _) = pullback(&id, &id).unwrap();
        assert!(is_isomorphic(&p, &plus).unwrap());
    }

    #[test]
    fn wedge_sequences_are_exact() {
        let a = ia();
        let plus = free_module(&a, 1);
        let small = plus.submodule(&[2]).unwrap().source().clone();
        for (x, z) in [(&plus, &small), (&small, &plus), (&plus, &plus)] {
            let (i, j) = wedge_sequence(x, z).unwrap();
            assert!(strong_exact_check(&i, &j).unwrap());
        }
    }

    #[test]
    fn components_split_wedges() {
        let a = ia();
        let m = wedge(&free_module(&a, 1), &free_module(&a, 1)).unwrap();
        assert_eq!(m.components(), vec![vec![1, 2], vec![3, 4]]);
        assert!(free_module(&a, 1).is_indecomposable());
    }
}
