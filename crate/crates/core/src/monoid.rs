//! Commutative monoids: presentations, finite Cayley tables and split descriptors.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{finite_group_invariants, FgAbelianGroup};
use crate::error::MonoidError;

/// Exponent vector over the generator list of a [`Presentation`].
pub type Word = Vec<u32>;

/// Generators and relations of a commutative monoid, optionally with an
/// adjoined absorbing element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<(Word, Word)>,
    pub has_zero: bool,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<(Word, Word)>, has_zero: bool) -> Result<Self, MonoidError> {
        let n = generators.len();
        if let Some((l, r)) = relations.iter().find(|(l, r)| l.len() != n || r.len() != n) {
            return Err(MonoidError::BadPresentation(format!(
                "relation sides of length {} and {} for {} generators",
                l.len(),
                r.len(),
                n
            )));
        }
        let distinct: BTreeSet<&String> = generators.iter().collect();
        if distinct.len() != n {
            return Err(MonoidError::BadPresentation("duplicate generator name".into()));
        }
        Ok(Self {
            generators,
            relations,
            has_zero,
        })
    }

    /// The free commutative monoid on `names`.
    pub fn free(names: &[&str]) -> Self {
        Self {
            generators: names.iter().map(|s| s.to_string()).collect(),
            relations: Vec::new(),
            has_zero: false,
        }
    }

    pub fn unit_word(&self) -> Word {
        vec![0; self.generators.len()]
    }

    /// Exponent vector with a single generator raised to `power`.
    pub fn gen_word(&self, index: usize, power: u32) -> Word {
        let mut w = self.unit_word();
        w[index] = power;
        w
    }

    pub fn format_word(&self, w: &[u32]) -> String {
        format_word(&self.generators, w)
    }
}

pub(crate) fn format_word(names: &[String], w: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(w)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.generators.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|(l, r)| format!("{} = {}", self.format_word(l), self.format_word(r)))
                .collect();
            write!(f, " | {}", rels.join(", "))?;
        }
        write!(f, ">")?;
        if self.has_zero {
            write!(f, " + 0")?;
        }
        Ok(())
    }
}

/// A law violated by a candidate Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    Shape { rows: usize, expected: usize },
    OutOfRange { x: usize, y: usize, value: usize },
    Identity { x: usize },
    Commutativity { x: usize, y: usize },
    Associativity { x: usize, y: usize, z: usize },
    AbsorbingZero { x: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { rows, expected } => {
                write!(f, "table has {rows} entries where {expected} are needed")
            }
            Violation::OutOfRange { x, y, value } => write!(f, "{x}*{y} = {value} is out of range"),
            Violation::Identity { x } => write!(f, "identity law fails at {x}"),
            Violation::Commutativity { x, y } => write!(f, "{x}*{y} != {y}*{x}"),
            Violation::Associativity { x, y, z } => write!(f, "({x}*{y})*{z} != {x}*({y}*{z})"),
            Violation::AbsorbingZero { x } => write!(f, "zero does not absorb {x}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

/// A finite commutative monoid given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteMonoid {
    size: usize,
    cayley: Vec<usize>,
    identity: usize,
    zero: Option<usize>,
    element_names: Vec<String>,
}

impl FiniteMonoid {
    /// Builds and validates a monoid from a square table. The absorbing
    /// element, if any (and distinct from the identity), is detected.
    pub fn from_table(table: &[Vec<usize>], identity: usize, names: Option<Vec<String>>) -> Result<Self, MonoidError> {
        let size = table.len();
        if let Some(row) = table.iter().find(|r| r.len() != size) {
            return Err(MonoidError::InvalidTable(format!(
                "row of length {} in a {size}x{size} table",
                row.len()
            )));
        }
        if identity >= size {
            return Err(MonoidError::InvalidTable(format!("identity {identity} out of range")));
        }
        let names = match names {
            Some(n) if n.len() != size => {
                return Err(MonoidError::InvalidTable("wrong number of element names".into()))
            }
            Some(n) => n,
            None => (0..size).map(|i| format!("e{i}")).collect(),
        };
        let m = Self::from_parts_unchecked(table.concat(), size, identity, None, names);
        let report = verify_monoid(&m);
        if !report.is_valid() {
            return Err(MonoidError::InvalidTable(report.to_string()));
        }
        Ok(m.with_detected_zero())
    }

    /// Assembles a monoid without checking any law; see [`verify_monoid`].
    pub fn from_parts_unchecked(
        cayley: Vec<usize>,
        size: usize,
        identity: usize,
        zero: Option<usize>,
        element_names: Vec<String>,
    ) -> Self {
        Self {
            size,
            cayley,
            identity,
            zero,
            element_names,
        }
    }

    pub(crate) fn with_detected_zero(mut self) -> Self {
        self.zero = (0..self.size).find(|&z| z != self.identity && (0..self.size).all(|x| self.mul(z, x) == z));
        self
    }

    /// The one-element monoid, i.e. the coordinate monoid of spec F1.
    pub fn trivial() -> Self {
        Self::from_parts_unchecked(vec![0], 1, 0, None, vec!["1".into()])
    }

    /// The cyclic group `C_n` with elements `g^0 .. g^(n-1)`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let cayley = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
        Self::from_parts_unchecked(cayley, n, 0, None, power_names("g", n))
    }

    /// `D_k = C_(k-1) ∪ {0}`; the zero is the last element.
    pub fn d_monoid(k: usize) -> Self {
        assert!(k >= 2, "D_k needs k >= 2");
        let n = k - 1;
        let mut cayley = vec![n; k * k];
        for i in 0..n {
            for j in 0..n {
                cayley[i * k + j] = (i + j) % n;
            }
        }
        let mut names = power_names("g", n);
        names.push("0".into());
        Self::from_parts_unchecked(cayley, k, 0, Some(n), names)
    }

    /// `{1, a}` with `a^2 = a`.
    pub fn idempotent_pair() -> Self {
        Self::from_parts_unchecked(vec![0, 1, 1, 1], 2, 0, Some(1), vec!["1".into(), "a".into()])
    }

    pub fn direct_product(&self, other: &Self) -> Self {
        let (n, m) = (self.size, other.size);
        let mut cayley = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                cayley.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.element_names[x / m], other.element_names[x % m]))
            .collect();
        Self::from_parts_unchecked(cayley, n * m, self.identity * m + other.identity, None, names).with_detected_zero()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn has_zero(&self) -> bool {
        self.zero.is_some()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.element_names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cayley[x * self.size + y]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.size.max(1)).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_group(&self) -> bool {
        self.unit_elements().len() == self.size
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.elements().find(|&y| self.mul(x, y) == self.identity)
    }

    pub fn unit_elements(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.inverse(x).is_some()).collect()
    }

    pub fn units(&self) -> FgAbelianGroup {
        units(self)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        idempotents(self)
    }

    /// Product of all idempotents: the identity of the minimal ideal.
    pub fn minimal_idempotent(&self) -> usize {
        self.minimal_idempotent_of(&self.elements().collect::<Vec<_>>())
    }

    fn minimal_idempotent_of(&self, elements: &[usize]) -> usize {
        elements
            .iter()
            .filter(|&&x| self.mul(x, x) == x)
            .fold(self.identity, |acc, &e| self.mul(acc, e))
    }

    /// Quotient group of the submonoid formed by `elements` (which must
    /// contain the identity and be closed under multiplication).
    pub fn completion_of_submonoid(&self, elements: &[usize]) -> FgAbelianGroup {
        let e = self.minimal_idempotent_of(elements);
        let group: BTreeSet<usize> = elements.iter().map(|&x| self.mul(e, x)).collect();
        let group: Vec<usize> = group.into_iter().collect();
        finite_group_invariants(&group, e, |x, y| self.mul(x, y))
    }

    pub fn group_completion(&self) -> FgAbelianGroup {
        group_completion_finite(self)
    }

    /// Evaluates an exponent vector over `gens` (element ids) in this monoid.
    pub fn eval(&self, gens: &[usize], word: &[u32]) -> usize {
        let mut acc = self.identity;
        for (&g, &e) in gens.iter().zip(word) {
            for _ in 0..e {
                acc = self.mul(acc, g);
            }
        }
        acc
    }

    /// A complete presentation: a greedy generating set (lowest ids first)
    /// and one relation `word(x)*g = word(x*g)` per element and generator.
    /// Returns the presentation, the generator ids, and each element's word.
    pub fn presentation(&self) -> (Presentation, Vec<usize>, Vec<Word>) {
        let mut gens: Vec<usize> = Vec::new();
        let mut reached: BTreeSet<usize> = BTreeSet::from([self.identity]);
        while reached.len() < self.size {
            let g = self.elements().find(|x| !reached.contains(x)).unwrap();
            gens.push(g);
            reached = self.closure(&gens);
        }
        let words = self.shortest_words(&gens);
        let names: Vec<String> = gens.iter().map(|&g| sanitize(&self.element_names[g], g)).collect();
        let mut relations = Vec::new();
        for x in self.elements() {
            for (gi, &g) in gens.iter().enumerate() {
                let mut lhs = words[x].clone();
                lhs[gi] += 1;
                let rhs = words[self.mul(x, g)].clone();
                if lhs != rhs && !relations.contains(&(lhs.clone(), rhs.clone())) {
                    relations.push((lhs, rhs));
                }
            }
        }
        let p = Presentation {
            generators: names,
            relations,
            has_zero: false,
        };
        (p, gens, words)
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    fn shortest_words(&self, gens: &[usize]) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.size];
        words[self.identity] = Some(vec![0; gens.len()]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w[gi] += 1;
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generating set")).collect()
    }
}

fn sanitize(name: &str, index: usize) -> String {
    let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        name.to_string()
    } else {
        format!("e{index}")
    }
}

fn power_names(base: &str, n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => base.to_string(),
            _ => format!("{base}^{i}"),
        })
        .collect()
}

/// Checks every monoid law exhaustively and reports all witnesses.
pub fn verify_monoid(m: &FiniteMonoid) -> ValidationReport {
    let n = m.size;
    let mut violations = Vec::new();
    if m.cayley.len() != n * n || m.identity >= n.max(1) {
        violations.push(Violation::Shape {
            rows: m.cayley.len(),
            expected: n * n,
        });
        return ValidationReport { violations };
    }
    for x in 0..n {
        for y in 0..n {
            let value = m.mul(x, y);
            if value >= n {
                violations.push(Violation::OutOfRange { x, y, value });
            }
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    for x in 0..n {
        if m.mul(m.identity, x) != x || m.mul(x, m.identity) != x {
            violations.push(Violation::Identity { x });
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if m.mul(x, y) != m.mul(y, x) {
                violations.push(Violation::Commutativity { x, y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = m.mul(x, y);
            for z in 0..n {
                if m.mul(xy, z) != m.mul(x, m.mul(y, z)) {
                    violations.push(Violation::Associativity { x, y, z });
                }
            }
        }
    }
    if let Some(z) = m.zero {
        for x in 0..n {
            if z >= n || m.mul(z, x) != z || m.mul(x, z) != z {
                violations.push(Violation::AbsorbingZero { x });
            }
        }
    }
    ValidationReport { violations }
}

/// Group of invertible elements, in invariant-factor form.
pub fn units(m: &FiniteMonoid) -> FgAbelianGroup {
    finite_group_invariants(&m.unit_elements(), m.identity, |x, y| m.mul(x, y))
}

/// All `x` with `x * x = x`, ascending.
pub fn idempotents(m: &FiniteMonoid) -> Vec<usize> {
    m.elements().filter(|&x| m.mul(x, x) == x).collect()
}

/// `Quot(m)`, realized as the group `e * m` for the minimal idempotent `e`.
pub fn group_completion_finite(m: &FiniteMonoid) -> FgAbelianGroup {
    m.completion_of_submonoid(&m.elements().collect::<Vec<_>>())
}

/// `Z^free_rank x N^cone_rank x T`, optionally with an absorbing zero adjoined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitMonoid {
    free_rank: u32,
    cone_rank: u32,
    torsion: Vec<u64>,
    has_zero: bool,
}

impl SplitMonoid {
    pub fn new(free_rank: u32, cone_rank: u32, torsion: Vec<u64>, has_zero: bool) -> Result<Self, MonoidError> {
        FgAbelianGroup::new(0, torsion.clone())?;
        Ok(Self {
            free_rank,
            cone_rank,
            torsion,
            has_zero,
        })
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn cone_rank(&self) -> u32 {
        self.cone_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn has_zero(&self) -> bool {
        self.has_zero
    }

    pub fn torsion_group(&self) -> FgAbelianGroup {
        FgAbelianGroup::new(0, self.torsion.clone()).expect("validated at construction")
    }

    /// Number of elements when finite (`free_rank = cone_rank = 0`).
    pub fn finite_size(&self) -> Option<usize> {
        (self.free_rank == 0 && self.cone_rank == 0)
            .then(|| self.torsion.iter().product::<u64>() as usize + usize::from(self.has_zero))
    }
}

impl fmt::Display for SplitMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(u64::to_string).collect();
        write!(
            f,
            "split(free={}, cone={}, torsion=[{}], zero={})",
            self.free_rank,
            self.cone_rank,
            t.join(","),
            self.has_zero
        )
    }
}

/// Generator layout of [`presentation_of`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGenerators {
    /// `(u_i, u_i^-1)` pairs, one per free coordinate.
    pub free: Vec<(usize, usize)>,
    /// One generator per cone coordinate.
    pub cone: Vec<usize>,
    /// One generator per torsion factor.
    pub torsion: Vec<usize>,
    pub zero: Option<usize>,
}

/// A presentation of the split monoid: each free coordinate becomes
/// `u, u'` with `u*u' = 1`, each torsion factor `Z/d` a generator with
/// `g^d = 1`, and the zero an explicit generator `z` with `z*x = z` for
/// every generator `x` and `z^2 = z`.
pub fn presentation_of(s: &SplitMonoid) -> Presentation {
    presentation_with_layout(s).0
}

pub fn presentation_with_layout(s: &SplitMonoid) -> (Presentation, SplitGenerators) {
    let mut names = Vec::new();
    let mut layout = SplitGenerators {
        free: Vec::new(),
        cone: Vec::new(),
        torsion: Vec::new(),
        zero: None,
    };
    for i in 0..s.free_rank {
        layout.free.push((names.len(), names.len() + 1));
        names.push(format!("u{i}"));
        names.push(format!("u{i}inv"));
    }
    for j in 0..s.cone_rank {
        layout.cone.push(names.len());
        names.push(format!("x{j}"));
    }
    for i in 0..s.torsion.len() {
        layout.torsion.push(names.len());
        names.push(format!("t{i}"));
    }
    if s.has_zero {
        layout.zero = Some(names.len());
        names.push("z".into());
    }
    let n = names.len();
    let unit = vec![0u32; n];
    let single = |i: usize, e: u32| {
        let mut w = vec![0u32; n];
        w[i] = e;
        w
    };
    let mut relations = Vec::new();
    for &(u, v) in &layout.free {
        let mut w = single(u, 1);
        w[v] = 1;
        relations.push((w, unit.clone()));
    }
    for (&g, &d) in layout.torsion.iter().zip(&s.torsion) {
        relations.push((single(g, d as u32), unit.clone()));
    }
    if let Some(z) = layout.zero {
        for x in 0..n {
            if x != z {
                let mut w = single(z, 1);
                w[x] = 1;
                relations.push((w, single(z, 1)));
            }
        }
        relations.push((single(z, 2), single(z, 1)));
    }
    let p = Presentation {
        generators: names,
        relations,
        has_zero: false,
    };
    (p, layout)
}

/// Isomorphism test for small finite monoids by backtracking over bijections
/// that fix the identity. Intended for tests and validation.
pub fn monoids_isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
    if a.size != b.size || a.has_zero() != b.has_zero() {
        return false;
    }
    let sig = |m: &FiniteMonoid, x: usize| {
        let mut order = 1usize;
        let mut y = x;
        let mut seen = HashMap::from([(x, 0usize)]);
        loop {
            y = m.mul(y, x);
            if seen.contains_key(&y) {
                break;
            }
            seen.insert(y, order);
            order += 1;
        }
        (order, m.mul(x, x) == x, m.inverse(x).is_some())
    };
    let sa: Vec<_> = a.elements().map(|x| sig(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| sig(b, x)).collect();
    let mut map = vec![usize::MAX; a.size];
    let mut used = vec![false; b.size];
    map[a.identity] = b.identity;
    used[b.identity] = true;
    fn go(
        a: &FiniteMonoid,
        b: &FiniteMonoid,
        sa: &[(usize, bool, bool)],
        sb: &[(usize, bool, bool)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == a.size {
            return (0..a.size).all(|x| (0..a.size).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
        }
        if map[next] != usize::MAX {
            return go(a, b, sa, sb, map, used, next + 1);
        }
        for c in 0..b.size {
            if used[c] || sa[next] != sb[c] {
                continue;
            }
            map[next] = c;
            used[c] = true;
            let consistent = (0..next).all(|x| {
                let p = a.mul(x, next);
                p > next || map[p] == usize::MAX || map[p] == b.mul(map[x], c)
            });
            if consistent && go(a, b, sa, sb, map, used, next + 1) {
                return true;
            }
            map[next] = usize::MAX;
            used[c] = false;
        }
        false
    }
    go(a, b, &sa, &sb, &mut map, &mut used, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_are_valid() {
        for m in [
            FiniteMonoid::trivial(),
            FiniteMonoid::cyclic_group(6),
            FiniteMonoid::d_monoid(5),
            FiniteMonoid::d_monoid(2),
            FiniteMonoid::idempotent_pair(),
            FiniteMonoid::cyclic_group(2).direct_product(&FiniteMonoid::cyclic_group(4)),
        ] {
            assert!(verify_monoid(&m).is_valid(), "{m:?}");
        }
    }

    #[test]
    fn verify_flags_associativity() {
        let c2 = FiniteMonoid::cyclic_group(2);
        assert!(verify_monoid(&c2).is_valid());
        // {1, a, b} with a*a = b, a*b = a, b*b = a: (a*a)*b = a but a*(a*b) = b.
        let bad = FiniteMonoid::from_parts_unchecked(
            vec![0, 1, 2, 1, 2, 1, 2, 1, 1],
            3,
            0,
            None,
            vec!["1".into(), "a".into(), "b".into()],
        );
        let report = verify_monoid(&bad);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Associativity { .. })));
        assert!(report
            .violations
            .contains(&Violation::Associativity { x: 1, y: 1, z: 2 }));
    }

    #[test]
    fn verify_flags_commutativity_and_zero() {
        let bad = FiniteMonoid::from_parts_unchecked(
            vec![0, 1, 2, 1, 1, 1, 2, 2, 2],
            3,
            0,
            Some(1),
            vec!["1".into(), "a".into(), "b".into()],
        );
        let report = verify_monoid(&bad);
        assert!(report.violations.contains(&Violation::Commutativity { x: 1, y: 2 }));
        assert!(report.violations.contains(&Violation::AbsorbingZero { x: 2 }));
    }

    #[test]
    fn from_table_detects_zero() {
        let m = FiniteMonoid::from_table(&[vec![0, 1], vec![1, 1]], 0, None).unwrap();
        assert_eq!(m.zero(), Some(1));
        assert!(FiniteMonoid::from_table(&[vec![0, 1], vec![0, 1]], 0, None).is_err());
        assert_eq!(FiniteMonoid::trivial().zero(), None);
    }

    #[test]
    fn units_examples() {
        assert_eq!(FiniteMonoid::d_monoid(7).units(), FgAbelianGroup::cyclic(6));
        assert!(FiniteMonoid::idempotent_pair().units().is_trivial());
        let g = FiniteMonoid::cyclic_group(2).direct_product(&FiniteMonoid::cyclic_group(4));
        assert_eq!(g.units().invariant_factors(), &[2, 4]);
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(FiniteMonoid::idempotent_pair().idempotents(), vec![0, 1]);
        assert_eq!(FiniteMonoid::cyclic_group(3).idempotents(), vec![0]);
        let d5 = FiniteMonoid::d_monoid(5);
        assert_eq!(d5.idempotents(), vec![0, 4]);
        assert_eq!(d5.name(4), "0");
    }

    #[test]
    fn completion_examples() {
        assert!(FiniteMonoid::idempotent_pair().group_completion().is_trivial());
        assert_eq!(
            FiniteMonoid::cyclic_group(6).group_completion(),
            FgAbelianGroup::cyclic(6)
        );
        for k in 2..=10 {
            assert!(FiniteMonoid::d_monoid(k).group_completion().is_trivial());
        }
    }

    #[test]
    fn split_presentations() {
        let p = presentation_of(&SplitMonoid::new(1, 0, vec![], false).unwrap());
        assert_eq!(p.generators, vec!["u0", "u0inv"]);
        assert_eq!(p.relations, vec![(vec![1, 1], vec![0, 0])]);
        let p = presentation_of(&SplitMonoid::new(0, 2, vec![], false).unwrap());
        assert_eq!(p.generators.len(), 2);
        assert!(p.relations.is_empty());
        let p = presentation_of(&SplitMonoid::new(0, 0, vec![3], true).unwrap());
        assert_eq!(p.to_string(), "<t0, z | t0^3 = 1, t0*z = z, z^2 = z>");
        assert!(SplitMonoid::new(0, 0, vec![4, 6], false).is_err());
    }

    #[test]
    fn finite_presentation_is_complete() {
        let d5 = FiniteMonoid::d_monoid(5);
        let (p, gens, words) = d5.presentation();
        assert_eq!(gens, vec![1, 4]);
        assert_eq!(p.generators, vec!["g", "e4"]);
        for x in d5.elements() {
            assert_eq!(d5.eval(&gens, &words[x]), x);
        }
    }

    #[test]
    fn isomorphism_of_small_monoids() {
        let a = FiniteMonoid::d_monoid(2);
        let b = FiniteMonoid::idempotent_pair();
        assert!(monoids_isomorphic(&a, &b));
        let c4 = FiniteMonoid::cyclic_group(4);
        let klein = FiniteMonoid::cyclic_group(2).direct_product(&FiniteMonoid::cyclic_group(2));
        assert!(!monoids_isomorphic(&c4, &klein));
        assert!(monoids_isomorphic(&c4, &c4));
    }
}
