//! Finite commutative B1-algebras, their congruences and quotients.
//!
//! An algebra is a finite module with a commutative, associative, unital
//! multiplication that distributes over the sum and is absorbed by 0. Zero
//! sits at index 0 and the unit at index 1, and `0 != 1`.

use std::collections::BTreeMap;

use crate::canon::{self, Structure, Table};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::lattice::{flatten, FinModule};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinAlgebra {
    module: FinModule,
    mul: Vec<usize>,
}

/// Validates a raw pair of tables as an algebra.
pub fn validate_algebra(names: Vec<String>, sum: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<FinAlgebra> {
    if sum.is_empty() {
        return Err(Error::Empty);
    }
    let sum = flatten(sum)?;
    let mul = flatten(mul)?;
    FinAlgebra::from_flat(names, sum, mul)
}

impl FinAlgebra {
    pub fn from_flat(names: Vec<String>, sum: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        let module = FinModule::from_flat(names, sum)?;
        Self::from_module(module, mul)
    }

    pub fn from_module(module: FinModule, mul: Vec<usize>) -> Result<Self> {
        let n = module.size();
        if n < 2 {
            return Err(Error::ZeroEqualsOne);
        }
        if mul.len() != n * n {
            return Err(Error::NotSquare {
                row: mul.len() / n,
                expected: n,
                found: mul.len() % n,
            });
        }
        if let Some(i) = mul.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange {
                row: i / n,
                col: i % n,
                value: mul[i],
            });
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        let s = |a: usize, b: usize| module.sum(a, b);
        if let Some(a) = (0..n).find(|&a| m(1, a) != a || m(a, 1) != a) {
            return Err(Error::NoUnit(a));
        }
        for a in 0..n {
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(Error::MulNotCommutative(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::MulNotAssociative(a, b, c));
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| m(0, a) != 0) {
            return Err(Error::ZeroNotAbsorbing(a));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(a, s(b, c)) != s(m(a, b), m(a, c)) {
                        return Err(Error::NotDistributiveLaw(a, b, c));
                    }
                }
            }
        }
        Ok(FinAlgebra { module, mul })
    }

    /// B1 itself.
    pub fn b1() -> Self {
        FinAlgebra {
            module: FinModule::b1(),
            mul: vec![0, 0, 0, 1],
        }
    }

    pub fn size(&self) -> usize {
        self.module.size()
    }

    pub fn module(&self) -> &FinModule {
        &self.module
    }

    pub fn names(&self) -> &[String] {
        self.module.names()
    }

    pub fn name(&self, i: usize) -> &str {
        self.module.name(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.module.index_of(name)
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.module.sum(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.module.leq(a, b)
    }

    pub fn sum_table(&self) -> &[usize] {
        self.module.sum_table()
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn with_names(self, names: Vec<String>) -> Result<Self> {
        Ok(FinAlgebra {
            module: self.module.with_names(names)?,
            mul: self.mul,
        })
    }

    /// The subalgebra generated by `gens` together with 0 and 1.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.size();
        let mut inside = vec![false; n];
        let mut members = vec![0, 1];
        inside[0] = true;
        inside[1] = true;
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            for j in 0..=i {
                let (x, y) = (members[i], members[j]);
                for z in [self.sum(x, y), self.mul(x, y)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_generated_by(&self, a: usize) -> bool {
        self.generated_by(&[a]).len() == self.size()
    }

    /// Relabels so that new index `i` holds old element `order[i]`;
    /// `order` must start with 0 and 1.
    pub fn permuted(&self, order: &[usize]) -> Result<FinAlgebra> {
        let n = self.size();
        if order.len() != n || order[0] != 0 || order[1] != 1 {
            return Err(Error::NotBijective);
        }
        let module = self.module.permuted(order)?;
        let mut inv = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            inv[old] = new;
        }
        let mul = (0..n * n).map(|i| inv[self.mul(order[i / n], order[i % n])]).collect();
        Ok(FinAlgebra { module, mul })
    }

    fn initial_colors(&self, marked: Option<usize>) -> Vec<usize> {
        (0..self.size())
            .map(|x| {
                let base = match x {
                    0 => 0,
                    1 => 1,
                    _ => 2,
                };
                2 * base + usize::from(marked == Some(x))
            })
            .collect()
    }

    /// Canonical code under isomorphisms fixing 0 and 1 (and the marked
    /// element, when given), together with the canonical arrangement.
    pub fn canonical_form(&self, marked: Option<usize>) -> (Vec<usize>, Vec<usize>) {
        let tables = [Table::Op(self.sum_table()), Table::Op(&self.mul)];
        let s = Structure {
            n: self.size(),
            tables: &tables,
        };
        canon::canonical_form(&s, &self.initial_colors(marked))
    }

    /// The algebra in canonical labelling and the new index of `marked`.
    pub fn canonical(&self, marked: Option<usize>) -> (Vec<usize>, FinAlgebra, Option<usize>) {
        let (code, order) = self.canonical_form(marked);
        let alg = self.permuted(&order).expect("canonical arrangement fixes 0 and 1");
        let new_mark = marked.map(|m| order.iter().position(|&o| o == m).unwrap());
        (code, alg, new_mark)
    }
}

/// An isomorphism `A -> B` fixing 0 and 1 and sending `a` to `b`, found by
/// backtracking over bijections pruned by refined row-signature invariants.
pub fn find_isomorphism(a: &FinAlgebra, mark_a: Option<usize>, b: &FinAlgebra, mark_b: Option<usize>) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let ta = [Table::Op(a.sum_table()), Table::Op(a.mul_table())];
    let tb = [Table::Op(b.sum_table()), Table::Op(b.mul_table())];
    let sa = Structure { n: a.size(), tables: &ta };
    let sb = Structure { n: b.size(), tables: &tb };
    canon::find_isomorphism(&sa, &a.initial_colors(mark_a), &sb, &b.initial_colors(mark_b))
}

pub fn marked_isomorphic(a: &FinAlgebra, x: usize, b: &FinAlgebra, y: usize) -> bool {
    find_isomorphism(a, Some(x), b, Some(y)).is_some()
}

pub fn isomorphic(a: &FinAlgebra, b: &FinAlgebra) -> bool {
    find_isomorphism(a, None, b, None).is_some()
}

/// A map of algebras preserving `+`, `·`, 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: FinAlgebra,
    pub target: FinAlgebra,
    pub map: Vec<usize>,
}

impl AlgebraMorphism {
    pub fn new(source: FinAlgebra, target: FinAlgebra, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() || map.iter().any(|&v| v >= target.size()) {
            return Err(Error::NotMorphism("map is not a total map into the target".into()));
        }
        if !is_algebra_morphism(&source, &target, &map) {
            return Err(Error::NotMorphism("operations are not preserved".into()));
        }
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if other.target != self.source {
            return Err(Error::NotMorphism("codomain and domain differ".into()));
        }
        Ok(AlgebraMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        })
    }
}

pub fn is_algebra_morphism(source: &FinAlgebra, target: &FinAlgebra, map: &[usize]) -> bool {
    let n = source.size();
    map[0] == 0
        && map[1] == 1
        && (0..n).all(|a| {
            (0..n).all(|b| {
                map[source.sum(a, b)] == target.sum(map[a], map[b])
                    && map[source.mul(a, b)] == target.mul(map[a], map[b])
            })
        })
}

/// Every algebra morphism `source -> target`, by backtracking over images
/// in index order; a partial map is rejected as soon as a sum or product of
/// mapped elements is mapped inconsistently.
pub fn algebra_morphisms(source: &FinAlgebra, target: &FinAlgebra) -> Vec<Vec<usize>> {
    let n = source.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    map[1] = 1;
    if !partial_ok(source, target, &map, 1) {
        return out;
    }
    hom_search(source, target, 2, &mut map, &mut out);
    out
}

fn partial_ok(source: &FinAlgebra, target: &FinAlgebra, map: &[usize], x: usize) -> bool {
    (0..=x).all(|a| {
        (0..=x).all(|b| {
            let s = source.sum(a, b);
            let p = source.mul(a, b);
            let touches = a == x || b == x;
            let ok_s = s > x || !(touches || s == x) || map[s] == target.sum(map[a], map[b]);
            let ok_p = p > x || !(touches || p == x) || map[p] == target.mul(map[a], map[b]);
            ok_s && ok_p
        })
    })
}

fn hom_search(source: &FinAlgebra, target: &FinAlgebra, x: usize, map: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if x == source.size() {
        out.push(map.to_vec());
        return;
    }
    for y in 0..target.size() {
        map[x] = y;
        if partial_ok(source, target, map, x) {
            hom_search(source, target, x + 1, map, out);
        }
    }
    map[x] = usize::MAX;
}

/// An equivalence relation compatible with both operations that keeps 0
/// and 1 apart. Class ids are numbered by first occurrence, so 0 is in
/// class 0 and 1 in class 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
}

fn normalize(labels: &[usize]) -> Vec<usize> {
    let mut ids = BTreeMap::new();
    labels
        .iter()
        .map(|l| {
            let next = ids.len();
            *ids.entry(*l).or_insert(next)
        })
        .collect()
}

impl Congruence {
    pub fn new(alg: &FinAlgebra, labels: &[usize]) -> Result<Self> {
        if labels.len() != alg.size() {
            return Err(Error::NotCongruence("labelling is not total".into()));
        }
        let c = Congruence {
            class_of: normalize(labels),
        };
        if c.same(0, 1) {
            return Err(Error::CollapsesZeroOne);
        }
        if let Some((a, b, x)) = c.compatibility_violation(alg) {
            return Err(Error::NotCongruence(format!(
                "{} ~ {} but not after combining with {}",
                alg.name(a),
                alg.name(b),
                alg.name(x)
            )));
        }
        Ok(c)
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
        }
    }

    fn compatibility_violation(&self, alg: &FinAlgebra) -> Option<(usize, usize, usize)> {
        let n = alg.size();
        for a in 0..n {
            for b in a + 1..n {
                if !self.same(a, b) {
                    continue;
                }
                for x in 0..n {
                    if !self.same(alg.sum(a, x), alg.sum(b, x)) || !self.same(alg.mul(a, x), alg.mul(b, x)) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, alg: &FinAlgebra) -> bool {
        self.compatibility_violation(alg).is_none()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Pairs `(representative, x)` generating the relation.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.classes()
            .iter()
            .flat_map(|cl| cl[1..].iter().map(move |&x| (cl[0], x)))
            .collect()
    }

    /// The order on congruences: `self >= other` when every class of
    /// `other` lies inside a class of `self`.
    pub fn is_coarser_than(&self, other: &Congruence) -> bool {
        let n = self.class_of.len();
        (0..n).all(|a| (0..n).all(|b| !other.same(a, b) || self.same(a, b)))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// The smallest congruence containing `pairs`: a union-find fixpoint where
/// every successful merge of `x, y` schedules `(x + c, y + c)` and
/// `(x c, y c)` for all `c`.
pub fn congruence_closure(alg: &FinAlgebra, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        if uf.union(x, y) {
            for c in 0..n {
                work.push((alg.sum(x, c), alg.sum(y, c)));
                work.push((alg.mul(x, c), alg.mul(y, c)));
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    if labels[0] == labels[1] {
        return Err(Error::CollapsesZeroOne);
    }
    Ok(Congruence {
        class_of: normalize(&labels),
    })
}

/// The quotient algebra on the classes, with the projection map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FinAlgebra,
    pub projection: Vec<usize>,
}

pub fn quotient(alg: &FinAlgebra, cong: &Congruence) -> Result<Quotient> {
    let classes = cong.classes();
    let k = classes.len();
    let c = |x: usize| cong.class_of(x);
    let mut sum = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for a in &classes {
        for b in &classes {
            sum.push(c(alg.sum(a[0], b[0])));
            mul.push(c(alg.mul(a[0], b[0])));
        }
    }
    let names = classes.iter().map(|cl| alg.name(cl[0]).to_string()).collect();
    Ok(Quotient {
        algebra: FinAlgebra::from_flat(names, sum, mul)?,
        projection: cong.labels().to_vec(),
    })
}

/// A congruence is maximal when adding any pair of distinct classes and
/// closing forces `0 ~ 1`.
pub fn is_maximal(alg: &FinAlgebra, cong: &Congruence) -> bool {
    let base = cong.pairs();
    let classes = cong.classes();
    for (i, ci) in classes.iter().enumerate() {
        for cj in &classes[i + 1..] {
            let mut pairs = base.clone();
            pairs.push((ci[0], cj[0]));
            if congruence_closure(alg, &pairs).is_ok() {
                return false;
            }
        }
    }
    true
}

pub const MAX_CONGRUENCE_SEARCH: usize = 6;

/// Every congruence of a small algebra, by growing set partitions element
/// by element and discarding partial partitions that already break
/// compatibility among the elements placed so far.
pub fn all_congruences(alg: &FinAlgebra) -> Result<Vec<Congruence>> {
    let n = alg.size();
    if n > MAX_CONGRUENCE_SEARCH {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_CONGRUENCE_SEARCH,
        });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    labels[1] = 1;
    partitions(alg, 2, 2, &mut labels, &mut out);
    Ok(out)
}

fn partitions(alg: &FinAlgebra, x: usize, used: usize, labels: &mut [usize], out: &mut Vec<Congruence>) {
    let n = alg.size();
    if x == n {
        if let Ok(c) = Congruence::new(alg, labels) {
            out.push(c);
        }
        return;
    }
    for l in 0..=used {
        labels[x] = l;
        let consistent = (0..=x).all(|a| {
            (0..=x).all(|b| {
                labels[a] != labels[b]
                    || (0..=x).all(|y| {
                        let (s1, s2) = (alg.sum(a, y), alg.sum(b, y));
                        let (p1, p2) = (alg.mul(a, y), alg.mul(b, y));
                        (s1 > x || s2 > x || labels[s1] == labels[s2]) && (p1 > x || p2 > x || labels[p1] == labels[p2])
                    })
            })
        });
        if consistent {
            partitions(alg, x + 1, used.max(l + 1), labels, out);
        }
    }
}

pub const MAX_ZOO_SIZE: usize = 5;

/// All algebras with `2 <= size <= max` up to isomorphism fixing 0 and 1,
/// in canonical labelling.
pub fn algebra_zoo(max: usize) -> Result<Vec<FinAlgebra>> {
    if max > MAX_ZOO_SIZE {
        return Err(Error::SizeTooLarge {
            size: max,
            max: MAX_ZOO_SIZE,
        });
    }
    let mut seen: BTreeMap<(usize, Vec<usize>), FinAlgebra> = BTreeMap::new();
    for n in 2..=max {
        for lattice in enumerate::lattices(n) {
            for unit in 1..n {
                let order: Vec<usize> = [0, unit].into_iter().chain((1..n).filter(|&x| x != unit)).collect();
                let module = lattice.permuted(&order)?;
                for mul in multiplications(&module) {
                    let alg = FinAlgebra::from_module(module.clone(), mul)?;
                    let (code, canon, _) = alg.canonical(None);
                    seen.entry((n, code)).or_insert(canon);
                }
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// All multiplication tables making `module` an algebra with unit index 1.
pub fn multiplications(module: &FinModule) -> Vec<Vec<usize>> {
    let n = module.size();
    let mut mul = vec![usize::MAX; n * n];
    for x in 0..n {
        mul[x] = 0;
        mul[x * n] = 0;
        mul[n + x] = x;
        mul[x * n + 1] = x;
    }
    let cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill(module, &cells, 0, &mut mul, &mut out);
    out
}

fn fill(module: &FinModule, cells: &[(usize, usize)], k: usize, mul: &mut [usize], out: &mut Vec<Vec<usize>>) {
    let n = module.size();
    if k == cells.len() {
        out.push(mul.to_vec());
        return;
    }
    let (i, j) = cells[k];
    for v in 0..n {
        mul[i * n + j] = v;
        mul[j * n + i] = v;
        if locally_consistent(module, mul) {
            fill(module, cells, k + 1, mul, out);
        }
    }
    mul[i * n + j] = usize::MAX;
    mul[j * n + i] = usize::MAX;
}

fn locally_consistent(module: &FinModule, mul: &[usize]) -> bool {
    let n = module.size();
    let m = |a: usize, b: usize| {
        if a == usize::MAX || b == usize::MAX {
            usize::MAX
        } else {
            mul[a * n + b]
        }
    };
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            if ab == usize::MAX {
                continue;
            }
            for c in 0..n {
                let l = m(ab, c);
                let r = m(a, m(b, c));
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
                let bc = module.sum(b, c);
                let (x, y, z) = (m(a, bc), ab, m(a, c));
                if x != usize::MAX && z != usize::MAX && x != module.sum(y, z) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn names(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    /// 0 < a < 1 with a² = 0.
    fn nilpotent3() -> FinAlgebra {
        let sum = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 0]];
        validate_algebra(names("0 1 a"), &sum, &mul).unwrap()
    }

    /// 0 < a < 1 with a² = a.
    fn idempotent_below() -> FinAlgebra {
        let sum = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        validate_algebra(names("0 1 a"), &sum, &mul).unwrap()
    }

    /// 0 < 1 < a with a² = a.
    fn idempotent_above() -> FinAlgebra {
        let sum = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        validate_algebra(names("0 1 a"), &sum, &mul).unwrap()
    }

    /// {0, 1, a, a+1} with a² = a + 1.
    pub(crate) fn golden() -> FinAlgebra {
        // indices: 0, 1, a, b = a + 1
        let sum = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]];
        let mul = vec![vec![0, 0, 0, 0], vec![0, 1, 2, 3], vec![0, 2, 3, 3], vec![0, 3, 3, 3]];
        validate_algebra(names("0 1 a a+1"), &sum, &mul).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(FinAlgebra::from_module(FinModule::b1(), vec![0, 0, 0, 1]).is_ok());
        nilpotent3();
        let sum = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        // a·a = 1: a·(1 + a) = a but a·1 + a·a = 1
        let bad = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        assert!(matches!(validate_algebra(names("0 1 a"), &sum, &bad), Err(Error::NotDistributiveLaw(..))));
        let no_unit = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
        assert_eq!(validate_algebra(names("0 1 a"), &sum, &no_unit), Err(Error::NoUnit(2)));
        let not_absorbing = vec![vec![0, 0, 2], vec![0, 1, 2], vec![2, 2, 2]];
        assert_eq!(
            validate_algebra(names("0 1 a"), &sum, &not_absorbing),
            Err(Error::ZeroNotAbsorbing(2))
        );
        assert_eq!(validate_algebra(names("0"), &[vec![0]], &[vec![0]]), Err(Error::ZeroEqualsOne));
    }

    #[test]
    fn closure_examples() {
        let g = golden();
        let id = congruence_closure(&g, &[]).unwrap();
        assert_eq!(id, Congruence::identity(4));
        let c = congruence_closure(&g, &[(2, 1)]).unwrap();
        assert_eq!(c.classes(), vec![vec![0], vec![1, 2, 3]]);
        let q = quotient(&g, &c).unwrap();
        assert_eq!(q.algebra.size(), 2);
        assert!(isomorphic(&q.algebra, &FinAlgebra::b1()));
        assert_eq!(congruence_closure(&FinAlgebra::b1(), &[(0, 1)]), Err(Error::CollapsesZeroOne));
    }

    #[test]
    fn quotient_projection_is_morphism() {
        let g = golden();
        let c = congruence_closure(&g, &[(2, 1)]).unwrap();
        let q = quotient(&g, &c).unwrap();
        assert!(AlgebraMorphism::new(g.clone(), q.algebra.clone(), q.projection.clone()).is_ok());
        let id = quotient(&g, &Congruence::identity(4)).unwrap();
        assert!(isomorphic(&id.algebra, &g));
    }

    #[test]
    fn maximality_examples() {
        assert!(is_maximal(&FinAlgebra::b1(), &Congruence::identity(2)));
        let a = nilpotent3();
        assert!(!is_maximal(&a, &Congruence::identity(3)));
        let coarser = congruence_closure(&a, &[(0, 2)]).unwrap();
        assert_eq!(coarser.num_classes(), 2);
        assert!(is_maximal(&a, &coarser));
    }

    #[test]
    fn marked_isomorphism_examples() {
        let (n, i, u) = (nilpotent3(), idempotent_below(), idempotent_above());
        assert!(marked_isomorphic(&n, 2, &n, 2));
        assert!(!marked_isomorphic(&n, 2, &i, 2));
        assert!(!marked_isomorphic(&u, 2, &i, 2));
        // 0 and 1 are pinned, so a = 0 and a = 1 in B1 differ
        assert!(!marked_isomorphic(&FinAlgebra::b1(), 0, &FinAlgebra::b1(), 1));
    }

    #[test]
    fn congruence_enumeration() {
        assert_eq!(all_congruences(&FinAlgebra::b1()).unwrap(), vec![Congruence::identity(2)]);
        // the three partitions of {0, 1, a} that keep 0 and 1 apart, checked
        // directly against the compatibility rule
        let candidates = [[0, 1, 2], [0, 1, 0], [0, 1, 1]];
        for a in [nilpotent3(), idempotent_below(), idempotent_above()] {
            let compatible = |l: &[usize; 3]| {
                (0..3).all(|x| {
                    (0..3).all(|y| {
                        l[x] != l[y]
                            || (0..3).all(|z| l[a.sum(x, z)] == l[a.sum(y, z)] && l[a.mul(x, z)] == l[a.mul(y, z)])
                    })
                })
            };
            let expected = candidates.iter().filter(|l| compatible(l)).count();
            let all = all_congruences(&a).unwrap();
            assert_eq!(all.len(), expected);
            for c in all {
                assert!(Congruence::new(&a, c.labels()).is_ok());
            }
        }
        let counts: Vec<usize> = [nilpotent3(), idempotent_below(), idempotent_above()]
            .iter()
            .map(|a| all_congruences(a).unwrap().len())
            .collect();
        assert_eq!(counts, [2, 3, 2]);
    }

    #[test]
    fn zoo_is_valid_and_distinct() {
        let zoo = algebra_zoo(4).unwrap();
        assert!(zoo.iter().any(|a| a.size() == 2));
        for (i, a) in zoo.iter().enumerate() {
            for b in &zoo[i + 1..] {
                assert!(!isomorphic(a, b));
            }
        }
        let three: Vec<_> = zoo.iter().filter(|a| a.size() == 3).collect();
        // 0 < 1 < a with a² = a, and 0 < a < 1 with a² = 0 or a² = a
        assert_eq!(three.len(), 3);
    }

    #[test]
    fn morphism_search_matches_direct_check() {
        let g = golden();
        let homs = algebra_morphisms(&g, &FinAlgebra::b1());
        let brute: Vec<Vec<usize>> = (0..16usize)
            .map(|m| (0..4).map(|i| (m >> i) & 1).collect::<Vec<_>>())
            .filter(|map| is_algebra_morphism(&g, &FinAlgebra::b1(), map))
            .collect();
        assert_eq!(homs, brute);
        assert_eq!(homs.len(), 1);
    }
}
