//! Finite B1-modules and the lattices they are the same thing as.
//!
//! A finite B1-module is a commutative idempotent monoid `(M, +, 0)`. The
//! relation `a <= b :<=> a + b = b` is a partial order with least element 0
//! in which `a + b` is the join, and every finite module arises this way from
//! a unique nonempty finite lattice. Element 0 is always at index 0.

use std::fmt;

use crate::error::{Error, Result};

/// Default element names `e0 .. e{n-1}`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

pub(crate) fn check_names(names: &[String]) -> Result<()> {
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::DuplicateName(a.clone()));
        }
    }
    Ok(())
}

pub(crate) fn flatten(rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = rows.len();
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: r,
                expected: n,
                found: row.len(),
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::OutOfRange { row: r, col: c, value: v });
            }
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

/// A finite B1-module given by its addition table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinModule {
    names: Vec<String>,
    sum: Vec<usize>,
}

impl fmt::Debug for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinModule")
            .field("names", &self.names)
            .field("sum", &self.sum)
            .finish()
    }
}

/// Validates a raw addition table. Checks run in the order idempotency,
/// commutativity, associativity, neutrality of element 0, and each reports
/// the first offending tuple.
pub fn validate_module(names: Vec<String>, rows: &[Vec<usize>]) -> Result<FinModule> {
    if rows.is_empty() {
        return Err(Error::Empty);
    }
    let sum = flatten(rows)?;
    FinModule::from_flat(names, sum)
}

impl FinModule {
    pub fn from_flat(names: Vec<String>, sum: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if sum.len() != n * n {
            return Err(Error::NotSquare {
                row: sum.len() / n.max(1),
                expected: n,
                found: sum.len() % n,
            });
        }
        if let Some(i) = sum.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange {
                row: i / n,
                col: i % n,
                value: sum[i],
            });
        }
        check_names(&names)?;
        let s = |a: usize, b: usize| sum[a * n + b];
        for a in 0..n {
            if s(a, a) != a {
                return Err(Error::NotIdempotent(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if s(a, b) != s(b, a) {
                    return Err(Error::NotCommutative(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if s(s(a, b), c) != s(a, s(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        for a in 0..n {
            if s(0, a) != a {
                return Err(Error::NoBottom(a));
            }
        }
        Ok(FinModule { names, sum })
    }

    pub(crate) fn from_flat_unchecked(names: Vec<String>, sum: Vec<usize>) -> Self {
        debug_assert!(FinModule::from_flat(names.clone(), sum.clone()).is_ok());
        FinModule { names, sum }
    }

    /// The module B1 itself: `0 < 1`.
    pub fn b1() -> Self {
        FinModule {
            names: vec!["0".into(), "1".into()],
            sum: vec![0, 1, 1, 1],
        }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let sum = (0..n * n).map(|i| (i / n).max(i % n)).collect();
        FinModule::from_flat_unchecked(default_names(n), sum)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn sum_table(&self) -> &[usize] {
        &self.sum
    }

    pub fn sum_rows(&self) -> Vec<Vec<usize>> {
        self.sum.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    #[inline]
    pub fn sum(&self, a: usize, b: usize) -> usize {
        self.sum[a * self.size() + b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.sum(a, b) == b
    }

    /// Join of a list of elements; the empty join is 0.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(0, |acc, x| self.sum(acc, x))
    }

    pub fn top(&self) -> usize {
        self.join_all(0..self.size())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(Error::InvalidFamily("name count does not match size".into()));
        }
        check_names(&names)?;
        self.names = names;
        Ok(self)
    }

    /// The derived order `a <= b :<=> a + b = b`.
    pub fn order_of(&self) -> FinPoset {
        let n = self.size();
        let leq = (0..n * n).map(|i| self.leq(i / n, i % n)).collect();
        FinPoset {
            names: self.names.clone(),
            leq,
        }
    }

    /// Greatest lower bound, computed as the join of all common lower bounds.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.join_all((0..self.size()).filter(|&c| self.leq(c, a) && self.leq(c, b)))
    }

    /// First `(a, b, c)` with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        let meet = self.meet_table();
        let m = |a: usize, b: usize| meet[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(a, self.sum(b, c)) != self.sum(m(a, b), m(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation().is_none()
    }

    /// First `(a, b, c)` with `a <= c` and `a ∨ (b ∧ c) != (a ∨ b) ∧ c`.
    pub fn modularity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        let meet = self.meet_table();
        let m = |a: usize, b: usize| meet[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.leq(a, c) && self.sum(a, m(b, c)) != m(self.sum(a, b), c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_violation().is_none()
    }

    /// Projectivity of a finite module is decided through distributivity.
    pub fn is_projective(&self) -> bool {
        self.is_distributive()
    }

    pub fn meet_table(&self) -> Vec<usize> {
        let n = self.size();
        (0..n * n).map(|i| self.meet(i / n, i % n)).collect()
    }

    /// Elements `m != 0` such that `x ∨ y = m` forces `x = m` or `y = m`,
    /// with the order inherited from the module.
    pub fn join_irreducibles(&self) -> JoinIrreducibles {
        let n = self.size();
        let elements: Vec<usize> = (1..n)
            .filter(|&m| {
                (0..n).all(|x| (0..n).all(|y| self.sum(x, y) != m || x == m || y == m))
            })
            .collect();
        let k = elements.len();
        let leq = (0..k * k)
            .map(|i| self.leq(elements[i / k], elements[i % k]))
            .collect();
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        JoinIrreducibles {
            poset: FinPoset { names, leq },
            elements,
        }
    }

    /// The map `m ↦ {a ∈ E : a <= m}` into the down-set lattice of the
    /// join-irreducibles `E`. It is an isomorphism iff the module is
    /// distributive.
    pub fn birkhoff(&self) -> Birkhoff {
        let irreducibles = self.join_irreducibles();
        let downsets = downset_lattice(&irreducibles.poset);
        let map = (0..self.size())
            .map(|m| {
                let mask = irreducibles
                    .elements
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| self.leq(e, m))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i);
                downsets.index_of(mask).expect("G_m is a down-set")
            })
            .collect();
        let morphism = ModuleMorphism {
            source: self.clone(),
            target: downsets.module.clone(),
            map,
        };
        Birkhoff {
            irreducibles,
            downsets,
            morphism,
        }
    }

    /// `m ↦ {y : m ≰ y}` as bit masks: an injective, sum-preserving map
    /// onto a union-closed family of subsets of the module itself. It exists
    /// for every finite lattice, distributive or not.
    pub fn powerset_embedding(&self) -> Vec<u64> {
        let n = self.size();
        assert!(n <= 64, "embedding masks hold at most 64 elements");
        (0..n)
            .map(|m| (0..n).filter(|&y| !self.leq(m, y)).fold(0u64, |acc, y| acc | 1 << y))
            .collect()
    }

    /// Restriction to a subset containing 0 and closed under the sum. The
    /// subset keeps its relative order; 0 stays at index 0.
    pub fn submodule(&self, elements: &[usize]) -> Result<FinModule> {
        if elements.first() != Some(&0) {
            return Err(Error::InvalidFamily("submodule must list 0 first".into()));
        }
        let k = elements.len();
        let pos = |x: usize| elements.iter().position(|&e| e == x);
        let mut sum = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let s = self.sum(a, b);
                sum.push(pos(s).ok_or_else(|| {
                    Error::InvalidFamily(format!(
                        "{} + {} = {} leaves the subset",
                        self.names[a], self.names[b], self.names[s]
                    ))
                })?);
            }
        }
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        FinModule::from_flat(names, sum)
    }

    /// Relabels so that new index `i` holds old element `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<FinModule> {
        let n = self.size();
        let mut inv = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            inv[old] = new;
        }
        if order.len() != n || inv.contains(&usize::MAX) {
            return Err(Error::NotBijective);
        }
        let names = order.iter().map(|&o| self.names[o].clone()).collect();
        let sum = (0..n * n)
            .map(|i| inv[self.sum(order[i / n], order[i % n])])
            .collect();
        FinModule::from_flat(names, sum)
    }
}

/// A finite partially ordered set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinPoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

impl FinPoset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(names: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(Error::NotSquare {
                row: 0,
                expected: n * n,
                found: leq.len(),
            });
        }
        check_names(&names)?;
        let l = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !l(a, a) {
                return Err(Error::NotPartialOrder(format!("{} is not <= itself", names[a])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && l(a, b) && l(b, a) {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are mutually below each other",
                        names[a], names[b]
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if l(a, b) && l(b, c) && !l(a, c) {
                        return Err(Error::NotPartialOrder(format!(
                            "{} <= {} <= {} but not {} <= {}",
                            names[a], names[b], names[c], names[a], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FinPoset { names, leq })
    }

    pub fn from_rows(names: Vec<String>, rows: &[Vec<bool>]) -> Result<Self> {
        let n = names.len();
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare {
                row: r,
                expected: n,
                found: row.len(),
            });
        }
        if rows.len() != n {
            return Err(Error::NotSquare {
                row: rows.len(),
                expected: n,
                found: rows.len(),
            });
        }
        FinPoset::new(names, rows.concat())
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Self {
        let leq = (0..n * n).map(|i| i / n == i % n).collect();
        FinPoset {
            names: default_names(n),
            leq,
        }
    }

    /// The chain `e0 < e1 < ... < e{n-1}`.
    pub fn chain(n: usize) -> Self {
        let leq = (0..n * n).map(|i| i / n <= i % n).collect();
        FinPoset {
            names: default_names(n),
            leq,
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn leq_table(&self) -> &[bool] {
        &self.leq
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.size();
        let ub: Vec<usize> = (0..n).filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        ub.iter().copied().find(|&c| ub.iter().all(|&d| self.leq(c, d)))
    }

    pub fn least(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&a| (0..n).all(|b| self.leq(a, b)))
    }

    /// The addition table `a + b = a ∨ b` of a decent order. Element 0 must
    /// be the least element.
    pub fn module_of_order(&self) -> Result<FinModule> {
        let n = self.size();
        if n == 0 {
            return Err(Error::Empty);
        }
        match self.least() {
            Some(0) => {}
            Some(z) => {
                return Err(Error::NotDecent(format!(
                    "least element {} is not listed first",
                    self.names[z]
                )))
            }
            None => return Err(Error::NotDecent("no least element".into())),
        }
        let mut sum = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                sum.push(self.join(a, b).ok_or_else(|| {
                    Error::NotDecent(format!("{} and {} have no join", self.names[a], self.names[b]))
                })?);
            }
        }
        FinModule::from_flat(self.names.clone(), sum)
    }

    /// Indices ordered so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| ((0..n).filter(|&b| self.leq(b, a)).count(), a));
        order
    }

    /// All down-closed subsets as bit masks, in increasing numeric order.
    pub fn downsets(&self) -> Vec<u64> {
        let n = self.size();
        assert!(n <= 64, "down-set enumeration supports at most 64 elements");
        let ext = self.linear_extension();
        let below: Vec<u64> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| b != a && self.leq(b, a))
                    .fold(0, |m, b| m | 1 << b)
            })
            .collect();
        let mut out = Vec::new();
        fn go(ext: &[usize], below: &[u64], i: usize, cur: u64, out: &mut Vec<u64>) {
            if i == ext.len() {
                out.push(cur);
                return;
            }
            let a = ext[i];
            go(ext, below, i + 1, cur, out);
            if below[a] & !cur == 0 {
                go(ext, below, i + 1, cur | 1 << a, out);
            }
        }
        go(&ext, &below, 0, 0, &mut out);
        out.sort_unstable();
        out
    }
}

/// The join-irreducible elements of a module with their induced order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinIrreducibles {
    pub elements: Vec<usize>,
    pub poset: FinPoset,
}

/// The module of down-sets of a poset, with the down-set behind each index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownsetLattice {
    pub module: FinModule,
    pub sets: Vec<u64>,
}

impl DownsetLattice {
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.sets.binary_search(&mask).ok()
    }
}

fn set_name(names: &[String], mask: u64) -> String {
    let inner: Vec<&str> = (0..names.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| names[i].as_str())
        .collect();
    format!("{{{}}}", inner.join(","))
}

/// `O(E)`: down-closed subsets of `E` under union. Always distributive.
pub fn downset_lattice(poset: &FinPoset) -> DownsetLattice {
    let sets = poset.downsets();
    let k = sets.len();
    let mut sum = Vec::with_capacity(k * k);
    for &a in &sets {
        for &b in &sets {
            sum.push(sets.binary_search(&(a | b)).expect("down-sets are closed under union"));
        }
    }
    let names = sets.iter().map(|&m| set_name(poset.names(), m)).collect();
    DownsetLattice {
        module: FinModule::from_flat_unchecked(names, sum),
        sets,
    }
}

/// A sum- and bottom-preserving map between finite modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: FinModule,
    pub target: FinModule,
    pub map: Vec<usize>,
}

impl ModuleMorphism {
    pub fn new(source: FinModule, target: FinModule, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::NotMorphism("map is not total".into()));
        }
        if map.iter().any(|&v| v >= target.size()) {
            return Err(Error::NotMorphism("image outside the target".into()));
        }
        let f = ModuleMorphism { source, target, map };
        if let Some(msg) = f.violation() {
            return Err(Error::NotMorphism(msg));
        }
        Ok(f)
    }

    fn violation(&self) -> Option<String> {
        if self.map[0] != 0 {
            return Some("0 is not mapped to 0".into());
        }
        let n = self.source.size();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.map[self.source.sum(a, b)];
                let rhs = self.target.sum(self.map[a], self.map[b]);
                if lhs != rhs {
                    return Some(format!(
                        "f({} + {}) != f({}) + f({})",
                        self.source.name(a),
                        self.source.name(b),
                        self.source.name(a),
                        self.source.name(b)
                    ));
                }
            }
        }
        None
    }

    pub fn is_morphism(&self) -> bool {
        self.violation().is_none()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMorphism) -> Result<ModuleMorphism> {
        if other.target != self.source {
            return Err(Error::NotMorphism("codomain and domain differ".into()));
        }
        Ok(ModuleMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        })
    }
}

/// Output of the Birkhoff construction. The map is always monotone and
/// keeps 0 fixed; it preserves sums exactly when the module is distributive.
#[derive(Debug, Clone)]
pub struct Birkhoff {
    pub irreducibles: JoinIrreducibles,
    pub downsets: DownsetLattice,
    pub morphism: ModuleMorphism,
}

impl Birkhoff {
    pub fn is_isomorphism(&self) -> bool {
        self.morphism.is_bijective()
    }
}

/// Diagnostics for the retraction `θ(A) = ⋂ {B ∈ S : A ⊆ B}` of the full
/// powerset onto a union-closed family `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    /// `θ(A)` for every subset `A`, indexed by its bit mask.
    pub theta: Vec<u64>,
    /// First `A` whose image is not a member of the family.
    pub landing_failure: Option<(u64, u64)>,
    /// First pair `(A, B)` with `θ(A ∪ B) != θ(A) ∪ θ(B)`.
    pub union_failure: Option<(u64, u64)>,
    /// First member `B` of the family with `θ(B) != B`.
    pub identity_failure: Option<u64>,
    pub intersection_closed: bool,
}

impl ThetaReport {
    pub fn lands_inside(&self) -> bool {
        self.landing_failure.is_none()
    }

    pub fn preserves_unions(&self) -> bool {
        self.union_failure.is_none()
    }

    pub fn identity_on_family(&self) -> bool {
        self.identity_failure.is_none()
    }

    pub fn is_retraction(&self) -> bool {
        self.lands_inside() && self.preserves_unions() && self.identity_on_family()
    }
}

/// Runs the θ construction over the subsets of an `n`-set and reports which
/// of its retraction properties hold for `family`.
pub fn theta_retraction(n: usize, family: &[u64]) -> Result<ThetaReport> {
    if n > 12 {
        return Err(Error::SizeTooLarge { size: n, max: 12 });
    }
    let full: u64 = (1 << n) - 1;
    let mut fam: Vec<u64> = family.to_vec();
    fam.sort_unstable();
    fam.dedup();
    if fam.iter().any(|&b| b & !full != 0) {
        return Err(Error::InvalidFamily("member outside the base set".into()));
    }
    if fam.binary_search(&0).is_err() || fam.binary_search(&full).is_err() {
        return Err(Error::InvalidFamily("family must contain the empty and the full set".into()));
    }
    for &a in &fam {
        for &b in &fam {
            if fam.binary_search(&(a | b)).is_err() {
                return Err(Error::InvalidFamily(format!("{a:#b} ∪ {b:#b} is missing")));
            }
        }
    }
    let member = |x: u64| fam.binary_search(&x).is_ok();
    let theta: Vec<u64> = (0..=full)
        .map(|a| fam.iter().filter(|&&b| a & !b == 0).fold(full, |acc, &b| acc & b))
        .collect();
    let landing_failure = (0..=full).find(|&a| !member(theta[a as usize])).map(|a| (a, theta[a as usize]));
    let union_failure = (0..=full)
        .flat_map(|a| (0..=full).map(move |b| (a, b)))
        .find(|&(a, b)| theta[(a | b) as usize] != theta[a as usize] | theta[b as usize]);
    let identity_failure = fam.iter().copied().find(|&b| theta[b as usize] != b);
    let intersection_closed = fam.iter().all(|&a| fam.iter().all(|&b| member(a & b)));
    Ok(ThetaReport {
        theta,
        landing_failure,
        union_failure,
        identity_failure,
        intersection_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    /// The six-element module generated by a+b=d, c+d=e, b+c=c.
    pub(crate) fn six_element_m() -> FinModule {
        let rows = vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![1, 1, 4, 5, 4, 5],
            vec![2, 4, 2, 3, 4, 5],
            vec![3, 5, 3, 3, 5, 5],
            vec![4, 4, 4, 5, 4, 5],
            vec![5, 5, 5, 5, 5, 5],
        ];
        validate_module(names("0 a b c d e"), &rows).unwrap()
    }

    fn powerset(k: usize) -> FinModule {
        let n = 1 << k;
        FinModule::from_flat(default_names(n), (0..n * n).map(|i| (i / n) | (i % n)).collect()).unwrap()
    }

    #[test]
    fn six_element_module_order() {
        let m = six_element_m();
        let i = |s: &str| m.index_of(s).unwrap();
        for (a, b) in [("0", "a"), ("a", "d"), ("d", "e"), ("0", "b"), ("b", "c"), ("c", "e"), ("b", "d")] {
            assert!(m.leq(i(a), i(b)), "{a} <= {b}");
        }
        assert!(!m.leq(i("a"), i("c")));
        assert!(!m.leq(i("c"), i("d")));
        assert_eq!(m.top(), i("e"));
    }

    #[test]
    fn zero_module_is_valid() {
        let m = validate_module(names("0"), &[vec![0]]).unwrap();
        assert_eq!(m.size(), 1);
        assert!(m.is_distributive());
        assert!(m.join_irreducibles().elements.is_empty());
    }

    #[test]
    fn non_commutative_table_is_rejected() {
        let rows = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        assert_eq!(validate_module(names("0 a b"), &rows), Err(Error::NotCommutative(1, 2)));
    }

    #[test]
    fn other_validation_errors() {
        let not_idem = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(validate_module(default_names(2), &not_idem), Err(Error::NotIdempotent(1)));
        let no_bottom = vec![vec![0, 0], vec![0, 1]];
        assert_eq!(validate_module(default_names(2), &no_bottom), Err(Error::NoBottom(1)));
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(matches!(validate_module(default_names(2), &ragged), Err(Error::NotSquare { .. })));
        // idempotent and commutative, but (a + b) + c != a + (b + c)
        let non_assoc = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 1],
            vec![2, 3, 2, 2],
            vec![3, 1, 2, 3],
        ];
        assert!(matches!(
            validate_module(default_names(4), &non_assoc),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn order_of_small_modules() {
        let b1 = FinModule::b1().order_of();
        assert!(b1.leq(0, 1) && !b1.leq(1, 0));
        let diamond = powerset(2).order_of();
        assert!(diamond.leq(1, 3) && diamond.leq(2, 3));
        assert!(!diamond.leq(1, 2) && !diamond.leq(2, 1));
    }

    #[test]
    fn module_of_order_examples() {
        assert_eq!(FinPoset::chain(2).module_of_order().unwrap().sum_table(), FinModule::b1().sum_table());
        // 0 below two incomparable atoms, nothing above them
        let leq = vec![
            true, true, true, true,
            false, true, false, false,
            false, false, true, false,
            false, false, false, true,
        ];
        let p = FinPoset::new(default_names(4), leq).unwrap();
        assert!(matches!(p.module_of_order(), Err(Error::NotDecent(_))));
        assert!(matches!(FinPoset::antichain(2).module_of_order(), Err(Error::NotDecent(_))));
    }

    #[test]
    fn pentagon_from_order() {
        // 0 < a < d < e, 0 < c < e
        let n = 5;
        let rel = [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4), (0, 3), (0, 4), (1, 4)];
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in rel {
            leq[a * n + b] = true;
        }
        let p = FinPoset::new(names("0 a c d e"), leq).unwrap();
        let m = p.module_of_order().unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(m.sum(1, 2), 4);
        assert_eq!(m.sum(2, 3), 4);
        assert!(!m.is_modular());
    }

    #[test]
    fn meets_in_m_and_n() {
        let m = six_element_m();
        let i = |s: &str| m.index_of(s).unwrap();
        assert_eq!(m.meet(i("c"), i("d")), i("b"));
        let sub = m.submodule(&[0, 1, 3, 4, 5]).unwrap();
        let j = |s: &str| sub.index_of(s).unwrap();
        assert_eq!(sub.meet(j("c"), j("d")), j("0"));
        for x in 0..m.size() {
            assert_eq!(m.meet(x, 0), 0);
        }
    }

    #[test]
    fn distributivity_and_modularity() {
        assert!(powerset(3).is_distributive());
        assert!(FinModule::chain(5).is_distributive());
        let m = six_element_m();
        assert!(m.is_modular());
        let n5 = m.submodule(&[0, 1, 3, 4, 5]).unwrap();
        let (a, c, d) = (1, 2, 3);
        assert_eq!(n5.modularity_violation(), Some((a, c, d)));
        let w = n5.distributivity_violation().unwrap();
        let mut set = [w.0, w.1, w.2];
        set.sort_unstable();
        assert_eq!(set, [a, c, d]);
        assert!(!n5.is_projective());
        assert_eq!(m.is_projective(), m.is_distributive());
    }

    #[test]
    fn join_irreducible_examples() {
        let ji = powerset(3).join_irreducibles();
        assert_eq!(ji.elements, vec![1, 2, 4]);
        assert_eq!(ji.poset.leq_table(), FinPoset::antichain(3).leq_table());
        let chain = FinModule::chain(3).join_irreducibles();
        assert_eq!(chain.elements, vec![1, 2]);
        assert!(chain.poset.leq(0, 1));
        let m = six_element_m();
        let names: Vec<&str> = m.join_irreducibles().elements.iter().map(|&e| m.name(e)).collect();
        // d = a + b and e = c + d are reducible
        assert_eq!(names, ["a", "b", "c"]);
    }

    #[test]
    fn downset_examples() {
        let d = downset_lattice(&FinPoset::antichain(2));
        assert_eq!(d.module.size(), 4);
        assert_eq!(d.module.order_of(), powerset(2).with_names(d.module.names().to_vec()).unwrap().order_of());
        let empty = downset_lattice(&FinPoset::antichain(0));
        assert_eq!(empty.module.size(), 1);
        let chain = downset_lattice(&FinPoset::chain(2));
        assert_eq!(chain.module.sum_table(), FinModule::chain(3).sum_table());
    }

    #[test]
    fn birkhoff_examples() {
        let b = FinModule::b1().birkhoff();
        assert!(b.is_isomorphism());
        assert_eq!(b.irreducibles.elements, vec![1]);
        let n5 = six_element_m().submodule(&[0, 1, 3, 4, 5]).unwrap();
        let b = n5.birkhoff();
        assert!(!b.is_isomorphism());
        assert_eq!(b.downsets.module.size(), 6);
        let f = &b.morphism;
        assert_eq!(f.apply(0), 0);
        assert!((0..5).all(|x| (0..5).all(|y| !n5.leq(x, y) || b.downsets.module.leq(f.apply(x), f.apply(y)))));
        assert!(!f.is_morphism());
        assert!(powerset(3).birkhoff().is_isomorphism());
    }

    #[test]
    fn theta_examples() {
        let all = theta_retraction(2, &[0, 1, 2, 3]).unwrap();
        assert!(all.is_retraction());
        assert_eq!(all.theta, vec![0, 1, 2, 3]);
        // {∅, {1,2}, {2,3}, {1,2,3}} with elements 1,2,3 on bits 0,1,2
        let gap = theta_retraction(3, &[0b000, 0b011, 0b110, 0b111]).unwrap();
        assert_eq!(gap.theta[0b010], 0b010);
        assert_eq!(gap.landing_failure, Some((0b010, 0b010)));
        assert!(!gap.intersection_closed);
        let chain = theta_retraction(2, &[0b00, 0b01, 0b11]).unwrap();
        assert!(chain.is_retraction());
        assert!(chain.intersection_closed);
        assert!(theta_retraction(2, &[0b01, 0b11]).is_err());
        assert!(theta_retraction(2, &[0, 0b01, 0b10, 0b11, 0b100]).is_err());
    }

    #[test]
    fn morphism_validation() {
        let b1 = FinModule::b1();
        let c3 = FinModule::chain(3);
        assert!(ModuleMorphism::new(b1.clone(), c3.clone(), vec![0, 2]).is_ok());
        assert!(ModuleMorphism::new(b1.clone(), c3.clone(), vec![1, 2]).is_err());
        // collapsing the diamond's atoms is monotone but not join preserving
        let d = powerset(2);
        assert!(ModuleMorphism::new(d.clone(), c3.clone(), vec![0, 1, 1, 2]).is_err());
        assert!(ModuleMorphism::new(d, c3, vec![0, 1, 1, 1]).is_ok());
    }
}
