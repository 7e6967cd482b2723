//! Finite commutative monoids, the powerset functor `F` into B1-algebras,
//! the forgetful functor `G` back, and the adjunction between them.

use std::collections::BTreeMap;

use crate::algebra::{algebra_morphisms, AlgebraMorphism, FinAlgebra};
use crate::canon::{self, Structure, Table};
use crate::error::{Error, Result};
use crate::lattice::{check_names, default_names, flatten};
use crate::polynomial::{Battery, Poly, Variables};

/// Largest monoid accepted by [`functor_f`].
pub const MAX_FUNCTOR_SIZE: usize = 5;
/// Largest size accepted by [`monoid_zoo`].
pub const MAX_MONOID_ZOO: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMonoid {
    names: Vec<String>,
    mul: Vec<usize>,
    unit: usize,
}

impl FinMonoid {
    pub fn new(names: Vec<String>, rows: &[Vec<usize>], unit: usize) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Empty);
        }
        Self::from_flat(names, flatten(rows)?, unit)
    }

    pub fn from_flat(names: Vec<String>, mul: Vec<usize>, unit: usize) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        check_names(&names)?;
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
        if unit >= n || (0..n).any(|x| mul[unit * n + x] != x || mul[x * n + unit] != x) {
            return Err(Error::MonoidUnit(unit));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
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
        Ok(FinMonoid { names, mul, unit })
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FinMonoid {
            names: vec!["1".into()],
            mul: vec![0],
            unit: 0,
        }
    }

    /// The cyclic group `μ_n = {1, g, .., g^(n-1)}`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n >= 1, "a group has at least one element");
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FinMonoid { names, mul, unit: 0 }
    }

    /// Direct product, with `(x, y)` at index `x * |other| + y`.
    pub fn product(&self, other: &FinMonoid) -> Self {
        let (n, m) = (self.size(), other.size());
        let names = (0..n * m)
            .map(|i| format!("({},{})", self.names[i / m], other.names[i % m]))
            .collect();
        let mul = (0..n * m * n * m)
            .map(|k| {
                let (i, j) = (k / (n * m), k % (n * m));
                self.mul(i / m, j / m) * m + other.mul(i % m, j % m)
            })
            .collect();
        FinMonoid {
            names,
            mul,
            unit: self.unit * m + other.unit,
        }
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

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.unit, |acc, _| self.mul(acc, a))
    }

    /// The invertible elements, in index order.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&u| (0..self.size()).any(|v| self.mul(u, v) == self.unit))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.units().len() == self.size()
    }

    pub fn is_submonoid(&self, sub: &[usize]) -> bool {
        let n = self.size();
        let mut inside = vec![false; n];
        for &x in sub {
            if x >= n {
                return false;
            }
            inside[x] = true;
        }
        inside[self.unit] && sub.iter().all(|&x| sub.iter().all(|&y| inside[self.mul(x, y)]))
    }

    /// Whether every element has a positive power in `sub`.
    pub fn is_integral_over(&self, sub: &[usize]) -> Result<bool> {
        if !self.is_submonoid(sub) {
            return Err(Error::NotSubmonoid(format!("{sub:?}")));
        }
        let n = self.size();
        // the powers a, a², .., a^n already take every value the sequence takes
        Ok((0..n).all(|a| (1..=n).any(|k| sub.contains(&self.pow(a, k)))))
    }

    /// Every submonoid, as sorted index lists.
    pub fn submonoids(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        assert!(n <= 16, "submonoid search is limited to 16 elements");
        (0u32..1 << n)
            .filter(|m| m >> self.unit & 1 == 1)
            .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).collect::<Vec<_>>())
            .filter(|s| self.is_submonoid(s))
            .collect()
    }

    /// Canonical code under isomorphism.
    pub fn canonical_form(&self) -> (Vec<usize>, Vec<usize>) {
        let tables = [Table::Op(&self.mul)];
        let s = Structure {
            n: self.size(),
            tables: &tables,
        };
        let init: Vec<usize> = (0..self.size()).map(|x| usize::from(x != self.unit)).collect();
        canon::canonical_form(&s, &init)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMorphism {
    pub source: FinMonoid,
    pub target: FinMonoid,
    pub map: Vec<usize>,
}

pub fn is_monoid_morphism(source: &FinMonoid, target: &FinMonoid, map: &[usize]) -> bool {
    let n = source.size();
    map.len() == n
        && map.iter().all(|&y| y < target.size())
        && map[source.unit] == target.unit
        && (0..n).all(|a| (0..n).all(|b| map[source.mul(a, b)] == target.mul(map[a], map[b])))
}

impl MonoidMorphism {
    pub fn new(source: FinMonoid, target: FinMonoid, map: Vec<usize>) -> Result<Self> {
        if !is_monoid_morphism(&source, &target, &map) {
            return Err(Error::NotMorphism("map does not preserve the unit and products".into()));
        }
        Ok(MonoidMorphism { source, target, map })
    }

    pub fn identity(m: &FinMonoid) -> Self {
        MonoidMorphism {
            source: m.clone(),
            target: m.clone(),
            map: (0..m.size()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MonoidMorphism) -> Result<MonoidMorphism> {
        if other.target != self.source {
            return Err(Error::NotMorphism("morphisms are not composable".into()));
        }
        Ok(MonoidMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        })
    }
}

/// Every monoid morphism `source -> target`, by backtracking with the
/// unit fixed.
pub fn monoid_morphisms(source: &FinMonoid, target: &FinMonoid) -> Vec<Vec<usize>> {
    let n = source.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    map[source.unit] = target.unit;
    let order: Vec<usize> = (0..n).filter(|&x| x != source.unit).collect();
    fn go(s: &FinMonoid, t: &FinMonoid, order: &[usize], depth: usize, map: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == order.len() {
            out.push(map.clone());
            return;
        }
        let x = order[depth];
        for y in 0..t.size() {
            map[x] = y;
            let ok = (0..s.size()).all(|a| {
                let b = s.mul(x, a);
                map[a] == usize::MAX || map[b] == usize::MAX || map[b] == t.mul(y, map[a])
            });
            if ok {
                go(s, t, order, depth + 1, map, out);
            }
        }
        map[x] = usize::MAX;
    }
    go(source, target, &order, 0, &mut map, &mut out);
    out
}

/// `F(A)`: subsets of `A` with union and the set product, plus the subset
/// held by each algebra index. ∅ sits at index 0 and `{1}` at index 1.
#[derive(Debug, Clone)]
pub struct PowersetAlgebra {
    pub algebra: FinAlgebra,
    pub masks: Vec<u64>,
}

impl PowersetAlgebra {
    pub fn index_of_mask(&self, mask: u64) -> usize {
        self.masks
            .iter()
            .position(|&m| m == mask)
            .expect("every subset is an element")
    }

    pub fn singleton(&self, x: usize) -> usize {
        self.index_of_mask(1 << x)
    }
}

fn set_product(a: &FinMonoid, x: u64, y: u64) -> u64 {
    let n = a.size();
    let mut out = 0;
    for i in (0..n).filter(|&i| x >> i & 1 == 1) {
        for j in (0..n).filter(|&j| y >> j & 1 == 1) {
            out |= 1 << a.mul(i, j);
        }
    }
    out
}

pub fn functor_f(a: &FinMonoid) -> Result<PowersetAlgebra> {
    let n = a.size();
    if n > MAX_FUNCTOR_SIZE {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_FUNCTOR_SIZE,
        });
    }
    let unit = 1u64 << a.unit();
    let mut masks = vec![0, unit];
    masks.extend((1u64..1 << n).filter(|&m| m != unit));
    let size = masks.len();
    let mut index = vec![0; 1 << n];
    for (i, &m) in masks.iter().enumerate() {
        index[m as usize] = i;
    }
    let names = masks
        .iter()
        .map(|&m| {
            let inner: Vec<&str> = (0..n).filter(|&i| m >> i & 1 == 1).map(|i| a.name(i)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let sum = (0..size * size)
        .map(|k| index[(masks[k / size] | masks[k % size]) as usize])
        .collect();
    let mul = (0..size * size)
        .map(|k| index[set_product(a, masks[k / size], masks[k % size]) as usize])
        .collect();
    let algebra = FinAlgebra::from_flat(names, sum, mul)?;
    Ok(PowersetAlgebra { algebra, masks })
}

/// `F(φ)`: the direct image map `F(A1) -> F(A2)`.
pub fn functor_f_on_morphism(phi: &MonoidMorphism) -> Result<AlgebraMorphism> {
    let fs = functor_f(&phi.source)?;
    let ft = functor_f(&phi.target)?;
    let map = fs
        .masks
        .iter()
        .map(|&m| {
            let img = (0..phi.source.size())
                .filter(|&i| m >> i & 1 == 1)
                .fold(0u64, |acc, i| acc | 1 << phi.apply(i));
            ft.index_of_mask(img)
        })
        .collect();
    AlgebraMorphism::new(fs.algebra, ft.algebra, map)
}

/// `G(E)`: the multiplicative monoid of an algebra.
pub fn forgetful_g(e: &FinAlgebra) -> FinMonoid {
    FinMonoid {
        names: e.names().to_vec(),
        mul: e.mul_table().to_vec(),
        unit: 1,
    }
}

pub fn forgetful_g_on_morphism(f: &AlgebraMorphism) -> MonoidMorphism {
    MonoidMorphism {
        source: forgetful_g(&f.source),
        target: forgetful_g(&f.target),
        map: f.map.clone(),
    }
}

/// `Λ(φ)(b) = φ({b})`.
pub fn lambda(fb: &PowersetAlgebra, phi: &[usize]) -> Vec<usize> {
    let n = fb.masks.len().trailing_zeros() as usize;
    (0..n).map(|b| phi[fb.singleton(b)]).collect()
}

/// `Λ⁻¹(ψ)(C) = ∨_{x ∈ C} ψ(x)`.
pub fn lambda_inv(fb: &PowersetAlgebra, e: &FinAlgebra, psi: &[usize]) -> Vec<usize> {
    fb.masks
        .iter()
        .map(|&m| e.module().join_all((0..psi.len()).filter(|&x| m >> x & 1 == 1).map(|x| psi[x])))
        .collect()
}

/// Both sides of the adjunction bijection for one pair `(B, E)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub algebra_homs: usize,
    pub monoid_homs: usize,
    /// Λ sends every algebra morphism to a monoid morphism, Λ⁻¹ sends every
    /// monoid morphism to an algebra morphism, and both composites are the
    /// identity.
    pub mutually_inverse: bool,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.mutually_inverse && self.algebra_homs == self.monoid_homs
    }
}

pub fn adjunction_check(b: &FinMonoid, e: &FinAlgebra) -> Result<AdjunctionReport> {
    let fb = functor_f(b)?;
    let ge = forgetful_g(e);
    let alg = algebra_morphisms(&fb.algebra, e);
    let mon = monoid_morphisms(b, &ge);
    let forward = alg.iter().all(|phi| {
        let psi = lambda(&fb, phi);
        is_monoid_morphism(b, &ge, &psi) && lambda_inv(&fb, e, &psi) == *phi
    });
    let backward = mon.iter().all(|psi| {
        let phi = lambda_inv(&fb, e, psi);
        crate::algebra::is_algebra_morphism(&fb.algebra, e, &phi) && lambda(&fb, &phi) == *psi
    });
    Ok(AdjunctionReport {
        algebra_homs: alg.len(),
        monoid_homs: mon.len(),
        mutually_inverse: forward && backward,
    })
}

/// Result of comparing `Hom(F(A), F(B))` with `Hom(A, B)` for groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullFaithfulness {
    pub algebra_homs: usize,
    pub group_homs: usize,
    /// Every algebra morphism sends singletons to singletons.
    pub singletons_preserved: bool,
    /// Every algebra morphism is `F(φ)` for exactly one group morphism `φ`.
    pub all_induced: bool,
}

impl FullFaithfulness {
    pub fn holds(&self) -> bool {
        self.singletons_preserved && self.all_induced && self.algebra_homs == self.group_homs
    }
}

pub fn full_faithfulness_check(a: &FinMonoid, b: &FinMonoid) -> Result<FullFaithfulness> {
    if !a.is_group() || !b.is_group() {
        return Err(Error::NotAGroup);
    }
    let fa = functor_f(a)?;
    let fb = functor_f(b)?;
    let alg = algebra_morphisms(&fa.algebra, &fb.algebra);
    let grp = monoid_morphisms(a, b);
    let induced: Vec<Vec<usize>> = grp
        .iter()
        .map(|phi| {
            let m = MonoidMorphism::new(a.clone(), b.clone(), phi.clone()).expect("enumerated morphism");
            functor_f_on_morphism(&m).map(|f| f.map)
        })
        .collect::<Result<_>>()?;
    let singletons_preserved = alg.iter().all(|psi| {
        (0..a.size()).all(|x| fb.masks[psi[fa.singleton(x)]].count_ones() == 1)
    });
    let all_induced = alg
        .iter()
        .all(|psi| induced.iter().filter(|f| *f == psi).count() == 1);
    Ok(FullFaithfulness {
        algebra_homs: alg.len(),
        group_homs: grp.len(),
        singletons_preserved,
        all_induced,
    })
}

/// The substitution `x ↦ x + 1` on `B1[x]`, checked on a battery.
#[derive(Debug, Clone)]
pub struct SubstitutionReport {
    /// Sums, products, 0 and 1 are preserved on every battery pair.
    pub preserves_operations: bool,
    /// The image of the monomial `x`.
    pub image_of_x: Poly,
}

impl SubstitutionReport {
    pub fn maps_x_to_singleton(&self) -> bool {
        self.image_of_x.len() == 1
    }
}

pub fn shift_substitution() -> SubstitutionReport {
    let vars = Variables::new(["x"]).expect("valid name");
    let shift = [Poly::parse("x + 1", &vars).expect("valid polynomial")];
    let sigma = |p: &Poly| p.substitute(&shift).expect("same variables");
    let battery = Battery::exhaustive(&vars);
    let units = sigma(&Poly::zero(&vars)).is_zero() && sigma(&Poly::one(&vars)) == Poly::one(&vars);
    let preserves_operations = units
        && battery.polys.iter().all(|r| {
            battery.polys.iter().all(|s| {
                sigma(&r.add(s).unwrap()) == sigma(r).add(&sigma(s)).unwrap()
                    && sigma(&r.mul(s).unwrap()) == sigma(r).mul(&sigma(s)).unwrap()
            })
        });
    SubstitutionReport {
        preserves_operations,
        image_of_x: sigma(&Poly::var(&vars, 0)),
    }
}

/// Every commutative monoid with at most `max` elements up to isomorphism,
/// unit at index 0, sorted by size then canonical code.
pub fn monoid_zoo(max: usize) -> Result<Vec<FinMonoid>> {
    if max > MAX_MONOID_ZOO {
        return Err(Error::SizeTooLarge {
            size: max,
            max: MAX_MONOID_ZOO,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max {
        let mut seen = BTreeMap::new();
        for mul in monoid_tables(n) {
            let m = FinMonoid::from_flat(default_names(n), mul, 0).expect("search yields monoids");
            let (code, order) = m.canonical_form();
            seen.entry(code).or_insert_with(|| permute_monoid(&m, &order));
        }
        out.extend(seen.into_values());
    }
    Ok(out)
}

fn permute_monoid(m: &FinMonoid, order: &[usize]) -> FinMonoid {
    let n = m.size();
    let mut inv = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    FinMonoid {
        names: default_names(n),
        mul: (0..n * n).map(|i| inv[m.mul(order[i / n], order[i % n])]).collect(),
        unit: inv[m.unit],
    }
}

/// All commutative monoid tables on `n` labelled elements with unit 0.
fn monoid_tables(n: usize) -> Vec<Vec<usize>> {
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        table[x] = x;
        table[x * n] = x;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn associative_so_far(t: &[usize], n: usize) -> bool {
        for a in 0..n {
            for b in 0..n {
                let ab = t[a * n + b];
                if ab == usize::MAX {
                    continue;
                }
                for c in 0..n {
                    let bc = t[b * n + c];
                    if bc == usize::MAX {
                        continue;
                    }
                    let (l, r) = (t[ab * n + c], t[a * n + bc]);
                    if l != usize::MAX && r != usize::MAX && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(t: &mut Vec<usize>, n: usize, cells: &[(usize, usize)], depth: usize, out: &mut Vec<Vec<usize>>) {
        if depth == cells.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = cells[depth];
        for v in 0..n {
            t[i * n + j] = v;
            t[j * n + i] = v;
            if associative_so_far(t, n) {
                go(t, n, cells, depth + 1, out);
            }
        }
        t[i * n + j] = usize::MAX;
        t[j * n + i] = usize::MAX;
    }
    go(&mut table, n, &cells, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idempotent_pair() -> FinMonoid {
        FinMonoid::new(vec!["1".into(), "e".into()], &[vec![0, 1], vec![1, 1]], 0).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            FinMonoid::new(vec!["1".into(), "e".into()], &[vec![0, 1], vec![1, 0]], 1),
            Err(Error::MonoidUnit(1))
        );
        assert!(FinMonoid::new(vec!["1".into(), "x".into(), "y".into()], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]], 0).is_err());
    }

    #[test]
    fn functor_examples() {
        let f1 = functor_f(&FinMonoid::trivial()).unwrap();
        assert!(crate::algebra::isomorphic(&f1.algebra, &FinAlgebra::b1()));
        assert_eq!(functor_f(&FinMonoid::cyclic_group(2)).unwrap().algebra.size(), 4);
        assert!(functor_f(&FinMonoid::cyclic_group(6)).is_err());
    }

    #[test]
    fn direct_image() {
        let (m4, m2) = (FinMonoid::cyclic_group(4), FinMonoid::cyclic_group(2));
        let phi = MonoidMorphism::new(m4.clone(), m2.clone(), vec![0, 1, 0, 1]).unwrap();
        let f = functor_f_on_morphism(&phi).unwrap();
        let (f4, f2) = (functor_f(&m4).unwrap(), functor_f(&m2).unwrap());
        assert_eq!(f.apply(f4.singleton(1)), f2.singleton(1));
        assert_eq!(f.apply(f4.index_of_mask(0b101)), f2.singleton(0));
        let to_trivial = MonoidMorphism::new(m4.clone(), FinMonoid::trivial(), vec![0; 4]).unwrap();
        let g = functor_f_on_morphism(&to_trivial).unwrap();
        assert_eq!(g.apply(0), 0);
        assert!((1..16).all(|x| g.apply(x) == 1));
    }

    #[test]
    fn forgetful_examples() {
        let g = forgetful_g(&FinAlgebra::b1());
        assert_eq!(g.mul_table(), &[0, 0, 0, 1]);
        assert_eq!(g.units(), vec![1]);
        assert!(!g.is_group());
        let f2 = functor_f(&FinMonoid::cyclic_group(2)).unwrap();
        assert_eq!(forgetful_g(&f2.algebra).size(), 4);
    }

    #[test]
    fn adjunction_examples() {
        let r = adjunction_check(&FinMonoid::cyclic_group(2), &FinAlgebra::b1()).unwrap();
        assert_eq!((r.algebra_homs, r.monoid_homs), (1, 1));
        assert!(r.holds());
        let b = FinMonoid::cyclic_group(3);
        let fb = functor_f(&b).unwrap();
        let id: Vec<usize> = (0..fb.algebra.size()).collect();
        assert_eq!(lambda(&fb, &id), (0..3).map(|x| fb.singleton(x)).collect::<Vec<_>>());
    }

    #[test]
    fn units_examples() {
        assert_eq!(FinMonoid::cyclic_group(4).units().len(), 4);
        let f2 = functor_f(&FinMonoid::cyclic_group(2)).unwrap();
        let units = forgetful_g(&f2.algebra).units();
        assert_eq!(units, vec![f2.singleton(0), f2.singleton(1)]);
    }

    #[test]
    fn integrality_examples() {
        let m4 = FinMonoid::cyclic_group(4);
        assert!(m4.is_integral_over(&[0, 1, 2, 3]).unwrap());
        assert!(m4.is_integral_over(&[0, 2]).unwrap());
        assert!(matches!(m4.is_integral_over(&[1]), Err(Error::NotSubmonoid(_))));
        // 1, t, t² with t³ = t²
        let t = FinMonoid::new(
            vec!["1".into(), "t".into(), "t^2".into()],
            &[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
            0,
        )
        .unwrap();
        assert!(!t.is_integral_over(&[0]).unwrap());
        assert!(!idempotent_pair().is_group());
    }

    #[test]
    fn full_faithfulness_examples() {
        let (m2, m3) = (FinMonoid::cyclic_group(2), FinMonoid::cyclic_group(3));
        let r = full_faithfulness_check(&m2, &m2).unwrap();
        assert_eq!((r.algebra_homs, r.group_homs), (2, 2));
        assert!(r.holds());
        let r = full_faithfulness_check(&m2, &m3).unwrap();
        assert_eq!((r.algebra_homs, r.group_homs), (1, 1));
        assert_eq!(full_faithfulness_check(&idempotent_pair(), &m2), Err(Error::NotAGroup));
    }

    #[test]
    fn shift_is_not_induced() {
        let r = shift_substitution();
        assert!(r.preserves_operations);
        assert!(!r.maps_x_to_singleton());
        assert_eq!(r.image_of_x.to_string(), "x + 1");
    }

    #[test]
    fn zoo_counts() {
        let zoo = monoid_zoo(5).unwrap();
        let counts: Vec<usize> = (1..=5).map(|n| zoo.iter().filter(|m| m.size() == n).count()).collect();
        assert_eq!(counts, [1, 2, 5, 19, 78]);
    }
}
