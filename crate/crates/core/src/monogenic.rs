//! Monogenic B1-algebras: algebras generated by a single element `a`
//! together with 0 and 1, counted up to isomorphisms fixing `a`.
//!
//! Every element of such an algebra is a sum of powers of `a`, so its
//! join-irreducibles are powers. The search walks every lattice of the
//! target size and every shape of the power sequence, places the nonzero
//! powers injectively so that they cover the join-irreducibles, and keeps
//! the placements on which multiplication by `a` is well defined. The
//! whole multiplication is then forced by bilinearity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::algebra::FinAlgebra;
use crate::enumerate::lattices;
use crate::error::{Error, Result};
use crate::lattice::FinModule;
use crate::polynomial::{Monomial, Poly, Variables};

/// Largest size accepted by [`enumerate_monogenic`].
pub const MAX_MONOGENIC: usize = 8;
/// Largest size accepted by [`brute_force_count`].
pub const MAX_BRUTE_FORCE: usize = 4;
/// Largest cap accepted by [`close_presentation`].
pub const MAX_CLOSURE_CAP: usize = 12;

fn generator_vars() -> Variables {
    Variables::new(["a"]).expect("valid name")
}

fn compact(p: &Poly) -> String {
    p.to_string().replace(' ', "")
}

/// A finite list of relations `lhs = rhs` between polynomials in `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub relations: Vec<(Poly, Poly)>,
}

impl Presentation {
    /// Parses `a+1=1; a^3=a^2`.
    pub fn parse(text: &str) -> Result<Self> {
        let vars = generator_vars();
        let mut relations = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let base = offset;
            offset += part.len() + 1;
            if part.trim().is_empty() {
                continue;
            }
            let sides: Vec<&str> = part.split('=').collect();
            if sides.len() != 2 {
                return Err(Error::Syntax {
                    pos: base,
                    msg: "a relation needs exactly one `=`".into(),
                });
            }
            let shift = |e: Error, at: usize| match e {
                Error::Syntax { pos, msg } => Error::Syntax { pos: pos + at, msg },
                Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + at },
                other => other,
            };
            let lhs = Poly::parse(sides[0], &vars).map_err(|e| shift(e, base))?;
            let rhs_at = base + sides[0].len() + 1;
            let rhs = Poly::parse(sides[1], &vars).map_err(|e| shift(e, rhs_at))?;
            relations.push((lhs, rhs));
        }
        Ok(Presentation { relations })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .relations
            .iter()
            .map(|(l, r)| format!("{}={}", compact(l), compact(r)))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// Shape of the power sequence `1, a, a², ...`: `len` distinct nonzero
/// powers `a^0 .. a^(len-1)`, followed either by 0 or by a return to
/// `a^index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerType {
    pub len: usize,
    /// `None` when `a^len = 0`.
    pub index: Option<usize>,
}

impl PowerType {
    fn all(len: usize) -> impl Iterator<Item = PowerType> {
        (0..len)
            .map(move |s| PowerType { len, index: Some(s) })
            .chain(std::iter::once(PowerType { len, index: None }))
    }

    /// Exponent of `a · a^e`, or `None` for 0.
    pub fn succ(&self, e: usize) -> Option<usize> {
        if e + 1 < self.len {
            Some(e + 1)
        } else {
            self.index
        }
    }

    pub fn period(&self) -> Option<usize> {
        self.index.map(|s| self.len - s)
    }
}

/// A monogenic algebra with its generator and a defining presentation.
#[derive(Debug, Clone)]
pub struct MonogenicAlgebra {
    pub algebra: FinAlgebra,
    pub generator: usize,
    pub presentation: Presentation,
}

impl MonogenicAlgebra {
    /// Element indices of `1, a, a², ...` up to the first repeat or 0.
    pub fn powers(&self) -> (Vec<usize>, PowerType) {
        power_sequence(&self.algebra, self.generator)
    }
}

/// The distinct nonzero powers of `a` and the shape of the sequence.
pub fn power_sequence(alg: &FinAlgebra, a: usize) -> (Vec<usize>, PowerType) {
    let mut seq = vec![1];
    loop {
        let next = alg.mul(*seq.last().unwrap(), a);
        if next == 0 {
            let len = seq.len();
            return (seq, PowerType { len, index: None });
        }
        if let Some(s) = seq.iter().position(|&x| x == next) {
            let len = seq.len();
            return (seq, PowerType { len, index: Some(s) });
        }
        seq.push(next);
    }
}

/// `(3n² − 13n + 18) / 2`.
pub fn formula_count(n: u64) -> u64 {
    assert!(n >= 2, "the formula is stated for n >= 2");
    (3 * n * n + 18 - 13 * n) / 2
}

fn monogenic_on(lattice: &FinModule, ty: PowerType, found: &mut BTreeMap<Vec<usize>, (FinAlgebra, usize)>) {
    let n = lattice.size();
    let irreducible: u64 = lattice.join_irreducibles().elements.iter().fold(0, |m, &x| m | 1 << x);
    let mut place = Vec::with_capacity(ty.len);
    let mut used = 1u64;
    place_powers(lattice, ty, irreducible, n, &mut place, &mut used, found);
}

fn place_powers(
    l: &FinModule,
    ty: PowerType,
    irreducible: u64,
    n: usize,
    place: &mut Vec<usize>,
    used: &mut u64,
    found: &mut BTreeMap<Vec<usize>, (FinAlgebra, usize)>,
) {
    let missing = (irreducible & !*used).count_ones() as usize;
    if missing > ty.len - place.len() {
        return;
    }
    if place.len() == ty.len {
        if let Some((alg, a)) = build(l, ty, place) {
            let (code, canon, mark) = alg.canonical(Some(a));
            found.entry(code).or_insert((canon, mark.unwrap()));
        }
        return;
    }
    for x in 1..n {
        if *used >> x & 1 == 0 {
            place.push(x);
            *used |= 1 << x;
            place_powers(l, ty, irreducible, n, place, used, found);
            *used &= !(1 << x);
            place.pop();
        }
    }
}

/// The algebra on `l` in which `a^e` sits at `place[e]`, if there is one.
fn build(l: &FinModule, ty: PowerType, place: &[usize]) -> Option<(FinAlgebra, usize)> {
    let n = l.size();
    let below: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..ty.len).filter(|&e| l.leq(place[e], x)).collect())
        .collect();
    let next = |e: usize| ty.succ(e).map_or(0, |f| place[f]);
    // multiplication by a
    let times_a: Vec<usize> = (0..n).map(|x| l.join_all(below[x].iter().map(|&e| next(e)))).collect();
    if (0..ty.len).any(|e| times_a[place[e]] != next(e)) {
        return None;
    }
    let mut iter = vec![(0..n).collect::<Vec<usize>>()];
    for _ in 1..ty.len {
        let prev = iter.last().unwrap();
        iter.push(prev.iter().map(|&x| times_a[x]).collect());
    }
    let unit = place[0];
    let mut order = vec![0, unit];
    order.extend((1..n).filter(|&x| x != unit));
    let mut inv = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    let mul = (0..n * n)
        .map(|i| {
            let (x, y) = (order[i / n], order[i % n]);
            inv[l.join_all(below[y].iter().map(|&e| iter[e][x]))]
        })
        .collect();
    let module = l.permuted(&order).ok()?;
    let alg = FinAlgebra::from_module(module, mul).ok()?;
    let a = if ty.len > 1 { inv[place[1]] } else { inv[next(0)] };
    let (seq, shape) = power_sequence(&alg, a);
    let expected: Vec<usize> = place.iter().map(|&x| inv[x]).collect();
    (seq == expected && shape == ty).then_some((alg, a))
}

/// Every monogenic algebra with `n` elements up to isomorphism fixing the
/// generator, in canonical labelling and sorted by canonical code.
pub fn enumerate_monogenic(n: usize) -> Result<Vec<MonogenicAlgebra>> {
    if !(2..=MAX_MONOGENIC).contains(&n) {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_MONOGENIC,
        });
    }
    Ok(enumerate_monogenic_unchecked(n))
}

/// [`enumerate_monogenic`] without the size limit.
pub fn enumerate_monogenic_unchecked(n: usize) -> Vec<MonogenicAlgebra> {
    assert!(n >= 2, "a B1-algebra has at least two elements");
    let found: BTreeMap<Vec<usize>, (FinAlgebra, usize)> = lattices(n)
        .par_iter()
        .flat_map_iter(|l| (1..n).flat_map(PowerType::all).map(move |ty| (l, ty)))
        .fold(BTreeMap::new, |mut acc, (l, ty)| {
            monogenic_on(l, ty, &mut acc);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    found
        .into_values()
        .map(|(alg, a)| {
            let presentation = presentation_of(&alg, a);
            let names = element_names(&alg, a);
            let algebra = alg.with_names(names).expect("element names are distinct");
            MonogenicAlgebra {
                algebra,
                generator: a,
                presentation,
            }
        })
        .collect()
}

/// Number of isomorphism classes among `algs` when the generator is
/// forgotten.
pub fn unmarked_count(algs: &[MonogenicAlgebra]) -> usize {
    algs.iter()
        .map(|m| m.algebra.canonical_form(None).0)
        .collect::<BTreeSet<_>>()
        .len()
}

fn power_poly(e: usize) -> Poly {
    Poly::from_monomials(&generator_vars(), [Monomial::new(vec![e as u32])])
}

fn sum_of_powers(exps: impl IntoIterator<Item = usize>) -> Poly {
    Poly::from_monomials(&generator_vars(), exps.into_iter().map(|e| Monomial::new(vec![e as u32])))
}

/// Names each element by a shortest sum of powers of `a` reaching it.
fn element_names(alg: &FinAlgebra, a: usize) -> Vec<String> {
    let (seq, _) = power_sequence(alg, a);
    let mut names: Vec<Option<String>> = vec![None; alg.size()];
    names[0] = Some("0".into());
    let mut subsets: Vec<u64> = (1u64..1 << seq.len()).collect();
    subsets.sort_by_key(|s| (s.count_ones(), s.reverse_bits()));
    for s in subsets {
        let x = alg.module().join_all((0..seq.len()).filter(|&e| s >> e & 1 == 1).map(|e| seq[e]));
        if names[x].is_none() {
            names[x] = Some(compact(&sum_of_powers((0..seq.len()).filter(|&e| s >> e & 1 == 1))));
        }
    }
    names.into_iter().map(|n| n.expect("powers generate the algebra")).collect()
}

/// A defining presentation: the order and join relations among powers,
/// then the relation closing the power sequence.
pub fn presentation_of(alg: &FinAlgebra, a: usize) -> Presentation {
    let (seq, ty) = power_sequence(alg, a);
    let k = seq.len();
    let down = |x: usize| -> u64 { (0..k).filter(|&e| alg.leq(seq[e], x)).fold(0, |m, e| m | 1 << e) };
    let maximal = |mask: u64| -> Vec<usize> {
        (0..k)
            .filter(|&e| mask >> e & 1 == 1)
            .filter(|&e| !(0..k).any(|f| f != e && mask >> f & 1 == 1 && alg.leq(seq[e], seq[f])))
            .collect()
    };
    let join = |mask: u64| alg.module().join_all((0..k).filter(|&e| mask >> e & 1 == 1).map(|e| seq[e]));
    let mut relations = Vec::new();
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|f| (0..f).map(move |e| (e, f))).collect();
    pairs.sort_by_key(|&(e, f)| (f, e));
    for (e, f) in pairs {
        let m = maximal(down(alg.sum(seq[e], seq[f])));
        if m != [e, f] {
            relations.push((sum_of_powers([e, f]), sum_of_powers(m)));
        }
    }
    // antichains of three or more powers whose sum is not reached pairwise
    let closure = |s: u64| -> u64 {
        let mut t = (0..k).filter(|&e| s >> e & 1 == 1).fold(0, |m, e| m | down(seq[e]));
        loop {
            let mut grown = t;
            for e in 0..k {
                for f in 0..e {
                    if t >> e & 1 == 1 && t >> f & 1 == 1 {
                        grown |= down(alg.sum(seq[e], seq[f]));
                    }
                }
            }
            if grown == t {
                return t;
            }
            t = grown;
        }
    };
    for s in 1u64..1 << k {
        if s.count_ones() < 3 || maximal(s).len() != s.count_ones() as usize {
            continue;
        }
        let target = down(join(s));
        if closure(s) != target {
            let lhs = sum_of_powers((0..k).filter(|&e| s >> e & 1 == 1));
            relations.push((lhs, sum_of_powers(maximal(target))));
        }
    }
    let closing = match ty.index {
        None => (power_poly(k), Poly::zero(&generator_vars())),
        Some(s) => (power_poly(k), power_poly(s)),
    };
    // The closing relation pins the quotient inside one truncation, where
    // closure is exact, so a relation may go whenever the size is kept.
    let t = match ty.index {
        None => Truncated { s: k, len: k + 1 },
        Some(s) => Truncated { s, len: k },
    };
    let masks = |rels: &[(Poly, Poly)]| -> Vec<(u32, u32)> {
        rels.iter()
            .chain(std::iter::once(&closing))
            .map(|(l, r)| (t.mask(l), t.mask(r)))
            .collect()
    };
    let size_with = |rels: &[(Poly, Poly)]| close_truncated(&t, &masks(rels)).map(|r| class_count(&r));
    debug_assert_eq!(size_with(&relations), Some(alg.size()));
    for i in (0..relations.len()).rev() {
        let mut fewer = relations.clone();
        fewer.remove(i);
        if size_with(&fewer) == Some(alg.size()) {
            relations = fewer;
        }
    }
    relations.push(closing);
    Presentation { relations }
}

/// Exponent reduction in `B1[a] / (a^(s+p) = a^s)` over bit masks of
/// exponents `0 .. s+p`.
struct Truncated {
    s: usize,
    len: usize,
}

impl Truncated {
    fn reduce(&self, e: usize) -> usize {
        if e < self.len {
            e
        } else {
            self.s + (e - self.s) % (self.len - self.s)
        }
    }

    fn mask(&self, p: &Poly) -> u32 {
        p.monomials()
            .fold(0, |m, mono| m | 1 << self.reduce(mono.exponents()[0] as usize))
    }

    fn shift(&self, x: u32) -> u32 {
        (0..self.len)
            .filter(|&e| x >> e & 1 == 1)
            .fold(0, |m, e| m | 1 << self.reduce(e + 1))
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let mut out = 0;
        for e in (0..self.len).filter(|&e| y >> e & 1 == 1) {
            let mut t = x;
            for _ in 0..e {
                t = self.shift(t);
            }
            out |= t;
        }
        out
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Union-find roots of the congruence on `B1[a] / (a^(s+p) = a^s)`
/// generated by `relations`, or `None` when it identifies 0 and 1.
fn close_truncated(t: &Truncated, relations: &[(u32, u32)]) -> Option<Vec<u32>> {
    let size = 1usize << t.len;
    let mut parent: Vec<u32> = (0..size as u32).collect();
    let mut work: Vec<(u32, u32)> = relations.to_vec();
    while let Some((x, y)) = work.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[rx as usize] = ry;
        for e in 0..t.len {
            work.push((x | 1 << e, y | 1 << e));
        }
        work.push((t.shift(x), t.shift(y)));
    }
    if find(&mut parent, 0) == find(&mut parent, 1) {
        return None;
    }
    Some((0..size as u32).map(|x| find(&mut parent, x)).collect())
}

fn class_count(roots: &[u32]) -> usize {
    roots.iter().enumerate().filter(|&(i, &r)| i as u32 == r).count()
}

/// The quotient algebra for the roots computed by [`close_truncated`].
fn truncated_quotient(t: &Truncated, roots: &[u32]) -> (FinAlgebra, usize) {
    // representatives: fewest monomials, then smallest mask
    let mut rep: BTreeMap<u32, u32> = BTreeMap::new();
    for x in 0..roots.len() as u32 {
        let r = rep.entry(roots[x as usize]).or_insert(x);
        if (x.count_ones(), x) < (r.count_ones(), *r) {
            *r = x;
        }
    }
    let mut reps: Vec<u32> = rep.values().copied().collect();
    reps.sort_by_key(|&r| (r != 0, r != 1, r.count_ones(), r));
    let index: BTreeMap<u32, usize> = reps.iter().enumerate().map(|(i, &r)| (roots[r as usize], i)).collect();
    let n = reps.len();
    let cls = |x: u32| index[&roots[x as usize]];
    let sum = (0..n * n).map(|i| cls(reps[i / n] | reps[i % n])).collect();
    let mul = (0..n * n).map(|i| cls(t.mul(reps[i / n], reps[i % n]))).collect();
    let vars = generator_vars();
    let names = reps
        .iter()
        .map(|&r| {
            compact(&Poly::from_monomials(
                &vars,
                (0..t.len).filter(|&e| r >> e & 1 == 1).map(|e| Monomial::new(vec![e as u32])),
            ))
        })
        .collect();
    let alg = FinAlgebra::from_flat(names, sum, mul).expect("quotient of an algebra is an algebra");
    (alg, cls(1 << t.reduce(1)))
}

/// The algebra `B1[a] / ~` for the congruence generated by `p`, when it has
/// at most `cap` elements.
///
/// Every finite quotient with at most `cap` elements is a quotient of some
/// `B1[a] / (a^(s+p) = a^s)` with `s + p <= cap`; each of these is closed in
/// turn and the largest result is returned. `TooLarge` is reported as soon
/// as one of them exceeds `cap`, which is how divergent presentations show.
/// The result is exact whenever `p` contains a relation `a^m = a^s` or
/// `a^m = 0`; otherwise an infinite quotient all of whose truncations stay
/// within `cap` would go unnoticed.
pub fn close_presentation(p: &Presentation, cap: usize) -> Result<MonogenicAlgebra> {
    if cap > MAX_CLOSURE_CAP {
        return Err(Error::SizeTooLarge {
            size: cap,
            max: MAX_CLOSURE_CAP,
        });
    }
    let mut best: Option<(FinAlgebra, usize)> = None;
    for len in 1..=cap + 1 {
        for s in 0..len {
            let t = Truncated { s, len };
            let rels: Vec<(u32, u32)> = p.relations.iter().map(|(l, r)| (t.mask(l), t.mask(r))).collect();
            let Some(roots) = close_truncated(&t, &rels) else {
                continue;
            };
            let size = class_count(&roots);
            if size > cap {
                return Err(Error::TooLarge { cap });
            }
            if best.as_ref().is_none_or(|(b, _)| size > b.size()) {
                best = Some(truncated_quotient(&t, &roots));
            }
        }
    }
    let (algebra, generator) = best.ok_or(Error::CollapsesZeroOne)?;
    Ok(MonogenicAlgebra {
        algebra,
        generator,
        presentation: p.clone(),
    })
}

/// Independent count for `n <= 4`: every pair of tables on `n` labelled
/// elements with 0 at index 0 and 1 at index 1 that passes the algebra
/// axioms, every generating element, and orbits under relabellings fixing
/// 0 and 1, taken as the least relabelled encoding.
pub fn brute_force_count(n: usize) -> Result<usize> {
    if !(2..=MAX_BRUTE_FORCE).contains(&n) {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_BRUTE_FORCE,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mul_pairs: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let relabellings: Vec<Vec<usize>> = crate::free::Permutation::all(n - 2)
        .into_iter()
        .map(|p| [0, 1].into_iter().chain(p.image().iter().map(|&x| x + 2)).collect())
        .collect();
    let mut classes = BTreeSet::new();
    for sum_code in 0..n.pow(pairs.len() as u32) {
        let mut sum = vec![0; n * n];
        for x in 0..n {
            sum[x * n + x] = x;
            sum[x] = x;
            sum[x * n] = x;
        }
        let mut c = sum_code;
        for &(i, j) in &pairs {
            sum[i * n + j] = c % n;
            sum[j * n + i] = c % n;
            c /= n;
        }
        for mul_code in 0..n.pow(mul_pairs.len() as u32) {
            let mut mul = vec![0; n * n];
            for x in 0..n {
                mul[n + x] = x;
                mul[x * n + 1] = x;
            }
            let mut c = mul_code;
            for &(i, j) in &mul_pairs {
                mul[i * n + j] = c % n;
                mul[j * n + i] = c % n;
                c /= n;
            }
            let Ok(alg) = FinAlgebra::from_flat(crate::lattice::default_names(n), sum.clone(), mul) else {
                continue;
            };
            for a in 0..n {
                if !alg.is_generated_by(a) {
                    continue;
                }
                let code = relabellings
                    .iter()
                    .map(|order| {
                        let mut inv = vec![0; n];
                        for (new, &old) in order.iter().enumerate() {
                            inv[old] = new;
                        }
                        let mut code: Vec<usize> = (0..n * n)
                            .map(|i| inv[alg.sum(order[i / n], order[i % n])])
                            .chain((0..n * n).map(|i| inv[alg.mul(order[i / n], order[i % n])]))
                            .collect();
                        code.push(inv[a]);
                        code
                    })
                    .min()
                    .unwrap();
                classes.insert(code);
            }
        }
    }
    Ok(classes.len())
}
