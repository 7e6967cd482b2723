//! The free B1-algebra `B1[A]` on a finite variable list.
//!
//! A polynomial is a finite set of monomials (exponent vectors): the sum is
//! set union and the product is the Minkowski sum `{a + b : a ∈ R, b ∈ S}`.
//! The empty set is 0 and the set holding the zero vector is 1.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::scalar::B1;

/// Largest variable count accepted by [`maxspec`].
pub const MAX_SPEC_VARS: usize = 10;

/// An ordered list of variable names shared by polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 64 {
            return Err(Error::SizeTooLarge {
                size: names.len(),
                max: 64,
            });
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("`{n}` is not a variable name"),
                });
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        Ok(Variables(names.into()))
    }

    /// `x1, .., xn`.
    pub fn numbered(n: usize) -> Self {
        Variables::new((1..=n).map(|i| format!("x{i}"))).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Bit mask of the named variables.
    pub fn mask(&self, names: &[&str]) -> Result<u64> {
        names.iter().try_fold(0u64, |m, n| {
            let i = self.index_of(n).ok_or_else(|| Error::UnknownVariable {
                name: n.to_string(),
                pos: 0,
            })?;
            Ok(m | 1 << i)
        })
    }
}

/// An exponent vector, ordered graded-lexicographically: by total degree,
/// then by exponents in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The unit vector `δ_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when every variable in `mask` has exponent 0.
    pub fn avoids(&self, mask: u64) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == 0 || mask >> i & 1 == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `B1[A]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Variables,
    monos: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero(vars: &Variables) -> Self {
        Poly {
            vars: vars.clone(),
            monos: BTreeSet::new(),
        }
    }

    pub fn one(vars: &Variables) -> Self {
        Poly::from_monomials(vars, [Monomial::one(vars.len())])
    }

    pub fn var(vars: &Variables, i: usize) -> Self {
        Poly::from_monomials(vars, [Monomial::var(vars.len(), i)])
    }

    pub fn from_monomials(vars: &Variables, monos: impl IntoIterator<Item = Monomial>) -> Self {
        let monos: BTreeSet<Monomial> = monos.into_iter().collect();
        assert!(monos.iter().all(|m| m.0.len() == vars.len()), "monomial arity mismatch");
        Poly {
            vars: vars.clone(),
            monos,
        }
    }

    /// Polynomial from exponent vectors.
    pub fn from_exponents(vars: &Variables, exps: &[&[u32]]) -> Self {
        Poly::from_monomials(vars, exps.iter().map(|e| Monomial(e.to_vec())))
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.monos.iter()
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monos.contains(m)
    }

    fn same_vars(&self, other: &Poly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    /// Set union.
    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_vars(other)?;
        Ok(Poly {
            vars: self.vars.clone(),
            monos: self.monos.union(&other.monos).cloned().collect(),
        })
    }

    /// Minkowski sum of exponent sets.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_vars(other)?;
        let monos = self
            .monos
            .iter()
            .flat_map(|a| other.monos.iter().map(move |b| a.times(b)))
            .collect();
        Ok(Poly {
            vars: self.vars.clone(),
            monos,
        })
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(&self.vars), |acc, _| acc.mul(self).expect("same variables"))
    }

    /// `Σ_{x ∈ F} Π_a φ(a)^{x(a)}` in a finite algebra.
    pub fn evaluate(&self, alg: &FinAlgebra, phi: &[usize]) -> usize {
        assert_eq!(phi.len(), self.vars.len(), "assignment must cover every variable");
        self.monos.iter().fold(0, |acc, m| {
            let term = m
                .0
                .iter()
                .zip(phi)
                .fold(1, |t, (&e, &v)| alg.mul(t, alg.pow(v, e)));
            alg.sum(acc, term)
        })
    }

    /// Evaluation at a point of `B1^n`.
    pub fn evaluate_b1(&self, point: &[B1]) -> B1 {
        let idx: Vec<usize> = point.iter().map(|&b| usize::from(bool::from(b))).collect();
        B1::from(self.evaluate(&FinAlgebra::b1(), &idx) == 1)
    }

    /// Substitutes `images[i]` for variable `i`; the images share a
    /// (possibly different) variable list.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.vars.len() {
            return Err(Error::VariableMismatch);
        }
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| self.vars.clone());
        if images.iter().any(|p| p.vars != target) {
            return Err(Error::VariableMismatch);
        }
        self.monos.iter().try_fold(Poly::zero(&target), |acc, m| {
            let term = m
                .0
                .iter()
                .zip(images)
                .try_fold(Poly::one(&target), |t, (&e, img)| t.mul(&img.pow(e)))?;
            acc.add(&term)
        })
    }

    /// `F_I(R)`: the monomials with exponent 0 on every variable of `I`.
    pub fn f_i(&self, zero_set: u64) -> Poly {
        Poly {
            vars: self.vars.clone(),
            monos: self.monos.iter().filter(|m| m.avoids(zero_set)).cloned().collect(),
        }
    }

    pub fn parse(text: &str, vars: &Variables) -> Result<Poly> {
        Parser { text, vars, pos: 0 }.poly()
    }
}

/// `R ∼_I S`: `F_I(R)` and `F_I(S)` are both empty or both nonempty.
pub fn sim_i(r: &Poly, s: &Poly, zero_set: u64) -> Result<bool> {
    r.same_vars(s)?;
    Ok(r.f_i(zero_set).is_zero() == s.f_i(zero_set).is_zero())
}

fn render_monomial(f: &mut fmt::Formatter<'_>, vars: &Variables, m: &Monomial) -> fmt::Result {
    let factors: Vec<String> = m
        .0
        .iter()
        .zip(vars.names())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if factors.is_empty() {
        f.write_str("1")
    } else {
        f.write_str(&factors.join("*"))
    }
}

/// Canonical text: monomials from highest to lowest, joined by ` + `.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monos.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monos.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            render_monomial(f, &self.vars, m)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a str,
    vars: &'a Variables,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos].parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent out of range".into(),
        })
    }

    fn poly(mut self) -> Result<Poly> {
        self.skip_ws();
        let mut monos = BTreeSet::new();
        if self.peek() == Some('0') {
            let save = self.pos;
            self.number()?;
            if self.pos - save != 1 {
                return Err(Error::Syntax {
                    pos: save,
                    msg: "expected `0`, `1` or a variable".into(),
                });
            }
        } else {
            monos.insert(self.term()?);
            while self.eat('+') {
                monos.insert(self.term()?);
            }
        }
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(Poly {
            vars: self.vars.clone(),
            monos,
        })
    }

    fn term(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let mut exps = vec![0u32; self.vars.len()];
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            if self.number()? != 1 {
                return Err(Error::Syntax {
                    pos: start,
                    msg: "only `1` may appear as a constant term".into(),
                });
            }
            return Ok(Monomial(exps));
        }
        loop {
            let (i, e) = self.factor()?;
            exps[i] = exps[i].checked_add(e).ok_or_else(|| self.error("exponent overflow"))?;
            if !self.eat('*') {
                return Ok(Monomial(exps));
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            Some(_) => return Err(self.error("expected a variable")),
            None => return Err(self.error("unexpected end of input")),
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        let i = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            pos: start,
        })?;
        let e = if self.eat('^') { self.number()? } else { 1 };
        Ok((i, e))
    }
}

/// A deterministic list of test polynomials.
#[derive(Debug, Clone)]
pub struct Battery {
    pub polys: Vec<Poly>,
    /// True when the list is every polynomial of at most three monomials
    /// with all exponents at most 2.
    pub exhaustive: bool,
}

/// Monomials with every exponent at most `max_exp`, in increasing order.
pub fn bounded_monomials(nvars: usize, max_exp: u32) -> Vec<Monomial> {
    let base = max_exp as usize + 1;
    let total = base.pow(nvars as u32);
    let mut out: Vec<Monomial> = (0..total)
        .map(|mut code| {
            let mut e = vec![0u32; nvars];
            for slot in e.iter_mut() {
                *slot = (code % base) as u32;
                code /= base;
            }
            Monomial(e)
        })
        .collect();
    out.sort();
    out
}

impl Battery {
    /// Every polynomial with at most three monomials and exponents at most 2.
    pub fn exhaustive(vars: &Variables) -> Self {
        let monos = bounded_monomials(vars.len(), 2);
        let mut polys = vec![Poly::zero(vars)];
        for i in 0..monos.len() {
            polys.push(Poly::from_monomials(vars, [monos[i].clone()]));
            for j in i + 1..monos.len() {
                polys.push(Poly::from_monomials(vars, [monos[i].clone(), monos[j].clone()]));
                for k in j + 1..monos.len() {
                    polys.push(Poly::from_monomials(
                        vars,
                        [monos[i].clone(), monos[j].clone(), monos[k].clone()],
                    ));
                }
            }
        }
        Battery {
            polys,
            exhaustive: true,
        }
    }

    /// Every single monomial with exponents at most 2, plus `samples`
    /// seeded random polynomials of two or three such monomials.
    pub fn sampled(vars: &Variables, samples: usize, seed: u64) -> Self {
        let monos = bounded_monomials(vars.len(), 2);
        let mut polys = vec![Poly::zero(vars)];
        polys.extend(monos.iter().map(|m| Poly::from_monomials(vars, [m.clone()])));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let k = rng.gen_range(2..=3);
            let picked: Vec<Monomial> = (0..k).map(|_| monos[rng.gen_range(0..monos.len())].clone()).collect();
            polys.push(Poly::from_monomials(vars, picked));
        }
        Battery {
            polys,
            exhaustive: false,
        }
    }

    /// Exhaustive up to four variables, sampled beyond that.
    pub fn standard(vars: &Variables, seed: u64) -> Self {
        if vars.len() <= 4 {
            Battery::exhaustive(vars)
        } else {
            Battery::sampled(vars, 2000, seed)
        }
    }
}

/// One maximal congruence `∼_I` of `B1[x1..xn]`, viewed as the point of
/// `B1^n` sending the variables of `I` to 0 and the others to 1.
#[derive(Debug, Clone)]
pub struct SpecPoint {
    pub zero_set: u64,
    pub assignment: Vec<B1>,
    pub battery_size: usize,
    /// First battery polynomial on which `∼_I` and evaluation disagree.
    pub mismatch: Option<Poly>,
}

impl SpecPoint {
    pub fn verified(&self) -> bool {
        self.mismatch.is_none()
    }

    /// Recovers `I` as the set of variables equivalent to 0.
    pub fn recovered_zero_set(&self, vars: &Variables) -> u64 {
        let zero = Poly::zero(vars);
        (0..vars.len())
            .filter(|&i| sim_i(&Poly::var(vars, i), &zero, self.zero_set).unwrap())
            .fold(0, |m, i| m | 1 << i)
    }
}

#[derive(Debug, Clone)]
pub struct MaxSpec {
    pub vars: Variables,
    pub points: Vec<SpecPoint>,
    pub battery_exhaustive: bool,
    /// First pair of points no witness separates.
    pub indistinct: Option<(u64, u64)>,
}

impl MaxSpec {
    pub fn all_verified(&self) -> bool {
        self.points.iter().all(SpecPoint::verified)
    }

    pub fn pairwise_distinct(&self) -> bool {
        self.indistinct.is_none()
    }
}

/// A polynomial separating `∼_I` from `∼_J`: a variable in exactly one of
/// the two sets is `∼ 0` for one and not the other.
pub fn distinguishing_witness(vars: &Variables, i: u64, j: u64) -> Option<Poly> {
    let diff = i ^ j;
    (diff != 0).then(|| Poly::var(vars, diff.trailing_zeros() as usize))
}

/// The points of the maximal spectrum of `B1[x1..xn]`, one per subset of
/// variables, each checked against evaluation on `battery`.
pub fn maxspec(vars: &Variables, battery: &Battery) -> Result<MaxSpec> {
    let n = vars.len();
    if n == 0 || n > MAX_SPEC_VARS {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_SPEC_VARS,
        });
    }
    let zero = Poly::zero(vars);
    let one = Poly::one(vars);
    let points: Vec<SpecPoint> = (0u64..1 << n)
        .into_par_iter()
        .map(|zero_set| {
            let assignment: Vec<B1> = (0..n).map(|i| B1::from(zero_set >> i & 1 == 0)).collect();
            let mismatch = battery
                .polys
                .iter()
                .find(|p| {
                    let value = p.evaluate_b1(&assignment);
                    sim_i(p, &zero, zero_set).unwrap() != (value == B1::Zero)
                        || sim_i(p, &one, zero_set).unwrap() != (value == B1::One)
                })
                .cloned();
            SpecPoint {
                zero_set,
                assignment,
                battery_size: battery.polys.len(),
                mismatch,
            }
        })
        .collect();
    let indistinct = (0u64..1 << n)
        .flat_map(|i| (i + 1..1 << n).map(move |j| (i, j)))
        .find(|&(i, j)| match distinguishing_witness(vars, i, j) {
            Some(w) => sim_i(&w, &zero, i).unwrap() == sim_i(&w, &zero, j).unwrap(),
            None => true,
        });
    Ok(MaxSpec {
        vars: vars.clone(),
        points,
        battery_exhaustive: battery.exhaustive,
        indistinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Variables {
        Variables::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(s, &xy()).unwrap()
    }

    #[test]
    fn addition_examples() {
        let r = p("x + y^2");
        assert_eq!(r.add(&Poly::zero(&xy())).unwrap(), r);
        assert_eq!(p("x").add(&p("x")).unwrap(), p("x"));
        assert_eq!(p("x + y^2").add(&p("y^2 + 1")).unwrap(), p("x + y^2 + 1"));
    }

    #[test]
    fn multiplication_examples() {
        let r = p("x*y + x^2 + 1");
        assert_eq!(r.mul(&Poly::one(&xy())).unwrap(), r);
        assert!(r.mul(&Poly::zero(&xy())).unwrap().is_zero());
        assert_eq!(p("x + 1").mul(&p("x + 1")).unwrap(), p("x^2 + x + 1"));
    }

    #[test]
    fn mismatched_variables() {
        let other = Variables::new(["x"]).unwrap();
        let q = Poly::var(&other, 0);
        assert_eq!(p("x").add(&q), Err(Error::VariableMismatch));
        assert_eq!(p("x").mul(&q), Err(Error::VariableMismatch));
        assert_eq!(sim_i(&p("x"), &q, 0), Err(Error::VariableMismatch));
    }

    #[test]
    fn parse_examples() {
        assert!(p("0").is_zero());
        let q = p("x^2*y + x + 1");
        let exps: Vec<&[u32]> = q.monomials().rev().map(Monomial::exponents).collect();
        assert_eq!(exps, vec![&[2, 1][..], &[1, 0], &[0, 0]]);
        assert_eq!(p("x + x"), p("x"));
        assert_eq!(p("x*x"), p("x^2"));
        assert_eq!(p(" y * x ^ 2 "), p("x^2*y"));
    }

    #[test]
    fn parse_errors() {
        let v = xy();
        assert!(matches!(Poly::parse("x +", &v), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(Poly::parse("2", &v), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(Poly::parse("x + 0", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("x y", &v), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(
            Poly::parse("x + z", &v),
            Err(Error::UnknownVariable {
                name: "z".into(),
                pos: 4
            })
        );
    }

    #[test]
    fn render_is_canonical() {
        for s in ["0", "1", "x", "x^2*y + x + 1", "y^3 + x*y + y"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("1 + y + x").to_string(), "x + y + 1");
    }

    #[test]
    fn filter_examples() {
        let r = p("x*y + y^2");
        assert_eq!(r.f_i(0), r);
        assert_eq!(r.f_i(0b01), p("y^2"));
    }

    #[test]
    fn sim_examples() {
        let zx = xy().mask(&["x"]).unwrap();
        assert!(sim_i(&p("x + y"), &p("x + y"), zx).unwrap());
        assert!(sim_i(&p("x"), &p("0"), zx).unwrap());
        assert!(sim_i(&p("x + 1"), &p("1"), zx).unwrap());
        assert!(!sim_i(&p("0"), &p("1"), zx).unwrap());
    }

    #[test]
    fn evaluate_examples() {
        let g = crate::algebra::tests::golden();
        let v = Variables::new(["x"]).unwrap();
        let a = g.index_of("a").unwrap();
        assert_eq!(Poly::zero(&v).evaluate(&g, &[a]), 0);
        assert_eq!(Poly::parse("x^2", &v).unwrap().evaluate(&g, &[a]), g.mul(a, a));
        assert_eq!(
            Poly::parse("x^2 + 1", &v).unwrap().evaluate(&g, &[a]),
            g.index_of("a+1").unwrap()
        );
    }

    #[test]
    fn maxspec_small() {
        let v1 = Variables::numbered(1);
        let s = maxspec(&v1, &Battery::exhaustive(&v1)).unwrap();
        assert_eq!(s.points.len(), 2);
        assert!(s.all_verified() && s.pairwise_distinct());
        let v3 = Variables::numbered(3);
        let s = maxspec(&v3, &Battery::exhaustive(&v3)).unwrap();
        assert_eq!(s.points.len(), 8);
        for pt in &s.points {
            assert_eq!(pt.recovered_zero_set(&v3), pt.zero_set);
        }
        assert!(maxspec(&Variables::numbered(11), &Battery::sampled(&v1, 0, 0)).is_err());
    }

    #[test]
    fn witness_separates_x_from_y() {
        let v = xy();
        let (ix, iy) = (v.mask(&["x"]).unwrap(), v.mask(&["y"]).unwrap());
        let w = distinguishing_witness(&v, ix, iy).unwrap();
        assert_eq!(w, p("x"));
        let zero = Poly::zero(&v);
        assert!(sim_i(&w, &zero, ix).unwrap());
        assert!(!sim_i(&w, &zero, iy).unwrap());
    }

    #[test]
    fn battery_sizes() {
        // 1 + 9 + 36 + 84 polynomials over the nine monomials in x, y
        assert_eq!(Battery::exhaustive(&xy()).polys.len(), 130);
    }

    #[test]
    fn substitution_is_multiplicative() {
        let v = Variables::new(["x"]).unwrap();
        let shift = [Poly::parse("x + 1", &v).unwrap()];
        let r = Poly::parse("x^2 + 1", &v).unwrap();
        assert_eq!(r.substitute(&shift).unwrap(), Poly::parse("x^2 + x + 1", &v).unwrap());
    }
}
