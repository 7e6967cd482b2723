//! Free B1-modules `P(A)` over a finite basis and their automorphism group.
//!
//! Subsets of the basis `{1, .., n}` are bit vectors: basis element `i + 1`
//! is bit `i`, and elements are listed in increasing numeric order, so the
//! empty set is index 0 and the singleton of basis element `i + 1` is
//! index `1 << i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{FinModule, ModuleMorphism};

/// Largest rank for which automorphism groups are computed.
pub const MAX_AUT_RANK: usize = 6;

/// The free module on `rank` generators, i.e. the powerset lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeModule {
    pub rank: usize,
}

impl FreeModule {
    pub fn new(rank: usize) -> Result<Self> {
        if rank > 16 {
            return Err(Error::SizeTooLarge { size: rank, max: 16 });
        }
        Ok(FreeModule { rank })
    }

    pub fn size(&self) -> usize {
        1 << self.rank
    }

    /// `j_A`: basis element `i` (0-based) to its singleton.
    pub fn singleton(&self, i: usize) -> usize {
        1 << i
    }

    pub fn subset_name(mask: usize) -> String {
        let inner: Vec<String> = (0..usize::BITS as usize)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn as_module(&self) -> FinModule {
        let n = self.size();
        let names = (0..n).map(Self::subset_name).collect();
        let sum = (0..n * n).map(|i| (i / n) | (i % n)).collect();
        FinModule::from_flat(names, sum).expect("union is a semilattice operation")
    }
}

/// A bijection of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijective);
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    /// Image of a subset mask, `B ↦ f[B]`.
    pub fn apply_set(&self, mask: usize) -> usize {
        (0..self.size())
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |acc, i| acc | 1 << self.image[i])
    }

    /// Non-trivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { image: cur.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    go(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        go(n, &mut cur, &mut used, &mut out);
        out
    }
}

/// Cycle notation on the 1-based basis, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The unique morphism `ρ : P(A) -> M` with `ρ({x}) = phi[x]`, given by
/// `ρ(C) = ∨_{x ∈ C} phi[x]`.
pub fn free_extend(phi: &[usize], target: &FinModule) -> Result<ModuleMorphism> {
    let free = FreeModule::new(phi.len())?;
    if phi.iter().any(|&m| m >= target.size()) {
        return Err(Error::NotMorphism("basis image outside the target".into()));
    }
    let map = (0..free.size())
        .map(|c| target.join_all((0..phi.len()).filter(|&x| c >> x & 1 == 1).map(|x| phi[x])))
        .collect();
    ModuleMorphism::new(free.as_module(), target.clone(), map)
}

/// The automorphism `B ↦ f[B]` of the free module of rank `f.size()`.
pub fn perm_to_aut(f: &Permutation) -> ModuleMorphism {
    let free = FreeModule { rank: f.size() };
    let m = free.as_module();
    let map = (0..free.size()).map(|b| f.apply_set(b)).collect();
    ModuleMorphism::new(m.clone(), m, map).expect("permutations induce automorphisms")
}

/// An automorphism together with the permutation of atoms inducing it.
#[derive(Debug, Clone)]
pub struct Automorphism {
    pub permutation: Permutation,
    pub morphism: ModuleMorphism,
}

/// The group of automorphisms of the free module of rank `n`. Candidate
/// atom images are enumerated as permutations, and each candidate is kept
/// only if the induced map checks out as a bijective module morphism.
pub fn automorphisms(n: usize) -> Result<Vec<Automorphism>> {
    if n > MAX_AUT_RANK {
        return Err(Error::SizeTooLarge {
            size: n,
            max: MAX_AUT_RANK,
        });
    }
    let m = FreeModule { rank: n }.as_module();
    Ok(Permutation::all(n)
        .into_iter()
        .filter_map(|p| {
            let map = (0..1 << n).map(|b| p.apply_set(b)).collect();
            let morphism = ModuleMorphism::new(m.clone(), m.clone(), map).ok()?;
            morphism.is_bijective().then_some(Automorphism {
                permutation: p,
                morphism,
            })
        })
        .collect())
}

/// The permutation of atoms of a free-module automorphism, if it maps every
/// singleton to a singleton.
pub fn atom_permutation(aut: &ModuleMorphism) -> Option<Permutation> {
    let size = aut.source.size();
    let rank = size.trailing_zeros() as usize;
    let image: Option<Vec<usize>> = (0..rank)
        .map(|i| {
            let img = aut.apply(1 << i);
            img.is_power_of_two().then(|| img.trailing_zeros() as usize)
        })
        .collect();
    Permutation::new(image?).ok()
}

/// Every morphism `source -> target`, by backtracking over element images
/// in index order with the sum law checked as soon as it is decidable.
pub fn module_morphisms(source: &FinModule, target: &FinModule) -> Vec<Vec<usize>> {
    search_maps(source, target, false)
}

/// Every bijective self-morphism of `m`.
pub fn module_automorphisms(m: &FinModule) -> Vec<Vec<usize>> {
    search_maps(m, m, true)
}

fn search_maps(source: &FinModule, target: &FinModule, bijective: bool) -> Vec<Vec<usize>> {
    let n = source.size();
    let mut out = Vec::new();
    if bijective && n != target.size() {
        return out;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; target.size()];
    map[0] = 0;
    used[0] = true;
    backtrack(source, target, bijective, 1, &mut map, &mut used, &mut out);
    out
}

fn backtrack(
    source: &FinModule,
    target: &FinModule,
    bijective: bool,
    x: usize,
    map: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let n = source.size();
    if x == n {
        out.push(map.to_vec());
        return;
    }
    for y in 0..target.size() {
        if bijective && used[y] {
            continue;
        }
        map[x] = y;
        let ok = (0..=x).all(|a| {
            (0..=x).all(|b| {
                let s = source.sum(a, b);
                s > x || (a != x && b != x && s != x) || map[s] == target.sum(map[a], map[b])
            })
        });
        if ok {
            used[y] = true;
            backtrack(source, target, bijective, x + 1, map, used, out);
            used[y] = false;
        }
        map[x] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn singleton_basis_extension() {
        let c = FinModule::chain(4);
        let rho = free_extend(&[2], &c).unwrap();
        assert_eq!(rho.map, vec![0, 2]);
    }

    #[test]
    fn extension_into_chain_takes_max() {
        let c = FinModule::chain(3);
        let rho = free_extend(&[1, 2], &c).unwrap();
        assert_eq!(rho.apply(0b11), 2);
        assert_eq!(rho.apply(0), 0);
    }

    #[test]
    fn extension_is_unique_morphism() {
        let targets = [FinModule::b1(), FinModule::chain(3), FreeModule { rank: 2 }.as_module(), FinModule::chain(4)];
        for rank in 0..=3 {
            let free = FreeModule { rank }.as_module();
            for m in &targets {
                let all = module_morphisms(&free, m);
                // every morphism is determined by the images of the singletons
                for f in &all {
                    let phi: Vec<usize> = (0..rank).map(|i| f[1 << i]).collect();
                    assert_eq!(&free_extend(&phi, m).unwrap().map, f);
                }
                assert_eq!(all.len(), m.size().pow(rank as u32));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(0).unwrap().len(), 1);
        assert_eq!(automorphisms(1).unwrap().len(), 1);
        for n in 2..=4 {
            assert_eq!(automorphisms(n).unwrap().len(), factorial(n));
        }
        assert!(matches!(automorphisms(7), Err(Error::SizeTooLarge { .. })));
    }

    #[test]
    fn brute_force_finds_only_permutations() {
        for n in 0..=3 {
            let m = FreeModule { rank: n }.as_module();
            let all = module_automorphisms(&m);
            assert_eq!(all.len(), factorial(n));
            for map in all {
                let f = ModuleMorphism::new(m.clone(), m.clone(), map).unwrap();
                let p = atom_permutation(&f).expect("atoms go to atoms");
                assert_eq!(perm_to_aut(&p), f);
            }
        }
    }

    #[test]
    fn transposition_on_two_points() {
        let t = Permutation::new(vec![1, 0]).unwrap();
        let a = perm_to_aut(&t);
        assert_eq!(a.map, vec![0, 2, 1, 3]);
        assert_eq!(t.to_string(), "(1 2)");
        assert_eq!(perm_to_aut(&Permutation::identity(2)).map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn three_cycle_orbit() {
        let c = Permutation::new(vec![1, 2, 0]).unwrap();
        let a = perm_to_aut(&c);
        let mut x = 1;
        let mut orbit = vec![x];
        loop {
            x = a.apply(x);
            if x == 1 {
                break;
            }
            orbit.push(x);
        }
        assert_eq!(orbit, vec![1, 2, 4]);
    }

    #[test]
    fn perm_to_aut_is_homomorphism() {
        for n in 0..=4 {
            let perms = Permutation::all(n);
            for f in &perms {
                for g in &perms {
                    let lhs = perm_to_aut(&f.compose(g));
                    let rhs = perm_to_aut(f).compose(&perm_to_aut(g)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
