//! Exhaustive generation of small posets and lattices up to isomorphism.
//!
//! Posets are generated as naturally labelled posets (every element is
//! added on top of a down-set of the elements before it), lattices by
//! wrapping such a poset between a new bottom and top and keeping those in
//! which every pair has a join. Duplicates are removed by canonical form.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, Structure, Table};
use crate::lattice::{default_names, FinModule, FinPoset};

/// Naturally labelled posets on `k` elements, as strict down-set masks:
/// `below[i]` holds the elements strictly below `i`, all of them `< i`.
pub fn naturally_labelled_posets(k: usize) -> Vec<Vec<u64>> {
    assert!(k <= 16, "poset enumeration is limited to 16 elements");
    let mut out = Vec::new();
    let mut below = Vec::with_capacity(k);
    grow(k, &mut below, &mut out);
    out
}

fn grow(k: usize, below: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if below.len() == k {
        out.push(below.clone());
        return;
    }
    let m = below.len();
    for mask in 0u64..(1 << m) {
        let closed = (0..m).all(|i| mask >> i & 1 == 0 || below[i] & !mask == 0);
        if closed {
            below.push(mask);
            grow(k, below, out);
            below.pop();
        }
    }
}

fn poset_from_below(below: &[u64]) -> FinPoset {
    let k = below.len();
    let leq = (0..k * k)
        .map(|i| {
            let (a, b) = (i / k, i % k);
            a == b || below[b] >> a & 1 == 1
        })
        .collect();
    FinPoset::new(default_names(k), leq).expect("generated relation is a partial order")
}

/// All posets on `k` elements up to isomorphism.
pub fn posets(k: usize) -> Vec<FinPoset> {
    let mut seen = BTreeMap::new();
    for below in naturally_labelled_posets(k) {
        let p = poset_from_below(&below);
        let rel: Vec<usize> = p.leq_table().iter().map(|&b| usize::from(b)).collect();
        let tables = [Table::Rel(&rel)];
        let s = Structure { n: k, tables: &tables };
        let (code, _) = canonical_form(&s, &vec![0; k]);
        seen.entry(code).or_insert(p);
    }
    seen.into_values().collect()
}

/// Canonical code of a module; bottom stays at index 0.
pub fn module_canonical_form(m: &FinModule) -> (Vec<usize>, Vec<usize>) {
    let n = m.size();
    let tables = [Table::Op(m.sum_table())];
    let s = Structure { n, tables: &tables };
    let init: Vec<usize> = (0..n).map(|x| usize::from(x != 0)).collect();
    canonical_form(&s, &init)
}

/// All lattices with exactly `n` elements up to isomorphism, as modules in
/// canonical labelling (bottom at index 0).
pub fn lattices(n: usize) -> Vec<FinModule> {
    match n {
        0 => return Vec::new(),
        1 => return vec![FinModule::chain(1)],
        _ => {}
    }
    let k = n - 2;
    let mut seen: BTreeMap<Vec<usize>, FinModule> = BTreeMap::new();
    for below in naturally_labelled_posets(k) {
        let leq: Vec<bool> = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                a == 0 || b == n - 1 || a == b || (a > 0 && b > 0 && a < n - 1 && b < n - 1 && below[b - 1] >> (a - 1) & 1 == 1)
            })
            .collect();
        let p = FinPoset::new(default_names(n), leq).expect("bounded extension of a poset");
        let Ok(m) = p.module_of_order() else { continue };
        let (code, order) = module_canonical_form(&m);
        seen.entry(code)
            .or_insert_with(|| m.permuted(&order).expect("canonical arrangement is a permutation"));
    }
    seen.into_values().collect()
}

/// All lattices with at most `n` elements.
pub fn lattices_up_to(n: usize) -> Vec<FinModule> {
    (1..=n).flat_map(lattices).collect()
}
