//! Canonical labelling and isomorphism search for small finite structures.
//!
//! A structure is a carrier `0..n` with a list of `n x n` tables. Operation
//! tables hold element indices, relation tables hold plain values (for
//! example the 0/1 entries of an order). Initial colours pin elements that
//! an isomorphism must respect (bottom, unit, a marked generator, ...).
//!
//! Canonical forms use colour refinement followed by individualisation, so
//! structures with large automorphism groups stay cheap.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy)]
pub enum Table<'a> {
    Op(&'a [usize]),
    Rel(&'a [usize]),
}

impl Table<'_> {
    fn at(&self, n: usize, i: usize, j: usize) -> usize {
        match self {
            Table::Op(t) | Table::Rel(t) => t[i * n + j],
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Structure<'a> {
    pub n: usize,
    pub tables: &'a [Table<'a>],
}

type Signature = (usize, Vec<Vec<(usize, usize, usize)>>);

fn signature(s: &Structure<'_>, colors: &[usize], x: usize) -> Signature {
    let n = s.n;
    let rows = s
        .tables
        .iter()
        .map(|t| {
            let mut row: Vec<(usize, usize, usize)> = (0..n)
                .map(|y| match t {
                    Table::Op(_) => (colors[t.at(n, x, y)], colors[t.at(n, y, x)], colors[y]),
                    Table::Rel(_) => (t.at(n, x, y), t.at(n, y, x), colors[y]),
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    (colors[x], rows)
}

fn count_colors(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Jointly refines the colourings of several structures until stable.
/// Colours are ranks of signatures, so the result is isomorphism invariant
/// and comparable across the structures refined together.
pub fn refine_joint(structs: &[Structure<'_>], initial: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = initial.to_vec();
    loop {
        let before: usize = colors.iter().map(|c| count_colors(c)).sum();
        let sigs: Vec<Vec<Signature>> = structs
            .iter()
            .zip(&colors)
            .map(|(s, c)| (0..s.n).map(|x| signature(s, c, x)).collect())
            .collect();
        let mut ranks: BTreeMap<&Signature, usize> = BTreeMap::new();
        for sig in sigs.iter().flatten() {
            ranks.insert(sig, 0);
        }
        for (i, v) in ranks.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|ss| ss.iter().map(|sig| ranks[sig]).collect())
            .collect();
        let after: usize = next.iter().map(|c| count_colors(c)).sum();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

pub fn refine(s: &Structure<'_>, initial: &[usize]) -> Vec<usize> {
    refine_joint(std::slice::from_ref(s), &[initial.to_vec()])
        .pop()
        .unwrap()
}

/// Relabels `s` so that new position `i` holds old element `order[i]`,
/// producing the table entries followed by the initial colours.
pub fn encode(s: &Structure<'_>, initial: &[usize], order: &[usize]) -> Vec<usize> {
    let n = s.n;
    let mut inv = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    let mut out = Vec::with_capacity(s.tables.len() * n * n + n);
    for t in s.tables {
        for &i in order {
            for &j in order {
                out.push(match t {
                    Table::Op(_) => inv[t.at(n, i, j)],
                    Table::Rel(_) => t.at(n, i, j),
                });
            }
        }
    }
    out.extend(order.iter().map(|&x| initial[x]));
    out
}

/// Canonical form: the minimal encoding over all colour-respecting
/// arrangements reachable by individualisation-refinement. Two structures
/// with the same initial colouring scheme are isomorphic iff their
/// canonical forms are equal. Returns the encoding and the arrangement.
pub fn canonical_form(s: &Structure<'_>, initial: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let start = refine(s, initial);
    search(s, initial, start, &mut best);
    best.expect("search visits at least one leaf")
}

fn search(
    s: &Structure<'_>,
    initial: &[usize],
    colors: Vec<usize>,
    best: &mut Option<(Vec<usize>, Vec<usize>)>,
) {
    let n = s.n;
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        cells.entry(colors[x]).or_default().push(x);
    }
    match cells.values().find(|c| c.len() > 1) {
        None => {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&x| colors[x]);
            let code = encode(s, initial, &order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
        }
        Some(cell) => {
            for &x in cell {
                let split: Vec<usize> = (0..n)
                    .map(|y| 2 * colors[y] + usize::from(colors[y] == colors[x] && y != x))
                    .collect();
                let refined = refine(s, &split);
                search(s, initial, refined, best);
            }
        }
    }
}

/// Backtracking search for an isomorphism `a -> b` respecting the initial
/// colours. Candidates are pruned by the jointly refined colouring and by
/// checking every table entry between already-mapped elements.
pub fn find_isomorphism(
    a: &Structure<'_>,
    init_a: &[usize],
    b: &Structure<'_>,
    init_b: &[usize],
) -> Option<Vec<usize>> {
    if a.n != b.n || a.tables.len() != b.tables.len() {
        return None;
    }
    let n = a.n;
    let colors = refine_joint(&[*a, *b], &[init_a.to_vec(), init_b.to_vec()]);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (ca.iter().filter(|&&c| c == ca[x]).count(), x));
    if extend(a, b, ca, cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Structure<'_>,
    b: &Structure<'_>,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.n;
    if depth == n {
        return is_isomorphism(a, b, map);
    }
    let x = order[depth];
    for y in 0..n {
        if used[y] || cb[y] != ca[x] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, &order[..=depth]) && extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

fn is_isomorphism(a: &Structure<'_>, b: &Structure<'_>, map: &[usize]) -> bool {
    let n = a.n;
    a.tables.iter().zip(b.tables).all(|(ta, tb)| {
        (0..n).all(|p| {
            (0..n).all(|q| {
                let (va, vb) = (ta.at(n, p, q), tb.at(n, map[p], map[q]));
                match ta {
                    Table::Op(_) => map[va] == vb,
                    Table::Rel(_) => va == vb,
                }
            })
        })
    })
}

fn consistent(a: &Structure<'_>, b: &Structure<'_>, map: &[usize], mapped: &[usize]) -> bool {
    let n = a.n;
    let x = *mapped.last().unwrap();
    for (ta, tb) in a.tables.iter().zip(b.tables) {
        for &y in mapped {
            for (p, q) in [(x, y), (y, x)] {
                let va = ta.at(n, p, q);
                let vb = tb.at(n, map[p], map[q]);
                let ok = match ta {
                    Table::Op(_) => map[va] == usize::MAX || map[va] == vb,
                    Table::Rel(_) => va == vb,
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}
