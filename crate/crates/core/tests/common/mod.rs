//! Independent reference computations used by the integration tests. Nothing
//! here calls into the library's own verification code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use scheme_forge::{AssociationScheme, Hypergroup};

/// Structure constants counted directly from a relation matrix, or `None` if some
/// count depends on the chosen pair. Indexed `[p][q][r]`.
pub fn naive_constants(rel: &[Vec<usize>]) -> Option<Vec<Vec<Vec<u64>>>> {
    let n = rel.len();
    let s = rel.iter().flatten().max().map_or(0, |m| m + 1);
    let mut seen: Vec<Vec<Vec<Option<u64>>>> = vec![vec![vec![None; s]; s]; s];
    for y in 0..n {
        for z in 0..n {
            let r = rel[y][z];
            let mut counts = vec![vec![0u64; s]; s];
            for x in 0..n {
                counts[rel[y][x]][rel[x][z]] += 1;
            }
            for p in 0..s {
                for q in 0..s {
                    match seen[p][q][r] {
                        None => seen[p][q][r] = Some(counts[p][q]),
                        Some(c) if c != counts[p][q] => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some(
        seen.into_iter()
            .map(|a| {
                a.into_iter()
                    .map(|b| b.into_iter().map(|c| c.unwrap_or(0)).collect())
                    .collect()
            })
            .collect(),
    )
}

/// Out-degree of each class, read off row 0.
pub fn naive_valencies(rel: &[Vec<usize>]) -> Vec<u64> {
    let s = rel.iter().flatten().max().map_or(0, |m| m + 1);
    let mut v = vec![0; s];
    for &c in &rel[0] {
        v[c] += 1;
    }
    v
}

/// Set-valued product of classes computed from point triples.
pub fn naive_products(rel: &[Vec<usize>]) -> Vec<Vec<BTreeSet<usize>>> {
    let n = rel.len();
    let s = rel.iter().flatten().max().map_or(0, |m| m + 1);
    let mut t = vec![vec![BTreeSet::new(); s]; s];
    for y in 0..n {
        for x in 0..n {
            for z in 0..n {
                t[rel[y][x]][rel[x][z]].insert(rel[y][z]);
            }
        }
    }
    t
}

pub type Table = Vec<Vec<BTreeSet<usize>>>;

fn table_of(h: &Hypergroup) -> Table {
    h.table().to_vec()
}

fn set_mult(t: &Table, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            out.extend(t[x][y].iter().copied());
        }
    }
    out
}

/// The five hypergroup axioms checked from scratch; returns the names of the failing ones.
pub fn naive_hypergroup_failures(t: &Table) -> Vec<&'static str> {
    let m = t.len();
    let mut fails = Vec::new();
    if t.iter().flatten().any(|c| c.is_empty()) {
        fails.push("nonempty");
    }
    let ids: Vec<usize> = (0..m)
        .filter(|&e| (0..m).all(|x| t[e][x] == [x].into() && t[x][e] == [x].into()))
        .collect();
    if ids.len() != 1 {
        fails.push("identity");
        return fails;
    }
    let e = ids[0];
    let mut inv = vec![0; m];
    for x in 0..m {
        let cands: Vec<usize> = (0..m)
            .filter(|&y| t[x][y].contains(&e) && t[y][x].contains(&e))
            .collect();
        if cands.len() != 1 {
            fails.push("inverse");
            return fails;
        }
        inv[x] = cands[0];
    }
    'assoc: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let l = set_mult(t, &t[a][b], &[c].into());
                let r = set_mult(t, &[a].into(), &t[b][c]);
                if l != r {
                    fails.push("associativity");
                    break 'assoc;
                }
            }
        }
    }
    'rev: for a in 0..m {
        for b in 0..m {
            for &c in &t[a][b] {
                if !t[c][inv[b]].contains(&a) || !t[inv[a]][c].contains(&b) {
                    fails.push("reversibility");
                    break 'rev;
                }
            }
        }
    }
    fails
}

pub fn hypergroup_failures(h: &Hypergroup) -> Vec<&'static str> {
    naive_hypergroup_failures(&table_of(h))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Brute force over all bijections; only for small orders.
pub fn brute_isomorphic(a: &Hypergroup, b: &Hypergroup) -> bool {
    let m = a.m();
    if m != b.m() {
        return false;
    }
    assert!(m <= 8, "brute force isomorphism limited to 8 elements");
    permutations(m).into_iter().any(|f| {
        (0..m).all(|x| {
            (0..m).all(|y| {
                let image: BTreeSet<usize> = a.mult(x, y).iter().map(|&z| f[z]).collect();
                image == *b.mult(f[x], f[y])
            })
        })
    })
}

/// Classes of a scheme grouped by `(valency, self-paired)`; used as a cheap
/// invariant when comparing schemes.
pub fn class_profile(s: &AssociationScheme) -> BTreeMap<(u64, bool), usize> {
    let mut m = BTreeMap::new();
    for p in 0..s.s() {
        *m.entry((s.valency(p), s.star(p) == p)).or_insert(0) += 1;
    }
    m
}

/// `[x] ⊕ [y]` in `A/G` computed from all representatives and all unit pairs.
pub fn naive_hyperring_sum(
    add: &dyn Fn(usize, usize) -> usize,
    mul: &dyn Fn(usize, usize) -> usize,
    classes: &[Vec<usize>],
    units: &[usize],
    i: usize,
    j: usize,
) -> BTreeSet<usize> {
    let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).unwrap();
    let mut out = BTreeSet::new();
    for &a in &classes[i] {
        for &b in &classes[j] {
            for &g in units {
                for &h in units {
                    out.insert(class_of(add(mul(g, a), mul(h, b))));
                }
            }
        }
    }
    out
}
