//! Finite groups given by Cayley tables, and subgroups of their automorphism groups.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Report, Result, Violation};
use crate::hypergroup::{from_group_table, Hypergroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    cayley: Vec<Vec<usize>>,
    e: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Verifies closure, associativity, identity and inverses exhaustively.
    /// The identity and inverses are recovered from the table.
    pub fn new(cayley: Vec<Vec<usize>>) -> Result<Self> {
        let g = cayley.len();
        if g == 0
            || cayley
                .iter()
                .any(|r| r.len() != g || r.iter().any(|&c| c >= g))
        {
            return Err(Error::Structure(Report::single("group-shape", vec![g])));
        }
        let e = (0..g)
            .find(|&u| (0..g).all(|x| cayley[u][x] == x && cayley[x][u] == x))
            .ok_or_else(|| Error::Structure(Report::single("group-identity", vec![])))?;
        let mut inv = vec![0; g];
        for x in 0..g {
            inv[x] = (0..g)
                .find(|&y| cayley[x][y] == e && cayley[y][x] == e)
                .ok_or_else(|| Error::Structure(Report::single("group-inverse", vec![x])))?;
        }
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::Structure(Report::single(
                            "group-associativity",
                            vec![a, b, c],
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { cayley, e, inv })
    }

    pub fn cyclic(n: usize) -> Self {
        let cayley = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::new(cayley).expect("cyclic group")
    }

    /// The group of the given permutations (assumed closed), elements sorted
    /// lexicographically; product `(ab)(i) = a(b(i))`.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let mut perms: Vec<Vec<usize>> = perms.to_vec();
        perms.sort();
        perms.dedup();
        let index: BTreeMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut cayley = vec![vec![0; perms.len()]; perms.len()];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                let ab: Vec<usize> = b.iter().map(|&k| a[k]).collect();
                cayley[i][j] = *index.get(&ab).ok_or_else(|| {
                    Error::Precondition("permutation set is not closed".to_string())
                })?;
            }
        }
        FiniteGroup::new(cayley)
    }

    pub fn symmetric(k: usize) -> Self {
        FiniteGroup::from_permutations(&permutations(k)).expect("symmetric group")
    }

    pub fn alternating(k: usize) -> Self {
        let even: Vec<Vec<usize>> = permutations(k)
            .into_iter()
            .filter(|p| inversions(p).is_multiple_of(2))
            .collect();
        FiniteGroup::from_permutations(&even).expect("alternating group")
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    /// The group as a hypergroup with singleton cells.
    pub fn to_hypergroup(&self) -> Hypergroup {
        from_group_table(&self.cayley, self.e, &self.inv).expect("groups are hypergroups")
    }

    fn generated(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut h: BTreeSet<usize> = gens.clone();
        h.insert(self.e);
        loop {
            let next: BTreeSet<usize> = h
                .iter()
                .flat_map(|&a| h.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.op(a, b))
                .chain(h.iter().copied())
                .collect();
            if next.len() == h.len() {
                return h;
            }
            h = next;
        }
    }

    /// Smallest normal subgroup containing `x`.
    pub fn normal_closure(&self, x: usize) -> BTreeSet<usize> {
        let conjugates: BTreeSet<usize> = (0..self.order())
            .map(|g| self.op(self.op(g, x), self.inv[g]))
            .collect();
        self.generated(&conjugates)
    }

    /// Simple: nontrivial, and every non-identity element normally generates the group.
    pub fn is_simple(&self) -> bool {
        self.order() > 1
            && (0..self.order())
                .filter(|&x| x != self.e)
                .all(|x| self.normal_closure(x).len() == self.order())
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in 0..k {
            if !prefix.contains(&i) {
                prefix.push(i);
                rec(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), k, &mut out);
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// A subgroup `P` of `Aut(G)`, stored as its element permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutSubgroup {
    perms: Vec<Vec<usize>>,
}

impl AutSubgroup {
    /// Checks that every map is an automorphism and that the set is a subgroup.
    pub fn new(group: &FiniteGroup, perms: Vec<Vec<usize>>) -> Result<Self> {
        let g = group.order();
        let mut bad = Vec::new();
        for (i, p) in perms.iter().enumerate() {
            let mut seen = vec![false; g];
            if p.len() != g
                || p.iter()
                    .any(|&x| x >= g || std::mem::replace(&mut seen[x], true))
            {
                bad.push(Violation::new("automorphism-bijection", vec![i]));
                continue;
            }
            if let Some((a, b)) = (0..g)
                .flat_map(|a| (0..g).map(move |b| (a, b)))
                .find(|&(a, b)| p[group.op(a, b)] != group.op(p[a], p[b]))
            {
                bad.push(Violation::new("automorphism-homomorphism", vec![i, a, b]));
            }
        }
        if !bad.is_empty() {
            return Err(Error::Structure(Report::failed(bad)));
        }
        let set: BTreeSet<Vec<usize>> = perms.iter().cloned().collect();
        let id: Vec<usize> = (0..g).collect();
        if !set.contains(&id) {
            return Err(Error::Structure(Report::single(
                "subgroup-identity",
                vec![],
            )));
        }
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                let ab: Vec<usize> = b.iter().map(|&k| a[k]).collect();
                if !set.contains(&ab) {
                    return Err(Error::Structure(Report::single(
                        "subgroup-closure",
                        vec![i, j],
                    )));
                }
            }
        }
        Ok(AutSubgroup {
            perms: set.into_iter().collect(),
        })
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        AutSubgroup {
            perms: vec![(0..group.order()).collect()],
        }
    }

    /// `Inn(G)`: conjugation maps `x ↦ g x g⁻¹`.
    pub fn inner(group: &FiniteGroup) -> Self {
        let perms = (0..group.order())
            .map(|g| {
                (0..group.order())
                    .map(|x| group.op(group.op(g, x), group.inv(g)))
                    .collect()
            })
            .collect();
        AutSubgroup::new(group, perms).expect("inner automorphisms form a subgroup")
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// Orbits of `P` on the group, ordered with the identity orbit first and the
    /// rest by smallest member. Returns `(orbit_of, orbits)`.
    pub fn orbits(&self, group: &FiniteGroup) -> (Vec<usize>, Vec<Vec<usize>>) {
        let g = group.order();
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let mut done = vec![false; g];
        for x in 0..g {
            if done[x] {
                continue;
            }
            let orbit: BTreeSet<usize> = self.perms.iter().map(|p| p[x]).collect();
            for &y in &orbit {
                done[y] = true;
            }
            raw.push(orbit.into_iter().collect());
        }
        let e = group.identity();
        raw.sort_by_key(|o| (o[0] != e, o[0]));
        let mut orbit_of = vec![0; g];
        for (i, o) in raw.iter().enumerate() {
            for &x in o {
                orbit_of[x] = i;
            }
        }
        (orbit_of, raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert!(!s3.is_simple());
        let a4 = FiniteGroup::alternating(4);
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_simple());
        assert!(FiniteGroup::alternating(5).is_simple());
        assert!(FiniteGroup::cyclic(5).is_simple());
        assert!(!FiniteGroup::cyclic(4).is_simple());
        assert!(!FiniteGroup::cyclic(1).is_simple());
    }

    #[test]
    fn rejects_non_group_tables() {
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let (_, orbits) = AutSubgroup::inner(&s3).orbits(&s3);
        assert_eq!(orbits, vec![vec![0], vec![1, 2, 5], vec![3, 4]]);
        assert_eq!(AutSubgroup::inner(&s3).perms().len(), 6);
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        assert!(AutSubgroup::new(&z3, vec![vec![0, 1, 2], vec![1, 0, 2]]).is_err());
        assert!(AutSubgroup::new(&z3, vec![vec![0, 2, 1]]).is_err());
        assert!(AutSubgroup::new(&z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).is_ok());
    }
}
