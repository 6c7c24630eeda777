//! Finite association schemes.
//!
//! A scheme on `n` points is stored as its relation-index matrix; every derived
//! quantity (involution, structure constants, valencies) is recomputed from that
//! matrix by direct counting when the scheme is built. Class 0 is always the
//! diagonal.

use std::collections::BTreeSet;

use crate::error::{guard, Error, Report, Result, SchemeReport, Violation, MAX_WITNESSES};
use crate::parallel;

/// A set of class indices.
pub type ClassSet = BTreeSet<usize>;

/// Largest class count accepted by closed-subset enumeration.
pub const CLOSED_SUBSET_BOUND: usize = 25;

/// Below this many points the structure-constant check runs sequentially.
const PARALLEL_POINT_THRESHOLD: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociationScheme {
    n: usize,
    s: usize,
    rel: Vec<usize>,
    star: Vec<usize>,
    constants: Vec<u64>,
    valency: Vec<u64>,
    products: Vec<ClassSet>,
}

/// Validates a relation matrix and builds the scheme it defines.
///
/// Axioms are checked in order (shape, contiguous classes, diagonal, involution,
/// structure constants); the report carries the witnesses of the first axiom
/// that fails.
pub fn build_scheme(n: usize, rel: &[Vec<usize>]) -> Result<AssociationScheme, SchemeReport> {
    if n == 0 {
        return Err(Report::single("square", vec![0]));
    }
    if rel.len() != n {
        return Err(Report::single("square", vec![rel.len()]));
    }
    if let Some(x) = rel.iter().position(|row| row.len() != n) {
        return Err(Report::single("square", vec![x]));
    }
    let flat: Vec<usize> = rel.iter().flatten().copied().collect();
    build_flat(n, flat)
}

pub(crate) fn build_flat(n: usize, rel: Vec<usize>) -> Result<AssociationScheme, SchemeReport> {
    debug_assert_eq!(rel.len(), n * n);
    let s = 1 + rel.iter().copied().max().unwrap_or(0);

    // contiguous class indices
    let mut seen = vec![false; s];
    for &c in &rel {
        seen[c] = true;
    }
    let missing: Vec<Violation> = (0..s)
        .filter(|&c| !seen[c])
        .take(MAX_WITNESSES)
        .map(|c| Violation::new("contiguous-classes", vec![c]))
        .collect();
    if !missing.is_empty() {
        return Err(Report::failed(missing));
    }

    // class 0 is exactly the diagonal
    let mut diag = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if (x == y) != (rel[x * n + y] == 0) {
                diag.push(Violation::new("diagonal", vec![x, y]));
                if diag.len() >= MAX_WITNESSES {
                    break;
                }
            }
        }
    }
    if !diag.is_empty() {
        return Err(Report::failed(diag));
    }

    // transposition maps each class onto a single class
    let mut star: Vec<Option<usize>> = vec![None; s];
    let mut bad_star = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let p = rel[x * n + y];
            let t = rel[y * n + x];
            match star[p] {
                None => star[p] = Some(t),
                Some(q) if q != t => {
                    if bad_star.len() < MAX_WITNESSES {
                        bad_star.push(Violation::new("star", vec![x, y]));
                    }
                }
                Some(_) => {}
            }
        }
    }
    if !bad_star.is_empty() {
        return Err(Report::failed(bad_star));
    }
    let star: Vec<usize> = star.into_iter().map(|c| c.unwrap_or(0)).collect();

    // structure constants, counted at the first pair of each class and then
    // compared against every other pair of that class
    let mut reference = vec![usize::MAX; s];
    for (idx, &r) in rel.iter().enumerate() {
        if reference[r] == usize::MAX {
            reference[r] = idx;
        }
    }
    let count = |y: usize, z: usize, buf: &mut [u64]| {
        buf.fill(0);
        for x in 0..n {
            buf[rel[y * n + x] * s + rel[x * n + z]] += 1;
        }
    };
    let mut per_class = vec![0u64; s * s * s];
    let mut buf = vec![0u64; s * s];
    for r in 0..s {
        let idx = reference[r];
        count(idx / n, idx % n, &mut buf);
        for pq in 0..s * s {
            per_class[r * s * s + pq] = buf[pq];
        }
    }
    let threads = if n >= PARALLEL_POINT_THRESHOLD {
        parallel::threads()
    } else {
        0
    };
    let mismatches: Vec<Option<Violation>> = parallel::map_indexed(n, threads, |y| {
        let mut buf = vec![0u64; s * s];
        for z in 0..n {
            let r = rel[y * n + z];
            count(y, z, &mut buf);
            let expected = &per_class[r * s * s..(r + 1) * s * s];
            if let Some(pq) = (0..s * s).find(|&pq| buf[pq] != expected[pq]) {
                return Some(Violation::new(
                    "structure-constant",
                    vec![pq / s, pq % s, r, y, z],
                ));
            }
        }
        None
    });
    let mismatches: Vec<Violation> = mismatches
        .into_iter()
        .flatten()
        .take(MAX_WITNESSES)
        .collect();
    if !mismatches.is_empty() {
        return Err(Report::failed(mismatches));
    }

    // reorder to constants[(p*s+q)*s+r]
    let mut constants = vec![0u64; s * s * s];
    for r in 0..s {
        for pq in 0..s * s {
            constants[pq * s + r] = per_class[r * s * s + pq];
        }
    }
    let valency: Vec<u64> = (0..s).map(|p| constants[(p * s + star[p]) * s]).collect();
    let products = (0..s * s)
        .map(|pq| {
            (0..s)
                .filter(|&r| constants[pq * s + r] > 0)
                .collect::<ClassSet>()
        })
        .collect();
    Ok(AssociationScheme {
        n,
        s,
        rel,
        star,
        constants,
        valency,
        products,
    })
}

/// Maps between a scheme and its quotient by a closed subset.
#[derive(Clone, Debug)]
pub struct SchemeQuotient {
    pub scheme: AssociationScheme,
    /// Blocks `{y : rel[x][y] ∈ N}`, ordered by smallest member.
    pub blocks: Vec<Vec<usize>>,
    /// Double cosets `NpN`, ordered by smallest member; index = quotient class.
    pub double_cosets: Vec<ClassSet>,
    /// Point of the original scheme -> block index.
    pub point_map: Vec<usize>,
    /// Class of the original scheme -> quotient class.
    pub class_map: Vec<usize>,
}

/// A point bijection together with the class bijection it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeIsomorphism {
    pub point_map: Vec<usize>,
    pub class_map: Vec<usize>,
}

impl AssociationScheme {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn rel(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n + y]
    }

    pub fn rel_matrix(&self) -> Vec<Vec<usize>> {
        self.rel.chunks(self.n).map(|row| row.to_vec()).collect()
    }

    pub fn star(&self, p: usize) -> usize {
        self.star[p]
    }

    /// Structure constant `a_{pq}^r`.
    pub fn constant(&self, p: usize, q: usize, r: usize) -> u64 {
        self.constants[(p * self.s + q) * self.s + r]
    }

    pub fn valency(&self, p: usize) -> u64 {
        self.valency[p]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valency
    }

    pub fn classes(&self) -> ClassSet {
        (0..self.s).collect()
    }

    /// `{r : a_{pq}^r ≥ 1}`.
    pub fn mult(&self, p: usize, q: usize) -> &ClassSet {
        &self.products[p * self.s + q]
    }

    fn check_classes(&self, set: &ClassSet, what: &str) -> Result<()> {
        if set.is_empty() {
            return Err(Error::Precondition(format!("{what} is empty")));
        }
        if let Some(&c) = set.iter().find(|&&c| c >= self.s) {
            return Err(Error::Precondition(format!(
                "{what} contains class {c}, scheme has {} classes",
                self.s
            )));
        }
        Ok(())
    }

    /// Complex multiplication `PQ = {r : ∃p∈P, q∈Q, a_{pq}^r ≥ 1}`.
    pub fn complex_mult(&self, lhs: &ClassSet, rhs: &ClassSet) -> Result<ClassSet> {
        self.check_classes(lhs, "left factor")?;
        self.check_classes(rhs, "right factor")?;
        Ok(self.mult_unchecked(lhs, rhs))
    }

    fn mult_unchecked(&self, lhs: &ClassSet, rhs: &ClassSet) -> ClassSet {
        let mut out = ClassSet::new();
        for &p in lhs {
            for &q in rhs {
                out.extend(self.mult(p, q));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.s).all(|p| {
            (0..p).all(|q| (0..self.s).all(|r| self.constant(p, q, r) == self.constant(q, p, r)))
        })
    }

    /// `0 ∈ T` and `T*T ⊆ T`.
    pub fn is_closed(&self, t: &ClassSet) -> bool {
        if !t.contains(&0) || t.iter().any(|&c| c >= self.s) {
            return false;
        }
        t.iter().all(|&p| {
            let ps = self.star[p];
            t.iter().all(|&q| self.mult(ps, q).is_subset(t))
        })
    }

    /// Smallest closed subset containing `seed`.
    pub fn closure(&self, seed: &ClassSet) -> ClassSet {
        let mut t = seed.clone();
        t.insert(0);
        loop {
            let mut next = t.clone();
            for &p in &t {
                next.insert(self.star[p]);
                for &q in &t {
                    next.extend(self.mult(p, q));
                }
            }
            if next.len() == t.len() {
                return t;
            }
            t = next;
        }
    }

    /// All closed subsets in lexicographic order.
    ///
    /// Enumerated by closing `C ∪ {p}` from every closed `C` found so far,
    /// starting at `{0}`; every closed subset is reached along a chain.
    pub fn closed_subsets(&self) -> Result<Vec<ClassSet>> {
        guard("number of classes", CLOSED_SUBSET_BOUND, self.s)?;
        let mut found: BTreeSet<ClassSet> = BTreeSet::new();
        let start = self.closure(&ClassSet::new());
        let mut stack = vec![start.clone()];
        found.insert(start);
        while let Some(c) = stack.pop() {
            for p in 0..self.s {
                if c.contains(&p) {
                    continue;
                }
                let mut seed = c.clone();
                seed.insert(p);
                let d = self.closure(&seed);
                if found.insert(d.clone()) {
                    stack.push(d);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// True iff the only closed subsets are `{0}` and the full class set.
    pub fn is_primitive(&self) -> Result<bool> {
        let all = self.classes();
        let trivial: ClassSet = [0].into();
        Ok(self
            .closed_subsets()?
            .iter()
            .all(|t| *t == trivial || *t == all))
    }

    fn require_closed(&self, t: &ClassSet) -> Result<()> {
        if self.is_closed(t) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{t:?} is not a closed subset")))
        }
    }

    /// `(normal, strongly_normal)` for a closed subset `T`.
    pub fn is_normal_closed(&self, t: &ClassSet) -> Result<(bool, bool)> {
        self.require_closed(t)?;
        let mut normal = true;
        let mut strong = true;
        for p in 0..self.s {
            let single: ClassSet = [p].into();
            if self.mult_unchecked(&single, t) != self.mult_unchecked(t, &single) {
                normal = false;
            }
            let conj =
                self.mult_unchecked(&self.mult_unchecked(&[self.star[p]].into(), t), &single);
            if conj != *t {
                strong = false;
            }
        }
        Ok((normal, strong))
    }

    /// The scheme `T_Y` on `Y = {y : rel[x0][y] ∈ T}`.
    ///
    /// Point `i` of the result is the `i`-th smallest element of `Y`; class `i` is
    /// the `i`-th smallest element of `T`.
    pub fn restrict(&self, t: &ClassSet, x0: usize) -> Result<AssociationScheme> {
        self.require_closed(t)?;
        if x0 >= self.n {
            return Err(Error::Precondition(format!(
                "point {x0} out of range (n = {})",
                self.n
            )));
        }
        let ys: Vec<usize> = (0..self.n)
            .filter(|&y| t.contains(&self.rel(x0, y)))
            .collect();
        let mut index = vec![usize::MAX; self.s];
        for (i, &c) in t.iter().enumerate() {
            index[c] = i;
        }
        let m = ys.len();
        let mut rel = Vec::with_capacity(m * m);
        for &y in &ys {
            for &z in &ys {
                let c = index[self.rel(y, z)];
                if c == usize::MAX {
                    return Err(Error::Precondition(format!(
                        "pair ({y},{z}) leaves the closed subset"
                    )));
                }
                rel.push(c);
            }
        }
        build_flat(m, rel).map_err(Error::Scheme)
    }

    /// The product scheme on `X1 × X2`; point `(x1,x2)` is `x1*n2 + x2`, class
    /// `[p1,p2]` is `p1*s2 + p2`.
    pub fn product(&self, other: &AssociationScheme) -> AssociationScheme {
        let (n1, n2, s2) = (self.n, other.n, other.s);
        let n = n1 * n2;
        let mut rel = Vec::with_capacity(n * n);
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                for y1 in 0..n1 {
                    for y2 in 0..n2 {
                        rel.push(self.rel(x1, y1) * s2 + other.rel(x2, y2));
                    }
                }
            }
        }
        build_flat(n, rel).expect("product of association schemes is an association scheme")
    }

    /// The double coset `N{p}N`.
    pub fn double_coset(&self, nset: &ClassSet, p: usize) -> ClassSet {
        self.mult_unchecked(&self.mult_unchecked(nset, &[p].into()), nset)
    }

    /// Valency of a class set: `Σ_{r∈N} n_r`.
    pub fn set_valency(&self, set: &ClassSet) -> u64 {
        set.iter().map(|&r| self.valency[r]).sum()
    }

    /// The quotient scheme `S⫽N` for a closed normal subset `N`.
    pub fn quotient(&self, nset: &ClassSet) -> Result<SchemeQuotient> {
        self.require_closed(nset)?;
        let (normal, _) = self.is_normal_closed(nset)?;
        if !normal {
            return Err(Error::Precondition(format!(
                "{nset:?} is not a normal closed subset"
            )));
        }
        // blocks: ordering by smallest member
        let mut point_map = vec![usize::MAX; self.n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            if point_map[x] != usize::MAX {
                continue;
            }
            let block: Vec<usize> = (0..self.n)
                .filter(|&y| nset.contains(&self.rel(x, y)))
                .collect();
            for &y in &block {
                point_map[y] = blocks.len();
            }
            blocks.push(block);
        }
        let mut class_map = vec![usize::MAX; self.s];
        let mut double_cosets: Vec<ClassSet> = Vec::new();
        for p in 0..self.s {
            if class_map[p] != usize::MAX {
                continue;
            }
            let dc = self.double_coset(nset, p);
            for &q in &dc {
                class_map[q] = double_cosets.len();
            }
            double_cosets.push(dc);
        }
        let k = blocks.len();
        let mut rel = Vec::with_capacity(k * k);
        for b in &blocks {
            for c in &blocks {
                let cls = class_map[self.rel(b[0], c[0])];
                for &y in b {
                    for &z in c {
                        if class_map[self.rel(y, z)] != cls {
                            return Err(Error::Precondition(format!(
                                "blocks of {} and {} are not related through a single double coset",
                                b[0], c[0]
                            )));
                        }
                    }
                }
                rel.push(cls);
            }
        }
        let scheme = build_flat(k, rel).map_err(Error::Scheme)?;
        Ok(SchemeQuotient {
            scheme,
            blocks,
            double_cosets,
            point_map,
            class_map,
        })
    }

    /// Searches for a point bijection carrying `self` onto `other`, up to class
    /// relabeling.
    pub fn isomorphism(&self, other: &AssociationScheme) -> Option<SchemeIsomorphism> {
        if self.n != other.n || self.s != other.s {
            return None;
        }
        let mut v1 = self.valency.clone();
        let mut v2 = other.valency.clone();
        v1.sort_unstable();
        v2.sort_unstable();
        if v1 != v2 {
            return None;
        }
        let mut state = IsoState {
            a: self,
            b: other,
            point_map: vec![usize::MAX; self.n],
            used: vec![false; self.n],
            fwd: vec![usize::MAX; self.s],
            bwd: vec![usize::MAX; self.s],
        };
        state.fwd[0] = 0;
        state.bwd[0] = 0;
        if state.extend(0) {
            Some(SchemeIsomorphism {
                point_map: state.point_map,
                class_map: state.fwd,
            })
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &AssociationScheme) -> bool {
        self.isomorphism(other).is_some()
    }
}

struct IsoState<'a> {
    a: &'a AssociationScheme,
    b: &'a AssociationScheme,
    point_map: Vec<usize>,
    used: Vec<bool>,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
}

impl IsoState<'_> {
    /// Binds class `p -> q` (and their stars), recording new bindings in `trail`.
    fn bind(&mut self, p: usize, q: usize, trail: &mut Vec<usize>) -> bool {
        for (p, q) in [(p, q), (self.a.star(p), self.b.star(q))] {
            match (self.fwd[p], self.bwd[q]) {
                (usize::MAX, usize::MAX) => {
                    if self.a.valency(p) != self.b.valency(q) {
                        return false;
                    }
                    self.fwd[p] = q;
                    self.bwd[q] = p;
                    trail.push(p);
                }
                (fp, bq) if fp == q && bq == p => {}
                _ => return false,
            }
        }
        true
    }

    fn unbind(&mut self, trail: &[usize]) {
        for &p in trail.iter().rev() {
            let q = self.fwd[p];
            self.fwd[p] = usize::MAX;
            self.bwd[q] = usize::MAX;
        }
    }

    fn extend(&mut self, x: usize) -> bool {
        let n = self.a.n;
        if x == n {
            return true;
        }
        for t in 0..n {
            if self.used[t] {
                continue;
            }
            let mut trail = Vec::new();
            let ok = (0..x).all(|y| {
                let fy = self.point_map[y];
                self.bind(self.a.rel(y, x), self.b.rel(fy, t), &mut trail)
                    && self.bind(self.a.rel(x, y), self.b.rel(t, fy), &mut trail)
            });
            if ok {
                self.point_map[x] = t;
                self.used[t] = true;
                if self.extend(x + 1) {
                    return true;
                }
                self.used[t] = false;
                self.point_map[x] = usize::MAX;
            }
            self.unbind(&trail);
        }
        false
    }
}
