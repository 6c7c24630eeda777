//! Finite hypergroups given by a set-valued multiplication table.

use std::collections::BTreeSet;

use crate::error::{guard, Error, HypergroupReport, Report, Result, Violation, MAX_WITNESSES};

/// A set of hypergroup elements.
pub type ElementSet = BTreeSet<usize>;

pub const SUB_HYPERGROUP_BOUND: usize = 20;
pub const ISOMORPHISM_BOUND: usize = 24;

type Signature = (usize, bool, usize, Vec<usize>, Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergroup {
    m: usize,
    table: Vec<Vec<ElementSet>>,
    e: usize,
    inv: Vec<usize>,
}

/// Checks nonemptiness, identity, inverse, associativity and reversibility
/// exhaustively, in that order, and returns the hypergroup or the witnesses of
/// the first failing axiom.
pub fn build_hypergroup(
    table: Vec<Vec<ElementSet>>,
    e: usize,
    inv: Vec<usize>,
) -> Result<Hypergroup, HypergroupReport> {
    let m = table.len();
    if m == 0 {
        return Err(Report::single("shape", vec![0]));
    }
    if let Some(a) = table.iter().position(|row| row.len() != m) {
        return Err(Report::single("shape", vec![a]));
    }
    for (a, row) in table.iter().enumerate() {
        for (b, cell) in row.iter().enumerate() {
            if cell.iter().any(|&c| c >= m) {
                return Err(Report::single("shape", vec![a, b]));
            }
        }
    }
    if e >= m || inv.len() != m || inv.iter().any(|&x| x >= m) {
        return Err(Report::single("shape", vec![e, inv.len()]));
    }
    let h = Hypergroup { m, table, e, inv };
    match h.first_violations() {
        Some(v) => Err(Report::failed(v)),
        None => Ok(h),
    }
}

/// Lexicographic-product indexing: `(a1, a2)` is `a1 * m2 + a2`.
pub fn pair_index(a1: usize, a2: usize, m2: usize) -> usize {
    a1 * m2 + a2
}

/// Quotient of a hypergroup together with the projection onto it.
#[derive(Clone, Debug)]
pub struct HypergroupQuotient {
    pub hypergroup: Hypergroup,
    /// Element classes (cosets or congruence blocks) ordered by smallest member.
    pub classes: Vec<ElementSet>,
    /// Element -> class index.
    pub projection: Vec<usize>,
}

/// An equivalence relation on hypergroup elements, stored as an element->block map
/// with blocks numbered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRelation {
    block_of: Vec<usize>,
}

impl CongruenceRelation {
    /// Normalises an arbitrary labelling into blocks numbered by first appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut renumber = std::collections::BTreeMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        CongruenceRelation { block_of }
    }

    pub fn from_blocks(m: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; m];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x >= m || labels[x] != usize::MAX {
                    return Err(Error::Precondition(format!(
                        "blocks do not partition 0..{m} (element {x})"
                    )));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Precondition(format!("element {x} is in no block")));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn trivial(m: usize) -> Self {
        CongruenceRelation {
            block_of: (0..m).collect(),
        }
    }

    pub fn total(m: usize) -> Self {
        CongruenceRelation {
            block_of: vec![0; m],
        }
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |b| b + 1)
    }

    pub fn blocks(&self) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::new(); self.block_count()];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].insert(x);
        }
        out
    }

    /// Set equivalence: every member of each side is congruent to some member of
    /// the other side.
    pub fn sets_equivalent(&self, a: &ElementSet, b: &ElementSet) -> bool {
        let ba: BTreeSet<usize> = a.iter().map(|&x| self.block_of[x]).collect();
        let bb: BTreeSet<usize> = b.iter().map(|&x| self.block_of[x]).collect();
        ba == bb
    }

    /// Verifies both congruence conditions on `h`.
    pub fn verify(&self, h: &Hypergroup) -> Report {
        if self.block_of.len() != h.m {
            return Report::single("congruence-shape", vec![self.block_of.len()]);
        }
        let m = h.m;
        let mut bad = Vec::new();
        for a in 0..m {
            for x in 0..m {
                if self.block_of[a] != self.block_of[x] {
                    continue;
                }
                for b in 0..m {
                    for y in 0..m {
                        if self.block_of[b] == self.block_of[y]
                            && !self.sets_equivalent(h.mult(a, b), h.mult(x, y))
                        {
                            bad.push(Violation::new("congruence-product", vec![a, b, x, y]));
                            if bad.len() >= MAX_WITNESSES {
                                return Report::failed(bad);
                            }
                        }
                    }
                }
            }
        }
        if !bad.is_empty() {
            return Report::failed(bad);
        }
        for a in 0..m {
            for b in 0..m {
                if self.block_of[a] == self.block_of[b]
                    && self.block_of[h.inv(a)] != self.block_of[h.inv(b)]
                {
                    bad.push(Violation::new("congruence-inverse", vec![a, b]));
                }
            }
        }
        if bad.is_empty() {
            Report::ok()
        } else {
            bad.truncate(MAX_WITNESSES);
            Report::failed(bad)
        }
    }
}

impl Hypergroup {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn mult(&self, a: usize, b: usize) -> &ElementSet {
        &self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<ElementSet>] {
        &self.table
    }

    /// `X*Y = ∪ x*y`.
    pub fn mult_sets(&self, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
        let mut out = ElementSet::new();
        for &x in xs {
            for &y in ys {
                out.extend(&self.table[x][y]);
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.m).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// True when every cell is a singleton, i.e. the table is a group.
    pub fn is_group(&self) -> bool {
        self.table.iter().flatten().all(|c| c.len() == 1)
    }

    pub fn elements(&self) -> ElementSet {
        (0..self.m).collect()
    }

    fn first_violations(&self) -> Option<Vec<Violation>> {
        let m = self.m;
        let collect = |it: &mut dyn Iterator<Item = Violation>| -> Option<Vec<Violation>> {
            let v: Vec<Violation> = it.take(MAX_WITNESSES).collect();
            (!v.is_empty()).then_some(v)
        };
        let pairs = || (0..m).flat_map(move |a| (0..m).map(move |b| (a, b)));
        let triples =
            || (0..m).flat_map(move |a| (0..m).flat_map(move |b| (0..m).map(move |c| (a, b, c))));

        if let Some(v) = collect(
            &mut pairs()
                .filter(|&(a, b)| self.table[a][b].is_empty())
                .map(|(a, b)| Violation::new("nonempty", vec![a, b])),
        ) {
            return Some(v);
        }

        let acts_as_identity = |u: usize| {
            (0..m).all(|x| {
                self.table[u][x].len() == 1
                    && self.table[u][x].contains(&x)
                    && self.table[x][u].len() == 1
                    && self.table[x][u].contains(&x)
            })
        };
        if !acts_as_identity(self.e) {
            let x = (0..m)
                .find(|&x| {
                    self.table[self.e][x] != [x].into() || self.table[x][self.e] != [x].into()
                })
                .unwrap_or(0);
            return Some(vec![Violation::new("identity", vec![self.e, x])]);
        }
        if let Some(u) = (0..m).find(|&u| u != self.e && acts_as_identity(u)) {
            return Some(vec![Violation::new("identity", vec![self.e, u])]);
        }

        let is_inverse = |x: usize, g: usize| {
            self.table[x][g].contains(&self.e) && self.table[g][x].contains(&self.e)
        };
        if let Some(v) = collect(&mut (0..m).filter_map(|x| {
            if !is_inverse(x, self.inv[x]) {
                return Some(Violation::new("inverse", vec![x, self.inv[x]]));
            }
            (0..m)
                .find(|&g| g != self.inv[x] && is_inverse(x, g))
                .map(|g| Violation::new("inverse", vec![x, g]))
        })) {
            return Some(v);
        }

        if let Some(v) = collect(&mut triples().filter_map(|(a, b, c)| {
            let left = self.mult_sets(&self.table[a][b], &[c].into());
            let right = self.mult_sets(&[a].into(), &self.table[b][c]);
            (left != right).then(|| Violation::new("associativity", vec![a, b, c]))
        })) {
            return Some(v);
        }

        collect(&mut triples().filter_map(|(a, b, c)| {
            if !self.table[a][b].contains(&c) {
                return None;
            }
            let ok =
                self.table[c][self.inv[b]].contains(&a) && self.table[self.inv[a]][c].contains(&b);
            (!ok).then(|| Violation::new("reversibility", vec![a, b, c]))
        }))
    }

    /// Re-runs every axiom check on this value.
    pub fn verify(&self) -> Report {
        match self.first_violations() {
            Some(v) => Report::failed(v),
            None => Report::ok(),
        }
    }

    /// `K ∋ e`, closed under the product and under inverses.
    pub fn is_closed_subset(&self, k: &ElementSet) -> bool {
        k.contains(&self.e)
            && k.iter().all(|&x| x < self.m && k.contains(&self.inv[x]))
            && k.iter()
                .all(|&a| k.iter().all(|&b| self.table[a][b].is_subset(k)))
    }

    /// The restricted table on `K`; element `i` of the result is the `i`-th
    /// smallest member of `K`.
    pub fn restrict(&self, k: &ElementSet) -> Result<Hypergroup> {
        if !self.is_closed_subset(k) {
            return Err(Error::Precondition(format!(
                "{k:?} is not closed under the product and inverses"
            )));
        }
        let elems: Vec<usize> = k.iter().copied().collect();
        let index = |x: usize| elems.binary_search(&x).expect("closed subset");
        let table = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| self.table[a][b].iter().map(|&c| index(c)).collect())
                    .collect()
            })
            .collect();
        let inv = elems.iter().map(|&x| index(self.inv[x])).collect();
        build_hypergroup(table, index(self.e), inv).map_err(Error::Hypergroup)
    }

    fn closure(&self, seed: &ElementSet) -> ElementSet {
        let mut k = seed.clone();
        k.insert(self.e);
        loop {
            let mut next = k.clone();
            for &a in &k {
                next.insert(self.inv[a]);
                for &b in &k {
                    next.extend(&self.table[a][b]);
                }
            }
            if next.len() == k.len() {
                return k;
            }
            k = next;
        }
    }

    /// All sub-hypergroups containing the identity, in lexicographic order.
    pub fn sub_hypergroups(&self) -> Result<Vec<ElementSet>> {
        guard("hypergroup order", SUB_HYPERGROUP_BOUND, self.m)?;
        let mut found: BTreeSet<ElementSet> = BTreeSet::new();
        let start = self.closure(&ElementSet::new());
        let mut stack = vec![start.clone()];
        found.insert(start);
        while let Some(c) = stack.pop() {
            for x in 0..self.m {
                if c.contains(&x) {
                    continue;
                }
                let mut seed = c.clone();
                seed.insert(x);
                let d = self.closure(&seed);
                if found.insert(d.clone()) {
                    stack.push(d);
                }
            }
        }
        Ok(found
            .into_iter()
            .filter(|k| self.restrict(k).is_ok())
            .collect())
    }

    /// `(normal, strongly_normal)` for a sub-hypergroup `L`.
    pub fn is_normal_sub(&self, l: &ElementSet) -> Result<(bool, bool)> {
        self.restrict(l)?;
        let mut normal = true;
        let mut strong = true;
        for h in 0..self.m {
            let single: ElementSet = [h].into();
            if self.mult_sets(&single, l) != self.mult_sets(l, &single) {
                normal = false;
            }
            let conj = self.mult_sets(&self.mult_sets(&[self.inv[h]].into(), l), &single);
            if conj != *l {
                strong = false;
            }
        }
        Ok((normal, strong))
    }

    /// Builds the quotient on a partition into classes where the product of two
    /// classes is the set of classes met by `x'*y'` over all representatives.
    fn quotient_on(
        &self,
        labels: &[usize],
        classes: Vec<ElementSet>,
    ) -> Result<HypergroupQuotient> {
        let k = classes.len();
        let mut table = vec![vec![ElementSet::new(); k]; k];
        for (i, ci) in classes.iter().enumerate() {
            for (j, cj) in classes.iter().enumerate() {
                for &x in ci {
                    for &y in cj {
                        table[i][j].extend(self.table[x][y].iter().map(|&z| labels[z]));
                    }
                }
            }
        }
        let inv = classes
            .iter()
            .map(|c| labels[self.inv[*c.iter().next().expect("nonempty class")]])
            .collect();
        let hypergroup = build_hypergroup(table, labels[self.e], inv).map_err(Error::Hypergroup)?;
        Ok(HypergroupQuotient {
            hypergroup,
            classes,
            projection: labels.to_vec(),
        })
    }

    /// `H/N`: elements are the cosets `h*N`, and `hN · kN = {tN : t ∈ h*k}`.
    pub fn quotient(&self, n: &ElementSet) -> Result<HypergroupQuotient> {
        let (normal, _) = self.is_normal_sub(n)?;
        if !normal {
            return Err(Error::Precondition(format!(
                "{n:?} is not a normal sub-hypergroup"
            )));
        }
        let mut labels = vec![usize::MAX; self.m];
        let mut classes: Vec<ElementSet> = Vec::new();
        for h in 0..self.m {
            if labels[h] != usize::MAX {
                continue;
            }
            let coset = self.mult_sets(&[h].into(), n);
            if coset.iter().any(|&x| labels[x] != usize::MAX) {
                return Err(Error::Precondition(format!(
                    "cosets of {n:?} do not partition the hypergroup (at {h})"
                )));
            }
            for &x in &coset {
                labels[x] = classes.len();
            }
            classes.push(coset);
        }
        // representative independence: {tN : t ∈ h*k} must not depend on h, k
        for (i, ci) in classes.iter().enumerate() {
            for (j, cj) in classes.iter().enumerate() {
                let expected: ElementSet = self
                    .mult(*ci.first().unwrap(), *cj.first().unwrap())
                    .iter()
                    .map(|&t| labels[t])
                    .collect();
                for &x in ci {
                    for &y in cj {
                        let got: ElementSet = self.table[x][y].iter().map(|&t| labels[t]).collect();
                        if got != expected {
                            return Err(Error::Precondition(format!(
                                "coset product {i}·{j} depends on representatives ({x},{y})"
                            )));
                        }
                    }
                }
            }
        }
        self.quotient_on(&labels, classes)
    }

    /// `H/≡` with `[x]⊡[y] = {[z] : z ∈ x'*y', x'≡x, y'≡y}`.
    ///
    /// The relation is verified first; after construction the canonical
    /// projection is checked to be strict.
    pub fn congruence_quotient(&self, c: &CongruenceRelation) -> Result<HypergroupQuotient> {
        let report = c.verify(self);
        if !report.valid {
            return Err(Error::Structure(report));
        }
        let q = self.quotient_on(&c.block_of, c.blocks())?;
        for x in 0..self.m {
            for y in 0..self.m {
                let image: ElementSet = self.table[x][y].iter().map(|&z| c.block_of[z]).collect();
                if *q.hypergroup.mult(c.block_of[x], c.block_of[y]) != image {
                    return Err(Error::Precondition(format!(
                        "canonical projection is not strict at ({x},{y})"
                    )));
                }
            }
        }
        Ok(q)
    }

    /// Componentwise product; `(a1,a2)` is element `a1 * m2 + a2`.
    pub fn product(&self, other: &Hypergroup) -> Hypergroup {
        let m2 = other.m;
        let m = self.m * m2;
        let mut table = vec![vec![ElementSet::new(); m]; m];
        for a1 in 0..self.m {
            for a2 in 0..m2 {
                for b1 in 0..self.m {
                    for b2 in 0..m2 {
                        let cell = &mut table[pair_index(a1, a2, m2)][pair_index(b1, b2, m2)];
                        for &c1 in &self.table[a1][b1] {
                            for &c2 in &other.table[a2][b2] {
                                cell.insert(pair_index(c1, c2, m2));
                            }
                        }
                    }
                }
            }
        }
        let inv = (0..m)
            .map(|x| pair_index(self.inv[x / m2], other.inv[x % m2], m2))
            .collect();
        build_hypergroup(table, pair_index(self.e, other.e, m2), inv)
            .expect("product of hypergroups is a hypergroup")
    }

    /// `(homomorphism, strict)` for a map `f: self -> target`.
    pub fn check_homomorphism(&self, target: &Hypergroup, f: &[usize]) -> (bool, bool) {
        if f.len() != self.m || f.iter().any(|&y| y >= target.m) {
            return (false, false);
        }
        let mut hom = true;
        let mut strict = true;
        for a in 0..self.m {
            for b in 0..self.m {
                let image: ElementSet = self.table[a][b].iter().map(|&c| f[c]).collect();
                let cell = target.mult(f[a], f[b]);
                if !image.is_subset(cell) {
                    hom = false;
                }
                if image != *cell {
                    strict = false;
                }
            }
        }
        (hom, hom && strict)
    }

    /// Per-element invariant used to prune the isomorphism search.
    fn signature(&self, x: usize) -> Signature {
        let mut row: Vec<usize> = (0..self.m).map(|y| self.table[x][y].len()).collect();
        let mut col: Vec<usize> = (0..self.m).map(|y| self.table[y][x].len()).collect();
        row.sort_unstable();
        col.sort_unstable();
        (
            self.table[x][x].len(),
            self.inv[x] == x,
            self.table[x][self.inv[x]].len(),
            row,
            col,
        )
    }

    /// Searches for a bijection `φ` with `φ(e1)=e2`, `φ(x⁻¹)=φ(x)⁻¹` and
    /// `φ(x*y) = φ(x)*φ(y)`.
    pub fn isomorphism(&self, other: &Hypergroup) -> Result<Option<Vec<usize>>> {
        guard("hypergroup order", ISOMORPHISM_BOUND, self.m.max(other.m))?;
        if self.m != other.m {
            return Ok(None);
        }
        let sig_a: Vec<_> = (0..self.m).map(|x| self.signature(x)).collect();
        let sig_b: Vec<_> = (0..other.m).map(|x| other.signature(x)).collect();
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(None);
        }
        let mut map = vec![usize::MAX; self.m];
        let mut used = vec![false; self.m];
        map[self.e] = other.e;
        used[other.e] = true;
        if sig_a[self.e] != sig_b[other.e] {
            return Ok(None);
        }
        // most constrained first: identity, then by ascending table row weight
        let mut order: Vec<usize> = (0..self.m).filter(|&x| x != self.e).collect();
        order.sort_by_key(|&x| (sig_a[x].0, x));
        let found = self.iso_extend(other, &order, 0, &sig_a, &sig_b, &mut map, &mut used);
        if found && self.is_isomorphism(other, &map) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_extend(
        &self,
        other: &Hypergroup,
        order: &[usize],
        depth: usize,
        sig_a: &[Signature],
        sig_b: &[Signature],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return self.is_isomorphism(other, map);
        }
        let x = order[depth];
        if map[x] != usize::MAX {
            // already forced through an inverse
            return self.consistent(other, x, map)
                && self.iso_extend(other, order, depth + 1, sig_a, sig_b, map, used);
        }
        for t in 0..other.m {
            if used[t] || sig_a[x] != sig_b[t] {
                continue;
            }
            let ix = self.inv[x];
            let it = other.inv[t];
            let inverse_free = ix == x || map[ix] == usize::MAX;
            if ix == x && it != t {
                continue;
            }
            if ix != x && (!inverse_free || used[it]) {
                continue;
            }
            map[x] = t;
            used[t] = true;
            if ix != x {
                map[ix] = it;
                used[it] = true;
            }
            if self.consistent(other, x, map)
                && (ix == x || self.consistent(other, ix, map))
                && self.iso_extend(other, order, depth + 1, sig_a, sig_b, map, used)
            {
                return true;
            }
            if ix != x {
                map[ix] = usize::MAX;
                used[it] = false;
            }
            map[x] = usize::MAX;
            used[t] = false;
        }
        false
    }

    /// Checks every cell involving `x` whose operands are mapped.
    fn consistent(&self, other: &Hypergroup, x: usize, map: &[usize]) -> bool {
        for y in 0..self.m {
            if map[y] == usize::MAX {
                continue;
            }
            for (a, b) in [(x, y), (y, x)] {
                let cell = &self.table[a][b];
                let target = other.mult(map[a], map[b]);
                if cell.len() != target.len() {
                    return false;
                }
                for &c in cell {
                    if map[c] != usize::MAX && !target.contains(&map[c]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full verification of a candidate isomorphism.
    pub fn is_isomorphism(&self, other: &Hypergroup, map: &[usize]) -> bool {
        if map.len() != self.m || self.m != other.m {
            return false;
        }
        let mut seen = vec![false; other.m];
        for &y in map {
            if y >= other.m || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        map[self.e] == other.e
            && (0..self.m).all(|x| map[self.inv[x]] == other.inv[map[x]])
            && (0..self.m).all(|a| {
                (0..self.m).all(|b| {
                    let image: ElementSet = self.table[a][b].iter().map(|&c| map[c]).collect();
                    image == *other.mult(map[a], map[b])
                })
            })
    }

    pub fn is_isomorphic(&self, other: &Hypergroup) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// Relabels elements: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergroup> {
        let mut table = vec![vec![ElementSet::new(); self.m]; self.m];
        for a in 0..self.m {
            for b in 0..self.m {
                table[perm[a]][perm[b]] = self.table[a][b].iter().map(|&c| perm[c]).collect();
            }
        }
        let mut inv = vec![0; self.m];
        for x in 0..self.m {
            inv[perm[x]] = perm[self.inv[x]];
        }
        build_hypergroup(table, perm[self.e], inv).map_err(Error::Hypergroup)
    }
}

/// The Krasner hypergroup `{0,1}` with `1+1 = {0,1}`.
pub fn krasner() -> Hypergroup {
    let s = |v: &[usize]| v.iter().copied().collect::<ElementSet>();
    build_hypergroup(
        vec![vec![s(&[0]), s(&[1])], vec![s(&[1]), s(&[0, 1])]],
        0,
        vec![0, 1],
    )
    .expect("Krasner hypergroup")
}

/// The sign hypergroup on `{0, 1, -1}` (indices 0, 1, 2) following the rule of signs.
pub fn sign() -> Hypergroup {
    let s = |v: &[usize]| v.iter().copied().collect::<ElementSet>();
    build_hypergroup(
        vec![
            vec![s(&[0]), s(&[1]), s(&[2])],
            vec![s(&[1]), s(&[1]), s(&[0, 1, 2])],
            vec![s(&[2]), s(&[0, 1, 2]), s(&[2])],
        ],
        0,
        vec![0, 2, 1],
    )
    .expect("sign hypergroup")
}

/// Wraps a group Cayley table in singleton cells.
pub fn from_group_table(cayley: &[Vec<usize>], e: usize, inv: &[usize]) -> Result<Hypergroup> {
    let table = cayley
        .iter()
        .map(|row| row.iter().map(|&c| [c].into()).collect())
        .collect();
    build_hypergroup(table, e, inv.to_vec()).map_err(Error::Hypergroup)
}
