//! From schemes to hypergroups: the class hypergroup, scheme morphisms and the
//! hypergroup maps they induce, and a bounded search for finite realizations.

use crate::error::{guard, Error, HypergroupReport, Report, Result, Violation, MAX_WITNESSES};
use crate::hypergroup::{build_hypergroup, ElementSet, Hypergroup};
use crate::parallel::map_indexed;
use crate::scheme::{build_flat, AssociationScheme, SchemeQuotient};

pub const SEARCH_BOUND: usize = 8;

/// The hypergroup on the classes of `s` with `p*q` the complex product,
/// identity class 0 and inverse `star`.
pub fn to_hypergroup(s: &AssociationScheme) -> Result<Hypergroup, HypergroupReport> {
    let table = (0..s.s())
        .map(|p| (0..s.s()).map(|q| s.mult(p, q).clone()).collect())
        .collect();
    build_hypergroup(table, 0, (0..s.s()).map(|p| s.star(p)).collect())
}

/// A pair of maps `X → Y` on points and `S → T` on classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeMorphism {
    pub point_map: Vec<usize>,
    pub class_map: Vec<usize>,
}

impl SchemeMorphism {
    pub fn identity(s: &AssociationScheme) -> Self {
        SchemeMorphism {
            point_map: (0..s.n()).collect(),
            class_map: (0..s.s()).collect(),
        }
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &SchemeMorphism) -> SchemeMorphism {
        SchemeMorphism {
            point_map: self.point_map.iter().map(|&x| after.point_map[x]).collect(),
            class_map: self.class_map.iter().map(|&p| after.class_map[p]).collect(),
        }
    }

    /// Projection onto the quotient: point to block, class to double coset.
    pub fn quotient_projection(q: &SchemeQuotient) -> Self {
        SchemeMorphism {
            point_map: q.point_map.clone(),
            class_map: q.class_map.clone(),
        }
    }

    /// Projection of `s1 ⊠ s2` onto `s1`, under the numbering of
    /// [`AssociationScheme::product`].
    pub fn first_projection(s1: &AssociationScheme, s2: &AssociationScheme) -> Self {
        SchemeMorphism {
            point_map: (0..s1.n() * s2.n()).map(|x| x / s2.n()).collect(),
            class_map: (0..s1.s() * s2.s()).map(|p| p / s2.s()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub morphism: bool,
    /// `None` when the maps are not a morphism.
    pub admissible: Option<bool>,
    pub report: Report,
}

/// Checks `rel_T[f(x)][f(y)] = f(rel_S[x][y])` (plus `f(0)=0` and compatibility
/// with `star`), then admissibility: whenever `(f(x), y) ∈ f(p)` some `z` has
/// `(x,z) ∈ p` and `f(z) = y`.
pub fn check_morphism(
    src: &AssociationScheme,
    tgt: &AssociationScheme,
    f: &SchemeMorphism,
) -> MorphismCheck {
    let not_morphism = |v: Violation| MorphismCheck {
        morphism: false,
        admissible: None,
        report: Report::failed(vec![v]),
    };
    if f.point_map.len() != src.n() || f.point_map.iter().any(|&y| y >= tgt.n()) {
        return not_morphism(Violation::new(
            "morphism-point-map",
            vec![f.point_map.len()],
        ));
    }
    if f.class_map.len() != src.s() || f.class_map.iter().any(|&q| q >= tgt.s()) {
        return not_morphism(Violation::new(
            "morphism-class-map",
            vec![f.class_map.len()],
        ));
    }
    for x in 0..src.n() {
        for y in 0..src.n() {
            let p = src.rel(x, y);
            if tgt.rel(f.point_map[x], f.point_map[y]) != f.class_map[p] {
                return not_morphism(Violation::new("morphism-relation", vec![x, y, p]));
            }
        }
    }
    if f.class_map[0] != 0 {
        return not_morphism(Violation::new("morphism-diagonal", vec![0]));
    }
    if let Some(p) = (0..src.s()).find(|&p| f.class_map[src.star(p)] != tgt.star(f.class_map[p])) {
        return not_morphism(Violation::new("morphism-star", vec![p]));
    }
    let mut bad = Vec::new();
    'outer: for x in 0..src.n() {
        for y in 0..tgt.n() {
            for p in 0..src.s() {
                if tgt.rel(f.point_map[x], y) != f.class_map[p] {
                    continue;
                }
                let lifted = (0..src.n()).any(|z| src.rel(x, z) == p && f.point_map[z] == y);
                if !lifted {
                    bad.push(Violation::new("admissible", vec![x, y, p]));
                    if bad.len() == MAX_WITNESSES {
                        break 'outer;
                    }
                }
            }
        }
    }
    MorphismCheck {
        morphism: true,
        admissible: Some(bad.is_empty()),
        report: if bad.is_empty() {
            Report::ok()
        } else {
            Report::failed(bad)
        },
    }
}

/// The hypergroup map `H(S) → H(T)` carried by the class map of a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedHom {
    pub map: Vec<usize>,
    /// `f(p*q) = f(p)*f(q)` for all classes, not only containment.
    pub strict: bool,
}

/// Requires `f` to be a morphism (admissibility is not needed) and verifies
/// `f(p*q) ⊆ f(p)*f(q)` for every pair of classes.
pub fn induced_hom(
    src: &AssociationScheme,
    tgt: &AssociationScheme,
    f: &SchemeMorphism,
) -> Result<InducedHom> {
    let check = check_morphism(src, tgt, f);
    if !check.morphism {
        return Err(Error::Structure(check.report));
    }
    let h1 = to_hypergroup(src).map_err(Error::Hypergroup)?;
    let h2 = to_hypergroup(tgt).map_err(Error::Hypergroup)?;
    let (hom, strict) = h1.check_homomorphism(&h2, &f.class_map);
    if !hom {
        return Err(Error::Structure(Report::single(
            "induced-containment",
            vec![],
        )));
    }
    Ok(InducedHom {
        map: f.class_map.clone(),
        strict,
    })
}

/// Result of [`search_realization`]: the first realizing scheme found, if any,
/// and one log line per fully exhausted point count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub scheme: Option<AssociationScheme>,
    pub log: Vec<String>,
    pub n_max: usize,
}

/// Target data with classes renumbered so the identity is class 0 and the other
/// elements follow in increasing order.
struct Target {
    m: usize,
    star: Vec<usize>,
    /// `allowed[(p*m + q)*m + r]` iff `r ∈ p*q`.
    allowed: Vec<bool>,
    table: Vec<Vec<ElementSet>>,
}

impl Target {
    fn new(h: &Hypergroup) -> (Self, Vec<usize>) {
        let m = h.m();
        let labels: Vec<usize> = std::iter::once(h.identity())
            .chain((0..m).filter(|&x| x != h.identity()))
            .collect();
        let mut index = vec![0; m];
        for (i, &x) in labels.iter().enumerate() {
            index[x] = i;
        }
        let star = labels.iter().map(|&x| index[h.inv(x)]).collect();
        let mut allowed = vec![false; m * m * m];
        let mut table = vec![vec![ElementSet::new(); m]; m];
        for p in 0..m {
            for q in 0..m {
                for &r in h.mult(labels[p], labels[q]) {
                    allowed[(p * m + q) * m + index[r]] = true;
                    table[p][q].insert(index[r]);
                }
            }
        }
        (
            Target {
                m,
                star,
                allowed,
                table,
            },
            labels,
        )
    }

    fn allows(&self, p: usize, q: usize, r: usize) -> bool {
        self.allowed[(p * self.m + q) * self.m + r]
    }
}

/// Valency vectors `v` with `v[0] = 1`, `v[c] ≥ 1`, `v[c] = v[star c]` and
/// `Σ v = n`, in lexicographic order.
fn valency_vectors(target: &Target, n: usize) -> Vec<Vec<usize>> {
    fn rec(target: &Target, c: usize, left: usize, v: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let m = target.m;
        if c == m {
            if left == 0 {
                out.push(v.clone());
            }
            return;
        }
        let sc = target.star[c];
        if sc < c {
            let k = v[sc];
            if k <= left {
                v.push(k);
                rec(target, c + 1, left - k, v, out);
                v.pop();
            }
            return;
        }
        for k in 1..=left {
            v.push(k);
            rec(target, c + 1, left - k, v, out);
            v.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(target, 1, n - 1, &mut vec![1], &mut out);
    }
    out
}

struct Branch<'a> {
    target: &'a Target,
    n: usize,
    valency: Vec<usize>,
    rel: Vec<usize>,
    /// `count[x*m + c]`: occurrences of class `c` in row `x` so far.
    count: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    leaves: u64,
}

const UNSET: usize = usize::MAX;

impl<'a> Branch<'a> {
    fn new(target: &'a Target, n: usize, valency: Vec<usize>) -> Self {
        let m = target.m;
        let mut b = Branch {
            target,
            n,
            valency,
            rel: vec![UNSET; n * n],
            count: vec![0; n * m],
            pairs: Vec::new(),
            leaves: 0,
        };
        for x in 0..n {
            b.rel[x * n + x] = 0;
            b.count[x * m] = 1;
        }
        // row 0 is sorted: point relabelings fixing 0 make this canonical
        let mut y = 1;
        for c in 1..m {
            for _ in 0..b.valency[c] {
                b.rel[y] = c;
                b.rel[y * n] = target.star[c];
                b.count[c] += 1;
                b.count[y * m + target.star[c]] += 1;
                y += 1;
            }
        }
        b.pairs = (1..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .collect();
        b
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        let r = |a: usize, b: usize| self.rel[a * n + b];
        for z in 0..n {
            if z == x || z == y || r(x, z) == UNSET || r(y, z) == UNSET {
                continue;
            }
            for (a, b, c) in [
                (x, y, z),
                (x, z, y),
                (y, x, z),
                (y, z, x),
                (z, x, y),
                (z, y, x),
            ] {
                if !self.target.allows(r(a, b), r(b, c), r(a, c)) {
                    return false;
                }
            }
        }
        true
    }

    /// Depth-first over the remaining upper-triangle pairs; returns the first
    /// leaf whose class hypergroup equals the target table.
    fn run(&mut self, depth: usize) -> Option<AssociationScheme> {
        let (n, m) = (self.n, self.target.m);
        if depth == self.pairs.len() {
            self.leaves += 1;
            return self.leaf();
        }
        let (x, y) = self.pairs[depth];
        for c in 1..m {
            let sc = self.target.star[c];
            if self.count[x * m + c] == self.valency[c]
                || self.count[y * m + sc] == self.valency[sc]
            {
                continue;
            }
            self.rel[x * n + y] = c;
            self.rel[y * n + x] = sc;
            self.count[x * m + c] += 1;
            self.count[y * m + sc] += 1;
            if self.consistent(x, y) {
                if let Some(s) = self.run(depth + 1) {
                    return Some(s);
                }
            }
            self.count[x * m + c] -= 1;
            self.count[y * m + sc] -= 1;
        }
        self.rel[x * n + y] = UNSET;
        self.rel[y * n + x] = UNSET;
        None
    }

    fn leaf(&self) -> Option<AssociationScheme> {
        let s = build_flat(self.n, self.rel.clone()).ok()?;
        let m = self.target.m;
        if s.s() != m || (0..m).any(|p| s.star(p) != self.target.star[p]) {
            return None;
        }
        (0..m)
            .all(|p| (0..m).all(|q| *s.mult(p, q) == self.target.table[p][q]))
            .then_some(s)
    }
}

/// Exhaustive search over relation matrices on `|H| ..= n_max` points with one
/// class per element of `h`. Class `0` is the identity and the other classes
/// follow the remaining elements in increasing order. Returns the first scheme
/// whose class hypergroup is isomorphic to `h`.
pub fn search_realization(h: &Hypergroup, n_max: usize, threads: usize) -> Result<SearchOutcome> {
    guard("search point count", SEARCH_BOUND, n_max)?;
    let (target, _) = Target::new(h);
    let mut log = Vec::new();
    for n in h.m().max(1)..=n_max {
        let vectors = valency_vectors(&target, n);
        let results = map_indexed(vectors.len(), threads, |i| {
            let mut branch = Branch::new(&target, n, vectors[i].clone());
            let found = branch.run(0);
            (found, branch.leaves)
        });
        let mut leaves = 0u64;
        for (found, count) in results {
            leaves += count;
            if let Some(s) = found {
                let realized = to_hypergroup(&s).map_err(Error::Hypergroup)?;
                if !realized.is_isomorphic(h)? {
                    return Err(Error::Precondition(
                        "search produced a scheme that does not realize the target".to_string(),
                    ));
                }
                return Ok(SearchOutcome {
                    scheme: Some(s),
                    log,
                    n_max,
                });
            }
        }
        log.push(format!(
            "n={n} exhausted: {leaves} candidate matrices, 0 matches"
        ));
    }
    Ok(SearchOutcome {
        scheme: None,
        log,
        n_max,
    })
}
