//! Concrete families of schemes and hypergroups.

use std::collections::BTreeSet;

use crate::error::{guard, Error, Report, Result, Violation, MAX_WITNESSES};
use crate::group::{AutSubgroup, FiniteGroup};
use crate::hypergroup::{build_hypergroup, ElementSet, Hypergroup};
use crate::ring::{FiniteRing, Value, ValuedRing};
use crate::scheme::{build_flat, AssociationScheme};

pub const HAMMING_BOUND: usize = 10;

fn build(n: usize, rel: Vec<usize>) -> Result<AssociationScheme> {
    build_flat(n, rel).map_err(Error::Scheme)
}

/// Scheme of a group: `rel[a][b]` is the class of `ab⁻¹`, with the identity in
/// class 0 and the remaining elements in increasing order.
pub fn group_scheme(group: &FiniteGroup) -> AssociationScheme {
    let g = group.order();
    let e = group.identity();
    let class_of: Vec<usize> = (0..g)
        .map(|x| match x.cmp(&e) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => x + 1,
            std::cmp::Ordering::Greater => x,
        })
        .collect();
    let mut rel = Vec::with_capacity(g * g);
    for a in 0..g {
        for b in 0..g {
            rel.push(class_of[group.op(a, group.inv(b))]);
        }
    }
    build(g, rel).expect("group correspondence yields a scheme")
}

/// Group element carried by each class of [`group_scheme`].
pub fn group_scheme_elements(group: &FiniteGroup) -> Vec<usize> {
    let e = group.identity();
    std::iter::once(e)
        .chain((0..group.order()).filter(|&x| x != e))
        .collect()
}

/// Partition association scheme `(G,P)`: `rel[x][y]` is the `P`-orbit of `xy⁻¹`.
pub fn partition_scheme(group: &FiniteGroup, auts: &AutSubgroup) -> Result<AssociationScheme> {
    let (orbit_of, _) = auts.orbits(group);
    let g = group.order();
    let mut rel = Vec::with_capacity(g * g);
    for x in 0..g {
        for y in 0..g {
            rel.push(orbit_of[group.op(x, group.inv(y))]);
        }
    }
    build(g, rel)
}

/// Closed form of the partition-scheme constant `a_{[a][b]}^{[c]}`: zero when
/// `[c] ∉ [a]*[b]`, otherwise `|{t ∈ [b] : abt⁻¹ ∈ [a]}|` for representatives
/// `a ∈ [a]`, `b ∈ [b]` with `ab ∈ [c]`.
pub fn partition_constant_closed_form(
    group: &FiniteGroup,
    auts: &AutSubgroup,
    a_orbit: usize,
    b_orbit: usize,
    c_orbit: usize,
) -> u64 {
    let (orbit_of, orbits) = auts.orbits(group);
    let pair = orbits[a_orbit].iter().find_map(|&a| {
        orbits[b_orbit]
            .iter()
            .find(|&&b| orbit_of[group.op(a, b)] == c_orbit)
            .map(|&b| (a, b))
    });
    let Some((a, b)) = pair else {
        return 0;
    };
    let ab = group.op(a, b);
    orbits[b_orbit]
        .iter()
        .filter(|&&t| orbit_of[group.op(ab, group.inv(t))] == a_orbit)
        .count() as u64
}

/// Partition hypergroup `{G}_P`: `[x]*[y] = {[x'y'] : x'∈[x], y'∈[y]}`.
pub fn partition_hypergroup(group: &FiniteGroup, auts: &AutSubgroup) -> Result<Hypergroup> {
    let (orbit_of, orbits) = auts.orbits(group);
    let k = orbits.len();
    let mut table = vec![vec![ElementSet::new(); k]; k];
    for (i, oi) in orbits.iter().enumerate() {
        for (j, oj) in orbits.iter().enumerate() {
            for &x in oi {
                for &y in oj {
                    table[i][j].insert(orbit_of[group.op(x, y)]);
                }
            }
        }
    }
    let inv = orbits.iter().map(|o| orbit_of[group.inv(o[0])]).collect();
    build_hypergroup(table, 0, inv).map_err(Error::Hypergroup)
}

/// The quotient hyperring `A/G`.
#[derive(Clone, Debug)]
pub struct QuotientHyperring {
    /// Orbits of scaling by `G`; the zero orbit is index 0.
    pub classes: Vec<Vec<usize>>,
    /// `(A/G, ⊕)`.
    pub addition: Hypergroup,
    /// `[a]⋆[b] = [ab]`.
    pub mult: Vec<Vec<usize>>,
    pub one: usize,
}

impl QuotientHyperring {
    pub fn is_hyperfield(&self) -> bool {
        (1..self.classes.len())
            .all(|a| (1..self.classes.len()).any(|b| self.mult[a][b] == self.one))
    }
}

/// Builds `A/G` with `[a]⊕[b] = {[g1·a + g2·b]}` and `[a]⋆[b] = [ab]`.
///
/// The ⊕ table is computed directly and then required to coincide cell by cell
/// with the partition hypergroup of `(A,+)` under scaling by `G`; distributivity
/// of ⋆ over ⊕ is checked exhaustively.
pub fn quotient_hyperring(ring: &FiniteRing, units: &[usize]) -> Result<QuotientHyperring> {
    let scaling = ring.scaling_automorphisms(units)?;
    let additive = ring.additive_group();
    let (class_of, classes) = scaling.orbits(&additive);
    let k = classes.len();
    let g: Vec<usize> = units
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut table = vec![vec![ElementSet::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (classes[i][0], classes[j][0]);
            for &g1 in &g {
                for &g2 in &g {
                    table[i][j].insert(class_of[ring.add(ring.mul(g1, a), ring.mul(g2, b))]);
                }
            }
        }
    }
    let inv = classes.iter().map(|c| class_of[ring.neg(c[0])]).collect();
    let addition = build_hypergroup(table, 0, inv).map_err(Error::Hypergroup)?;

    let partition = partition_hypergroup(&additive, &scaling)?;
    if partition != addition {
        return Err(Error::Precondition(
            "⊕ differs from the partition hypergroup of the additive group".to_string(),
        ));
    }

    let mut mult = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let products: BTreeSet<usize> = classes[i]
                .iter()
                .flat_map(|&a| classes[j].iter().map(move |&b| (a, b)))
                .map(|(a, b)| class_of[ring.mul(a, b)])
                .collect();
            if products.len() != 1 {
                return Err(Error::Precondition(format!(
                    "orbit product [{i}]⋆[{j}] is not well defined"
                )));
            }
            mult[i][j] = *products.iter().next().unwrap();
        }
    }
    let one = class_of[ring.one()];

    let mut bad = Vec::new();
    for a in 0..k {
        if mult[a][0] != 0 {
            bad.push(Violation::new("hyperring-absorbing-zero", vec![a]));
        }
        for b in 0..k {
            for c in 0..k {
                let lhs: ElementSet = addition.mult(a, b).iter().map(|&x| mult[x][c]).collect();
                let rhs = addition.mult(mult[a][c], mult[b][c]);
                if lhs != *rhs {
                    bad.push(Violation::new("hyperring-distributivity", vec![a, b, c]));
                }
            }
        }
    }
    if !bad.is_empty() {
        bad.truncate(MAX_WITNESSES);
        return Err(Error::Structure(Report::failed(bad)));
    }
    Ok(QuotientHyperring {
        classes,
        addition,
        mult,
        one,
    })
}

/// Hamming scheme `H(n,2)` on `{0,1}^n` (points as bit masks), classes by distance.
pub fn hamming_scheme(n: usize) -> Result<AssociationScheme> {
    if n == 0 {
        return Err(Error::Precondition(
            "Hamming dimension must be positive".to_string(),
        ));
    }
    guard("Hamming dimension", HAMMING_BOUND, n)?;
    let size = 1usize << n;
    let mut rel = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            rel.push((x ^ y).count_ones() as usize);
        }
    }
    build(size, rel)
}

/// Lines of the Fano plane `{i, i+1, i+3} mod 7`, each sorted, in sorted order.
pub fn fano_lines() -> Vec<Vec<usize>> {
    let mut lines: Vec<Vec<usize>> = (0..7)
        .map(|i| {
            let mut l = vec![i, (i + 1) % 7, (i + 3) % 7];
            l.sort_unstable();
            l
        })
        .collect();
    lines.sort();
    lines
}

/// Flags `(point, line index)` of the Fano plane in the order used by
/// [`fano_flag_scheme`].
pub fn fano_flags() -> Vec<(usize, usize)> {
    fano_lines()
        .iter()
        .enumerate()
        .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, l)))
        .collect()
}

/// The flag scheme of the Fano plane with relations
/// `R0` (diagonal), `R1` (same line), `R2` (same point), `R3 = R1∘R2`,
/// `R4 = R2∘R1`, `R5 = R1∘R2∘R1`.
pub fn fano_flag_scheme() -> Result<AssociationScheme> {
    let flags = fano_flags();
    let n = flags.len();
    let rel_of = |pred: &dyn Fn(usize, usize) -> bool| -> Vec<bool> {
        (0..n * n).map(|i| pred(i / n, i % n)).collect()
    };
    let compose = |a: &[bool], b: &[bool]| -> Vec<bool> {
        (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                (0..n).any(|z| a[x * n + z] && b[z * n + y])
            })
            .collect()
    };
    let r0 = rel_of(&|x, y| x == y);
    let r1 = rel_of(&|x, y| flags[x].1 == flags[y].1 && flags[x].0 != flags[y].0);
    let r2 = rel_of(&|x, y| flags[x].0 == flags[y].0 && flags[x].1 != flags[y].1);
    let r3 = compose(&r1, &r2);
    let r4 = compose(&r2, &r1);
    let r5 = compose(&r3, &r1);
    let relations = [r0, r1, r2, r3, r4, r5];
    let mut rel = Vec::with_capacity(n * n);
    for i in 0..n * n {
        let hits: Vec<usize> = (0..6).filter(|&c| relations[c][i]).collect();
        if hits.len() != 1 {
            return Err(Error::Precondition(format!(
                "flag pair ({},{}) lies in {} of the six relations",
                i / n,
                i % n,
                hits.len()
            )));
        }
        rel.push(hits[0]);
    }
    build(n, rel)
}

/// Linearly ordered hypergroup on `v0 < … < v(k-1) < ∞`. Element 0 is `∞`
/// (the identity) and element `i ≥ 1` is `v(i-1)`, matching
/// [`Value::class_index`].
pub fn linear_hypergroup(finite_values: usize) -> Hypergroup {
    let m = finite_values + 1;
    let value = Value::from_class_index;
    let mut table = vec![vec![ElementSet::new(); m]; m];
    for x in 0..m {
        for y in 0..m {
            table[x][y] = if x != y {
                [if value(x) < value(y) { x } else { y }].into()
            } else {
                (0..m).filter(|&z| value(z) >= value(x)).collect()
            };
        }
    }
    build_hypergroup(table, 0, (0..m).collect()).expect("linearly ordered hypergroup")
}

/// For every value `r` and every pair `(a,b)` at distance `r`, the set
/// `{y : ν(a−y) = ν(y−b) = r}` must be nonempty and of a size depending only on `r`.
///
/// Witnesses: `triangle-empty (r, a, b)` and `triangle-count (r, a, b, a', b')`,
/// with `r` as a class index (`∞ ↦ 0`).
pub fn check_triangle_condition(v: &ValuedRing) -> Report {
    let n = v.ring().order();
    let mut reference: Vec<Option<(usize, usize, usize)>> = vec![None; v.finite_values() + 1];
    for a in 0..n {
        for b in 0..n {
            let r = v.distance(a, b);
            let count = (0..n)
                .filter(|&y| v.distance(a, y) == r && v.distance(y, b) == r)
                .count();
            let ri = r.class_index();
            if count == 0 {
                return Report::single("triangle-empty", vec![ri, a, b]);
            }
            match reference[ri] {
                None => reference[ri] = Some((a, b, count)),
                Some((a0, b0, c0)) if c0 != count => {
                    return Report::single("triangle-count", vec![ri, a0, b0, a, b]);
                }
                Some(_) => {}
            }
        }
    }
    Report::ok()
}

/// The distance partition `F_g = {(a,b) : ν(a−b) = g}` as a scheme candidate,
/// classes indexed by [`Value::class_index`]. No triangle-condition precondition.
pub fn distance_scheme(v: &ValuedRing) -> Result<AssociationScheme> {
    let n = v.ring().order();
    let mut rel = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            rel.push(v.distance(a, b).class_index());
        }
    }
    build(n, rel)
}

/// Valuation scheme of a valued ring satisfying the triangle condition.
pub fn valuation_scheme(v: &ValuedRing) -> Result<AssociationScheme> {
    let report = check_triangle_condition(v);
    if !report.valid {
        return Err(Error::Structure(report));
    }
    distance_scheme(v)
}

/// Sign pattern of the structure constants of a valuation scheme (classes read
/// through [`Value::from_class_index`]):
///
/// 1. `p, q, r` distinct: `a^r_{pq} = 0`
/// 2. `p = q = r`: `a^p_{pp} ≠ 0`
/// 3. `r < p = q`: `a^r_{pp} = 0`
/// 4. `r > p = q`: `a^r_{pp} ≠ 0`
/// 5. `r = p > q` or `r = q > p`: `a^r_{pq} = 0`
pub fn check_valuation_cases(s: &AssociationScheme) -> Report {
    let v = Value::from_class_index;
    let mut bad = Vec::new();
    for p in 0..s.s() {
        for q in 0..s.s() {
            for r in 0..s.s() {
                let a = s.constant(p, q, r);
                let (vp, vq, vr) = (v(p), v(q), v(r));
                let failed = if p != q && q != r && p != r {
                    (a != 0).then_some("case-1")
                } else if p == q && q == r {
                    (a == 0).then_some("case-2")
                } else if p == q && vr < vp {
                    (a != 0).then_some("case-3")
                } else if p == q && vr > vp {
                    (a == 0).then_some("case-4")
                } else if (r == p && vp > vq) || (r == q && vq > vp) {
                    (a != 0).then_some("case-5")
                } else {
                    None
                };
                if let Some(case) = failed {
                    bad.push(Violation::new(case, vec![p, q, r]));
                }
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

/// `x + x = {e, x}` for every `x ≠ e`. Requires a commutative hypergroup.
pub fn is_k_vector_space(h: &Hypergroup) -> Result<bool> {
    if !h.is_commutative() {
        return Err(Error::Precondition(
            "hypergroup is not commutative".to_string(),
        ));
    }
    let e = h.identity();
    Ok((0..h.m())
        .filter(|&x| x != e)
        .all(|x| *h.mult(x, x) == [e, x].into_iter().collect::<ElementSet>()))
}
