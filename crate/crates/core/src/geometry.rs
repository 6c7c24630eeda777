//! Incidence geometries and the projective geometry of a K-vector space.

use crate::constructions::is_k_vector_space;
use crate::error::{guard, Error, Report, Result, Violation, MAX_WITNESSES};
use crate::hypergroup::Hypergroup;

pub const GEOMETRY_BOUND: usize = 64;

/// Points `0..points`; each line is a sorted point list, lines in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGeometry {
    points: usize,
    lines: Vec<Vec<usize>>,
}

impl IncidenceGeometry {
    /// Normalizes the line list (sorted, deduplicated). Does not check axioms.
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        guard("geometry points", GEOMETRY_BOUND, points)?;
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        if let Some(p) = lines.iter().flatten().find(|&&p| p >= points) {
            return Err(Error::Malformed(format!(
                "line point {p} out of range 0..{points}"
            )));
        }
        lines.sort();
        lines.dedup();
        Ok(IncidenceGeometry { points, lines })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// At most one line (or at most one point): accepted, but flagged.
    pub fn is_degenerate(&self) -> bool {
        self.points <= 1 || self.lines.len() <= 1
    }

    fn masks(&self) -> Vec<u64> {
        self.lines
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &p| m | 1 << p))
            .collect()
    }

    /// Checks line size ≥ 3, a unique line through any two points, and
    /// Veblen–Young: if lines `ab` and `cd` meet then so do `ac` and `bd`.
    pub fn verify(&self) -> Report {
        let mut bad = Vec::new();
        for (i, l) in self.lines.iter().enumerate() {
            if l.len() < 3 {
                bad.push(Violation::new("line-size", vec![i, l.len()]));
            }
        }
        if !bad.is_empty() {
            return Report::failed(bad);
        }
        let masks = self.masks();
        let n = self.points;
        let mut line_of = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let through: Vec<usize> = (0..masks.len())
                    .filter(|&i| masks[i] >> a & 1 == 1 && masks[i] >> b & 1 == 1)
                    .collect();
                if through.len() != 1 {
                    bad.push(Violation::new("unique-line", vec![a, b, through.len()]));
                } else {
                    line_of[a * n + b] = through[0];
                    line_of[b * n + a] = through[0];
                }
            }
        }
        if !bad.is_empty() {
            bad.truncate(MAX_WITNESSES);
            return Report::failed(bad);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if a == b || a == c || a == d || b == c || b == d || c == d {
                            continue;
                        }
                        let meets = |x: usize, y: usize, z: usize, w: usize| {
                            masks[line_of[x * n + y]] & masks[line_of[z * n + w]] != 0
                        };
                        if meets(a, b, c, d) && !meets(a, c, b, d) {
                            bad.push(Violation::new("veblen-young", vec![a, b, c, d]));
                            if bad.len() == MAX_WITNESSES {
                                return Report::failed(bad);
                            }
                        }
                    }
                }
            }
        }
        if bad.is_empty() {
            Report::ok()
        } else {
            Report::failed(bad)
        }
    }

    /// Whether `r` lies on the line through distinct points `p` and `q`.
    pub fn collinear(&self, p: usize, q: usize, r: usize) -> bool {
        self.lines
            .iter()
            .any(|l| l.contains(&p) && l.contains(&q) && l.contains(&r))
    }
}

/// Element of `h` carried by each geometry point of [`geometry_from_hypergroup`]:
/// the non-identity elements in increasing order.
pub fn geometry_point_labels(h: &Hypergroup) -> Vec<usize> {
    (0..h.m()).filter(|&x| x != h.identity()).collect()
}

/// Points are the non-identity elements; the line through `p ≠ q` is
/// `(p*q ∖ {e}) ∪ {p, q}`. The result is verified before it is returned.
pub fn geometry_from_hypergroup(h: &Hypergroup) -> Result<IncidenceGeometry> {
    if !is_k_vector_space(h)? {
        return Err(Error::Precondition(
            "hypergroup is not a K-vector space".to_string(),
        ));
    }
    let labels = geometry_point_labels(h);
    guard("geometry points", GEOMETRY_BOUND, labels.len())?;
    let mut index = vec![usize::MAX; h.m()];
    for (i, &x) in labels.iter().enumerate() {
        index[x] = i;
    }
    let mut lines = Vec::new();
    for (i, &p) in labels.iter().enumerate() {
        for &q in &labels[i + 1..] {
            let mut line: Vec<usize> = h
                .mult(p, q)
                .iter()
                .filter(|&&x| x != h.identity())
                .map(|&x| index[x])
                .collect();
            line.push(index[p]);
            line.push(index[q]);
            lines.push(line);
        }
    }
    let geometry = IncidenceGeometry::new(labels.len(), lines)?;
    let report = geometry.verify();
    if !report.valid {
        return Err(Error::Structure(report));
    }
    Ok(geometry)
}
