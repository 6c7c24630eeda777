//! Canonical JSON interchange: sorted keys, no whitespace, arrays in index order.
//! Importing re-validates everything; derived data is never read from a file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::IncidenceGeometry;
use crate::group::FiniteGroup;
use crate::hypergroup::{build_hypergroup, Hypergroup};
use crate::ring::FiniteRing;
use crate::scheme::{build_scheme, AssociationScheme};

// Field order is alphabetical so that serialization is canonical.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeDto {
    n: usize,
    rel: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergroupDto {
    e: usize,
    inv: Vec<usize>,
    m: usize,
    table: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryDto {
    lines: Vec<Vec<usize>>,
    points: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDto {
    cayley: Vec<Vec<usize>>,
    order: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDto {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

pub fn scheme_to_json(s: &AssociationScheme) -> String {
    serde_json::to_string(&SchemeDto {
        n: s.n(),
        rel: s.rel_matrix(),
    })
    .expect("serializable")
}

pub fn scheme_from_json(text: &str) -> Result<AssociationScheme> {
    let dto: SchemeDto = serde_json::from_str(text)?;
    if dto.rel.len() != dto.n {
        return Err(Error::Malformed(format!(
            "n = {} but rel has {} rows",
            dto.n,
            dto.rel.len()
        )));
    }
    build_scheme(dto.n, &dto.rel).map_err(Error::Scheme)
}

pub fn hypergroup_to_json(h: &Hypergroup) -> String {
    serde_json::to_string(&HypergroupDto {
        e: h.identity(),
        inv: h.inverses().to_vec(),
        m: h.m(),
        table: h
            .table()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cell.iter().copied().collect())
                    .collect()
            })
            .collect(),
    })
    .expect("serializable")
}

pub fn hypergroup_from_json(text: &str) -> Result<Hypergroup> {
    let dto: HypergroupDto = serde_json::from_str(text)?;
    if dto.table.len() != dto.m {
        return Err(Error::Malformed(format!(
            "m = {} but table has {} rows",
            dto.m,
            dto.table.len()
        )));
    }
    let table = dto
        .table
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cell| cell.into_iter().collect())
                .collect()
        })
        .collect();
    build_hypergroup(table, dto.e, dto.inv).map_err(Error::Hypergroup)
}

pub fn geometry_to_json(g: &IncidenceGeometry) -> String {
    serde_json::to_string(&GeometryDto {
        lines: g.lines().to_vec(),
        points: g.points(),
    })
    .expect("serializable")
}

/// Lines are normalized on import; geometry axioms are not required here.
pub fn geometry_from_json(text: &str) -> Result<IncidenceGeometry> {
    let dto: GeometryDto = serde_json::from_str(text)?;
    IncidenceGeometry::new(dto.points, dto.lines)
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupDto {
        cayley: g.cayley().to_vec(),
        order: g.order(),
    })
    .expect("serializable")
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup> {
    let dto: GroupDto = serde_json::from_str(text)?;
    if dto.cayley.len() != dto.order {
        return Err(Error::Malformed(format!(
            "order = {} but cayley has {} rows",
            dto.order,
            dto.cayley.len()
        )));
    }
    FiniteGroup::new(dto.cayley)
}

pub fn ring_to_json(r: &FiniteRing) -> String {
    serde_json::to_string(&RingDto {
        add: r.add_table().to_vec(),
        mul: r.mul_table().to_vec(),
    })
    .expect("serializable")
}

pub fn ring_from_json(text: &str) -> Result<FiniteRing> {
    let dto: RingDto = serde_json::from_str(text)?;
    FiniteRing::new(dto.add, dto.mul)
}

/// Any of the interchange objects, recognized by its keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Scheme(AssociationScheme),
    Hypergroup(Hypergroup),
    Geometry(IncidenceGeometry),
    Group(FiniteGroup),
    Ring(FiniteRing),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let has = |k: &str| value.get(k).is_some();
        if has("rel") {
            scheme_from_json(text).map(Document::Scheme)
        } else if has("table") {
            hypergroup_from_json(text).map(Document::Hypergroup)
        } else if has("lines") {
            geometry_from_json(text).map(Document::Geometry)
        } else if has("cayley") {
            group_from_json(text).map(Document::Group)
        } else if has("add") {
            ring_from_json(text).map(Document::Ring)
        } else {
            Err(Error::Malformed(
                "unrecognized document: expected a scheme, hypergroup, geometry, group or ring"
                    .to_string(),
            ))
        }
    }

    pub fn load(path: &Path) -> Result<Document> {
        Document::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Scheme(s) => scheme_to_json(s),
            Document::Hypergroup(h) => hypergroup_to_json(h),
            Document::Geometry(g) => geometry_to_json(g),
            Document::Group(g) => group_to_json(g),
            Document::Ring(r) => ring_to_json(r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergroup::sign;

    #[test]
    fn canonical_forms() {
        let s = build_scheme(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(scheme_to_json(&s), r#"{"n":2,"rel":[[0,1],[1,0]]}"#);
        assert_eq!(
            hypergroup_to_json(&crate::hypergroup::krasner()),
            r#"{"e":0,"inv":[0,1],"m":2,"table":[[[0],[1]],[[1],[0,1]]]}"#
        );
    }

    #[test]
    fn round_trips() {
        let h = sign();
        let text = hypergroup_to_json(&h);
        assert_eq!(hypergroup_from_json(&text).unwrap(), h);
        let doc = Document::parse(&text).unwrap();
        assert_eq!(doc.to_json(), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(scheme_from_json("{"), Err(Error::Json(_))));
        assert!(matches!(
            scheme_from_json(r#"{"n":3,"rel":[[0]]}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            scheme_from_json(r#"{"n":2,"rel":[[0,1],[0,0]]}"#),
            Err(Error::Scheme(_))
        ));
        assert!(Document::parse(r#"{"x":1}"#).is_err());
    }
}
