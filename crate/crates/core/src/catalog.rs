//! Named instances.
//!
//! Groups: `Z1`..`Z12`, `S3`, `S4`, `A4`, `A5`; `<group>/Inn` is the partition
//! scheme under inner automorphisms. Rings with a unit subgroup: `F3`, `F5`,
//! `F7` (subgroup `{1,2,4}`), `F16/F4`, `F64/F4`. Valued rings: `Z8-2adic`,
//! `Z9-3adic`, `F5-trivial`. Also `hamming-<n>`, `fano-flags`, and the
//! hypergroups `K` and `S`.

use crate::constructions::{
    distance_scheme, fano_flag_scheme, group_scheme, hamming_scheme, partition_hypergroup,
    partition_scheme, quotient_hyperring,
};
use crate::error::{Error, Result};
use crate::group::{AutSubgroup, FiniteGroup};
use crate::hypergroup::{krasner, sign, Hypergroup};
use crate::realization::to_hypergroup;
use crate::ring::{FiniteRing, ValuedRing};
use crate::scheme::AssociationScheme;

/// Every named scheme whose axioms are checked as part of the acceptance suite.
pub const SCHEME_NAMES: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "S3",
    "A4",
    "S3/Inn",
    "A4/Inn",
    "F3",
    "F5",
    "F7",
    "F16/F4",
    "F64/F4",
    "hamming-2",
    "hamming-3",
    "fano-flags",
    "Z8-2adic",
    "Z9-3adic",
    "F5-trivial",
];

pub const RING_NAMES: &[&str] = &["F3", "F5", "F7", "F16/F4", "F64/F4"];

pub const VALUED_RING_NAMES: &[&str] = &["Z8-2adic", "Z9-3adic", "F5-trivial"];

pub const HYPERGROUP_NAMES: &[&str] = &["K", "S"];

pub fn group(name: &str) -> Result<FiniteGroup> {
    if let Some(k) = name.strip_prefix('Z').and_then(|k| k.parse::<usize>().ok()) {
        if (1..=12).contains(&k) {
            return Ok(FiniteGroup::cyclic(k));
        }
    }
    match name {
        "S3" => Ok(FiniteGroup::symmetric(3)),
        "S4" => Ok(FiniteGroup::symmetric(4)),
        "A4" => Ok(FiniteGroup::alternating(4)),
        "A5" => Ok(FiniteGroup::alternating(5)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// A ring together with the unit subgroup it is divided by.
pub fn ring_with_units(name: &str) -> Result<(FiniteRing, Vec<usize>)> {
    let full = |r: FiniteRing| {
        let u = r.units();
        (r, u)
    };
    match name {
        "F3" => Ok(full(FiniteRing::integers_mod(3))),
        "F5" => Ok(full(FiniteRing::integers_mod(5))),
        "F7" => Ok((FiniteRing::integers_mod(7), vec![1, 2, 4])),
        "F16/F4" => {
            let r = FiniteRing::binary_field(4, 0b10011)?;
            let u = r.roots_of_unity(3);
            Ok((r, u))
        }
        "F64/F4" => {
            let r = FiniteRing::binary_field(6, 0b1000011)?;
            let u = r.roots_of_unity(3);
            Ok((r, u))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

pub fn valued_ring(name: &str) -> Result<ValuedRing> {
    match name {
        "Z8-2adic" => ValuedRing::p_adic(2, 3),
        "Z9-3adic" => ValuedRing::p_adic(3, 2),
        "F5-trivial" => ValuedRing::trivial(FiniteRing::integers_mod(5)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn inner_partition(name: &str) -> Option<Result<(FiniteGroup, AutSubgroup)>> {
    let g = name.strip_suffix("/Inn")?;
    Some(group(g).map(|g| {
        let p = AutSubgroup::inner(&g);
        (g, p)
    }))
}

/// The named scheme. Valued rings give their distance scheme, which is built
/// without requiring the triangle condition.
pub fn scheme(name: &str) -> Result<AssociationScheme> {
    if let Ok(g) = group(name) {
        return Ok(group_scheme(&g));
    }
    if let Some(pair) = inner_partition(name) {
        let (g, p) = pair?;
        return partition_scheme(&g, &p);
    }
    if let Ok((r, units)) = ring_with_units(name) {
        let p = r.scaling_automorphisms(&units)?;
        return partition_scheme(&r.additive_group(), &p);
    }
    if let Ok(v) = valued_ring(name) {
        return distance_scheme(&v);
    }
    if let Some(n) = name.strip_prefix("hamming-") {
        let n = n
            .parse()
            .map_err(|_| Error::UnknownName(name.to_string()))?;
        return hamming_scheme(n);
    }
    match name {
        "fano-flags" => fano_flag_scheme(),
        "K" | "S" => Err(Error::Precondition(format!(
            "`{name}` names a hypergroup, not a scheme"
        ))),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// The named hypergroup: `K`, `S`, groups with singleton products, partition
/// hypergroups, ⊕ of quotient hyperrings, and the class hypergroup of any other
/// named scheme.
pub fn hypergroup(name: &str) -> Result<Hypergroup> {
    match name {
        "K" => return Ok(krasner()),
        "S" => return Ok(sign()),
        _ => {}
    }
    if let Ok(g) = group(name) {
        return Ok(g.to_hypergroup());
    }
    if let Some(pair) = inner_partition(name) {
        let (g, p) = pair?;
        return partition_hypergroup(&g, &p);
    }
    if let Ok((r, units)) = ring_with_units(name) {
        return Ok(quotient_hyperring(&r, &units)?.addition);
    }
    to_hypergroup(&scheme(name)?).map_err(Error::Hypergroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_scheme_builds() {
        for name in SCHEME_NAMES {
            assert!(scheme(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn names_resolve_to_the_right_kind() {
        assert_eq!(hypergroup("F3").unwrap(), krasner());
        assert_eq!(scheme("hamming-2").unwrap().n(), 4);
        assert!(matches!(scheme("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(scheme("K"), Err(Error::Precondition(_))));
        assert!(matches!(scheme("hamming-11"), Err(Error::SizeGuard { .. })));
        assert_eq!(scheme("S3/Inn").unwrap().s(), 3);
    }
}
