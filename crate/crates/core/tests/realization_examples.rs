#![allow(clippy::needless_range_loop)]

mod common;

use common::brute_isomorphic;
use scheme_forge::catalog;
use scheme_forge::realization::InducedHom;
use scheme_forge::{
    check_morphism, group_scheme, induced_hom, krasner, search_realization, sign, to_hypergroup,
    ClassSet, FiniteGroup, SchemeMorphism,
};

#[test]
fn group_schemes_give_back_the_group() {
    for name in ["Z2", "Z5", "S3"] {
        let g = catalog::group(name).unwrap();
        let h = to_hypergroup(&group_scheme(&g)).unwrap();
        assert!(h.is_group());
        assert!(brute_isomorphic(&h, &g.to_hypergroup()));
    }
}

#[test]
fn induced_maps_compose() {
    // Z4 -> Z4/{0,2} -> point
    let z4 = group_scheme(&FiniteGroup::cyclic(4));
    let q = z4.quotient(&ClassSet::from([0, 2])).unwrap();
    let f = SchemeMorphism::quotient_projection(&q);
    let point = group_scheme(&FiniteGroup::cyclic(1));
    let g = SchemeMorphism {
        point_map: vec![0; q.scheme.n()],
        class_map: vec![0; q.scheme.s()],
    };
    let gf = f.then(&g);
    let c = check_morphism(&z4, &point, &gf);
    assert_eq!((c.morphism, c.admissible), (true, Some(true)));
    let hf = induced_hom(&z4, &q.scheme, &f).unwrap();
    let hg = induced_hom(&q.scheme, &point, &g).unwrap();
    let hgf = induced_hom(&z4, &point, &gf).unwrap();
    let composed: Vec<usize> = hf.map.iter().map(|&p| hg.map[p]).collect();
    assert_eq!(hgf.map, composed);
    assert_eq!(hf.map, vec![0, 1, 0, 1]);
}

#[test]
fn product_projection_is_strict() {
    let z2 = group_scheme(&FiniteGroup::cyclic(2));
    let prod = z2.product(&z2);
    let f = SchemeMorphism::first_projection(&z2, &z2);
    let c = check_morphism(&prod, &z2, &f);
    assert_eq!((c.morphism, c.admissible), (true, Some(true)));
    let InducedHom { map, strict } = induced_hom(&prod, &z2, &f).unwrap();
    assert_eq!(map, vec![0, 0, 1, 1]);
    assert!(strict);
}

#[test]
fn admissibility() {
    // the inclusion of the A3 block into (S3,Inn)
    let s3 = catalog::scheme("S3/Inn").unwrap();
    let a3 = ClassSet::from([0, 2]);
    let r = s3.restrict(&a3, 0).unwrap();
    let ys: Vec<usize> = (0..s3.n())
        .filter(|&y| a3.contains(&s3.rel(0, y)))
        .collect();
    let f = SchemeMorphism {
        point_map: ys,
        class_map: a3.iter().copied().collect(),
    };
    let c = check_morphism(&r, &s3, &f);
    assert!(c.morphism);
    assert_eq!(c.admissible, Some(true));
    // Z2 into the 3-point scheme of K: the third point has no preimage
    let z2 = group_scheme(&FiniteGroup::cyclic(2));
    let k3 = catalog::scheme("F3").unwrap();
    let into = SchemeMorphism {
        point_map: vec![0, 1],
        class_map: vec![0, 1],
    };
    let c = check_morphism(&z2, &k3, &into);
    assert_eq!((c.morphism, c.admissible), (true, Some(false)));
    assert_eq!(c.report.first_axiom(), Some("admissible"));
    assert!(induced_hom(&z2, &k3, &into).is_ok());
    // Z3 onto Z2 is not a morphism
    let z3 = group_scheme(&FiniteGroup::cyclic(3));
    let bad = SchemeMorphism {
        point_map: vec![0, 1, 0],
        class_map: vec![0, 1, 1],
    };
    assert!(!check_morphism(&z3, &z2, &bad).morphism);
}

#[test]
fn searches_find_known_realizations() {
    for name in ["Z2", "Z3", "Z4", "hamming-2", "S3/Inn", "F5"] {
        let h = catalog::hypergroup(name).unwrap();
        let out = search_realization(&h, 6, 1).unwrap();
        let s = out.scheme.unwrap_or_else(|| panic!("{name} not realized"));
        assert!(
            to_hypergroup(&s).unwrap().is_isomorphic(&h).unwrap(),
            "{name}"
        );
    }
    let out = search_realization(&krasner(), 3, 1).unwrap();
    assert_eq!(out.scheme.unwrap().n(), 3);
}

#[test]
fn sign_hypergroup_has_no_small_realization() {
    let out = search_realization(&sign(), 6, 1).unwrap();
    assert!(out.scheme.is_none());
    assert_eq!(
        out.log
            .iter()
            .map(|l| l.split(':').next().unwrap())
            .collect::<Vec<_>>(),
        vec![
            "n=3 exhausted",
            "n=4 exhausted",
            "n=5 exhausted",
            "n=6 exhausted"
        ]
    );
}

#[test]
fn search_is_thread_independent() {
    let h = catalog::hypergroup("hamming-2").unwrap();
    let a = search_realization(&h, 6, 1).unwrap();
    let b = search_realization(&h, 6, 3).unwrap();
    assert_eq!(a, b);
}
