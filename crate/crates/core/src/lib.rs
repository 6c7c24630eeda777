//! Exact construction and exhaustive verification of finite association
//! schemes and hypergroups, the class-hypergroup functor between them, and the
//! standard families built from groups, rings and valuations.
//!
//! All objects are small and finite; every axiom is checked by enumeration and
//! failures come back as [`Report`]s carrying witness tuples.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod group;
pub mod hypergroup;
pub mod io;
pub mod parallel;
pub mod realization;
pub mod ring;
pub mod scheme;

pub use constructions::{
    check_triangle_condition, check_valuation_cases, distance_scheme, fano_flag_scheme,
    group_scheme, hamming_scheme, is_k_vector_space, linear_hypergroup,
    partition_constant_closed_form, partition_hypergroup, partition_scheme, quotient_hyperring,
    valuation_scheme, QuotientHyperring,
};
pub use error::{Error, HypergroupReport, Report, Result, SchemeReport, Violation};
pub use geometry::{geometry_from_hypergroup, IncidenceGeometry};
pub use group::{AutSubgroup, FiniteGroup};
pub use hypergroup::{build_hypergroup, krasner, sign, CongruenceRelation, ElementSet, Hypergroup};
pub use realization::{
    check_morphism, induced_hom, search_realization, to_hypergroup, SchemeMorphism, SearchOutcome,
};
pub use ring::{FiniteRing, Value, ValuedRing};
pub use scheme::{build_scheme, AssociationScheme, ClassSet};
