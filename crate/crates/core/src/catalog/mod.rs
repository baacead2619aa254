//! Named groups and the default manifest the lemma suite runs over.
//!
//! Ids are factors joined by `x`, each factor one of `C<n>`, `D<n>` (order
//! `2n`), `S<k>`/`A<k>` with `k ≤ 7`, `SL2(<p>)` with `p ≤ 7`,
//! `PSL2(<p>)`/`L2(<p>)` with `p ≤ 13`, `V4` and `Q8`.

mod builders;
mod spec_file;

use std::path::Path;

use serde::Serialize;

use crate::permgrp::{FiniteGroup, GroupError, Permutation, Subgroup, DEFAULT_MAX_ORDER};

pub use builders::{
    alternating, cyclic, dihedral, projective_special_linear, special_linear, symmetric,
};
pub use spec_file::{load_group_spec, parse_group_spec, save_group_spec, GroupSpec};

/// Regular representation of the quaternion group, shipped as a GroupSpec.
pub const Q8_FIXTURE: &str = include_str!("../../fixtures/q8.json");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown group id `{0}`")]
    UnknownId(String),
    #[error("malformed GroupSpec at line {line}, column {column}: {reason}")]
    Malformed {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("generator {index} {reason}")]
    Validation { index: usize, reason: String },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Builds a catalog group with the default enumeration cap.
pub fn build(id: &str) -> Result<FiniteGroup, CatalogError> {
    build_with(id, DEFAULT_MAX_ORDER)
}

pub fn build_with(id: &str, max_order: usize) -> Result<FiniteGroup, CatalogError> {
    builders::build_id(id, max_order)
}

/// Resolves `catalog:<id>` or a GroupSpec file path.
pub fn resolve_target(target: &str, max_order: usize) -> Result<FiniteGroup, CatalogError> {
    match target.strip_prefix("catalog:") {
        Some(id) => build_with(id, max_order),
        None if Path::new(target).is_file() => load_group_spec(target, max_order),
        None => Err(CatalogError::UnknownId(target.to_string())),
    }
}

/// Exact invariants a catalog entry is expected to have.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub order: Option<u64>,
    pub psi: Option<u64>,
    pub solvable: Option<bool>,
    pub center_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub expected: Expected,
    /// Generating image arrays of subgroups flagged as normal.
    pub marked_normal: Vec<Vec<Vec<u32>>>,
}

impl CatalogEntry {
    fn new(id: &str, order: u64, psi: u64, solvable: bool, center_order: u64) -> Self {
        Self {
            id: id.to_string(),
            expected: Expected {
                order: Some(order),
                psi: Some(psi),
                solvable: Some(solvable),
                center_order: Some(center_order),
            },
            marked_normal: Vec::new(),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, CatalogError> {
        build_with(&self.id, max_order)
    }

    /// The two factors of a product id, split at the last `x`.
    pub fn factors(&self) -> Option<(&str, &str)> {
        self.id.rsplit_once('x')
    }

    /// Subgroups flagged as normal, realized inside `group`.
    pub fn marked_normal_subgroups<'g>(
        &self,
        group: &'g FiniteGroup,
    ) -> Result<Vec<Subgroup<'g>>, CatalogError> {
        self.marked_normal
            .iter()
            .map(|gens| {
                let ids = gens
                    .iter()
                    .enumerate()
                    .map(|(index, images)| {
                        let perm = Permutation::from_images(images.clone()).map_err(|e| {
                            CatalogError::Validation {
                                index,
                                reason: e.to_string(),
                            }
                        })?;
                        group.id_of(&perm).ok_or_else(|| CatalogError::Validation {
                            index,
                            reason: format!("is not an element of {}", self.id),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let sub = group.subgroup_closure(&ids);
                if !sub.is_normal() {
                    return Err(CatalogError::Group(GroupError::NotNormal));
                }
                Ok(sub)
            })
            .collect()
    }

    /// Mismatches between the built group and `expected`, empty when all hold.
    pub fn check_expectations(&self, group: &FiniteGroup) -> Vec<String> {
        let mut out = Vec::new();
        let e = &self.expected;
        let mut cmp = |what: &str, want: Option<String>, got: String| {
            if let Some(want) = want {
                if want != got {
                    out.push(format!("{}: {what} expected {want}, got {got}", self.id));
                }
            }
        };
        cmp("order", e.order.map(|v| v.to_string()), group.order().to_string());
        cmp(
            "psi",
            e.psi.map(|v| v.to_string()),
            crate::psi::psi_of_group(group).psi.to_string(),
        );
        cmp(
            "solvable",
            e.solvable.map(|v| v.to_string()),
            group.is_solvable().to_string(),
        );
        cmp(
            "center_order",
            e.center_order.map(|v| v.to_string()),
            group.center().order().to_string(),
        );
        out
    }
}

/// Every group the lemma suite runs over by default.
pub fn default_manifest() -> Vec<CatalogEntry> {
    const CYCLIC_PSI: [(u64, u64); 20] = [
        (1, 1),
        (2, 3),
        (3, 7),
        (4, 11),
        (5, 21),
        (6, 21),
        (7, 43),
        (8, 43),
        (9, 61),
        (10, 63),
        (11, 111),
        (12, 77),
        (13, 157),
        (14, 129),
        (15, 147),
        (16, 171),
        (60, 1617),
        (120, 6321),
        (168, 12943),
        (420, 69531),
    ];
    let mut entries: Vec<CatalogEntry> = CYCLIC_PSI
        .iter()
        .map(|&(n, psi)| CatalogEntry::new(&format!("C{n}"), n, psi, true, n))
        .collect();
    let mut s4 = CatalogEntry::new("S4", 24, 67, true, 1);
    s4.marked_normal = vec![vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]];
    entries.extend([
        CatalogEntry::new("S3", 6, 13, true, 1),
        s4,
        CatalogEntry::new("S5", 120, 471, false, 1),
        CatalogEntry::new("A4", 12, 31, true, 1),
        CatalogEntry::new("A5", 60, 211, false, 1),
        CatalogEntry::new("A6", 360, 1411, false, 1),
        CatalogEntry::new("D4", 8, 19, true, 2),
        CatalogEntry::new("Q8", 8, 27, true, 2),
        CatalogEntry::new("C2xC3", 6, 21, true, 6),
        CatalogEntry::new("SL2(3)", 24, 99, true, 2),
        CatalogEntry::new("SL2(5)", 120, 663, false, 2),
        CatalogEntry::new("SL2(7)", 336, 2355, false, 2),
        CatalogEntry::new("PSL2(7)", 168, 715, false, 1),
        CatalogEntry::new("A5xC1", 60, 211, false, 1),
        CatalogEntry::new("A5xC2", 120, 603, false, 2),
        CatalogEntry::new("A5xC3", 180, 1237, false, 3),
        CatalogEntry::new("A5xC7", 420, 9073, false, 7),
        CatalogEntry::new("A5xC11", 660, 23421, false, 11),
        CatalogEntry::new("A5xC13", 780, 33127, false, 13),
        CatalogEntry::new("A5xC49", 2940, 443_311, false, 49),
        CatalogEntry::new("A5xC77", 4620, 1_007_103, false, 77),
        CatalogEntry::new("A5xC91", 5460, 1_424_461, false, 91),
        CatalogEntry::new("A5xC121", 7260, 2_831_831, false, 121),
    ]);
    entries
}

/// Looks an id up in the default manifest.
pub fn manifest_entry(id: &str) -> Option<CatalogEntry> {
    default_manifest().into_iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::psi_of_group;
    use num_bigint::BigUint;
    use std::collections::{BTreeMap, HashSet};

    #[test]
    fn build_examples() {
        let a5 = build("A5").unwrap();
        assert_eq!(a5.order(), 60);
        let hist: BTreeMap<u64, u64> = [(1, 1), (2, 15), (3, 20), (5, 24)].into();
        assert_eq!(a5.order_histogram(), &hist);

        let sl25 = build("SL2(5)").unwrap();
        assert_eq!(sl25.order(), 120);
        assert_eq!(sl25.center().order(), 2);

        let l27 = build("PSL2(7)").unwrap();
        assert_eq!(l27.order(), 168);
        assert_eq!(psi_of_group(&l27).psi, BigUint::from(715u32));
        assert_eq!(build("L2(7)").unwrap().order_histogram(), l27.order_histogram());
    }

    #[test]
    fn unknown_ids() {
        for id in ["NOPE", "S8", "A0", "SL2(4)", "SL2(11)", "C0", "D2", "A5x", "xC3", ""] {
            assert!(build(id).is_err(), "{id}");
        }
        assert!(matches!(build("NOPE"), Err(CatalogError::UnknownId(_))));
    }

    #[test]
    fn capacity_is_propagated() {
        assert!(matches!(
            build_with("S5", 100),
            Err(CatalogError::Group(GroupError::Capacity { limit: 100, .. }))
        ));
    }

    #[test]
    fn manifest_covers_required_groups() {
        let manifest = default_manifest();
        let ids: HashSet<&str> = manifest.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids.len(), manifest.len(), "ids are unique");
        for n in (1..=16).chain([60, 120, 168, 420]) {
            assert!(ids.contains(format!("C{n}").as_str()));
        }
        for id in [
            "S3", "S4", "S5", "A4", "A5", "A6", "D4", "Q8", "SL2(3)", "SL2(5)", "PSL2(7)",
        ] {
            assert!(ids.contains(id), "{id}");
        }
        for m in [1, 2, 3, 7, 11, 13, 49, 77] {
            assert!(ids.contains(format!("A5xC{m}").as_str()));
        }
        assert_eq!(manifest_entry("A5xC7").unwrap().expected.psi, Some(9073));
        assert_eq!(manifest_entry("C60").unwrap().expected.psi, Some(1617));
        assert_eq!(manifest_entry("SL2(5)").unwrap().expected.psi, Some(663));
    }

    #[test]
    fn marked_normal_subgroup_of_s4() {
        let entry = manifest_entry("S4").unwrap();
        let g = entry.build(DEFAULT_MAX_ORDER).unwrap();
        let normals = entry.marked_normal_subgroups(&g).unwrap();
        assert_eq!(normals.len(), 1);
        assert_eq!(normals[0].order(), 4);
        assert!(normals[0].is_normal());
    }

    #[test]
    fn rebuilding_is_deterministic() {
        for id in ["A5xC3", "SL2(3)", "Q8"] {
            assert_eq!(
                build(id).unwrap().order_histogram(),
                build(id).unwrap().order_histogram()
            );
        }
    }

    #[test]
    fn special_linear_orders() {
        for p in [2u64, 3, 5, 7] {
            let g = special_linear(p, DEFAULT_MAX_ORDER).unwrap();
            let order = p * (p * p - 1);
            assert_eq!(g.order() as u64, order);
            let center = g.center();
            let central_quotient = g.quotient_group(&center).unwrap();
            assert_eq!(
                central_quotient.order() as u64,
                order / num_integer::gcd(2, p - 1)
            );
        }
    }

    #[test]
    fn small_projective_lines_match_known_groups() {
        // PSL(2,5) ≅ A5 and PSL(2,3) ≅ A4
        assert_eq!(
            build("PSL2(5)").unwrap().order_histogram(),
            build("A5").unwrap().order_histogram()
        );
        assert_eq!(
            build("PSL2(3)").unwrap().order_histogram(),
            build("A4").unwrap().order_histogram()
        );
    }
}
