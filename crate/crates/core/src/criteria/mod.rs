//! Executable checks for the lemmas relating `ψ(G)` to group structure.
//!
//! Every checker returns a [`LemmaReport`]: whether the lemma's hypothesis
//! holds for the instance, and if so whether its conclusion does. A report
//! with the hypothesis met and the conclusion failing is a violation; the
//! suite over the default manifest must produce none.

mod checks;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::CatalogError;
use crate::exactnum::NumberError;
use crate::permgrp::GroupError;

pub use checks::*;
pub use suite::{checks_for_group, run_suite, run_suite_with, SuiteTarget};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error("unknown group ids: {}", .0.join(", "))]
    UnknownTargets(Vec<String>),
    #[error("domain error: {0}")]
    Domain(String),
}

/// The statements a report can be about, in suite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LemmaId {
    /// `ψ(G) > (211/1617)ψ(C_n)` forces `G` solvable.
    SolvabilityCriterion,
    L2_1,
    L2_2,
    L2_3,
    L2_4,
    L2_5,
    L2_6,
    L2_7,
    L2_8,
    L2_9,
    L2_10,
    L2_11,
    L2_12,
    L2_13,
    L2_14,
    L2_15,
    L2_16,
    L3_1,
    MainTheorem,
}

impl LemmaId {
    pub const ALL: [LemmaId; 19] = [
        LemmaId::SolvabilityCriterion,
        LemmaId::L2_1,
        LemmaId::L2_2,
        LemmaId::L2_3,
        LemmaId::L2_4,
        LemmaId::L2_5,
        LemmaId::L2_6,
        LemmaId::L2_7,
        LemmaId::L2_8,
        LemmaId::L2_9,
        LemmaId::L2_10,
        LemmaId::L2_11,
        LemmaId::L2_12,
        LemmaId::L2_13,
        LemmaId::L2_14,
        LemmaId::L2_15,
        LemmaId::L2_16,
        LemmaId::L3_1,
        LemmaId::MainTheorem,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::SolvabilityCriterion => "solvability-criterion",
            LemmaId::L2_1 => "2.1",
            LemmaId::L2_2 => "2.2",
            LemmaId::L2_3 => "2.3",
            LemmaId::L2_4 => "2.4",
            LemmaId::L2_5 => "2.5",
            LemmaId::L2_6 => "2.6",
            LemmaId::L2_7 => "2.7",
            LemmaId::L2_8 => "2.8",
            LemmaId::L2_9 => "2.9",
            LemmaId::L2_10 => "2.10",
            LemmaId::L2_11 => "2.11",
            LemmaId::L2_12 => "2.12",
            LemmaId::L2_13 => "2.13",
            LemmaId::L2_14 => "2.14",
            LemmaId::L2_15 => "2.15",
            LemmaId::L2_16 => "2.16",
            LemmaId::L3_1 => "3.1",
            LemmaId::MainTheorem => "main-theorem",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    /// Accepts `2.1`, `L2_1`, `l2.1`, `main-theorem`/`main`, `solvability`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', ".");
        let key = key.strip_prefix('l').unwrap_or(&key);
        match key {
            "main-theorem" | "main" | "maintheorem" => return Ok(LemmaId::MainTheorem),
            "solvability-criterion" | "solvability" => return Ok(LemmaId::SolvabilityCriterion),
            _ => {}
        }
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == key)
            .ok_or_else(|| format!("unknown lemma id `{s}`"))
    }
}

/// Outcome of one checker on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub group: String,
    pub instance: String,
    pub hypothesis_met: bool,
    pub conclusion_holds: bool,
    /// What was computed, e.g. `13 ≤ 27`.
    pub detail: String,
    /// Set only on a violation.
    pub witness: Option<String>,
}

impl LemmaReport {
    pub fn vacuous(
        lemma: LemmaId,
        group: &str,
        instance: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            lemma,
            group: group.to_string(),
            instance: instance.into(),
            hypothesis_met: false,
            conclusion_holds: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn evaluated(
        lemma: LemmaId,
        group: &str,
        instance: impl Into<String>,
        holds: bool,
        detail: impl Into<String>,
    ) -> Self {
        let detail = detail.into();
        Self {
            lemma,
            group: group.to_string(),
            instance: instance.into(),
            hypothesis_met: true,
            conclusion_holds: holds,
            witness: (!holds).then(|| detail.clone()),
            detail,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.conclusion_holds
    }

    pub fn status(&self) -> &'static str {
        match (self.hypothesis_met, self.conclusion_holds) {
            (false, _) => "vacuous",
            (true, true) => "holds",
            (true, false) => "VIOLATION",
        }
    }
}

/// Whether a group is `A₅ × C_m` with `gcd(30, m) = 1`, decided from its
/// center and derived subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub matches: bool,
    pub m: Option<u64>,
    pub center_order: u64,
    pub derived_order: u64,
}
