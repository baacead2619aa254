use std::collections::BTreeSet;
use std::path::PathBuf;

use rayon::prelude::*;

use super::checks::*;
use super::{CheckError, LemmaId, LemmaReport};
use crate::catalog::{self, manifest_entry, CatalogEntry, CatalogError};
use crate::permgrp::{ElemId, FiniteGroup, Subgroup, DEFAULT_MAX_ORDER};

/// Ratios `r/s` tried for the cyclic-index lemma.
const INDEX_RATIOS: [(u64, u64); 4] = [(211, 1617), (211, 1618), (1, 2), (1, 12)];

/// Groups with at most this many elements also test `H = 1` as a normal
/// subgroup.
const TRIVIAL_QUOTIENT_LIMIT: usize = 2000;

/// Beyond this many classes only prime-order representatives seed normal
/// closures.
const CLASS_CLOSURE_LIMIT: usize = 100;

/// A group to run the suite on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteTarget {
    /// A catalog id such as `A5xC7`.
    Catalog(String),
    /// A group description file.
    File(PathBuf),
}

impl SuiteTarget {
    /// `catalog:<id>` or a bare catalog id, else a file path.
    pub fn parse(s: &str) -> Self {
        if let Some(id) = s.strip_prefix("catalog:") {
            SuiteTarget::Catalog(id.to_string())
        } else if std::path::Path::new(s).exists() {
            SuiteTarget::File(PathBuf::from(s))
        } else {
            SuiteTarget::Catalog(s.to_string())
        }
    }

    /// Every entry of the default manifest.
    pub fn manifest() -> Vec<Self> {
        catalog::default_manifest()
            .into_iter()
            .map(|e| SuiteTarget::Catalog(e.id))
            .collect()
    }
}

/// Runs `lemmas` (all of them when empty) on every target.
pub fn run_suite(
    targets: &[SuiteTarget],
    lemmas: &[LemmaId],
) -> Result<Vec<LemmaReport>, CheckError> {
    run_suite_with(targets, lemmas, DEFAULT_MAX_ORDER)
}

pub fn run_suite_with(
    targets: &[SuiteTarget],
    lemmas: &[LemmaId],
    max_order: usize,
) -> Result<Vec<LemmaReport>, CheckError> {
    let unknown: Vec<String> = targets
        .iter()
        .filter_map(|t| match t {
            SuiteTarget::Catalog(id) => match catalog::build_with(id, 1) {
                Err(CatalogError::UnknownId(_)) => Some(id.clone()),
                _ => None,
            },
            SuiteTarget::File(_) => None,
        })
        .collect();
    if !unknown.is_empty() {
        return Err(CheckError::UnknownTargets(unknown));
    }

    let lemmas: BTreeSet<LemmaId> = if lemmas.is_empty() {
        LemmaId::ALL.into_iter().collect()
    } else {
        lemmas.iter().copied().collect()
    };

    let groups = targets
        .iter()
        .map(|t| load(t, max_order))
        .collect::<Result<Vec<_>, _>>()?;

    let per_group = groups
        .par_iter()
        .map(|(g, entry)| checks_for_group(g, entry.as_ref(), &lemmas, max_order))
        .collect::<Result<Vec<_>, _>>()?;

    let mut reports: Vec<LemmaReport> = per_group.into_iter().flatten().collect();
    reports.sort_by(|a, b| {
        (&a.group, a.lemma, &a.instance).cmp(&(&b.group, b.lemma, &b.instance))
    });
    Ok(reports)
}

fn load(
    target: &SuiteTarget,
    max_order: usize,
) -> Result<(FiniteGroup, Option<CatalogEntry>), CheckError> {
    match target {
        SuiteTarget::Catalog(id) => Ok((catalog::build_with(id, max_order)?, manifest_entry(id))),
        SuiteTarget::File(path) => Ok((catalog::load_group_spec(path, max_order)?, None)),
    }
}

/// Every report the suite produces for one group.
pub fn checks_for_group(
    g: &FiniteGroup,
    entry: Option<&CatalogEntry>,
    lemmas: &BTreeSet<LemmaId>,
    max_order: usize,
) -> Result<Vec<LemmaReport>, CheckError> {
    let want = |l: LemmaId| lemmas.contains(&l);
    let mut out = Vec::new();
    let primes = g.prime_divisors();

    if want(LemmaId::SolvabilityCriterion) {
        out.push(check_solvability_criterion(g));
    }
    if want(LemmaId::MainTheorem) {
        out.push(check_main_theorem(g));
    }
    for &p in &primes {
        if want(LemmaId::L2_1) {
            out.push(check_sylow_normal_bound(g, p)?);
        }
        if want(LemmaId::L2_9) {
            out.push(check_normal_p_complement(g, p)?);
        }
        if want(LemmaId::L3_1) {
            out.push(check_complement_transfer(g, p)?);
        }
    }
    if want(LemmaId::L2_2) {
        for h in normal_subgroups(g, entry)? {
            out.push(check_quotient_bound(g, &h)?);
        }
    }
    if want(LemmaId::L2_3) {
        if let Some((left, right)) = g.name().rsplit_once('x') {
            if let (Ok(l), Ok(r)) = (
                catalog::build_with(left, max_order),
                catalog::build_with(right, max_order),
            ) {
                out.push(check_direct_product(&l, &r, g)?);
            }
        }
    }
    if want(LemmaId::L2_4) {
        for &d in g.order_histogram().keys() {
            out.push(check_lemma_2p(g, d)?);
        }
    }
    if [LemmaId::L2_5, LemmaId::L2_14, LemmaId::L2_15, LemmaId::L2_16]
        .into_iter()
        .any(want)
    {
        out.extend(
            check_order_bounds(g.name(), g.order() as u64)?
                .into_iter()
                .filter(|r| want(r.lemma)),
        );
    }
    let reps = cyclic_class_subgroups(g);
    if want(LemmaId::L2_6) {
        for x in &reps {
            let order = g.element_order(x.generators().first().copied().unwrap_or(0));
            let odd = order >> order.trailing_zeros();
            let gen = x.generators().first().copied().unwrap_or(0);
            let b = g.subgroup_closure(&[power(g, gen, odd)]);
            let b = if odd == order { x.clone() } else { b };
            out.push(check_prime_power_index_solvable(x, &b)?);
            out.push(check_prime_power_index_solvable(&g.normalizer(x), x)?);
        }
    }
    if want(LemmaId::L2_7) {
        out.push(check_abelian_maximal(g)?);
    }
    if want(LemmaId::L2_8) {
        out.push(check_perfect_derived(g)?);
    }
    if want(LemmaId::L2_10) {
        for x in &reps {
            if !x.is_whole() {
                out.push(check_core_bound(x));
            }
        }
    }
    if want(LemmaId::L2_11) || want(LemmaId::L2_12) {
        out.extend(
            check_sylow_count_constraints(g)?
                .into_iter()
                .filter(|r| want(r.lemma)),
        );
    }
    if want(LemmaId::L2_13) {
        for (r, s) in INDEX_RATIOS {
            out.push(check_cyclic_index_existence(g, r, s)?);
        }
    }
    Ok(out)
}

fn power(g: &FiniteGroup, x: ElemId, k: u64) -> ElemId {
    (0..k).fold(g.identity(), |acc, _| g.mul(acc, x))
}

/// `⟨x⟩` for one representative per conjugacy class, one per subgroup.
fn cyclic_class_subgroups(g: &FiniteGroup) -> Vec<Subgroup<'_>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.conjugacy_classes().representatives {
        let h = g.subgroup_closure(&[x]);
        let mut key = h.members().to_vec();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(h);
        }
    }
    out
}

/// Normal subgroups tried for the quotient bound: derived series, center,
/// normal closures of class representatives, normal Sylow subgroups, the
/// catalog's marked subgroups and, for small groups, `1`.
fn normal_subgroups<'g>(
    g: &'g FiniteGroup,
    entry: Option<&CatalogEntry>,
) -> Result<Vec<Subgroup<'g>>, CheckError> {
    let mut candidates = g.derived_series();
    candidates.push(g.center());
    let classes = g.conjugacy_classes();
    let few = classes.len() <= CLASS_CLOSURE_LIMIT;
    for &x in classes.representatives.iter().skip(1) {
        if few || crate::exactnum::is_prime(g.element_order(x)) {
            candidates.push(g.normal_closure(&[x]));
        }
    }
    for p in g.prime_divisors() {
        let s = g.sylow_subgroup(p)?;
        if s.is_normal() {
            candidates.push(s);
        }
    }
    if let Some(entry) = entry {
        candidates.extend(entry.marked_normal_subgroups(g)?);
    }
    if g.order() <= TRIVIAL_QUOTIENT_LIMIT {
        candidates.push(g.trivial_subgroup());
    }

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in candidates {
        let mut key = h.members().to_vec();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(h);
        }
    }
    out.sort_by_key(Subgroup::order);
    Ok(out)
}
