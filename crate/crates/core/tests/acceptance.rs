//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use sumorders::catalog::{build, default_manifest};
use sumorders::criteria::{
    check_sylow_count_constraints, recognize_a5_times_cm, run_suite, LemmaId, SuiteTarget,
};
use sumorders::exactnum::{check_cyclic_bound, factorize, is_prime, psi_cyclic, CyclicBound};
use sumorders::permgrp::FiniteGroup;
use sumorders::psi::{herzog_ratio, psi_of_group, psi_via_cyclic_subgroups, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(id: &str) -> Result<FiniteGroup, String> {
    build(id).map_err(|e| format!("{id}: {e}"))
}

/// `ψ(G)` by raising every element until it returns to the identity,
/// without the cached orders or cycle structure.
fn psi_by_powering(g: &FiniteGroup) -> BigUint {
    g.elements()
        .map(|x| {
            let mut y = x.clone();
            let mut k = 1u64;
            while !y.is_identity() {
                y = y.then(x);
                k += 1;
            }
            BigUint::from(k)
        })
        .sum()
}

fn additive_order_sum(n: u64) -> u64 {
    (0..n).map(|k| n / k.gcd(&n)).sum()
}

fn anchors() -> Outcome {
    let expect = |id: &str, want: u32| -> Result<(), String> {
        let g = group(id)?;
        let got = psi_by_powering(&g);
        ensure(got == BigUint::from(want) && psi_of_group(&g).psi == got, || {
            format!("ψ({id}) = {got}, expected {want}")
        })
    };
    expect("A5", 211)?;
    expect("C60", 1617)?;
    expect("SL2(5)", 663)?;
    expect("A5xC3", 1237)?;
    expect("PSL2(7)", 715)?;
    let r = herzog_ratio(&group("A5")?);
    ensure(r.verdict == Verdict::Equal && r.group_side == r.cyclic_side, || {
        format!("ψ(A5)·1617 = {} ≠ 211·ψ(C60) = {}", r.group_side, r.cyclic_side)
    })?;
    let scaled = BigRational::new(211.into(), 1617.into())
        * BigRational::from_integer(psi_cyclic(120).map_err(|e| e.to_string())?.into());
    ensure(scaled == BigRational::new(9073.into(), 11.into()), || {
        format!("(211/1617)·ψ(C120) = {scaled}")
    })?;
    ensure(scaled > BigRational::from_integer(824.into()), || {
        format!("{scaled} ≤ 824")
    })?;
    Ok("211, 1617, 663, 1237, 715 exact; (211/1617)·ψ(C120) = 9073/11 > 824".into())
}

fn equality_family() -> Outcome {
    let a5 = psi_of_group(&group("A5")?).psi;
    for m in [1u64, 7, 11, 13, 49, 77, 91, 121] {
        let id = format!("A5xC{m}");
        let g = group(&id)?;
        let brute = psi_by_powering(&g);
        let law = &a5 * psi_cyclic(m).map_err(|e| e.to_string())?;
        ensure(brute == law, || format!("{id}: brute {brute} ≠ ψ(A5)ψ(C{m}) = {law}"))?;
        let v = herzog_ratio(&g).verdict;
        ensure(v == Verdict::Equal, || format!("{id}: verdict {v}"))?;
    }
    Ok("A5xC_m Equal for m in {1,7,11,13,49,77,91,121}, brute force = multiplicativity".into())
}

fn strict_family() -> Outcome {
    for id in ["S5", "A5xC2", "A5xC3", "SL2(5)", "A6", "PSL2(7)"] {
        let v = herzog_ratio(&group(id)?).verdict;
        ensure(v == Verdict::Below, || format!("{id}: verdict {v}"))?;
    }
    for (id, want) in [("S5", 471u32), ("A5xC2", 603)] {
        let g = group(id)?;
        let brute = psi_by_powering(&g);
        ensure(brute == BigUint::from(want) && psi_of_group(&g).psi == brute, || {
            format!("ψ({id}) = {brute}, expected {want}")
        })?;
    }
    Ok("S5, A5xC2, A5xC3, SL2(5), A6, PSL2(7) Below; ψ(S5) = 471, ψ(A5xC2) = 603".into())
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for entry in default_manifest() {
        if entry.expected.order.is_some_and(|o| o > 10_000) {
            continue;
        }
        let g = group(&entry.id)?;
        if g.order() > 10_000 {
            continue;
        }
        let a = psi_of_group(&g).psi;
        let b = psi_via_cyclic_subgroups(&g);
        ensure(a == b, || format!("{}: histogram {a} ≠ cyclic subgroups {b}", entry.id))?;
        let mismatches = entry.check_expectations(&g);
        ensure(mismatches.is_empty(), || mismatches.join("; "))?;
        checked += 1;
    }
    Ok(format!("{checked} manifest entries agree"))
}

fn cyclic_formula() -> Outcome {
    let err = |e: sumorders::exactnum::NumberError| e.to_string();
    for n in 1..=5000u64 {
        let formula = psi_cyclic(n).map_err(err)?;
        let brute = additive_order_sum(n);
        ensure(formula == BigUint::from(brute), || {
            format!("ψ(C{n}) = {formula}, brute force {brute}")
        })?;
    }
    let mut counts = [0usize; 5];
    for n in 2..=5000u64 {
        let f = factorize(n).map_err(err)?;
        ensure(check_cyclic_bound(CyclicBound::General { n }).map_err(err)?, || {
            format!("general bound fails at n = {n}")
        })?;
        counts[0] += 1;
        if f.largest_prime().is_some_and(|p| p >= 13) {
            ensure(check_cyclic_bound(CyclicBound::P13 { n }).map_err(err)?, || {
                format!("p ≥ 13 bound fails at n = {n}")
            })?;
            counts[1] += 1;
        }
        if f.primes_within(&[2, 3, 5]) {
            ensure(check_cyclic_bound(CyclicBound::SmallPiSquare { m: n }).map_err(err)?, || {
                format!("{{2,3,5}} bound fails at m = {n}")
            })?;
            counts[3] += 1;
        }
    }
    for p in [2u64, 3, 5] {
        for a in 1..=5 {
            ensure(
                check_cyclic_bound(CyclicBound::SmallPrimeSquare { p, a }).map_err(err)?,
                || format!("prime-square bound fails at {p}^{a}"),
            )?;
            counts[2] += 1;
        }
    }
    for p in (2..=50u64).filter(|&p| is_prime(p)) {
        for a in 1..=5 {
            for b in 1..=5 {
                ensure(
                    check_cyclic_bound(CyclicBound::Superadditive { p, a, b }).map_err(err)?,
                    || format!("super-multiplicativity fails at p = {p}, a = {a}, b = {b}"),
                )?;
                counts[4] += 1;
            }
        }
    }
    Ok(format!(
        "ψ(C_n) = Σ additive orders for n ≤ 5000; bounds hold on {} / {} / {} / {} / {} instances",
        counts[0], counts[1], counts[2], counts[3], counts[4]
    ))
}

fn lemma_suite() -> Outcome {
    let start = Instant::now();
    let reports = run_suite(&SuiteTarget::manifest(), &[]).map_err(|e| e.to_string())?;
    if let Some(v) = reports.iter().find(|r| r.is_violation()) {
        return Err(format!(
            "{} {} {}: {}",
            v.group, v.lemma, v.instance, v.detail
        ));
    }
    let find = |group: &str, lemma: LemmaId, instance: &str| {
        reports
            .iter()
            .find(|r| r.group == group && r.lemma == lemma && r.instance == instance)
            .ok_or_else(|| format!("no report for {group} {lemma} {instance}"))
    };
    let c6 = find("C6", LemmaId::L2_1, "p=3")?;
    ensure(
        c6.hypothesis_met && c6.detail.starts_with("ψ(G) = 21 = ") && c6.detail.ends_with("central = true"),
        || format!("C6 equality instance: {}", c6.detail),
    )?;
    let s3 = find("S3", LemmaId::L2_1, "p=3")?;
    ensure(
        s3.hypothesis_met && s3.detail.contains(" < ") && s3.detail.ends_with("central = false"),
        || format!("S3 strict instance: {}", s3.detail),
    )?;
    let transfer = find("A5xC7", LemmaId::L3_1, "p=7")?;
    ensure(transfer.hypothesis_met && transfer.conclusion_holds, || {
        format!("A5xC7 complement transfer: {}", transfer.detail)
    })?;
    let lemmas: BTreeSet<LemmaId> = reports
        .iter()
        .filter(|r| r.hypothesis_met)
        .map(|r| r.lemma)
        .collect();
    let unexercised: Vec<&str> = LemmaId::ALL
        .iter()
        .filter(|l| !lemmas.contains(l))
        .map(LemmaId::as_str)
        .collect();
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 300, || format!("suite took {elapsed:?}"))?;
    Ok(format!(
        "{} reports, 0 violations, {:.1}s; lemmas never triggered on the manifest: [{}]",
        reports.len(),
        elapsed.as_secs_f64(),
        unexercised.join(", ")
    ))
}

/// `m` for ids `A5` and `A5xC<m>` with `gcd(30, m) = 1`.
fn expected_m(id: &str) -> Option<u64> {
    if id == "A5" {
        return Some(1);
    }
    let m: u64 = id.strip_prefix("A5xC")?.parse().ok()?;
    (m.gcd(&30) == 1).then_some(m)
}

fn recognition() -> Outcome {
    let mut matched = Vec::new();
    for entry in default_manifest() {
        let g = group(&entry.id)?;
        let rec = recognize_a5_times_cm(&g);
        let want = expected_m(&entry.id);
        ensure(rec.m == want && rec.matches == want.is_some(), || {
            format!("{}: recognized {:?}, expected {want:?}", entry.id, rec.m)
        })?;
        if rec.matches {
            matched.push(entry.id);
        }
    }
    Ok(format!("matches exactly {}", matched.join(", ")))
}

/// `n_p` as the number of distinct conjugates of one Sylow subgroup.
fn sylow_conjugates(g: &FiniteGroup, p: u64) -> Result<u64, String> {
    let sylow = g.sylow_subgroup(p).map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    for x in g.ids() {
        let mut members = sylow.conjugate(x).members().to_vec();
        members.sort_unstable();
        seen.insert(members);
    }
    Ok(seen.len() as u64)
}

fn sylow_catalog_and_limitation() -> Outcome {
    let mut instances = 0;
    for entry in default_manifest() {
        let g = group(&entry.id)?;
        if g.order() <= 2000 {
            for p in g.prime_divisors() {
                let by_index = g.sylow_count(p).map_err(|e| e.to_string())?;
                let by_conjugates = sylow_conjugates(&g, p)?;
                ensure(by_index == by_conjugates, || {
                    format!("{}: n_{p} = {by_index} by index, {by_conjugates} by conjugates", entry.id)
                })?;
            }
        }
        for r in check_sylow_count_constraints(&g).map_err(|e| e.to_string())? {
            ensure(!r.is_violation(), || format!("{} {}: {}", r.group, r.lemma, r.detail))?;
            instances += 1;
        }
    }
    let readme_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md");
    let readme = std::fs::read_to_string(readme_path).map_err(|e| format!("README: {e}"))?;
    ensure(readme.contains("## Limitations") && readme.contains("all finite groups"), || {
        "README does not state the classification limitation".into()
    })?;
    Ok(format!(
        "{instances} Sylow-count reports consistent; full classification limitation documented"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exact anchors", anchors),
        ("equality family", equality_family),
        ("strict-inequality family", strict_family),
        ("oracle equivalence", oracle_equivalence),
        ("cyclic formula and bounds", cyclic_formula),
        ("lemma suite", lemma_suite),
        ("recognition on the catalog", recognition),
        ("Sylow-count consistency and scope", sylow_catalog_and_limitation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
