use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;

use super::{CheckError, LemmaId, LemmaReport, RecognitionResult};
use crate::exactnum::{
    check_cyclic_bound, cyclic_index_bound, factorize, is_fermat_prime, is_prime_power,
    psi_cyclic, psi_cyclic_prime_power, CyclicBound,
};
use crate::permgrp::{ElemId, FiniteGroup, Subgroup};
use crate::psi::{herzog_ratio, psi_of_group, Verdict};

fn psi(g: &FiniteGroup) -> BigUint {
    psi_of_group(g).psi
}

/// `ψ(H)` summed over the members of a subgroup.
pub fn psi_of_subgroup(h: &Subgroup<'_>) -> BigUint {
    let g = h.parent();
    h.members().iter().map(|&x| BigUint::from(g.element_order(x))).sum()
}

fn require_divisor(g: &FiniteGroup, p: u64) -> Result<(), CheckError> {
    if !crate::exactnum::is_prime(p) || !(g.order() as u64).is_multiple_of(p) {
        return Err(CheckError::Domain(format!(
            "{p} is not a prime divisor of |{}| = {}",
            g.name(),
            g.order()
        )));
    }
    Ok(())
}

/// Elements whose order is prime to `p`.
fn p_prime_elements(g: &FiniteGroup, p: u64) -> Vec<ElemId> {
    g.ids().filter(|&x| !g.element_order(x).is_multiple_of(p)).collect()
}

/// `B ⊴ A` for subgroups of a common parent.
fn is_normal_in(b: &Subgroup<'_>, a: &Subgroup<'_>) -> bool {
    let g = a.parent();
    a.generators()
        .iter()
        .all(|&y| b.generators().iter().all(|&x| b.contains(g.conj(x, y))))
}

/// Whether `A/B` is cyclic, for `B ⊴ A`.
fn quotient_is_cyclic(a: &Subgroup<'_>, b: &Subgroup<'_>) -> bool {
    let g = a.parent();
    let target = a.order() / b.order();
    a.members().iter().any(|&x| {
        let mut y = x;
        let mut k = 1;
        while !b.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k == target
    })
}

/// Conjugacy class representatives whose element order is `d`.
fn class_reps_of_order(g: &FiniteGroup, d: u64) -> Vec<ElemId> {
    g.conjugacy_classes()
        .representatives
        .into_iter()
        .filter(|&x| g.element_order(x) == d)
        .collect()
}

/// Hypothesis: `ψ(G) > (211/1617)ψ(C_n)`. Conclusion: `G` is solvable.
pub fn check_solvability_criterion(g: &FiniteGroup) -> LemmaReport {
    let ratio = herzog_ratio(g);
    let detail = format!(
        "ψ(G)·1617 = {} vs 211·ψ(C_n) = {}",
        ratio.group_side, ratio.cyclic_side
    );
    if ratio.verdict != Verdict::Above {
        return LemmaReport::vacuous(LemmaId::SolvabilityCriterion, g.name(), "", detail);
    }
    let solvable = g.is_solvable();
    LemmaReport::evaluated(
        LemmaId::SolvabilityCriterion,
        g.name(),
        "",
        solvable,
        format!("{detail}; solvable = {solvable}"),
    )
}

/// Recognizes `A₅ × C_m` with `gcd(30, m) = 1` up to isomorphism.
///
/// The center must be cyclic, the derived subgroup simple non-abelian of
/// order 60 (hence `A₅`, the only such group), the two must meet trivially
/// and their orders must multiply to `|G|`.
pub fn recognize_a5_times_cm(g: &FiniteGroup) -> RecognitionResult {
    let center = g.center();
    let derived = g.derived_subgroup();
    let center_order = center.order() as u64;
    let derived_order = derived.order() as u64;
    let mut result = RecognitionResult {
        matches: false,
        m: None,
        center_order,
        derived_order,
    };
    if derived_order != 60
        || !center.is_cyclic()
        || center_order * derived_order != g.order() as u64
        || center_order.gcd(&30) != 1
        || !derived.intersection(&center).is_trivial()
    {
        return result;
    }
    let d = derived.to_group();
    if d.is_abelian() || !d.is_simple().unwrap_or(false) {
        return result;
    }
    result.matches = true;
    result.m = Some(center_order);
    result
}

/// Hypothesis: `G` non-solvable with `ψ(G) = (211/1617)ψ(C_n)`.
/// Conclusion: `G ≅ A₅ × C_m`, `gcd(30, m) = 1` (order-level recognition).
pub fn check_main_theorem(g: &FiniteGroup) -> LemmaReport {
    let ratio = herzog_ratio(g);
    let solvable = g.is_solvable();
    if solvable || ratio.verdict != Verdict::Equal {
        return LemmaReport::vacuous(
            LemmaId::MainTheorem,
            g.name(),
            "",
            format!("solvable = {solvable}, verdict = {}", ratio.verdict),
        );
    }
    let rec = recognize_a5_times_cm(g);
    let detail = match rec.m {
        Some(m) => format!("order-level recognition: A5 x C{m}"),
        None => format!(
            "not recognized: |Z(G)| = {}, |G'| = {}",
            rec.center_order, rec.derived_order
        ),
    };
    LemmaReport::evaluated(LemmaId::MainTheorem, g.name(), "", rec.matches, detail)
}

/// Hypothesis: the Sylow `p`-subgroup `P` is normal and cyclic.
/// Conclusion: `ψ(G) ≤ ψ(P)ψ(G/P)`, with equality iff `P ≤ Z(G)`.
pub fn check_sylow_normal_bound(g: &FiniteGroup, p: u64) -> Result<LemmaReport, CheckError> {
    require_divisor(g, p)?;
    let sylow = g.sylow_subgroup(p)?;
    let instance = format!("p={p}");
    if !sylow.is_normal() || !sylow.is_cyclic() {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_1,
            g.name(),
            instance,
            format!(
                "Sylow {p}: normal = {}, cyclic = {}",
                sylow.is_normal(),
                sylow.is_cyclic()
            ),
        ));
    }
    let lhs = psi(g);
    let rhs = psi_of_subgroup(&sylow) * psi(&g.quotient_group(&sylow)?);
    let central = sylow.is_subgroup_of(&g.center());
    let holds = lhs <= rhs && ((lhs == rhs) == central);
    let relation = if lhs == rhs { "=" } else if lhs < rhs { "<" } else { ">" };
    Ok(LemmaReport::evaluated(
        LemmaId::L2_1,
        g.name(),
        instance,
        holds,
        format!("ψ(G) = {lhs} {relation} ψ(P)ψ(G/P) = {rhs}; P central = {central}"),
    ))
}

/// Conclusion: `ψ(G) ≤ ψ(G/H)·|H|²` for normal `H`.
pub fn check_quotient_bound(g: &FiniteGroup, h: &Subgroup<'_>) -> Result<LemmaReport, CheckError> {
    if !h.is_normal() {
        return Err(CheckError::Group(crate::permgrp::GroupError::NotNormal));
    }
    let lhs = psi(g);
    let quotient_psi = psi(&g.quotient_group(h)?);
    let rhs = &quotient_psi * BigUint::from(h.order() as u64).pow(2);
    Ok(LemmaReport::evaluated(
        LemmaId::L2_2,
        g.name(),
        format!("|H|={}", h.order()),
        lhs <= rhs,
        format!("ψ(G) = {lhs} ≤ ψ(G/H)·|H|² = {quotient_psi}·{}² = {rhs}", h.order()),
    ))
}

/// Conclusion: `ψ(G×H) ≤ ψ(G)ψ(H)`, with equality iff `gcd(|G|,|H|) = 1`.
pub fn check_direct_product(
    left: &FiniteGroup,
    right: &FiniteGroup,
    product: &FiniteGroup,
) -> Result<LemmaReport, CheckError> {
    if product.order() != left.order() * right.order() {
        return Err(CheckError::Domain(format!(
            "{} does not have order |{}|·|{}|",
            product.name(),
            left.name(),
            right.name()
        )));
    }
    let whole = psi(product);
    let split = psi(left) * psi(right);
    let coprime = (left.order() as u64).gcd(&(right.order() as u64)) == 1;
    let holds = whole <= split && ((whole == split) == coprime);
    Ok(LemmaReport::evaluated(
        LemmaId::L2_3,
        product.name(),
        format!("{} x {}", left.name(), right.name()),
        holds,
        format!("ψ(G×H) = {whole}, ψ(G)ψ(H) = {split}, coprime orders = {coprime}"),
    ))
}

/// Hypothesis: some `x` of order `x_order` has `|G:⟨x⟩| < 2p`, `p` the
/// largest prime of `|G|`. Conclusion: `G` has a normal cyclic Sylow
/// `p`-subgroup, or `G` is solvable and some such `⟨x⟩` is maximal of index
/// `p` or `p+1`.
pub fn check_lemma_2p(g: &FiniteGroup, x_order: u64) -> Result<LemmaReport, CheckError> {
    if !g.order_histogram().contains_key(&x_order) {
        return Err(CheckError::Domain(format!(
            "{} has no element of order {x_order}",
            g.name()
        )));
    }
    let instance = format!("o(x)={x_order}");
    let n = g.order() as u64;
    let index = n / x_order;
    let Some(p) = factorize(n)?.largest_prime() else {
        return Ok(LemmaReport::vacuous(LemmaId::L2_4, g.name(), instance, "trivial group"));
    };
    if index >= 2 * p {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_4,
            g.name(),
            instance,
            format!("index {index} ≥ 2p = {}", 2 * p),
        ));
    }
    let sylow = g.sylow_subgroup(p)?;
    if sylow.is_normal() && sylow.is_cyclic() {
        return Ok(LemmaReport::evaluated(
            LemmaId::L2_4,
            g.name(),
            instance,
            true,
            format!("index {index} < {}; Sylow {p} normal cyclic", 2 * p),
        ));
    }
    let solvable = g.is_solvable();
    let mut maximal = false;
    if solvable && (index == p || index == p + 1) {
        for x in class_reps_of_order(g, x_order) {
            let cyclic = g.subgroup_closure(&[x]);
            if g.is_maximal(&cyclic)? {
                maximal = true;
                break;
            }
        }
    }
    Ok(LemmaReport::evaluated(
        LemmaId::L2_4,
        g.name(),
        instance,
        solvable && maximal,
        format!(
            "index {index} < {}; Sylow {p} not normal cyclic; solvable = {solvable}, ⟨x⟩ maximal of index p or p+1 = {maximal}",
            2 * p
        ),
    ))
}

/// Number-theoretic bounds on `ψ(C_n)` for `n = |G|`: the prime-power and
/// product formulas with the general lower bound, the `{2,3,5}` upper
/// bounds, the `p ≥ 13` lower bound and strict super-multiplicativity.
pub fn check_order_bounds(group: &str, n: u64) -> Result<Vec<LemmaReport>, CheckError> {
    let mut out = Vec::new();
    let f = factorize(n)?;
    let inst = format!("n={n}");

    // product formula, both prime-power forms, and the general bound
    if n < 2 {
        out.push(LemmaReport::vacuous(LemmaId::L2_5, group, inst.clone(), "n < 2"));
    } else {
        let mut forms_agree = true;
        let mut product = BigUint::from(1u32);
        for &(p, a) in f.pairs() {
            let value = psi_cyclic_prime_power(p, a)?;
            let size = BigUint::from(p).pow(a);
            let alt = (BigUint::from(p) * &size * &size + 1u32) / BigUint::from(p + 1);
            forms_agree &= value == alt;
            product *= value;
        }
        let direct = additive_order_sum(n);
        let general = check_cyclic_bound(CyclicBound::General { n })?;
        let holds = forms_agree && product == direct && general;
        out.push(LemmaReport::evaluated(
            LemmaId::L2_5,
            group,
            inst.clone(),
            holds,
            format!(
                "∏ψ(P_i) = {product}, Σ additive orders = {direct}, ≥ 2n²/(p+1): {general}"
            ),
        ));
    }

    for p in [2u64, 3, 5] {
        let a = f.exponent_of(p);
        let inst = format!("p={p},a={a}");
        if a == 0 {
            continue;
        }
        let holds = check_cyclic_bound(CyclicBound::SmallPrimeSquare { p, a })?;
        out.push(LemmaReport::evaluated(
            LemmaId::L2_14,
            group,
            inst,
            holds,
            format!("{p}^{} > (13/12)ψ(C_{p}^{a}): {holds}", 2 * a),
        ));
    }
    let smooth_part: u64 = [2u64, 3, 5].iter().map(|&p| p.pow(f.exponent_of(p))).product();
    if smooth_part >= 2 {
        let holds = check_cyclic_bound(CyclicBound::SmallPiSquare { m: smooth_part })?;
        out.push(LemmaReport::evaluated(
            LemmaId::L2_14,
            group,
            format!("m={smooth_part}"),
            holds,
            format!("m² > (13/12)ψ(C_m): {holds}"),
        ));
    }

    match f.largest_prime() {
        Some(p) if p >= 13 => {
            let holds = check_cyclic_bound(CyclicBound::P13 { n })?;
            out.push(LemmaReport::evaluated(
                LemmaId::L2_15,
                group,
                inst.clone(),
                holds,
                format!("ψ(C_n) ≥ (5005/1152)n²/(p+1) with p = {p}: {holds}"),
            ));
        }
        largest => out.push(LemmaReport::vacuous(
            LemmaId::L2_15,
            group,
            inst.clone(),
            format!("largest prime {largest:?} < 13"),
        )),
    }

    for &(p, alpha) in f.pairs() {
        for a in 1..=alpha / 2 {
            let b = alpha - a;
            let holds = check_cyclic_bound(CyclicBound::Superadditive { p, a, b })?;
            out.push(LemmaReport::evaluated(
                LemmaId::L2_16,
                group,
                format!("p={p},a={a},b={b}"),
                holds,
                format!("ψ(C_{p}^{alpha}) > ψ(C_{p}^{a})ψ(C_{p}^{b}): {holds}"),
            ));
        }
    }
    Ok(out)
}

fn additive_order_sum(n: u64) -> BigUint {
    (0..n).map(|k| BigUint::from(n / k.gcd(&n))).sum()
}

/// Hypothesis: `[G:A]` is a prime power, `B ⊴ A` is cyclic and `A/B` is
/// cyclic of 2-power order. Conclusion: `G` is solvable.
///
/// Index 1 counts as the prime power `p⁰`.
pub fn check_prime_power_index_solvable(
    a: &Subgroup<'_>,
    b: &Subgroup<'_>,
) -> Result<LemmaReport, CheckError> {
    let g = a.parent();
    if !b.is_subgroup_of(a) {
        return Err(CheckError::Domain("B is not contained in A".into()));
    }
    let instance = format!("|A|={},|B|={}", a.order(), b.order());
    let index = a.index() as u64;
    let quotient = (a.order() / b.order()) as u64;
    let prime_power_index = index == 1 || is_prime_power(index);
    let hypothesis = prime_power_index
        && quotient.is_power_of_two()
        && b.is_cyclic()
        && is_normal_in(b, a)
        && quotient_is_cyclic(a, b);
    if !hypothesis {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_6,
            g.name(),
            instance,
            format!("[G:A] = {index}, |A/B| = {quotient}"),
        ));
    }
    let solvable = g.is_solvable();
    Ok(LemmaReport::evaluated(
        LemmaId::L2_6,
        g.name(),
        instance,
        solvable,
        format!("[G:A] = {index}, A/B cyclic of order {quotient}; solvable = {solvable}"),
    ))
}

/// Hypothesis: `G` has an abelian maximal subgroup. Conclusion: `G` is
/// solvable.
///
/// For non-abelian `G` an abelian maximal subgroup containing a non-central
/// `x` must equal `C_G(x)`, so the centralizers of class representatives are
/// the complete candidate list. For abelian `G` the search covers `⟨x⟩` and
/// `⟨x, z⟩`; a miss there is reported as vacuous, never as a violation.
pub fn check_abelian_maximal(g: &FiniteGroup) -> Result<LemmaReport, CheckError> {
    let witness = find_abelian_maximal(g)?;
    match witness {
        None => Ok(LemmaReport::vacuous(
            LemmaId::L2_7,
            g.name(),
            "",
            "no abelian maximal subgroup found",
        )),
        Some(order) => {
            let solvable = g.is_solvable();
            Ok(LemmaReport::evaluated(
                LemmaId::L2_7,
                g.name(),
                "",
                solvable,
                format!("abelian maximal subgroup of order {order}; solvable = {solvable}"),
            ))
        }
    }
}

fn find_abelian_maximal(g: &FiniteGroup) -> Result<Option<usize>, CheckError> {
    if g.order() == 1 {
        return Ok(None);
    }
    if !g.is_abelian() {
        let center = g.center();
        let mut seen = std::collections::BTreeSet::new();
        for x in g.conjugacy_classes().representatives {
            if center.contains(x) {
                continue;
            }
            let c = g.centralizer(&g.subgroup_closure(&[x]));
            let mut key = c.members().to_vec();
            key.sort_unstable();
            if !seen.insert(key) {
                continue;
            }
            if c.is_abelian() && g.is_maximal(&c)? {
                return Ok(Some(c.order()));
            }
        }
        return Ok(None);
    }
    for x in g.ids() {
        let h = g.subgroup_closure(&[x]);
        if !h.is_whole() && g.is_maximal(&h)? {
            return Ok(Some(h.order()));
        }
    }
    for x in g.ids().skip(1) {
        for z in g.ids().skip(x + 1) {
            let h = g.subgroup_closure(&[x, z]);
            if !h.is_whole() && g.is_maximal(&h)? {
                return Ok(Some(h.order()));
            }
        }
    }
    Ok(None)
}

/// Hypothesis: `G/Z(G)` is simple. Conclusion: `G/Z(G)` is non-abelian,
/// `G′` is perfect, and `G′/Z(G′)` is simple of the same order as
/// `G/Z(G)` (the order-level stand-in for isomorphism).
pub fn check_perfect_derived(g: &FiniteGroup) -> Result<LemmaReport, CheckError> {
    let center = g.center();
    let central_quotient = g.quotient_group(&center)?;
    if central_quotient.order() == 1 || !central_quotient.is_simple()? {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_8,
            g.name(),
            "",
            format!("|G/Z(G)| = {}, not simple", central_quotient.order()),
        ));
    }
    let derived = g.derived_subgroup();
    let perfect = derived.derived().order() == derived.order();
    let d = derived.to_group();
    let dz = d.center();
    let dq = d.quotient_group(&dz)?;
    let same_order = dq.order() == central_quotient.order();
    let dq_simple = dq.order() > 1 && dq.is_simple()?;
    let nonabelian = !central_quotient.is_abelian();
    let holds = nonabelian && perfect && same_order && dq_simple;
    Ok(LemmaReport::evaluated(
        LemmaId::L2_8,
        g.name(),
        "",
        holds,
        format!(
            "|G/Z(G)| = {}, non-abelian = {nonabelian}; |G'| = {}, perfect = {perfect}; |G'/Z(G')| = {}, simple = {dq_simple}",
            central_quotient.order(),
            derived.order(),
            dq.order()
        ),
    ))
}

/// Hypothesis: `p` is the smallest prime of `|G|` and the Sylow
/// `p`-subgroup is cyclic. Conclusion: the elements of order prime to `p`
/// form a normal subgroup of order `|G|/p^a`.
pub fn check_normal_p_complement(g: &FiniteGroup, p: u64) -> Result<LemmaReport, CheckError> {
    require_divisor(g, p)?;
    let instance = format!("p={p}");
    let smallest = factorize(g.order() as u64)?.smallest_prime();
    let sylow = g.sylow_subgroup(p)?;
    if smallest != Some(p) || !sylow.is_cyclic() {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_9,
            g.name(),
            instance,
            format!(
                "smallest prime {smallest:?}, Sylow {p} cyclic = {}",
                sylow.is_cyclic()
            ),
        ));
    }
    let (holds, detail) = describe_complement(g, p);
    Ok(LemmaReport::evaluated(LemmaId::L2_9, g.name(), instance, holds, detail))
}

fn p_complement(g: &FiniteGroup, p: u64) -> Option<Subgroup<'_>> {
    let elements = p_prime_elements(g, p);
    if elements.len() as u64 != g.order() as u64 / g.p_part(p) {
        return None;
    }
    Subgroup::from_member_set(g, &elements).filter(Subgroup::is_normal)
}

fn describe_complement(g: &FiniteGroup, p: u64) -> (bool, String) {
    let count = p_prime_elements(g, p).len();
    let expected = g.order() as u64 / g.p_part(p);
    match p_complement(g, p) {
        Some(k) => (true, format!("{p}'-elements form a normal subgroup of order {}", k.order())),
        None => (
            false,
            format!("{count} {p}'-elements (expected {expected}) do not form a normal subgroup"),
        ),
    }
}

/// Hypothesis: `G` non-solvable, `ψ(G) = (211/1617)ψ(C_n)`, and the Sylow
/// `p`-subgroup `P` is normal and cyclic. Conclusion: `G = P × K` with `K`
/// the normal `p`-complement and `ψ(K) = (211/1617)ψ(C_{|K|})`.
pub fn check_complement_transfer(g: &FiniteGroup, p: u64) -> Result<LemmaReport, CheckError> {
    require_divisor(g, p)?;
    let instance = format!("p={p}");
    let verdict = herzog_ratio(g).verdict;
    let sylow = g.sylow_subgroup(p)?;
    let solvable = g.is_solvable();
    if verdict != Verdict::Equal || solvable || !sylow.is_normal() || !sylow.is_cyclic() {
        return Ok(LemmaReport::vacuous(
            LemmaId::L3_1,
            g.name(),
            instance,
            format!(
                "verdict = {verdict}, solvable = {solvable}, Sylow {p} normal = {}, cyclic = {}",
                sylow.is_normal(),
                sylow.is_cyclic()
            ),
        ));
    }
    let Some(k) = p_complement(g, p) else {
        return Ok(LemmaReport::evaluated(
            LemmaId::L3_1,
            g.name(),
            instance,
            false,
            format!("no normal {p}-complement"),
        ));
    };
    let central = sylow.is_subgroup_of(&g.center());
    let k_group = k.to_group().with_name(format!("K<{}>", g.name()));
    let k_ratio = herzog_ratio(&k_group);
    let holds = central && k_ratio.verdict == Verdict::Equal;
    Ok(LemmaReport::evaluated(
        LemmaId::L3_1,
        g.name(),
        instance,
        holds,
        format!(
            "G = P×K with |P| = {}, |K| = {}, P central = {central}; ψ(K) = {}, verdict(K) = {}",
            sylow.order(),
            k.order(),
            psi(&k_group),
            k_ratio.verdict
        ),
    ))
}

/// Hypothesis: `A` is a cyclic proper subgroup. Conclusion:
/// `|A : core_G(A)| < |G : A|`, and `core_G(A) > 1` whenever `|A| ≥ |G:A|`.
pub fn check_core_bound(a: &Subgroup<'_>) -> LemmaReport {
    let g = a.parent();
    let instance = format!("|A|={}", a.order());
    if a.is_whole() || !a.is_cyclic() {
        return LemmaReport::vacuous(LemmaId::L2_10, g.name(), instance, "A not cyclic proper");
    }
    let core = g.core_of(a);
    let a_over_core = a.order() / core.order();
    let index = a.index();
    let nontrivial_clause = a.order() < index || core.order() > 1;
    LemmaReport::evaluated(
        LemmaId::L2_10,
        g.name(),
        instance,
        a_over_core < index && nontrivial_clause,
        format!(
            "|A:K| = {a_over_core} vs |G:A| = {index}; |K| = {}",
            core.order()
        ),
    )
}

/// For each prime `p | n`: `n_p` is not 22 (`p = 3`), 21 (`p = 5`) or
/// `1+3p` (`p ≥ 7`); and if `n_p = 1+rp` with `1 < r < (p+3)/2`, then `n_p`
/// is a prime power or `r = (p−3)/2` with `p > 3` a Fermat prime.
pub fn check_sylow_count_constraints(g: &FiniteGroup) -> Result<Vec<LemmaReport>, CheckError> {
    let mut out = Vec::new();
    for p in g.prime_divisors() {
        let np = g.sylow_count(p)?;
        let r = (np - 1) / p;
        let instance = format!("p={p}");

        let in_range = 1 < r && 2 * r < p + 3;
        if in_range {
            let prime_power = is_prime_power(np);
            let fermat = 2 * r + 3 == p && p > 3 && is_fermat_prime(p);
            out.push(LemmaReport::evaluated(
                LemmaId::L2_11,
                g.name(),
                instance.clone(),
                prime_power || fermat,
                format!("n_{p} = {np} = 1+{r}·{p}; prime power = {prime_power}, Fermat exception = {fermat}"),
            ));
        } else {
            out.push(LemmaReport::vacuous(
                LemmaId::L2_11,
                g.name(),
                instance.clone(),
                format!("n_{p} = {np}, r = {r} outside (1, (p+3)/2)"),
            ));
        }

        let forbidden = (p == 3 && np == 22) || (p == 5 && np == 21) || (p >= 7 && np == 1 + 3 * p);
        out.push(LemmaReport::evaluated(
            LemmaId::L2_12,
            g.name(),
            instance,
            !forbidden,
            format!("n_{p} = {np}"),
        ));
    }
    Ok(out)
}

/// Hypothesis: `ψ(G)·s > r·ψ(C_n)`. Conclusion: the largest cyclic subgroup
/// has index below `(s/r)·∏ (p_i+1)/p_i`.
pub fn check_cyclic_index_existence(
    g: &FiniteGroup,
    r: u64,
    s: u64,
) -> Result<LemmaReport, CheckError> {
    let n = g.order() as u64;
    let instance = format!("r/s={r}/{s}");
    let group_side = psi(g) * s;
    let cyclic_side = psi_cyclic(n)? * r;
    if group_side <= cyclic_side {
        return Ok(LemmaReport::vacuous(
            LemmaId::L2_13,
            g.name(),
            instance,
            format!("ψ(G)·s = {group_side} ≤ r·ψ(C_n) = {cyclic_side}"),
        ));
    }
    let bound = cyclic_index_bound(n, r, s)?;
    let largest = g.max_element_order();
    let index = BigRational::new(n.into(), largest.into());
    Ok(LemmaReport::evaluated(
        LemmaId::L2_13,
        g.name(),
        instance,
        index < bound,
        format!("[G:⟨x⟩] = {index} < {bound}"),
    ))
}
