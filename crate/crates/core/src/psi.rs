//! The sum of element orders `ψ(G)` and its comparison with `ψ(C_n)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;

use crate::exactnum::{euler_phi, psi_cyclic, ratio};
use crate::permgrp::FiniteGroup;

/// Numerator and denominator of `ψ(A₅)/ψ(C₆₀)`.
pub const HERZOG_NUMERATOR: u64 = 211;
pub const HERZOG_DENOMINATOR: u64 = 1617;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiValue {
    pub group_id: String,
    pub order: u64,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub psi: BigUint,
    pub histogram: BTreeMap<u64, u64>,
}

/// `ψ(G) = Σ_d d·n_d` over the order histogram.
pub fn psi_of_group(g: &FiniteGroup) -> PsiValue {
    let histogram = g.order_histogram().clone();
    let psi = histogram
        .iter()
        .map(|(&d, &count)| BigUint::from(d) * count)
        .sum();
    PsiValue {
        group_id: g.name().to_string(),
        order: g.order() as u64,
        psi,
        histogram,
    }
}

/// `ψ(G)` recomputed as `Σ |C|·φ(|C|)` over the distinct cyclic subgroups
/// `C`. Each `⟨g⟩` is enumerated by repeated multiplication, so this path
/// never looks at cycle structure or the cached histogram.
pub fn psi_via_cyclic_subgroups(g: &FiniteGroup) -> BigUint {
    let mut seen = vec![false; g.order()];
    let mut total = BigUint::from(0u32);
    for x in g.ids() {
        if seen[x] {
            continue;
        }
        let mut powers = vec![g.identity()];
        let mut y = x;
        while y != g.identity() {
            powers.push(y);
            y = g.mul(y, x);
        }
        let size = powers.len() as u64;
        // generators of ⟨x⟩ are x^k with gcd(k, |x|) = 1
        for (k, &p) in powers.iter().enumerate() {
            if num_integer::gcd(k as u64, size) == 1 {
                seen[p] = true;
            }
        }
        let phi = euler_phi(size).expect("size is positive");
        total += BigUint::from(size) * phi;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    Above,
    Equal,
    Below,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Above => "Above",
            Verdict::Equal => "Equal",
            Verdict::Below => "Below",
        })
    }
}

/// `ψ(G)·1617` against `211·ψ(C_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioVerdict {
    pub verdict: Verdict,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub group_side: BigUint,
    #[serde(serialize_with = "crate::report::serialize_biguint")]
    pub cyclic_side: BigUint,
}

/// Compares `ψ(G)` against `(211/1617)·ψ(C_n)` by integer cross products.
pub fn herzog_ratio(g: &FiniteGroup) -> RatioVerdict {
    let psi = psi_of_group(g).psi;
    let cyclic = psi_cyclic(g.order() as u64).expect("group order is positive");
    compare_with_cyclic(&psi, &cyclic)
}

pub fn compare_with_cyclic(psi: &BigUint, psi_cyclic: &BigUint) -> RatioVerdict {
    let group_side = psi * HERZOG_DENOMINATOR;
    let cyclic_side = psi_cyclic * HERZOG_NUMERATOR;
    let verdict = match group_side.cmp(&cyclic_side) {
        Ordering::Greater => Verdict::Above,
        Ordering::Equal => Verdict::Equal,
        Ordering::Less => Verdict::Below,
    };
    RatioVerdict {
        verdict,
        group_side,
        cyclic_side,
    }
}

/// `ψ(G)/ψ(C_n)` in lowest terms.
pub fn cyclic_ratio(g: &FiniteGroup) -> BigRational {
    let psi = psi_of_group(g).psi;
    let cyclic = psi_cyclic(g.order() as u64).expect("group order is positive");
    ratio(&psi, &cyclic)
}
