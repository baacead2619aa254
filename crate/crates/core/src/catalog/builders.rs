use crate::exactnum::is_prime;
use crate::permgrp::{direct_product, FiniteGroup, GroupError, Permutation};

use super::CatalogError;

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("builder produces a bijection")
}

fn cycle(degree: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    let points: Vec<u32> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[&points]).expect("builder produces a bijection")
}

/// `C_n` generated by an `n`-cycle.
pub fn cyclic(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Domain("C_0 is not a group".into()));
    }
    FiniteGroup::from_generators(n, &[cycle(n, 0..n as u32)], max_order)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::Domain(format!("D{n} needs at least 3 vertices")));
    }
    let rotation = cycle(n, 0..n as u32);
    let reflection = perm((0..n).map(|i| ((n - i) % n) as u32).collect());
    FiniteGroup::from_generators(n, &[rotation, reflection], max_order)
}

/// `S_k` generated by `(0 1)` and `(0 1 … k−1)`.
pub fn symmetric(k: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let degree = k.max(1);
    let gens = if k < 2 {
        vec![]
    } else {
        vec![cycle(k, [0, 1]), cycle(k, 0..k as u32)]
    };
    FiniteGroup::from_generators(degree, &gens, max_order)
}

/// `A_k` generated by `(0 1 2)` and a long odd-length cycle.
pub fn alternating(k: usize, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let degree = k.max(1);
    let gens = if k < 3 {
        vec![]
    } else if k % 2 == 1 {
        vec![cycle(k, [0, 1, 2]), cycle(k, 0..k as u32)]
    } else {
        vec![cycle(k, [0, 1, 2]), cycle(k, 1..k as u32)]
    };
    FiniteGroup::from_generators(degree, &gens, max_order)
}

/// `SL(2,p)` acting on the `p²−1` nonzero column vectors over `F_p`,
/// generated by the two elementary transvections.
pub fn special_linear(p: u64, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::Domain(format!("{p} is not prime")));
    }
    let p = p as usize;
    let index = |a: usize, b: usize| (a * p + b - 1) as u32;
    let vectors: Vec<(usize, usize)> = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[usize; 2]; 2]| {
        perm(vectors
            .iter()
            .map(|&(a, b)| index((m[0][0] * a + m[0][1] * b) % p, (m[1][0] * a + m[1][1] * b) % p))
            .collect())
    };
    let upper = act([[1, 1], [0, 1]]);
    let lower = act([[1, 0], [1, 1]]);
    FiniteGroup::from_generators(p * p - 1, &[upper, lower], max_order)
}

/// `PSL(2,p)` acting by Möbius maps on the projective line `F_p ∪ {∞}`,
/// generated by `z ↦ z+1` and `z ↦ −1/z`. Point `p` stands for `∞`.
pub fn projective_special_linear(p: u64, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::Domain(format!("{p} is not prime")));
    }
    let inf = p;
    let translate = |z: u64| if z == inf { inf } else { (z + 1) % p };
    let invert = |z: u64| {
        if z == inf {
            0
        } else if z == 0 {
            inf
        } else {
            let inv = (1..p).find(|&w| (w * z) % p == 1).expect("F_p is a field");
            p - inv
        }
    };
    let on_line = |f: &dyn Fn(u64) -> u64| perm((0..=p).map(|z| f(z) as u32).collect());
    let (translate, invert) = (on_line(&translate), on_line(&invert));
    FiniteGroup::from_generators(p as usize + 1, &[translate, invert], max_order)
}

fn parse_number(s: &str, id: &str) -> Result<usize, CatalogError> {
    s.parse()
        .map_err(|_| CatalogError::UnknownId(id.to_string()))
}

fn bracketed<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
}

pub(super) const MAX_SYMMETRIC_DEGREE: usize = 7;
pub(super) const MAX_LINEAR_PRIME: u64 = 7;
pub(super) const MAX_PROJECTIVE_PRIME: u64 = 13;

/// Builds a single (non-product) factor of a catalog id.
pub(super) fn build_atom(id: &str, max_order: usize) -> Result<FiniteGroup, CatalogError> {
    let unknown = || CatalogError::UnknownId(id.to_string());
    let group = if let Some(p) = bracketed(id, "SL2") {
        let p = parse_number(p, id)? as u64;
        if p > MAX_LINEAR_PRIME || !is_prime(p) {
            return Err(unknown());
        }
        special_linear(p, max_order)?
    } else if let Some(p) = bracketed(id, "PSL2").or_else(|| bracketed(id, "L2")) {
        let p = parse_number(p, id)? as u64;
        if p > MAX_PROJECTIVE_PRIME || !is_prime(p) {
            return Err(unknown());
        }
        projective_special_linear(p, max_order)?
    } else if id == "Q8" {
        super::spec_file::parse_group_spec(super::Q8_FIXTURE)?.build(max_order)?
    } else if id == "V4" {
        FiniteGroup::from_generators(
            4,
            &[perm(vec![1, 0, 3, 2]), perm(vec![2, 3, 0, 1])],
            max_order,
        )?
    } else if let Some(n) = id.strip_prefix('C') {
        cyclic(parse_number(n, id)?, max_order)?
    } else if let Some(n) = id.strip_prefix('D') {
        dihedral(parse_number(n, id)?, max_order)?
    } else if let Some(k) = id.strip_prefix('S') {
        let k = parse_number(k, id)?;
        if k == 0 || k > MAX_SYMMETRIC_DEGREE {
            return Err(unknown());
        }
        symmetric(k, max_order)?
    } else if let Some(k) = id.strip_prefix('A') {
        let k = parse_number(k, id)?;
        if k == 0 || k > MAX_SYMMETRIC_DEGREE {
            return Err(unknown());
        }
        alternating(k, max_order)?
    } else {
        return Err(unknown());
    };
    Ok(group.with_name(id))
}

/// Builds an id such as `A5xC7`: factors joined by `x`, multiplied left to
/// right with [`direct_product`].
pub(super) fn build_id(id: &str, max_order: usize) -> Result<FiniteGroup, CatalogError> {
    let mut factors = id.split('x');
    let first = factors.next().filter(|f| !f.is_empty());
    let Some(first) = first else {
        return Err(CatalogError::UnknownId(id.to_string()));
    };
    let mut group = build_atom(first, max_order)?;
    for factor in factors {
        if factor.is_empty() {
            return Err(CatalogError::UnknownId(id.to_string()));
        }
        let next = build_atom(factor, max_order)?;
        group = direct_product(&group, &next, max_order)?;
    }
    Ok(group.with_name(id))
}
