//! Exact number theory used throughout the crate: factorization, Euler's
//! totient, the sum of element orders of cyclic groups, and the closed-form
//! lower and upper bounds on that sum.
//!
//! Nothing in this module touches floating point. Every inequality is decided
//! either by integer cross-multiplication or by [`BigRational`] comparison.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow};
use std::fmt;

pub use num_rational::BigRational as Rational;

/// Largest input accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated for {bound}: {reason}")]
    Precondition { bound: &'static str, reason: String },
}

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Largest prime factor, `None` for 1.
    pub fn largest_prime(&self) -> Option<u64> {
        self.pairs.last().map(|&(p, _)| p)
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.pairs.first().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u128 {
        self.pairs
            .iter()
            .map(|&(p, e)| u128::from(p).pow(e))
            .product()
    }

    /// Whether every prime factor lies in `allowed`.
    pub fn primes_within(&self, allowed: &[u64]) -> bool {
        self.primes().all(|p| allowed.contains(&p))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors `n` by trial division.
///
/// Divisors are tried while `d² ≤ n`, with an early exit once the unfactored
/// cofactor is prime, so the worst case is a product of two primes near
/// `2^31.5`. Inputs above `2^63` are rejected.
pub fn factorize(n: u64) -> Result<Factorization, NumberError> {
    if n == 0 {
        return Err(NumberError::Domain("cannot factor 0".into()));
    }
    if n > FACTORIZE_LIMIT {
        return Err(NumberError::Domain(format!(
            "{n} exceeds the factorization limit 2^63"
        )));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut d: u64 = 5;
    let mut cofactor_prime = is_prime(rest);
    while !cofactor_prime && u128::from(d) * u128::from(d) <= u128::from(rest) {
        let before = rest;
        push(d, &mut rest);
        push(d + 2, &mut rest);
        if rest != before {
            cofactor_prime = is_prime(rest);
        }
        d += 6;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64, NumberError> {
    let f = factorize(n)?;
    Ok(f.pairs
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// `ψ(C_{p^r}) = (p^{2r+1} + 1) / (p + 1)`.
pub fn psi_cyclic_prime_power(p: u64, r: u32) -> Result<BigUint, NumberError> {
    if !is_prime(p) {
        return Err(NumberError::Domain(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(NumberError::Domain("exponent must be at least 1".into()));
    }
    let numerator = BigUint::from(p).pow(2 * r + 1) + 1u32;
    let (q, rem) = numerator.div_rem(&BigUint::from(p + 1));
    debug_assert!(rem == BigUint::from(0u32));
    Ok(q)
}

/// `ψ(C_n)` as the product of the prime-power factors.
pub fn psi_cyclic(n: u64) -> Result<BigUint, NumberError> {
    let f = factorize(n)?;
    f.pairs
        .iter()
        .try_fold(BigUint::one(), |acc, &(p, e)| {
            Ok(acc * psi_cyclic_prime_power(p, e)?)
        })
}

/// True iff `p` is prime and equal to `2^(2^k) + 1` for some `k ≥ 0`.
pub fn is_fermat_prime(p: u64) -> bool {
    if !is_prime(p) {
        return false;
    }
    let m = p - 1;
    if !m.is_power_of_two() {
        return false;
    }
    m.trailing_zeros().is_power_of_two()
}

/// `p^k` for some prime `p` and `k ≥ 1`.
pub fn is_prime_power(n: u64) -> bool {
    n > 1 && factorize(n).map(|f| f.pairs.len() == 1).unwrap_or(false)
}

pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(num.clone().into(), den.clone().into())
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `211/1617 = ψ(A₅)/ψ(C₆₀)`.
pub fn herzog_constant() -> BigRational {
    rational(211, 1617)
}

/// Closed-form inequalities on `ψ(C_n)`. Each variant carries the arguments
/// of one bound; [`check_cyclic_bound`] rejects arguments that fall outside
/// the bound's hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicBound {
    /// `ψ(C_n) ≥ 2n²/(p+1)`, `p` the largest prime of `n ≥ 2`.
    General { n: u64 },
    /// `ψ(C_n) ≥ (5005/1152)·n²/(p+1)` when the largest prime `p ≥ 13`.
    P13 { n: u64 },
    /// `p^{2a} > (13/12)·ψ(C_{p^a})` for `p ∈ {2,3,5}`, `a > 0`.
    SmallPrimeSquare { p: u64, a: u32 },
    /// `m² > (13/12)·ψ(C_m)` when every prime of `m ≥ 2` is 2, 3 or 5.
    SmallPiSquare { m: u64 },
    /// `ψ(C_{p^{a+b}}) > ψ(C_{p^a})·ψ(C_{p^b})`.
    Superadditive { p: u64, a: u32, b: u32 },
}

impl CyclicBound {
    pub fn name(&self) -> &'static str {
        match self {
            CyclicBound::General { .. } => "general",
            CyclicBound::P13 { .. } => "p13",
            CyclicBound::SmallPrimeSquare { .. } => "small-prime-square",
            CyclicBound::SmallPiSquare { .. } => "small-pi-square",
            CyclicBound::Superadditive { .. } => "superadditive",
        }
    }
}

fn precondition(bound: &CyclicBound, reason: impl Into<String>) -> NumberError {
    NumberError::Precondition {
        bound: bound.name(),
        reason: reason.into(),
    }
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn big_uint(n: &BigUint) -> BigRational {
    BigRational::from_integer(n.clone().into())
}

/// Evaluates one of the cyclic bounds exactly.
///
/// Arguments outside the bound's hypotheses are an error, never `false`.
pub fn check_cyclic_bound(bound: CyclicBound) -> Result<bool, NumberError> {
    match bound {
        CyclicBound::General { n } => {
            if n < 2 {
                return Err(precondition(&bound, "n must be at least 2"));
            }
            let f = factorize(n)?;
            let p = f.largest_prime().expect("n ≥ 2 has a prime factor");
            let rhs = rational(2, 1) * big(n) * big(n) / big(p + 1);
            Ok(big_uint(&psi_cyclic(n)?) >= rhs)
        }
        CyclicBound::P13 { n } => {
            if n < 2 {
                return Err(precondition(&bound, "n must be at least 2"));
            }
            let f = factorize(n)?;
            let p = f.largest_prime().expect("n ≥ 2 has a prime factor");
            if p < 13 {
                return Err(precondition(
                    &bound,
                    format!("largest prime of {n} is {p} < 13"),
                ));
            }
            let rhs = rational(5005, 1152) * big(n) * big(n) / big(p + 1);
            Ok(big_uint(&psi_cyclic(n)?) >= rhs)
        }
        CyclicBound::SmallPrimeSquare { p, a } => {
            if ![2, 3, 5].contains(&p) {
                return Err(precondition(&bound, format!("p = {p} not in {{2,3,5}}")));
            }
            if a == 0 {
                return Err(precondition(&bound, "a must be positive"));
            }
            let lhs = BigRational::from_integer(BigUint::from(p).pow(2 * a).into());
            let rhs = rational(13, 12) * big_uint(&psi_cyclic_prime_power(p, a)?);
            Ok(lhs > rhs)
        }
        CyclicBound::SmallPiSquare { m } => {
            if m < 2 {
                return Err(precondition(&bound, "m must be at least 2"));
            }
            let f = factorize(m)?;
            if !f.primes_within(&[2, 3, 5]) {
                return Err(precondition(
                    &bound,
                    format!("{m} = {f} has a prime outside {{2,3,5}}"),
                ));
            }
            let lhs = big(m) * big(m);
            let rhs = rational(13, 12) * big_uint(&psi_cyclic(m)?);
            Ok(lhs > rhs)
        }
        CyclicBound::Superadditive { p, a, b } => {
            if !is_prime(p) {
                return Err(precondition(&bound, format!("{p} is not prime")));
            }
            if a == 0 || b == 0 {
                return Err(precondition(&bound, "a and b must be positive"));
            }
            let whole = psi_cyclic_prime_power(p, a + b)?;
            let split = psi_cyclic_prime_power(p, a)? * psi_cyclic_prime_power(p, b)?;
            Ok(whole > split)
        }
    }
}

/// `(s/r)·∏ (p+1)/p` over the primes of `n`; the index bound for the largest
/// cyclic subgroup of a group whose `ψ` exceeds `(r/s)·ψ(C_n)`.
pub fn cyclic_index_bound(n: u64, r: u64, s: u64) -> Result<BigRational, NumberError> {
    if r == 0 || s == 0 {
        return Err(NumberError::Domain("r and s must be positive".into()));
    }
    let f = factorize(n)?;
    Ok(f.primes()
        .fold(big(s) / big(r), |acc, p| acc * big(p + 1) / big(p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while n > 1 {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        out
    }

    fn additive_order_sum(n: u64) -> u64 {
        (0..n).map(|k| n / k.gcd(&n)).sum()
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(60).unwrap().pairs(), &[(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(1617).unwrap().pairs(), &[(3, 1), (7, 2), (11, 1)]);
        assert!(matches!(factorize(0), Err(NumberError::Domain(_))));
        assert!(factorize(FACTORIZE_LIMIT + 1).is_err());
    }

    #[test]
    fn factorize_matches_trial_division() {
        for n in 1..3000 {
            let f = factorize(n).unwrap();
            assert_eq!(f.pairs(), trial_division_oracle(n).as_slice(), "n = {n}");
            assert_eq!(f.value(), u128::from(n));
        }
    }

    #[test]
    fn factorize_large_inputs() {
        let f = factorize(FACTORIZE_LIMIT).unwrap();
        assert_eq!(f.pairs(), &[(2, 63)]);
        // 2^31 - 1 is a Mersenne prime
        let m31 = (1u64 << 31) - 1;
        assert_eq!(factorize(m31 * 3).unwrap().pairs(), &[(3, 1), (m31, 1)]);
        let f = factorize(1_000_003 * 1_000_033).unwrap();
        assert_eq!(f.pairs(), &[(1_000_003, 1), (1_000_033, 1)]);
    }

    #[test]
    fn primality() {
        let sieve: Vec<u64> = (2..2000u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        for n in 0..2000 {
            assert_eq!(is_prime(n), sieve.contains(&n), "n = {n}");
        }
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        let coprime = (1..=12u64).filter(|k| k.gcd(&12) == 1).count() as u64;
        assert_eq!(coprime, 4);
        assert_eq!(euler_phi(12).unwrap(), coprime);
        for p in [2, 3, 5, 7, 101, 7919] {
            assert_eq!(euler_phi(p).unwrap(), p - 1);
        }
        for n in 1..500u64 {
            let direct = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), direct);
        }
    }

    #[test]
    fn psi_prime_power_examples() {
        assert_eq!(additive_order_sum(4), 11);
        assert_eq!(psi_cyclic_prime_power(2, 2).unwrap(), BigUint::from(11u32));
        assert_eq!(psi_cyclic_prime_power(5, 1).unwrap(), BigUint::from(21u32));
        assert_eq!(psi_cyclic_prime_power(3, 1).unwrap(), BigUint::from(7u32));
        assert!(psi_cyclic_prime_power(4, 1).is_err());
        assert!(psi_cyclic_prime_power(2, 0).is_err());
    }

    #[test]
    fn psi_cyclic_examples() {
        assert_eq!(additive_order_sum(60), 1617);
        assert_eq!(additive_order_sum(120), 6321);
        assert_eq!(psi_cyclic(60).unwrap(), BigUint::from(1617u32));
        assert_eq!(psi_cyclic(120).unwrap(), BigUint::from(6321u32));
        assert_eq!(psi_cyclic(1).unwrap(), BigUint::from(1u32));
        assert!(psi_cyclic(0).is_err());
    }

    #[test]
    fn cyclic_bound_examples() {
        assert_eq!(additive_order_sum(12), 77);
        assert!(check_cyclic_bound(CyclicBound::General { n: 12 }).unwrap());
        assert!(check_cyclic_bound(CyclicBound::P13 { n: 13 }).unwrap());
        assert!(check_cyclic_bound(CyclicBound::Superadditive { p: 2, a: 1, b: 1 }).unwrap());
        assert!(check_cyclic_bound(CyclicBound::SmallPrimeSquare { p: 5, a: 3 }).unwrap());
        assert!(check_cyclic_bound(CyclicBound::SmallPiSquare { m: 30 }).unwrap());
    }

    #[test]
    fn cyclic_bound_rejects_hypothesis_violations() {
        let bad = [
            CyclicBound::General { n: 1 },
            CyclicBound::P13 { n: 12 },
            CyclicBound::SmallPrimeSquare { p: 7, a: 1 },
            CyclicBound::SmallPrimeSquare { p: 2, a: 0 },
            CyclicBound::SmallPiSquare { m: 14 },
            CyclicBound::SmallPiSquare { m: 1 },
            CyclicBound::Superadditive { p: 6, a: 1, b: 1 },
            CyclicBound::Superadditive { p: 3, a: 0, b: 2 },
        ];
        for b in bad {
            assert!(
                matches!(check_cyclic_bound(b), Err(NumberError::Precondition { .. })),
                "{b:?}"
            );
        }
    }

    #[test]
    fn fermat_primes() {
        assert!(is_fermat_prime(5));
        assert!(!is_fermat_prime(7));
        assert!(is_fermat_prime(257));
        assert!(is_fermat_prime(3));
        assert!(is_fermat_prime(65537));
        assert!(!is_fermat_prime(9)); // 2^3 + 1, exponent not a power of two
        assert!(!is_fermat_prime(1));
        assert!(!is_fermat_prime(2));
    }

    #[test]
    fn index_bound_value() {
        // (1618/211)(3/2)(4/3)(6/5) for n = 60
        let b = cyclic_index_bound(60, 211, 1618).unwrap();
        assert_eq!(b, rational(1618 * 3 * 4 * 6, 211 * 2 * 3 * 5));
    }
}
