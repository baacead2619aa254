use super::{FiniteGroup, GroupError, Subgroup};
use crate::exactnum::factorize;

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl FiniteGroup {
    /// `p^a`, the exact power of `p` dividing the group order.
    pub fn p_part(&self, p: u64) -> u64 {
        let mut n = self.order() as u64;
        let mut part = 1;
        while p > 1 && n.is_multiple_of(p) {
            n /= p;
            part *= p;
        }
        part
    }

    /// A Sylow `p`-subgroup, grown from the trivial subgroup: while `P` is
    /// not yet Sylow, `p` divides `[N_G(P) : P]`, so `N_G(P)` holds a
    /// `p`-element outside `P` and `⟨P, g⟩` is again a `p`-group.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup<'_>, GroupError> {
        self.check_prime_divisor(p)?;
        let target = self.p_part(p) as usize;
        let mut sylow = self.trivial_subgroup();
        while sylow.order() < target {
            let normalizer = self.normalizer(&sylow);
            let g = normalizer
                .members()
                .iter()
                .copied()
                .find(|&g| !sylow.contains(g) && is_power_of(self.element_order(g), p))
                .expect("normalizer of a non-Sylow p-subgroup has a new p-element");
            sylow.extend(g);
        }
        Ok(sylow)
    }

    /// `n_p = [G : N_G(P)]`.
    pub fn sylow_count(&self, p: u64) -> Result<u64, GroupError> {
        let sylow = self.sylow_subgroup(p)?;
        let count = (self.order() / self.normalizer(&sylow).order()) as u64;
        assert_eq!(count % p, 1, "Sylow count {count} is not 1 mod {p}");
        assert_eq!(
            (self.order() as u64 / self.p_part(p)) % count,
            0,
            "Sylow count {count} does not divide the p'-part"
        );
        Ok(count)
    }

    fn check_prime_divisor(&self, p: u64) -> Result<(), GroupError> {
        if !crate::exactnum::is_prime(p) {
            return Err(GroupError::Domain(format!("{p} is not prime")));
        }
        if !(self.order() as u64).is_multiple_of(p) {
            return Err(GroupError::Domain(format!(
                "{p} does not divide the group order {}",
                self.order()
            )));
        }
        Ok(())
    }

    /// Primes dividing the group order, ascending.
    pub fn prime_divisors(&self) -> Vec<u64> {
        factorize(self.order() as u64)
            .expect("group order is positive")
            .primes()
            .collect()
    }
}
