use super::{FiniteGroup, GroupError, Permutation, Subgroup};

impl FiniteGroup {
    /// `G/N` as a permutation group on the cosets of `N`, each element acting
    /// by right multiplication `Ng ↦ Ngx`.
    pub fn quotient_group(&self, n: &Subgroup<'_>) -> Result<FiniteGroup, GroupError> {
        if !n.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let index = self.order() / n.order();
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::with_capacity(index);
        for g in self.ids() {
            if label[g] != usize::MAX {
                continue;
            }
            for &x in n.members() {
                label[self.mul(x, g)] = reps.len();
            }
            reps.push(g);
        }
        debug_assert_eq!(reps.len(), index);
        let action = |x| -> Vec<u32> { reps.iter().map(|&r| label[self.mul(r, x)] as u32).collect() };
        let gens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|&x| Permutation::from_images(action(x)))
            .collect::<Result<_, _>>()?;
        // reps[0] is the identity, so anything outside N moves coset 0
        let kernel_size = self
            .ids()
            .filter(|&g| label[g] == 0 && action(g).iter().enumerate().all(|(c, &d)| c == d as usize))
            .count();
        assert_eq!(kernel_size, n.order(), "coset action kernel differs from N");
        let name = if self.name().is_empty() {
            String::new()
        } else {
            format!("{}/N", self.name())
        };
        Ok(FiniteGroup::from_generators(index, &gens, index.max(1))?.with_name(name))
    }
}

/// `G × H` acting on the disjoint union of the two point sets.
pub fn direct_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    let degree = g.degree() + h.degree();
    let gens: Vec<Permutation> = g
        .generator_perms()
        .iter()
        .map(|x| x.shifted(0, degree))
        .chain(h.generator_perms().iter().map(|y| y.shifted(g.degree(), degree)))
        .collect();
    let name = format!("{}x{}", g.name(), h.name());
    Ok(FiniteGroup::from_generators(degree, &gens, max_order)?.with_name(name))
}
