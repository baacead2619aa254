use std::cell::OnceCell;
use std::fmt;

use super::{ElemId, FiniteGroup, GroupError};

/// A subgroup of an enumerated [`FiniteGroup`], stored as a membership mask
/// together with a generating set.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    mask: Vec<bool>,
    members: Vec<ElemId>,
    generators: Vec<ElemId>,
    normal: OnceCell<bool>,
}

impl<'g> Subgroup<'g> {
    pub fn trivial(parent: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[parent.identity()] = true;
        Self {
            parent,
            mask,
            members: vec![parent.identity()],
            generators: Vec::new(),
            normal: OnceCell::new(),
        }
    }

    pub(crate) fn from_closure(parent: &'g FiniteGroup, seed: &[ElemId]) -> Self {
        let mut h = Self::trivial(parent);
        for &g in seed {
            h.extend(g);
        }
        h
    }

    /// Wraps a set already known to be closed, choosing a small generating
    /// set greedily.
    pub(crate) fn from_closed_set(parent: &'g FiniteGroup, members: Vec<ElemId>) -> Self {
        let mut h = Self::trivial(parent);
        for &g in &members {
            h.extend(g);
            if h.order() == members.len() {
                break;
            }
        }
        assert_eq!(h.order(), members.len(), "member set is not a subgroup");
        h
    }

    /// Builds the subgroup generated by an arbitrary set of elements and
    /// checks the set is already closed; returns `None` if it is not.
    pub fn from_member_set(parent: &'g FiniteGroup, members: &[ElemId]) -> Option<Self> {
        let h = Self::from_closure(parent, members);
        (h.order() == members.len()).then_some(h)
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: ElemId) -> bool {
        self.mask[g]
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        let p = self.parent;
        self.generators.iter().enumerate().all(|(i, &a)| {
            self.generators[i + 1..]
                .iter()
                .all(|&b| p.mul(a, b) == p.mul(b, a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.members
            .iter()
            .any(|&g| self.parent.element_order(g) as usize == self.order())
    }

    /// Normality in the parent, computed once.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| self.parent.is_normal(self))
    }

    pub(crate) fn mark_normal(&self, normal: bool) {
        let _ = self.normal.set(normal);
    }

    /// Adds `g`, extending by right cosets of the current subgroup until
    /// closed under right multiplication by every generator.
    pub fn extend(&mut self, g: ElemId) {
        if self.contains(g) {
            return;
        }
        let p = self.parent;
        let old = self.members.clone();
        self.generators.push(g);
        self.normal = OnceCell::new();
        let mut reps = vec![p.identity()];
        let mut next = 0;
        while next < reps.len() {
            let r = reps[next];
            next += 1;
            for k in 0..self.generators.len() {
                let t = p.mul(r, self.generators[k]);
                if !self.mask[t] {
                    for &h in &old {
                        let x = p.mul(h, t);
                        self.mask[x] = true;
                        self.members.push(x);
                    }
                    reps.push(t);
                }
            }
        }
    }

    pub fn extended(&self, g: ElemId) -> Subgroup<'g> {
        let mut h = self.clone();
        h.extend(g);
        h
    }

    /// Closure of `self ∪ seed` under multiplication and conjugation by
    /// `conjugators`.
    pub(crate) fn normal_closure_under(
        mut self,
        seed: &[ElemId],
        conjugators: &[ElemId],
    ) -> Subgroup<'g> {
        let p = self.parent;
        for &s in seed {
            self.extend(s);
        }
        let mut k = 0;
        while k < self.generators.len() {
            let x = self.generators[k];
            for &c in conjugators {
                let y = p.conj(x, c);
                if !self.contains(y) {
                    self.extend(y);
                }
            }
            k += 1;
        }
        self
    }

    /// Derived subgroup of this subgroup.
    pub fn derived(&self) -> Subgroup<'g> {
        let p = self.parent;
        let gens = &self.generators;
        let mut commutators = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                commutators.push(p.commutator(a, b));
            }
        }
        Subgroup::trivial(p).normal_closure_under(&commutators, gens)
    }

    pub fn intersection(&self, other: &Subgroup<'_>) -> Subgroup<'g> {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| other.contains(g))
            .collect();
        Subgroup::from_closed_set(self.parent, members)
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, g: ElemId) -> Subgroup<'g> {
        let p = self.parent;
        let gens: Vec<ElemId> = self.generators.iter().map(|&x| p.conj(x, g)).collect();
        Subgroup::from_closure(p, &gens)
    }

    /// Same members, regardless of generating set.
    pub fn same_as(&self, other: &Subgroup<'_>) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Re-enumerates the subgroup as a group in its own right.
    pub fn to_group(&self) -> FiniteGroup {
        let p = self.parent;
        let gens: Vec<_> = self.generators.iter().map(|&g| p.element(g).clone()).collect();
        FiniteGroup::from_generators(p.degree(), &gens, self.order())
            .expect("subgroup order bounds its own closure")
    }

    /// Order of `gH` in `G/H` for normal `H`: least `k` with `g^k ∈ H`.
    pub fn coset_order(&self, g: ElemId) -> Result<u64, GroupError> {
        if !self.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let p = self.parent;
        let mut x = g;
        let mut k = 1;
        while !self.contains(x) {
            x = p.mul(x, g);
            k += 1;
        }
        Ok(k)
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}
