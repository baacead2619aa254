use std::cell::RefCell;
use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexSet;
use num_integer::Integer;
use rustc_hash::FxBuildHasher;

use super::{ElemId, GroupError, Permutation, Subgroup};

thread_local! {
    static PRODUCT_BUF: RefCell<Vec<u32>> = const { RefCell::new(Vec::new()) };
}

/// Enumeration cap used when callers do not supply their own.
pub const DEFAULT_MAX_ORDER: usize = 200_000;

/// A permutation group with every element enumerated.
///
/// Elements are addressed by [`ElemId`]; the identity is always id `0` and
/// ids are assigned in breadth-first order from the generators. The group is
/// immutable once built.
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<ElemId>,
    elements: IndexSet<Permutation, FxBuildHasher>,
    orders: Vec<u64>,
    inverses: Vec<ElemId>,
    histogram: BTreeMap<u64, u64>,
}

impl FiniteGroup {
    /// Breadth-first closure of `gens` under right multiplication.
    pub fn from_generators(
        degree: usize,
        gens: &[Permutation],
        max_order: usize,
    ) -> Result<Self, GroupError> {
        if max_order == 0 {
            return Err(GroupError::Domain("max_order must be at least 1".into()));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    index: i,
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut elements = IndexSet::with_hasher(FxBuildHasher);
        elements.insert(Permutation::identity(degree));
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        let mut queue = VecDeque::from([0usize]);
        let mut buf = Vec::with_capacity(degree);
        while let Some(current) = queue.pop_front() {
            for g in &gens {
                elements[current].then_into(g, &mut buf);
                if elements.get_index_of(buf.as_slice()).is_none() {
                    if elements.len() == max_order {
                        return Err(GroupError::Capacity {
                            limit: max_order,
                            partial: elements.len(),
                        });
                    }
                    let perm = Permutation::from_images(buf.clone())
                        .expect("product of permutations is a permutation");
                    let (id, _) = elements.insert_full(perm);
                    queue.push_back(id);
                }
            }
        }
        let generators = gens
            .iter()
            .map(|g| elements.get_index_of(*g).expect("generator was enumerated"))
            .collect();
        let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
        let inverses = elements
            .iter()
            .map(|p| {
                elements
                    .get_index_of(&p.inverse())
                    .expect("group is closed under inverses")
            })
            .collect();
        let mut histogram = BTreeMap::new();
        for &o in &orders {
            *histogram.entry(o).or_insert(0) += 1;
        }
        Ok(Self {
            name: String::new(),
            degree,
            generators,
            elements,
            orders,
            inverses,
            histogram,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, &[], 1).expect("trivial group fits")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// Ids of the (non-identity) generators.
    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|&g| self.element(g).clone()).collect()
    }

    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn ids(&self) -> std::ops::Range<ElemId> {
        0..self.order()
    }

    pub fn id_of(&self, perm: &Permutation) -> Option<ElemId> {
        self.elements.get_index_of(perm)
    }

    /// `a` followed by `b`.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        PRODUCT_BUF.with(|buf| {
            let mut buf = buf.borrow_mut();
            self.elements[a].then_into(&self.elements[b], &mut buf);
            self.elements
                .get_index_of(buf.as_slice())
                .expect("group is closed under multiplication")
        })
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverses[a]
    }

    /// `by⁻¹ · a · by`.
    pub fn conj(&self, a: ElemId, by: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(by), a), by)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: ElemId, b: ElemId) -> ElemId {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn element_order(&self, id: ElemId) -> u64 {
        self.orders[id]
    }

    /// Element order `d` ↦ number of elements of order `d`.
    pub fn order_histogram(&self) -> &BTreeMap<u64, u64> {
        &self.histogram
    }

    pub fn max_element_order(&self) -> u64 {
        *self.histogram.keys().next_back().expect("identity is present")
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.histogram.keys().fold(1, |acc, d| acc.lcm(d))
    }

    pub fn is_abelian(&self) -> bool {
        self.whole().is_abelian()
    }

    pub fn is_cyclic(&self) -> bool {
        self.max_element_order() == self.order() as u64
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_closure(self, &self.generators)
    }

    pub fn trivial_subgroup(&self) -> Subgroup<'_> {
        Subgroup::trivial(self)
    }

    /// Smallest subgroup containing every element of `seed`.
    pub fn subgroup_closure(&self, seed: &[ElemId]) -> Subgroup<'_> {
        Subgroup::from_closure(self, seed)
    }

    /// Class index for every element and one representative per class
    /// (the smallest id in it).
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        for start in self.ids() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let class = representatives.len();
            representatives.push(start);
            class_of[start] = class;
            let mut stack = vec![start];
            let mut size = 1;
            while let Some(x) = stack.pop() {
                for &g in &self.generators {
                    let y = self.conj(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = class;
                        size += 1;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        ConjugacyClasses {
            class_of,
            representatives,
            sizes,
        }
    }

    /// Closure of `seed` under multiplication and conjugation by `G`.
    pub fn normal_closure(&self, seed: &[ElemId]) -> Subgroup<'_> {
        let n = Subgroup::trivial(self).normal_closure_under(seed, &self.generators);
        n.mark_normal(true);
        n
    }

    pub fn center(&self) -> Subgroup<'_> {
        let z = self.centralizer(&self.whole());
        z.mark_normal(true);
        z
    }

    /// `C_G(H)`: elements commuting with every generator of `H`.
    pub fn centralizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let members = self
            .ids()
            .filter(|&g| h.generators().iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_closed_set(self, members)
    }

    /// `N_G(H)`: elements conjugating every generator of `H` back into `H`.
    pub fn normalizer(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let members = self
            .ids()
            .filter(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        Subgroup::from_closed_set(self, members)
    }

    /// True iff `gHg⁻¹ = H` for every generator `g` of `G`.
    pub fn is_normal(&self, h: &Subgroup<'_>) -> bool {
        self.generators
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    /// Largest normal subgroup of `G` inside `A`: the intersection of the
    /// conjugates of `A`, one per right coset.
    pub fn core_of(&self, a: &Subgroup<'_>) -> Subgroup<'_> {
        let mut core: Vec<ElemId> = a.members().to_vec();
        let mut done = vec![false; self.order()];
        for g in self.ids() {
            if done[g] {
                continue;
            }
            for &x in a.members() {
                done[self.mul(x, g)] = true;
            }
            let g_inv = self.inv(g);
            // c ∈ g⁻¹Ag  ⟺  g c g⁻¹ ∈ A
            core.retain(|&c| a.contains(self.mul(self.mul(g, c), g_inv)));
        }
        Subgroup::from_closed_set(self, core)
    }

    /// `G′`, the normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        self.whole().derived()
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …`, ending at the first term equal to its successor.
    pub fn derived_series(&self) -> Vec<Subgroup<'_>> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = last.derived();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .is_none_or(|s| s.order() == 1)
    }

    /// True iff every non-identity element has normal closure `G`.
    pub fn is_simple(&self) -> Result<bool, GroupError> {
        if self.order() == 1 {
            return Err(GroupError::Domain(
                "simplicity is undefined for the trivial group".into(),
            ));
        }
        if crate::exactnum::is_prime(self.order() as u64) {
            return Ok(true);
        }
        let classes = self.conjugacy_classes();
        Ok(classes
            .representatives
            .iter()
            .skip(1)
            .all(|&x| self.normal_closure(&[x]).order() == self.order()))
    }

    /// Whether the proper subgroup `H` is maximal: `⟨H, g⟩ = G` for every
    /// `g ∉ H`.
    pub fn is_maximal(&self, h: &Subgroup<'_>) -> Result<bool, GroupError> {
        if h.order() == self.order() {
            return Err(GroupError::Domain(
                "maximality is asked of a proper subgroup".into(),
            ));
        }
        let index = (self.order() / h.order()) as u64;
        if crate::exactnum::is_prime(index) {
            return Ok(true);
        }
        let mut done = h.mask().to_vec();
        for g in self.ids() {
            if done[g] {
                continue;
            }
            // ⟨H, g⟩ depends only on the double coset HgH
            let mut stack: Vec<ElemId> = h.members().iter().map(|&x| self.mul(x, g)).collect();
            for &y in &stack {
                done[y] = true;
            }
            while let Some(y) = stack.pop() {
                for &s in h.generators() {
                    let z = self.mul(y, s);
                    if !done[z] {
                        done[z] = true;
                        stack.push(z);
                    }
                }
            }
            if h.extended(g).order() != self.order() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("histogram", &self.histogram)
            .finish()
    }
}

/// Partition of a group into conjugacy classes.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<ElemId>,
    pub sizes: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}
