//! Permutation groups small enough to enumerate completely.
//!
//! A [`FiniteGroup`] holds every element; subgroups are membership masks
//! over the parent's element ids. Products read left to right (see
//! [`Permutation::then`]), and conjugation is `x^g = g⁻¹xg`.

mod group;
mod perm;
mod quotient;
mod subgroup;
mod sylow;

pub use group::{ConjugacyClasses, FiniteGroup, DEFAULT_MAX_ORDER};
pub use perm::Permutation;
pub use quotient::direct_product;
pub use subgroup::Subgroup;

/// Index of an element inside its [`FiniteGroup`]; `0` is the identity.
pub type ElemId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("closure exceeded max_order {limit} after enumerating {partial} elements")]
    Capacity { limit: usize, partial: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("domain error: {0}")]
    Domain(String),
}
