//! Exact computation of the sum of element orders `ψ(G)` for finite
//! permutation groups, with mechanical checkers for the lemmas that relate
//! `ψ(G)` to solvability and to `ψ(C_n)`.
//!
//! Modules, bottom up:
//! - [`exactnum`]: factorization, totient, `ψ(C_n)` and its closed-form bounds
//! - [`permgrp`]: fully enumerated permutation groups and their subgroups
//! - [`psi`]: `ψ(G)` by two independent routes, and the `211/1617` comparison
//! - [`catalog`]: named groups, the default manifest and GroupSpec files
//! - [`criteria`]: lemma checkers and the suite runner

pub mod catalog;
pub mod criteria;
pub mod exactnum;
pub mod permgrp;
pub mod psi;
pub mod report;
