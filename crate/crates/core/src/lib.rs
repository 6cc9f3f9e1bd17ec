//! Exact computation with finite regular ⋆-semigroups and the structures
//! built on top of them.
//!
//! A regular ⋆-semigroup is a semigroup with an involution `x ↦ x⋆`
//! satisfying `x x⋆ x = x` and `(xy)⋆ = y⋆ x⋆`. From such a semigroup one
//! obtains (2,2,1)-algebras by adjoining one of fourteen derived
//! additions ([`semibrace::AdditionKind`]), and every (2,2,1)-algebra
//! carries a candidate Yang-Baxter map `r(a, b) = (λ_a(b), ρ_b(a))` with
//! `λ_a(b) = a(a⋆ + b)` and `ρ_b(a) = (a⋆ + b)⋆ b` ([`ybe`]). Weak
//! ⋆-braces, where both operations are regular ⋆-semigroup structures
//! linked by a distributivity law, live in [`wsb`].
//!
//! Everything operates on explicit finite operation tables with carrier
//! `{0, .., n-1}`; all checks are exhaustive and exact, and every failed
//! universal check is reported with a concrete witness tuple. The crate
//! also provides a backtracking enumerator for small models with
//! isomorphism rejection ([`search`]), a registry of machine-checkable
//! claims ([`registry`]), a catalog of reference structures
//! ([`catalog`]) and a JSON document format ([`document`]).

use thiserror::Error;

pub mod catalog;
pub mod document;
pub mod registry;
pub mod search;
pub mod semibrace;
pub mod star;
pub mod table;
pub mod wsb;
pub mod ybe;

/// A fact this crate relies on failed to hold on a concrete structure.
///
/// This error is never caused by bad input: by the time a consistency
/// check runs, the input has already been validated. Reaching it means a
/// cross-check between two independent computations of the same fact
/// disagreed, so callers should treat it as an internal error rather
/// than a property verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("consistency failure [{claim}]: {detail}")]
pub struct ConsistencyError {
    /// Identifier of the violated fact.
    pub claim: String,
    /// Human-readable description of the disagreement.
    pub detail: String,
}

impl ConsistencyError {
    pub fn new(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        ConsistencyError {
            claim: claim.into(),
            detail: detail.into(),
        }
    }
}

pub use table::{Element, Witness};
