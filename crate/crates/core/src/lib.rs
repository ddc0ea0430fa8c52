//! Finite inverse semigroups, graph inverse semigroups and the machinery needed
//! to decide, constructively, whether a finite inverse semigroup is Morita
//! equivalent to a graph inverse semigroup.
//!
//! The crate is organised bottom-up:
//!
//! * [`semigroup`]: multiplication tables, validation, Green's relations, local
//!   submonoids and semigroup isomorphism.
//! * [`semilattice`]: the poset of idempotents, covers, intervals and the
//!   Perrot property report.
//! * [`graph`]: directed graphs, paths, graph inverse semigroups and graph
//!   isomorphism.
//! * [`gamma`]: the graph of nonzero D-classes of a semigroup, the canonical
//!   family of elements indexed by its paths, and the Morita verdict.
//! * [`category`]: finite categories built from semigroups (idempotent
//!   splitting, left category, path category) and functor checks.
//!
//! Exhaustive checks run on rayon when the `parallel` feature is enabled (the
//! default). Every such entry point has a `*_with` variant taking an [`Exec`]
//! so callers can force the sequential path.

pub mod category;
pub mod exec;
pub mod fixtures;
pub mod gamma;
pub mod graph;
pub mod semigroup;
pub mod semilattice;
pub mod text;

pub use exec::Exec;

/// A bounded backtracking search ran out of budget before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search exceeded the limit of {0} steps")]
pub struct SearchExceedsLimit(pub usize);

/// Default step budget for the isomorphism searches.
pub const DEFAULT_SEARCH_LIMIT: usize = 1_000_000;
