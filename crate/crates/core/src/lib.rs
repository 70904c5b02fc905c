//! Reduced words of dominant permutations: Little bumps, the bump-delete and
//! insert-bump operators, the ranked multigraph they generate, and a Markov
//! growth process that samples reduced words with probability proportional
//! to their Macdonald weight (the product of the crossing heights).
//!
//! Conventions used throughout the crate:
//!
//! * permutations are in one-line notation, 1-based; composition is
//!   `(p ∘ q)(x) = p(q(x))`;
//! * a word `(a_1, ..., a_k)` is drawn as a wiring diagram whose wires are
//!   labelled by their starting row; the crossing at position `t` swaps rows
//!   `a_t` and `a_t + 1`, and row `r` at the right end holds wire `π(r)`;
//! * height `0` is the auxiliary zeroth wire that upward bumps may reach.

pub mod bump;
pub mod error;
pub mod growth;
pub mod lambda;
pub mod oracle;
pub mod perm;
pub mod render;
pub mod tableau;
pub mod wiring;
pub mod word;

pub use bump::{
    bump_delete, insert_bump_at, little_bump, push_delete, BumpTrace, Direction, InsertTrace,
};
pub use error::{Error, Result};
pub use growth::{grow, ungrow, Grower, GrowthPath, Sampler, Validation};
pub use lambda::RankedMultigraph;
pub use perm::{Permutation, RotheDiagram};
pub use tableau::{Chain, Partition, StandardTableau};
pub use word::{FormalSum, WiringDiagram, Word};
