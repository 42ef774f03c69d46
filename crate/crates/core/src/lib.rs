//! Finite automata for coefficient sequences of algebraic power series and
//! diagonals of rational functions modulo prime powers `p^alpha`.
//!
//! States are stored as digit tuples in the base `p/Q` numeration system, so
//! each transition is computed without expanding large powers of `Q`.

pub mod error;
pub mod modarith;
pub mod poly;

pub use error::{Error, Result};
pub use modarith::{Residue, RingSpec};
pub mod analysis;
pub mod automaton;
pub mod numeration;
pub mod oracle;
