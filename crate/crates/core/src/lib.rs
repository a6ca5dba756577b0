//! Exact invariants of symmetric and exterior powers of Young permutation
//! modules for symmetric groups in characteristic p.
//!
//! Everything is computed with exact integer arithmetic. Closed-form results
//! (complexities, projectivity and indecomposability tests, distinguished
//! Young-module labels, Scott-module multiplicities) live next to
//! brute-force orbit and double-coset verifiers that recompute the same
//! quantities independently at small degree; the `verify` module wires the
//! two sides together.
//!
//! All operations are pure functions on immutable values and are safe to
//! call from any number of threads.

pub mod arith;
pub mod brauer;
mod caps;
pub mod complexity;
mod error;
pub mod oracle;
pub mod partitions;
pub mod powers;
pub mod scott;
pub mod tabloids;
pub mod verify;
pub mod young;

pub use caps::Caps;
pub use error::{Error, Result};
