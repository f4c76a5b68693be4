//! Finite posets and the band structures compatible with them.
//!
//! A *band* is an idempotent semigroup. The right-regular bands (RRB, the
//! variety satisfying `x·y·x = y·x`) are exactly the bands whose natural
//! quasiorder `a ≤ b ⇔ a·b = a` is a partial order. This crate decides, for a
//! finite poset, whether an *admissible* operation exists in a chosen variety
//! (right-regular, right-normal, or commutative), enumerates all such
//! operations, and builds them constructively from structural witnesses
//! (ordered sums, disjoint unions, chain decompositions of foliated trees,
//! homomorphic preimages, and semilattice quotient maps).
//!
//! The crate is `no_std` (with `alloc`); IO, text formats, and the command
//! line surface live in the companion `posemigroup-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod band;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod normality;
pub mod poset;
pub mod search;

pub use band::{BandOp, EquivRel};
pub use error::Error;
pub use poset::{Poset, PosetMap};
pub use search::{SearchConfig, SearchMode, Variety};
