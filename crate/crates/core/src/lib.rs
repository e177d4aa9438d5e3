//! Plane trees counted by old and young leaves.
//!
//! A leaf is *old* when it is the leftmost child of its parent and *young*
//! otherwise. This crate provides the objects (plane trees, Dyck, Motzkin and
//! colored Motzkin paths, pattern-avoiding permutations), the bijections
//! between them that carry old and young leaves to simple path and
//! permutation statistics, exact counting formulas, and exact polynomial
//! checks of the refined Narayana/Catalan identities built on top of them.

pub mod bijections;
pub mod counting;
pub mod error;
pub mod identities;
pub mod matches;
pub mod objects;
pub mod statistics;
pub mod verify;

pub use error::{Error, Result};
pub use objects::{LatticePath, PathKind, Permutation, PlaneTree, Step};
