//! Dimension, rank and fixed-point data for simple Lie algebras and their
//! symmetric spaces, together with two independent centralizer oracles and a
//! verifier for the fixed-point inequalities that make gd equal vcd.
//!
//! The elimination kernel in [`linalg`] is generic over the integer type; the
//! aliases below name the instantiations the oracles use. Nothing in the
//! crate uses floating point.

pub mod atlas;
pub mod catalog;
pub mod centralizer;
pub mod cli;
pub mod linalg;
pub mod tables;
pub mod verifier;

/// Machine-word scalar, tried first.
pub type Small = i64;
/// Unbounded scalar, used after an [`linalg::Overflow`].
pub type Big = num_bigint::BigInt;

pub type SmallEchelon = linalg::Echelon<Small>;
pub type BigEchelon = linalg::Echelon<Big>;
pub type SmallVec = linalg::SparseVec<Small>;
pub type BigVec = linalg::SparseVec<Big>;
