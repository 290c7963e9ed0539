//! Calogero-Moser partitions and residue partitions of `l`-multipartitions
//! for the complex reflection groups `G(l,1,n)`.
//!
//! The crate computes both partitions of `P(l, n)` from a rational parameter
//! `H = (H_1, .., H_{l-1})` with exact arithmetic:
//!
//! * [`families::cm_partition`] reduces the stability parameter into the
//!   fundamental alcove ([`alcove`]), forms shifted β-numbers of the permuted
//!   components and groups multipartitions by their class multisets, or
//!   equivalently by their `J`-hearts ([`jheart`]).
//! * [`families::rouquier_residue_partition`] groups multipartitions by their
//!   charged residue polynomials ([`laurent`]).
//!
//! [`families::compare`] places the two in the refinement order.

pub mod alcove;
pub mod beta;
pub mod cli;
pub mod error;
pub mod families;
pub mod jheart;
pub mod laurent;
pub mod partition;

pub use error::{Error, Result};
