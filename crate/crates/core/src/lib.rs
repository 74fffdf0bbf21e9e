//! Finite quandles, their inner automorphism groups, and the categories of
//! generated groups that they correspond to.
//!
//! Everything here is exact and exhaustive: groups are permutation groups
//! whose elements are enumerated up front, and all checks are brute force
//! over those elements.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod functors;
pub mod grpgen;
pub mod homs;
pub mod perm;
pub mod quandle;

pub use error::{Error, Result};
pub use grpgen::{GenPair, StarMorphism, SurjMorphism};
pub use homs::{enumerate_homs, HomMode, QuandleHom};
pub use perm::{PermGroup, Permutation};
pub use quandle::{AbelianAutomorphism, AbelianGroup, Quandle, Subquandle};
