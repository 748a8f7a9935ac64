//! Type-A Coxeter combinatorics: weak and Bruhat orders on `Sym(n)`,
//! Kazhdan–Lusztig left cells, skew tableaux and the squash operator, and
//! exhaustive checks of which weak-order intervals `[w_J, w w_J]` are unions
//! of left cells.

pub mod cells;
pub mod classify;
pub mod cli;
pub mod dot;
pub mod error;
pub mod parabolic;
pub mod perm;
pub mod tableaux;

pub use error::{Error, Result};
pub use perm::{ElementSet, GenSet, Permutation, RankCap};
