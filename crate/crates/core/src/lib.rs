//! Exact computations around finite-index subgroups of the modular group:
//! coset actions, dessins d'enfants, Belyi maps, isogenies and modular
//! equations.

pub mod arith;
pub mod belyi;
pub mod dessin;
pub mod error;
pub mod isogeny;
pub mod modeq;
pub mod perm;
pub mod psl2;

pub use error::{Error, Result};
