//! Exact computations with towers of diagram algebras: Brauer, Temperley-Lieb,
//! symmetric group, Hecke and BMW algebras, their cell modules, and
//! Jucys-Murphy elements.

pub mod arith;
pub mod branching;
pub mod cellmod;
pub mod diagrams;
pub mod error;
pub mod jm;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod run;
pub mod skein;
pub mod tower;
pub mod verify;

pub use error::{Error, Result};
