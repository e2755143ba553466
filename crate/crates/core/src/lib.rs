//! Classification of the p-torsion of principally polarized abelian
//! varieties in characteristic p (symmetric BT1 group schemes).
//!
//! A type of dimension `g` can be given as a final type, a Young type, an
//! element of the Weyl group of `Sp_{2g}`, or (for `g <= 4`) a name built from
//! `L`, `I[r,1]`, `I[r,2]` and `I[4,3]`. This crate converts between these
//! encodings, computes invariants from each independently, and carries the
//! reference tables for `g <= 4`.

pub mod catalog;
pub mod dieudonne;
pub mod error;
pub mod poset;
pub mod strata;
pub mod taut;
pub mod verify;
pub mod weyl;

pub use catalog::{build_module, classify, parse_name, GroupSchemeName};
pub use dieudonne::MonomialModule;
pub use error::{Error, Result};
pub use strata::{FinalType, StratumRecord, YoungType};
pub use taut::{LambdaPoly, PPoly};
pub use weyl::{WeylElement, WeylWord};
