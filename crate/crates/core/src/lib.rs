//! Ramification invariants of finite Galois p-extensions of complete
//! discrete valuation fields, including fields with imperfect residue field.

pub mod analysis;
pub mod catalog;
pub mod cdvf;
pub mod coeffield;
pub mod conductor;
pub mod describe;
pub mod error;
pub mod extension;
pub mod ramfilt;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
