//! Closure operators, their Bergman, independence and augmented Bergman
//! complexes, and certificates of shellability and vertex decomposability.

pub mod bergman;
pub mod cli;
pub mod closure;
pub mod complex;
pub mod decompose;
pub mod error;
pub mod instances;
pub mod report;
pub mod shelling;

pub use error::{Error, Result};
