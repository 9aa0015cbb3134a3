//! Verification checks, one `CheckReport` per parameter tuple.

pub mod checks;
pub mod identities;
pub mod unramified;
mod report;

pub use crate::gamma::frobenius_on_fraction;
pub use report::{CheckReport, Params, Residual, Status};
