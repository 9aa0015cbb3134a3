//! p-adic numbers for odd primes and the elementary functions on them.

mod functions;
mod modroots;
mod number;
pub(crate) mod progression;

pub use functions::{
    exp_extended, exp_small, log_iwasawa, log_iwasawa_truncated, log_truncation_bound, star,
    teichmuller,
};
pub use modroots::UnitModRoots;
pub use number::PadicNumber;
pub use progression::{elementary_symmetric_range, progression_product};
