//! The p-adic gamma functions and what is built from them: the LΓ series,
//! Morita's Γ_p, the extension to Q_p - Z_p, Coleman's Γ_col, both p-adic
//! beta functions, Frobenius scalar factors and Jacobi sums.

mod beta;
mod extended;
mod frobenius;
mod jacobi;
mod lgamma;
mod morita;

pub use crate::padic::UnitModRoots;
pub use beta::{beta_p, beta_p_pointed, epsilon, BetaValue};
pub use extended::{
    fractional_p_part, gamma_coleman, gamma_coleman_direct, gamma_ext, gamma_ext_rational,
    gamma_p, GammaValue,
};
pub use frobenius::{
    bad_case_multiplier, expected_good_valuation, frobenius_factor, frobenius_on_fraction,
    FactorCase, FrobeniusFactor,
};
pub use jacobi::{embed_cyclotomic, embedded_root_of_unity, jacobi_sum, jacobi_sum_padic};
pub use lgamma::{
    jx_monomial, jx_oracle, lgamma, lgamma_general, lgamma_series, lgamma_term_valuations,
    lgamma_truncation, LGammaValue,
};
pub use morita::{gamma_morita, gamma_morita_direct, gamma_morita_int};

/// Default cap on literal Γ_col products.
pub const COLEMAN_PRODUCT_CAP: u64 = 10_000_000;
