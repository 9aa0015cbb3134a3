//! High-precision real arithmetic and the complex side of the checks:
//! Γ and B at rational points, beta-product identities, Hurwitz zeta
//! derivatives and integer-relation recognition.

mod bigreal;
mod decompose;
mod gamma;
mod lll;
mod recognize;
mod zeta;

pub use bigreal::{BigComplex, BigReal, RealContext, GUARD_DIGITS};
pub use gamma::{beta_real, gamma_real, ln_beta_abs, ln_gamma, ln_gamma_abs, stirling_threshold};
pub use decompose::{
    decompose_gamma_product, ln_gamma_pair_from_betas, ln_abs_rhs, ln_gamma_reflection_pair,
    verify_beta_product, BetaProductCheck, BetaProductExpr, Branch, Factor, FactorKind,
};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_at_zero, hurwitz_zeta_deriv0, stark_unit_real, stark_unit_real_beta,
    zeta_deriv0_closed, zeta_deriv0_oracle, StarkUnitReal, ZetaDeriv0,
};
pub use lll::lll_reduce;
pub use recognize::{recognize_algebraic, recognize_algebraic_complex, required_digits, Recognition};
