//! Exact arithmetic in Q(ζ_m), the Galois action ζ ↦ ζ^t, exact Stark
//! units over Q and minimal polynomials.

mod exact;
mod field;

pub use exact::{min_poly, normalize_pm, rec_exact_check, stark_unit_exact, RecExactEntry};
pub use field::{cyclotomic_polynomial, tables, CyclotomicNumber, CyclotomicTables};
