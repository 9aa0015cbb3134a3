//! The Stark unit table: one row per (m, a) with the real value, the
//! polynomial recovered from it, the exact cyclotomic form, and the
//! distance between real and exact values.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use stark_core::arith::admissible_residues;
use stark_core::cyclotomic::stark_unit_exact;
use stark_core::real::{recognize_algebraic, stark_unit_real_beta, RealContext, Recognition};
use stark_core::reciprocity::checks::{alg_prime_bounds, render_poly};

use crate::config::Format;
use crate::eval::render_real;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub m: u64,
    pub a: u64,
    pub value: String,
    pub polynomial: Option<String>,
    pub exact: String,
    /// log10 of |real - exact|, None for an exact zero.
    pub residual_log10: Option<f64>,
}

fn row(m: u64, a: u64, digits: u32) -> Result<Row, String> {
    let err = |e: stark_core::error::Error| e.to_string();
    let ctx = RealContext::new(digits);
    let value = stark_unit_real_beta(a, m, ctx).map_err(err)?;
    let exact = stark_unit_exact(a, m).map_err(err)?;
    let diff = (&value - &exact.to_complex(ctx).re).abs();
    let (degree, height) = alg_prime_bounds(m, digits);
    let polynomial = match recognize_algebraic(&value, degree, &height) {
        Ok(Recognition::Found(p)) => Some(render_poly(p.coeffs())),
        _ => None,
    };
    Ok(Row {
        m,
        a,
        value: render_real(&value, digits),
        polynomial,
        exact: exact.to_string(),
        residual_log10: (!diff.is_zero()).then(|| diff.log10_abs()),
    })
}

pub fn build(conductors: &[u64], a: Option<u64>, digits: u32) -> Result<Vec<Row>, String> {
    let keys: Vec<(u64, u64)> = conductors
        .iter()
        .flat_map(|&m| admissible_residues(m).into_iter().map(move |x| (m, x)))
        .filter(|&(_, x)| a.is_none_or(|y| y == x))
        .collect();
    keys.par_iter().map(|&(m, x)| row(m, x, digits)).collect()
}

pub fn write(out: &mut impl Write, rows: &[Row], format: Format) -> io::Result<()> {
    let residual = |r: &Row| r.residual_log10.map_or("0".to_string(), |x| format!("1e{x:.1}"));
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *out, r).map_err(io::Error::other)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Tsv => {
            writeln!(out, "m\ta\tvalue\tpolynomial\texact\tresidual")?;
            for r in rows {
                let poly = r.polynomial.as_deref().unwrap_or("-");
                writeln!(out, "{}\t{}\t{}\t{poly}\t{}\t{}", r.m, r.a, r.value, r.exact, residual(r))?;
            }
        }
        Format::Text => {
            for r in rows {
                let poly = r.polynomial.as_deref().unwrap_or("unrecognized");
                writeln!(out, "m={} a={}: {} root of {poly}; exact {} (residual {})", r.m, r.a, r.value, r.exact, residual(r))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let rows = build(&[3, 5, 6], None, 60).unwrap();
        let find = |m, a| rows.iter().find(|r| r.m == m && r.a == a).unwrap();
        assert_eq!(find(3, 1).value, "3");
        assert_eq!(find(3, 1).polynomial.as_deref(), Some("x - 3"));
        assert_eq!(find(5, 1).polynomial.as_deref(), Some("x^2 - 5x + 5"));
        assert_eq!(find(5, 2).polynomial.as_deref(), Some("x^2 - 5x + 5"));
        assert_eq!(find(6, 1).value, "1");
    }
}
