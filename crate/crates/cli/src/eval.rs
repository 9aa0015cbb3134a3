//! Single evaluations with canonical renderings: p-adic values as
//! `u*p^v + O(p^{v+N})`, classes mod μ∞ as `(val=v, log=...)`, reals to
//! D - 10 decimals with trailing zeros dropped.

use std::str::FromStr;

use stark_core::arith::{parse_rational, Rational};
use stark_core::cyclotomic::CyclotomicNumber;
use stark_core::gamma::{beta_p, beta_p_pointed, gamma_coleman, gamma_p, jacobi_sum, jacobi_sum_padic, lgamma};
use stark_core::padic::PadicNumber;
use stark_core::real::{beta_real, gamma_real, hurwitz_zeta, stark_unit_real_beta, BigReal, RealContext};

use crate::config::{check_prime, DEFAULT_DIGITS, DEFAULT_PRECISION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Function {
    GammaP,
    GammaColeman,
    Lgamma,
    BetaP,
    BetaPPointed,
    Gamma,
    Beta,
    Hurwitz,
    StarkUnit,
    Jacobi,
}

const NAMES: [(&str, Function); 10] = [
    ("gamma-p", Function::GammaP),
    ("gamma-coleman", Function::GammaColeman),
    ("lgamma", Function::Lgamma),
    ("beta-p", Function::BetaP),
    ("beta-p-pointed", Function::BetaPPointed),
    ("gamma", Function::Gamma),
    ("beta", Function::Beta),
    ("hurwitz", Function::Hurwitz),
    ("stark-unit", Function::StarkUnit),
    ("jacobi", Function::Jacobi),
];

impl FromStr for Function {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        NAMES.iter().find(|(n, _)| *n == s).map(|(_, f)| *f).ok_or_else(|| {
            let names: Vec<_> = NAMES.iter().map(|(n, _)| *n).collect();
            format!("unknown function {s:?}; expected one of {}", names.join(", "))
        })
    }
}

/// Raw arguments of `eval`; which ones are required depends on the function.
#[derive(Clone, Debug, Default)]
pub struct EvalArgs {
    pub p: Option<u64>,
    pub z: Option<String>,
    pub w: Option<String>,
    pub s: Option<String>,
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub i: Option<u64>,
    pub j: Option<u64>,
    pub e: Option<u32>,
    pub precision: Option<u32>,
    pub digits: Option<u32>,
}

fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T, String> {
    v.clone().ok_or_else(|| format!("missing --{name}"))
}

fn rational(v: &Option<String>, name: &str) -> Result<Rational, String> {
    parse_rational(&need(v, name)?).map_err(|e| format!("--{name}: {e}"))
}

/// Decimal rendering to D - 10 places without trailing zeros.
pub fn render_real(x: &BigReal, digits: u32) -> String {
    let s = x.to_decimal(digits.saturating_sub(10).max(1));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn render_cyclotomic(x: &CyclotomicNumber) -> String {
    x.to_string()
}

pub fn evaluate(f: Function, args: &EvalArgs) -> Result<String, String> {
    let n = args.precision.unwrap_or(DEFAULT_PRECISION);
    let d = args.digits.unwrap_or(DEFAULT_DIGITS);
    if !(2..=200).contains(&n) {
        return Err(format!("precision {n} outside 2..=200"));
    }
    if !(20..=2000).contains(&d) {
        return Err(format!("digits {d} outside 20..=2000"));
    }
    let prime = || -> Result<u64, String> {
        let p = need(&args.p, "p")?;
        check_prime(p)?;
        Ok(p)
    };
    let ctx = RealContext::new(d);
    let err = |e: stark_core::error::Error| e.to_string();
    match f {
        Function::GammaP => {
            let p = prime()?;
            Ok(gamma_p(&rational(&args.z, "z")?, p, n).map_err(err)?.render())
        }
        Function::GammaColeman => {
            let p = prime()?;
            let z = rational(&args.z, "z")?;
            let x = PadicNumber::from_rational(&z, p, 2 * n + 8).map_err(err)?;
            Ok(gamma_coleman(&x, n).map_err(err)?.render())
        }
        Function::Lgamma => {
            let p = prime()?;
            let e = args.e.unwrap_or(1);
            let a = PadicNumber::from_rational(&rational(&args.z, "z")?, p, n + e + 8).map_err(err)?;
            Ok(lgamma(&a, e, n).map_err(err)?.value.render())
        }
        Function::BetaP => {
            let p = prime()?;
            Ok(beta_p(&rational(&args.z, "z")?, &rational(&args.w, "w")?, p, n).map_err(err)?.render())
        }
        Function::BetaPPointed => {
            let p = prime()?;
            let v = beta_p_pointed(&rational(&args.z, "z")?, &rational(&args.w, "w")?, p, n).map_err(err)?;
            Ok(v.render())
        }
        Function::Gamma => Ok(render_real(&gamma_real(&rational(&args.z, "z")?, ctx).map_err(err)?, d)),
        Function::Beta => {
            let v = beta_real(&rational(&args.z, "z")?, &rational(&args.w, "w")?, ctx).map_err(err)?;
            Ok(render_real(&v, d))
        }
        Function::Hurwitz => {
            let s = BigReal::from_rational(&rational(&args.s, "s")?, ctx);
            let m = Rational::from_integer(need(&args.m, "m")?.into());
            let a = Rational::from_integer(need(&args.a, "a")?.into());
            Ok(render_real(&hurwitz_zeta(&s, &m, &a).map_err(err)?, d))
        }
        Function::StarkUnit => {
            let v = stark_unit_real_beta(need(&args.a, "a")?, need(&args.m, "m")?, ctx).map_err(err)?;
            Ok(render_real(&v, d))
        }
        Function::Jacobi => {
            let p = prime()?;
            let (m, i, j) = (need(&args.m, "m")?, need(&args.i, "i")?, need(&args.j, "j")?);
            let exact = jacobi_sum(p, m, i, j).map_err(err)?;
            let padic = jacobi_sum_padic(p, m, i, j, n).map_err(err)?;
            Ok(format!("{}\n{}", render_cyclotomic(&exact), padic.render()))
        }
    }
}
