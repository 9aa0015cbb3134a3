//! Parameter grids for the verification suites and their parallel
//! execution. Jobs are built sequentially (all sampling happens here), run
//! as a parallel map, and merged in a fixed order.

use num_bigint::BigInt;
use rayon::prelude::*;
use stark_core::arith::{admissible_residues, gcd, pow_p, rat, Rational};
use stark_core::reciprocity::checks::*;
use stark_core::reciprocity::identities::*;
use stark_core::reciprocity::CheckReport;

use crate::config::{RunConfig, Suite};
use crate::sample::Sampler;

type Job = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>;

fn one(f: impl Fn() -> CheckReport + Send + Sync + 'static) -> Job {
    Box::new(move || vec![f()])
}

/// Deepest level used for the J_X convergence check.
pub const JX_LEVELS: u32 = 4;
/// Number of distinct units c in the LΓ scaling check.
pub const SCALING_UNITS: usize = 20;
/// Bernoulli recurrence depth for the padic-core suite.
pub const BERNOULLI_DEPTH: usize = 60;
/// Known integer Stark units u(σ_a) for conductor m: (a, m, value).
pub const STARK_SPECIAL: [(u64, u64, i64); 3] = [(1, 3, 3), (1, 4, 2), (1, 6, 1)];
/// Digits used by the transcendence sentinel.
pub const SENTINEL_DIGITS: u32 = 100;

fn pairs(m: u64, cfg: &RunConfig) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for i in 1..m {
        for j in 1..m {
            if i + j == m || cfg.i.is_some_and(|x| x != i) || cfg.j.is_some_and(|x| x != j) {
                continue;
            }
            out.push((i, j));
        }
    }
    out
}

fn a_filter(cfg: &RunConfig, a: u64) -> bool {
    cfg.a.is_none_or(|x| x == a)
}

/// First `count` integers ≥ 2 prime to p.
fn small_units(p: u64, count: usize) -> Vec<BigInt> {
    (2u64..).filter(|c| c % p != 0).take(count).map(BigInt::from).collect()
}

fn padic_core(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let mut jobs: Vec<Job> = vec![one(|| check_bernoulli_recurrence(BERNOULLI_DEPTH))];
    for &p in &cfg.primes {
        let mut s = Sampler::new(cfg.seed, 1, p);
        for _ in 0..cfg.samples {
            let z = s.rational_in(-3, 3);
            let (x, y) = (s.unit_rational(), s.unit_rational());
            let u = s.unit_rational();
            let small = s.rational_in(1, 3);
            let w = s.unit_rational();
            let (z1, z2) = (s.rational_in(-2, 2), s.rational_in(-2, 2));
            jobs.push(one(move || check_star_decomposition(&z, p, n)));
            jobs.push(one(move || check_log_homomorphism(&x, &y, p, n)));
            jobs.push(one(move || check_exp_log(&u, p, n)));
            jobs.push(one(move || check_log_exp(&small, p, n)));
            jobs.push(one(move || check_teichmuller_order(&w, p, n)));
            if z1.clone() + z2.clone() != Rational::from_integer(0.into()) {
                jobs.push(one(move || check_exp_extended_homomorphism(&z1, &z2, p, n)));
            }
        }
    }
    jobs
}

fn lgamma_identities(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let mut jobs: Vec<Job> = Vec::new();
    for &p in &cfg.primes {
        let mut s = Sampler::new(cfg.seed, 2, p);
        let units = small_units(p, SCALING_UNITS.min(cfg.samples));
        for e in 1..=3u32 {
            for k in 0..cfg.samples {
                let a = s.unit_int(e + 6);
                let c = units[k % units.len()].clone();
                let (a1, a2, a3, a4) = (a.clone(), a.clone(), a.clone(), a);
                jobs.push(one(move || check_lgamma_reflection(&a1, p, e, n)));
                jobs.push(one(move || check_lgamma_shift(&a2, p, e, n)));
                jobs.push(one(move || check_lgamma_scaling(&a3, &c, p, e, n)));
                jobs.push(one(move || check_lgamma_truncation(&a4, p, e, n)));
            }
        }
        // J_X convergence is the expensive one; a quarter of the samples.
        for e in 1..=3u32 {
            for _ in 0..cfg.samples.div_ceil(4) {
                let a = s.unit_int(e + 4);
                jobs.push(one(move || check_jx_convergence(&a, p, e, JX_LEVELS, n)));
            }
        }
    }
    jobs
}

fn gamma_functional_equations(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let mut jobs: Vec<Job> = Vec::new();
    for &p in &cfg.primes {
        let mut s = Sampler::new(cfg.seed, 3, p);
        for k in 0..cfg.samples {
            let z = s.int_below_pk(n + 4);
            jobs.push(one(move || check_morita_reflection(&z, p, n)));
            let kk = 1 + (k as u32 % 8);
            let a = s.int_below_pk(n + 4);
            let b = &a + pow_p(p, kk) * s.int_below_pk(4);
            jobs.push(one(move || check_morita_continuity(&a, &b, kk, p)));
            let v = -(s.small(1, 3) as i32);
            let z = s.with_valuation(v);
            let (z1, z2, z3, z4) = (z.clone(), z.clone(), z.clone(), z.clone());
            jobs.push(one(move || check_gamma_ext_shift(&z1, p, n)));
            jobs.push(one(move || check_gamma_ext_reflection(&z2, p, n)));
            jobs.push(one(move || check_beta_duplication(&z3, p, n)));
            for m in [2u64, 3] {
                let zm = z4.clone();
                jobs.push(one(move || check_gamma_ext_multiplication(&zm, m, p, n)));
            }
            jobs.push(one(move || check_gamma_ext_multiplication(&z, p, p, n)));
            let w = s.rational_in(-3, 0);
            let w2 = w.clone();
            jobs.push(one(move || check_coleman_bridge(&w, p, n)));
            jobs.push(one(move || check_coleman_normalization(&w2, p, n)));
        }
    }
    jobs
}

fn btog2(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let mut jobs: Vec<Job> = Vec::new();
    for &p in &cfg.primes {
        for &m in &cfg.conductors {
            for (i, j) in pairs(m, cfg) {
                jobs.push(one(move || check_btog2(p, m, i, j, n)));
                jobs.push(one(move || check_bpvsbc_scalar(p, m, i, j, n)));
            }
        }
    }
    jobs
}

fn beta_products(cfg: &RunConfig) -> Vec<Job> {
    let d = cfg.digits;
    let mut jobs: Vec<Job> = vec![one(move || check_beta_special_value(d))];
    for &m in &cfg.conductors {
        for a in (1..m).filter(|&a| gcd(a, m) == 1 && a_filter(cfg, a)) {
            jobs.push(one(move || check_beta_product(a, m, d)));
            jobs.push(one(move || check_gamma_reflection_real(a, m, d)));
            jobs.push(one(move || check_gamma_duplication_real(a, m, d)));
        }
    }
    jobs
}

fn hurwitz(cfg: &RunConfig) -> Vec<Job> {
    let d = cfg.digits;
    let mut jobs: Vec<Job> = STARK_SPECIAL
        .iter()
        .map(|&(a, m, v)| one(move || check_stark_special_value(a, m, v, d)))
        .collect();
    for &m in &cfg.conductors {
        for a in (1..m).filter(|&a| a_filter(cfg, a)) {
            jobs.push(one(move || check_hurwitz_at_zero(m, a, d)));
            jobs.push(one(move || check_hurwitz_derivative(m, a, d)));
        }
        for a in admissible_residues(m).into_iter().filter(|&a| a_filter(cfg, a)) {
            jobs.push(one(move || check_stark_routes(a, m, d)));
        }
    }
    jobs
}

fn alg_prime(cfg: &RunConfig) -> Vec<Job> {
    let d = cfg.digits;
    let mut jobs: Vec<Job> = vec![one(move || check_alg_prime_sentinel(d.max(SENTINEL_DIGITS)))];
    for &m in &cfg.conductors {
        for a in admissible_residues(m).into_iter().filter(|&a| a_filter(cfg, a)) {
            jobs.push(one(move || check_alg_prime(m, a, d)));
        }
    }
    jobs
}

fn rec_exact(cfg: &RunConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for &m in &cfg.conductors {
        for t in (1..m).filter(|&t| gcd(t, m) == 1) {
            jobs.push(one(move || check_rec_exact(m, t)));
        }
    }
    jobs
}

fn rec_mod_roots(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let a = cfg.a;
    let mut jobs: Vec<Job> = Vec::new();
    for &p in &cfg.primes {
        for &m in cfg.conductors.iter().filter(|&&m| m % p != 0) {
            jobs.push(Box::new(move || {
                let mut out = check_rec_mod_roots(m, p, n);
                if let Some(a) = a {
                    out.retain(|r| r.params.a.is_none_or(|x| x == a));
                }
                out
            }));
        }
    }
    jobs
}

fn gross_koblitz(cfg: &RunConfig) -> Vec<Job> {
    let n = cfg.precision;
    let mut jobs: Vec<Job> = Vec::new();
    for &p in &cfg.primes {
        for &m in cfg.conductors.iter().filter(|&&m| (p - 1) % m == 0) {
            for (i, j) in pairs(m, cfg) {
                jobs.push(one(move || check_gross_koblitz_shadow(p, m, i, j, n)));
            }
        }
    }
    jobs
}

fn jobs_for(suite: Suite, cfg: &RunConfig) -> Vec<Job> {
    match suite {
        Suite::PadicCore => padic_core(cfg),
        Suite::LgammaIdentities => lgamma_identities(cfg),
        Suite::GammaFunctionalEquations => gamma_functional_equations(cfg),
        Suite::Btog2 => btog2(cfg),
        Suite::BetaProducts => beta_products(cfg),
        Suite::Hurwitz => hurwitz(cfg),
        Suite::AlgPrime => alg_prime(cfg),
        Suite::RecExact => rec_exact(cfg),
        Suite::RecModRoots => rec_mod_roots(cfg),
        Suite::GrossKoblitz => gross_koblitz(cfg),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

/// Runs the configured suite(s). The result is in suite order, then sorted
/// by check name and parameter tuple, independent of scheduling.
pub fn run(cfg: &RunConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for suite in cfg.suite.expand() {
        let jobs = jobs_for(suite, cfg);
        let mut reports: Vec<CheckReport> = jobs.par_iter().flat_map_iter(|job| job()).collect();
        reports.sort_by(|x, y| x.key().cmp(&y.key()));
        out.extend(reports);
    }
    out
}

/// Fractions r with denominator m on which the Frobenius at p acts, grouped
/// into orbits of r ↦ ⟨p r⟩.
pub fn frobenius_orbits(p: u64, m: u64) -> Vec<Vec<Rational>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut orbits = Vec::new();
    for a in (1..m).filter(|&a| gcd(a, m) == 1) {
        let start = rat(a as i64, m as i64);
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        seen.insert(start.clone());
        let mut r = stark_core::reciprocity::frobenius_on_fraction(p, &start, 1);
        while r != start {
            seen.insert(r.clone());
            orbit.push(r.clone());
            r = stark_core::reciprocity::frobenius_on_fraction(p, &r, 1);
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Format;

    fn cfg(suite: Suite, m: &str) -> RunConfig {
        RunConfig::new(suite, Some("5"), None, None, Some(m), (None, None, None), true, Some(2), 9, Format::Json).unwrap()
    }

    #[test]
    fn grids_have_the_expected_size() {
        // m = 3: (1,1), (2,2); two checks each.
        assert_eq!(jobs_for(Suite::Btog2, &cfg(Suite::Btog2, "3")).len(), 4);
        // φ(5)/2 = 2 units plus the sentinel.
        assert_eq!(jobs_for(Suite::AlgPrime, &cfg(Suite::AlgPrime, "5,5")).len(), 3);
    }

    #[test]
    fn orbits_partition_the_units() {
        let orbits = frobenius_orbits(3, 7);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 6);
        assert_eq!(frobenius_orbits(7, 3).len(), 2);
    }

    #[test]
    fn reports_are_sorted_and_reproducible() {
        let c = cfg(Suite::RecExact, "8");
        let a = run(&c);
        assert_eq!(a, run(&c));
        assert!(a.windows(2).all(|w| w[0].key() <= w[1].key()));
        assert!(a.iter().all(|r| r.passed()));
    }
}
