//! Validated run configuration. Every report carries it verbatim together
//! with its SHA-256, so a report line can be reproduced from itself.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};
use stark_core::arith::is_prime;

/// Conductor bounds used when `--m` is not given.
pub const QUICK_MAX_M: u64 = 12;
pub const FULL_MAX_M: u64 = 30;
pub const DEFAULT_PRIMES: [u64; 3] = [3, 5, 7];
pub const DEFAULT_PRECISION: u32 = 12;
pub const DEFAULT_DIGITS: u32 = 60;
pub const QUICK_SAMPLES: usize = 12;
pub const FULL_SAMPLES: usize = 100;

const MAX_M: u64 = 500;
const MAX_PRIME: u64 = 1_000_003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PadicCore,
    LgammaIdentities,
    GammaFunctionalEquations,
    Btog2,
    BetaProducts,
    Hurwitz,
    AlgPrime,
    RecExact,
    RecModRoots,
    GrossKoblitz,
    All,
}

impl Suite {
    /// Every concrete suite, in output order.
    pub const ALL: [Suite; 10] = [
        Suite::PadicCore,
        Suite::LgammaIdentities,
        Suite::GammaFunctionalEquations,
        Suite::Btog2,
        Suite::BetaProducts,
        Suite::Hurwitz,
        Suite::AlgPrime,
        Suite::RecExact,
        Suite::RecModRoots,
        Suite::GrossKoblitz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PadicCore => "padic-core",
            Suite::LgammaIdentities => "lgamma-identities",
            Suite::GammaFunctionalEquations => "gamma-functional-equations",
            Suite::Btog2 => "btog2",
            Suite::BetaProducts => "beta-products",
            Suite::Hurwitz => "hurwitz",
            Suite::AlgPrime => "alg-prime",
            Suite::RecExact => "rec-exact",
            Suite::RecModRoots => "rec-mod-roots",
            Suite::GrossKoblitz => "gross-koblitz",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL.to_vec(),
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}; expected one of {}, all", names.join(", "))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Tsv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json, tsv or text")),
        }
    }
}

/// Parses a conductor selection: `a..b` or `a..=b` (both inclusive), a
/// comma list, or a single `N` meaning `3..=N`.
pub fn parse_conductors(s: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad conductor {t:?} in {s:?}"));
    let mut out: Vec<u64> = if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(format!("empty conductor range {s:?}"));
        }
        (lo..=hi).collect()
    } else if s.contains(',') {
        s.split(',').map(num).collect::<Result<_, _>>()?
    } else {
        (3..=num(s)?).collect()
    };
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(format!("no conductors in {s:?}"));
    }
    if let Some(bad) = out.iter().find(|&&m| !(3..=MAX_M).contains(&m)) {
        return Err(format!("conductor {bad} outside 3..={MAX_M}"));
    }
    Ok(out)
}

/// Parses a comma-separated list of odd primes.
pub fn parse_primes(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for t in s.split(',') {
        let p: u64 = t.trim().parse().map_err(|_| format!("bad prime {t:?}"))?;
        check_prime(p)?;
        out.push(p);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn check_prime(p: u64) -> Result<(), String> {
    if p == 2 || p > MAX_PRIME || !is_prime(p) {
        return Err(format!("{p} is not an odd prime below {MAX_PRIME}"));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub primes: Vec<u64>,
    #[serde(rename = "N")]
    pub precision: u32,
    #[serde(rename = "D")]
    pub digits: u32,
    pub conductors: Vec<u64>,
    pub i: Option<u64>,
    pub j: Option<u64>,
    pub a: Option<u64>,
    pub quick: bool,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    /// Validates raw settings; `None` fields take the documented defaults.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        suite: Suite,
        primes: Option<&str>,
        precision: Option<u32>,
        digits: Option<u32>,
        conductors: Option<&str>,
        (i, j, a): (Option<u64>, Option<u64>, Option<u64>),
        quick: bool,
        samples: Option<usize>,
        seed: u64,
        format: Format,
    ) -> Result<Self, String> {
        let primes = match primes {
            Some(s) => parse_primes(s)?,
            None => DEFAULT_PRIMES.to_vec(),
        };
        let precision = precision.unwrap_or(DEFAULT_PRECISION);
        if !(2..=200).contains(&precision) {
            return Err(format!("precision {precision} outside 2..=200"));
        }
        let digits = digits.unwrap_or(DEFAULT_DIGITS);
        if !(20..=2000).contains(&digits) {
            return Err(format!("digits {digits} outside 20..=2000"));
        }
        let conductors = match conductors {
            Some(s) => parse_conductors(s)?,
            None => (3..=if quick { QUICK_MAX_M } else { FULL_MAX_M }).collect(),
        };
        let samples = samples.unwrap_or(if quick { QUICK_SAMPLES } else { FULL_SAMPLES });
        if samples == 0 || samples > 100_000 {
            return Err(format!("samples {samples} outside 1..=100000"));
        }
        for (name, v) in [("i", i), ("j", j), ("a", a)] {
            if v == Some(0) {
                return Err(format!("--{name} must be positive"));
            }
        }
        Ok(RunConfig { suite, primes, precision, digits, conductors, i, j, a, quick, samples, seed, format })
    }

    /// Hex SHA-256 of the canonical JSON serialization.
    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("config serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conductor_syntax() {
        assert_eq!(parse_conductors("5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_conductors("3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_conductors("3..=5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_conductors("7,5,7").unwrap(), vec![5, 7]);
        assert!(parse_conductors("2..5").is_err());
        assert!(parse_conductors("9..4").is_err());
        assert!(parse_conductors("x").is_err());
    }

    #[test]
    fn primes_are_validated() {
        assert_eq!(parse_primes("7,3").unwrap(), vec![3, 7]);
        assert!(parse_primes("2").is_err());
        assert!(parse_primes("9").is_err());
    }

    #[test]
    fn hash_tracks_every_field() {
        let base = RunConfig::new(Suite::Btog2, None, None, None, None, (None, None, None), true, None, 1, Format::Json)
            .unwrap();
        let mut other = base.clone();
        other.seed = 2;
        assert_ne!(base.hash(), other.hash());
        assert_eq!(base.hash(), base.clone().hash());
        assert_eq!(base.hash().len(), 64);
    }
}
