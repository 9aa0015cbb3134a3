use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Refused,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Refused => "refused",
        })
    }
}

/// Parameter tuple of a check. Field order is the sort order of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    /// Sampled or otherwise free-form inputs, e.g. "z=7/25".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn p(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }
    pub fn m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }
    pub fn ij(mut self, i: u64, j: u64) -> Self {
        self.i = Some(i);
        self.j = Some(j);
        self
    }
    pub fn a(mut self, a: u64) -> Self {
        self.a = Some(a);
        self
    }
    pub fn t(mut self, t: u64) -> Self {
        self.t = Some(t);
        self
    }
    pub fn e(mut self, e: u32) -> Self {
        self.e = Some(e);
        self
    }
    pub fn n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }
    pub fn d(mut self, d: u32) -> Self {
        self.d = Some(d);
        self
    }
    pub fn input(mut self, s: impl Into<String>) -> Self {
        self.input = Some(s.into());
        self
    }
}

/// How far apart the two sides of a check were.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Residual {
    /// Exact comparison; no tolerance involved.
    Exact,
    /// Known p-adic valuation of the difference (capped at the working precision).
    Padic { valuation: i64 },
    /// log10 of the absolute (or relative) real error; None for an exact zero.
    Real { log10: Option<f64> },
    /// Nothing was compared (refusals).
    None,
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Exact => f.write_str("exact"),
            Residual::Padic { valuation } => write!(f, "O(p^{valuation})"),
            Residual::Real { log10: Some(x) } => write!(f, "1e{x:.1}"),
            Residual::Real { log10: None } => f.write_str("0"),
            Residual::None => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Params,
    pub status: Status,
    pub residual: Residual,
    /// Observed sign, torsion class or similar, where the check records one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, params: Params, status: Status, residual: Residual) -> Self {
        CheckReport { check: check.into(), params, status, residual, observed: None, detail: None }
    }

    pub fn refused(check: impl Into<String>, params: Params, why: impl Into<String>) -> Self {
        CheckReport::new(check, params, Status::Refused, Residual::None).with_detail(why)
    }

    pub fn observed(mut self, s: impl Into<String>) -> Self {
        self.observed = Some(s.into());
        self
    }

    pub fn with_detail(mut self, s: impl Into<String>) -> Self {
        self.detail = Some(s.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Sort key: check name, then parameter tuple.
    pub fn key(&self) -> (&str, &Params) {
        (&self.check, &self.params)
    }
}
