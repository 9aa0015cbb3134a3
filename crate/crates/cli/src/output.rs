use std::io::{self, Write};

use serde::Serialize;
use stark_core::reciprocity::{CheckReport, Params, Status};

use crate::config::{Format, RunConfig};

#[derive(Serialize)]
struct Line<'a> {
    #[serde(flatten)]
    report: &'a CheckReport,
    config_hash: &'a str,
    config: &'a RunConfig,
}

/// "p=5 m=3 i=1 j=1 N=12".
pub fn render_params(p: &Params) -> String {
    let mut parts = Vec::new();
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            parts.push(format!("{k}={v}"));
        }
    };
    push("p", p.p.map(|x| x.to_string()));
    push("m", p.m.map(|x| x.to_string()));
    push("i", p.i.map(|x| x.to_string()));
    push("j", p.j.map(|x| x.to_string()));
    push("a", p.a.map(|x| x.to_string()));
    push("t", p.t.map(|x| x.to_string()));
    push("e", p.e.map(|x| x.to_string()));
    push("N", p.n.map(|x| x.to_string()));
    push("D", p.d.map(|x| x.to_string()));
    if let Some(s) = &p.input {
        parts.push(s.clone());
    }
    parts.join(" ")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub refused: usize,
}

impl Tally {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut t = Tally::default();
        for r in reports {
            match r.status {
                Status::Pass => t.passed += 1,
                Status::Fail => t.failed += 1,
                Status::Refused => t.refused += 1,
            }
        }
        t
    }
}

pub fn write_reports(out: &mut impl Write, reports: &[CheckReport], cfg: &RunConfig) -> io::Result<()> {
    let hash = cfg.hash();
    match cfg.format {
        Format::Json => {
            for report in reports {
                let line = Line { report, config_hash: &hash, config: cfg };
                serde_json::to_writer(&mut *out, &line).map_err(io::Error::other)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Tsv => {
            writeln!(out, "check\tparams\tstatus\tresidual\tobserved\tdetail\tconfig_hash")?;
            for r in reports {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{hash}",
                    r.check,
                    render_params(&r.params),
                    r.status,
                    r.residual,
                    r.observed.as_deref().unwrap_or("-"),
                    r.detail.as_deref().unwrap_or("-").replace('\t', " "),
                )?;
            }
        }
        Format::Text => {
            for r in reports {
                write!(out, "{:<7} {} [{}] residual {}", r.status.to_string().to_uppercase(), r.check, render_params(&r.params), r.residual)?;
                if let Some(o) = &r.observed {
                    write!(out, " observed {o}")?;
                }
                if let Some(d) = &r.detail {
                    write!(out, " ({d})")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
