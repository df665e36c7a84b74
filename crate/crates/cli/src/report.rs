use std::fmt::Write as _;

use serde::Serialize;

use qaffine::verify::{tally, RelationReport, Status, Tally};

use crate::config::{QSpec, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Run {
    pub label: String,
    pub q: QSpec,
    pub tally: Tally,
    pub relations: Vec<RelationReport>,
}

impl Run {
    pub fn new(label: String, q: QSpec, relations: Vec<RelationReport>) -> Self {
        Run { label, q, tally: tally(&relations), relations }
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub config_hash: String,
    pub config: &'a RunConfig,
    pub tally: Tally,
    pub runs: Vec<Run>,
}

impl<'a> Report<'a> {
    pub fn new(config: &'a RunConfig, runs: Vec<Run>) -> Self {
        let mut t = Tally::default();
        for r in &runs {
            t.pass += r.tally.pass;
            t.fail += r.tally.fail;
            t.not_applicable += r.tally.not_applicable;
        }
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            config_hash: config.hash(),
            config,
            tally: t,
            runs,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.tally.fail == 0
    }

    pub fn markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Verification report\n");
        let _ = writeln!(s, "config hash `{}`\n", self.config_hash);
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} not applicable\n",
            self.tally.pass, self.tally.fail, self.tally.not_applicable
        );
        for run in &self.runs {
            let _ = writeln!(s, "## {}\n", run.label);
            let _ = writeln!(s, "| relation | paper eq. | parameters | residual | projector | pass |");
            let _ = writeln!(s, "|---|---|---|---|---|---|");
            for r in &run.relations {
                let proj = match (&r.projection, r.projector_rank) {
                    (Some(p), Some(k)) if !p.is_full() => {
                        format!("margin {} headroom {:?} (rank {k})", p.margin, p.headroom)
                    }
                    (Some(_), Some(k)) => format!("full (rank {k})"),
                    _ => "none".to_string(),
                };
                let status = match r.status {
                    Status::Pass => "yes",
                    Status::Fail => "**no**",
                    Status::NotApplicable => "n/a",
                };
                let residual = if r.residual.is_nan() { "-".to_string() } else { format!("{:.2e}", r.residual) };
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.id,
                    r.tag,
                    r.params_string(),
                    residual,
                    proj,
                    status
                );
            }
            let _ = writeln!(s);
        }
        s
    }
}
