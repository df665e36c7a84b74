use std::path::{Path, PathBuf};

use clap::Args;
use serde::{Deserialize, Serialize};

use qaffine::fock::{CrossLineNumbers, Deformation, LatticeConfig, OrderingScheme, DEFAULT_DIM_CAP};
use qaffine::verify::{NegativeControls, SUITES};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum QSpec {
    Nu(f64),
    Real(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Orderings {
    One(String),
    PerLine(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Controls {
    All(bool),
    Named(Vec<String>),
}

/// Flat JSON configuration; every key is optional and falls back to the
/// default instance.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "M")]
    pub m: Option<usize>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub sites: Option<usize>,
    pub lines: Option<usize>,
    pub nmax: Option<usize>,
    pub ordering: Option<Orderings>,
    pub q: Option<QSpec>,
    pub tol: Option<f64>,
    pub suites: Option<Vec<String>>,
    pub negative_controls: Option<Controls>,
    pub dim_cap: Option<usize>,
    pub compensate_affine_phase: Option<bool>,
    pub cross_line_numbers: Option<String>,
    pub random_q: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ConfigFlags {
    /// JSON configuration file
    #[arg(long, env = "QAFFINE_CONFIG")]
    pub config: Option<PathBuf>,
    #[arg(long = "M", value_name = "M")]
    pub m: Option<usize>,
    #[arg(long = "N", value_name = "N")]
    pub n: Option<usize>,
    #[arg(long)]
    pub sites: Option<usize>,
    #[arg(long)]
    pub lines: Option<usize>,
    #[arg(long)]
    pub nmax: Option<usize>,
    /// `sea` or `empty`; a comma-separated list sets each line
    #[arg(long)]
    pub ordering: Option<String>,
    #[arg(long, conflicts_with = "real_q")]
    pub nu: Option<f64>,
    #[arg(long)]
    pub real_q: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub dim_cap: Option<usize>,
    #[arg(long)]
    pub compensate_affine_phase: bool,
    /// `normal` or `bare`
    #[arg(long)]
    pub cross_line_numbers: Option<String>,
}

/// A fully resolved run; this is what the report hash covers.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub sites: usize,
    pub lines: usize,
    pub nmax: usize,
    pub ordering: Vec<OrderingScheme>,
    pub q: QSpec,
    pub tol: f64,
    pub suites: Vec<String>,
    pub negative_controls: NegativeControls,
    pub dim_cap: usize,
    pub compensate_affine_phase: bool,
    pub cross_line_numbers: CrossLineNumbers,
    pub random_q: usize,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn bad(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

pub fn read_file(path: &Path) -> anyhow::Result<FileConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))
}

fn parse_ordering(s: &str) -> anyhow::Result<OrderingScheme> {
    OrderingScheme::parse(s.trim()).ok_or_else(|| bad(format!("unknown ordering `{s}`")))
}

pub fn parse_controls(names: &[String]) -> anyhow::Result<NegativeControls> {
    names.iter().try_fold(NegativeControls::default(), |acc, n| {
        NegativeControls::parse(n)
            .map(|c| acc.union(c))
            .ok_or_else(|| bad(format!("unknown negative control `{n}`")))
    })
}

impl RunConfig {
    pub fn resolve(
        flags: &ConfigFlags,
        suites: &[String],
        controls: &[String],
        random_q: Option<usize>,
        seed: Option<u64>,
    ) -> anyhow::Result<Self> {
        let file = match &flags.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let ordering = match (&flags.ordering, &file.ordering) {
            (Some(s), _) => s.split(',').map(parse_ordering).collect::<anyhow::Result<Vec<_>>>()?,
            (None, Some(Orderings::One(s))) => vec![parse_ordering(s)?],
            (None, Some(Orderings::PerLine(v))) => v.iter().map(|s| parse_ordering(s)).collect::<anyhow::Result<_>>()?,
            (None, None) => vec![OrderingScheme::Sea],
        };
        let lines = flags.lines.or(file.lines).unwrap_or(ordering.len());
        if ordering.len() > 1 && ordering.len() != lines {
            return Err(bad(format!("{} orderings given for {lines} lines", ordering.len())));
        }
        let q = match (flags.nu, flags.real_q) {
            (Some(nu), _) => QSpec::Nu(nu),
            (_, Some(q)) => QSpec::Real(q),
            _ => file.q.unwrap_or(QSpec::Nu(0.3)),
        };
        let suites = if !suites.is_empty() {
            suites.to_vec()
        } else {
            file.suites.unwrap_or_else(|| SUITES.iter().map(|s| s.to_string()).collect())
        };
        for s in &suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(bad(format!("unknown suite `{s}`")));
            }
        }
        let negative_controls = if !controls.is_empty() {
            parse_controls(controls)?
        } else {
            match file.negative_controls {
                None | Some(Controls::All(false)) => NegativeControls::default(),
                Some(Controls::All(true)) => NegativeControls { flip_q_alpha: true, ..Default::default() },
                Some(Controls::Named(v)) => parse_controls(&v)?,
            }
        };
        let cross = match flags.cross_line_numbers.as_deref().or(file.cross_line_numbers.as_deref()) {
            None | Some("normal") => CrossLineNumbers::Normal,
            Some("bare") => CrossLineNumbers::Bare,
            Some(o) => return Err(bad(format!("unknown cross_line_numbers `{o}`"))),
        };
        Ok(RunConfig {
            m: flags.m.or(file.m).unwrap_or(2),
            n: flags.n.or(file.n).unwrap_or(1),
            sites: flags.sites.or(file.sites).unwrap_or(2),
            lines,
            nmax: flags.nmax.or(file.nmax).unwrap_or(2),
            ordering,
            q,
            tol: flags.tol.or(file.tol).unwrap_or(1e-10),
            suites,
            negative_controls,
            dim_cap: flags.dim_cap.or(file.dim_cap).unwrap_or(DEFAULT_DIM_CAP),
            compensate_affine_phase: flags.compensate_affine_phase || file.compensate_affine_phase.unwrap_or(false),
            cross_line_numbers: cross,
            random_q: random_q.or(file.random_q).unwrap_or(0),
            seed: seed.or(file.seed).unwrap_or(0),
        })
    }

    pub fn deformation(&self) -> Deformation {
        match self.q {
            QSpec::Nu(nu) => Deformation::phase(nu),
            QSpec::Real(q) => Deformation::real(q),
        }
    }

    pub fn lattice(&self) -> LatticeConfig {
        let mut cfg = LatticeConfig::new(self.m, self.n, self.sites)
            .with_lines(self.lines)
            .with_n_max(self.nmax)
            .with_q(self.deformation())
            .with_tol(self.tol)
            .with_dim_cap(self.dim_cap)
            .with_cross_line_numbers(self.cross_line_numbers)
            .with_affine_phase_compensation(self.compensate_affine_phase);
        cfg = if self.ordering.len() == 1 {
            cfg.with_ordering(self.ordering[0])
        } else {
            cfg.with_line_orderings(self.ordering.clone())
        };
        cfg
    }

    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_string(self).expect("config serializes");
        format!("{:x}", Sha256::digest(json.as_bytes()))
    }
}
