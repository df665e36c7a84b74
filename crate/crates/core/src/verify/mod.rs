//! Relation checks and the suites built on them.

mod adq;
mod catalog;
mod central;
mod classical;
mod coproduct;
mod cw;
mod quantum;
mod report;
mod serre;
mod undeformed;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use adq::{ad_q, ad_q_oracle, script_e};
pub use catalog::{entries_for, lookup, CatalogEntry, CATALOG, SUITES};
pub use report::{
    check_identity, domain_residual, sandwich_residual, tally, worst_residual, Expectation, Relation, RelationReport,
    Status, Tally,
};

use crate::algebra::{chevalley_generators, GeneratorOptions, GeneratorSet, Sign};
use crate::error::{Error, Result};
use crate::fock::{bulk_projector_with, BulkProjector, Deformation, FockBasis, LatticeConfig, Projection};

/// Deliberate corruptions used to show that the suites can fail.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct NegativeControls {
    /// Use `q_a^-1` wherever `q_a` enters.
    pub flip_q_alpha: bool,
    /// Leave out the Fermi-point constant of the affine Cartan piece.
    pub drop_affine_delta: bool,
    /// Give the bosonic disorder strings the fermionic base sign.
    pub flip_disorder_sign: bool,
}

impl NegativeControls {
    pub fn any(&self) -> bool {
        self.flip_q_alpha || self.drop_affine_delta || self.flip_disorder_sign
    }

    pub fn parse(name: &str) -> Option<Self> {
        let mut c = NegativeControls::default();
        match name {
            "flip-q-alpha" => c.flip_q_alpha = true,
            "drop-affine-delta" => c.drop_affine_delta = true,
            "flip-disorder-sign" => c.flip_disorder_sign = true,
            _ => return None,
        }
        Some(c)
    }

    pub fn union(self, o: Self) -> Self {
        NegativeControls {
            flip_q_alpha: self.flip_q_alpha || o.flip_q_alpha,
            drop_affine_delta: self.drop_affine_delta || o.drop_affine_delta,
            flip_disorder_sign: self.flip_disorder_sign || o.flip_disorder_sign,
        }
    }
}

fn generator_options(controls: NegativeControls, deformed: bool) -> GeneratorOptions {
    let mut o = if deformed { GeneratorOptions::deformed() } else { GeneratorOptions::undeformed() };
    o.drop_affine_delta = controls.drop_affine_delta;
    o.disorder.flip_boson_base = controls.flip_disorder_sign;
    o
}

/// Everything the suites share for one configuration.
pub struct Workspace {
    pub cfg: LatticeConfig,
    pub basis: FockBasis,
    pub controls: NegativeControls,
    pub deformed: GeneratorSet,
    pub undeformed: GeneratorSet,
    projectors: Mutex<HashMap<Projection, Arc<BulkProjector>>>,
}

impl Workspace {
    pub fn new(cfg: &LatticeConfig) -> Result<Self> {
        Self::with_controls(cfg, NegativeControls::default())
    }

    pub fn with_controls(cfg: &LatticeConfig, controls: NegativeControls) -> Result<Self> {
        let basis = FockBasis::new(cfg)?;
        let deformed = chevalley_generators(&basis, &generator_options(controls, true))?;
        let undeformed = chevalley_generators(&basis, &generator_options(controls, false))?;
        Ok(Workspace {
            cfg: cfg.clone(),
            basis,
            controls,
            deformed,
            undeformed,
            projectors: Mutex::new(HashMap::new()),
        })
    }

    pub fn generator_options(&self, deformed: bool) -> GeneratorOptions {
        generator_options(self.controls, deformed)
    }

    pub fn tol(&self) -> f64 {
        self.cfg.tol
    }

    pub fn q_alpha(&self, alpha: usize) -> Deformation {
        let q = self.deformed.cartan.q_alpha(&self.cfg.q, alpha);
        if self.controls.flip_q_alpha {
            q.inverse()
        } else {
            q
        }
    }

    pub fn q_alpha_coproduct(&self, alpha: usize) -> Deformation {
        let q = self.deformed.cartan.q_alpha_coproduct(&self.cfg.q, alpha);
        if self.controls.flip_q_alpha {
            q.inverse()
        } else {
            q
        }
    }

    /// Margin 1 when the affine node enters; per-flavor headroom equal to
    /// the number of ladder factors in `word` that raise that flavor.
    pub fn projection_for(&self, word: &[(usize, Sign)]) -> Projection {
        let c = &self.deformed.cartan;
        let mut headroom = vec![0; c.boson_flavors];
        if word.len() > 1 {
            for &(alpha, sign) in word {
                if let Some(k) = c.raised_boson(alpha, sign) {
                    headroom[k - 1] += 1;
                }
            }
        }
        let margin = usize::from(word.iter().any(|&(a, _)| a == 0));
        Projection { margin, headroom }
    }

    pub fn projector(&self, p: &Projection) -> Arc<BulkProjector> {
        let mut cache = self.projectors.lock().expect("projector cache poisoned");
        cache.entry(p.clone()).or_insert_with(|| Arc::new(bulk_projector_with(&self.basis, p))).clone()
    }

    pub fn run_suite(&self, suite: &str) -> Result<Vec<RelationReport>> {
        match suite {
            "oscillators" => crate::oscillators::suite_oscillators(&self.cfg),
            "braiding" => crate::anyons::suite_braiding(&self.cfg),
            "quantum" => Ok(self.quantum()),
            "serre" => Ok(self.serre()),
            "undeformed" => Ok(self.undeformed_suite()),
            "coproduct" => self.coproduct(),
            "classical-limit" => self.classical_limit(),
            "central-charge" => self.central_charge(),
            "cartan-weyl" => self.cartan_weyl(),
            other => Err(Error::Config(format!("unknown suite `{other}`"))),
        }
    }

    pub fn run_all(&self) -> Result<Vec<RelationReport>> {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(self.run_suite(s)?);
        }
        Ok(out)
    }
}

pub fn suite_quantum(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Ok(Workspace::new(cfg)?.quantum())
}

pub fn suite_serre(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Ok(Workspace::new(cfg)?.serre())
}

pub fn suite_undeformed(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Ok(Workspace::new(cfg)?.undeformed_suite())
}

pub fn suite_coproduct(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Workspace::new(cfg)?.coproduct()
}

pub fn suite_classical_limit(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Workspace::new(cfg)?.classical_limit()
}

pub fn suite_central_charge(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Workspace::new(cfg)?.central_charge()
}

pub fn suite_cartan_weyl(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    Workspace::new(cfg)?.cartan_weyl()
}

pub use crate::anyons::suite_braiding;
pub use crate::oscillators::suite_oscillators;
