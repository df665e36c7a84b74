use std::fmt;

use serde::{Deserialize, Serialize};

use super::config::{HalfInt, LatticeConfig};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModeKind {
    Fermion,
    Boson,
}

/// A single oscillator mode. Flavors count from 1, lines from 0 (bottom line).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeId {
    pub kind: ModeKind,
    pub flavor: usize,
    pub line: usize,
    pub site: HalfInt,
}

impl ModeId {
    pub fn fermion(flavor: usize, site: HalfInt) -> Self {
        ModeId { kind: ModeKind::Fermion, flavor, line: 0, site }
    }

    pub fn boson(flavor: usize, site: HalfInt) -> Self {
        ModeId { kind: ModeKind::Boson, flavor, line: 0, site }
    }

    pub fn on_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }

    pub fn at(mut self, site: HalfInt) -> Self {
        self.site = site;
        self
    }

    pub fn is_fermion(&self) -> bool {
        self.kind == ModeKind::Fermion
    }
}

impl fmt::Display for ModeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ModeKind::Fermion => "c",
            ModeKind::Boson => "b",
        };
        write!(f, "{k}{}[line {}, r = {}]", self.flavor, self.line, self.site)
    }
}

/// Occupation-number basis. Fermion slots are ordered by (line, site, flavor)
/// and their occupations form the low binary digits of the state index; the
/// bosons follow as base `n_max+1` digits in the same order.
#[derive(Debug, Clone)]
pub struct FockBasis {
    cfg: LatticeConfig,
    dim: usize,
    fermion_modes: Vec<ModeId>,
    boson_modes: Vec<ModeId>,
    strides: Vec<usize>,
    occ: Vec<u8>,
}

impl FockBasis {
    pub fn new(cfg: &LatticeConfig) -> Result<Self> {
        cfg.validate()?;
        let dim128 = cfg.dimension();
        if dim128 > cfg.dim_cap as u128 {
            return Err(Error::TooLarge { dim: dim128, cap: cfg.dim_cap });
        }
        let dim = dim128 as usize;
        let mut fermion_modes = Vec::with_capacity(cfg.fermion_modes());
        let mut boson_modes = Vec::with_capacity(cfg.boson_modes());
        for line in 0..cfg.lines {
            for site in cfg.positions() {
                for flavor in 1..=cfg.fermion_flavors {
                    fermion_modes.push(ModeId::fermion(flavor, site).on_line(line));
                }
                for flavor in 1..=cfg.boson_flavors {
                    boson_modes.push(ModeId::boson(flavor, site).on_line(line));
                }
            }
        }
        let f = fermion_modes.len();
        let b = boson_modes.len();
        let base = cfg.n_max + 1;
        let mut strides = Vec::with_capacity(f + b);
        let mut s = 1usize;
        for _ in 0..f {
            strides.push(s);
            s *= 2;
        }
        for _ in 0..b {
            strides.push(s);
            s *= base;
        }
        let width = f + b;
        let mut occ = vec![0u8; dim * width];
        for state in 0..dim {
            let mut x = state;
            let row = &mut occ[state * width..(state + 1) * width];
            for slot in row.iter_mut().take(f) {
                *slot = (x % 2) as u8;
                x /= 2;
            }
            for slot in row.iter_mut().skip(f) {
                *slot = (x % base) as u8;
                x /= base;
            }
        }
        Ok(FockBasis { cfg: cfg.clone(), dim, fermion_modes, boson_modes, strides, occ })
    }

    pub fn config(&self) -> &LatticeConfig {
        &self.cfg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fermion_modes(&self) -> &[ModeId] {
        &self.fermion_modes
    }

    pub fn boson_modes(&self) -> &[ModeId] {
        &self.boson_modes
    }

    pub fn width(&self) -> usize {
        self.fermion_modes.len() + self.boson_modes.len()
    }

    pub fn slot(&self, mode: &ModeId) -> Result<usize> {
        let cfg = &self.cfg;
        let (flavors, offset) = match mode.kind {
            ModeKind::Fermion => (cfg.fermion_flavors, 0),
            ModeKind::Boson => (cfg.boson_flavors, self.fermion_modes.len()),
        };
        if mode.flavor == 0 || mode.flavor > flavors || mode.line >= cfg.lines || !cfg.contains(mode.site) {
            return Err(Error::UnknownMode(mode.to_string()));
        }
        let idx = (mode.line * cfg.sites + cfg.site_index(mode.site)) * flavors + mode.flavor - 1;
        Ok(offset + idx)
    }

    pub fn stride(&self, slot: usize) -> usize {
        self.strides[slot]
    }

    pub fn occupations(&self, state: usize) -> &[u8] {
        let w = self.width();
        &self.occ[state * w..(state + 1) * w]
    }

    pub fn occupation_at(&self, state: usize, slot: usize) -> u8 {
        self.occ[state * self.width() + slot]
    }

    pub fn occupation(&self, state: usize, mode: &ModeId) -> Result<u8> {
        Ok(self.occupation_at(state, self.slot(mode)?))
    }

    /// `(-1)^(number of occupied fermion slots below `slot`)`.
    pub fn fermion_sign(&self, state: usize, slot: usize) -> f64 {
        let below = (state as u64) & ((1u64 << slot) - 1);
        if below.count_ones().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    pub fn index_of(&self, occupations: &[u8]) -> usize {
        occupations.iter().zip(&self.strides).map(|(&n, &s)| n as usize * s).sum()
    }
}
