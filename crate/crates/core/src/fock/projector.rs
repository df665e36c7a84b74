use serde::{Deserialize, Serialize};

use super::basis::FockBasis;
use super::config::OrderingScheme;
use crate::sparse::SparseOperator;

/// Which states a relation is tested on: the `margin` outermost sites at both
/// ends of every line sit in their reference occupation, and boson flavor `k`
/// is at most `n_max - headroom[k-1]` on every site.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Projection {
    pub margin: usize,
    pub headroom: Vec<usize>,
}

impl Projection {
    pub fn full(boson_flavors: usize) -> Self {
        Projection { margin: 0, headroom: vec![0; boson_flavors] }
    }

    pub fn uniform(margin: usize, headroom: usize, boson_flavors: usize) -> Self {
        Projection { margin, headroom: vec![headroom; boson_flavors] }
    }

    pub fn is_full(&self) -> bool {
        self.margin == 0 && self.headroom.iter().all(|&h| h == 0)
    }
}

#[derive(Debug, Clone)]
pub struct BulkProjector {
    pub projection: Projection,
    pub keep: Vec<bool>,
}

impl BulkProjector {
    pub fn rank(&self) -> usize {
        self.keep.iter().filter(|&&k| k).count()
    }

    pub fn as_operator(&self) -> SparseOperator {
        let d: Vec<f64> = self.keep.iter().map(|&k| if k { 1.0 } else { 0.0 }).collect();
        SparseOperator::from_real_diagonal(&d)
    }
}

pub fn bulk_projector(basis: &FockBasis, margin: usize, headroom: usize) -> BulkProjector {
    let p = Projection::uniform(margin, headroom, basis.config().boson_flavors);
    bulk_projector_with(basis, &p)
}

pub fn bulk_projector_with(basis: &FockBasis, projection: &Projection) -> BulkProjector {
    let cfg = basis.config();
    let margin = projection.margin.min(cfg.sites);
    let positions = cfg.positions();
    let boundary: Vec<_> = positions[..margin]
        .iter()
        .chain(&positions[cfg.sites - margin..])
        .copied()
        .collect();
    let mut pinned = Vec::new();
    for (slot, m) in basis.fermion_modes().iter().enumerate() {
        if boundary.contains(&m.site) {
            let filled = cfg.ordering(m.line) == OrderingScheme::Sea && m.site.is_negative();
            pinned.push((slot, u8::from(filled)));
        }
    }
    let nf = basis.fermion_modes().len();
    let mut capped = Vec::new();
    for (j, m) in basis.boson_modes().iter().enumerate() {
        if boundary.contains(&m.site) {
            pinned.push((nf + j, 0));
        }
        let room = projection.headroom.get(m.flavor - 1).copied().unwrap_or(0);
        capped.push((nf + j, cfg.n_max as i64 - room as i64));
    }
    let keep = (0..basis.dim())
        .map(|s| {
            let occ = basis.occupations(s);
            pinned.iter().all(|&(slot, v)| occ[slot] == v)
                && capped.iter().all(|&(slot, cap)| (occ[slot] as i64) <= cap)
        })
        .collect();
    BulkProjector { projection: projection.clone(), keep }
}
