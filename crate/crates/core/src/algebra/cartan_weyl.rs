//! Loop-algebra (Cartan-Weyl) generators built from plain oscillators.

use super::cartan::{CartanData, Root, Weight};
use crate::error::Result;
use crate::fock::{boson_annihilate, fermion_annihilate, FockBasis, HalfInt, ModeId};
use crate::oscillators::normal_ordered_occupation;
use crate::sparse::SparseOperator;

fn mode(w: Weight, line: usize, r: HalfInt) -> ModeId {
    match w {
        Weight::Fermion(i) => ModeId::fermion(i, r).on_line(line),
        Weight::Boson(k) => ModeId::boson(k, r).on_line(line),
    }
}

fn lower(basis: &FockBasis, m: &ModeId) -> Result<SparseOperator> {
    if m.is_fermion() {
        fermion_annihilate(basis, m)
    } else {
        boson_annihilate(basis, m)
    }
}

/// `sum_r X_w+(r) X_v(r + m)` over every line, truncated to the lattice.
fn bilinear(basis: &FockBasis, w: Weight, v: Weight, m: i32) -> Result<SparseOperator> {
    let cfg = basis.config();
    let mut terms = Vec::new();
    for line in 0..cfg.lines {
        for r in cfg.positions() {
            let s = r.shift(m);
            if !cfg.contains(s) {
                continue;
            }
            let x = lower(basis, &mode(w, line, r))?.adjoint();
            let y = lower(basis, &mode(v, line, s))?;
            terms.push(&x * &y);
        }
    }
    if terms.is_empty() {
        log::warn!("bilinear {w}/{v} at mode {m} has no terms on {} sites", cfg.sites);
    }
    Ok(SparseOperator::sum(basis.dim(), terms.iter()))
}

/// `e_root^m`.
pub fn root_generator(basis: &FockBasis, root: &Root, m: i32) -> Result<SparseOperator> {
    bilinear(basis, root.plus, root.minus, m)
}

/// `h_a^m`; normal-ordered numbers at `m = 0`.
pub fn cartan_generator(basis: &FockBasis, cartan: &CartanData, a: usize, m: i32) -> Result<SparseOperator> {
    let cfg = basis.config();
    let coeffs = cartan.cartan_coefficients(a);
    if m != 0 {
        let mut out = SparseOperator::zeros(basis.dim());
        for (w, c) in coeffs {
            out = &out + &bilinear(basis, w, w, m)?.scale_real(c as f64);
        }
        return Ok(out);
    }
    let mut diag = vec![0.0; basis.dim()];
    for line in 0..cfg.lines {
        for r in cfg.positions() {
            for &(w, c) in &coeffs {
                let md = mode(w, line, r);
                let n = normal_ordered_occupation(basis, &md, cfg.ordering(line))?;
                for (d, v) in diag.iter_mut().zip(n) {
                    *d += c as f64 * v;
                }
            }
        }
    }
    Ok(SparseOperator::from_real_diagonal(&diag))
}
