use super::basis::{FockBasis, ModeId, ModeKind};
use crate::error::{Error, Result};
use crate::sparse::{SparseOperator, C64};

fn expect_kind(mode: &ModeId, kind: ModeKind) -> Result<()> {
    if mode.kind != kind {
        return Err(Error::UnknownMode(format!("{mode} is not a {kind:?} mode")));
    }
    Ok(())
}

/// Jordan-Wigner annihilator `c` for a fermion mode.
pub fn fermion_annihilate(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    expect_kind(mode, ModeKind::Fermion)?;
    let slot = basis.slot(mode)?;
    let stride = basis.stride(slot);
    let entries = (0..basis.dim())
        .filter(|&s| basis.occupation_at(s, slot) == 1)
        .map(|s| (s - stride, s, C64::new(basis.fermion_sign(s, slot), 0.0)));
    Ok(SparseOperator::from_triplets(basis.dim(), entries))
}

pub fn fermion_create(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    Ok(fermion_annihilate(basis, mode)?.adjoint())
}

/// Truncated bosonic lowering operator with matrix element `weight(n)` on `|n>`.
pub fn boson_lower_with(
    basis: &FockBasis,
    mode: &ModeId,
    weight: impl Fn(u8) -> f64,
) -> Result<SparseOperator> {
    expect_kind(mode, ModeKind::Boson)?;
    let slot = basis.slot(mode)?;
    let stride = basis.stride(slot);
    let entries = (0..basis.dim()).filter_map(|s| {
        let n = basis.occupation_at(s, slot);
        (n > 0).then(|| (s - stride, s, C64::new(weight(n), 0.0)))
    });
    Ok(SparseOperator::from_triplets(basis.dim(), entries))
}

/// `d|n> = sqrt(n)|n-1>`.
pub fn boson_annihilate(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    boson_lower_with(basis, mode, |n| (n as f64).sqrt())
}

pub fn boson_create(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    Ok(boson_annihilate(basis, mode)?.adjoint())
}

/// Bare occupation numbers of a mode, one per basis state.
pub fn occupation_vector(basis: &FockBasis, mode: &ModeId) -> Result<Vec<f64>> {
    let slot = basis.slot(mode)?;
    Ok((0..basis.dim()).map(|s| basis.occupation_at(s, slot) as f64).collect())
}

pub fn number(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    Ok(SparseOperator::from_real_diagonal(&occupation_vector(basis, mode)?))
}
