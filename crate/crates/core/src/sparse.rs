//! Square sparse complex operators on a Fock space.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use sprs::{CsMat, TriMat};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, Debug)]
pub struct SparseOperator {
    mat: CsMat<C64>,
}

impl SparseOperator {
    pub fn zeros(dim: usize) -> Self {
        SparseOperator { mat: CsMat::zero((dim, dim)) }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOperator { mat: CsMat::eye(dim) }
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut indptr = Vec::with_capacity(n + 1);
        let mut indices = Vec::new();
        let mut data = Vec::new();
        indptr.push(0);
        for (i, &v) in diag.iter().enumerate() {
            if v != ZERO {
                indices.push(i);
                data.push(v);
            }
            indptr.push(indices.len());
        }
        SparseOperator { mat: CsMat::new((n, n), indptr, indices, data) }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<C64> = diag.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    /// Duplicate coordinates are summed; exact zeros are dropped.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, C64)>) -> Self {
        let mut tri = TriMat::new((dim, dim));
        for (r, c, v) in triplets {
            tri.add_triplet(r, c, v);
        }
        Self::from_csmat(tri.to_csr())
    }

    fn from_csmat(mat: CsMat<C64>) -> Self {
        let mat = if mat.is_csr() { mat } else { mat.to_csr() };
        let op = SparseOperator { mat };
        if op.mat.data().contains(&ZERO) {
            op.pruned(0.0)
        } else {
            op
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn nnz(&self) -> usize {
        self.mat.nnz()
    }

    pub fn matrix(&self) -> &CsMat<C64> {
        &self.mat
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.mat.get(row, col).copied().unwrap_or(ZERO)
    }

    /// Row-major list of stored entries.
    pub fn triplets(&self) -> Vec<(usize, usize, C64)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (r, row) in self.mat.outer_iterator().enumerate() {
            for (c, &v) in row.iter() {
                out.push((r, c, v));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<C64>> {
        let n = self.dim();
        let mut d = vec![vec![ZERO; n]; n];
        for (r, c, v) in self.triplets() {
            d[r][c] = v;
        }
        d
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim()).map(|i| self.get(i, i)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().iter().all(|&(r, c, _)| r == c)
    }

    pub fn pruned(&self, tol: f64) -> Self {
        let n = self.dim();
        let t = self.triplets().into_iter().filter(|(_, _, v)| v.norm() > tol);
        let mut tri = TriMat::new((n, n));
        for (r, c, v) in t {
            tri.add_triplet(r, c, v);
        }
        SparseOperator { mat: tri.to_csr() }
    }

    pub fn max_abs(&self) -> f64 {
        self.mat.data().iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    pub fn max_abs_diff(&self, other: &SparseOperator) -> f64 {
        (self - other).max_abs()
    }

    pub fn scale(&self, c: C64) -> Self {
        if c == ZERO {
            return Self::zeros(self.dim());
        }
        SparseOperator { mat: self.mat.map(|&v| v * c) }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(C64::new(c, 0.0))
    }

    /// `D * self` for diagonal `D`.
    pub fn scale_rows(&self, d: &[C64]) -> Self {
        let mut m = self.mat.clone();
        for (r, mut row) in m.outer_iterator_mut().enumerate() {
            for (_, v) in row.iter_mut() {
                *v *= d[r];
            }
        }
        Self::from_csmat(m)
    }

    /// `self * D` for diagonal `D`.
    pub fn scale_cols(&self, d: &[C64]) -> Self {
        let mut m = self.mat.clone();
        for mut row in m.outer_iterator_mut() {
            for (c, v) in row.iter_mut() {
                *v *= d[c];
            }
        }
        Self::from_csmat(m)
    }

    /// Zero every column whose flag is false, i.e. `self * P`.
    pub fn restrict_columns(&self, keep: &[bool]) -> Self {
        let n = self.dim();
        Self::from_triplets(n, self.triplets().into_iter().filter(|&(_, c, _)| keep[c]))
    }

    /// `P * self * P`.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        let n = self.dim();
        Self::from_triplets(
            n,
            self.triplets().into_iter().filter(|&(r, c, _)| keep[r] && keep[c]),
        )
    }

    pub fn adjoint(&self) -> Self {
        let t = self.mat.transpose_view().to_csr();
        SparseOperator { mat: t.map(|v| v.conj()) }
    }

    pub fn transpose(&self) -> Self {
        SparseOperator { mat: self.mat.transpose_view().to_csr() }
    }

    pub fn commutator(&self, other: &SparseOperator) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &SparseOperator) -> Self {
        &(self * other) + &(other * self)
    }

    /// `[[x, y]]`: anticommutator when both are odd, commutator otherwise.
    pub fn supercommutator(&self, odd_self: bool, other: &SparseOperator, odd_other: bool) -> Self {
        if odd_self && odd_other {
            self.anticommutator(other)
        } else {
            self.commutator(other)
        }
    }

    /// `self * other - c * other * self`.
    pub fn twisted_commutator(&self, other: &SparseOperator, c: C64) -> Self {
        &(self * other) - &(other * self).scale(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn sum<'a>(dim: usize, ops: impl IntoIterator<Item = &'a SparseOperator>) -> Self {
        Self::from_triplets(dim, ops.into_iter().flat_map(|o| o.triplets()))
    }
}

impl<'a> Add<&'a SparseOperator> for &'a SparseOperator {
    type Output = SparseOperator;
    fn add(self, rhs: &SparseOperator) -> SparseOperator {
        SparseOperator::from_csmat(&self.mat + &rhs.mat)
    }
}

impl<'a> Sub<&'a SparseOperator> for &'a SparseOperator {
    type Output = SparseOperator;
    fn sub(self, rhs: &SparseOperator) -> SparseOperator {
        SparseOperator::from_csmat(&self.mat - &rhs.mat)
    }
}

impl<'a> Mul<&'a SparseOperator> for &'a SparseOperator {
    type Output = SparseOperator;
    fn mul(self, rhs: &SparseOperator) -> SparseOperator {
        SparseOperator::from_csmat(&self.mat * &rhs.mat)
    }
}

impl Neg for &SparseOperator {
    type Output = SparseOperator;
    fn neg(self) -> SparseOperator {
        self.scale_real(-1.0)
    }
}

impl Add for SparseOperator {
    type Output = SparseOperator;
    fn add(self, rhs: SparseOperator) -> SparseOperator {
        &self + &rhs
    }
}

impl Sub for SparseOperator {
    type Output = SparseOperator;
    fn sub(self, rhs: SparseOperator) -> SparseOperator {
        &self - &rhs
    }
}

impl Mul for SparseOperator {
    type Output = SparseOperator;
    fn mul(self, rhs: SparseOperator) -> SparseOperator {
        &self * &rhs
    }
}
