use std::collections::HashMap;

use super::cartan::{CartanData, Sign};
use crate::anyons::{anyon_with, AnyonFamily, DisorderOptions, Region};
use crate::error::Result;
use crate::fock::{
    boson_annihilate, fermion_annihilate, occupation_vector, Deformation, FockBasis, HalfInt, ModeId, ModeKind,
    OrderingScheme,
};
use crate::oscillators::{normal_ordering_offset, q_boson_annihilate};
use crate::sparse::{SparseOperator, C64};

#[derive(Debug, Clone, Default)]
pub struct GeneratorOptions {
    /// Anyons and q-bosons instead of plain oscillators.
    pub deformed: bool,
    /// Control: leave out the Fermi-point constant of the affine Cartan piece.
    pub drop_affine_delta: bool,
    pub disorder: DisorderOptions,
}

impl GeneratorOptions {
    pub fn deformed() -> Self {
        GeneratorOptions { deformed: true, ..Default::default() }
    }

    pub fn undeformed() -> Self {
        GeneratorOptions::default()
    }

    pub fn in_region(mut self, region: Region) -> Self {
        self.disorder.region = Some(region);
        self
    }
}

/// The contribution of one lattice cell to a generator.
#[derive(Debug, Clone)]
pub struct LocalPiece {
    pub line: usize,
    pub site: HalfInt,
    pub h: SparseOperator,
    pub e_plus: SparseOperator,
    pub e_minus: SparseOperator,
}

#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub cartan: CartanData,
    pub q: Deformation,
    pub deformed: bool,
    pub h: Vec<SparseOperator>,
    pub e_plus: Vec<SparseOperator>,
    pub e_minus: Vec<SparseOperator>,
    pub local: Vec<Vec<LocalPiece>>,
}

impl GeneratorSet {
    pub fn dim(&self) -> usize {
        self.h[0].dim()
    }

    pub fn e(&self, alpha: usize, sign: Sign) -> &SparseOperator {
        match sign {
            Sign::Plus => &self.e_plus[alpha],
            Sign::Minus => &self.e_minus[alpha],
        }
    }

    pub fn h_diag(&self, alpha: usize) -> Vec<f64> {
        self.h[alpha].diagonal().iter().map(|z| z.re).collect()
    }

    /// Every operator, in the order H, E+, E- by node.
    pub fn all(&self) -> impl Iterator<Item = (String, &SparseOperator)> {
        let n = self.cartan.nodes();
        (0..n)
            .map(move |a| (format!("H:{a}"), &self.h[a]))
            .chain((0..n).map(move |a| (format!("E+:{a}"), &self.e_plus[a])))
            .chain((0..n).map(move |a| (format!("E-:{a}"), &self.e_minus[a])))
    }
}

/// Ladder operators with caching, either anyonic or plain.
pub(crate) struct Ladders<'a> {
    basis: &'a FockBasis,
    opts: &'a GeneratorOptions,
    cache: HashMap<(ModeId, bool, bool), SparseOperator>,
}

impl<'a> Ladders<'a> {
    pub(crate) fn new(basis: &'a FockBasis, opts: &'a GeneratorOptions) -> Self {
        Ladders { basis, opts, cache: HashMap::new() }
    }

    pub(crate) fn get(&mut self, mode: ModeId, tilde: bool, dagger: bool) -> Result<SparseOperator> {
        let key = (mode, tilde && self.opts.deformed, dagger);
        if let Some(op) = self.cache.get(&key) {
            return Ok(op.clone());
        }
        let op = if self.opts.deformed {
            anyon_with(self.basis, &mode, AnyonFamily::of(mode.kind, tilde), dagger, &self.opts.disorder)?
        } else {
            let lower = match mode.kind {
                ModeKind::Fermion => fermion_annihilate(self.basis, &mode)?,
                ModeKind::Boson => boson_annihilate(self.basis, &mode)?,
            };
            if dagger {
                lower.adjoint()
            } else {
                lower
            }
        };
        self.cache.insert(key, op.clone());
        Ok(op)
    }
}

fn f(flavor: usize, line: usize, r: HalfInt) -> ModeId {
    ModeId::fermion(flavor, r).on_line(line)
}

fn b(flavor: usize, line: usize, r: HalfInt) -> ModeId {
    ModeId::boson(flavor, r).on_line(line)
}

/// Fermi-point constant subtracted from the affine Cartan piece at `r = -1/2`.
pub fn affine_constant(scheme: OrderingScheme, r: HalfInt, dropped: bool) -> f64 {
    if scheme == OrderingScheme::Sea && r == HalfInt::MINUS_HALF && !dropped {
        1.0
    } else {
        0.0
    }
}

/// Modes and signs making up the Cartan piece `h_alpha(r)`, before constants.
pub fn local_cartan_terms(cartan: &CartanData, alpha: usize, line: usize, r: HalfInt) -> Vec<(ModeId, f64)> {
    let m = cartan.fermion_flavors;
    let n = cartan.boson_flavors;
    if alpha == 0 {
        vec![(b(n, line, r), 1.0), (f(1, line, r.shift(1)), 1.0)]
    } else if alpha < m {
        vec![(f(alpha, line, r), 1.0), (f(alpha + 1, line, r), -1.0)]
    } else if alpha == m {
        vec![(f(m, line, r), 1.0), (b(1, line, r), 1.0)]
    } else {
        let k = alpha - m;
        vec![(b(k, line, r), 1.0), (b(k + 1, line, r), -1.0)]
    }
}

/// Diagonal of `h_alpha(r)` built from normal-ordered numbers, optionally
/// without the Fermi-point constant.
pub fn local_cartan_diag(
    basis: &FockBasis,
    cartan: &CartanData,
    alpha: usize,
    line: usize,
    r: HalfInt,
    with_constant: bool,
    drop_delta: bool,
) -> Result<Vec<f64>> {
    let scheme = basis.config().ordering(line);
    let mut out = vec![0.0; basis.dim()];
    for (mode, c) in local_cartan_terms(cartan, alpha, line, r) {
        let off = normal_ordering_offset(&mode, scheme);
        for (o, v) in out.iter_mut().zip(occupation_vector(basis, &mode)?) {
            *o += c * (v + off);
        }
    }
    if alpha == 0 && with_constant {
        let k = affine_constant(scheme, r, drop_delta);
        out.iter_mut().for_each(|o| *o -= k);
    }
    Ok(out)
}

/// Positions `r` at which node `alpha` has a local piece on a line.
pub fn piece_sites(basis: &FockBasis, alpha: usize) -> Vec<HalfInt> {
    let cfg = basis.config();
    cfg.positions().into_iter().filter(|r| alpha != 0 || cfg.contains(r.shift(1))).collect()
}

/// Phase removing the Fermi-point mismatch of the affine pieces on sea lines.
pub fn affine_phase(q: &Deformation, r: HalfInt) -> C64 {
    let s = (HalfInt::MINUS_HALF.0 - r.0).signum() as f64;
    q.pow(0.5 * s)
}

/// Simple-root generators `H_alpha`, `E_alpha^+-` as sums of local pieces.
pub fn chevalley_generators(basis: &FockBasis, opts: &GeneratorOptions) -> Result<GeneratorSet> {
    let cfg = basis.config();
    let cartan = CartanData::new(cfg.fermion_flavors, cfg.boson_flavors)?;
    let m = cfg.fermion_flavors;
    let n = cfg.boson_flavors;
    let dim = basis.dim();
    let nodes = cartan.nodes();
    let mut lad = Ladders::new(basis, opts);
    let mut local: Vec<Vec<LocalPiece>> = vec![Vec::new(); nodes];

    for line in 0..cfg.lines {
        for alpha in 0..nodes {
            for r in piece_sites(basis, alpha) {
                if let Some(reg) = &opts.disorder.region {
                    let inside = reg.contains(line, r) && (alpha != 0 || reg.contains(line, r.shift(1)));
                    if !inside {
                        continue;
                    }
                }
                // (creator mode, annihilator mode) of e^+; e^- is the mirrored tilde pair
                let (x, y) = if alpha == 0 {
                    (b(n, line, r), f(1, line, r.shift(1)))
                } else if alpha < m {
                    (f(alpha, line, r), f(alpha + 1, line, r))
                } else if alpha == m {
                    (f(m, line, r), b(1, line, r))
                } else {
                    let k = alpha - m;
                    (b(k, line, r), b(k + 1, line, r))
                };
                let mut e_plus = &lad.get(x, false, true)? * &lad.get(y, false, false)?;
                let mut e_minus = &lad.get(y, true, true)? * &lad.get(x, true, false)?;
                if alpha == 0
                    && opts.deformed
                    && cfg.compensate_affine_phase
                    && cfg.ordering(line) == OrderingScheme::Sea
                {
                    let ph = affine_phase(&cfg.q, r);
                    e_plus = e_plus.scale(ph);
                    e_minus = e_minus.scale(ph);
                }
                let h = local_cartan_diag(basis, &cartan, alpha, line, r, true, opts.drop_affine_delta)?;
                local[alpha].push(LocalPiece {
                    line,
                    site: r,
                    h: SparseOperator::from_real_diagonal(&h),
                    e_plus,
                    e_minus,
                });
            }
        }
    }

    let sum = |alpha: usize, pick: fn(&LocalPiece) -> &SparseOperator| {
        SparseOperator::sum(dim, local[alpha].iter().map(pick))
    };
    let h = (0..nodes).map(|a| sum(a, |p| &p.h)).collect();
    let e_plus = (0..nodes).map(|a| sum(a, |p| &p.e_plus)).collect();
    let e_minus = (0..nodes).map(|a| sum(a, |p| &p.e_minus)).collect();
    Ok(GeneratorSet { cartan, q: cfg.q, deformed: opts.deformed, h, e_plus, e_minus, local })
}

pub fn deformed_generators(basis: &FockBasis) -> Result<GeneratorSet> {
    chevalley_generators(basis, &GeneratorOptions::deformed())
}

pub fn undeformed_generators(basis: &FockBasis) -> Result<GeneratorSet> {
    chevalley_generators(basis, &GeneratorOptions::undeformed())
}

/// The local generator with q-bosons and no disorder strings.
pub fn local_q_generator(
    basis: &FockBasis,
    cartan: &CartanData,
    alpha: usize,
    line: usize,
    r: HalfInt,
    sign: Sign,
) -> Result<SparseOperator> {
    let m = cartan.fermion_flavors;
    let n = cartan.boson_flavors;
    let (x, y) = if alpha == 0 {
        (b(n, line, r), f(1, line, r.shift(1)))
    } else if alpha < m {
        (f(alpha, line, r), f(alpha + 1, line, r))
    } else if alpha == m {
        (f(m, line, r), b(1, line, r))
    } else {
        (b(alpha - m, line, r), b(alpha - m + 1, line, r))
    };
    let lower = |mode: &ModeId| match mode.kind {
        ModeKind::Fermion => fermion_annihilate(basis, mode),
        ModeKind::Boson => q_boson_annihilate(basis, mode),
    };
    let (up, down) = match sign {
        Sign::Plus => (x, y),
        Sign::Minus => (y, x),
    };
    Ok(&lower(&up)?.adjoint() * &lower(&down)?)
}

/// `Gamma = -H_0 + sum_{i<=M} H_i - sum_{k<N} H_{M+k}`.
pub fn central_charge_operator(set: &GeneratorSet) -> SparseOperator {
    let m = set.cartan.fermion_flavors;
    let mut g = -&set.h[0];
    for i in 1..=m {
        g = &g + &set.h[i];
    }
    for k in 1..set.cartan.boson_flavors {
        g = &g - &set.h[m + k];
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::LatticeConfig;

    #[test]
    fn cartan_generators_have_integer_spectra() {
        let basis = FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap();
        let set = deformed_generators(&basis).unwrap();
        for a in 0..3 {
            assert!(set.h[a].is_diagonal());
            for v in set.h_diag(a) {
                assert_eq!(v, v.round());
            }
        }
    }

    #[test]
    fn e_m_plus_is_product_of_anyons() {
        let basis = FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap();
        let set = deformed_generators(&basis).unwrap();
        let r = HalfInt::PLUS_HALF;
        let ad = crate::anyons::anyon(&basis, &f(2, 0, r), AnyonFamily::Fermionic, true).unwrap();
        let a = crate::anyons::anyon(&basis, &b(1, 0, r), AnyonFamily::Bosonic, false).unwrap();
        let piece = set.local[2].iter().find(|p| p.site == r).unwrap();
        assert!(piece.e_plus.max_abs_diff(&(&ad * &a)) < 1e-15);
    }

    #[test]
    fn affine_node_has_one_piece_on_two_sites() {
        let basis = FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap();
        let set = undeformed_generators(&basis).unwrap();
        assert_eq!(set.local[0].len(), 1);
        assert_eq!(set.local[1].len(), 2);
    }
}
