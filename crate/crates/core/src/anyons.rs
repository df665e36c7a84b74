//! Disorder factors and the four anyon families built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{
    bulk_projector, fermion_annihilate, occupation_vector, CrossLineNumbers, FockBasis, HalfInt, LatticeConfig,
    ModeId, ModeKind,
};
use crate::oscillators::{diag_exp, diag_exp_op, normal_ordering_offset, q_boson_annihilate};
use crate::sparse::{SparseOperator, C64};
use crate::verify::{Relation, RelationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DisorderSign {
    /// `K` and `K'`
    Minus,
    /// `K~` and `K~'`
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DisorderSpec {
    pub mode: ModeId,
    pub sign: DisorderSign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AnyonFamily {
    /// `a = K c`
    Fermionic,
    /// `a~ = K~ c`
    FermionicTilde,
    /// `A = K' b`
    Bosonic,
    /// `A~ = K~' b`
    BosonicTilde,
}

impl AnyonFamily {
    pub fn kind(self) -> ModeKind {
        match self {
            AnyonFamily::Fermionic | AnyonFamily::FermionicTilde => ModeKind::Fermion,
            AnyonFamily::Bosonic | AnyonFamily::BosonicTilde => ModeKind::Boson,
        }
    }

    pub fn sign(self) -> DisorderSign {
        match self {
            AnyonFamily::Fermionic | AnyonFamily::Bosonic => DisorderSign::Minus,
            AnyonFamily::FermionicTilde | AnyonFamily::BosonicTilde => DisorderSign::Plus,
        }
    }

    pub fn tilde(self) -> bool {
        self.sign() == DisorderSign::Plus
    }

    pub fn of(kind: ModeKind, tilde: bool) -> Self {
        match (kind, tilde) {
            (ModeKind::Fermion, false) => AnyonFamily::Fermionic,
            (ModeKind::Fermion, true) => AnyonFamily::FermionicTilde,
            (ModeKind::Boson, false) => AnyonFamily::Bosonic,
            (ModeKind::Boson, true) => AnyonFamily::BosonicTilde,
        }
    }
}

/// Set of (line, site) cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    sites: usize,
    member: Vec<bool>,
}

impl Region {
    pub fn all(cfg: &LatticeConfig) -> Self {
        Region::where_(cfg, |_, _| true)
    }

    pub fn where_(cfg: &LatticeConfig, f: impl Fn(usize, HalfInt) -> bool) -> Self {
        let mut member = Vec::with_capacity(cfg.lines * cfg.sites);
        for line in 0..cfg.lines {
            for r in cfg.positions() {
                member.push(f(line, r));
            }
        }
        Region { sites: cfg.sites, member }
    }

    pub fn contains(&self, line: usize, r: HalfInt) -> bool {
        let idx = (r.0 + self.sites as i32 - 1) / 2;
        idx >= 0 && (idx as usize) < self.sites && self.member[line * self.sites + idx as usize]
    }

    pub fn complement(&self) -> Self {
        Region { sites: self.sites, member: self.member.iter().map(|m| !m).collect() }
    }
}

/// Knobs on how disorder strings are assembled.
#[derive(Debug, Clone, Default)]
pub struct DisorderOptions {
    /// Only modes inside the region enter the string.
    pub region: Option<Region>,
    /// Control: give the bosonic strings the fermionic base sign.
    pub flip_boson_base: bool,
}

/// Weight with which mode `(t_line, t)` enters the string of `(line, r)`.
/// Lower lines count as `t < r`, higher lines as `t > r`.
pub fn disorder_weight(line: usize, r: HalfInt, t_line: usize, t: HalfInt) -> i32 {
    use std::cmp::Ordering::*;
    match t_line.cmp(&line) {
        Equal => (t.0 - r.0).signum(),
        Less => -1,
        Greater => 1,
    }
}

/// `sum_t w(t) :n(t):` over the modes of the same statistics and flavor as `mode`.
pub fn disorder_exponent(basis: &FockBasis, mode: &ModeId, opts: &DisorderOptions) -> Result<Vec<f64>> {
    basis.slot(mode)?;
    let cfg = basis.config();
    let mut out = vec![0.0; basis.dim()];
    for line in 0..cfg.lines {
        for t in cfg.positions() {
            let w = disorder_weight(mode.line, mode.site, line, t);
            if w == 0 {
                continue;
            }
            if let Some(reg) = &opts.region {
                if !reg.contains(line, t) {
                    continue;
                }
            }
            let other = ModeId { kind: mode.kind, flavor: mode.flavor, line, site: t };
            let bare = line != mode.line && cfg.cross_line_numbers == CrossLineNumbers::Bare;
            let off = if bare { 0.0 } else { normal_ordering_offset(&other, cfg.ordering(line)) };
            let n = occupation_vector(basis, &other)?;
            let w = w as f64;
            for (o, v) in out.iter_mut().zip(n) {
                *o += w * (v + off);
            }
        }
    }
    Ok(out)
}

/// Power of q multiplying the exponent: `-1/2` for `K`, `+1/2` for `K'`,
/// opposite for the tilde factors.
pub fn disorder_power(kind: ModeKind, sign: DisorderSign, opts: &DisorderOptions) -> f64 {
    let base = match kind {
        ModeKind::Fermion => -0.5,
        ModeKind::Boson if opts.flip_boson_base => -0.5,
        ModeKind::Boson => 0.5,
    };
    match sign {
        DisorderSign::Minus => base,
        DisorderSign::Plus => -base,
    }
}

pub fn disorder_diagonal(basis: &FockBasis, spec: &DisorderSpec, opts: &DisorderOptions) -> Result<Vec<C64>> {
    let x = disorder_exponent(basis, &spec.mode, opts)?;
    let p = disorder_power(spec.mode.kind, spec.sign, opts);
    Ok(diag_exp(&basis.config().q, &x, p))
}

pub fn disorder_factor(basis: &FockBasis, spec: &DisorderSpec) -> Result<SparseOperator> {
    Ok(SparseOperator::from_diagonal(&disorder_diagonal(basis, spec, &DisorderOptions::default())?))
}

/// `a`, `a~`, `A`, `A~` and their conjugates `c+ K^-1`, `b+ K'^-1`.
pub fn anyon_with(
    basis: &FockBasis,
    mode: &ModeId,
    family: AnyonFamily,
    dagger: bool,
    opts: &DisorderOptions,
) -> Result<SparseOperator> {
    if mode.kind != family.kind() {
        return Err(Error::UnknownMode(format!("{mode} cannot carry a {family:?} anyon")));
    }
    let ladder = match mode.kind {
        ModeKind::Fermion => fermion_annihilate(basis, mode)?,
        ModeKind::Boson => q_boson_annihilate(basis, mode)?,
    };
    let k = disorder_diagonal(basis, &DisorderSpec { mode: *mode, sign: family.sign() }, opts)?;
    if dagger {
        let kinv: Vec<C64> = k.iter().map(|z| z.inv()).collect();
        Ok(ladder.adjoint().scale_cols(&kinv))
    } else {
        Ok(ladder.scale_rows(&k))
    }
}

pub fn anyon(basis: &FockBasis, mode: &ModeId, family: AnyonFamily, dagger: bool) -> Result<SparseOperator> {
    anyon_with(basis, mode, family, dagger, &DisorderOptions::default())
}

struct Quad {
    x: SparseOperator,
    xd: SparseOperator,
    t: SparseOperator,
    td: SparseOperator,
}

fn quad(basis: &FockBasis, m: &ModeId) -> Result<Quad> {
    Ok(Quad {
        x: anyon(basis, m, AnyonFamily::of(m.kind, false), false)?,
        xd: anyon(basis, m, AnyonFamily::of(m.kind, false), true)?,
        t: anyon(basis, m, AnyonFamily::of(m.kind, true), false)?,
        td: anyon(basis, m, AnyonFamily::of(m.kind, true), true)?,
    })
}

fn cell(m: &ModeId) -> (usize, HalfInt) {
    (m.line, m.site)
}

pub fn suite_braiding(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    let basis = FockBasis::new(cfg)?;
    let dim = basis.dim();
    let tol = cfg.tol;
    let q = cfg.q.value();
    let qi = q.inv();
    let id = SparseOperator::identity(dim);
    let below_cutoff = bulk_projector(&basis, 0, 1);
    let mut out = Vec::new();

    let fermions: Vec<(ModeId, Quad)> =
        basis.fermion_modes().iter().map(|m| Ok((*m, quad(&basis, m)?))).collect::<Result<_>>()?;
    let bosons: Vec<(ModeId, Quad)> =
        basis.boson_modes().iter().map(|m| Ok((*m, quad(&basis, m)?))).collect::<Result<_>>()?;

    // X Y + c Y X
    let braid = |x: &SparseOperator, y: &SparseOperator, c: C64| &(x * y) + &(y * x).scale(c);

    for (mr, r) in &fermions {
        for (ms, s) in &fermions {
            if mr.flavor != ms.flavor {
                continue;
            }
            let tag = |rel: &'static str| Relation::new(rel).param("flavor", mr.flavor).param("r", mr).param("s", ms);
            if cell(mr) > cell(ms) {
                let forms = [
                    (&r.x, &s.x, &r.t, &s.t, qi),
                    (&r.xd, &s.xd, &r.td, &s.td, qi),
                    (&r.xd, &s.x, &r.td, &s.t, q),
                    (&r.x, &s.xd, &r.t, &s.td, q),
                ];
                for (k, (a, b, at, bt, c)) in forms.into_iter().enumerate() {
                    out.push(tag("eq42").param("form", k + 1).exact(&braid(a, b, c), tol));
                    out.push(tag("eq42-mirror").param("form", k + 1).exact(&braid(at, bt, c.inv()), tol));
                }
            }
            let r44 = r.t.anticommutator(&s.x).max_abs().max(r.td.anticommutator(&s.xd).max_abs());
            out.push(tag("eq44").scalar(r44, tol));
            if mr != ms {
                let r45 = r.td.anticommutator(&s.x).max_abs().max(r.t.anticommutator(&s.xd).max_abs());
                out.push(tag("eq45").scalar(r45, tol));
            }
        }
        let tag = |rel: &'static str| Relation::new(rel).param("flavor", mr.flavor).param("r", mr);
        let car = (&r.x.anticommutator(&r.xd) - &id).max_abs();
        let nil = (&r.x * &r.x).max_abs().max((&r.xd * &r.xd).max_abs());
        out.push(tag("eq43").scalar(car.max(nil), tol));
        let car_t = (&r.t.anticommutator(&r.td) - &id).max_abs();
        let nil_t = (&r.t * &r.t).max_abs().max((&r.td * &r.td).max_abs());
        out.push(tag("eq43-mirror").scalar(car_t.max(nil_t), tol));
        let x = disorder_exponent(&basis, mr, &DisorderOptions::default())?;
        let up = &r.t.anticommutator(&r.xd) - &diag_exp_op(&cfg.q, &x, 1.0);
        let down = &r.td.anticommutator(&r.x) - &diag_exp_op(&cfg.q, &x, -1.0);
        out.push(tag("eq46").param("form", 1).exact(&up, tol));
        out.push(tag("eq46").param("form", 2).exact(&down, tol));
        let n = crate::fock::number(&basis, mr)?;
        let r47 = (&(&r.xd * &r.x) - &n).max_abs().max((&(&r.td * &r.t) - &n).max_abs());
        out.push(tag("eq47").scalar(r47, tol));
    }

    let minus = |x: &SparseOperator, y: &SparseOperator, c: C64| &(x * y) - &(y * x).scale(c);
    for (mr, r) in &bosons {
        for (ms, s) in &bosons {
            if mr.flavor != ms.flavor || cell(mr) <= cell(ms) {
                continue;
            }
            let tag = |rel: &'static str| Relation::new(rel).param("flavor", mr.flavor).param("r", mr).param("s", ms);
            let forms = [
                (&r.x, &s.x, &r.t, &s.t, q),
                (&r.xd, &s.xd, &r.td, &s.td, q),
                (&r.xd, &s.x, &r.td, &s.t, qi),
                (&r.x, &s.xd, &r.t, &s.td, qi),
            ];
            for (k, (a, b, at, bt, c)) in forms.into_iter().enumerate() {
                out.push(tag("eq53").param("form", k + 1).on_domain(&minus(a, b, c), &below_cutoff, tol));
                out.push(
                    tag("eq53-mirror").param("form", k + 1).on_domain(&minus(at, bt, c.inv()), &below_cutoff, tol),
                );
            }
        }
        let n = occupation_vector(&basis, mr)?;
        for (fam, a, ad) in [("A", &r.x, &r.xd), ("tilde-A", &r.t, &r.td)] {
            let f1 = &minus(a, ad, q) - &diag_exp_op(&cfg.q, &n, -1.0);
            let f2 = &minus(a, ad, qi) - &diag_exp_op(&cfg.q, &n, 1.0);
            let tag = |k: usize| {
                Relation::new("eq54").param("flavor", mr.flavor).param("r", mr).param("family", fam).param("form", k)
            };
            out.push(tag(1).on_domain(&f1, &below_cutoff, tol));
            out.push(tag(2).on_domain(&f2, &below_cutoff, tol));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{Deformation, OrderingScheme};

    #[test]
    fn weights_follow_line_order() {
        assert_eq!(disorder_weight(0, HalfInt(1), 0, HalfInt(-1)), -1);
        assert_eq!(disorder_weight(0, HalfInt(1), 0, HalfInt(1)), 0);
        assert_eq!(disorder_weight(1, HalfInt(1), 0, HalfInt(3)), -1);
        assert_eq!(disorder_weight(0, HalfInt(1), 1, HalfInt(-3)), 1);
    }

    #[test]
    fn empty_vacuum_has_trivial_disorder() {
        let cfg = LatticeConfig::new(2, 1, 2).with_ordering(OrderingScheme::Empty);
        let basis = FockBasis::new(&cfg).unwrap();
        for m in basis.fermion_modes().iter().chain(basis.boson_modes()) {
            let k = disorder_factor(&basis, &DisorderSpec { mode: *m, sign: DisorderSign::Minus }).unwrap();
            assert!((k.get(0, 0) - C64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn unitary_factor_inverts_tilde() {
        let basis = FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap();
        let m = ModeId::fermion(2, HalfInt::PLUS_HALF);
        let k = disorder_factor(&basis, &DisorderSpec { mode: m, sign: DisorderSign::Minus }).unwrap();
        let kt = disorder_factor(&basis, &DisorderSpec { mode: m, sign: DisorderSign::Plus }).unwrap();
        assert!((&k * &kt).max_abs_diff(&SparseOperator::identity(basis.dim())) < 1e-14);
        assert!(kt.max_abs_diff(&k.adjoint()) < 1e-14);
    }

    #[test]
    fn anyons_collapse_at_q_one() {
        let cfg = LatticeConfig::new(2, 1, 2).with_q(Deformation::classical());
        let basis = FockBasis::new(&cfg).unwrap();
        let m = ModeId::fermion(1, HalfInt::PLUS_HALF);
        let a = anyon(&basis, &m, AnyonFamily::Fermionic, false).unwrap();
        assert!(a.max_abs_diff(&fermion_annihilate(&basis, &m).unwrap()) < 1e-15);
        assert!(anyon(&basis, &m, AnyonFamily::Bosonic, false).is_err());
    }
}
