//! Number operators under the two normal-ordering prescriptions, q-deformed
//! bosons, and the oscillator relation suite.

use crate::error::{Error, Result};
use crate::fock::{
    boson_annihilate, bulk_projector, fermion_annihilate, occupation_vector, Deformation, FockBasis,
    LatticeConfig, ModeId, ModeKind, OrderingScheme,
};
use crate::sparse::{SparseOperator, C64};
use crate::verify::{Relation, RelationReport};

/// Constant added to the bare occupation to get `:n:`.
pub fn normal_ordering_offset(mode: &ModeId, scheme: OrderingScheme) -> f64 {
    match (scheme, mode.kind) {
        (OrderingScheme::Sea, ModeKind::Fermion) if mode.site.is_negative() => -1.0,
        (OrderingScheme::Sea, ModeKind::Boson) if mode.site.is_negative() => 1.0,
        _ => 0.0,
    }
}

pub fn normal_ordered_occupation(basis: &FockBasis, mode: &ModeId, scheme: OrderingScheme) -> Result<Vec<f64>> {
    let off = normal_ordering_offset(mode, scheme);
    Ok(occupation_vector(basis, mode)?.into_iter().map(|n| n + off).collect())
}

pub fn number_op(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    crate::fock::number(basis, mode)
}

pub fn normal_ordered_number(basis: &FockBasis, mode: &ModeId, scheme: OrderingScheme) -> Result<SparseOperator> {
    Ok(SparseOperator::from_real_diagonal(&normal_ordered_occupation(basis, mode, scheme)?))
}

/// `:n:` under the ordering of the mode's own line.
pub fn line_normal_ordered_number(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    let scheme = basis.config().ordering(mode.line);
    normal_ordered_number(basis, mode, scheme)
}

/// `q^(factor * x)` entrywise.
pub fn diag_exp(q: &Deformation, exponents: &[f64], factor: f64) -> Vec<C64> {
    exponents.iter().map(|&x| q.pow(factor * x)).collect()
}

pub fn diag_exp_op(q: &Deformation, exponents: &[f64], factor: f64) -> SparseOperator {
    SparseOperator::from_diagonal(&diag_exp(q, exponents, factor))
}

/// `[x]_q` entrywise as a diagonal operator.
pub fn q_bracket_op(q: &Deformation, exponents: &[f64]) -> SparseOperator {
    let d: Vec<f64> = exponents.iter().map(|&x| q.q_number(x)).collect();
    SparseOperator::from_real_diagonal(&d)
}

/// Real parts of a diagonal operator.
pub fn real_diagonal(op: &SparseOperator) -> Result<Vec<f64>> {
    if !op.is_diagonal() {
        return Err(Error::Config("expected a diagonal operator".into()));
    }
    Ok(op.diagonal().iter().map(|z| z.re).collect())
}

pub fn q_boson_annihilate_with(basis: &FockBasis, mode: &ModeId, q: &Deformation) -> Result<SparseOperator> {
    for n in 1..=basis.config().n_max {
        if !(q.q_number(n as f64) > 0.0) {
            return Err(Error::Config(format!("[{n}]_q is not positive for {q}")));
        }
    }
    crate::fock::boson_lower_with(basis, mode, |n| q.q_number(n as f64).sqrt())
}

/// `b|n> = sqrt([n]_q)|n-1>` with the configured q.
pub fn q_boson_annihilate(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    q_boson_annihilate_with(basis, mode, &basis.config().q)
}

pub fn q_boson_create(basis: &FockBasis, mode: &ModeId) -> Result<SparseOperator> {
    Ok(q_boson_annihilate(basis, mode)?.adjoint())
}

struct BosonOps {
    mode: ModeId,
    b: SparseOperator,
    bd: SparseOperator,
    n: Vec<f64>,
}

pub fn suite_oscillators(cfg: &LatticeConfig) -> Result<Vec<RelationReport>> {
    let basis = FockBasis::new(cfg)?;
    let dim = basis.dim();
    let tol = cfg.tol;
    let q = cfg.q;
    let id = SparseOperator::identity(dim);
    let zero = SparseOperator::zeros(dim);
    let below_cutoff = bulk_projector(&basis, 0, 1);
    let mut out = Vec::new();

    let fermions: Vec<(ModeId, SparseOperator, SparseOperator)> = basis
        .fermion_modes()
        .iter()
        .map(|m| {
            let c = fermion_annihilate(&basis, m)?;
            let cd = c.adjoint();
            Ok((*m, c, cd))
        })
        .collect::<Result<_>>()?;
    let plain: Vec<(ModeId, SparseOperator, SparseOperator)> = basis
        .boson_modes()
        .iter()
        .map(|m| {
            let d = boson_annihilate(&basis, m)?;
            let dd = d.adjoint();
            Ok((*m, d, dd))
        })
        .collect::<Result<_>>()?;
    let deformed: Vec<BosonOps> = basis
        .boson_modes()
        .iter()
        .map(|m| {
            let b = q_boson_annihilate(&basis, m)?;
            let bd = b.adjoint();
            Ok(BosonOps { mode: *m, b, bd, n: occupation_vector(&basis, m)? })
        })
        .collect::<Result<_>>()?;

    let delta = |a: &ModeId, b: &ModeId| if a == b { &id } else { &zero };

    for (m1, c1, _) in &fermions {
        for (m2, c2, cd2) in &fermions {
            let diff = &c1.anticommutator(cd2) - delta(m1, m2);
            out.push(Relation::new("car").param("i", m1).param("j", m2).exact(&diff, tol));
            if m1 <= m2 {
                let nil = c1.anticommutator(c2);
                out.push(Relation::new("car-nilpotent").param("i", m1).param("j", m2).exact(&nil, tol));
            }
        }
    }

    for (m1, d1, _) in &plain {
        for (m2, d2, dd2) in &plain {
            let diff = &d1.commutator(dd2) - delta(m1, m2);
            out.push(Relation::new("ccr").param("k", m1).param("l", m2).on_domain(&diff, &below_cutoff, tol));
            if m1 < m2 {
                let c = d1.commutator(d2);
                out.push(Relation::new("ccr-lowering").param("k", m1).param("l", m2).exact(&c, tol));
            }
        }
    }

    for (mf, c, cd) in &fermions {
        for (mb, d, dd) in &plain {
            let r = [c.commutator(d), c.commutator(dd), cd.commutator(d), cd.commutator(dd)]
                .iter()
                .fold(0.0f64, |m, x| m.max(x.max_abs()));
            out.push(Relation::new("fermion-boson-commute").param("i", mf).param("k", mb).scalar(r, tol));
        }
    }

    for x in &deformed {
        for y in &deformed {
            let same = x.mode == y.mode;
            let bbd = &x.b * &y.bd;
            let bdb = &y.bd * &x.b;
            let (qa, qb) = if same { (q.value(), q.value().inv()) } else { (C64::new(1.0, 0.0), C64::new(1.0, 0.0)) };
            let (rhs_a, rhs_b) = if same {
                (diag_exp_op(&q, &x.n, -1.0), diag_exp_op(&q, &x.n, 1.0))
            } else {
                (zero.clone(), zero.clone())
            };
            let a = &(&bbd - &bdb.scale(qa)) - &rhs_a;
            let b = &(&bbd - &bdb.scale(qb)) - &rhs_b;
            out.push(Relation::new("eq49a").param("k", x.mode).param("l", y.mode).on_domain(&a, &below_cutoff, tol));
            out.push(Relation::new("eq49b").param("k", x.mode).param("l", y.mode).on_domain(&b, &below_cutoff, tol));
            if !same {
                let r = x.b.commutator(&y.b).max_abs().max(x.bd.commutator(&y.bd).max_abs());
                out.push(Relation::new("eq49c").param("k", x.mode).param("l", y.mode).scalar(r, tol));
            }
            let n = SparseOperator::from_real_diagonal(&x.n);
            let lower = if same { y.b.clone() } else { zero.clone() };
            let raise = if same { y.bd.clone() } else { zero.clone() };
            let d = &n.commutator(&y.b) + &lower;
            let e = &n.commutator(&y.bd) - &raise;
            out.push(Relation::new("eq49d").param("k", x.mode).param("l", y.mode).exact(&d, tol));
            out.push(Relation::new("eq49e").param("k", x.mode).param("l", y.mode).exact(&e, tol));
        }
        let num = &(&x.bd * &x.b) - &q_bracket_op(&q, &x.n);
        out.push(Relation::new("eq50-number").param("k", x.mode).exact(&num, tol));
        let shifted: Vec<f64> = x.n.iter().map(|v| v + 1.0).collect();
        let raised = &(&x.b * &x.bd) - &q_bracket_op(&q, &shifted);
        out.push(Relation::new("eq50-raised").param("k", x.mode).on_domain(&raised, &below_cutoff, tol));
    }
    Ok(out)
}
