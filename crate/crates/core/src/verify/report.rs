use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::catalog;
use crate::fock::{BulkProjector, Projection};
use crate::sparse::SparseOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// What a passing check looks like. Controls pass when the corrupted
/// identity is visibly broken.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Holds,
    Broken { min_residual: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationReport {
    pub id: String,
    pub tag: String,
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub residual: f64,
    pub tol: f64,
    pub expectation: Expectation,
    pub status: Status,
    pub projection: Option<Projection>,
    pub projector_rank: Option<usize>,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

/// Maximum entry modulus of `diff` on the columns kept by the projector,
/// i.e. of `diff * P`.
pub fn domain_residual(diff: &SparseOperator, keep: &[bool]) -> f64 {
    diff.triplets()
        .into_iter()
        .filter(|&(_, c, _)| keep[c])
        .fold(0.0, |m, (_, _, v)| m.max(v.norm()))
}

/// Maximum entry modulus of `P * diff * P`.
pub fn sandwich_residual(diff: &SparseOperator, keep: &[bool]) -> f64 {
    diff.triplets()
        .into_iter()
        .filter(|&(r, c, _)| keep[r] && keep[c])
        .fold(0.0, |m, (_, _, v)| m.max(v.norm()))
}

/// A relation instance being evaluated.
#[derive(Debug, Clone)]
pub struct Relation {
    id: &'static str,
    params: BTreeMap<String, String>,
    expectation: Expectation,
    note: Option<String>,
    started: Instant,
}

impl Relation {
    pub fn new(id: &'static str) -> Self {
        debug_assert!(catalog::lookup(id).is_some(), "relation id {id} missing from catalog");
        Relation {
            id,
            params: BTreeMap::new(),
            expectation: Expectation::Holds,
            note: None,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn expect_broken(mut self, min_residual: f64) -> Self {
        self.expectation = Expectation::Broken { min_residual };
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn finish(self, residual: f64, tol: f64, projector: Option<&BulkProjector>, status: Option<Status>) -> RelationReport {
        let entry = catalog::lookup(self.id);
        let status = status.unwrap_or_else(|| {
            let ok = match self.expectation {
                Expectation::Holds => residual <= tol,
                Expectation::Broken { min_residual } => residual > min_residual,
            };
            if ok {
                Status::Pass
            } else {
                Status::Fail
            }
        });
        RelationReport {
            id: self.id.to_string(),
            tag: entry.map(|e| e.tag.to_string()).unwrap_or_default(),
            suite: entry.map(|e| e.suite.to_string()).unwrap_or_default(),
            params: self.params,
            residual,
            tol,
            expectation: self.expectation,
            status,
            projection: projector.map(|p| p.projection.clone()),
            projector_rank: projector.map(|p| p.rank()),
            wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
            note: self.note,
        }
    }

    /// Residual of `diff * P`; an empty projector makes the check inapplicable.
    pub fn on_domain(self, diff: &SparseOperator, projector: &BulkProjector, tol: f64) -> RelationReport {
        if projector.rank() == 0 {
            return self.not_applicable("projected subspace is empty at this cutoff");
        }
        let r = domain_residual(diff, &projector.keep);
        self.finish(r, tol, Some(projector), None)
    }

    /// Residual of `P * diff * P`.
    pub fn sandwiched(self, diff: &SparseOperator, projector: &BulkProjector, tol: f64) -> RelationReport {
        if projector.rank() == 0 {
            return self.not_applicable("projected subspace is empty at this cutoff");
        }
        let r = sandwich_residual(diff, &projector.keep);
        self.finish(r, tol, Some(projector), None)
    }

    /// Residual on the full space.
    pub fn exact(self, diff: &SparseOperator, tol: f64) -> RelationReport {
        self.finish(diff.max_abs(), tol, None, None)
    }

    pub fn scalar(self, residual: f64, tol: f64) -> RelationReport {
        self.finish(residual, tol, None, None)
    }

    pub fn scalar_on(self, residual: f64, tol: f64, projector: &BulkProjector) -> RelationReport {
        self.finish(residual, tol, Some(projector), None)
    }

    pub fn not_applicable(mut self, why: &str) -> RelationReport {
        self.note = Some(why.to_string());
        self.finish(f64::NAN, f64::NAN, None, Some(Status::NotApplicable))
    }
}

/// `check_identity(lhs, rhs, P)`: residual of `P(lhs - rhs)P`.
pub fn check_identity(
    id: &'static str,
    lhs: &SparseOperator,
    rhs: &SparseOperator,
    projector: &BulkProjector,
    tol: f64,
) -> crate::Result<RelationReport> {
    if lhs.dim() != rhs.dim() || lhs.dim() != projector.keep.len() {
        return Err(crate::Error::Shape(lhs.dim(), lhs.dim(), rhs.dim(), projector.keep.len()));
    }
    Ok(Relation::new(id).sandwiched(&(lhs - rhs), projector, tol))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

pub fn tally(reports: &[RelationReport]) -> Tally {
    let mut t = Tally::default();
    for r in reports {
        match r.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::NotApplicable => t.not_applicable += 1,
        }
    }
    t
}

pub fn worst_residual(reports: &[RelationReport]) -> f64 {
    reports
        .iter()
        .filter(|r| r.status != Status::NotApplicable && r.expectation == Expectation::Holds)
        .fold(0.0, |m, r| m.max(r.residual))
}
