use super::{generator_options, Relation, RelationReport, Workspace};
use crate::algebra::{chevalley_generators, GeneratorSet};
use crate::error::Result;
use crate::fock::{Deformation, FockBasis};
use crate::oscillators::q_bracket_op;
use crate::sparse::SparseOperator;

fn largest_gap(a: &GeneratorSet, b: &GeneratorSet) -> f64 {
    a.all().zip(b.all()).map(|((_, x), (_, y))| x.max_abs_diff(y)).fold(0.0, f64::max)
}

impl Workspace {
    fn deformed_at(&self, q: Deformation) -> Result<GeneratorSet> {
        let cfg = self.cfg.clone().with_q(q);
        let basis = FockBasis::new(&cfg)?;
        chevalley_generators(&basis, &generator_options(self.controls, true))
    }

    pub fn classical_limit(&self) -> Result<Vec<RelationReport>> {
        let tol = self.tol().min(1e-12);
        let mut out = Vec::new();

        let at_one = self.deformed_at(Deformation::classical())?;
        let gap = largest_gap(&at_one, &self.undeformed);
        out.push(Relation::new("classical-coincide").scalar(gap, tol));

        let c = &self.deformed.cartan;
        let one = Deformation::classical();
        let mut worst = 0.0f64;
        for alpha in 0..c.nodes() {
            let h = self.undeformed.h_diag(alpha);
            let bracket = q_bracket_op(&one, &h);
            worst = worst.max((&bracket - &SparseOperator::from_real_diagonal(&h)).max_abs());
        }
        out.push(Relation::new("classical-eq7c-rhs").scalar(worst, tol));

        let (e1, e2) = (1e-6, 2e-6);
        let d1 = largest_gap(&self.deformed_at(Deformation::real(1.0 + e1))?, &self.undeformed);
        let d2 = largest_gap(&self.deformed_at(Deformation::real(1.0 + e2))?, &self.undeformed);
        let rel = Relation::new("classical-slope").param("d1", format!("{d1:.3e}")).param("d2", format!("{d2:.3e}"));
        if d1 == 0.0 {
            out.push(rel.not_applicable("generators do not depend on q on this lattice"));
        } else {
            let ratio = d2 / d1;
            out.push(rel.param("ratio", format!("{ratio:.6}")).scalar((ratio / 2.0 - 1.0).abs(), 0.1));
        }
        Ok(out)
    }
}
