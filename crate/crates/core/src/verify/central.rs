use super::{Relation, RelationReport, Workspace};
use crate::algebra::central_charge_operator;
use crate::error::Result;
use crate::fock::{ModeId, Projection};
use crate::oscillators::normal_ordered_number;
use crate::sparse::SparseOperator;

impl Workspace {
    pub fn central_charge(&self) -> Result<Vec<RelationReport>> {
        let cfg = &self.cfg;
        let c = &self.deformed.cartan;
        let dim = self.basis.dim();
        let gamma = cfg.sea_lines() as f64;
        let tol = self.tol().min(1e-12);
        let proj = self.projector(&Projection::uniform(1, 0, c.boson_flavors));

        let mut boundary = SparseOperator::zeros(dim);
        for line in 0..cfg.lines {
            let scheme = cfg.ordering(line);
            let low = ModeId::fermion(1, cfg.min_position()).on_line(line);
            let high = ModeId::boson(c.boson_flavors, cfg.max_position()).on_line(line);
            boundary = &boundary + &normal_ordered_number(&self.basis, &low, scheme)?;
            boundary = &boundary + &normal_ordered_number(&self.basis, &high, scheme)?;
        }

        let mut out = Vec::new();
        for (label, set) in [("deformed", &self.deformed), ("undeformed", &self.undeformed)] {
            let g = central_charge_operator(set);
            let shifted = &g - &SparseOperator::identity(dim).scale_real(gamma);
            out.push(
                Relation::new("central-charge")
                    .param("generators", label)
                    .param("gamma", gamma)
                    .on_domain(&shifted, &proj, tol),
            );
            out.push(
                Relation::new("central-charge-boundary")
                    .param("generators", label)
                    .exact(&(&shifted - &boundary), tol),
            );
        }
        Ok(out)
    }
}
