use rayon::prelude::*;

use super::{Relation, RelationReport, Workspace};
use crate::algebra::{cartan_generator, root_generator, Root, Weight};
use crate::error::Result;
use crate::fock::{BulkProjector, Projection};
use crate::sparse::{SparseOperator, C64};

const MODES: [i32; 3] = [-1, 0, 1];

impl Workspace {
    /// `hop` names a Cartan index whose nonzero mode moves bosons.
    fn cw_projection(&self, margin: i32, roots: &[&Root], hop: Option<usize>) -> Projection {
        let c = &self.deformed.cartan;
        let mut headroom = vec![0; c.boson_flavors];
        for r in roots {
            if let Weight::Boson(k) = r.plus {
                headroom[k - 1] += 1;
            }
        }
        if let Some(a) = hop {
            for (w, _) in c.cartan_coefficients(a) {
                if let Weight::Boson(k) = w {
                    headroom[k - 1] = headroom[k - 1].max(1);
                }
            }
        }
        Projection { margin: margin.unsigned_abs() as usize, headroom }
    }

    /// Scalar `s` with `P op P = s P target P`, read off the largest bulk
    /// entry of the target.
    fn fit_scalar(op: &SparseOperator, target: &SparseOperator, proj: &BulkProjector) -> Option<C64> {
        target
            .triplets()
            .into_iter()
            .filter(|&(r, c, _)| proj.keep[r] && proj.keep[c])
            .max_by(|a, b| a.2.norm().total_cmp(&b.2.norm()))
            .filter(|t| t.2.norm() > 0.0)
            .map(|(r, c, v)| op.get(r, c) / v)
    }

    pub fn cartan_weyl(&self) -> Result<Vec<RelationReport>> {
        let basis = &self.basis;
        let c = &self.undeformed.cartan;
        let set = &self.undeformed;
        let tol = self.tol();
        let roots = Root::all(c.fermion_flavors, c.boson_flavors);
        let mut out = Vec::new();

        for alpha in 0..c.nodes() {
            let (root, m) = c.simple_root(alpha);
            let up = root_generator(basis, &root, m)?;
            let down = root_generator(basis, &root.negate(), -m)?;
            let diff = (&up - &set.e_plus[alpha]).max_abs().max((&down - &set.e_minus[alpha]).max_abs());
            out.push(
                Relation::new("eq6-correspondence")
                    .param("alpha", alpha)
                    .param("root", root)
                    .param("m", m)
                    .scalar(diff, tol),
            );
        }
        for a in 1..c.nodes() {
            let h = cartan_generator(basis, c, a, 0)?;
            out.push(
                Relation::new("eq6-correspondence")
                    .param("cartan", a)
                    .exact(&(&h - &set.h[a]), tol),
            );
        }

        let mut gens = std::collections::HashMap::new();
        for root in &roots {
            for m in MODES {
                gens.insert((*root, m), root_generator(basis, root, m)?);
            }
        }
        let mut cartans = std::collections::HashMap::new();
        for a in 1..c.nodes() {
            let reach = if self.cfg.sites >= 4 { 2 } else { 1 };
            for m in -reach..=reach {
                cartans.insert((a, m), cartan_generator(basis, c, a, m)?);
            }
        }

        let mut jobs = Vec::new();
        for a in 1..c.nodes() {
            for root in &roots {
                for m in MODES {
                    jobs.push((a, *root, 0, m));
                    if m != 0 {
                        jobs.push((a, *root, m, 0));
                    }
                }
            }
        }
        out.par_extend(jobs.into_par_iter().map(|(a, root, mh, me)| {
            let lhs = cartans[&(a, mh)].commutator(&gens[&(root, me)]);
            let target = gens[&(root, mh + me)].scale_real(c.pairing(a, &root) as f64);
            let proj = self.projector(&self.cw_projection(mh + me, &[&root], (mh != 0).then_some(a)));
            Relation::new("eq1b")
                .param("a", a)
                .param("root", root)
                .param("m_h", mh)
                .param("m_e", me)
                .on_domain(&(&lhs - &target), &proj, tol)
        }));

        for a in 1..c.nodes() {
            let mut scalars = Vec::new();
            for k in [1, 2] {
                let proj = self.projector(&self.cw_projection(k, &[], Some(a)));
                if !cartans.contains_key(&(a, k)) {
                scalars.push(None);
                continue;
            }
            let comm = cartans[&(a, k)].commutator(&cartans[&(a, -k)]);
                let s = proj.keep.iter().position(|&x| x).map(|i| comm.get(i, i));
                scalars.push(s.map(|s| (comm, s, proj)));
            }
            let (Some((comm1, s1, p1)), second) = (scalars.remove(0), scalars.remove(0)) else {
                out.push(Relation::new("eq1a-anomaly").param("a", a).not_applicable("no bulk states"));
                out.push(Relation::new("eq1a-linear").param("a", a).not_applicable("no bulk states"));
                continue;
            };
            let dim = basis.dim();
            let flat = &comm1 - &SparseOperator::identity(dim).scale(s1);
            out.push(
                Relation::new("eq1a-anomaly")
                    .param("a", a)
                    .param("scalar", format!("{:.6}", s1.re))
                    .on_domain(&flat, &p1, tol),
            );
            match second {
                Some((comm2, s2, p2)) if self.cfg.sites >= 4 => {
                    let flat2 = &comm2 - &SparseOperator::identity(dim).scale(s2);
                    let res = super::domain_residual(&flat2, &p2.keep).max((s2 - s1 * 2.0).norm());
                    out.push(
                        Relation::new("eq1a-linear")
                            .param("a", a)
                            .param("s1", format!("{:.6}", s1.re))
                            .param("s2", format!("{:.6}", s2.re))
                            .scalar_on(res, 1e-8, &p2),
                    );
                }
                _ => out.push(
                    Relation::new("eq1a-linear")
                        .param("a", a)
                        .not_applicable("mode 2 needs at least four sites"),
                ),
            }
        }

        let mut pairs = Vec::new();
        for x in &roots {
            for y in &roots {
                if let Some(z) = x.add(y) {
                    for m in MODES {
                        for n in MODES {
                            if (m + n).abs() <= 1 {
                                pairs.push((*x, *y, z, m, n));
                            }
                        }
                    }
                }
            }
        }
        out.par_extend(pairs.into_par_iter().map(|(x, y, z, m, n)| {
            let ex = &gens[&(x, m)];
            let ey = &gens[&(y, n)];
            let lhs = ex.supercommutator(x.is_odd(), ey, y.is_odd());
            let target = &gens[&(z, m + n)];
            let proj = self.projector(&self.cw_projection(m.abs().max(n.abs()), &[&x, &y], None));
            let rel = Relation::new("eq1c-structure")
                .param("x", x)
                .param("y", y)
                .param("m", m)
                .param("n", n);
            if proj.rank() == 0 {
                return rel.not_applicable("projected subspace is empty at this cutoff");
            }
            // compared between bulk states
            match Self::fit_scalar(&lhs, target, &proj) {
                Some(s) => {
                    let res = super::sandwich_residual(&(&lhs - &target.scale(s)), &proj.keep).max((s.norm() - 1.0).abs());
                    rel.param("epsilon", format!("{:+.0}", s.re)).scalar_on(res, tol, &proj)
                }
                None => rel.not_applicable("target vanishes on the projected subspace"),
            }
        }));
        Ok(out)
    }
}
