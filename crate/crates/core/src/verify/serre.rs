use rayon::prelude::*;

use super::{ad_q, ad_q_oracle, script_e, Relation, RelationReport, Workspace};
use crate::algebra::{GeneratorSet, Sign};

/// Neighbor pairs `(left, right)` used by the quartic relation at a node.
pub(crate) fn quartic_variants(set: &GeneratorSet) -> Vec<(&'static str, &'static str, usize, usize, usize)> {
    let c = &set.cartan;
    let m = c.fermion_flavors;
    let r = c.rank;
    vec![
        ("eq9-alphaM", "eq4-alphaM", m, m - 1, (m + 1) % (r + 1)),
        ("eq9-alpha0-cyclic", "eq4-alpha0-cyclic", 0, r, 1),
        ("eq9-alpha0-skip", "eq4-alpha0-skip", 0, 1, r),
    ]
}

pub(crate) fn quartic_applicable(set: &GeneratorSet) -> bool {
    set.cartan.fermion_flavors >= 2 && set.cartan.boson_flavors >= 2
}

impl Workspace {
    pub fn serre(&self) -> Vec<RelationReport> {
        let set = &self.deformed;
        let c = &set.cartan;
        let n = c.nodes();
        let tol = self.tol();
        let mut pairs = Vec::new();
        for s in [Sign::Plus, Sign::Minus] {
            for a in 0..n {
                for b in 0..n {
                    if a != b && matches!(c.a_tilde(a, b), 0 | -1) {
                        pairs.push((s, a, b));
                    }
                }
            }
        }
        let mut out: Vec<RelationReport> =
            pairs.par_iter().flat_map_iter(|&(s, a, b)| self.serre_pair(s, a, b)).collect();

        let q = self.cfg.q.value();
        for s in [Sign::Plus, Sign::Minus] {
            for (id, _, alpha, left, right) in quartic_variants(set) {
                let rel = Relation::new(id).param("alpha", alpha).param("sign", s.symbol());
                if !quartic_applicable(set) {
                    out.push(rel.not_applicable("needs at least two fermion and two boson flavors"));
                    continue;
                }
                let rel = rel.param("neighbors", format!("{left},{right}"));
                let (el, ea, er) = (set.e(left, s), set.e(alpha, s), set.e(right, s));
                let x = el.twisted_commutator(ea, q);
                let y = ea.twisted_commutator(er, q);
                let d = x.anticommutator(&y);
                let p = self.projection_for(&[(left, s), (alpha, s), (alpha, s), (right, s)]);
                out.push(rel.on_domain(&d, &self.projector(&p), tol));
            }
        }
        out
    }

    fn serre_pair(&self, s: Sign, a: usize, b: usize) -> Vec<RelationReport> {
        let set = &self.deformed;
        let c = &set.cartan;
        let tol = self.tol();
        let at = c.a_tilde(a, b);
        let (ea, eb) = (set.e(a, s), set.e(b, s));
        let mut word = vec![(a, s), (b, s)];
        if at == -1 {
            word.push((a, s));
        }
        let proj = self.projector(&self.projection_for(&word));
        let tag = |id: &'static str| {
            Relation::new(id).param("alpha", a).param("beta", b).param("sign", s.symbol()).param("a_tilde", at)
        };
        let mut out = Vec::new();

        let (form, diff) = if at == 0 {
            ("commute", ea.supercommutator(c.is_odd(a), eb, c.is_odd(b)))
        } else if !c.is_isotropic(a) {
            let two = self.q_alpha(a).q_number(2.0);
            let aab = &(ea * ea) * eb;
            let aba = &(ea * eb) * ea;
            let baa = &(eb * ea) * ea;
            ("cubic", &(&aab - &aba.scale_real(two)) + &baa)
        } else {
            // E_a^2 = 0, so each end of the cubic vanishes separately
            let aab = &(ea * ea) * eb;
            let baa = &(eb * ea) * ea;
            let r = if super::domain_residual(&aab, &proj.keep) >= super::domain_residual(&baa, &proj.keep) {
                aab
            } else {
                baa
            };
            ("isotropic", r)
        };
        out.push(tag("eq8").param("form", form).on_domain(&diff, &proj, tol));

        let qa = self.q_alpha_coproduct(a);
        let mut y = script_e(set, b, s, &self.q_alpha_coproduct(b));
        let mut odd = c.is_odd(b);
        let mut w = s.factor() * c.a(a, b);
        let mut worst_oracle = 0.0f64;
        for _ in 0..(1 - at) {
            let closed = ad_q(set, a, s, &qa, &y, odd, w);
            let oracle = ad_q_oracle(set, a, s, &qa, &y, odd);
            worst_oracle = worst_oracle.max(super::domain_residual(&(&closed - &oracle), &proj.keep));
            y = closed;
            odd ^= c.is_odd(a);
            w += s.factor() * c.a(a, a);
        }
        out.push(tag("eq8-adq").on_domain(&y, &proj, tol));
        out.push(tag("adq-oracle").scalar_on(worst_oracle, tol, &proj));
        out
    }
}
