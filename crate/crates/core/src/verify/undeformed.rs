use super::serre::{quartic_applicable, quartic_variants};
use super::{Relation, RelationReport, Workspace};
use crate::algebra::Sign;

impl Workspace {
    /// Defining relations of the loop superalgebra on the plain-oscillator generators.
    pub fn undeformed_suite(&self) -> Vec<RelationReport> {
        let set = &self.undeformed;
        let c = &set.cartan;
        let n = c.nodes();
        let tol = self.tol();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d = set.h[a].commutator(&set.h[b]);
                out.push(Relation::new("eq2a").param("alpha", a).param("beta", b).exact(&d, tol));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for s in [Sign::Plus, Sign::Minus] {
                    let e = set.e(b, s);
                    let d = &set.h[a].commutator(e) - &e.scale_real((s.factor() * c.a(a, b)) as f64);
                    let mut p = self.projection_for(&[(b, s)]);
                    p.margin = usize::from(a == 0 || b == 0);
                    out.push(
                        Relation::new("eq2b")
                            .param("alpha", a)
                            .param("beta", b)
                            .param("sign", s.symbol())
                            .on_domain(&d, &self.projector(&p), tol),
                    );
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = set.e_plus[a].supercommutator(c.is_odd(a), &set.e_minus[b], c.is_odd(b));
                let d = if a == b { &lhs - &set.h[a] } else { lhs };
                let p = self.projection_for(&[(a, Sign::Plus), (b, Sign::Minus)]);
                out.push(Relation::new("eq2c").param("alpha", a).param("beta", b).on_domain(&d, &self.projector(&p), tol));
            }
        }
        for a in (0..n).filter(|&a| c.is_isotropic(a)) {
            for s in [Sign::Plus, Sign::Minus] {
                let e = set.e(a, s);
                let p = self.projection_for(&[(a, s), (a, s)]);
                out.push(
                    Relation::new("eq2d")
                        .param("alpha", a)
                        .param("sign", s.symbol())
                        .on_domain(&e.anticommutator(e), &self.projector(&p), tol),
                );
            }
        }
        for s in [Sign::Plus, Sign::Minus] {
            for a in 0..n {
                for b in (0..n).filter(|&b| b != a) {
                    let at = c.a_tilde(a, b);
                    let power = (1 - at) as usize;
                    let mut y = set.e(b, s).clone();
                    let mut odd = c.is_odd(b);
                    let mut word = vec![(b, s)];
                    for _ in 0..power {
                        y = set.e(a, s).supercommutator(c.is_odd(a), &y, odd);
                        odd ^= c.is_odd(a);
                        word.push((a, s));
                    }
                    let p = self.projection_for(&word);
                    out.push(
                        Relation::new("eq3")
                            .param("alpha", a)
                            .param("beta", b)
                            .param("sign", s.symbol())
                            .param("a_tilde", at)
                            .on_domain(&y, &self.projector(&p), tol),
                    );
                }
            }
            for (_, id, alpha, left, right) in quartic_variants(set) {
                let rel = Relation::new(id).param("alpha", alpha).param("sign", s.symbol());
                if !quartic_applicable(set) {
                    out.push(rel.not_applicable("needs at least two fermion and two boson flavors"));
                    continue;
                }
                let (el, ea, er) = (set.e(left, s), set.e(alpha, s), set.e(right, s));
                let x = el.commutator(ea);
                let y = er.commutator(ea);
                let d = x.anticommutator(&y);
                let p = self.projection_for(&[(left, s), (alpha, s), (alpha, s), (right, s)]);
                out.push(
                    rel.param("neighbors", format!("{left},{right}")).on_domain(&d, &self.projector(&p), tol),
                );
            }
        }
        out
    }
}
