use rayon::prelude::*;

use super::{Relation, RelationReport, Workspace};
use crate::algebra::Sign;
use crate::oscillators::q_bracket_op;

#[derive(Debug, Clone, Copy)]
enum Job {
    CartanCommute(usize, usize),
    Weight(usize, usize, Sign),
    Bracket(usize, usize),
    Isotropic(usize, Sign),
}

impl Workspace {
    /// `[H, H] = 0`, `[H_a, E_b] = +-a_ab E_b`, `[[E_a^+, E_b^-]] = delta [H_a]_{q_a}`
    /// and `{E_a, E_a} = 0` at the isotropic nodes.
    pub fn quantum(&self) -> Vec<RelationReport> {
        let set = &self.deformed;
        let c = &set.cartan;
        let n = c.nodes();
        let mut jobs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                jobs.push(Job::CartanCommute(a, b));
            }
        }
        for a in 0..n {
            for b in 0..n {
                jobs.push(Job::Weight(a, b, Sign::Plus));
                jobs.push(Job::Weight(a, b, Sign::Minus));
            }
        }
        for a in 0..n {
            for b in 0..n {
                jobs.push(Job::Bracket(a, b));
            }
        }
        for a in (0..n).filter(|&a| c.is_isotropic(a)) {
            jobs.push(Job::Isotropic(a, Sign::Plus));
            jobs.push(Job::Isotropic(a, Sign::Minus));
        }
        let tol = self.tol();
        jobs.par_iter()
            .map(|job| match *job {
                Job::CartanCommute(a, b) => {
                    let d = set.h[a].commutator(&set.h[b]);
                    Relation::new("eq7a").param("alpha", a).param("beta", b).exact(&d, tol)
                }
                Job::Weight(a, b, s) => {
                    let e = set.e(b, s);
                    let k = (s.factor() * c.a(a, b)) as f64;
                    let d = &set.h[a].commutator(e) - &e.scale_real(k);
                    let mut p = self.projection_for(&[(b, s)]);
                    p.margin = usize::from(a == 0 || b == 0);
                    Relation::new("eq7b")
                        .param("alpha", a)
                        .param("beta", b)
                        .param("sign", s.symbol())
                        .on_domain(&d, &self.projector(&p), tol)
                }
                Job::Bracket(a, b) => {
                    let lhs = set.e_plus[a].supercommutator(c.is_odd(a), &set.e_minus[b], c.is_odd(b));
                    let d = if a == b { &lhs - &q_bracket_op(&self.q_alpha(a), &set.h_diag(a)) } else { lhs };
                    let p = self.projection_for(&[(a, Sign::Plus), (b, Sign::Minus)]);
                    Relation::new("eq7c").param("alpha", a).param("beta", b).on_domain(&d, &self.projector(&p), tol)
                }
                Job::Isotropic(a, s) => {
                    let e = set.e(a, s);
                    let d = e.anticommutator(e);
                    let p = self.projection_for(&[(a, s), (a, s)]);
                    Relation::new("eq7d")
                        .param("alpha", a)
                        .param("sign", s.symbol())
                        .on_domain(&d, &self.projector(&p), tol)
                }
            })
            .collect()
    }
}
