use super::{Relation, RelationReport, Workspace};
use crate::algebra::{affine_phase, chevalley_generators, local_cartan_terms, local_q_generator, piece_sites, Sign};
use crate::anyons::{disorder_weight, Region};
use crate::error::Result;
use crate::fock::{occupation_vector, CrossLineNumbers, HalfInt, OrderingScheme, Projection};
use crate::oscillators::{diag_exp, normal_ordering_offset};

impl Workspace {
    /// Diagonal of `h_alpha(t)` on `line` without the Fermi-point constant, in
    /// the numbers the disorder strings of a piece on `home_line` are built from.
    fn tail_piece(&self, alpha: usize, home_line: usize, line: usize, t: HalfInt) -> Result<Vec<f64>> {
        let c = &self.deformed.cartan;
        let bare = line != home_line && self.cfg.cross_line_numbers == CrossLineNumbers::Bare;
        let mut out = vec![0.0; self.basis.dim()];
        for (mode, coeff) in local_cartan_terms(c, alpha, line, t) {
            let off = if bare { 0.0 } else { normal_ordering_offset(&mode, self.cfg.ordering(line)) };
            for (o, v) in out.iter_mut().zip(occupation_vector(&self.basis, &mode)?) {
                *o += coeff * (v + off);
            }
        }
        Ok(out)
    }

    /// `sum_{(l,t) != (line,r)} w h_alpha(l,t)`: the exponent the anyonic
    /// piece at `(line, r)` carries beyond the q-oscillator generator.
    fn tail_exponent(&self, alpha: usize, line: usize, r: HalfInt) -> Result<Vec<f64>> {
        let mut tail = vec![0.0; self.basis.dim()];
        for l in 0..self.cfg.lines {
            for t in piece_sites(&self.basis, alpha) {
                let w = disorder_weight(line, r, l, t);
                if w == 0 {
                    continue;
                }
                for (x, v) in tail.iter_mut().zip(self.tail_piece(alpha, line, l, t)?) {
                    *x += w as f64 * v;
                }
            }
        }
        Ok(tail)
    }

    fn halves(&self) -> (Region, Region, &'static str) {
        let cfg = &self.cfg;
        if cfg.lines == 1 {
            let left = Region::where_(cfg, |_, r| r.is_negative());
            (left.clone(), left.complement(), "sites")
        } else {
            let cut = cfg.lines / 2;
            let low = Region::where_(cfg, |l, _| l < cut);
            (low.clone(), low.complement(), "lines")
        }
    }

    pub fn coproduct(&self) -> Result<Vec<RelationReport>> {
        let set = &self.deformed;
        let c = &set.cartan;
        let cfg = &self.cfg;
        let tol = self.tol();
        let mut out = Vec::new();

        for alpha in 0..c.nodes() {
            let qa = self.q_alpha_coproduct(alpha);
            let wrong_q = c.q_alpha_coproduct(&cfg.q, alpha).inverse();
            let proj = self.projector(&Projection {
                margin: usize::from(alpha == 0),
                headroom: vec![0; c.boson_flavors],
            });
            let mut wrong = 0.0f64;
            let mut visible = 0.0f64;
            for piece in &set.local[alpha] {
                let tail = self.tail_exponent(alpha, piece.line, piece.site)?;
                for s in [Sign::Plus, Sign::Minus] {
                    let mut hat = local_q_generator(&self.basis, c, alpha, piece.line, piece.site, s)?;
                    if alpha == 0
                        && cfg.compensate_affine_phase
                        && cfg.ordering(piece.line) == OrderingScheme::Sea
                    {
                        hat = hat.scale(affine_phase(&cfg.q, piece.site));
                    }
                    let actual = match s {
                        Sign::Plus => &piece.e_plus,
                        Sign::Minus => &piece.e_minus,
                    };
                    let expected = hat.scale_cols(&diag_exp(&qa, &tail, 0.5));
                    out.push(
                        Relation::new("eq57")
                            .param("alpha", alpha)
                            .param("line", piece.line)
                            .param("r", piece.site)
                            .param("sign", s.symbol())
                            .on_domain(&(actual - &expected), &proj, tol),
                    );
                    let flipped = hat.scale_cols(&diag_exp(&wrong_q, &tail, 0.5));
                    wrong = wrong.max(super::domain_residual(&(actual - &flipped), &proj.keep));
                    visible = visible.max(super::domain_residual(&(&expected - &flipped), &proj.keep));
                }
            }
            let control = Relation::new("eq57-wrong-q-alpha").param("alpha", alpha).expect_broken(1e-3);
            if visible > 0.0 {
                out.push(control.scalar_on(wrong, tol, &proj));
            } else {
                out.push(control.not_applicable("the q_alpha choice is invisible on the projected subspace"));
            }
        }

        let (left, right, cut) = self.halves();
        let mut opts = self.generator_options(true);
        let left_set = chevalley_generators(&self.basis, &opts.clone().in_region(left.clone()))?;
        opts.disorder.region = Some(right.clone());
        let right_set = chevalley_generators(&self.basis, &opts)?;
        for alpha in 0..c.nodes() {
            let rel = Relation::new("coproduct-split").param("alpha", alpha).param("cut", cut);
            if alpha == 0 && cfg.lines == 1 {
                out.push(rel.not_applicable("affine pieces straddle the cut between sites"));
                continue;
            }
            let qa = self.q_alpha_coproduct(alpha);
            let h_of = |region: &Region| -> Result<Vec<f64>> {
                let mut h = vec![0.0; self.basis.dim()];
                for l in 0..cfg.lines {
                    for t in piece_sites(&self.basis, alpha) {
                        if region.contains(l, t) {
                            for (x, v) in h.iter_mut().zip(self.tail_piece(alpha, l, l, t)?) {
                                *x += v;
                            }
                        }
                    }
                }
                Ok(h)
            };
            let (hl, hr) = (h_of(&left)?, h_of(&right)?);
            let proj = self.projector(&Projection {
                margin: usize::from(alpha == 0),
                headroom: vec![0; c.boson_flavors],
            });
            for s in [Sign::Plus, Sign::Minus] {
                let split = &left_set.e(alpha, s).scale_cols(&diag_exp(&qa, &hr, 0.5))
                    + &right_set.e(alpha, s).scale_rows(&diag_exp(&qa, &hl, -0.5));
                let d = set.e(alpha, s) - &split;
                out.push(rel.clone().param("sign", s.symbol()).on_domain(&d, &proj, tol));
            }
        }
        Ok(out)
    }
}
