//! Library operators against an independent state-by-state model.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use qaffine::algebra::{chevalley_generators, local_q_generator, CartanData, GeneratorOptions, Sign};
use qaffine::anyons::{anyon, disorder_factor, AnyonFamily, DisorderSign, DisorderSpec};
use qaffine::fock::{
    bulk_projector, fermion_annihilate, Deformation, FockBasis, HalfInt, LatticeConfig, ModeId, OrderingScheme,
};
use qaffine::sparse::SparseOperator;

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    F,
    B,
}

#[derive(Clone, Copy)]
struct Slot {
    kind: Kind,
    flavor: usize,
    line: usize,
    r2: i32,
}

/// Fock space rebuilt from scratch: slots, mixed-radix indices, Jordan-Wigner
/// strings and disorder exponents evaluated state by state.
struct Model {
    slots: Vec<Slot>,
    nf: usize,
    nmax: u8,
    sea: Vec<bool>,
    q: Deformation,
}

impl Model {
    fn new(m: usize, n: usize, s: usize, lines: usize, nmax: u8, sea: Vec<bool>, q: Deformation) -> Self {
        let sites: Vec<i32> = (0..s as i32).map(|j| 2 * j - (s as i32 - 1)).collect();
        let mut slots = Vec::new();
        for kind in [Kind::F, Kind::B] {
            let flavors = if kind == Kind::F { m } else { n };
            for line in 0..lines {
                for &r2 in &sites {
                    for flavor in 1..=flavors {
                        slots.push(Slot { kind, flavor, line, r2 });
                    }
                }
            }
        }
        Model { slots, nf: m * s * lines, nmax, sea, q }
    }

    fn radix(&self, i: usize) -> usize {
        if i < self.nf {
            2
        } else {
            self.nmax as usize + 1
        }
    }

    fn dim(&self) -> usize {
        (0..self.slots.len()).map(|i| self.radix(i)).product()
    }

    fn decode(&self, mut x: usize) -> Vec<u8> {
        (0..self.slots.len())
            .map(|i| {
                let d = (x % self.radix(i)) as u8;
                x /= self.radix(i);
                d
            })
            .collect()
    }

    fn encode(&self, occ: &[u8]) -> usize {
        let mut x = 0;
        for i in (0..occ.len()).rev() {
            x = x * self.radix(i) + occ[i] as usize;
        }
        x
    }

    fn find(&self, kind: Kind, flavor: usize, line: usize, r2: i32) -> usize {
        self.slots
            .iter()
            .position(|s| s.kind == kind && s.flavor == flavor && s.line == line && s.r2 == r2)
            .unwrap()
    }

    fn pow(&self, x: f64) -> C64 {
        match self.q {
            Deformation::Phase { nu } => C64::from_polar(1.0, PI * nu * x),
            Deformation::Real { q } => C64::new(q.powf(x), 0.0),
        }
    }

    fn qnum(&self, n: f64) -> f64 {
        match self.q {
            Deformation::Phase { nu } => (PI * nu * n).sin() / (PI * nu).sin(),
            Deformation::Real { q } => (q.powf(n) - q.powf(-n)) / (q - 1.0 / q),
        }
    }

    fn normal(&self, occ: &[u8], i: usize) -> f64 {
        let s = self.slots[i];
        let n = occ[i] as f64;
        match (self.sea[s.line] && s.r2 < 0, s.kind) {
            (true, Kind::F) => n - 1.0,
            (true, Kind::B) => n + 1.0,
            _ => n,
        }
    }

    /// Exponent of the disorder string of slot `i`.
    fn exponent(&self, occ: &[u8], i: usize) -> f64 {
        let me = self.slots[i];
        let mut x = 0.0;
        for (j, t) in self.slots.iter().enumerate() {
            if t.kind != me.kind || t.flavor != me.flavor {
                continue;
            }
            let w = if t.line < me.line {
                -1.0
            } else if t.line > me.line {
                1.0
            } else {
                (t.r2 - me.r2).signum() as f64
            };
            x += w * self.normal(occ, j);
        }
        x
    }

    /// `K` (fermions `q^{-X/2}`, bosons `q^{X/2}`), tilde flips the sign.
    fn k(&self, occ: &[u8], i: usize, tilde: bool) -> C64 {
        let base = if self.slots[i].kind == Kind::F { -0.5 } else { 0.5 };
        let p = if tilde { -base } else { base };
        self.pow(p * self.exponent(occ, i))
    }

    /// Plain or q-deformed lowering on one state.
    fn lower(&self, occ: &[u8], i: usize, deformed: bool) -> Option<(Vec<u8>, C64)> {
        if occ[i] == 0 {
            return None;
        }
        let mut out = occ.to_vec();
        out[i] -= 1;
        let amp = if i < self.nf {
            let below: u32 = occ[..i].iter().map(|&v| v as u32).sum();
            if below.is_multiple_of(2) {
                1.0
            } else {
                -1.0
            }
        } else if deformed {
            self.qnum(occ[i] as f64).sqrt()
        } else {
            (occ[i] as f64).sqrt()
        };
        Some((out, C64::new(amp, 0.0)))
    }

    fn raise(&self, occ: &[u8], i: usize, deformed: bool) -> Option<(Vec<u8>, C64)> {
        let cap = if i < self.nf { 1 } else { self.nmax };
        if occ[i] >= cap {
            return None;
        }
        let mut up = occ.to_vec();
        up[i] += 1;
        self.lower(&up, i, deformed).map(|(_, a)| (up, a))
    }

    /// Anyon `K c` or its conjugate `c+ K^-1`.
    fn anyon(&self, occ: &[u8], i: usize, tilde: bool, dagger: bool) -> Option<(Vec<u8>, C64)> {
        if dagger {
            let k = self.k(occ, i, tilde);
            self.raise(occ, i, true).map(|(o, a)| (o, a / k))
        } else {
            self.lower(occ, i, true).map(|(o, a)| {
                let k = self.k(&o, i, tilde);
                (o, a * k)
            })
        }
    }

    fn dense(&self, f: impl Fn(&[u8]) -> Vec<(Vec<u8>, C64)>) -> Vec<Vec<C64>> {
        let d = self.dim();
        let mut m = vec![vec![C64::new(0.0, 0.0); d]; d];
        for col in 0..d {
            for (o, a) in f(&self.decode(col)) {
                m[self.encode(&o)][col] += a;
            }
        }
        m
    }
}

fn mode_of(s: Slot) -> ModeId {
    let site = HalfInt(s.r2);
    match s.kind {
        Kind::F => ModeId::fermion(s.flavor, site).on_line(s.line),
        Kind::B => ModeId::boson(s.flavor, site).on_line(s.line),
    }
}

/// Compares a single-branch column action with a library operator entry by entry.
fn agrees(model: &Model, op: &SparseOperator, f: impl Fn(&[u8]) -> Option<(Vec<u8>, C64)>) -> f64 {
    let mut worst = 0.0f64;
    let mut seen = 0usize;
    for col in 0..model.dim() {
        if let Some((o, a)) = f(&model.decode(col)) {
            worst = worst.max((op.get(model.encode(&o), col) - a).norm());
            seen += 1;
        }
    }
    assert_eq!(seen, op.nnz(), "operator has entries the model does not");
    worst
}

fn matmul(a: &[Vec<C64>], b: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let d = a.len();
    let mut out = vec![vec![C64::new(0.0, 0.0); d]; d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i][k];
            if x.norm() == 0.0 {
                continue;
            }
            for j in 0..d {
                out[i][j] += x * b[k][j];
            }
        }
    }
    out
}

fn max_diff(a: &[Vec<C64>], b: &[Vec<C64>]) -> f64 {
    a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn jordan_wigner_fermions_match_model() {
    for (m, n, s, lines) in [(2, 1, 2, 1), (1, 2, 2, 1), (2, 1, 2, 2), (2, 1, 4, 1)] {
        let cfg = LatticeConfig::new(m, n, s).with_lines(lines);
        let basis = FockBasis::new(&cfg).unwrap();
        let model = Model::new(m, n, s, lines, 2, vec![true; lines], cfg.q);
        assert_eq!(model.dim(), basis.dim());
        for i in 0..model.nf {
            let c = fermion_annihilate(&basis, &mode_of(model.slots[i])).unwrap();
            assert_eq!(agrees(&model, &c, |o| model.lower(o, i, false)), 0.0);
        }
    }
}

#[test]
fn anyons_match_model() {
    let cases = [
        (LatticeConfig::new(2, 1, 4), vec![true]),
        (LatticeConfig::new(2, 1, 4).with_ordering(OrderingScheme::Empty), vec![false]),
        (LatticeConfig::new(2, 1, 4).with_q(Deformation::real(1.3)), vec![true]),
        (
            LatticeConfig::new(2, 1, 2).with_line_orderings(vec![OrderingScheme::Sea, OrderingScheme::Empty]),
            vec![true, false],
        ),
    ];
    for (cfg, sea) in cases {
        let basis = FockBasis::new(&cfg).unwrap();
        let model = Model::new(2, 1, cfg.sites, cfg.lines, 2, sea, cfg.q);
        for (i, slot) in model.slots.iter().enumerate() {
            let mode = mode_of(*slot);
            for tilde in [false, true] {
                for dagger in [false, true] {
                    let op = anyon(&basis, &mode, AnyonFamily::of(mode.kind, tilde), dagger).unwrap();
                    let err = agrees(&model, &op, |o| model.anyon(o, i, tilde, dagger));
                    assert!(err < 1e-13, "{mode} tilde={tilde} dagger={dagger}: {err}");
                }
            }
        }
    }
}

#[test]
fn q_boson_matrix_elements() {
    let cfg = LatticeConfig::new(2, 1, 2).with_n_max(3).with_q(Deformation::phase(0.2));
    let basis = FockBasis::new(&cfg).unwrap();
    let model = Model::new(2, 1, 2, 1, 3, vec![true], cfg.q);
    for i in model.nf..model.slots.len() {
        let b = qaffine::oscillators::q_boson_annihilate(&basis, &mode_of(model.slots[i])).unwrap();
        assert!(agrees(&model, &b, |o| model.lower(o, i, true)) < 1e-14);
    }
}

#[test]
fn cartan_relation_alpha_one_dense() {
    let cfg = LatticeConfig::new(2, 1, 2).with_q(Deformation::phase(0.3));
    let basis = FockBasis::new(&cfg).unwrap();
    let model = Model::new(2, 1, 2, 1, 2, vec![true], cfg.q);
    let sites = [-1, 1];
    let e_plus = model.dense(|o| {
        let mut out = Vec::new();
        for r2 in sites {
            let (i, j) = (model.find(Kind::F, 1, 0, r2), model.find(Kind::F, 2, 0, r2));
            if let Some((o1, a1)) = model.anyon(o, j, false, false) {
                if let Some((o2, a2)) = model.anyon(&o1, i, false, true) {
                    out.push((o2, a1 * a2));
                }
            }
        }
        out
    });
    let e_minus = model.dense(|o| {
        let mut out = Vec::new();
        for r2 in sites {
            let (i, j) = (model.find(Kind::F, 1, 0, r2), model.find(Kind::F, 2, 0, r2));
            if let Some((o1, a1)) = model.anyon(o, i, true, false) {
                if let Some((o2, a2)) = model.anyon(&o1, j, true, true) {
                    out.push((o2, a1 * a2));
                }
            }
        }
        out
    });
    let bracket = model.dense(|o| {
        let h: f64 = sites
            .iter()
            .map(|&r2| {
                model.normal(o, model.find(Kind::F, 1, 0, r2)) - model.normal(o, model.find(Kind::F, 2, 0, r2))
            })
            .sum();
        vec![(o.to_vec(), C64::new(model.qnum(h), 0.0))]
    });
    let lhs = matmul(&e_plus, &e_minus);
    let rhs = matmul(&e_minus, &e_plus);
    let comm: Vec<Vec<C64>> =
        lhs.iter().zip(&rhs).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect();
    assert!(max_diff(&comm, &bracket) <= 1e-10);

    let set = chevalley_generators(&basis, &GeneratorOptions::deformed()).unwrap();
    assert!(max_diff(&set.e_plus[1].to_dense(), &e_plus) < 1e-14);
    assert!(max_diff(&set.e_minus[1].to_dense(), &e_minus) < 1e-14);
}

#[test]
fn disorder_factor_hand_values() {
    // Sea, S=2, q = e^{0.3 i pi}. The only string entry of K_i(1/2) is
    // t = -1/2 with weight -1, so K_i(1/2) = q^{:n_i(-1/2):/2}.
    let cfg = LatticeConfig::new(2, 1, 2);
    let basis = FockBasis::new(&cfg).unwrap();
    let q = Deformation::phase(0.3);
    for flavor in [1, 2] {
        let k = disorder_factor(
            &basis,
            &DisorderSpec { mode: ModeId::fermion(flavor, HalfInt::PLUS_HALF), sign: DisorderSign::Minus },
        )
        .unwrap();
        let empty = basis.index_of(&[0; 6]);
        assert!((k.get(empty, empty) - q.pow(-0.5)).norm() < 1e-15);
        let mut filled = [0u8; 6];
        filled[0] = 1;
        filled[1] = 1;
        let vac = basis.index_of(&filled);
        assert!((k.get(vac, vac) - C64::new(1.0, 0.0)).norm() < 1e-15);
    }
}

#[test]
fn central_charge_off_bulk_is_boundary_occupation() {
    for (m, n, scheme) in [(2, 1, OrderingScheme::Sea), (2, 1, OrderingScheme::Empty), (2, 2, OrderingScheme::Sea)] {
        let cfg = LatticeConfig::new(m, n, 2).with_ordering(scheme);
        let basis = FockBasis::new(&cfg).unwrap();
        let model = Model::new(m, n, 2, 1, 2, vec![scheme == OrderingScheme::Sea], cfg.q);
        let gamma = qaffine::algebra::central_charge_operator(
            &chevalley_generators(&basis, &GeneratorOptions::undeformed()).unwrap(),
        );
        let kappa = if scheme == OrderingScheme::Sea { 1.0 } else { 0.0 };
        let low = model.find(Kind::F, 1, 0, -1);
        let high = model.find(Kind::B, n, 0, 1);
        for x in 0..model.dim() {
            let o = model.decode(x);
            let expect = kappa + model.normal(&o, low) + model.normal(&o, high);
            assert_eq!(gamma.get(x, x).re, expect, "state {o:?}");
        }
    }
}

#[test]
fn anomaly_scalars_on_two_sites() {
    // [h^1, h^-1] on the pinned state: each fermion flavor gives n(-1/2) - n(1/2),
    // each boson flavor gives the same difference of boson numbers (zero here).
    let expect = [(OrderingScheme::Sea, [2.0, 1.0]), (OrderingScheme::Empty, [0.0, 0.0])];
    for (scheme, values) in expect {
        let cfg = LatticeConfig::new(2, 1, 2).with_ordering(scheme);
        let reports = qaffine::verify::suite_cartan_weyl(&cfg).unwrap();
        for (a, v) in [1, 2].into_iter().zip(values) {
            let r = reports
                .iter()
                .find(|r| r.id == "eq1a-anomaly" && r.param("a") == Some(&a.to_string()))
                .unwrap();
            assert!(r.passed());
            let s: f64 = r.param("scalar").unwrap().parse().unwrap();
            assert_eq!(s, v, "a={a} {scheme:?}");
        }
    }
}

#[test]
fn local_generators_satisfy_cartan_relation() {
    let cfg = LatticeConfig::new(2, 1, 2);
    let basis = FockBasis::new(&cfg).unwrap();
    let cartan = CartanData::new(2, 1).unwrap();
    let proj = bulk_projector(&basis, 0, 1);
    for alpha in 0..cartan.nodes() {
        for r in qaffine::algebra::piece_sites(&basis, alpha) {
            let up = local_q_generator(&basis, &cartan, alpha, 0, r, Sign::Plus).unwrap();
            let down = local_q_generator(&basis, &cartan, alpha, 0, r, Sign::Minus).unwrap();
            let h = qaffine::algebra::local_cartan_diag(&basis, &cartan, alpha, 0, r, true, false).unwrap();
            let lhs = up.supercommutator(cartan.is_odd(alpha), &down, cartan.is_odd(alpha));
            let qa = cartan.q_alpha_coproduct(&cfg.q, alpha);
            let rhs = qaffine::oscillators::q_bracket_op(&qa, &h);
            let res = qaffine::verify::domain_residual(&(&lhs - &rhs), &proj.keep);
            assert!(res < 1e-12, "alpha={alpha} r={r}: {res}");
        }
    }
}

#[test]
fn projector_rank_by_enumeration() {
    for (s, scheme) in [(2, OrderingScheme::Sea), (4, OrderingScheme::Sea), (4, OrderingScheme::Empty)] {
        let cfg = LatticeConfig::new(2, 1, s).with_ordering(scheme);
        let basis = FockBasis::new(&cfg).unwrap();
        let model = Model::new(2, 1, s, 1, 2, vec![scheme == OrderingScheme::Sea], cfg.q);
        let edge = s as i32 - 1;
        let keep: Vec<bool> = (0..model.dim())
            .map(|x| {
                let o = model.decode(x);
                model.slots.iter().zip(&o).all(|(sl, &v)| {
                    if sl.r2.abs() != edge {
                        return true;
                    }
                    let vac = sl.kind == Kind::F && sl.r2 < 0 && model.sea[0];
                    v == u8::from(vac)
                })
            })
            .collect();
        let p = bulk_projector(&basis, 1, 0);
        assert_eq!(p.keep, keep);
    }
    let sea = bulk_projector(&FockBasis::new(&LatticeConfig::new(2, 1, 4)).unwrap(), 1, 0);
    let empty = bulk_projector(
        &FockBasis::new(&LatticeConfig::new(2, 1, 4).with_ordering(OrderingScheme::Empty)).unwrap(),
        1,
        0,
    );
    assert_eq!(sea.rank(), empty.rank());
    assert_ne!(sea.keep, empty.keep);
}

#[test]
fn cartan_matrices_by_hand() {
    let c = CartanData::new(2, 1).unwrap();
    assert_eq!(c.matrix, vec![vec![0, 1, -1], vec![-1, 2, -1], vec![1, -1, 0]]);
    let c = CartanData::new(2, 2).unwrap();
    assert_eq!(
        c.matrix,
        vec![vec![0, 1, 0, -1], vec![-1, 2, -1, 0], vec![0, -1, 0, 1], vec![-1, 0, -1, 2]]
    );
}

#[test]
fn dimensions() {
    assert_eq!(FockBasis::new(&LatticeConfig::new(2, 1, 2)).unwrap().dim(), 144);
    assert_eq!(FockBasis::new(&LatticeConfig::new(2, 2, 2)).unwrap().dim(), 1296);
    assert!(FockBasis::new(&LatticeConfig::new(1, 1, 2)).is_err());
    assert!(matches!(
        FockBasis::new(&LatticeConfig::new(2, 2, 4)),
        Err(qaffine::Error::TooLarge { .. })
    ));
}
