use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{config_err, Result};

pub const DEFAULT_DIM_CAP: usize = 100_000;

/// Lattice position stored as twice its value, so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt(pub i32);

impl HalfInt {
    pub const MINUS_HALF: HalfInt = HalfInt(-1);
    pub const PLUS_HALF: HalfInt = HalfInt(1);

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn shift(self, by: i32) -> HalfInt {
        HalfInt(self.0 + 2 * by)
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Sign function on half-integer differences.
pub fn step_sign(x: i32) -> i32 {
    x.signum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderingScheme {
    /// Negative-position fermion modes are filled in the reference state.
    Sea,
    /// Every mode is empty in the reference state.
    Empty,
}

impl OrderingScheme {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "sea" => Some(Self::Sea),
            "empty" => Some(Self::Empty),
            _ => None,
        }
    }
}

/// Which number operators enter the cross-line disorder sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossLineNumbers {
    #[default]
    Normal,
    Bare,
}

/// The deformation parameter. Stored so that every power `q^x` is exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Deformation {
    /// q = exp(i pi nu)
    Phase { nu: f64 },
    /// q real and positive
    Real { q: f64 },
}

impl Deformation {
    pub fn phase(nu: f64) -> Self {
        Deformation::Phase { nu }
    }

    pub fn real(q: f64) -> Self {
        Deformation::Real { q }
    }

    pub fn classical() -> Self {
        Deformation::Real { q: 1.0 }
    }

    pub fn value(&self) -> Complex64 {
        self.pow(1.0)
    }

    pub fn pow(&self, x: f64) -> Complex64 {
        match *self {
            Deformation::Phase { nu } => Complex64::from_polar(1.0, PI * nu * x),
            Deformation::Real { q } => Complex64::new(q.powf(x), 0.0),
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            Deformation::Phase { nu } => Deformation::Phase { nu: -nu },
            Deformation::Real { q } => Deformation::Real { q: 1.0 / q },
        }
    }

    pub fn is_classical(&self) -> bool {
        match *self {
            Deformation::Phase { nu } => nu == 0.0,
            Deformation::Real { q } => q == 1.0,
        }
    }

    /// `[x]_q = (q^x - q^-x)/(q - q^-1)`, real for both families, `x` at q = 1.
    pub fn q_number(&self, x: f64) -> f64 {
        match *self {
            Deformation::Phase { nu } => {
                let s = (PI * nu).sin();
                if s.abs() < 1e-300 {
                    x
                } else {
                    (PI * nu * x).sin() / s
                }
            }
            Deformation::Real { q } => {
                let l = q.ln();
                if l.abs() < 1e-300 {
                    x
                } else {
                    (l * x).sinh() / l.sinh()
                }
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Deformation::Phase { nu } if !nu.is_finite() || nu.abs() >= 1.0 => {
                config_err(format!("phase parameter nu = {nu} must lie in (-1, 1)"))
            }
            Deformation::Real { q } if !q.is_finite() || q <= 0.0 => {
                config_err(format!("real deformation q = {q} must be positive"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Deformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deformation::Phase { nu } => write!(f, "q = exp(i pi {nu})"),
            Deformation::Real { q } => write!(f, "q = {q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub fermion_flavors: usize,
    pub boson_flavors: usize,
    /// Sites per line; positions are `-(S-1)/2, ..., (S-1)/2`.
    pub sites: usize,
    pub lines: usize,
    pub n_max: usize,
    /// One ordering per line, bottom line first.
    pub orderings: Vec<OrderingScheme>,
    pub q: Deformation,
    pub tol: f64,
    pub dim_cap: usize,
    pub cross_line_numbers: CrossLineNumbers,
    /// Multiply the affine pieces on sea lines by the phase that cancels the
    /// constant left over by normal ordering at the Fermi point.
    pub compensate_affine_phase: bool,
}

impl LatticeConfig {
    pub fn new(fermion_flavors: usize, boson_flavors: usize, sites: usize) -> Self {
        LatticeConfig {
            fermion_flavors,
            boson_flavors,
            sites,
            lines: 1,
            n_max: 2,
            orderings: vec![OrderingScheme::Sea],
            q: Deformation::phase(0.3),
            tol: 1e-10,
            dim_cap: DEFAULT_DIM_CAP,
            cross_line_numbers: CrossLineNumbers::Normal,
            compensate_affine_phase: false,
        }
    }

    pub fn with_lines(mut self, lines: usize) -> Self {
        let scheme = self.orderings.first().copied().unwrap_or(OrderingScheme::Sea);
        self.lines = lines;
        self.orderings = vec![scheme; lines];
        self
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }

    pub fn with_ordering(mut self, scheme: OrderingScheme) -> Self {
        self.orderings = vec![scheme; self.lines];
        self
    }

    pub fn with_line_orderings(mut self, orderings: Vec<OrderingScheme>) -> Self {
        self.lines = orderings.len();
        self.orderings = orderings;
        self
    }

    pub fn with_q(mut self, q: Deformation) -> Self {
        self.q = q;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_dim_cap(mut self, cap: usize) -> Self {
        self.dim_cap = cap;
        self
    }

    pub fn with_cross_line_numbers(mut self, c: CrossLineNumbers) -> Self {
        self.cross_line_numbers = c;
        self
    }

    pub fn with_affine_phase_compensation(mut self, on: bool) -> Self {
        self.compensate_affine_phase = on;
        self
    }

    /// Number of simple roots besides the affine one.
    pub fn rank(&self) -> usize {
        self.fermion_flavors + self.boson_flavors - 1
    }

    pub fn ordering(&self, line: usize) -> OrderingScheme {
        self.orderings[line]
    }

    pub fn sea_lines(&self) -> usize {
        self.orderings.iter().filter(|&&s| s == OrderingScheme::Sea).count()
    }

    pub fn positions(&self) -> Vec<HalfInt> {
        let s = self.sites as i32;
        (0..s).map(|j| HalfInt(2 * j - (s - 1))).collect()
    }

    pub fn min_position(&self) -> HalfInt {
        HalfInt(1 - self.sites as i32)
    }

    pub fn max_position(&self) -> HalfInt {
        HalfInt(self.sites as i32 - 1)
    }

    pub fn contains(&self, r: HalfInt) -> bool {
        r.0.rem_euclid(2) == 1 && r >= self.min_position() && r <= self.max_position()
    }

    pub fn site_index(&self, r: HalfInt) -> usize {
        ((r.0 + self.sites as i32 - 1) / 2) as usize
    }

    pub fn fermion_modes(&self) -> usize {
        self.fermion_flavors * self.sites * self.lines
    }

    pub fn boson_modes(&self) -> usize {
        self.boson_flavors * self.sites * self.lines
    }

    /// `2^F (n_max+1)^B`, saturating rather than overflowing.
    pub fn dimension(&self) -> u128 {
        let f = self.fermion_modes() as u32;
        let b = self.boson_modes() as u32;
        let fpart = 2u128.checked_pow(f).unwrap_or(u128::MAX);
        let bpart = (self.n_max as u128 + 1).checked_pow(b).unwrap_or(u128::MAX);
        fpart.saturating_mul(bpart)
    }

    pub fn validate(&self) -> Result<()> {
        if self.fermion_flavors == 0 || self.boson_flavors == 0 {
            return config_err("need at least one fermion and one boson flavor");
        }
        if self.rank() < 2 {
            return config_err("rank M+N-1 must be at least 2");
        }
        if self.sites < 2 || !self.sites.is_multiple_of(2) {
            return config_err(format!("site count {} must be even and at least 2", self.sites));
        }
        if self.lines == 0 || self.orderings.len() != self.lines {
            return config_err(format!(
                "{} orderings given for {} lines",
                self.orderings.len(),
                self.lines
            ));
        }
        if self.n_max == 0 {
            return config_err("boson cutoff must be at least 1");
        }
        if !(self.tol > 0.0) {
            return config_err("tolerance must be positive");
        }
        self.q.validate()?;
        for n in 1..=self.n_max {
            let qn = self.q.q_number(n as f64);
            if !(qn > 0.0) {
                return config_err(format!(
                    "[{n}]_q = {qn:.4} is not positive; lower n_max below the root-of-unity bound"
                ));
            }
        }
        Ok(())
    }
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig::new(2, 1, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_symmetric_half_integers() {
        let cfg = LatticeConfig::new(2, 1, 4);
        let p: Vec<f64> = cfg.positions().iter().map(|h| h.value()).collect();
        assert_eq!(p, vec![-1.5, -0.5, 0.5, 1.5]);
        assert!(cfg.contains(HalfInt(3)));
        assert!(!cfg.contains(HalfInt(5)));
        assert!(!cfg.contains(HalfInt(2)));
        assert_eq!(cfg.site_index(HalfInt(-1)), 1);
    }

    #[test]
    fn q_numbers() {
        let q = Deformation::phase(0.3);
        assert!((q.q_number(1.0) - 1.0).abs() < 1e-15);
        let expect = (0.6 * PI).sin() / (0.3 * PI).sin();
        assert!((q.q_number(2.0) - expect).abs() < 1e-15);
        assert_eq!(Deformation::classical().q_number(3.0), 3.0);
        let r = Deformation::real(1.3);
        assert!((r.q_number(2.0) - (1.3 + 1.0 / 1.3)).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(LatticeConfig::new(1, 1, 2).validate().is_err());
        assert!(LatticeConfig::new(2, 1, 3).validate().is_err());
        assert!(LatticeConfig::new(2, 1, 2).with_n_max(4).validate().is_err());
        assert!(LatticeConfig::new(2, 1, 2).with_n_max(3).validate().is_ok());
        assert!(LatticeConfig::new(2, 1, 2).with_q(Deformation::real(-1.0)).validate().is_err());
        assert!(LatticeConfig::default().validate().is_ok());
    }

    #[test]
    fn dimension_counts_modes() {
        assert_eq!(LatticeConfig::new(2, 1, 2).dimension(), 144);
        assert_eq!(LatticeConfig::new(2, 2, 2).dimension(), 1296);
        assert_eq!(LatticeConfig::new(2, 1, 4).dimension(), 20736);
    }
}
