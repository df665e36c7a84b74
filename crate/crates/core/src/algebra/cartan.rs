use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{config_err, Result};
use crate::fock::Deformation;

/// Weight `epsilon_i` (fermion flavor i) or `delta_k` (boson flavor k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Weight {
    Fermion(usize),
    Boson(usize),
}

impl Weight {
    pub fn is_odd_against(self, other: Weight) -> bool {
        matches!(
            (self, other),
            (Weight::Fermion(_), Weight::Boson(_)) | (Weight::Boson(_), Weight::Fermion(_))
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Fermion(i) => write!(f, "eps{i}"),
            Weight::Boson(k) => write!(f, "delta{k}"),
        }
    }
}

/// A root `plus - minus`. Its generators are `X_plus^+ X_minus` bilinears.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub plus: Weight,
    pub minus: Weight,
}

impl Root {
    pub fn new(plus: Weight, minus: Weight) -> Self {
        Root { plus, minus }
    }

    pub fn is_odd(&self) -> bool {
        self.plus.is_odd_against(self.minus)
    }

    pub fn negate(&self) -> Root {
        Root { plus: self.minus, minus: self.plus }
    }

    /// `self + other` when it is again a root.
    pub fn add(&self, other: &Root) -> Option<Root> {
        if self.minus == other.plus && self.plus != other.minus {
            Some(Root::new(self.plus, other.minus))
        } else if other.minus == self.plus && other.plus != self.minus {
            Some(Root::new(other.plus, self.minus))
        } else {
            None
        }
    }

    pub fn parse(s: &str) -> Option<Root> {
        let (a, b) = s.split_once('-')?;
        let w = |t: &str| -> Option<Weight> {
            if let Some(i) = t.strip_prefix("eps") {
                i.parse().ok().filter(|&i| i > 0).map(Weight::Fermion)
            } else if let Some(k) = t.strip_prefix("delta") {
                k.parse().ok().filter(|&k| k > 0).map(Weight::Boson)
            } else {
                None
            }
        };
        let (p, m) = (w(a)?, w(b)?);
        (p != m).then_some(Root::new(p, m))
    }

    pub fn all(fermion_flavors: usize, boson_flavors: usize) -> Vec<Root> {
        let ws: Vec<Weight> = (1..=fermion_flavors)
            .map(Weight::Fermion)
            .chain((1..=boson_flavors).map(Weight::Boson))
            .collect();
        let mut out = Vec::new();
        for &p in &ws {
            for &m in &ws {
                if p != m {
                    out.push(Root::new(p, m));
                }
            }
        }
        out
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.plus, self.minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub fermion_flavors: usize,
    pub boson_flavors: usize,
    pub rank: usize,
    pub matrix: Vec<Vec<i32>>,
    pub tilde: Vec<Vec<i32>>,
    /// Symmetrizers with `d_0 = 1`.
    pub d: Vec<i32>,
    pub odd: Vec<bool>,
}

impl CartanData {
    pub fn new(fermion_flavors: usize, boson_flavors: usize) -> Result<Self> {
        if fermion_flavors == 0 || boson_flavors == 0 || fermion_flavors + boson_flavors < 3 {
            return config_err("rank M+N-1 must be at least 2 with M, N >= 1");
        }
        let m = fermion_flavors;
        let r = m + boson_flavors - 1;
        let n = r + 1;
        let mut a = vec![vec![0i32; n]; n];
        for (alpha, row) in a.iter_mut().enumerate() {
            row[alpha] = if alpha == 0 || alpha == m { 0 } else { 2 };
        }
        for alpha in 1..=r {
            a[alpha][alpha - 1] += -1;
            a[alpha][(alpha + 1) % n] += if alpha == m { 1 } else { -1 };
        }
        a[0][1] += 1;
        a[0][r] += -1;
        let tilde = a
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| if i != j && v > 0 { -1 } else { v }).collect())
            .collect();
        let d = (0..n).map(|alpha| if alpha <= m { 1 } else { -1 }).collect();
        let odd = (0..n).map(|alpha| alpha == 0 || alpha == m).collect();
        Ok(CartanData { fermion_flavors, boson_flavors, rank: r, matrix: a, tilde, d, odd })
    }

    pub fn nodes(&self) -> usize {
        self.rank + 1
    }

    pub fn a(&self, alpha: usize, beta: usize) -> i32 {
        self.matrix[alpha][beta]
    }

    pub fn a_tilde(&self, alpha: usize, beta: usize) -> i32 {
        self.tilde[alpha][beta]
    }

    pub fn is_odd(&self, alpha: usize) -> bool {
        self.odd[alpha]
    }

    pub fn is_isotropic(&self, alpha: usize) -> bool {
        self.matrix[alpha][alpha] == 0
    }

    /// Symmetrizers that make `d_a a_ab = d_b a_ba` hold for the affine rows too.
    pub fn coproduct_d(&self) -> Vec<i32> {
        let mut d = self.d.clone();
        d[0] = -1;
        d
    }

    pub fn q_alpha(&self, q: &Deformation, alpha: usize) -> Deformation {
        if self.d[alpha] > 0 {
            *q
        } else {
            q.inverse()
        }
    }

    pub fn q_alpha_coproduct(&self, q: &Deformation, alpha: usize) -> Deformation {
        if self.coproduct_d()[alpha] > 0 {
            *q
        } else {
            q.inverse()
        }
    }

    /// Root of `e_alpha^+` and its mode number.
    pub fn simple_root(&self, alpha: usize) -> (Root, i32) {
        use Weight::*;
        let m = self.fermion_flavors;
        if alpha == 0 {
            (Root::new(Boson(self.boson_flavors), Fermion(1)), 1)
        } else if alpha < m {
            (Root::new(Fermion(alpha), Fermion(alpha + 1)), 0)
        } else if alpha == m {
            (Root::new(Fermion(m), Boson(1)), 0)
        } else {
            (Root::new(Boson(alpha - m), Boson(alpha - m + 1)), 0)
        }
    }

    /// Boson flavor raised by `e_alpha^sign`, if any.
    pub fn raised_boson(&self, alpha: usize, sign: Sign) -> Option<usize> {
        let (root, _) = self.simple_root(alpha);
        let w = match sign {
            Sign::Plus => root.plus,
            Sign::Minus => root.minus,
        };
        match w {
            Weight::Boson(k) => Some(k),
            Weight::Fermion(_) => None,
        }
    }

    /// Coefficients of `h_a` (a = 1..R) on the weights: `h_a = sum_w c_w n_w`.
    pub fn cartan_coefficients(&self, a: usize) -> Vec<(Weight, i32)> {
        use Weight::*;
        let m = self.fermion_flavors;
        if a < m {
            vec![(Fermion(a), 1), (Fermion(a + 1), -1)]
        } else if a == m {
            vec![(Fermion(m), 1), (Boson(1), 1)]
        } else {
            vec![(Boson(a - m), 1), (Boson(a - m + 1), -1)]
        }
    }

    /// `root(h_a)` for a = 1..R.
    pub fn pairing(&self, a: usize, root: &Root) -> i32 {
        self.cartan_coefficients(a)
            .iter()
            .map(|&(w, c)| {
                let mut v = 0;
                if w == root.plus {
                    v += c;
                }
                if w == root.minus {
                    v -= c;
                }
                v
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cartan_matrices() {
        let c = CartanData::new(2, 1).unwrap();
        assert_eq!(c.matrix, vec![vec![0, 1, -1], vec![-1, 2, -1], vec![1, -1, 0]]);
        let c = CartanData::new(2, 2).unwrap();
        assert_eq!(
            c.matrix,
            vec![vec![0, 1, 0, -1], vec![-1, 2, -1, 0], vec![0, -1, 0, 1], vec![-1, 0, -1, 2]]
        );
        assert_eq!(c.tilde[0][1], -1);
        assert_eq!(c.tilde[2][3], -1);
        assert_eq!(c.d, vec![1, 1, 1, -1]);
        assert_eq!(c.odd, vec![true, false, true, false]);
        assert!(CartanData::new(1, 1).is_err());
    }

    #[test]
    fn coproduct_symmetrizers_symmetrize_all_rows() {
        for (m, n) in [(2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 1)] {
            let c = CartanData::new(m, n).unwrap();
            let d = c.coproduct_d();
            for i in 0..c.nodes() {
                for j in 0..c.nodes() {
                    assert_eq!(d[i] * c.a(i, j), d[j] * c.a(j, i), "({m},{n}) at {i},{j}");
                }
            }
        }
    }

    #[test]
    fn simple_roots_pair_to_cartan_matrix() {
        let c = CartanData::new(2, 2).unwrap();
        for a in 1..=c.rank {
            for beta in 0..c.nodes() {
                let (root, _) = c.simple_root(beta);
                assert_eq!(c.pairing(a, &root), c.a(a, beta), "a={a} beta={beta}");
            }
        }
    }

    #[test]
    fn root_parsing_and_sums() {
        let r = Root::parse("eps1-delta1").unwrap();
        assert!(r.is_odd());
        assert_eq!(r.to_string(), "eps1-delta1");
        assert!(Root::parse("eps1-eps1").is_none());
        let s = Root::parse("delta1-eps2").unwrap();
        assert_eq!(r.add(&s), Root::parse("eps1-eps2"));
        assert_eq!(Root::all(2, 1).len(), 6);
    }
}
