//! Quantum adjoint action of the rescaled generators `E_a q_a^{-H_a/2}`.
//!
//! With `Delta(E) = E (x) 1 + q_a^{-H_a} (x) E` and `S(E) = -q_a^{H_a} E` the
//! action on a homogeneous `Y` of `H_a`-weight `w` reduces to
//! `E Y - (-1)^{|a||Y|} q_a^{-w} Y E`.

use crate::algebra::{GeneratorSet, Sign};
use crate::fock::Deformation;
use crate::oscillators::diag_exp;
use crate::sparse::{SparseOperator, C64};

/// `E_alpha^sign q_alpha^{-H_alpha/2}`.
pub fn script_e(set: &GeneratorSet, alpha: usize, sign: Sign, q_alpha: &Deformation) -> SparseOperator {
    set.e(alpha, sign).scale_cols(&diag_exp(q_alpha, &set.h_diag(alpha), -0.5))
}

/// Closed form, for `Y` of `H_alpha`-weight `weight` and parity `y_odd`.
pub fn ad_q(
    set: &GeneratorSet,
    alpha: usize,
    sign: Sign,
    q_alpha: &Deformation,
    y: &SparseOperator,
    y_odd: bool,
    weight: i32,
) -> SparseOperator {
    let e = script_e(set, alpha, sign, q_alpha);
    let graded = if set.cartan.is_odd(alpha) && y_odd { -1.0 } else { 1.0 };
    let c = q_alpha.pow(-(weight as f64)) * graded;
    e.twisted_commutator(y, c)
}

/// The Hopf formula `(-1)^{|X2||Y|} X1 Y S(X2)` summed term by term, with the
/// antipode taken from `S(e) = -q_a^{+-a_aa/2} e`, `S(q^{-H/2}) = q^{H/2}`.
pub fn ad_q_oracle(
    set: &GeneratorSet,
    alpha: usize,
    sign: Sign,
    q_alpha: &Deformation,
    y: &SparseOperator,
    y_odd: bool,
) -> SparseOperator {
    let h = set.h_diag(alpha);
    let e = set.e(alpha, sign);
    let script = script_e(set, alpha, sign, q_alpha);
    let a_aa = set.cartan.a(alpha, alpha) as f64;
    // S(E q^{-H/2}) = S(q^{-H/2}) S(E); both factors even-odd so no extra sign
    let s_e = e.scale(-q_alpha.pow(sign.factor() as f64 * a_aa / 2.0));
    let s_script = s_e.scale_rows(&diag_exp(q_alpha, &h, 0.5));
    let k_inv = diag_exp(q_alpha, &h, -1.0);

    let first = &script * y;
    let sign_y = if set.cartan.is_odd(alpha) && y_odd { -1.0 } else { 1.0 };
    let second = (y * &s_script).scale_rows(&k_inv).scale(C64::new(sign_y, 0.0));
    &first + &second
}
