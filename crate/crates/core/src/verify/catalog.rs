//! Stable list of every relation id a suite can report.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub tag: &'static str,
    pub suite: &'static str,
    pub description: &'static str,
}

pub const SUITES: &[&str] = &[
    "oscillators",
    "braiding",
    "quantum",
    "serre",
    "undeformed",
    "coproduct",
    "classical-limit",
    "central-charge",
    "cartan-weyl",
];

const fn e(id: &'static str, tag: &'static str, suite: &'static str, description: &'static str) -> CatalogEntry {
    CatalogEntry { id, tag, suite, description }
}

pub const CATALOG: &[CatalogEntry] = &[
    e("car", "Eq. (20)", "oscillators", "{c_i(r), c_j+(s)} = delta_ij delta_rs"),
    e("car-nilpotent", "Eq. (20)", "oscillators", "{c_i(r), c_j(s)} = 0"),
    e("ccr", "Eq. (21)", "oscillators", "[d_k(r), d_l+(s)] = delta_kl delta_rs below the cutoff"),
    e("ccr-lowering", "Eq. (21)", "oscillators", "[d_k(r), d_l(s)] = 0"),
    e("fermion-boson-commute", "Eq. (30)", "oscillators", "fermionic and bosonic oscillators commute"),
    e("eq49a", "Eq. (49a)", "oscillators", "b b+ - q^delta b+ b = q^-n' delta"),
    e("eq49b", "Eq. (49b)", "oscillators", "b b+ - q^-delta b+ b = q^n' delta"),
    e("eq49c", "Eq. (49c)", "oscillators", "q-bosons at distinct modes commute"),
    e("eq49d", "Eq. (49d)", "oscillators", "[n', b] = -b delta"),
    e("eq49e", "Eq. (49e)", "oscillators", "[n', b+] = b+ delta"),
    e("eq50-number", "Eq. (50)", "oscillators", "b+ b = [n']_q"),
    e("eq50-raised", "Eq. (50)", "oscillators", "b b+ = [n'+1]_q below the cutoff"),
    e("eq42", "Eq. (42)", "braiding", "a-type anyons braid with q^-1 / q for r > s"),
    e("eq42-mirror", "Eq. (42)", "braiding", "tilde-a anyons braid with q <-> q^-1"),
    e("eq43", "Eq. (43)", "braiding", "same-site anticommutation of a-type anyons"),
    e("eq43-mirror", "Eq. (43)", "braiding", "same-site anticommutation of tilde-a anyons"),
    e("eq44", "Eq. (44)", "braiding", "{tilde-a(r), a(s)} = {tilde-a+(r), a+(s)} = 0"),
    e("eq45", "Eq. (45)", "braiding", "{tilde-a+(r), a(s)} = {tilde-a(r), a+(s)} = 0 for r != s"),
    e("eq46", "Eq. (46)", "braiding", "same-site mixed anticommutators are disorder strings"),
    e("eq47", "Eq. (47)", "braiding", "a+ a = tilde-a+ tilde-a = n"),
    e("eq53", "Eq. (53)", "braiding", "A-type anyons braid with q / q^-1 for r > s"),
    e("eq53-mirror", "Eq. (53)", "braiding", "tilde-A anyons braid with q <-> q^-1"),
    e("eq54", "Eq. (54)", "braiding", "same-site q-oscillator relations of A-type anyons"),
    e("eq7a", "Eq. (7a)", "quantum", "[H_a, H_b] = 0"),
    e("eq7b", "Eq. (7b)", "quantum", "[H_a, E_b^+-] = +-a_ab E_b^+-"),
    e("eq7c", "Eq. (7c)", "quantum", "[[E_a^+, E_b^-]] = delta_ab [H_a]_{q_a}"),
    e("eq7d", "Eq. (7d)", "quantum", "{E_a^+-, E_a^+-} = 0 for isotropic a"),
    e("eq8", "Eq. (8)", "serre", "quantum Serre relations in expanded form"),
    e("eq8-adq", "Eq. (8)", "serre", "quantum Serre relations through the adjoint action"),
    e("adq-oracle", "Eq. (12)", "serre", "closed-form adjoint action against the term-by-term Hopf formula"),
    e("eq9-alphaM", "Eq. (9)", "serre", "quartic relation at the odd node M"),
    e("eq9-alpha0-cyclic", "Eq. (9)", "serre", "quartic relation at node 0, neighbors (R, 1)"),
    e("eq9-alpha0-skip", "Eq. (9)", "serre", "quartic relation at node 0, neighbors (1, R)"),
    e("eq2a", "Eq. (2a)", "undeformed", "[h_a, h_b] = 0"),
    e("eq2b", "Eq. (2b)", "undeformed", "[h_a, e_b^+-] = +-a_ab e_b^+-"),
    e("eq2c", "Eq. (2c)", "undeformed", "[[e_a^+, e_b^-]] = delta_ab h_a"),
    e("eq2d", "Eq. (2d)", "undeformed", "{e_a^+-, e_a^+-} = 0 for isotropic a"),
    e("eq3", "Eq. (3)", "undeformed", "classical Serre relations"),
    e("eq4-alphaM", "Eq. (4)", "undeformed", "classical quartic relation at node M"),
    e("eq4-alpha0-cyclic", "Eq. (4)", "undeformed", "classical quartic relation at node 0, neighbors (R, 1)"),
    e("eq4-alpha0-skip", "Eq. (4)", "undeformed", "classical quartic relation at node 0, neighbors (1, R)"),
    e("eq57", "Eq. (57)", "coproduct", "local anyonic generator = q-oscillator generator times disorder tail"),
    e("coproduct-split", "Eq. (11a)", "coproduct", "E = E(left) q^{H(right)/2} + q^{-H(left)/2} E(right)"),
    e("eq57-wrong-q-alpha", "Eq. (57)", "coproduct", "control: inverting q_a in the tail breaks the factorization"),
    e("classical-coincide", "Eq. (28)", "classical-limit", "deformed generators at q = 1 equal the undeformed ones"),
    e("classical-eq7c-rhs", "Eq. (7c)", "classical-limit", "[H]_q reduces to H at q = 1"),
    e("classical-slope", "Eq. (56)", "classical-limit", "deviation from the undeformed set is linear in q - 1"),
    e("central-charge", "Eq. (6bis)", "central-charge", "Gamma acts as gamma on the bulk"),
    e("central-charge-boundary", "Eq. (29)", "central-charge", "Gamma - gamma is the boundary occupation string"),
    e("eq6-correspondence", "Eq. (6)", "cartan-weyl", "Chevalley generators are Cartan-Weyl generators"),
    e("eq1b", "Eq. (1b)", "cartan-weyl", "[h_a^m, e_r^n] = r_a e_r^{m+n}"),
    e("eq1a-anomaly", "Eq. (1a)", "cartan-weyl", "[h_a^m, h_a^-m] is a scalar on the bulk"),
    e("eq1a-linear", "Eq. (1a)", "cartan-weyl", "the anomaly scalar is linear in m"),
    e("eq1c-structure", "Eq. (1c)", "cartan-weyl", "[[e_r^m, e_s^n]] = +-e_{r+s}^{m+n}"),
];

pub fn lookup(id: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id)
}

pub fn entries_for(suite: &str) -> impl Iterator<Item = &'static CatalogEntry> + '_ {
    CATALOG.iter().filter(move |e| e.suite == suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_suites_known() {
        for (i, a) in CATALOG.iter().enumerate() {
            assert!(SUITES.contains(&a.suite), "{}", a.id);
            for b in &CATALOG[i + 1..] {
                assert_ne!(a.id, b.id);
            }
        }
    }

    #[test]
    fn contains_required_ids() {
        assert_eq!(lookup("eq7c").unwrap().tag, "Eq. (7c)");
        assert!(lookup("eq9-alpha0-cyclic").is_some());
        assert!(lookup("eq9-alpha0-skip").is_some());
    }
}
