//! Self-test suites, one per module, built from the shared checks.

use std::io::Write;
use std::time::Instant;

use crate::checks::{self as c, Outcome};
use crate::random::rng;
use crate::{Error, Result};

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Outcome,
}

pub const SUITES: &[&str] = &[
    "scalar-ring",
    "clifford-core",
    "operator-engine",
    "spin-group",
    "spin-actions",
    "distributions",
    "representations",
];

pub fn checks(suite: &str) -> Result<Vec<Check>> {
    let list: Vec<Check> = match suite {
        "scalar-ring" => vec![
            Check { name: "s_p^2 = 1 - c_p^2, eps^2 = 0, i^2 = -1", run: c::scalar_reductions },
            Check { name: "ring axioms on random trig scalars", run: || c::scalar_ring_axioms(&mut rng(11), 60) },
            Check { name: "exp(iat) exp(ibt) = exp(i(a+b)t)", run: || c::exp_additivity(6) },
            Check { name: "evaluation is multiplicative", run: || c::eval_multiplicative(&mut rng(12), 20) },
        ],
        "clifford-core" => vec![
            Check { name: "{e_j^+, e_k^-} = delta_jk and same-sign anticommute", run: || c::clifford_generators(4) },
            Check { name: "reversion, conjugation, main involution", run: || c::clifford_involutions(&mut rng(21), 100) },
            Check { name: "Clifford product associative", run: || c::clifford_associativity(&mut rng(22), 40) },
        ],
        "operator-engine" => vec![
            Check { name: "[del_j, xi_k] skew-Weyl relations", run: || c::skew_weyl(4) },
            Check { name: "{R_j, xi_k} = 2 R_j xi_j delta_jk", run: || c::r_vs_variables(4) },
            Check { name: "{T_j, xi_k} = 2 T_j xi_j delta_jk", run: || c::t_vs_variables(4) },
            Check { name: "{R_j, R_k} = 2 delta, {T_j, T_k} = -2 delta, {R_j, T_k} = 0", run: || c::rt_relations(4) },
            Check { name: "R_j[1] = [1]e_j, T_j[1] = [1]e_j^perp, del_j on monomials", run: || c::ground_rules(4) },
            Check { name: "{del, xi} = 2E + m, [del, E] = del, [xi, E] = -xi", run: || c::osp_triple(&[2, 3], 4) },
            Check { name: "xi_j R_j and del_k R_k form a Weyl system", run: || c::commuting_composites(3) },
            Check { name: "v = sum <v, R_j> R_j and del^2 scalar", run: || c::vector_decompositions(4) },
            Check { name: "operator product associative and acts", run: || c::operator_associativity(&mut rng(31), 20) },
            Check { name: "insert(insert(f, a), b) = insert(f, b a)", run: || c::insert_composition(&mut rng(32), 10) },
        ],
        "spin-group" => vec![
            Check { name: "a a* = |a|^2 and chi preserves norms", run: || c::clifford_group_norms(&mut rng(41), 30) },
            Check { name: "chi(w, x) = x - 2<x, w>w", run: || c::reflections(&mut rng(42), 20, &[2, 3, 4]) },
            Check { name: "so_matrix is a 2:1 homomorphism onto SO(m)", run: || c::double_cover(&mut rng(43), 10, &[2, 3, 4]) },
            Check { name: "plane rotor gives the rotation matrix", run: c::plane_rotation },
            Check { name: "torus factors commute", run: c::torus_abelian },
            Check { name: "T-family Spin elements", run: || c::orthogonal_family(&mut rng(44), 10) },
        ],
        "spin-actions" => vec![
            Check { name: "eta_j components for a plane rotor", run: c::plane_components },
            Check { name: "L_ij and dR_ij generator forms", run: c::generator_forms },
            Check { name: "Laplacian commutes with H0, H1 preserves harmonics", run: || c::laplace_invariance(&mut rng(51), &[2, 3], 3, 1) },
            Check { name: "L and H1 preserve monogenics", run: || c::monogenic_invariance(&mut rng(52), &[2, 3], 3, 1) },
            Check { name: "perp actions preserve harmonics and monogenics", run: || c::perp_invariance(&mut rng(53), &[2, 3], 3) },
            Check { name: "del_eta_j [1] = 0", run: || c::ground_annihilation(&mut rng(54), &[2, 3, 4]) },
            Check { name: "action of st = action of s after t", run: || c::group_law(&mut rng(55), &[2, 4], 4) },
            Check { name: "first-order terms: H0 -> -2L, H1 -> -2L + [R_ji, .], L -> -2L + R_ji", run: || c::first_order_derived(&[2, 3], 3) },
            Check { name: "exp(theta L_12) = H0 of the plane rotor", run: || c::exp_l12_agreement(4, &mut rng(56)) },
            Check { name: "plane rotation of linear and quadratic eigenfunctions", run: c::worked_examples },
        ],
        "distributions" => vec![
            Check { name: "plane eigenfunctions and eigendistributions", run: || c::plane_eigenfamilies(4) },
            Check { name: "R_2R_1 parity on del-words applied to delta", run: || c::delta_parity(5) },
            Check { name: "rotated del-shifted delta in closed form", run: c::shifted_delta_rotation },
            Check { name: "exp(theta L_12) on even eigendistributions", run: || c::dist_exp_closed_forms(2) },
        ],
        "representations" => vec![
            Check { name: "Fischer decomposition P_k = H_k + xi^2 P_{k-2}", run: || c::fischer(&[2, 3], 4) },
            Check { name: "dim H_k = dim P_k - dim P_{k-2}", run: || c::harmonic_dims_fischer(&[2, 3, 4], 5) },
            Check { name: "isotropic frame f_j, g_j anticommutators", run: || c::frame_table(&[2, 4]) },
            Check { name: "(xi_1 +- xi_2) f_1 = f_1^+ (xi_1 -+ xi_2)", run: c::frame_exchange },
            Check { name: "2 <xi, f_1> = xi_1 R_1 - i xi_2 R_2", run: c::first_pairing_form },
            Check { name: "torus components pair with f_1", run: || c::torus_pairing(&[2, 4]) },
            Check { name: "I^2 = I, f_j I = g_j I = 0", run: c::idempotents },
            Check { name: "highest weights exp(ikt_1) and half-integer weights", run: || c::highest_weights(&[2, 4], 3) },
            Check { name: "perp highest weights exp(-ikt_1)", run: || c::perp_highest_weights(&[2, 4], 3) },
        ],
        other => return Err(Error::Parse(format!("unknown suite '{other}' (expected one of {})", SUITES.join(", ")))),
    };
    Ok(list)
}

/// Runs one suite, writing a line per check. Returns whether all passed.
pub fn run_suite(suite: &str, out: &mut impl Write) -> Result<bool> {
    let list = checks(suite)?;
    let mut pass = true;
    for check in list {
        let start = Instant::now();
        let result = (check.run)();
        let ms = start.elapsed().as_millis();
        let line = match &result {
            Ok(()) => format!("{suite}: {} ... OK ({ms} ms)", check.name),
            Err(msg) => format!("{suite}: {} ... FAIL: {msg}", check.name),
        };
        let _ = writeln!(out, "{line}");
        pass &= result.is_ok();
    }
    Ok(pass)
}

/// Runs the named suites, or all of them, and prints a summary line.
pub fn run(suites: &[&str], out: &mut impl Write) -> Result<bool> {
    let selected: Vec<&str> = if suites.is_empty() { SUITES.to_vec() } else { suites.to_vec() };
    for s in &selected {
        checks(s)?;
    }
    let mut failed = Vec::new();
    for s in &selected {
        if !run_suite(s, out)? {
            failed.push(*s);
        }
    }
    if failed.is_empty() {
        let _ = writeln!(out, "all {} suites passed", selected.len());
    } else {
        let _ = writeln!(out, "failed suites: {}", failed.join(", "));
    }
    Ok(failed.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fault::{with_fault, Fault};

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &mut Vec::new()).is_err());
    }

    #[test]
    fn fault_is_reported_by_name() {
        let mut out = Vec::new();
        let ok = with_fault(Some(Fault::RXiSign), || run_suite("operator-engine", &mut out)).unwrap();
        assert!(!ok);
        let text = String::from_utf8(out).unwrap();
        let first_fail = text.lines().find(|l| l.contains("FAIL")).unwrap();
        assert!(first_fail.contains("{R_j, xi_k} = 2 R_j xi_j delta_jk"), "{text}");
    }

    #[test]
    fn clean_suites_pass() {
        for s in ["scalar-ring", "clifford-core", "distributions"] {
            assert!(run_suite(s, &mut Vec::new()).unwrap(), "{s}");
        }
    }
}
