use std::path::Path;
use std::process::{Command, Output};

use dspin::action::{act, ActionKind};
use dspin::clifford::CliffordElement;
use dspin::dist::{delta_shift_1_0, rotate_dist};
use dspin::json;
use dspin::operator::{unit_index, PolyState};
use dspin::scalar::Scalar;
use dspin::spin::{exp_bivector, Family};
use serde_json::Value;

fn dspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dspin")).args(args).env_remove("DSPIN_FAULT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn linear_input() -> PolyState {
    let m = 2;
    let c = &CliffordElement::e(m, 1) + &CliffordElement::e_perp(m, 2);
    PolyState::monomial(unit_index(1), c)
}

#[test]
fn full_selftest_passes() {
    let o = dspin(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all 7 suites passed"));
}

#[test]
fn selftest_filters_by_suite() {
    let o = dspin(&["selftest", "--suite", "spin-group"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.contains(" ... ")).all(|l| l.starts_with("spin-group: ")));
    assert!(!text.contains("scalar-ring"));
}

#[test]
fn injected_fault_names_the_broken_relation() {
    let o = Command::new(env!("CARGO_BIN_EXE_dspin"))
        .args(["selftest", "--suite", "operator-engine"])
        .env("DSPIN_FAULT", "r-xi-sign")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let first = stdout(&o).lines().find(|l| l.contains("FAIL")).unwrap().to_string();
    assert!(first.contains("{R_j, xi_k} = 2 R_j xi_j delta_jk"), "{first}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dspin(&["selftest", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(dspin(&["dims", "--m", "2"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "f.json", &json::poly_to_json(&linear_input()));
    assert_eq!(dspin(&["rotate", "--m", "2", "--angle", "1/3", "--input", &input]).status.code(), Some(2));
    assert_eq!(dspin(&["rotate", "--m", "3", "--angle", "sym", "--input", &input]).status.code(), Some(2));
    assert_eq!(dspin(&["rotate", "--m", "2", "--action", "X", "--angle", "sym", "--input", &input]).status.code(), Some(2));
    let bad = write(dir.path(), "bad.json", "{\"m\": 2}");
    assert_eq!(dspin(&["rotate", "--m", "2", "--angle", "sym", "--input", &bad]).status.code(), Some(2));
    assert_eq!(dspin(&["dist-rotate", "--m", "2", "--angle", "sym", "--input", &input]).status.code(), Some(2));
}

#[test]
fn symbolic_rotation_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let f = linear_input();
    let input = write(dir.path(), "f.json", &json::poly_to_json(&f));
    let output = dir.path().join("out.json");
    let o = dspin(&["rotate", "--m", "2", "--action", "H0", "--angle", "sym", "--input", &input, "--output", output.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&output).unwrap();
    let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
    let expect = act(ActionKind::H0, &s, &f).unwrap();
    assert_eq!(text, json::poly_to_json(&expect));
    // cos t xi_1 [1] c - sin t xi_2 [1] e_2 e_1 c
    let c = f.coeff(&unit_index(1));
    let closed = &PolyState::monomial(unit_index(1), c.scale(&Scalar::cos_kt(1, 1)))
        - &PolyState::monomial(unit_index(2), CliffordElement::e_word(2, &[2, 1]).mul(&c).scale(&Scalar::sin_kt(1, 1)));
    assert_eq!(json::poly_from_json(&text).unwrap(), closed);
}

#[test]
fn zero_angle_leaves_the_input_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    let f = linear_input();
    let input = write(dir.path(), "f.json", &json::poly_to_json(&f));
    for action in ["H0", "H1", "L"] {
        let o = dspin(&["rotate", "--m", "2", "--action", action, "--angle", "0 pi", "--input", &input]);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let numeric = json::state_to_numeric_json(&json::StateFile::Poly(f.clone()), &[0.0]).unwrap();
        assert_eq!(v, serde_json::from_str::<Value>(&numeric).unwrap(), "{action}");
    }
}

#[test]
fn numeric_rotation_evaluates_the_symbolic_result() {
    let dir = tempfile::tempdir().unwrap();
    let f = linear_input();
    let input = write(dir.path(), "f.json", &json::poly_to_json(&f));
    let o = dspin(&["rotate", "--m", "2", "--action", "L", "--angle", "2/3 pi", "--input", &input]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
    let g = act(ActionKind::L, &s, &f).unwrap();
    let t = 2.0 * std::f64::consts::PI / 3.0;
    let mut seen = 0;
    for term in v["terms"].as_array().unwrap() {
        let alpha: Vec<u8> = serde_json::from_value(term["index"].clone()).unwrap();
        let coeff = g.coeff(&unit_index(if alpha == [1, 0] { 1 } else { 2 }));
        let nonzero = coeff.terms().iter().filter(|(_, s)| s.eval(&[t]).unwrap().norm() >= json::NUMERIC_ZERO);
        for (b, blade) in nonzero.zip(term["blades"].as_array().unwrap()) {
            let z = b.1.eval(&[t]).unwrap();
            assert!((blade["re"].as_f64().unwrap() - z.re).abs() < 1e-10);
            assert!((blade["im"].as_f64().unwrap() - z.im).abs() < 1e-10);
            seen += 1;
        }
    }
    assert!(seen > 0);
    let text = dspin(&["rotate", "--m", "2", "--action", "L", "--angle", "2/3 pi", "--input", &input, "--format", "text"]);
    assert_eq!(stdout(&text).lines().count(), seen);
}

#[test]
fn distribution_rotation_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = delta_shift_1_0();
    let input = write(dir.path(), "d.json", &json::dist_to_json(&d));
    let o = dspin(&["dist-rotate", "--m", "2", "--angle", "sym", "--input", &input]);
    assert_eq!(o.status.code(), Some(0));
    let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
    let expect = json::dist_to_json(&rotate_dist(&s, &d).unwrap());
    assert_eq!(stdout(&o).trim_end(), expect);
    let again = json::dist_to_json(&json::dist_from_json(&expect).unwrap());
    assert_eq!(again, expect);
    let via_rotate = dspin(&["rotate", "--m", "2", "--angle", "sym", "--input", &input]);
    assert_eq!(stdout(&via_rotate), stdout(&o));
}

#[test]
fn dims_table_reports_formula_and_rank() {
    let o = dspin(&["dims", "--m", "2", "--kmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v["rows"][2];
    assert_eq!(row["k"], 2);
    assert_eq!(row["formula"], 3);
    assert_eq!(row["rank"], 2);
    let text = stdout(&dspin(&["dims", "--m", "3", "--kmax", "3", "--format", "text"]));
    assert!(text.contains("differs"));
}

#[test]
fn eigenbasis_lists_states_with_eigenvalues() {
    let o = dspin(&["eigenbasis", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut eigen: Vec<i64> = v.as_array().unwrap().iter().map(|e| e["eigenvalue"].as_i64().unwrap()).collect();
    eigen.sort();
    assert_eq!(eigen, vec![-1, 1]);
    let o = dspin(&["eigenbasis", "--k", "4", "--format", "text"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn highest_weight_vectors_carry_their_weight() {
    let o = dspin(&["hw", "--m", "2", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let weight = json::scalar_from_json(&v["weight"].to_string()).unwrap();
    assert_eq!(weight, Scalar::exp_i_kt(2, 1));
    let o = dspin(&["hw", "--m", "4", "--k", "1", "--half"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["action"], "L");
    let weight = json::scalar_from_json(&v["weight"].to_string()).unwrap();
    assert_eq!(weight, &Scalar::cis_half(3, 1) * &Scalar::cis_half(1, 2));
    assert_eq!(dspin(&["hw", "--m", "1", "--k", "1"]).status.code(), Some(2));
}
