mod common;

use std::process::{Command, Output};

use common::strategy::{poly, weyl};
use proptest::prelude::*;

use weyl_core::parse;

fn weyl_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_normal_order() {
    let o = weyl_cmd(&["eval", "q p"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p q - 1\n");
}

#[test]
fn leading_accepts_negative_input() {
    let o = weyl_cmd(&["leading", "-1/2 p + q", "-r", "1", "-s", "1"]);
    assert_eq!(stdout(&o), "degree: 1\nleading form: -1/2 X + Y\n");
}

#[test]
fn dc_check_exit_codes() {
    assert_eq!(weyl_cmd(&["dc-check", "p", "q"]).status.code(), Some(0));
    assert_eq!(weyl_cmd(&["dc-check", "q", "p"]).status.code(), Some(3));
    assert_eq!(weyl_cmd(&["dc-check", "p q", "q"]).status.code(), Some(4));
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let o = weyl_cmd(&["bogus"]);
    assert_eq!(o.status.code(), Some(1));
    let o = weyl_cmd(&["eval", "p +"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(
        weyl_cmd(&["eval", "X", "-m", "weyl"]).status.code(),
        Some(1)
    );
}

#[test]
fn help_exits_zero() {
    assert_eq!(weyl_cmd(&["--help"]).status.code(), Some(0));
}

#[test]
fn degree_cap_comes_from_the_environment() {
    let capped = Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(["eval", "p^10"])
        .env("WEYL_MAX_DEGREE", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert_eq!(weyl_cmd(&["eval", "p^10"]).status.code(), Some(0));
}

#[test]
fn json_outputs_parse() {
    for args in [
        &["--json", "eval", "p q + 1/2"][..],
        &["--json", "grade", "p + q + p q"],
        &["--json", "leading", "p + q^2", "-r", "1", "-s", "1"],
        &["--json", "ntp", "p^2 + q^3 + p q"],
        &["classify-omega", "X", "Y + X^2"],
        &["dc-check", "p + q^2", "q"],
    ] {
        let o = weyl_cmd(args);
        let v: serde_json::Value =
            serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(!v.is_null());
    }
    let o = weyl_cmd(&["dc-check", "p", "q"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "generates");
}

#[test]
fn svg_has_hull_and_roof() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ntp.svg");
    let o = weyl_cmd(&[
        "ntp",
        "p + p^2 q^3 + p^3 q + p^4 q^2 + p^5",
        "--svg",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.contains(r#"id="ntp-hull""#));
    assert!(svg.contains(r#"id="ntp-roof""#));
}

#[test]
fn aut_apply_matches_library() {
    let o = weyl_cmd(&["aut", "apply", "rot,scale:2", "p + q"]);
    assert_eq!(stdout(&o), "-2 p + 1/2 q\n");
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn weyl_text_round_trips(z in weyl(5, 4)) {
        prop_assert_eq!(parse::weyl(&z.to_string()).unwrap(), z);
    }

    #[test]
    fn poly_text_round_trips(f in poly(5, 4)) {
        prop_assert_eq!(parse::poly(&f.to_string()).unwrap(), f);
    }
}
