use std::process::Command;

use serde_json::Value;

use witnesslab::arith::SquareClass;
use witnesslab::brauer::{embeds, ram_set, QuaternionAlgebra};
use witnesslab::places::Place;
use witnesslab::quadform::{pfister_divides, pfister_divides_qt, Monomial, PfisterForm};
use witnesslab::theorems::{tractable_verify, TractableBase, TractableConfig};

struct Run {
    code: i32,
    json: Value,
    stderr: String,
}

fn witnesslab(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_witnesslab"))
        .args(args)
        .env_remove("WITNESSLAB_BOUND")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().expect("exit code"),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn class(v: &Value) -> SquareClass {
    v.as_str().expect("string payload").parse().unwrap()
}

fn algebra(a: i64, b: i64) -> QuaternionAlgebra {
    QuaternionAlgebra::from_ints(a, b).unwrap()
}

fn classes(v: &Value) -> Vec<SquareClass> {
    v.as_array().unwrap().iter().map(class).collect()
}

#[test]
fn ram_reports_places() {
    let r = witnesslab(&["ram", "-1", "-1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json, serde_json::json!({ "ramified": ["2", "inf"], "division": true }));
    assert_eq!(r.json.to_string(), r#"{"ramified":["2","inf"],"division":true}"#);
}

#[test]
fn distinguish_round_trip() {
    let r = witnesslab(&["distinguish", "-1", "-1", "-1", "-3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["witness"], "-2");
    assert_eq!(r.json["embeds_in"], "D1");
    assert_eq!(r.json["case"], "odd-place");
    let c = class(&r.json["witness"]);
    assert!(embeds(c, &algebra(-1, -1)).unwrap());
    assert!(!embeds(c, &algebra(-1, -3)).unwrap());

    for (a1, b1, a2, b2) in [(-1, -1, 2, 5), (-1, 3, -2, 5), (3, -7, -1, -11), (-5, 2, -1, -1)] {
        let args: Vec<String> = [a1, b1, a2, b2].iter().map(|x| x.to_string()).collect();
        let mut argv = vec!["distinguish"];
        argv.extend(args.iter().map(String::as_str));
        let r = witnesslab(&argv);
        assert_eq!(r.code, 0, "{argv:?}: {}", r.stderr);
        let c = class(&r.json["witness"]);
        let flags = [embeds(c, &algebra(a1, b1)).unwrap(), embeds(c, &algebra(a2, b2)).unwrap()];
        let expected = if flags == [true, false] { "D1" } else { "D2" };
        assert_ne!(flags[0], flags[1], "{argv:?}");
        assert_eq!(r.json["embeds_in"], expected);
    }
}

#[test]
fn isomorphic_inputs() {
    let r = witnesslab(&["iso", "1", "1", "1", "7"]);
    assert_eq!((r.code, r.json.clone()), (0, serde_json::json!({ "isomorphic": true })));
    let r = witnesslab(&["distinguish", "-1", "-1", "-1", "-1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["witness"], Value::Null);
}

#[test]
fn hilbert_and_embeds() {
    let r = witnesslab(&["hilbert", "-1", "-1", "--place", "2", "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["symbol"], "-1");
    assert_eq!(r.json["agree"], true);
    let r = witnesslab(&["embeds", "-2", "-1", "-1"]);
    assert_eq!((r.code, r.json["embeds"].clone()), (0, Value::Bool(true)));
    let r = witnesslab(&["ram", "3/4", "-8", "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["oracle_agrees"], true);
    let d = algebra(3, -2);
    let listed: Vec<String> = ram_set(&d).iter().map(|v| v.to_string()).collect();
    assert_eq!(r.json["ramified"], serde_json::json!(listed));
}

#[test]
fn pfister_distinguish_round_trip() {
    let r = witnesslab(&["pfister-distinguish", "--d", "2", "--phi1", "-1,-1", "--phi2", "-1,-3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let gamma = PfisterForm::new(classes(&r.json["witness"]));
    let phi1 = PfisterForm::new(vec![SquareClass::new(-1).unwrap(); 2]);
    let phi2 = PfisterForm::new(vec![SquareClass::new(-1).unwrap(), SquareClass::new(-3).unwrap()]);
    let flags = [pfister_divides(&gamma, &phi1).unwrap().divides, pfister_divides(&gamma, &phi2).unwrap().divides];
    assert_ne!(flags[0], flags[1]);
    assert_eq!(r.json["divides"], if flags[0] { "phi1" } else { "phi2" });
}

#[test]
fn crux_round_trip() {
    let r = witnesslab(&["crux", "--place", "3", "--phi1", "-1,3", "--phi2", "-1,-1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["gamma"], serde_json::json!(["-2"]));
    assert_eq!(r.json["divides"], "phi2");
    assert_eq!(r.json["adrian"]["r"], "1");
    assert_eq!(r.json["adrian"]["s"], "2");

    let r = witnesslab(&["crux", "--place", "t", "--phi1", "-1,-1,t", "--phi2", "-1,-7,t"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let parse = |v: &Value| -> PfisterForm<Monomial> {
        PfisterForm::new(v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect())
    };
    let gamma = parse(&r.json["gamma"]);
    let phi1 = parse(&serde_json::json!(["-1", "-1", "t"]));
    let phi2 = parse(&serde_json::json!(["-1", "-7", "t"]));
    assert_eq!(pfister_divides_qt(&gamma, &phi1).unwrap().conclusive(), Some(true));
    assert_eq!(pfister_divides_qt(&gamma, &phi2).unwrap().conclusive(), Some(false));
    assert_eq!(r.json["divides"], "phi1");
}

#[test]
fn tractable_round_trip() {
    let r = witnesslab(&["tractable", "search", "--base", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["tractable"], false);
    let (a, b) = (classes(&r.json["violation"]["a"]), classes(&r.json["violation"]["b"]));
    let cfg = TractableConfig {
        a: [a[0], a[1], a[2]],
        b: [b[0], b[1], b[2]],
        base: TractableBase::Local(Place::Dyadic),
    };
    assert!(tractable_verify(&cfg).is_violation());

    let r = witnesslab(&["tractable", "search", "--base", "5"]);
    assert_eq!((r.code, r.json["tractable"].clone()), (0, Value::Bool(true)));

    let r = witnesslab(&["tractable", "verify", "--base", "q", "-1", "2", "5", "-1", "5", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["violation"], false);
}

#[test]
fn rost_fixture() {
    let r = witnesslab(&["rost", "-1", "-3", "--b", "-1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json["c"], "-2");
    assert_eq!(r.json["anisotropic"], true);
    assert_eq!(r.json["determinant_nonsquare"], true);
    assert_eq!(r.json["albert"]["witt_class_matches"], true);
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(witnesslab(&["frobnicate"]).code, 1);
    assert_eq!(witnesslab(&["ram", "-1"]).code, 1);
    assert_eq!(witnesslab(&["ram", "0", "3"]).code, 1);
    assert_eq!(witnesslab(&["ram", "x", "3"]).code, 1);
    assert_eq!(witnesslab(&["pfister-distinguish", "--d", "3", "--phi1", "-1,-1", "--phi2", "-1,-3"]).code, 1);
    // domain
    let r = witnesslab(&["distinguish", "1", "1", "-1", "-1"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.json["status"], "domain-error");
    assert!(!r.stderr.is_empty());
    assert_eq!(witnesslab(&["tractable", "search", "--base", "inf"]).code, 2);
    // inconclusive: the witness search bound is exhausted
    let r = witnesslab(&["--bound", "1", "distinguish", "-1", "-1", "-1", "-3"]);
    assert_eq!(r.code, 3);
    // resource: congruence scan modulus too large
    assert_eq!(witnesslab(&["hilbert", "3", "5", "--place", "409", "--oracle"]).code, 4);
}

#[test]
fn bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_witnesslab"))
        .args(["distinguish", "-1", "-1", "-1", "-3"])
        .env("WITNESSLAB_BOUND", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pretty_output_is_the_same_document() {
    let plain = witnesslab(&["ram", "-1", "-1"]);
    let out = Command::new(env!("CARGO_BIN_EXE_witnesslab")).args(["--pretty", "ram", "-1", "-1"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains('\n'));
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), plain.json);
}
