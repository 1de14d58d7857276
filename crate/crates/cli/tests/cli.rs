//! End-to-end checks of the command-line surface.

use std::process::Command;

fn ttcalc(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ttcalc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn normal_form_and_product() {
    let (out, _, code) = ttcalc(&["nf", "x*y^2*x + z*y"]);
    assert_eq!(out.trim(), "-y^3*x");
    assert_eq!(code, 0);

    let (out, _, code) = ttcalc(&["mul", "x", "y*x"]);
    assert_eq!(out.trim(), "-y^2*x");
    assert_eq!(code, 0);
}

#[test]
fn calculus_operations() {
    let (out, _, _) = ttcalc(&["bracket", "A-1", "B-1(2)"]);
    assert_eq!(out.trim(), "2*B-1(2)");

    let (out, _, _) = ttcalc(&["cap", "B-1(1)", "beta1"]);
    assert_eq!(out.trim(), "-beta0(2)");

    let (out, _, _) = ttcalc(&["connes", "beta0(2)"]);
    assert_eq!(out.trim(), "-3*gamma1(1)");

    let (out, _, _) = ttcalc(&["cup", "A-2", "A-2"]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn dimensions_as_json() {
    let (out, _, _) = ttcalc(&[
        "homology",
        "--degree",
        "2",
        "--weight",
        "7",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 0);
}

#[test]
fn verify_exit_codes_and_determinism() {
    let args = [
        "verify",
        "--suite",
        "rewriting",
        "--max-weight",
        "4",
        "--format",
        "json",
    ];
    let (a, _, code_a) = ttcalc(&args);
    let (b, _, code_b) = ttcalc(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b, "reports must be byte-identical across runs");
    let value: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(ttcalc::verify::validate_report_value(&value).is_ok());
}

#[test]
fn usage_errors_exit_2() {
    let (_, err, code) = ttcalc(&["nf", "x^0"]);
    assert_eq!(code, 2);
    assert!(err.contains("exponent"));

    let (_, _, code) = ttcalc(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 2);

    let (_, _, code) = ttcalc(&["cup", "alpha1", "A-1"]);
    assert_eq!(code, 2);
}
