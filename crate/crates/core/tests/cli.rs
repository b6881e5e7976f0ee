use std::process::{Command, Output};

use sturmcert::exact::ratio;
use sturmcert::paperlib::build_mu;
use sturmcert::sturm::{count_roots, EndpointPolicy, Interval};

fn sturmcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const MU_TEXT: &str = "(10*x^6+6*x^5-12*x^4-11/2*x^3+29/8*x^2+11/8*x+9/16)*(300*x^4+120*x^3-144*x^2-33*x+29/4)\
    -1/2*(60*x^5+30*x^4-48*x^3-33/2*x^2+29/4*x+11/8)^2";

#[test]
fn count_mu_prints_zero() {
    let o = sturmcert(&["count", MU_TEXT, "--var", "x", "--lo", "65/100", "--hi", "95/100"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let lib =
        count_roots(&build_mu(), &Interval::new(ratio(65, 100), ratio(95, 100)).unwrap(), &EndpointPolicy::Strict);
    assert_eq!(lib.unwrap().count(), 0);
}

#[test]
fn count_sqrt_two() {
    let o = sturmcert(&["count", "Y^2-2", "--lo", "0", "--hi", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn decimal_endpoints_match_fractions() {
    let a = sturmcert(&["count", "x^3-x/1", "--lo", "0.65", "--hi", "0.95"]);
    assert_eq!(a.status.code(), Some(1));
    let a = sturmcert(&["count", "100*x^2-81", "--lo", "0.65", "--hi", "0.95"]);
    let b = sturmcert(&["count", "100*x^2-81", "--lo", "65/100", "--hi", "95/100"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).trim(), "1");
}

#[test]
fn cli_agrees_with_library() {
    for (expr, lo, hi) in [("x^5-3*x+1", "-2", "2"), ("x^4-10*x^2+1", "-1/2", "4"), ("(x-1)^3*(x+2)", "-3", "1/2")] {
        let o = sturmcert(&["count", expr, "--lo", lo, "--hi", hi]);
        let p = sturmcert::expr::parse_expr(expr, sturmcert::expr::Mode::Algebraic).unwrap().to_poly(None).unwrap();
        let iv =
            Interval::new(sturmcert::exact::parse_rational(lo).unwrap(), sturmcert::exact::parse_rational(hi).unwrap())
                .unwrap();
        let lib = count_roots(&p, &iv, &EndpointPolicy::Strict).unwrap();
        assert_eq!(stdout(&o).trim(), lib.count().to_string(), "{expr}");
    }
}

#[test]
fn endpoint_root_exit_codes() {
    let strict = sturmcert(&["count", "x^2-1", "--lo", "-1", "--hi", "2"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("root"));
    let shrink = sturmcert(&["count", "x^2-1", "--lo", "-1", "--hi", "2", "--endpoint-policy", "shrink"]);
    assert_eq!(shrink.status.code(), Some(0));
    assert!(stdout(&shrink).starts_with("1\n"));
    assert!(stdout(&shrink).contains("lower endpoint moved"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(sturmcert(&["count", "x^", "--lo", "0", "--hi", "1"]).status.code(), Some(1));
    assert_eq!(sturmcert(&["count", "2x", "--lo", "0", "--hi", "1"]).status.code(), Some(1));
    assert_eq!(sturmcert(&["count", "x", "--lo", "1", "--hi", "0"]).status.code(), Some(1));
    assert_eq!(sturmcert(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sturmcert(&["convert", "cos(x)+sin(x)"]).status.code(), Some(1));
    assert_eq!(sturmcert(&["--help"]).status.code(), Some(0));
}

#[test]
fn convert_outputs() {
    assert_eq!(stdout(&sturmcert(&["convert", "cos(2*x)"])).trim(), "2*Y^2-1");
    assert_eq!(stdout(&sturmcert(&["convert", "sin(3*x)"])).trim(), "sin(x)*(4*Y^2-1)");
    let x = sturmcert(&["convert", "1 - cos(10*y) + 1/2*cos(20*y) - 820/33*(1-cos(y))"]);
    assert_eq!(
        stdout(&x).trim(),
        "262144*Y^20-1310720*Y^18+2785280*Y^16-3276800*Y^14+2329600*Y^12-1025536*Y^10\
         +275840*Y^8-43360*Y^6+3700*Y^4-150*Y^2+820/33*Y-1475/66"
    );
    let scaled = sturmcert(&["convert", "cos(x)", "--scale", "2", "--var", "Z"]);
    assert_eq!(stdout(&scaled).trim(), "2*Z^2-1");
}

#[test]
fn count_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("count.json");
    let o = sturmcert(&["count", "x^2-2", "--lo", "0", "--hi", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["root_count"], 1);
    assert_eq!(v["interval"][1], "2/1");
}

#[test]
fn isolate_separates_roots() {
    let o = sturmcert(&["isolate", "x^3-x", "--lo", "-2", "--hi", "2", "--width", "1/10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn suite_subcommand_lemma11_and_lemma7() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l11.json");
    let o = sturmcert(&["paper", "lemma11", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("POSITIVE"));
    assert!(path.exists());

    let o = sturmcert(&["paper", "lemma7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 20);
    assert_eq!(out.lines().filter(|l| l.contains(" POSITIVE ")).count(), 19);
    assert!(out.lines().any(|l| l.starts_with("lemma07-n06") && l.contains("NOT-CERTIFIED")));
}

#[test]
fn suite_subcommand_writes_informational_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l1.json");
    let o = sturmcert(&["paper", "lemma1", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let info = std::fs::read_to_string(dir.path().join("l1.json.info.json")).unwrap();
    assert!(info.contains("NON-CERTIFIED"));
}
