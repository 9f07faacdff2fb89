use std::process::{Command, Output};

fn lemn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lemn"))
        .args(args)
        .env_remove("LEMN_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gauss_factor_examples() {
    let o = lemn(&["gauss", "factor", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "unit: 1\nfactors: (-1+2i) (-1-2i)\n");

    let o = lemn(&["gauss", "factor", "1"]);
    assert_eq!(stdout(&o), "unit: 1\nfactors: \n");

    let o = lemn(&["gauss", "factor", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = lemn(&["gauss", "factor", "-4-4i", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["factors"][0]["prime"], "1+i");
    assert_eq!(v["factors"][0]["exponent"], 5);
}

#[test]
fn divpoly_examples() {
    assert_eq!(stdout(&lemn(&["divpoly", "5"])), "x^25 + 50x^21 - 125x^17 + 300x^13 - 105x^9 - 62x^5 + 5x\n");
    assert_eq!(stdout(&lemn(&["divpoly", "1"])), "x\n");
    assert_eq!(stdout(&lemn(&["divpoly", "-1+2i"])), "x^5 + (-1+2i)x\n");
    assert_eq!(lemn(&["divpoly", "2"]).status.code(), Some(2));
    assert_eq!(lemn(&["divpoly", "1+i"]).status.code(), Some(2));
}

#[test]
fn lemnatomic_json() {
    let o = lemn(&["lemnatomic", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let coeffs: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let mut want = vec!["0"; 17];
    for (k, c) in [(0, "1"), (4, "-12"), (8, "-26"), (12, "52"), (16, "1")] {
        want[k] = c;
    }
    assert_eq!(coeffs, want);
    assert_eq!(v["degree"], 16);
}

#[test]
fn lemnatomic_of_associates_agree() {
    let a = stdout(&lemn(&["lemnatomic", "-1+2i"]));
    let b = stdout(&lemn(&["lemnatomic", "2+i"]));
    assert_eq!(a, "x^4 + (-1+2i)\n");
    assert_eq!(a, b);
}

#[test]
fn constructible_and_cheb() {
    assert_eq!(stdout(&lemn(&["constructible", "7"])), "false: 7 is not a Fermat prime\n");
    assert_eq!(stdout(&lemn(&["constructible", "17"])), "true: 17 = 17\n");
    let o = lemn(&["cheb", "d", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["poly"], "x^4 - 5x^2 + 5");
    assert_eq!(lemn(&["cheb", "d", "6"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lemn(&["divpoly", "x"]).status.code(), Some(2));
    assert_eq!(lemn(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lemn(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(lemn(&["constructible", "-3"]).status.code(), Some(2));
}

#[test]
fn verify_structural_passes_and_is_deterministic() {
    let a = lemn(&["verify", "--suite", "structural", "--max-norm", "100", "--json"]);
    let b = lemn(&["verify", "--suite", "structural", "--max-norm", "100", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

fn identity_threshold(args: &[&str], env: &str) -> String {
    let o = Command::new(env!("CARGO_BIN_EXE_lemn"))
        .args(args)
        .env("LEMN_DIGITS", env)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    let add = checks.iter().find(|c| c["check"] == "addition law").unwrap();
    add["expected"].as_str().unwrap().to_string()
}

#[test]
fn digits_flag_wins_over_environment() {
    let args = ["verify", "--suite", "numeric", "--json"];
    assert_eq!(identity_threshold(&args, "30"), "< 1e-15");
    let with_flag = ["verify", "--suite", "numeric", "--json", "--digits", "35"];
    assert_eq!(identity_threshold(&with_flag, "30"), "< 1e-20");
    let o = Command::new(env!("CARGO_BIN_EXE_lemn"))
        .args(["verify", "--suite", "numeric"])
        .env("LEMN_DIGITS", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
