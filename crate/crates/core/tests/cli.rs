use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcharsum")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn involutions_closed_form_and_brute_force_agree() {
    assert_eq!(run(&["involutions", "--group", "gl", "--n", "2", "--q", "4"]), (0, "16\n".into()));
    assert_eq!(run(&["brute-involutions", "--group", "gl", "--n", "2", "--q", "4"]), (0, "16\n".into()));
    assert_eq!(run(&["involutions", "--group", "weylD", "--n", "6"]).1, run(&["degree-sum", "--group", "weylD", "--n", "6"]).1);
}

#[test]
fn symbolic_degree_sums() {
    let (code, out) = run(&["degree-sum", "--group", "u", "--n", "2", "--parity", "odd"]);
    assert_eq!(code, 0);
    let closed = run(&["degree-sum", "--group", "u", "--n", "2", "--parity", "odd", "--closed"]).1;
    assert_eq!(out, closed);
    let (_, split) = run(&["eps-split", "--group", "u", "--n", "3", "--closed"]);
    assert_eq!(split.lines().count(), 2);
    assert!(split.starts_with("+1\t"));
}

#[test]
fn hall_littlewood_value_accepts_negative_arguments() {
    let (code, out) = run(&["hl-value", "--lambda", "1,1", "--z", "-1/q", "--t", "1/q"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.trim().is_empty());
}

#[test]
fn census_prints_a_table() {
    let (code, out) = run(&["census", "--flavor", "gl", "--dmax", "3", "--q", "3"]);
    assert_eq!(code, 0);
    let brute = run(&["census", "--flavor", "gl", "--dmax", "3", "--q", "3", "--brute"]).1;
    let rows = |s: &str, source: &str| {
        s.lines().skip(1).filter_map(|l| l.strip_suffix(source).map(str::to_string)).collect::<Vec<_>>()
    };
    assert_eq!(rows(&brute, "formula"), rows(&out, "formula"));
    assert_eq!(rows(&brute, "brute"), rows(&out, "formula"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn named_generating_function() {
    let (code, out) = run(&["gf", "--name", "gl_invol_gf", "--order", "3", "--q", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn verify_tsv_is_reproducible() {
    let args = ["verify", "--tag", "example", "--tsv", "--no-timing"];
    let (code, a) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, run(&args).1);
    assert_eq!(a.lines().count(), 4);
}

#[test]
fn unknown_check_is_an_error() {
    assert_eq!(run(&["verify", "--id", "nope"]).0, 2);
}
