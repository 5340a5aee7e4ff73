use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pi_lookups() {
    let o = run(&["pi", "--family", "O", "--n", "5", "--i", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Z\n");

    let o = run(&["pi", "--family", "PO", "--n", "8", "--i", "1"]);
    assert_eq!(stdout(&o), "Z/2 + Z/2\n");
}

#[test]
fn pi_reports_split_at_first_unstable_degree() {
    let o = run(&["pi", "--family", "SO", "--n", "10", "--i", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Z + Z/2\nkernel: Z\nstable: Z/2\nsplit: yes\n");
}

#[test]
fn pi_out_of_range_exits_2() {
    let o = run(&["pi", "--family", "O", "--n", "5", "--i", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(
        stderr(&o).contains("first unstable degree 4"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn pi_rejects_unknown_family() {
    let o = run(&["pi", "--family", "Sp", "--n", "5", "--i", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_decomposable_json() {
    let o = run(&[
        "certify", "--m", "2", "--n", "3", "--dim", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"decomposable\": true"));
    assert!(out.contains("\"N\": 13"));
}

#[test]
fn certify_dimension_gate_exits_1() {
    let o = run(&["certify", "--m", "4", "--n", "3", "--dim", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("connectivity = 3"));
}

#[test]
fn certify_invalid_input_exits_3() {
    let o = run(&["certify", "--m", "6", "--n", "9", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not coprime"));
    let o = run(&["certify", "--m", "4", "--n", "4", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("wrong parity"));
}

#[test]
fn certify_json_matches_library_output() {
    let o = run(&[
        "certify", "--m", "2", "--n", "3", "--dim", "2", "--format", "json",
    ]);
    let golden = include_str!("../../core/tests/data/certificate_m2_n3_dim2.json");
    assert_eq!(stdout(&o).trim_end(), golden.trim_end());
}

#[test]
fn verify_lemmas_reports_the_failing_conjugation() {
    // The W_d conjugator does not carry s_1 to s_2 when the swapped
    // coordinates fall inside block 2 (n odd with r = 2, n = 1 with r = 3).
    let o = run(&["verify-lemmas", "--max-size", "4", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(4));
    let out = stdout(&o);
    assert!(out.contains("FAIL  block-swap conjugation"));
    assert!(out.contains("ok  shuffle conjugation"));
    assert!(out.contains("ok  factored shuffle conjugation"));
    assert!(out.contains("ok  product formula"));
    assert!(stderr(&o).contains("(W_d P_1)"), "{}", stderr(&o));
}

#[test]
fn verify_lemmas_rejects_max_size_1() {
    let o = run(&["verify-lemmas", "--max-size", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_lemmas_is_deterministic() {
    let a = run(&[
        "verify-lemmas",
        "--max-size",
        "3",
        "--seed",
        "7",
        "--samples",
        "20",
    ]);
    let b = run(&[
        "verify-lemmas",
        "--max-size",
        "3",
        "--seed",
        "7",
        "--samples",
        "20",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_lemmas_small_sizes_still_reach_the_failing_shape() {
    // max size 2 still includes n = 1, r = 2, where the W_d conjugation fails
    let o = run(&["verify-lemmas", "--max-size", "2", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn bezout_command() {
    let o = run(&["bezout", "--a", "3", "--b", "5"]);
    assert_eq!(stdout(&o), "u = 2, v = 1, sign = -1\n");
    let o = run(&["bezout", "--a", "6", "--b", "9"]);
    assert_eq!(o.status.code(), Some(3));
}
