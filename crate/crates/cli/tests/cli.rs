//! End-to-end tests against the compiled binary.

use std::process::Command;

fn noncross(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_noncross"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("binary exits normally"),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

#[test]
fn count_evaluates_formulas() {
    let (code, stdout, _) = noncross(&["count", "--sequence", "ncpp", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "28\n");

    let (code, stdout, _) = noncross(&["count", "--sequence", "catalan", "--n", "40"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "2622127042276492108820\n");

    let (code, stdout, _) =
        noncross(&["count", "--sequence", "chiral", "--n", "8", "--brute-force"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "60\n");
}

#[test]
fn count_ranges_stream_one_line_per_size() {
    let (code, stdout, _) =
        noncross(&["count", "--sequence", "sc", "--n-max", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,sc_nc\n1,1\n2,2\n3,3\n4,6\n5,10\n");

    let (code, stdout, _) = noncross(&["count", "--sequence", "fpt", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 1\n2 1\n3 2\n");

    let (code, stdout, _) =
        noncross(&["count", "--sequence", "bell", "--n", "4", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"n\":4,\"bell\":15}\n");
}

#[test]
fn map_applies_bijections() {
    let (code, stdout, _) = noncross(&["map", "kreweras", "--partition", "1/2/3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,2,3\n");

    let (code, stdout, _) =
        noncross(&["map", "nc-to-dyck", "--partition", "1/4/3,5/7,8/2,6,9/11/10,12"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "UDUUUDUDDUUUDDUDDDUUDUDD\n");

    let (code, stdout, _) =
        noncross(&["map", "dyck-to-nc", "--path", "UDUUUDUDDUUUDDUDDDUUDUDD"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1/2,6,9/3,5/4/7,8/10,12/11\n");

    let (code, stdout, _) = noncross(&["map", "rotate", "--partition", "1,2/3", "--k", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,3/2\n");

    let (code, stdout, _) = noncross(&["map", "nc-to-tree", "--partition", "1,3/2/4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "W(Y(W(Y)),Y)\n");

    let (code, stdout, _) = noncross(&["map", "tree-to-nc", "--tree", "W(Y(W(Y)),Y)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,3/2/4\n");

    let (code, stdout, _) = noncross(&["map", "sc-to-balanced", "--partition", "1,4/2,3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "DUDU\n");

    let (code, stdout, _) = noncross(&["map", "balanced-to-sc", "--path", "DUDU"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1,4/2,3\n");
}

#[test]
fn enumerate_streams_partitions() {
    let (code, stdout, _) = noncross(&["enumerate", "--n", "4", "--nc-only"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "1,2,3,4");
    assert_eq!(lines[13], "1/2/3/4");

    let (code, stdout, _) = noncross(&["enumerate", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 15);

    let (code, stdout, _) =
        noncross(&["enumerate", "--n", "4", "--nc-only", "--self-complementary"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
}

#[test]
fn enumerate_streams_classes() {
    let (code, stdout, _) =
        noncross(&["enumerate", "--n", "4", "--nc-only", "--classes", "rotation"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
    assert_eq!(
        stdout.lines().next(),
        Some("1,2,3,4 orbit_size=1 achiral=true sc_count=1 complement_order_parity=odd")
    );

    let (code, stdout, _) = noncross(&[
        "enumerate", "--n", "6", "--nc-only", "--classes", "dihedral", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 24);

    let (code, stdout, _) =
        noncross(&["enumerate", "--n", "6", "--nc-only", "--classes", "rotation"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 28);
}

#[test]
fn orbit_reports_the_classification() {
    let (code, stdout, _) = noncross(&["orbit", "--partition", "1,2/3,4", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"achiral\":true,\"complement_order_parity\":\"even\",\"members\":[\"1,2/3,4\",\"1,4/2,3\"],\"orbit_size\":2,\"representative\":\"1,2/3,4\",\"sc_count\":2}\n"
    );

    let (code, stdout, _) = noncross(&["orbit", "--partition", "1,3,4/2/5,6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("orbit_size: 6"));
}

#[test]
fn verify_suites_pass_in_range() {
    for args in [
        ["verify", "identities", "--n", "6"],
        ["verify", "theorem1", "--n", "8"],
        ["verify", "theorem2", "--n", "8"],
        ["verify", "trees", "--n", "7"],
        ["verify", "clickable", "--n", "6"],
        ["verify", "lemma1", "--n", "8"],
        ["verify", "table", "--n-max", "22"],
    ] {
        let (code, stdout, _) = noncross(&args);
        assert_eq!(code, 0, "{args:?}");
        assert!(stdout.ends_with("result: pass\n"), "{args:?}: {stdout}");
    }
}

#[test]
fn conjecture_agrees_and_reports() {
    let (code, stdout, _) = noncross(&["conjecture", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "self-complementary partitions: 59\nself-complementary rotation classes: 59\nagree: true\n"
    );
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        vec!["map", "kreweras", "--partition", "1,1/2"],
        vec!["map", "nc-to-dyck", "--partition", "1,3/2,4"],
        vec!["map", "kreweras", "--path", "UD"],
        vec!["map", "rotate", "--partition", "1/2", "--k", "1", "--chirality", "rotation"],
        vec!["count", "--sequence", "ncpp", "--n", "13", "--brute-force"],
        vec!["count", "--sequence", "fpt", "--n", "5", "--brute-force"],
        vec!["count", "--sequence", "ncpp", "--n", "3", "--n-max", "5"],
        vec!["count", "--sequence", "ncpp", "--n", "0"],
        vec!["enumerate", "--n", "13", "--nc-only", "--classes", "rotation"],
        vec!["enumerate", "--n", "11", "--classes", "rotation"],
        vec!["verify", "identities", "--n-max", "5"],
        vec!["verify", "table", "--n", "5"],
        vec!["verify", "table", "--n-max", "40"],
        vec!["verify", "lemma1", "--n", "13"],
        vec!["conjecture", "--n", "11"],
        vec!["orbit", "--partition", "1,5/2"],
    ] {
        let (code, stdout, stderr) = noncross(&args);
        assert_eq!(code, 2, "{args:?}: {stdout}{stderr}");
    }
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let first = noncross(&["table", "--n-max", "22"]);
    let second = noncross(&["table", "--n-max", "22"]);
    assert_eq!(first, second);
    assert_eq!(first.0, 0);

    let first = noncross(&["enumerate", "--n", "6", "--nc-only", "--classes", "dihedral"]);
    let second = noncross(&["enumerate", "--n", "6", "--nc-only", "--classes", "dihedral"]);
    assert_eq!(first, second);
}

#[test]
fn table_csv_is_the_golden_prefix() {
    let (code, stdout, _) = noncross(&["table", "--n-max", "6", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,ncpp,dihedral,chiral_pairs,sc_nc,catalan,fpt\n1,1,1,0,1,1,1\n2,2,2,0,2,2,1\n\
         3,3,3,0,3,5,2\n4,6,6,0,6,14,3\n5,10,10,0,10,42,6\n6,28,24,4,20,132,14\n"
    );
}
