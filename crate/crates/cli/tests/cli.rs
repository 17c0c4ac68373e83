//! Black-box tests of the `xconn` binary: argument handling, output
//! formats, certificate emission, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn xconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xconn"))
        .args(args)
        .output()
        .expect("running the xconn binary")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn gen_writes_a_canonical_edge_list() {
    let out = xconn(&["gen", "cycle:5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p 5 5\n"), "got: {text}");
    assert!(text.contains("e 0 1\n"));
    assert!(text.contains("e 3 4\n"));
}

#[test]
fn gen_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.txt");
    let out = xconn(&["gen", "cycle:6", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p 6 6\n"));
}

#[test]
fn product_records_factors_in_comments() {
    let out = xconn(&["product", "cycle:3", "path:2", "--kind", "cartesian"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# cartesian product of cycle:3 (n1=3) and path:2 (n2=2)"));
    assert!(text.contains("# vertex (x, y) has id x*n2 + y"));
    assert!(text.contains("p 6 9"));
}

#[test]
fn product_spec_gen_matches_product_command() {
    let via_gen = xconn(&["gen", "strong(cycle:3,path:2)"]);
    let via_product = xconn(&["product", "cycle:3", "path:2"]);
    assert!(via_gen.status.success() && via_product.status.success());
    assert_eq!(stdout(&via_gen), stdout(&via_product));
}

#[test]
fn invariant_full_report_lists_hypothesis_fields() {
    let out = xconn(&["invariant", "heawood"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for field in [
        "spec",
        "n",
        "m",
        "k",
        "kappa",
        "girth",
        "maximally_connected",
        "qualifies_for_g",
    ] {
        assert!(text.contains(field), "missing {field} in: {text}");
    }
    assert!(text.contains("heawood"));
}

#[test]
fn invariant_selected_fields_as_csv() {
    let out = xconn(&["invariant", "petersen", "--girth", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "spec,n,m,girth\npetersen,10,15,5\n");

    let out = xconn(&["invariant", "cycle:6", "--kappa", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "spec,n,m,kappa\ncycle:6,6,6,2\n");
}

#[test]
fn extra_cross_checks_methods_and_emits_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.txt");
    let out = xconn(&[
        "extra",
        "strong(cycle:5,cycle:5)",
        "--g",
        "1",
        "--method",
        "both",
        "--emit-cert",
        cert_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("value      10"), "got: {text}");
    assert!(text.contains("method     branch_and_bound"));
    assert!(text.contains("method     oracle"));
    let cert = std::fs::read_to_string(&cert_path).unwrap();
    assert!(cert.contains("g 1\n"));
    assert!(cert.contains("size 10\n"));
    assert!(cert.contains("valid true\n"));
}

#[test]
fn extra_with_a_tiny_budget_exits_unknown() {
    let out = xconn(&[
        "extra",
        "strong(cycle:6,cycle:6)",
        "--g",
        "2",
        "--budget-nodes",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout(&out));
    assert!(stdout(&out).contains("value      unknown"));
}

#[test]
fn formula_prints_the_labeled_table() {
    let out = xconn(&["formula", "--g", "1", "--k1", "2", "--k2", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in [
        "kappa_g         10",
        "M1              10",
        "M2              10",
        "M               10",
        "diagnosability  11",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in: {text}");
    }
}

#[test]
fn formula_single_selections_and_aliases() {
    let lower = xconn(&[
        "formula", "--g", "2", "--k1", "3", "--k2", "4", "--which", "m1",
    ]);
    let upper = xconn(&[
        "formula", "--g", "2", "--k1", "3", "--k2", "4", "--which", "M1",
    ]);
    assert!(lower.status.success() && upper.status.success());
    assert_eq!(stdout(&lower), stdout(&upper));
    assert!(stdout(&lower).contains("37"));
}

#[test]
fn formula_cycle_mode_reads_cycle_lengths() {
    let out = xconn(&[
        "formula", "--g", "3", "--k1", "7", "--k2", "7", "--which", "cycle",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("kappa_g           12"), "got: {text}");
    assert!(text.contains("hypothesis_holds  true"));
}

#[test]
fn pmc_witness_exhibits_the_pair() {
    let out = xconn(&["pmc", "strong(cycle:5,cycle:5)", "--g", "1", "--witness"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("f1 (size 10)"), "got: {text}");
    assert!(text.contains("f2 (size 12)"));
    assert!(text.contains("distinguishable false"));
    assert!(text.contains("preconditions   true"));
    assert!(text.contains("diagnosability  11"));
}

#[test]
fn pmc_exhaustive_refutation_exits_one() {
    let out = xconn(&["pmc", "path:4", "--g", "0", "--exhaustive-t", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NOT 2-diagnosable"));
}

#[test]
fn pmc_sampling_below_the_threshold_finds_nothing() {
    let out = xconn(&[
        "pmc",
        "strong(cycle:5,cycle:5)",
        "--g",
        "1",
        "--sample-t",
        "11",
        "--samples",
        "2000",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no counterexample"));
}

#[test]
fn pmc_requires_exactly_one_mode() {
    let none = xconn(&["pmc", "cycle:6", "--g", "1"]);
    assert!(!none.status.success());
    let two = xconn(&["pmc", "cycle:6", "--g", "1", "--witness", "--sample-t", "3"]);
    assert!(!two.status.success());
}

#[test]
fn verify_smoke_suite_passes_with_csv_header() {
    let out = xconn(&["verify", "--suite", "smoke", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("factor1,factor2,g,expected,computed,status,nodes,elapsed_ms")
    );
    assert_eq!(
        lines.clone().count(),
        4,
        "smoke suite has four cases: {text}"
    );
    assert!(lines.all(|l| l.contains(",pass,")));
}

#[test]
fn verify_manifest_override_and_unknown_exit() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# tiny-budget case that cannot settle").unwrap();
    writeln!(file, "cycle:5 cycle:5 1 search -").unwrap();
    writeln!(file, "cycle:6 cycle:6 2 search 50").unwrap();
    file.flush().unwrap();
    let out = xconn(&[
        "verify",
        "--manifest",
        file.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(2), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains(",pass,"));
    assert!(text.contains(",unknown,"));
}

#[test]
fn verify_rejects_an_unknown_suite_name() {
    let out = xconn(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("unknown suite"), "got: {err}");
    assert!(
        err.contains("smoke"),
        "should list the available suites: {err}"
    );
}

#[test]
fn malformed_specs_exit_with_an_error() {
    let out = xconn(&["gen", "dodecahedron"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));

    let out = xconn(&["extra", "cycle:glued", "--g", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn hypothesis_skips_surface_in_the_report() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "path:4 cycle:5 1 search -").unwrap();
    file.flush().unwrap();
    let out = xconn(&[
        "verify",
        "--manifest",
        file.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "skips alone do not fail a run");
    assert!(stdout(&out).contains("skipped(hypothesis)"));
}
