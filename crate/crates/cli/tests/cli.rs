use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qcturbo::permutation::{satisfies_s_constraint, InterleaverFile};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn qcturbo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcturbo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcturbo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn lambda_prints_ratio() {
    let o = qcturbo(&["lambda", "--gens", "13,15"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2/5\n");
    assert_eq!(stdout(&qcturbo(&["lambda", "--gens", "37,21"])), "1/4\n");
}

#[test]
fn inspect_shipped_tables() {
    for (file, header, period) in [("qc400.txt", "qc 20 20", 20), ("qc1600.txt", "qc 40 40", 40)] {
        let o = qcturbo(&["inspect", "--perm", &data(file)]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.contains(&format!("header {header}\n")), "{text}");
        assert!(text.contains(&format!("quasi_cyclic true period {period}\n")), "{text}");
    }
}

#[test]
fn inspect_identity_table() {
    let path = scratch("identity.txt");
    std::fs::write(&path, "table 10\n0 1 2 3 4 5 6 7 8 9\n").unwrap();
    let text = stdout(&qcturbo(&["inspect", "--perm", path.to_str().unwrap()]));
    assert!(text.contains("spread 2\n"));
    assert!(text.contains("kind table\n"));
}

#[test]
fn gen_is_deterministic() {
    let a = scratch("a.txt");
    let b = scratch("b.txt");
    for p in [&a, &b] {
        let o = qcturbo(&["gen", "--kind", "qc", "--n1", "20", "--n2", "20", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("quasi_cyclic true period 20"));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("qc 20 20\n"));
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
}

#[test]
fn gen_s_random_satisfies_constraint() {
    let o = qcturbo(&["gen", "--kind", "srandom", "--n", "400", "--s", "10", "--seed", "3"]);
    assert!(o.status.success());
    let file: InterleaverFile = stdout(&o).parse().unwrap();
    assert!(satisfies_s_constraint(&file.permutation(), 10));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n 400"));
}

#[test]
fn zstat_reports_no_violations() {
    let o = qcturbo(&["zstat", "--n1", "10", "--n2", "10", "--M", "4", "--trials", "50"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("divisibility_violations 0\n"));
}

#[test]
fn distance_exhaustive_record() {
    let path = scratch("id16.txt");
    let table: Vec<String> = (0..16).map(|i| i.to_string()).collect();
    std::fs::write(&path, format!("table 16\n{}\n", table.join(" "))).unwrap();
    let p = path.to_str().unwrap();
    let ex = stdout(&qcturbo(&["distance", "--perm", p, "--gens", "7,5", "--method", "exhaustive"]));
    assert!(ex.starts_with("method exhaustive\nbound_type exact\nvalue "), "{ex}");
    let lw = stdout(&qcturbo(&["distance", "--perm", p, "--gens", "7,5", "--max-weight", "16"]));
    let value = |t: &str| t.lines().find(|l| l.starts_with("value ")).unwrap().to_string();
    assert_eq!(value(&ex), value(&lw));
}

#[test]
fn simulate_writes_reproducible_csv() {
    let args = [
        "simulate", "--perm", &data("qc400.txt"), "--gens", "13,15", "--puncture", "alternate", "--snr", "0.5,1.5",
        "--iters", "2", "--max-frames", "20", "--seed", "4",
    ];
    let a = qcturbo(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "ebn0_db,frames,block_errors,bit_errors,wer,ber,censored");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("0.5,20,"));
    assert_eq!(stdout(&qcturbo(&args)), text);
}

#[test]
fn unsupported_length_needs_open_termination() {
    let base = ["simulate", "--perm", &data("qc1600.txt"), "--gens", "37,21", "--snr", "1", "--iters", "1", "--max-frames", "2"];
    let o = qcturbo(&base);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1600"));
    let mut open = base.to_vec();
    open.extend(["--termination", "open"]);
    assert!(qcturbo(&open).status.success());
}

#[test]
fn exit_codes() {
    assert_eq!(qcturbo(&["gen", "--kind", "srandom", "--n", "100", "--s", "20", "--max-attempts", "2"]).status.code(), Some(3));
    assert_eq!(qcturbo(&["lambda", "--gens", "13,15", "--horizon", "4"]).status.code(), Some(4));
    assert_eq!(qcturbo(&["lambda", "--gens", "13,15", "--bogus"]).status.code(), Some(2));
    assert_eq!(qcturbo(&["lambda", "--gens", "12,15"]).status.code(), Some(2));
    assert_eq!(qcturbo(&["inspect", "--perm", "/nonexistent"]).status.code(), Some(2));
    let help = stdout(&qcturbo(&["simulate", "--help"]));
    assert!(help.contains("Exit codes: 0 success, 2 invalid input, 3 construction failure, 4 resource limit."));
    assert!(help.contains("--stop-blocks"));
}
