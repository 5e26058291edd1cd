use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_design-ideals"))
        .args(args)
        .env_remove("DESIGN_IDEALS_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn ok(args: &[&str]) -> Output {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    o
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn block_lines(path: &Path) -> usize {
    let text = std::fs::read_to_string(path).unwrap();
    text.lines().skip(1).filter(|l| !l.trim().is_empty() && !l.starts_with('#')).count()
}

fn build_2v32(dir: &TempDir) -> PathBuf {
    let out = dir.path().join("d.dsn");
    let trade = data("pasch.trd");
    ok(&[
        "construct",
        "--family",
        "2v32",
        "--trade",
        path_str(&trade),
        "--drop",
        "4 5 6",
        "--v",
        "15",
        "--seed",
        "1",
        "-o",
        path_str(&out),
    ]);
    out
}

fn gamma_json(design: &Path, extra: &[&str]) -> serde_json::Value {
    let mut args = vec!["gamma", "--design", path_str(design)];
    args.extend_from_slice(extra);
    serde_json::from_str(&stdout(&ok(&args))).unwrap()
}

#[test]
fn construct_witt24() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("witt24.dsn");
    let o = ok(&["construct", "--family", "witt24", "-o", path_str(&out)]);
    assert_eq!(block_lines(&out), 759);
    assert!(stdout(&o).contains("strength 5-(24,8,1)"));
}

#[test]
fn construct_projective_plane() {
    let o = ok(&["construct", "--family", "pg", "--d", "2", "--e", "1", "--q", "4"]);
    assert!(stderr(&o).contains("v 21 k 5 blocks 21 strength 2-(21,5,1)"));
    assert_eq!(stdout(&o).lines().next(), Some("21 5 0"));
}

#[test]
fn construct_2v32_and_sts_alias() {
    let dir = TempDir::new().unwrap();
    let out = build_2v32(&dir);
    assert_eq!(block_lines(&out), 70);
    let again = dir.path().join("e.dsn");
    let trade = data("pasch.trd");
    let o = ok(&[
        "sts",
        "build-2v32",
        "--trade",
        path_str(&trade),
        "--drop-block",
        "4 5 6",
        "--v",
        "15",
        "--seed",
        "1",
        "-o",
        path_str(&again),
    ]);
    assert!(stderr(&o).contains("dropped block: 3 4 5"));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn gamma_examples() {
    let dir = TempDir::new().unwrap();
    for (family, g1, g2) in [("witt22", 2, 2), ("fano", 2, 2)] {
        let path = dir.path().join(format!("{family}.dsn"));
        ok(&["construct", "--family", family, "-o", path_str(&path)]);
        let cert = gamma_json(&path, &[]);
        assert_eq!(cert["gamma1"]["value"], g1, "{family}");
        assert_eq!(cert["gamma2"]["value"], g2, "{family}");
    }
    let d = build_2v32(&dir);
    let cert = gamma_json(&d, &[]);
    assert_eq!(cert["gamma1"]["value"], 2);
    assert_eq!(cert["gamma2"]["value"], 3);
    assert_eq!(cert["gamma2"]["lower"]["source"], "linearization");
    assert_eq!(cert["gamma2"]["upper"]["family"], "gY");
}

#[test]
fn gamma_is_deterministic_up_to_wall_time() {
    let dir = TempDir::new().unwrap();
    let d = build_2v32(&dir);
    let strip = |mut v: serde_json::Value| {
        v["gamma2"]["upper"]["zero_set"]["wall_ms"] = 0.into();
        v
    };
    assert_eq!(strip(gamma_json(&d, &[])), strip(gamma_json(&d, &[])));
}

#[test]
fn certificate_check_and_tamper() {
    let dir = TempDir::new().unwrap();
    let d = build_2v32(&dir);
    let cert = dir.path().join("c.json");
    ok(&["gamma", "--design", path_str(&d), "-o", path_str(&cert)]);
    let o = ok(&["check-certificate", path_str(&cert), "--design", path_str(&d)]);
    assert_eq!(stdout(&o).trim(), "valid");

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    v["gamma2"]["lower"]["certificate"]["combination"][0]["coeff"] = "5".into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let o = run(&["check-certificate", path_str(&bad), "--design", path_str(&d)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("invalid"));
    assert!(stdout(&o).contains("gamma2.lower.certificate:"));
}

#[test]
fn certificate_for_builtin_design_without_design_flag() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("witt10.dsn");
    ok(&["construct", "--family", "witt10", "-o", path_str(&path)]);
    let cert = dir.path().join("c.json");
    ok(&["gamma", "--design", path_str(&path), "-o", path_str(&cert)]);
    assert_eq!(stdout(&ok(&["check-certificate", path_str(&cert)])).trim(), "valid");
}

#[test]
fn reproduce_single_rows() {
    let o = ok(&["reproduce-table", "--row", "witt23"]);
    assert!(stdout(&o).contains("expected (3,3) got (3,3) ok"));
    let o = ok(&["reproduce-table", "--row", "sts9"]);
    assert!(stdout(&o).contains("expected (2,2) got (2,2) ok"));
    assert_eq!(run(&["reproduce-table", "--row", "nope"]).status.code(), Some(4));
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let fano = dir.path().join("fano.dsn");
    ok(&["construct", "--family", "fano", "-o", path_str(&fano)]);
    assert!(stdout(&ok(&["verify", "--design", path_str(&fano), "--family", "steiner"])).contains("exact"));

    let o = ok(&[
        "verify",
        "--design",
        path_str(&data("witt10.dsn")),
        "--generators",
        path_str(&data("octagon5.gen")),
    ]);
    // five octagon polynomials plus the 11 trivial generators
    assert!(stdout(&o).contains("exact (16 generators, max degree 2)"));
}

#[test]
fn data_files_are_golden() {
    let witt10 = stdout(&ok(&["construct", "--family", "witt10"]));
    assert_eq!(witt10, std::fs::read_to_string(data("witt10.dsn")).unwrap());
    let gens = stdout(&ok(&["generators", "--design", path_str(&data("witt10.dsn")), "--family", "octagon"]));
    assert_eq!(gens, std::fs::read_to_string(data("octagon5.gen")).unwrap());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let fano = dir.path().join("fano.dsn");
    ok(&["construct", "--family", "fano", "-o", path_str(&fano)]);
    // the trivial generators alone vanish on every 3-set
    let g0 = dir.path().join("g0.gen");
    let squares: String = (0..7).map(|i| format!("square {i}\n")).collect();
    std::fs::write(&g0, format!("family g0\nv 7\nk 3\nsum\n{squares}")).unwrap();
    let o = run(&["verify", "--design", path_str(&fano), "--generators", path_str(&g0)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("extra-zero"));
    let o = run(&["gamma", "--design", path_str(&fano), "--generators", path_str(&g0)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("extra-zero"));
    let o = run(&["verify", "--design", path_str(&fano), "--family", "partial", "--t", "1"]);
    assert_eq!(o.status.code(), Some(4));

    let o = run(&["--budget", "100", "verify", "--design", path_str(&data("witt10.dsn")), "--family", "gY"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_design-ideals"))
        .args(["verify", "--design", path_str(&data("witt10.dsn")), "--family", "gY"])
        .env("DESIGN_IDEALS_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(run(&["construct", "--family", "nonsense"]).status.code(), Some(4));
    assert_eq!(run(&["gamma", "--design", "/nonexistent.dsn"]).status.code(), Some(4));
    assert_eq!(run(&["bogus-command"]).status.code(), Some(4));
    assert_eq!(run(&["construct", "--family", "sts", "--v", "8"]).status.code(), Some(4));
}

#[test]
fn sts_subcommands() {
    assert_eq!(stdout(&ok(&["sts", "pasch", "--v", "7"])).trim(), "7");
    let dir = TempDir::new().unwrap();
    let pg = dir.path().join("pg32.dsn");
    ok(&["construct", "--family", "pg", "--d", "3", "--e", "1", "--q", "2", "-o", path_str(&pg)]);
    assert_eq!(stdout(&ok(&["sts", "pasch", "--design", path_str(&pg)])).trim(), "105");

    let partial = dir.path().join("p.txt");
    std::fs::write(&partial, "base 1\n1 2 3\n1 4 5\n").unwrap();
    let out = dir.path().join("s.dsn");
    let o = ok(&[
        "sts",
        "complete",
        "--partial",
        path_str(&partial),
        "--v",
        "13",
        "--seed",
        "3",
        "-o",
        path_str(&out),
    ]);
    assert!(stdout(&o).contains("strength 2-(13,3,1)"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().any(|l| l == "0 1 2") && text.lines().any(|l| l == "0 3 4"));
}

#[test]
fn coset_rank_queries() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("witt22.dsn");
    ok(&["construct", "--family", "witt22", "-o", path_str(&w)]);
    let o = ok(&["coset-rank", "--design", path_str(&w), "--block-degree", "2"]);
    assert_eq!(stdout(&o).trim(), "rank 77 blocks 77 polynomials 77: basis");
    let fano = dir.path().join("fano.dsn");
    ok(&["construct", "--family", "fano", "-o", path_str(&fano)]);
    let o = ok(&["coset-rank", "--design", path_str(&fano), "--monomial-degree", "1"]);
    assert_eq!(stdout(&o).trim(), "rank 7 blocks 7 polynomials 7: basis");
}
