use std::process::{Command, Output};

fn snakelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snakelab"))
        .args(args)
        .env_remove("SNAKELAB_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = snakelab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    snakelab(args).status.code().unwrap()
}

#[test]
fn entringer_csv_matches_reference_rows() {
    assert_eq!(
        stdout(&["entringer", "--rows", "5", "--format", "csv"]),
        "1\n0,1\n0,1,1\n0,1,2,2\n0,2,4,5,5\n0,5,10,14,16,16\n"
    );
    assert_eq!(stdout(&["entringer", "--rows", "1"]), "1\n0\t1\n");
    let j: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "entringer", "--rows", "2"])).unwrap();
    assert_eq!(j[2][2], "1");
    assert_eq!(code(&["entringer", "--rows", "1000"]), 1);
}

#[test]
fn enumerate_lists_in_order() {
    assert_eq!(stdout(&["enumerate", "--class", "sn", "--size", "3"]), "1 3 2\n2 3 1\n");
    assert_eq!(stdout(&["enumerate", "--class", "cn", "--size", "2"]), "1 2\n");
    assert_eq!(stdout(&["enumerate", "--class", "dn", "--size", "2"]), "2 1\n");
    assert_eq!(stdout(&["enumerate", "--class", "ascending", "--size", "0"]), "()\n");
    assert_eq!(
        stdout(&["enumerate", "--class", "sn", "--size", "3", "--stat", "interior_peaks", "--format", "csv"]),
        "permutation,interior_peaks\n1 3 2,1\n2 3 1,1\n"
    );
    assert_eq!(stdout(&["enumerate", "--class", "sn", "--size", "5"]).lines().count(), 16);
    assert_eq!(code(&["enumerate", "--class", "sn", "--size", "7", "--cap", "5"]), 1);
    assert_eq!(code(&["enumerate", "--class", "sn", "--size", "3", "--cap", "14"]), 1);
    assert_eq!(code(&["enumerate", "--class", "xx", "--size", "3"]), 1);
    assert_eq!(code(&["enumerate", "--class", "sn", "--size", "3", "--stat", "bogus"]), 1);
}

#[test]
fn weights_prints_one_polynomial_per_size() {
    let out = stdout(&["weights", "--class", "sn", "--max-n", "5", "--stat", "interior_peaks"]);
    assert_eq!(out, "1\t1\t1\n3\t2\t2w\n5\t16\t16w^2\n");
    let out = stdout(&["weights", "--class", "cn", "--max-n", "4", "--stat", "peaks-with-final", "--format", "csv"]);
    assert!(out.starts_with("size,count,weight\n0,1,1\n2,1,"), "{out}");
}

#[test]
fn jacobi_symbolic_and_specialized() {
    let out = stdout(&["jacobi", "--max-n", "2"]);
    assert_eq!(out, "0\t1\t1\t1\n1\t-1 - m\t-1\t-m\n2\t1 + 14m + m^2\t1 + 4m\t4m + m^2\n");
    let out = stdout(&["jacobi", "--max-n", "2", "--at", "m=1"]);
    assert_eq!(out, "0\t1\t1\t1\n1\t-2\t-1\t-1\n2\t16\t5\t5\n");
    let out = stdout(&["jacobi", "--max-n", "1", "--at", "1/2"]);
    assert!(out.contains("-3/2"));
    assert_eq!(code(&["jacobi", "--max-n", "2", "--at", "m=x"]), 1);
}

#[test]
fn cfrac_builtin_file_and_specialization() {
    let out = stdout(&["cfrac", "--scheme", "tan-classical", "--depth", "1", "--order", "3"]);
    assert_eq!(out, "0\t0\n1\t1\n2\t0\n3\t1/3\n");
    let out = stdout(&["cfrac", "--scheme", "elliptic-paper", "--depth", "3", "--order", "5", "--at", "m=0"]);
    assert_eq!(out, "0\t0\n1\t1\n2\t0\n3\t0\n4\t0\n5\t0\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scheme.toml");
    std::fs::write(&path, "name = \"flat\"\nleading = \"one-over\"\nalpha = \"1\"\nbeta = \"1\"\n").unwrap();
    let p = path.to_str().unwrap();
    let out = stdout(&["cfrac", "--scheme-file", p, "--depth", "1", "--order", "4", "--format", "csv"]);
    assert_eq!(out, "power,coefficient\n0,1\n1,0\n2,1\n3,0\n4,1\n");

    std::fs::write(&path, "name = \"m\"\nalpha = \"1+m\"\nbeta = \"1\"\n").unwrap();
    assert_eq!(code(&["cfrac", "--scheme-file", p, "--depth", "1", "--order", "4"]), 1);
    assert!(stdout(&["cfrac", "--scheme-file", p, "--depth", "1", "--order", "4", "--at", "m=1"]).contains("1/2"));

    assert_eq!(code(&["cfrac", "--scheme", "nope", "--depth", "1", "--order", "4"]), 1);
    assert_eq!(code(&["cfrac", "--scheme", "tan-classical", "--scheme-file", p, "--depth", "1", "--order", "4"]), 1);
    assert_eq!(code(&["cfrac", "--scheme", "tan-classical", "--depth", "1", "--order", "41"]), 1);
    assert_eq!(code(&["cfrac", "--scheme", "tan-classical", "--depth", "0", "--order", "4"]), 1);
    assert_eq!(code(&["cfrac", "--depth", "1", "--order", "4"]), 1);
}

#[test]
fn schemes_catalog() {
    let out = stdout(&["schemes", "--format", "csv"]);
    assert_eq!(out.lines().count(), 5);
    assert!(out.contains("elliptic-paper,u-over,2*n-1,n^2*m"));
}

#[test]
fn andre_table() {
    let out = stdout(&["andre", "--max-n", "6"]);
    assert!(out.ends_with("5\t16\n6\t61\n"), "{out}");
    assert_eq!(out.lines().count(), 7);
    let j: serde_json::Value = serde_json::from_str(&stdout(&["andre", "--max-n", "11", "--format", "json"])).unwrap();
    assert_eq!(j[11]["A_n"], "353792");
}

#[test]
fn verify_selection_caps_and_strict() {
    let out = stdout(&["verify", "--claims", "ENT-TABLE,BIJ-RT", "--enum-size", "5", "--format", "json"]);
    let j: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<_> = j["verdicts"].as_array().unwrap().iter().map(|v| v["claim_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["ENT-TABLE", "BIJ-RT"]);
    assert_eq!(j["verdicts"][1]["instances_checked"], 18);

    let out = stdout(&["verify", "--claims", "CF-TAN", "--order", "10", "--cf-depth", "4", "--format", "csv"]);
    assert!(out.contains("CF-TAN,continued-fractions,pass"));

    let out = stdout(&["verify", "--claims", "AA", "--andre-max-n", "8"]);
    assert!(out.contains("AA-RATIO") && out.contains("== secant-tangent =="));

    assert_eq!(code(&["verify", "--claims", "ENT-TABLE", "--strict"]), 0);
    assert_eq!(code(&["verify", "--claims", "SIN-EGF", "--strict"]), 0);
    assert_eq!(code(&["verify", "--claims", "NOPE"]), 1);
    assert_eq!(code(&["verify", "--enum-size", "12"]), 1);
    assert_eq!(code(&["verify", "--cf-depth", "10"]), 1);
}

#[test]
fn report_writes_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    stdout(&["report", "--out", a.to_str().unwrap(), "--format", "json"]);
    stdout(&["report", "--out", b.to_str().unwrap(), "--format", "json"]);
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let j: serde_json::Value = serde_json::from_slice(&ra).unwrap();
    assert_eq!(j["schema_version"], 1);
    assert_eq!(j["summary"]["claims"], j["verdicts"].as_array().unwrap().len());

    let c = dir.path().join("r.csv");
    stdout(&["report", "--out", c.to_str().unwrap(), "--format", "csv", "--enum-size", "5"]);
    assert!(std::fs::read_to_string(&c).unwrap().starts_with("claim_id,group,status"));
    assert_eq!(code(&["report", "--format", "json"]), 1);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_snakelab"))
        .args(["andre", "--max-n", "2"])
        .env("SNAKELAB_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,A_n\n0,1\n1,1\n2,1\n");
}

#[test]
fn help_version_and_usage_errors() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["enumerate", "--help"]), 0);
    assert!(stdout(&["enumerate", "--help"]).contains("down-up of even"));
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["andre"]), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["weights", "--class", "dn", "--max-n", "8", "--stat", "interior_valleys", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}
