use std::path::Path;
use std::process::Command;

use bouquet_core::catalog::Catalog;
use bouquet_core::PretzelState;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn bouquet<I: AsRef<std::ffi::OsStr>>(args: impl IntoIterator<Item = I>) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bouquet")).args(args).output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

#[test]
fn numbers_of_codes() {
    let r = bouquet(["tr", "(4)"]);
    assert_eq!((r.stdout.as_str(), r.code), ("4\n", 0));
    let r = bouquet(["kn", "(1)"]);
    assert_eq!((r.stdout.as_str(), r.code), ("inf\n", 0));
    let r = bouquet(["kn", "(2,3)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((v["kn"].as_u64(), v["formula"].as_u64(), v["oracle"].as_u64()), (Some(2), Some(2), Some(2)));
    let r = bouquet(["--format", "json", "kn", "(0)"]);
    assert!(r.stdout.contains("\"kn\": \"inf\""), "{}", r.stdout);
    let r = bouquet(["tr", "(1,1,3)", "--format", "csv"]);
    assert_eq!(r.stdout, "input,tr,formula,oracle\n\"(1,1,3)\",4,4,4\n");
}

#[test]
fn oracle_beyond_budget_falls_back_to_the_formula() {
    let r = bouquet(["tr", "(14)", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["tr"].as_u64(), Some(14));
    assert!(v["oracle"].is_null());
}

#[test]
fn validate_and_type() {
    let r = bouquet(["validate", "(2,4)"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("at most one stack may be even"), "{}", r.stdout);
    let r = bouquet(["validate", "(2,3)"]);
    assert_eq!((r.stdout.as_str(), r.code), ("valid: type K, 5 precrossings, 0 crossings\n", 0));
    assert_eq!(bouquet(["type", "(1,1,3)"]).stdout, "L\n");
    assert_eq!(bouquet(["type", "(+-?,-)"]).stdout, "K\n");
    let r = bouquet(["type", "(1,2"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("error:"));
}

#[test]
fn usage_errors() {
    assert_eq!(bouquet(["frobnicate"]).code, 64);
    assert_eq!(bouquet(Vec::<&str>::new()).code, 64);
    assert_eq!(bouquet(["tr"]).code, 64);
    assert_eq!(bouquet(["tr", "(4)", "--format", "yaml"]).code, 64);
    let help = bouquet(["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("Usage"));
    let version = bouquet(["--version"]);
    assert_eq!((version.stdout.trim(), version.code), ("bouquet 0.1.0", 0));
}

#[test]
fn weighted_resolution_sets() {
    let r = bouquet(["wrs", "(+???)"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "3 precrossings, 4 classes\n   3/2^3  K:rational(-2/1)  2_1^k\n   1/2^3  K:rational(-4/1)  4_1^k\n   \
         1/2^3  K:rational(2/1)  2_1^k*\n   3/2^3  K:trivial\n"
    );
    let a = bouquet(["wrs", "(+???)", "--format", "json"]);
    let b = bouquet(["wrs", "(+???)", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let r = bouquet(["wrs", "(+???)", "--max-precrossings", "2"]);
    assert_eq!(r.code, 2);
}

#[test]
fn simplify_and_budgets() {
    let r = bouquet(["simplify", "(+-+)", "--quiet"]);
    assert_eq!((r.stdout.as_str(), r.code), ("trivial-L\n", 0));
    assert_eq!(bouquet(["simplify", "(++)", "-q"]).stdout, "knotted\n");
    assert_eq!(bouquet(["simplify", "(+-+)", "--max-crossings", "2"]).code, 2);
    let r = bouquet(["simplify", "(+?)"]);
    assert_eq!(r.code, 1);
}

#[test]
fn constructions() {
    assert_eq!(bouquet(["construct", "tr", "6", "-q"]).stdout, "(6)\n");
    let r = bouquet(["construct", "kn", "4"]);
    assert_eq!(r.stdout, "(6)\ntr: formula 6, oracle 6\nkn: formula 4, oracle 4\n");
    assert_eq!(bouquet(["construct", "tr", "3"]).code, 1);
    let r = bouquet(["construct", "pair", "3", "--case", "few-ones", "--m", "1", "--n", "1", "--l", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("predicted kn 3, oracle gives 4"), "{}", r.stderr);
}

fn write_catalog(dir: &Path, tweak: impl FnOnce(&mut serde_json::Value)) -> String {
    let mut v: serde_json::Value = serde_json::from_str(&Catalog::builtin().to_json()).unwrap();
    tweak(&mut v);
    let path = dir.join("catalog.json");
    std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn tables_from_catalog_files() {
    let r = bouquet(["table", "--type", "l", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next(), Some("name,tr,kn,identification,status"));
    assert_eq!(r.stdout.lines().count(), 5);

    let dir = tempfile::tempdir().unwrap();
    let path = write_catalog(dir.path(), |v| v["entries"][4]["tr"] = 2.into());
    let r = bouquet(["table", "--catalog", &path]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.lines().any(|l| l.starts_with("4_1^k") && l.ends_with("MISMATCH")), "{}", r.stdout);

    let path = write_catalog(dir.path(), |v| v["entries"] = serde_json::json!([]));
    let r = bouquet(["table", "--catalog", &path]);
    assert_eq!((r.stdout.lines().count(), r.code), (1, 0));

    std::fs::write(dir.path().join("broken.json"), "{\"format_version\": 1, \"entries\": [").unwrap();
    let r = bouquet(["table", "--catalog", dir.path().join("broken.json").to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("line"), "{}", r.stderr);
}

#[test]
fn diagram_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    std::fs::write(&path, PretzelState::parse("(+-+)").unwrap().diagram().to_json()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(bouquet(["simplify", p, "-q"]).stdout, "trivial-L\n");
    assert_eq!(bouquet(["type", p]).stdout, "L\n");

    std::fs::write(&path, PretzelState::parse("(??)").unwrap().diagram().to_json()).unwrap();
    assert_eq!(bouquet(["tr", p]).stdout, "2\n");
    assert_eq!(bouquet(["kn", p]).stdout, "2\n");

    std::fs::write(&path, "{}").unwrap();
    assert_eq!(bouquet(["validate", p]).code, 1);
    assert_eq!(bouquet(["tr", dir.path().join("missing.json").to_str().unwrap()]).code, 1);
}

#[test]
fn check_suites() {
    let r = bouquet(["check", "tables"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("PASS confirmed entries: 4 passed"));
    let r = bouquet(["check", "formulas", "--max-crossings", "5", "--format", "csv"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.starts_with("suite,property,passed,failed,indeterminate\nformulas,"));
    let r = bouquet(["check", "formulas", "--max-crossings", "4", "--max-precrossings", "3"]);
    assert_eq!(r.code, 2, "{}", r.stdout);
    let r = bouquet(["check", "moves", "--max-crossings", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["suite"], "moves");
    assert_eq!(bouquet(["check", "wrs", "--samples", "4", "--max-precrossings", "2"]).code, 0);

    let dir = tempfile::tempdir().unwrap();
    let path = write_catalog(dir.path(), |v| v["entries"][2]["kn"] = 5.into());
    let r = bouquet(["check", "tables", "--catalog", &path]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FAIL confirmed entries"), "{}", r.stdout);
}
