use std::path::PathBuf;

use prism::report::{digest, strip_timing, SCHEMA_JSON};
use prism::shell::{run_with, EXIT_TRIGGERED};
use serde_json::Value;

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(rel).display().to_string()
}

fn prism(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("prism").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, out, err) = prism(&v);
    let value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}\n{err}"));
    (code, value)
}

const COMMANDS: &[&[&str]] = &[
    &["verify", "F210"],
    &["info", "F660"],
    &["chartab", "F210", "--char0-excluded"],
    &["criteria", "Ising"],
    &["criteria", "F660", "--kind", "zero", "--check", "b2,b4,b5,b2,b2,b4,b5,b3,b3"],
    &["localize", "F210", "--k", "5_1", "--sprime", "1,5_1,5_3", "--aliases"],
    &["tpe", "Fib", "--labels", "1,tau", "--symbolic-dims"],
    &["tpe", "F210", "--family", "localization", "--k", "5_1", "--l", "5_3", "--sprime", "1,5_1,5_3"],
    &["catalog", "list"],
    &["catalog", "show", "Fib"],
];

#[test]
fn reports_follow_the_schema() {
    let schema: Value = serde_json::from_str(SCHEMA_JSON).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let e1 = data("paper/e1.sys");
    let mut all: Vec<Vec<&str>> = COMMANDS.iter().map(|c| c.to_vec()).collect();
    all.push(vec!["groebner", &e1]);
    all.push(vec!["catalog", "show", "nosuch"]);
    all.push(vec!["localize", "Fib", "--k", "tau"]);
    for args in all {
        let (_, report) = json(&args);
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in COMMANDS {
        let (c1, a) = json(args);
        let (c2, b) = json(args);
        assert_eq!(c1, c2);
        assert_eq!(strip_timing(a), strip_timing(b), "{args:?}");
    }
}

#[test]
fn f660_witness_triggers_exit_three() {
    let (code, out, _) = prism(&["criteria", &data("rings/F660.json"), "--kind", "zero", "--fail-on-witness"]);
    assert_eq!(code, EXIT_TRIGGERED);
    assert!(out.contains("b2"), "{out}");
    let (code, _, _) = prism(&["criteria", "Fib", "--fail-on-witness"]);
    assert_eq!(code, 0);
}

#[test]
fn file_inputs_are_digested() {
    let path = data("rings/F660.json");
    let (_, report) = json(&["info", &path]);
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(report["input_digest"], digest(&bytes).as_str());
}

#[test]
fn errors_and_usage() {
    let (code, out, err) = prism(&["catalog", "show", "nosuch"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("nosuch"), "{err}");
    let (_, report) = json(&["catalog", "show", "nosuch"]);
    assert_eq!(report["error"]["code"], "unknown-ring");
    assert_eq!(report["error"]["exit_code"], 1);
    assert_eq!(prism(&["frobnicate"]).0, 1);
    assert_eq!(prism(&["--help"]).0, 0);
    assert_eq!(prism(&["--version"]).0, 0);
    let (code, _, err) = prism(&["localize", "F210", "--k", "5_1", "--sprime", "1,5_1,6_1"]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid-subset"), "{err}");
}

#[test]
fn broken_ring_fails_verification() {
    let dir = std::env::temp_dir().join(format!("prism-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    let doc = r#"{"name":"broken","rank":2,"labels":["1","g"],"N":[[[1,0],[0,1]],[[0,1],[1,1]]]}"#;
    std::fs::write(&path, doc.replace("[[0,1],[1,1]]", "[[0,1],[0,1]]")).unwrap();
    let (code, out, _) = prism(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

/// Outputs checked into `tests/golden`, compared without timing.
#[test]
fn golden_reports() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (file, args) in [
        ("info_F210.json", &["info", "F210"][..]),
        ("criteria_F660_zero.json", &["criteria", "F660", "--kind", "zero"][..]),
        ("localize_F210_5_1.json", &["localize", "F210", "--k", "5_1", "--sprime", "1,5_1,5_3", "--aliases"][..]),
    ] {
        let (_, report) = json(args);
        let got = serde_json::to_string_pretty(&strip_timing(report)).unwrap();
        let path = golden.join(file);
        if std::env::var_os("PRISM_BLESS").is_some() {
            std::fs::write(&path, format!("{got}\n")).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(got.trim_end(), want.trim_end(), "{file}");
    }
}
