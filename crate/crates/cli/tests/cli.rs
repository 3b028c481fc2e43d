use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eliminant::syntax::parse_script;
use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn scripts_in(dir: &Path) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "elim"))
        .collect();
    out.sort();
    out
}

fn corpus() -> Vec<PathBuf> {
    let mut all = scripts_in(&root().join("scripts"));
    all.extend(scripts_in(&Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")));
    all
}

fn eliminant(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eliminant"));
    cmd.args(args).env_remove("ELIMINANT_THREADS");
    cmd.stdin(std::process::Stdio::piped()).stdout(std::process::Stdio::piped()).stderr(std::process::Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    if let Some(src) = stdin {
        child.stdin.as_mut().unwrap().write_all(src.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = eliminant(&all, stdin);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn is_slow(p: &Path) -> bool {
    p.file_name().unwrap().to_str().unwrap().contains("pencil")
}

#[test]
fn corpus_round_trips() {
    let files = corpus();
    assert!(files.len() >= 50, "corpus has {} scripts", files.len());
    for f in files {
        let src = std::fs::read_to_string(&f).unwrap();
        let s = parse_script(&src).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        let printed = s.to_string();
        let again = parse_script(&printed).unwrap();
        assert_eq!(again, s, "{}", f.display());
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn reports_validate_against_the_schema() {
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(root().join("docs/output.schema.json")).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut commands = std::collections::BTreeSet::new();
    for f in corpus().into_iter().filter(|f| !is_slow(f)) {
        let (report, code) = json(&[f.to_str().unwrap()], None);
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}\n{report:#}", f.display());
        assert_eq!(code == 0, report.get("error").is_none(), "{}", f.display());
        if let Some(c) = report["command"].as_str() {
            commands.insert(c.to_string());
        }
    }
    for c in ["resultant", "discriminant", "chowform", "chowequations", "dualize", "stiefel", "cayleytrick", "dualvariety", "veronese"] {
        assert!(commands.contains(c), "no corpus script runs `{c}`");
    }
    for src in ["ring ZZ[x];\nresultant(x^", "ring ZZ[x,y];\nresultant(x, y, x);"] {
        let (report, code) = json(&[], Some(src));
        assert!(validator.is_valid(&report), "{report:#}");
        assert_ne!(code, 0);
    }
}

#[test]
fn classic_example_by_both_algorithms() {
    let path = root().join("scripts/classic_example.elim");
    for algorithm in ["poisson", "macaulay"] {
        let out = eliminant(&["--algorithm", algorithm, path.to_str().unwrap()], None);
        assert!(out.status.success());
        assert_eq!(String::from_utf8_lossy(&out.stdout), "16\n");
        let (report, _) = json(&["--algorithm", algorithm, path.to_str().unwrap()], None);
        assert_eq!(report["algorithm"], algorithm);
        assert_eq!(report["result"]["value"], "16");
    }
}

#[test]
fn singular_sextic_discriminant_is_zero() {
    let out = eliminant(&[root().join("scripts/singular_sextic.elim").to_str().unwrap()], None);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0\n");
}

#[test]
fn exit_codes_and_error_objects() {
    let (report, code) = json(&[], Some("ring ZZ[x];\nF = x^;\n"));
    assert_eq!(code, 2);
    assert_eq!(report["error"]["code"], "PARSE_ERROR");
    assert_eq!((report["error"]["line"].as_u64(), report["error"]["column"].as_u64()), (Some(2), Some(6)));

    let (report, code) = json(&[], Some("ring ZZ[x,y];\nresultant(x, y, x);\n"));
    assert_eq!(code, 1);
    assert_eq!(report["error"]["code"], "DIM_MISMATCH");

    let (report, code) = json(&[], Some("ring ZZ[x,y];\nresultant(x, q);\n"));
    assert_eq!(code, 2);
    assert!(report["error"]["message"].as_str().unwrap().contains("undeclared identifier `q`"));

    let (report, code) = json(&[], Some("ring ZZ[x,y];\ndualize(x, y);\n"));
    assert_eq!(code, 2);
    assert!(report["error"]["message"].as_str().unwrap().contains("takes 1 argument"));

    let out = eliminant(&[], Some("ring QQ[x,y];\nresultant(x + y, x - y);\n"));
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-2\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn seeds_do_not_change_values() {
    // At z = 0 the first two forms become x*y and x^2, which share the zero
    // (0:1): Poisson needs seeded coordinate changes.
    let src = "ring ZZ[x,y,z];\nresultant(x*y + z^2, x^2 + y*z, x + 2*y + 3*z);\n";
    let (a, _) = json(&["--seed", "1", "--algorithm", "poisson"], Some(src));
    let (b, _) = json(&["--seed", "2", "--algorithm", "poisson"], Some(src));
    assert_eq!(a["result"], b["result"]);
    assert!(a["coordinateChanges"].as_u64().unwrap() > 0);
    assert_eq!((a["seed"].as_u64(), b["seed"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn timing_and_threads() {
    let src = "ring ZZ[a,b,c][x,y];\ndiscriminant(a*x^2 + b*x*y + c*y^2);\n";
    let out = Command::new(env!("CARGO_BIN_EXE_eliminant"))
        .args(["--timing"])
        .env("ELIMINANT_THREADS", "3")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            use std::io::Write;
            c.stdin.take().unwrap().write_all(src.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-b^2 + 4*a*c\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("algorithm interpolate"));
}
