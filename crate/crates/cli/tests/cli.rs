use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_edgesym"));
    c.env_remove("EDGESYM_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn ok(args: &[&str]) -> Vec<Value> {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    json_lines(&out)
}

const VALIDATOR: &str = r#"
import json, sys
import jsonschema
schema = json.load(open(sys.argv[1]))
jsonschema.Draft202012Validator.check_schema(schema)
v = jsonschema.Draft202012Validator(schema)
bad = 0
for line in sys.stdin:
    for e in v.iter_errors(json.loads(line)):
        bad += 1
        print(e.json_path, e.message)
sys.exit(1 if bad else 0)
"#;

/// Validates against the schema file with Python's `jsonschema`, which is
/// what the crate mirror can offer here.
fn validate(schema: &str, docs: &[Value]) {
    let path = crate_dir().join("schemas").join(format!("{schema}.schema.json"));
    assert!(!docs.is_empty());
    let mut child = Command::new("python3")
        .args(["-c", VALIDATOR])
        .arg(&path)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("python3 with jsonschema is needed for schema checks");
    let mut input = String::new();
    for d in docs {
        input.push_str(&d.to_string());
        input.push('\n');
    }
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(
        out.status.success(),
        "{schema}: {}{}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn ideal_examples() {
    let d = ok(&["ideal", "--family", "path:3", "--kind", "gin"]);
    assert_eq!(d[0]["gens"].as_array().unwrap().len(), 3);
    assert_eq!(d[0]["text"], serde_json::json!(["x1*x2", "x2*x3", "x1*x3*y2"]));
    let d = ok(&["ideal", "--family", "complete:2", "--kind", "inid"]);
    assert_eq!(d[0]["text"], serde_json::json!(["x1*y2"]));
    let d = ok(&["ideal", "--family", "complete:3", "--kind", "edge"]);
    assert_eq!(d[0]["gens"].as_array().unwrap().len(), 3);
    validate("ideal", &d);
}

#[test]
fn polyhedron_and_invariant_examples() {
    let d = ok(&["sp-vertices", "--family", "path:4", "--kind", "gin"]);
    assert_eq!(d[0]["vertex_count"], 11);
    assert_eq!(d[0]["full_vertex_count"], 4);
    let third = serde_json::json!(["1/3", "1/3", "1/3", "1/3", "0", "1/3", "1/3", "0"]);
    assert!(d[0]["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .any(|v| v["coords"] == third && v["full"] == true));
    validate("sp-vertices", &d);

    let d = ok(&["invariants", "--family", "complete:4", "--kind", "gin"]);
    assert_eq!(d[0]["waldschmidt"], "4/3");
    assert_eq!(d[0]["waldschmidt_lp"], "4/3");
    validate("invariants", &d);

    let d = ok(&["primes", "--family", "net", "--kind", "inid"]);
    validate("primes", &d);
    let d = ok(&["primes", "--family", "cycle:4", "--kind", "edge"]);
    assert_eq!(
        d[0]["primes"][0]["provenance"]["cover"],
        serde_json::json!([1, 3])
    );
    validate("primes", &d);
}

#[test]
fn sympower_example() {
    let ideal = crate_dir().join("data/i1234.json");
    let d = ok(&["sympower", "--ideal", ideal.to_str().unwrap(), "-m", "2"]);
    assert_eq!(
        d[0]["text"],
        serde_json::json!(["x1*x2*x3*x4", "x3^2*x4^2", "x1^2*x2^2*x3^2", "x1^2*x2^2*x4^2"])
    );
    validate("sympower", &d);
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "wald_equality", "--corpus", "all-connected:5"][..],
        &[
            "verify",
            "zero_one_vertices",
            "--corpus",
            "all-connected:4",
            "--kind",
            "gin",
        ],
        &["verify", "wald_inid_two", "--corpus", "all-connected:5"],
        &["verify", "kpartite", "--corpus", "family:kpartite:2,3"],
        &["verify", "disconnected_partition", "--corpus", "two-component:5"],
    ] {
        let d = ok(args);
        let summary = d.last().unwrap();
        assert_eq!(summary["failures"], serde_json::json!([]));
        assert_eq!(summary["checked"].as_u64().unwrap() as usize, d.len() - 1);
        validate("verify", &d);
    }
}

#[test]
fn conjecture_rows() {
    let d = ok(&["conjectures", "--family", "net"]);
    assert_eq!(d.len(), 2);
    assert_eq!(
        (d[0]["kind"].as_str(), d[1]["kind"].as_str()),
        (Some("gin"), Some("inid"))
    );
    validate("conjectures", &d);
    for fam in ["path:5", "complete:4"] {
        assert_eq!(ok(&["conjectures", "--family", fam]).len(), 2);
    }
    assert_eq!(ok(&["conjectures", "--corpus", "family:cycle:3..5"]).len(), 6);
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = write(dir.path(), "g.g6", "# two graphs\nBw\nCh\n");
    let d = ok(&["invariants", "--graph6", g6.to_str().unwrap()]);
    assert_eq!(d.len(), 2);
    assert_eq!(d[0]["graph"], "Bw");
    let edges = write(dir.path(), "e.txt", "n 3\n1 2\n2 3\n1 3\n");
    let d = ok(&["ideal", "--edges", edges.to_str().unwrap(), "--kind", "edge"]);
    assert_eq!(d[0]["graph"], "Bw");
    let d = ok(&["verify", "bipartite", "--corpus", g6.to_str().unwrap()]);
    assert_eq!(d.last().unwrap()["not_applicable"], 1);
}

#[test]
fn output_independent_of_worker_count() {
    for args in [
        &["verify", "vertex_containment", "--corpus", "all-connected:5"][..],
        &["sp-vertices", "--graph6", "GRAPH6", "--kind", "inid"],
        &[
            "conjectures",
            "--corpus",
            "labeled-connected:4",
            "--format",
            "text",
        ],
    ] {
        let dir = tempfile::tempdir().unwrap();
        let g6 = write(dir.path(), "g.g6", "Bw\nBg\nCh\nCl\nC~\nE{O_\n");
        let args: Vec<&str> = args
            .iter()
            .map(|a| if *a == "GRAPH6" { g6.to_str().unwrap() } else { a })
            .collect();
        let outputs: Vec<Vec<u8>> = ["1", "2", "5"]
            .iter()
            .map(|w| {
                let out = bin().args(&args).args(["--workers", w]).output().unwrap();
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert!(!outputs[0].is_empty());
        assert!(outputs.iter().all(|o| *o == outputs[0]), "{args:?}");
        let env = bin().args(&args).env("EDGESYM_WORKERS", "3").output().unwrap();
        assert_eq!(env.stdout, outputs[0]);
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| run(args).status.code();
    let edgeless = write(dir.path(), "e.txt", "n 3\n");
    assert_eq!(code(&["ideal", "--edges", edgeless.to_str().unwrap()]), Some(3));
    assert_eq!(
        code(&[
            "invariants",
            "--graph6",
            write(dir.path(), "k1.g6", "B?\n").to_str().unwrap()
        ]),
        Some(3)
    );
    assert_eq!(code(&["ideal", "--family", "bogus:3"]), Some(2));
    assert_eq!(code(&["ideal", "--graph6", "/nonexistent/g.g6"]), Some(2));
    assert_eq!(code(&["ideal", "--family", "path:3", "--kind", "lex"]), Some(2));
    assert_eq!(code(&["ideal", "--family", "path:3", "--graph6", "x"]), Some(2));
    assert_eq!(
        code(&["verify", "no_such_theorem", "--corpus", "all-connected:3"]),
        Some(2)
    );
    assert_eq!(
        code(&["verify", "bipartite", "--corpus", "all-connected:x"]),
        Some(2)
    );
    let bad = write(dir.path(), "bad.json", "{\"dim\": 2, \"gens\": [[1, 1, 0]]}");
    assert_eq!(
        code(&["sympower", "--ideal", bad.to_str().unwrap(), "-m", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["verify", "bipartite", "--corpus", "all-connected:8"]),
        Some(4)
    );
    assert_eq!(
        code(&["sp-vertices", "--family", "path:4", "--max-n", "3"]),
        Some(4)
    );
    assert_eq!(
        code(&["sp-vertices", "--family", "path:4", "--max-n", "3", "--force"]),
        Some(0)
    );
    assert_eq!(
        code(&[
            "verify",
            "bipartite",
            "--corpus",
            "all-connected:4",
            "--max-n",
            "3"
        ]),
        Some(4)
    );
}

#[test]
fn text_format() {
    let out = run(&["sp-vertices", "--family", "complete:3", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Bw gin: 4 vertices, 1 full"));
    assert!(text.contains("(1/2, 1/2, 1/2, 0, 0, 0)  sum 3/2  full"));
    let out = run(&[
        "verify",
        "bipartite",
        "--corpus",
        "family:path:2..3",
        "--format",
        "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.ends_with("bipartite on family:path:2..3: 2 checked, 2 passed, 0 not applicable, 0 failed\n")
    );
}
