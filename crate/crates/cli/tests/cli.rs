use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn imtw(dir: &Path, args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_imtw")).args(args).current_dir(dir).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, text)
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

#[test]
fn mwis_on_c5_with_decomposition_and_weights() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.gr", C5);
    write(dir.path(), "w.txt", "w 1 1\nw 2 1\nw 3 1\nw 4 1\nw 5 1\n");
    let (code, _, _) = imtw(dir.path(), &["decompose", "g.gr", "-o", "g.td"]);
    assert_eq!(code, 0);
    let (code, v, _) = imtw(dir.path(), &["solve", "mwis", "g.gr", "g.td", "-w", "w.txt"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["optimum"], "2");
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["inputs"].as_array().unwrap().len(), 3);
}

#[test]
fn rational_weights_stay_exact() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.gr", C5);
    write(dir.path(), "w.txt", "w 1 1/3\nw 3 1/2\n");
    let (code, v, _) = imtw(dir.path(), &["solve", "forest", "g.gr", "-w", "w.txt"]);
    assert_eq!(code, 0);
    // unlisted vertices weigh 1; a forest in C5 drops one vertex, the lightest
    assert_eq!(v["result"]["optimum"], "7/2");
}

#[test]
fn recognizer_rejects_c6() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "c6.gr", "p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    let (code, v, _) = imtw(dir.path(), &["recognize-imtw1", "c6.gr"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["imtw_at_most_1"], false);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.gr", "p edge 2 1\ne 1 3\n");
    let (code, v, _) = imtw(dir.path(), &["solve", "mwis", "bad.gr"]);
    assert_eq!((code, v["status"].as_str()), (2, Some("input_error")));
    let (code, _, _) = imtw(dir.path(), &["gen", "complete", "12", "-o", "k12.gr"]);
    assert_eq!(code, 0);
    let (code, v, _) = imtw(dir.path(), &["exact", "k12.gr"]);
    assert_eq!((code, v["status"].as_str()), (4, Some("resource_limit")));
    write(dir.path(), "g.gr", C5);
    let (code, _, _) = imtw(dir.path(), &["solve", "mwis", "g.gr", "-k", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "random", "9", "0.4", "--seed", "7", "-o", "r.gr"];
    imtw(dir.path(), &args);
    let first = std::fs::read_to_string(dir.path().join("r.gr")).unwrap();
    imtw(dir.path(), &args);
    assert_eq!(first, std::fs::read_to_string(dir.path().join("r.gr")).unwrap());
    let (_, a, a_text) = imtw(dir.path(), &["solve", "forest", "r.gr", "--workers", "1"]);
    let (_, b, _) = imtw(dir.path(), &["solve", "forest", "r.gr", "--workers", "3"]);
    assert_eq!((&a["result"], &a["verification"]), (&b["result"], &b["verification"]));
    let (_, _, c) = imtw(dir.path(), &["solve", "forest", "r.gr", "--workers", "1"]);
    assert_eq!(a_text, c);
}

#[test]
fn packing_and_generic_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.gr", C5);
    write(dir.path(), "h.json", r#"[{"id": 10, "vertices": [1, 2]}, {"id": 11, "vertices": [3, 4], "weight": "5/2"}, {"id": 12, "vertices": [5]}]"#);
    let (code, v, _) = imtw(dir.path(), &["solve", "pack", "g.gr", "-H", "h.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["optimum"], "5/2");
    assert_eq!(v["result"]["chosen_ids"], serde_json::json!([11]));
    let (code, v, _) = imtw(dir.path(), &["solve", "generic", "g.gr", "--property", "bipartite"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["optimum"], "4");
    let (code, v, _) = imtw(dir.path(), &["solve", "ptas", "g.gr", "--eps", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verification"]["passed"], true);
}

#[test]
fn verify_all_suites() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v, _) = imtw(dir.path(), &["verify", "--suite", "all", "--seed", "42", "--max-n", "8", "--count", "20"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["verification"]["suites"].as_array().unwrap().len(), 13);
}

#[test]
fn transforms() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k1.gr", "p edge 1 0\n");
    let (code, v, _) = imtw(dir.path(), &["transform", "forked", "k1.gr"]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["n"].as_u64(), v["result"]["m"].as_u64()), (Some(4), Some(3)));
    write(dir.path(), "g.gr", C5);
    let (_, v, _) = imtw(dir.path(), &["transform", "l2", "g.gr"]);
    assert_eq!((v["result"]["n"].as_u64(), v["result"]["m"].as_u64()), (Some(5), Some(10)));
    let (_, v, _) = imtw(dir.path(), &["transform", "power", "g.gr", "-k", "2"]);
    assert_eq!(v["result"]["m"].as_u64(), Some(10));
}
