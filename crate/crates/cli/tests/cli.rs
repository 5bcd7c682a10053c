//! End-to-end checks of the command-line interface.

use std::process::{Command, Output};

fn flatmac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatmac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_emits_valid_json_document() {
    let out = flatmac(&["construct", "--n", "9", "--size", "63"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 9);
    assert_eq!(doc["size"], 63);
    assert_eq!(doc["sets"].as_array().unwrap().len(), 63);
    let levels = doc["levels"].as_array().unwrap();
    assert_eq!(levels[0].as_u64().unwrap() + 1, levels[1].as_u64().unwrap());
    assert!(doc["trace"].is_array());
}

#[test]
fn construct_with_forced_level() {
    let out = flatmac(&["construct", "--n", "9", "--size", "63", "--level", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["levels"][0], 3);
    assert_eq!(doc["levels"][1], 4);
    assert_eq!(doc["size"], 63);
}

#[test]
fn construct_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("antichain.json");
    let out = flatmac(&[
        "construct",
        "--n",
        "10",
        "--size",
        "120",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = flatmac(&["verify", "--in", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("verified"));
}

#[test]
fn text_format_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("antichain.txt");
    let out = flatmac(&[
        "construct",
        "--n",
        "8",
        "--size",
        "30",
        "--format",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n=8 l="));
    let out = flatmac(&["verify", "--in", path.to_str().unwrap()]);
    assert!(out.status.success(),);
}

#[test]
fn verify_rejects_corrupted_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("antichain.json");
    let out = flatmac(&[
        "construct",
        "--n",
        "7",
        "--size",
        "20",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let sets = doc["sets"].as_array_mut().unwrap();
    sets.pop();
    doc["size"] = serde_json::json!(sets.len());
    doc["trace"] = serde_json::Value::Null;
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = flatmac(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unconstructible_size_exits_one_with_diagnostic() {
    let out = flatmac(&["construct", "--n", "12", "--size", "40"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nearest achievable"), "{err}");
}

#[test]
fn invalid_arguments_exit_two() {
    let out = flatmac(&["construct", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flatmac(&["table", "--id", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flatmac(&["spectrum", "--n", "30", "--level", "5", "--mode", "exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_exhaustive_endpoints() {
    let out = flatmac(&["spectrum", "--n", "6", "--level", "2", "--mode", "exhaustive"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let sizes: Vec<u64> = doc["sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(*sizes.first().unwrap(), 9);
    assert_eq!(*sizes.last().unwrap(), 20);
    assert_eq!(doc["explored"], 32768);
}

#[test]
fn constructive_spectrum_subset_of_exhaustive() {
    let cons = flatmac(&["spectrum", "--n", "7", "--level", "2", "--mode", "constructive"]);
    let exh = flatmac(&["spectrum", "--n", "7", "--level", "2", "--mode", "exhaustive"]);
    assert!(cons.status.success() && exh.status.success());
    let get = |out: &Output| -> Vec<u64> {
        let doc: serde_json::Value = serde_json::from_str(&stdout(out)).unwrap();
        doc["sizes"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect()
    };
    let cons = get(&cons);
    let exh = get(&exh);
    assert!(!cons.is_empty());
    for m in cons {
        assert!(exh.contains(&m), "constructive size {m} outside exhaustive spectrum");
    }
}

#[test]
fn table_matches_reference_rows_byte_for_byte() {
    let out = flatmac(&["table", "--id", "prop-large-flat"]);
    assert!(out.status.success());
    let expected = "\
n S(n,2) S(n,3) S(n,4)
8 [18,44] [45,61] --
9 [24,64] [73,114] --
10 [30,96] [109,190] [185,240]
11 [37,132] [132,306] [305,442]
12 [45,182] [181,462] [470,768]
13 [54,236] [234,677] [658,1254]
14 [63,309] [304,951] [935,1964]
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn plot_emits_squashed_and_constructed_rows() {
    let out = flatmac(&["plot", "--n", "8", "--level", "2"]);
    assert!(out.status.success());
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next().unwrap(), "t,size,kind");
    let mut squashed = 0;
    let mut constructed = 0;
    for line in lines {
        let parts: Vec<&str> = line.split(',').collect();
        assert_eq!(parts.len(), 3);
        match parts[2] {
            "squashed" => squashed += 1,
            "constructed" => constructed += 1,
            other => panic!("unexpected kind {other}"),
        }
    }
    assert!(squashed > 0 && constructed > 0);
    // The full upper level is always a squashed maximal antichain.
    assert!(body.contains(&format!("{},{},squashed", 56, 56)));
}
