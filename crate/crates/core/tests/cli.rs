use std::process::{Command, Output};

use serde_json::Value;

fn numsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn classify_json() {
    let o = numsg(&["classify", "9,24,39,43,77"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["gas"], true);
    assert_eq!(v["pf"], serde_json::json!([58, 73, 92, 107]));
    assert_eq!(v["two_k_gap"], serde_json::json!([30, 64, 68, 83, 98, 107]));
}

#[test]
fn classify_pretty_mentions_canonical_ideal() {
    let o = numsg(&["classify", "5,6,7", "--pretty"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("K = {0,1,5,6,7,8} 10+"), "{text}");
    assert!(text.contains("PF = {8,9}"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(numsg(&["classify", "1"]).status.code(), Some(3));
    assert_eq!(numsg(&["classify", "4,6"]).status.code(), Some(2));
    assert_eq!(numsg(&["classify", "3,x"]).status.code(), Some(2));
    assert_eq!(numsg(&["classify", "0,3"]).status.code(), Some(2));
    assert_eq!(numsg(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        numsg(&["construct", "dilate", "7,9,11", "--a", "2"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        numsg(&[
            "construct",
            "duplicate",
            "3,4,5",
            "--ideal",
            "s",
            "--b",
            "4"
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        numsg(&["construct", "gluing", "3,4,5", "1", "--a", "3", "--b", "6"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        numsg(&["verify", "--max-genus", "0"]).status.code(),
        Some(2)
    );
    let o = numsg(&["classify", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn ideals_listing() {
    for (gens, total) in [("3,4,5", 4), ("2,3", 2), ("9,24,39,43,77", 16)] {
        let o = numsg(&["ideals", gens, "--almost-canonical"]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines.last().copied(),
            Some(format!("total {total}").as_str())
        );
        assert_eq!(lines.len(), total + 1);
    }
    let text = stdout(&numsg(&["ideals", "3,4,5"]));
    assert_eq!(
        text,
        "{} 3+ type 3\n{0} 3+ type 2\n{1} 3+ type 2\n{0,1} 3+ type 1\ntotal 4\n"
    );
}

#[test]
fn constructions() {
    let v = json(&numsg(&["construct", "dilate", "7,9,11", "--a", "7"]));
    assert_eq!(
        v["generators"],
        serde_json::json!([14, 16, 18, 21, 23, 25, 27, 29, 38, 40])
    );
    assert_eq!(v["construction"]["kind"], "dilatation");

    let v = json(&numsg(&[
        "construct",
        "duplicate",
        "6,28,47,97",
        "--ideal",
        "s-minus-genk",
        "--b",
        "47",
    ]));
    assert_eq!(
        v["generators"],
        serde_json::json!([12, 56, 71, 94, 115, 153, 159, 194, 197, 241])
    );

    let v = json(&numsg(&[
        "construct",
        "gluing",
        "2,3",
        "2,3",
        "--a",
        "4",
        "--b",
        "5",
    ]));
    assert_eq!(v["generators"], serde_json::json!([8, 10, 12, 15]));
    assert_eq!(v["symmetric"], true);
}

#[test]
fn search_filters() {
    let o = numsg(&[
        "search",
        "--max-genus",
        "6",
        "--agl-level",
        "3",
        "--gas",
        "false",
    ]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["agl_level"], 3);
        assert_eq!(v["gas"], false);
    }
    let o = numsg(&[
        "search",
        "--max-genus",
        "4",
        "--symmetric",
        "true",
        "--limit",
        "2",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn fixtures_pass() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/known.jsonl");
    let o = numsg(&["classify", "--fixtures", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("ok ")));
}

#[test]
fn verify_genus_one() {
    let o = numsg(&["verify", "--max-genus", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let summary: Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["summary"]["semigroups_checked"], 1);
}

#[test]
fn verify_output_is_stable_across_threads() {
    let runs: Vec<Output> = ["1", "3", "8"]
        .iter()
        .map(|t| {
            numsg(&[
                "verify",
                "--max-genus",
                "7",
                "--suite",
                "all",
                "--threads",
                t,
            ])
        })
        .collect();
    for o in &runs {
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(o.stdout, runs[0].stdout);
    }
    let suite = numsg(&["verify", "--max-genus", "6", "--suite", "gas-mme"]);
    assert_eq!(suite.status.code(), Some(0));
    assert_eq!(
        numsg(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
}
