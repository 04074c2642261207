// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.


use std::io::Write;
use std::process::{Command, Output, Stdio};

use pograph::{Decomposition, Diagram, EdgeColoring, PartKind};
use serde_json::Value;

fn pograph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pograph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let o = pograph(args, stdin);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn family(name: &str, n: &str) -> String {
    ok(&["generate", "--family", name, "--n", n], "")
}

const K4: &str = r#"{"graph":{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]},"blocks":[{"order":[0,1,2,3],"closed":true}]}"#;
const C5: &str = r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#;
const K5: &str = r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;

#[test]
fn q3_pipeline_gives_three_linear_forests() {
    let c: EdgeColoring = serde_json::from_str(&ok(&["linear-arboricity"], &family("qn", "3"))).unwrap();
    assert_eq!(c.k, 3);
}

#[test]
fn k5_is_rejected_with_exit_two() {
    let o = pograph(&["recognize"], K5);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not pseudo-outerplanar"));
}

#[test]
fn fig1_two_forests_and_matching() {
    let input = family("fig1", "0");
    let d: Diagram = serde_json::from_str(&input).unwrap();
    let dec: Decomposition =
        serde_json::from_str(&ok(&["decompose", "--mode", "two-forests-matching"], &input)).unwrap();
    let kinds: Vec<PartKind> = dec.parts.iter().map(|p| p.kind).collect();
    assert_eq!(kinds, [PartKind::Forest, PartKind::Forest, PartKind::Matching]);
    assert!(dec.verify(&d.graph).is_empty());
}

#[test]
fn colourings_round_trip() {
    let pn: Diagram = serde_json::from_str(&family("pn", "2")).unwrap();
    let c: EdgeColoring = serde_json::from_str(&ok(&["color-edges"], &serde_json::to_string(&pn).unwrap())).unwrap();
    assert_eq!(c.k, 4);
    let c: EdgeColoring = serde_json::from_str(&ok(&["color-edges"], K4)).unwrap();
    assert_eq!(c.k, 3);
    assert_eq!(c.colors.len(), 6);
}

#[test]
fn trace_goes_to_its_own_file() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let out = dir.path().join("coloring.json");
    let input = family("random", "20");
    ok(&["color-edges", "--trace", trace.to_str().unwrap(), "--out", out.to_str().unwrap()], &input);
    let c: EdgeColoring = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert!(t["steps"].is_array());
    assert!(c.k >= 1);
}

#[test]
fn input_file_and_recognized_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c5.json");
    std::fs::write(&p, C5).unwrap();
    let d: Diagram = serde_json::from_str(&ok(&["recognize", "--in", p.to_str().unwrap()], "")).unwrap();
    assert!(d.validate().is_valid());
    assert_eq!(d.crossing_count(), 0);
}

#[test]
fn svg_marks_and_determinism() {
    let a = ok(&["render", "--format", "svg"], K4);
    assert_eq!(a.matches(r#"class="crossing""#).count(), 1);
    assert_eq!(a, ok(&["render", "--format", "svg"], K4));
    let c5 = ok(&["render"], C5);
    assert_eq!(c5.matches(r#"class="crossing""#).count(), 0);
    let dot = ok(&["render", "--format", "dot"], K4);
    assert!(dot.starts_with("graph diagram {"));
}

#[test]
fn validate_reports_crossings_and_violations() {
    let v: Value = serde_json::from_str(&ok(&["validate"], K4)).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["crossing_pairs"].as_array().unwrap().len(), 1);
    let bad = K4.replace("[0,1,2,3]", "[0,1,2]");
    assert_eq!(pograph(&["validate"], &bad).status.code(), Some(2));
}

#[test]
fn hamiltonize_and_maximalize() {
    let crossed = r#"{"graph":{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]},"blocks":[{"order":[0,2,1,3],"closed":false}]}"#;
    let d: Diagram = serde_json::from_str(&ok(&["hamiltonize", "--cycle", "0,1,2,3"], crossed)).unwrap();
    assert_eq!(d.blocks[0].order, [0, 1, 2, 3]);
    let v: Value = serde_json::from_str(&ok(&["maximalize"], C5)).unwrap();
    let d: Diagram = serde_json::from_value(v["diagram"].clone()).unwrap();
    assert!(d.validate().is_valid());
    assert_eq!(d.graph.edge_count(), 5 + v["added_edges"].as_array().unwrap().len());
    let v: Value = serde_json::from_str(&ok(&["hamiltonize"], C5)).unwrap();
    assert!(v["helper_edges"].as_array().unwrap().is_empty());
}

#[test]
fn find_config_and_oracles() {
    let m: Value = serde_json::from_str(&ok(&["find-config", "--ids", "g12,g13"], &family("qn", "3"))).unwrap();
    assert_eq!(m["id"], "G12");
    assert!(m["roles"].is_object());
    assert_eq!(pograph(&["find-config", "--ids", "g99"], C5).status.code(), Some(1));
    let v: Value = serde_json::from_str(&ok(&["oracle", "--op", "chromatic-index"], C5)).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(pograph(&["oracle", "--op", "removal"], &family("mat12", "0")).status.code(), Some(2));
    let gn = family("gn", "6");
    assert_eq!(pograph(&["oracle", "--op", "forest-partition", "--k", "2"], &gn).status.code(), Some(2));
    let dec: Decomposition = serde_json::from_str(&ok(&["oracle", "--op", "forest-partition", "--k", "3"], &gn)).unwrap();
    assert_eq!(dec.parts.len(), 3);
}

#[test]
fn corpus_jsonl_sorted_and_clean() {
    let text = ok(&["corpus", "--n", "5", "--check", "all"], "");
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 1 + 2 + 6 + 18);
    assert!(lines.iter().all(|v| v["ok"] == true));
    let keys: Vec<(u64, u64)> = lines
        .iter()
        .map(|v| {
            let (n, b) = v["key"].as_str().unwrap().split_once(':').unwrap();
            (n.parse().unwrap(), u64::from_str_radix(b, 16).unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(pograph(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(pograph(&["recognize", "--nope"], C5).status.code(), Some(1));
    assert_eq!(pograph(&["recognize"], "{not json").status.code(), Some(1));
    assert_eq!(pograph(&["recognize"], r#"{"n":3,"edges":[[0,0]]}"#).status.code(), Some(1));
    assert_eq!(pograph(&["corpus", "--n", "9"], "").status.code(), Some(1));
}
