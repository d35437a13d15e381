//! End-to-end tests of the `miug` binary: verbs, formats, exit codes.

mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use miug::families::{self, FamilyId};
use miug::format::{emit_graph, GraphFormat};
use miug::json::representation_from_json;

fn miug() -> Command {
    Command::new(env!("CARGO_BIN_EXE_miug"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = miug()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn miug");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("miug runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_verb() {
    let out = run_with_stdin(&["classify"], "0 2\n1 2\n2 3\n");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("class=UPM"), "{text}");
    assert!(text.contains("not unit: induced k13"), "{text}");

    let out = run_with_stdin(&["classify"], "0 1\n1 2\n2 3\n0 3\n");
    assert_eq!(code(&out), 0, "NotInterval is still a successful verdict");
    assert!(stdout(&out).contains("class=NotInterval"));

    // graph6 input, forced and sniffed
    let out = run_with_stdin(&["classify", "--format", "graph6"], "D?{\n");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("class=IntervalOnly"));
    let out = run_with_stdin(&["classify"], "D?{\n");
    assert!(stdout(&out).contains("class=IntervalOnly"), "sniffer picks graph6");

    // json mode
    let out = run_with_stdin(&["classify", "--json"], "0 2\n1 2\n2 3\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["class"], "UPM");
    assert_eq!(v["chain"]["interval"], true);
    assert_eq!(v["chain"]["unit"], false);

    // parse failure
    let out = run_with_stdin(&["classify"], "0 1 2\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn family_then_classify_pipeline() {
    let dir = std::env::temp_dir().join(format!("miug-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let fig9 = stdout(&run_with_stdin(&["family", "fig9"], ""));
    let path = dir.join("fig9.edges");
    std::fs::write(&path, &fig9).unwrap();
    let out = run_with_stdin(&["classify", path.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("class=Mixed"));

    // A0: 10 vertices, 11 edges
    let out = run_with_stdin(&["family", "a", "0"], "");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim().lines().count(), 11);

    // canonical layout comes along with --rep
    let out = run_with_stdin(&["family", "c", "0", "--rep"], "");
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let json_start = text.find('{').expect("rep json present");
    let rep = representation_from_json(&text[json_start..]).expect("parses");
    assert_eq!(rep.len(), 6);

    // no layout for families drawn only as graphs
    let out = run_with_stdin(&["family", "s", "1", "--rep"], "");
    assert_eq!(code(&out), 1);

    // parameter range errors
    let out = run_with_stdin(&["family", "bprime", "0"], "");
    assert_eq!(code(&out), 2);
    let out = run_with_stdin(&["family", "nosuch"], "");
    assert_eq!(code(&out), 2);

    // negative parameters reach the C families
    let out = run_with_stdin(&["family", "c", "-2"], "");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim().lines().count(), 10);
}

#[test]
fn represent_verb() {
    // P4 is unit: all-closed representation
    let out = run_with_stdin(&["represent", "--target", "unit"], "0 1\n1 2\n2 3\n");
    assert_eq!(code(&out), 0);
    let rep = representation_from_json(&stdout(&out)).expect("valid representation json");
    let census = rep.type_census();
    assert_eq!(census.closed, 4);
    assert_eq!(census.open + census.closed_open + census.open_closed, 0);

    // fig3 is almost-mixed: no open-closed interval in the output
    let fig3 = families::generate(FamilyId::Fig3).unwrap().graph;
    let fig3_edges = emit_graph(&fig3, GraphFormat::EdgeList);
    let out = run_with_stdin(&["represent", "--target", "almost-mixed"], &fig3_edges);
    assert_eq!(code(&out), 0);
    let rep = representation_from_json(&stdout(&out)).unwrap();
    assert!(rep.realizes(&fig3));
    assert_eq!(rep.type_census().open_closed, 0);

    // fig9 is not: exit 1 with the blocked pair as witness
    let fig9 = families::generate(FamilyId::Fig9).unwrap().graph;
    let fig9_edges = emit_graph(&fig9, GraphFormat::EdgeList);
    let out = run_with_stdin(&["represent", "--target", "almost-mixed"], &fig9_edges);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("witness json");
    assert_eq!(v["member"], false);
    assert!(v["witness"]["blocked_open_closed"].is_object(), "{v}");

    // claw is not unit: exit 1 with the claw witness
    let out = run_with_stdin(&["represent", "--target", "unit"], "0 2\n1 2\n2 3\n");
    assert_eq!(code(&out), 1);

    // --out writes a file that check accepts
    let dir = std::env::temp_dir().join(format!("miug-cli-rep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("fig3.edges");
    let rep_path = dir.join("fig3.rep.json");
    std::fs::write(&graph_path, &fig3_edges).unwrap();
    let out = run_with_stdin(
        &[
            "represent",
            graph_path.to_str().unwrap(),
            "--target",
            "mixed",
            "--out",
            rep_path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code(&out), 0);
    let out = run_with_stdin(
        &["check", graph_path.to_str().unwrap(), rep_path.to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ok"));
}

#[test]
fn check_verb() {
    let dir = std::env::temp_dir().join(format!("miug-cli-check-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    // the canonical drawn layout realizes the fig9 graph
    let inst = families::generate(FamilyId::Fig9).unwrap();
    let graph_path = dir.join("fig9.edges");
    let rep_path = dir.join("fig9.rep.json");
    std::fs::write(&graph_path, emit_graph(&inst.graph, GraphFormat::EdgeList)).unwrap();
    std::fs::write(
        &rep_path,
        miug::json::representation_to_json(inst.canonical_rep.as_ref().unwrap(), None),
    )
    .unwrap();
    let out = run_with_stdin(
        &["check", graph_path.to_str().unwrap(), rep_path.to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 0);

    // far-apart intervals miss the K2 edge
    let k2_path = dir.join("k2.edges");
    let bad_rep_path = dir.join("k2.rep.json");
    std::fs::write(&k2_path, "0 1").unwrap();
    std::fs::write(
        &bad_rep_path,
        r#"{"vertices":[
            {"id":0,"left":{"num":0,"den":1},"left_closed":true,"right_closed":true},
            {"id":1,"left":{"num":2,"den":1},"left_closed":true,"right_closed":true}]}"#,
    )
    .unwrap();
    let out = run_with_stdin(
        &["check", k2_path.to_str().unwrap(), bad_rep_path.to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("missing edge"));

    // malformed representation
    let garbage_path = dir.join("garbage.json");
    std::fs::write(&garbage_path, "{").unwrap();
    let out = run_with_stdin(
        &["check", k2_path.to_str().unwrap(), garbage_path.to_str().unwrap()],
        "",
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn crosscheck_verb() {
    // all connected graphs up to 5 vertices: zero disagreements
    let stream: String = common::connected_graphs_up_to(5)
        .iter()
        .map(|g| emit_graph(g, GraphFormat::Graph6) + "\n")
        .collect();
    let out = run_with_stdin(&["crosscheck"], &stream);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("recognizers agree"), "{}", stdout(&out));

    // the ten blocked-gadget graphs all sit exactly at Mixed
    let mut cs = String::new();
    for k in -2..=2 {
        for id in [FamilyId::C(k), FamilyId::CPrime(k)] {
            let g = families::generate(id).unwrap().graph;
            cs.push_str(&emit_graph(&g, GraphFormat::Graph6));
            cs.push('\n');
        }
    }
    let out = run_with_stdin(&["crosscheck", "--json"], &cs);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["graphs"], 10);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
    // every member sits at Mixed or above (the twinned ones reduce upward:
    // e.g. the six-vertex gadget collapses to a claw), never at AlmostMixed
    let mut total = 0u64;
    for (_, by_label) in v["per_n"].as_object().unwrap() {
        for (label, count) in by_label.as_object().unwrap() {
            assert!(
                ["Mixed", "Upm", "UPM", "Unit"].contains(&label.as_str()),
                "unexpected label {label}"
            );
            assert_ne!(label, "AlmostMixed");
            total += count.as_u64().unwrap();
        }
    }
    assert_eq!(total, 10);
    // the twin-free members classify at exactly Mixed
    for id in [FamilyId::C(1), FamilyId::C(2)] {
        let g = families::generate(id).unwrap().graph;
        assert!(g.is_twin_free());
        let out = run_with_stdin(
            &["classify", "--format", "graph6"],
            &(emit_graph(&g, GraphFormat::Graph6) + "\n"),
        );
        assert!(stdout(&out).contains("class=Mixed"), "{id:?}");
    }

    // empty stream: empty summary, success
    let out = run_with_stdin(&["crosscheck"], "");
    assert_eq!(code(&out), 0);

    // --max-n skips larger graphs
    let out = run_with_stdin(&["crosscheck", "--max-n", "4"], &cs);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(10 skipped)"));

    // malformed line
    let out = run_with_stdin(&["crosscheck"], "not graph6 at all\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_2() {
    let out = run_with_stdin(&["classify", "--no-such-flag"], "");
    assert_eq!(code(&out), 2);
    let out = run_with_stdin(&["represent", "--target", "bogus"], "0 1\n");
    assert_eq!(code(&out), 2);
    let out = run_with_stdin(&["classify", "/no/such/file"], "");
    assert_eq!(code(&out), 2);
}
