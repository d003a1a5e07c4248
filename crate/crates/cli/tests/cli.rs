use std::io::Write;
use std::process::{Command, Output, Stdio};

use packcrit::canon::canonical_form;
use packcrit::{parse_graph6, Graph};
use serde_json::Value;

fn packcrit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_packcrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

/// The last stdout line, which is the run report.
fn report(out: &Output) -> Value {
    let text = stdout(out);
    serde_json::from_str(text.lines().last().expect("report line")).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let out = packcrit(&full, "");
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn chi_values(out: &Output) -> Vec<u64> {
    report(out)["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["chi_rho"].as_u64().unwrap())
        .collect()
}

#[test]
fn chirho_examples() {
    let out = packcrit(&["chirho"], &gen(&["net"]));
    assert_eq!(code(&out), 0);
    assert_eq!(chi_values(&out), [4]);

    let out = packcrit(&["chirho"], "@\n");
    assert_eq!(chi_values(&out), [1]);

    let out = packcrit(&["chirho", "-"], &gen(&["sharpness", "2"]));
    assert_eq!(chi_values(&out), [3]);
}

#[test]
fn chirho_reads_files_and_includes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycles.g6");
    let cycles: String = ["5", "6", "8"].iter().map(|n| gen(&["cycle", n])).collect();
    std::fs::write(&path, &cycles).unwrap();
    let out = packcrit(&["--witness", "chirho", path.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert_eq!(chi_values(&out), [4, 4, 3]);
    let rep = report(&out);
    let witness = rep["results"][2]["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 8);
    assert!(rep["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn critical_examples() {
    let out = packcrit(&["critical"], "A_\n");
    assert_eq!(code(&out), 0);
    let r = &report(&out)["results"][0];
    assert_eq!(r["is_edge_critical"], true);
    assert_eq!(r["is_vertex_critical"], true);

    let out = packcrit(&["critical", "--mode", "both"], &gen(&["decorated-c8"]));
    let r = &report(&out)["results"][0];
    assert_eq!(r["chi_rho"], 4);
    assert_eq!(r["is_vertex_critical"], true);
    assert_eq!(r["is_edge_critical"], false);
    assert_eq!(r["bound_violations"].as_array().unwrap().len(), 0);

    let out = packcrit(&["critical"], &gen(&["cycle", "4"]));
    let r = &report(&out)["results"][0];
    // every C4 - v is P3 with value 2, while C4 - e is P4 with value 3
    assert_eq!(r["chi_rho"], 3);
    assert_eq!(r["is_vertex_critical"], true);
    assert_eq!(r["is_edge_critical"], false);

    let out = packcrit(&["critical", "--mode", "edge"], &gen(&["cycle", "4"]));
    let r = &report(&out)["results"][0];
    assert_eq!(r["edges"].as_array().unwrap().len(), 4);
    assert!(r["is_vertex_critical"].is_null());
}

#[test]
fn gen_examples() {
    let lines = gen(&["sharpness", "4"]);
    assert_eq!(lines.lines().count(), 1);
    assert_eq!(parse_graph6(lines.trim()).unwrap().n(), 44);

    assert_eq!(gen(&["realization", "5", "3"]).lines().count(), 1);

    let trees: Vec<Graph> = gen(&["trees", "6"]).lines().map(|l| parse_graph6(l).unwrap()).collect();
    assert!(trees.iter().all(|t| t.n() == 6 && t.is_tree()));
    let classes: std::collections::BTreeSet<_> = trees.iter().map(canonical_form).collect();
    assert_eq!(classes.len(), 6);
}

#[test]
fn gen_writes_label_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("labels.jsonl");
    let lines = gen(&["sharpness", "3", "--labels", path.to_str().unwrap()]);
    let sidecar = std::fs::read_to_string(&path).unwrap();
    let label: Value = serde_json::from_str(sidecar.lines().next().unwrap()).unwrap();
    assert_eq!(label["graph"], lines.trim());
    assert_eq!(label["labels"]["a"]["vertex"], 0);
    assert_eq!(label["labels"]["b"]["vertex"], 3);
    assert!(label["labels"]["bridge"]["edge"].is_object() || label["labels"]["bridge"]["edge"].is_array());
}

#[test]
fn verify_examples() {
    let out = packcrit(&["verify", "diam2", "--corpus", "builtin:connected-le7-diam2"], "");
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["status"], "ok");

    let out = packcrit(&["verify", "tree-equivalence", "--corpus", "builtin:trees-le12"], "");
    assert_eq!(code(&out), 0);

    let out = packcrit(&["verify", "small-critical-3", "--corpus", "builtin:connected-le6"], "");
    assert_eq!(code(&out), 0);
    let positives: std::collections::BTreeSet<_> = report(&out)["results"]["positives"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| canonical_form(&parse_graph6(g.as_str().unwrap()).unwrap()))
        .collect();
    let expected = [gen(&["cycle", "3"]), gen(&["path", "4"])]
        .iter()
        .map(|l| canonical_form(&parse_graph6(l.trim()).unwrap()))
        .collect();
    assert_eq!(positives, expected);
}

#[test]
fn verify_reads_corpus_from_stdin_in_tsv() {
    let corpus: String = ["3", "4", "5"].iter().map(|n| gen(&["trees", n])).collect();
    let out = packcrit(&["--format", "tsv", "verify", "tree-equivalence"], &corpus);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[0][0], "theorem");
    assert_eq!(rows[1][..5], ["tree-equivalence", "6", "6", "0", "0"]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&packcrit(
            &["verify", "four-color", "--corpus", "builtin:connected-le3"],
            ""
        )),
        2
    );
    assert_eq!(code(&packcrit(&["gen", "wheel", "5"], "")), 2);
    assert_eq!(code(&packcrit(&["gen", "realization", "5"], "")), 2);
    assert_eq!(code(&packcrit(&["chirho", "builtin:nonsense"], "")), 2);
    assert_eq!(code(&packcrit(&["chirho", "/nonexistent/input.g6"], "")), 2);
    assert_eq!(code(&packcrit(&["--jobs", "0", "chirho"], "@\n")), 2);
    assert_eq!(code(&packcrit(&["frobnicate"], "")), 2);

    let out = packcrit(&["chirho"], "A_\nnot graph6 at all\n");
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&packcrit(&["critical"], "B\n")), 3);
}

#[test]
fn timeout_is_reported_separately() {
    let out = packcrit(&["--timeout", "0", "chirho"], &gen(&["sharpness", "4"]));
    assert_eq!(code(&out), 4);
    let rep = report(&out);
    assert_eq!(rep["status"], "timeout");
    assert!(rep["results"][0]["chi_rho"].is_null());
}

fn without_timing(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            if let Some(obj) = v.as_object_mut() {
                obj.remove("timing_ms");
            }
            v
        })
        .collect()
}

#[test]
fn output_is_deterministic_apart_from_timing() {
    let input: String = gen(&["connected", "5"]);
    for args in [
        &["--witness", "critical"][..],
        &["--witness", "chirho"][..],
        &["verify", "diam2"][..],
    ] {
        let a = packcrit(args, &input);
        let b = packcrit(args, &input);
        assert_eq!(without_timing(&a), without_timing(&b), "{args:?}");
        let text_a = stdout(&a);
        let text_b = stdout(&b);
        let strip = |s: &str| {
            let cut = s.rfind("\"timing_ms\":").unwrap();
            let end = cut + s[cut..].find(',').unwrap();
            format!("{}{}", &s[..cut], &s[end..])
        };
        assert_eq!(strip(&text_a), strip(&text_b), "{args:?}");
    }

    let mut one_job = vec!["--jobs", "1"];
    one_job.extend(["--witness", "critical"]);
    let serial = packcrit(&one_job, &input);
    let default = packcrit(&["--witness", "critical"], &input);
    let strip_cmd = |v: Vec<Value>| -> Vec<Value> {
        v.into_iter()
            .map(|mut x| {
                x.as_object_mut().unwrap().remove("command");
                x
            })
            .collect()
    };
    assert_eq!(strip_cmd(without_timing(&serial)), strip_cmd(without_timing(&default)));
}

#[test]
fn caterpillar_search() {
    let out = packcrit(&["caterpillar", "5"], "");
    assert_eq!(code(&out), 0);
    let r = &report(&out)["results"];
    assert_eq!(r["chi_rho"], 5);
    assert_eq!(r["edge_critical"], true);
    let g = parse_graph6(r["graph"].as_str().unwrap()).unwrap();
    assert!(g.is_tree());
}
