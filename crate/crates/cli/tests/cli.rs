use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mobpos"))
        .args(args)
        .env_remove("MOBPOS_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn values(record: &serde_json::Value) -> Vec<(String, u64)> {
    record["numbers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["number"].as_str().unwrap().to_string(), c["value"].as_u64().unwrap()))
        .collect()
}

#[test]
fn hypercube_values() {
    let o = run(&["compute", "--family", "hypercube:4", "--numbers", "mu,mobmv", "--format", "json"], None);
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(values(&recs[0]), [("mu".into(), 9), ("mobmv".into(), 8)]);
    assert!(recs[0]["numbers"][1].get("certificate").is_none());
}

#[test]
fn join_realisation_values() {
    let o = run(&["compute", "--family", "join_realisation:2,4", "--numbers", "mob,mobmv", "--format", "json"], None);
    assert!(o.status.success());
    assert_eq!(values(&json_lines(&o)[0]), [("mob".into(), 2), ("mobmv".into(), 4)]);
}

#[test]
fn certificates_on_request() {
    let o = run(
        &["compute", "--family", "cycle:5", "--numbers", "mobmv", "--format", "json", "--certificates"],
        None,
    );
    let recs = json_lines(&o);
    assert!(recs[0]["numbers"][0]["certificate"]["moves"].is_array());
}

#[test]
fn graph6_stream_keeps_order_and_reports_bad_lines() {
    let o = run(
        &["compute", "--graph6", "-", "--numbers", "gp", "--format", "json", "--workers", "3"],
        Some(b">>graph6<<Bw\n\nzzz\nCF\n"),
    );
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 3);
    assert_eq!(values(&recs[0]), [("gp".into(), 3)]);
    assert!(recs[1]["error"].is_string());
    assert_eq!(recs[2]["graph6"], "CF");
}

#[test]
fn disconnected_graph_is_an_error_record() {
    // two isolated vertices
    let o = run(&["compute", "--graph6", "-", "--numbers", "gp", "--format", "json"], Some(b"A?\n"));
    assert!(o.status.success());
    assert!(json_lines(&o)[0]["error"].is_string());
}

#[test]
fn mu_r_needs_radius() {
    let o = run(&["compute", "--family", "path:4", "--numbers", "mu_r"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["compute", "--family", "path:4", "--numbers", "mu_r", "--radius", "2"], None);
    assert!(o.status.success());
}

fn schedule(args: &[&str]) -> Vec<u8> {
    let mut all = vec!["schedule"];
    all.extend_from_slice(args);
    let o = run(&all, None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    o.stdout
}

#[test]
fn schedules_verify() {
    let o = run(&["verify", "-"], Some(&schedule(&["cart_grid_mv", "6", "5"])));
    assert!(o.status.success());
    assert!(stdout(&o).contains("accepted: 10 robots"), "{}", stdout(&o));

    let o = run(&["verify", "--format", "json"], Some(&schedule(&["lkn", "6"])));
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["accepted"], true);
    assert_eq!(v["robots"], 11);
}

#[test]
fn tampered_certificate_is_rejected() {
    let mut cert: serde_json::Value = serde_json::from_slice(&schedule(&["lkn", "6"])).unwrap();
    let moves = cert["moves"].as_array_mut().unwrap();
    let first = moves[0].clone();
    moves[0] = serde_json::json!([first[1], first[0]]);
    let o = run(&["verify"], Some(cert.to_string().as_bytes()));
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("rejected"), "{text}");
    assert!(text.contains("step"), "{text}");
}

#[test]
fn schedule_to_file() {
    let path = std::env::temp_dir().join(format!("mobpos-cli-{}.json", std::process::id()));
    let path_s = path.to_str().unwrap();
    let o = run(&["schedule", "half_graph", "4", "-o", path_s], None);
    assert!(o.status.success());
    let o = run(&["verify", path_s], None);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn unknown_strategy_is_a_usage_error() {
    let o = run(&["schedule", "no_such_strategy"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reproduce_grids_passes() {
    let o = run(&["reproduce", "--only", "grids"], None);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("criterion  2: PASS"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn reproduce_expect_override_fails_one_row() {
    let o = run(&["reproduce", "--only", "1", "--expect", "hypercube:4 mobmv=7", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(1));
    let lines = json_lines(&o);
    let failed: Vec<_> = lines.iter().filter(|r| r["pass"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["name"], "hypercube:4 mobmv");
}

#[test]
fn reproduce_unknown_row_is_an_error() {
    let o = run(&["reproduce", "--expect", "nothing=1"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_order_five() {
    let text: String = mobpos_core::corpus::connected_graphs(5)
        .iter()
        .map(|g| mobpos_core::graph::graph6_encode(g) + "\n")
        .collect();
    let o = run(&["scan", "--format", "json"], Some(text.as_bytes()));
    assert!(o.status.success());
    let s = &json_lines(&o)[0];
    assert_eq!(s["max_mob2_edges"], 8);
    assert_eq!(s["turan_unique"], true);
}

#[test]
fn scan_rejects_mixed_orders() {
    let o = run(&["scan"], Some(b"Bw\nCF\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("order"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["compute"], None).status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "cycle:5", "--graph6", "-"], None).status.code(), Some(2));
    assert_eq!(run(&["compute", "--family", "cycle:5", "--budget", "0"], None).status.code(), Some(2));
    assert_eq!(run(&["family", "cycle:2"], None).status.code(), Some(2));
}

#[test]
fn family_formats() {
    let o = run(&["family", "complete:3"], None);
    assert_eq!(stdout(&o).trim(), "Bw");
    let o = run(&["family", "path:3", "--format", "edges"], None);
    assert_eq!(stdout(&o), "0 1\n1 2\n");
    let o = run(&["family", "cycle:4", "--format", "dot"], None);
    assert!(stdout(&o).starts_with("graph"));
}

#[test]
fn listings() {
    let o = run(&["families"], None);
    assert!(stdout(&o).contains("hypercube"));
    let o = run(&["strategies"], None);
    assert!(stdout(&o).contains("lkn"));
}

#[test]
fn classify_star() {
    let o = run(&["classify", "--family", "star:4", "--format", "json"], None);
    assert!(o.status.success());
    let c = &json_lines(&o)[0];
    assert_eq!(c["cmobmv_equals_2"]["value"], true);
    assert_eq!(c["hubs"], serde_json::json!([0]));
}
