use std::io::Write;
use std::process::{Command, Output, Stdio};

use klcolour::certificate::verify_box_cograph;
use klcolour::graph::parse_edge_list;
use klcolour::{BoxCertificate, Graph, P4Witness, VertexSet};
use serde_json::Value;

const SEVEN_VERTICES: &str = "0 1\n0 2\n1 2\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n4 6\n";
const TWO_TRIANGLES: &str = "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klcolour")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_klcolour"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("stdout is JSON")
}

fn ids(v: &Value) -> Vec<usize> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect()
}

fn params_of(o: &Output) -> [u64; 4] {
    let v = json(o);
    ["chi", "theta", "bichromatic", "cochromatic"].map(|key| v[key].as_u64().unwrap())
}

#[test]
fn recognize_complete_graph() {
    let o = run(&["recognize", "-f", "g6", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1(0,1,2,3)\n");

    let o = run(&["recognize", "--json", "-f", "g6", "C~"]);
    let v = json(&o);
    assert_eq!(v["label"], 1);
    assert_eq!(v["children"].as_array().unwrap().len(), 4);
}

#[test]
fn recognize_reports_induced_p4() {
    let text = "0 1\n1 2\n2 3\n3 4\n4 0\n";
    let o = run(&["recognize", text]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["cograph"], false);
    let p4: [usize; 4] = ids(&v["p4"]).try_into().unwrap();
    assert!(P4Witness(p4).verify(&Graph::cycle(5)));
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_input_exits_two() {
    let o = run(&["kappa", "not an edge"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(run(&["check", "-k", "1", "0 1"]).status.code(), Some(2));
    assert_eq!(run(&["params", "-f", "g6", "?"]).status.code(), Some(2));
}

#[test]
fn sequences() {
    let o = run(&["-f", "g6", "kappa", "--oracle", "Dhc"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "3,2,1\n".into()));
    let o = run(&["lambda", "--oracle", SEVEN_VERTICES]);
    assert_eq!(stdout(&o), "3,2,2\n");
    for variant in ["--fast", "--naive", "--oracle"] {
        assert_eq!(stdout(&run(&["kappa", variant, TWO_TRIANGLES])), "3,3\n");
        assert_eq!(stdout(&run(&["lambda", variant, TWO_TRIANGLES])), "2,2,2\n");
    }
    assert_eq!(run(&["kappa", "--fast", "--naive", TWO_TRIANGLES]).status.code(), Some(2));
    assert_eq!(run(&["kappa", "--naive", "0 1\n1 2\n2 3"]).status.code(), Some(1));
}

#[test]
fn oracle_respects_vertex_limit() {
    let o = run(&["kappa", "--oracle", "--max-vertices", "5", SEVEN_VERTICES]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certify_two_triangles() {
    let o = run(&["certify", "-k", "1", "-l", "1", TWO_TRIANGLES]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!((v["k"].as_u64(), v["l"].as_u64()), (Some(2), Some(2)));
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
    let g = parse_edge_list(TWO_TRIANGLES).unwrap();
    let cert = BoxCertificate { k: 2, l: 2, vertices: VertexSet::new(ids(&v["vertices"])).unwrap() };
    assert_eq!(verify_box_cograph(&g, &cert), Ok(()));

    let o = run(&["certify", "-k", "0", "-l", "2", TWO_TRIANGLES]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["cliques"].as_array().unwrap().len(), 2);
    assert!(v["independent_sets"].as_array().unwrap().is_empty());
}

#[test]
fn check_verdicts() {
    let p3 = "0 1\n1 2\n";
    let o = run(&["check", "-k", "1", "-l", "1", p3]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["colourable"], true);

    let o = run(&["check", "-k", "0", "-l", "0", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["colourable"], false);
    assert_eq!(ids(&v["certificate"]["vertices"]), vec![0]);

    let o = run(&["check", "--oracle", "-k", "1", "-l", "1", "-f", "g6", "Dhc"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["check", "--oracle", "-k", "2", "-l", "1", "-f", "g6", "Dhc"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ferrers_renderings() {
    let p3 = "0 1\n1 2\n";
    assert_eq!(stdout(&run(&["ferrers", p3])), "0 2\n1\n");
    assert_eq!(stdout(&run(&["ferrers", "--ascii", p3])), "0 2\n1\n");
    let rows = json(&run(&["ferrers", "--json", p3]));
    assert_eq!(rows, serde_json::json!([["0", "2"], ["1"]]));
    let svg = stdout(&run(&["ferrers", "--svg", p3]));
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 3);
    assert_eq!(run(&["ferrers", "--svg", "--json", p3]).status.code(), Some(2));
}

#[test]
fn params_examples() {
    assert_eq!(params_of(&run(&["params", "1"])), [1, 1, 1, 1]);
    assert_eq!(params_of(&run(&["params", TWO_TRIANGLES])), [3, 2, 4, 2]);
    assert_eq!(params_of(&run(&["params", "--oracle", SEVEN_VERTICES])), [3, 3, 4, 3]);
    assert_eq!(params_of(&run(&["params", "-f", "g6", "C~"])), [4, 1, 4, 1]);
}

#[test]
fn input_formats() {
    assert_eq!(stdout(&run(&["-f", "cotree", "kappa", "1(0(a,b),c)"])), "2,1\n");
    let tree = r#"{"label":0,"children":[{"vertex":"x"},{"vertex":"y"}]}"#;
    assert_eq!(stdout(&run_stdin(&["-f", "cotree-json", "lambda"], tree)), "2\n");
    assert_eq!(stdout(&run_stdin(&["kappa", "-"], TWO_TRIANGLES)), "3,3\n");

    let path = std::env::temp_dir().join(format!("klcolour-cli-{}.g6", std::process::id()));
    std::fs::write(&path, "C~\n").unwrap();
    let o = run(&["-f", "g6", "recognize", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o), "1(0,1,2,3)\n");
}

#[test]
fn bench_prints_csv() {
    let o = run(&["bench", "--sizes", "20,40", "--trials", "1", "--algorithm", "ferrers", "--family", "nested-stars"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,naive_ms,fast_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("20,"));
}
