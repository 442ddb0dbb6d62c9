use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_hyperinfect");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(BIN).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_pipes_into_number() {
    let generated = run(&["gen", "complete", "5", "3"]);
    assert!(generated.status.success());
    let piped = run_stdin(&["number", "-"], &generated.stdout);
    let v = json(&piped);
    assert_eq!(v["infection_number"], 3);
    assert_eq!(v["witness"], serde_json::json!([1, 2, 3]));
}

#[test]
fn piped_and_file_inputs_agree() {
    let path = fixture("fano.hg");
    let from_file = run(&["number", &path]);
    let from_pipe = run_stdin(&["number", "-"], &std::fs::read(&path).unwrap());
    assert_eq!(from_file.stdout, from_pipe.stdout);
    assert_eq!(json(&from_file)["infection_number"], 3);
}

#[test]
fn hypertree_seed_infects_everything() {
    let v = json(&run(&["infect", &fixture("hypertree.hg"), "--seed", "1,2,3", "--trace"]));
    assert_eq!(v["derived"], serde_json::json!([1, 2, 3, 4, 5, 6]));
    assert_eq!(v["complete"], true);
    assert!(!v["events"].as_array().unwrap().is_empty());
    let stuck = json(&run(&["infect", &fixture("hypertree.hg"), "--seed", "5,6"]));
    assert_eq!(stuck["complete"], false);
}

#[test]
fn gen_round_trips_every_family() {
    let dir = std::env::temp_dir().join(format!("hyperinfect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let families: &[&[&str]] = &[
        &["complete", "6", "3"],
        &["multipartite", "2", "2", "3"],
        &["flower", "--core", "2", "1", "2", "1"],
        &["interval", "8", "1:3", "3:3", "6:3"],
        &["hypercycle", "--sizes", "3,3,3,3", "--overlaps", "1,1,1,1"],
        &["tight-cycle", "8", "4", "3"],
        &["augmented", "6", "3"],
        &["trivial", "4"],
        &["pg", "2", "3"],
        &["path", "5"],
        &["cycle", "5"],
    ];
    for (i, args) in families.iter().enumerate() {
        for format in ["text", "json"] {
            let file = dir.join(format!("{i}.{format}"));
            let file = file.to_str().unwrap();
            let mut full = vec!["gen"];
            full.extend_from_slice(args);
            full.extend_from_slice(&["--format", format, "-o", file]);
            assert!(run(&full).status.success(), "{args:?}");
            let direct = run(&full[..full.len() - 2]);
            let original = hyperinfect::io::parse(std::str::from_utf8(&direct.stdout).unwrap()).unwrap();
            let reread = hyperinfect::io::load(file).unwrap();
            assert_eq!(original, reread, "{args:?} {format}");
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn products_and_transforms() {
    let fano = fixture("fano.hg");
    let joined = run(&["product", "join1", &fano]);
    let h = hyperinfect::io::parse(std::str::from_utf8(&joined.stdout).unwrap()).unwrap();
    assert_eq!((h.num_vertices(), h.num_edges()), (8, 7));
    assert_eq!(run(&["product", "direct", &fano]).status.code(), Some(1));

    let line = run(&["linegraph", &fixture("hypertree.hg")]);
    let l = hyperinfect::io::parse(std::str::from_utf8(&line.stdout).unwrap()).unwrap();
    assert_eq!((l.num_vertices(), l.num_edges()), (4, 6));

    let structure = json(&run(&["check", "structure", &fano]));
    assert_eq!(structure["is_linear"], true);
    let design = json(&run(&["check", "design", "--t", "2", &fano]));
    assert_eq!(design["lambda"], 1);
    let components = json(&run(&["components", &fixture("hypertree.hg")]));
    assert_eq!(components.as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["number", "/no/such/file.hg"]).status.code(), Some(1));
    assert_eq!(run(&["infect", &fixture("fano.hg"), "--seed", "0"]).status.code(), Some(1));
    assert_eq!(run(&["number", &fixture("fano.hg"), "--frobnicate"]).status.code(), Some(1));
    assert_eq!(run_stdin(&["number", "-"], b"vertices 3\nedge 1 9\n").status.code(), Some(1));
    let starved = Command::new(BIN).args(["number", &fixture("fano.hg")]).env("HYPERINFECT_BUDGET", "4").output().unwrap();
    assert_eq!(starved.status.code(), Some(2));
    assert_eq!(run(&["verify", "--filter", "adjacency-law", "--json"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--filter", "design"]).status.code(), Some(0));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn thread_count_does_not_change_output() {
    let a = run(&["verify", "--filter", "product", "--json", "--threads", "1"]);
    let b = run(&["verify", "--filter", "product", "--json", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let p1 = run(&["verify", "--properties", "--json", "--count", "50", "--threads", "1"]);
    let p4 = run(&["verify", "--properties", "--json", "--count", "50", "--threads", "4"]);
    assert_eq!(p1.stdout, p4.stdout);
    let n1 = run(&["number", &fixture("fano.hg"), "--threads", "1"]);
    let n4 = run(&["number", &fixture("fano.hg"), "--threads", "4"]);
    assert_eq!(n1.stdout, n4.stdout);
}

#[test]
fn conjecture_report() {
    let v = json(&run(&["conjecture", &fixture("fano.hg")]));
    assert_eq!(v["status"], "not_applicable");
    let h = "vertices 6\nedge 1 2 3 4\nedge 1 2 3 5\nedge 1 3 4 6\nedge 1 4 5 6\nedge 2 3 5 6\nedge 2 4 5 6\nedge 3 4 5 6\n";
    let v = json(&run_stdin(&["conjecture", "-"], h.as_bytes()));
    assert_eq!(v["status"], "violated");
}
