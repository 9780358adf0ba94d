use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlproof")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

const LOOP_GOAL: &str = "(implies A (and B (some r A)))";

#[test]
fn prove_reports_both_sizes() {
    let o = run(&["prove", path(&data("loop.tbox")), LOOP_GOAL, "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("minimal tree proof: 5"), "{out}");
    assert!(out.contains("minimal proof: 4 vertices"), "{out}");
}

#[test]
fn prove_exit_codes() {
    let o = run(&["prove", path(&data("loop.tbox")), "(implies B A)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["prove", path(&data("loop.tbox")), LOOP_GOAL, "--mode", "min", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("budget exhausted, best"));
    let o = run(&["prove", "missing.tbox", LOOP_GOAL]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["prove", path(&data("loop.tbox")), "(implies A"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["prove", "--mode", "sideways", path(&data("loop.tbox")), LOOP_GOAL]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_and_dot_outputs_feed_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("p.json");
    let dot = dir.path().join("p.dot");
    let o = run(&[
        "prove",
        path(&data("loop.tbox")),
        LOOP_GOAL,
        "--mode",
        "min",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    let o = run(&["metrics", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("vertices: 4"), "{out}");
    assert!(out.contains("tree size: 5"), "{out}");
}

#[test]
fn fba_orders() {
    let o = run(&["fba", path(&data("role.tbox")), "(implies A B)", "--order", "D,C,r"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("forgotten: D C r"), "{out}");
    assert!(out.contains("vertices: 5"), "{out}");
    let o = run(&["fba", path(&data("role.tbox")), "(implies A B)", "--order", "D,C,r", "--no-earlier-tbox"]);
    assert!(stdout(&o).contains("vertices: 6"));
    let o = run(&["fba", path(&data("role.tbox")), "(implies A B)", "--order", "r"]);
    assert!(stdout(&o).contains("vertices: 5"));
    let o = run(&["fba", path(&data("role.tbox")), "(implies B A)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["fba", path(&data("role.tbox")), "(implies A B)", "--order", "Z"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn compare_lists_fba_tree_size() {
    let o = run(&["compare", path(&data("role.tbox")), "(implies A B)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let fba = out.lines().find(|l| l.starts_with("fba")).expect("fba row");
    let cols: Vec<&str> = fba.split_whitespace().collect();
    assert_eq!(cols[2], "5");
    assert!(out.lines().any(|l| l.starts_with("deriver-min")));
}

#[test]
fn justify_all() {
    let o = run(&["justify", path(&data("role.tbox")), "(implies A B)", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("(implies")).count(), 3);
}

#[test]
fn generators_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let sat = dir.path().join("sat.eli");
    let o = run(&["gen", "sat", "--vars", "1", "--clause", "1", "--clause", "-1", "--clause", "1,-1", "-o", sat.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for ext in ["", ".goal", ".expect"] {
        let got = fs::read_to_string(format!("{}{ext}", sat.display())).unwrap();
        let want = fs::read_to_string(format!("{}{ext}", data("sat_unsat.eli").display())).unwrap();
        assert_eq!(got, want, "sat{ext}");
    }
    let hs = dir.path().join("hs.tbox");
    let o = run(&["gen", "hitting-set", "--universe", "2", "--set", "1", "--set", "2", "--bound", "2", "-o", hs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for ext in ["", ".goal", ".expect"] {
        let got = fs::read_to_string(format!("{}{ext}", hs.display())).unwrap();
        let want = fs::read_to_string(format!("{}{ext}", data("hs_two.tbox").display())).unwrap();
        assert_eq!(got, want, "hs{ext}");
    }
    let o = run(&["gen", "sat", "--vars", "0"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["gen", "hitting-set", "--universe", "1", "--set", "2", "--bound", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn generated_instances_round_trip_through_prove() {
    let o = run(&["prove", path(&data("hs_two.tbox")), path(&data("hs_two.tbox.goal")), "--contexts", "goal", "--mode", "min"]);
    assert!(stdout(&o).contains("minimal proof: 9 vertices"));
    let o = run(&["prove", "--deriver", "eli", path(&data("sat_unsat.eli")), "(implies A F)", "--mode", "tree"]);
    assert_eq!(o.status.code(), Some(0));
    let w: u64 = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("minimal tree proof: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(w > 23);
}

#[test]
fn identical_invocations_give_identical_output() {
    let (role, lp) = (data("role.tbox"), data("loop.tbox"));
    let args = ["compare", path(&role), "(implies A B)"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["prove", path(&lp), LOOP_GOAL];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn normalization_can_be_folded_or_kept() {
    let dir = tempfile::tempdir().unwrap();
    let json = |mode: &str| {
        let out = dir.path().join(format!("{mode}.json"));
        let o = run(&["prove", path(&data("loop.tbox")), LOOP_GOAL, "--mode", "min", "--normalize", mode, "--json", path(&out)]);
        assert_eq!(o.status.code(), Some(0));
        fs::read_to_string(out).unwrap()
    };
    let folded = json("fold");
    assert!(!folded.contains("(implies A X)"));
    assert!(folded.contains("\"(implies A (and B (some r A)))\""));
    let visible = json("visible");
    assert!(visible.contains("\"(implies A X)\""));
}
