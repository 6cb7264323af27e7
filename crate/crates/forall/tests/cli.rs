//! The `forall` binary end to end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use forall::read_aut;
use forall_core::oracle::languages_equal_on_lassos;
use forall_core::{Buchi, BuchiAutomaton};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn forall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forall"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn load(path: &Path) -> BuchiAutomaton {
    read_aut::<Buchi>(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn decide_sat_and_unsat() {
    let o = forall(&["decide", "forall x1. exists x2. (x1 < x2 & X1(x2))"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("SAT\nX1 = {"), "{out}");
    assert!(out.contains("period="));

    let o = forall(&["decide", "exists x1. x1 < x1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "UNSAT\n");
}

#[test]
fn witness_lines_for_free_variables() {
    let o = forall(&["decide", "x < y & X(y)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "SAT");
    assert_eq!(lines[1], "x = 0");
    assert_eq!(lines[2], "y = 1");
    assert!(lines[3].starts_with("X = {1"), "{out}");
}

#[test]
fn decide_from_file() {
    let file = data("successor_member.fol");
    let o = forall(&["decide", "--file", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("SAT\nX = {1,2,"));
}

#[test]
fn blowup_family_stats() {
    let o = forall(&[
        "decide",
        "forall x1. exists x2. (x2 = x1 + 3 & (X1(x1) <-> X1(x2)))",
        "--stats",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("SAT\n"));
    let final_line = out
        .lines()
        .find(|l| l.starts_with("final: "))
        .expect("final line");
    let states: usize = final_line["final: ".len()..]
        .split(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(states >= 8, "{final_line}");
    assert!(out.contains("subsets x1: "));
    assert!(out.contains("step exists x2: "));
}

#[test]
fn errors_exit_2() {
    for args in [
        &["decide", "x1 <"][..],
        &["decide", "forall X. X(x)"],
        &["decide", "exists x. y = x + 65"],
        &["decide", "exists x. @succ(x, x)"],
        &["decide"],
    ] {
        let o = forall(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
    let o = forall(&["decide", "exists x. y = x + 65", "--max-offset", "65"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn emitted_files() {
    let dir = tempfile::tempdir().unwrap();
    let aut = dir.path().join("out.aut");
    let dot = dir.path().join("out.dot");
    let o = forall(&[
        "decide",
        "forall x1. exists x2. (x1 < x2 & X1(x2))",
        "--emit-aut",
        aut.to_str().unwrap(),
        "--emit-dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let a = load(&aut);
    let inf = load(&data("infinitely_often.aut"));
    assert!(languages_equal_on_lassos(&a, &inf, 3, 3)
        .unwrap()
        .is_equal());
    let dot = fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("digraph "));
    assert!(dot.contains("doublecircle"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = forall(&[
            "decide",
            "forall x. exists y. (x < y & X(y) & !Y(y))",
            "--stats",
            "--emit-aut",
            path.to_str().unwrap(),
        ]);
        (stdout(&o), fs::read(path).unwrap())
    };
    assert_eq!(run("a.aut"), run("b.aut"));
}

#[test]
fn decide_dumps_stages() {
    let dir = tempfile::tempdir().unwrap();
    let o = forall(&[
        "decide",
        "forall x1. exists x2. (x1 < x2 & X1(x2))",
        "--dump-stages",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let index = fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    assert_eq!(
        index,
        "01-forall-x1/manifest.txt\tstages of forall x1\nformula.aut\tautomaton of the whole formula\n"
    );
    let manifest = fs::read_to_string(dir.path().join("01-forall-x1/manifest.txt")).unwrap();
    assert!(manifest.contains("\tU_q for q = "));
    assert!(manifest.contains("\tU'_q' for q' = {"));
}

#[test]
fn quantify_running_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("forall.aut");
    let stages = dir.path().join("stages");
    let o = forall(&[
        "quantify",
        data("exists_later_member.aut").to_str().unwrap(),
        "x1",
        "-o",
        out.to_str().unwrap(),
        "--dump-stages",
        stages.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a = load(&out);
    assert!(
        languages_equal_on_lassos(&a, &load(&data("infinitely_often.aut")), 4, 4)
            .unwrap()
            .is_equal()
    );

    let manifest = fs::read_to_string(stages.join("manifest.txt")).unwrap();
    for line in [
        "u-0.aut\tU_q for q = q0",
        "u-1.aut\tU_q for q = q1",
        "u-2.aut\tU_q for q = q2",
        "widget-2.aut\tU'_q' for q' = {q0,q1,q2}",
        "subset-trimmed.aut\tA': trimmed",
    ] {
        assert!(
            manifest.lines().any(|l| l == line),
            "{line} missing from\n{manifest}"
        );
    }
    // every listed file exists and parses back to what was written
    for line in manifest.lines() {
        let file = line.split('\t').next().unwrap();
        let text = fs::read_to_string(stages.join(file)).unwrap();
        let back = if text.contains("\nkind finite\n") {
            forall::write_aut(&read_aut::<forall_core::Finite>(&text).unwrap())
        } else {
            forall::write_aut(&read_aut::<Buchi>(&text).unwrap())
        };
        assert_eq!(back, text, "{file}");
    }
}

#[test]
fn quantify_to_stdout_and_errors() {
    let input = data("exists_later_member.aut");
    let o = forall(&["quantify", input.to_str().unwrap(), "x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sig fo: so:X1\nkind buchi\n"));

    let o = forall(&["quantify", input.to_str().unwrap(), "x9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("unknown variable `x9`"),
        "{}",
        stderr(&o)
    );

    let o = forall(&["quantify", input.to_str().unwrap(), "X1"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.aut");
    fs::write(&bad, "sig fo:x so:\nstates 1\ntrans 0 0 11\n").unwrap();
    let o = forall(&["quantify", bad.to_str().unwrap(), "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn oracle_check_modes() {
    let ex = data("exists_later_member.aut");
    let o = forall(&["oracle-check", ex.to_str().unwrap(), "--var", "x1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "AGREE on all lassos with |u| <= 3, |v| <= 3\n");

    let inf = data("infinitely_often.aut");
    let fin = data("finitely_often.aut");
    let o = forall(&[
        "oracle-check",
        inf.to_str().unwrap(),
        inf.to_str().unwrap(),
        "--max-u",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EQUAL on all lassos with |u| <= 2, |v| <= 3\n");

    let o = forall(&["oracle-check", inf.to_str().unwrap(), fin.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("DIFFERENT on "), "{}", stdout(&o));

    let o = forall(&["oracle-check", inf.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_dot() {
    let o = forall(&[
        "export-dot",
        data("exists_later_member.aut").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph \"exists_later_member\" {"));
    assert!(dot.contains("0 -> 1 [label=\"(0), (1)\\n{x1}\"];"), "{dot}");
    assert!(dot.contains("1 -> 2 [label=\"(1)\"];"), "{dot}");
}
