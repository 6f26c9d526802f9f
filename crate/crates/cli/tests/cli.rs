use std::process::Output;

use assert_cmd::Command;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::cargo_bin("orbit-goldie").unwrap().args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["orbit", "dual", "B2:3,1,1"]), "C2:2,2");
    assert_eq!(stdout(&["kl", "poly", "A2", "e", "w0"]), "1");
    assert_eq!(stdout(&["char", "verma", "--mu0", "0", "--dim", "1", "--den", " -a", "--truncate", "3"]), "1,1,1,1");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["orbit", "dim", "B2:4,1"]).status.code(), Some(2));
    assert_eq!(run(&["kl", "parabolic", "A2", "s1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["orbit", "dim", "B2:x"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn rank_bound_env() {
    let mut cmd = Command::cargo_bin("orbit-goldie").unwrap();
    cmd.env("ORBIT_GOLDIE_RANK_BOUND", "1");
    let out = cmd.args(["char", "verma", "--type", "B2", "--levi", "1,1|0", "--mu0", "0", "--truncate", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank bound"));
    let mut cmd = Command::cargo_bin("orbit-goldie").unwrap();
    cmd.env("ORBIT_GOLDIE_RANK_BOUND", "4");
    assert!(cmd.args(["char", "verma", "--type", "B2", "--levi", "1,1|0", "--mu0", "0"]).output().unwrap().status.success());
}

fn assert_same<T: serde::Serialize>(value: &T, line: &str) {
    let original: Value = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_value(value).unwrap(), original, "{line}");
}

#[test]
fn json_objects_round_trip() {
    use orbit_goldie::kl::DecompositionRow;
    use orbit_goldie::orbits::OrbitLabel;
    use orbit_goldie::{CellPartition, GoldieReport, Partition, RationalCharacter};

    let line = stdout(&["--json", "orbit", "dual", "B2:3,1,1"]);
    let o: OrbitLabel = serde_json::from_str(&line).unwrap();
    assert_same(&o, &line);
    assert_eq!(o.to_string(), "C2:2,2");

    let line = stdout(&["--json", "partition", "transpose", "3,1"]);
    let p: Partition = serde_json::from_str(&line).unwrap();
    assert_same(&p, &line);

    let line = stdout(&["--json", "kl", "inverse", "B2", "s1"]);
    let r: DecompositionRow = serde_json::from_str(&line).unwrap();
    assert_same(&r, &line);

    let line = stdout(&["--json", "cells", "compute", "A3"]);
    let c: CellPartition = serde_json::from_str(&line).unwrap();
    assert_same(&c, &line);

    let line = stdout(&["--json", "char", "simple", "B2", "--levi", "2|0", "--w", "s2"]);
    let ch: RationalCharacter = serde_json::from_str(&line).unwrap();
    assert_same(&ch, &line);

    let line = stdout(&["--json", "goldie", "report", "A1", "--levi", "1|1", "--w", "e"]);
    let g: GoldieReport = serde_json::from_str(&line).unwrap();
    assert_eq!((g.dimension, g.goldie_rank, g.scale_factor), (1, 1, 1));
}

#[test]
fn json_mode_is_one_object_per_line() {
    let out = stdout(&["--json", "kl", "table", "A2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 19);
    for l in lines {
        let v: Value = serde_json::from_str(l).unwrap();
        assert!(v.is_object());
    }
}

#[test]
fn batch_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("requests.txt");
    std::fs::write(
        &path,
        "# comment\norbit dual B2:3,1,1\nkl poly A2 e w0\nchar verma --mu0 0 --den ' -a' --truncate 2\norbit dim B2:4,1\n",
    )
    .unwrap();
    let out = run(&["--batch", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "C2:2,2\n1\n1,1,1\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
    let out = run(&["--json", "--batch", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| serde_json::from_str::<Value>(l).is_ok()));
}

#[test]
fn oracle_sweeps_agree() {
    for (what, scope) in [
        ("collapse", "10"),
        ("component-group", "5"),
        ("length", "D4"),
        ("bruhat", "B3"),
        ("kl", "A4"),
        ("parabolic", "B3"),
        ("cells", "A4"),
    ] {
        let out = stdout(&["oracle", "compare", what, scope]);
        assert!(out.starts_with("agree"), "{what} {scope}: {out}");
    }
}

#[test]
fn oracle_matches_primary_commands() {
    assert_eq!(stdout(&["oracle", "collapse", "B", "4,3,1,1"]), stdout(&["partition", "collapse", "B", "4,3,1,1"]));
    assert_eq!(stdout(&["oracle", "kl", "A3", "s2", "s2s1s3s2"]), "1 + q");
    assert_eq!(stdout(&["oracle", "length", "B3", "w0"]), stdout(&["weyl", "length", "B3", "w0"]));
    assert_eq!(stdout(&["oracle", "parabolic", "B2", "e", "2"]), stdout(&["kl", "parabolic", "B2", "e", "2"]));
    assert_eq!(
        stdout(&["oracle", "component-group", "C4:2,2,1,1,1,1"]),
        stdout(&["orbit", "component-group", "C4:2,2,1,1,1,1"])
    );
}

#[test]
fn character_commands() {
    assert_eq!(stdout(&["char", "dim", "B2", "--levi", "1,1|0", "--w", "e", "--rho0", "(3,1)"]), "16");
    assert_eq!(stdout(&["char", "dim", "A1", "--levi", "1|1", "--w", "s1"]), "infinite");
    assert_eq!(stdout(&["char", "parabolic-image", "A1", "--levi", "1|1", "--w", "s1", "--truncate", "4"]), "1,1,1,1,1");
    assert_eq!(stdout(&["oracle", "pbw", "--gens", "-a,-a-b,-b", "--depth", "2"]).lines().count(), 6);
}
