//! Exit-code and output contract of the command-line front end.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_groupchain"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn invariants_text_and_json() {
    let o = run(&["invariants", "E8", "--char", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("l = 136"));
    assert!(text.contains("depth = 9"));

    let o = run(&["invariants", "E8", "--char", "2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "groupchain/v1");
    assert_eq!(v["length"], 136);
    assert_eq!(v["depth"]["lower"], 9);
    assert_eq!(v["depth"]["exact"], true);
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        ["invariants", "Q7", "--char", "0"],
        ["invariants", "A1", "--char", "6"],
        ["invariants", "A0", "--char", "0"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsupported_inputs_exit_4() {
    let o = run(&["chain", "1", "--char", "0", "--longest"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn table_commands_run() {
    for name in ["depth-lowrank", "depth-exceptional", "depth-char0"] {
        let o = run(&["table", name]);
        assert!(o.status.success(), "table {name}");
        assert!(!stdout(&o).is_empty());
    }
    let o = run(&["table", "depth-exceptional", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 29);
}

#[test]
fn chain_verify_roundtrip_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8.cert");
    let o = run(&[
        "chain",
        "E8",
        "--char",
        "2",
        "--shortest",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("length 9"));

    // Intact certificate verifies: exit 0.
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certified"));

    // Removing D8 leaves the refinable jump E8 > B4: exit 6.
    let text = std::fs::read_to_string(&path).unwrap();
    let refuted: String = text.lines().filter(|l| *l != "D8").collect::<Vec<_>>().join("\n") + "\n";
    let bad = dir.path().join("refuted.cert");
    std::fs::write(&bad, refuted).unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stdout(&o).contains("refuted"));

    // A step with no stored witness either way: exit 5.
    let unk = dir.path().join("unknown.cert");
    std::fs::write(
        &unk,
        "groupchain-cert v1\nchar 7\nE8\nG2\nA1^2\nA1\nU1 T1\nT1\n1\n",
    )
    .unwrap();
    let o = run(&["verify", unk.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("uncertifiable"));
}

#[test]
fn sweeps_hold() {
    let o = run(&["sweep", "cd-bound", "--max-rank", "6", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violated"].as_array().unwrap().len(), 0);

    let o = run(&[
        "sweep",
        "length-half-dim",
        "--samples",
        "500",
        "--seed",
        "11",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("violated: 0"));
}

#[test]
fn seeded_sweep_is_reproducible() {
    let a = stdout(&run(&["sweep", "length-half-dim", "--samples", "200", "--seed", "3", "--json"]));
    let b = stdout(&run(&["sweep", "length-half-dim", "--samples", "200", "--seed", "3", "--json"]));
    assert_eq!(a, b);
}
