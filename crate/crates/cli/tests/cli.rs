use std::process::{Command, Output};

use tilingkit::sequences::a;

fn tilingkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilingkit"))
        .args(args)
        .env_remove("TILINGKIT_ORACLE_CEILING")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = tilingkit(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn bfile_values(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_once(' ').unwrap().1.to_string())
        .collect()
}

#[test]
fn seq_examples() {
    assert_eq!(
        bfile_values(&stdout(&["seq", "a", "--r", "2", "--range", "0..5"])),
        ["1", "3", "9", "25", "66", "168"]
    );
    assert_eq!(
        bfile_values(&stdout(&["seq", "pell", "--range", "0..5"])),
        ["0", "1", "2", "5", "12", "29"]
    );
    assert_eq!(
        bfile_values(&stdout(&["seq", "m", "--r", "4", "--range", "0..9"])).join(" "),
        "1 1 4 4 13 13 38 38 104 104"
    );
}

#[test]
fn seq_negative_indices() {
    let out = stdout(&["seq", "negf", "--k", "3", "--range", "-9..1"]);
    assert_eq!(bfile_values(&out).join(" "), "-8 4 1 -3 2 0 -1 1 0 0 1");
    assert!(out.starts_with("-9 -8\n"));
}

#[test]
fn bfile_round_trips() {
    let out = stdout(&["seq", "a", "--r", "7", "--range", "0..40"]);
    for line in out.lines() {
        let (i, v) = line.split_once(' ').unwrap();
        let n: i64 = i.parse().unwrap();
        assert_eq!(v.parse::<num_bigint::BigInt>().unwrap(), a(7, n));
    }
    assert_eq!(out.lines().count(), 41);
}

#[test]
fn seq_formats() {
    let csv = stdout(&["seq", "pal", "--range", "6..7", "--format", "csv"]);
    assert_eq!(csv, "n,value\n6,8\n7,8\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "seq", "G", "--k", "2", "--range", "1..4", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["family"], "G");
    assert_eq!(json["params"]["k"], 2);
    assert_eq!(json["offset"], 1);
    assert_eq!(json["values"], serde_json::json!(["0", "1", "2", "4"]));
}

#[test]
fn every_family_is_listed() {
    let list = stdout(&["seq", "--list"]);
    for name in [
        "a", "as", "ak", "f", "fconv", "negf", "pell", "L", "Ep", "S", "G", "Gr", "CF", "Cb",
        "Chat", "Cmult", "R", "Rk", "E", "m", "pal", "palhat", "Ca", "runs",
    ] {
        assert!(
            list.lines().any(|l| l.starts_with(&format!("{name} n"))),
            "{name} missing"
        );
    }
}

#[test]
fn usage_errors_exit_2() {
    let out = tilingkit(&["seq", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tilingkit(&["seq", "as", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("as n --s <int> --r <int>"), "{err}");
    assert_eq!(
        tilingkit(&["seq", "a", "--r", "1", "--k", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tilingkit(&["seq", "a", "--r", "1", "--range", "5..2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(tilingkit(&["table", "T9"]).status.code(), Some(2));
    assert_eq!(
        tilingkit(&["table", "T1", "--format", "bfile"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tilingkit(&["verify", "--filter", "zzz*"]).status.code(),
        Some(2)
    );
}

#[test]
fn guard_refusal_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_tilingkit"))
        .args(["oracle", "tilings", "--r", "4", "--n", "6", "--count-only"])
        .env("TILINGKIT_ORACLE_CEILING", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn oracle_examples() {
    let listing = stdout(&["oracle", "tilings", "--r", "1", "--n", "2"]);
    assert_eq!(listing.lines().count(), 5);
    assert!(listing.lines().any(|l| l == "W1 R W1"));
    assert_eq!(
        stdout(&[
            "oracle",
            "palindromes",
            "--r",
            "2",
            "--n",
            "6",
            "--count-only"
        ]),
        "20\n"
    );
    assert_eq!(
        stdout(&[
            "oracle",
            "compositions",
            "--n",
            "4",
            "--forbid",
            "2",
            "--count-only"
        ]),
        "4\n"
    );
    let parts = stdout(&["oracle", "compositions", "--n", "5", "--parts", "1,2,5"]);
    assert_eq!(parts.lines().count(), 9);
}

#[test]
fn tables_are_stable() {
    for id in ["T1", "T_as2", "T_diag", "T_F3", "T_m"] {
        for format in ["pretty-table", "csv", "json"] {
            let first = stdout(&["table", id, "--format", format]);
            assert_eq!(first, stdout(&["table", id, "--format", format]));
        }
    }
    let diag = stdout(&["table", "t_diag"]);
    assert!(diag.contains("! (5, 1) printed 10 but computed 11"));
}

#[test]
fn verify_small_and_conjectures() {
    let out = tilingkit(&["verify", "--scale", "small"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert!(doc["records"].as_array().unwrap().len() > 40);

    let conj: serde_json::Value =
        serde_json::from_str(&stdout(&["conjecture", "--scale", "small"])).unwrap();
    let records = conj["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r["bound"] == 8));

    // The probe reports the cumulative closed form as failing.
    let out = tilingkit(&["conjecture", "--probe", "--max", "4", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(1));
}
