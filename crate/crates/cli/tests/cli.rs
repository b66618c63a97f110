use std::path::PathBuf;
use std::process::Command;

use codecalc::output::{CodeRecord, FailureRecord, ReportRecord, SignedRecord, TermRecord};
use codecalc_core::enumerate::{compositions, partitions, strict_partitions};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_codecalc"));
    cmd.env_remove("CODECALC_FORMAT");
    cmd
}

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/golden.jsonl")
}

/// Runs in-process; returns exit status and stdout.
fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("codecalc").chain(args.iter().copied());
    let code = codecalc::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    out
}

fn json(args: &[&str]) -> String {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    ok(&full)
}

fn text(args: &[&str]) -> String {
    let mut full = vec!["--format", "text"];
    full.extend_from_slice(args);
    ok(&full)
}

fn status(cmd: &mut Command) -> i32 {
    cmd.output().unwrap().status.code().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["straighten", "--algebra", "b", "1,3,1,6,2"]), "+1 * B[3,3,3,2,2]\n");
    assert_eq!(ok(&["act", "--algebra", "q", "-n", "2", "--index", "3"]), "-1 * Q[3,2]\n");
    assert_eq!(ok(&["code", "--shifted", "--index", "4,2,1"]), "UURU\n");
    assert_eq!(ok(&["code", "--index", "2,3,1,4"]), "RRRRULLLURRULU\n");
    assert_eq!(ok(&["code", "--decode", "RURUURRU"]), "4,2,2,1\n");
    assert_eq!(ok(&["code", "--preshifted", "--index", "2,3,1"]), "...ULULUURULLU\n");
    assert_eq!(ok(&["straighten", "--algebra", "q", "--method", "all", "1,3,2"]), "+1 * Y[3,2,1]\n");
    assert_eq!(ok(&["straighten", "--method", "oracle", "2,3"]), "0\n");
    assert_eq!(ok(&["act", "-n", "-3", "--index", "2"]), "0\n");
}

#[test]
fn exit_status_contract() {
    assert_eq!(status(bin().args(["straighten", "1,3"])), 0);
    assert_eq!(status(bin().arg("--help")), 0);
    assert_eq!(status(bin().arg("--version")), 0);
    // Usage errors.
    assert_eq!(status(bin().arg("frobnicate")), 1);
    assert_eq!(status(bin().args(["straighten", "--method", "perm", "1,3"])), 1);
    assert_eq!(status(bin().args(["straighten", "--algebra", "q", "--method", "oracle", "1,3"])), 1);
    assert_eq!(status(bin().args(["verify", "--suite", "nope"])), 1);
    assert_eq!(status(bin().args(["verify", "--suite", "corpus"])), 1);
    assert_eq!(status(bin().args(["code"])), 1);
    // Parse and domain errors.
    assert_eq!(status(bin().args(["straighten", "1,x"])), 1);
    assert_eq!(status(bin().args(["straighten", "1,-3"])), 1);
    assert_eq!(status(bin().args(["act", "--algebra", "q", "-n", "-1", "--index", "2"])), 1);
    assert_eq!(status(bin().args(["act", "--index", "1,2", "-n", "0"])), 1);
    assert_eq!(status(bin().args(["code", "--shifted", "--index", "2,0"])), 1);
    assert_eq!(status(bin().args(["code", "--decode", "LU"])), 1);
}

#[test]
fn verification_failures_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("codecalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("bad.jsonl");
    std::fs::write(
        &corpus,
        "{\"op\":\"encode_code\",\"args\":{\"index\":[4,2,2,1]},\"expected\":\"RURUURRU\"}\n\
         {\"op\":\"straighten_b\",\"args\":{\"index\":[1,3]},\"expected\":{\"sign\":1,\"index\":[2,2]}}\n",
    )
    .unwrap();
    let report = dir.join("failures.jsonl");
    let out = bin()
        .args(["verify", "--suite", "corpus", "--file"])
        .arg(&corpus)
        .arg("--output")
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "corpus: 2 cases, 1 failures\n");
    let lines = std::fs::read_to_string(&report).unwrap();
    let failures: Vec<FailureRecord> = lines.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0].suite, "corpus");
    assert_eq!(failures[0].got, r#"{"index":[2,2],"sign":-1}"#);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn golden_corpus_replays_cleanly() {
    let out = bin()
        .args(["verify", "--suite", "corpus", "--file"])
        .arg(corpus_path())
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{stdout}");
    assert!(stdout.starts_with("corpus: "), "{stdout}");
    assert!(stdout.ends_with(" 0 failures\n"), "{stdout}");
}

#[test]
fn verify_suites_pass_at_smoke_bounds() {
    for suite in ["codes", "bernstein", "qvertex", "shifted", "oracle", "all"] {
        let out = ok(&["verify", "--suite", suite, "--max-part", "3", "--max-len", "3", "--max-size", "6"]);
        assert!(out.ends_with(" 0 failures\n"), "{suite}: {out}");
    }
    let seq = ok(&["verify", "--suite", "codes", "--max-part", "3", "--max-len", "3", "--sequential"]);
    let par = ok(&["verify", "--suite", "codes", "--max-part", "3", "--max-len", "3"]);
    assert_eq!(seq, par);
}

#[test]
fn environment_sets_default_format_and_flag_overrides_it() {
    let out = bin().env("CODECALC_FORMAT", "json").args(["straighten", "1,3"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"sign\":-1,\"index\":[2,2]}\n");
    let out = bin()
        .env("CODECALC_FORMAT", "json")
        .args(["--format", "text", "straighten", "1,3"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-1 * B[2,2]\n");
    assert_eq!(status(bin().env("CODECALC_FORMAT", "yaml").args(["straighten", "1,3"])), 1);
}

fn reserialize<T: serde::de::DeserializeOwned + serde::Serialize>(line: &str) -> String {
    let value: T = serde_json::from_str(line).unwrap();
    serde_json::to_string(&value).unwrap()
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    let signed = [
        json(&["straighten", "--trace", "1,3,1,6,2"]),
        json(&["straighten", "2,3"]),
        json(&["straighten", "--algebra", "q", "--method", "shifted", "--trace", "2,3,1"]),
        json(&["act", "-n", "1", "--index", "3,1"]),
        json(&["act", "--algebra", "q", "-n", "0", "--index", "2,1"]),
    ];
    for out in &signed {
        for line in out.lines() {
            assert_eq!(reserialize::<SignedRecord>(line), line);
        }
    }
    let series = [
        json(&["series", "--index", "2,1", "--i-max", "8"]),
        json(&["series", "--algebra", "q", "--index", "4,1", "--n-max", "7"]),
        json(&["series", "--algebra", "q", "--form", "i", "--index", "4,1", "--i-max", "7"]),
    ];
    for out in &series {
        for line in out.lines() {
            assert_eq!(reserialize::<TermRecord>(line), line);
        }
    }
    let line = json(&["code", "--index", "2,3,1,4"]);
    assert_eq!(reserialize::<CodeRecord>(line.trim_end()), line.trim_end());
    let line = json(&["verify", "--suite", "shifted", "--max-part", "2", "--max-len", "2"]);
    let record: ReportRecord = serde_json::from_str(line.trim_end()).unwrap();
    assert_eq!(record.failures, 0);
    assert_eq!(reserialize::<ReportRecord>(line.trim_end()), line.trim_end());
}

fn same_signed(args: &[&str]) {
    let t = SignedRecord::from_text(text(args).trim_end()).unwrap();
    let j: SignedRecord = serde_json::from_str(json(args).trim_end()).unwrap();
    assert_eq!(t, j, "{args:?}");
}

#[test]
fn text_and_json_agree_on_straightening() {
    for mu in compositions(0, 4, 4) {
        let index = mu.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        for method in ["code", "reading", "oracle", "all"] {
            same_signed(&["straighten", "--method", method, &index]);
        }
        same_signed(&["straighten", "--trace", &index]);
        same_signed(&["straighten", "--algebra", "q", "--method", "perm", &index]);
        same_signed(&["straighten", "--algebra", "q", "--trace", &index]);
    }
}

#[test]
fn text_and_json_agree_on_actions() {
    for lambda in partitions(6) {
        let index = lambda.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        for n in -3..=6 {
            same_signed(&["act", "-n", &n.to_string(), "--index", &index]);
        }
    }
    for lambda in strict_partitions(5) {
        let index = lambda.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        for n in 0..=6 {
            same_signed(&["act", "--algebra", "q", "-n", &n.to_string(), "--index", &index]);
        }
    }
}

#[test]
fn text_and_json_agree_on_series() {
    let cases: [&[&str]; 4] = [
        &["series", "--index", "3,1,1", "--i-max", "12"],
        &["series", "--index", "2", "--t-max", "4"],
        &["series", "--algebra", "q", "--index", "5,2", "--n-max", "9"],
        &["series", "--algebra", "q", "--form", "i", "--index", "5,2", "--i-max", "9"],
    ];
    for args in cases {
        let t = text(args);
        let j = json(args);
        assert_eq!(t.lines().count(), j.lines().count());
        for (tl, jl) in t.lines().zip(j.lines()) {
            let parsed = TermRecord::parse_text(tl).unwrap();
            let record: TermRecord = serde_json::from_str(jl).unwrap();
            assert_eq!(parsed.i, record.i);
            assert_eq!(parsed.j, record.j);
            assert_eq!(parsed.t_exp, record.t_exp);
            assert_eq!(parsed.sign, if record.sign_exp % 2 == 0 { 1 } else { -1 });
            assert_eq!(parsed.symbol, record.symbol());
            assert_eq!(parsed.index, record.index);
        }
    }
}

#[test]
fn text_and_json_agree_on_codes() {
    for mu in compositions(1, 3, 3) {
        let index = mu.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        for flag in [None, Some("--shifted"), Some("--preshifted")] {
            let mut args = vec!["code", "--index", &index];
            args.extend(flag);
            let record: CodeRecord = serde_json::from_str(json(&args).trim_end()).unwrap();
            assert_eq!(text(&args).trim_end(), record.code);
            assert_eq!(record.index, mu.parts());
        }
    }
}
