use std::io::Write;
use std::process::{Command, Output, Stdio};

const THREE: &str = "candidates: a b c\na\na b\nb c\n";

fn satvote(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_satvote"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn winners_machine_record() {
    let out = satvote(
        &[
            "winners", "--rule", "sav", "--k", "1", "--format", "machine",
        ],
        THREE,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("committee=a\n"), "{text}");
    assert!(text.contains("score_num=3\nscore_den=2\n"), "{text}");
}

#[test]
fn winners_reads_a_file_argument() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(THREE.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let out = satvote(
        &[
            "winners", "--rule", "msav", "--k", "2", "--format", "machine", path,
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("committee=a,b\n"));
}

#[test]
fn enumerate_all_lists_every_tied_committee() {
    let out = satvote(
        &[
            "winners", "--rule", "av", "--k", "1", "--ties", "all", "--format", "machine",
        ],
        THREE,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("committees=2\ncommittee=a\ncommittee=b\n"));

    let capped = satvote(
        &[
            "winners",
            "--rule",
            "av",
            "--k",
            "1",
            "--ties",
            "all",
            "--max-enumerate",
            "1",
            "--format",
            "machine",
        ],
        THREE,
    );
    assert!(stdout(&capped).contains("truncated=true\ncommittees=1\ncommittee=a\n"));

    let zero = satvote(
        &[
            "winners",
            "--rule",
            "av",
            "--k",
            "1",
            "--ties",
            "all",
            "--max-enumerate",
            "0",
        ],
        THREE,
    );
    assert_eq!(zero.status.code(), Some(1));
}

#[test]
fn any_size_sav_reports_the_full_roster() {
    let out = satvote(
        &[
            "winners",
            "--rule",
            "sav",
            "--any-size",
            "--format",
            "machine",
        ],
        THREE,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("k=3\n") && text.contains("committee=a,b,c\n"),
        "{text}"
    );
    assert!(text.contains("score_num=3\nscore_den=1\n"), "{text}");
}

#[test]
fn oversized_committee_is_a_usage_error() {
    let out = satvote(&["winners", "--rule", "sav", "--k", "5"], THREE);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("k=5") && err.contains("m=3"), "{err}");
    assert_eq!(err.lines().count(), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_name_the_line() {
    let out = satvote(
        &["winners", "--rule", "av", "--k", "1"],
        "candidates: a b\na x\n",
    );
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("line 2") && err.contains("\"x\""), "{err}");
}

#[test]
fn usage_errors_exit_one_with_one_line() {
    for args in [
        &["winners", "--rule", "av"][..],
        &["winners", "--rule", "av", "--k", "1", "--any-size"],
        &["winners", "--rule", "pav", "--k", "1"],
        &["winners", "--rule", "av", "--k", "1", "--bogus"],
        &["score", "--rule", "av"],
        &["gen", "--m", "3", "--n", "2", "--p", "1.5", "--seed", "0"],
        &["frobnicate"],
    ] {
        let out = satvote(args, THREE);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert_eq!(
            stderr(&out).lines().count(),
            1,
            "{args:?}: {}",
            stderr(&out)
        );
    }
}

#[test]
fn score_table_and_committee_score() {
    let out = satvote(&["score", "--rule", "sav", "--k", "1"], THREE);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("* a  3/2"), "{text}");
    assert!(rows[1].starts_with("  b  1/1"), "{text}");
    assert!(rows[2].starts_with("  c  1/2"), "{text}");

    let out = satvote(&["score", "--rule", "csav", "--committee", "b,a"], THREE);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("score: 2/1"), "{}", stdout(&out));
}

#[test]
fn check_agrees_on_generated_profiles() {
    let generated = satvote(
        &["gen", "--m", "8", "--n", "15", "--p", "0.4", "--seed", "11"],
        "",
    );
    assert_eq!(generated.status.code(), Some(0));
    let doc = stdout(&generated);
    for rule in ["av", "sav", "csav", "msav"] {
        let out = satvote(&["check", "--rule", rule, "--any-size"], &doc);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).starts_with("agree:"));
        let out = satvote(&["check", "--rule", rule, "--k", "3"], &doc);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
}

#[test]
fn check_refuses_huge_rosters() {
    let doc = stdout(&satvote(
        &["gen", "--m", "21", "--n", "2", "--p", "0.5", "--seed", "0"],
        "",
    ));
    let out = satvote(&["check", "--rule", "av", "--any-size"], &doc);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("exceeds"));
}

#[test]
fn gen_output_is_a_ballot_document() {
    let out = satvote(
        &["gen", "--m", "3", "--n", "5", "--p", "1", "--seed", "9"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "candidates: c0 c1 c2\n".to_string() + &"c0 c1 c2\n".repeat(5)
    );
}

#[test]
fn help_exits_zero() {
    let out = satvote(&["--help"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("winners"));
}
