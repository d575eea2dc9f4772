use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uniflag"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["roots", "Q4"][..],
        &["roots", "D3"],
        &["w0", "A2+"],
        &["split2tag", "3,1"],
        &["split2tag", "0,x"],
        &["tag2split", "B3", "0,1,0"],
        &["tag2split", "A3", "1,1"],
        &["order", "A3", "--chain", "1,2;1"],
        &["order", "A3", "--chain", "4"],
        &["analyze", "--diagram", "A2", "--tag", "0"],
        &["analyze", "--diagram", "A2", "--tag", "0,1", "--cdim", "0"],
        &[
            "analyze",
            "--diagram",
            "A2",
            "--tag",
            "0,1",
            "--assume",
            "bogus",
        ],
        &["analyze"],
        &["frobnicate"],
    ] {
        let (code, stdout, stderr) = run(args, "");
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(stdout.is_empty(), "{args:?}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn request_errors_point_at_the_field() {
    let cases = [
        (r#"{"diagram": "A2", "tag": [0, -3]}"#, "`tag[1]`"),
        (r#"{"diagram": "X9", "tag": [0]}"#, "`diagram`"),
        (r#"{"diagram": "A2", "tag": [0, 1], "cdim": -1}"#, "`cdim`"),
        (
            r#"{"diagram": "A2", "tag": [0, 1], "hypotheses": ["rcc", "nope"]}"#,
            "`hypotheses[1]`",
        ),
        (r#"{"diagram": "A2"}"#, "`request`"),
        ("not json", "`request`"),
    ];
    for (doc, pointer) in cases {
        let (code, _, stderr) = run(&["analyze", "--request", "-"], doc);
        assert_eq!(code, 2, "{doc}");
        assert!(stderr.contains(pointer), "{doc}: {stderr}");
    }
}

#[test]
fn request_file_matches_inline_flags() {
    let doc = r#"{"diagram": "B3", "tag": [0, 1, 0], "cdim": 7}"#;
    let (code, from_file, _) = run(&["analyze", "--request", "-", "--json"], doc);
    assert_eq!(code, 0);
    let (_, inline, _) = run(
        &[
            "analyze",
            "--diagram",
            "B3",
            "--tag",
            "0,1,0",
            "--cdim",
            "7",
            "--json",
        ],
        "",
    );
    assert_eq!(from_file, inline);
}

#[test]
fn explicit_hypotheses_in_a_request_replace_the_defaults() {
    let doc = r#"{"diagram": "A2", "tag": [1, 2], "cdim": 2, "hypotheses": []}"#;
    let (code, out, _) = run(&["analyze", "--request", "-", "--json"], doc);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["verdict"]["kind"], "inconclusive");
    assert_eq!(
        v["report"]["trace"][0]["criterion"],
        "insufficient-hypotheses"
    );
}

#[test]
fn denied_hypotheses_block_the_criteria() {
    let (code, out, _) = run(
        &[
            "analyze",
            "--diagram",
            "A2",
            "--tag",
            "1,2",
            "--cdim",
            "2",
            "--deny",
            "fano",
            "--json",
        ],
        "",
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["conditional_on"]["fano_picard_one"], false);
    assert_eq!(v["report"]["verdict"]["kind"], "inconclusive");
}
