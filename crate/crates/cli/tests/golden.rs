//! Byte-for-byte comparison of command output against files in
//! `tests/golden`. Set `UNIFLAG_UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str], i32)] = &[
    ("roots_a2", &["roots", "A2"], 0),
    ("roots_a2_json", &["roots", "A2", "--json"], 0),
    ("roots_e8_count", &["roots", "E8", "--count"], 0),
    ("roots_a1", &["roots", "A1"], 0),
    ("table1", &["table1"], 0),
    (
        "analyze_b3",
        &[
            "analyze",
            "--diagram",
            "B3",
            "--tag",
            "0,1,0",
            "--cdim",
            "7",
        ],
        0,
    ),
    (
        "analyze_b3_json",
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
        0,
    ),
    (
        "analyze_b3_rcc_json",
        &[
            "analyze",
            "--diagram",
            "B3",
            "--tag",
            "0,0,0",
            "--assume",
            "rcc",
            "--json",
        ],
        0,
    ),
    (
        "analyze_a1_rcc",
        &[
            "analyze",
            "--diagram",
            "A1",
            "--tag",
            "0",
            "--assume",
            "rcc",
        ],
        0,
    ),
    (
        "analyze_a1_rcc_json",
        &[
            "analyze",
            "--diagram",
            "A1",
            "--tag",
            "0",
            "--assume",
            "rcc",
            "--json",
        ],
        0,
    ),
    (
        "analyze_a1_cdim1",
        &["analyze", "--diagram", "A1", "--tag", "1", "--cdim", "1"],
        0,
    ),
    (
        "analyze_a1_cdim1_json",
        &[
            "analyze",
            "--diagram",
            "A1",
            "--tag",
            "1",
            "--cdim",
            "1",
            "--json",
        ],
        0,
    ),
    (
        "analyze_e7_reduced_json",
        &[
            "analyze",
            "--diagram",
            "E7",
            "--tag",
            "0,1,0,0,0,0,2",
            "--cdim",
            "3",
            "--json",
        ],
        0,
    ),
    ("split2tag_013", &["split2tag", "0,1,3"], 0),
    ("split2tag_555", &["split2tag", "5,5,5"], 0),
    ("tag2split_a3", &["tag2split", "A3", "1,1,2"], 0),
    ("order_a3", &["order", "A3", "--chain", "1;1,2"], 0),
    ("w0_a2", &["w0", "A2"], 0),
];

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_uniflag"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UNIFLAG_UPDATE_GOLDEN").is_some();
    for &(name, args, code) in CASES {
        let (status, first) = run(args);
        assert_eq!(status, code, "{name}: exit status");
        let (_, second) = run(args);
        assert_eq!(first, second, "{name}: output differs between runs");
        if update {
            std::fs::write(golden(name), &first).unwrap();
        }
        let expected = std::fs::read_to_string(golden(name)).unwrap();
        assert_eq!(first, expected, "{name}: differs from golden file");
    }
}

#[test]
fn verdicts_of_the_worked_examples() {
    let verdict = |args: &[&str]| {
        let mut full = args.to_vec();
        full.push("--json");
        let (status, out) = run(&full);
        assert_eq!(status, 0);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        doc["report"]["verdict"]["kind"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(
        verdict(&[
            "analyze",
            "--diagram",
            "B3",
            "--tag",
            "0,1,0",
            "--cdim",
            "7"
        ]),
        "diagonalizable"
    );
    assert_eq!(
        verdict(&[
            "analyze",
            "--diagram",
            "A1",
            "--tag",
            "0",
            "--assume",
            "rcc"
        ]),
        "trivial"
    );
    assert_eq!(
        verdict(&["analyze", "--diagram", "A1", "--tag", "1", "--cdim", "1"]),
        "inconclusive"
    );
}

#[test]
fn simple_outputs() {
    assert_eq!(run(&["roots", "A2"]).1.lines().count(), 3);
    assert_eq!(run(&["roots", "E8", "--count"]).1, "120\n");
    assert!(run(&["roots", "A1"]).1.starts_with("(1) ht=1"));
    assert!(run(&["split2tag", "0,1,3"]).1.contains("tag: 1,2\n"));
    assert!(run(&["split2tag", "5,5,5"]).1.contains("tag: 0,0\n"));
    assert!(run(&["tag2split", "A3", "1,1,2"]).1.contains(": 0,1,2,4\n"));
    let table = run(&["table1"]).1;
    assert!(table.contains("E8   (64,56,42,30,40,48,54,56)  ok"));
    assert!(table.contains("C4   (6,8,6,10)  ok"));
    assert!(table.contains("G2   (2,4)  ok"));
}
