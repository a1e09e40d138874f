use std::process::{Command, Output};

use clap::Parser;
use sigperm_cli::verify::{verify, verify_with};
use sigperm_cli::{run, Cli, Outcome, Report};
use sigperm_core::gentree::SuccessionRule;
use sigperm_core::{TreeLabel, TreePattern};

/// Runs the binary on a whitespace-separated argument line.
fn sigperm(line: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigperm"))
        .args(line.split_whitespace())
        .env_remove("SIGPERM_THREADS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn counts(report: &Report) -> Vec<(usize, Option<usize>, String)> {
    report
        .rows
        .iter()
        .map(|r| (r.n, r.j, r.count.clone()))
        .collect()
}

fn json_report(line: &str) -> Report {
    let o = sigperm(line);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    Report::from_json(&stdout(&o)).unwrap()
}

#[test]
fn count_row_for_n_two() {
    let r = json_report("count --n 2 --pattern 1234 --format json");
    let s = |v: &str| v.to_string();
    assert_eq!(
        counts(&r),
        [
            (2, Some(0), s("2")),
            (2, Some(1), s("4")),
            (2, Some(2), s("1")),
            (2, None, s("7"))
        ]
    );
    assert_eq!(r.manifest.patterns, ["1234"]);
    assert_eq!(r.manifest.methods, ["brute"]);

    let human = stdout(&sigperm("count --n 2 --pattern 1234"));
    assert!(human.contains("total      7"), "{human}");
}

#[test]
fn every_method_gives_the_same_row() {
    for pattern in ["1234", "2143"] {
        let rows: Vec<_> = ["brute", "tree", "gf"]
            .iter()
            .map(|m| {
                counts(&json_report(&format!(
                    "count --n 5 --pattern {pattern} --method {m} --format json"
                )))
            })
            .collect();
        assert_eq!(rows[0], rows[1]);
        assert_eq!(rows[0], rows[2]);
    }
}

#[test]
fn formula_total() {
    let r = json_report("count --n 6 --pattern 1234 --method formula --format json");
    assert_eq!(counts(&r), [(6, None, "7281".to_string())]);
}

#[test]
fn single_slice() {
    let r = json_report("count --n 3 --j 3 --pattern 2143 --method gf --format json");
    assert_eq!(counts(&r), [(3, Some(3), "1".to_string())]);
}

#[test]
fn unsupported_combinations_are_usage_errors() {
    for line in [
        "count --n 3 --pattern 2143 --method formula",
        "count --n 3 --j 1 --pattern 1234 --method formula",
        "count --n 3 --pattern 12345 --method tree",
        "count --n 3 --pattern 132 --method gf",
        "count --n 3 --j 4 --pattern 1234",
        "count --n 3 --pattern 1134",
        "count --n 3 --pattern 1234 --method magic",
        "verify --max-n 0",
        "gf --pattern 1234 --k 0 --q 1 --gamma 3,1",
        "tree --pattern 2143 --depth 9",
    ] {
        let o = sigperm(line);
        assert_eq!(o.status.code(), Some(2), "{line}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    let text = stdout(&sigperm(
        "count --n 4 --pattern 2143 --method tree --format json",
    ));
    let parsed = Report::from_json(&text).unwrap();
    assert_eq!(parsed.to_json().unwrap(), text);
}

#[test]
fn csv_output() {
    let text = stdout(&sigperm("count --n 2 --pattern 1234 --format csv"));
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# {\"command\""));
    let rest: Vec<&str> = lines.collect();
    assert_eq!(
        rest,
        [
            "n,j,pattern,method,count",
            "2,0,1234,brute,2",
            "2,1,1234,brute,4",
            "2,2,1234,brute,1",
            "2,,1234,brute,7"
        ]
    );
}

#[test]
fn payload_does_not_depend_on_workers() {
    let one = json_report("count --n 6 --pattern 21354 --format json --threads 1");
    let four = json_report("count --n 6 --pattern 21354 --format json --threads 4");
    assert_eq!(one.rows, four.rows);
    assert_eq!(four.manifest.threads, 4);

    let o = Command::new(env!("CARGO_BIN_EXE_sigperm"))
        .args(["count", "--n", "3", "--pattern", "1234", "--format", "json"])
        .env("SIGPERM_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(Report::from_json(&stdout(&o)).unwrap().manifest.threads, 3);
}

#[test]
fn verify_passes() {
    for n in ["1", "4"] {
        let o = sigperm(&format!("verify --max-n {n}"));
        assert_eq!(o.status.code(), Some(0));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

/// The 2143 rule with one successor label replaced.
struct Flipped;

impl SuccessionRule for Flipped {
    fn successors(&self, label: TreeLabel) -> Vec<TreeLabel> {
        let mut out = TreePattern::P2143.successors(label);
        if label == TreeLabel::new(2, 3, 1) {
            out[0] = TreeLabel::new(2, 2, 1);
        }
        out
    }
}

#[test]
fn verify_names_an_injected_fault() {
    assert!(verify(4).iter().all(|c| c.passed));
    let checks = verify_with(4, &TreePattern::P1234, &Flipped);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, "brute = tree = gf for 2143");
    assert!(failed[0].detail.contains("brute"), "{}", failed[0].detail);
}

#[test]
fn conjecture_runs() {
    let o = sigperm("conjecture --max-n 4 --p1 12345 --p2 21354");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree for all j <= n <= 4"));

    let o = sigperm("conjecture --max-n 5 --p1 1234 --p2 2143");
    assert_eq!(o.status.code(), Some(0));

    let o = sigperm("conjecture --max-n 4 --p1 1234 --p2 1324");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first discrepancy at n="));
}

#[test]
fn conjecture_guard() {
    let o = sigperm("conjecture --max-n 7");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(
        err.contains("695483") && err.contains("--allow-long"),
        "{err}"
    );

    let o = sigperm("conjecture --max-n 3 --guard 2 --allow-long");
    assert_eq!(o.status.code(), Some(0));

    let o = sigperm("conjecture --max-n 3 --p1 123 --p2 2143");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gf_examples() {
    let o = sigperm("gf --pattern 2143 --k 2 --q 1 --gamma 3 --degree 4");
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(text.contains("1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4\n"), "{text}");
    assert!(text.contains(r#"["1","2","3","4","5"]"#));
    assert!(text.contains("paths agree"));

    let o = sigperm("gf --pattern 1234 --k 0 --q 1 --gamma 1,2 --degree 3");
    let text = stdout(&o);
    assert!(text.lines().nth(1) == Some("1"), "{text}");
    assert!(text.contains(r#"["1","0","0","0"]"#));

    let o = sigperm("gf --pattern 1234 --k 1 --q 3 --gamma 4,3,4,2 --degree 5");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("paths agree"));
}

#[test]
fn tree_dump() {
    let o = sigperm("tree --pattern 2143 --j 2 --depth 1");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["perm"], "[-2,-1]");
    assert_eq!(v["label"], serde_json::json!([3, 3, 3]));
    assert_eq!(v["children"].as_array().unwrap().len(), 9);
}

#[test]
fn library_entry_point() {
    let cli = Cli::parse_from([
        "sigperm",
        "--threads",
        "2",
        "count",
        "--n",
        "1",
        "--pattern",
        "2143",
    ]);
    let out = run(&cli).unwrap();
    assert_eq!(out.outcome, Outcome::Pass);
    assert!(out.stdout.contains("pattern 2143 (brute)"));
}
