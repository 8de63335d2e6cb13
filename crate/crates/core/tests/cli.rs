use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use hypermatch::cli::run;
use hypermatch::constructions::{binom2, h12_block_degrees};
use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hypermatch").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let o = cli(&full);
    (
        o.code,
        serde_json::from_str(&o.stdout).expect("report is JSON"),
    )
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("schemas/{name}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(name: &str, report: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn construct(dir: &Path, args: &[&str]) -> PathBuf {
    let path = dir.join(format!("{}.txt", args.join("_").replace("--", "")));
    let mut full = vec!["construct"];
    full.extend(args);
    full.extend(["-o", path.to_str().unwrap()]);
    assert_eq!(cli(&full).code, 0);
    path
}

fn block_degrees(stats: &Value) -> Vec<(String, u64, u64)> {
    stats["result"]["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|b| b["len"].as_u64().unwrap() > 0)
        .map(|b| {
            (
                b["name"].as_str().unwrap().to_string(),
                b["min_degree"].as_u64().unwrap(),
                b["max_degree"].as_u64().unwrap(),
            )
        })
        .collect()
}

/// Degrees of an `S` and a `T` vertex of `H^l_{n,s}`.
fn h_ell_degrees(n: i64, s: i64, ell: i64) -> (i64, i64) {
    let t = s * ell - 1;
    match ell {
        1 => (binom2(n - 1) - binom2(n - 1 - t), binom2(n - 1)),
        2 => (binom2(t), binom2(n - 1) - binom2(n - t)),
        _ => (0, binom2(t - 1)),
    }
}

#[test]
fn construct_then_stats_matches_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    for (n, x, y) in [(15, 3, 1), (21, 4, 2), (30, 6, 3), (12, 1, 2)] {
        let f = construct(
            dir.path(),
            &[
                "h12",
                "--n",
                &n.to_string(),
                "--x",
                &x.to_string(),
                "--y",
                &y.to_string(),
            ],
        );
        let (code, r) = json(&["stats", f.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_valid("stats", &r);
        let (dr, ds, dt) = h12_block_degrees(n, x, y).unwrap();
        let want: Vec<(String, u64, u64)> = [("R", dr), ("S", ds), ("T", dt)]
            .iter()
            .filter(|(name, _)| match *name {
                "R" => x > 0,
                "S" => n > 3 * x + y,
                _ => 2 * x + y > 0,
            })
            .map(|&(name, d)| (name.to_string(), d as u64, d as u64))
            .collect();
        assert_eq!(block_degrees(&r), want, "h12 {n} {x} {y}");
    }
    for (family, ell) in [("h1", 1), ("h2", 2), ("h3", 3)] {
        for (n, s) in [(12, 3), (15, 4), (18, 2)] {
            let f = construct(
                dir.path(),
                &[family, "--n", &n.to_string(), "--s", &s.to_string()],
            );
            let (_, r) = json(&["stats", f.to_str().unwrap()]);
            let (ds, dt) = h_ell_degrees(n, s, ell);
            let want = vec![
                ("S".to_string(), ds as u64, ds as u64),
                ("T".to_string(), dt as u64, dt as u64),
            ];
            assert_eq!(block_degrees(&r), want, "{family} {n} {s}");
        }
    }
}

#[test]
fn construct_output_format() {
    let o = cli(&["construct", "h12", "--n", "15", "--x", "3", "--y", "1"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(
        &lines[..5],
        [
            "# H^{1,2}_{15,3,1}",
            "# block R: 0..2",
            "# block S: 3..7",
            "# block T: 8..14",
            "15 273"
        ]
    );
    assert_eq!(lines.len(), 5 + 273);
}

#[test]
fn human_stats_output() {
    let dir = tempfile::tempdir().unwrap();
    let f = construct(dir.path(), &["h12", "--n", "15", "--x", "3", "--y", "1"]);
    let o = cli(&["inspect", f.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    for line in [
        "n       15",
        "m       273",
        "delta1  21",
        "sigma2  94",
        "alpha   4",
    ] {
        assert!(o.stdout.contains(line), "{line}");
    }
}

#[test]
fn match_exit_codes_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let f = construct(dir.path(), &["h12", "--n", "15", "--x", "3", "--y", "1"]);
    let f = f.to_str().unwrap();
    let o = cli(&["match", f, "--perfect"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("no perfect matching"));
    let o = cli(&["match", f, "--max"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().filter(|l| l.starts_with("M: ")).count(), 4);
    let (code, r) = json(&["match", f, "--max"]);
    assert_eq!(code, 0);
    assert_valid("match", &r);
    assert_eq!(r["result"]["matching"]["size"], 4);

    let k6 = dir.path().join("k6.txt");
    std::fs::write(&k6, "6 2\n0 1 2\n5 4 3\n").unwrap();
    let o = cli(&["match", k6.to_str().unwrap(), "--perfect"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "M: 0 1 2\nM: 3 4 5\n");
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4 1\n0 1 7\n").unwrap();
    let seven = dir.path().join("seven.txt");
    std::fs::write(&seven, "7 1\n0 1 2\n").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["construct", "h12", "--n", "15", "--x", "3"],
        vec!["construct", "h12", "--n", "15", "--x", "5", "--y", "1"],
        vec!["stats", "/nonexistent/graph.txt"],
        vec!["stats", bad.to_str().unwrap()],
        vec!["match", seven.to_str().unwrap(), "--perfect"],
        vec!["match", seven.to_str().unwrap()],
        vec!["sweep", "--n", "16"],
        vec!["certify", "--n", "6"],
        vec!["verify-lemma", "--id", "nope"],
        vec!["verify-lemma", "--id", "kpartite-16", "--samples", "10"],
        vec![
            "verify-lemma",
            "--id",
            "intersect-6n",
            "--n",
            "7",
            "--exhaustive",
        ],
    ];
    for args in cases {
        let o = cli(&args);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn version_and_help() {
    let o = cli(&["--version"]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout.trim(),
        format!("hypermatch {}", env!("CARGO_PKG_VERSION"))
    );
    let o = cli(&["--help"]);
    assert_eq!(o.code, 0);
    for sub in [
        "construct",
        "stats",
        "match",
        "sweep",
        "certify",
        "verify-lemma",
        "absorb",
    ] {
        assert!(o.stdout.contains(sub), "{sub}");
    }
}

#[test]
fn sweep_csv_and_json() {
    let o = cli(&["sweep", "--n", "15"]);
    assert_eq!(o.code, 0);
    let mut lines = o.stdout.lines();
    assert_eq!(lines.next(), Some("x,y,sigma2,two_f1,f2,is_max"));
    assert!(lines.any(|l| l == "3,1,94,98,94,true"));
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    assert_eq!(
        cli(&["sweep", "--n", "15", "--csv", csv.to_str().unwrap()]).code,
        0
    );
    assert_eq!(std::fs::read_to_string(csv).unwrap(), o.stdout);
    let (code, r) = json(&["sweep", "--n", "30"]);
    assert_eq!(code, 0);
    assert_valid("sweep", &r);
    assert_eq!(r["result"]["sweep"]["max"], r["result"]["closed_form_max"]);
}

#[test]
fn certify_reports() {
    let (code, r) = json(&["certify", "--n", "15"]);
    assert_eq!(code, 0);
    assert_valid("certify", &r);
    let res = &r["result"];
    assert_eq!(res["sigma2"], 94);
    assert_eq!(res["threshold"], 92);
    assert_eq!(res["max_matching"], 4);
    assert_eq!(res["independence_number"], 4);
    assert_eq!(res["all_conditions_hold"], true);
    let (code, r) = json(&["certify", "--n", "12"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["sigma2_exceeds_threshold"], false);
}

#[test]
fn verify_lemma_reports() {
    let (code, r) = json(&["verify-lemma", "--id", "kpartite-16", "--exhaustive"]);
    assert_eq!(code, 0);
    assert_valid("verify-lemma", &r);
    assert_eq!(r["seed"], Value::Null);
    assert_eq!(r["result"]["universe_size"], 1_048_576);
    assert_eq!(r["result"]["bound"], 16);
    assert_eq!(r["result"]["counterexamples"].as_array().unwrap().len(), 0);
    let (_, r) = json(&["verify-lemma", "--id", "bipartite-fact"]);
    assert_valid("verify-lemma", &r);
    assert_eq!(r["result"]["classes"].as_array().unwrap().len(), 3);
    let o = cli(&["verify-lemma", "--id", "ab-6a", "--a", "2", "--b", "1"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verdict          holds"));
    assert!(o.stderr.contains("verifying ab-6a"));
}

#[test]
fn randomized_payloads_reproduce_by_seed() {
    let args = [
        "verify-lemma",
        "--id",
        "intersect-3n",
        "--n",
        "7",
        "--samples",
        "5000",
        "--seed",
        "42",
    ];
    let (_, a) = json(&args);
    let (_, b) = json(&args);
    assert_valid("verify-lemma", &a);
    assert_eq!(a["seed"], 42);
    assert_eq!(a["result"].to_string(), b["result"].to_string());
    assert_eq!(a["parameters"], b["parameters"]);

    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.txt");
    let k = hypermatch::io::write_edge_list(&hypermatch::Hypergraph3::complete(45));
    std::fs::write(&host, k).unwrap();
    let args = [
        "absorb",
        "--graph",
        host.to_str().unwrap(),
        "--samples",
        "6",
        "--seed",
        "7",
    ];
    let (code, a) = json(&args);
    let (_, b) = json(&args);
    assert_eq!(code, 0);
    assert_valid("absorb", &a);
    assert_eq!(a["result"].to_string(), b["result"].to_string());
    assert_eq!(a["result"]["demo"]["success"], true);
}

#[test]
fn threads_flag_does_not_change_results() {
    let one = json(&[
        "--threads",
        "1",
        "verify-lemma",
        "--id",
        "intersect-6n",
        "--n",
        "6",
        "--samples",
        "8192",
    ])
    .1;
    let four = json(&[
        "--threads",
        "4",
        "verify-lemma",
        "--id",
        "intersect-6n",
        "--n",
        "6",
        "--samples",
        "8192",
    ])
    .1;
    assert_eq!(one["result"], four["result"]);
}

#[test]
fn binary_pipes_construct_into_stats() {
    let bin = env!("CARGO_BIN_EXE_hypermatch");
    let built = Command::new(bin)
        .args(["construct", "h2", "--n", "15", "--s", "5"])
        .output()
        .unwrap();
    assert!(built.status.success());
    let mut child = Command::new(bin)
        .args(["stats", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&built.stdout)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sigma2  112"), "{text}");
    let status = Command::new(bin)
        .arg("bogus")
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}
