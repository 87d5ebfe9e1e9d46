use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn netmend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netmend"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// `(cost, terminal, connected)` from the trace's RESULT row.
fn result_row(trace: &str) -> (usize, usize, bool) {
    let row = trace
        .lines()
        .find(|l| l.starts_with("RESULT,"))
        .expect("RESULT row");
    let f: Vec<&str> = row.split(',').collect();
    (
        f[1].parse().unwrap(),
        f[2].parse().unwrap(),
        f[3].parse().unwrap(),
    )
}

#[test]
fn demo_on_the_line_graph() {
    let path = fixture("fig4_path7");
    for seed in 0..20 {
        let s = seed.to_string();
        let o = netmend(&[
            "demo",
            path.to_str().unwrap(),
            "--remove",
            "v0",
            "--strategy",
            "dmps",
            "--delta",
            "1",
            "--seed",
            &s,
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        let (cost, terminal, connected) = result_row(&stdout(&o));
        assert!(connected);
        assert!(
            matches!((cost, terminal), (2, 2) | (4, 6)),
            "cost {cost} terminal {terminal}"
        );
    }
}

#[test]
fn demo_trivial_departures() {
    let o = netmend(&[
        "demo",
        fixture("p3").to_str().unwrap(),
        "--remove",
        "a",
        "--strategy",
        "mps",
    ]);
    assert!(o.status.success());
    assert_eq!(result_row(&stdout(&o)), (0, 0, true));

    let o = netmend(&[
        "demo",
        fixture("c6").to_str().unwrap(),
        "--remove",
        "v0",
        "--strategy",
        "central",
    ]);
    assert!(o.status.success());
    assert_eq!(result_row(&stdout(&o)), (0, 0, true));
}

#[test]
fn demo_trace_layout() {
    let o = netmend(&[
        "demo",
        fixture("fig2").to_str().unwrap(),
        "--remove",
        "0",
        "--strategy",
        "mps",
        "--seed",
        "3",
    ]);
    let out = stdout(&o);
    assert!(out.starts_with("step,holder,message_so_far,candidates,chosen\n"));
    let (cost, _, connected) = result_row(&out);
    assert_eq!(cost, 2);
    assert!(connected);
}

#[test]
fn demo_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad");
    std::fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    let o = netmend(&["demo", bad.to_str().unwrap(), "--remove", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = netmend(&["demo", fixture("p3").to_str().unwrap(), "--remove", "v9"]);
    assert_eq!(o.status.code(), Some(2));

    // Both problems are reported at once.
    let o = netmend(&[
        "demo",
        fixture("p3").to_str().unwrap(),
        "--remove",
        "v9",
        "--strategy",
        "nope",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("v9") || err.contains('9'), "{err}");
    assert!(err.contains("nope"), "{err}");

    let o = netmend(&["demo", "/nonexistent/graph", "--remove", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn depletion_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = netmend(&[
        "depletion",
        "--n",
        "30",
        "--p",
        "0.1",
        "--trials",
        "1",
        "--seed",
        "4",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("depletion.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert_eq!(
        csv.lines().next().unwrap(),
        "trial,i_dis,censored,diameter,mean_degree"
    );
    let json: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("depletion_summary.json")).unwrap(),
    )
    .unwrap();
    for key in [
        "config",
        "means",
        "stds",
        "ecdf",
        "censored_count",
        "version",
    ] {
        assert!(json.get(key).is_some(), "{key}");
    }

    let o = netmend(&["depletion", "--p", "0", "--trials", "3", "--out", out]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('p'));
}

#[test]
fn depletion_headline_probability() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = netmend(&[
        "depletion",
        "--n",
        "50",
        "--p",
        "0.04",
        "--trials",
        "1000",
        "--seed",
        "7",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let json: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("depletion_summary.json")).unwrap(),
    )
    .unwrap();
    assert!(json["p_i_dis_le_10"].as_f64().unwrap() > 0.5);
}

#[test]
fn compare_on_cycles_and_bad_tokens() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = netmend(&[
        "compare",
        "--generator",
        "cycle",
        "--n",
        "12",
        "--trials",
        "10",
        "--strategies",
        "central",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("compare.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    assert!(
        rows.iter().all(|r| r.split(',').nth(3) == Some("0")),
        "{csv}"
    );

    let o = netmend(&["compare", "--strategies", "central,warp", "--out", out]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"), "{}", stderr(&o));

    let o = netmend(&[
        "compare",
        "--p",
        "0.2",
        "--target-degree",
        "3",
        "--out",
        out,
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_rows_carry_delta() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = netmend(&[
        "compare",
        "--trials",
        "3",
        "--strategies",
        "mps,dmps:2",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("compare.csv")).unwrap();
    let rows: Vec<Vec<&str>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(&rows[0][1..3], ["mps", ""]);
    assert_eq!(&rows[1][1..3], ["dmps", "2"]);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "trials = 4\nstrategies = [\"mps\"]\ngenerator = \"cycle\"\nn = 8\n",
    )
    .unwrap();
    let out = dir.path().join("o");
    let args = [
        "compare",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ];
    let o = netmend(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(out.join("compare.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!(csv
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("7")));

    let o = netmend(&[&args[..], &["--trials", "2"]].concat());
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(out.join("compare.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);

    std::fs::write(&cfg, "bogus-key = 1\n").unwrap();
    assert_eq!(netmend(&args).status.code(), Some(2));
}

#[test]
fn repair_runs_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = netmend(&[
        "repair",
        "--trials",
        "5",
        "--strategies",
        "mps,dmps:1",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(dir.path().join("repair.csv")).unwrap();
    assert_eq!(csv.lines().count(), 11);
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",0,0")), "{csv}");
}

fn criticality_rows(name: &str, delta: &str) -> Vec<(usize, bool, bool)> {
    let o = netmend(&[
        "criticality",
        fixture(name).to_str().unwrap(),
        "--delta",
        delta,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("node,global_critical,delta,delta_critical")
    );
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f[2], delta);
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn criticality_tables() {
    for (v, global, local) in criticality_rows("fig4_path7", "1") {
        let expect = !matches!(v, 2 | 6);
        assert_eq!((global, local), (expect, expect), "node {v}");
    }
    assert!(criticality_rows("c6", "1").iter().all(|&(_, g, l)| !g && l));
    assert!(criticality_rows("c6", "3")
        .iter()
        .all(|&(_, g, l)| !g && !l));

    let o = netmend(&["criticality", "/nonexistent"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn help_lists_defaults() {
    for sub in ["demo", "depletion", "compare", "repair", "criticality"] {
        let o = netmend(&[sub, "--help"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.contains("[default:"), "{sub}: {text}");
    }
    let text = stdout(&netmend(&["compare", "--help"]));
    for flag in [
        "--trials",
        "--seed",
        "--strategies",
        "--target-degree",
        "--workers",
        "--out",
        "--config",
    ] {
        assert!(text.contains(flag), "{flag}");
    }
    assert!(text.contains("[default: 500]") && text.contains("[default: 3.1]"));
}

#[test]
fn seeded_runs_repeat_exactly() {
    let a = netmend(&[
        "demo",
        fixture("scenario13").to_str().unwrap(),
        "--remove",
        "4",
        "--strategy",
        "mps",
        "--seed",
        "8",
    ]);
    let b = netmend(&[
        "demo",
        fixture("scenario13").to_str().unwrap(),
        "--remove",
        "4",
        "--strategy",
        "mps",
        "--seed",
        "8",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
