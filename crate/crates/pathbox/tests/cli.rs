mod common;

use common::{golden, mask_timings, pathbox, stdout};
use serde_json::Value;

#[test]
fn det_2_3_matches_golden() {
    let out = pathbox(&["det", "2", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(mask_timings(&stdout(&out)), golden("det_2_3.json"));
}

#[test]
fn det_5_5_matches_golden() {
    let out = pathbox(&["det", "5", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(mask_timings(&stdout(&out)), golden("det_5_5.json"));
}

#[test]
fn det_timings_are_numbers_before_masking() {
    let v: Value = serde_json::from_str(&stdout(&pathbox(&["det", "2", "3"]))).unwrap();
    for key in ["direct", "block", "resultant", "closed_form"] {
        assert!(v["elapsed_ms"][key].is_number(), "{key}");
        assert!(v["results"][key].is_string(), "{key}");
    }
}

#[test]
fn det_rejects_zero_and_garbage() {
    for args in [
        &["det", "0", "3"][..],
        &["det", "2"],
        &["det", "a", "3"],
        &["det", "2", "3", "--format", "xml"],
    ] {
        let out = pathbox(args);
        assert_ne!(out.status.code(), Some(0), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn det_past_ceiling_skips_direct() {
    let out = pathbox(&["det", "50", "60", "--methods", "direct,resultant,closed"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["results"]["direct"].is_null());
    assert!(v["results"]["block"].is_null());
    assert_eq!(v["results"]["resultant"], "1");
    assert_eq!(v["results"]["closed_form"], "1");
}

#[test]
fn det_csv_and_pretty() {
    let out = pathbox(&["det", "2", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,m,gcd,det,methods_agree\n2,3,1,-1,true\n");
    let out = pathbox(&["det", "2", "3", "--format", "pretty"]);
    assert!(stdout(&out).contains("agree        yes"));
}

#[test]
fn charpoly_outputs() {
    assert_eq!(
        stdout(&pathbox(&["charpoly", "3"])),
        "[\"0\",\"2\",\"0\",\"-1\"]\n"
    );
    assert_eq!(stdout(&pathbox(&["charpoly", "0"])), "[\"1\"]\n");
    assert_eq!(stdout(&pathbox(&["charpoly", "1"])), "[\"0\",\"-1\"]\n");
    assert_ne!(pathbox(&["charpoly", "-1"]).status.code(), Some(0));
}

#[test]
fn sweep_csv_matches_golden() {
    let out = pathbox(&["sweep", "--max-n", "3", "--max-m", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("sweep_3x3.csv"));
}

#[test]
fn sweep_is_deterministic_across_thread_counts() {
    let args = ["sweep", "--max-n", "6", "--max-m", "7", "--format", "csv"];
    let one = pathbox(&[&args[..], &["--threads", "1"]].concat());
    let four = pathbox(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let json_a = mask_timings(&stdout(&pathbox(&[
        "sweep", "--max-n", "4", "--max-m", "4",
    ])));
    let json_b = mask_timings(&stdout(&pathbox(&[
        "sweep",
        "--max-n",
        "4",
        "--max-m",
        "4",
        "--threads",
        "3",
    ])));
    assert_eq!(json_a, json_b);
}

#[test]
fn sweep_csv_and_json_agree() {
    let csv = stdout(&pathbox(&[
        "sweep", "--max-n", "5", "--max-m", "4", "--format", "csv",
    ]));
    let json: Vec<Value> = serde_json::from_str(&stdout(&pathbox(&[
        "sweep", "--max-n", "5", "--max-m", "4",
    ])))
    .unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), json.len());
    for (row, v) in rows.iter().zip(&json) {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[0], v["n"].to_string());
        assert_eq!(f[1], v["m"].to_string());
        assert_eq!(f[3], v["results"]["direct"].as_str().unwrap());
        assert_eq!(f[3], v["results"]["closed_form"].as_str().unwrap());
        assert_eq!(f[4], v["agree"].to_string());
    }
}

#[test]
fn sweep_closed_only_400_rows() {
    let out = pathbox(&[
        "sweep",
        "--max-n",
        "20",
        "--max-m",
        "20",
        "--methods",
        "closed",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 401);
}

#[test]
fn threads_from_environment_and_flag_precedence() {
    let run = |env: &str, extra: &[&str]| {
        std::process::Command::new(env!("CARGO_BIN_EXE_pathbox"))
            .args(
                [
                    &["sweep", "--max-n", "2", "--max-m", "2", "--format", "csv"][..],
                    extra,
                ]
                .concat(),
            )
            .env("PATHBOX_THREADS", env)
            .output()
            .unwrap()
    };
    assert_eq!(run("2", &[]).status.code(), Some(0));
    // An invalid environment value is rejected, but an explicit flag overrides it.
    assert_ne!(run("zero", &[]).status.code(), Some(0));
    assert_eq!(run("zero", &["--threads", "2"]).status.code(), Some(0));
}

#[test]
fn identities_k5_matches_golden() {
    let out = pathbox(&["identities", "--max-k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("identities_k5.txt"));
}

#[test]
fn identities_k1_and_default() {
    let out = pathbox(&["identities", "--max-k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("splitting               1       1       0  PASS"));
    let out = pathbox(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("overall: PASS\n"));
}

#[test]
fn bench_outputs() {
    let out = pathbox(&["bench"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,m,method,status,det,elapsed_ms\n");
    let out = pathbox(&["bench", "--sizes", "50x60", "--methods", "direct,closed"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("50,60,direct,skipped (ceiling),,"));
    assert!(text.contains("50,60,closed,ok,1,"));
    assert_ne!(
        pathbox(&["bench", "--sizes", "3by3"]).status.code(),
        Some(0)
    );
}

#[test]
fn graph_dump() {
    assert_eq!(
        stdout(&pathbox(&["graph", "2", "2"])),
        "4\n1 2\n1 3\n2 4\n3 4\n"
    );
    let out = pathbox(&["graph", "1", "2", "--format", "matrix"]);
    assert_eq!(stdout(&out), "[[\"0\",\"1\"],[\"1\",\"0\"]]\n");

    let dir = std::env::temp_dir().join(format!("pathbox-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c4.txt");
    std::fs::write(&file, "4\n1 2\n2 4\n4 3\n3 1\n").unwrap();
    let out = pathbox(&["graph", "--file", file.to_str().unwrap()]);
    assert_eq!(stdout(&out), "4\n1 2\n1 3\n2 4\n3 4\n");
    std::fs::write(&file, "4\n1 1\n").unwrap();
    assert_eq!(
        pathbox(&["graph", "--file", file.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
