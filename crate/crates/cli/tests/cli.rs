//! End-to-end behaviour of the `entmat` commands, driven in-process.

use std::fs;
use std::path::PathBuf;

use entmat_cli::run;
use entmat_core::classify::ClassifyCache;
use entmat_core::entmatrix::MatrixExport;
use entmat_core::formulas::{census_rows_from_csv, CompareReport};
use entmat_core::ClassificationTable;
use serde_json::Value;

struct Outcome {
    code: u8,
    out: String,
    err: String,
}

fn entmat_env(args: &[&str], env_cache: Option<PathBuf>) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("entmat").chain(args.iter().copied());
    let code = run(argv, env_cache, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn entmat(args: &[&str]) -> Outcome {
    entmat_env(args, None)
}

const WORKED: &str = r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[2,4]]}"#;

#[test]
fn analyze_worked_example_json() {
    let o = entmat(&["analyze", "--inline", WORKED]);
    assert_eq!(o.code, 0, "{}", o.err);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["total"], 12);
    assert_eq!(v["matrix"]["entries"][4][4], 2);
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
    assert!(v["notes"][0].as_str().unwrap().contains("is 9"));
    assert!(o.err.contains("note:"));
    let attr = v["edge_attribution"].as_array().unwrap();
    assert!(attr.iter().all(|a| a["ebits"] == 1));
}

#[test]
fn analyze_reads_graph_files_and_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k3.json");
    fs::write(&graph, r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap();
    let out = dir.path().join("k3.csv");
    let o = entmat(&[
        "analyze",
        "--graph",
        graph.to_str().unwrap(),
        "--format",
        "csv",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert!(o.out.is_empty());
    assert!(o.err.contains("total: 6 ebits"));
    let csv = fs::read_to_string(&out).unwrap();
    let parsed = MatrixExport::from_csv(&csv, 3).unwrap();
    assert_eq!(parsed.entries, vec![vec![1; 3]; 3]);
}

#[test]
fn analyze_empty_graph_and_log2_units() {
    let o = entmat(&[
        "analyze",
        "--inline",
        r#"{"n":4,"edges":[]}"#,
        "--units",
        "log2",
    ]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["total"], 0);
    assert_eq!(v["units"], "log2");
    assert_eq!(v["total_display"], "0 log 2");
}

#[test]
fn analyze_backends_agree_byte_for_byte_on_matrices() {
    let cut = entmat(&["analyze", "--inline", WORKED, "--format", "csv"]);
    let dense = entmat(&[
        "analyze",
        "--inline",
        WORKED,
        "--format",
        "csv",
        "--backend",
        "dense-sim",
    ]);
    assert_eq!(cut.out, dense.out);
}

#[test]
fn input_errors_exit_2() {
    for bad in [
        r#"{"n":3,"edges":[[1,1]]}"#,
        r#"{"n":3,"edges":[[1,4]]}"#,
        r#"{"n":3,"edges":[[1,2],[2,1]]}"#,
        r#"{"n":3"#,
        r#"{"n":1,"edges":[]}"#,
    ] {
        let o = entmat(&["analyze", "--inline", bad]);
        assert_eq!(o.code, 2, "{bad}: {}", o.err);
        assert!(o.err.starts_with("error:"));
    }
    assert_eq!(
        entmat(&["analyze", "--graph", "/nonexistent/g.json"]).code,
        2
    );
    assert_eq!(entmat(&["analyze"]).code, 2);
    assert_eq!(entmat(&["verify", "--jobs", "0"]).code, 2);
    assert_eq!(entmat(&["verify", "--tol", "-1"]).code, 2);
    assert_eq!(
        entmat(&["analyze", "--inline", WORKED, "--backend", "tensor"]).code,
        2
    );
}

#[test]
fn help_exits_cleanly() {
    let o = entmat(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("classify"));
}

#[test]
fn size_limits_exit_3() {
    let edges: Vec<String> = (1..15).map(|k| format!("[{k},{}]", k + 1)).collect();
    let path15 = format!(r#"{{"n":15,"edges":[{}]}}"#, edges.join(","));
    assert_eq!(entmat(&["analyze", "--inline", &path15]).code, 0);
    let o = entmat(&["analyze", "--inline", &path15, "--backend", "dense-sim"]);
    assert_eq!(o.code, 3, "{}", o.err);
    assert_eq!(entmat(&["classify", "--n", "8"]).code, 3);
    assert_eq!(entmat(&["classify", "--n", "1"]).code, 3);
    assert_eq!(entmat(&["census", "--n", "49"]).code, 3);
}

#[test]
fn classify_tables_round_trip() {
    let o = entmat(&["classify", "--n", "4", "--format", "csv"]);
    assert_eq!(o.code, 0);
    let rows = ClassificationTable::rows_from_csv(&o.out).unwrap();
    assert_eq!(rows.len(), 11);
    let j = entmat(&["classify", "--n", "4"]);
    let table: ClassificationTable = serde_json::from_str(&j.out).unwrap();
    assert_eq!(table.rows, rows);
    assert_eq!(table.to_csv(), o.out);
}

#[test]
fn classify_cache_is_written_reused_and_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();

    let first = entmat(&["classify", "--n", "4", "--cache", c]);
    assert_eq!(first.code, 0);
    let stored = ClassifyCache::from_json(&fs::read_to_string(&cache).unwrap()).unwrap();
    assert!(stored
        .get(4, entmat_core::EntropyBackend::CutRank)
        .is_some());

    let second = entmat(&["classify", "--n", "4", "--cache", c]);
    assert_eq!(second.out, first.out);
    assert!(second.err.is_empty());

    // An older schema version is discarded and rebuilt, not migrated.
    let mut old = stored.clone();
    old.version = 0;
    fs::write(&cache, old.to_json()).unwrap();
    let third = entmat(&["classify", "--n", "4", "--cache", c]);
    assert_eq!(third.code, 0);
    assert!(third.err.contains("recomputing"));
    assert_eq!(third.out, first.out);
    let rebuilt = ClassifyCache::from_json(&fs::read_to_string(&cache).unwrap()).unwrap();
    assert!(rebuilt.is_compatible());
}

#[test]
fn cache_path_comes_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.json");
    let flag_path = dir.path().join("flag.json");
    let o = entmat_env(&["classify", "--n", "3"], Some(env_path.clone()));
    assert_eq!(o.code, 0);
    assert!(env_path.exists());
    let o = entmat_env(
        &[
            "classify",
            "--n",
            "3",
            "--cache",
            flag_path.to_str().unwrap(),
        ],
        Some(env_path.clone()),
    );
    assert_eq!(o.code, 0);
    assert!(flag_path.exists());
}

#[test]
fn verify_passes_and_flags_a_corrupted_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();

    let clean = entmat(&["verify", "--cache", c]);
    assert_eq!(clean.code, 0, "{}", clean.out);
    let v: Value = serde_json::from_str(&clean.out).unwrap();
    assert_eq!(v["passed"], true);

    assert_eq!(entmat(&["classify", "--n", "3", "--cache", c]).code, 0);
    let mut stored = ClassifyCache::from_json(&fs::read_to_string(&cache).unwrap()).unwrap();
    let table = stored.tables.values_mut().next().unwrap();
    table.rows[1].total_entanglement += 1;
    fs::write(&cache, stored.to_json()).unwrap();

    let o = entmat(&["verify", "--cache", c]);
    assert_eq!(o.code, 1);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["failed"], serde_json::json!(["cache-consistency"]));
    assert!(o.err.contains("cache-consistency"));

    fs::write(&cache, "{ not json").unwrap();
    let o = entmat(&["verify", "--cache", c]);
    assert_eq!(o.code, 1);
    assert!(o.err.contains("cache-consistency"));
}

#[test]
fn verify_is_job_count_independent() {
    assert_eq!(
        entmat(&["verify"]).out,
        entmat(&["verify", "--jobs", "4"]).out
    );
}

#[test]
fn maxent_report_and_series() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("series");
    let svg = dir.path().join("plot.svg");
    let o = entmat(&[
        "maxent",
        "--n-min",
        "3",
        "--n-max",
        "13",
        "--format",
        "csv",
        "--series-dir",
        series.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert!(o
        .out
        .starts_with("n,case,formula_ebits,constructive_ebits,match\n"));
    let rows = CompareReport::rows_from_csv(&o.out).unwrap();
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r.matches));
    for name in ["odd", "even", "multiple-of-12"] {
        let text = fs::read_to_string(series.join(format!("{name}.csv"))).unwrap();
        assert!(text.starts_with("n,value\n"));
    }
    assert_eq!(
        fs::read_to_string(series.join("multiple-of-12.csv")).unwrap(),
        "n,value\n12,180\n"
    );
    let chart = fs::read_to_string(&svg).unwrap();
    assert!(chart.starts_with("<svg") && chart.matches("<polyline").count() == 3);

    let single = entmat(&["maxent", "--n-min", "5", "--n-max", "5"]);
    let v: Value = serde_json::from_str(&single.out).unwrap();
    assert_eq!(v["rows"][0]["formula_ebits"], 20);
    assert_eq!(entmat(&["maxent", "--n-min", "9", "--n-max", "4"]).code, 2);
    assert_eq!(entmat(&["maxent", "--n-min", "3", "--n-max", "60"]).code, 2);
}

#[test]
fn census_rows_and_profiles() {
    let o = entmat(&["census", "--n", "6"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v[0]["row"]["total_midpoints"], 13);
    assert_eq!(
        v[0]["row"]["histogram"],
        serde_json::json!({"2": 6, "4": 6, "6": 1})
    );
    assert_eq!(v[0]["rings"].as_array().unwrap().len(), 3);

    let o = entmat(&["census", "--n", "7", "--format", "csv"]);
    let rows = census_rows_from_csv(&o.out).unwrap();
    assert_eq!(rows[0].total_midpoints, 21);
    assert_eq!(rows[0].histogram.len(), 1);

    let o = entmat(&["census", "--n-max", "10", "--format", "csv"]);
    assert_eq!(census_rows_from_csv(&o.out).unwrap().len(), 8);
}

#[test]
fn census_ambiguity_exits_4() {
    let o = entmat(&["census", "--n", "20", "--tol", "1e-3"]);
    assert_eq!(o.code, 4, "{}", o.err);
    assert!(o.err.contains("ambiguity"));
}
