use std::io::Write;

use entmat_core::classify::ClassifyCache;
use entmat_core::formulas::CENSUS_MAX_N;
use entmat_core::geometry::{build_midpoint_census_with_tol, MidpointKind};
use entmat_core::graph::{edge_from_index, entropy_cut_rank, pair_count};
use entmat_core::sim::bipartition_entropy;
use entmat_core::{
    build_entanglement_matrix, classify, compare_report_with_jobs, EntropyBackend, Graph,
    Restriction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::classify::plausible;
use crate::{emit, finish, to_json, CliError, RunConfig, EXIT_OK, EXIT_VERIFY};

const SEED: u64 = 0x656e_746d_6174;
const ORACLE_SAMPLES: usize = 200;
const ORACLE_TOL: f64 = 1e-9;

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifySummary {
    passed: bool,
    failed: Vec<&'static str>,
    checks: Vec<Check>,
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = rng.random_range(0.1..0.9);
    let mut g = Graph::empty(n).expect("n >= 1");
    for k in 0..pair_count(n) {
        if rng.random_bool(p) {
            let (i, j) = edge_from_index(k);
            g.add_edge(i, j).expect("fresh edge");
        }
    }
    g
}

fn random_cut(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    loop {
        let part: Vec<usize> = (1..=n).filter(|_| rng.random_bool(0.5)).collect();
        if !part.is_empty() && part.len() < n {
            return part;
        }
    }
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples: Vec<(Graph, Vec<usize>)> = (0..ORACLE_SAMPLES)
        .map(|_| {
            let n = rng.random_range(2..=10);
            let g = random_graph(&mut rng, n);
            let cut = random_cut(&mut rng, n);
            (g, cut)
        })
        .collect();
    let diffs: Result<Vec<f64>, String> = samples
        .par_iter()
        .map(|(g, cut)| {
            let dense = bipartition_entropy(g, cut).map_err(|e| e.to_string())?;
            let rank = entropy_cut_rank(g, cut).map_err(|e| e.to_string())?;
            Ok((dense - f64::from(rank)).abs())
        })
        .collect();
    match diffs {
        Ok(d) => {
            let worst = d.iter().copied().fold(0.0, f64::max);
            Check {
                name: "oracle-equivalence",
                passed: worst <= ORACLE_TOL,
                detail: format!("{ORACLE_SAMPLES} cuts, max |dense - cut rank| = {worst:.3e}"),
            }
        }
        Err(e) => Check {
            name: "oracle-equivalence",
            passed: false,
            detail: e,
        },
    }
}

fn backend_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let graphs: Vec<Graph> = (0..50)
        .map(|_| {
            let n = rng.random_range(2..=8);
            random_graph(&mut rng, n)
        })
        .collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let a = build_entanglement_matrix(g, EntropyBackend::CutRank);
            let b = build_entanglement_matrix(g, EntropyBackend::DenseSim);
            match (a, b) {
                (Ok(a), Ok(b)) if a.rows() == b.rows() => None,
                _ => Some(g.to_json()),
            }
        })
        .collect();
    Check {
        name: "backend-agreement",
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} matrices identical", graphs.len())
        } else {
            format!("disagreement on {}", bad.join(" "))
        },
    }
}

fn census_problems(n: usize, tol: f64) -> Vec<String> {
    let c = match build_midpoint_census_with_tol(n, Restriction::Complete, tol) {
        Ok(c) => c,
        Err(e) => return vec![format!("n={n}: {e}")],
    };
    let mut problems = Vec::new();
    let expect = if n % 2 == 1 {
        n * (n - 1) / 2
    } else {
        n * (n / 2 - 1) + 1
    };
    if c.records.len() != expect {
        problems.push(format!(
            "n={n}: {} midpoints, expected {expect}",
            c.records.len()
        ));
    }
    if n % 2 == 1 && c.records.iter().any(|r| r.degree != 2) {
        problems.push(format!(
            "n={n}: odd census has a midpoint of degree other than 2"
        ));
    }
    if n.is_multiple_of(2) && c.center().map(|r| r.degree) != Some(n) {
        problems.push(format!("n={n}: center degree is not {n}"));
    }
    if c.records
        .iter()
        .any(|r| r.kind == MidpointKind::Primary && r.degree != 2)
    {
        problems.push(format!("n={n}: primary midpoint of degree other than 2"));
    }
    for scaled in [tol * 10.0, tol / 10.0] {
        match build_midpoint_census_with_tol(n, Restriction::Complete, scaled) {
            Ok(o) if o.degree_histogram() == c.degree_histogram() => {}
            Ok(_) => problems.push(format!("n={n}: histogram changes at tol {scaled:e}")),
            Err(e) => problems.push(format!("n={n}, tol {scaled:e}: {e}")),
        }
    }
    problems
}

fn census_invariants(tol: f64) -> Check {
    let problems: Vec<String> = (3..=30usize)
        .into_par_iter()
        .flat_map_iter(|n| census_problems(n, tol))
        .collect();
    Check {
        name: "census-invariants",
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "n = 3..30 counts, degrees and tolerance scaling hold".into()
        } else {
            problems.join("; ")
        },
    }
}

fn formula_constructive(jobs: usize) -> Check {
    let name = "formula-constructive";
    match compare_report_with_jobs(3, CENSUS_MAX_N, jobs) {
        Ok(r) => {
            let off: Vec<String> = r
                .rows
                .iter()
                .filter(|r| !r.matches)
                .map(|r| r.n.to_string())
                .collect();
            Check {
                name,
                passed: off.is_empty(),
                detail: if off.is_empty() {
                    format!("closed form equals constructive total for n = 3..{CENSUS_MAX_N}")
                } else {
                    format!("mismatch at n = {}", off.join(", "))
                },
            }
        }
        Err(e) => Check {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn class_counts(jobs: usize) -> Check {
    let name = "class-counts";
    let mut found = Vec::new();
    for (n, expect) in [(3usize, 4usize), (4, 11)] {
        match classify(n, EntropyBackend::CutRank, jobs) {
            Ok(t) if t.rows.len() == expect && plausible(&t, n) => {}
            Ok(t) => found.push(format!(
                "n={n}: {} classes, expected {expect}",
                t.rows.len()
            )),
            Err(e) => found.push(format!("n={n}: {e}")),
        }
    }
    Check {
        name,
        passed: found.is_empty(),
        detail: if found.is_empty() {
            "4 classes at n=3, 11 at n=4".into()
        } else {
            found.join("; ")
        },
    }
}

fn cache_consistency(cfg: &RunConfig) -> Option<Check> {
    let path = cfg.cache.as_ref()?;
    let name = "cache-consistency";
    let fail = |detail: String| {
        Some(Check {
            name,
            passed: false,
            detail,
        })
    };
    if !path.exists() {
        return Some(Check {
            name,
            passed: true,
            detail: "no cache file yet".into(),
        });
    }
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let cache = match ClassifyCache::from_json(&text) {
        Ok(c) => c,
        Err(e) => return fail(format!("cache does not parse: {e}")),
    };
    if !cache.is_compatible() {
        return fail(format!(
            "cache schema {} v{} is not current",
            cache.schema, cache.version
        ));
    }
    let mut bad = Vec::new();
    for (key, table) in &cache.tables {
        let fresh = classify(table.n, table.backend, cfg.jobs);
        let ok =
            *key == ClassifyCache::key(table.n, table.backend) && fresh.is_ok_and(|f| f == *table);
        if !ok {
            bad.push(key.clone());
        }
    }
    Some(Check {
        name,
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} cached tables match recomputation", cache.tables.len())
        } else {
            format!("stale or corrupted tables: {}", bad.join(", "))
        },
    })
}

pub fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = (|| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| CliError::input(format!("thread pool: {e}")))?;
        let mut checks = pool.install(|| {
            vec![
                oracle_equivalence(),
                backend_agreement(),
                census_invariants(cfg.tol),
                formula_constructive(cfg.jobs),
                class_counts(cfg.jobs),
            ]
        });
        checks.extend(cache_consistency(cfg));
        let failed: Vec<&'static str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        let summary = VerifySummary {
            passed: failed.is_empty(),
            failed: failed.clone(),
            checks,
        };
        emit(cfg, out, &to_json(&summary))?;
        if failed.is_empty() {
            Ok(EXIT_OK)
        } else {
            let _ = writeln!(err, "failed checks: {}", failed.join(", "));
            Ok(EXIT_VERIFY)
        }
    })();
    finish(err, result)
}
