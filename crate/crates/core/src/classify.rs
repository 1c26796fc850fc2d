//! Exhaustive classification of `n`-qubit graph states into isomorphism
//! classes, ranked by total entanglement.
//!
//! Classes are found by orbit marking: labeled graphs are visited in
//! increasing packed-word order, and the first unvisited word starts a new
//! class whose whole relabeling orbit is then marked. The first word of an
//! orbit is its minimum, so it is also the class's [`CanonicalForm`].
//!
//! The aggregate total is computed on the labeled representative (the
//! canonical labeling). It depends on the labeling once `n >= 4`, because
//! only cyclic-arc bipartitions enter the matrix; `member_total_min/max`
//! report the spread across the class.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entmatrix::{
    build_entanglement_matrix, total_entanglement, EntropyBackend, TotalEvaluator,
};
use crate::error::{Error, Result};
use crate::graph::canon::EdgePermTable;
use crate::graph::{pair_count, CanonicalForm, Graph};

pub const CLASSIFY_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Descriptor {
    #[serde(rename = "Fully Separable")]
    FullySeparable,
    #[serde(rename = "Bi-Separable")]
    BiSeparable,
    #[serde(rename = "Entangled")]
    Entangled,
    #[serde(rename = "Fully Entangled")]
    FullyEntangled,
}

impl Descriptor {
    pub fn of(g: &Graph) -> Self {
        if g.edge_count() == 0 {
            Descriptor::FullySeparable
        } else if g.is_complete() {
            Descriptor::FullyEntangled
        } else if !g.is_connected() {
            Descriptor::BiSeparable
        } else {
            Descriptor::Entangled
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Descriptor::FullySeparable => "Fully Separable",
            Descriptor::BiSeparable => "Bi-Separable",
            Descriptor::Entangled => "Entangled",
            Descriptor::FullyEntangled => "Fully Entangled",
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Descriptor::FullySeparable,
            Descriptor::BiSeparable,
            Descriptor::Entangled,
            Descriptor::FullyEntangled,
        ]
        .into_iter()
        .find(|d| d.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown descriptor {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub canonical: CanonicalForm,
    pub representative: Graph,
    pub edge_count: usize,
    pub labeled_count: u64,
    pub total_entanglement: u64,
    pub descriptor: Descriptor,
    /// Smallest and largest total over all labeled members of the class.
    pub member_total_min: u64,
    pub member_total_max: u64,
}

fn check_jobs(jobs: usize) -> Result<()> {
    if jobs == 0 {
        return Err(Error::Domain("jobs must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    check_jobs(jobs)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Isomorphism orbits of all labeled graphs on `n` vertices, in order of
/// their canonical (minimum) word.
fn orbits(n: usize) -> Vec<(u64, Vec<u64>)> {
    let words = 1u64 << pair_count(n);
    let table = EdgePermTable::new(n);
    let mut seen = vec![0u64; (words as usize).div_ceil(64)];
    let mut out = Vec::new();
    for word in 0..words {
        if seen[(word / 64) as usize] >> (word % 64) & 1 == 1 {
            continue;
        }
        let mut members: Vec<u64> = table.images(word).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[(m / 64) as usize] |= 1 << (m % 64);
        }
        out.push((word, members));
    }
    out
}

pub fn enumerate_classes(
    n: usize,
    backend: EntropyBackend,
    jobs: usize,
) -> Result<Vec<ClassRecord>> {
    if !(1..=CLASSIFY_MAX_N).contains(&n) {
        return Err(Error::SizeLimit {
            what: "enumerate_classes",
            n,
            min: 1,
            max: CLASSIFY_MAX_N,
        });
    }
    check_jobs(jobs)?;
    let orbits = orbits(n);
    let evaluator = if n >= 2 {
        Some(TotalEvaluator::new(n)?)
    } else {
        None
    };

    let mut rows = with_pool(jobs, || {
        orbits
            .par_iter()
            .map(|(word, members)| -> Result<ClassRecord> {
                let rep = Graph::from_edge_bits(n, *word)?;
                let (total, lo, hi) = match &evaluator {
                    None => (0, 0, 0),
                    Some(ev) => {
                        let total = total_entanglement(&build_entanglement_matrix(&rep, backend)?);
                        let (lo, hi) = members
                            .iter()
                            .map(|&m| ev.total(m))
                            .fold((u64::MAX, 0), |(lo, hi), t| (lo.min(t), hi.max(t)));
                        (total, lo, hi)
                    }
                };
                Ok(ClassRecord {
                    canonical: CanonicalForm::from_parts(n, *word),
                    edge_count: rep.edge_count(),
                    descriptor: Descriptor::of(&rep),
                    representative: rep,
                    labeled_count: members.len() as u64,
                    total_entanglement: total,
                    member_total_min: lo,
                    member_total_max: hi,
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    rows.sort_by_key(|r| (r.total_entanglement, r.canonical));
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub n: usize,
    pub backend: EntropyBackend,
    pub rows: Vec<ClassRecord>,
}

pub const TABLE_CSV_HEADER: [&str; 8] = [
    "canonical",
    "edges",
    "labeled_count",
    "total_ebits",
    "descriptor",
    "member_total_min",
    "member_total_max",
    "representative",
];

impl ClassificationTable {
    pub fn labeled_total(&self) -> u64 {
        self.rows.iter().map(|r| r.labeled_count).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(TABLE_CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.canonical.to_string(),
                r.edge_count.to_string(),
                r.labeled_count.to_string(),
                r.total_entanglement.to_string(),
                r.descriptor.to_string(),
                r.member_total_min.to_string(),
                r.member_total_max.to_string(),
                r.representative.to_json(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn rows_from_csv(text: &str) -> Result<Vec<ClassRecord>> {
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let header = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?;
        if header.iter().ne(TABLE_CSV_HEADER) {
            return Err(Error::Parse(format!("unexpected table header {header:?}")));
        }
        rdr.records()
            .map(|rec| {
                let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
                let field = |i: usize| rec.get(i).ok_or_else(|| Error::Parse("short row".into()));
                let num = |i: usize| -> Result<u64> {
                    field(i)?.parse().map_err(|e| Error::Parse(format!("{e}")))
                };
                Ok(ClassRecord {
                    canonical: field(0)?.parse()?,
                    edge_count: num(1)? as usize,
                    labeled_count: num(2)?,
                    total_entanglement: num(3)?,
                    descriptor: field(4)?.parse()?,
                    member_total_min: num(5)?,
                    member_total_max: num(6)?,
                    representative: Graph::from_json(field(7)?)?,
                })
            })
            .collect()
    }
}

pub fn classify(n: usize, backend: EntropyBackend, jobs: usize) -> Result<ClassificationTable> {
    if !(2..=CLASSIFY_MAX_N).contains(&n) {
        return Err(Error::SizeLimit {
            what: "classify",
            n,
            min: 2,
            max: CLASSIFY_MAX_N,
        });
    }
    Ok(ClassificationTable {
        n,
        backend,
        rows: enumerate_classes(n, backend, jobs)?,
    })
}

pub const CACHE_SCHEMA: &str = "entmat.classify-cache";
pub const CACHE_VERSION: u32 = 1;

/// Versioned store of classification tables keyed by `n` and backend.
/// A cache written by another schema version or crate version is
/// treated as empty, never migrated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyCache {
    pub schema: String,
    pub version: u32,
    pub code_version: String,
    pub tables: BTreeMap<String, ClassificationTable>,
}

impl Default for ClassifyCache {
    fn default() -> Self {
        ClassifyCache {
            schema: CACHE_SCHEMA.into(),
            version: CACHE_VERSION,
            code_version: env!("CARGO_PKG_VERSION").into(),
            tables: BTreeMap::new(),
        }
    }
}

impl ClassifyCache {
    pub fn key(n: usize, backend: EntropyBackend) -> String {
        format!("{n}/{backend}")
    }

    pub fn is_compatible(&self) -> bool {
        self.schema == CACHE_SCHEMA
            && self.version == CACHE_VERSION
            && self.code_version == env!("CARGO_PKG_VERSION")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cache serialization is infallible")
    }

    pub fn get(&self, n: usize, backend: EntropyBackend) -> Option<&ClassificationTable> {
        self.tables.get(&Self::key(n, backend))
    }

    pub fn insert(&mut self, table: ClassificationTable) {
        self.tables.insert(Self::key(table.n, table.backend), table);
    }
}
