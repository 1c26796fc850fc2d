//! Maximum entanglement of the complete graph state `K_n`: closed forms,
//! the midpoint-degree counting model behind them, and a constructive
//! evaluation from the polygon census that checks them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::with_pool;
use crate::error::{Error, Result};
use crate::geometry::{build_midpoint_census, MidpointCensus, Restriction};

/// Largest `n` the census-backed routines accept.
pub const CENSUS_MAX_N: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "odd")]
    Odd,
    /// Even `n`, `C = n/2 - 1` with `C/2` an integer.
    #[serde(rename = "even-C-half-integer")]
    EvenCHalfInteger,
    #[serde(rename = "even-C-half-nonint")]
    EvenCHalfNonInteger,
    #[serde(rename = "multiple-of-12")]
    MultipleOf12,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Odd => "odd",
            CaseTag::EvenCHalfInteger => "even-C-half-integer",
            CaseTag::EvenCHalfNonInteger => "even-C-half-nonint",
            CaseTag::MultipleOf12 => "multiple-of-12",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            CaseTag::Odd,
            CaseTag::EvenCHalfInteger,
            CaseTag::EvenCHalfNonInteger,
            CaseTag::MultipleOf12,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| Error::Parse(format!("unknown case tag {s:?}")))
    }
}

/// Number of concentric midpoint rings of an even polygon, primary ring
/// included and center excluded.
pub fn ring_count_even(n: usize) -> usize {
    (n / 2).saturating_sub(1)
}

/// Closed-form maximum entanglement in ebits.
pub fn emax_formula(n: usize) -> Result<(u64, CaseTag)> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "maximum entanglement needs n >= 2, got {n}"
        )));
    }
    let n64 = n as u64;
    if n % 2 == 1 {
        return Ok((n64 * n64 - n64, CaseTag::Odd));
    }
    let base = 5 * n64 * n64 / 4;
    if n.is_multiple_of(12) {
        return Ok((base, CaseTag::MultipleOf12));
    }
    if ring_count_even(n).is_multiple_of(2) {
        Ok((base - 3 * n64 / 2, CaseTag::EvenCHalfInteger))
    } else {
        Ok((base - 2 * n64, CaseTag::EvenCHalfNonInteger))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCounts {
    /// Degree-2 midpoints, primary ring included.
    pub deg2: usize,
    pub deg4: usize,
    pub center_degree: usize,
}

/// Midpoint counts by degree for even `n` off the multiples of 12:
/// `n * ceil(C/2)` of degree 2 and `n * floor(C/2)` of degree 4.
pub fn degree_count_model(n: usize) -> Result<DegreeCounts> {
    if n % 2 == 1 {
        return Err(Error::UnsupportedParity(format!(
            "degree model is for even n, got {n}"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!("degree model needs n >= 2, got {n}")));
    }
    if n.is_multiple_of(12) {
        return Err(Error::Domain(format!(
            "n = {n} is a multiple of 12; use replacement_model"
        )));
    }
    let c = ring_count_even(n);
    Ok(DegreeCounts {
        deg2: n * c.div_ceil(2),
        deg4: n * (c / 2),
        center_degree: n,
    })
}

/// Which ring degree changes at a multiple of 12 and what it becomes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Replacement {
    pub n: usize,
    pub multiple: usize,
    pub from_degree: usize,
    pub to_degree: usize,
    /// Midpoints affected: one whole ring.
    pub ring_size: usize,
}

impl Replacement {
    /// Extra ebits over the non-anomalous count.
    pub fn added_ebits(&self) -> u64 {
        (self.ring_size * (self.to_degree - self.from_degree) / 2) as u64
    }

    pub fn describe(&self) -> String {
        format!("{} replaced by {}", self.from_degree, self.to_degree)
    }
}

pub fn replacement_model(n: usize) -> Result<Replacement> {
    if n == 0 || !n.is_multiple_of(12) {
        return Err(Error::Domain(format!(
            "n = {n} is not a positive multiple of 12"
        )));
    }
    let multiple = n / 12;
    let (from_degree, to_degree) = if multiple % 2 == 1 { (2, 6) } else { (4, 8) };
    Ok(Replacement {
        n,
        multiple,
        from_degree,
        to_degree,
        ring_size: n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingContribution {
    pub ring: usize,
    pub count: usize,
    pub multiplicity: usize,
    pub subtotal: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxEntBreakdown {
    pub n: usize,
    pub primary_block: u64,
    pub per_ring: Vec<RingContribution>,
    pub center: u64,
    pub constructive_total: u64,
    pub formula_total: u64,
    pub case_tag: CaseTag,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn check_census_range(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min || n > CENSUS_MAX_N {
        return Err(Error::SizeLimit {
            what,
            n,
            min,
            max: CENSUS_MAX_N,
        });
    }
    Ok(())
}

/// Maximum entanglement of `K_n` assembled from the complete census:
/// the primary block (every primary diagonal and bipartition entry is one
/// ebit) plus each secondary midpoint's multiplicity.
pub fn emax_constructive(n: usize) -> Result<MaxEntBreakdown> {
    check_census_range("emax_constructive", n, 2)?;
    let census = build_midpoint_census(n, Restriction::Complete)?;
    Ok(breakdown_from_census(&census))
}

fn breakdown_from_census(census: &MidpointCensus) -> MaxEntBreakdown {
    let n = census.n;
    let is_primary_site = |id: usize| census.record(id).sites.iter().any(|c| c.separation() == 1);

    let primary_count = census
        .records
        .iter()
        .filter(|r| is_primary_site(r.id))
        .count() as u64;
    let pairs = (n * (n - 1) / 2) as u64;
    let primary_block = primary_count + pairs;

    let mut per_ring = Vec::new();
    let mut center = 0u64;
    for ring in &census.rings {
        let members: Vec<usize> = ring
            .members
            .iter()
            .copied()
            .filter(|&id| !is_primary_site(id))
            .collect();
        if ring.is_center {
            center = members
                .iter()
                .map(|&id| census.record(id).multiplicity as u64)
                .sum();
            continue;
        }
        let mut by_mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &id in &members {
            *by_mult.entry(census.record(id).multiplicity).or_insert(0) += 1;
        }
        for (multiplicity, count) in by_mult {
            per_ring.push(RingContribution {
                ring: ring.index,
                count,
                multiplicity,
                subtotal: (count * multiplicity) as u64,
            });
        }
    }
    let constructive_total =
        primary_block + per_ring.iter().map(|r| r.subtotal).sum::<u64>() + center;
    let (formula_total, case_tag) = emax_formula(n).expect("n >= 2");
    MaxEntBreakdown {
        n,
        primary_block,
        per_ring,
        center,
        constructive_total,
        formula_total,
        case_tag,
        matches: constructive_total == formula_total,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTableRow {
    pub n: usize,
    pub total_midpoints: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// Non-center rings.
    pub ring_count: usize,
}

impl CensusTableRow {
    pub fn from_census(c: &MidpointCensus) -> Self {
        CensusTableRow {
            n: c.n,
            total_midpoints: c.records.len(),
            histogram: c.degree_histogram(),
            ring_count: c.rings.iter().filter(|r| !r.is_center).count(),
        }
    }
}

pub fn census_row(n: usize) -> Result<CensusTableRow> {
    check_census_range("census", n, 2)?;
    Ok(CensusTableRow::from_census(&build_midpoint_census(
        n,
        Restriction::Complete,
    )?))
}

/// One row per `n` in `[3, n_max]`.
pub fn census_table(n_max: usize) -> Result<Vec<CensusTableRow>> {
    if n_max > CENSUS_MAX_N {
        return Err(Error::SizeLimit {
            what: "census_table",
            n: n_max,
            min: 3,
            max: CENSUS_MAX_N,
        });
    }
    (3..=n_max).map(census_row).collect()
}

/// Long-form census CSV: one line per `(n, degree)`.
pub fn census_rows_to_csv(rows: &[CensusTableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "total_midpoints", "ring_count", "degree", "count"])
        .expect("in-memory write");
    for row in rows {
        for (degree, count) in &row.histogram {
            w.write_record([
                row.n.to_string(),
                row.total_midpoints.to_string(),
                row.ring_count.to_string(),
                degree.to_string(),
                count.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn census_rows_from_csv(text: &str) -> Result<Vec<CensusTableRow>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows: Vec<CensusTableRow> = Vec::new();
    for rec in rdr.deserialize::<(usize, usize, usize, usize, usize)>() {
        let (n, total, rings, degree, count) = rec.map_err(|e| Error::Parse(e.to_string()))?;
        match rows.last_mut() {
            Some(r) if r.n == n => {
                if r.total_midpoints != total || r.ring_count != rings {
                    return Err(Error::Parse(format!(
                        "inconsistent census lines for n = {n}"
                    )));
                }
                r.histogram.insert(degree, count);
            }
            _ => rows.push(CensusTableRow {
                n,
                total_midpoints: total,
                histogram: BTreeMap::from([(degree, count)]),
                ring_count: rings,
            }),
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub n: usize,
    pub case: CaseTag,
    pub formula_ebits: u64,
    pub constructive_ebits: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Plot series of formula values, split by family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotSeries {
    pub odd: Vec<(usize, u64)>,
    pub even: Vec<(usize, u64)>,
    pub multiple_of_12: Vec<(usize, u64)>,
}

impl PlotSeries {
    pub fn families(&self) -> [(&'static str, &[(usize, u64)]); 3] {
        [
            ("odd", &self.odd),
            ("even", &self.even),
            ("multiple-of-12", &self.multiple_of_12),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub rows: Vec<CompareRow>,
    pub series: PlotSeries,
}

pub const REPORT_CSV_HEADER: [&str; 5] =
    ["n", "case", "formula_ebits", "constructive_ebits", "match"];

impl CompareReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(REPORT_CSV_HEADER).expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.case.to_string(),
                r.formula_ebits.to_string(),
                r.constructive_ebits.to_string(),
                r.matches.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn rows_from_csv(text: &str) -> Result<Vec<CompareRow>> {
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let header = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?;
        if header.iter().ne(REPORT_CSV_HEADER) {
            return Err(Error::Parse(format!("unexpected report header {header:?}")));
        }
        rdr.records()
            .map(|rec| {
                let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
                let field = |i: usize| rec.get(i).ok_or_else(|| Error::Parse("short row".into()));
                let num = |i: usize| -> Result<u64> {
                    field(i)?.parse().map_err(|e| Error::Parse(format!("{e}")))
                };
                Ok(CompareRow {
                    n: num(0)? as usize,
                    case: field(1)?.parse()?,
                    formula_ebits: num(2)?,
                    constructive_ebits: num(3)?,
                    matches: field(4)?
                        .parse()
                        .map_err(|e| Error::Parse(format!("{e}")))?,
                })
            })
            .collect()
    }

    /// `n,value` pairs for one family.
    pub fn series_csv(points: &[(usize, u64)]) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in points {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}

pub fn compare_report(n_min: usize, n_max: usize) -> Result<CompareReport> {
    compare_report_with_jobs(n_min, n_max, 1)
}

/// Same report, with the per-n censuses spread over `jobs` worker threads.
/// Rows come back in ascending `n` regardless of `jobs`.
pub fn compare_report_with_jobs(n_min: usize, n_max: usize, jobs: usize) -> Result<CompareReport> {
    if n_min < 2 || n_max > CENSUS_MAX_N || n_min > n_max {
        return Err(Error::Domain(format!(
            "report range must satisfy 2 <= n_min <= n_max <= {CENSUS_MAX_N}, got {n_min}..{n_max}"
        )));
    }
    let breakdowns = with_pool(jobs, || {
        (n_min..=n_max)
            .into_par_iter()
            .map(emax_constructive)
            .collect::<Result<Vec<_>>>()
    })??;
    let mut rows = Vec::new();
    let mut series = PlotSeries::default();
    for b in breakdowns {
        let n = b.n;
        let point = (n, b.formula_total);
        match b.case_tag {
            CaseTag::Odd => series.odd.push(point),
            CaseTag::MultipleOf12 => series.multiple_of_12.push(point),
            _ => series.even.push(point),
        }
        rows.push(CompareRow {
            n,
            case: b.case_tag,
            formula_ebits: b.formula_total,
            constructive_ebits: b.constructive_total,
            matches: b.matches,
        });
    }
    Ok(CompareReport { rows, series })
}
