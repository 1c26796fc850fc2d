use std::io::Write;

use entmat_core::formulas::{census_rows_to_csv, CensusTableRow, CENSUS_MAX_N};
use entmat_core::geometry::{build_midpoint_census_with_tol, RingDegree, RingProfileEntry};
use entmat_core::{Error, Restriction};
use serde::Serialize;

use crate::{emit, finish, to_json, Format, RunConfig, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusSpan {
    Single(usize),
    /// Every n from 3 through the given bound.
    Through(usize),
}

#[derive(Serialize)]
struct CensusEntry {
    row: CensusTableRow,
    rings: Vec<RingProfileEntry>,
}

pub fn cmd_census(
    cfg: &RunConfig,
    span: CensusSpan,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let result = (|| {
        let (lo, hi) = match span {
            CensusSpan::Single(n) => (n, n),
            CensusSpan::Through(m) => (3, m),
        };
        if hi > CENSUS_MAX_N || lo < 2 || lo > hi {
            return Err(Error::SizeLimit {
                what: "census",
                n: hi,
                min: 2,
                max: CENSUS_MAX_N,
            }
            .into());
        }
        let mut entries = Vec::new();
        for n in lo..=hi {
            let c = build_midpoint_census_with_tol(n, Restriction::Complete, cfg.tol)?;
            entries.push(CensusEntry {
                row: CensusTableRow::from_census(&c),
                rings: c.ring_summaries(),
            });
        }
        let text = match cfg.format {
            Format::Json => to_json(&entries),
            Format::Csv => {
                let rows: Vec<CensusTableRow> = entries.iter().map(|e| e.row.clone()).collect();
                census_rows_to_csv(&rows)
            }
        };
        emit(cfg, out, &text)?;
        if cfg.format == Format::Csv {
            for e in &entries {
                let profile: Vec<String> = e
                    .rings
                    .iter()
                    .map(|r| match r.degree {
                        RingDegree::Uniform { degree } => format!("{}x{degree}", r.size),
                        RingDegree::Mixed { min, max } => format!("{}x{min}..{max}", r.size),
                    })
                    .collect();
                let _ = writeln!(err, "n={} rings: {}", e.row.n, profile.join(", "));
            }
        }
        Ok(EXIT_OK)
    })();
    finish(err, result)
}
