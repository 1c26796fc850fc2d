use std::fs;
use std::io::Write;
use std::path::PathBuf;

use entmat_core::compare_report_with_jobs;
use entmat_core::formulas::CompareReport;

use crate::{emit, finish, svg, to_json, write_file, CliError, Format, RunConfig, EXIT_OK};

/// Optional side outputs of `maxent`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlotOutputs {
    pub series_dir: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

pub fn cmd_maxent(
    cfg: &RunConfig,
    n_min: usize,
    n_max: usize,
    plots: &PlotOutputs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let result = (|| {
        let report = compare_report_with_jobs(n_min, n_max, cfg.jobs)?;
        let text = match cfg.format {
            Format::Json => to_json(&report),
            Format::Csv => report.to_csv(),
        };
        emit(cfg, out, &text)?;
        if let Some(dir) = &plots.series_dir {
            fs::create_dir_all(dir)
                .map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
            for (name, points) in report.series.families() {
                write_file(
                    &dir.join(format!("{name}.csv")),
                    &CompareReport::series_csv(points),
                )?;
            }
        }
        if let Some(path) = &plots.svg {
            write_file(path, &svg::line_chart(&report.series))?;
        }
        for row in report.rows.iter().filter(|r| !r.matches) {
            let _ = writeln!(
                err,
                "n={}: constructive {} differs from closed form {}",
                row.n, row.constructive_ebits, row.formula_ebits
            );
        }
        Ok(EXIT_OK)
    })();
    finish(err, result)
}
