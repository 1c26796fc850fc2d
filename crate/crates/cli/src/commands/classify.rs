use std::fs;
use std::io::Write;
use std::path::Path;

use entmat_core::classify::{ClassifyCache, CLASSIFY_MAX_N};
use entmat_core::graph::pair_count;
use entmat_core::{classify, ClassificationTable, Error};

use crate::{emit, finish, to_json, CliError, Format, RunConfig, EXIT_OK};

/// Reads the cache at `path`. A missing file is an empty cache; an
/// unreadable schema or a different version is discarded with a warning.
pub(crate) fn load_cache(path: &Path, err: &mut dyn Write) -> Result<ClassifyCache, CliError> {
    if !path.exists() {
        return Ok(ClassifyCache::default());
    }
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    match ClassifyCache::from_json(&text) {
        Ok(c) if c.is_compatible() => Ok(c),
        Ok(c) => {
            let _ = writeln!(
                err,
                "warning: cache {} has schema {} v{} ({}); recomputing",
                path.display(),
                c.schema,
                c.version,
                c.code_version
            );
            Ok(ClassifyCache::default())
        }
        Err(e) => {
            let _ = writeln!(
                err,
                "warning: cache {} unreadable ({e}); recomputing",
                path.display()
            );
            Ok(ClassifyCache::default())
        }
    }
}

fn save_cache(path: &Path, cache: &ClassifyCache) -> Result<(), CliError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, cache.to_json())
        .and_then(|()| fs::rename(&tmp, path))
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Cheap structural checks on a cached table; anything failing is
/// recomputed rather than trusted.
pub(crate) fn plausible(table: &ClassificationTable, n: usize) -> bool {
    table.n == n
        && !table.rows.is_empty()
        && table.labeled_total() == 1u64 << pair_count(n)
        && table.rows.iter().all(|r| r.canonical.n() == n)
}

pub fn cmd_classify(cfg: &RunConfig, n: usize, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = (|| {
        if !(2..=CLASSIFY_MAX_N).contains(&n) {
            return Err(Error::SizeLimit {
                what: "classify",
                n,
                min: 2,
                max: CLASSIFY_MAX_N,
            }
            .into());
        }
        let table = match &cfg.cache {
            None => classify(n, cfg.backend, cfg.jobs)?,
            Some(path) => {
                let mut cache = load_cache(path, err)?;
                match cache.get(n, cfg.backend) {
                    Some(t) if t.backend == cfg.backend && plausible(t, n) => t.clone(),
                    _ => {
                        let t = classify(n, cfg.backend, cfg.jobs)?;
                        cache.insert(t.clone());
                        save_cache(path, &cache)?;
                        t
                    }
                }
            }
        };
        let text = match cfg.format {
            Format::Json => to_json(&table),
            Format::Csv => table.to_csv(),
        };
        emit(cfg, out, &text)?;
        Ok(EXIT_OK)
    })();
    finish(err, result)
}
