use std::path::{Path, PathBuf};

use crate::engine::RunResult;
use crate::{Error, Result};

use super::config::Telemetry;

/// Scientific notation with six significant digits.
pub fn format_sig6(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.5e}")
    } else {
        v.to_string()
    }
}

/// Shortest representation that reads back to the same value.
pub(crate) fn format_full(v: f64) -> String {
    if v.is_finite() {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

pub(crate) fn write_csv<R, I>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(header).map_err(|e| Error::csv(path, e))?;
    for row in rows {
        w.write_record(row).map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn series(path: &Path, column: &str, values: &[f64]) -> Result<()> {
    write_csv(path, &["iter", column], values.iter().enumerate().map(|(i, v)| [(i + 1).to_string(), format_full(*v)]))
}

/// Writes the curves of one run into `dir` and returns the files written.
/// `summary` writes nothing; `curves` writes `convergence.csv`,
/// `mean_fitness.csv` and `trajectory.csv`; `full-history` adds
/// `search_history.csv` with one `iter,moth,dim,value` row per coordinate.
pub fn export_curves(result: &RunResult, dir: &Path, level: Telemetry) -> Result<Vec<PathBuf>> {
    if level == Telemetry::Summary {
        return Ok(Vec::new());
    }
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for (name, column, values) in [
        ("convergence.csv", "best_so_far", &result.convergence),
        ("mean_fitness.csv", "mean_fitness", &result.mean_fitness),
        ("trajectory.csv", "x0_agent0", &result.trajectory),
    ] {
        let path = dir.join(name);
        series(&path, column, values)?;
        written.push(path);
    }
    if level == Telemetry::FullHistory {
        let history = result
            .history
            .as_ref()
            .ok_or_else(|| Error::Data("full-history export needs a run recorded with history".into()))?;
        let path = dir.join("search_history.csv");
        let rows = history.iter().enumerate().flat_map(|(t, snap)| {
            snap.iter().enumerate().flat_map(move |(m, pos)| {
                pos.iter()
                    .enumerate()
                    .map(move |(j, v)| [(t + 1).to_string(), m.to_string(), j.to_string(), format_full(*v)])
            })
        });
        write_csv(&path, &["iter", "moth", "dim", "value"], rows)?;
        written.push(path);
    }
    Ok(written)
}
