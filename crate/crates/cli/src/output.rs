//! CSV and JSON documents.
//!
//! Stats CSV floats use the shortest round-tripping form, with magnitudes
//! below the zero threshold written as `0`. JSON keeps raw values.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use beehive::harness::format_full;
use beehive::harness::ComparisonTable;
use beehive::{ExperimentStats, RunResult};
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const STATS_HEADER: [&str; 8] = [
    "problem", "variant", "dim", "runs", "best", "mean", "sd", "mean_nfe",
];

pub const AVERAGE_LABEL: &str = "Average Acceleration Rate (AR(%))";

/// A file, or stdout when no path is given.
pub struct Sink {
    path: Option<PathBuf>,
    inner: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> CliResult<Self> {
        match path {
            Some(p) => {
                if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
                }
                let f = File::create(p).map_err(|e| CliError::io(p, e))?;
                Ok(Self {
                    path: Some(p.to_path_buf()),
                    inner: Box::new(BufWriter::new(f)),
                })
            }
            None => Ok(Self {
                path: None,
                inner: Box::new(io::stdout().lock()),
            }),
        }
    }

    fn label(&self) -> PathBuf {
        self.path
            .clone()
            .unwrap_or_else(|| PathBuf::from("<stdout>"))
    }

    fn fail(&self, message: impl ToString) -> CliError {
        CliError::Output {
            path: self.label(),
            message: message.to_string(),
        }
    }

    pub fn finish(mut self) -> CliResult<()> {
        self.inner
            .flush()
            .map_err(|e| CliError::io(self.label(), e))
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.inner.write(buf)
    }
    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

pub fn write_json<T: Serialize>(mut sink: Sink, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut sink, value).map_err(|e| sink.fail(e))?;
    writeln!(sink).map_err(|e| sink.fail(e))?;
    sink.finish()
}

pub fn write_stats_csv(mut sink: Sink, stats: &[ExperimentStats]) -> CliResult<()> {
    {
        let mut w = csv::Writer::from_writer(&mut sink);
        let mut result = w.write_record(STATS_HEADER);
        for s in stats {
            if result.is_err() {
                break;
            }
            result = w.write_record([
                s.problem.clone(),
                s.variant.clone(),
                s.dim.to_string(),
                s.runs.to_string(),
                format_full(s.best),
                format_full(s.mean),
                format_full(s.sd),
                format_full(s.mean_nfe),
            ]);
        }
        let result = result.and_then(|_| w.flush().map_err(csv::Error::from));
        if let Err(e) = result {
            drop(w);
            return Err(sink.fail(e));
        }
    }
    sink.finish()
}

/// Parse a stats CSV written by [`write_stats_csv`].
pub fn read_stats_csv<R: Read>(reader: R) -> Result<Vec<ExperimentStats>, String> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers().map_err(|e| e.to_string())?.clone();
    if header.iter().ne(STATS_HEADER.iter().copied()) {
        return Err(format!(
            "unexpected header {:?}",
            header.iter().collect::<Vec<_>>()
        ));
    }
    let mut out = Vec::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let num = |i: usize| -> Result<f64, String> {
            field(i)
                .parse::<f64>()
                .map_err(|e| format!("record {}: {}: {e}", line + 1, STATS_HEADER[i]))
        };
        let int = |i: usize| -> Result<usize, String> {
            field(i)
                .parse::<usize>()
                .map_err(|e| format!("record {}: {}: {e}", line + 1, STATS_HEADER[i]))
        };
        out.push(ExperimentStats {
            problem: field(0).to_string(),
            variant: field(1).to_string(),
            dim: int(2)?,
            runs: int(3)?,
            best: num(4)?,
            mean: num(5)?,
            sd: num(6)?,
            mean_nfe: num(7)?,
        });
    }
    Ok(out)
}

pub fn write_trace_csv(mut sink: Sink, run: &RunResult) -> CliResult<()> {
    {
        let mut w = csv::Writer::from_writer(&mut sink);
        let mut result = w.write_record(["nfe", "best"]);
        for p in &run.trace {
            if result.is_err() {
                break;
            }
            result = w.write_record([p.nfe.to_string(), format_full(p.best)]);
        }
        let result = result.and_then(|_| w.flush().map_err(csv::Error::from));
        if let Err(e) = result {
            drop(w);
            return Err(sink.fail(e));
        }
    }
    sink.finish()
}

/// Comparison layout: one row per problem with the mean NFE of every variant
/// and the featured variant's acceleration rate against each other one,
/// then the average row.
pub fn write_comparison_csv(mut sink: Sink, table: &ComparisonTable) -> CliResult<()> {
    let mut header = vec!["problem".to_string(), "dim".to_string()];
    header.extend(table.variants.iter().map(|v| format!("nfe_{v}")));
    header.extend(
        table
            .others
            .iter()
            .map(|o| format!("ar_{}_vs_{o}", table.baseline)),
    );
    let mut rows = vec![header];
    for r in &table.rows {
        let mut row = vec![r.problem.clone(), r.dim.to_string()];
        row.extend(r.nfe.iter().map(|v| format!("{v:.1}")));
        row.extend(r.ar.iter().map(|a| ComparisonTable::format_ar(*a)));
        rows.push(row);
    }
    let mut footer = vec![AVERAGE_LABEL.to_string(), String::new()];
    footer.extend(table.variants.iter().map(|_| String::new()));
    footer.extend(table.average_ar.iter().map(|a| format!("{a:.2}")));
    rows.push(footer);
    {
        let mut w = csv::Writer::from_writer(&mut sink);
        let result = rows
            .iter()
            .try_for_each(|r| w.write_record(r))
            .and_then(|_| w.flush().map_err(csv::Error::from));
        if let Err(e) = result {
            drop(w);
            return Err(sink.fail(e));
        }
    }
    sink.finish()
}
