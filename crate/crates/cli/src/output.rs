//! CSV and JSON emission.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::config::{Format, RunConfig};
use crate::run::Table;
use crate::CliError;

/// Shortest round-trip form; exponent notation outside `[1e-4, 1e15)`.
pub fn number(v: f64) -> String {
    let a = v.abs();
    if v != 0.0 && v.is_finite() && !(1e-4..1e15).contains(&a) {
        format!("{v:e}")
    } else {
        v.to_string()
    }
}

pub fn csv(cfg: &RunConfig, t: &Table) -> String {
    let mut s = format!("# units={} config_hash={}\n", t.units, cfg.content_hash());
    for n in &t.notes {
        s += &format!("# {n}\n");
    }
    s += &t.columns.join(",");
    s.push('\n');
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(|&v| number(v)).collect();
        s += &cells.join(",");
        s.push('\n');
    }
    s
}

pub fn json(cfg: &RunConfig, t: &Table) -> String {
    let v = json!({
        "units": t.units,
        "config_hash": cfg.content_hash(),
        "notes": t.notes,
        "columns": t.columns,
        "rows": t.rows,
    });
    serde_json::to_string_pretty(&v).expect("table serializes") + "\n"
}

/// `<out>.meta.json` next to the output file.
pub fn meta_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".meta.json");
    out.with_file_name(name)
}

fn write(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Write the table to the configured path (or stdout), plus the metadata
/// sidecar when writing to a file.
pub fn emit(cfg: &RunConfig, t: &Table) -> Result<(), CliError> {
    let body = match cfg.output.format {
        Format::Csv => csv(cfg, t),
        Format::Json => json(cfg, t),
    };
    match &cfg.output.path {
        Some(path) => {
            write(path, &body)?;
            write(&meta_path(path), &(cfg.to_json() + "\n"))?;
            for n in &t.notes {
                eprintln!("{n}");
            }
            Ok(())
        }
        None => std::io::stdout().lock().write_all(body.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        assert_eq!(number(0.25), "0.25");
        assert_eq!(number(0.0), "0");
        assert_eq!(number(1.5e-20), "1.5e-20");
        assert_eq!(number(2e16), "2e16");
        for v in [6.708535108854729e-5, -3.0e-300, 1.0 / 3.0, 123456.789] {
            assert_eq!(number(v).parse::<f64>().unwrap(), v);
        }
    }
}
