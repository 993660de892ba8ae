//! Point clouds as comma-separated rows.

use std::io::Read;
use std::path::Path;

use tda_core::PointCloud;

use crate::error::CliError;

/// Parses rows of comma-separated reals into a cloud. A first row that does
/// not parse as numbers is taken as a header and skipped.
pub fn parse_csv(reader: impl Read, origin: &str) -> Result<PointCloud, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let parse_err = |line: u64, message: String| CliError::Parse {
        path: origin.to_string(),
        line,
        message,
    };

    let mut coords = Vec::new();
    let mut width: Option<usize> = None;
    for (row, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = record.position().map_or(row as u64 + 1, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if row == 0 => continue,
            Err(e) => return Err(parse_err(line, format!("not a number: {e}"))),
        };
        if let Some(axis) = values.iter().position(|v| !v.is_finite()) {
            return Err(parse_err(
                line,
                format!("non-finite value in column {}", axis + 1),
            ));
        }
        match width {
            None => width = Some(values.len()),
            Some(w) if w != values.len() => {
                return Err(parse_err(
                    line,
                    format!("expected {w} columns, found {}", values.len()),
                ))
            }
            Some(_) => {}
        }
        coords.extend(values);
    }
    let width = width.ok_or(CliError::Input(tda_core::Error::EmptyCloud))?;
    Ok(PointCloud::from_flat(width, coords)?)
}

pub fn load_csv(path: &Path) -> Result<PointCloud, CliError> {
    let file = std::fs::File::open(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(file, &path.display().to_string())
}

/// Header `x0,x1,...` followed by one row per point, every coordinate in
/// scientific notation with 17 significant digits (exact round trip).
pub fn to_csv(cloud: &PointCloud) -> String {
    let mut out = String::new();
    let header: Vec<String> = (0..cloud.dimension()).map(|k| format!("x{k}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for p in cloud.points() {
        let row: Vec<String> = p.iter().map(|c| format!("{c:.16e}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
