//! Deterministic CSV output: `#`-prefixed metadata lines carrying the fully
//! resolved configuration, a header, and rows formatted at 12 significant
//! digits. Files are written atomically (temp file + rename).

use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};

/// 12 significant digits, scientific; the byte-exact cell format.
pub fn fmt(x: f64) -> String {
    format!("{x:.11e}")
}

/// A CSV table ready to be written.
pub struct Table {
    pub metadata: Vec<(String, String)>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# decay-spectra 0.1.0\n");
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k} = {v}\n"));
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| fmt(x)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_atomic(path, self.render().as_bytes())
    }
}

/// Writes via a sibling temp file and rename, so readers never observe a
/// partially written table.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        if !dir.exists() {
            return Err(CliError::Usage(format!(
                "output directory {} does not exist",
                dir.display()
            )));
        }
    }
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::Usage(format!("invalid output path {}", path.display())))?;
    let mut tmp = path.to_path_buf();
    tmp.set_file_name(format!("{}.tmp", file_name.to_string_lossy()));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Reads the header (first non-`#` line) of an existing CSV.
pub fn read_header(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path)?;
    for line in text.lines() {
        if !line.starts_with('#') {
            return Ok(line.split(',').map(|s| s.trim().to_string()).collect());
        }
    }
    Err(CliError::Usage(format!(
        "{} has no header line",
        path.display()
    )))
}
