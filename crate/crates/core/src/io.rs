//! Text interchange: multiplication-table files, group Cayley-table files,
//! and JSON corpus manifests.
//!
//! Table file format: `#` starts a comment line; the first data line is the
//! order `n`; the next `n` lines hold `n` whitespace-separated 1-based
//! entries each (row-major). Group files use the same layout preceded by a
//! `group` header line.

use std::path::Path;

use crate::enumerate::CorpusManifest;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::table::LeftQuasigroup;

fn data_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect()
}

fn parse_rows(lines: &[&str], n: usize) -> Result<Vec<Vec<usize>>> {
    if lines.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            lines.len()
        )));
    }
    lines
        .iter()
        .map(|line| {
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry '{tok}'")))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "expected {n} entries per row, found {}",
                    row.len()
                )));
            }
            Ok(row)
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<LeftQuasigroup> {
    let lines = data_lines(text);
    let (first, rest) = lines
        .split_first()
        .ok_or_else(|| Error::Parse("empty table file".to_string()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("bad order line '{first}'")))?;
    LeftQuasigroup::from_rows_one_based(parse_rows(rest, n)?)
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let lines = data_lines(text);
    let (header, rest) = lines
        .split_first()
        .ok_or_else(|| Error::Parse("empty group file".to_string()))?;
    if *header != "group" {
        return Err(Error::Parse("group files start with a 'group' line".to_string()));
    }
    let (first, rows) = rest
        .split_first()
        .ok_or_else(|| Error::Parse("missing group order line".to_string()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("bad order line '{first}'")))?;
    let table: Vec<Vec<usize>> = parse_rows(rows, n)?
        .into_iter()
        .enumerate()
        .map(|(r, row)| {
            row.into_iter()
                .enumerate()
                .map(|(c, v)| {
                    if v == 0 || v > n {
                        Err(Error::EntryOutOfRange { row: r, col: c })
                    } else {
                        Ok(v - 1)
                    }
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    FiniteGroup::from_table(table)
}

/// 1-based visual layout, round-trips through `parse_table`.
pub fn format_table(q: &LeftQuasigroup) -> String {
    let n = q.order();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| (q.mul(a, b) + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_group(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("group\n{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| (g.mul(a, b) + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_manifest(text: &str) -> Result<CorpusManifest> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("manifest: {e}")))
}

/// Compact JSON, one line: corpus manifests can hold tens of thousands of
/// tables, so pretty-printing would inflate them several-fold.
pub fn format_manifest(manifest: &CorpusManifest) -> String {
    serde_json::to_string(manifest).expect("manifest serializes")
}

pub fn read_table(path: &Path) -> Result<LeftQuasigroup> {
    parse_table(&read_to_string(path)?)
}

pub fn read_group(path: &Path) -> Result<FiniteGroup> {
    parse_group(&read_to_string(path)?)
}

pub fn read_manifest(path: &Path) -> Result<CorpusManifest> {
    parse_manifest(&read_to_string(path)?)
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_string(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
