use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use log::warn;
use primegraph_core::group_counts::GroupCountTable;

/// Environment variable consulted when no `--table` flag is given.
pub const TABLE_ENV: &str = "OD_TABLE_PATH";

/// Reads a group-count table from disk. Duplicate orders are logged; the
/// last occurrence wins.
pub fn load_table(path: &Path) -> Result<GroupCountTable> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading group-count table {}", path.display()))?;
    let table = GroupCountTable::parse(&text, path.display().to_string())
        .with_context(|| format!("parsing {}", path.display()))?;
    for dup in table.duplicates() {
        warn!(
            "{}:{}: order {} listed more than once; keeping this entry",
            path.display(),
            dup.line,
            dup.order
        );
    }
    Ok(table)
}

/// `--table` if given, else `$OD_TABLE_PATH`, else the shipped table.
pub fn resolve_table(explicit: Option<&Path>) -> Result<GroupCountTable> {
    let from_env = std::env::var_os(TABLE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from);
    match explicit.map(Path::to_path_buf).or(from_env) {
        Some(path) => load_table(&path),
        None => Ok(GroupCountTable::shipped()),
    }
}
