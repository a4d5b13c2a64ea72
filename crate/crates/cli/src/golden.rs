//! Reference artifacts kept under `golden/` in this crate.

use std::fs;
use std::path::{Path, PathBuf};

pub fn default_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

pub fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read golden file {}: {e}", path.display()))
}

pub fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write golden file {}: {e}", path.display()))
}

/// One table row: `n m | sizes | λ1 | TAG`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub m: usize,
    pub sizes: Vec<usize>,
    pub lambda1: usize,
    pub tag: String,
}

impl TableRow {
    pub fn render(&self) -> String {
        let sizes = self.sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        format!("{} {} | {} | {} | {}", self.n, self.m, sizes, self.lambda1, self.tag)
    }
}

pub fn parse_table(text: &str) -> Result<Vec<TableRow>, String> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || format!("golden table line {}: cannot parse {line:?}", k + 1);
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [nm, sizes, l1, tag] = fields[..] else { return Err(bad()) };
        let nm: Vec<usize> = nm.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| bad())?;
        let [n, m] = nm[..] else { return Err(bad()) };
        let sizes = sizes.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let lambda1 = l1.parse().map_err(|_| bad())?;
        if tag != "LEGM" && tag != "LELM" {
            return Err(bad());
        }
        rows.push(TableRow { n, m, sizes, lambda1, tag: tag.to_string() });
    }
    Ok(rows)
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut s = String::from("# n m | component sizes | lambda1 | status\n");
    for r in rows {
        s.push_str(&r.render());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_roundtrip() {
        let rows = vec![
            TableRow { n: 9, m: 10, sizes: vec![4, 3, 2], lambda1: 4, tag: "LEGM".into() },
            TableRow { n: 15, m: 34, sizes: vec![7, 5, 3], lambda1: 7, tag: "LELM".into() },
        ];
        assert_eq!(parse_table(&render_table(&rows)).unwrap(), rows);
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(parse_table("9 10 | 4,3,2 | 4").is_err());
        assert!(parse_table("9 | 4,3,2 | 4 | LEGM").is_err());
        assert!(parse_table("9 10 | 4,x | 4 | LEGM").is_err());
        assert!(parse_table("9 10 | 4,3,2 | 4 | BEST").is_err());
    }

    #[test]
    fn shipped_table_parses() {
        let rows = parse_table(&read(&default_path("table1.txt")).unwrap()).unwrap();
        assert_eq!(rows.len(), 11);
    }
}
