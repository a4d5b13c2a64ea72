//! Edge-list text format: a header line `n m`, then `m` lines `i j`
//! (0-based, whitespace separated). Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    let [n, m] = parse_pair(hline, header)?;

    let mut g = Graph::empty(n).map_err(|e| Error::Parse { line: hline, msg: e.to_string() })?;
    let mut count = 0;
    for (line, l) in lines {
        let [i, j] = parse_pair(line, l)?;
        let perr = |e: Error| Error::Parse { line, msg: e.to_string() };
        if i == j {
            return Err(perr(Error::SelfLoop(i)));
        }
        if i >= n || j >= n {
            return Err(perr(Error::LabelOutOfRange { i, j, label: i.max(j), n }));
        }
        if !g.insert(i, j) {
            return Err(Error::Parse { line, msg: format!("duplicate edge ({i}, {j}) inconsistent with m = {m}") });
        }
        count += 1;
    }
    if count != m {
        return Err(Error::Parse { line: hline, msg: format!("header declares m = {m}, found {count} edges") });
    }
    Ok(g)
}

fn parse_pair(line: usize, s: &str) -> Result<[usize; 2]> {
    let mut it = s.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse { line, msg: format!("expected two non-negative integers, got {s:?}") }),
    }
}

/// Writes the header and edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        writeln!(s, "{i} {j}").unwrap();
    }
    s
}
