//! Matrix Market coordinate format ingestion and emission.
//!
//! Only the sparsity pattern matters for coloring: numeric values are
//! skipped, `symmetric` files contribute each stored entry as an unordered
//! pair, and `general` files are read as the pattern of `A ∪ Aᵀ`. Both
//! reductions fall out of [`EdgeList::canonicalize`], so the parser just
//! collects raw pairs.

use std::io::{BufRead, Write};

use crate::error::Error;
use crate::graph::{CsrGraph, EdgeList};
use crate::Result;

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::MatrixMarket {
        line,
        reason: reason.into(),
    }
}

/// Parses a Matrix Market coordinate file into an (uncanonicalized) edge
/// list. 1-based indices are shifted to 0-based; diagonal entries become
/// self loops that canonicalization later removes.
pub fn parse_matrix_market<R: BufRead>(reader: R) -> Result<EdgeList> {
    let mut lines = reader.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected %%MatrixMarket header"))?;
    let header = header.map_err(|e| parse_err(1, e.to_string()))?;
    let tokens: Vec<String> = header.split_whitespace().map(str::to_lowercase).collect();
    if tokens.len() < 5 || tokens[0] != "%%matrixmarket" {
        return Err(parse_err(1, "expected %%MatrixMarket header"));
    }
    if tokens[1] != "matrix" {
        return Err(parse_err(1, format!("unsupported object `{}`", tokens[1])));
    }
    if tokens[2] != "coordinate" {
        return Err(parse_err(1, format!("unsupported format `{}`", tokens[2])));
    }
    match tokens[3].as_str() {
        "pattern" | "real" | "integer" | "complex" => {}
        other => return Err(parse_err(1, format!("unknown field type `{other}`"))),
    }
    let symmetric = match tokens[4].as_str() {
        "general" => false,
        "symmetric" | "skew-symmetric" | "hermitian" => true,
        other => return Err(parse_err(1, format!("unknown symmetry `{other}`"))),
    };
    let _ = symmetric; // both symmetries collapse to the same undirected pattern

    // dimensions line: first non-comment, non-empty line
    let (mut rows, mut cols, mut declared) = (0usize, 0usize, 0usize);
    let mut have_dims = false;
    let mut dims_line = 0usize;
    for (idx, line) in &mut lines {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        rows = parse_index(it.next(), lineno, "row count")?;
        cols = parse_index(it.next(), lineno, "column count")?;
        declared = parse_index(it.next(), lineno, "entry count")?;
        have_dims = true;
        dims_line = lineno;
        break;
    }
    if !have_dims {
        return Err(parse_err(2, "missing dimensions line"));
    }
    if rows != cols {
        return Err(parse_err(
            dims_line,
            format!("adjacency pattern requires a square matrix, got {rows}x{cols}"),
        ));
    }

    let mut edges = Vec::with_capacity(declared);
    let mut seen = 0usize;
    for (idx, line) in &mut lines {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        if seen == declared {
            return Err(parse_err(lineno, "more entries than declared"));
        }
        let mut it = trimmed.split_whitespace();
        let i = parse_index(it.next(), lineno, "row index")?;
        let j = parse_index(it.next(), lineno, "column index")?;
        if i == 0 || i > rows {
            return Err(parse_err(lineno, format!("row index {i} out of bounds 1..={rows}")));
        }
        if j == 0 || j > cols {
            return Err(parse_err(
                lineno,
                format!("column index {j} out of bounds 1..={cols}"),
            ));
        }
        edges.push((i - 1, j - 1));
        seen += 1;
    }
    if seen != declared {
        return Err(parse_err(
            dims_line,
            format!("declared {declared} entries but found {seen}"),
        ));
    }

    EdgeList::new(rows, edges)
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not a non-negative integer")))
}

/// Writes the graph as a `pattern symmetric` coordinate file. One entry per
/// unordered pair, lower triangle (`row > col`), 1-based, sorted. Output is
/// byte-identical for identical graphs.
pub fn write_matrix_market<W: Write>(graph: &CsrGraph, mut out: W) -> std::io::Result<()> {
    let n = graph.num_vertices();
    let pairs = graph.num_edges() / 2;
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    writeln!(out, "{n} {n} {pairs}")?;
    for v in 0..n {
        for &w in graph.neighbors(v) {
            if w < v {
                writeln!(out, "{} {}", v + 1, w + 1)?;
            }
        }
    }
    Ok(())
}
