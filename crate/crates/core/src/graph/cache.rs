//! Binary CSR cache for fast benchmark reloads.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! offset  size        field
//! 0       4           magic `PCSR`
//! 4       4           format version (u32), currently 1
//! 8       8           n, number of vertices (u64)
//! 16      8           m, number of directed adjacency entries (u64)
//! 24      8*(n+1)     row offsets (u64 each)
//! ...     8*m         column indices (u64 each)
//! ```
//!
//! The reader revalidates the full CSR invariants, so a damaged or
//! hand-edited cache cannot produce an inconsistent graph.

use std::io::{Read, Write};

use crate::error::Error;
use crate::graph::CsrGraph;
use crate::Result;

const MAGIC: [u8; 4] = *b"PCSR";
const VERSION: u32 = 1;

pub fn write_csr_cache<W: Write>(graph: &CsrGraph, mut out: W) -> std::io::Result<()> {
    out.write_all(&MAGIC)?;
    out.write_all(&VERSION.to_le_bytes())?;
    out.write_all(&(graph.num_vertices() as u64).to_le_bytes())?;
    out.write_all(&(graph.num_edges() as u64).to_le_bytes())?;
    for &offset in graph.row_offsets() {
        out.write_all(&(offset as u64).to_le_bytes())?;
    }
    for &target in graph.col_indices() {
        out.write_all(&(target as u64).to_le_bytes())?;
    }
    Ok(())
}

pub fn read_csr_cache<R: Read>(mut input: R) -> Result<CsrGraph> {
    let mut magic = [0u8; 4];
    read_exact(&mut input, &mut magic, "magic")?;
    if magic != MAGIC {
        return Err(Error::Cache("bad magic, not a CSR cache file".into()));
    }
    let version = read_u32(&mut input, "version")?;
    if version != VERSION {
        return Err(Error::Cache(format!(
            "unsupported version {version}, expected {VERSION}"
        )));
    }
    let n = read_u64(&mut input, "vertex count")? as usize;
    let m = read_u64(&mut input, "edge count")? as usize;

    let mut row_offsets = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        row_offsets.push(read_u64(&mut input, "row offset")? as usize);
    }
    let mut col_indices = Vec::with_capacity(m);
    for _ in 0..m {
        col_indices.push(read_u64(&mut input, "column index")? as usize);
    }

    let mut trailer = [0u8; 1];
    match input.read(&mut trailer) {
        Ok(0) => {}
        Ok(_) => return Err(Error::Cache("trailing bytes after column indices".into())),
        Err(e) => return Err(Error::Cache(format!("read failed: {e}"))),
    }

    CsrGraph::try_from_parts(row_offsets, col_indices)
}

fn read_exact<R: Read>(input: &mut R, buf: &mut [u8], what: &str) -> Result<()> {
    input
        .read_exact(buf)
        .map_err(|e| Error::Cache(format!("truncated while reading {what}: {e}")))
}

fn read_u32<R: Read>(input: &mut R, what: &str) -> Result<u32> {
    let mut buf = [0u8; 4];
    read_exact(input, &mut buf, what)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u64<R: Read>(input: &mut R, what: &str) -> Result<u64> {
    let mut buf = [0u8; 8];
    read_exact(input, &mut buf, what)?;
    Ok(u64::from_le_bytes(buf))
}
