//! Double-buffered worklists and prefix-sum compaction.
//!
//! Conflicting vertices are pushed into the out-buffer without atomics:
//! each worker counts its chunk's survivors, an exclusive prefix sum over
//! the chunk counts yields every worker's write offset, and a parallel
//! scatter fills the buffer. The result is the stable filter of the input
//! regardless of worker count or chunk granularity.

use rayon::prelude::*;

use crate::speculative::schedule::split_by_lens;

/// Fixed granularity for compaction counting; the output does not depend
/// on it.
const COMPACT_CHUNK: usize = 4096;

/// Ordered list of vertex ids awaiting (re)coloring.
///
/// Drivers hold two of these and swap them by reference each iteration, so
/// no worklist is ever copied. A buffer never holds duplicate ids: input
/// worklists enumerate distinct vertices and compaction filters them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Worklist {
    items: Vec<usize>,
}

impl Worklist {
    pub fn new() -> Self {
        Worklist { items: Vec::new() }
    }

    /// Worklist holding every vertex of an `n`-vertex graph in id order.
    pub fn all_vertices(n: usize) -> Self {
        Worklist {
            items: (0..n).collect(),
        }
    }

    pub fn from_vec(items: Vec<usize>) -> Self {
        Worklist { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.items
    }

    pub(crate) fn items_mut(&mut self) -> &mut Vec<usize> {
        &mut self.items
    }
}

/// Stable parallel filter: keeps exactly the flagged candidates, in input
/// order.
pub fn compact_worklist(candidates: &[usize], flags: &[bool]) -> Worklist {
    let mut out = Worklist::new();
    compact_into(candidates, flags, out.items_mut());
    out
}

pub(crate) fn compact_into(candidates: &[usize], flags: &[bool], out: &mut Vec<usize>) {
    assert_eq!(
        candidates.len(),
        flags.len(),
        "one flag per candidate required"
    );
    out.clear();
    let len = candidates.len();
    if len == 0 {
        return;
    }
    let num_chunks = len.div_ceil(COMPACT_CHUNK);
    let chunk_range = |ci: usize| {
        let start = ci * COMPACT_CHUNK;
        start..(start + COMPACT_CHUNK).min(len)
    };

    let counts: Vec<usize> = (0..num_chunks)
        .into_par_iter()
        .map(|ci| flags[chunk_range(ci)].iter().filter(|&&f| f).count())
        .collect();

    let total: usize = counts.iter().sum();
    out.resize(total, 0);

    let out_slices = split_by_lens(&mut out[..], counts.iter().copied());
    out_slices
        .into_par_iter()
        .enumerate()
        .for_each(|(ci, slice)| {
            let mut k = 0;
            for i in chunk_range(ci) {
                if flags[i] {
                    slice[k] = candidates[i];
                    k += 1;
                }
            }
            debug_assert_eq!(k, slice.len());
        });
}
