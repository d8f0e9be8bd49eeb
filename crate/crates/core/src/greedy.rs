//! Sequential greedy coloring and the two first-fit kernels shared by the
//! greedy-family drivers.
//!
//! Color ids are positive; 0 is the "uncolored" sentinel. Both kernels
//! return the smallest color not used by any neighbor and never write the
//! color themselves: assignment is the driver's phase action, which keeps
//! the speculative write discipline in one place.

use crate::error::Error;
use crate::graph::CsrGraph;
use crate::Result;

/// Sentinel color id meaning "not yet colored".
pub const UNCOLORED: u32 = 0;

/// Read access to per-vertex colors.
///
/// The kernels only need reads; implementing this for snapshots and for
/// the drivers' shared atomic array lets the same kernel serve sequential,
/// deterministic and racy execution.
pub trait ColorRead {
    fn color_of(&self, v: usize) -> u32;
}

/// Vertex-indexed color assignment. `colors[v] == 0` means uncolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn uncolored(num_vertices: usize) -> Self {
        Coloring {
            colors: vec![UNCOLORED; num_vertices],
        }
    }

    pub fn from_colors(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub(crate) fn set(&mut self, v: usize, color: u32) {
        self.colors[v] = color;
    }

    /// Highest assigned color id (0 if nothing is colored).
    pub fn num_colors(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(UNCOLORED)
    }

    /// True when every vertex has a color.
    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }
}

impl ColorRead for Coloring {
    #[inline]
    fn color_of(&self, v: usize) -> u32 {
        self.colors[v]
    }
}

impl ColorRead for [u32] {
    #[inline]
    fn color_of(&self, v: usize) -> u32 {
        self[v]
    }
}

/// Color-indexed scratch for [`first_fit_mask`], using the vertex-stamp
/// trick: marking writes the current vertex id, so the array never needs
/// clearing between calls. Entries start at a sentinel outside the vertex
/// id range.
#[derive(Debug, Clone)]
pub struct FirstFitScratch {
    stamps: Vec<usize>,
}

const STAMP_SENTINEL: usize = usize::MAX;

impl FirstFitScratch {
    /// Scratch sized for any vertex of `g` (`max_degree + 2` entries).
    pub fn for_graph(g: &CsrGraph) -> Self {
        Self::with_capacity(g.max_degree() + 2)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        FirstFitScratch {
            stamps: vec![STAMP_SENTINEL; capacity],
        }
    }

    pub fn capacity(&self) -> usize {
        self.stamps.len()
    }

    /// Refills the scratch with the sentinel. Needed only when the same
    /// vertex will be queried again under a different coloring; queries
    /// for distinct vertices never require clearing.
    pub fn reset(&mut self) {
        self.stamps.fill(STAMP_SENTINEL);
    }
}

/// First fit over a color-indexed mark array.
///
/// Returns the smallest color `c >= 1` no neighbor of `v` currently holds.
/// The caller-provided scratch must have at least `degree(v) + 2` entries;
/// index 0 is sentinel padding and never returned. Marks are stamped with
/// `v` itself, so stale marks left by other vertices are harmless and one
/// coloring pass never clears the scratch; re-querying the same vertex
/// under a changed coloring requires [`FirstFitScratch::reset`] first.
pub fn first_fit_mask<C: ColorRead + ?Sized>(
    g: &CsrGraph,
    v: usize,
    coloring: &C,
    scratch: &mut FirstFitScratch,
) -> u32 {
    let stamps = &mut scratch.stamps;
    debug_assert!(stamps.len() >= g.degree(v) + 2, "scratch too small");
    for &w in g.neighbors(v) {
        let c = coloring.color_of(w) as usize;
        // colors beyond the scratch exceed degree(v) + 1 and cannot be the
        // answer, so they are safe to skip
        if c < stamps.len() {
            stamps[c] = v;
        }
    }
    let mut c = 1;
    while stamps[c] == v {
        c += 1;
    }
    c as u32
}

/// Window of permissible colors, one bit per color, all bits starting
/// permissible. Bit `b` of word `k` stands for color
/// `base_color + k * 64 + b`.
#[derive(Debug, Clone)]
pub struct ColorBitmask {
    words: Vec<u64>,
    base_color: u32,
}

pub const BITMASK_WORD_BITS: u32 = u64::BITS;

impl ColorBitmask {
    pub fn all_permissible(base_color: u32, num_words: usize) -> Self {
        ColorBitmask {
            words: vec![u64::MAX; num_words],
            base_color,
        }
    }

    pub fn base_color(&self) -> u32 {
        self.base_color
    }

    /// Number of colors the window spans.
    pub fn span(&self) -> u32 {
        self.words.len() as u32 * BITMASK_WORD_BITS
    }

    /// Clears the bit for `color` if it falls inside the window.
    #[inline]
    pub fn forbid(&mut self, color: u32) {
        if color < self.base_color {
            return;
        }
        let offset = color - self.base_color;
        if offset < self.span() {
            let word = (offset / BITMASK_WORD_BITS) as usize;
            let bit = offset % BITMASK_WORD_BITS;
            self.words[word] &= !(1u64 << bit);
        }
    }

    /// Smallest still-permissible color in the window (find-first-set).
    #[inline]
    pub fn first_permissible(&self) -> Option<u32> {
        for (k, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(
                    self.base_color + k as u32 * BITMASK_WORD_BITS + word.trailing_zeros(),
                );
            }
        }
        None
    }
}

/// First fit over a sliding bitmask window.
///
/// Same return contract as [`first_fit_mask`], no scratch needed. Neighbor
/// colors inside the current 64-color window clear bits; find-first-set
/// yields the answer. If a window fills up completely the window advances
/// by 64 colors and the neighbors are rescanned, which handles vertices
/// whose neighborhood already uses 64 or more consecutive colors.
pub fn first_fit_bitset<C: ColorRead + ?Sized>(g: &CsrGraph, v: usize, coloring: &C) -> u32 {
    let mut window = ColorBitmask::all_permissible(1, 1);
    loop {
        for &w in g.neighbors(v) {
            window.forbid(coloring.color_of(w));
        }
        if let Some(c) = window.first_permissible() {
            return c;
        }
        window = ColorBitmask::all_permissible(window.base_color + BITMASK_WORD_BITS, 1);
    }
}

/// Greedy coloring in the given vertex order.
///
/// Each vertex receives its first-fit color at the moment it is visited,
/// so the result is a pure function of `(g, order)` and uses at most
/// `max_degree + 1` colors.
pub fn color_sequential(g: &CsrGraph, order: &[usize]) -> Result<Coloring> {
    let n = g.num_vertices();
    if order.len() != n {
        return Err(Error::NotAPermutation(format!(
            "order has {} entries for {} vertices",
            order.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(Error::NotAPermutation(format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(Error::NotAPermutation(format!("vertex {v} appears twice")));
        }
        seen[v] = true;
    }

    let mut coloring = Coloring::uncolored(n);
    let mut scratch = FirstFitScratch::for_graph(g);
    for &v in order {
        let c = first_fit_mask(g, v, &coloring, &mut scratch);
        coloring.set(v, c);
    }
    Ok(coloring)
}

/// The natural vertex order `0..n`.
pub fn identity_order(num_vertices: usize) -> Vec<usize> {
    (0..num_vertices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeList;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> CsrGraph {
        let list = EdgeList::new(n, pairs.to_vec()).unwrap();
        CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
    }

    fn star(leaf_count: usize) -> CsrGraph {
        let pairs: Vec<_> = (1..=leaf_count).map(|leaf| (0, leaf)).collect();
        graph(leaf_count + 1, &pairs)
    }

    /// Independent oracle: smallest positive color missing from the
    /// neighbor color set, by explicit scan.
    fn brute_force_first_fit(g: &CsrGraph, v: usize, colors: &[u32]) -> u32 {
        let forbidden: std::collections::HashSet<u32> =
            g.neighbors(v).iter().map(|&w| colors[w]).collect();
        (1..).find(|c| !forbidden.contains(c)).unwrap()
    }

    #[test]
    fn mask_kernel_skips_used_colors() {
        // center of a 3-leaf star, leaves colored 1, 2, 4
        let g = star(3);
        let coloring = Coloring::from_colors(vec![0, 1, 2, 4]);
        let mut scratch = FirstFitScratch::for_graph(&g);
        assert_eq!(first_fit_mask(&g, 0, &coloring, &mut scratch), 3);
    }

    #[test]
    fn mask_kernel_returns_one_with_no_colored_neighbors() {
        let g = star(3);
        let coloring = Coloring::uncolored(4);
        let mut scratch = FirstFitScratch::for_graph(&g);
        assert_eq!(first_fit_mask(&g, 0, &coloring, &mut scratch), 1);
    }

    #[test]
    fn mask_kernel_hits_degree_plus_one() {
        let d = 5;
        let g = star(d);
        let mut colors = vec![0u32; d + 1];
        for (leaf, slot) in colors.iter_mut().enumerate().skip(1) {
            *slot = leaf as u32;
        }
        let coloring = Coloring::from_colors(colors);
        let mut scratch = FirstFitScratch::for_graph(&g);
        assert_eq!(first_fit_mask(&g, 0, &coloring, &mut scratch), d as u32 + 1);
    }

    #[test]
    fn mask_kernel_scratch_needs_no_clearing_between_vertices() {
        // one shared scratch across a whole pass: stale stamps from other
        // vertices must not leak into later queries
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]);
        let colors = vec![0u32, 2, 1, 4, 1];
        let mut scratch = FirstFitScratch::for_graph(&g);
        for v in 0..5 {
            let expected = brute_force_first_fit(&g, v, &colors);
            assert_eq!(first_fit_mask(&g, v, &colors[..], &mut scratch), expected);
        }
    }

    #[test]
    fn mask_kernel_reset_allows_requerying_a_vertex() {
        let g = star(2);
        let mut scratch = FirstFitScratch::for_graph(&g);
        let a = Coloring::from_colors(vec![0, 1, 2]);
        assert_eq!(first_fit_mask(&g, 0, &a, &mut scratch), 3);
        scratch.reset();
        let b = Coloring::from_colors(vec![0, 2, 3]);
        assert_eq!(first_fit_mask(&g, 0, &b, &mut scratch), 1);
    }

    #[test]
    fn bitset_kernel_basic() {
        let g = star(2);
        let coloring = Coloring::from_colors(vec![0, 1, 2]);
        assert_eq!(first_fit_bitset(&g, 0, &coloring), 3);
    }

    #[test]
    fn bitset_kernel_crosses_window_boundary() {
        // center of a 64-leaf star with leaves colored 1..=64: the first
        // window is exhausted and the answer comes from the second
        let d = 64;
        let g = star(d);
        let mut colors = vec![0u32; d + 1];
        for (leaf, slot) in colors.iter_mut().enumerate().skip(1) {
            *slot = leaf as u32;
        }
        assert_eq!(
            brute_force_first_fit(&g, 0, &colors),
            65,
            "oracle disagrees with construction"
        );
        let coloring = Coloring::from_colors(colors);
        assert_eq!(first_fit_bitset(&g, 0, &coloring), 65);
        let mut scratch = FirstFitScratch::for_graph(&g);
        assert_eq!(first_fit_mask(&g, 0, &coloring, &mut scratch), 65);
    }

    #[test]
    fn kernels_agree_on_randomized_states() {
        use crate::graph::{generate_rmat, RmatParams};
        use crate::rng::SplitMix64;

        let list = generate_rmat(&RmatParams::erdos_renyi_like(9, 8.0, 5)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        let n = g.num_vertices();
        let mut rng = SplitMix64::new(99);
        let mut scratch = FirstFitScratch::for_graph(&g);
        for _ in 0..200 {
            let colors: Vec<u32> = (0..n)
                .map(|_| (rng.next_u64() % (g.max_degree() as u64 + 2)) as u32)
                .collect();
            let v = (rng.next_u64() % n as u64) as usize;
            scratch.reset(); // the coloring changed, stale self-stamps would lie
            let mask = first_fit_mask(&g, v, &colors[..], &mut scratch);
            let bitset = first_fit_bitset(&g, v, &colors[..]);
            let oracle = brute_force_first_fit(&g, v, &colors);
            assert_eq!(mask, oracle);
            assert_eq!(bitset, oracle);
        }
    }

    #[test]
    fn bitmask_type_invariants() {
        let mut mask = ColorBitmask::all_permissible(1, 2);
        assert_eq!(mask.first_permissible(), Some(1));
        assert_eq!(mask.span(), 128);
        for c in 1..=70 {
            mask.forbid(c);
        }
        assert_eq!(mask.first_permissible(), Some(71));
        mask.forbid(0); // below the window, ignored
        mask.forbid(1000); // beyond the window, ignored
        assert_eq!(mask.first_permissible(), Some(71));
    }

    #[test]
    fn sequential_even_cycle_uses_two_colors() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let coloring = color_sequential(&c4, &identity_order(4)).unwrap();
        assert_eq!(coloring.num_colors(), 2);
    }

    #[test]
    fn sequential_odd_cycle_uses_three_colors() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let coloring = color_sequential(&c5, &identity_order(5)).unwrap();
        assert_eq!(coloring.colors(), &[1, 2, 1, 2, 3]);
    }

    #[test]
    fn sequential_star_center_last() {
        let g = star(4);
        let order = [1, 2, 3, 4, 0];
        let coloring = color_sequential(&g, &order).unwrap();
        assert_eq!(coloring.colors(), &[2, 1, 1, 1, 1]);
        assert_eq!(coloring.num_colors(), 2);
    }

    #[test]
    fn sequential_rejects_non_permutations() {
        let g = star(2);
        assert!(matches!(
            color_sequential(&g, &[0, 1]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            color_sequential(&g, &[0, 1, 1]),
            Err(Error::NotAPermutation(_))
        ));
        assert!(matches!(
            color_sequential(&g, &[0, 1, 5]),
            Err(Error::NotAPermutation(_))
        ));
    }

    #[test]
    fn sequential_is_deterministic() {
        let list = generate_small();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        let order = identity_order(g.num_vertices());
        assert_eq!(
            color_sequential(&g, &order).unwrap(),
            color_sequential(&g, &order).unwrap()
        );
    }

    fn generate_small() -> EdgeList {
        crate::graph::generate_rmat(&crate::graph::RmatParams::erdos_renyi_like(7, 6.0, 17))
            .unwrap()
    }
}
