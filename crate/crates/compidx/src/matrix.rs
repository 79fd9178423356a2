//! Boolean matrices over the (OR, AND) semiring, stored as packed bit rows.
//!
//! Multiplication works row by row: row i of `a*b` is the OR of the rows of
//! `b` selected by the set bits of row i of `a`. That is the whole kernel the
//! crate runs on; everything else (powers, row graphs, reachability) reduces
//! to it plus word-wise scans.

use crate::graph::SimpleGraph;
use std::fmt;
use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("matrix dimensions differ: {left} vs {right}")]
pub struct DimensionMismatch {
    pub left: usize,
    pub right: usize,
}

/// Square 0/1 matrix with rows packed into `u64` words.
///
/// Invariant: bits at column positions >= n are always zero, so `Eq` and
/// `Hash` on the raw words are canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zero(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        BoolMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.bits[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n && j < self.n);
        let w = i * self.words + j / WORD;
        if value {
            self.bits[w] |= 1 << (j % WORD);
        } else {
            self.bits[w] &= !(1 << (j % WORD));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Column indices of the set bits of row i, ascending.
    pub fn row_bits(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(i))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub fn rows_intersect(&self, i: usize, j: usize) -> bool {
        self.row(i).iter().zip(self.row(j)).any(|(&a, &b)| a & b != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_all_ones(&self) -> bool {
        (0..self.n).all(|i| {
            let row = self.row(i);
            let mut full = row[..self.words - 1].iter().all(|&w| w == !0);
            let tail = self.n - (self.words - 1) * WORD;
            let mask = if tail == WORD { !0 } else { (1u64 << tail) - 1 };
            full &= row[self.words - 1] == mask;
            full
        })
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in self.row_bits(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Semiring product. Errors when the operands have different orders.
    pub fn multiply(&self, other: &BoolMatrix) -> Result<BoolMatrix, DimensionMismatch> {
        if self.n != other.n {
            return Err(DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        debug_assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            let (lo, hi) = (i * self.words, (i + 1) * self.words);
            for t in BitIter::new(&self.bits[lo..hi]) {
                let src = t * self.words;
                for w in 0..self.words {
                    out.bits[lo + w] |= other.bits[src + w];
                }
            }
        }
        out
    }

    /// `self` to the m-th semiring power; `m = 0` gives the identity.
    pub fn power(&self, m: usize) -> BoolMatrix {
        let mut acc = Self::identity(self.n);
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row graph: vertices are row indices, an edge joins two rows that share
    /// a set column. For an adjacency power A^m this is the m-step
    /// competition graph.
    pub fn row_graph(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows_intersect(i, j) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::new(self.n, edges)
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{}", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Ascending iterator over set bit positions of a word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let current = words.first().copied().unwrap_or(0);
        BitIter { words, word_idx: 0, current }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_rows(rows: &[&[usize]]) -> BoolMatrix {
        let mut m = BoolMatrix::zero(rows.len());
        for (i, row) in rows.iter().enumerate() {
            for &j in *row {
                m.set(i, j, true);
            }
        }
        m
    }

    fn triangle() -> BoolMatrix {
        // 0 -> 1 -> 2 -> 0
        from_rows(&[&[1], &[2], &[0]])
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let a = triangle();
        let id = BoolMatrix::identity(3);
        assert_eq!(a.multiply(&id).unwrap(), a);
        assert_eq!(id.multiply(&a).unwrap(), a);
    }

    #[test]
    fn triangle_powers_cycle_with_period_three() {
        let a = triangle();
        assert_eq!(a.power(3), BoolMatrix::identity(3));
        assert_eq!(a.power(4), a);
    }

    #[test]
    fn transitive_tournament_power_is_nilpotent() {
        // arcs l -> k for l > k on 4 vertices
        let a = from_rows(&[&[], &[0], &[0, 1], &[0, 1, 2]]);
        assert!(!a.power(3).is_zero());
        assert!(a.power(4).is_zero());
    }

    #[test]
    fn all_ones_absorbs() {
        let mut j = BoolMatrix::zero(3);
        for i in 0..3 {
            for k in 0..3 {
                j.set(i, k, true);
            }
        }
        assert!(j.is_all_ones());
        // J * A = J whenever A has no zero column
        let a = triangle();
        assert!(j.multiply(&a).unwrap().is_all_ones());
    }

    #[test]
    fn dimension_mismatch_reported() {
        let a = BoolMatrix::zero(3);
        let b = BoolMatrix::zero(4);
        assert_eq!(a.multiply(&b), Err(DimensionMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn row_graph_of_identity_is_empty() {
        assert_eq!(BoolMatrix::identity(5).row_graph().edge_count(), 0);
    }

    #[test]
    fn row_graph_joins_rows_sharing_a_column() {
        // rows 0 and 2 share column 1; row 1 empty
        let m = from_rows(&[&[1], &[], &[1, 2]]);
        let g = m.row_graph();
        assert_eq!(g.edges(), &[(0, 2)]);
    }

    #[test]
    fn bit_iter_crosses_word_boundaries() {
        let mut m = BoolMatrix::zero(130);
        for j in [0, 63, 64, 129] {
            m.set(0, j, true);
        }
        assert_eq!(m.row_bits(0).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
    }

    prop_compose! {
        fn arb_matrix(n: usize)(cells in prop::collection::vec(any::<bool>(), n * n)) -> BoolMatrix {
            let mut m = BoolMatrix::zero(n);
            for (idx, &b) in cells.iter().enumerate() {
                if b {
                    m.set(idx / n, idx % n, true);
                }
            }
            m
        }
    }

    proptest! {
        // A^(p+q) = A^p * A^q
        #[test]
        fn power_additivity(a in arb_matrix(6), p in 0usize..=6, q in 0usize..=6) {
            prop_assert_eq!(a.power(p + q), a.power(p).mul(&a.power(q)));
        }

        // row graph is symmetric in the two rows and matches a direct scan
        #[test]
        fn row_graph_matches_direct_scan(a in arb_matrix(6)) {
            let g = a.row_graph();
            for i in 0..6 {
                for j in (i + 1)..6 {
                    let shared = (0..6).any(|c| a.get(i, c) && a.get(j, c));
                    prop_assert_eq!(g.has_edge(i, j), shared);
                }
            }
        }
    }
}
