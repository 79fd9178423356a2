//! Sink elimination: repeatedly strip every sink until the process stalls.
//!
//! Layer W_i holds the sinks of the i-th residual digraph D_i. The process
//! stops at the first index zeta where W_zeta is all of D_zeta (acyclic
//! input, every vertex eventually drains) or empty (a sink-free core with at
//! least one cycle remains). A vertex sits in layer W_i exactly when the
//! lengths of walks leaving it are {0, ..., i}, which is what
//! [`walk_length_spectrum`] measures.

use crate::digraph::Digraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TerminalKind {
    /// Last layer equals the residual vertex set: the digraph is acyclic.
    AllSinks,
    /// Last layer is empty: a sink-free (cyclic) core survives.
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SinkSequence {
    pub zeta: usize,
    /// W_0, ..., W_zeta; each sorted ascending.
    pub layers: Vec<Vec<usize>>,
    /// V(D_0), ..., V(D_zeta): vertices still present before each layer is
    /// removed. Not part of the JSON shape.
    #[serde(skip)]
    pub residuals: Vec<Vec<usize>>,
    pub terminal: TerminalKind,
}

impl SinkSequence {
    /// Union of the removed layers W_0..W_{zeta-1}, sorted.
    pub fn eliminated(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.layers[..self.zeta].iter().flat_map(|w| w.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Vertices of the terminal residual digraph D_zeta.
    pub fn survivors(&self) -> &[usize] {
        &self.residuals[self.zeta]
    }

    /// Layer index of a vertex, when it was eliminated or sits in a terminal
    /// all-sinks layer.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|w| w.binary_search(&v).is_ok())
    }
}

pub fn sink_sequence(d: &Digraph) -> SinkSequence {
    let n = d.n();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut layers = Vec::new();
    let mut residuals = Vec::new();
    let terminal;
    loop {
        let residual: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let sinks: Vec<usize> = residual
            .iter()
            .copied()
            .filter(|&v| d.out_neighbors(v).all(|w| !alive[w]))
            .collect();
        let sink_count = sinks.len();
        residuals.push(residual);
        layers.push(sinks);
        if sink_count == alive_count {
            terminal = TerminalKind::AllSinks;
            break;
        }
        if sink_count == 0 {
            terminal = TerminalKind::Empty;
            break;
        }
        for &v in layers.last().unwrap() {
            alive[v] = false;
        }
        alive_count -= sink_count;
    }
    SinkSequence { zeta: layers.len() - 1, layers, residuals, terminal }
}

/// True when the digraph has no directed cycle. Kahn peeling; the sink
/// sequence characterization (terminal all-sinks <=> acyclic) is asserted as
/// a debug cross-check.
pub fn is_acyclic(d: &Digraph) -> bool {
    let n = d.n();
    let mut outdeg: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| outdeg[v] == 0).collect();
    let mut removed = 0;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        removed += 1;
        for u in 0..n {
            if d.has_arc(u, v) {
                outdeg[u] -= 1;
                if outdeg[u] == 0 {
                    queue.push(u);
                }
            }
        }
    }
    let acyclic = removed == n;
    debug_assert_eq!(acyclic, sink_sequence(d).terminal == TerminalKind::AllSinks);
    acyclic
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkLengths {
    /// Every walk length leaving the vertex, sorted ascending (0 always
    /// counts: the trivial walk).
    Finite(Vec<usize>),
    /// The vertex reaches a directed cycle, so lengths are unbounded.
    Unbounded,
}

/// Set of walk lengths starting at `v`. `cap` only guards the finite case
/// and must be at least n; lengths in an acyclic region never reach n.
pub fn walk_length_spectrum(d: &Digraph, v: usize, cap: usize) -> WalkLengths {
    let n = d.n();
    assert!(v < n, "vertex {v} out of range");
    assert!(cap >= n, "cap {cap} below vertex count {n}");
    let reach = d.reach(v, false);
    for component in crate::connectivity::strongly_connected_components(d) {
        if component.len() >= 2 && component.iter().any(|&u| reach[u]) {
            return WalkLengths::Unbounded;
        }
    }
    // reachable region is acyclic; lengths by DP over reverse topological
    // order, sets packed into word masks
    let words = (cap + 1).div_ceil(64);
    let mut spectra: Vec<Option<Vec<u64>>> = vec![None; n];
    fn solve(d: &Digraph, u: usize, words: usize, spectra: &mut Vec<Option<Vec<u64>>>) {
        if spectra[u].is_some() {
            return;
        }
        spectra[u] = Some(vec![0; words]); // placeholder; acyclic region, no revisits
        let mut acc = vec![0u64; words];
        for w in d.out_neighbors(u) {
            solve(d, w, words, spectra);
            let ws = spectra[w].as_ref().unwrap().clone();
            // shift left by one: lengths through w grow by the first step
            let mut carry = 0u64;
            for (a, &s) in acc.iter_mut().zip(ws.iter()) {
                *a |= (s << 1) | carry;
                carry = s >> 63;
            }
        }
        acc[0] |= 1; // the empty walk
        spectra[u] = Some(acc);
    }
    solve(d, v, words, &mut spectra);
    let mask = spectra[v].as_ref().unwrap();
    let lengths: Vec<usize> =
        (0..=cap).filter(|&l| mask[l / 64] >> (l % 64) & 1 == 1).collect();
    debug_assert!(lengths.last().is_some_and(|&l| l < n));
    WalkLengths::Finite(lengths)
}
