//! m-step competition graphs and the index/period profile of the row-graph
//! sequence.
//!
//! For a digraph with adjacency matrix A, the m-step competition graph joins
//! u and w when rows u and w of A^m share a set column (a common endpoint of
//! length-m walks). The matrix sequence A, A^2, ... over the Boolean semiring
//! is eventually periodic, so the graph sequence is too; everything about
//! "all m" reduces to a finite window.

use crate::digraph::Digraph;
use crate::graph::SimpleGraph;
use crate::matrix::BoolMatrix;
use serde::Serialize;
use std::collections::HashMap;

/// The competition graph: u and w adjacent when they share an out-neighbor.
pub fn competition_graph(d: &Digraph) -> SimpleGraph {
    d.adjacency().row_graph()
}

/// The m-step competition graph, m >= 1.
pub fn m_step_competition_graph(d: &Digraph, m: usize) -> SimpleGraph {
    assert!(m >= 1, "step count must be at least 1");
    d.adjacency().power(m).row_graph()
}

/// The sequence C^1(D), ..., C^m_max(D), building each power from the last.
pub fn graph_sequence(d: &Digraph, m_max: usize) -> Vec<SimpleGraph> {
    assert!(m_max >= 1, "sequence needs at least one entry");
    let a = d.adjacency();
    let mut out = Vec::with_capacity(m_max);
    let mut power = a.clone();
    out.push(power.row_graph());
    for _ in 1..m_max {
        power = power.mul(a);
        out.push(power.row_graph());
    }
    out
}

/// Powers A^1..A^{index+period-1} of an adjacency matrix, enough to answer
/// any question about A^m: the first repeat A^{index+period} = A^{index}
/// folds every larger exponent back into the stored range.
pub struct PowerWindow {
    n: usize,
    matrix_index: usize,
    matrix_period: usize,
    powers: Vec<BoolMatrix>,
    graphs: Vec<SimpleGraph>,
}

impl PowerWindow {
    pub fn new(d: &Digraph) -> PowerWindow {
        let a = d.adjacency();
        let mut powers = vec![a.clone()];
        // full matrices as keys: collisions are impossible, repeats exact
        let mut seen: HashMap<BoolMatrix, usize> = HashMap::new();
        seen.insert(a.clone(), 1);
        loop {
            let next = powers.last().unwrap().mul(a);
            let t = powers.len() + 1;
            if let Some(&s) = seen.get(&next) {
                // first repeat: A^t = A^s with s < t, so index s, period t-s
                let graphs = powers.iter().map(BoolMatrix::row_graph).collect();
                return PowerWindow {
                    n: d.n(),
                    matrix_index: s,
                    matrix_period: t - s,
                    powers,
                    graphs,
                };
            }
            seen.insert(next.clone(), t);
            powers.push(next);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Least i >= 1 with A^i = A^{i+period}.
    pub fn matrix_index(&self) -> usize {
        self.matrix_index
    }

    /// Least p >= 1 with A^{index} = A^{index+p}.
    pub fn matrix_period(&self) -> usize {
        self.matrix_period
    }

    /// One past the last stored exponent. Any property of A^m or C^m that is
    /// checked for all m < horizon and is invariant under adding
    /// matrix_period holds for every positive m.
    pub fn horizon(&self) -> usize {
        self.matrix_index + self.matrix_period
    }

    /// Stored exponent with A^{fold(m)} = A^m, for any m >= 1.
    pub fn fold(&self, m: usize) -> usize {
        assert!(m >= 1, "exponents start at 1");
        if m < self.horizon() {
            m
        } else {
            self.matrix_index + (m - self.matrix_index) % self.matrix_period
        }
    }

    pub fn power(&self, m: usize) -> &BoolMatrix {
        &self.powers[self.fold(m) - 1]
    }

    /// C^m(D), served from the precomputed window.
    pub fn graph(&self, m: usize) -> &SimpleGraph {
        &self.graphs[self.fold(m) - 1]
    }

    /// Entry (u, w) of A^m: is there a directed walk of length exactly m
    /// from u to w? Constant-time after construction, any m.
    pub fn has_walk(&self, u: usize, w: usize, m: usize) -> bool {
        if m == 0 {
            return u == w;
        }
        self.power(m).get(u, w)
    }
}

/// Index and period data of the competition graph sequence.
///
/// `cindex` is the least q such that the tail C^q, C^{q+1}, ... is periodic;
/// `eventual_graph_period` is the least period of that tail. `cperiod_literal`
/// is the least p with C^{cindex} = C^{cindex+p} alone, which cannot exceed
/// the tail period but is computed independently rather than assumed equal.
/// JSON field names and order are part of the CLI contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompetitionProfile {
    pub cindex: usize,
    #[serde(rename = "cperiod")]
    pub cperiod_literal: usize,
    #[serde(rename = "eventual_period")]
    pub eventual_graph_period: usize,
    pub matrix_index: usize,
    pub matrix_period: usize,
    /// Canonical hashes of C^1(D)..C^{horizon}(D), a compact fingerprint of
    /// the whole sequence. Not part of the JSON profile.
    #[serde(skip)]
    pub sequence_hashes: Vec<u64>,
}

pub fn competition_profile(d: &Digraph) -> CompetitionProfile {
    profile_with_window(d).0
}

/// Profile plus the power window it was derived from, for callers that go on
/// to interrogate individual powers or graphs.
pub fn profile_with_window(d: &Digraph) -> (CompetitionProfile, PowerWindow) {
    let w = PowerWindow::new(d);
    let (mi, mp) = (w.matrix_index, w.matrix_period);

    // least period of the periodic tail: the least divisor p of the matrix
    // period that shifts the tail onto itself
    let eventual = (1..=mp)
        .find(|&p| mp % p == 0 && (mi..mi + mp).all(|t| w.graph(t) == w.graph(t + p)))
        .expect("matrix_period itself always works");

    // walk cindex down from the matrix index one step at a time; each step
    // extends tail periodicity to one earlier exponent
    let mut cindex = mi;
    while cindex > 1 && w.graph(cindex - 1) == w.graph(cindex - 1 + eventual) {
        cindex -= 1;
    }

    let literal = (1..=eventual)
        .find(|&p| w.graph(cindex) == w.graph(cindex + p))
        .expect("the eventual period always works");

    let hashes = (1..=w.horizon()).map(|m| w.graph(m).canonical_hash()).collect();

    let profile = CompetitionProfile {
        cindex,
        cperiod_literal: literal,
        eventual_graph_period: eventual,
        matrix_index: mi,
        matrix_period: mp,
        sequence_hashes: hashes,
    };
    debug_assert!(profile.cindex <= profile.matrix_index);
    debug_assert!(profile.cperiod_literal <= profile.eventual_graph_period);
    debug_assert_eq!(profile.matrix_period % profile.eventual_graph_period, 0);
    // tail periodicity from cindex, rechecked across the stored window
    debug_assert!((profile.cindex..w.horizon()).all(|t| w.graph(t) == w.graph(t + eventual)));
    (profile, w)
}
