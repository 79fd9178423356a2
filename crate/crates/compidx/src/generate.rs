//! Instance families: deterministic constructions, seeded random
//! orientations, and exhaustive enumeration of small multipartite
//! tournaments.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`), seeded with a single u64.
//! ChaCha8 keeps identical streams across platforms and releases, so every
//! seeded family is reproducible bit for bit. One 64-bit draw decides each
//! coin flip (low bit set: the lexicographically smaller endpoint shoots
//! first).

use crate::digraph::Digraph;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Seed for every random family in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no tournament on {n} vertices eliminates in exactly {i} rounds")]
    InvalidZeta { n: usize, i: usize },
    #[error("layers {0} and {1} share a part; consecutive layers must differ")]
    ConsecutiveSamePart(usize, usize),
    #[error("layer sizes and layer parts must be equally many and nonempty")]
    LayerShape,
    #[error("layer sizes must be at least 1 (layer {0})")]
    EmptyLayer(usize),
    #[error("layer part ids must cover 0..k contiguously; id {0} is missing")]
    PartIdGap(usize),
    #[error("{cross_pairs} cross pairs exceed the enumeration limit of 30")]
    TooLarge { cross_pairs: usize },
    #[error("no orientation with a sink and a cycle found in {tries} tries")]
    ExhaustedTries { tries: usize },
}

/// Transitive tournament: arc l -> k exactly when l > k. Sink elimination
/// peels singleton layers {0}, {1}, ... so zeta = n - 1.
pub fn transitive_tournament(n: usize) -> Digraph {
    assert!(n >= 1);
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for l in 1..n {
        for k in 0..l {
            arcs.push((l, k));
        }
    }
    Digraph::multipartite(n, &arcs, Some((0..n).collect()))
        .expect("transitive tournament is valid")
}

/// Tournament with a sink whose elimination takes exactly `i` rounds: the
/// transitive tournament with the arc (n-1, i) turned around, which plants
/// the cycle i -> n-1 -> n-2 -> ... -> i+1 -> i above the first i layers.
///
/// Feasible exactly for 1 <= i <= n-1 with i != n-2; the top value i = n-1
/// degenerates to the plain transitive tournament.
pub fn zeta_tournament(n: usize, i: usize) -> Result<Digraph, GenError> {
    if n < 1 || i == 0 || i > n - 1 || (n >= 2 && i == n - 2) {
        return Err(GenError::InvalidZeta { n, i });
    }
    if i == n - 1 {
        return Ok(transitive_tournament(n));
    }
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for l in 1..n {
        for k in 0..l {
            if (l, k) == (n - 1, i) {
                arcs.push((i, n - 1));
            } else {
                arcs.push((l, k));
            }
        }
    }
    Ok(Digraph::multipartite(n, &arcs, Some((0..n).collect()))
        .expect("reversed arc keeps the tournament simple"))
}

/// Acyclic k-partite tournament rebuilt from its intended sink layers.
/// Layer j gets `layer_sizes[j]` fresh vertices in part `layer_parts[j]`;
/// every cross-part pair from a higher layer shoots down to the lower one.
/// The sink sequence of the result is exactly the given layering.
pub fn acyclic_kpartite(layer_sizes: &[usize], layer_parts: &[usize]) -> Result<Digraph, GenError> {
    if layer_sizes.is_empty() || layer_sizes.len() != layer_parts.len() {
        return Err(GenError::LayerShape);
    }
    if let Some(j) = layer_sizes.iter().position(|&s| s == 0) {
        return Err(GenError::EmptyLayer(j));
    }
    for j in 1..layer_parts.len() {
        if layer_parts[j] == layer_parts[j - 1] {
            return Err(GenError::ConsecutiveSamePart(j - 1, j));
        }
    }
    let k = layer_parts.iter().copied().max().unwrap() + 1;
    let mut seen = vec![false; k];
    for &p in layer_parts {
        seen[p] = true;
    }
    if let Some(gap) = seen.iter().position(|&s| !s) {
        return Err(GenError::PartIdGap(gap));
    }

    let n: usize = layer_sizes.iter().sum();
    let mut layer_of = Vec::with_capacity(n);
    let mut partition = Vec::with_capacity(n);
    for (j, &size) in layer_sizes.iter().enumerate() {
        for _ in 0..size {
            layer_of.push(j);
            partition.push(layer_parts[j]);
        }
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if layer_of[u] > layer_of[v] && partition[u] != partition[v] {
                arcs.push((u, v));
            }
        }
    }
    Ok(Digraph::multipartite(n, &arcs, Some(partition))
        .expect("layered construction is a valid k-partite tournament"))
}

/// Uniform random orientation of the complete multipartite graph with the
/// given part sizes. Part p occupies the next `part_sizes[p]` vertex ids;
/// cross pairs are flipped in lexicographic order, one ChaCha8 draw each.
pub fn random_kpartite(part_sizes: &[usize], seed: Seed) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    random_kpartite_with(part_sizes, &mut rng)
}

fn partition_of(part_sizes: &[usize]) -> Vec<usize> {
    assert!(!part_sizes.is_empty() && part_sizes.iter().all(|&s| s >= 1));
    let mut partition = Vec::new();
    for (p, &size) in part_sizes.iter().enumerate() {
        partition.extend(std::iter::repeat(p).take(size));
    }
    partition
}

fn random_kpartite_with(part_sizes: &[usize], rng: &mut ChaCha8Rng) -> Digraph {
    let partition = partition_of(part_sizes);
    let n = partition.len();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if partition[u] != partition[v] {
                if rng.next_u64() & 1 == 1 {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
        }
    }
    Digraph::multipartite(n, &arcs, Some(partition)).expect("one arc per cross pair")
}

/// Rejection-samples random orientations until one has both a sink and a
/// directed cycle. Draws stay on a single ChaCha8 stream, so the result is a
/// deterministic function of (part_sizes, seed, max_tries).
pub fn sink_cycle_kpartite(
    part_sizes: &[usize],
    seed: Seed,
    max_tries: usize,
) -> Result<Digraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    for _ in 0..max_tries {
        let d = random_kpartite_with(part_sizes, &mut rng);
        if d.has_sink() && !crate::sink::is_acyclic(&d) {
            return Ok(d);
        }
    }
    Err(GenError::ExhaustedTries { tries: max_tries })
}

/// Exhaustive orientation stream of the complete multipartite graph: bit b
/// of the counter decides pair b (0: smaller id shoots first). Errors when
/// more than 30 cross pairs would overflow the enumeration.
pub fn orientations(part_sizes: &[usize]) -> Result<Orientations, GenError> {
    let partition = partition_of(part_sizes);
    let n = partition.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if partition[u] != partition[v] {
                pairs.push((u, v));
            }
        }
    }
    if pairs.len() > 30 {
        return Err(GenError::TooLarge { cross_pairs: pairs.len() });
    }
    Ok(Orientations { partition, pairs, next: 0 })
}

/// All labeled tournaments on n vertices (n singleton parts).
pub fn all_tournaments(n: usize) -> Result<Orientations, GenError> {
    orientations(&vec![1; n])
}

pub struct Orientations {
    partition: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl Orientations {
    pub fn count(&self) -> u64 {
        1 << self.pairs.len()
    }
}

impl Iterator for Orientations {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= 1 << self.pairs.len() {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let arcs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(b, &(u, v))| if mask >> b & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        Some(
            Digraph::multipartite(self.partition.len(), &arcs, Some(self.partition.clone()))
                .expect("every orientation is valid"),
        )
    }
}
