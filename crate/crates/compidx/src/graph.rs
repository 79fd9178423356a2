//! Undirected simple graphs on the full vertex set {0, ..., n-1}.
//!
//! Competition graphs keep every vertex of the digraph, isolated or not, so
//! the type never shrinks the vertex set. Edges live in one sorted list,
//! which makes equality, hashing, and serialization canonical.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds from an edge list; endpoints are normalized to (min, max),
    /// duplicates collapse, loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u != v, "loop edge {u}");
                assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
                (u.min(v), u.max(v))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        SimpleGraph { n, edges: list }
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph { n, edges }
    }

    /// Complete graph on `clique` with every other vertex isolated.
    pub fn clique_plus_isolated(n: usize, clique: &[usize]) -> Self {
        let mut set: Vec<usize> = clique.to_vec();
        set.sort_unstable();
        set.dedup();
        let mut edges = Vec::new();
        for (idx, &u) in set.iter().enumerate() {
            for &v in &set[idx + 1..] {
                edges.push((u, v));
            }
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted list of (min, max) pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_empty_graph(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Exact shape test: the edge set is precisely all pairs inside `set`.
    pub fn equals_clique_on(&self, set: &[usize]) -> bool {
        *self == Self::clique_plus_isolated(self.n, set)
    }

    /// Shape test up to vertex choice: a clique of the given size plus
    /// isolated vertices. For sizes <= 1 this means the empty graph.
    pub fn is_clique_plus_isolated(&self, clique_size: usize) -> bool {
        if clique_size <= 1 {
            return self.edges.is_empty();
        }
        let support: Vec<usize> = self
            .degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .map(|(v, _)| v)
            .collect();
        support.len() == clique_size && self.equals_clique_on(&support)
    }

    /// Edges missing relative to the complete graph, sorted.
    pub fn missing_edges(&self) -> Vec<(usize, usize)> {
        let mut missing = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    missing.push((u, v));
                }
            }
        }
        missing
    }

    /// How the graph falls short of being complete, when the shortfall is one
    /// of the handful of small patterns the score-sequence shape rules name.
    pub fn deficiency(&self) -> Deficiency {
        classify_deficiency(&self.missing_edges())
    }

    /// Order-insensitive 64-bit FNV-1a over (n, edge list); stable across
    /// runs and platforms, used to summarize graph sequences in reports.
    pub fn canonical_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.n as u64);
        for &(u, v) in &self.edges {
            eat(u as u64);
            eat(v as u64);
        }
        h
    }

    /// DOT rendering: `graph` block, vertices `v0..` ascending, then edges in
    /// sorted order. Byte-stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  v{v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  v{u} -- v{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Patterns of missing edges the shape rules distinguish. `PathK` means the
/// missing edges form a path on K vertices (K-1 edges); `Triangle` a 3-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deficiency {
    None,
    SingleEdge,
    PathOn3,
    PathOn4,
    Triangle,
    Other,
}

fn classify_deficiency(missing: &[(usize, usize)]) -> Deficiency {
    match missing.len() {
        0 => Deficiency::None,
        1 => Deficiency::SingleEdge,
        2 => {
            let (a, b) = missing[0];
            let (c, d) = missing[1];
            let shared = [a, b].iter().filter(|x| **x == c || **x == d).count();
            if shared == 1 {
                Deficiency::PathOn3
            } else {
                Deficiency::Other
            }
        }
        3 => {
            let mut verts: Vec<usize> = missing.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            let deg = |x: usize| missing.iter().filter(|&&(u, v)| u == x || v == x).count();
            match verts.len() {
                3 => Deficiency::Triangle,
                // 3 edges on 4 vertices with max degree 2 and no isolated
                // endpoint is forced to be the path
                4 if verts.iter().all(|&x| deg(x) <= 2) => Deficiency::PathOn4,
                _ => Deficiency::Other,
            }
        }
        _ => Deficiency::Other,
    }
}
