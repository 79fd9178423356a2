//! Digraphs: loop-free, digon-free, optionally validated as complete
//! multipartite orientations (k-partite tournaments).
//!
//! A digraph is k-partite-tournament-flagged when a vertex partition is
//! attached: then no arc joins two vertices of the same part and every
//! cross-part pair carries exactly one arc. The partition can be supplied or
//! inferred; inference takes connected components of the non-adjacency
//! relation, which is the only candidate partition a complete multipartite
//! orientation can have.
//!
//! Text format (one digraph per file, `#` starts a comment):
//!
//! ```text
//! digraph 4
//! parts 0 1 0 1
//! 0 1
//! 2 1
//! ```
//!
//! The `parts` line is optional; when present the digraph must validate as a
//! k-partite tournament.

use crate::matrix::BoolMatrix;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("arc ({0}, {1}) has an endpoint out of range")]
    VertexOutOfRange(usize, usize),
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("digon between {0} and {1}")]
    DigonArc(usize, usize),
    #[error("partition lists {got} vertices, digraph has {expected}")]
    PartitionLength { expected: usize, got: usize },
    #[error("part ids must cover 0..k contiguously; id {0} is missing")]
    PartIdGap(usize),
    #[error("arc ({0}, {1}) joins two vertices of part {2}")]
    IntraPartArc(usize, usize, usize),
    #[error("vertices {0} and {1} lie in different parts but share no arc")]
    MissingCrossArc(usize, usize),
    #[error("not a multipartite tournament: {0} and {1} must share a part (no arc chain separates them) yet an arc joins them")]
    NotMultipartite(usize, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: BoolMatrix,
    partition: Option<Vec<usize>>,
}

impl Digraph {
    /// Validating constructor. `partition` fixes the parts explicitly;
    /// `require_multipartite` asks for inference when no partition is given.
    /// Supplying a partition always validates it, flag or not.
    pub fn build(
        n: usize,
        arcs: &[(usize, usize)],
        partition: Option<Vec<usize>>,
        require_multipartite: bool,
    ) -> Result<Digraph, DigraphError> {
        assert!(n >= 1, "digraph needs at least one vertex");
        let mut adj = BoolMatrix::zero(n);
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(DigraphError::VertexOutOfRange(u, v));
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if adj.get(v, u) {
                return Err(DigraphError::DigonArc(v, u));
            }
            adj.set(u, v, true);
        }
        let mut d = Digraph { n, adj, partition: None };
        match partition {
            Some(parts) => {
                d.validate_partition(&parts)?;
                d.partition = Some(parts);
            }
            None if require_multipartite => {
                d.partition = Some(d.infer_partition()?);
            }
            None => {}
        }
        Ok(d)
    }

    /// Plain digraph, no partition attached.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph, DigraphError> {
        Self::build(n, arcs, None, false)
    }

    /// k-partite tournament; infers the partition when none is given.
    pub fn multipartite(
        n: usize,
        arcs: &[(usize, usize)],
        partition: Option<Vec<usize>>,
    ) -> Result<Digraph, DigraphError> {
        Self::build(n, arcs, partition, true)
    }

    fn validate_partition(&self, parts: &[usize]) -> Result<(), DigraphError> {
        if parts.len() != self.n {
            return Err(DigraphError::PartitionLength { expected: self.n, got: parts.len() });
        }
        let k = parts.iter().copied().max().map_or(0, |m| m + 1);
        let mut seen = vec![false; k];
        for &p in parts {
            seen[p] = true;
        }
        if let Some(gap) = seen.iter().position(|&s| !s) {
            return Err(DigraphError::PartIdGap(gap));
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                let arced = self.adj.get(u, v) || self.adj.get(v, u);
                if parts[u] == parts[v] {
                    if arced {
                        return Err(DigraphError::IntraPartArc(u, v, parts[u]));
                    }
                } else if !arced {
                    return Err(DigraphError::MissingCrossArc(u, v));
                }
            }
        }
        Ok(())
    }

    /// Connected components of the non-adjacency relation, transitively
    /// closed. Fails when an arc ends up inside a component, i.e. when no
    /// complete multipartite structure exists.
    fn infer_partition(&self) -> Result<Vec<usize>, DigraphError> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut k = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = k;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    if v != u && comp[v] == usize::MAX && !self.adj.get(u, v) && !self.adj.get(v, u)
                    {
                        comp[v] = k;
                        stack.push(v);
                    }
                }
            }
            k += 1;
        }
        for u in 0..n {
            for v in u + 1..n {
                if comp[u] == comp[v] && (self.adj.get(u, v) || self.adj.get(v, u)) {
                    return Err(DigraphError::NotMultipartite(u, v));
                }
            }
        }
        Ok(comp)
    }

    /// Partition of a structurally complete multipartite orientation, whether
    /// or not one was attached at build time. None when no such partition
    /// exists.
    pub fn inferred_partition(&self) -> Option<Vec<usize>> {
        match &self.partition {
            Some(p) => Some(p.clone()),
            None => self.infer_partition().ok(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &BoolMatrix {
        &self.adj
    }

    pub fn partition(&self) -> Option<&[usize]> {
        self.partition.as_deref()
    }

    /// Number of parts when the digraph carries a partition.
    pub fn part_count(&self) -> Option<usize> {
        self.partition.as_ref().map(|p| p.iter().copied().max().map_or(0, |m| m + 1))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj.row_bits(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.adj.count_ones()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_bits(u)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.adj.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_sink(&self, u: usize) -> bool {
        self.adj.row_is_zero(u)
    }

    pub fn has_sink(&self) -> bool {
        (0..self.n).any(|u| self.is_sink(u))
    }

    /// Every pair joined by exactly one arc. Equivalent to being a
    /// multipartite tournament with n singleton parts.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.adj.get(u, v) || self.adj.get(v, u)))
    }

    /// Forward reach set from `start` (includes `start`), as a vertex-indexed
    /// bool vec; follow `reverse` to reach along transposed arcs instead.
    pub(crate) fn reach(&self, start: usize, reverse: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                let arced = if reverse { self.adj.get(v, u) } else { self.adj.get(u, v) };
                if arced && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Text serialization; parses back to an equal digraph.
    pub fn to_text(&self) -> String {
        let mut out = format!("digraph {}\n", self.n);
        if let Some(parts) = &self.partition {
            out.push_str("parts");
            for p in parts {
                out.push_str(&format!(" {p}"));
            }
            out.push('\n');
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Digraph, ParseError> {
        let mut n: Option<usize> = None;
        let mut parts: Option<Vec<usize>> = None;
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let bad = |why: &str| ParseError::Line { line: lineno + 1, reason: why.to_string() };
            if n.is_none() {
                if tokens.len() != 2 || tokens[0] != "digraph" {
                    return Err(bad("expected header `digraph <n>`"));
                }
                let count: usize =
                    tokens[1].parse().map_err(|_| bad("vertex count is not a number"))?;
                if count == 0 {
                    return Err(bad("vertex count must be at least 1"));
                }
                n = Some(count);
            } else if tokens[0] == "parts" {
                if parts.is_some() || !arcs.is_empty() {
                    return Err(bad("`parts` must come right after the header"));
                }
                let ids: Result<Vec<usize>, _> = tokens[1..].iter().map(|t| t.parse()).collect();
                parts = Some(ids.map_err(|_| bad("part ids must be numbers"))?);
            } else if tokens.len() == 2 {
                let u = tokens[0].parse().map_err(|_| bad("arc tail is not a number"))?;
                let v = tokens[1].parse().map_err(|_| bad("arc head is not a number"))?;
                arcs.push((u, v));
            } else {
                return Err(bad("expected `<u> <v>` arc line"));
            }
        }
        let n = n.ok_or(ParseError::MissingHeader)?;
        let require = parts.is_some();
        Digraph::build(n, &arcs, parts, require).map_err(ParseError::Invalid)
    }

    /// DOT rendering: `digraph` block, vertices `v0..` ascending, arcs in
    /// lexicographic order. Byte-stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph D {\n");
        for v in 0..self.n {
            out.push_str(&format!("  v{v};\n"));
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!("  v{u} -> v{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?}", self.n, self.arcs())?;
        if let Some(p) = &self.partition {
            write!(f, ", parts={p:?}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `digraph <n>` header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error(transparent)]
    Invalid(#[from] DigraphError),
}
