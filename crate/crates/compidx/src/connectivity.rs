//! Strong components, cycle structure, and primitivity.
//!
//! A digraph is primitive when it is strongly connected and the gcd of its
//! cycle lengths is 1; then some power of the adjacency matrix is all ones
//! and the least such exponent is bounded by (n-1)^2 + 1.

use crate::digraph::Digraph;
use crate::util::gcd;
use serde::Serialize;
use thiserror::Error;

/// Strongly connected components, each sorted ascending, components ordered
/// by their minimum vertex.
pub fn strongly_connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let out: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).collect()).collect();
    // iterative Kosaraju: forward pass records finish order, reverse pass
    // peels components off the transpose
    let mut finish: Vec<usize> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        while !stack.is_empty() {
            let (u, next) = {
                let top = stack.last_mut().unwrap();
                top.1 += 1;
                (top.0, top.1 - 1)
            };
            if let Some(&v) = out[u].get(next) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                finish.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for &start in finish.iter().rev() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if d.has_arc(v, u) && comp[v] == usize::MAX {
                    comp[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components.sort_by_key(|c| c[0]);
    components
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    strongly_connected_components(d).len() == 1
}

/// Gcd of all directed cycle lengths; 0 when the digraph is acyclic.
///
/// Per strong component: breadth-first levels from its least vertex, then
/// gcd of |level(u) + 1 - level(v)| over internal arcs (u, v). The sum of
/// those terms around any cycle is the cycle length, so the gcd over arcs
/// equals the gcd over cycles without enumerating them.
pub fn cycle_gcd(d: &Digraph) -> usize {
    let mut g = 0;
    for component in strongly_connected_components(d) {
        if component.len() < 2 {
            // loop-free, so a singleton component carries no cycle
            continue;
        }
        let inside = |v: usize| component.binary_search(&v).is_ok();
        let mut level = vec![usize::MAX; d.n()];
        level[component[0]] = 0;
        let mut queue = std::collections::VecDeque::from([component[0]]);
        while let Some(u) = queue.pop_front() {
            for v in d.out_neighbors(u) {
                if inside(v) && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for &u in &component {
            for v in d.out_neighbors(u) {
                if inside(v) {
                    g = gcd(g, (level[u] as i64 + 1 - level[v] as i64).unsigned_abs() as usize);
                }
            }
        }
    }
    g
}

/// Length of a longest directed cycle, 0 when acyclic. Exact subset dynamic
/// programming inside each strong component: dp over (vertex subset, end
/// vertex) for simple paths from the subset's least vertex. Exponential in
/// component size, so components are capped at 20 vertices; callers gate on
/// digraph order before asking.
pub fn longest_cycle_length(d: &Digraph) -> usize {
    let mut best = 0;
    for component in strongly_connected_components(d) {
        let s = component.len();
        if s < 2 {
            continue;
        }
        assert!(s <= 20, "longest-cycle DP is capped at components of 20 vertices, got {s}");
        let mut local = vec![usize::MAX; d.n()];
        for (i, &v) in component.iter().enumerate() {
            local[v] = i;
        }
        let out_mask: Vec<u32> = component
            .iter()
            .map(|&v| {
                let mut m = 0u32;
                for w in d.out_neighbors(v) {
                    if local[w] != usize::MAX {
                        m |= 1 << local[w];
                    }
                }
                m
            })
            .collect();
        // dp[mask] = possible endpoints of simple paths that start at the
        // least vertex of mask and cover mask exactly
        let mut dp = vec![0u32; 1 << s];
        for v in 0..s {
            dp[1 << v] = 1 << v;
        }
        for mask in 1usize..1 << s {
            let mut ends = dp[mask];
            if ends == 0 {
                continue;
            }
            let s0 = mask.trailing_zeros() as usize;
            while ends != 0 {
                let v = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                if out_mask[v] >> s0 & 1 == 1 {
                    best = best.max(mask.count_ones() as usize);
                }
                // extend only upward from s0 so it stays the least vertex
                let mut cand = out_mask[v] & !(mask as u32) & !((1u32 << (s0 + 1)) - 1);
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    dp[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimitivityReport {
    pub strongly_connected: bool,
    pub cycle_gcd: usize,
    pub primitive: bool,
    /// Least m with A^m all ones; present exactly for primitive digraphs.
    pub exponent: Option<usize>,
}

/// Exponent search ran past the (n-1)^2 + 1 bound. Cannot happen for a
/// genuinely primitive digraph; seeing this means a bug upstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no all-ones power within the Wielandt bound {cap} (n = {n})")]
pub struct ExponentOverflow {
    pub n: usize,
    pub cap: usize,
}

pub fn primitivity(d: &Digraph) -> Result<PrimitivityReport, ExponentOverflow> {
    let strongly_connected = is_strongly_connected(d);
    let g = cycle_gcd(d);
    let primitive = strongly_connected && g == 1 && d.n() >= 2;
    let exponent = if primitive {
        let n = d.n();
        let cap = (n - 1) * (n - 1) + 1;
        let a = d.adjacency();
        let mut power = a.clone();
        let mut m = 1;
        while !power.is_all_ones() {
            m += 1;
            if m > cap {
                return Err(ExponentOverflow { n, cap });
            }
            power = power.mul(a);
        }
        Some(m)
    } else {
        None
    };
    Ok(PrimitivityReport { strongly_connected, cycle_gcd: g, primitive, exponent })
}
