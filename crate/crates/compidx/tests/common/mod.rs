//! Helpers shared by the integration tests: an independent walk-enumeration
//! oracle for m-step competition graphs and small corpus builders.

#![allow(dead_code)]

use compidx::{Digraph, SimpleGraph};

/// For each start vertex, the set reachable by directed walks of length
/// exactly m, computed by m rounds of frontier expansion. No matrices.
pub fn exact_step_reach(d: &Digraph, m: usize) -> Vec<Vec<bool>> {
    let n = d.n();
    let mut reach: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut row = vec![false; n];
            row[v] = true;
            row
        })
        .collect();
    for _ in 0..m {
        reach = reach
            .iter()
            .map(|row| {
                let mut next = vec![false; n];
                for u in 0..n {
                    if row[u] {
                        for w in d.out_neighbors(u) {
                            next[w] = true;
                        }
                    }
                }
                next
            })
            .collect();
    }
    reach
}

/// m-step competition graph straight from the definition: u and v adjacent
/// when some vertex is hit by length-m walks from both.
pub fn oracle_m_step(d: &Digraph, m: usize) -> SimpleGraph {
    let n = d.n();
    let reach = exact_step_reach(d, m);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (0..n).any(|x| reach[u][x] && reach[v][x]) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges)
}

/// Directed n-cycle with extra skip-ahead chords; the chord at j adds the arc
/// j -> j+2 (mod n), giving cycle lengths n and n-1, hence a primitive digraph.
pub fn cycle_with_chords(n: usize, chords: &[usize]) -> Digraph {
    assert!(n >= 4, "chords would create digons below n = 4");
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for &j in chords {
        let a = (j % n, (j + 2) % n);
        // skip chords that would collide with an existing arc or its reverse
        if !arcs.contains(&a) && !arcs.contains(&(a.1, a.0)) {
            arcs.push(a);
        }
    }
    Digraph::new(n, &arcs).expect("cycle plus skip chords is loop-free and digon-free")
}

/// Six vertices, three parts, a directed triangle and an induced 4-cycle both
/// feeding one eliminated vertex; exercises the walk claims that need both
/// cycle kinds at once.
pub fn both_cycle_kinds_fixture() -> Digraph {
    let arcs = [
        (0, 2),
        (2, 1),
        (1, 3),
        (3, 0),
        (2, 4),
        (4, 0),
        (1, 4),
        (3, 4),
        (0, 5),
        (1, 5),
        (2, 5),
        (3, 5),
    ];
    Digraph::multipartite(6, &arcs, Some(vec![0, 0, 1, 1, 2, 2]))
        .expect("fixture is a valid 3-partite tournament")
}
