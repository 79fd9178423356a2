//! Structural invariants on random digraphs: the matrix kernel against the
//! walk oracle, window folding, sink-layer bookkeeping, cycle detection
//! against brute force, and generator determinism.

mod common;

use compidx::competition::profile_with_window;
use compidx::generate::{self, orientations};
use compidx::sink::{is_acyclic, sink_sequence, walk_length_spectrum, WalkLengths};
use compidx::structure::{find_holes4, find_triangles, has_typed_walk, typed_walk_witness, WalkKind};
use compidx::{m_step_competition_graph, Digraph, Seed};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Any loop-free digon-free digraph on up to six vertices: one three-way
/// choice (absent, forward, backward) per unordered pair.
fn arb_digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |choices| {
            let mut arcs = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match choices[idx] {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                    idx += 1;
                }
            }
            Digraph::new(n, &arcs).expect("construction avoids loops and digons")
        })
    })
}

fn brute_triangles(d: &Digraph) -> BTreeSet<(usize, usize, usize)> {
    let n = d.n();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u < v && u < w && v != w && d.has_arc(u, v) && d.has_arc(v, w) && d.has_arc(w, u)
                {
                    out.insert((u, v, w));
                }
            }
        }
    }
    out
}

fn brute_holes(d: &Digraph) -> BTreeSet<(usize, usize, usize, usize)> {
    let n = d.n();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let four = [a, b, c, e];
                    let distinct: BTreeSet<usize> = four.iter().copied().collect();
                    if distinct.len() != 4 || four.iter().min() != Some(&a) {
                        continue;
                    }
                    let cycle = [(a, b), (b, c), (c, e), (e, a)];
                    if !cycle.iter().all(|&(x, y)| d.has_arc(x, y)) {
                        continue;
                    }
                    // induced: no arcs among the four besides the cycle
                    let induced = four.iter().all(|&x| {
                        four.iter().all(|&y| {
                            x == y || cycle.contains(&(x, y)) || !d.has_arc(x, y)
                        })
                    });
                    if induced {
                        out.insert((a, b, c, e));
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn matrix_kernel_matches_walk_oracle(d in arb_digraph(), m in 1usize..=5) {
        prop_assert_eq!(m_step_competition_graph(&d, m), common::oracle_m_step(&d, m));
    }

    #[test]
    fn text_format_round_trips(d in arb_digraph()) {
        let back = Digraph::parse(&d.to_text()).expect("own output parses");
        prop_assert_eq!(back, d);
    }

    #[test]
    fn window_folds_onto_computed_powers(d in arb_digraph()) {
        let (p, win) = profile_with_window(&d);
        prop_assert_eq!(win.horizon(), p.matrix_index + p.matrix_period);
        prop_assert!(p.cindex <= p.matrix_index);
        prop_assert!(p.cperiod_literal <= p.eventual_graph_period);
        prop_assert_eq!(p.matrix_period % p.eventual_graph_period, 0);
        for m in p.matrix_index..win.horizon() {
            prop_assert_eq!(win.graph(m + p.matrix_period), win.graph(m));
            prop_assert_eq!(win.graph(m + 7 * p.matrix_period), win.graph(m));
        }
        // the literal period really repeats at the index
        if p.cindex >= 1 {
            prop_assert_eq!(
                m_step_competition_graph(&d, p.cindex),
                m_step_competition_graph(&d, p.cindex + p.cperiod_literal)
            );
        }
    }

    #[test]
    fn sink_layers_partition_the_vertices(d in arb_digraph()) {
        let ss = sink_sequence(&d);
        let mut all = ss.eliminated();
        all.extend_from_slice(ss.survivors());
        all.sort_unstable();
        prop_assert_eq!(all, (0..d.n()).collect::<Vec<_>>());
        prop_assert!(ss.zeta <= d.n());
        for (i, layer) in ss.layers.iter().enumerate() {
            for &v in layer {
                prop_assert_eq!(ss.layer_of(v), Some(i));
            }
        }
    }

    #[test]
    fn acyclic_powers_die_and_eliminated_vertices_go_quiet(d in arb_digraph()) {
        let ss = sink_sequence(&d);
        let (_, win) = profile_with_window(&d);
        if is_acyclic(&d) {
            // zeta is the longest walk length, so C^m is empty from zeta+1 on
            prop_assert!(win.graph(ss.zeta + 1).is_empty_graph());
            for (i, layer) in ss.layers.iter().enumerate() {
                for &v in layer {
                    let want: Vec<usize> = (0..=i).collect();
                    prop_assert_eq!(walk_length_spectrum(&d, v, d.n()), WalkLengths::Finite(want));
                }
            }
        }
        // a vertex eliminated at layer i has no m-walks for m > i,
        // acyclic or not
        for m in 1..win.horizon() {
            let degrees = win.graph(m).degrees();
            for v in 0..d.n() {
                if ss.layer_of(v).is_some_and(|i| i < m && i < ss.zeta) {
                    prop_assert_eq!(degrees[v], 0, "v{} live in C^{}", v, m);
                }
            }
        }
    }

    #[test]
    fn sinkless_digraphs_grow_monotonically(d in arb_digraph()) {
        if !d.has_sink() {
            let (_, win) = profile_with_window(&d);
            for m in 1..win.horizon() {
                for &(u, v) in win.graph(m).edges() {
                    prop_assert!(win.graph(m + 1).has_edge(u, v), "edge lost at m={}", m);
                }
            }
        }
    }

    #[test]
    fn cycle_detection_matches_brute_force(d in arb_digraph()) {
        let tri: BTreeSet<_> = find_triangles(&d).triangles.into_iter().collect();
        prop_assert_eq!(tri, brute_triangles(&d));
        let holes: BTreeSet<_> = find_holes4(&d).holes.into_iter().collect();
        prop_assert_eq!(holes, brute_holes(&d));
    }
}

#[test]
fn typed_walk_witnesses_are_real_walks() {
    let mut seen = 0usize;
    for seed in 0..40u64 {
        for sizes in [&[2usize, 3][..], &[1, 2, 2], &[1, 1, 2]] {
            let Ok(d) = generate::sink_cycle_kpartite(sizes, Seed(seed), 10_000) else {
                continue;
            };
            let ss = sink_sequence(&d);
            for w in ss.eliminated() {
                for u in 0..d.n() {
                    for kind in [WalkKind::Type1, WalkKind::Type2] {
                        if !has_typed_walk(&d, u, w, kind) {
                            assert!(typed_walk_witness(&d, u, w, kind).is_none());
                            continue;
                        }
                        let walk = typed_walk_witness(&d, u, w, kind)
                            .expect("witness exists when the search succeeds");
                        assert_eq!(walk.first(), Some(&u));
                        assert_eq!(walk.last(), Some(&w));
                        for pair in walk.windows(2) {
                            assert!(d.has_arc(pair[0], pair[1]), "broken step in {walk:?}");
                        }
                        let visited: BTreeSet<usize> = walk.iter().copied().collect();
                        let covered = match kind {
                            WalkKind::Type1 => find_triangles(&d)
                                .triangles
                                .iter()
                                .any(|&(a, b, c)| [a, b, c].iter().all(|x| visited.contains(x))),
                            WalkKind::Type2 => find_holes4(&d).holes.iter().any(|&(a, b, c, e)| {
                                [a, b, c, e].iter().all(|x| visited.contains(x))
                            }),
                        };
                        assert!(covered, "walk {walk:?} covers no cycle of its kind");
                        seen += 1;
                    }
                }
            }
        }
    }
    assert!(seen >= 100, "only {seen} witnesses exercised");
}

#[test]
fn generators_are_deterministic_and_exhaustive() {
    for sizes in [&[2usize, 3][..], &[1, 1, 2]] {
        let a = generate::random_kpartite(sizes, Seed(11));
        let b = generate::random_kpartite(sizes, Seed(11));
        assert_eq!(a, b, "same seed, same digraph");
        let c = generate::random_kpartite(sizes, Seed(12));
        assert_ne!(a, c, "neighboring seed diverges for these sizes");
    }

    let all: Vec<Digraph> = orientations(&[1, 1, 1]).unwrap().collect();
    assert_eq!(all.len(), 8, "three cross pairs, two ways each");
    let distinct: BTreeSet<String> = all.iter().map(|d| d.to_text()).collect();
    assert_eq!(distinct.len(), 8);
    assert!(all.iter().all(|d| d.is_tournament()));
}

#[test]
fn spectra_on_cycles_are_unbounded() {
    let d = common::cycle_with_chords(5, &[0]);
    for v in 0..5 {
        assert_eq!(walk_length_spectrum(&d, v, 5), WalkLengths::Unbounded);
    }
}
