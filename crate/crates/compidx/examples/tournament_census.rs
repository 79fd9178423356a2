//! Sweep every labeled tournament on five vertices, bucket them by score
//! sequence, and tally the shape of the two-step competition graph in each
//! bucket.

use compidx::generate::all_tournaments;
use compidx::graph::Deficiency;
use compidx::m_step_competition_graph;
use compidx::structure::score_sequence;
use std::collections::BTreeMap;

fn shape(d: Deficiency) -> &'static str {
    match d {
        Deficiency::None => "complete",
        Deficiency::SingleEdge => "one edge short",
        Deficiency::PathOn3 => "missing a 2-path",
        Deficiency::PathOn4 => "missing a 3-path",
        Deficiency::Triangle => "missing a triangle",
        Deficiency::Other => "other",
    }
}

fn main() {
    let mut buckets: BTreeMap<Vec<usize>, BTreeMap<&'static str, usize>> = BTreeMap::new();
    let mut total = 0usize;
    for d in all_tournaments(5).expect("n = 5 stays within the orientation sweep bound") {
        let scores = score_sequence(&d).expect("the sweep yields tournaments").scores;
        let c2 = m_step_competition_graph(&d, 2);
        let label = shape(c2.deficiency());
        *buckets.entry(scores).or_default().entry(label).or_default() += 1;
        total += 1;
    }
    println!("{total} tournaments on 5 vertices\n");
    println!("{:<18} C^2 shapes", "score sequence");
    for (scores, shapes) in &buckets {
        let mut parts: Vec<String> = shapes.iter().map(|(s, c)| format!("{s} x{c}")).collect();
        parts.sort();
        println!("{:<18} {}", format!("{scores:?}"), parts.join(", "));
    }
}
