//! Where does the sequence C^1(D), C^2(D), ... settle, and how long is its
//! eventual cycle? Profiles across a few instance families.

use compidx::generate;
use compidx::{competition_profile, m_step_competition_graph, Seed};

fn main() {
    println!("{:<38} {:>6} {:>7} {:>9}", "digraph", "cindex", "cperiod", "tail per.");
    for n in 3..=7 {
        let d = generate::transitive_tournament(n);
        let p = competition_profile(&d);
        println!(
            "{:<38} {:>6} {:>7} {:>9}",
            format!("transitive tournament n={n}"),
            p.cindex,
            p.cperiod_literal,
            p.eventual_graph_period
        );
    }
    for seed in [1u64, 2, 3] {
        let d = generate::random_kpartite(&[2, 2, 2], Seed(seed));
        let p = competition_profile(&d);
        println!(
            "{:<38} {:>6} {:>7} {:>9}",
            format!("random 3-partite (2,2,2) seed={seed}"),
            p.cindex,
            p.cperiod_literal,
            p.eventual_graph_period
        );
    }

    // past the index, the graphs repeat with the stated period
    let d = generate::random_kpartite(&[2, 2, 2], Seed(1));
    let p = competition_profile(&d);
    let i = p.cindex.max(1);
    let a = m_step_competition_graph(&d, i);
    let b = m_step_competition_graph(&d, i + p.eventual_graph_period);
    assert_eq!(a, b, "one period after the index lands on the same graph");
    println!("\nC^{i} equals C^{} for the seed-1 instance, as the profile promises", i + p.eventual_graph_period);
}
