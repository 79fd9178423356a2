//! Run the claim suite from code over a small mixed corpus and print the
//! per-claim tallies.

use compidx::{run_suite, Caps, CorpusSpec, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        corpus: vec![
            CorpusSpec::Transitive { n: 6 },
            CorpusSpec::AllTournaments { n: 4 },
            CorpusSpec::RandomKpartite { part_sizes: vec![2, 2, 2], count: 20, seed: 42 },
            CorpusSpec::RandomSinkCycle {
                ks: vec![2, 3],
                max_n: 8,
                count: 20,
                seed: 42,
                max_tries: 10_000,
            },
        ],
        caps: Caps::default(),
        report: None,
    };
    let report = run_suite(&config).expect("corpus materializes");

    println!("{} instances checked in {} ms\n", report.instances, report.wall_time_ms);
    println!("{:<7} {:>10} {:>7} {:>7}", "claim", "applicable", "passed", "failed");
    for (claim, tally) in &report.claims {
        println!(
            "{:<7} {:>10} {:>7} {:>7}",
            claim, tally.applicable, tally.passed, tally.failed
        );
    }
    if !report.observations.is_empty() {
        println!("\nobservations:");
        for (obs, count) in &report.observations {
            println!("  {obs}: {count}");
        }
    }
    for line in &report.period_divergences {
        println!("literal vs eventual period split: {line}");
    }
    assert!(report.all_passed(), "all applicable claims hold on this corpus");
    println!("\nall applicable claims hold");
}
