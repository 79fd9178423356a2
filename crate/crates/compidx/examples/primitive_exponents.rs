//! Primitivity of strongly connected tournaments: measured exponents against
//! the Wielandt bound, and what primitivity forces on the competition side.

use compidx::generate::all_tournaments;
use compidx::{competition_profile, m_step_competition_graph, primitivity};

fn main() {
    let n = 5;
    let wielandt = (n - 1) * (n - 1) + 1;
    let mut max_exp = 0usize;
    let mut count = 0usize;
    for d in all_tournaments(n).expect("n = 5 stays within the orientation sweep bound") {
        let report = primitivity(&d).expect("exponent search cannot overflow at n = 5");
        if !report.primitive {
            continue;
        }
        let exp = report.exponent.expect("primitive digraphs have an exponent");
        assert!(exp <= wielandt, "exponent within the Wielandt bound");
        max_exp = max_exp.max(exp);
        count += 1;

        // from A^exp > 0 on, every pair shares prey, so C^m is complete and
        // the graph sequence has already stabilized
        let p = competition_profile(&d);
        assert!(m_step_competition_graph(&d, exp).is_complete());
        assert!(p.cindex <= exp);
        assert_eq!(p.eventual_graph_period, 1);
    }
    println!("tournaments on {n} vertices: {count} primitive");
    println!("largest exponent seen: {max_exp} (Wielandt bound {wielandt})");
}
