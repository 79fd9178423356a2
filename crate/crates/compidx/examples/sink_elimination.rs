//! Strip sinks layer by layer from a few digraphs and print what each round
//! removes, the elimination count, and how the process ends.

use compidx::generate;
use compidx::sink::{sink_sequence, TerminalKind};
use compidx::{Digraph, Seed};

fn show(label: &str, d: &Digraph) {
    let ss = sink_sequence(d);
    println!("{label} (n={})", d.n());
    for (i, layer) in ss.layers.iter().enumerate() {
        println!("  W_{i} = {layer:?}");
    }
    let end = match ss.terminal {
        TerminalKind::AllSinks => "every remaining vertex is a sink",
        TerminalKind::Empty => "no sink remains, a directed cycle survives",
    };
    println!("  zeta = {}, terminal: {end}\n", ss.zeta);
}

fn main() {
    show("transitive tournament", &generate::transitive_tournament(6));

    let d = generate::zeta_tournament(7, 3).expect("valid elimination target");
    show("tournament built for zeta = 3", &d);

    let d = generate::acyclic_kpartite(&[2, 1, 2], &[0, 1, 0]).expect("valid layer spec");
    show("layered acyclic bipartite orientation", &d);

    let d = generate::sink_cycle_kpartite(&[1, 1, 2], Seed(9), 10_000)
        .expect("small tripartite shapes admit a sink plus a cycle");
    show("random orientation with a sink and a cycle", &d);
}
