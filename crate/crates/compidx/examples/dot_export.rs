//! Write Graphviz files for a digraph and its first few m-step competition
//! graphs, one file per step.

use compidx::competition::profile_with_window;
use compidx::{generate, Seed};
use std::fs;
use std::path::Path;

fn main() -> std::io::Result<()> {
    let out = Path::new("target/dot_export");
    fs::create_dir_all(out)?;

    let d = generate::sink_cycle_kpartite(&[2, 3], Seed(4), 10_000)
        .expect("bipartite (2,3) admits a sink plus a 4-cycle");
    fs::write(out.join("digraph.dot"), d.to_dot())?;

    let (profile, win) = profile_with_window(&d);
    // one full period past the index captures every distinct graph
    let last = profile.cindex + profile.eventual_graph_period;
    for m in 1..=last {
        fs::write(out.join(format!("c{m}.dot")), win.graph(m).to_dot())?;
    }
    println!("wrote {} files to {}", last + 1, out.display());
    println!("render with: dot -Tsvg {}/c1.dot -o c1.svg", out.display());
    Ok(())
}
