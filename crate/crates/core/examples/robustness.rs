//! Minimum monochromatic fraction of triangles in 2-colorings of K6, the
//! edge-deletion witness coloring, and the Ramsey-minimal graphs for P3.
//!
//! ```text
//! cargo run --release --example robustness
//! ```

use blowup_ramsey::arrow::ArrowConfig;
use blowup_ramsey::graph::Graph;
use blowup_ramsey::io::to_graph6;
use blowup_ramsey::robustness::{lemma_witness_coloring, minimal_family_scan, robustness_exact, RobustnessConfig};

fn main() -> blowup_ramsey::error::Result<()> {
    let (k6, k3) = (Graph::complete(6), Graph::complete(3));
    let rep = robustness_exact(&k6, &k3, 2, &RobustnessConfig::default())?;
    println!(
        "beta(K3; K6) = {} ({} of {} triangles), bound e(H)/(r e(G)) = {}",
        rep.beta, rep.mono_count, rep.total_copies, rep.lemma_bound
    );

    let w = lemma_witness_coloring(&k6, &k3, 2, &ArrowConfig::default())?;
    println!(
        "witness from deleting edge {:?}: {} monochromatic of {} ({})",
        w.edge, w.mono_count, w.total_copies, w.fraction
    );

    let scan = minimal_family_scan(&Graph::path(3), 2, 7, &ArrowConfig::default())?;
    println!("Ramsey-minimal graphs for P3 on at most 7 vertices:");
    for g in &scan.graphs {
        println!("  {} ({} vertices, {} edges)", to_graph6(g), g.n(), g.edge_count());
    }
    Ok(())
}
