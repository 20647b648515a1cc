//! Regular pairs, a cylinder partition of a colored tripartite graph, and the
//! counting lemma interval.
//!
//! ```text
//! cargo run --release --example regularity
//! ```

use blowup_ramsey::coloring::EdgeColoring;
use blowup_ramsey::graph::Graph;
use blowup_ramsey::partite::{count_canonical_copies, PartiteGraph};
use blowup_ramsey::regularity::{
    counting_lemma_bound, cylinder_partition, density, is_regular_pair, regularity_threshold, CylinderConfig,
    RegularityMode,
};
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> blowup_ramsey::error::Result<()> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(5);
    let size = 10;
    let parts: Vec<Vec<usize>> = (0..3).map(|i| (i * size..(i + 1) * size).collect()).collect();
    let mut g = Graph::empty(3 * size);
    for u in 0..3 * size {
        for v in u + 1..3 * size {
            if u / size != v / size && rng.gen_bool(0.6) {
                g.add_edge(u, v);
            }
        }
    }

    let (x, y) = (&parts[0], &parts[1]);
    let eps = regularity_threshold(&g, x, y)?;
    println!("d(V0,V1) = {:.3}, smallest regular eps = {eps:.4}", density(&g, x, y)?.value());
    println!("at eps/2: {:?}", is_regular_pair(&g, x, y, eps / 2.0, RegularityMode::Exact)?);

    // counting lemma with the worst pair's threshold
    let k3 = Graph::complete(3);
    let gamma = PartiteGraph::new(g.clone(), parts.clone())?;
    let mut densities = Vec::new();
    let mut worst = 0.0f64;
    for (a, b) in k3.edges() {
        densities.push((a, b, density(&g, &parts[a], &parts[b])?.value()));
        worst = worst.max(regularity_threshold(&g, &parts[a], &parts[b])?);
    }
    let count = count_canonical_copies(&gamma, &k3, &[0, 1, 2])?;
    let iv = counting_lemma_bound(&densities, &[size; 3], worst, &k3)?;
    println!("triangles across parts: {count}, interval [{:.1}, {:.1}] at eps = {worst:.3}", iv.lo, iv.hi);

    let coloring = EdgeColoring::random(&g, 2, &mut rng);
    let cp = cylinder_partition(&gamma, &coloring, 0.3, &CylinderConfig::default())?;
    println!(
        "cylinder partition: {} cylinders after {} splits, irregular fraction {:.3}, ln beta = {:.3e}",
        cp.cylinders.len(),
        cp.splits,
        cp.irregular_fraction(),
        cp.ln_beta
    );
    Ok(())
}
