//! Random 2-colorings of K6[n]: popular-color reduction to a monochromatic
//! triangle of K6, then a monochromatic canonical K3[t]. Prints the n-vs-t
//! table as JSON rows.
//!
//! ```text
//! cargo run --release --example colored_blowups
//! ```

use blowup_ramsey::coloring::EdgeColoring;
use blowup_ramsey::graph::Graph;
use blowup_ramsey::nikiforov::{blowup_upper_bound_demo, median_by_n, reduce_and_embed};
use blowup_ramsey::partite::{blowup, verify_embedding};
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> blowup_ramsey::error::Result<()> {
    let (k6, k3) = (Graph::complete(6), Graph::complete(3));
    let f = blowup(&k6, 8)?;
    let coloring = EdgeColoring::random(f.base(), 2, &mut Xoshiro256PlusPlus::seed_from_u64(3));
    let run = reduce_and_embed(&f, &coloring, &k6, &k3, 2)?;
    let red = &run.reduction;
    println!("popular color {} on triangle {:?} of K6", red.color, red.copy);
    for (a, b, d) in &red.densities {
        println!("  pair ({a},{b}): {} of {} edges in that color", d.edges, d.pairs);
    }
    let ok = run.embed.certificate.as_ref().is_some_and(|c| {
        verify_embedding(c, &red.host, &k3, run.embed.t, Some((&coloring, red.color)))
    });
    println!("monochromatic K3[{}], verified: {ok}", run.embed.t);

    let rows = blowup_upper_bound_demo(&k6, &k3, 2, &[2, 4, 8, 16, 32], 8, 1)?;
    println!("{}", serde_json::to_string(&rows).expect("rows serialize"));
    for (n, m) in median_by_n(&rows) {
        println!("n = {n:>2}: median t = {m}");
    }
    Ok(())
}
