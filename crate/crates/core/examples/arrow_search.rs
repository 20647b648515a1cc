//! Arrow decisions with coloring certificates, the homomorphic variant, and
//! Ramsey minimality.
//!
//! ```text
//! cargo run --example arrow_search
//! ```

use blowup_ramsey::arrow::{arrows, hom_arrows, is_ramsey_minimal, ArrowConfig, Minimality};
use blowup_ramsey::canon::hom_images;
use blowup_ramsey::graph::Graph;

fn main() -> blowup_ramsey::error::Result<()> {
    let cfg = ArrowConfig::default();
    let k3 = Graph::complete(3);

    for n in [5, 6] {
        let out = arrows(&Graph::complete(n), &k3, 2, &cfg)?;
        println!("K{n} -> K3 with 2 colors: {:?} after {} nodes", out.verdict, out.stats.nodes);
        if let Some(c) = out.certificate {
            println!("  color 1 class: {:?}", c.class(1).edges());
            println!("  color 2 class: {:?}", c.class(2).edges());
        }
    }

    // P3 is forced by a vertex of degree 3 or by an odd cycle
    let p3 = Graph::path(3);
    for (name, g) in [("C4", Graph::cycle(4)), ("C5", Graph::cycle(5)), ("K1,3", Graph::star(3))] {
        println!("{name} -> P3: {:?}", arrows(&g, &p3, 2, &cfg)?.verdict);
    }

    // images of C5 under identifications include the triangle
    let images = hom_images(&Graph::cycle(5))?;
    println!("C5 has {} homomorphic images up to isomorphism", images.len());
    println!("C4 hom-arrows P3: {:?}", hom_arrows(&Graph::cycle(4), &p3, 2, &cfg)?.verdict);

    let minimal = is_ramsey_minimal(&Graph::cycle(5), &p3, 2, &cfg)?;
    match minimal.certificate {
        Some(Minimality::Minimal(w)) => println!("C5 is minimal for P3; {} deletion witnesses", w.len()),
        other => println!("C5: {other:?}"),
    }
    Ok(())
}
