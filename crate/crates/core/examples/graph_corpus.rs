//! Building test graphs, graph6 and JSON round trips, and canonical forms.
//!
//! ```text
//! cargo run --example graph_corpus
//! ```

use blowup_ramsey::canon::{automorphism_count, connected_graphs, is_isomorphic};
use blowup_ramsey::graph::Graph;
use blowup_ramsey::io::{from_graph6, to_graph6, to_json};
use blowup_ramsey::partite::blowup;

fn main() -> blowup_ramsey::error::Result<()> {
    let graphs = [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K1,3", Graph::star(3)),
        ("C4[2]", blowup(&Graph::cycle(4), 2)?.base().clone()),
    ];
    for (name, g) in &graphs {
        let s = to_graph6(g);
        assert_eq!(&from_graph6(&s)?, g);
        println!("{name:<6} {s:<12} |Aut| = {}", automorphism_count(g)?);
    }
    println!("{}", to_json(&Graph::path(3)));

    let relabeled = Graph::cycle(5).relabel(&[2, 4, 1, 3, 0]);
    println!("relabeled C5 isomorphic to C5: {}", is_isomorphic(&relabeled, &Graph::cycle(5))?);
    for n in 1..=6 {
        println!("connected graphs on {n} vertices: {}", connected_graphs(n)?.len());
    }
    Ok(())
}
