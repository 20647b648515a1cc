//! Emitting certificates as JSON and checking them with the independent
//! verifier, including a tampered copy.
//!
//! ```text
//! cargo run --example certificates
//! ```

use blowup_ramsey::arrow::{arrows, ArrowConfig};
use blowup_ramsey::certificate::{verify, Certificate, ColoringCert, EmbeddingCert, Instance};
use blowup_ramsey::graph::Graph;
use blowup_ramsey::partite::{blowup, find_canonical_blowup, BlowupSearchConfig};

fn main() -> blowup_ramsey::error::Result<()> {
    let (k5, k3) = (Graph::complete(5), Graph::complete(3));
    let refuted = arrows(&k5, &k3, 2, &ArrowConfig::default())?;
    let coloring = ColoringCert::from_coloring(refuted.certificate.as_ref().expect("K5 is refuted"), 1, None);
    let cert = Certificate::Coloring(coloring);
    let inst = Instance::partite(&k5, (0..5).map(|v| vec![v]).collect(), &k3);
    println!("{}", serde_json::to_string(&cert).expect("certificates serialize"));
    println!("coloring certificate: {:?}", verify(&cert, &inst, None));

    let gamma = blowup(&k3, 3)?;
    let found = find_canonical_blowup(&gamma, &k3, 3, &BlowupSearchConfig::default())?;
    let map = found.certificate.expect("K3[3] contains K3[3]");
    let mut emb = EmbeddingCert::from_map(&map, None, Some(3));
    let inst = Instance::blowup_of(&k3, 3, &k3)?;
    println!("embedding certificate: {:?}", verify(&Certificate::Embedding(emb.clone()), &inst, None));

    emb.triples[0].host_vertex = emb.triples[1].host_vertex;
    match verify(&Certificate::Embedding(emb), &inst, None) {
        Ok(()) => println!("tampered certificate accepted"),
        Err(v) => println!("tampered certificate rejected: {v}"),
    }
    Ok(())
}
