//! Exact blowup Ramsey numbers on tiny instances and a lower-bound coloring
//! for K6[3].
//!
//! ```text
//! cargo run --release --example blowup_numbers
//! ```

use blowup_ramsey::blowup_search::{
    blowup_ramsey_exact, blowup_ramsey_noncanonical, lower_bound_search, verify_lower_witness, BlowupConfig,
    LowerBoundConfig,
};
use blowup_ramsey::graph::Graph;

fn main() -> blowup_ramsey::error::Result<()> {
    let cfg = BlowupConfig::default();
    let (k2, p3) = (Graph::complete(2), Graph::path(3));

    let exact = blowup_ramsey_exact(&p3, &k2, 2, 2, 6, &cfg)?;
    let any = blowup_ramsey_noncanonical(&p3, &k2, 2, 2, 6, &cfg)?;
    println!("B(P3 -> K2; t=2) : {:?} {:?}", exact.verdict, exact.certificate.as_ref().map(|c| c.n));
    println!("B'(P3, K2; t=2)  : {:?} {:?}", any.verdict, any.certificate.as_ref().map(|c| c.n));

    let (k6, k3) = (Graph::complete(6), Graph::complete(3));
    match lower_bound_search(&k6, &k3, 2, 2, 3, &LowerBoundConfig::default())? {
        Some(cert) => {
            let ok = verify_lower_witness(&cert, &k6, &k3, 2)?;
            println!("K6[3] has a 2-coloring without a monochromatic canonical K3[2] (re-checked: {ok})");
            println!("so B(K6 -> K3; 2) >= 4");
        }
        None => println!("no witness found within the budget"),
    }
    Ok(())
}
