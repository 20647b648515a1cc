//! From a dense random graph to a canonical triangle blowup, reported next to
//! the asymptotic λ ln n.
//!
//! ```text
//! cargo run --release --example dense_to_blowup
//! ```

use blowup_ramsey::graph::Graph;
use blowup_ramsey::nikiforov::{find_blowup_in_dense, lambda_reference, souza_b_reference, DenseConfig};
use blowup_ramsey::partite::verify_embedding;
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

fn main() -> blowup_ramsey::error::Result<()> {
    let k3 = Graph::complete(3);
    let g = Graph::gnp(384, 0.6, &mut Xoshiro256PlusPlus::seed_from_u64(11));
    let cfg = DenseConfig {
        trials: 16,
        seed: 11,
        ..DenseConfig::default()
    };
    let res = find_blowup_in_dense(&g, &k3, 0.05, &cfg)?;
    let rep = &res.report;
    println!("labeled triangles {} (density {:.3})", rep.labeled_copies, rep.copy_density);
    println!("part sizes {:?}, pair densities {:?}", rep.part_sizes, rep.densities);
    println!("P = {:.4}, alpha = {:.3e}", rep.p, rep.alpha);
    let valid = res.certificate.as_ref().is_some_and(|c| verify_embedding(c, &res.gamma, &k3, rep.t, None));
    println!("achieved t = {} (valid: {valid}); lambda ln n = {:.4}", rep.t, rep.lambda_log_n);

    println!("lambda(0.01, 3) = {:.6}", lambda_reference(0.01, 3)?);
    for gamma in [1e-9, 0.1, 0.3] {
        let b = souza_b_reference(2, 3, gamma)?;
        println!("b(r=2, e=3, gamma={gamma}) = 2^{:.4}{}", b.log2_b, b.warning.map(|w| format!("  [{w}]")).unwrap_or_default());
    }
    Ok(())
}
