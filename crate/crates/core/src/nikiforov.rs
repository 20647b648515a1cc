//! Dense host graphs to blowups, the popular-color reduction from colorings of
//! `G[n]` to colorings of `G`, and reference calculators for the constants.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrow::contains_mono_copy;
use crate::coloring::EdgeColoring;
use crate::embedder::{choose_vertex_order, find_blowup_multi, measure_densities, EmbedResult, StageReport};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::partite::{blowup, count_canonical_copies, PartiteGraph, VertexMap};
use crate::regularity::{best_equitable_partition, cylinder_partition, density, CylinderConfig, Density};
use crate::subgraph::count_embeddings;

fn check_eta(eta: f64) -> Result<()> {
    if eta > 0.0 && eta < (-1.0f64).exp() {
        Ok(())
    } else {
        Err(Error::Domain(format!("eta must lie in (0, 1/e), got {eta}")))
    }
}

/// `λ = η^(1 - 1/e_H) / (5 ln(1/η))`.
pub fn lambda_reference(eta: f64, e_h: usize) -> Result<f64> {
    check_eta(eta)?;
    if e_h == 0 {
        return Err(Error::Domain("the pattern needs at least one edge".into()));
    }
    Ok(eta.powf(1.0 - 1.0 / e_h as f64) / (5.0 * -eta.ln()))
}

/// Parameters of the dense-graph pipeline. Only `eta` and the pattern shape are
/// stored; everything else is derived on demand.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NikiforovParams {
    pub eta: f64,
    pub k: usize,
    pub e_h: usize,
}

impl NikiforovParams {
    pub fn new(eta: f64, h: &Graph) -> Result<Self> {
        check_eta(eta)?;
        if h.edge_count() == 0 {
            return Err(Error::Domain("the pattern needs at least one edge".into()));
        }
        Ok(Self {
            eta,
            k: h.n(),
            e_h: h.edge_count(),
        })
    }

    pub fn lambda(&self) -> f64 {
        lambda_reference(self.eta, self.e_h).expect("validated on construction")
    }

    /// `η^(2k²) / (8k²)`.
    pub fn epsilon_dlr(&self) -> f64 {
        let k2 = (self.k * self.k) as f64;
        self.eta.powf(2.0 * k2) / (8.0 * k2)
    }

    /// `η^(k²)`, equal to `sqrt(8 k² ε)`.
    pub fn alpha(&self) -> f64 {
        self.eta.powf((self.k * self.k) as f64)
    }
}

/// `a = 1/β` with `β = ε^(m² ε^-5)`, kept as the pair `(ε, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SymbolicA {
    pub epsilon: f64,
    pub m: usize,
}

impl SymbolicA {
    /// `ln a = -m² ε^-5 ln ε`; this is the only evaluated form.
    pub fn ln_a(&self) -> f64 {
        -crate::regularity::ln_beta(self.m, self.epsilon)
    }
}

/// The base `b` of the exponential bound, in log space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SouzaConstants {
    pub r: usize,
    pub e_h: usize,
    pub gamma: f64,
    /// `log_r b`.
    pub log_r_b: f64,
    pub ln_b: f64,
    pub log2_b: f64,
    /// `log2 b` in the limit `γ → 0`, i.e. `r^(e_H - 1) log2 r`.
    pub limit_log2_b: f64,
    pub warning: Option<String>,
}

impl SouzaConstants {
    fn from_log_r(r: usize, e_h: usize, gamma: f64, log_r_b: f64, warning: Option<String>) -> Self {
        let ln_r = (r as f64).ln();
        Self {
            r,
            e_h,
            gamma,
            log_r_b,
            ln_b: log_r_b * ln_r,
            log2_b: log_r_b * (r as f64).log2(),
            limit_log2_b: (r as f64).powi(e_h as i32 - 1) * (r as f64).log2(),
            warning,
        }
    }

    /// `b` itself; infinite once it leaves the `f64` range.
    pub fn b(&self) -> f64 {
        self.ln_b.exp()
    }

    /// The `α` with `γ = 2 α r²`.
    pub fn alpha(&self) -> f64 {
        self.gamma / (2.0 * (self.r * self.r) as f64)
    }

    /// `a` for a host on `m` vertices and a pattern on `k` vertices, with the
    /// regularity parameter `ε = α² / (8k²)`.
    pub fn a(&self, m: usize, k: usize) -> SymbolicA {
        let a = self.alpha();
        SymbolicA {
            epsilon: a * a / (8.0 * (k * k) as f64),
            m,
        }
    }
}

fn check_r(r: usize, e_h: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Domain(format!("need at least two colors, got {r}")));
    }
    if e_h == 0 {
        return Err(Error::Domain("the pattern needs at least one edge".into()));
    }
    Ok(())
}

/// `b = r^((r + γ)^(e_H - 1))` for `γ ∈ (0, 1/r)`; values with `γ ≥ 1/(2r)`
/// come back with a warning.
pub fn souza_b_reference(r: usize, e_h: usize, gamma: f64) -> Result<SouzaConstants> {
    check_r(r, e_h)?;
    let inv_r = 1.0 / r as f64;
    if !(gamma > 0.0 && gamma < inv_r) {
        return Err(Error::Domain(format!("gamma must lie in (0, 1/{r}), got {gamma}")));
    }
    let warning = (gamma >= inv_r / 2.0).then(|| {
        format!("gamma = {gamma} is at least 1/(2r); the bound needs gamma small with respect to r")
    });
    let log_r_b = (r as f64 + gamma).powi(e_h as i32 - 1);
    Ok(SouzaConstants::from_log_r(r, e_h, gamma, log_r_b, warning))
}

/// The same constant written through `α`: `b = r^(r^(e_H - 1) (1 + α r^e_H))`
/// with `0 < α < r^-e_H` and `γ = 2 α r²`.
pub fn souza_b_alpha(r: usize, e_h: usize, alpha: f64) -> Result<SouzaConstants> {
    check_r(r, e_h)?;
    let rf = r as f64;
    let cap = rf.powi(-(e_h as i32));
    if !(alpha > 0.0 && alpha < cap) {
        return Err(Error::Domain(format!("alpha must lie in (0, r^-e_H) = (0, {cap}), got {alpha}")));
    }
    let log_r_b = rf.powi(e_h as i32 - 1) * (1.0 + alpha / cap);
    Ok(SouzaConstants::from_log_r(r, e_h, 2.0 * alpha * rf * rf, log_r_b, None))
}

/// Options for [`find_blowup_in_dense`].
#[derive(Clone, Debug)]
pub struct DenseConfig {
    pub trials: usize,
    pub seed: u64,
    /// Evaluated as trial 0 of the partition search.
    pub injected: Option<Vec<Vec<usize>>>,
    /// Run a cylinder partition of the chosen parts at this `ε` and keep the
    /// regular cylinder with the largest density product. Tiny inputs only.
    pub regularity_eps: Option<f64>,
}

impl Default for DenseConfig {
    fn default() -> Self {
        Self {
            trials: 32,
            seed: 0,
            injected: None,
            regularity_eps: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DenseReport {
    pub n: usize,
    pub params: NikiforovParams,
    pub lambda: f64,
    /// The theorem's `λ ln n`, for comparison only.
    pub lambda_log_n: f64,
    pub labeled_copies: u64,
    /// `labeled_copies / n^k`.
    pub copy_density: f64,
    pub partition_trial: usize,
    pub canonical_copies: u64,
    /// Whether the regular-cylinder step ran and found a regular cylinder.
    pub regular_cylinder: Option<bool>,
    pub part_sizes: Vec<usize>,
    pub densities: Vec<(usize, usize, f64)>,
    /// Product of pair densities with the first pair capped at 1/2.
    pub p: f64,
    pub alpha: f64,
    pub t: usize,
    pub order: Vec<usize>,
    pub stages: Vec<StageReport>,
}

#[derive(Clone, Debug)]
pub struct DenseResult {
    pub report: DenseReport,
    /// Pattern vertex `i` lives in part `i`.
    pub gamma: PartiteGraph,
    pub certificate: Option<VertexMap>,
}

/// Equitable partition with many transversal copies, optional regular
/// cylinder, then the greedy embedder over several vertex orders.
pub fn find_blowup_in_dense(g: &Graph, h: &Graph, eta: f64, cfg: &DenseConfig) -> Result<DenseResult> {
    let params = NikiforovParams::new(eta, h)?;
    let (n, k) = (g.n(), h.n());
    if n < k {
        return invalid(format!("host has {n} vertices, pattern has {k}"));
    }
    let labeled = count_embeddings(g, h);
    let copy_density = labeled as f64 / (n as f64).powi(k as i32);
    if copy_density < eta {
        return Err(Error::Precondition(format!(
            "host has {labeled} labeled copies, density {copy_density} below eta = {eta}"
        )));
    }
    let best = best_equitable_partition(g, h, k, cfg.trials.max(1), cfg.seed, cfg.injected.clone())?;
    let (gamma, regular_cylinder) = match cfg.regularity_eps {
        Some(eps) => densest_regular_cylinder(&best.gamma, h, eps, cfg.seed)?,
        None => (best.gamma, None),
    };
    let canonical_copies = count_canonical_copies(&gamma, h, &(0..k).collect::<Vec<_>>())?;
    let densities = measure_densities(&gamma, h)?;
    let alpha = params.alpha();
    let p = capped_product(h, &densities)?;
    if alpha >= p || p.is_nan() {
        return Err(Error::Precondition(format!(
            "alpha = {alpha} is not below the measured density product P = {p}"
        )));
    }
    let embed = find_blowup_multi(&gamma, h, alpha)?;
    let lambda = params.lambda();
    let report = DenseReport {
        n,
        params,
        lambda,
        lambda_log_n: lambda * (n as f64).ln(),
        labeled_copies: labeled,
        copy_density,
        partition_trial: best.trial,
        canonical_copies,
        regular_cylinder,
        part_sizes: gamma.parts().iter().map(Vec::len).collect(),
        densities,
        p,
        alpha,
        t: embed.t,
        order: embed.params.order.clone(),
        stages: embed.stages.clone(),
    };
    Ok(DenseResult {
        report,
        gamma,
        certificate: embed.certificate,
    })
}

/// Density product with the pair of the first two vertices in the automatic
/// order capped at 1/2, as the embedder sees it.
fn capped_product(h: &Graph, densities: &[(usize, usize, f64)]) -> Result<f64> {
    let order = choose_vertex_order(h, densities)?;
    let first = (order[0].min(order[1]), order[0].max(order[1]));
    Ok(densities
        .iter()
        .map(|&(a, b, p)| if (a.min(b), a.max(b)) == first { p.min(0.5) } else { p })
        .product())
}

fn densest_regular_cylinder(
    gamma: &PartiteGraph,
    h: &Graph,
    eps: f64,
    seed: u64,
) -> Result<(PartiteGraph, Option<bool>)> {
    let mono = EdgeColoring::monochromatic(gamma.base(), 1, 1);
    let cfg = CylinderConfig { seed, ..CylinderConfig::default() };
    let cp = cylinder_partition(gamma, &mono, eps, &cfg)?;
    let mut best: Option<(bool, f64, usize)> = None;
    for (i, cyl) in cp.cylinders.iter().enumerate() {
        let regular = cp.flags[i].iter().all(|f| *f == Some(true));
        let mut prod = 1.0;
        for (a, b) in h.edges() {
            prod *= density(gamma.base(), &cyl.sets[a], &cyl.sets[b])?.value();
        }
        let key = (regular, prod);
        if best.is_none_or(|(r, p, _)| key.0 && !r || (key.0 == r && key.1 > p)) {
            best = Some((regular, prod, i));
        }
    }
    let (regular, _, i) = best.expect("a partition has at least one cylinder");
    let chosen = PartiteGraph::new(gamma.base().clone(), cp.cylinders[i].sets.clone())?;
    Ok((chosen, Some(regular)))
}

/// Outcome of the popular-color reduction.
#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub color: u8,
    /// `copy[i]` is the vertex of `G` playing pattern vertex `i`.
    pub copy: Vec<usize>,
    /// Popular-color coloring of `G`.
    pub auxiliary: EdgeColoring,
    /// Selected-color density for every pattern edge `(a, b)`.
    pub densities: Vec<(usize, usize, Density)>,
    /// Parts of `F` indexed by pattern vertex, restricted to the selected
    /// color class.
    #[serde(skip)]
    pub gamma: PartiteGraph,
    /// The same parts over `F` itself, for checking with a color filter.
    #[serde(skip)]
    pub host: PartiteGraph,
}

fn check_blowup_of(f: &PartiteGraph, g: &Graph) -> Result<()> {
    if f.part_count() != g.n() {
        return invalid(format!("F has {} parts, G has {} vertices", f.part_count(), g.n()));
    }
    if f.intra_part_edge_count() != 0 {
        return invalid("F has edges inside a part");
    }
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let full = f.part(i).len() * f.part(j).len();
            let want = if g.has_edge(i, j) { full } else { 0 };
            if f.cross_edges(i, j) != want {
                return invalid(format!("F is not a blowup of G between parts {i} and {j}"));
            }
        }
    }
    let covered: usize = f.parts().iter().map(Vec::len).sum();
    if covered != f.base().n() {
        return invalid("F has vertices outside every part");
    }
    Ok(())
}

/// Color each edge `ij` of `G` by its most popular color between parts `i`
/// and `j` of `F` (lowest color on ties), then take a monochromatic `H` in
/// that coloring.
pub fn souza_reduction(f: &PartiteGraph, coloring: &EdgeColoring, g: &Graph, h: &Graph, r: u8) -> Result<Reduction> {
    check_blowup_of(f, g)?;
    if !coloring.matches_host(f.base()) || coloring.r() != r {
        return invalid("coloring does not match F or the number of colors");
    }
    let g_edges = g.edges();
    let id = |a: usize, b: usize| g_edges.binary_search(&(a.min(b), a.max(b))).ok();
    let mut counts = vec![vec![0u64; r as usize]; g_edges.len()];
    for (&(u, v), &c) in coloring.edges().iter().zip(coloring.colors()) {
        let (pu, pv) = (f.part_of(u).unwrap(), f.part_of(v).unwrap());
        let e = id(pu, pv).expect("F edges lie over G edges");
        counts[e][c as usize - 1] += 1;
    }
    let popular: Vec<u8> = counts
        .iter()
        .map(|cs| {
            let max = *cs.iter().max().unwrap();
            cs.iter().position(|&x| x == max).unwrap() as u8 + 1
        })
        .collect();
    let auxiliary = EdgeColoring::new(g, r, popular)?;
    let (color, map) = (1..=r)
        .find_map(|c| contains_mono_copy(&auxiliary, h, c).map(|m| (c, m)))
        .ok_or_else(|| {
            Error::Precondition("the popular-color coloring has no monochromatic copy, so G does not arrow H".into())
        })?;
    let copy = map.hosts.clone();
    let host = f.select_parts(&copy)?;
    let gamma = host.with_base(coloring.class(color))?;
    let mut densities = Vec::with_capacity(h.edge_count());
    for (a, b) in h.edges() {
        densities.push((a, b, density(gamma.base(), gamma.part(a), gamma.part(b))?));
    }
    Ok(Reduction {
        color,
        copy,
        auxiliary,
        densities,
        gamma,
        host,
    })
}

/// The default `α` after the reduction: half of `r^-e_H`.
pub fn reduction_alpha(r: u8, h: &Graph) -> f64 {
    0.5 * (r as f64).powi(-(h.edge_count() as i32))
}

/// A monochromatic canonical blowup in a colored `G[n]`.
#[derive(Clone, Debug)]
pub struct MonoBlowup {
    pub reduction: Reduction,
    pub embed: EmbedResult,
}

/// [`souza_reduction`] followed by the embedder on the selected color class.
pub fn reduce_and_embed(f: &PartiteGraph, coloring: &EdgeColoring, g: &Graph, h: &Graph, r: u8) -> Result<MonoBlowup> {
    let reduction = souza_reduction(f, coloring, g, h, r)?;
    let embed = find_blowup_multi(&reduction.gamma, h, reduction_alpha(r, h))?;
    Ok(MonoBlowup { reduction, embed })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DemoRow {
    pub n: usize,
    pub trial: usize,
    pub t_achieved: usize,
    /// `log_b(n / a)` with `a` taken as 1.
    pub t_reference: f64,
}

/// Random `r`-colorings of `G[n]` for each `n` in `ns`, each reduced and
/// embedded. Rows come back ordered by `(n, trial)`.
pub fn blowup_upper_bound_demo(
    g: &Graph,
    h: &Graph,
    r: u8,
    ns: &[usize],
    trials: usize,
    seed: u64,
) -> Result<Vec<DemoRow>> {
    let b = souza_b_alpha(r as usize, h.edge_count(), reduction_alpha(r, h))?;
    let jobs: Vec<(usize, usize)> = ns.iter().flat_map(|&n| (0..trials).map(move |t| (n, t))).collect();
    jobs.into_par_iter()
        .map(|(n, trial)| {
            let f = blowup(g, n)?;
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed ^ ((n as u64) << 32) ^ trial as u64);
            let coloring = EdgeColoring::random(f.base(), r, &mut rng);
            let run = reduce_and_embed(&f, &coloring, g, h, r)?;
            Ok(DemoRow {
                n,
                trial,
                t_achieved: run.embed.t,
                t_reference: (n as f64).ln() / b.ln_b,
            })
        })
        .collect()
}

/// Median of achieved `t` per `n`, in the order of first appearance.
pub fn median_by_n(rows: &[DemoRow]) -> Vec<(usize, f64)> {
    let mut ns: Vec<usize> = Vec::new();
    for r in rows {
        if !ns.contains(&r.n) {
            ns.push(r.n);
        }
    }
    ns.into_iter()
        .map(|n| {
            let mut ts: Vec<usize> = rows.iter().filter(|r| r.n == n).map(|r| r.t_achieved).collect();
            ts.sort_unstable();
            let m = ts.len();
            let med = if m % 2 == 1 {
                ts[m / 2] as f64
            } else {
                (ts[m / 2 - 1] + ts[m / 2]) as f64 / 2.0
            };
            (n, med)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partite::verify_embedding;

    #[test]
    fn lambda_values() {
        let l = lambda_reference(0.01, 3).unwrap();
        let direct = 0.01f64.powf(2.0 / 3.0) / (5.0 * 100f64.ln());
        assert!((l - direct).abs() < 1e-18);
        assert!((l - 0.00202).abs() < 1e-5);
        assert!(lambda_reference((-1.0f64).exp(), 3).is_err());
        assert!(lambda_reference(0.0, 3).is_err());
        assert!(lambda_reference(0.1, 0).is_err());
        for e_h in 1..6 {
            let mut prev = 0.0;
            for i in 1..200 {
                let eta = i as f64 / 200.0 * (-1.0f64).exp();
                let l = lambda_reference(eta, e_h).unwrap();
                assert!(l > prev);
                prev = l;
            }
        }
    }

    #[test]
    fn params_derive() {
        let p = NikiforovParams::new(0.1, &Graph::complete(3)).unwrap();
        assert!((p.alpha() - 1e-9).abs() < 1e-21);
        assert!((p.epsilon_dlr() - 1e-18 / 72.0).abs() < 1e-30);
        assert!((p.alpha() - (8.0 * 9.0 * p.epsilon_dlr()).sqrt()).abs() < 1e-20);
        assert!(NikiforovParams::new(0.5, &Graph::complete(3)).is_err());
    }

    #[test]
    fn souza_b_values() {
        let near = souza_b_reference(2, 3, 1e-12).unwrap();
        assert!((near.b() - 16.0).abs() < 1e-9);
        assert_eq!(near.limit_log2_b, 4.0);
        assert!(near.warning.is_none());
        assert_eq!(souza_b_reference(2, 1, 0.2).unwrap().b(), 2.0);
        let g = souza_b_reference(2, 3, 0.1).unwrap();
        assert!((g.log2_b - 4.41).abs() < 1e-12);
        assert!(souza_b_reference(2, 3, 0.3).unwrap().warning.is_some());
        assert!(souza_b_reference(2, 3, 0.5).is_err());
        assert!(souza_b_reference(2, 3, 0.0).is_err());
        assert!(souza_b_reference(1, 3, 0.1).is_err());
        // huge exponents stay finite in log space
        let big = souza_b_reference(5, 40, 0.01).unwrap();
        assert!(big.b().is_infinite() && big.ln_b.is_finite());

        let a = souza_b_alpha(2, 3, 1e-9).unwrap();
        assert!((a.log2_b - 4.0).abs() < 1e-6);
        assert!((a.gamma - 8e-9).abs() < 1e-20);
        assert!(souza_b_alpha(2, 3, 0.125).is_err());
        let sym = a.a(6, 3);
        assert!(sym.ln_a() > 0.0);
    }

    #[test]
    fn dense_complete_graph() {
        let k3 = Graph::complete(3);
        for n in [9, 10, 14] {
            let res = find_blowup_in_dense(&Graph::complete(n), &k3, 0.05, &DenseConfig::default()).unwrap();
            assert_eq!(res.report.t, n / 3, "n = {n}");
            let cert = res.certificate.unwrap();
            assert!(verify_embedding(&cert, &res.gamma, &k3, n / 3, None));
        }
    }

    #[test]
    fn dense_clean_blowup() {
        let k3 = Graph::complete(3);
        for s in 1..=3 {
            let g = blowup(&k3, s).unwrap();
            let cfg = DenseConfig {
                trials: 4000,
                seed: 3,
                ..DenseConfig::default()
            };
            let res = find_blowup_in_dense(g.base(), &k3, 0.01, &cfg).unwrap();
            assert_eq!(res.report.t, s);
            assert!(verify_embedding(res.certificate.as_ref().unwrap(), &res.gamma, &k3, s, None));
        }
    }

    #[test]
    fn dense_refuses_sparse() {
        let err = find_blowup_in_dense(&Graph::cycle(9), &Graph::complete(3), 0.05, &DenseConfig::default());
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn dense_with_regularity_step() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 4).unwrap();
        let cfg = DenseConfig {
            trials: 1,
            injected: Some(g.parts().to_vec()),
            regularity_eps: Some(0.25),
            ..DenseConfig::default()
        };
        let res = find_blowup_in_dense(g.base(), &k3, 0.05, &cfg).unwrap();
        assert_eq!(res.report.regular_cylinder, Some(true));
        assert_eq!(res.report.t, 4);
    }

    #[test]
    fn reduction_monochromatic() {
        let k6 = Graph::complete(6);
        let k3 = Graph::complete(3);
        let f = blowup(&k6, 3).unwrap();
        let mono = EdgeColoring::monochromatic(f.base(), 2, 1);
        let red = souza_reduction(&f, &mono, &k6, &k3, 2).unwrap();
        assert_eq!(red.color, 1);
        let run = reduce_and_embed(&f, &mono, &k6, &k3, 2).unwrap();
        assert_eq!(run.embed.t, 3);
        let cert = run.embed.certificate.unwrap();
        assert!(verify_embedding(&cert, &run.reduction.host, &k3, 3, Some((&mono, 1))));
    }

    #[test]
    fn reduction_pigeonhole() {
        let k6 = Graph::complete(6);
        let k3 = Graph::complete(3);
        let f = blowup(&k6, 2).unwrap();
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(5);
        for _ in 0..30 {
            let col = EdgeColoring::random(f.base(), 2, &mut rng);
            let red = souza_reduction(&f, &col, &k6, &k3, 2).unwrap();
            for (a, b, d) in &red.densities {
                assert!(2 * d.edges >= d.pairs, "pair {a},{b}: {d:?}");
            }
            assert_eq!(red.auxiliary.color(red.copy[0], red.copy[1]), Some(red.color));
        }
    }

    #[test]
    fn reduction_rejects_non_blowup() {
        let k3 = Graph::complete(3);
        let f = PartiteGraph::new(Graph::path(3), vec![vec![0], vec![1], vec![2]]).unwrap();
        let col = EdgeColoring::monochromatic(f.base(), 2, 1);
        assert!(souza_reduction(&f, &col, &k3, &k3, 2).is_err());
    }

    #[test]
    fn end_to_end_mono_blowup() {
        let k6 = Graph::complete(6);
        let k3 = Graph::complete(3);
        let f = blowup(&k6, 8).unwrap();
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(9);
        for _ in 0..10 {
            let col = EdgeColoring::random(f.base(), 2, &mut rng);
            let run = reduce_and_embed(&f, &col, &k6, &k3, 2).unwrap();
            assert!(run.embed.t >= 1);
            let cert = run.embed.certificate.unwrap();
            assert!(verify_embedding(&cert, &run.reduction.host, &k3, run.embed.t, Some((&col, run.reduction.color))));
        }
    }

    #[test]
    fn demo_rows() {
        let rows = blowup_upper_bound_demo(&Graph::complete(6), &Graph::complete(3), 2, &[2, 6], 3, 1).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.t_achieved <= r.n));
        assert_eq!(rows[0].n, 2);
        assert_eq!(median_by_n(&rows).len(), 2);
    }
}
