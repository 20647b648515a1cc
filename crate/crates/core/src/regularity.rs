//! Weak regularity at desk scale: pair densities, ε-regular pairs, cylinder
//! partitions of colored partite graphs and the counting lemma.
//!
//! A pair `(X, Y)` is ε-regular when every `X' ⊆ X`, `Y' ⊆ Y` with
//! `|X'| ≥ ε|X|` and `|Y'| ≥ ε|Y|` has `|d(X,Y) − d(X',Y')| < ε`.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset;
use crate::coloring::EdgeColoring;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::partite::{count_canonical_copies, PartiteGraph};

/// Exact decisions enumerate subsets and are limited to this many vertices.
pub const EXACT_PAIR_LIMIT: usize = 26;
/// Largest tuple space accepted by [`cylinder_partition`].
pub const MAX_TUPLES: u64 = 10_000_000;

/// `e(X,Y) / (|X||Y|)`, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub edges: u64,
    pub pairs: u64,
}

impl Density {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.edges, self.pairs)
    }

    pub fn value(&self) -> f64 {
        self.edges as f64 / self.pairs as f64
    }
}

fn check_sides(x: &[usize], y: &[usize], n: usize) -> Result<()> {
    if x.is_empty() || y.is_empty() {
        return invalid("density needs two nonempty vertex sets");
    }
    let mut seen = vec![0u8; n];
    for (side, set) in [x, y].into_iter().enumerate() {
        for &v in set {
            if v >= n {
                return invalid(format!("vertex {v} out of range"));
            }
            if seen[v] != 0 {
                return invalid(if seen[v] == side as u8 + 1 {
                    format!("vertex {v} repeated")
                } else {
                    format!("vertex {v} lies on both sides")
                });
            }
            seen[v] = side as u8 + 1;
        }
    }
    Ok(())
}

fn mask_of(set: &[usize], n: usize) -> Vec<u64> {
    let mut m = vec![0u64; bitset::words_for(n)];
    for &v in set {
        bitset::set(&mut m, v);
    }
    m
}

fn edges_between(g: &Graph, x: &[usize], ymask: &[u64]) -> u64 {
    x.iter().map(|&u| bitset::and_count(g.row(u), ymask) as u64).sum()
}

pub fn density(g: &Graph, x: &[usize], y: &[usize]) -> Result<Density> {
    check_sides(x, y, g.n())?;
    Ok(Density {
        edges: edges_between(g, x, &mask_of(y, g.n())),
        pairs: (x.len() * y.len()) as u64,
    })
}

/// Sub-pair whose density deviates from the pair's by at least ε.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub density: Density,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairVerdict {
    Regular,
    Irregular { witness: Witness },
    /// Neither the sufficient condition nor sampling settled the pair.
    Unknown,
}

impl PairVerdict {
    pub fn is_regular(&self) -> bool {
        matches!(self, Self::Regular)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Self::Irregular { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    /// Subset enumeration; requires `|X| + |Y| ≤ 26`.
    Exact,
    /// Codegree bound for regularity, random sub-pairs for irregularity.
    Heuristic { samples: usize, seed: u64 },
}

/// Smallest subset size allowed by the ε-threshold on a side of size `n`.
fn min_size(eps: f64, n: usize) -> usize {
    ((eps * n as f64).ceil() as usize).clamp(1, n.max(1))
}

/// Best sub-pair found so far, ranked by exact deviation, then total size.
struct Best {
    deviation: Ratio<i64>,
    size: usize,
    sub_x: Vec<usize>,
    sub_y: Vec<usize>,
    edges: u64,
}

/// Given `X'` (as positions into `xs`) and each `y`'s degree into it, try every
/// allowed `|Y'|` with the densest and sparsest choice of `Y'`.
struct Scan<'a> {
    xs: &'a [usize],
    ys: &'a [usize],
    e: i64,
    xy: i64,
    min_y: usize,
    best: Option<Best>,
}

impl Scan<'_> {
    fn offer(&mut self, sub_x: &[usize], degs: &[u64]) {
        let s = sub_x.len() as i64;
        let mut idx: Vec<usize> = (0..degs.len()).collect();
        idx.sort_by_key(|&i| (std::cmp::Reverse(degs[i]), i));
        let total: u64 = degs.iter().sum();
        let mut top = vec![0u64; degs.len() + 1];
        for (k, &i) in idx.iter().enumerate() {
            top[k + 1] = top[k] + degs[i];
        }
        for m in self.min_y..=degs.len() {
            let hi = top[m];
            let lo = total - top[degs.len() - m];
            for (e_sub, dense) in [(hi, true), (lo, false)] {
                let denom = s * m as i64 * self.xy;
                let num = (e_sub as i64 * self.xy - self.e * s * m as i64).abs();
                let dev = Ratio::new(num, denom);
                let size = sub_x.len() + m;
                let better = match &self.best {
                    None => true,
                    Some(b) => dev > b.deviation || (dev == b.deviation && size > b.size),
                };
                if better {
                    let chosen: Vec<usize> = if dense {
                        idx[..m].to_vec()
                    } else {
                        idx[degs.len() - m..].to_vec()
                    };
                    let mut sub_y: Vec<usize> = chosen.iter().map(|&i| self.ys[i]).collect();
                    sub_y.sort_unstable();
                    let mut sx: Vec<usize> = sub_x.iter().map(|&p| self.xs[p]).collect();
                    sx.sort_unstable();
                    self.best = Some(Best {
                        deviation: dev,
                        size,
                        sub_x: sx,
                        sub_y,
                        edges: e_sub,
                    });
                }
            }
        }
    }
}

/// Largest deviation over all admissible sub-pairs, exactly.
fn exact_max_deviation(g: &Graph, x: &[usize], y: &[usize], eps: f64) -> Best {
    // enumerate subsets of the smaller side
    let flip = x.len() > y.len();
    let (xs, ys) = if flip { (y, x) } else { (x, y) };
    let e = edges_between(g, xs, &mask_of(ys, g.n())) as i64;
    let nx = xs.len();
    let adj: Vec<u32> = ys
        .iter()
        .map(|&w| xs.iter().enumerate().filter(|&(_, &u)| g.has_edge(u, w)).fold(0, |a, (i, _)| a | 1 << i))
        .collect();
    let mut scan = Scan {
        xs,
        ys,
        e,
        xy: (xs.len() * ys.len()) as i64,
        min_y: min_size(eps, ys.len()),
        best: None,
    };
    let min_x = min_size(eps, nx);
    let mut degs = vec![0u64; ys.len()];
    let mut sub = Vec::with_capacity(nx);
    for mask in 1u32..(1u32 << nx) {
        if (mask.count_ones() as usize) < min_x {
            continue;
        }
        sub.clear();
        sub.extend((0..nx).filter(|&i| mask >> i & 1 == 1));
        for (d, &a) in degs.iter_mut().zip(&adj) {
            *d = (a & mask).count_ones() as u64;
        }
        scan.offer(&sub, &degs);
    }
    let mut best = scan.best.expect("the full pair is always admissible");
    if flip {
        std::mem::swap(&mut best.sub_x, &mut best.sub_y);
    }
    best
}

fn to_verdict(best: Best, eps: f64) -> PairVerdict {
    let dev = *best.deviation.numer() as f64 / *best.deviation.denom() as f64;
    if dev < eps {
        return PairVerdict::Regular;
    }
    let pairs = (best.sub_x.len() * best.sub_y.len()) as u64;
    PairVerdict::Irregular {
        witness: Witness {
            x: best.sub_x,
            y: best.sub_y,
            density: Density {
                edges: best.edges,
                pairs,
            },
            deviation: dev,
        },
    }
}

/// Decide ε-regularity of `(X, Y)` in `g`.
pub fn is_regular_pair(g: &Graph, x: &[usize], y: &[usize], eps: f64, mode: RegularityMode) -> Result<PairVerdict> {
    check_sides(x, y, g.n())?;
    if !(eps > 0.0) {
        return invalid(format!("epsilon must be positive, got {eps}"));
    }
    match mode {
        RegularityMode::Exact => {
            if x.len() + y.len() > EXACT_PAIR_LIMIT {
                return Err(Error::Budget(format!(
                    "exact regularity needs |X|+|Y| <= {EXACT_PAIR_LIMIT}, got {}",
                    x.len() + y.len()
                )));
            }
            Ok(to_verdict(exact_max_deviation(g, x, y, eps), eps))
        }
        RegularityMode::Heuristic { samples, seed } => Ok(heuristic(g, x, y, eps, samples, seed)),
    }
}

/// Smallest ε (to within 2^-40) at which the pair is exactly regular.
pub fn regularity_threshold(g: &Graph, x: &[usize], y: &[usize]) -> Result<f64> {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if is_regular_pair(g, x, y, 1e-12, RegularityMode::Exact)?.is_regular() {
        return Ok(1e-12);
    }
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if is_regular_pair(g, x, y, mid, RegularityMode::Exact)?.is_regular() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Upper bound on the top singular value of `M - dJ` for the bipartite
/// adjacency matrix `M`, via the Frobenius norm of its Gram matrix, which is
/// expressed through codegrees.
pub fn discrepancy_norm_bound(g: &Graph, x: &[usize], y: &[usize]) -> f64 {
    let (xs, ys) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let ymask = mask_of(ys, g.n());
    let nx = xs.len();
    let ny = ys.len() as f64;
    let d = edges_between(g, xs, &ymask) as f64 / (nx as f64 * ny);
    let deg: Vec<f64> = xs.iter().map(|&u| bitset::and_count(g.row(u), &ymask) as f64).collect();
    let mut row = ymask.clone();
    let mut frob = 0.0;
    for a in 0..nx {
        row.copy_from_slice(&ymask);
        bitset::and_assign(&mut row, g.row(xs[a]));
        for b in 0..nx {
            let codeg = bitset::and_count(&row, g.row(xs[b])) as f64;
            let gram = codeg - d * deg[a] - d * deg[b] + d * d * ny;
            frob += gram * gram;
        }
    }
    frob.sqrt().sqrt()
}

fn heuristic(g: &Graph, x: &[usize], y: &[usize], eps: f64, samples: usize, seed: u64) -> PairVerdict {
    // |e(X',Y') - d|X'||Y'|| <= sigma * sqrt(|X'||Y'|), so the deviation is
    // below sigma / (eps * sqrt(|X||Y|)) on admissible sub-pairs
    let sigma = discrepancy_norm_bound(g, x, y);
    if sigma < eps * eps * ((x.len() * y.len()) as f64).sqrt() {
        return PairVerdict::Regular;
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut best: Option<Best> = None;
    for flip in [false, true] {
        let (xs, ys) = if flip { (y, x) } else { (x, y) };
        let e = edges_between(g, xs, &mask_of(ys, g.n())) as i64;
        let mut scan = Scan {
            xs,
            ys,
            e,
            xy: (xs.len() * ys.len()) as i64,
            min_y: min_size(eps, ys.len()),
            best: None,
        };
        let min_x = min_size(eps, xs.len());
        let mut offer = |sub: &[usize]| {
            if sub.len() < min_x {
                return;
            }
            let m = mask_of(&sub.iter().map(|&p| xs[p]).collect::<Vec<_>>(), g.n());
            let degs: Vec<u64> = ys.iter().map(|&w| bitset::and_count(g.row(w), &m) as u64).collect();
            scan.offer(sub, &degs);
        };
        // neighborhoods of sampled far-side vertices and their complements
        let mut far: Vec<usize> = ys.to_vec();
        far.shuffle(&mut rng);
        for &w in far.iter().take(samples.div_ceil(4)) {
            let (inside, outside): (Vec<usize>, Vec<usize>) = (0..xs.len()).partition(|&p| g.has_edge(xs[p], w));
            offer(&inside);
            offer(&outside);
        }
        let mut pos: Vec<usize> = (0..xs.len()).collect();
        for _ in 0..samples.div_ceil(4) {
            let s = rng.gen_range(min_x..=xs.len());
            pos.shuffle(&mut rng);
            offer(&pos[..s]);
        }
        if let Some(mut b) = scan.best {
            if flip {
                std::mem::swap(&mut b.sub_x, &mut b.sub_y);
            }
            if best.as_ref().is_none_or(|o| b.deviation > o.deviation) {
                best = Some(b);
            }
        }
    }
    match best.map(|b| to_verdict(b, eps)) {
        Some(v @ PairVerdict::Irregular { .. }) => v,
        _ => PairVerdict::Unknown,
    }
}

/// `W_1 × … × W_m` with `W_i` a subset of ground part `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cylinder {
    pub sets: Vec<Vec<usize>>,
}

impl Cylinder {
    pub fn tuples(&self) -> u64 {
        self.sets.iter().map(|s| s.len() as u64).product()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CylinderConfig {
    pub max_splits: usize,
    /// Heuristic sampling for pairs too large for exact decisions.
    pub samples: usize,
    pub seed: u64,
}

impl Default for CylinderConfig {
    fn default() -> Self {
        Self {
            max_splits: 10_000,
            samples: 256,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CylinderPartition {
    pub cylinders: Vec<Cylinder>,
    pub epsilon: f64,
    /// `flags[k][c]`: cylinder `k` regular in color `c + 1`; `None` if unsettled.
    pub flags: Vec<Vec<Option<bool>>>,
    pub total_tuples: u64,
    /// Tuples in cylinders not known to be regular in every color.
    pub irregular_tuples: u64,
    /// `ln β` for `β = ε^(m² ε^-5)`.
    pub ln_beta: f64,
    /// Minimum part size enforced per ground part, `max(1, ⌈β|V_i|⌉)`.
    pub floor: Vec<usize>,
    pub splits: usize,
    pub refused_splits: usize,
    /// Irregular mass is at most `ε` times the tuple space.
    pub regular: bool,
}

impl CylinderPartition {
    pub fn irregular_fraction(&self) -> f64 {
        self.irregular_tuples as f64 / self.total_tuples as f64
    }

    /// Check the partition against its ground parts: containment, non-empty
    /// sets, pairwise tuple-disjointness and total cardinality.
    pub fn audit(&self, ground: &PartiteGraph) -> Result<(), String> {
        let m = ground.part_count();
        for (k, c) in self.cylinders.iter().enumerate() {
            if c.sets.len() != m {
                return Err(format!("cylinder {k} has {} sets", c.sets.len()));
            }
            for (i, s) in c.sets.iter().enumerate() {
                if s.is_empty() {
                    return Err(format!("cylinder {k} has an empty set {i}"));
                }
                if let Some(v) = s.iter().find(|&&v| ground.part_of(v) != Some(i)) {
                    return Err(format!("cylinder {k}: vertex {v} outside ground part {i}"));
                }
            }
        }
        let masks: Vec<Vec<Vec<u64>>> = self
            .cylinders
            .iter()
            .map(|c| c.sets.iter().map(|s| mask_of(s, ground.base().n())).collect())
            .collect();
        for a in 0..masks.len() {
            for b in a + 1..masks.len() {
                let meets = (0..m).all(|i| bitset::and_count(&masks[a][i], &masks[b][i]) > 0);
                if meets {
                    return Err(format!("cylinders {a} and {b} share a tuple"));
                }
            }
        }
        let sum: u64 = self.cylinders.iter().map(Cylinder::tuples).sum();
        if sum != self.total_tuples {
            return Err(format!("cylinders cover {sum} of {} tuples", self.total_tuples));
        }
        Ok(())
    }
}

/// `ln` of the cylinder-count ceiling `4^(m² ε^-5)`.
pub fn ln_cylinder_ceiling(m: usize, eps: f64) -> f64 {
    (m * m) as f64 * eps.powi(-5) * 4f64.ln()
}

pub fn ln_beta(m: usize, eps: f64) -> f64 {
    (m * m) as f64 * eps.powi(-5) * eps.ln()
}

struct Assessed {
    flags: Vec<Option<bool>>,
    witness: Option<(usize, usize, Witness)>,
}

fn assess(classes: &[Graph], c: &Cylinder, eps: f64, cfg: &CylinderConfig) -> Result<Assessed> {
    let m = c.sets.len();
    let mut flags = Vec::with_capacity(classes.len());
    let mut witness: Option<(usize, usize, Witness)> = None;
    for g in classes {
        let mut flag = Some(true);
        for i in 0..m {
            for j in i + 1..m {
                let (x, y) = (&c.sets[i], &c.sets[j]);
                let mode = if x.len() + y.len() <= EXACT_PAIR_LIMIT {
                    RegularityMode::Exact
                } else {
                    RegularityMode::Heuristic {
                        samples: cfg.samples,
                        seed: cfg.seed ^ (i * m + j) as u64,
                    }
                };
                match is_regular_pair(g, x, y, eps, mode)? {
                    PairVerdict::Regular => {}
                    PairVerdict::Unknown => {
                        if flag == Some(true) {
                            flag = None;
                        }
                    }
                    PairVerdict::Irregular { witness: w } => {
                        flag = Some(false);
                        if witness.as_ref().is_none_or(|(_, _, o)| w.deviation > o.deviation) {
                            witness = Some((i, j, w));
                        }
                    }
                }
            }
        }
        flags.push(flag);
    }
    Ok(Assessed { flags, witness })
}

/// Refine the trivial cylinder by witness splits until at most an ε-fraction
/// of tuples lies in cylinders that are not regular in every color class.
pub fn cylinder_partition(
    f: &PartiteGraph,
    coloring: &EdgeColoring,
    eps: f64,
    cfg: &CylinderConfig,
) -> Result<CylinderPartition> {
    let m = f.part_count();
    if m < 2 {
        return invalid("a cylinder partition needs at least two parts");
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain(format!("epsilon must lie in (0, 1/2), got {eps}")));
    }
    if coloring.n() != f.base().n() {
        return invalid("coloring lives on a different vertex set");
    }
    if f.parts().iter().any(|p| p.is_empty()) {
        return invalid("ground parts must be nonempty");
    }
    let total = f
        .parts()
        .iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p.len() as u64).filter(|&t| t <= MAX_TUPLES))
        .ok_or_else(|| Error::Budget(format!("tuple space exceeds {MAX_TUPLES}")))?;
    let classes: Vec<Graph> = (1..=coloring.r()).map(|c| coloring.class(c)).collect();
    let lb = ln_beta(m, eps);
    let floor: Vec<usize> = f
        .parts()
        .iter()
        .map(|p| ((lb.exp() * p.len() as f64).ceil() as usize).max(1))
        .collect();

    let root = Cylinder { sets: f.parts().to_vec() };
    let mut cylinders = vec![root];
    let mut assessed = vec![assess(&classes, &cylinders[0], eps, cfg)?];
    let mut blocked = vec![false];
    let regular_everywhere = |a: &Assessed| a.flags.iter().all(|f| *f == Some(true));
    let mut splits = 0;
    let mut refused = 0;
    loop {
        let irregular: u64 = cylinders
            .iter()
            .zip(&assessed)
            .filter(|(_, a)| !regular_everywhere(a))
            .map(|(c, _)| c.tuples())
            .sum();
        if irregular as f64 <= eps * total as f64 || splits >= cfg.max_splits {
            break;
        }
        // the heaviest splittable irregular cylinder
        let pick = (0..cylinders.len())
            .filter(|&k| !blocked[k] && assessed[k].witness.is_some())
            .max_by_key(|&k| (cylinders[k].tuples(), std::cmp::Reverse(k)));
        let Some(k) = pick else { break };
        let (i, j, w) = assessed[k].witness.clone().unwrap();
        let c = &cylinders[k];
        let split = |set: &[usize], sub: &[usize]| -> Vec<Vec<usize>> {
            let rest: Vec<usize> = set.iter().copied().filter(|v| !sub.contains(v)).collect();
            [sub.to_vec(), rest].into_iter().filter(|s| !s.is_empty()).collect()
        };
        let pieces_i = split(&c.sets[i], &w.x);
        let pieces_j = split(&c.sets[j], &w.y);
        let too_small = pieces_i.iter().any(|p| p.len() < floor[i]) || pieces_j.iter().any(|p| p.len() < floor[j]);
        if too_small {
            blocked[k] = true;
            refused += 1;
            continue;
        }
        let parent = cylinders.swap_remove(k);
        assessed.swap_remove(k);
        blocked.swap_remove(k);
        for pi in &pieces_i {
            for pj in &pieces_j {
                let mut sets = parent.sets.clone();
                sets[i] = pi.clone();
                sets[j] = pj.clone();
                let child = Cylinder { sets };
                assessed.push(assess(&classes, &child, eps, cfg)?);
                cylinders.push(child);
                blocked.push(false);
            }
        }
        splits += 1;
    }
    // stable presentation: cylinders sorted by their sets
    let mut idx: Vec<usize> = (0..cylinders.len()).collect();
    idx.sort_by(|&a, &b| cylinders[a].sets.cmp(&cylinders[b].sets));
    let irregular_tuples = idx
        .iter()
        .filter(|&&k| !regular_everywhere(&assessed[k]))
        .map(|&k| cylinders[k].tuples())
        .sum::<u64>();
    let flags = idx.iter().map(|&k| assessed[k].flags.clone()).collect();
    let cylinders: Vec<Cylinder> = idx.iter().map(|&k| cylinders[k].clone()).collect();
    debug_assert!((cylinders.len() as f64).ln() <= ln_cylinder_ceiling(m, eps));
    Ok(CylinderPartition {
        cylinders,
        epsilon: eps,
        flags,
        total_tuples: total,
        irregular_tuples,
        ln_beta: lb,
        floor,
        splits,
        refused_splits: refused,
        regular: irregular_tuples as f64 <= eps * total as f64,
    })
}

/// Interval for the number of canonical copies of `h`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        self.lo - 1e-9 <= x && x <= self.hi + 1e-9
    }
}

/// `∏ d · ∏|W_i| ± ε e(H) ∏|W_i|`, clamped below at zero. `densities` lists
/// `(a, b, d_ab)` for every edge of `h`.
pub fn counting_lemma_bound(
    densities: &[(usize, usize, f64)],
    part_sizes: &[usize],
    eps: f64,
    h: &Graph,
) -> Result<Interval> {
    if part_sizes.len() != h.n() {
        return invalid("one part size per pattern vertex is required");
    }
    let mut prod_d = 1.0;
    for (a, b) in h.edges() {
        let d = densities
            .iter()
            .find(|&&(u, v, _)| (u, v) == (a, b) || (v, u) == (a, b))
            .map(|x| x.2)
            .ok_or_else(|| Error::InvalidArgument(format!("no density for edge ({a},{b})")))?;
        prod_d *= d;
    }
    let vol: f64 = part_sizes.iter().map(|&s| s as f64).product();
    let center = prod_d * vol;
    let slack = eps * h.edge_count() as f64 * vol;
    Ok(Interval {
        lo: (center - slack).max(0.0),
        hi: center + slack,
    })
}

/// A partition with its copy count.
#[derive(Clone, Debug)]
pub struct EquitablePartition {
    pub gamma: PartiteGraph,
    pub count: u64,
    /// Trial that produced it; trial 0 is the injected partition when given.
    pub trial: usize,
}

/// Number of copies of `h` with every vertex in a distinct part: with as many
/// parts as pattern vertices, pattern vertex `i` goes to part `i`; with more
/// parts every injective placement is summed.
pub fn transversal_copies(gamma: &PartiteGraph, h: &Graph) -> Result<u64> {
    let (k, m) = (h.n(), gamma.part_count());
    if k > m {
        return invalid(format!("{m} parts cannot host {k} pattern vertices"));
    }
    if k == m {
        return count_canonical_copies(gamma, h, &(0..k).collect::<Vec<_>>());
    }
    let mut total = 0;
    let mut inj = Vec::with_capacity(k);
    let mut used = vec![false; m];
    fn go(gamma: &PartiteGraph, h: &Graph, inj: &mut Vec<usize>, used: &mut [bool], total: &mut u64) -> Result<()> {
        if inj.len() == h.n() {
            *total += count_canonical_copies(gamma, h, inj)?;
            return Ok(());
        }
        for p in 0..used.len() {
            if !used[p] {
                used[p] = true;
                inj.push(p);
                go(gamma, h, inj, used, total)?;
                inj.pop();
                used[p] = false;
            }
        }
        Ok(())
    }
    go(gamma, h, &mut inj, &mut used, &mut total)?;
    Ok(total)
}

fn random_equitable(n: usize, k: usize, rng: &mut Xoshiro256PlusPlus) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut parts = vec![Vec::with_capacity(n.div_ceil(k)); k];
    for (i, v) in perm.into_iter().enumerate() {
        parts[i % k].push(v);
    }
    parts
}

/// Best of `trials` uniform equitable `k`-partitions of `g` by
/// [`transversal_copies`] of `h`; earliest trial wins ties. `injected`, when
/// given, is evaluated as trial 0.
pub fn best_equitable_partition(
    g: &Graph,
    h: &Graph,
    k: usize,
    trials: usize,
    seed: u64,
    injected: Option<Vec<Vec<usize>>>,
) -> Result<EquitablePartition> {
    if k == 0 || k > g.n() {
        return invalid(format!("cannot split {} vertices into {k} parts", g.n()));
    }
    if h.n() > k {
        return invalid("pattern has more vertices than parts");
    }
    let first = match injected {
        Some(parts) => {
            if parts.len() != k || parts.iter().map(Vec::len).sum::<usize>() != g.n() {
                return invalid("injected partition must have k parts covering every vertex");
            }
            Some(PartiteGraph::new(g.clone(), parts)?)
        }
        None => None,
    };
    let offset = first.is_some() as usize;
    let sampled: Vec<Result<(PartiteGraph, u64)>> = (0..trials.saturating_sub(offset))
        .into_par_iter()
        .map(|t| {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed.wrapping_add(t as u64));
            let gamma = PartiteGraph::new(g.clone(), random_equitable(g.n(), k, &mut rng))?;
            let c = transversal_copies(&gamma, h)?;
            Ok((gamma, c))
        })
        .collect();
    let mut best: Option<EquitablePartition> = None;
    if let Some(gamma) = first {
        let count = transversal_copies(&gamma, h)?;
        best = Some(EquitablePartition { gamma, count, trial: 0 });
    }
    for (t, r) in sampled.into_iter().enumerate() {
        let (gamma, count) = r?;
        if best.as_ref().is_none_or(|b| count > b.count) {
            best = Some(EquitablePartition {
                gamma,
                count,
                trial: t + offset,
            });
        }
    }
    best.ok_or_else(|| Error::InvalidArgument("at least one trial is required".into()))
}
