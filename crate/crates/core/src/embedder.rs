//! Greedy extraction of a canonical `H[t]` from a partite graph whose pattern
//! pairs are dense.
//!
//! The pattern is processed in a vertex order `x_1, ..., x_k`. Stage `i` holds
//! a canonical blowup of `H_i = H[{x_1..x_i}]` given as a perfect matching of
//! *good* copies of `H_i`: copy `c` uses the `c`-th host of every blown-up set.
//! Stage 2 extracts a balanced biclique from the good-pair graph, later stages
//! extract one from the bipartite graph between current copies and the next
//! part. Part `v` of the host is the home of pattern vertex `v`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::{self, words_for};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::partite::{PartiteGraph, VertexMap};

/// Sides with at most this many vertices are searched exactly.
pub const EXACT_BICLIQUE_SIDE: usize = 24;
/// Start vertices tried per orientation by the greedy biclique heuristic.
const GREEDY_STARTS: usize = 48;

/// Slack, regularity and density parameters of one embedding run.
#[derive(Clone, Debug, Serialize)]
pub struct EmbedderParams {
    pub alpha: f64,
    pub epsilon: f64,
    pub delta: f64,
    /// `order[i]` is the pattern vertex handled at stage `i + 1`.
    pub order: Vec<usize>,
    /// Symmetric, zero off the pattern's edges. The first pair is capped at 1/2.
    densities: Vec<Vec<f64>>,
}

impl EmbedderParams {
    /// `densities` lists `(a, b, p_ab)` for every edge of `h`. Without an
    /// explicit order one is chosen by [`choose_vertex_order`].
    pub fn new(h: &Graph, alpha: f64, densities: &[(usize, usize, f64)], order: Option<Vec<usize>>) -> Result<Self> {
        let order = match order {
            Some(o) => {
                check_order(h, &o)?;
                o
            }
            None => choose_vertex_order(h, densities)?,
        };
        let matrix = density_matrix(h, densities)?;
        let params = Self::build(h, alpha, matrix, order);
        let p = params.product(h);
        if !(alpha > 0.0 && alpha < p) {
            return Err(Error::Precondition(format!(
                "alpha = {alpha} must lie in (0, P) where P = {p} is the product of pair densities"
            )));
        }
        if !(params.delta > 0.0 && params.delta < 1.0) {
            return Err(Error::Domain(format!("delta = {} outside (0,1)", params.delta)));
        }
        Ok(params)
    }

    /// Parameters from the densities measured on `gamma`.
    pub fn measured(gamma: &PartiteGraph, h: &Graph, alpha: f64, order: Option<Vec<usize>>) -> Result<Self> {
        Self::new(h, alpha, &measure_densities(gamma, h)?, order)
    }

    fn build(h: &Graph, alpha: f64, mut densities: Vec<Vec<f64>>, order: Vec<usize>) -> Self {
        let k = h.n() as f64;
        let (a, b) = (order[0], order[1]);
        let p12 = densities[a][b].min(0.5);
        densities[a][b] = p12;
        densities[b][a] = p12;
        let epsilon = alpha * alpha / (8.0 * k * k);
        Self {
            alpha,
            epsilon,
            delta: delta_for(k, epsilon, p12),
            order,
            densities,
        }
    }

    /// Replace the derived regularity parameter, keeping `alpha`.
    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        let k = self.densities.len() as f64;
        self.epsilon = epsilon;
        self.delta = delta_for(k, epsilon, self.p12());
        self
    }

    pub fn density(&self, a: usize, b: usize) -> f64 {
        self.densities[a][b]
    }

    pub fn p12(&self) -> f64 {
        self.densities[self.order[0]][self.order[1]]
    }

    /// `P`, the product of the pair densities over all pattern edges.
    pub fn product(&self, h: &Graph) -> f64 {
        h.edges().iter().map(|&(a, b)| self.densities[a][b]).product()
    }

    /// `q_i`: product of densities from `order[i]` back to earlier vertices
    /// (0-based position `i`).
    pub fn q(&self, h: &Graph, i: usize) -> f64 {
        let x = self.order[i];
        self.order[..i]
            .iter()
            .filter(|&&l| h.has_edge(l, x))
            .map(|&l| self.densities[l][x])
            .product()
    }

    /// Lower each density to the measured one where that is smaller.
    fn clamp_to(&self, h: &Graph, measured: &[(usize, usize, f64)]) -> Self {
        let mut m = self.densities.clone();
        for &(a, b, p) in measured {
            let v = m[a][b].min(p);
            m[a][b] = v;
            m[b][a] = v;
        }
        let mut out = Self::build(h, self.alpha, m, self.order.clone());
        if out.epsilon != self.epsilon {
            out = out.with_epsilon(self.epsilon);
        }
        out
    }
}

fn delta_for(k: f64, epsilon: f64, p12: f64) -> f64 {
    if p12 <= 0.0 {
        return f64::INFINITY;
    }
    8.0 * k * epsilon / (p12 * (1.0 / p12).ln())
}

fn density_matrix(h: &Graph, densities: &[(usize, usize, f64)]) -> Result<Vec<Vec<f64>>> {
    let k = h.n();
    let mut m = vec![vec![f64::NAN; k]; k];
    for &(a, b, p) in densities {
        if a >= k || b >= k || !h.has_edge(a, b) {
            return invalid(format!("density given for non-edge ({a},{b})"));
        }
        if !(0.0..=1.0).contains(&p) {
            return invalid(format!("density {p} of ({a},{b}) outside [0,1]"));
        }
        m[a][b] = p;
        m[b][a] = p;
    }
    for (a, b) in h.edges() {
        if m[a][b].is_nan() {
            return invalid(format!("no density for pattern edge ({a},{b})"));
        }
    }
    for row in &mut m {
        for v in row.iter_mut().filter(|v| v.is_nan()) {
            *v = 0.0;
        }
    }
    Ok(m)
}

fn check_order(h: &Graph, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; h.n()];
    for &v in order {
        if v >= h.n() || std::mem::replace(&mut seen[v], true) {
            return invalid(format!("order {order:?} is not a permutation of the pattern"));
        }
    }
    if order.len() != h.n() || order.len() < 2 || !h.has_edge(order[0], order[1]) {
        return invalid("the first two vertices of the order must span a pattern edge");
    }
    Ok(())
}

/// Edge density of `gamma` between the parts of each pattern edge.
pub fn measure_densities(gamma: &PartiteGraph, h: &Graph) -> Result<Vec<(usize, usize, f64)>> {
    if gamma.part_count() < h.n() {
        return invalid(format!("{} parts cannot host {} pattern vertices", gamma.part_count(), h.n()));
    }
    Ok(h.edges()
        .into_iter()
        .map(|(a, b)| {
            let size = gamma.part(a).len() * gamma.part(b).len();
            let p = if size == 0 { 0.0 } else { gamma.cross_edges(a, b) as f64 / size as f64 };
            (a, b, p)
        })
        .collect())
}

/// Minimum-density edge first (lowest pair on ties), then repeatedly the
/// vertex whose product of densities to placed neighbors is largest (lowest
/// index on ties).
pub fn choose_vertex_order(h: &Graph, densities: &[(usize, usize, f64)]) -> Result<Vec<usize>> {
    if h.edge_count() == 0 {
        return invalid("pattern has no edges");
    }
    let m = density_matrix(h, densities)?;
    let (mut a, mut b) = (0, 0);
    let mut best = f64::INFINITY;
    for (u, v) in h.edges() {
        if m[u][v] < best {
            best = m[u][v];
            (a, b) = (u, v);
        }
    }
    let mut order = vec![a, b];
    let mut placed = vec![false; h.n()];
    placed[a] = true;
    placed[b] = true;
    while order.len() < h.n() {
        let mut pick = (usize::MAX, f64::NEG_INFINITY);
        for v in (0..h.n()).filter(|&v| !placed[v]) {
            let q: f64 = order.iter().filter(|&&l| h.has_edge(l, v)).map(|&l| m[l][v]).product();
            if q > pick.1 {
                pick = (v, q);
            }
        }
        placed[pick.0] = true;
        order.push(pick.0);
    }
    Ok(order)
}

/// Real-valued stage targets `t_1..t_k`, clamped at zero. `n` is the common
/// size of the first two parts after balancing.
pub fn stage_targets(h: &Graph, params: &EmbedderParams, w1: usize, n: usize) -> Vec<f64> {
    let k = h.n();
    let eps = params.epsilon;
    let mut t = Vec::with_capacity(k);
    t.push(((1.0 - h.degree(params.order[0]) as f64 * eps) * w1 as f64).max(0.0));
    let p12 = params.p12();
    let t2 = if p12 > 0.0 && n > 1 {
        (1.0 - params.delta) * (n as f64).ln() / (1.0 / p12).ln()
    } else {
        0.0
    };
    t.push(t2.max(0.0));
    for i in 2..k {
        let factor = (params.q(h, i) - k as f64 * eps).max(0.0);
        let prev = t[i - 1];
        t.push(factor * prev);
    }
    t
}

/// A bipartite graph given by left-vertex rows over the right side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    rows: Vec<Vec<u64>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        Self {
            right,
            rows: vec![vec![0; words_for(right)]; left],
        }
    }

    pub fn complete(left: usize, right: usize) -> Self {
        let mut b = Self::new(left, right);
        for l in 0..left {
            for r in 0..right {
                b.add_edge(l, r);
            }
        }
        b
    }

    pub fn left(&self) -> usize {
        self.rows.len()
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        bitset::set(&mut self.rows[l], r);
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        bitset::test(&self.rows[l], r)
    }

    pub fn row(&self, l: usize) -> &[u64] {
        &self.rows[l]
    }

    pub fn left_degree(&self, l: usize) -> usize {
        bitset::count(&self.rows[l])
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.right];
        for row in &self.rows {
            for r in bitset::iter(row) {
                d[r] += 1;
            }
        }
        d
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| bitset::count(r)).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.right, self.left());
        for (l, row) in self.rows.iter().enumerate() {
            for r in bitset::iter(row) {
                t.add_edge(r, l);
            }
        }
        t
    }

    pub fn induced(&self, left: &[usize], right: &[usize]) -> Self {
        let mut b = Self::new(left.len(), right.len());
        for (i, &l) in left.iter().enumerate() {
            for (j, &r) in right.iter().enumerate() {
                if self.has_edge(l, r) {
                    b.add_edge(i, j);
                }
            }
        }
        b
    }

    /// Whether `left x right` is complete.
    pub fn is_biclique(&self, left: &[usize], right: &[usize]) -> bool {
        left.iter().all(|&l| right.iter().all(|&r| self.has_edge(l, r)))
    }
}

/// A balanced complete bipartite subgraph `K_{s,s}`, both sides sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Whether the search behind it was exhaustive.
    pub exact: bool,
}

impl Biclique {
    pub fn size(&self) -> usize {
        self.left.len()
    }
}

/// Largest balanced biclique: branch and bound when a side has at most
/// [`EXACT_BICLIQUE_SIDE`] vertices, greedy common-neighborhood growth
/// otherwise.
pub fn max_balanced_biclique(b: &BipartiteGraph) -> Biclique {
    balanced_biclique(b, None)
}

/// Some `K_{t,t}` in `b`. In exact mode `None` proves there is none; in
/// greedy mode it only means none was found.
pub fn kst_biclique(b: &BipartiteGraph, t: usize) -> Option<Biclique> {
    let mut found = balanced_biclique(b, Some(t));
    if found.size() < t {
        return None;
    }
    found.left.truncate(t);
    found.right.truncate(t);
    Some(found)
}

fn balanced_biclique(b: &BipartiteGraph, target: Option<usize>) -> Biclique {
    let flip = b.left() > b.right();
    let oriented = if flip { b.transpose() } else { b.clone() };
    let (mut l, mut r, exact) = if oriented.left() <= EXACT_BICLIQUE_SIDE {
        let (l, r) = exact_biclique(&oriented, target);
        (l, r, true)
    } else {
        let (l1, r1) = greedy_biclique(&oriented);
        let t = oriented.transpose();
        let (r2, l2) = greedy_biclique(&t);
        if l2.len().min(r2.len()) > l1.len().min(r1.len()) {
            (l2, r2, false)
        } else {
            (l1, r1, false)
        }
    };
    let s = l.len().min(r.len());
    l.sort_unstable();
    r.sort_unstable();
    l.truncate(s);
    r.truncate(s);
    if flip {
        std::mem::swap(&mut l, &mut r);
    }
    Biclique { left: l, right: r, exact }
}

fn exact_biclique(b: &BipartiteGraph, target: Option<usize>) -> (Vec<usize>, Vec<usize>) {
    struct Bb<'a> {
        b: &'a BipartiteGraph,
        order: Vec<usize>,
        best: usize,
        best_l: Vec<usize>,
        best_r: Vec<u64>,
        target: usize,
    }
    impl Bb<'_> {
        fn rec(&mut self, pos: usize, l: &mut Vec<usize>, r: &[u64], rc: usize) -> bool {
            let s = l.len().min(rc);
            if s > self.best {
                self.best = s;
                self.best_l = l.clone();
                self.best_r = r.to_vec();
                if s >= self.target {
                    return true;
                }
            }
            if pos == self.order.len() || (l.len() + self.order.len() - pos).min(rc) <= self.best {
                return false;
            }
            let v = self.order[pos];
            let mut r2 = r.to_vec();
            bitset::and_assign(&mut r2, self.b.row(v));
            let c2 = bitset::count(&r2);
            if c2 > self.best {
                l.push(v);
                let done = self.rec(pos + 1, l, &r2, c2);
                l.pop();
                if done {
                    return true;
                }
            }
            self.rec(pos + 1, l, r, rc)
        }
    }
    let mut order: Vec<usize> = (0..b.left()).collect();
    order.sort_by_key(|&v| (Reverse(b.left_degree(v)), v));
    let mut full = vec![0u64; words_for(b.right())];
    for r in 0..b.right() {
        bitset::set(&mut full, r);
    }
    let mut bb = Bb {
        b,
        order,
        best: 0,
        best_l: Vec::new(),
        best_r: Vec::new(),
        target: target.unwrap_or(usize::MAX),
    };
    bb.rec(0, &mut Vec::new(), &full, b.right());
    let right = bitset::iter(&bb.best_r).collect();
    (bb.best_l, right)
}

/// Grow a left set from each high-degree start, always adding the vertex that
/// keeps the largest common neighborhood.
fn greedy_biclique(b: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let mut starts: Vec<usize> = (0..b.left()).collect();
    starts.sort_by_key(|&v| (Reverse(b.left_degree(v)), v));
    starts.truncate(GREEDY_STARTS);
    let mut best: (usize, Vec<usize>, Vec<u64>) = (0, Vec::new(), Vec::new());
    for &u in &starts {
        let mut l = vec![u];
        let mut r = b.row(u).to_vec();
        let mut in_l = vec![false; b.left()];
        in_l[u] = true;
        loop {
            let s = l.len().min(bitset::count(&r));
            if s > best.0 {
                best = (s, l.clone(), r.clone());
            }
            let mut pick = None;
            let mut pick_count = 0;
            for v in (0..b.left()).filter(|&v| !in_l[v]) {
                let c = bitset::and_count(&r, b.row(v));
                if c > pick_count {
                    pick = Some(v);
                    pick_count = c;
                }
            }
            match pick {
                Some(v) if pick_count > l.len() => {
                    bitset::and_assign(&mut r, b.row(v));
                    in_l[v] = true;
                    l.push(v);
                }
                _ => break,
            }
        }
    }
    (best.1, bitset::iter(&best.2).collect())
}

/// Shrink the larger side to the size of the smaller one by deleting its
/// lowest-degree vertex (lowest index on ties) one at a time. Returns the kept
/// left and right indices.
pub fn rebalance(b: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let n = b.left().min(b.right());
    let trim = |degrees: Vec<usize>| -> Vec<usize> {
        let size = degrees.len();
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            degrees.into_iter().enumerate().map(|(v, d)| Reverse((d, v))).collect();
        let mut keep = vec![true; size];
        for _ in n..size {
            let Reverse((_, v)) = heap.pop().expect("heap holds every vertex");
            keep[v] = false;
        }
        (0..size).filter(|&v| keep[v]).collect()
    };
    let left = trim((0..b.left()).map(|l| b.left_degree(l)).collect());
    let right = trim(b.right_degrees());
    (left, right)
}

/// `copy[p]` is the host of pattern vertex `order[p]` for `p < copy.len()`.
/// The copy is good when for every later vertex `j` the common neighbors in
/// part `j` of its already embedded neighbors number at least
/// `prod (p_lj - eps) * |W_j|`.
pub fn is_good_copy(gamma: &PartiteGraph, h: &Graph, params: &EmbedderParams, copy: &[usize]) -> bool {
    let i = copy.len();
    let order = &params.order;
    for &j in &order[i..] {
        let mut need = gamma.part(j).len() as f64;
        let mut common = gamma.mask(j).to_vec();
        for (p, &host) in copy.iter().enumerate() {
            let l = order[p];
            if h.has_edge(l, j) {
                need *= (params.density(l, j) - params.epsilon).max(0.0);
                bitset::and_assign(&mut common, gamma.base().row(host));
            }
        }
        if (bitset::count(&common) as f64) < need - 1e-9 {
            return false;
        }
    }
    true
}

/// Whether `w` extends `copy` by pattern vertex `order[copy.len()]`.
fn extends(gamma: &PartiteGraph, h: &Graph, order: &[usize], copy: &[usize], w: usize) -> bool {
    let x = order[copy.len()];
    copy.iter()
        .enumerate()
        .all(|(p, &host)| !h.has_edge(order[p], x) || gamma.base().has_edge(host, w))
}

/// One stage of the induction, numbered from 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageReport {
    pub i: usize,
    pub vertex: usize,
    /// Achieved matching size.
    pub t_i: usize,
    /// The real-valued target from the parameter recursion.
    pub t_target: f64,
    pub t_floor: usize,
    pub q_i: f64,
    /// Good candidates over all candidates (vertices, pairs or extensions).
    pub good_fraction: f64,
}

/// Result of [`find_blowup_greedy`].
#[derive(Clone, Debug, Serialize)]
pub struct EmbedResult {
    /// Achieved `t`; zero when some stage collapsed.
    pub t: usize,
    /// Canonical `H[t]`, copy `c` of the matching at index `c` of every set.
    pub certificate: Option<VertexMap>,
    /// Pattern vertices of the last non-empty stage and their host sets.
    pub prefix: Vec<usize>,
    pub prefix_sets: Vec<Vec<usize>>,
    pub stages: Vec<StageReport>,
    /// Parameters after lowering densities to measured values.
    pub params: EmbedderParams,
}

/// The full induction on `gamma` with part `v` hosting pattern vertex `v`.
pub fn find_blowup_greedy(gamma: &PartiteGraph, h: &Graph, params: &EmbedderParams) -> Result<EmbedResult> {
    let k = h.n();
    check_order(h, &params.order)?;
    if params.densities.len() != k {
        return invalid("parameters belong to a different pattern");
    }
    let params = params.clamp_to(h, &measure_densities(gamma, h)?);
    let order = params.order.clone();
    let (x1, x2) = (order[0], order[1]);
    let w1 = gamma.part(x1);
    let w2 = gamma.part(x2);
    let targets = stage_targets(h, &params, w1.len(), w1.len().min(w2.len()));
    let mut stages = Vec::with_capacity(k);
    let mut report = |i: usize, t_i: usize, good: usize, total: usize| {
        stages.push(StageReport {
            i: i + 1,
            vertex: order[i],
            t_i,
            t_target: targets[i],
            t_floor: targets[i].floor() as usize,
            q_i: if i == 0 { 1.0 } else { params.q(h, i) },
            good_fraction: if total == 0 { 0.0 } else { good as f64 / total as f64 },
        });
    };

    // stage 1: good vertices of the first part
    let good1: Vec<bool> = w1.iter().map(|&u| is_good_copy(gamma, h, &params, &[u])).collect();
    let m1 = good1.iter().filter(|&&g| g).count();
    report(0, m1, m1, w1.len());
    let mut copies: Vec<Vec<usize>> = Vec::new();
    if m1 > 0 {
        // stage 2: good pairs, with non-good first-part vertices kept isolated
        let mut b = BipartiteGraph::new(w1.len(), w2.len());
        let (mut good, mut total) = (0, 0);
        for (a, &u) in w1.iter().enumerate().filter(|&(a, _)| good1[a]) {
            for (c, &w) in w2.iter().enumerate() {
                if gamma.base().has_edge(u, w) {
                    total += 1;
                    if is_good_copy(gamma, h, &params, &[u, w]) {
                        good += 1;
                        b.add_edge(a, c);
                    }
                }
            }
        }
        let (keep_l, keep_r) = rebalance(&b);
        let bc = max_balanced_biclique(&b.induced(&keep_l, &keep_r));
        copies = bc
            .left
            .iter()
            .zip(&bc.right)
            .map(|(&a, &c)| vec![w1[keep_l[a]], w2[keep_r[c]]])
            .collect();
        report(1, copies.len(), good, total);
    }
    let mut last_full = copies.clone();
    for i in 2..k {
        if copies.is_empty() {
            break;
        }
        let x = order[i];
        let wx = gamma.part(x);
        let mut b = BipartiteGraph::new(copies.len(), wx.len());
        let (mut good, mut total) = (0, 0);
        let mut ext = Vec::with_capacity(i + 1);
        for (c, copy) in copies.iter().enumerate() {
            for (j, &w) in wx.iter().enumerate() {
                if !extends(gamma, h, &order, copy, w) {
                    continue;
                }
                total += 1;
                ext.clear();
                ext.extend_from_slice(copy);
                ext.push(w);
                if is_good_copy(gamma, h, &params, &ext) {
                    good += 1;
                    b.add_edge(c, j);
                }
            }
        }
        let bc = max_balanced_biclique(&b);
        copies = bc
            .left
            .iter()
            .zip(&bc.right)
            .map(|(&c, &j)| {
                let mut e = copies[c].clone();
                e.push(wx[j]);
                e
            })
            .collect();
        debug_assert!(copies.iter().all(|c| is_good_copy(gamma, h, &params, c)));
        report(i, copies.len(), good, total);
        if !copies.is_empty() {
            last_full = copies.clone();
        }
    }
    let depth = last_full.first().map_or(if m1 > 0 { 1 } else { 0 }, Vec::len);
    let prefix: Vec<usize> = order[..depth].to_vec();
    let prefix_sets: Vec<Vec<usize>> = if depth == 1 && last_full.is_empty() {
        vec![w1.iter().zip(&good1).filter(|(_, &g)| g).map(|(&u, _)| u).collect()]
    } else {
        (0..depth).map(|p| last_full.iter().map(|c| c[p]).collect()).collect()
    };
    let complete = stages.len() == k && copies.first().is_some_and(|c| c.len() == k);
    let (t, certificate) = if complete {
        let mut sets = vec![Vec::new(); k];
        for (p, &v) in order.iter().enumerate() {
            sets[v] = copies.iter().map(|c| c[p]).collect();
        }
        (copies.len(), Some(VertexMap::from_sets((0..k).collect(), &sets)))
    } else {
        (0, None)
    };
    Ok(EmbedResult {
        t,
        certificate,
        prefix,
        prefix_sets,
        stages,
        params,
    })
}

/// Orders tried by [`find_blowup_multi`]: the automatic one first, then, for
/// patterns on at most six vertices, every other order whose first two
/// vertices span an edge, in lexicographic order.
pub fn candidate_orders(h: &Graph, auto: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![auto.to_vec()];
    if h.n() > 6 {
        return out;
    }
    let mut perm: Vec<usize> = (0..h.n()).collect();
    loop {
        if h.has_edge(perm[0], perm[1]) && perm != auto {
            out.push(perm.clone());
        }
        // next lexicographic permutation
        let Some(i) = (0..perm.len().saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..perm.len()).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

/// Independent greedy runs over [`candidate_orders`] in parallel; the largest
/// `t` wins, earliest order on ties.
pub fn find_blowup_multi(gamma: &PartiteGraph, h: &Graph, alpha: f64) -> Result<EmbedResult> {
    let densities = measure_densities(gamma, h)?;
    let auto = choose_vertex_order(h, &densities)?;
    let runs: Vec<Result<EmbedResult>> = candidate_orders(h, &auto)
        .into_par_iter()
        .map(|order| {
            let params = EmbedderParams::new(h, alpha, &densities, Some(order))?;
            find_blowup_greedy(gamma, h, &params)
        })
        .collect();
    let mut best: Option<EmbedResult> = None;
    for r in runs {
        let r = r?;
        if best.as_ref().is_none_or(|b| r.t > b.t) {
            best = Some(r);
        }
    }
    Ok(best.expect("at least the automatic order is tried"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partite::{blowup, max_canonical_blowup, verify_embedding, BlowupSearchConfig};
    use rand::{Rng, SeedableRng};
    use rand_xoshiro::Xoshiro256PlusPlus;

    fn random_partite(sizes: &[usize], p: f64, h: &Graph, rng: &mut Xoshiro256PlusPlus) -> PartiteGraph {
        let n: usize = sizes.iter().sum();
        let mut g = Graph::empty(n);
        let mut parts = Vec::new();
        let mut start = 0;
        for &s in sizes {
            parts.push((start..start + s).collect::<Vec<_>>());
            start += s;
        }
        for (a, b) in h.edges() {
            for &u in &parts[a] {
                for &v in &parts[b] {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        PartiteGraph::new(g, parts).unwrap()
    }

    /// All K_{t,t} by brute force over t-subsets of the left side.
    fn brute_has_ktt(b: &BipartiteGraph, t: usize) -> bool {
        fn go(b: &BipartiteGraph, t: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == t {
                let common = (0..b.right()).filter(|&r| chosen.iter().all(|&l| b.has_edge(l, r))).count();
                return common >= t;
            }
            (from..b.left()).any(|l| {
                chosen.push(l);
                let ok = go(b, t, l + 1, chosen);
                chosen.pop();
                ok
            })
        }
        go(b, t, 0, &mut Vec::new())
    }

    fn random_bipartite(l: usize, r: usize, p: f64, rng: &mut Xoshiro256PlusPlus) -> BipartiteGraph {
        let mut b = BipartiteGraph::new(l, r);
        for i in 0..l {
            for j in 0..r {
                if rng.gen_bool(p) {
                    b.add_edge(i, j);
                }
            }
        }
        b
    }

    #[test]
    fn order_rules() {
        let k3 = Graph::complete(3);
        let o = choose_vertex_order(&k3, &[(0, 1, 0.3), (0, 2, 0.6), (1, 2, 0.9)]).unwrap();
        assert_eq!(&o[..2], &[0, 1]);
        let o = choose_vertex_order(&k3, &[(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.5)]).unwrap();
        assert_eq!(o, vec![0, 1, 2]);
        let o = choose_vertex_order(&k3, &[(0, 1, 0.9), (0, 2, 0.6), (1, 2, 0.2)]).unwrap();
        assert_eq!(o, vec![1, 2, 0]);
        assert!(choose_vertex_order(&Graph::empty(3), &[]).is_err());
        let k2 = Graph::complete(2);
        let p = EmbedderParams::new(&k2, 0.1, &[(0, 1, 0.8)], None).unwrap();
        assert_eq!(p.p12(), 0.5);
    }

    #[test]
    fn params_formulas_and_guard() {
        let k3 = Graph::complete(3);
        let d = [(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.5)];
        let p = EmbedderParams::new(&k3, 0.05, &d, None).unwrap();
        assert!((p.epsilon - 0.0025 / 72.0).abs() < 1e-15);
        let delta = 24.0 * p.epsilon / (0.5 * 2f64.ln());
        assert!((p.delta - delta).abs() < 1e-15);
        assert!(matches!(EmbedderParams::new(&k3, 0.2, &d, None), Err(Error::Precondition(_))));
        assert!(EmbedderParams::new(&k3, 0.05, &d[..2], None).is_err());
        assert!(EmbedderParams::new(&k3, 0.05, &d, Some(vec![0, 0, 1])).is_err());
    }

    #[test]
    fn targets_follow_recursion_and_decrease_in_alpha() {
        let k3 = Graph::complete(3);
        let d = [(0, 1, 0.4), (0, 2, 0.7), (1, 2, 0.8)];
        let mut prev: Option<Vec<f64>> = None;
        for step in 1..=40 {
            let alpha = step as f64 * 0.005;
            let p = EmbedderParams::new(&k3, alpha, &d, None).unwrap();
            let t = stage_targets(&k3, &p, 1000, 1000);
            let f = p.q(&k3, 2) - 3.0 * p.epsilon;
            assert!((t[2] - f * t[1]).abs() < 1e-9);
            if let Some(q) = prev {
                assert!(t.iter().zip(&q).all(|(a, b)| a <= b));
            }
            prev = Some(t);
        }
    }

    #[test]
    fn goodness_examples() {
        let g = blowup(&Graph::complete(3), 4).unwrap();
        let p = EmbedderParams::new(&Graph::complete(3), 0.1, &[(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)], None)
            .unwrap();
        assert!(g.part(0).iter().all(|&u| is_good_copy(&g, &Graph::complete(3), &p, &[u])));
        let mut base = g.base().clone();
        for &w in g.part(2) {
            base.remove_edge(0, w);
        }
        let g2 = g.with_base(base).unwrap();
        assert!(!is_good_copy(&g2, &Graph::complete(3), &p, &[0]));
        assert!(is_good_copy(&g2, &Graph::complete(3), &p, &[1]));
    }

    #[test]
    fn good_fraction_on_random_tripartite() {
        let k3 = Graph::complete(3);
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(7);
        let g = random_partite(&[400, 400, 400], 0.5, &k3, &mut rng);
        let d = [(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.5)];
        let p = EmbedderParams::new(&k3, 0.05, &d, None).unwrap().with_epsilon(0.05);
        let good = g.part(0).iter().filter(|&&u| is_good_copy(&g, &k3, &p, &[u])).count();
        assert!(good as f64 >= (1.0 - 2.0 * 0.05) * 400.0, "{good}");
    }

    #[test]
    fn biclique_examples() {
        let kb = kst_biclique(&BipartiteGraph::complete(5, 5), 5).unwrap();
        assert_eq!((kb.left, kb.right), ((0..5).collect(), (0..5).collect()));
        let mut m = BipartiteGraph::new(10, 10);
        for i in 0..10 {
            m.add_edge(i, i);
        }
        assert!(kst_biclique(&m, 2).is_none());
        assert_eq!(max_balanced_biclique(&m).size(), 1);
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
        for _ in 0..5 {
            let b = random_bipartite(24, 24, 0.5, &mut rng);
            let found = kst_biclique(&b, 3);
            assert_eq!(found.is_some(), brute_has_ktt(&b, 3));
            let bc = found.unwrap();
            assert!(bc.exact && b.is_biclique(&bc.left, &bc.right));
        }
    }

    #[test]
    fn exact_max_biclique_matches_brute_force() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(11);
        for _ in 0..40 {
            let (l, r) = (rng.gen_range(1..9), rng.gen_range(1..12));
            let b = random_bipartite(l, r, rng.gen_range(0.2..0.9), &mut rng);
            let bc = max_balanced_biclique(&b);
            assert!(b.is_biclique(&bc.left, &bc.right));
            let s = bc.size();
            assert!(!brute_has_ktt(&b, s + 1));
            assert!(s == 0 || brute_has_ktt(&b, s));
        }
    }

    #[test]
    fn greedy_biclique_is_valid() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(5);
        let mut b = random_bipartite(60, 80, 0.3, &mut rng);
        for l in 10..16 {
            for r in 20..26 {
                b.add_edge(l, r);
            }
        }
        let bc = max_balanced_biclique(&b);
        assert!(!bc.exact);
        assert!(bc.size() >= 6 && b.is_biclique(&bc.left, &bc.right));
    }

    #[test]
    fn rebalance_drops_low_degree() {
        let mut b = BipartiteGraph::new(4, 2);
        b.add_edge(0, 0);
        b.add_edge(2, 0);
        b.add_edge(2, 1);
        b.add_edge(3, 1);
        let (l, r) = rebalance(&b);
        assert_eq!(r, vec![0, 1]);
        assert_eq!(l, vec![2, 3]);
    }

    fn run(g: &PartiteGraph, h: &Graph, alpha: f64) -> EmbedResult {
        let p = EmbedderParams::measured(g, h, alpha, None).unwrap();
        find_blowup_greedy(g, h, &p).unwrap()
    }

    #[test]
    fn recovers_complete_blowups() {
        for h in [Graph::complete(2), Graph::complete(3), Graph::path(4), Graph::cycle(5)] {
            for s in 1..=5 {
                let g = blowup(&h, s).unwrap();
                let out = run(&g, &h, 0.05);
                assert_eq!(out.t, s);
                assert!(verify_embedding(out.certificate.as_ref().unwrap(), &g, &h, s, None));
                assert_eq!(out.stages.len(), h.n());
            }
        }
    }

    #[test]
    fn never_exceeds_oracle() {
        let k3 = Graph::complete(3);
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(21);
        let cfg = BlowupSearchConfig::default();
        for _ in 0..30 {
            let sizes: Vec<usize> = (0..3).map(|_| rng.gen_range(3..=8)).collect();
            let g = random_partite(&sizes, rng.gen_range(0.5..0.95), &k3, &mut rng);
            let d = measure_densities(&g, &k3).unwrap();
            let pp: f64 = d.iter().map(|x| x.2.min(0.5)).product();
            let Ok(p) = EmbedderParams::new(&k3, pp / 2.0, &d, None) else { continue };
            let out = find_blowup_greedy(&g, &k3, &p).unwrap();
            let (best, _) = max_canonical_blowup(&g, &k3, &[0, 1, 2], &cfg).unwrap().unwrap();
            assert!(out.t <= best);
            if let Some(c) = &out.certificate {
                assert!(verify_embedding(c, &g, &k3, out.t, None));
            }
        }
    }

    #[test]
    fn isolated_vertex_never_used() {
        let h = Graph::complete(3);
        let g = blowup(&h, 3).unwrap();
        let mut base = g.base().clone();
        let isolated = g.part(2)[0];
        for u in 0..base.n() {
            base.remove_edge(u, isolated);
        }
        let g = g.with_base(base).unwrap();
        let p = EmbedderParams::new(&h, 0.05, &[(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.5)], None).unwrap();
        let out = find_blowup_greedy(&g, &h, &p).unwrap();
        assert_eq!(out.t, 2);
        assert!(!out.certificate.unwrap().hosts.contains(&isolated));
    }

    #[test]
    fn collapse_reports_prefix() {
        let h = Graph::complete(3);
        let g = blowup(&h, 3).unwrap();
        let mut base = g.base().clone();
        for &u in g.part(1) {
            for &w in g.part(2) {
                base.remove_edge(u, w);
            }
        }
        let g = g.with_base(base).unwrap();
        let p = EmbedderParams::new(&h, 0.05, &[(0, 1, 0.5), (0, 2, 0.5), (1, 2, 0.5)], Some(vec![0, 1, 2]))
            .unwrap()
            .with_epsilon(0.01);
        let out = find_blowup_greedy(&g, &h, &p).unwrap();
        assert_eq!(out.t, 0);
        assert!(out.certificate.is_none());
        assert!(!out.prefix.is_empty());
    }

    #[test]
    fn multi_order_runs() {
        let k3 = Graph::complete(3);
        let orders = candidate_orders(&k3, &[0, 1, 2]);
        assert_eq!(orders.len(), 6);
        assert_eq!(candidate_orders(&Graph::path(3), &[0, 1, 2]).len(), 4);
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(12);
        let g = random_partite(&[9, 9, 9], 0.7, &k3, &mut rng);
        let single = run(&g, &k3, 0.05);
        let multi = find_blowup_multi(&g, &k3, 0.05).unwrap();
        assert!(multi.t >= single.t);
        if let Some(c) = &multi.certificate {
            assert!(verify_embedding(c, &g, &k3, multi.t, None));
        }
    }

    #[test]
    fn random_large_tripartite() {
        let k3 = Graph::complete(3);
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(1);
        let g = random_partite(&[512, 512, 512], 0.5, &k3, &mut rng);
        let out = run(&g, &k3, 0.05);
        assert!(out.t >= 2, "{:?}", out.stages);
        assert!(verify_embedding(out.certificate.as_ref().unwrap(), &g, &k3, out.t, None));
    }
}
