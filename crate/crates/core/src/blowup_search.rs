//! Blowup Ramsey numbers at desk scale: exact values by exhaustive coloring
//! search over `G[n]`, and lower-bound certificates by randomized search.
//!
//! Colorings of `G[n]` are searched edge by edge in lexicographic order. Two
//! symmetries are broken: the first edge gets color 1, and for consecutive
//! vertices `a, a+1` of one part the full color row of `a` (non-edges as 0,
//! columns `a, a+1` skipped) must be lexicographically at most that of
//! `a+1`. Both hold simultaneously for the lexicographically least coloring
//! in the orbit under in-part permutations, after renaming colors so the
//! first part pair carries color 1 somewhere.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrow::{arrows, hom_arrows, ArrowConfig};
use crate::coloring::EdgeColoring;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::partite::{blowup, Found, FixedBlowupSearch, PartiteGraph, VertexMap};
use crate::search::{Budget, SearchOutcome, SearchStats, DEFAULT_NODE_BUDGET};
use crate::subgraph::{copies, Pattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundKind {
    /// `witness` colors `G[n]` without a monochromatic target, so `B > n`.
    Lower,
    /// Every coloring of `G[n]` has a monochromatic target; `witness`, when
    /// present, is a bad coloring of `G[n-1]` showing `n` is least.
    UpperExact,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub n: usize,
    pub witness: Option<EdgeColoring>,
}

/// Which monochromatic structure the coloring search avoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Canonical copies of `H[t]` (the blowup Ramsey number B).
    Canonical,
    /// Any copy of `H[t]` (the variant B').
    Any,
}

/// Copies of `H` in `G`, indexed by the `G`-edges they use.
struct CopyIndex {
    /// `phi[copy][pattern_vertex]` = part of `G[n]`.
    phi: Vec<Vec<usize>>,
    /// For a `G`-edge `(p, q)` with `p < q`: `(copy, a, b)` with
    /// `phi[a] = p`, `phi[b] = q`.
    by_edge: HashMap<(usize, usize), Vec<(usize, usize, usize)>>,
}

impl CopyIndex {
    fn new(g: &Graph, h: &Graph) -> Self {
        // copies differing by an automorphism of H describe the same blowups
        let phi = copies(g, h, false);
        let mut by_edge: HashMap<(usize, usize), Vec<_>> = HashMap::new();
        for (ci, m) in phi.iter().enumerate() {
            for (a, b) in h.edges() {
                let (a, b) = if m[a] < m[b] { (a, b) } else { (b, a) };
                by_edge.entry((m[a], m[b])).or_default().push((ci, a, b));
            }
        }
        Self { phi, by_edge }
    }
}

/// Check that `coloring` lives on `G[n]` and return `n`.
fn blowup_scale(coloring: &EdgeColoring, g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return invalid("base graph has no vertices");
    }
    if coloring.n() % g.n() != 0 {
        return invalid("coloring host is not a blowup of G");
    }
    let n = coloring.n() / g.n();
    if n == 0 || !coloring.matches_host(blowup(g, n)?.base()) {
        return invalid("coloring host is not a blowup of G");
    }
    Ok(n)
}

fn search_copy(
    class: &Graph,
    gn: &PartiteGraph,
    h: &Graph,
    t: usize,
    phi: &[usize],
    seeds: &[(usize, usize)],
) -> Option<Vec<Vec<usize>>> {
    let domains = phi.iter().map(|&p| gn.mask(p)).collect();
    match FixedBlowupSearch::new(class, h, t, domains).run(seeds, None) {
        Found::Yes(sets) => Some(sets),
        _ => None,
    }
}

/// A monochromatic canonical `H[t]` in a coloring of `G[n]`, as its color
/// and vertex map. The parts of `G[n]` are the blown-up vertices of `G`.
pub fn has_mono_canonical_blowup(
    coloring: &EdgeColoring,
    g: &Graph,
    h: &Graph,
    t: usize,
) -> Result<Option<(u8, VertexMap)>> {
    if t == 0 {
        return invalid("blowup size t must be positive");
    }
    let n = blowup_scale(coloring, g)?;
    if t > n || h.n() > g.n() {
        return Ok(None);
    }
    let gn = blowup(g, n)?;
    let index = CopyIndex::new(g, h);
    for c in 1..=coloring.r() {
        let class = coloring.class(c);
        for phi in &index.phi {
            if let Some(sets) = search_copy(&class, &gn, h, t, phi, &[]) {
                return Ok(Some((c, VertexMap::from_sets(phi.clone(), &sets))));
            }
        }
    }
    Ok(None)
}

/// A monochromatic copy (not necessarily canonical) of `H[t]` in any color.
pub fn has_mono_blowup_copy(coloring: &EdgeColoring, h: &Graph, t: usize) -> Result<Option<(u8, Vec<usize>)>> {
    let pattern = Pattern::new(blowup(h, t)?.base().clone());
    for c in 1..=coloring.r() {
        if let Some(m) = pattern.find(&coloring.class(c)) {
            return Ok(Some((c, m)));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug)]
pub struct BlowupConfig {
    pub node_budget: u64,
    pub threads: usize,
    pub split_depth: usize,
    /// Local-search moves tried at each `n` before the exhaustive search.
    pub warm_start_moves: u64,
    pub seed: u64,
}

impl Default for BlowupConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            split_depth: 6,
            warm_start_moves: 20_000,
            seed: 0,
        }
    }
}

enum Target<'a> {
    Canonical { h: &'a Graph, t: usize, index: CopyIndex },
    Any(Pattern),
}

struct ColoringDfs<'a> {
    gn: &'a PartiteGraph,
    edges: Vec<(usize, usize)>,
    r: u8,
    target: &'a Target<'a>,
    /// `twin[a]`: vertices `a` and `a + 1` share a part.
    twin: Vec<bool>,
    budget: &'a Budget,
}

const UNDECIDED: u8 = u8::MAX;

enum Sub {
    Bad(Vec<u8>),
    Clean,
    Aborted,
}

struct DfsState {
    classes: Vec<Graph>,
    /// row-major color matrix: 0 non-edge, `UNDECIDED`, or a color
    mat: Vec<u8>,
    colors: Vec<u8>,
}

impl ColoringDfs<'_> {
    fn nv(&self) -> usize {
        self.gn.base().n()
    }

    fn mono_through(&self, class: &Graph, x: usize, y: usize) -> bool {
        match self.target {
            Target::Canonical { h, t, index } => {
                let p = self.gn.part_of(x).expect("blowup vertex");
                let q = self.gn.part_of(y).expect("blowup vertex");
                let (x, y, p, q) = if p < q { (x, y, p, q) } else { (y, x, q, p) };
                index.by_edge.get(&(p, q)).is_some_and(|list| {
                    list.iter().any(|&(ci, a, b)| {
                        search_copy(class, self.gn, h, *t, &index.phi[ci], &[(a, x), (b, y)]).is_some()
                    })
                })
            }
            Target::Any(pat) => pat.find_through_edge(class, x, y).is_some(),
        }
    }

    /// Row `a` must not exceed row `a + 1` on the decided prefix.
    fn rows_ordered(&self, mat: &[u8], a: usize) -> bool {
        let n = self.nv();
        for w in 0..n {
            if w == a || w == a + 1 {
                continue;
            }
            let (x, y) = (mat[a * n + w], mat[(a + 1) * n + w]);
            if x == UNDECIDED || y == UNDECIDED {
                return true;
            }
            if x != y {
                return x < y;
            }
        }
        true
    }

    fn symmetry_ok(&self, mat: &[u8], x: usize, y: usize) -> bool {
        for v in [x, y] {
            if v > 0 && self.twin[v - 1] && !self.rows_ordered(mat, v - 1) {
                return false;
            }
            if self.twin[v] && !self.rows_ordered(mat, v) {
                return false;
            }
        }
        true
    }

    fn fresh(&self) -> DfsState {
        let n = self.nv();
        let mut mat = vec![0u8; n * n];
        for &(u, v) in &self.edges {
            mat[u * n + v] = UNDECIDED;
            mat[v * n + u] = UNDECIDED;
        }
        DfsState {
            classes: vec![Graph::empty(n); self.r as usize],
            mat,
            colors: Vec::new(),
        }
    }

    /// Apply color `c` to the next edge; returns whether the branch survives.
    fn push(&self, st: &mut DfsState, c: u8) -> bool {
        let n = self.nv();
        let (x, y) = self.edges[st.colors.len()];
        st.mat[x * n + y] = c;
        st.mat[y * n + x] = c;
        st.classes[c as usize - 1].add_edge(x, y);
        st.colors.push(c);
        self.symmetry_ok(&st.mat, x, y) && !self.mono_through(&st.classes[c as usize - 1], x, y)
    }

    fn pop(&self, st: &mut DfsState) {
        let n = self.nv();
        let c = st.colors.pop().expect("nonempty");
        let (x, y) = self.edges[st.colors.len()];
        st.mat[x * n + y] = UNDECIDED;
        st.mat[y * n + x] = UNDECIDED;
        st.classes[c as usize - 1].remove_edge(x, y);
    }

    fn solve_from(&self, prefix: &[u8]) -> Sub {
        let mut st = self.fresh();
        for &c in prefix {
            if !self.push(&mut st, c) {
                return Sub::Clean;
            }
        }
        self.dfs(&mut st)
    }

    fn dfs(&self, st: &mut DfsState) -> Sub {
        let i = st.colors.len();
        if i == self.edges.len() {
            return Sub::Bad(st.colors.clone());
        }
        let top = if i == 0 { 1 } else { self.r };
        for c in 1..=top {
            if !self.budget.tick() {
                return Sub::Aborted;
            }
            let res = if self.push(st, c) { self.dfs(st) } else { Sub::Clean };
            self.pop(st);
            if !matches!(res, Sub::Clean) {
                return res;
            }
        }
        Sub::Clean
    }

    fn run(&self, threads: usize, split_depth: usize) -> Result<Sub> {
        if threads <= 1 {
            return Ok(self.solve_from(&[]));
        }
        let depth = split_depth.min(self.edges.len());
        let mut prefixes = vec![Vec::new()];
        for i in 0..depth {
            let top = if i == 0 { 1 } else { self.r };
            prefixes = prefixes
                .into_iter()
                .flat_map(|p: Vec<u8>| {
                    (1..=top).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let results: Vec<Sub> = pool.install(|| prefixes.par_iter().map(|p| self.solve_from(p)).collect());
        let mut aborted = false;
        for s in results {
            match s {
                Sub::Bad(c) => return Ok(Sub::Bad(c)),
                Sub::Aborted => aborted = true,
                Sub::Clean => {}
            }
        }
        Ok(if aborted { Sub::Aborted } else { Sub::Clean })
    }
}

fn twins(gn: &PartiteGraph) -> Vec<bool> {
    let n = gn.base().n();
    (0..n)
        .map(|a| a + 1 < n && gn.part_of(a).is_some() && gn.part_of(a) == gn.part_of(a + 1))
        .collect()
}

/// Outcome of deciding one level `n`.
enum Level {
    AllMono,
    Bad(EdgeColoring),
    Exhausted,
}

fn decide_level(
    g: &Graph,
    h: &Graph,
    r: u8,
    t: usize,
    n: usize,
    mode: Mode,
    cfg: &BlowupConfig,
    budget: &Budget,
) -> Result<Level> {
    let gn = blowup(g, n)?;
    if n < t || h.n() > g.n() {
        return Ok(Level::Bad(EdgeColoring::monochromatic(gn.base(), r, 1)));
    }
    if mode == Mode::Canonical && cfg.warm_start_moves > 0 {
        let ls = LowerBoundConfig {
            strategy: Strategy::Local,
            budget: cfg.warm_start_moves,
            seed: cfg.seed ^ (n as u64),
            restart_every: 10_000,
        };
        if let Some(cert) = lower_bound_search(g, h, r, t, n, &ls)? {
            return Ok(Level::Bad(cert.witness.expect("lower certificate carries a coloring")));
        }
    }
    let target = match mode {
        Mode::Canonical => Target::Canonical {
            h,
            t,
            index: CopyIndex::new(g, h),
        },
        Mode::Any => Target::Any(Pattern::new(blowup(h, t)?.base().clone())),
    };
    let dfs = ColoringDfs {
        gn: &gn,
        edges: gn.base().edges(),
        r,
        target: &target,
        twin: twins(&gn),
        budget,
    };
    Ok(match dfs.run(cfg.threads, cfg.split_depth)? {
        Sub::Bad(colors) => Level::Bad(EdgeColoring::new(gn.base(), r, colors)?),
        Sub::Clean => Level::AllMono,
        Sub::Aborted => Level::Exhausted,
    })
}

fn scan(
    g: &Graph,
    h: &Graph,
    r: u8,
    t: usize,
    n_max: usize,
    mode: Mode,
    cfg: &BlowupConfig,
) -> Result<SearchOutcome<BoundCertificate>> {
    let start = Instant::now();
    let budget = Budget::new(cfg.node_budget);
    let stats = |b: &Budget| SearchStats {
        nodes: b.used().min(b.limit()),
        elapsed: start.elapsed(),
    };
    let mut best: Option<BoundCertificate> = None;
    for n in t.max(1)..=n_max {
        match decide_level(g, h, r, t, n, mode, cfg, &budget)? {
            Level::AllMono => {
                let cert = BoundCertificate {
                    kind: BoundKind::UpperExact,
                    n,
                    witness: best.and_then(|b| b.witness),
                };
                return Ok(SearchOutcome::proved(Some(cert), stats(&budget)));
            }
            Level::Bad(c) => {
                best = Some(BoundCertificate {
                    kind: BoundKind::Lower,
                    n,
                    witness: Some(c),
                })
            }
            Level::Exhausted => return Ok(SearchOutcome::exhausted(best, stats(&budget))),
        }
    }
    Ok(SearchOutcome::refuted(best, stats(&budget)))
}

fn check_common(g: &Graph, h: &Graph, r: u8, t: usize, n_max: usize) -> Result<()> {
    if t == 0 {
        return invalid("blowup size t must be positive");
    }
    if r == 0 {
        return invalid("color count r must be at least 1");
    }
    if n_max < t {
        return invalid(format!("n_max={n_max} is below t={t}; parts could not host H[t]"));
    }
    if g.n() == 0 || h.n() == 0 {
        return invalid("G and H need at least one vertex");
    }
    Ok(())
}

/// `B(G -> H; t)`: least `n` such that every r-coloring of `G[n]` has a
/// monochromatic canonical `H[t]`, scanning `n = t..=n_max`.
///
/// PROVED carries an UPPER-EXACT certificate at the value; REFUTED means the
/// value exceeds `n_max` and carries a LOWER certificate there; budget
/// exhaustion carries the best LOWER certificate found.
pub fn blowup_ramsey_exact(
    g: &Graph,
    h: &Graph,
    r: u8,
    t: usize,
    n_max: usize,
    cfg: &BlowupConfig,
) -> Result<SearchOutcome<BoundCertificate>> {
    check_common(g, h, r, t, n_max)?;
    let pre = arrows(g, h, r, &ArrowConfig::default())?;
    if !pre.is_proved() {
        return Err(Error::Precondition(format!(
            "G does not arrow H with {r} colors ({:?}); the blowup number is infinite or unknown",
            pre.verdict
        )));
    }
    scan(g, h, r, t, n_max, Mode::Canonical, cfg)
}

/// `B'(G, H, r, t)`: as [`blowup_ramsey_exact`] but any monochromatic copy of
/// `H[t]` counts. Finite exactly when `G` hom-arrows `H`.
pub fn blowup_ramsey_noncanonical(
    g: &Graph,
    h: &Graph,
    r: u8,
    t: usize,
    n_max: usize,
    cfg: &BlowupConfig,
) -> Result<SearchOutcome<BoundCertificate>> {
    check_common(g, h, r, t, n_max)?;
    let pre = hom_arrows(g, h, r, &ArrowConfig::default())?;
    if !pre.is_proved() {
        return Err(Error::Precondition(format!(
            "G does not hom-arrow H with {r} colors ({:?})",
            pre.verdict
        )));
    }
    scan(g, h, r, t, n_max, Mode::Any, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Random,
    Local,
}

#[derive(Clone, Copy, Debug)]
pub struct LowerBoundConfig {
    pub strategy: Strategy,
    /// Samples (random) or moves (local).
    pub budget: u64,
    pub seed: u64,
    pub restart_every: u64,
}

impl Default for LowerBoundConfig {
    fn default() -> Self {
        Self {
            strategy: Strategy::Local,
            budget: 10_000_000,
            seed: 0,
            restart_every: 10_000,
        }
    }
}

/// Min-conflict state: for every (copy of H, color) slot, one witness
/// blowup if that slot currently hosts a monochromatic canonical `H[t]`.
struct LocalSearch<'a> {
    gn: PartiteGraph,
    h: &'a Graph,
    t: usize,
    r: u8,
    index: CopyIndex,
    edges: Vec<(usize, usize)>,
    edge_id: HashMap<(usize, usize), usize>,
    colors: Vec<u8>,
    classes: Vec<Graph>,
    /// `witness[copy * r + color - 1]`: edge ids of one monochromatic blowup
    witness: Vec<Option<Vec<usize>>>,
    membership: Vec<u32>,
    conflicts: usize,
}

impl<'a> LocalSearch<'a> {
    fn new(g: &Graph, h: &'a Graph, r: u8, t: usize, n: usize) -> Result<Self> {
        let gn = blowup(g, n)?;
        let edges = gn.base().edges();
        let edge_id = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let m = edges.len();
        let index = CopyIndex::new(g, h);
        let slots = index.phi.len() * r as usize;
        let nv = gn.base().n();
        Ok(Self {
            gn,
            h,
            t,
            r,
            index,
            edges,
            edge_id,
            colors: vec![1; m],
            classes: vec![Graph::empty(nv); r as usize],
            witness: vec![None; slots],
            membership: vec![0; m],
            conflicts: 0,
        })
    }

    fn randomize<R: Rng>(&mut self, rng: &mut R) {
        let nv = self.gn.base().n();
        self.classes = vec![Graph::empty(nv); self.r as usize];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let c = rng.gen_range(1..=self.r);
            self.colors[i] = c;
            self.classes[c as usize - 1].add_edge(u, v);
        }
        self.witness.iter_mut().for_each(|w| *w = None);
        self.membership.iter_mut().for_each(|m| *m = 0);
        self.conflicts = 0;
        for slot in 0..self.witness.len() {
            self.refresh(slot);
        }
    }

    fn refresh(&mut self, slot: usize) {
        let r = self.r as usize;
        let (ci, c) = (slot / r, slot % r);
        if let Some(old) = self.witness[slot].take() {
            for e in old {
                self.membership[e] -= 1;
            }
            self.conflicts -= 1;
        }
        let phi = &self.index.phi[ci];
        if let Some(sets) = search_copy(&self.classes[c], &self.gn, self.h, self.t, phi, &[]) {
            let mut ids = Vec::new();
            for (a, b) in self.h.edges() {
                for &x in &sets[a] {
                    for &y in &sets[b] {
                        ids.push(self.edge_id[&(x.min(y), x.max(y))]);
                    }
                }
            }
            for &e in &ids {
                self.membership[e] += 1;
            }
            self.witness[slot] = Some(ids);
            self.conflicts += 1;
        }
    }

    fn recolor(&mut self, e: usize, c: u8) {
        let old = self.colors[e];
        let (u, v) = self.edges[e];
        self.classes[old as usize - 1].remove_edge(u, v);
        self.classes[c as usize - 1].add_edge(u, v);
        self.colors[e] = c;
        let (p, q) = (self.gn.part_of(u).unwrap(), self.gn.part_of(v).unwrap());
        let key = (p.min(q), p.max(q));
        let r = self.r as usize;
        let touched: Vec<usize> = self
            .index
            .by_edge
            .get(&key)
            .map(|l| l.iter().map(|&(ci, _, _)| ci).collect())
            .unwrap_or_default();
        for ci in touched {
            let lose = ci * r + old as usize - 1;
            if self.witness[lose].as_ref().is_some_and(|w| w.contains(&e)) {
                self.refresh(lose);
            }
            let gain = ci * r + c as usize - 1;
            if self.witness[gain].is_none() {
                self.refresh(gain);
            }
        }
    }

    fn step<R: Rng>(&mut self, rng: &mut R) {
        let e = if rng.gen_bool(0.1) {
            let live: Vec<&Vec<usize>> = self.witness.iter().flatten().collect();
            *live.choose(rng).expect("conflict present").choose(rng).expect("witness has edges")
        } else {
            let best = *self.membership.iter().max().unwrap_or(&0);
            let top: Vec<usize> = (0..self.membership.len()).filter(|&i| self.membership[i] == best).collect();
            *top.choose(rng).expect("some edge")
        };
        let old = self.colors[e];
        let mut c = rng.gen_range(1..self.r);
        if c >= old {
            c += 1;
        }
        self.recolor(e, c);
    }

    fn coloring(&self) -> EdgeColoring {
        EdgeColoring::new(self.gn.base(), self.r, self.colors.clone()).expect("valid colors")
    }
}

/// Search for a coloring of `G[n]` with no monochromatic canonical `H[t]`.
/// A returned certificate has been re-verified; `None` proves nothing.
pub fn lower_bound_search(
    g: &Graph,
    h: &Graph,
    r: u8,
    t: usize,
    n: usize,
    cfg: &LowerBoundConfig,
) -> Result<Option<BoundCertificate>> {
    if t == 0 || n == 0 || r == 0 {
        return invalid("t, n and r must be positive");
    }
    let gn = blowup(g, n)?;
    let lower = |c: EdgeColoring| BoundCertificate {
        kind: BoundKind::Lower,
        n,
        witness: Some(c),
    };
    if n < t || h.n() > g.n() {
        return Ok(Some(lower(EdgeColoring::monochromatic(gn.base(), r, 1))));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(cfg.seed);
    match cfg.strategy {
        Strategy::Random => {
            for _ in 0..cfg.budget {
                let c = EdgeColoring::random(gn.base(), r, &mut rng);
                if has_mono_canonical_blowup(&c, g, h, t)?.is_none() {
                    return Ok(Some(lower(c)));
                }
            }
            Ok(None)
        }
        Strategy::Local => {
            if r == 1 {
                // a single color leaves nothing to move
                let c = EdgeColoring::monochromatic(gn.base(), 1, 1);
                return Ok(has_mono_canonical_blowup(&c, g, h, t)?.is_none().then(|| lower(c)));
            }
            let mut ls = LocalSearch::new(g, h, r, t, n)?;
            ls.randomize(&mut rng);
            let every = cfg.restart_every.max(1);
            for mv in 0..cfg.budget {
                if ls.conflicts == 0 {
                    break;
                }
                if mv > 0 && mv % every == 0 {
                    ls.randomize(&mut rng);
                    continue;
                }
                ls.step(&mut rng);
            }
            if ls.conflicts > 0 {
                return Ok(None);
            }
            let c = ls.coloring();
            // independent recheck through the plain decision routine
            if has_mono_canonical_blowup(&c, g, h, t)?.is_some() {
                return Err(Error::Precondition("local search produced an unverifiable coloring".into()));
            }
            Ok(Some(lower(c)))
        }
    }
}

/// Re-verify a bound certificate's witness from scratch.
pub fn verify_lower_witness(cert: &BoundCertificate, g: &Graph, h: &Graph, t: usize) -> Result<bool> {
    let Some(w) = &cert.witness else {
        return Ok(false);
    };
    let n = blowup_scale(w, g)?;
    let expect_n = match cert.kind {
        BoundKind::Lower => cert.n,
        BoundKind::UpperExact => cert.n - 1,
    };
    Ok(n == expect_n && has_mono_canonical_blowup(w, g, h, t)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every r-coloring of `host`, by literal enumeration.
    fn all_colorings(host: &Graph, r: u8) -> impl Iterator<Item = EdgeColoring> + '_ {
        let m = host.edge_count() as u32;
        (0..(r as u64).pow(m)).map(move |mut code| {
            let colors = (0..m)
                .map(|_| {
                    let c = (code % r as u64) as u8 + 1;
                    code /= r as u64;
                    c
                })
                .collect();
            EdgeColoring::new(host, r, colors).unwrap()
        })
    }

    fn literal_all_mono(g: &Graph, h: &Graph, r: u8, t: usize, n: usize) -> bool {
        let gn = blowup(g, n).unwrap();
        let all = all_colorings(gn.base(), r).all(|c| has_mono_canonical_blowup(&c, g, h, t).unwrap().is_some());
        all
    }

    fn no_warm() -> BlowupConfig {
        BlowupConfig {
            warm_start_moves: 0,
            ..Default::default()
        }
    }

    #[test]
    fn t_one_gives_one() {
        for (g, h) in [
            (Graph::complete(6), Graph::complete(3)),
            (Graph::star(3), Graph::path(3)),
            (Graph::cycle(5), Graph::path(3)),
        ] {
            let out = blowup_ramsey_exact(&g, &h, 2, 1, 3, &no_warm()).unwrap();
            assert!(out.is_proved());
            assert_eq!(out.certificate.unwrap().n, 1);
        }
    }

    #[test]
    fn dfs_matches_literal_enumeration() {
        // host edge counts: P2[4] has 16, P3[3] has 18, K3[2] has 12
        let cases = [
            (Graph::path(2), Graph::path(2), 2, 4),
            (Graph::path(3), Graph::path(3), 2, 3),
            (Graph::path(3), Graph::path(2), 2, 3),
            (Graph::complete(3), Graph::path(3), 2, 2),
            (Graph::complete(3), Graph::complete(3), 1, 2),
        ];
        for (g, h, t, n) in cases {
            let literal = literal_all_mono(&g, &h, 2, t, n);
            let dfs = matches!(
                decide_level(&g, &h, 2, t, n, Mode::Canonical, &no_warm(), &Budget::default()).unwrap(),
                Level::AllMono
            );
            assert_eq!(literal, dfs, "{g:?} {h:?} t={t} n={n}");
        }
    }

    #[test]
    fn blowup_of_edge_matches_bipartite_ramsey() {
        // B(K2 -> K2; 2) is the bipartite Ramsey number b(2,2) = 5
        let k2 = Graph::complete(2);
        let out = blowup_ramsey_exact(&k2, &k2, 2, 2, 6, &BlowupConfig::default()).unwrap();
        assert!(out.is_proved());
        let cert = out.certificate.unwrap();
        assert_eq!(cert.n, 5);
        assert!(verify_lower_witness(&cert, &k2, &k2, 2).unwrap());
    }

    #[test]
    fn mono_blowup_queries() {
        let k6 = Graph::complete(6);
        let k3 = Graph::complete(3);
        let gn = blowup(&k6, 2).unwrap();
        let c = EdgeColoring::monochromatic(gn.base(), 2, 1);
        let (col, map) = has_mono_canonical_blowup(&c, &k6, &k3, 2).unwrap().unwrap();
        assert_eq!(col, 1);
        assert!(crate::partite::verify_embedding(&map, &gn, &k3, 2, Some((&c, 1))));
        assert!(has_mono_canonical_blowup(&c, &k6, &k3, 3).unwrap().is_none());
        assert!(has_mono_canonical_blowup(&c, &Graph::complete(5), &k3, 2).is_err());
    }

    #[test]
    fn k6_lower_certificate_at_three() {
        let cfg = LowerBoundConfig {
            budget: 1_000_000,
            seed: 1,
            ..Default::default()
        };
        let (k6, k3) = (Graph::complete(6), Graph::complete(3));
        let cert = lower_bound_search(&k6, &k3, 2, 2, 3, &cfg).unwrap().expect("certificate");
        assert!(verify_lower_witness(&cert, &k6, &k3, 2).unwrap());
    }

    #[test]
    fn lower_bound_trivial_cases() {
        let (k6, k3) = (Graph::complete(6), Graph::complete(3));
        let cert = lower_bound_search(&k6, &k3, 2, 3, 2, &Default::default()).unwrap().unwrap();
        assert_eq!(cert.n, 2);
        // a single color can never avoid H[t] once G arrows H
        let one = LowerBoundConfig {
            strategy: Strategy::Random,
            budget: 10,
            ..Default::default()
        };
        assert!(lower_bound_search(&k6, &k3, 1, 2, 2, &one).unwrap().is_none());
    }

    #[test]
    fn noncanonical_variant() {
        let k2 = Graph::complete(2);
        let out = blowup_ramsey_noncanonical(&k2, &k2, 2, 1, 3, &no_warm()).unwrap();
        assert_eq!(out.certificate.unwrap().n, 1);
        // C4 does not arrow P3, but C4[2] = K_{4,4} has degree-4 vertices
        let (c4, p3) = (Graph::cycle(4), Graph::path(3));
        assert!(matches!(blowup_ramsey_exact(&c4, &p3, 2, 1, 4, &no_warm()), Err(Error::Precondition(_))));
        let out = blowup_ramsey_noncanonical(&c4, &p3, 2, 1, 4, &no_warm()).unwrap();
        assert!(out.is_proved());
        assert_eq!(out.certificate.unwrap().n, 2);
    }

    #[test]
    fn sandwich_on_small_instance() {
        // canonical K2[2] in P3[n] lives between the center part and one leaf
        // part, so B = b(2,2) = 5; non-canonical copies may straddle leaves
        let (p3, k2) = (Graph::path(3), Graph::complete(2));
        let b = blowup_ramsey_exact(&p3, &k2, 2, 2, 6, &no_warm()).unwrap();
        let b2 = blowup_ramsey_noncanonical(&p3, &k2, 2, 2, 6, &no_warm()).unwrap();
        assert_eq!(b.certificate.unwrap().n, 5);
        assert_eq!(b2.certificate.unwrap().n, 4);
    }
}
