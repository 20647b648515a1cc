//! Robustness: the least fraction of copies of `H` forced to be monochromatic
//! in an r-coloring of `G`, its upper bound for Ramsey-minimal `G`, and a scan
//! for small Ramsey-minimal graphs.

use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arrow::{arrows, is_ramsey_minimal, ArrowConfig};
use crate::canon;
use crate::coloring::EdgeColoring;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::search::{Budget, Verdict, DEFAULT_NODE_BUDGET};
use crate::subgraph::copies;

fn ratio_str<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Clone, Copy, Debug)]
pub struct RobustnessConfig {
    /// Count labeled embeddings instead of distinct copies.
    pub labeled: bool,
    pub node_budget: u64,
    /// Leading edges whose colorings become separate tasks; 0 runs sequentially.
    pub split_depth: usize,
}

impl Default for RobustnessConfig {
    fn default() -> Self {
        Self {
            labeled: false,
            node_budget: DEFAULT_NODE_BUDGET,
            split_depth: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RobustnessReport {
    #[serde(serialize_with = "ratio_str")]
    pub beta: Ratio<u64>,
    pub argmin_coloring: EdgeColoring,
    pub mono_count: u64,
    pub total_copies: u64,
    #[serde(serialize_with = "ratio_str")]
    pub lemma_bound: Ratio<u64>,
    /// False when the budget ran out: `beta` is then only an upper bound.
    pub exact: bool,
    pub labeled: bool,
    pub nodes: u64,
}

/// `e(H) / (r e(G))`.
pub fn lemma_bound(g: &Graph, h: &Graph, r: u8) -> Result<Ratio<u64>> {
    if g.edge_count() == 0 || r == 0 {
        return invalid("the bound needs r >= 1 and a graph with edges");
    }
    Ok(Ratio::new(h.edge_count() as u64, r as u64 * g.edge_count() as u64))
}

/// Edge ids of each copy, in the order of `g.edges()`.
fn copy_edge_lists(g: &Graph, h: &Graph, labeled: bool) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let id = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).expect("copy edge is a host edge");
    copies(g, h, labeled)
        .into_iter()
        .map(|m| h.edges().iter().map(|&(a, b)| id(m[a], m[b])).collect())
        .collect()
}

/// Branch and bound over colorings, edges in a fixed order, with the count of
/// already-monochromatic completed copies as the bound.
struct MinMono<'a> {
    r: u8,
    order: &'a [usize],
    by_edge: &'a [Vec<usize>],
    copy_len: usize,
    // per copy: decided edges, their common color (0 mixed) once any is decided
    decided: Vec<u16>,
    color: Vec<u8>,
    colors: Vec<u8>,
    mono: u64,
    best: u64,
    best_colors: Option<Vec<u8>>,
    shared: &'a AtomicU64,
    budget: &'a Budget,
}

impl MinMono<'_> {
    fn assign(&mut self, e: usize, c: u8) -> Vec<(usize, u8)> {
        self.colors[e] = c;
        let mut undo = Vec::with_capacity(self.by_edge[e].len());
        for &k in &self.by_edge[e] {
            undo.push((k, self.color[k]));
            self.decided[k] += 1;
            if self.decided[k] == 1 {
                self.color[k] = c;
            } else if self.color[k] != c {
                self.color[k] = 0;
            }
            if self.decided[k] as usize == self.copy_len && self.color[k] != 0 {
                self.mono += 1;
            }
        }
        undo
    }

    fn unassign(&mut self, e: usize, undo: Vec<(usize, u8)>) {
        for (k, old) in undo.into_iter().rev() {
            if self.decided[k] as usize == self.copy_len && self.color[k] != 0 {
                self.mono -= 1;
            }
            self.decided[k] -= 1;
            self.color[k] = old;
        }
        self.colors[e] = 0;
    }

    fn pruned(&self) -> bool {
        self.mono >= self.best || self.mono > self.shared.load(Ordering::Relaxed)
    }

    /// Returns false when the budget ran out.
    fn rec(&mut self, pos: usize) -> bool {
        if !self.budget.tick() {
            return false;
        }
        if pos == self.order.len() {
            self.best = self.mono;
            self.best_colors = Some(self.colors.clone());
            self.shared.fetch_min(self.mono, Ordering::Relaxed);
            return true;
        }
        let e = self.order[pos];
        for c in 1..=self.r {
            let undo = self.assign(e, c);
            let ok = self.pruned() || self.rec(pos + 1);
            self.unassign(e, undo);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Exact robustness by exhaustive branch and bound.
pub fn robustness_exact(g: &Graph, h: &Graph, r: u8, cfg: &RobustnessConfig) -> Result<RobustnessReport> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let copy_edges = copy_edge_lists(g, h, cfg.labeled);
    if copy_edges.is_empty() || h.edge_count() == 0 {
        return Err(Error::Precondition("G must contain a copy of H with at least one edge".into()));
    }
    let m = g.edge_count();
    let mut by_edge = vec![Vec::new(); m];
    for (k, es) in copy_edges.iter().enumerate() {
        for &e in es {
            by_edge[e].push(k);
        }
    }
    // edges near the densest vertex first, so copies complete early
    let edges = g.edges();
    let bfs = g.bfs_order_from_max_degree();
    let mut rank = vec![0; g.n()];
    for (i, &v) in bfs.iter().enumerate() {
        rank[v] = i;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| {
        let (u, v) = edges[e];
        (rank[u].max(rank[v]), rank[u].min(rank[v]))
    });
    let budget = Budget::new(cfg.node_budget);
    let shared = AtomicU64::new(u64::MAX);
    let copy_len = h.edge_count();
    let total = copy_edges.len() as u64;
    // the first edge keeps color 1: recoloring preserves the count
    let depth = cfg.split_depth.min(m - 1);
    let prefixes: Vec<Vec<u8>> = (0..(r as usize).pow(depth as u32))
        .map(|mut x| {
            let mut p = vec![1u8];
            for _ in 0..depth {
                p.push((x % r as usize) as u8 + 1);
                x /= r as usize;
            }
            p
        })
        .collect();
    let run = |prefix: &Vec<u8>| -> (bool, u64, Option<Vec<u8>>) {
        let mut s = MinMono {
            r,
            order: &order,
            by_edge: &by_edge,
            copy_len,
            decided: vec![0; copy_edges.len()],
            color: vec![0; copy_edges.len()],
            colors: vec![0; m],
            mono: 0,
            best: total + 1,
            best_colors: None,
            shared: &shared,
            budget: &budget,
        };
        for (i, &c) in prefix.iter().enumerate() {
            s.assign(order[i], c);
        }
        let done = s.pruned() || s.rec(prefix.len());
        (done, s.best, s.best_colors)
    };
    let results: Vec<(bool, u64, Option<Vec<u8>>)> = if depth == 0 {
        vec![run(&prefixes[0])]
    } else {
        prefixes.par_iter().map(run).collect()
    };
    let exact = results.iter().all(|r| r.0);
    let (mono, colors) = results
        .into_iter()
        .filter_map(|(_, b, c)| c.map(|c| (b, c)))
        .min_by_key(|(b, _)| *b)
        .ok_or_else(|| Error::Budget("no complete coloring reached within the node budget".into()))?;
    Ok(RobustnessReport {
        beta: Ratio::new(mono, total),
        argmin_coloring: EdgeColoring::new(g, r, colors)?,
        mono_count: mono,
        total_copies: total,
        lemma_bound: lemma_bound(g, h, r)?,
        exact,
        labeled: cfg.labeled,
        nodes: budget.used().min(budget.limit()),
    })
}

/// Number of copies of `h` monochromatic under `coloring`, counted the same
/// way as [`robustness_exact`].
pub fn mono_copies(coloring: &EdgeColoring, h: &Graph, labeled: bool) -> (u64, u64) {
    let g = coloring.host();
    let lists = copy_edge_lists(&g, h, labeled);
    let cols = coloring.colors();
    let mono = lists
        .iter()
        .filter(|es| es.iter().all(|&e| cols[e] == cols[es[0]]))
        .count();
    (mono as u64, lists.len() as u64)
}

/// The coloring built in the proof of the bound: a bad coloring of `G - e`
/// for an edge `e` in fewest copies, with `e` given its cheapest color.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaWitness {
    pub coloring: EdgeColoring,
    pub edge: (usize, usize),
    /// Copies containing `edge`.
    pub membership: u64,
    pub mono_count: u64,
    pub total_copies: u64,
    #[serde(serialize_with = "ratio_str")]
    pub fraction: Ratio<u64>,
    #[serde(serialize_with = "ratio_str")]
    pub lemma_bound: Ratio<u64>,
}

pub fn lemma_witness_coloring(g: &Graph, h: &Graph, r: u8, cfg: &ArrowConfig) -> Result<LemmaWitness> {
    let minimal = is_ramsey_minimal(g, h, r, cfg)?;
    match minimal.verdict {
        Verdict::Proved => {}
        Verdict::Refuted => return Err(Error::Precondition("G is not Ramsey-minimal for H".into())),
        Verdict::BudgetExhausted => return Err(Error::Budget("minimality check ran out of budget".into())),
    }
    let lists = copy_edge_lists(g, h, false);
    let edges = g.edges();
    let mut membership = vec![0u64; edges.len()];
    for es in &lists {
        for &e in es {
            membership[e] += 1;
        }
    }
    let e = (0..edges.len()).min_by_key(|&e| (membership[e], e)).expect("G has edges");
    let (u, v) = edges[e];
    let rest = g.without_edge(u, v);
    let bad = arrows(&rest, h, r, cfg)?;
    let bad = match bad.verdict {
        Verdict::Refuted => bad.certificate.expect("refutation carries a coloring"),
        Verdict::Proved => return Err(Error::Precondition("G - e still arrows H".into())),
        Verdict::BudgetExhausted => return Err(Error::Budget("arrow search on G - e ran out of budget".into())),
    };
    // lift to the edge ids of G
    let mut colors: Vec<u8> = Vec::with_capacity(edges.len());
    for &(a, b) in &edges {
        colors.push(if (a, b) == (u, v) { 0 } else { bad.color(a, b).expect("edge of G - e") });
    }
    let through: Vec<&Vec<usize>> = lists.iter().filter(|es| es.contains(&e)).collect();
    let cost = |c: u8| {
        through
            .iter()
            .filter(|es| es.iter().all(|&f| f == e || colors[f] == c))
            .count()
    };
    let best = (1..=r).min_by_key(|&c| (cost(c), c)).expect("r >= 1");
    colors[e] = best;
    let coloring = EdgeColoring::new(g, r, colors)?;
    let (mono, total) = mono_copies(&coloring, h, false);
    Ok(LemmaWitness {
        coloring,
        edge: (u, v),
        membership: membership[e],
        mono_count: mono,
        total_copies: total,
        fraction: Ratio::new(mono, total),
        lemma_bound: lemma_bound(g, h, r)?,
    })
}

#[derive(Clone, Debug)]
pub struct FamilyScan {
    /// Ramsey-minimal graphs found, canonically labeled, by order then size.
    pub graphs: Vec<Graph>,
    /// False when some candidate could not be decided within the budget.
    pub complete: bool,
    pub candidates: usize,
}

/// All Ramsey-minimal graphs for `h` on at most `vertex_bound` vertices.
/// Connected patterns only need connected hosts.
pub fn minimal_family_scan(h: &Graph, r: u8, vertex_bound: usize, cfg: &ArrowConfig) -> Result<FamilyScan> {
    if vertex_bound > 9 {
        return Err(Error::Budget(format!("vertex bound {vertex_bound} exceeds 9")));
    }
    let connected = h.is_connected() && h.isolated_count() == 0;
    let mut out = FamilyScan {
        graphs: Vec::new(),
        complete: true,
        candidates: 0,
    };
    for n in 1..=vertex_bound {
        let corpus = if connected { canon::connected_graphs(n)? } else { canon::all_graphs(n)? };
        for g in corpus {
            if g.edge_count() < h.edge_count() || g.isolated_count() > h.isolated_count() {
                continue;
            }
            out.candidates += 1;
            match is_ramsey_minimal(&g, h, r, cfg)?.verdict {
                Verdict::Proved => out.graphs.push(g),
                Verdict::Refuted => {}
                Verdict::BudgetExhausted => out.complete = false,
            }
        }
    }
    out.graphs.sort_by_key(|g| (g.n(), g.edge_count()));
    Ok(out)
}
