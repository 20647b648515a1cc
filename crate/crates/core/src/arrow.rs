//! Arrow relations `G ->_r H`, their homomorphic variant, and Ramsey
//! minimality, decided by exhaustive edge-coloring search.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::canon;
use crate::coloring::EdgeColoring;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::partite::VertexMap;
use crate::search::{Budget, SearchOutcome, SearchStats, Verdict, DEFAULT_NODE_BUDGET};
use crate::subgraph::Pattern;

#[derive(Clone, Copy, Debug)]
pub struct ArrowConfig {
    pub node_budget: u64,
    /// Worker threads for the root split; 1 runs sequentially.
    pub threads: usize,
    /// Number of leading edges whose colorings become separate tasks.
    pub split_depth: usize,
}

impl Default for ArrowConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
            split_depth: 6,
        }
    }
}

/// Copy of `h` inside one color class of `coloring`, as a `t = 1` map whose
/// pattern parts are the host vertices themselves.
pub fn contains_mono_copy(coloring: &EdgeColoring, h: &Graph, color: u8) -> Option<VertexMap> {
    let class = coloring.class(color);
    Pattern::new(h.clone()).find(&class).map(|m| VertexMap {
        t: 1,
        pattern_parts: m.clone(),
        hosts: m,
    })
}

/// Edges of `g` in the order the search assigns them: by BFS position of
/// the later-discovered endpoint, starting from a max-degree vertex.
fn search_edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let order = g.bfs_order_from_max_degree();
    let mut pos = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| {
        let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        (b, a)
    });
    edges
}

/// Shared, immutable description of one coloring search.
struct ArrowProblem<'a> {
    g: &'a Graph,
    r: u8,
    patterns: Vec<Pattern>,
    order: Vec<(usize, usize)>,
    budget: &'a Budget,
}

enum Sub {
    /// A full coloring (colors in search order) without a monochromatic pattern.
    Bad(Vec<u8>),
    Clean,
    Aborted,
}

impl ArrowProblem<'_> {
    fn mono_through(&self, class: &Graph, u: usize, v: usize) -> bool {
        self.patterns.iter().any(|p| p.find_through_edge(class, u, v).is_some())
    }

    /// Replay a color prefix; `None` when it already contains a pattern.
    fn replay(&self, prefix: &[u8]) -> Option<Vec<Graph>> {
        let mut classes = vec![Graph::empty(self.g.n()); self.r as usize];
        for (i, &c) in prefix.iter().enumerate() {
            let (u, v) = self.order[i];
            let cl = &mut classes[c as usize - 1];
            cl.add_edge(u, v);
            if self.mono_through(cl, u, v) {
                return None;
            }
        }
        Some(classes)
    }

    fn solve_from(&self, prefix: &[u8]) -> Sub {
        let Some(mut classes) = self.replay(prefix) else {
            return Sub::Clean;
        };
        let mut colors = prefix.to_vec();
        self.dfs(&mut classes, &mut colors)
    }

    fn dfs(&self, classes: &mut [Graph], colors: &mut Vec<u8>) -> Sub {
        let i = colors.len();
        if i == self.order.len() {
            return Sub::Bad(colors.clone());
        }
        let (u, v) = self.order[i];
        let top = if i == 0 { 1 } else { self.r };
        for c in 1..=top {
            if !self.budget.tick() {
                return Sub::Aborted;
            }
            let cl = &mut classes[c as usize - 1];
            cl.add_edge(u, v);
            let mono = self.mono_through(cl, u, v);
            let res = if mono {
                Sub::Clean
            } else {
                colors.push(c);
                let r = self.dfs(classes, colors);
                colors.pop();
                r
            };
            classes[c as usize - 1].remove_edge(u, v);
            match res {
                Sub::Clean => {}
                other => return other,
            }
        }
        Sub::Clean
    }

    fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let depth = depth.min(self.order.len());
        let mut out = vec![Vec::new()];
        for i in 0..depth {
            let top = if i == 0 { 1 } else { self.r };
            out = out
                .into_iter()
                .flat_map(|p| {
                    (1..=top).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn run(&self, cfg: &ArrowConfig) -> Result<(Verdict, Option<Vec<u8>>)> {
        let sub = if cfg.threads <= 1 {
            self.solve_from(&[])
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| crate::error::Error::InvalidArgument(e.to_string()))?;
            let prefixes = self.prefixes(cfg.split_depth);
            let results: Vec<Sub> =
                pool.install(|| prefixes.par_iter().map(|p| self.solve_from(p)).collect());
            // first refuting subtree in prefix order wins, for reproducibility
            let mut aborted = false;
            let mut found = None;
            for s in results {
                match s {
                    Sub::Bad(c) => {
                        found = Some(c);
                        break;
                    }
                    Sub::Aborted => aborted = true,
                    Sub::Clean => {}
                }
            }
            match (found, aborted) {
                (Some(c), _) => Sub::Bad(c),
                (None, true) => Sub::Aborted,
                (None, false) => Sub::Clean,
            }
        };
        Ok(match sub {
            Sub::Bad(c) => (Verdict::Refuted, Some(c)),
            Sub::Clean => (Verdict::Proved, None),
            Sub::Aborted => (Verdict::BudgetExhausted, None),
        })
    }
}

fn to_coloring(g: &Graph, r: u8, order: &[(usize, usize)], search_colors: &[u8]) -> EdgeColoring {
    let mut c = EdgeColoring::monochromatic(g, r, 1);
    for (&(u, v), &col) in order.iter().zip(search_colors) {
        let id = c.edge_id(u, v).expect("edge of host");
        c.set_color(id, col);
    }
    c
}

fn arrow_search(
    g: &Graph,
    patterns: Vec<Graph>,
    r: u8,
    cfg: &ArrowConfig,
) -> Result<SearchOutcome<EdgeColoring>> {
    if r == 0 {
        return invalid("color count r must be at least 1");
    }
    let Some(first) = patterns.first() else {
        return invalid("no target pattern");
    };
    if first.n() == 0 {
        return invalid("target graph must have at least one vertex");
    }
    let start = Instant::now();
    let stats = |nodes| SearchStats {
        nodes,
        elapsed: start.elapsed(),
    };
    // edgeless targets need only enough vertices
    if first.edge_count() == 0 {
        let c = EdgeColoring::monochromatic(g, r, 1);
        return Ok(if g.n() >= first.n() {
            SearchOutcome::proved(None, stats(0))
        } else {
            SearchOutcome::refuted(Some(c), stats(0))
        });
    }
    let budget = Budget::new(cfg.node_budget);
    let order = search_edge_order(g);
    let problem = ArrowProblem {
        g,
        r,
        patterns: patterns.into_iter().map(Pattern::new).collect(),
        order,
        budget: &budget,
    };
    let (verdict, colors) = problem.run(cfg)?;
    let cert = colors.map(|c| to_coloring(g, r, &problem.order, &c));
    Ok(SearchOutcome {
        verdict,
        certificate: cert,
        stats: stats(budget.used().min(budget.limit())),
    })
}

/// Decide `G ->_r H`. A refutation carries a coloring with no monochromatic
/// copy of `H` in any color.
pub fn arrows(g: &Graph, h: &Graph, r: u8, cfg: &ArrowConfig) -> Result<SearchOutcome<EdgeColoring>> {
    arrow_search(g, vec![h.clone()], r, cfg)
}

/// Decide whether every r-coloring of `G` has a monochromatic homomorphic
/// image of `H`.
pub fn hom_arrows(g: &Graph, h: &Graph, r: u8, cfg: &ArrowConfig) -> Result<SearchOutcome<EdgeColoring>> {
    if h.n() == 0 {
        return invalid("target graph must have at least one vertex");
    }
    let mut images: Vec<Graph> = canon::hom_images(h)?.into_iter().map(|i| i.quotient).collect();
    images.sort_by_key(|q| (q.edge_count(), q.n()));
    if h.edge_count() == 0 {
        // the single vertex is an image of any edgeless graph
        images = vec![Graph::empty(1)];
    }
    arrow_search(g, images, r, cfg)
}

/// Evidence that minimality fails: the subgraph that still arrows.
#[derive(Clone, Debug, PartialEq)]
pub enum NonMinimal {
    /// `G` itself does not arrow `H`.
    NotArrowing(EdgeColoring),
    EdgeDeletion(usize, usize),
    VertexDeletion(usize),
}

/// Ramsey minimality certificate: on success, one bad coloring per distinct
/// (up to isomorphism) single edge and vertex deletion.
#[derive(Clone, Debug, PartialEq)]
pub enum Minimality {
    Minimal(Vec<(Deletion, EdgeColoring)>),
    NotMinimal(NonMinimal),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deletion {
    Edge(usize, usize),
    Vertex(usize),
}

/// Decide whether `G ->_r H` while no graph obtained by deleting one edge or
/// one vertex does. Deletions are deduplicated by isomorphism when `G` is
/// small enough for canonical labeling.
pub fn is_ramsey_minimal(
    g: &Graph,
    h: &Graph,
    r: u8,
    cfg: &ArrowConfig,
) -> Result<SearchOutcome<Minimality>> {
    let start = Instant::now();
    let mut nodes = 0;
    let stats = |nodes| SearchStats {
        nodes,
        elapsed: start.elapsed(),
    };
    let top = arrows(g, h, r, cfg)?;
    nodes += top.stats.nodes;
    match top.verdict {
        Verdict::Refuted => {
            let c = top.certificate.expect("refutation carries a coloring");
            return Ok(SearchOutcome::refuted(
                Some(Minimality::NotMinimal(NonMinimal::NotArrowing(c))),
                stats(nodes),
            ));
        }
        Verdict::BudgetExhausted => return Ok(SearchOutcome::exhausted(None, stats(nodes))),
        Verdict::Proved => {}
    }
    let mut seen = HashSet::new();
    let mut dedupe = |sub: &Graph| -> Result<bool> {
        if sub.n() > canon::MAX_CANON_N {
            return Ok(true);
        }
        Ok(seen.insert(canon::canonical_form(sub)?))
    };
    let mut candidates: Vec<(Deletion, Graph)> = Vec::new();
    for (u, v) in g.edges() {
        let sub = g.without_edge(u, v);
        if dedupe(&sub)? {
            candidates.push((Deletion::Edge(u, v), sub));
        }
    }
    for v in 0..g.n() {
        let sub = g.without_vertex(v);
        if dedupe(&sub)? {
            candidates.push((Deletion::Vertex(v), sub));
        }
    }
    let mut witnesses = Vec::new();
    for (del, sub) in candidates {
        let out = arrows(&sub, h, r, cfg)?;
        nodes += out.stats.nodes;
        match out.verdict {
            Verdict::Refuted => witnesses.push((del, out.certificate.expect("coloring"))),
            Verdict::Proved => {
                let why = match del {
                    Deletion::Edge(u, v) => NonMinimal::EdgeDeletion(u, v),
                    Deletion::Vertex(v) => NonMinimal::VertexDeletion(v),
                };
                return Ok(SearchOutcome::refuted(Some(Minimality::NotMinimal(why)), stats(nodes)));
            }
            Verdict::BudgetExhausted => return Ok(SearchOutcome::exhausted(None, stats(nodes))),
        }
    }
    Ok(SearchOutcome::proved(Some(Minimality::Minimal(witnesses)), stats(nodes)))
}
