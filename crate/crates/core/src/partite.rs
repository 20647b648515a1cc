//! Partite graphs, blowups and canonical copies.
//!
//! A copy of `H[t]` inside a partite host is *canonical* when every blown-up
//! pattern vertex lands inside its own part. All counts here are over ordered
//! tuples (labeled copies); automorphism-reduced counts are derived elsewhere.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{self, words_for};
use crate::coloring::EdgeColoring;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::search::{Budget, SearchOutcome, SearchStats};

/// A graph together with an ordered list of disjoint vertex parts.
///
/// Parts refer to vertices of `base` directly, so sub-structures (cylinders,
/// color classes, selected tuples) keep the host's vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteGraph {
    base: Graph,
    parts: Vec<Vec<usize>>,
    part_of: Vec<Option<usize>>,
    masks: Vec<Vec<u64>>,
}

impl PartiteGraph {
    pub fn new(base: Graph, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.n();
        let mut part_of = vec![None; n];
        for (i, p) in parts.iter_mut().enumerate() {
            p.sort_unstable();
            for &v in p.iter() {
                if v >= n {
                    return invalid(format!("part {i} contains vertex {v} >= n={n}"));
                }
                if let Some(j) = part_of[v] {
                    return invalid(format!("vertex {v} lies in parts {j} and {i}"));
                }
                part_of[v] = Some(i);
            }
        }
        let words = words_for(n);
        let masks = parts
            .iter()
            .map(|p| {
                let mut m = vec![0u64; words];
                for &v in p {
                    bitset::set(&mut m, v);
                }
                m
            })
            .collect();
        Ok(Self {
            base,
            parts,
            part_of,
            masks,
        })
    }

    /// Same parts over a different graph on the same vertex set (e.g. one
    /// color class of a coloring of `base`).
    pub fn with_base(&self, base: Graph) -> Result<Self> {
        if base.n() != self.base.n() {
            return invalid("replacement base has a different vertex count");
        }
        Ok(Self {
            base,
            parts: self.parts.clone(),
            part_of: self.part_of.clone(),
            masks: self.masks.clone(),
        })
    }

    /// Keep only the listed parts (in the given order), with the same base.
    pub fn select_parts(&self, which: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(which.len());
        for &i in which {
            match self.parts.get(i) {
                Some(p) => parts.push(p.clone()),
                None => return invalid(format!("no part {i}")),
            }
        }
        Self::new(self.base.clone(), parts)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.part_of.get(v).copied().flatten()
    }

    pub(crate) fn mask(&self, i: usize) -> &[u64] {
        &self.masks[i]
    }

    /// Edges of the base with both ends in one part.
    pub fn intra_part_edge_count(&self) -> usize {
        self.base
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.part_of(u).is_some() && self.part_of(u) == self.part_of(v))
            .count()
    }

    /// Number of base edges between parts `i` and `j`.
    pub fn cross_edges(&self, i: usize, j: usize) -> usize {
        self.parts[i]
            .iter()
            .map(|&u| bitset::and_count(self.base.row(u), &self.masks[j]))
            .sum()
    }
}

/// `H[t]`: each vertex of `h` becomes an independent `t`-set, each edge a
/// complete bipartite `K_{t,t}`. Vertex `(v, c)` gets id `v * t + c`, so parts
/// are contiguous ranges.
pub fn blowup(h: &Graph, t: usize) -> Result<PartiteGraph> {
    if t == 0 {
        return invalid("blowup size t must be positive");
    }
    let k = h.n();
    let mut g = Graph::empty(k * t);
    for (a, b) in h.edges() {
        for c in 0..t {
            for d in 0..t {
                g.add_edge(a * t + c, b * t + d);
            }
        }
    }
    let parts = (0..k).map(|v| (v * t..(v + 1) * t).collect()).collect();
    PartiteGraph::new(g, parts)
}

/// Assignment of the vertices of `H[t]` to host vertices.
///
/// Pattern vertex `i` is sent to part `pattern_parts[i]`, and its `c`-th copy
/// to `hosts[i * t + c]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexMap {
    pub t: usize,
    pub pattern_parts: Vec<usize>,
    pub hosts: Vec<usize>,
}

impl VertexMap {
    pub fn from_sets(pattern_parts: Vec<usize>, sets: &[Vec<usize>]) -> Self {
        let t = sets.first().map_or(0, Vec::len);
        debug_assert!(sets.iter().all(|s| s.len() == t));
        Self {
            t,
            pattern_parts,
            hosts: sets.iter().flatten().copied().collect(),
        }
    }

    pub fn pattern_size(&self) -> usize {
        self.pattern_parts.len()
    }

    pub fn host(&self, pattern_vertex: usize, copy: usize) -> usize {
        self.hosts[pattern_vertex * self.t + copy]
    }

    pub fn set(&self, pattern_vertex: usize) -> &[usize] {
        &self.hosts[pattern_vertex * self.t..(pattern_vertex + 1) * self.t]
    }

    /// `(pattern_vertex, copy_index, host_vertex)` triples.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        (0..self.pattern_size())
            .flat_map(|i| (0..self.t).map(move |c| (i, c)))
            .map(|(i, c)| (i, c, self.host(i, c)))
            .collect()
    }

    /// Rebuild a map from triples. Missing or duplicated slots are errors.
    pub fn from_triples(
        t: usize,
        pattern_parts: Vec<usize>,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let k = pattern_parts.len();
        if triples.len() != k * t {
            return invalid(format!("expected {} triples, got {}", k * t, triples.len()));
        }
        let mut hosts = vec![usize::MAX; k * t];
        for &(i, c, h) in triples {
            if i >= k || c >= t {
                return invalid(format!("triple ({i},{c},{h}) out of range"));
            }
            if hosts[i * t + c] != usize::MAX {
                return invalid(format!("slot ({i},{c}) assigned twice"));
            }
            hosts[i * t + c] = h;
        }
        Ok(Self {
            t,
            pattern_parts,
            hosts,
        })
    }
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<&[usize]> = (0..self.pattern_size()).map(|i| self.set(i)).collect();
        write!(f, "VertexMap(t={}, parts={:?}, sets={:?})", self.t, self.pattern_parts, sets)
    }
}

fn check_injection(gamma: &PartiteGraph, h: &Graph, injection: &[usize]) -> Result<()> {
    if injection.len() != h.n() {
        return invalid(format!(
            "injection has {} entries for a pattern on {} vertices",
            injection.len(),
            h.n()
        ));
    }
    if h.n() > gamma.part_count() {
        return invalid(format!(
            "pattern has {} vertices but host has only {} parts",
            h.n(),
            gamma.part_count()
        ));
    }
    let mut seen = vec![false; gamma.part_count()];
    for &p in injection {
        if p >= gamma.part_count() || seen[p] {
            return invalid("injection must map pattern vertices to distinct existing parts");
        }
        seen[p] = true;
    }
    Ok(())
}

/// Order pattern vertices so each vertex after the first has as many earlier
/// neighbors as possible (ties: higher degree, then lower index).
pub(crate) fn constraint_order(h: &Graph) -> Vec<usize> {
    let k = h.n();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = h.neighbors(v).filter(|&u| placed[u]).count();
                (back, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Number of ordered tuples `(w_1..w_k)` with `w_i` in part `injection[i]`
/// and `w_i w_j` an edge for every edge `ij` of `h`.
pub fn count_canonical_copies(gamma: &PartiteGraph, h: &Graph, injection: &[usize]) -> Result<u64> {
    check_injection(gamma, h, injection)?;
    if h.n() == 0 {
        return Ok(1);
    }
    let order = constraint_order(h);
    let mut pos = vec![0; h.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    // back[p]: earlier positions adjacent to order[p]
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(p, &v)| h.neighbors(v).map(|u| pos[u]).filter(|&q| q < p).collect())
        .collect();
    let masks: Vec<&[u64]> = order.iter().map(|&v| gamma.mask(injection[v])).collect();
    let words = gamma.base().row_words();
    let mut chosen = vec![0usize; h.n()];
    let mut scratch = vec![0u64; words * h.n()];
    Ok(count_rec(gamma.base(), &masks, &back, 0, &mut chosen, &mut scratch))
}

/// `scratch` holds one candidate row per remaining level, current level first.
fn count_rec(
    g: &Graph,
    masks: &[&[u64]],
    back: &[Vec<usize>],
    p: usize,
    chosen: &mut [usize],
    scratch: &mut [u64],
) -> u64 {
    let words = g.row_words();
    let (cand, rest) = scratch.split_at_mut(words);
    cand.copy_from_slice(masks[p]);
    for &q in &back[p] {
        bitset::and_assign(cand, g.row(chosen[q]));
    }
    if p + 1 == masks.len() {
        return bitset::count(cand) as u64;
    }
    let mut total = 0;
    for v in bitset::iter(cand) {
        chosen[p] = v;
        total += count_rec(g, masks, back, p + 1, chosen, rest);
    }
    total
}

/// Result of a single fixed-injection blowup search.
pub(crate) enum Found {
    Yes(Vec<Vec<usize>>),
    No,
    Aborted,
}

/// Backtracking search for t-sets `S_i` inside per-pattern-vertex domains
/// such that `S_i x S_j` is complete for every pattern edge `ij`.
///
/// Sets are grown in increasing vertex order, so each combination is visited
/// once; the next pattern vertex to extend is the one with least slack.
pub(crate) struct FixedBlowupSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    t: usize,
    domains: Vec<&'a [u64]>,
}

impl<'a> FixedBlowupSearch<'a> {
    pub(crate) fn new(g: &'a Graph, h: &'a Graph, t: usize, domains: Vec<&'a [u64]>) -> Self {
        debug_assert_eq!(domains.len(), h.n());
        Self { g, h, t, domains }
    }

    /// Search with some vertices fixed in advance as `(pattern_vertex, host)`.
    pub(crate) fn run(&self, seeds: &[(usize, usize)], budget: Option<&Budget>) -> Found {
        let k = self.h.n();
        let words = self.g.row_words();
        let kw = k * words;
        let depth = k * self.t + 1;
        let mut cand = vec![0u64; kw * depth];
        for (i, d) in self.domains.iter().enumerate() {
            cand[i * words..(i + 1) * words].copy_from_slice(d);
        }
        let mut chosen = vec![Vec::with_capacity(self.t); k];
        for (s, &(a, u)) in seeds.iter().enumerate() {
            if !bitset::test(&cand[a * words..(a + 1) * words], u) {
                return Found::No;
            }
            for &(b, w) in &seeds[..s] {
                if (a == b && u == w) || (self.h.has_edge(a, b) && !self.g.has_edge(u, w)) {
                    return Found::No;
                }
            }
            chosen[a].push(u);
            if chosen[a].len() > self.t {
                return Found::No;
            }
            bitset::clear(&mut cand[a * words..(a + 1) * words], u);
            for j in self.h.neighbors(a) {
                bitset::and_assign(&mut cand[j * words..(j + 1) * words], self.g.row(u));
            }
        }
        let out = self.rec(&mut cand, &mut chosen, budget);
        if let Found::Yes(mut sets) = out {
            for s in &mut sets {
                s.sort_unstable();
            }
            return Found::Yes(sets);
        }
        out
    }

    fn rec(&self, cand: &mut [u64], chosen: &mut [Vec<usize>], budget: Option<&Budget>) -> Found {
        let k = self.h.n();
        let words = self.g.row_words();
        let kw = k * words;
        let (cur, rest) = cand.split_at_mut(kw);
        let mut pick: Option<(usize, usize)> = None;
        for i in 0..k {
            let need = self.t - chosen[i].len();
            if need == 0 {
                continue;
            }
            let have = bitset::count(&cur[i * words..(i + 1) * words]);
            if have < need {
                return Found::No;
            }
            if pick.is_none_or(|(_, s)| have - need < s) {
                pick = Some((i, have - need));
            }
        }
        let Some((i, _)) = pick else {
            return Found::Yes(chosen.to_vec());
        };
        let need = self.t - chosen[i].len();
        let list: Vec<usize> = bitset::iter(&cur[i * words..(i + 1) * words]).collect();
        for (idx, &v) in list.iter().enumerate() {
            if list.len() - idx < need {
                break;
            }
            if let Some(b) = budget {
                if !b.tick() {
                    return Found::Aborted;
                }
            }
            let next = &mut rest[..kw];
            next.copy_from_slice(cur);
            bitset::clear(&mut next[i * words..(i + 1) * words], v);
            let mut dead = false;
            for j in self.h.neighbors(i) {
                let row = &mut next[j * words..(j + 1) * words];
                bitset::and_assign(row, self.g.row(v));
                if bitset::count(row) < self.t - chosen[j].len() {
                    dead = true;
                }
            }
            if !dead {
                chosen[i].push(v);
                let r = self.rec(rest, chosen, budget);
                chosen[i].pop();
                if !matches!(r, Found::No) {
                    return r;
                }
            }
            bitset::clear(&mut cur[i * words..(i + 1) * words], v);
        }
        Found::No
    }
}

/// Limits for [`find_canonical_blowup`].
#[derive(Clone, Copy, Debug)]
pub struct BlowupSearchConfig {
    /// When every part has at most this many vertices the search ignores the
    /// node budget and is exact.
    pub exact_part_bound: usize,
    pub node_budget: u64,
}

impl Default for BlowupSearchConfig {
    fn default() -> Self {
        Self {
            exact_part_bound: 12,
            node_budget: crate::search::DEFAULT_NODE_BUDGET,
        }
    }
}

fn next_injection(inj: &mut [usize], m: usize) -> bool {
    // lexicographic successor among injective sequences over 0..m
    let k = inj.len();
    let mut pos = k;
    while pos > 0 {
        pos -= 1;
        let used: Vec<usize> = inj[..pos].to_vec();
        let mut cand = inj[pos] + 1;
        while cand < m && used.contains(&cand) {
            cand += 1;
        }
        if cand < m {
            inj[pos] = cand;
            let mut taken: Vec<usize> = inj[..=pos].to_vec();
            for slot in inj.iter_mut().skip(pos + 1) {
                let f = (0..m).find(|x| !taken.contains(x)).unwrap();
                *slot = f;
                taken.push(f);
            }
            return true;
        }
    }
    false
}

/// Search for a canonical `H[t]` in `gamma`, trying every injective
/// assignment of pattern vertices to parts in lexicographic order.
pub fn find_canonical_blowup(
    gamma: &PartiteGraph,
    h: &Graph,
    t: usize,
    cfg: &BlowupSearchConfig,
) -> Result<SearchOutcome<VertexMap>> {
    if t == 0 {
        return invalid("blowup size t must be positive");
    }
    let (k, m) = (h.n(), gamma.part_count());
    if k > m {
        return invalid(format!("pattern has {k} vertices but host has only {m} parts"));
    }
    let start = std::time::Instant::now();
    let budget = Budget::new(cfg.node_budget);
    let exact = gamma.parts().iter().all(|p| p.len() <= cfg.exact_part_bound);
    let mut inj: Vec<usize> = (0..k).collect();
    loop {
        let viable = h.edges().iter().all(|&(a, b)| gamma.cross_edges(inj[a], inj[b]) > 0);
        if viable {
            match search_at(gamma, h, t, &inj, (!exact).then_some(&budget)) {
                Found::Yes(sets) => {
                    let stats = SearchStats {
                        nodes: budget.used(),
                        elapsed: start.elapsed(),
                    };
                    return Ok(SearchOutcome::proved(Some(VertexMap::from_sets(inj, &sets)), stats));
                }
                Found::Aborted => {
                    let stats = SearchStats {
                        nodes: budget.used(),
                        elapsed: start.elapsed(),
                    };
                    return Ok(SearchOutcome::exhausted(None, stats));
                }
                Found::No => {}
            }
        }
        if !next_injection(&mut inj, m) {
            break;
        }
    }
    let stats = SearchStats {
        nodes: budget.used(),
        elapsed: start.elapsed(),
    };
    Ok(SearchOutcome::refuted(None, stats))
}

fn search_at(gamma: &PartiteGraph, h: &Graph, t: usize, inj: &[usize], budget: Option<&Budget>) -> Found {
    let domains = inj.iter().map(|&p| gamma.mask(p)).collect();
    FixedBlowupSearch::new(gamma.base(), h, t, domains).run(&[], budget)
}

/// Like [`find_canonical_blowup`] with pattern vertex `i` pinned to part
/// `injection[i]`.
pub fn find_canonical_blowup_at(
    gamma: &PartiteGraph,
    h: &Graph,
    t: usize,
    injection: &[usize],
    cfg: &BlowupSearchConfig,
) -> Result<SearchOutcome<VertexMap>> {
    if t == 0 {
        return invalid("blowup size t must be positive");
    }
    check_injection(gamma, h, injection)?;
    let start = std::time::Instant::now();
    let budget = Budget::new(cfg.node_budget);
    let exact = injection.iter().all(|&p| gamma.part(p).len() <= cfg.exact_part_bound);
    let found = search_at(gamma, h, t, injection, (!exact).then_some(&budget));
    let stats = SearchStats {
        nodes: budget.used(),
        elapsed: start.elapsed(),
    };
    Ok(match found {
        Found::Yes(sets) => {
            SearchOutcome::proved(Some(VertexMap::from_sets(injection.to_vec(), &sets)), stats)
        }
        Found::No => SearchOutcome::refuted(None, stats),
        Found::Aborted => SearchOutcome::exhausted(None, stats),
    })
}

/// Largest `t` admitting a canonical `H[t]` under a fixed injection, with a
/// witness. `None` means the budget ran out before the answer was settled.
pub fn max_canonical_blowup(
    gamma: &PartiteGraph,
    h: &Graph,
    injection: &[usize],
    cfg: &BlowupSearchConfig,
) -> Result<Option<(usize, Option<VertexMap>)>> {
    check_injection(gamma, h, injection)?;
    let cap = injection.iter().map(|&p| gamma.part(p).len()).min().unwrap_or(0);
    let mut best = (0, None);
    for t in 1..=cap {
        let out = find_canonical_blowup_at(gamma, h, t, injection, cfg)?;
        match out.verdict {
            crate::search::Verdict::Proved => best = (t, out.certificate),
            crate::search::Verdict::Refuted => break,
            crate::search::Verdict::BudgetExhausted => return Ok(None),
        }
    }
    Ok(Some(best))
}

/// Why a vertex map fails to be a (monochromatic) canonical blowup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    Shape(String),
    NotInjective { host: usize },
    NotCanonical { pattern_vertex: usize, host: usize },
    MissingEdge { u: usize, v: usize },
    WrongColor { u: usize, v: usize, expected: u8, found: Option<u8> },
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape(s) => write!(f, "malformed map: {s}"),
            Self::NotInjective { host } => write!(f, "host vertex {host} used twice"),
            Self::NotCanonical { pattern_vertex, host } => write!(
                f,
                "host vertex {host} of pattern vertex {pattern_vertex} lies outside its part"
            ),
            Self::MissingEdge { u, v } => write!(f, "required edge ({u},{v}) missing"),
            Self::WrongColor { u, v, expected, found } => {
                write!(f, "edge ({u},{v}) has color {found:?}, expected {expected}")
            }
        }
    }
}

/// Check that `cert` is an injective canonical `H[t]` in `gamma`, and that
/// all its edges have the filter color when one is given.
pub fn check_embedding(
    cert: &VertexMap,
    gamma: &PartiteGraph,
    h: &Graph,
    t: usize,
    color_filter: Option<(&EdgeColoring, u8)>,
) -> Result<(), EmbeddingViolation> {
    let k = h.n();
    if cert.t != t || t == 0 {
        return Err(EmbeddingViolation::Shape(format!("t={} but expected {t}", cert.t)));
    }
    if cert.pattern_parts.len() != k || cert.hosts.len() != k * t {
        return Err(EmbeddingViolation::Shape("wrong number of entries".into()));
    }
    let mut parts_seen = vec![false; gamma.part_count()];
    for &p in &cert.pattern_parts {
        if p >= gamma.part_count() || parts_seen[p] {
            return Err(EmbeddingViolation::Shape(format!("bad or repeated part {p}")));
        }
        parts_seen[p] = true;
    }
    let n = gamma.base().n();
    let mut used = vec![false; n];
    for i in 0..k {
        for &v in cert.set(i) {
            if v >= n {
                return Err(EmbeddingViolation::Shape(format!("host vertex {v} out of range")));
            }
            if used[v] {
                return Err(EmbeddingViolation::NotInjective { host: v });
            }
            used[v] = true;
            if gamma.part_of(v) != Some(cert.pattern_parts[i]) {
                return Err(EmbeddingViolation::NotCanonical {
                    pattern_vertex: i,
                    host: v,
                });
            }
        }
    }
    if let Some((coloring, _)) = color_filter {
        if coloring.n() != n {
            return Err(EmbeddingViolation::Shape("coloring is on a different host".into()));
        }
    }
    for (a, b) in h.edges() {
        for &u in cert.set(a) {
            for &v in cert.set(b) {
                if !gamma.base().has_edge(u, v) {
                    return Err(EmbeddingViolation::MissingEdge { u, v });
                }
                if let Some((coloring, c)) = color_filter {
                    let found = coloring.color(u, v);
                    if found != Some(c) {
                        return Err(EmbeddingViolation::WrongColor {
                            u,
                            v,
                            expected: c,
                            found,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn verify_embedding(
    cert: &VertexMap,
    gamma: &PartiteGraph,
    h: &Graph,
    t: usize,
    color_filter: Option<(&EdgeColoring, u8)>,
) -> bool {
    check_embedding(cert, gamma, h, t, color_filter).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(gamma: &PartiteGraph, h: &Graph, inj: &[usize]) -> u64 {
        // independent enumeration over the full product of parts
        fn go(gamma: &PartiteGraph, h: &Graph, inj: &[usize], tuple: &mut Vec<usize>) -> u64 {
            let i = tuple.len();
            if i == h.n() {
                let ok = h.edges().iter().all(|&(a, b)| gamma.base().has_edge(tuple[a], tuple[b]));
                return ok as u64;
            }
            let mut s = 0;
            for &w in gamma.part(inj[i]) {
                tuple.push(w);
                s += go(gamma, h, inj, tuple);
                tuple.pop();
            }
            s
        }
        go(gamma, h, inj, &mut Vec::new())
    }

    #[test]
    fn blowup_sizes() {
        let b = blowup(&Graph::complete(2), 3).unwrap();
        assert_eq!(b.base().edge_count(), 9);
        assert_eq!(b.part_count(), 2);
        let b = blowup(&Graph::complete(3), 2).unwrap();
        assert_eq!(b.base().edge_count(), 12);
        assert_eq!(b.intra_part_edge_count(), 0);
        let p = Graph::path(4);
        let b1 = blowup(&p, 1).unwrap();
        assert_eq!(b1.base(), &p);
        assert!(b1.parts().iter().all(|s| s.len() == 1));
        assert!(blowup(&p, 0).is_err());
    }

    #[test]
    fn canonical_copy_counts() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 2).unwrap();
        assert_eq!(count_canonical_copies(&g, &k3, &[0, 1, 2]).unwrap(), 8);
        let minus = g.with_base(g.base().without_edge(0, 2)).unwrap();
        let expected = brute_count(&minus, &k3, &[0, 1, 2]);
        assert_eq!(expected, 6);
        assert_eq!(count_canonical_copies(&minus, &k3, &[0, 1, 2]).unwrap(), expected);
        assert!(count_canonical_copies(&g, &Graph::complete(4), &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn empty_pair_counts_zero() {
        let g = PartiteGraph::new(Graph::path(3).disjoint_union(&Graph::empty(1)), vec![vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(count_canonical_copies(&g, &Graph::path(2), &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn finds_identity_blowup() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 3).unwrap();
        let out = find_canonical_blowup(&g, &k3, 3, &Default::default()).unwrap();
        assert!(out.is_proved());
        let cert = out.certificate.unwrap();
        assert_eq!(cert.pattern_parts, vec![0, 1, 2]);
        assert_eq!(cert.hosts, (0..9).collect::<Vec<_>>());
        assert!(verify_embedding(&cert, &g, &k3, 3, None));
    }

    #[test]
    fn missing_edge_refutes() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 2).unwrap();
        let g = g.with_base(g.base().without_edge(0, 2)).unwrap();
        let out = find_canonical_blowup(&g, &k3, 2, &Default::default()).unwrap();
        assert!(out.is_refuted());
    }

    #[test]
    fn path_blowup_found() {
        let p3 = Graph::path(3);
        let g = blowup(&p3, 2).unwrap();
        let out = find_canonical_blowup(&g, &p3, 2, &Default::default()).unwrap();
        let cert = out.certificate.unwrap();
        assert!(verify_embedding(&cert, &g, &p3, 2, None));
    }

    #[test]
    fn verification_rejects_bad_maps() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 2).unwrap();
        let good = VertexMap::from_sets(vec![0, 1, 2], &[vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(verify_embedding(&good, &g, &k3, 2, None));
        let mut dup = good.clone();
        dup.hosts[1] = 0;
        assert_eq!(
            check_embedding(&dup, &g, &k3, 2, None),
            Err(EmbeddingViolation::NotInjective { host: 0 })
        );
        let mut off = good.clone();
        off.hosts.swap(0, 2);
        assert!(matches!(
            check_embedding(&off, &g, &k3, 2, None),
            Err(EmbeddingViolation::NotCanonical { .. })
        ));
        let mut col = EdgeColoring::monochromatic(g.base(), 2, 1);
        assert!(verify_embedding(&good, &g, &k3, 2, Some((&col, 1))));
        let id = col.edge_id(0, 2).unwrap();
        col.set_color(id, 2);
        assert!(!verify_embedding(&good, &g, &k3, 2, Some((&col, 1))));
    }

    #[test]
    fn triples_round_trip() {
        let m = VertexMap::from_sets(vec![2, 0], &[vec![5, 6], vec![0, 1]]);
        let back = VertexMap::from_triples(2, vec![2, 0], &m.triples()).unwrap();
        assert_eq!(m, back);
        let mut tr = m.triples();
        tr[1] = tr[0];
        assert!(VertexMap::from_triples(2, vec![2, 0], &tr).is_err());
    }

    #[test]
    fn injection_enumeration_is_complete() {
        let mut inj = vec![0, 1];
        let mut all = vec![inj.clone()];
        while next_injection(&mut inj, 3) {
            all.push(inj.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2]);
        assert_eq!(all[2], vec![1, 0]);
    }

    #[test]
    fn max_blowup_of_blowup() {
        let k3 = Graph::complete(3);
        let g = blowup(&k3, 4).unwrap();
        let (t, cert) = max_canonical_blowup(&g, &k3, &[0, 1, 2], &Default::default()).unwrap().unwrap();
        assert_eq!(t, 4);
        assert!(verify_embedding(&cert.unwrap(), &g, &k3, 4, None));
    }
}
