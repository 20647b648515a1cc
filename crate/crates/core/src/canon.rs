//! Canonical labeling for small graphs, homomorphic images and exhaustive
//! graph corpora.
//!
//! Canonical forms use color refinement to split vertices into ordered cells
//! and then branch over the orderings inside each cell, keeping the
//! lexicographically largest adjacency code. Exhaustive, so only for small n.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANON_N: usize = 16;

/// Default vertex bound for [`hom_images`].
pub const HOM_IMAGE_BOUND: usize = 8;

/// Color refinement (1-dimensional Weisfeiler-Leman) starting from degrees.
/// Returns a stable coloring whose color values are isomorphism invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<HashSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                ns.sort_unstable();
                (colors[v], ns)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().map(|s| (s, 0)).collect::<BTreeMap<_, _>>();
        let ranks: HashMap<&(usize, Vec<usize>), usize> =
            ranks.keys().enumerate().map(|(i, &s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let next_classes = ranks.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// cell (by position) of each label slot
    slot_cell: Vec<usize>,
    cells: Vec<Vec<usize>>,
    best: Option<u128>,
    best_perm: Vec<usize>,
    ties: u64,
    /// label -> vertex for the current branch
    order: Vec<usize>,
    used: Vec<bool>,
}

impl CanonSearch<'_> {
    fn rec(&mut self, p: usize, code: u128, len: u32) {
        if p == self.n {
            match self.best {
                Some(b) if code < b => {}
                Some(b) if code == b => self.ties += 1,
                _ => {
                    self.best = Some(code);
                    self.ties = 1;
                    self.best_perm = self.order.clone();
                }
            }
            return;
        }
        let cell = self.slot_cell[p];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut c = code;
            for i in 0..p {
                c = (c << 1) | self.g.has_edge(self.order[i], v) as u128;
            }
            let nlen = len + p as u32;
            if let Some(b) = self.best {
                let shift = self.total_bits - nlen;
                let bp = if shift >= 128 { 0 } else { b >> shift };
                if c < bp {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.rec(p + 1, c, nlen);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// Adjacency code of the canonical relabelling: upper triangle in column
    /// order, most significant bit first.
    pub code: u128,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// Size of the automorphism group.
    pub automorphisms: u64,
}

pub fn canonical(g: &Graph) -> Result<Canonical> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::Budget(format!(
            "canonical labeling supports at most {MAX_CANON_N} vertices, got {n}"
        )));
    }
    let colors = refine(g);
    let ncells = colors.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); ncells];
    for (v, &c) in colors.iter().enumerate() {
        cells[c].push(v);
    }
    let slot_cell = cells
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| std::iter::repeat_n(c, vs.len()))
        .collect();
    let mut s = CanonSearch {
        g,
        n,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        slot_cell,
        cells,
        best: None,
        best_perm: Vec::new(),
        ties: 0,
        order: Vec::with_capacity(n),
        used: vec![false; n],
    };
    s.rec(0, 0, 0);
    let mut labeling = vec![0; n];
    for (label, &v) in s.best_perm.iter().enumerate() {
        labeling[v] = label;
    }
    Ok(Canonical {
        code: s.best.unwrap_or(0),
        labeling,
        automorphisms: s.ties,
    })
}

/// Isomorphism-invariant key: `(n, code)`.
pub fn canonical_form(g: &Graph) -> Result<(usize, u128)> {
    Ok((g.n(), canonical(g)?.code))
}

pub fn canonically_labeled(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical(g)?.labeling))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

pub fn automorphism_count(g: &Graph) -> Result<u64> {
    Ok(canonical(g)?.automorphisms)
}

/// Identify non-adjacent vertices `u` and `v`; `v` is removed and vertices
/// above it shift down.
pub fn identify(g: &Graph, u: usize, v: usize) -> Graph {
    debug_assert!(u != v && !g.has_edge(u, v));
    let mut h = g.clone();
    for w in g.neighbors(v).collect::<Vec<_>>() {
        h.add_edge(u, w);
    }
    h.without_vertex(v)
}

/// A homomorphic image together with one sequence of identifications that
/// produces it. Each `(u, v)` refers to vertex labels of the graph at that
/// step.
#[derive(Clone, Debug)]
pub struct HomImage {
    pub quotient: Graph,
    pub merges: Vec<(usize, usize)>,
}

/// All graphs reachable from `h` by repeatedly identifying two non-adjacent
/// vertices, `h` included, one representative per isomorphism class.
/// Output order is by vertex count descending, then canonical code.
pub fn hom_images(h: &Graph) -> Result<Vec<HomImage>> {
    hom_images_bounded(h, HOM_IMAGE_BOUND)
}

pub fn hom_images_bounded(h: &Graph, bound: usize) -> Result<Vec<HomImage>> {
    if h.n() > bound {
        return Err(Error::Budget(format!(
            "hom image closure limited to {bound} vertices, pattern has {}",
            h.n()
        )));
    }
    let mut seen: HashMap<(usize, u128), HomImage> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(
        canonical_form(h)?,
        HomImage {
            quotient: h.clone(),
            merges: Vec::new(),
        },
    );
    queue.push_back(canonical_form(h)?);
    while let Some(key) = queue.pop_front() {
        let cur = seen[&key].clone();
        let g = &cur.quotient;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                let q = identify(g, u, v);
                let k = canonical_form(&q)?;
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k) {
                    let mut merges = cur.merges.clone();
                    merges.push((u, v));
                    e.insert(HomImage { quotient: q, merges });
                    queue.push_back(k);
                }
            }
        }
    }
    let mut out: Vec<((usize, u128), HomImage)> = seen.into_iter().collect();
    out.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
    Ok(out.into_iter().map(|(_, img)| img).collect())
}

/// All graphs on exactly `n` vertices up to isomorphism, canonically
/// labeled, sorted by canonical code. Built by vertex augmentation.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 10 {
        return Err(Error::Budget(format!("graph corpus limited to 10 vertices, asked for {n}")));
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut h = Graph::empty(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, m - 1);
                    }
                }
                let c = canonical(&h)?;
                next.entry(c.code).or_insert_with(|| h.relabel(&c.labeling));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
