//! Subgraph isomorphism (not necessarily induced) by bitset backtracking.

use std::collections::HashSet;

use crate::bitset;
use crate::graph::Graph;
use crate::partite::constraint_order;

/// A pattern preprocessed for repeated embedding queries.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    order: Vec<usize>,
    /// back[p]: positions q < p whose pattern vertex is adjacent to order[p]
    back: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Self {
        let order = constraint_order(&graph);
        let back = Self::back_lists(&graph, &order);
        let edges = graph.edges();
        Self {
            graph,
            order,
            back,
            edges,
        }
    }

    fn back_lists(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
        let mut pos = vec![0; g.n()];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        order
            .iter()
            .enumerate()
            .map(|(p, &v)| g.neighbors(v).map(|u| pos[u]).filter(|&q| q < p).collect())
            .collect()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Some embedding of the pattern into `host`, as `map[pattern_vertex]`.
    pub fn find(&self, host: &Graph) -> Option<Vec<usize>> {
        let mut found = None;
        self.search(host, &[], &mut |m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    /// Some embedding that uses host edge `uv`.
    pub fn find_through_edge(&self, host: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut found = None;
        for &(a, b) in &self.edges {
            for (x, y) in [(u, v), (v, u)] {
                self.search(host, &[(a, x), (b, y)], &mut |m| {
                    found = Some(m.to_vec());
                    false
                });
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    /// Visit every embedding (injective edge-preserving map); the callback
    /// returns `false` to stop early.
    pub fn for_each_embedding(&self, host: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) {
        self.search(host, &[], f);
    }

    fn search(&self, host: &Graph, fixed: &[(usize, usize)], f: &mut dyn FnMut(&[usize]) -> bool) {
        let k = self.graph.n();
        if k > host.n() {
            return;
        }
        for &(a, x) in fixed {
            if host.degree(x) < self.graph.degree(a) {
                return;
            }
        }
        for (i, &(a, x)) in fixed.iter().enumerate() {
            for &(b, y) in &fixed[..i] {
                if x == y || (self.graph.has_edge(a, b) && !host.has_edge(x, y)) {
                    return;
                }
            }
        }
        let mut map = vec![usize::MAX; k];
        let mut used = vec![0u64; host.row_words()];
        for &(a, x) in fixed {
            map[a] = x;
            bitset::set(&mut used, x);
        }
        let mut scratch = vec![0u64; host.row_words()];
        let mut st = State {
            host,
            pat: self,
            map,
            used,
            fixed: fixed.iter().map(|&(a, _)| a).collect(),
        };
        st.rec(0, &mut scratch, f);
    }
}

struct State<'a> {
    host: &'a Graph,
    pat: &'a Pattern,
    map: Vec<usize>,
    used: Vec<u64>,
    fixed: Vec<usize>,
}

impl State<'_> {
    fn rec(&mut self, p: usize, scratch: &mut Vec<u64>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let order = &self.pat.order;
        if p == order.len() {
            return f(&self.map);
        }
        let a = order[p];
        let g = &self.pat.graph;
        if self.fixed.contains(&a) {
            // consistency with already placed neighbors
            let x = self.map[a];
            for &q in &self.pat.back[p] {
                if !self.host.has_edge(self.map[order[q]], x) {
                    return true;
                }
            }
            return self.rec(p + 1, scratch, f);
        }
        let words = self.host.row_words();
        let mut cand = vec![0u64; words];
        if self.pat.back[p].is_empty() {
            for v in 0..self.host.n() {
                bitset::set(&mut cand, v);
            }
        } else {
            cand.copy_from_slice(self.host.row(self.map[order[self.pat.back[p][0]]]));
            for &q in &self.pat.back[p][1..] {
                bitset::and_assign(&mut cand, self.host.row(self.map[order[q]]));
            }
        }
        // fixed vertices placed later must stay adjacent where required
        for (i, c) in cand.iter_mut().enumerate() {
            *c &= !self.used[i];
        }
        let need = g.degree(a);
        for x in bitset::iter(&cand).collect::<Vec<_>>() {
            if self.host.degree(x) < need {
                continue;
            }
            if g.neighbors(a).any(|b| {
                self.fixed.contains(&b) && !self.host.has_edge(self.map[b], x)
            }) {
                continue;
            }
            self.map[a] = x;
            bitset::set(&mut self.used, x);
            let go_on = self.rec(p + 1, scratch, f);
            bitset::clear(&mut self.used, x);
            self.map[a] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Copies of `pattern` in `host`. With `labeled` every embedding is listed;
/// otherwise one embedding per distinct image (vertex set plus edge set).
pub fn copies(host: &Graph, pattern: &Graph, labeled: bool) -> Vec<Vec<usize>> {
    let pat = Pattern::new(pattern.clone());
    let pedges = pattern.edges();
    let mut out = Vec::new();
    let mut seen: HashSet<(Vec<usize>, Vec<(usize, usize)>)> = HashSet::new();
    pat.for_each_embedding(host, &mut |m| {
        if labeled {
            out.push(m.to_vec());
        } else {
            let mut vs = m.to_vec();
            vs.sort_unstable();
            let mut es: Vec<(usize, usize)> = pedges
                .iter()
                .map(|&(a, b)| (m[a].min(m[b]), m[a].max(m[b])))
                .collect();
            es.sort_unstable();
            if seen.insert((vs, es)) {
                out.push(m.to_vec());
            }
        }
        true
    });
    out
}

/// Number of embeddings (labeled copies) of `pattern` in `host`.
pub fn count_embeddings(host: &Graph, pattern: &Graph) -> u64 {
    let mut count = 0;
    Pattern::new(pattern.clone()).for_each_embedding(host, &mut |_| {
        count += 1;
        true
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_embedding(host: &Graph, pat: &Graph, m: &[usize]) -> bool {
        let mut s = m.to_vec();
        s.sort();
        s.dedup();
        s.len() == m.len() && pat.edges().iter().all(|&(a, b)| host.has_edge(m[a], m[b]))
    }

    #[test]
    fn triangle_in_k6() {
        let p = Pattern::new(Graph::complete(3));
        let m = p.find(&Graph::complete(6)).unwrap();
        assert!(is_embedding(&Graph::complete(6), &Graph::complete(3), &m));
        assert!(p.find(&Graph::complete_bipartite(3, 3)).is_none());
    }

    #[test]
    fn copy_counts() {
        let k6 = Graph::complete(6);
        assert_eq!(copies(&k6, &Graph::complete(3), false).len(), 20);
        assert_eq!(copies(&k6, &Graph::complete(3), true).len(), 120);
        assert_eq!(copies(&Graph::cycle(5), &Graph::path(3), false).len(), 5);
        assert_eq!(copies(&Graph::star(3), &Graph::path(3), false).len(), 3);
        assert_eq!(count_embeddings(&k6, &Graph::complete(3)), 120);
        assert_eq!(count_embeddings(&Graph::cycle(5), &Graph::path(3)), 10);
    }

    #[test]
    fn through_edge_respects_edge() {
        let mut g = Graph::complete(4);
        g.remove_edge(0, 1);
        let p = Pattern::new(Graph::complete(3));
        let m = p.find_through_edge(&g, 2, 3).unwrap();
        assert!(m.contains(&2) && m.contains(&3));
        assert!(p.find_through_edge(&g, 0, 1).is_none());
        let p3 = Pattern::new(Graph::path(3));
        let path = Graph::path(4);
        let m = p3.find_through_edge(&path, 2, 3).unwrap();
        assert!(is_embedding(&path, &Graph::path(3), &m));
    }

    #[test]
    fn single_vertex_and_empty_patterns() {
        let p = Pattern::new(Graph::empty(1));
        assert!(p.find(&Graph::empty(1)).is_some());
        assert!(p.find(&Graph::empty(0)).is_none());
        assert_eq!(Pattern::new(Graph::empty(0)).find(&Graph::empty(0)), Some(vec![]));
    }
}
