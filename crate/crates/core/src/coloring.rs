//! Edge colorings with colors `1..=r`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// An r-coloring of the edges of a host graph.
///
/// Edge ids follow [`Graph::edges`]: the i-th edge in lexicographic order
/// carries `colors[i]`. The edge list is stored so a coloring is a
/// self-contained certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    n: usize,
    r: u8,
    edges: Vec<(usize, usize)>,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn new(host: &Graph, r: u8, colors: Vec<u8>) -> Result<Self> {
        let edges = host.edges();
        Self::from_parts(host.n(), r, edges, colors)
    }

    /// Validate a raw `(n, r, edges, colors)` tuple, as read from JSON.
    pub fn from_parts(
        n: usize,
        r: u8,
        edges: Vec<(usize, usize)>,
        colors: Vec<u8>,
    ) -> Result<Self> {
        if r == 0 {
            return invalid("color count r must be at least 1");
        }
        if edges.len() != colors.len() {
            return invalid(format!(
                "{} edges but {} colors",
                edges.len(),
                colors.len()
            ));
        }
        for w in edges.windows(2) {
            if w[0] >= w[1] {
                return invalid("edge list must be strictly increasing");
            }
        }
        for &(u, v) in &edges {
            if u >= v || v >= n {
                return invalid(format!("edge ({u},{v}) is not normalized or out of range"));
            }
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > r) {
            return invalid(format!("color {c} outside 1..={r}"));
        }
        Ok(Self {
            n,
            r,
            edges,
            colors,
        })
    }

    /// Every edge gets color `c`.
    pub fn monochromatic(host: &Graph, r: u8, c: u8) -> Self {
        let m = host.edge_count();
        Self::new(host, r, vec![c; m]).expect("valid monochromatic coloring")
    }

    pub fn random<R: Rng + ?Sized>(host: &Graph, r: u8, rng: &mut R) -> Self {
        let colors = (0..host.edge_count())
            .map(|_| rng.gen_range(1..=r))
            .collect();
        Self::new(host, r, colors).expect("valid random coloring")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<u8> {
        self.edge_id(u, v).map(|i| self.colors[i])
    }

    pub fn set_color(&mut self, edge_id: usize, c: u8) {
        assert!(c >= 1 && c <= self.r);
        self.colors[edge_id] = c;
    }

    /// The host graph this coloring is defined on.
    pub fn host(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("validated edges")
    }

    /// Whether this coloring is defined on exactly the edges of `g`.
    pub fn matches_host(&self, g: &Graph) -> bool {
        g.n() == self.n && g.edges() == self.edges
    }

    /// Spanning subgraph formed by the edges of color `c`.
    pub fn class(&self, c: u8) -> Graph {
        let mut g = Graph::empty(self.n);
        for (&(u, v), &col) in self.edges.iter().zip(&self.colors) {
            if col == c {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Apply a color permutation: color `c` becomes `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[u8]) -> Result<Self> {
        if perm.len() != self.r as usize {
            return invalid("permutation length must equal r");
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p == 0 || p > self.r || seen[p as usize - 1] {
                return invalid("not a permutation of 1..=r");
            }
            seen[p as usize - 1] = true;
        }
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        Ok(Self {
            colors,
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_edges() {
        let g = Graph::complete(5);
        let colors = (0..10).map(|i| 1 + (i % 2) as u8).collect();
        let c = EdgeColoring::new(&g, 2, colors).unwrap();
        assert_eq!(c.class(1).edge_count() + c.class(2).edge_count(), 10);
        assert_eq!(c.color(1, 0), Some(1));
    }

    #[test]
    fn rejects_out_of_range_color() {
        let g = Graph::path(3);
        assert!(EdgeColoring::new(&g, 2, vec![1, 3]).is_err());
        assert!(EdgeColoring::new(&g, 2, vec![1]).is_err());
        assert!(EdgeColoring::from_parts(3, 2, vec![(1, 2), (0, 1)], vec![1, 1]).is_err());
    }

    #[test]
    fn color_permutation() {
        let g = Graph::path(3);
        let c = EdgeColoring::new(&g, 2, vec![1, 2]).unwrap();
        let p = c.permute_colors(&[2, 1]).unwrap();
        assert_eq!(p.colors(), &[2, 1]);
        assert!(c.permute_colors(&[1, 1]).is_err());
    }
}
