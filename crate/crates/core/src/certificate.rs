//! Certificate formats and a checker that rebuilds everything from plain
//! adjacency. Nothing here calls into the search code, so a bug in a producer
//! cannot be hidden by the same bug in the checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::partite::VertexMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub pattern_vertex: usize,
    pub copy_index: usize,
    pub host_vertex: usize,
}

/// A canonical `H[t]`: pattern vertex `i` uses part `pattern_parts[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCert {
    pub t: usize,
    /// Every edge must carry this color when set.
    pub color: Option<u8>,
    /// Blowup scale of the host when it is `G[n]`.
    pub n: Option<usize>,
    pub pattern_parts: Vec<usize>,
    pub triples: Vec<Triple>,
}

/// An `r`-coloring of the host with no monochromatic canonical `H[t]`.
/// With `t = 1` on singleton parts this says the host does not arrow `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCert {
    pub r: u8,
    pub t: usize,
    pub n: Option<usize>,
    /// `[u, v, color]` for every host edge.
    pub edges: Vec<(usize, usize, u8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Embedding(EmbeddingCert),
    Coloring(ColoringCert),
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl EmbeddingCert {
    pub fn from_map(map: &VertexMap, color: Option<u8>, n: Option<usize>) -> Self {
        Self {
            t: map.t,
            color,
            n,
            pattern_parts: map.pattern_parts.clone(),
            triples: map
                .triples()
                .into_iter()
                .map(|(pattern_vertex, copy_index, host_vertex)| Triple {
                    pattern_vertex,
                    copy_index,
                    host_vertex,
                })
                .collect(),
        }
    }
}

impl ColoringCert {
    pub fn from_coloring(c: &EdgeColoring, t: usize, n: Option<usize>) -> Self {
        Self {
            r: c.r(),
            t,
            n,
            edges: c.edges().iter().zip(c.colors()).map(|(&(u, v), &k)| (u, v, k)).collect(),
        }
    }

    pub fn to_coloring(&self, host_n: usize) -> Result<EdgeColoring> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        EdgeColoring::from_parts(host_n, self.r, e.iter().map(|x| (x.0, x.1)).collect(), e.iter().map(|x| x.2).collect())
    }
}

/// Host graph with its parts and the pattern.
#[derive(Clone, Debug)]
pub struct Instance {
    pub host: Graph,
    pub parts: Vec<Vec<usize>>,
    pub pattern: Graph,
}

impl Instance {
    /// `G[n]` with `(v, c)` at `v * n + c`, built directly from `g`.
    pub fn blowup_of(g: &Graph, n: usize, pattern: &Graph) -> Result<Self> {
        if n == 0 {
            return invalid("blowup scale must be positive");
        }
        let mut edges = Vec::new();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                if g.has_edge(a, b) {
                    for c in 0..n {
                        for d in 0..n {
                            edges.push((a * n + c, b * n + d));
                        }
                    }
                }
            }
        }
        Ok(Self {
            host: Graph::from_edges(g.n() * n, &edges)?,
            parts: (0..g.n()).map(|v| (v * n..(v + 1) * n).collect()).collect(),
            pattern: pattern.clone(),
        })
    }

    pub fn partite(host: &Graph, parts: Vec<Vec<usize>>, pattern: &Graph) -> Self {
        Self {
            host: host.clone(),
            parts,
            pattern: pattern.clone(),
        }
    }
}

/// The first constraint a certificate breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Malformed(String),
    /// Two triples fill the same `(pattern_vertex, copy_index)` slot.
    DuplicateSlot { pattern_vertex: usize, copy_index: usize },
    MissingSlot { pattern_vertex: usize, copy_index: usize },
    Injectivity { host_vertex: usize },
    Canonicity { pattern_vertex: usize, host_vertex: usize },
    MissingEdge { u: usize, v: usize },
    WrongColor { u: usize, v: usize, expected: u8, found: u8 },
    UncoloredEdge { u: usize, v: usize },
    ColoredNonEdge { u: usize, v: usize },
    ColorOutOfRange { u: usize, v: usize, color: u8 },
    /// A monochromatic canonical `H[t]` exists; `sets[i]` lies in `parts[i]`.
    MonochromaticBlowup { color: u8, parts: Vec<usize>, sets: Vec<Vec<usize>> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Malformed(s) => write!(f, "malformed certificate: {s}"),
            Self::DuplicateSlot { pattern_vertex, copy_index } => {
                write!(f, "slot ({pattern_vertex},{copy_index}) assigned twice")
            }
            Self::MissingSlot { pattern_vertex, copy_index } => {
                write!(f, "slot ({pattern_vertex},{copy_index}) has no host vertex")
            }
            Self::Injectivity { host_vertex } => write!(f, "injectivity: host vertex {host_vertex} used twice"),
            Self::Canonicity { pattern_vertex, host_vertex } => write!(
                f,
                "canonicity: host vertex {host_vertex} is not in the part of pattern vertex {pattern_vertex}"
            ),
            Self::MissingEdge { u, v } => write!(f, "edge: ({u},{v}) is not a host edge"),
            Self::WrongColor { u, v, expected, found } => {
                write!(f, "color: edge ({u},{v}) has color {found}, expected {expected}")
            }
            Self::UncoloredEdge { u, v } => write!(f, "coverage: host edge ({u},{v}) has no color"),
            Self::ColoredNonEdge { u, v } => write!(f, "coverage: ({u},{v}) is colored but not a host edge"),
            Self::ColorOutOfRange { u, v, color } => write!(f, "range: edge ({u},{v}) has color {color}"),
            Self::MonochromaticBlowup { color, parts, sets } => write!(
                f,
                "avoidance: monochromatic canonical blowup in color {color} on parts {parts:?}: {sets:?}"
            ),
        }
    }
}

impl std::error::Error for Violation {}

/// `table[u * n + v]`: color of edge `uv`, 0 for non-edges.
struct ColorTable {
    n: usize,
    table: Vec<u8>,
}

impl ColorTable {
    fn build(host: &Graph, r: u8, edges: &[(usize, usize, u8)]) -> Result<Self, Violation> {
        let n = host.n();
        let mut table = vec![0u8; n * n];
        for &(a, b, c) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if v >= n || u == v {
                return Err(Violation::Malformed(format!("pair ({a},{b}) is not an edge slot")));
            }
            if !host.has_edge(u, v) {
                return Err(Violation::ColoredNonEdge { u, v });
            }
            if c == 0 || c > r {
                return Err(Violation::ColorOutOfRange { u, v, color: c });
            }
            if table[u * n + v] != 0 {
                return Err(Violation::Malformed(format!("edge ({u},{v}) colored twice")));
            }
            table[u * n + v] = c;
            table[v * n + u] = c;
        }
        for u in 0..n {
            for v in u + 1..n {
                if host.has_edge(u, v) && table[u * n + v] == 0 {
                    return Err(Violation::UncoloredEdge { u, v });
                }
            }
        }
        Ok(Self { n, table })
    }

    fn get(&self, u: usize, v: usize) -> u8 {
        self.table[u * self.n + v]
    }
}

fn check_parts(inst: &Instance) -> Result<Vec<Option<usize>>, Violation> {
    let mut part_of = vec![None; inst.host.n()];
    for (i, p) in inst.parts.iter().enumerate() {
        for &v in p {
            if v >= inst.host.n() || part_of[v].is_some() {
                return Err(Violation::Malformed(format!("instance parts are not disjoint host vertex sets at {v}")));
            }
            part_of[v] = Some(i);
        }
    }
    Ok(part_of)
}

/// Check an embedding certificate; `coloring` is required when the
/// certificate names a color.
pub fn verify_embedding_cert(
    cert: &EmbeddingCert,
    inst: &Instance,
    coloring: Option<&ColoringCert>,
) -> Result<(), Violation> {
    let part_of = check_parts(inst)?;
    let (k, t, n) = (inst.pattern.n(), cert.t, inst.host.n());
    if t == 0 {
        return Err(Violation::Malformed("t must be positive".into()));
    }
    if cert.pattern_parts.len() != k {
        return Err(Violation::Malformed(format!(
            "{} pattern parts for a pattern on {k} vertices",
            cert.pattern_parts.len()
        )));
    }
    let mut seen_part = vec![false; inst.parts.len()];
    for &p in &cert.pattern_parts {
        if p >= inst.parts.len() || seen_part[p] {
            return Err(Violation::Malformed(format!("part {p} missing or used twice")));
        }
        seen_part[p] = true;
    }
    let mut slots = vec![usize::MAX; k * t];
    for tr in &cert.triples {
        if tr.pattern_vertex >= k || tr.copy_index >= t {
            return Err(Violation::Malformed(format!(
                "slot ({},{}) outside {k} x {t}",
                tr.pattern_vertex, tr.copy_index
            )));
        }
        if tr.host_vertex >= n {
            return Err(Violation::Malformed(format!("host vertex {} out of range", tr.host_vertex)));
        }
        let s = &mut slots[tr.pattern_vertex * t + tr.copy_index];
        if *s != usize::MAX {
            return Err(Violation::DuplicateSlot {
                pattern_vertex: tr.pattern_vertex,
                copy_index: tr.copy_index,
            });
        }
        *s = tr.host_vertex;
    }
    if let Some(i) = slots.iter().position(|&s| s == usize::MAX) {
        return Err(Violation::MissingSlot {
            pattern_vertex: i / t,
            copy_index: i % t,
        });
    }
    let mut used = vec![false; n];
    for (i, &v) in slots.iter().enumerate() {
        if used[v] {
            return Err(Violation::Injectivity { host_vertex: v });
        }
        used[v] = true;
        if part_of[v] != Some(cert.pattern_parts[i / t]) {
            return Err(Violation::Canonicity {
                pattern_vertex: i / t,
                host_vertex: v,
            });
        }
    }
    let table = match (cert.color, coloring) {
        (Some(_), None) => return Err(Violation::Malformed("a colored certificate needs the coloring".into())),
        (Some(_), Some(c)) => Some(ColorTable::build(&inst.host, c.r, &c.edges)?),
        (None, _) => None,
    };
    for a in 0..k {
        for b in a + 1..k {
            if !inst.pattern.has_edge(a, b) {
                continue;
            }
            for &u in &slots[a * t..(a + 1) * t] {
                for &v in &slots[b * t..(b + 1) * t] {
                    if !inst.host.has_edge(u, v) {
                        return Err(Violation::MissingEdge { u, v });
                    }
                    if let (Some(tab), Some(c)) = (&table, cert.color) {
                        let found = tab.get(u, v);
                        if found != c {
                            return Err(Violation::WrongColor { u, v, expected: c, found });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Check that the coloring covers the host exactly and has no monochromatic
/// canonical `H[t]`.
pub fn verify_coloring_cert(cert: &ColoringCert, inst: &Instance) -> Result<(), Violation> {
    check_parts(inst)?;
    if cert.t == 0 || cert.r == 0 {
        return Err(Violation::Malformed("t and r must be positive".into()));
    }
    let table = ColorTable::build(&inst.host, cert.r, &cert.edges)?;
    match find_mono_blowup(&table, inst, cert.r, cert.t) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

pub fn verify(cert: &Certificate, inst: &Instance, coloring: Option<&ColoringCert>) -> Result<(), Violation> {
    match cert {
        Certificate::Embedding(e) => verify_embedding_cert(e, inst, coloring),
        Certificate::Coloring(c) => verify_coloring_cert(c, inst),
    }
}

/// Plain exhaustive search: part assignment, then `t`-subsets slot by slot.
fn find_mono_blowup(table: &ColorTable, inst: &Instance, r: u8, t: usize) -> Option<Violation> {
    let h = &inst.pattern;
    let k = h.n();
    let adj: Vec<Vec<usize>> = (0..k).map(|a| (0..a).filter(|&b| h.has_edge(a, b)).collect()).collect();
    struct Ctx<'a> {
        table: &'a ColorTable,
        parts: &'a [Vec<usize>],
        adj: Vec<Vec<usize>>,
        t: usize,
        color: u8,
        phi: Vec<usize>,
        sets: Vec<Vec<usize>>,
    }
    fn fill(cx: &mut Ctx, i: usize, from: usize) -> bool {
        let k = cx.phi.len();
        if i == k {
            return true;
        }
        if cx.sets[i].len() == cx.t {
            return fill(cx, i + 1, 0);
        }
        let part = &cx.parts[cx.phi[i]];
        for (idx, &w) in part.iter().enumerate().skip(from) {
            let ok = cx.adj[i]
                .iter()
                .all(|&j| cx.sets[j].iter().all(|&u| cx.table.get(w, u) == cx.color));
            if ok {
                cx.sets[i].push(w);
                if fill(cx, i, idx + 1) {
                    return true;
                }
                cx.sets[i].pop();
            }
        }
        false
    }
    fn place(cx: &mut Ctx, i: usize, used: &mut [bool]) -> bool {
        if i == cx.phi.len() {
            return fill(cx, 0, 0);
        }
        for p in 0..cx.parts.len() {
            if used[p] || cx.parts[p].len() < cx.t {
                continue;
            }
            cx.phi[i] = p;
            used[p] = true;
            if place(cx, i + 1, used) {
                return true;
            }
            used[p] = false;
        }
        false
    }
    for color in 1..=r {
        let mut cx = Ctx {
            table,
            parts: &inst.parts,
            adj: adj.clone(),
            t,
            color,
            phi: vec![0; k],
            sets: vec![Vec::new(); k],
        };
        if place(&mut cx, 0, &mut vec![false; inst.parts.len()]) {
            return Some(Violation::MonochromaticBlowup {
                color,
                parts: cx.phi,
                sets: cx.sets,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagons() -> ColoringCert {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                let c = if (v - u) % 5 == 1 || (v - u) % 5 == 4 { 1 } else { 2 };
                edges.push((u, v, c));
            }
        }
        ColoringCert { r: 2, t: 1, n: None, edges }
    }

    fn singletons(g: &Graph, h: &Graph) -> Instance {
        Instance::partite(g, (0..g.n()).map(|v| vec![v]).collect(), h)
    }

    #[test]
    fn pentagon_coloring_verifies() {
        let inst = singletons(&Graph::complete(5), &Graph::complete(3));
        assert_eq!(verify_coloring_cert(&pentagons(), &inst), Ok(()));
        let mut bad = pentagons();
        bad.edges[0].2 = 2;
        assert!(matches!(
            verify_coloring_cert(&bad, &inst),
            Err(Violation::MonochromaticBlowup { .. })
        ));
        let mut short = pentagons();
        short.edges.pop();
        assert_eq!(verify_coloring_cert(&short, &inst), Err(Violation::UncoloredEdge { u: 3, v: 4 }));
        // the same coloring against K6 misses edges
        let k6 = singletons(&Graph::complete(6), &Graph::complete(3));
        assert!(matches!(verify_coloring_cert(&pentagons(), &k6), Err(Violation::UncoloredEdge { .. })));
    }

    #[test]
    fn embedding_round_trip_and_tamper() {
        let k3 = Graph::complete(3);
        let inst = Instance::blowup_of(&k3, 2, &k3).unwrap();
        let map = VertexMap {
            t: 2,
            pattern_parts: vec![0, 1, 2],
            hosts: vec![0, 1, 2, 3, 4, 5],
        };
        let cert = Certificate::Embedding(EmbeddingCert::from_map(&map, None, Some(2)));
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert_eq!(verify(&back, &inst, None), Ok(()));
        let Certificate::Embedding(mut e) = back else { unreachable!() };
        e.triples[0].host_vertex = 1;
        assert_eq!(verify_embedding_cert(&e, &inst, None), Err(Violation::Injectivity { host_vertex: 1 }));
        e.triples[0].host_vertex = 2;
        assert!(matches!(
            verify_embedding_cert(&e, &inst, None),
            Err(Violation::Injectivity { .. }) | Err(Violation::Canonicity { .. })
        ));
        // against a mismatched instance: parts shifted
        let other = Instance::partite(&inst.host, vec![vec![2, 3], vec![4, 5], vec![0, 1]], &k3);
        let Certificate::Embedding(e) = cert else { unreachable!() };
        assert!(matches!(verify_embedding_cert(&e, &other, None), Err(Violation::Canonicity { .. })));
    }

    #[test]
    fn colored_embedding() {
        let k3 = Graph::complete(3);
        let inst = Instance::blowup_of(&k3, 1, &k3).unwrap();
        let mono = ColoringCert {
            r: 2,
            t: 1,
            n: Some(1),
            edges: vec![(0, 1, 2), (0, 2, 2), (1, 2, 2)],
        };
        let mut e = EmbeddingCert {
            t: 1,
            color: Some(2),
            n: Some(1),
            pattern_parts: vec![0, 1, 2],
            triples: (0..3).map(|i| Triple { pattern_vertex: i, copy_index: 0, host_vertex: i }).collect(),
        };
        assert_eq!(verify_embedding_cert(&e, &inst, Some(&mono)), Ok(()));
        e.color = Some(1);
        assert!(matches!(verify_embedding_cert(&e, &inst, Some(&mono)), Err(Violation::WrongColor { .. })));
        assert!(matches!(verify_embedding_cert(&e, &inst, None), Err(Violation::Malformed(_))));
        // the coloring certificate itself contains a mono triangle
        assert!(verify_coloring_cert(&mono, &inst).is_err());
    }

    #[test]
    fn blowup_coloring_cert() {
        // K3[2] colored by the parity of the copy indices: a canonical K3[2]
        // needs all four edges between two parts in one color, impossible
        let k3 = Graph::complete(3);
        let inst = Instance::blowup_of(&k3, 2, &k3).unwrap();
        let edges: Vec<(usize, usize, u8)> = inst
            .host
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, if (u % 2) == (v % 2) { 1 } else { 2 }))
            .collect();
        let cert = ColoringCert { r: 2, t: 2, n: Some(2), edges };
        assert_eq!(verify_coloring_cert(&cert, &inst), Ok(()));
        let t1 = ColoringCert { t: 1, ..cert };
        assert!(verify_coloring_cert(&t1, &inst).is_err());
    }
}
