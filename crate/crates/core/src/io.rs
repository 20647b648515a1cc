//! graph6 and JSON edge-list serialization.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        offset,
        message: message.into(),
    })
}

/// Encode in graph6: size prefix, then the upper triangle column by column,
/// six bits per byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decode one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let mut bytes = s.trim_end().as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    let mut pos = 0;
    let six = |pos: &mut usize| -> Result<usize> {
        let Some(&b) = bytes.get(*pos) else {
            return parse_err(base + *pos, "unexpected end of input");
        };
        if !(63..=126).contains(&b) {
            return parse_err(base + *pos, format!("byte {b:#04x} outside graph6 range 63..=126"));
        }
        *pos += 1;
        Ok((b - 63) as usize)
    };
    let first = six(&mut pos)?;
    let n = if first < 63 {
        first
    } else if bytes.get(1) == Some(&126) {
        pos = 2;
        let mut n = 0;
        for _ in 0..6 {
            n = (n << 6) | six(&mut pos)?;
        }
        n
    } else {
        let mut n = 0;
        for _ in 0..3 {
            n = (n << 6) | six(&mut pos)?;
        }
        n
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return parse_err(
            base + pos.min(bytes.len()),
            format!("expected {need} data bytes for n={n}, found {}", bytes.len() - pos),
        );
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut cur = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = six(&mut pos)?;
                left = 6;
            }
            left -= 1;
            if cur >> left & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return parse_err(base + pos - 1, "nonzero padding bits");
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"n": 3, "edges": [[0,1],[1,2]]}`
pub fn to_json(g: &Graph) -> String {
    let el = EdgeList {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&el).expect("edge list serializes")
}

pub fn from_json(s: &str) -> Result<Graph> {
    let el: EdgeList = serde_json::from_str(s).map_err(|e| Error::Parse {
        offset: byte_offset(s, e.line(), e.column()),
        message: e.to_string(),
    })?;
    let edges: Vec<(usize, usize)> = el.edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::from_edges(el.n, &edges)
}

fn byte_offset(s: &str, line: usize, column: usize) -> usize {
    let before: usize = s.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

/// Parse either format. graph6 bytes never include `"`, so its presence
/// selects JSON (a bare `{` is a valid graph6 size byte).
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.contains('"') {
        from_json(s)
    } else {
        from_graph6(s.trim())
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sixty_vertices_start_with_brace() {
        let g = Graph::cycle(60);
        let s = to_graph6(&g);
        assert!(s.starts_with('{'));
        assert_eq!(parse_graph(&s).unwrap(), g);
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::complete(6)), "E~~w");
        // the 5-cycle 0-1-2-3-4-0
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        let g = from_graph6("E}hW").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(to_graph6(&g), "E}hW");
    }

    #[test]
    fn header_and_large_n() {
        let g = from_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g.edge_count(), 1);
        let big = Graph::path(70);
        let s = to_graph6(&big);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), big);
    }

    #[test]
    fn malformed_input_reports_offset() {
        match from_graph6("E}h ") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match from_graph6("A\u{7f}") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match from_graph6("E}h") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_edge_list() {
        let g = from_json(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        assert!(from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(matches!(from_json("{\"n\":"), Err(Error::Parse { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn graph6_round_trip(n in 0usize..=20, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64(seed);
            let g = Graph::gnp(n, 0.5, &mut rng);
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
