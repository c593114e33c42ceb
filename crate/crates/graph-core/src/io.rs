//! Graph input and output: edge-list text, graph6 and DOT.

use crate::graph::Graph;
use crate::GraphError;

/// Parses edge-list text: one `u v` pair per line, 1-indexed; blank lines
/// and `#` comments are ignored. A line holding a single number declares a
/// vertex count (needed for isolated vertices); otherwise the count is the
/// largest endpoint seen.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared_n = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_num = |s: &str| -> Result<usize, GraphError> {
            s.parse::<usize>().map_err(|_| GraphError::Parse {
                line: lineno + 1,
                column: raw.find(s).map_or(1, |c| c + 1),
                message: format!("expected a positive integer, found {s:?}"),
            })
        };
        match fields.as_slice() {
            [] => {}
            [n] => declared_n = declared_n.max(parse_num(n)?),
            [u, v] => edges.push((parse_num(u)?, parse_num(v)?)),
            _ => {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("expected `u v`, found {} fields", fields.len()),
                })
            }
        }
    }
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v))
        .max()
        .unwrap_or(0)
        .max(declared_n);
    if n == 0 {
        return Err(GraphError::Parse {
            line: 1,
            column: 1,
            message: "no vertices: give at least one edge or a vertex count".into(),
        });
    }
    Graph::from_edges(n, edges).map_err(|e| GraphError::Parse {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes in graph6: `N(n) = n + 63` for `n <= 62`, then the upper
/// triangle in colex column order packed into big-endian 6-bit groups,
/// each offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 writer supports n <= 62");
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits: Vec<bool> = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        out.push((val + 63) as char);
    }
    out
}

/// Decodes a single graph6 line; the optional `>>graph6<<` header is
/// accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |column: usize, message: String| GraphError::Parse {
        line: 1,
        column,
        message,
    };
    if bytes.is_empty() {
        return Err(err(1, "empty graph6 input".into()));
    }
    if bytes[0] == 126 {
        return Err(err(1, "graph6 inputs with n > 62 are not supported".into()));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(err(1, format!("invalid size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(err(
            1,
            format!(
                "vertex count {n} outside supported range 1..={}",
                crate::graph::MAX_VERTICES
            ),
        ));
    }
    let m = n * (n - 1) / 2;
    let groups = m.div_ceil(6);
    if bytes.len() != 1 + groups {
        return Err(err(
            bytes.len().min(1 + groups) + 1,
            format!(
                "expected {} data characters for n = {n}, found {}",
                groups,
                bytes.len() - 1
            ),
        ));
    }
    let mut bits = Vec::with_capacity(groups * 6);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(k + 2, format!("invalid data byte {b}")));
        }
        let val = b - 63;
        for s in (0..6).rev() {
            bits.push(val >> s & 1 == 1);
        }
    }
    if bits[m..].iter().any(|&b| b) {
        return Err(err(bytes.len(), "nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 2..=n {
        for i in 1..j {
            if bits[p] {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| err(1, e.to_string()))
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 1..=g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
