//! The graph type and its structural operations.

use crate::GraphError;

/// Hard cap on vertex counts; keeps adjacency rows in a single `u16` and
/// matches the ambient-dimension cap of the polynomial layer.
pub const MAX_VERTICES: usize = 12;

/// A finite simple graph on vertices `1..=n`, stored as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u16>,
}

/// The built-in graph families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StandardKind {
    Complete,
    Cycle,
    Path,
    Antihole,
    Edgeless,
}

impl StandardKind {
    pub fn parse(s: &str) -> Option<StandardKind> {
        match s {
            "complete" => Some(StandardKind::Complete),
            "cycle" => Some(StandardKind::Cycle),
            "path" => Some(StandardKind::Path),
            "antihole" => Some(StandardKind::Antihole),
            "edgeless" => Some(StandardKind::Edgeless),
            _ => None,
        }
    }
}

impl Graph {
    /// The edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::Parameter(format!(
                "vertex count {n} outside supported range 1..={MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Parameter(format!("self-loop at vertex {u}")));
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    /// One of the named families on vertices `1..=n`.
    pub fn standard(kind: StandardKind, n: usize) -> Result<Graph, GraphError> {
        let min = match kind {
            StandardKind::Cycle => 3,
            StandardKind::Antihole => 6,
            _ => 1,
        };
        if n < min {
            return Err(GraphError::Parameter(format!(
                "{kind:?} requires at least {min} vertices, got {n}"
            )));
        }
        match kind {
            StandardKind::Edgeless => Graph::new(n),
            StandardKind::Complete => {
                Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
            }
            StandardKind::Path => Graph::from_edges(n, (1..n).map(|u| (u, u + 1))),
            StandardKind::Cycle => {
                Graph::from_edges(n, (1..n).map(|u| (u, u + 1)).chain([(n, 1)]))
            }
            StandardKind::Antihole => Ok(Graph::standard(StandardKind::Cycle, n)?.complement()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::Parameter(format!(
                "vertex {v} outside 1..={}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-indexed adjacency test.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n
            && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Sorted edge list, 1-indexed with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Neighbors of `v`, 1-indexed ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub(crate) fn adj_mask(&self, v0: usize) -> u16 {
        self.adj[v0]
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Parameter(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::Parameter(format!("edge {{{u},{v}}} already present")));
        }
        let mut g = self.clone();
        g.adj[u - 1] |= 1 << (v - 1);
        g.adj[v - 1] |= 1 << (u - 1);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        let all = ((1u32 << self.n) - 1) as u16;
        for v in 0..self.n {
            g.adj[v] = (!self.adj[v] & all) & !(1 << v);
        }
        g
    }

    /// Induced subgraph on a vertex set, relabelled to `1..=|S|`. Returns the
    /// graph together with the relabelling map (`map[new - 1] = old`).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Parameter("empty vertex set".into()));
        }
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != vertices.len() {
            return Err(GraphError::Parameter("duplicate vertices in set".into()));
        }
        for &v in &vs {
            self.check_vertex(v)?;
        }
        let mut g = Graph::new(vs.len())?;
        for (a, &u) in vs.iter().enumerate() {
            for (b, &v) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.adj[a] |= 1 << b;
                    g.adj[b] |= 1 << a;
                }
            }
        }
        Ok((g, vs))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::Parameter(format!(
                "edge {{{u},{v}}} not in graph"
            )));
        }
        let mut g = self.clone();
        g.adj[u - 1] &= !(1 << (v - 1));
        g.adj[v - 1] &= !(1 << (u - 1));
        Ok(g)
    }

    /// Contracts an edge: endpoints are identified, parallel edges and
    /// self-loops dropped, vertices relabelled to `1..=n-1`. The kept
    /// representative is `min(u, v)`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::Parameter(format!(
                "edge {{{u},{v}}} not in graph"
            )));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let relabel = |w: usize| -> usize {
            // old 1-indexed -> new 1-indexed
            let w = if w == drop { keep } else { w };
            if w > drop {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::new();
        for (a, b) in self.edges() {
            let (ra, rb) = (relabel(a), relabel(b));
            if ra != rb {
                edges.push((ra, rb));
            }
        }
        Graph::from_edges(self.n - 1, edges)
    }

    /// Connected components as sorted vertex lists (1-indexed).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v + 1);
                for w in 0..self.n {
                    if self.adj[v] >> w & 1 == 1 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True if the given vertex set induces a connected subgraph.
    pub fn is_connected_subset(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() {
            return false;
        }
        let inset: u16 = vertices.iter().map(|&v| 1u16 << (v - 1)).sum();
        let mut reached = 1u16 << (vertices[0] - 1);
        loop {
            let mut grown = reached;
            for v in 0..self.n {
                if reached >> v & 1 == 1 {
                    grown |= self.adj[v] & inset;
                }
            }
            if grown == reached {
                break;
            }
            reached = grown;
        }
        reached == inset
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::is_isomorphic;

    #[test]
    fn standard_graphs() {
        let c4 = Graph::standard(StandardKind::Cycle, 4).unwrap();
        assert_eq!(c4.edges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        let k3 = Graph::standard(StandardKind::Complete, 3).unwrap();
        assert_eq!(k3.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(Graph::standard(StandardKind::Cycle, 2).is_err());
        assert!(Graph::standard(StandardKind::Antihole, 5).is_err());
        let p3 = Graph::standard(StandardKind::Path, 3).unwrap();
        assert_eq!(p3.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn antihole_6_is_triangular_prism() {
        // Two triangles {1,3,5}, {2,4,6} joined by the matching 14, 25, 36.
        let anti = Graph::standard(StandardKind::Antihole, 6).unwrap();
        let prism = Graph::from_edges(
            6,
            [(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6), (1, 4), (2, 5), (3, 6)],
        )
        .unwrap();
        assert_eq!(anti, prism);
        assert_eq!(
            anti,
            Graph::standard(StandardKind::Cycle, 6).unwrap().complement()
        );
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::standard(StandardKind::Complete, 4).unwrap();
        assert_eq!(k4.complement().num_edges(), 0);
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = Graph::standard(StandardKind::Cycle, 6).unwrap();
        let (p, map) = c6.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(map, vec![1, 2, 3]);

        let k5 = Graph::standard(StandardKind::Complete, 5).unwrap();
        let (h, _) = k5.induced_subgraph(&[2, 3, 4, 5]).unwrap();
        assert_eq!(h, Graph::standard(StandardKind::Complete, 4).unwrap());

        // Membership oracle: edges of the induced subgraph are exactly the
        // pairs that are edges of the host.
        let anti = Graph::standard(StandardKind::Antihole, 6).unwrap();
        let set = [1, 2, 4, 5];
        let (h, map) = anti.induced_subgraph(&set).unwrap();
        for a in 1..=4 {
            for b in a + 1..=4 {
                assert_eq!(h.has_edge(a, b), anti.has_edge(map[a - 1], map[b - 1]));
            }
        }
        assert!(c6.induced_subgraph(&[]).is_err());
    }

    #[test]
    fn delete_and_contract() {
        let c4 = Graph::standard(StandardKind::Cycle, 4).unwrap();
        let deleted = c4.delete_edge(1, 2).unwrap();
        assert!(is_isomorphic(
            &deleted,
            &Graph::standard(StandardKind::Path, 4).unwrap()
        ));
        let contracted = c4.contract_edge(1, 2).unwrap();
        assert!(is_isomorphic(
            &contracted,
            &Graph::standard(StandardKind::Complete, 3).unwrap()
        ));
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        for (u, v) in c5.edges() {
            assert!(is_isomorphic(
                &c5.contract_edge(u, v).unwrap(),
                &Graph::standard(StandardKind::Cycle, 4).unwrap()
            ));
        }
        assert!(c4.delete_edge(1, 3).is_err());
        assert!(c4.contract_edge(1, 3).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 2, 3], vec![4], vec![5]]);
        assert!(g.is_connected_subset(&[1, 2, 3]));
        assert!(!g.is_connected_subset(&[1, 3, 4]));
    }
}
