//! Chordality, weak chordality and induced-path/cycle predicates.

use crate::graph::Graph;

/// Searches for a chordless cycle of length at least `min_len` whose
/// vertices are returned in cyclic order. The result is certified before
/// being returned: consecutive pairs are edges, all other pairs non-edges.
pub fn find_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 3, "cycles have at least 3 vertices");
    let n = g.n();
    if n < min_len {
        return None;
    }
    // Chordless paths with a fixed minimum vertex `a`; every other vertex on
    // the cycle must exceed `a`.
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for a in 0..n {
        path.clear();
        path.push(a);
        if let Some(cycle) = extend_chordless(g, a, &mut path, min_len) {
            debug_assert!(certify_cycle(g, &cycle));
            return Some(cycle.iter().map(|&v| v + 1).collect());
        }
    }
    None
}

fn extend_chordless(
    g: &Graph,
    a: usize,
    path: &mut Vec<usize>,
    min_len: usize,
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    for w in a + 1..g.n() {
        if path.contains(&w) || g.adj_mask(last) >> w & 1 == 0 {
            continue;
        }
        if path.len() == 1 {
            // Second cycle vertex: nothing to close or chord yet.
            path.push(w);
            if let Some(cycle) = extend_chordless(g, a, path, min_len) {
                return Some(cycle);
            }
            path.pop();
            continue;
        }
        // w may touch only the path tip; touching an interior vertex would
        // be a chord.
        if path[1..path.len() - 1]
            .iter()
            .any(|&p| g.adj_mask(p) >> w & 1 == 1)
        {
            continue;
        }
        let closes = g.adj_mask(a) >> w & 1 == 1;
        if closes {
            if path.len() + 1 >= min_len {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            // Extending through w would leave the chord {a, w}.
            continue;
        }
        path.push(w);
        if let Some(cycle) = extend_chordless(g, a, path, min_len) {
            return Some(cycle);
        }
        path.pop();
    }
    None
}

fn certify_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            let edge = g.adj_mask(cycle[i]) >> cycle[j] & 1 == 1;
            if edge != consecutive {
                return false;
            }
        }
    }
    true
}

/// Chordality by brute-force induced-cycle search.
pub fn is_chordal_bruteforce(g: &Graph) -> bool {
    find_induced_cycle(g, 4).is_none()
}

/// Chordality via maximum cardinality search: the reverse of an MCS order
/// is a perfect elimination ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], n - v))
            .unwrap();
        picked[v] = true;
        order.push(v);
        for w in 0..n {
            if !picked[w] && g.adj_mask(v) >> w & 1 == 1 {
                weight[w] += 1;
            }
        }
    }
    // Eliminate in reverse MCS order; each vertex's still-uneliminated
    // neighbors must include a vertex adjacent to all the others.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate().rev() {
        let earlier: Vec<usize> = (0..n)
            .filter(|&w| g.adj_mask(v) >> w & 1 == 1 && pos[w] < i)
            .collect();
        if let Some(&u) = earlier.iter().max_by_key(|&&w| pos[w]) {
            for &w in &earlier {
                if w != u && g.adj_mask(u) >> w & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// A chordless cycle of length >= 5 in `g` or its complement, if any.
/// The flag tells whether the witness lives in the complement.
pub fn weakly_chordal_witness(g: &Graph) -> Option<(Vec<usize>, bool)> {
    if let Some(c) = find_induced_cycle(g, 5) {
        return Some((c, false));
    }
    find_induced_cycle(&g.complement(), 5).map(|c| (c, true))
}

pub fn is_weakly_chordal(g: &Graph) -> bool {
    weakly_chordal_witness(g).is_none()
}

/// True when some chordless 4-cycle of `g` uses the edge `{u, v}`.
pub fn edge_on_induced_c4(g: &Graph, u: usize, v: usize) -> bool {
    assert!(g.has_edge(u, v), "{{{u},{v}}} must be an edge");
    let n = g.n();
    for c in 1..=n {
        if c == u || c == v || !g.has_edge(v, c) || g.has_edge(u, c) {
            continue;
        }
        for d in 1..=n {
            if d == u || d == v || d == c {
                continue;
            }
            if g.has_edge(c, d) && g.has_edge(d, u) && !g.has_edge(v, d) {
                return true;
            }
        }
    }
    false
}

/// True when `{u, v}` is the middle edge of a chordless path on four
/// distinct vertices `a - u - v - b`.
pub fn middle_edge_of_induced_p3(g: &Graph, u: usize, v: usize) -> bool {
    assert!(g.has_edge(u, v), "{{{u},{v}}} must be an edge");
    let n = g.n();
    for (b, c) in [(u, v), (v, u)] {
        for a in 1..=n {
            if a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c) {
                continue;
            }
            for d in 1..=n {
                if d == a || d == b || d == c {
                    continue;
                }
                if g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardKind;

    fn std_graph(kind: StandardKind, n: usize) -> Graph {
        Graph::standard(kind, n).unwrap()
    }

    #[test]
    fn induced_cycles() {
        let c7 = std_graph(StandardKind::Cycle, 7);
        let found = find_induced_cycle(&c7, 5).unwrap();
        assert_eq!(found.len(), 7);

        let k6 = std_graph(StandardKind::Complete, 6);
        assert!(find_induced_cycle(&k6, 4).is_none());

        let anti6 = std_graph(StandardKind::Antihole, 6);
        assert!(find_induced_cycle(&anti6, 5).is_none());
        assert!(find_induced_cycle(&anti6, 4).is_some());
    }

    #[test]
    fn chordality() {
        for n in 1..=7 {
            assert!(is_chordal(&std_graph(StandardKind::Complete, n)));
        }
        assert!(!is_chordal(&std_graph(StandardKind::Cycle, 4)));
        assert!(!is_chordal(&std_graph(StandardKind::Antihole, 6)));
        assert!(is_chordal(&std_graph(StandardKind::Path, 5)));
    }

    #[test]
    fn weak_chordality() {
        assert!(!is_weakly_chordal(&std_graph(StandardKind::Cycle, 5)));
        assert!(!is_weakly_chordal(&std_graph(StandardKind::Antihole, 6)));
        assert!(is_weakly_chordal(&std_graph(StandardKind::Cycle, 4)));
        let (witness, in_comp) =
            weakly_chordal_witness(&std_graph(StandardKind::Antihole, 7)).unwrap();
        assert!(in_comp);
        assert_eq!(witness.len(), 7);
    }

    #[test]
    fn c4_membership_of_edges() {
        let c4 = std_graph(StandardKind::Cycle, 4);
        assert!(edge_on_induced_c4(&c4, 1, 2));
        let k4 = std_graph(StandardKind::Complete, 4);
        assert!(!edge_on_induced_c4(&k4, 1, 2));
        // C_4 plus the chord {1,3}: the chord is on no induced C_4.
        let chorded = c4.add_edge(1, 3).unwrap();
        assert!(!edge_on_induced_c4(&chorded, 1, 3));
    }

    #[test]
    fn middle_edges() {
        let p = std_graph(StandardKind::Path, 4); // 1-2-3-4
        assert!(middle_edge_of_induced_p3(&p, 2, 3));
        assert!(!middle_edge_of_induced_p3(&p, 1, 2));
        let k4 = std_graph(StandardKind::Complete, 4);
        for (u, v) in k4.edges() {
            assert!(!middle_edge_of_induced_p3(&k4, u, v));
        }
    }
}
