//! Edge-completion sequences for weakly chordal graphs.

use crate::graph::Graph;
use crate::recognition::{
    edge_on_induced_c4, find_induced_cycle, is_chordal_bruteforce, is_weakly_chordal,
    weakly_chordal_witness,
};
use crate::GraphError;

/// A sequence of edge additions turning a weakly chordal graph into a
/// chordal one while keeping every prefix weakly chordal and never placing
/// the new edge on an induced 4-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSequence {
    pub base: Graph,
    pub added: Vec<(usize, usize)>,
}

impl EdgeSequence {
    /// All prefix graphs `G_0, G_1, ..., G_k` (`G_0` = base).
    pub fn prefixes(&self) -> Vec<Graph> {
        let mut out = vec![self.base.clone()];
        let mut g = self.base.clone();
        for &(u, v) in &self.added {
            g = g.add_edge(u, v).expect("sequence edges are fresh");
            out.push(g.clone());
        }
        out
    }

    pub fn final_graph(&self) -> Graph {
        self.prefixes().pop().unwrap()
    }

    /// Re-verifies every invariant by brute force: each added edge is a
    /// fresh non-edge, every prefix is weakly chordal, the new edge lies on
    /// no induced 4-cycle of its prefix, and the final graph is chordal.
    pub fn verify(&self) -> Result<(), String> {
        let mut g = self.base.clone();
        for (step, &(u, v)) in self.added.iter().enumerate() {
            if g.has_edge(u, v) {
                return Err(format!("step {step}: edge {{{u},{v}}} already present"));
            }
            g = g.add_edge(u, v).map_err(|e| e.to_string())?;
            if edge_on_induced_c4(&g, u, v) {
                return Err(format!(
                    "step {step}: edge {{{u},{v}}} lies on an induced 4-cycle"
                ));
            }
            if let Some((witness, in_comp)) = weakly_chordal_witness(&g) {
                return Err(format!(
                    "step {step}: prefix not weakly chordal (cycle {witness:?}, complement: {in_comp})"
                ));
            }
        }
        if let Some(cycle) = find_induced_cycle(&g, 4) {
            return Err(format!(
                "final graph not chordal: chordless cycle {cycle:?}"
            ));
        }
        Ok(())
    }
}

/// Finds an edge-completion sequence for a weakly chordal graph by greedy
/// choice with full backtracking over candidate edges in lexicographic
/// order. Fails with a certified chordless cycle when the input is not
/// weakly chordal.
pub fn completion_sequence(g: &Graph) -> Result<EdgeSequence, GraphError> {
    if let Some((witness, in_complement)) = weakly_chordal_witness(g) {
        return Err(GraphError::NotWeaklyChordal {
            witness,
            in_complement,
        });
    }
    let mut added = Vec::new();
    let found = search(g.clone(), &mut added);
    debug_assert!(found, "a completion sequence always exists for weakly chordal input");
    let seq = EdgeSequence {
        base: g.clone(),
        added,
    };
    debug_assert_eq!(seq.verify(), Ok(()));
    Ok(seq)
}

fn search(g: Graph, acc: &mut Vec<(usize, usize)>) -> bool {
    if is_chordal_bruteforce(&g) {
        return true;
    }
    for (u, v) in g.non_edges() {
        let g2 = g.add_edge(u, v).expect("non-edge");
        if edge_on_induced_c4(&g2, u, v) || !is_weakly_chordal(&g2) {
            continue;
        }
        acc.push((u, v));
        if search(g2, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StandardKind;

    #[test]
    fn chordal_input_gives_empty_sequence() {
        let k4 = Graph::standard(StandardKind::Complete, 4).unwrap();
        let seq = completion_sequence(&k4).unwrap();
        assert!(seq.added.is_empty());
        let p5 = Graph::standard(StandardKind::Path, 5).unwrap();
        assert!(completion_sequence(&p5).unwrap().added.is_empty());
    }

    #[test]
    fn c4_completes_with_one_diagonal() {
        let c4 = Graph::standard(StandardKind::Cycle, 4).unwrap();
        let seq = completion_sequence(&c4).unwrap();
        assert_eq!(seq.added.len(), 1);
        let e = seq.added[0];
        assert!(e == (1, 3) || e == (2, 4));
        seq.verify().unwrap();
    }

    #[test]
    fn c5_is_rejected() {
        let c5 = Graph::standard(StandardKind::Cycle, 5).unwrap();
        match completion_sequence(&c5) {
            Err(GraphError::NotWeaklyChordal { witness, in_complement }) => {
                assert_eq!(witness.len(), 5);
                assert!(!in_complement);
            }
            other => panic!("expected weak-chordality failure, got {other:?}"),
        }
    }

    #[test]
    fn c6_is_rejected() {
        // The 6-cycle is its own chordless 6-cycle, so it is not weakly
        // chordal and has no completion sequence.
        let c6 = Graph::standard(StandardKind::Cycle, 6).unwrap();
        assert!(matches!(
            completion_sequence(&c6),
            Err(GraphError::NotWeaklyChordal { in_complement: false, .. })
        ));
    }

    #[test]
    fn k33_sequence_verifies() {
        let k33 = Graph::from_edges(
            6,
            [(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        )
        .unwrap();
        let seq = completion_sequence(&k33).unwrap();
        assert!(!seq.added.is_empty());
        seq.verify().unwrap();
        assert!(is_chordal_bruteforce(&seq.final_graph()));
    }
}
