//! Finite simple graphs with the structure theory needed for graphic
//! arrangements: chordality and weak chordality recognition, induced
//! cycle certificates, edge-completion sequences, and small-graph
//! enumeration up to isomorphism.
//!
//! Vertices are 1-indexed throughout the public API.

mod enumerate;
mod graph;
mod io;
mod recognition;
mod sequence;

pub use enumerate::{canonical_form, canonical_graph, enumerate_graphs, is_isomorphic};
pub use graph::{Graph, StandardKind, MAX_VERTICES};
pub use io::{format_edge_list, parse_edge_list, parse_graph6, to_dot, to_graph6};
pub use recognition::{
    edge_on_induced_c4, find_induced_cycle, is_chordal, is_chordal_bruteforce, is_weakly_chordal,
    middle_edge_of_induced_p3, weakly_chordal_witness,
};
pub use sequence::{completion_sequence, EdgeSequence};

/// Errors from graph construction and recognition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("{0}")]
    Parameter(String),
    /// Input is not weakly chordal; carries a certified chordless cycle of
    /// length >= 5 and whether it lives in the complement.
    #[error("graph is not weakly chordal: chordless cycle {witness:?} in {}", if *.in_complement { "the complement" } else { "the graph" })]
    NotWeaklyChordal {
        witness: Vec<usize>,
        in_complement: bool,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
