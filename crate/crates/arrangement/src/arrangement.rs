//! Graphic arrangements: one hyperplane `ker(x_i - x_j)` per edge.

use graph_core::Graph;
use num_traits::Zero;
use poly_engine::{Polynomial, Rational};

use crate::ArrError;

/// The graphic arrangement of a graph, in `Q^ell` with `ell` the vertex
/// count. Forms are kept in edge order: `forms[k] = x_u - x_v` for the
/// `k`-th edge `(u, v)` with `u < v`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    graph: Graph,
    edges: Vec<(usize, usize)>,
    forms: Vec<Polynomial>,
}

impl Arrangement {
    pub fn graphic(graph: &Graph) -> Arrangement {
        let ell = graph.n();
        let edges = graph.edges();
        let forms = edges
            .iter()
            .map(|&(u, v)| Polynomial::var_difference(u - 1, v - 1, ell))
            .collect();
        Arrangement {
            graph: graph.clone(),
            edges,
            forms,
        }
    }

    pub fn ell(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn size(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Index of the hyperplane of an edge.
    pub fn hyperplane_of_edge(&self, u: usize, v: usize) -> Result<usize, ArrError> {
        let key = (u.min(v), u.max(v));
        self.edges
            .iter()
            .position(|&e| e == key)
            .ok_or_else(|| ArrError::Parameter(format!("{{{u},{v}}} is not an edge")))
    }

    /// Deletion of one hyperplane.
    pub fn delete(&self, index: usize) -> Result<Arrangement, ArrError> {
        let &(u, v) = self
            .edges
            .get(index)
            .ok_or_else(|| ArrError::Parameter(format!("no hyperplane {index}")))?;
        Ok(Arrangement::graphic(&self.graph.delete_edge(u, v)?))
    }

    /// `Q(A)`: the product of the forms, `1` for the empty arrangement.
    pub fn defining_polynomial(&self) -> Polynomial {
        let mut q = Polynomial::one(self.ell());
        for f in &self.forms {
            q = q.mul(f);
        }
        q
    }

    /// `rank(A) = ell - #components(G)`, cross-checked against the exact
    /// linear-algebra rank of the forms.
    pub fn rank(&self) -> usize {
        let combinatorial = self.ell() - self.graph.components().len();
        let algebraic = linear_rank(&self.forms, self.ell());
        debug_assert_eq!(combinatorial, algebraic);
        combinatorial
    }
}

/// Rank of a set of linear forms by exact Gaussian elimination on their
/// coefficient vectors.
fn linear_rank(forms: &[Polynomial], ell: usize) -> usize {
    let mut rows: Vec<Vec<Rational>> = forms
        .iter()
        .map(|f| {
            let mut row = vec![Rational::zero(); ell];
            for (m, c) in f.terms() {
                let var = (0..ell).find(|&k| m.exp(k) > 0).expect("linear form");
                row[var] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..ell {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pivot;
                for c in 0..ell {
                    let sub = &factor * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
