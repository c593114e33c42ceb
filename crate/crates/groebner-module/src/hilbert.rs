//! Degreewise dimension oracle, independent of all Gröbner machinery.
//!
//! The degree-`d` piece of the constrained submodule of `S^l` is cut out
//! by exact rational linear conditions over the monomial basis; its
//! dimension is `l * dim S_d - rank(condition matrix)`, with the rank
//! computed by sparse exact Gaussian elimination.

use std::collections::HashMap;

use num_traits::Zero;
use poly_engine::{graded_monomials, rat_int, Monomial, Rational};

use crate::GbError;

/// Membership conditions for a submodule of `S^ell` of derivation type:
/// for each edge `{i, j}` (1-indexed), the difference of components `i`
/// and `j` must be divisible by `x_i - x_j`.
#[derive(Clone, Debug)]
pub struct DerivationConstraints {
    pub ell: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DerivationConstraints {
    pub fn new(ell: usize, edges: Vec<(usize, usize)>) -> Result<Self, GbError> {
        for &(u, v) in &edges {
            if u == v || u == 0 || v == 0 || u > ell || v > ell {
                return Err(GbError::Parameter(format!(
                    "edge {{{u},{v}}} invalid for ell = {ell}"
                )));
            }
        }
        Ok(DerivationConstraints { ell, edges })
    }
}

/// `dim_Q` of the degree-`d` graded piece.
pub fn hilbert_oracle(constraints: &DerivationConstraints, d: i64) -> Result<usize, GbError> {
    if d < 0 {
        return Err(GbError::Parameter(format!("negative degree {d}")));
    }
    let ell = constraints.ell;
    let monos = graded_monomials(ell, d as u32);
    let unknowns = ell * monos.len();

    // One row per (edge, reduced monomial): substituting x_hi -> x_lo in
    // component_lo - component_hi must vanish coefficientwise.
    let mut rows: Vec<HashMap<usize, Rational>> = Vec::new();
    for &(u, v) in &constraints.edges {
        let (lo, hi) = (u.min(v) - 1, u.max(v) - 1);
        let mut row_of_reduced: HashMap<Monomial, usize> = HashMap::new();
        for (k, m) in monos.iter().enumerate() {
            let mut exps: Vec<u32> = m.exps().collect();
            exps[lo] += exps[hi];
            exps[hi] = 0;
            let reduced = Monomial::from_exps(&exps);
            let row = *row_of_reduced.entry(reduced).or_insert_with(|| {
                rows.push(HashMap::new());
                rows.len() - 1
            });
            let lo_col = lo * monos.len() + k;
            let hi_col = hi * monos.len() + k;
            *rows[row].entry(lo_col).or_insert_with(Rational::zero) += rat_int(1);
            *rows[row].entry(hi_col).or_insert_with(Rational::zero) -= rat_int(1);
        }
    }

    let rank = sparse_rank(rows);
    Ok(unknowns - rank)
}

/// Rank of a sparse matrix over Q by elimination with a smallest-row /
/// lightest-column pivot heuristic.
fn sparse_rank(mut rows: Vec<HashMap<usize, Rational>>) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut col_load: HashMap<usize, usize> = HashMap::new();
    for row in &rows {
        for &c in row.keys() {
            *col_load.entry(c).or_insert(0) += 1;
        }
    }
    let mut rank = 0;
    let mut active: Vec<bool> = vec![true; rows.len()];
    loop {
        let mut pivot_row = None;
        let mut best = usize::MAX;
        for (k, row) in rows.iter().enumerate() {
            if active[k] && !row.is_empty() && row.len() < best {
                best = row.len();
                pivot_row = Some(k);
            }
        }
        let Some(p) = pivot_row else { break };
        let pivot_col = *rows[p]
            .keys()
            .min_by_key(|&&c| (col_load.get(&c).copied().unwrap_or(0), c))
            .unwrap();
        let pivot_val = rows[p][&pivot_col].clone();
        let pivot: Vec<(usize, Rational)> =
            rows[p].iter().map(|(&c, v)| (c, v.clone())).collect();
        active[p] = false;
        rank += 1;
        for (k, row) in rows.iter_mut().enumerate() {
            if !active[k] || !row.contains_key(&pivot_col) {
                continue;
            }
            let factor = row[&pivot_col].clone() / pivot_val.clone();
            for (c, v) in &pivot {
                let created = !row.contains_key(c);
                let entry = row.entry(*c).or_insert_with(Rational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                    if !created {
                        *col_load.entry(*c).or_insert(1) -= 1;
                    }
                } else if created {
                    *col_load.entry(*c).or_insert(0) += 1;
                }
            }
            debug_assert!(!row.contains_key(&pivot_col));
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use poly_engine::monomial_count;

    #[test]
    fn free_module_dimensions() {
        for ell in 1..=5usize {
            let c = DerivationConstraints::new(ell, vec![]).unwrap();
            for d in 0..=5i64 {
                assert_eq!(
                    hilbert_oracle(&c, d).unwrap(),
                    ell * monomial_count(ell, d as u32)
                );
            }
        }
    }

    #[test]
    fn connected_graph_degree_zero_is_one() {
        // Only constant multiples of (1, ..., 1) satisfy all edge
        // conditions in degree 0 for a connected graph.
        let triangle = DerivationConstraints::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(hilbert_oracle(&triangle, 0).unwrap(), 1);
        let path = DerivationConstraints::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(hilbert_oracle(&path, 0).unwrap(), 1);
        // Two components: dimension 2 in degree 0.
        let split = DerivationConstraints::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(hilbert_oracle(&split, 0).unwrap(), 2);
    }

    #[test]
    fn braid_k3_degree_one_is_four() {
        let triangle = DerivationConstraints::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(hilbert_oracle(&triangle, 1).unwrap(), 4);
    }

    #[test]
    fn negative_degree_rejected() {
        let c = DerivationConstraints::new(2, vec![(1, 2)]).unwrap();
        assert!(hilbert_oracle(&c, -1).is_err());
    }

    #[test]
    fn invalid_edges_rejected() {
        assert!(DerivationConstraints::new(3, vec![(1, 1)]).is_err());
        assert!(DerivationConstraints::new(3, vec![(0, 2)]).is_err());
        assert!(DerivationConstraints::new(3, vec![(1, 4)]).is_err());
    }
}
