//! The intersection lattice of a graphic arrangement, via connected
//! partitions of the vertex set.

use graph_core::Graph;

use crate::arrangement::Arrangement;
use crate::ArrError;

/// A flat of a graphic arrangement: a partition of the vertex set whose
/// blocks induce connected subgraphs. Blocks are sorted lists of
/// 1-indexed vertices, ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub blocks: Vec<Vec<usize>>,
}

impl Flat {
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Flat {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        Flat { blocks }
    }

    /// Codimension: vertex count minus block count.
    pub fn codim(&self, ell: usize) -> usize {
        ell - self.blocks.len()
    }

    /// Indices of the hyperplanes containing the flat: edges inside blocks.
    pub fn contained_hyperplanes(&self, arr: &Arrangement) -> Vec<usize> {
        arr.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| {
                self.blocks
                    .iter()
                    .any(|b| b.contains(&u) && b.contains(&v))
            })
            .map(|(k, _)| k)
            .collect()
    }

    /// Checks membership in `L(A)`: every block induces a connected
    /// subgraph of the underlying graph.
    pub fn is_flat_of(&self, arr: &Arrangement) -> bool {
        let ell = arr.ell();
        let mut seen = vec![false; ell];
        for b in &self.blocks {
            for &v in b {
                if v == 0 || v > ell || seen[v - 1] {
                    return false;
                }
                seen[v - 1] = true;
            }
            if !arr.graph().is_connected_subset(b) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// All flats of codimension at most `max_codim`, enumerated by partitions
/// of the vertex set into connected blocks. Includes the ambient space
/// (codimension 0, all blocks singletons).
pub fn flats(arr: &Arrangement, max_codim: usize) -> Vec<Flat> {
    let ell = arr.ell();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        v: usize,
        ell: usize,
        g: &Graph,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Flat>,
    ) {
        if v > ell {
            let flat = Flat::from_blocks(blocks.clone());
            if flat.blocks.iter().all(|b| g.is_connected_subset(b)) {
                out.push(flat);
            }
            return;
        }
        for k in 0..blocks.len() {
            blocks[k].push(v);
            rec(v + 1, ell, g, blocks, out);
            blocks[k].pop();
        }
        blocks.push(vec![v]);
        rec(v + 1, ell, g, blocks, out);
        blocks.pop();
    }
    rec(1, ell, arr.graph(), &mut blocks, &mut out);
    out.retain(|f| f.codim(ell) <= max_codim);
    out.sort_by_key(|f| (f.codim(ell), f.blocks.clone()));
    out
}

/// The localization `A_X`: hyperplanes containing the flat, i.e. edges
/// inside blocks, as a graphic arrangement on the same vertex set.
pub fn localization(arr: &Arrangement, flat: &Flat) -> Result<Arrangement, ArrError> {
    if !flat.is_flat_of(arr) {
        return Err(ArrError::Parameter(format!(
            "{:?} is not a flat of the arrangement",
            flat.blocks
        )));
    }
    let kept: Vec<(usize, usize)> = flat
        .contained_hyperplanes(arr)
        .into_iter()
        .map(|k| arr.edges()[k])
        .collect();
    let g = Graph::from_edges(arr.ell(), kept)?;
    Ok(Arrangement::graphic(&g))
}

/// The restriction `A^{H_0}` for the hyperplane of edge index `h`,
/// expressed in the coordinates of the contraction (block representatives
/// relabelled to `1..ell-1`). Also returns, per restricted hyperplane, the
/// indices of the original hyperplanes mapping onto it.
pub fn restriction(arr: &Arrangement, h: usize) -> Result<(Arrangement, Vec<Vec<usize>>), ArrError> {
    let &(u, v) = arr
        .edges()
        .get(h)
        .ok_or_else(|| ArrError::Parameter(format!("no hyperplane {h}")))?;
    let contracted = arr.graph().contract_edge(u, v)?;
    let restricted = Arrangement::graphic(&contracted);
    // Old label -> new label, matching Graph::contract_edge: the kept
    // representative is min(u, v), larger labels shift down by one.
    let (keep, drop) = (u.min(v), u.max(v));
    let relabel = |w: usize| -> usize {
        let w = if w == drop { keep } else { w };
        if w > drop {
            w - 1
        } else {
            w
        }
    };
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); restricted.size()];
    for (k, &(a, b)) in arr.edges().iter().enumerate() {
        if k == h {
            continue;
        }
        let (ra, rb) = (relabel(a), relabel(b));
        if ra == rb {
            continue;
        }
        let idx = restricted.hyperplane_of_edge(ra, rb)?;
        fibers[idx].push(k);
    }
    debug_assert!(fibers.iter().all(|f| !f.is_empty()));
    Ok((restricted, fibers))
}

/// Genericity: strictly more hyperplanes than the rank, and every flat
/// other than the center satisfies `|A_X| = codim(X)`.
pub fn is_generic(arr: &Arrangement) -> bool {
    let ell = arr.ell();
    let rank = arr.rank();
    if arr.size() <= rank {
        return false;
    }
    let center = Flat::from_blocks(arr.graph().components());
    for flat in flats(arr, rank) {
        if flat == center {
            continue;
        }
        if flat.contained_hyperplanes(arr).len() != flat.codim(ell) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::StandardKind;

    fn arr(kind: StandardKind, n: usize) -> Arrangement {
        Arrangement::graphic(&Graph::standard(kind, n).unwrap())
    }

    #[test]
    fn flats_of_k3() {
        let a = arr(StandardKind::Complete, 3);
        let all = flats(&a, 2);
        let by_codim = |c: usize| all.iter().filter(|f| f.codim(3) == c).count();
        assert_eq!(by_codim(0), 1);
        assert_eq!(by_codim(1), 3);
        assert_eq!(by_codim(2), 1);
        let triangle = Flat::from_blocks(vec![vec![1, 2, 3]]);
        assert_eq!(triangle.contained_hyperplanes(&a).len(), 3);
    }

    #[test]
    fn non_flats_are_rejected() {
        // {1,3} is not connected in the path 1-2-3.
        let a = Arrangement::graphic(&Graph::standard(StandardKind::Path, 3).unwrap());
        let bad = Flat::from_blocks(vec![vec![1, 3], vec![2]]);
        assert!(!bad.is_flat_of(&a));
        assert!(localization(&a, &bad).is_err());
    }

    #[test]
    fn localization_at_triangle_of_k4() {
        let a = arr(StandardKind::Complete, 4);
        let x = Flat::from_blocks(vec![vec![1, 2, 3], vec![4]]);
        let loc = localization(&a, &x).unwrap();
        assert_eq!(loc.size(), 3);
        assert_eq!(
            loc.edges(),
            &[(1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn restriction_of_braid_is_braid() {
        for ell in 3..=6 {
            let a = arr(StandardKind::Complete, ell);
            let h = a.hyperplane_of_edge(1, 2).unwrap();
            let (restricted, fibers) = restriction(&a, h).unwrap();
            assert_eq!(restricted.size(), (ell - 1) * (ell - 2) / 2);
            // Hyperplanes through the merged vertex have two preimages.
            let doubled = fibers.iter().filter(|f| f.len() == 2).count();
            assert_eq!(doubled, ell - 2);
        }
    }

    #[test]
    fn genericity() {
        assert!(is_generic(&arr(StandardKind::Cycle, 4)));
        assert!(is_generic(&arr(StandardKind::Cycle, 5)));
        assert!(!is_generic(&arr(StandardKind::Complete, 4)));
        // The triangle satisfies the paper's definition vacuously: the only
        // flats besides the center are the hyperplanes themselves.
        assert!(is_generic(&arr(StandardKind::Complete, 3)));
        // Too few hyperplanes: |A| = rank.
        assert!(!is_generic(&arr(StandardKind::Path, 4)));
        let mut two_triangles = Graph::from_edges(
            6,
            [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        assert!(!is_generic(&Arrangement::graphic(&two_triangles)));
        two_triangles = two_triangles.add_edge(1, 4).unwrap();
        assert!(!is_generic(&Arrangement::graphic(&two_triangles)));
    }
}
