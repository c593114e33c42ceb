//! Terao's polynomial B, the deletion exact sequence, and the refined
//! two-hyperplane ideal containment.

use groebner_module::ideal_membership;
use poly_engine::Polynomial;

use crate::arrangement::Arrangement;
use crate::dmodule::{derivation_module, PdCache};
use crate::flats::{localization, restriction, Flat};
use crate::ArrError;

/// Rule selecting, per restricted hyperplane, one hyperplane of the
/// deletion lying over it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum NuRule {
    /// Lexicographically smallest edge (the default).
    #[default]
    LexSmallestEdge,
    /// Lexicographically largest edge; reproduces the products displayed
    /// in the antihole generator computation.
    LexLargestEdge,
}

/// Terao's polynomial `B(A', H_0)` together with the data that produced it.
#[derive(Clone, Debug)]
pub struct TeraoB {
    /// The deletion `A' = A \ {H_0}`.
    pub deletion: Arrangement,
    /// The distinguished edge.
    pub h0_edge: (usize, usize),
    pub h0_form: Polynomial,
    /// Restriction size `|A''|`.
    pub restriction_size: usize,
    /// Chosen `nu`: per restricted hyperplane, the original edge index in
    /// the full arrangement.
    pub nu: Vec<usize>,
    pub b: Polynomial,
}

/// Computes `B = Q(A) / (a_{H_0} * prod a_{nu(X)})` by exact division,
/// asserting the degree identity `deg B = |A'| - |A''|`.
pub fn terao_b(full: &Arrangement, h0: usize, rule: NuRule) -> Result<TeraoB, ArrError> {
    let h0_edge = *full
        .edges()
        .get(h0)
        .ok_or_else(|| ArrError::Parameter(format!("no hyperplane {h0}")))?;
    let deletion = full.delete(h0)?;
    let (restricted, fibers) = restriction(full, h0)?;
    let mut nu = Vec::with_capacity(fibers.len());
    for fiber in &fibers {
        let chosen = match rule {
            NuRule::LexSmallestEdge => fiber.iter().min_by_key(|&&k| full.edges()[k]),
            NuRule::LexLargestEdge => fiber.iter().max_by_key(|&&k| full.edges()[k]),
        };
        nu.push(*chosen.expect("restriction fibers are nonempty"));
    }
    let mut b = full.defining_polynomial();
    b = b
        .exact_div(&full.forms()[h0])
        .map_err(|e| ArrError::Internal(format!("H_0 must divide Q: {e}")))?;
    for &k in &nu {
        b = b
            .exact_div(&full.forms()[k])
            .map_err(|e| ArrError::Internal(format!("nu image must divide Q/a0: {e}")))?;
    }
    let expected = deletion.size() - restricted.size();
    let got = b.degree().unwrap_or(0) as usize;
    if got != expected {
        return Err(ArrError::Internal(format!(
            "deg B = {got}, expected |A'| - |A''| = {expected}"
        )));
    }
    Ok(TeraoB {
        deletion,
        h0_edge,
        h0_form: full.forms()[h0].clone(),
        restriction_size: restricted.size(),
        nu,
        b,
    })
}

/// Everything the deletion sequence check reports for one step.
#[derive(Clone, Debug)]
pub struct BSequenceReport {
    pub terao: TeraoB,
    /// Images `theta(a_{H_0}) mod a_{H_0}` of the generators of `D(A')`.
    pub image_degrees: Vec<i64>,
    /// Every generator image is divisible by the reduced B.
    pub image_in_b: bool,
    /// The reduced B lies in the image ideal.
    pub b_in_image: bool,
    /// Right exactness of the sequence: image ideal equals `(B)` in `S/a`.
    pub surjective: bool,
    /// Hypothesis of the surjectivity theorem: `pd(A_X) < codim(X) - 2`
    /// for every flat of the restriction of codimension >= 2 (codimension
    /// of X taken in the ambient space).
    pub thm_hypothesis: bool,
    /// Hypothesis of the corollary: `A_X` free for all codim-2 flats of
    /// the restriction.
    pub cor_l2_free: bool,
}

/// For the full arrangement `A` with hyperplane `h0`, computes the image
/// of `D(A') -> S/a * B` and reports whether the sequence is right exact,
/// along with both hypothesis variants.
pub fn b_sequence_check(
    full: &Arrangement,
    h0: usize,
    cache: &PdCache,
) -> Result<BSequenceReport, ArrError> {
    let terao = terao_b(full, h0, NuRule::default())?;
    let (u, v) = terao.h0_edge;
    let subst = [(u - 1, v - 1)];
    let b_bar = terao.b.reduce_mod_linears(&subst);
    debug_assert!(!b_bar.is_zero());

    let pres = derivation_module(&terao.deletion)?;
    let mut images = Vec::new();
    let mut image_degrees = Vec::new();
    for gen in &pres.generators {
        let image = gen.component(u - 1).sub(gen.component(v - 1));
        let reduced = image.reduce_mod_linears(&subst);
        if !reduced.is_zero() {
            image_degrees
                .push(reduced.degree().unwrap() as i64);
            images.push(reduced);
        }
    }
    let image_in_b = images.iter().all(|f| f.exact_div(&b_bar).is_ok());
    let b_in_image = if b_bar.is_constant() && images.iter().any(|f| f.is_constant()) {
        true
    } else {
        ideal_membership(&b_bar, &images).contained()
    };
    let surjective = image_in_b && b_in_image;

    // Hypothesis checks over flats of the restriction.
    let (restricted, _) = restriction(full, h0)?;
    let rest_ell = restricted.ell();
    let mut thm_hypothesis = true;
    let mut cor_l2_free = true;
    for flat in crate::flats::flats(&restricted, rest_ell) {
        let codim_in_restriction = flat.codim(rest_ell);
        if codim_in_restriction < 2 {
            continue;
        }
        let pulled = pull_back_flat(&flat, terao.h0_edge);
        debug_assert!(pulled.is_flat_of(full));
        let loc = localization(full, &pulled)?;
        let pd = pd_of_localization(&loc, cache)?;
        let codim_ambient = pulled.codim(full.ell());
        if pd as i64 >= codim_ambient as i64 - 2 {
            thm_hypothesis = false;
        }
        if codim_in_restriction == 2 && pd != 0 {
            cor_l2_free = false;
        }
    }

    Ok(BSequenceReport {
        terao,
        image_degrees,
        image_in_b,
        b_in_image,
        surjective,
        thm_hypothesis,
        cor_l2_free,
    })
}

/// Expands a flat of the restriction (a partition of the contracted
/// vertex set) to the corresponding flat of the full arrangement.
fn pull_back_flat(flat: &Flat, h0_edge: (usize, usize)) -> Flat {
    let (keep, drop) = (h0_edge.0.min(h0_edge.1), h0_edge.0.max(h0_edge.1));
    let unrelabel = |t: usize| if t >= drop { t + 1 } else { t };
    let blocks = flat
        .blocks
        .iter()
        .map(|b| {
            let mut block: Vec<usize> = b.iter().map(|&t| unrelabel(t)).collect();
            if block.contains(&keep) {
                block.push(drop);
            }
            block
        })
        .collect();
    Flat::from_blocks(blocks)
}

/// pd of a localization, via the pd cache on the localized graph.
fn pd_of_localization(loc: &Arrangement, cache: &PdCache) -> Result<usize, ArrError> {
    cache.pd(loc.graph())
}

/// Report of the refined two-hyperplane containment check.
#[derive(Clone, Debug)]
pub struct IdealBReport {
    pub b1: Polynomial,
    pub b2: Polynomial,
    /// gcd of the reductions modulo (alpha, beta).
    pub b_gcd: Polynomial,
    /// Cofactor with `b2_cofactor * b_gcd = B_2 mod (alpha, beta)`.
    pub b2_cofactor: Polynomial,
    /// Per generator of `D(A)`: membership of `theta(alpha)` in
    /// `(alpha, beta*B_1, b2_cofactor*B_1)`.
    pub memberships: Vec<bool>,
}

impl IdealBReport {
    pub fn all_contained(&self) -> bool {
        self.memberships.iter().all(|&m| m)
    }
}

/// Verifies the refined containment: for hyperplanes `H_1 = ker(alpha)`,
/// `H_2 = ker(beta)` not in `A` with `ker(alpha + beta)` in `A`, every
/// generator `theta` of `D(A)` has
/// `theta(alpha) in (alpha, beta*B_1, b2*B_1)`.
pub fn idealb_refined(
    arr: &Arrangement,
    h1: (usize, usize),
    h2: (usize, usize),
    rule: NuRule,
) -> Result<IdealBReport, ArrError> {
    let ell = arr.ell();
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let (h1, h2) = (norm(h1), norm(h2));
    if h1 == h2 {
        return Err(ArrError::Parameter("hyperplanes must be distinct".into()));
    }
    for e in [h1, h2] {
        if arr.graph().has_edge(e.0, e.1) {
            return Err(ArrError::Parameter(format!(
                "{{{},{}}} already lies in the arrangement",
                e.0, e.1
            )));
        }
    }
    let alpha = Polynomial::var_difference(h1.0 - 1, h1.1 - 1, ell);
    let beta = Polynomial::var_difference(h2.0 - 1, h2.1 - 1, ell);
    let sum = alpha.add(&beta);
    let sum_edge = as_difference_edge(&sum)
        .ok_or_else(|| ArrError::Parameter("alpha + beta is not a difference form".into()))?;
    if !arr.graph().has_edge(sum_edge.0, sum_edge.1) {
        return Err(ArrError::Parameter(format!(
            "ker(alpha + beta) = {{{},{}}} is not in the arrangement",
            sum_edge.0, sum_edge.1
        )));
    }

    let with_h1 = Arrangement::graphic(&arr.graph().add_edge(h1.0, h1.1)?);
    let with_h2 = Arrangement::graphic(&arr.graph().add_edge(h2.0, h2.1)?);
    let b1 = terao_b(&with_h1, with_h1.hyperplane_of_edge(h1.0, h1.1)?, rule)?.b;
    let b2 = terao_b(&with_h2, with_h2.hyperplane_of_edge(h2.0, h2.1)?, rule)?.b;

    let subst = [(h1.0 - 1, h1.1 - 1), (h2.0 - 1, h2.1 - 1)];
    let b1_red = b1.reduce_mod_linears(&subst);
    let b2_red = b2.reduce_mod_linears(&subst);
    let f1 = factor_differences(&b1_red, ell)?;
    let f2 = factor_differences(&b2_red, ell)?;
    let mut common = Vec::new();
    let mut f2_pool = f2.factors.clone();
    for factor in &f1.factors {
        if let Some(k) = f2_pool.iter().position(|g| g == factor) {
            common.push(factor.clone());
            f2_pool.remove(k);
        }
    }
    let _ = (&f1.unit, &f2.unit);
    let mut b_gcd = Polynomial::one(ell);
    for f in &common {
        b_gcd = b_gcd.mul(f);
    }
    let b2_cofactor = b2_red.exact_div(&b_gcd)?;

    let pres = derivation_module(arr)?;
    let ideal = [
        alpha.clone(),
        beta.mul(&b1),
        b2_cofactor.mul(&b1),
    ];
    let mut memberships = Vec::new();
    for gen in &pres.generators {
        let theta_alpha = gen.component(h1.0 - 1).sub(gen.component(h1.1 - 1));
        memberships.push(ideal_membership(&theta_alpha, &ideal).contained());
    }
    Ok(IdealBReport {
        b1,
        b2,
        b_gcd,
        b2_cofactor,
        memberships,
    })
}

/// Recognizes `c * (x_u - x_v)` and returns the 1-indexed edge.
fn as_difference_edge(f: &Polynomial) -> Option<(usize, usize)> {
    if f.num_terms() != 2 {
        return None;
    }
    let ell = f.nvars();
    let terms = f.terms();
    let var_of = |m: &poly_engine::Monomial| -> Option<usize> {
        let mut var = None;
        for k in 0..ell {
            match (m.exp(k), var) {
                (0, _) => {}
                (1, None) => var = Some(k),
                _ => return None,
            }
        }
        var
    };
    let a = var_of(&terms[0].0)?;
    let b = var_of(&terms[1].0)?;
    if terms[0].1 == -terms[1].1.clone() {
        Some((a.min(b) + 1, a.max(b) + 1))
    } else {
        None
    }
}

struct DifferenceFactors {
    factors: Vec<Polynomial>,
    unit: poly_engine::Rational,
}

/// Factors a product of difference forms by trial division; the cofactor
/// after removing all linear difference factors must be a constant.
fn factor_differences(f: &Polynomial, ell: usize) -> Result<DifferenceFactors, ArrError> {
    let mut rest = f.clone();
    let mut factors = Vec::new();
    'outer: loop {
        if rest.is_constant() {
            break;
        }
        for u in 0..ell {
            for v in u + 1..ell {
                let form = Polynomial::var_difference(u, v, ell);
                if let Ok(q) = rest.exact_div(&form) {
                    factors.push(form);
                    rest = q;
                    continue 'outer;
                }
            }
        }
        return Err(ArrError::Internal(format!(
            "not a product of difference forms: {f}"
        )));
    }
    let unit = rest
        .lead()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| poly_engine::rat_int(0));
    Ok(DifferenceFactors { factors, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{Graph, StandardKind};

    #[test]
    fn terao_b_on_k3() {
        // Full K_3, H_0 = ker(x1 - x2): default nu picks {1,3}, leaving
        // B = x2 - x3.
        let g = Graph::standard(StandardKind::Complete, 3).unwrap();
        let arr = Arrangement::graphic(&g);
        let h0 = arr.hyperplane_of_edge(1, 2).unwrap();
        let t = terao_b(&arr, h0, NuRule::LexSmallestEdge).unwrap();
        assert_eq!(t.b, Polynomial::var_difference(1, 2, 3));
        assert_eq!(t.b.degree(), Some(1));
        // The other rule leaves x1 - x3; the ideal (alpha, B) is the same.
        let t2 = terao_b(&arr, h0, NuRule::LexLargestEdge).unwrap();
        assert_eq!(t2.b, Polynomial::var_difference(0, 2, 3));
    }

    #[test]
    fn b_degree_identity_along_deletions() {
        // deg B = |A'| - |A''| is asserted inside terao_b; exercise it on
        // every deletion of a few graphs.
        for (kind, n) in [
            (StandardKind::Complete, 5),
            (StandardKind::Cycle, 5),
            (StandardKind::Antihole, 6),
        ] {
            let g = Graph::standard(kind, n).unwrap();
            let arr = Arrangement::graphic(&g);
            for h in 0..arr.size() {
                terao_b(&arr, h, NuRule::default()).unwrap();
            }
        }
    }

    #[test]
    fn difference_factorization() {
        let ell = 4;
        let f = Polynomial::var_difference(0, 1, ell)
            .mul(&Polynomial::var_difference(2, 3, ell))
            .scale(&poly_engine::rat_int(-3));
        let fac = factor_differences(&f, ell).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.unit, poly_engine::rat_int(-3));
        let not_product = Polynomial::var(0, ell).add(&Polynomial::var(1, ell));
        assert!(factor_differences(&not_product, ell).is_err());
    }

    #[test]
    fn sum_edge_recognition() {
        let ell = 6;
        let alpha = Polynomial::var_difference(0, 1, ell);
        let beta = Polynomial::var_difference(1, 2, ell);
        assert_eq!(as_difference_edge(&alpha.add(&beta)), Some((1, 3)));
        assert_eq!(as_difference_edge(&alpha), Some((1, 2)));
        let not_edge = Polynomial::var(0, ell).add(&Polynomial::var(1, ell));
        assert_eq!(as_difference_edge(&not_edge), None);
    }
}
