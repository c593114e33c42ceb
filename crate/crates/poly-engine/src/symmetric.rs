//! Elementary symmetric polynomials and graded monomial bases.

use num_traits::One;

use crate::monomial::{cmp_degrevlex, Monomial};
use crate::poly::Polynomial;
use crate::{PolyError, Rational};

/// The `j`-th elementary symmetric polynomial in the variables
/// `{x_1, ..., x_l} \ {x_v : v in omit}` (omit is 0-indexed). `e_0 = 1`.
pub fn elementary_symmetric(
    j: usize,
    omit: &[usize],
    nvars: usize,
) -> Result<Polynomial, PolyError> {
    let vars: Vec<usize> = (0..nvars).filter(|v| !omit.contains(v)).collect();
    if j > vars.len() {
        return Err(PolyError::Parameter(format!(
            "symmetric polynomial index {j} exceeds {} available variables",
            vars.len()
        )));
    }
    // Iterative expansion of prod_v (1 + x_v t), keeping coefficients of t^0..t^j.
    let mut layers: Vec<Polynomial> = (0..=j).map(|_| Polynomial::zero(nvars)).collect();
    layers[0] = Polynomial::one(nvars);
    for &v in &vars {
        let xv = Polynomial::var(v, nvars);
        for d in (1..=j).rev() {
            let bumped = layers[d - 1].mul(&xv);
            layers[d] = layers[d].add(&bumped);
        }
    }
    Ok(layers.pop().unwrap())
}

/// All monomials of total degree exactly `d` in `nvars` variables, in
/// descending degrevlex order.
pub fn graded_monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, k: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if k + 1 == exps.len() {
            exps[k] = remaining;
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in (0..=remaining).rev() {
            exps[k] = e;
            rec(exps, k + 1, remaining - e, out);
        }
        exps[k] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(&mut exps, 0, d, &mut out);
    out.sort_by(|a, b| cmp_degrevlex(b, a));
    out
}

/// `dim_Q S_d` for the polynomial ring in `nvars` variables: the number of
/// degree-`d` monomials.
pub fn monomial_count(nvars: usize, d: u32) -> usize {
    // binomial(d + nvars - 1, nvars - 1)
    if nvars == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for k in 1..nvars as u128 {
        num *= d as u128 + k;
        den *= k;
    }
    (num / den) as usize
}

/// Product of one linear factor per element: `prod (x_i - x_j)` over the
/// 0-indexed pairs.
pub fn difference_product(pairs: &[(usize, usize)], nvars: usize) -> Polynomial {
    let mut out = Polynomial::constant(Rational::one(), nvars);
    for &(i, j) in pairs {
        out = out.mul(&Polynomial::var_difference(i, j, nvars));
    }
    out
}
