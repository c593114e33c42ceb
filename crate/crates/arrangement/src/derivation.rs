//! Polynomial derivations, the explicit braid-subarrangement families and
//! their symbolic identities, and Saito's criterion.

use num_traits::{One, Zero};
use poly_engine::{
    determinant_factored, elementary_symmetric, Polynomial, Rational,
};

use crate::arrangement::Arrangement;
use crate::ArrError;

/// A polynomial vector field: `coeffs[k]` is the coefficient of `d/dx_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    coeffs: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(coeffs: Vec<Polynomial>) -> Derivation {
        assert!(!coeffs.is_empty());
        Derivation { coeffs }
    }

    pub fn zero(ell: usize) -> Derivation {
        Derivation {
            coeffs: vec![Polynomial::zero(ell); ell],
        }
    }

    pub fn ell(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_zero())
    }

    /// Degree as a homogeneous element (all nonzero coefficients share it);
    /// `None` for the zero derivation.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .filter_map(|p| p.degree())
            .max()
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Derivation {
        Derivation {
            coeffs: self.coeffs.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Derivation {
        Derivation {
            coeffs: self.coeffs.iter().map(|p| p.mul(f)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Applies the derivation to a polynomial: `sum coeffs_k * df/dx_k`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let ell = self.ell();
        let mut out = Polynomial::zero(ell);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul(&f.partial(k)));
            }
        }
        out
    }

    /// `theta(x_u - x_v)` for 1-indexed vertices.
    pub fn apply_edge(&self, u: usize, v: usize) -> Polynomial {
        self.coeffs[u - 1].sub(&self.coeffs[v - 1])
    }

    /// Membership in `D(A)`: per hyperplane, the form divides the image of
    /// the form.
    pub fn in_module(&self, arr: &Arrangement) -> Result<(), ArrError> {
        for (k, &(u, v)) in arr.edges().iter().enumerate() {
            if self.apply_edge(u, v).exact_div(&arr.forms()[k]).is_err() {
                return Err(ArrError::NotInModule {
                    index: k,
                    form: arr.forms()[k].to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Maps an arbitrary integer to the cyclic vertex range `1..=ell`.
fn cyc(i: i64, ell: usize) -> usize {
    let ell = ell as i64;
    (((i - 1) % ell + ell) % ell + 1) as usize
}

/// `theta_i = sum_j x_j^i d/dx_j`. Defined for `0 <= i <= ell - 1`.
pub fn theta(i: usize, ell: usize) -> Result<Derivation, ArrError> {
    if i >= ell {
        return Err(ArrError::Parameter(format!(
            "theta index {i} outside 0..={}",
            ell - 1
        )));
    }
    Ok(Derivation::new(
        (0..ell)
            .map(|j| Polynomial::var(j, ell).pow(i as u32))
            .collect(),
    ))
}

/// `phi_i = prod_{j not in {i-1, i, i+1}} (x_i - x_j) d/dx_i` with cyclic
/// index conventions; `phi_1` and `phi_ell` therefore use the ranges
/// `3..=ell-1` and `2..=ell-2`.
pub fn phi(i: usize, ell: usize) -> Result<Derivation, ArrError> {
    check_phi_index(i, ell)?;
    let omit: Vec<usize> = vec![
        cyc(i as i64 - 1, ell),
        cyc(i as i64, ell),
        cyc(i as i64 + 1, ell),
    ];
    let mut product = Polynomial::one(ell);
    for j in 1..=ell {
        if !omit.contains(&j) {
            product = product.mul(&Polynomial::var_difference(i - 1, j - 1, ell));
        }
    }
    let mut d = Derivation::zero(ell);
    d.coeffs[i - 1] = product;
    Ok(d)
}

/// `psi_i = (x_{i-1} - x_i) phi_i - (x_{i+1} - x_{i+2}) phi_{i+1}`,
/// cyclically.
pub fn psi(i: usize, ell: usize) -> Result<Derivation, ArrError> {
    check_phi_index(i, ell)?;
    let a = Polynomial::var_difference(cyc(i as i64 - 1, ell) - 1, i - 1, ell);
    let b = Polynomial::var_difference(
        cyc(i as i64 + 1, ell) - 1,
        cyc(i as i64 + 2, ell) - 1,
        ell,
    );
    let phi_i = phi(i, ell)?;
    let phi_next = phi(cyc(i as i64 + 1, ell), ell)?;
    Ok(phi_i.mul_poly(&a).sub(&phi_next.mul_poly(&b)))
}

fn check_phi_index(i: usize, ell: usize) -> Result<(), ArrError> {
    if ell < 6 {
        return Err(ArrError::Parameter(format!(
            "phi/psi need at least 6 vertices, got {ell}"
        )));
    }
    if i == 0 || i > ell {
        return Err(ArrError::Parameter(format!(
            "index {i} outside 1..={ell}"
        )));
    }
    Ok(())
}

/// `f_{ij} = (-1)^{ell-2-j} e_{ell-2-j}(x_1, ..., ^x_i, ^x_{i+1}, ..., x_ell)`
/// (hats cyclic).
pub fn f_coeff(i: usize, j: usize, ell: usize) -> Result<Polynomial, ArrError> {
    check_phi_index(i, ell)?;
    if j > ell - 3 {
        return Err(ArrError::Parameter(format!(
            "f index {j} outside 0..={}",
            ell - 3
        )));
    }
    let omit = [i - 1, cyc(i as i64 + 1, ell) - 1];
    let e = elementary_symmetric(ell - 2 - j, &omit, ell)?;
    Ok(if (ell - 2 - j) % 2 == 1 { e.neg() } else { e })
}

/// Checks the explicit first-syzygy identity: for each `i`,
/// `psi_i + sum_{j=0}^{ell-3} f_{ij} theta_j = -theta_{ell-2}` holds
/// coefficientwise.
pub fn verify_esp(i: usize, ell: usize) -> Result<bool, ArrError> {
    let mut lhs = psi(i, ell)?;
    for j in 0..=ell - 3 {
        lhs = lhs.add(&theta(j, ell)?.mul_poly(&f_coeff(i, j, ell)?));
    }
    Ok(lhs == theta(ell - 2, ell)?.neg())
}

/// Checks `C_j = sum_{i=1}^{ell} (x_i - x_{i+1}) e_j^i = 0`, with `e_j^i`
/// the elementary symmetric polynomial omitting `x_i, x_{i+1}` cyclically.
pub fn verify_cj(j: usize, ell: usize) -> Result<bool, ArrError> {
    if ell < 6 || j == 0 || j > ell - 3 {
        return Err(ArrError::Parameter(format!(
            "C_j indices out of range: j = {j}, ell = {ell}"
        )));
    }
    let mut total = Polynomial::zero(ell);
    for i in 1..=ell {
        let next = cyc(i as i64 + 1, ell);
        let factor = Polynomial::var_difference(i - 1, next - 1, ell);
        let e = elementary_symmetric(j, &[i - 1, next - 1], ell)?;
        total = total.add(&factor.mul(&e));
    }
    Ok(total.is_zero())
}

/// Saito's criterion: `ell` derivations in `D(A)` form a basis exactly
/// when the determinant of their coefficient matrix is a nonzero rational
/// multiple of `Q(A)`. Errors if some input is not in `D(A)`; returns the
/// scalar on success.
pub fn saito_check(derivs: &[Derivation], arr: &Arrangement) -> Result<Option<Rational>, ArrError> {
    let ell = arr.ell();
    if derivs.len() != ell {
        return Err(ArrError::Parameter(format!(
            "need exactly {ell} derivations, got {}",
            derivs.len()
        )));
    }
    for d in derivs {
        d.in_module(arr)?;
    }
    // Coefficient matrix M[r][c] = derivs[c](x_{r+1}).
    let matrix: Vec<Vec<Polynomial>> = (0..ell)
        .map(|r| derivs.iter().map(|d| d.coeff(r).clone()).collect())
        .collect();
    let mut factors = determinant_factored(&matrix);
    if factors.iter().any(|f| f.is_zero()) {
        return Ok(None);
    }
    // Divide out each form of Q(A); a linear form divides a product of
    // factors exactly when it divides one of them.
    for form in arr.forms() {
        let mut divided = false;
        for f in factors.iter_mut() {
            if let Ok(q) = f.exact_div(form) {
                *f = q;
                divided = true;
                break;
            }
        }
        if !divided {
            return Ok(None);
        }
    }
    let mut scalar = Rational::one();
    for f in &factors {
        if !f.is_constant() {
            return Ok(None);
        }
        scalar *= f.lead().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero);
    }
    Ok(if scalar.is_zero() { None } else { Some(scalar) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{Graph, StandardKind};

    #[test]
    fn theta_1_is_euler() {
        let t = theta(1, 4).unwrap();
        for k in 0..4 {
            assert_eq!(t.coeff(k), &Polynomial::var(k, 4));
        }
        assert!(theta(4, 4).is_err());
    }

    #[test]
    fn phi_special_ranges() {
        let ell = 6;
        // phi_1 = (x1-x3)(x1-x4)(x1-x5) d/dx1
        let p1 = phi(1, ell).unwrap();
        let expected = Polynomial::var_difference(0, 2, ell)
            .mul(&Polynomial::var_difference(0, 3, ell))
            .mul(&Polynomial::var_difference(0, 4, ell));
        assert_eq!(p1.coeff(0), &expected);
        assert!(p1.coeffs()[1..].iter().all(|p| p.is_zero()));
        // phi_6 = (x6-x2)(x6-x3)(x6-x4) d/dx6
        let p6 = phi(6, ell).unwrap();
        let expected6 = Polynomial::var_difference(5, 1, ell)
            .mul(&Polynomial::var_difference(5, 2, ell))
            .mul(&Polynomial::var_difference(5, 3, ell));
        assert_eq!(p6.coeff(5), &expected6);
        // Interior: phi_3 omits x2, x3, x4.
        let p3 = phi(3, ell).unwrap();
        let expected3 = Polynomial::var_difference(2, 0, ell)
            .mul(&Polynomial::var_difference(2, 4, ell))
            .mul(&Polynomial::var_difference(2, 5, ell));
        assert_eq!(p3.coeff(2), &expected3);
        assert!(phi(3, 5).is_err());
        assert!(phi(0, 6).is_err());
        assert!(phi(7, 6).is_err());
    }

    #[test]
    fn psi_image_of_its_edge_is_divisible() {
        let ell = 6;
        for i in 1..=ell {
            let d = psi(i, ell).unwrap();
            let u = i;
            let v = if i == ell { 1 } else { i + 1 };
            let image = d.apply_edge(u, v);
            let form = Polynomial::var_difference(u - 1, v - 1, ell);
            assert!(image.exact_div(&form).is_ok(), "i = {i}");
        }
    }

    #[test]
    fn esp_identity_small() {
        for i in 1..=6 {
            assert!(verify_esp(i, 6).unwrap(), "i = {i}");
        }
    }

    #[test]
    fn cj_identity_and_perturbation() {
        assert!(verify_cj(1, 6).unwrap());
        assert!(verify_cj(2, 6).unwrap());
        assert!(verify_cj(3, 6).unwrap());
        // Sanity control: flipping one term's sign breaks the identity.
        let ell = 6;
        let mut total = Polynomial::zero(ell);
        for i in 1..=ell {
            let next = if i == ell { 1 } else { i + 1 };
            let factor = Polynomial::var_difference(i - 1, next - 1, ell);
            let e = elementary_symmetric(1, &[i - 1, next - 1], ell).unwrap();
            let term = factor.mul(&e);
            total = if i == 3 { total.sub(&term) } else { total.add(&term) };
        }
        assert!(!total.is_zero());
    }

    #[test]
    fn saito_on_small_braid() {
        let g = Graph::standard(StandardKind::Complete, 4).unwrap();
        let arr = Arrangement::graphic(&g);
        let basis: Vec<Derivation> = (0..4).map(|i| theta(i, 4).unwrap()).collect();
        assert!(saito_check(&basis, &arr).unwrap().is_some());
        // Repeated column: determinant zero.
        let degenerate = vec![
            theta(0, 4).unwrap(),
            theta(0, 4).unwrap(),
            theta(2, 4).unwrap(),
            theta(3, 4).unwrap(),
        ];
        assert!(saito_check(&degenerate, &arr).unwrap().is_none());
        // A derivation outside D(A) is rejected by name.
        let mut bad = theta(0, 4).unwrap();
        bad = Derivation::new(vec![
            Polynomial::var(1, 4),
            bad.coeff(1).clone(),
            bad.coeff(2).clone(),
            bad.coeff(3).clone(),
        ]);
        assert!(matches!(
            saito_check(
                &[bad, theta(1, 4).unwrap(), theta(2, 4).unwrap(), theta(3, 4).unwrap()],
                &arr
            ),
            Err(ArrError::NotInModule { .. })
        ));
    }

    #[test]
    fn theta_basis_lies_in_braid_module() {
        for ell in 3..=6 {
            let g = Graph::standard(StandardKind::Complete, ell).unwrap();
            let arr = Arrangement::graphic(&g);
            for i in 0..ell {
                assert!(theta(i, ell).unwrap().in_module(&arr).is_ok());
            }
        }
    }
}
