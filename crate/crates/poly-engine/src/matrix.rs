//! Exact determinants of polynomial matrices.

use num_traits::One;

use crate::poly::Polynomial;
use crate::Rational;

fn minor(m: &[Vec<Polynomial>], skip_row: usize, skip_col: usize) -> Vec<Vec<Polynomial>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// Determinant by Laplace expansion along the first row. Exponential; the
/// independent oracle for [`determinant`] on small matrices.
pub fn determinant_cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix not square");
    let nvars = if n == 0 { 0 } else { m[0][0].nvars() };
    if n == 0 {
        return Polynomial::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub = determinant_cofactor(&minor(m, 0, j));
        let term = m[0][j].mul(&sub);
        if j % 2 == 0 {
            det = det.add(&term);
        } else {
            det = det.sub(&term);
        }
    }
    det
}

/// Fraction-free Bareiss elimination. Row-swaps on zero pivots; if an entire
/// pivot column vanishes it falls back to cofactor expansion of the
/// remaining block.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix not square");
    if n == 0 {
        return Polynomial::one(0);
    }
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut sign = false;
    let mut prev_pivot = Polynomial::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => {
                    // Pivot column is zero: expand the remaining block directly.
                    let block: Vec<Vec<Polynomial>> = a[k..]
                        .iter()
                        .map(|row| row[k..].to_vec())
                        .collect();
                    let block_det = determinant_cofactor(&block);
                    if block_det.is_zero() {
                        return Polynomial::zero(nvars);
                    }
                    // Bareiss invariant: block entries are minors scaled by
                    // prev_pivot, so the true determinant is
                    // det(block) / prev_pivot^(block size - 1).
                    let mut det = block_det;
                    for _ in 0..(n - k - 1) {
                        det = det.exact_div(&prev_pivot).expect("Bareiss divisibility");
                    }
                    return if sign { det.neg() } else { det };
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev_pivot).expect("Bareiss divisibility");
            }
            a[i][k] = Polynomial::zero(nvars);
        }
        prev_pivot = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Determinant in factored form. The product of the returned factors is
/// the determinant; an empty product means 1 and a zero determinant yields
/// a single zero factor.
///
/// Applies exact determinant-preserving reductions as long as they fire,
/// then finishes any remaining dense core with Bareiss:
/// - peel rows/columns with a single nonzero entry (Laplace);
/// - eliminate a column of constants by row operations, creating a
///   singleton;
/// - extract a linear factor common to every entry of a row or column.
///
/// The last two make power-matrix blocks (Vandermonde-like coefficient
/// matrices of derivation families) factor in polynomial time instead of
/// blowing up in Bareiss.
pub fn determinant_factored(m: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix not square");
    if n == 0 {
        return Vec::new();
    }
    let nvars = m[0][0].nvars();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut factors: Vec<Polynomial> = Vec::new();
    let mut negate = false;
    loop {
        let k = a.len();
        if k == 0 {
            break;
        }
        if a.iter().any(|row| row.iter().all(|p| p.is_zero())) {
            return vec![Polynomial::zero(nvars)];
        }
        // Laplace along a singleton column or row.
        let singleton_col = (0..k).find(|&j| {
            (0..k).filter(|&i| !a[i][j].is_zero()).count() == 1
        });
        let singleton = if let Some(j) = singleton_col {
            let i = (0..k).find(|&i| !a[i][j].is_zero()).unwrap();
            Some((i, j))
        } else {
            (0..k)
                .find(|&i| a[i].iter().filter(|p| !p.is_zero()).count() == 1)
                .map(|i| (i, (0..k).find(|&j| !a[i][j].is_zero()).unwrap()))
        };
        if let Some((row, col)) = singleton {
            factors.push(a[row][col].clone());
            if (row + col) % 2 == 1 {
                negate = !negate;
            }
            a = minor(&a, row, col);
            continue;
        }
        // A column of constants: clear it by row operations (determinant
        // preserved), producing a singleton for the next iteration.
        if let Some(j) = (0..k).find(|&j| (0..k).all(|i| a[i][j].is_constant())) {
            let r = (0..k).find(|&i| !a[i][j].is_zero()).unwrap();
            let pivot = a[r][j].lead().unwrap().1.clone();
            for i in 0..k {
                if i == r || a[i][j].is_zero() {
                    continue;
                }
                let c = a[i][j].lead().unwrap().1 / &pivot;
                for t in 0..k {
                    let sub = a[r][t].scale(&c);
                    a[i][t] = a[i][t].sub(&sub);
                }
            }
            continue;
        }
        // A linear form dividing every entry of some row or column.
        if let Some(()) = extract_common_linear_factor(&mut a, &mut factors) {
            continue;
        }
        factors.push(determinant(&a));
        a.clear();
        break;
    }
    if negate {
        if let Some(f) = factors.first_mut() {
            *f = f.neg();
        } else {
            factors.push(Polynomial::constant(-Rational::one(), nvars));
        }
    }
    factors
}

/// Tries to divide a whole row or column by a linear candidate (a variable
/// difference or a single variable). On success pushes the factor and
/// rewrites the matrix in place.
fn extract_common_linear_factor(
    a: &mut [Vec<Polynomial>],
    factors: &mut Vec<Polynomial>,
) -> Option<()> {
    let k = a.len();
    let nvars = a[0][0].nvars();
    let mut candidates: Vec<Polynomial> = Vec::new();
    for u in 0..nvars {
        for v in u + 1..nvars {
            candidates.push(Polynomial::var_difference(u, v, nvars));
        }
        candidates.push(Polynomial::var(u, nvars));
    }
    for i in 0..k {
        for cand in &candidates {
            if a[i].iter().all(|p| p.is_zero() || cand.divides(p)) {
                for p in a[i].iter_mut() {
                    if !p.is_zero() {
                        *p = p.exact_div(cand).unwrap();
                    }
                }
                factors.push(cand.clone());
                return Some(());
            }
        }
    }
    for j in 0..k {
        for cand in &candidates {
            if (0..k).all(|i| a[i][j].is_zero() || cand.divides(&a[i][j])) {
                for row in a.iter_mut() {
                    if !row[j].is_zero() {
                        row[j] = row[j].exact_div(cand).unwrap();
                    }
                }
                factors.push(cand.clone());
                return Some(());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn x(k: usize, n: usize) -> Polynomial {
        Polynomial::var(k, n)
    }

    fn vandermonde(n: usize) -> Vec<Vec<Polynomial>> {
        (0..n)
            .map(|i| (0..n).map(|j| x(j, n).pow(i as u32)).collect())
            .collect()
    }

    #[test]
    fn vandermonde_3x3() {
        // det (x_j^i)_{0<=i<3} = -(x1-x2)(x1-x3)(x2-x3)
        let n = 3;
        let det = determinant(&vandermonde(n));
        let prod = x(0, n)
            .sub(&x(1, n))
            .mul(&x(0, n).sub(&x(2, n)))
            .mul(&x(1, n).sub(&x(2, n)));
        assert_eq!(det, prod.neg());
    }

    #[test]
    fn repeated_column_vanishes() {
        let n = 3;
        let m = vec![
            vec![x(0, n), x(0, n), x(1, n)],
            vec![x(1, n), x(1, n), x(2, n)],
            vec![x(2, n), x(2, n), x(0, n)],
        ];
        assert!(determinant(&m).is_zero());
        assert_eq!(determinant_factored(&m), vec![Polynomial::zero(n)]);
    }

    #[test]
    fn zero_pivot_column_falls_back() {
        let n = 2;
        let zero = Polynomial::zero(n);
        let m = vec![
            vec![zero.clone(), x(0, n)],
            vec![zero.clone(), x(1, n)],
        ];
        assert!(determinant(&m).is_zero());
    }

    #[test]
    fn agrees_with_cofactor_up_to_5x5() {
        // Deterministic pseudo-random small polynomial matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=5 {
            let nvars = 3;
            let m: Vec<Vec<Polynomial>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let r = next();
                            let c = rat_int((r % 7) as i64 - 3);
                            let v = (r >> 8) as usize % nvars;
                            if r % 5 == 0 {
                                Polynomial::zero(nvars)
                            } else {
                                Polynomial::var(v, nvars)
                                    .scale(&c)
                                    .add(&Polynomial::constant(
                                        rat_int(((r >> 16) % 5) as i64 - 2),
                                        nvars,
                                    ))
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m), determinant_cofactor(&m), "n = {n}");
            let fac = determinant_factored(&m);
            let mut prod = Polynomial::one(nvars);
            for f in &fac {
                prod = prod.mul(f);
            }
            assert_eq!(prod, determinant_cofactor(&m), "factored, n = {n}");
        }
    }

    #[test]
    fn singleton_column_expansion_keeps_sign() {
        let n = 3;
        let zero = Polynomial::zero(n);
        // Column 1 has a single entry in row 2.
        let m = vec![
            vec![x(0, n), zero.clone(), x(1, n)],
            vec![x(1, n), zero.clone(), x(2, n)],
            vec![x(2, n), x(0, n), zero.clone()],
        ];
        let fac = determinant_factored(&m);
        let mut prod = Polynomial::one(n);
        for f in &fac {
            prod = prod.mul(f);
        }
        assert_eq!(prod, determinant_cofactor(&m));
    }

    #[test]
    fn alternating_and_multilinear() {
        let n = 4;
        let base = vandermonde(n);
        // Swap two rows: sign flips.
        let mut swapped = base.clone();
        swapped.swap(1, 2);
        assert_eq!(determinant(&swapped), determinant(&base).neg());
        // Scale one row: determinant scales.
        let mut scaled = base.clone();
        for p in &mut scaled[2] {
            *p = p.scale(&rat_int(3));
        }
        assert_eq!(determinant(&scaled), determinant(&base).scale(&rat_int(3)));
        // Row additivity in the last row.
        let mut m1 = base.clone();
        let mut m2 = base.clone();
        for j in 0..n {
            m1[n - 1][j] = x(0, n).mul(&x(j, n));
            m2[n - 1][j] = base[n - 1][j].add(&m1[n - 1][j]);
        }
        assert_eq!(
            determinant(&m2),
            determinant(&base).add(&determinant(&m1))
        );
    }
}
