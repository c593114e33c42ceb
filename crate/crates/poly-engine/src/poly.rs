//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::{cmp_degrevlex, Monomial};
use crate::{PolyError, Rational};

/// A polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are kept sorted in descending degree-reverse-lexicographic
/// order and never contain zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    /// The variable `x_{k+1}` (0-indexed `k`).
    pub fn var(k: usize, nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: vec![(Monomial::var(k, nvars), Rational::one())],
        }
    }

    /// The difference `x_{i+1} - x_{j+1}` of two distinct variables (0-indexed).
    pub fn var_difference(i: usize, j: usize, nvars: usize) -> Self {
        assert_ne!(i, j);
        Self::var(i, nvars).sub(&Self::var(j, nvars))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    /// Builds from terms already in strictly descending degrevlex order
    /// with no zero coefficients.
    pub fn from_descending_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| cmp_degrevlex(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    /// Drops the leading term.
    pub fn without_lead(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms[1..].to_vec(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Leading term w.r.t. descending degrevlex.
    pub fn lead(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self
            .terms
            .binary_search_by(|(t, _)| cmp_degrevlex(m, t))
        {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_degrevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `self - c * m * g`, the basic reduction step. Exploits sortedness of
    /// both operands; `c` must be nonzero.
    pub fn sub_scaled_shifted(&self, c: &Rational, m: &Monomial, g: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, g.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.terms.len() {
            let gm = g.terms[j].0.mul(m);
            match cmp_degrevlex(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(c * &g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 - &(c * &g.terms[j].1);
                    if !coeff.is_zero() {
                        out.push((gm, coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < g.terms.len() {
            out.push((g.terms[j].0.mul(m), -(c * &g.terms[j].1)));
            j += 1;
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut map: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Division with remainder by a list of divisors (multivariate division
    /// algorithm w.r.t. degrevlex). Returns per-divisor quotients and the
    /// remainder, with `self = sum_i q_i * d_i + r`.
    pub fn divrem(&self, divisors: &[&Polynomial]) -> (Vec<Polynomial>, Polynomial) {
        let mut quotients = vec![Polynomial::zero(self.nvars); divisors.len()];
        let mut remainder = Polynomial::zero(self.nvars);
        let mut work = self.clone();
        'outer: while let Some((lm, lc)) = work.lead().map(|(m, c)| (*m, c.clone())) {
            for (k, d) in divisors.iter().enumerate() {
                if let Some((dm, dc)) = d.lead() {
                    if let Some(q) = dm.div(&lm) {
                        let coeff = &lc / dc;
                        work = work.sub_scaled_shifted(&coeff, &q, d);
                        quotients[k] =
                            quotients[k].add(&Polynomial::monomial(q, coeff));
                        continue 'outer;
                    }
                }
            }
            // Leading term not reducible: move it to the remainder.
            remainder.terms.push((lm, lc));
            work.terms.remove(0);
        }
        (quotients, remainder)
    }

    /// Exact division: returns `q` with `self = q * g`, or the nonzero
    /// remainder when `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.nvars != g.nvars {
            return Err(PolyError::VarMismatch(self.nvars, g.nvars));
        }
        let (mut quotients, remainder) = self.divrem(&[g]);
        if remainder.is_zero() {
            Ok(quotients.pop().unwrap())
        } else {
            Err(PolyError::Inexact { remainder })
        }
    }

    /// True when `self` divides `other` exactly.
    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }

    /// Substitutes each variable by the representative of its union-find
    /// class under the relations `x_{i} = x_{j}` (0-indexed pairs); the
    /// representative is the smallest index in the class.
    pub fn reduce_mod_linears(&self, eqs: &[(usize, usize)]) -> Polynomial {
        let mut rep: Vec<usize> = (0..self.nvars).collect();
        fn find(rep: &mut Vec<usize>, v: usize) -> usize {
            if rep[v] != v {
                let r = find(rep, rep[v]);
                rep[v] = r;
            }
            rep[v]
        }
        for &(i, j) in eqs {
            let (ri, rj) = (find(&mut rep, i), find(&mut rep, j));
            if ri != rj {
                let (lo, hi) = (ri.min(rj), ri.max(rj));
                rep[hi] = lo;
            }
        }
        let classes: Vec<usize> = (0..self.nvars).map(|v| find(&mut rep, v)).collect();
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| {
                let mut exps = vec![0u32; self.nvars];
                for (k, e) in m.exps().enumerate() {
                    exps[classes[k]] += e;
                }
                (Monomial::from_exps(&exps), c.clone())
            }),
        )
    }

    /// Partial derivative with respect to `x_{k+1}`.
    pub fn partial(&self, k: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exp(k) > 0).map(|(m, c)| {
                let mut exps: Vec<u32> = m.exps().collect();
                let e = exps[k];
                exps[k] -= 1;
                (Monomial::from_exps(&exps), c * Rational::from(BigInt::from(e)))
            }),
        )
    }

    /// Rescales to integer coefficients with content 1 and positive leading
    /// coefficient. Returns the applied factor `u` with `out = u * self`.
    pub fn normalize_content(&self) -> (Polynomial, Rational) {
        if self.is_zero() {
            return (self.clone(), Rational::one());
        }
        let mut denom_lcm = BigInt::one();
        for (_, c) in &self.terms {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        let mut factor = Rational::new(denom_lcm, numer_gcd);
        if self.terms[0].1.is_negative() == factor.is_positive() {
            factor = -factor;
        }
        (self.scale(&factor), factor)
    }

    /// Renders using the same syntax accepted by [`parse_polynomial`].
    pub fn to_display_string(&self) -> String {
        format!("{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, e) in m.exps().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", v + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", v + 1, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Error from [`parse_polynomial`], with a byte offset into the input.
#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Parses the syntax produced by `Display`: terms joined by `+`/`-`, each a
/// `*`-separated product of an optional rational and powers `xK^E`.
pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let err = |pos: usize, msg: &str| ParseError {
        offset: pos,
        message: msg.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let parse_uint = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            None
        } else {
            Some(input[start..*pos].parse::<BigInt>().unwrap())
        }
    };
    let mut result = Polynomial::zero(nvars);
    skip_ws(&mut pos);
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = 1i64;
        if !first || bytes[pos] == b'+' || bytes[pos] == b'-' {
            match bytes.get(pos) {
                Some(b'+') => pos += 1,
                Some(b'-') => {
                    sign = -1;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(err(pos, "expected '+' or '-'")),
            }
        }
        first = false;
        skip_ws(&mut pos);
        let mut coeff = Rational::from(BigInt::from(sign));
        let mut exps = vec![0u32; nvars];
        let mut saw_factor = false;
        loop {
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                let n = parse_uint(&mut pos).unwrap();
                let mut d = BigInt::one();
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    d = parse_uint(&mut pos).ok_or_else(|| err(pos, "expected denominator"))?;
                }
                coeff *= Rational::new(n, d);
                saw_factor = true;
            } else if pos < bytes.len() && bytes[pos] == b'x' {
                pos += 1;
                let v = parse_uint(&mut pos).ok_or_else(|| err(pos, "expected variable index"))?;
                let v: usize = v.to_string().parse().unwrap();
                if v == 0 || v > nvars {
                    return Err(err(pos, "variable index out of range"));
                }
                let mut e = 1u32;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let n = parse_uint(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                    e = n.to_string().parse().unwrap();
                }
                exps[v - 1] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        if !saw_factor {
            return Err(err(pos, "expected a term"));
        }
        result = result.add(&Polynomial::monomial(Monomial::from_exps(&exps), coeff));
        skip_ws(&mut pos);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    fn x(k: usize, n: usize) -> Polynomial {
        Polynomial::var(k, n)
    }

    #[test]
    fn product_of_conjugates() {
        // (x1 - x2)(x1 + x2) = x1^2 - x2^2
        let n = 2;
        let f = x(0, n).sub(&x(1, n));
        let g = x(0, n).add(&x(1, n));
        let expected = x(0, n).mul(&x(0, n)).sub(&x(1, n).mul(&x(1, n)));
        assert_eq!(f.mul(&g), expected);
    }

    #[test]
    fn exact_division() {
        let n = 2;
        let f = x(0, n).pow(2).sub(&x(1, n).pow(2));
        let g = x(0, n).sub(&x(1, n));
        assert_eq!(f.exact_div(&g).unwrap(), x(0, n).add(&x(1, n)));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let n = 2;
        let f = x(0, n).pow(2);
        let g = x(1, n);
        match f.exact_div(&g) {
            Err(PolyError::Inexact { remainder }) => assert_eq!(remainder, f),
            other => panic!("expected inexact division, got {other:?}"),
        }
    }

    #[test]
    fn reduce_mod_linears_substitutes_representative() {
        let n = 3;
        // x2 mod (x1 - x2) -> x1
        assert_eq!(x(1, n).reduce_mod_linears(&[(0, 1)]), x(0, n));
        // (x1 - x2) * g mod (x1 - x2) -> 0
        let g = x(2, n).pow(3).add(&Polynomial::constant(rat(5, 7), n));
        let f = x(0, n).sub(&x(1, n)).mul(&g);
        assert!(f.reduce_mod_linears(&[(0, 1)]).is_zero());
    }

    #[test]
    fn reduce_mod_linears_on_terao_products() {
        // With l = 6 and relations x1 = x2 = x3:
        //   prod_{j=4}^{5} (x1 - x_j) is already reduced,
        //   prod_{j=5}^{6} (x2 - x_j) becomes prod_{j=5}^{6} (x1 - x_j).
        let n = 6;
        let b1 = x(0, n).sub(&x(3, n)).mul(&x(0, n).sub(&x(4, n)));
        assert_eq!(b1.reduce_mod_linears(&[(0, 1), (1, 2)]), b1);
        let b2 = x(1, n).sub(&x(4, n)).mul(&x(1, n).sub(&x(5, n)));
        let expected = x(0, n).sub(&x(4, n)).mul(&x(0, n).sub(&x(5, n)));
        assert_eq!(b2.reduce_mod_linears(&[(0, 1), (1, 2)]), expected);
    }

    #[test]
    fn divrem_identity() {
        let n = 3;
        let f = x(0, n).pow(3).add(&x(1, n).mul(&x(2, n))).add(&Polynomial::one(n));
        let d1 = x(0, n).sub(&x(1, n));
        let d2 = x(1, n).pow(2).add(&x(2, n));
        let (qs, r) = f.divrem(&[&d1, &d2]);
        let recombined = qs[0].mul(&d1).add(&qs[1].mul(&d2)).add(&r);
        assert_eq!(recombined, f);
    }

    #[test]
    fn content_normalization() {
        let n = 2;
        let f = x(0, n).scale(&rat(-4, 6)).add(&x(1, n).scale(&rat(2, 9)));
        let (g, u) = f.normalize_content();
        assert_eq!(g, f.scale(&u));
        let coeffs: Vec<Rational> = g.terms().iter().map(|(_, c)| c.clone()).collect();
        assert!(coeffs.iter().all(|c| c.denom().is_one()));
        assert!(g.lead().unwrap().1 > &Rational::zero());
        assert_eq!(g, x(0, n).scale(&rat_int(3)).sub(&x(1, n)));
    }

    #[test]
    fn display_parse_round_trip() {
        let n = 3;
        let f = x(0, n)
            .pow(2)
            .scale(&rat(3, 2))
            .sub(&x(1, n).mul(&x(2, n)))
            .add(&Polynomial::constant(rat(-7, 5), n));
        let s = f.to_display_string();
        let g = parse_polynomial(&s, n).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_polynomial("0", n).unwrap(), Polynomial::zero(n));
    }

    #[test]
    fn homogeneity() {
        let n = 2;
        assert!(x(0, n).sub(&x(1, n)).is_homogeneous());
        assert!(!x(0, n).pow(2).add(&x(1, n)).is_homogeneous());
        assert!(Polynomial::zero(n).is_homogeneous());
    }
}
