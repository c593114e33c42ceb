//! Power products with dense exponent vectors.

use std::cmp::Ordering;

/// Maximum number of ambient variables supported by the dense layout.
pub const MAX_VARS: usize = 12;

/// A power product `x_1^{a_1} ... x_l^{a_l}` in a fixed number of variables.
///
/// Exponents are stored densely; the ambient dimension never exceeds
/// [`MAX_VARS`] at the scales this library targets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    nvars: u8,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables: {nvars}");
        Monomial {
            nvars: nvars as u8,
            exps: [0; MAX_VARS],
        }
    }

    /// The single variable `x_{k+1}` (0-indexed `k`).
    pub fn var(k: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(k < nvars);
        m.exps[k] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Self::one(exps.len());
        for (k, &e) in exps.iter().enumerate() {
            assert!(e <= u8::MAX as u32, "exponent overflow");
            m.exps[k] = e as u8;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exp(&self, k: usize) -> u32 {
        self.exps[k] as u32
    }

    pub fn exps(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps[..self.nvars as usize].iter().map(|&e| e as u32)
    }

    pub fn degree(&self) -> u32 {
        self.exps[..self.nvars as usize]
            .iter()
            .map(|&e| e as u32)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps[..self.nvars as usize].iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for k in 0..self.nvars as usize {
            out.exps[k] = self.exps[k]
                .checked_add(other.exps[k])
                .expect("exponent overflow");
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        self.exps[..self.nvars as usize]
            .iter()
            .zip(&other.exps[..self.nvars as usize])
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for k in 0..self.nvars as usize {
            out.exps[k] -= self.exps[k];
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for k in 0..self.nvars as usize {
            out.exps[k] = out.exps[k].max(other.exps[k]);
        }
        out
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps[..self.nvars as usize]
            .iter()
            .zip(&other.exps[..self.nvars as usize])
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Degree-reverse-lexicographic order with `x_1 > x_2 > ... > x_l`.
///
/// Higher total degree wins; on ties the monomial whose last differing
/// exponent is smaller is the larger one.
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars, b.nvars);
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for k in (0..a.nvars as usize).rev() {
        if a.exps[k] != b.exps[k] {
            return b.exps[k].cmp(&a.exps[k]);
        }
    }
    Ordering::Equal
}
