//! Graded free modules and their elements.

use std::cmp::Ordering;

use num_traits::Zero;
use poly_engine::{cmp_degrevlex, Monomial, Polynomial, Rational};

use crate::GbError;

/// A graded free module `⊕_k S[-shifts[k]]`: the `k`-th basis element sits
/// in degree `shifts[k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModule {
    pub nvars: usize,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(nvars: usize, shifts: Vec<i64>) -> Self {
        FreeModule { nvars, shifts }
    }

    /// Rank-`rank` free module with all generators in degree 0.
    pub fn standard(nvars: usize, rank: usize) -> Self {
        FreeModule {
            nvars,
            shifts: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Direct sum, `self` components first.
    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        assert_eq!(self.nvars, other.nvars);
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        FreeModule {
            nvars: self.nvars,
            shifts,
        }
    }

    /// Degree of a homogeneous element, `None` for zero. Errors when some
    /// component is inhomogeneous or the degrees disagree across components.
    pub fn degree_of(&self, v: &FreeModuleElement) -> Result<Option<i64>, GbError> {
        if v.comps.len() != self.rank() {
            return Err(GbError::RankMismatch {
                got: v.comps.len(),
                expected: self.rank(),
            });
        }
        let mut degree: Option<i64> = None;
        for (k, p) in v.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(GbError::Inhomogeneous { position: k });
            }
            let d = p.degree().unwrap() as i64 + self.shifts[k];
            match degree {
                None => degree = Some(d),
                Some(prev) if prev == d => {}
                Some(_) => return Err(GbError::Inhomogeneous { position: k }),
            }
        }
        Ok(degree)
    }
}

/// A term position in a free module: component index plus monomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModuleTerm {
    pub pos: usize,
    pub mono: Monomial,
}

/// Position-over-term: lower component index wins, ties fall back to
/// degrevlex on the monomials.
pub fn cmp_pot(a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
    match b.pos.cmp(&a.pos) {
        Ordering::Equal => cmp_degrevlex(&a.mono, &b.mono),
        ord => ord,
    }
}

/// An element of a free module, one polynomial per component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModuleElement {
    comps: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        FreeModuleElement {
            comps: vec![Polynomial::zero(nvars); rank],
        }
    }

    /// The basis element `e_pos`.
    pub fn unit(pos: usize, rank: usize, nvars: usize) -> Self {
        let mut v = Self::zero(rank, nvars);
        v.comps[pos] = Polynomial::one(nvars);
        v
    }

    pub fn from_components(comps: Vec<Polynomial>) -> Self {
        assert!(!comps.is_empty());
        let nvars = comps[0].nvars();
        assert!(comps.iter().all(|p| p.nvars() == nvars));
        FreeModuleElement { comps }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, k: usize) -> &Polynomial {
        &self.comps[k]
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    /// Leading term under position-over-term order.
    pub fn lead(&self) -> Option<(ModuleTerm, &Rational)> {
        for (pos, p) in self.comps.iter().enumerate() {
            if let Some((m, c)) = p.lead() {
                return Some((ModuleTerm { pos, mono: *m }, c));
            }
        }
        None
    }

    pub fn add(&self, other: &FreeModuleElement) -> FreeModuleElement {
        debug_assert_eq!(self.rank(), other.rank());
        FreeModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeModuleElement) -> FreeModuleElement {
        debug_assert_eq!(self.rank(), other.rank());
        FreeModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FreeModuleElement {
        FreeModuleElement {
            comps: self.comps.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> FreeModuleElement {
        FreeModuleElement {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> FreeModuleElement {
        FreeModuleElement {
            comps: self.comps.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> FreeModuleElement {
        FreeModuleElement {
            comps: self.comps.iter().map(|p| p.mul(f)).collect(),
        }
    }

    /// `self - c * m * g` componentwise.
    pub fn sub_scaled_shifted(
        &self,
        c: &Rational,
        m: &Monomial,
        g: &FreeModuleElement,
    ) -> FreeModuleElement {
        debug_assert_eq!(self.rank(), g.rank());
        FreeModuleElement {
            comps: self
                .comps
                .iter()
                .zip(&g.comps)
                .map(|(a, b)| {
                    if b.is_zero() {
                        a.clone()
                    } else {
                        a.sub_scaled_shifted(c, m, b)
                    }
                })
                .collect(),
        }
    }

    /// Rescales so that all coefficients are integers with content 1 and
    /// the leading coefficient is positive.
    pub fn normalize_content(&self) -> FreeModuleElement {
        let Some((lead, _)) = self.lead() else {
            return self.clone();
        };
        // The factor is computed across all components at once.
        let mut denom_lcm = num_bigint_one();
        let mut numer_gcd = num_bigint_zero();
        for p in &self.comps {
            for (_, c) in p.terms() {
                denom_lcm = lcm_big(&denom_lcm, c.denom());
            }
        }
        for p in &self.comps {
            for (_, c) in p.terms() {
                let scaled = c.numer() * (&denom_lcm / c.denom());
                numer_gcd = gcd_big(&numer_gcd, &scaled);
            }
        }
        let mut factor = Rational::new(denom_lcm, numer_gcd);
        let lead_coeff = self.comps[lead.pos].lead().unwrap().1;
        if (lead_coeff * &factor) < Rational::zero() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Projects onto a contiguous block of components.
    pub fn project(&self, start: usize, len: usize) -> FreeModuleElement {
        FreeModuleElement {
            comps: self.comps[start..start + len].to_vec(),
        }
    }
}

fn num_bigint_one() -> num_bigint::BigInt {
    use num_traits::One;
    num_bigint::BigInt::one()
}

fn num_bigint_zero() -> num_bigint::BigInt {
    num_bigint::BigInt::zero()
}

fn lcm_big(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

fn gcd_big(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

impl std::fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
