//! Ideal membership with cofactor certificates.

use poly_engine::Polynomial;

use crate::gb::ModuleGb;
use crate::module::{FreeModule, FreeModuleElement};

/// Outcome of an ideal membership test.
#[derive(Clone, Debug)]
pub struct MembershipResult {
    /// Cofactors `c_i` with `f = sum c_i g_i` when `f` is in the ideal.
    pub cofactors: Option<Vec<Polynomial>>,
    /// Normal form of `f` against a Gröbner basis of the ideal; zero
    /// exactly when `f` is a member.
    pub normal_form: Polynomial,
}

impl MembershipResult {
    pub fn contained(&self) -> bool {
        self.normal_form.is_zero()
    }
}

/// Tests `f ∈ (g_1, ..., g_k)` in `S`, returning a certificate on success
/// and the nonzero normal form on failure.
///
/// The certificate falls out of the same elimination trick used for
/// kernels: completing `(g_i; e_i)` in `S ⊕ S^k` and reducing `(f; 0)`
/// leaves `(nf; -c)` with `f = nf + sum c_i g_i`. Inputs need not be
/// homogeneous; pairs are processed by ascending lcm degree, which is a
/// valid selection order in general.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial]) -> MembershipResult {
    let nvars = f.nvars();
    let k = gens.len();
    let combined = FreeModule::standard(nvars, 1 + k);
    // Only the leading (ideal) component spawns S-pairs; trailing
    // components are cofactor bookkeeping.
    let mut gb = ModuleGb::with_pair_position_limit(combined, 1);
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut comps = vec![g.clone()];
        comps.extend((0..k).map(|t| {
            if t == j {
                Polynomial::one(nvars)
            } else {
                Polynomial::zero(nvars)
            }
        }));
        gb.add_generator(&FreeModuleElement::from_components(comps));
    }
    gb.complete();
    let mut probe = vec![f.clone()];
    probe.extend((0..k).map(|_| Polynomial::zero(nvars)));
    let nf = gb.normal_form(&FreeModuleElement::from_components(probe));
    let normal_form = nf.component(0).clone();
    let cofactors = if normal_form.is_zero() {
        let cs: Vec<Polynomial> = (0..k).map(|j| nf.component(1 + j).neg()).collect();
        // The certificate is exact by construction; verify anyway.
        let mut check = Polynomial::zero(nvars);
        for (c, g) in cs.iter().zip(gens) {
            check = check.add(&c.mul(g));
        }
        debug_assert_eq!(check, *f);
        Some(cs)
    } else {
        None
    };
    MembershipResult {
        cofactors,
        normal_form,
    }
}
