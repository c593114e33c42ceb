//! Incremental Buchberger completion for submodules of free modules.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use poly_engine::{Monomial, Polynomial, Rational};

use crate::module::{cmp_pot, FreeModule, FreeModuleElement, ModuleTerm};
use crate::GbError;

struct GbItem {
    elem: FreeModuleElement,
    lead: ModuleTerm,
    lead_coeff: Rational,
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy)]
struct PairKey {
    degree: i64,
    j: usize,
    i: usize,
}

/// Gröbner basis state for a submodule of a graded free module.
///
/// Pairs are processed in ascending S-pair degree, so for homogeneous
/// input the basis is degree-truncated correct at every moment: once
/// [`ModuleGb::complete_through_degree`] has run for `d`, normal forms of
/// degree-`<= d` elements are final.
pub struct ModuleGb {
    module: FreeModule,
    items: Vec<GbItem>,
    pairs: BinaryHeap<Reverse<PairKey>>,
    pair_lcm: Vec<((usize, usize), Monomial)>,
    cancelled: HashSet<(usize, usize)>,
    /// Only leads in components `< limit` spawn S-pairs (used by the
    /// elimination-style runs where trailing components are bookkeeping).
    pair_position_limit: Option<usize>,
}

impl ModuleGb {
    pub fn new(module: FreeModule) -> Self {
        ModuleGb {
            module,
            items: Vec::new(),
            pairs: BinaryHeap::new(),
            pair_lcm: Vec::new(),
            cancelled: HashSet::new(),
            pair_position_limit: None,
        }
    }

    pub fn with_pair_position_limit(module: FreeModule, limit: usize) -> Self {
        let mut gb = Self::new(module);
        gb.pair_position_limit = Some(limit);
        gb
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn num_elements(&self) -> usize {
        self.items.len()
    }

    fn pair_degree(&self, lcm: &Monomial, pos: usize) -> i64 {
        lcm.degree() as i64 + self.module.shifts[pos]
    }

    /// Adds a generator (reduced against the current basis first) and
    /// queues its S-pairs using the Gebauer-Möller criteria.
    pub fn add_generator(&mut self, g: &FreeModuleElement) {
        let nf = self.normal_form(g);
        if nf.is_zero() {
            return;
        }
        self.push_item(nf.normalize_content());
    }

    fn push_item(&mut self, elem: FreeModuleElement) {
        let (lead, lc) = {
            let (t, c) = elem.lead().expect("nonzero element");
            (t, c.clone())
        };
        let t_idx = self.items.len();
        let skip_pairs = self
            .pair_position_limit
            .is_some_and(|limit| lead.pos >= limit);

        if !skip_pairs {
            // Candidate new pairs: same lead position only.
            let mut cands: Vec<(usize, Monomial)> = Vec::new();
            for (i, item) in self.items.iter().enumerate() {
                if item.lead.pos == lead.pos {
                    cands.push((i, item.lead.mono.lcm(&lead.mono)));
                }
            }
            // Gebauer-Möller M/F: drop a candidate when another candidate's
            // lcm properly divides it, or equals it with a smaller index.
            let mut keep = vec![true; cands.len()];
            for a in 0..cands.len() {
                if !keep[a] {
                    continue;
                }
                for b in 0..cands.len() {
                    if a == b || !keep[a] {
                        continue;
                    }
                    if !keep[b] {
                        continue;
                    }
                    let (ia, la) = &cands[a];
                    let (ib, lb) = &cands[b];
                    if lb.divides(la) && (lb != la || ib < ia) {
                        keep[a] = false;
                    }
                }
            }
            // Gebauer-Möller B: cancel queued old pairs strictly refined by
            // the new lead.
            for &((i, j), ref lcm_ij) in &self.pair_lcm {
                if self.cancelled.contains(&(i, j)) {
                    continue;
                }
                let (pi, pj) = (self.items[i].lead, self.items[j].lead);
                if pi.pos != lead.pos {
                    continue;
                }
                if lead.mono.divides(lcm_ij) {
                    let lcm_it = pi.mono.lcm(&lead.mono);
                    let lcm_jt = pj.mono.lcm(&lead.mono);
                    if lcm_it != *lcm_ij && lcm_jt != *lcm_ij {
                        self.cancelled.insert((i, j));
                    }
                }
            }
            for (k, (i, lcm)) in cands.into_iter().enumerate() {
                if !keep[k] {
                    continue;
                }
                // Buchberger's product criterion is only sound for ideals
                // (rank-1 ambient), not for modules in general.
                if self.module.rank() == 1
                    && self.items[i].lead.mono.gcd_is_one(&lead.mono)
                {
                    continue;
                }
                let degree = self.pair_degree(&lcm, lead.pos);
                self.pairs.push(Reverse(PairKey {
                    degree,
                    j: t_idx,
                    i,
                }));
                self.pair_lcm.push(((i, t_idx), lcm));
            }
        }

        self.items.push(GbItem {
            elem,
            lead,
            lead_coeff: lc,
        });
    }

    /// Processes queued S-pairs of degree at most `max_degree`.
    pub fn complete_through_degree(&mut self, max_degree: i64) {
        while let Some(Reverse(key)) = self.pairs.peek().copied() {
            if key.degree > max_degree {
                break;
            }
            self.pairs.pop();
            self.process_pair(key.i, key.j);
        }
    }

    /// Processes every queued S-pair.
    pub fn complete(&mut self) {
        while let Some(Reverse(key)) = self.pairs.pop() {
            self.process_pair(key.i, key.j);
        }
    }

    fn process_pair(&mut self, i: usize, j: usize) {
        if self.cancelled.contains(&(i, j)) {
            return;
        }
        let (a, b) = (&self.items[i], &self.items[j]);
        debug_assert_eq!(a.lead.pos, b.lead.pos);
        let lcm = a.lead.mono.lcm(&b.lead.mono);
        let ua = a.lead.mono.div(&lcm).unwrap();
        let ub = b.lead.mono.div(&lcm).unwrap();
        // Cross-scale by leading coefficients to cancel the lead exactly.
        let s = a
            .elem
            .mul_term(&ua, &b.lead_coeff)
            .sub(&b.elem.mul_term(&ub, &a.lead_coeff));
        let nf = self.normal_form(&s);
        if !nf.is_zero() {
            self.push_item(nf.normalize_content());
        }
    }

    /// Full normal form: every term of the result is irreducible against
    /// the current basis.
    pub fn normal_form(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let rank = self.module.rank();
        let nvars = self.module.nvars;
        let mut work = v.clone();
        let mut done: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        'outer: while let Some((t, c)) = work.lead().map(|(t, c)| (t, c.clone())) {
            for item in &self.items {
                if item.lead.pos == t.pos && item.lead.mono.divides(&t.mono) {
                    let q = item.lead.mono.div(&t.mono).unwrap();
                    let coeff = &c / &item.lead_coeff;
                    work = work.sub_scaled_shifted(&coeff, &q, &item.elem);
                    continue 'outer;
                }
            }
            // Irreducible: move the lead into the result. Terms arrive in
            // strictly descending order per component.
            done[t.pos].push((t.mono, c));
            work = pop_lead(work, t.pos);
        }
        FreeModuleElement::from_components(
            done.into_iter()
                .map(|terms| Polynomial::from_descending_terms(nvars, terms))
                .collect::<Vec<_>>(),
        )
    }

    /// The interreduced, content-normalized basis in a canonical order.
    pub fn reduced_basis(&self) -> Vec<FreeModuleElement> {
        // Keep one representative per minimal lead term.
        let mut order: Vec<usize> = (0..self.items.len()).collect();
        order.sort_by(|&a, &b| cmp_pot(&self.items[a].lead, &self.items[b].lead));
        let mut kept: Vec<usize> = Vec::new();
        for &k in &order {
            let lead = &self.items[k].lead;
            let redundant = kept.iter().any(|&s| {
                let l = &self.items[s].lead;
                l.pos == lead.pos && l.mono.divides(&lead.mono)
            });
            if !redundant {
                kept.push(k);
            }
        }
        // Tail-reduce each kept element against the others.
        let mut out: Vec<FreeModuleElement> = Vec::with_capacity(kept.len());
        for &k in &kept {
            let others: Vec<&GbItem> = kept
                .iter()
                .filter(|&&s| s != k)
                .map(|&s| &self.items[s])
                .collect();
            let reduced = reduce_against(&self.items[k].elem, &others, &self.module);
            debug_assert!(!reduced.is_zero());
            out.push(reduced.normalize_content());
        }
        out.sort_by(|a, b| cmp_pot(&a.lead().unwrap().0, &b.lead().unwrap().0));
        out
    }
}

fn reduce_against(
    v: &FreeModuleElement,
    items: &[&GbItem],
    module: &FreeModule,
) -> FreeModuleElement {
    let rank = module.rank();
    let nvars = module.nvars;
    let mut work = v.clone();
    let mut done: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
    'outer: while let Some((t, c)) = work.lead().map(|(t, c)| (t, c.clone())) {
        for item in items {
            if item.lead.pos == t.pos && item.lead.mono.divides(&t.mono) {
                let q = item.lead.mono.div(&t.mono).unwrap();
                let coeff = &c / &item.lead_coeff;
                work = work.sub_scaled_shifted(&coeff, &q, &item.elem);
                continue 'outer;
            }
        }
        done[t.pos].push((t.mono, c));
        work = pop_lead(work, t.pos);
    }
    FreeModuleElement::from_components(
        done.into_iter()
            .map(|terms| Polynomial::from_descending_terms(nvars, terms))
            .collect::<Vec<_>>(),
    )
}

fn pop_lead(v: FreeModuleElement, pos: usize) -> FreeModuleElement {
    let mut comps: Vec<Polynomial> = v.components().to_vec();
    comps[pos] = comps[pos].without_lead();
    FreeModuleElement::from_components(comps)
}

/// Reduced Gröbner basis of the submodule generated by homogeneous
/// elements. Normal form against the result is a canonical form, and the
/// result does not depend on generator order.
pub fn groebner_basis(
    module: &FreeModule,
    gens: &[FreeModuleElement],
) -> Result<Vec<FreeModuleElement>, GbError> {
    for g in gens {
        module.degree_of(g)?;
    }
    let mut gb = ModuleGb::new(module.clone());
    for g in gens {
        gb.add_generator(g);
    }
    gb.complete();
    Ok(gb.reduced_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use poly_engine::rat_int;

    fn ideal_module(nvars: usize) -> FreeModule {
        FreeModule::standard(nvars, 1)
    }

    fn scalar(p: Polynomial) -> FreeModuleElement {
        FreeModuleElement::from_components(vec![p])
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let n = 2;
        let m = ideal_module(n);
        let gens = vec![scalar(Polynomial::var(0, n)), scalar(Polynomial::var(1, n))];
        let gb = groebner_basis(&m, &gens).unwrap();
        assert_eq!(gb.len(), 2);
        let polys: Vec<&Polynomial> = gb.iter().map(|v| v.component(0)).collect();
        assert!(polys.contains(&&Polynomial::var(0, n)));
        assert!(polys.contains(&&Polynomial::var(1, n)));
    }

    #[test]
    fn chain_of_differences_identifies_variables() {
        let n = 3;
        let m = ideal_module(n);
        let gens = vec![
            scalar(Polynomial::var_difference(0, 1, n)),
            scalar(Polynomial::var_difference(1, 2, n)),
        ];
        let mut gb = ModuleGb::new(m);
        for g in &gens {
            gb.add_generator(g);
        }
        gb.complete();
        let nf3 = gb.normal_form(&scalar(Polynomial::var(2, n)));
        let nf1 = gb.normal_form(&scalar(Polynomial::var(0, n)));
        assert_eq!(nf3, nf1);
        assert!(!nf3.is_zero());
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let n = 3;
        let m = ideal_module(n);
        let x = |k| Polynomial::var(k, n);
        let f1 = x(0).mul(&x(1)).sub(&x(2).pow(2));
        let f2 = x(0).pow(2).sub(&x(1).mul(&x(2)));
        let f3 = x(1).pow(2).sub(&x(0).mul(&x(2)));
        let gens: Vec<FreeModuleElement> =
            [&f1, &f2, &f3].iter().map(|p| scalar((*p).clone())).collect();
        let gb1 = groebner_basis(&m, &gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let gb2 = groebner_basis(&m, &rev).unwrap();
        assert_eq!(gb1, gb2);
        let scaled: Vec<FreeModuleElement> =
            gens.iter().map(|g| g.scale(&rat_int(-7))).collect();
        let gb3 = groebner_basis(&m, &scaled).unwrap();
        assert_eq!(gb1, gb3);
    }

    #[test]
    fn grading_error_on_inhomogeneous_input() {
        let n = 2;
        let m = ideal_module(n);
        let bad = scalar(Polynomial::var(0, n).add(&Polynomial::one(n)));
        assert!(matches!(
            groebner_basis(&m, &[bad]),
            Err(GbError::Inhomogeneous { .. })
        ));
    }

    #[test]
    fn module_s_pairs_with_coprime_leads_are_processed() {
        // f = x e_1 + y^2 e_2, g = y e_1 + x^2 e_2 in S[-1] + S: the S-pair
        // has coprime lead monomials in the same position but does not
        // reduce to zero, so the product criterion must stay off for
        // modules.
        let n = 2;
        let m = FreeModule::new(n, vec![1, 0]);
        let x = Polynomial::var(0, n);
        let y = Polynomial::var(1, n);
        let f = FreeModuleElement::from_components(vec![x.clone(), y.pow(2)]);
        let g = FreeModuleElement::from_components(vec![y.clone(), x.pow(2)]);
        let gb = groebner_basis(&m, &[f, g]).unwrap();
        assert!(gb.len() >= 3, "S-pair must contribute a new element");
    }
}
