//! Kernels of graded maps between free modules, and minimal generating
//! sets of graded submodules.

use crate::gb::ModuleGb;
use crate::module::{FreeModule, FreeModuleElement};
use crate::GbError;

/// A graded map between free modules, given by the images of the source
/// basis elements: `columns[j]` is the image of `e_j` and must be
/// homogeneous of degree `source.shifts[j]`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: FreeModule,
    pub target: FreeModule,
    pub columns: Vec<FreeModuleElement>,
}

impl ModuleMap {
    pub fn new(
        source: FreeModule,
        target: FreeModule,
        columns: Vec<FreeModuleElement>,
    ) -> Result<Self, GbError> {
        if columns.len() != source.rank() {
            return Err(GbError::RankMismatch {
                got: columns.len(),
                expected: source.rank(),
            });
        }
        for (j, col) in columns.iter().enumerate() {
            match target.degree_of(col)? {
                None => {}
                Some(d) if d == source.shifts[j] => {}
                Some(d) => {
                    return Err(GbError::Parameter(format!(
                        "column {j} has degree {d}, expected shift {}",
                        source.shifts[j]
                    )))
                }
            }
        }
        Ok(ModuleMap {
            source,
            target,
            columns,
        })
    }

    /// Builds a map onto the submodule generated by `columns`, inferring
    /// the source shifts from the column degrees.
    pub fn from_generators(
        target: FreeModule,
        columns: Vec<FreeModuleElement>,
    ) -> Result<Self, GbError> {
        let mut shifts = Vec::with_capacity(columns.len());
        for col in &columns {
            match target.degree_of(col)? {
                Some(d) => shifts.push(d),
                None => {
                    return Err(GbError::Parameter(
                        "zero column in generating set".to_string(),
                    ))
                }
            }
        }
        let source = FreeModule::new(target.nvars, shifts);
        Ok(ModuleMap {
            source,
            target,
            columns,
        })
    }

    /// Image of an element of the source.
    pub fn apply(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let mut out = FreeModuleElement::zero(self.target.rank(), self.target.nvars);
        for (j, col) in self.columns.iter().enumerate() {
            let c = v.component(j);
            if !c.is_zero() {
                out = out.add(&col.mul_poly(c));
            }
        }
        out
    }
}

/// A Gröbner basis of `ker(map)` as a submodule of the source.
///
/// Elimination formulation: the submodule of `target ⊕ source` generated
/// by `(columns[j], e_j)` is completed under position-over-term order with
/// the target block dominating; basis elements with vanishing target block
/// are exactly a Gröbner basis of the kernel.
pub fn module_kernel(map: &ModuleMap) -> Result<Vec<FreeModuleElement>, GbError> {
    let combined = map.target.direct_sum(&map.source);
    let t_rank = map.target.rank();
    let s_rank = map.source.rank();
    let nvars = combined.nvars;
    let mut gb = ModuleGb::new(combined);
    for (j, col) in map.columns.iter().enumerate() {
        let mut comps = col.components().to_vec();
        comps.extend(
            FreeModuleElement::unit(j, s_rank, nvars)
                .components()
                .iter()
                .cloned(),
        );
        gb.add_generator(&FreeModuleElement::from_components(comps));
    }
    gb.complete();
    let mut kernel: Vec<FreeModuleElement> = gb
        .reduced_basis()
        .into_iter()
        .filter(|v| {
            v.components()[..t_rank].iter().all(|p| p.is_zero())
        })
        .map(|v| v.project(t_rank, s_rank))
        .collect();
    for k in &kernel {
        debug_assert!(map.apply(k).is_zero());
    }
    kernel.sort_by(|a, b| crate::module::cmp_pot(&a.lead().unwrap().0, &b.lead().unwrap().0));
    Ok(kernel)
}

/// Extracts a minimal homogeneous generating set: candidates are processed
/// in ascending degree and kept exactly when they are not in the submodule
/// generated by the candidates already kept (degree-truncated Gröbner
/// membership, which is exact for homogeneous input).
pub fn minimal_generators(
    module: &FreeModule,
    gens: &[FreeModuleElement],
) -> Result<Vec<FreeModuleElement>, GbError> {
    let mut with_degrees: Vec<(i64, usize)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if let Some(d) = module.degree_of(g)? {
            with_degrees.push((d, k));
        }
    }
    with_degrees.sort();
    let mut gb = ModuleGb::new(module.clone());
    let mut kept = Vec::new();
    for (d, k) in with_degrees {
        gb.complete_through_degree(d);
        if !gb.normal_form(&gens[k]).is_zero() {
            kept.push(gens[k].clone());
            gb.add_generator(&gens[k]);
        }
    }
    Ok(kept)
}
