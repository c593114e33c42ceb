//! Gröbner bases for submodules of graded free modules over the rational
//! polynomial ring, and everything built on top of them: kernels of maps
//! between free modules, minimal free resolutions with graded Betti
//! tables, ideal membership with certificates, and an independent
//! degreewise linear-algebra oracle for Hilbert functions.
//!
//! The module order is position-over-term over degrevlex with positions
//! compared by index; kernels are computed by elimination in the direct
//! sum of target and source.

mod gb;
mod hilbert;
mod kernel;
mod membership;
mod module;
mod resolution;

pub use gb::{groebner_basis, ModuleGb};
pub use hilbert::{hilbert_oracle, DerivationConstraints};
pub use kernel::{minimal_generators, module_kernel, ModuleMap};
pub use membership::{ideal_membership, MembershipResult};
pub use module::{cmp_pot, FreeModule, FreeModuleElement, ModuleTerm};
pub use resolution::{
    minimal_free_resolution, minimize_complex, BettiTable, Presentation, Resolution,
};

/// Errors surfaced by the Gröbner layer.
#[derive(Debug, Clone, thiserror::Error)]
pub enum GbError {
    #[error("inhomogeneous input: component {position} of a generator breaks the grading")]
    Inhomogeneous { position: usize },
    #[error("rank mismatch: element has {got} components, module has rank {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("resolution exceeded maximum length {max_length}")]
    MaxLengthExceeded { max_length: usize },
    #[error("{0}")]
    Parameter(String),
}
