//! Graphic hyperplane arrangements and their logarithmic derivation
//! modules: construction, intersection-lattice operations, Terao's B
//! polynomial, the explicit braid-subarrangement derivations, Saito's
//! criterion, projective dimension and graded Betti tables, and the
//! machinery verifying the deletion exact sequence along edge-completion
//! sequences.

mod antihole;
mod arrangement;
mod derivation;
mod dmodule;
mod flats;
mod pipeline;
mod report;
mod terao;

pub use antihole::{antihole_explicit, AntiholeReport};
pub use arrangement::Arrangement;
pub use derivation::{
    f_coeff, phi, psi, saito_check, theta, verify_cj, verify_esp, Derivation,
};
pub use dmodule::{betti_graph, derivation_module, pd_graph, resolve_graph, PdCache};
pub use flats::{flats, is_generic, localization, restriction, Flat};
pub use pipeline::{verify_wc_pipeline, WcPipelineReport, WcStepReport};
pub use report::GraphReport;
pub use terao::{b_sequence_check, idealb_refined, terao_b, BSequenceReport, IdealBReport, NuRule, TeraoB};

/// Errors from arrangement-level operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum ArrError {
    #[error("{0}")]
    Parameter(String),
    #[error("derivation is not logarithmic: fails at hyperplane {index} (form {form})")]
    NotInModule { index: usize, form: String },
    #[error("internal consistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
    #[error(transparent)]
    Gb(#[from] groebner_module::GbError),
    #[error(transparent)]
    Poly(#[from] poly_engine::PolyError),
}
