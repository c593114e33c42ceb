//! Machine-readable classification reports.

use graph_core::{find_induced_cycle, is_chordal, is_weakly_chordal, Graph};
use serde::Serialize;

/// The JSON report shared by the classify and pd commands.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub schema: String,
    pub n: usize,
    pub graph: Vec<(usize, usize)>,
    pub chordal: bool,
    pub weakly_chordal: bool,
    /// Predicted pd bracket from the classification: `[min, max]` with
    /// `max = null` meaning unbounded above.
    pub predicted_pd_min: usize,
    pub predicted_pd_max: Option<usize>,
    /// Witness chordless cycle (in the graph or its complement) when not
    /// weakly chordal, or the shortest chordless >= 4-cycle when not
    /// chordal.
    pub witness_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<serde_json::Value>,
    /// Set by the pd command: computed pd lies in the predicted bracket.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistent: Option<bool>,
}

impl GraphReport {
    /// Classification-only report: flags, witness and predicted bracket.
    pub fn classify(g: &Graph) -> GraphReport {
        let chordal = is_chordal(g);
        let weakly = is_weakly_chordal(g);
        let (min, max) = if chordal {
            (0, Some(0))
        } else if weakly {
            (1, Some(1))
        } else {
            (2, None)
        };
        let witness = if !weakly {
            graph_core::weakly_chordal_witness(g).map(|(c, _)| c)
        } else if !chordal {
            find_induced_cycle(g, 4)
        } else {
            None
        };
        GraphReport {
            schema: "garr/report/v1".to_string(),
            n: g.n(),
            graph: g.edges(),
            chordal,
            weakly_chordal: weakly,
            predicted_pd_min: min,
            predicted_pd_max: max,
            witness_cycle: witness,
            pd: None,
            betti: None,
            consistent: None,
        }
    }

    /// Extends a classification with the computed pd and Betti table.
    pub fn with_pd(mut self, pd: usize, betti: serde_json::Value) -> GraphReport {
        let consistent = pd >= self.predicted_pd_min
            && self.predicted_pd_max.is_none_or(|mx| pd <= mx);
        self.pd = Some(pd);
        self.betti = Some(betti);
        self.consistent = Some(consistent);
        self
    }
}
