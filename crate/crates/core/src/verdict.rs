use serde::{Deserialize, Serialize};

/// A shape (or parameter tuple) with a note on why it is recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub shape: String,
    pub detail: String,
}

impl Witness {
    pub fn new(shape: impl Into<String>, detail: impl Into<String>) -> Self {
        Witness {
            shape: shape.into(),
            detail: detail.into(),
        }
    }
}

/// Outcome of checking one claim over a finite parameter range.
///
/// A failing verdict always carries at least one witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub parameter_range: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl ClaimVerdict {
    pub fn new(claim_id: impl Into<String>, parameter_range: impl Into<String>) -> Self {
        ClaimVerdict {
            claim_id: claim_id.into(),
            parameter_range: parameter_range.into(),
            holds: true,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(&mut self, w: Witness) {
        self.holds = false;
        self.witnesses.push(w);
    }

    /// Records a confirmation without affecting `holds`.
    pub fn note(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    /// Records `w` as a failure unless `ok`.
    pub fn require(&mut self, ok: bool, w: impl FnOnce() -> Witness) {
        if !ok {
            self.fail(w());
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} [{}]: {}",
            self.claim_id,
            self.parameter_range,
            if self.holds { "holds" } else { "FAILS" }
        )
    }
}
