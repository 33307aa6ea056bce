use serde::{Deserialize, Serialize};

use crate::order::Elem;

/// Outcome of one structural check on one lattice.
///
/// Serialises as `{"theorem": str, "pass": bool, "witness": [int] | null}`,
/// with an extra `"skipped"` reason or `"informational": true` only when set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub pass: bool,
    pub witness: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

impl TheoremReport {
    pub fn pass(theorem: impl Into<String>) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            pass: true,
            witness: None,
            skipped: None,
            informational: false,
        }
    }

    pub fn fail(theorem: impl Into<String>, witness: Vec<Elem>) -> Self {
        TheoremReport { pass: false, witness: Some(witness), ..Self::pass(theorem) }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(theorem: impl Into<String>, witness: Option<Vec<Elem>>) -> Self {
        match witness {
            None => Self::pass(theorem),
            Some(w) => Self::fail(theorem, w),
        }
    }

    pub fn skipped(theorem: impl Into<String>, reason: impl Into<String>) -> Self {
        TheoremReport { skipped: Some(reason.into()), ..Self::pass(theorem) }
    }

    /// Marks the result as not binding: a hypothesis did not hold.
    pub fn into_informational(mut self, reason: impl Into<String>) -> Self {
        self.informational = true;
        self.skipped = None;
        if !self.pass {
            self.theorem = format!("{} ({})", self.theorem, reason.into());
        }
        self
    }

    /// A binding failure: run, not informational, and failed.
    pub fn is_failure(&self) -> bool {
        !self.pass && self.skipped.is_none() && !self.informational
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialise")
    }
}

/// First failing report in `reports`, if any.
pub fn first_failure(reports: &[TheoremReport]) -> Option<&TheoremReport> {
    reports.iter().find(|r| r.is_failure())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        assert_eq!(
            TheoremReport::pass("sober").to_json(),
            r#"{"theorem":"sober","pass":true,"witness":null}"#
        );
        assert_eq!(
            TheoremReport::fail("sober", vec![1, 2]).to_json(),
            r#"{"theorem":"sober","pass":false,"witness":[1,2]}"#
        );
        let s = TheoremReport::skipped("x", "distributive fails").to_json();
        assert!(s.contains(r#""skipped":"distributive fails""#));
        let back: TheoremReport = serde_json::from_str(&s).unwrap();
        assert!(back.is_skipped() && !back.is_failure());
    }

    #[test]
    fn informational_failures_do_not_count() {
        let r = TheoremReport::fail("t", vec![0]).into_informational("hypothesis fails");
        assert!(!r.is_failure());
        assert!(r.to_json().contains(r#""informational":true"#));
    }
}
