use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::exactring::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first monomial (in canonical order) where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verified case. Failing reports always carry a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Builder for a report: name and parameters up front, then the comparisons.
#[derive(Clone, Debug)]
pub struct Case {
    identity: String,
    params: BTreeMap<String, Value>,
    started: Instant,
}

impl Case {
    pub fn new(identity: &str) -> Self {
        Case {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub fn param<V: Into<Value>>(mut self, key: &str, value: V) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn finish(self, witness: Option<Witness>) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness,
            millis: self.started.elapsed().as_millis() as u64,
        }
    }

    /// Compares every pair; the first mismatch becomes the witness.
    pub fn compare_all(
        self,
        pairs: &[(&TruncatedSeries, &TruncatedSeries)],
    ) -> Result<VerificationReport> {
        for (lhs, rhs) in pairs {
            if let Some(w) = first_difference(lhs, rhs)? {
                return Ok(self.finish(Some(w)));
            }
        }
        Ok(self.finish(None))
    }

    pub fn compare(
        self,
        lhs: &TruncatedSeries,
        rhs: &TruncatedSeries,
    ) -> Result<VerificationReport> {
        self.compare_all(&[(lhs, rhs)])
    }

    /// For scalar checks: `values` are `(label, lhs, rhs)` triples; the label
    /// stands in for the witness monomial.
    pub fn compare_values(self, values: &[(String, String, String)]) -> VerificationReport {
        let witness = values
            .iter()
            .find(|(_, l, r)| l != r)
            .map(|(m, l, r)| Witness {
                monomial: m.clone(),
                lhs: l.clone(),
                rhs: r.clone(),
            });
        self.finish(witness)
    }
}

/// Both sides are read under the merged profile.
pub fn first_difference(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Result<Option<Witness>> {
    let diff = lhs.sub(rhs)?;
    let witness = diff.poly().terms().next().map(|(m, _)| Witness {
        monomial: m.to_string(),
        lhs: lhs.coeff(m).to_string(),
        rhs: rhs.coeff(m).to_string(),
    });
    Ok(witness)
}
