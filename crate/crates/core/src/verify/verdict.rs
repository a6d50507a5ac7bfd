use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::exact::Poly;
use crate::scalar::Scalar;

/// Outcome of one claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim fails as stated but a named weaker form holds.
    Partial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EvidenceKind {
    /// The instance contradicts the claim.
    Discrepancy,
    /// Recorded data that does not by itself contradict the claim.
    Measurement,
}

/// One row of evidence: an instance, what the claim predicts, what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceItem {
    pub kind: EvidenceKind,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    /// `observed - expected` when both sides are polynomials or numbers; empty otherwise.
    pub difference: String,
}

/// A claim, its parameters, its status and the exact evidence behind it.
///
/// `status` is `pass` exactly when no evidence item is a discrepancy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub group: String,
    pub quote: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub instances_checked: u64,
    pub discrepancies: u64,
    pub evidence: Vec<EvidenceItem>,
}

impl ClaimVerdict {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates evidence and fixes the status when finished.
#[derive(Debug)]
pub struct VerdictBuilder {
    verdict: ClaimVerdict,
    weaker_form_holds: bool,
    evidence_limit: Option<usize>,
    stored_discrepancies: usize,
    omitted: u64,
}

impl VerdictBuilder {
    pub fn new(claim_id: impl Into<String>, group: &str, quote: &str) -> Self {
        VerdictBuilder {
            verdict: ClaimVerdict {
                claim_id: claim_id.into(),
                group: group.to_string(),
                quote: quote.to_string(),
                parameters: BTreeMap::new(),
                status: Status::Pass,
                instances_checked: 0,
                discrepancies: 0,
                evidence: Vec::new(),
            },
            weaker_form_holds: false,
            evidence_limit: None,
            stored_discrepancies: 0,
            omitted: 0,
        }
    }

    /// Keep at most `n` discrepancy rows; further ones are only counted.
    pub fn evidence_limit(mut self, n: usize) -> Self {
        self.evidence_limit = Some(n);
        self
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.verdict.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn checked(&mut self, n: u64) {
        self.verdict.instances_checked += n;
    }

    pub fn discrepancy(&mut self, instance: impl ToString, expected: impl ToString, observed: impl ToString) {
        self.verdict.discrepancies += 1;
        self.push(EvidenceKind::Discrepancy, instance, expected, observed, String::new());
    }

    /// A discrepancy carrying an explicit difference payload.
    pub fn discrepancy_with_difference(
        &mut self,
        instance: impl ToString,
        expected: impl ToString,
        observed: impl ToString,
        difference: impl ToString,
    ) {
        self.verdict.discrepancies += 1;
        self.push(EvidenceKind::Discrepancy, instance, expected, observed, difference.to_string());
    }

    pub fn measurement(&mut self, instance: impl ToString, expected: impl ToString, observed: impl ToString) {
        self.push(EvidenceKind::Measurement, instance, expected, observed, String::new());
    }

    /// Record one comparison: a discrepancy when the sides differ.
    pub fn compare<V: PartialEq + ToString>(&mut self, instance: impl ToString, expected: &V, observed: &V) {
        self.checked(1);
        if expected != observed {
            self.discrepancy(instance, expected.to_string(), observed.to_string());
        }
    }

    /// Compare two polynomials rendered in `var`; a mismatch records `observed - expected`.
    pub fn compare_poly<T: Scalar + Signed + fmt::Display>(
        &mut self,
        instance: impl ToString,
        expected: &Poly<T>,
        observed: &Poly<T>,
        var: &str,
    ) {
        self.checked(1);
        if expected != observed {
            self.discrepancy_with_difference(
                instance,
                expected.display_in(var),
                observed.display_in(var),
                (observed - expected).display_in(var),
            );
        }
    }

    /// Mark that a weaker form of the claim holds, turning a failure into `partial`.
    pub fn weaker_form_holds(&mut self, holds: bool) {
        self.weaker_form_holds = holds;
    }

    fn push(
        &mut self,
        kind: EvidenceKind,
        instance: impl ToString,
        expected: impl ToString,
        observed: impl ToString,
        difference: String,
    ) {
        if kind == EvidenceKind::Discrepancy {
            if self.evidence_limit.is_some_and(|n| self.stored_discrepancies >= n) {
                self.omitted += 1;
                return;
            }
            self.stored_discrepancies += 1;
        }
        self.verdict.evidence.push(EvidenceItem {
            kind,
            instance: instance.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            difference,
        });
    }

    pub fn has_discrepancies(&self) -> bool {
        self.verdict.discrepancies > 0
    }

    pub fn discrepancy_count(&self) -> u64 {
        self.verdict.discrepancies
    }

    pub fn finish(mut self) -> ClaimVerdict {
        if self.omitted > 0 {
            let omitted = self.omitted;
            self.measurement("omitted", "", format!("{omitted} further discrepancies not listed"));
        }
        self.verdict.status = match (self.verdict.discrepancies, self.weaker_form_holds) {
            (0, _) => Status::Pass,
            (_, true) => Status::Partial,
            (_, false) => Status::Fail,
        };
        self.verdict
    }
}
