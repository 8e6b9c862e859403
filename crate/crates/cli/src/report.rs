use num_bigint::BigInt;
use poplat_core::QPolynomial;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

/// One compared case of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub lattice: String,
    pub n: usize,
    pub computed: QPolynomial,
    pub formula: QPolynomial,
    pub verdict: Verdict,
    /// `computed - formula`, present on mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<QPolynomial>,
    /// The whole Pop polynomial when only one coefficient is compared.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pop_polynomial: Option<QPolynomial>,
}

impl CaseRecord {
    pub fn new(lattice: &str, n: usize, computed: QPolynomial, formula: QPolynomial) -> Self {
        let verdict = if computed == formula { Verdict::Match } else { Verdict::Mismatch };
        let delta = (verdict == Verdict::Mismatch).then(|| &computed - &formula);
        CaseRecord { lattice: lattice.to_string(), n, computed, formula, verdict, delta, pop_polynomial: None }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub matched: usize,
    pub mismatched: usize,
}

/// Output of `verify`. Contains no timing data so that repeated runs are
/// byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub cases: Vec<CaseRecord>,
    pub totals: Totals,
}

impl RunReport {
    pub fn new(command: Vec<String>, cases: Vec<CaseRecord>) -> Self {
        let matched = cases.iter().filter(|c| c.verdict == Verdict::Match).count();
        let totals = Totals { cases: cases.len(), matched, mismatched: cases.len() - matched };
        RunReport { command, cases, totals }
    }

    pub fn all_match(&self) -> bool {
        self.totals.mismatched == 0
    }
}

pub fn monomial(degree: u32, c: BigInt) -> QPolynomial {
    let mut p = QPolynomial::zero();
    p.add_term(degree, c);
    p
}
