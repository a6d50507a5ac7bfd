//! Claim registry and harness.
//!
//! Every identity under test has a registered id, a topical group and a
//! short anchor quote. [`run_claims`] executes a selection and returns the
//! verdicts in registry order; [`render_report`] turns them into JSON, CSV
//! or text.

mod report;
mod verdict;

use std::collections::BTreeSet;

use rayon::prelude::*;

pub use report::{render_report, ReportFormat, SCHEMA_VERSION};
pub use verdict::{ClaimVerdict, EvidenceItem, EvidenceKind, Status, VerdictBuilder};

use crate::andre::{appendix_a_verdicts, AndreCaps};
use crate::bijection::{class_definition_verdict, verify_split_properties, MAX_SPLIT_SIZE};
use crate::cfrac::{cfrac_verdicts, CfCaps, MAX_ORDER};
use crate::entringer::{self, Candidate, MAX_CANDIDATE_ROWS};
use crate::error::{Error, Result};
use crate::jacobi::{self, Substitution};
use crate::perm::StatVariant;

/// Claims that must pass on every run: each is either a reproduction of a
/// printed table or value, or an exact identity proved independently.
pub const ANCHOR_CLAIMS: [&str; 6] = ["ENT-TABLE", "BIJ-RT", "BIJ-PEAK", "AA-REC", "AA-BERN", "JAC-1-analytic"];

/// Two independent routes to the same quantity; these must pass as well.
pub const CROSS_ROUTE_CLAIMS: [&str; 5] = ["ENT-DIAG", "JAC-PYTH", "JAC-M1", "CF-TAN", "AA-EGF"];

/// A registered claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimSpec {
    pub id: String,
    pub group: &'static str,
    pub quote: &'static str,
}

const ENT_RECURRENCE: &str = "E(n,k)=E(n,k-1)+E(n-1,n-k)";

const BASE: &[(&str, &str, &str)] = &[
    ("ENT-TABLE", "entringer", "Entringer numbers $E(n,k)$ obtained from recurrence relation"),
    ("ENT-DEF", "entringer", "whose first value is equal to $k+1$"),
    ("ENT-DEF-B", "entringer", ENT_RECURRENCE),
    ("ENT-DEF-C", "entringer", ENT_RECURRENCE),
    ("ENT-DEF-D", "entringer", ENT_RECURRENCE),
    ("ENT-DEF-E", "entringer", ENT_RECURRENCE),
    ("ENT-ROWSUM", "entringer", "summing over $k$ gives the total number"),
    ("ENT-DIAG", "entringer", ""),
    ("SIN-EGF", "entringer", "is the sine function"),
    ("CLS-CD", "classes", "whose last (resp.\\ first) comparison is a descent"),
    ("BIJ-RT", "bijection", "one reconstructs $\\sigma$ uniquely"),
    ("BIJ-PEAK", "bijection", "the weight is multiplicative"),
    ("BIJ-PARITY", "bijection", "Deleting the last element of $L$"),
    ("SNK-WEIGHT", "snakes", "multiplies the weight by $k$"),
    ("JAC-1-analytic", "jacobi", "\\frac{d}{du}\\mathrm{sn}(u,k)=\\mathrm{cn}(u,k)\\mathrm{dn}(u,k)"),
    ("JAC-PYTH", "jacobi", ""),
    ("JAC-M1", "jacobi", ""),
    ("JAC-CONV", "jacobi", "S_n = \\sum_{j=0}^{n} C_j D_{\\,n-j}"),
    ("CF-TAN", "continued-fractions", ""),
    ("CF-SIN", "continued-fractions", "\\sin u = \\cfrac{u}{1 - \\cfrac{1^2 u^2}{3"),
    ("CF-TANH", "continued-fractions", "\\tanh u = \\cfrac{u}{1 - \\cfrac{2 u^2}{3"),
    ("CF-SN-K0", "continued-fractions", "recovers the classical sine expansion"),
    ("CF-SN", "continued-fractions", "1-\\cfrac{1^2 k^2\\,u^2}{"),
    ("AA-REC", "secant-tangent", "2A_{n+1} = \\sum_{k=0}^{n} \\binom{n}{k} A_k A_{n-k}"),
    ("AA-BERN", "secant-tangent", "A_{2n+1} = (-1)^n \\frac{2^{2n+2}(2^{2n+2}-1)}{2n+2} B_{2n+2}"),
    ("AA-STIR-MAIN", "secant-tangent", "A_n = n! \\sum_{k=0}^{n} \\frac{1}{k+1} \\binom{n}{k} 2^{-(k+1)} S(n,k)"),
    ("AA-STIR-ALT", "secant-tangent", "we obtain the alternative expression"),
    ("AA-INT", "secant-tangent", "A_n = \\frac{2 n!}{\\pi} \\int_0^{\\infty} \\frac{y^n}{\\cosh^{\\,n+1} y} \\, dy"),
    ("AA-RATIO", "secant-tangent", "we have $\\frac{6 \\times 16}{61} \\approx 1.573$"),
    ("AA-EGF", "secant-tangent", "= 2f'(x) - 1"),
];

const COMB_QUOTE: &str = "\\mathrm{sn}_k'(u)=\\mathrm{cn}_k(u)\\,\\mathrm{dn}_k(u)";
const COMB_MARKED_QUOTE: &str = "w(\\sigma) = w(\\alpha)\\, w(\\beta)\\, k";
const WEIGHT_QUOTE: &str = "where $k$ is the weight of a peak";

/// Every registered claim in report order.
pub fn registry() -> Vec<ClaimSpec> {
    let spec = |id: String, group, quote| ClaimSpec { id, group, quote };
    let mut out: Vec<ClaimSpec> = Vec::new();
    for &(id, group, quote) in BASE {
        out.push(spec(id.to_string(), group, quote));
        if id == "JAC-1-analytic" {
            for v in StatVariant::ALL {
                out.push(spec(format!("JAC-1-combinatorial-{}", v.name()), "jacobi", COMB_QUOTE));
                out.push(spec(format!("JAC-1-combinatorial-{}-marked", v.name()), "jacobi", COMB_MARKED_QUOTE));
            }
            for v in StatVariant::ALL {
                for s in Substitution::ALL {
                    out.push(spec(jacobi::weight_claim_id(v, s), "jacobi", WEIGHT_QUOTE));
                }
            }
        }
    }
    out
}

/// Builder pre-filled with the registered group and quote of `id`.
pub fn builder(id: impl Into<String>) -> VerdictBuilder {
    let id = id.into();
    let found = registry().into_iter().find(|c| c.id == id);
    debug_assert!(found.is_some(), "claim {id} is not registered");
    let (group, quote) = found.map(|c| (c.group, c.quote)).unwrap_or(("unregistered", ""));
    VerdictBuilder::new(id, group, quote)
}

/// Size limits for a harness run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Caps {
    /// Largest permutation size enumerated.
    pub enum_size: usize,
    /// Series order for the analytic and continued fraction checks.
    pub order: usize,
    /// Deepest convergent compared.
    pub cf_depth: usize,
    /// Largest secant-tangent index compared along exact routes.
    pub andre_max_n: usize,
}

pub const DEFAULT_ENUM_SIZE: usize = 9;
pub const DEFAULT_ORDER: usize = 20;

impl Default for Caps {
    fn default() -> Self {
        Caps { enum_size: DEFAULT_ENUM_SIZE, order: DEFAULT_ORDER, cf_depth: 6, andre_max_n: 12 }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        if !(3..=MAX_SPLIT_SIZE).contains(&self.enum_size) {
            return Err(Error::InvalidArgument(format!("enum size must lie in 3..={MAX_SPLIT_SIZE}")));
        }
        if !(2..=MAX_ORDER).contains(&self.order) {
            return Err(Error::InvalidArgument(format!("order must lie in 2..={MAX_ORDER}")));
        }
        if self.cf_depth == 0 || 2 * self.cf_depth + 1 > self.order {
            return Err(Error::InvalidArgument(format!(
                "continued fraction depth must lie in 1..={}",
                (self.order - 1) / 2
            )));
        }
        if !(2..=12).contains(&self.andre_max_n) {
            return Err(Error::InvalidArgument("secant-tangent index must lie in 2..=12".into()));
        }
        Ok(())
    }

    fn odd_size(&self) -> usize {
        if self.enum_size % 2 == 1 {
            self.enum_size
        } else {
            self.enum_size - 1
        }
    }

    fn jacobi_n(&self) -> usize {
        (self.odd_size() - 1) / 2
    }
}

type Producer = Box<dyn Fn(&Caps) -> Result<Vec<ClaimVerdict>> + Send + Sync>;

fn producers() -> Vec<(Vec<String>, Producer)> {
    let ids = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut out: Vec<(Vec<String>, Producer)> = vec![
        (ids(&["ENT-TABLE"]), Box::new(|_| Ok(vec![entringer::table_verdict()]))),
        (
            Candidate::ALL.iter().map(|c| c.claim_id().to_string()).collect(),
            Box::new(|c| entringer::definition_candidates_check(c.enum_size.min(MAX_CANDIDATE_ROWS))),
        ),
        (ids(&["ENT-ROWSUM"]), Box::new(|c| Ok(vec![entringer::rowsum_verdict(c.odd_size())?]))),
        (ids(&["ENT-DIAG"]), Box::new(|c| Ok(vec![entringer::diagonal_verdict(c.andre_max_n)?]))),
        (ids(&["SIN-EGF"]), Box::new(|c| Ok(vec![jacobi::sine_egf_verdict(c.jacobi_n())?]))),
        (ids(&["CLS-CD"]), Box::new(|c| Ok(vec![class_definition_verdict(c.enum_size)?]))),
        (
            ids(&["BIJ-RT", "BIJ-PEAK", "BIJ-PARITY", "SNK-WEIGHT"]),
            Box::new(|c| verify_split_properties(c.odd_size())),
        ),
        (ids(&["JAC-1-analytic", "JAC-PYTH"]), Box::new(|c| jacobi::analytic_verdicts(c.order / 2))),
        (ids(&["JAC-M1"]), Box::new(|c| Ok(vec![jacobi::modulus_one_verdict(c.order / 2)?]))),
        (ids(&["JAC-CONV"]), Box::new(|c| Ok(vec![jacobi::plain_convolution_verdict(c.jacobi_n())?]))),
        (
            ids(&["CF-TAN", "CF-SIN", "CF-TANH", "CF-SN-K0", "CF-SN"]),
            Box::new(|c| cfrac_verdicts(CfCaps { max_depth: c.cf_depth, order: c.order })),
        ),
        (
            ids(&["AA-REC", "AA-BERN", "AA-STIR-MAIN", "AA-STIR-ALT", "AA-INT", "AA-RATIO", "AA-EGF"]),
            Box::new(|c| {
                appendix_a_verdicts(AndreCaps {
                    max_n: c.andre_max_n,
                    enum_size: c.enum_size,
                    ..AndreCaps::default()
                })
            }),
        ),
    ];
    for v in StatVariant::ALL {
        for marked in [false, true] {
            let suffix = if marked { "-marked" } else { "" };
            out.push((
                vec![format!("JAC-1-combinatorial-{}{}", v.name(), suffix)],
                Box::new(move |c| Ok(vec![jacobi::combinatorial_factorization_verdict(c.jacobi_n(), v, marked)?])),
            ));
        }
        for s in Substitution::ALL {
            out.push((
                vec![jacobi::weight_claim_id(v, s)],
                Box::new(move |c| Ok(vec![jacobi::compare_combinatorial(c.jacobi_n(), v, s)?])),
            ));
        }
    }
    out
}

/// True when `pattern` names `id` exactly or is a dash-separated prefix of it.
fn selects(pattern: &str, id: &str) -> bool {
    id == pattern || (id.starts_with(pattern) && id[pattern.len()..].starts_with('-'))
}

/// Resolve a selection to registry ids. An empty selection means every claim;
/// a pattern may be an id or a family prefix such as `JAC-1`.
pub fn resolve_selection(selection: &[String]) -> Result<BTreeSet<String>> {
    let reg = registry();
    if selection.is_empty() {
        return Ok(reg.into_iter().map(|c| c.id).collect());
    }
    let mut out = BTreeSet::new();
    for pattern in selection {
        let hits: Vec<_> = reg.iter().filter(|c| selects(pattern, &c.id)).collect();
        if hits.is_empty() {
            return Err(Error::UnknownClaim(pattern.clone()));
        }
        out.extend(hits.into_iter().map(|c| c.id.clone()));
    }
    Ok(out)
}

/// Execute the selected claims and return their verdicts in registry order.
pub fn run_claims(selection: &[String], caps: &Caps) -> Result<Vec<ClaimVerdict>> {
    caps.validate()?;
    let wanted = resolve_selection(selection)?;
    let jobs: Vec<_> = producers()
        .into_iter()
        .filter(|(ids, _)| ids.iter().any(|id| wanted.contains(id)))
        .collect();
    let results: Vec<Result<Vec<ClaimVerdict>>> = jobs.par_iter().map(|(_, run)| run(caps)).collect();
    let mut verdicts = Vec::new();
    for r in results {
        verdicts.extend(r?.into_iter().filter(|v| wanted.contains(&v.claim_id)));
    }
    let order: Vec<String> = registry().into_iter().map(|c| c.id).collect();
    verdicts.sort_by_key(|v| order.iter().position(|id| *id == v.claim_id).unwrap_or(usize::MAX));
    Ok(verdicts)
}

/// Anchor and cross-route claims among `verdicts` that did not pass.
pub fn failed_anchors(verdicts: &[ClaimVerdict]) -> Vec<&ClaimVerdict> {
    verdicts
        .iter()
        .filter(|v| ANCHOR_CLAIMS.contains(&v.claim_id.as_str()) || CROSS_ROUTE_CLAIMS.contains(&v.claim_id.as_str()))
        .filter(|v| !v.passed())
        .collect()
}
