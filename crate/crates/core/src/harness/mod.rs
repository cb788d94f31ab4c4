//! Corpus generation and two-sided theorem checks.
//!
//! A check evaluates both sides of an equivalence on every corpus instance
//! with independent deciders and records whether they agree. Instances are
//! evaluated in parallel and reported in corpus order, so equal inputs give
//! byte-identical reports.

mod corpus;
mod suites;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::homology::Field;
use crate::search::Budget;

pub use corpus::{
    named_graphs, random_non_squarefree, random_squarefree, sampled_squarefree, CorpusPart, CorpusSpec, Instance,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    /// Linear resolution ⟺ d-degree graded and Cohen-Macaulay lattice.
    #[serde(rename = "theorem-1-1")]
    LinearResolutionCm,
    /// Linear quotients ⟺ d-degree graded and CL-shellable lattice.
    #[serde(rename = "theorem-1-2")]
    LinearQuotientsCl,
    /// Co-chordal graph ⟺ 2-degree graded and CL-shellable lattice.
    #[serde(rename = "corollary-1-3")]
    CochordalCl,
    /// Fröberg and Herzog-Hibi-Zheng for edge ideals.
    #[serde(rename = "froberg")]
    Froberg,
    #[serde(rename = "polarization")]
    Polarization,
    /// Eagon-Reiner with degrees, linear quotients vs shellable duals, and
    /// the dictionary round trips.
    #[serde(rename = "eagon-reiner")]
    EagonReiner,
    #[serde(rename = "betti-oracle")]
    BettiOracle,
    #[serde(rename = "structural")]
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::LinearResolutionCm,
        Suite::LinearQuotientsCl,
        Suite::CochordalCl,
        Suite::Froberg,
        Suite::Polarization,
        Suite::EagonReiner,
        Suite::BettiOracle,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LinearResolutionCm => "theorem-1-1",
            Suite::LinearQuotientsCl => "theorem-1-2",
            Suite::CochordalCl => "corollary-1-3",
            Suite::Froberg => "froberg",
            Suite::Polarization => "polarization",
            Suite::EagonReiner => "eagon-reiner",
            Suite::BettiOracle => "betti-oracle",
            Suite::Structural => "structural",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "linear-resolution-cm" => Some(Suite::LinearResolutionCm),
            "linear-quotients-cl" => Some(Suite::LinearQuotientsCl),
            "cochordal-cl" => Some(Suite::CochordalCl),
            "hhz" => Some(Suite::Froberg),
            _ => None,
        };
        alias
            .or_else(|| Suite::ALL.into_iter().find(|x| x.name() == s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub fields: Vec<Field>,
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { fields: vec![Field::Rationals, Field::Prime(2)], budget: Budget::default(), jobs: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub reason: String,
    /// The node budget ran out, as opposed to the row not applying.
    pub budget: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub kind: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub certificate: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub instance: usize,
    pub name: String,
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub left: Value,
    pub right: Value,
    /// `None` exactly when the row was skipped.
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip: Option<Skip>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub certificates: Vec<CertificateCheck>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub rows: usize,
    pub checked: usize,
    pub agreed: usize,
    pub disagreements: usize,
    pub skipped_budget: usize,
    pub skipped_not_applicable: usize,
    pub certificates_checked: usize,
    pub certificate_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub version: String,
    pub suite: Suite,
    pub corpus: String,
    pub fields: Vec<Field>,
    pub budget: u64,
    pub summary: Summary,
    pub rows: Vec<CheckRow>,
    /// Full instances behind every disagreement or failed certificate.
    pub failures: Vec<Instance>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.summary.disagreements == 0 && self.summary.certificate_failures == 0
    }

    /// Per-property counts as a plain-text table.
    pub fn summary_table(&self) -> String {
        let mut props: Vec<(&str, Option<Field>)> = Vec::new();
        for r in &self.rows {
            if !props.contains(&(r.property.as_str(), r.field)) {
                props.push((r.property.as_str(), r.field));
            }
        }
        let mut out = format!(
            "suite {} on {} (version {})\n{:<40} {:>6} {:>8} {:>8} {:>9} {:>10}\n",
            self.suite, self.corpus, self.version, "property", "field", "checked", "agreed", "disagree", "skipped"
        );
        for (p, f) in props {
            let rows: Vec<&CheckRow> = self.rows.iter().filter(|r| r.property == p && r.field == f).collect();
            let checked = rows.iter().filter(|r| r.agree.is_some()).count();
            let agreed = rows.iter().filter(|r| r.agree == Some(true)).count();
            let skipped = rows.len() - checked;
            let field = f.map(|f| f.to_string()).unwrap_or_else(|| "-".into());
            out += &format!("{p:<40} {field:>6} {checked:>8} {agreed:>8} {:>9} {skipped:>10}\n", checked - agreed);
        }
        let s = &self.summary;
        out += &format!(
            "total: {} instances, {} checked, {} disagreements, {} budget skips, {} not applicable, {}/{} certificates verified\n",
            s.instances,
            s.checked,
            s.disagreements,
            s.skipped_budget,
            s.skipped_not_applicable,
            s.certificates_checked - s.certificate_failures,
            s.certificates_checked
        );
        out
    }
}

/// Runs `suite` over every instance of `corpus`.
pub fn check(suite: Suite, corpus: &CorpusSpec, options: &CheckOptions) -> Result<CheckReport> {
    let instances = corpus.instances()?;
    run(suite, &corpus.to_string(), &instances, options)
}

/// Runs `suite` on explicit instances, e.g. one instance taken from the
/// failure list of an earlier report.
pub fn run(suite: Suite, corpus: &str, instances: &[Instance], options: &CheckOptions) -> Result<CheckReport> {
    let eval = || -> Vec<Vec<CheckRow>> {
        instances
            .par_iter()
            .enumerate()
            .map(|(k, inst)| {
                let mut rows = suites::evaluate(suite, inst, options);
                for r in &mut rows {
                    r.instance = k;
                    r.name = inst.name().to_string();
                }
                rows
            })
            .collect()
    };
    let per_instance = match options.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(eval),
        None => eval(),
    };
    let mut summary = Summary { instances: instances.len(), ..Summary::default() };
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (k, inst_rows) in per_instance.into_iter().enumerate() {
        let mut failed = false;
        for r in &inst_rows {
            summary.rows += 1;
            match (&r.agree, &r.skip) {
                (Some(true), _) => {
                    summary.checked += 1;
                    summary.agreed += 1;
                }
                (Some(false), _) => {
                    summary.checked += 1;
                    summary.disagreements += 1;
                    failed = true;
                }
                (None, Some(s)) if s.budget => summary.skipped_budget += 1,
                (None, _) => summary.skipped_not_applicable += 1,
            }
            for c in &r.certificates {
                summary.certificates_checked += 1;
                if !c.verified {
                    summary.certificate_failures += 1;
                    failed = true;
                }
            }
        }
        if failed {
            failures.push(instances[k].clone());
        }
        rows.extend(inst_rows);
    }
    Ok(CheckReport {
        version: crate::VERSION.to_string(),
        suite,
        corpus: corpus.to_string(),
        fields: options.fields.clone(),
        budget: options.budget.max_nodes,
        summary,
        rows,
        failures,
    })
}
