//! Report structures shared by the subcommands.

use lcmlat::betti::{gpw_betti_of_lattice, BettiJson};
use lcmlat::duality::{alexander_dual, complex_of_ideal};
use lcmlat::graphs::{
    chordality, edge_ideal, verify_chordality_certificate, ChordalityCertificate, GraphJson, SimpleGraph,
};
use lcmlat::homology::{is_cm_poset, is_shellable, verify_shelling, Field, SimplicialComplex};
use lcmlat::lattice::LcmLattice;
use lcmlat::monomial::{verify_quotient_certificate, IdealJson, MonomialIdeal, QuotientCertificate};
use lcmlat::shelling::{is_cl_shellable, verify_rao_certificate, RaoCertificate};
use lcmlat::{Budget, Error, Result, Search, VERSION};
use serde::{Deserialize, Serialize};

/// A replayable certificate. Shellings name facets by vertex labels so they
/// survive re-parsing of the complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "certificate", rename_all = "kebab-case")]
pub enum Certificate {
    LinearQuotients(QuotientCertificate),
    Rao(RaoCertificate),
    Shelling(Vec<Vec<String>>),
    Chordality(ChordalityCertificate),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::LinearQuotients(_) => "linear-quotients",
            Certificate::Rao(_) => "rao",
            Certificate::Shelling(_) => "shelling",
            Certificate::Chordality(_) => "chordality",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LatticeSummary {
    pub size: usize,
    pub atoms: usize,
    pub super_atoms: usize,
    pub graded: bool,
    pub degree_graded: bool,
    /// `d` when the lattice is d-degree graded.
    pub d_degree_graded: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct DualSummary {
    pub complex: SimplicialComplex,
    pub alexander_dual: SimplicialComplex,
    pub pure: bool,
    pub dimension: Option<i64>,
    /// Shelling search status; `null` when the dual is not pure.
    pub shellable: Option<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct IdealReport {
    pub version: &'static str,
    pub field: Field,
    pub budget: u64,
    pub ideal: IdealJson,
    pub minimal_generators: Vec<String>,
    pub equigenerated_degree: Option<u32>,
    pub squarefree: bool,
    pub lattice: LatticeSummary,
    pub cohen_macaulay: bool,
    pub cl_shellable: &'static str,
    pub linear_quotients: &'static str,
    pub linear_quotient_order: Option<Vec<String>>,
    pub betti: BettiJson,
    pub betti_grid: String,
    pub linear_resolution: bool,
    pub graded_and_cohen_macaulay: bool,
    pub graded_and_cl_shellable: Option<bool>,
    pub dual: Option<DualSummary>,
    pub certificates: Vec<Certificate>,
    #[serde(skip)]
    pub exhausted: bool,
}

pub fn analyze_ideal(ideal: &MonomialIdeal, field: Field, budget: Budget) -> Result<IdealReport> {
    let lattice = LcmLattice::build(ideal)?;
    let d_graded = lattice.degree_graded_degree();
    let cm = is_cm_poset(lattice.poset(), field)?;
    let cl = is_cl_shellable(&lattice, budget)?;
    let lq = ideal.find_linear_quotients_order(budget)?;
    let betti = gpw_betti_of_lattice(&lattice, field)?;
    let equi = ideal.is_equigenerated();
    let linear = equi.is_some_and(|d| betti.is_d_linear(d));

    let mut certificates = Vec::new();
    let mut exhausted = cl.is_exhausted() || lq.is_exhausted();
    if let Search::Found(c) = &lq {
        certificates.push(Certificate::LinearQuotients(c.clone()));
    }
    if let Search::Found(c) = &cl {
        certificates.push(Certificate::Rao(c.clone()));
    }
    let dual = if ideal.is_squarefree() {
        let (summary, shelling) = dual_summary(ideal, budget)?;
        exhausted |= summary.shellable == Some("exhausted");
        certificates.extend(shelling.map(Certificate::Shelling));
        Some(summary)
    } else {
        None
    };

    Ok(IdealReport {
        version: VERSION,
        field,
        budget: budget.max_nodes,
        ideal: IdealJson::from(ideal),
        minimal_generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        equigenerated_degree: equi,
        squarefree: ideal.is_squarefree(),
        lattice: LatticeSummary {
            size: lattice.len(),
            atoms: lattice.atoms().len(),
            super_atoms: lattice.super_atoms().len(),
            graded: lattice.poset().is_graded(),
            degree_graded: lattice.is_degree_graded(),
            d_degree_graded: d_graded,
        },
        cohen_macaulay: cm,
        cl_shellable: cl.label(),
        linear_quotients: lq.label(),
        linear_quotient_order: lq.as_ref().found().map(|c| c.generators.clone()),
        betti_grid: betti.grid(),
        betti: betti.to_json(),
        linear_resolution: linear,
        graded_and_cohen_macaulay: d_graded.is_some() && d_graded == equi && cm,
        graded_and_cl_shellable: cl.verdict().map(|v| v && d_graded.is_some() && d_graded == equi),
        dual,
        certificates,
        exhausted,
    })
}

fn dual_summary(ideal: &MonomialIdeal, budget: Budget) -> Result<(DualSummary, Option<Vec<Vec<String>>>)> {
    let complex = complex_of_ideal(ideal)?;
    let dual = alexander_dual(&complex)?;
    let (shellable, order) = if dual.is_pure() {
        let s = is_shellable(&dual, budget)?;
        let order = s.as_ref().found().map(|o| o.iter().map(|&f| dual.labels_of(&dual.facets()[f])).collect());
        (Some(s.label()), order)
    } else {
        (None, None)
    };
    let summary = DualSummary { pure: dual.is_pure(), dimension: dual.dim(), complex, alexander_dual: dual, shellable };
    Ok((summary, order))
}

#[derive(Debug, Serialize)]
pub struct GraphReport {
    pub version: &'static str,
    pub graph: GraphJson,
    pub graph6: String,
    pub complement: GraphJson,
    pub complement_graph6: String,
    pub chordal: bool,
    pub chordality: ChordalityCertificate,
    pub cochordal: bool,
    pub complement_chordality: ChordalityCertificate,
    /// `null` for an edgeless graph, whose edge ideal is zero.
    pub edge_ideal: Option<IdealReport>,
    pub certificates: Vec<Certificate>,
}

pub fn analyze_graph(g: &SimpleGraph, field: Field, budget: Budget) -> Result<GraphReport> {
    let co = g.complement();
    let cert = chordality(g);
    let co_cert = chordality(&co);
    let edge_ideal = if g.edge_count() == 0 { None } else { Some(analyze_ideal(&edge_ideal(g)?, field, budget)?) };
    Ok(GraphReport {
        version: VERSION,
        graph: g.to_json(),
        graph6: g.to_graph6(),
        complement: co.to_json(),
        complement_graph6: co.to_graph6(),
        chordal: cert.is_chordal(),
        cochordal: co_cert.is_chordal(),
        certificates: vec![Certificate::Chordality(cert.clone())],
        chordality: cert,
        complement_chordality: co_cert,
        edge_ideal,
    })
}

/// What a certificate is replayed against.
pub enum Target {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
    Graph(SimpleGraph),
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub kind: &'static str,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn verify(cert: &Certificate, target: &Target) -> Result<Verification> {
    let outcome = match (cert, target) {
        (Certificate::LinearQuotients(c), Target::Ideal(i)) => verify_quotient_certificate(i, c),
        (Certificate::Rao(c), Target::Ideal(i)) => verify_rao_certificate(LcmLattice::build(i)?.poset(), c),
        (Certificate::Shelling(facets), Target::Complex(c)) => verify_labelled_shelling(c, facets),
        (Certificate::Shelling(facets), Target::Ideal(i)) => {
            verify_labelled_shelling(&alexander_dual(&complex_of_ideal(i)?)?, facets)
        }
        (Certificate::Chordality(c), Target::Graph(g)) => verify_chordality_certificate(g, c),
        _ => {
            return Err(Error::Precondition(format!(
                "a {} certificate cannot be checked against this input",
                cert.kind()
            )))
        }
    };
    Ok(Verification { kind: cert.kind(), verified: outcome.is_ok(), error: outcome.err() })
}

fn verify_labelled_shelling(complex: &SimplicialComplex, facets: &[Vec<String>]) -> Result<(), String> {
    let mut ordering = Vec::with_capacity(facets.len());
    for labels in facets {
        let mut want = labels.clone();
        want.sort();
        let found = complex.facets().iter().position(|f| {
            let mut have = complex.labels_of(f);
            have.sort();
            have == want
        });
        ordering.push(found.ok_or_else(|| format!("{labels:?} is not a facet"))?);
    }
    verify_shelling(complex, &ordering)
}
