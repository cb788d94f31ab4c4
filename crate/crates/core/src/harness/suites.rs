//! Per-instance evaluation of each suite.

use serde_json::{json, Value};

use super::{CertificateCheck, CheckOptions, CheckRow, Instance, Skip, Suite};
use crate::betti::{build_i1, gpw_betti_of_lattice, koszul_betti_oracle};
use crate::duality::{alexander_dual, complex_of_ideal, stanley_reisner_ideal, verify_lattice_correspondence};
use crate::error::{Error, Result};
use crate::graphs::{chordality, verify_chordality_certificate, SimpleGraph};
use crate::homology::{is_cm_poset, is_cohen_macaulay, is_shellable, verify_shelling, Field, SimplicialComplex};
use crate::lattice::LcmLattice;
use crate::monomial::{verify_quotient_certificate, Monomial, MonomialIdeal, QuotientCertificate};
use crate::poset::{are_isomorphic_colored, Poset};
use crate::search::{Budget, Search};
use crate::shelling::{is_cl_shellable, rao_fast_path, rao_with_root_ordering, verify_rao_certificate, RaoCertificate};

type Rows = Vec<CheckRow>;

/// Largest atom count for which every atom ordering of every interval is
/// enumerated.
const ALL_ORDERINGS_ATOM_CAP: usize = 5;

pub(super) fn evaluate(suite: Suite, inst: &Instance, o: &CheckOptions) -> Rows {
    let out = match suite {
        Suite::LinearResolutionCm => linear_resolution_cm(inst, o),
        Suite::LinearQuotientsCl => linear_quotients_cl(inst, o),
        Suite::CochordalCl => cochordal_cl(inst, o),
        Suite::Froberg => froberg(inst, o),
        Suite::Polarization => polarization(inst, o),
        Suite::EagonReiner => eagon_reiner(inst, o),
        Suite::BettiOracle => betti_oracle(inst, o),
        Suite::Structural => structural(inst, o),
    };
    match out {
        Ok(rows) => rows,
        Err(e @ Error::TooLarge { .. }) => vec![skip("instance", None, e.to_string(), false)],
        Err(e) => {
            vec![CheckRow { left: Value::String(e.to_string()), ..row("error", None, Value::Null, Value::Null, false) }]
        }
    }
}

fn row(property: &str, field: Option<Field>, left: Value, right: Value, agree: bool) -> CheckRow {
    CheckRow {
        instance: 0,
        name: String::new(),
        property: property.to_string(),
        field,
        left,
        right,
        agree: Some(agree),
        skip: None,
        certificates: Vec::new(),
    }
}

fn skip(property: &str, field: Option<Field>, reason: impl Into<String>, budget: bool) -> CheckRow {
    CheckRow {
        agree: None,
        skip: Some(Skip { reason: reason.into(), budget }),
        ..row(property, field, Value::Null, Value::Null, false)
    }
}

fn certificate(kind: &str, check: std::result::Result<(), String>, certificate: Value) -> CertificateCheck {
    CertificateCheck { kind: kind.to_string(), verified: check.is_ok(), error: check.err(), certificate }
}

fn lq_certificate(ideal: &MonomialIdeal, c: &QuotientCertificate) -> CertificateCheck {
    certificate("linear-quotients", verify_quotient_certificate(ideal, c), json!(c.generators))
}

fn rao_certificate(poset: &Poset, c: &RaoCertificate) -> CertificateCheck {
    certificate("recursive-atom-ordering", verify_rao_certificate(poset, c), json!(c.root_labels()))
}

fn ideal_or_skip(inst: &Instance, property: &str) -> Result<std::result::Result<MonomialIdeal, Rows>> {
    Ok(match inst.ideal()? {
        Some(i) => Ok(i),
        None => Err(vec![skip(property, None, "edgeless graph has the zero edge ideal", false)]),
    })
}

fn graph_or_skip(inst: &Instance, property: &str) -> Result<std::result::Result<SimpleGraph, Rows>> {
    Ok(match inst.graph()? {
        Some(g) if g.edge_count() > 0 => Ok(g),
        Some(_) => Err(vec![skip(property, None, "edgeless graph has the zero edge ideal", false)]),
        None => Err(vec![skip(property, None, "not a graph instance", false)]),
    })
}

/// `Some(d)` when `I` is generated in degree `d` and its lcm-lattice Betti
/// table is `d`-linear.
fn linear_degree(ideal: &MonomialIdeal, lattice: &LcmLattice, field: Field) -> Result<Option<u32>> {
    let Some(d) = ideal.is_equigenerated() else {
        return Ok(None);
    };
    Ok(gpw_betti_of_lattice(lattice, field)?.is_d_linear(d).then_some(d))
}

fn search_label<T>(s: &Search<T>) -> Value {
    Value::String(s.label().to_string())
}

/// Full RAO search, only run when the lattice is `d`-degree graded.
fn cl_side(lattice: &LcmLattice, budget: Budget) -> Result<(Option<u32>, Option<Search<RaoCertificate>>)> {
    let graded = lattice.degree_graded_degree();
    let rao = match graded {
        Some(_) => Some(is_cl_shellable(lattice, budget)?),
        None => None,
    };
    Ok((graded, rao))
}

fn linear_resolution_cm(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const P: &str = "linear-resolution-iff-graded-cm";
    let ideal = match ideal_or_skip(inst, P)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    let lattice = LcmLattice::build(&ideal)?;
    let graded = lattice.degree_graded_degree();
    let mut rows = Vec::new();
    for &f in &o.fields {
        let left = linear_degree(&ideal, &lattice, f)?;
        let cm = match graded {
            Some(_) => Some(is_cm_poset(lattice.poset(), f)?),
            None => None,
        };
        let right = graded.filter(|_| cm == Some(true));
        rows.push(row(
            P,
            Some(f),
            json!({ "linear_degree": left }),
            json!({ "d_degree_graded": graded, "cohen_macaulay": cm }),
            left == right,
        ));
    }
    Ok(rows)
}

fn linear_quotients_cl(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const P: &str = "linear-quotients-iff-graded-cl";
    const FAST: &str = "rao-condition-two-suffices";
    let ideal = match ideal_or_skip(inst, P)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    if ideal.is_equigenerated().is_none() {
        return Ok(vec![skip(P, None, "generators of different degrees", false)]);
    }
    let lq = ideal.find_linear_quotients_order(o.budget)?;
    if lq.is_exhausted() {
        return Ok(vec![skip(P, None, "linear-quotient search exhausted its budget", true)]);
    }
    let lattice = LcmLattice::build(&ideal)?;
    let (graded, rao) = cl_side(&lattice, o.budget)?;
    if rao.as_ref().is_some_and(Search::is_exhausted) {
        return Ok(vec![skip(P, None, "atom-ordering search exhausted its budget", true)]);
    }
    let right = rao.as_ref().is_some_and(Search::is_found);
    let mut main = row(
        P,
        None,
        json!({ "linear_quotients": lq.label() }),
        json!({ "d_degree_graded": graded, "rao": rao.as_ref().map(search_label) }),
        lq.is_found() == right,
    );
    if let Search::Found(c) = &lq {
        main.certificates.push(lq_certificate(&ideal, c));
    }
    if let Some(Search::Found(c)) = &rao {
        main.certificates.push(rao_certificate(lattice.poset(), c));
    }
    let mut rows = vec![main];
    if let Some(d) = graded {
        let fast = rao_fast_path(&lattice, d, o.budget)?;
        if fast.is_exhausted() {
            rows.push(skip(FAST, None, "condition-two search exhausted its budget", true));
        } else {
            let mut r =
                row(FAST, None, search_label(&fast), json!(rao.as_ref().map(Search::label)), fast.is_found() == right);
            if let Search::Found(order) = &fast {
                // the ordering must extend to a full recursive atom ordering
                match rao_with_root_ordering(lattice.poset(), order, o.budget)? {
                    Search::Found(c) => r.certificates.push(rao_certificate(lattice.poset(), &c)),
                    other => r.certificates.push(certificate(
                        "recursive-atom-ordering",
                        Err(format!("root ordering does not extend: {}", other.label())),
                        json!(order),
                    )),
                }
            }
            rows.push(r);
        }
    }
    Ok(rows)
}

fn cochordal_certificate(g: &SimpleGraph) -> (bool, CertificateCheck) {
    let complement = g.complement();
    let cert = chordality(&complement);
    let check = verify_chordality_certificate(&complement, &cert);
    (cert.is_chordal(), certificate("complement-chordality", check, json!(cert)))
}

fn cochordal_cl(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const P: &str = "cochordal-iff-2-graded-cl";
    let g = match graph_or_skip(inst, P)? {
        Ok(g) => g,
        Err(rows) => return Ok(rows),
    };
    let ideal = inst.ideal()?.expect("graph with edges");
    let (left, cert) = cochordal_certificate(&g);
    let lattice = LcmLattice::build(&ideal)?;
    let (graded, rao) = cl_side(&lattice, o.budget)?;
    if rao.as_ref().is_some_and(Search::is_exhausted) {
        return Ok(vec![skip(P, None, "atom-ordering search exhausted its budget", true)]);
    }
    let right = graded == Some(2) && rao.as_ref().is_some_and(Search::is_found);
    let mut r = row(
        P,
        None,
        json!({ "cochordal": left }),
        json!({ "d_degree_graded": graded, "rao": rao.as_ref().map(search_label) }),
        left == right,
    );
    r.certificates.push(cert);
    if let Some(Search::Found(c)) = &rao {
        r.certificates.push(rao_certificate(lattice.poset(), c));
    }
    Ok(vec![r])
}

fn froberg(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const P: &str = "cochordal-iff-2-linear";
    const HHZ: &str = "edge-ideal-linear-iff-linear-quotients";
    let g = match graph_or_skip(inst, P)? {
        Ok(g) => g,
        Err(rows) => return Ok(rows),
    };
    let ideal = inst.ideal()?.expect("graph with edges");
    let lattice = LcmLattice::build(&ideal)?;
    let (cochordal, cert) = cochordal_certificate(&g);
    let lq = ideal.find_linear_quotients_order(o.budget)?;
    let mut rows = Vec::new();
    for &f in &o.fields {
        let linear = linear_degree(&ideal, &lattice, f)?;
        let mut r = row(
            P,
            Some(f),
            json!({ "cochordal": cochordal }),
            json!({ "linear_degree": linear }),
            cochordal == (linear == Some(2)),
        );
        r.certificates.push(cert.clone());
        rows.push(r);
        if lq.is_exhausted() {
            rows.push(skip(HHZ, Some(f), "linear-quotient search exhausted its budget", true));
        } else {
            let mut r = row(
                HHZ,
                Some(f),
                json!({ "linear_degree": linear }),
                search_label(&lq),
                linear.is_some() == lq.is_found(),
            );
            if let Search::Found(c) = &lq {
                r.certificates.push(lq_certificate(&ideal, c));
            }
            rows.push(r);
        }
    }
    Ok(rows)
}

/// The image of `m` under polarization, in the context of `polar`.
fn polarize_monomial(m: &Monomial, polar: &MonomialIdeal) -> Option<Monomial> {
    let ctx = polar.context();
    let mut support = Vec::new();
    for (j, &a) in m.exponents().iter().enumerate() {
        for k in 1..=a {
            support.push(ctx.index_of(&format!("{}_{}", m.context().names()[j], k))?);
        }
    }
    Some(Monomial::from_support(ctx, support))
}

/// Checks that `m ↦ polarization of m` is a degree-preserving order
/// isomorphism `L(I) → L(J)`.
fn explicit_polarization_iso(li: &LcmLattice, lj: &LcmLattice, polar: &MonomialIdeal) -> bool {
    if li.len() != lj.len() {
        return false;
    }
    let image: Option<Vec<usize>> =
        li.elements().iter().map(|m| polarize_monomial(m, polar).and_then(|p| lj.index_of(&p))).collect();
    let Some(phi) = image else {
        return false;
    };
    let mut seen = vec![false; lj.len()];
    for &b in &phi {
        if std::mem::replace(&mut seen[b], true) {
            return false;
        }
    }
    (0..li.len()).all(|a| li.degree(a) == lj.degree(phi[a]))
        && (0..li.len()).all(|a| (0..li.len()).all(|b| li.poset().leq(a, b) == lj.poset().leq(phi[a], phi[b])))
}

fn polarization(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const ISO: &str = "polarization-lattice-iso";
    const LQ: &str = "polarization-linear-quotients";
    const LIN: &str = "polarization-linear-resolution";
    let ideal = match ideal_or_skip(inst, ISO)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    let polar = ideal.polarize()?;
    let li = LcmLattice::build(&ideal)?;
    let lj = LcmLattice::build(&polar)?;
    let explicit = explicit_polarization_iso(&li, &lj, &polar);
    let degrees = |l: &LcmLattice| (0..l.len()).map(|a| l.degree(a) as u64).collect::<Vec<_>>();
    let generic = are_isomorphic_colored(li.poset(), lj.poset(), &degrees(&li), &degrees(&lj))?.is_some();
    // an unconditional statement: both deciders must say yes
    let mut rows = vec![row(
        ISO,
        None,
        json!({ "polarization_map_is_degree_preserving_iso": explicit }),
        json!({ "degree_colored_iso_found": generic }),
        explicit && generic,
    )];
    let lq_i = ideal.find_linear_quotients_order(o.budget)?;
    let lq_j = polar.find_linear_quotients_order(o.budget)?;
    if lq_i.is_exhausted() || lq_j.is_exhausted() {
        rows.push(skip(LQ, None, "linear-quotient search exhausted its budget", true));
    } else {
        let mut r = row(LQ, None, search_label(&lq_i), search_label(&lq_j), lq_i.is_found() == lq_j.is_found());
        for (id, s) in [(&ideal, &lq_i), (&polar, &lq_j)] {
            if let Search::Found(c) = s {
                r.certificates.push(lq_certificate(id, c));
            }
        }
        rows.push(r);
    }
    for &f in &o.fields {
        let a = linear_degree(&ideal, &li, f)?;
        let b = linear_degree(&polar, &lj, f)?;
        rows.push(row(LIN, Some(f), json!({ "linear_degree": a }), json!({ "linear_degree": b }), a == b));
    }
    Ok(rows)
}

/// `Some(n - dim - 1)` when the dual is pure, i.e. the degree `q` with
/// `dim Δ∨ = n - q - 1`.
fn dual_degree(dual: &SimplicialComplex) -> Option<u32> {
    let n = dual.vertices().len() as i64;
    dual.is_pure().then(|| (n - dual.dim().expect("non-void") - 1) as u32)
}

fn eagon_reiner(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const ER: &str = "linear-iff-dual-pure-cm";
    const SH: &str = "linear-quotients-iff-dual-pure-shellable";
    const LCM: &str = "graded-cm-lattice-iff-dual-pure-cm";
    const LCL: &str = "graded-cl-lattice-iff-dual-pure-shellable";
    const RT: &str = "stanley-reisner-round-trips";
    const CORR: &str = "lattice-iso-intersection-lattice";
    let ideal = match ideal_or_skip(inst, ER)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    if !ideal.is_squarefree() {
        return Ok(vec![skip(ER, None, "ideal is not squarefree", false)]);
    }
    let delta = complex_of_ideal(&ideal)?;
    let dual = alexander_dual(&delta)?;
    let q = dual_degree(&dual);
    let lattice = LcmLattice::build(&ideal)?;
    let graded = lattice.degree_graded_degree();
    let mut rows = Vec::new();

    let sr = stanley_reisner_ideal(&delta)?;
    let back = complex_of_ideal(&sr)?;
    let dd = alexander_dual(&dual)?;
    let trips = json!({ "ideal": sr == ideal, "complex": back == delta, "double_dual": dd == delta });
    rows.push(row(RT, None, trips.clone(), json!(true), sr == ideal && back == delta && dd == delta));
    let corr = verify_lattice_correspondence(&ideal)?;
    rows.push(row(CORR, None, json!(corr), json!(true), corr));

    for &f in &o.fields {
        let linear = linear_degree(&ideal, &lattice, f)?;
        let cm = match q {
            Some(_) => Some(is_cohen_macaulay(&dual, f)?),
            None => None,
        };
        let right = q.filter(|_| cm == Some(true));
        let right_json = json!({ "dual_pure_degree": q, "dual_cohen_macaulay": cm });
        rows.push(row(ER, Some(f), json!({ "linear_degree": linear }), right_json.clone(), linear == right));
        let lattice_cm = match graded {
            Some(_) => Some(is_cm_poset(lattice.poset(), f)?),
            None => None,
        };
        let left = graded.filter(|_| lattice_cm == Some(true));
        rows.push(row(
            LCM,
            Some(f),
            json!({ "d_degree_graded": graded, "cohen_macaulay": lattice_cm }),
            right_json,
            left == right,
        ));
    }

    let shell = match q {
        Some(_) => Some(is_shellable(&dual, o.budget)?),
        None => None,
    };
    let lq = ideal.find_linear_quotients_order(o.budget)?;
    let (_, rao) = cl_side(&lattice, o.budget)?;
    let shell_side = q.filter(|_| shell.as_ref().is_some_and(Search::is_found));
    let shell_json = json!({ "dual_pure_degree": q, "dual_shellable": shell.as_ref().map(search_label) });
    let mut shell_cert = None;
    if let Some(Search::Found(order)) = &shell {
        let labels: Vec<Vec<String>> = order.iter().map(|&k| dual.labels_of(&dual.facets()[k])).collect();
        shell_cert = Some(certificate("shelling", verify_shelling(&dual, order), json!(labels)));
    }
    if shell.as_ref().is_some_and(Search::is_exhausted) || lq.is_exhausted() {
        rows.push(skip(SH, None, "search exhausted its budget", true));
    } else {
        let left = ideal.is_equigenerated().filter(|_| lq.is_found());
        let mut r = row(
            SH,
            None,
            json!({ "degree": ideal.is_equigenerated(), "linear_quotients": lq.label() }),
            shell_json.clone(),
            left == shell_side,
        );
        if let Search::Found(c) = &lq {
            r.certificates.push(lq_certificate(&ideal, c));
        }
        r.certificates.extend(shell_cert.clone());
        rows.push(r);
    }
    if shell.as_ref().is_some_and(Search::is_exhausted) || rao.as_ref().is_some_and(Search::is_exhausted) {
        rows.push(skip(LCL, None, "search exhausted its budget", true));
    } else {
        let left = graded.filter(|_| rao.as_ref().is_some_and(Search::is_found));
        let mut r = row(
            LCL,
            None,
            json!({ "d_degree_graded": graded, "rao": rao.as_ref().map(search_label) }),
            shell_json,
            left == shell_side,
        );
        if let Some(Search::Found(c)) = &rao {
            r.certificates.push(rao_certificate(lattice.poset(), c));
        }
        r.certificates.extend(shell_cert);
        rows.push(r);
    }
    Ok(rows)
}

fn betti_oracle(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const P: &str = "lattice-betti-equals-koszul-betti";
    let ideal = match ideal_or_skip(inst, P)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    let lattice = LcmLattice::build(&ideal)?;
    let mut rows = Vec::new();
    for &f in &o.fields {
        let a = gpw_betti_of_lattice(&lattice, f)?;
        let b = koszul_betti_oracle(&ideal, f)?;
        rows.push(row(P, Some(f), json!(a.totals()), json!(b.totals()), a == b));
    }
    Ok(rows)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

enum Outcome {
    Holds(bool),
    Budget,
}

/// Whether every ordering of the atoms of every interval of `poset` is a
/// recursive atom ordering of that interval.
fn every_atom_ordering_is_rao(poset: &Poset, budget: Budget) -> Result<Outcome> {
    for x in 0..poset.len() {
        for y in 0..poset.len() {
            if !poset.lt(x, y) {
                continue;
            }
            let interval = poset.interval(x, y)?;
            let atoms = interval.atoms();
            for order in permutations(&atoms) {
                match rao_with_root_ordering(&interval, &order, budget)? {
                    Search::Found(_) => {}
                    Search::NotFound => return Ok(Outcome::Holds(false)),
                    Search::Exhausted => return Ok(Outcome::Budget),
                }
            }
        }
    }
    Ok(Outcome::Holds(true))
}

fn structural(inst: &Instance, o: &CheckOptions) -> Result<Rows> {
    const GRADED: &str = "linear-implies-d-degree-graded";
    const SUPER: &str = "super-atoms-are-first-betti-degrees";
    const I1: &str = "i1-has-linear-resolution";
    const LQLIN: &str = "linear-quotients-imply-linear";
    const TSM: &str = "d-graded-upper-intervals-totally-semimodular";
    const RAO: &str = "totally-semimodular-iff-every-ordering-rao";
    let ideal = match ideal_or_skip(inst, GRADED)? {
        Ok(i) => i,
        Err(rows) => return Ok(rows),
    };
    let lattice = LcmLattice::build(&ideal)?;
    let poset = lattice.poset();
    let squarefree = ideal.is_squarefree();
    let lq = ideal.find_linear_quotients_order(o.budget)?;
    let mut rows = Vec::new();
    for &f in &o.fields {
        let fs = Some(f);
        let table = gpw_betti_of_lattice(&lattice, f)?;
        let linear = ideal.is_equigenerated().filter(|&d| table.is_d_linear(d));
        match linear {
            Some(d) if squarefree => {
                let g = lattice.is_d_degree_graded(d);
                rows.push(row(GRADED, fs, json!({ "linear_degree": d }), json!({ "d_degree_graded": g }), g));
            }
            _ => rows.push(skip(GRADED, fs, "no linear resolution or not squarefree", false)),
        }
        match linear {
            Some(d) => {
                let supers: Vec<Monomial> =
                    lattice.super_atoms().into_iter().map(|a| lattice.element(a).clone()).collect();
                let mut supers_sorted = supers.clone();
                supers_sorted.sort();
                let first = table.multidegrees(1);
                let ok = supers_sorted == first && supers.iter().all(|m| m.degree() == d + 1);
                let show = |v: &[Monomial]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
                rows.push(row(SUPER, fs, json!(show(&supers_sorted)), json!(show(&first)), ok));
            }
            None => rows.push(skip(SUPER, fs, "no linear resolution", false)),
        }
        match linear {
            Some(d) if squarefree && !table.multidegrees(1).is_empty() => {
                let i1 = build_i1(&ideal, f)?;
                let l1 = LcmLattice::build(&i1)?;
                let d1 = linear_degree(&i1, &l1, f)?;
                rows.push(row(
                    I1,
                    fs,
                    json!({ "degree": d }),
                    json!({ "i1": i1.to_string(), "linear_degree": d1 }),
                    d1 == Some(d + 1),
                ));
            }
            _ => rows.push(skip(I1, fs, "no linear resolution, not squarefree, or I1 is zero", false)),
        }
        match (&lq, ideal.is_equigenerated()) {
            (Search::Found(_), Some(d)) => {
                rows.push(row(
                    LQLIN,
                    fs,
                    json!({ "degree": d, "linear_quotients": true }),
                    json!({ "linear_degree": linear }),
                    linear == Some(d),
                ));
            }
            (Search::Exhausted, _) => rows.push(skip(LQLIN, fs, "linear-quotient search exhausted its budget", true)),
            _ => rows.push(skip(LQLIN, fs, "no linear quotients or not equigenerated", false)),
        }
    }
    match lattice.degree_graded_degree() {
        Some(d) if squarefree => {
            let bad: Vec<(String, String)> = (1..lattice.len())
                .flat_map(|x| (x..lattice.len()).map(move |y| (x, y)))
                .filter(|&(x, y)| poset.leq(x, y))
                .filter_map(|(x, y)| match poset.interval(x, y) {
                    Ok(iv) if iv.is_totally_semimodular() => None,
                    _ => Some((lattice.element(x).to_string(), lattice.element(y).to_string())),
                })
                .collect();
            rows.push(row(
                TSM,
                None,
                json!({ "d_degree_graded": d }),
                json!({ "failing_intervals": bad }),
                bad.is_empty(),
            ));
        }
        _ => rows.push(skip(TSM, None, "not squarefree or not d-degree graded", false)),
    }
    if !poset.is_graded() {
        rows.push(skip(RAO, None, "lattice is not graded", false));
    } else if lattice.atoms().len() > ALL_ORDERINGS_ATOM_CAP {
        rows.push(skip(RAO, None, format!("more than {ALL_ORDERINGS_ATOM_CAP} atoms"), false));
    } else {
        let tsm = poset.is_totally_semimodular();
        match every_atom_ordering_is_rao(poset, o.budget)? {
            Outcome::Holds(all) => rows.push(row(
                RAO,
                None,
                json!({ "totally_semimodular": tsm }),
                json!({ "every_ordering_rao": all }),
                tsm == all,
            )),
            Outcome::Budget => rows.push(skip(RAO, None, "atom-ordering search exhausted its budget", true)),
        }
    }
    Ok(rows)
}
