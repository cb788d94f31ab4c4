//! The Stanley-Reisner dictionary between squarefree monomial ideals and
//! simplicial complexes on the variable set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::homology::SimplicialComplex;
use crate::lattice::LcmLattice;
use crate::monomial::{Monomial, MonomialIdeal, VariableContext};
use crate::poset::{are_isomorphic, Poset};

/// Largest vertex count for which `complex_of_ideal` enumerates subsets.
pub const SUBSET_ENUMERATION_CAP: usize = 24;

/// Minimal non-faces of `complex`, each sorted, in canonical order.
pub fn minimal_non_faces(complex: &SimplicialComplex) -> Result<Vec<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = complex.vertices().len();
    let mut found = BTreeSet::new();
    for face in complex.faces_by_size().into_iter().flatten() {
        for v in (0..n).filter(|v| !face.contains(v)) {
            let mut cand = face.clone();
            cand.push(v);
            cand.sort_unstable();
            if complex.contains_face(&cand) {
                continue;
            }
            let minimal = (0..cand.len()).all(|drop| {
                let sub: Vec<usize> = cand.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &u)| u).collect();
                complex.contains_face(&sub)
            });
            if minimal {
                found.insert(cand);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// `I_Δ`, generated by `x^F` over the minimal non-faces `F`, in the
/// polynomial ring whose variables are the vertices of `complex`.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let ctx = VariableContext::new(complex.vertices().iter().map(|v| variable_name(v)))?;
    let non_faces = minimal_non_faces(complex)?;
    if non_faces.is_empty() {
        return Err(Error::ZeroIdeal("the full simplex has no non-faces".into()));
    }
    let gens = non_faces.into_iter().map(|f| Monomial::from_support(&ctx, f)).collect();
    MonomialIdeal::new(&ctx, gens)
}

/// `Δ(I) = {F : x^F ∉ I}` for a squarefree ideal, on the variables of `I`.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.context().len();
    if n > SUBSET_ENUMERATION_CAP {
        return Err(Error::TooLarge { what: "variable set", size: n, cap: SUBSET_ENUMERATION_CAP });
    }
    let gens: Vec<u32> =
        ideal.generators().iter().map(|g| g.support().into_iter().fold(0u32, |m, v| m | 1 << v)).collect();
    let is_face = |f: u32| gens.iter().all(|&g| g & !f != 0);
    let facets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|&f| is_face(f) && (0..n).all(|v| f >> v & 1 == 1 || !is_face(f | 1 << v)))
        .map(|f| (0..n).filter(|v| f >> v & 1 == 1).collect())
        .collect();
    SimplicialComplex::new(ideal.context().names().iter().map(|v| vertex_label(v)).collect(), facets)
}

/// Numeric vertex `i` becomes the variable `xi`; other labels are kept.
pub fn variable_name(vertex: &str) -> String {
    if !vertex.is_empty() && vertex.bytes().all(|b| b.is_ascii_digit()) {
        format!("x{vertex}")
    } else {
        vertex.to_string()
    }
}

/// Inverse of [`variable_name`]: `xi` becomes vertex `i`.
pub fn vertex_label(variable: &str) -> String {
    match variable.strip_prefix('x') {
        Some(i) if !i.is_empty() && i.bytes().all(|b| b.is_ascii_digit()) => i.to_string(),
        _ => variable.to_string(),
    }
}

/// Alexander dual `Δ^∨ = {[n] \ F : F ∉ Δ}`, whose facets are the complements
/// of the minimal non-faces of `Δ`.
pub fn alexander_dual(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = complex.vertices().len();
    let non_faces = minimal_non_faces(complex)?;
    if non_faces.is_empty() {
        return Err(Error::FullSimplex);
    }
    let facets = non_faces.iter().map(|f| (0..n).filter(|v| !f.contains(v)).collect()).collect();
    SimplicialComplex::new(complex.vertices().to_vec(), facets)
}

/// Intersections of nonempty sets of facets, together with the full vertex
/// set as the bottom, ordered by reverse inclusion.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    pub sets: Vec<Vec<usize>>,
    pub poset: Poset,
}

pub fn intersection_lattice(complex: &SimplicialComplex) -> Result<IntersectionLattice> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let facets = complex.facets();
    let mut sets: BTreeSet<Vec<usize>> = facets.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = sets.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for f in facets {
            let meet: Vec<usize> = s.iter().copied().filter(|v| f.contains(v)).collect();
            if sets.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    sets.insert((0..complex.vertices().len()).collect());
    let mut sets: Vec<Vec<usize>> = sets.into_iter().collect();
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let labels = sets.iter().map(|s| format!("{{{}}}", complex.labels_of(s).join(","))).collect();
    let poset = Poset::from_relation(labels, |a, b| sets[b].iter().all(|v| sets[a].contains(v)))?;
    Ok(IntersectionLattice { sets, poset })
}

/// Checks `L(I) ≅ L_{Δ(I)^∨}` for a squarefree ideal: the map
/// `m ↦ [n] \ supp(m)` must be an order isomorphism onto the intersection
/// lattice, and the generic isomorphism search must agree.
pub fn verify_lattice_correspondence(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let lattice = LcmLattice::build(ideal)?;
    let dual = alexander_dual(&complex_of_ideal(ideal)?)?;
    let inter = intersection_lattice(&dual)?;
    let n = ideal.context().len();
    let image: Vec<Option<usize>> = lattice
        .elements()
        .iter()
        .map(|m| {
            let comp: Vec<usize> = (0..n).filter(|&v| m.exponents()[v] == 0).collect();
            inter.sets.iter().position(|s| *s == comp)
        })
        .collect();
    if image.iter().any(Option::is_none) || lattice.len() != inter.sets.len() {
        return Ok(false);
    }
    let phi: Vec<usize> = image.into_iter().map(Option::unwrap).collect();
    let mut targets = phi.clone();
    targets.sort_unstable();
    targets.dedup();
    if targets.len() != phi.len() {
        return Ok(false);
    }
    let lp = lattice.poset();
    let explicit =
        (0..lattice.len()).all(|a| (0..lattice.len()).all(|b| lp.leq(a, b) == inter.poset.leq(phi[a], phi[b])));
    Ok(explicit && are_isomorphic(lp, &inter.poset)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_ideal;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            (1..=n).map(|i| format!("x{i}")).collect(),
            facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn stanley_reisner_examples() {
        let hollow = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(stanley_reisner_ideal(&hollow).unwrap().to_string(), "(x1*x2*x3)");
        assert_eq!(stanley_reisner_ideal(&cx(3, &[&[1, 2], &[3]])).unwrap().to_string(), "(x1*x3, x2*x3)");
        assert_eq!(stanley_reisner_ideal(&cx(2, &[&[1], &[2]])).unwrap().to_string(), "(x1*x2)");
        assert!(matches!(stanley_reisner_ideal(&cx(2, &[&[1, 2]])), Err(Error::ZeroIdeal(_))));
        // ghost vertex 3 is a minimal non-face
        assert_eq!(stanley_reisner_ideal(&cx(3, &[&[1, 2]])).unwrap().to_string(), "(x3)");
    }

    #[test]
    fn complex_of_ideal_examples() {
        let d = complex_of_ideal(&parse_ideal("x1*x2").unwrap()).unwrap();
        assert_eq!(d.facets(), &[vec![0], vec![1]]);
        assert_eq!(d.vertices(), ["1", "2"]);
        let d = complex_of_ideal(&parse_ideal("x*y, y*z").unwrap()).unwrap();
        assert_eq!(d.facet_labels(), [vec!["x".to_string(), "z".to_string()], vec!["y".to_string()]]);
        let d = complex_of_ideal(&parse_ideal("x1*x2*x3").unwrap()).unwrap();
        assert_eq!(d.facets().len(), 3);
        assert!(d.facets().iter().all(|f| f.len() == 2));
        assert!(matches!(complex_of_ideal(&parse_ideal("x^2").unwrap()), Err(Error::NotSquarefree)));
    }

    #[test]
    fn alexander_dual_examples() {
        let d = alexander_dual(&cx(3, &[&[1, 2], &[3]])).unwrap();
        assert_eq!(d.facets(), &[vec![0], vec![1]]);
        let hollow = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(alexander_dual(&hollow).unwrap().is_empty_complex());
        assert_eq!(alexander_dual(&alexander_dual(&hollow).unwrap()).unwrap(), hollow);
        assert!(matches!(alexander_dual(&cx(2, &[&[1, 2]])), Err(Error::FullSimplex)));
        assert!(matches!(alexander_dual(&SimplicialComplex::void(vec![])), Err(Error::VoidComplex)));
    }

    #[test]
    fn intersection_lattice_examples() {
        let vars = ["x", "y", "z"].map(String::from).to_vec();
        let d = SimplicialComplex::new(vars, vec![vec![0], vec![2]]).unwrap();
        let l = intersection_lattice(&d).unwrap();
        assert_eq!(l.poset.labels(), ["{x,y,z}", "{x}", "{z}", "{}"]);
        assert_eq!(l.poset.covers().len(), 4);
        let single = intersection_lattice(&cx(3, &[&[1, 2]])).unwrap();
        assert_eq!(single.poset.len(), 2);
        let two_edges = intersection_lattice(&cx(3, &[&[1, 2], &[2, 3]])).unwrap();
        assert_eq!(two_edges.poset.labels(), ["{x1,x2,x3}", "{x1,x2}", "{x2,x3}", "{x2}"]);
    }

    #[test]
    fn correspondence_examples() {
        assert!(verify_lattice_correspondence(&parse_ideal("x*y, y*z").unwrap()).unwrap());
        assert!(verify_lattice_correspondence(&parse_ideal("x1*x2*x3").unwrap()).unwrap());
        assert!(verify_lattice_correspondence(&parse_ideal("x1").unwrap()).unwrap());
    }
}
