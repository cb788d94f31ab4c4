mod common;

use common::{ideal_strategy, squarefree_strategy};
use lcmlat::lattice::LcmLattice;
use lcmlat::monomial::{Monomial, MonomialIdeal};
use lcmlat::poset::examples::{boolean, chain, diamond, pentagon};
use lcmlat::poset::{are_isomorphic, are_isomorphic_colored, Poset};
use proptest::prelude::*;

fn subset_lcms(i: &MonomialIdeal) -> Vec<Monomial> {
    let g = i.generators();
    let mut out: Vec<Monomial> = (0u32..1 << g.len())
        .map(|mask| {
            (0..g.len()).filter(|k| mask >> k & 1 == 1).fold(Monomial::one(i.context()), |acc, k| acc.lcm(&g[k]))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn brute_covers(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if p.lt(a, b) && !(0..n).any(|c| p.lt(a, c) && p.lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

fn permuted(p: &Poset, perm: &[usize]) -> Poset {
    // element perm[i] of the copy plays the role of element i of p
    let mut inv = vec![0; perm.len()];
    for (i, &q) in perm.iter().enumerate() {
        inv[q] = i;
    }
    let labels = (0..p.len()).map(|q| p.label(inv[q]).to_string()).collect();
    Poset::from_relation(labels, |a, b| p.leq(inv[a], inv[b])).unwrap()
}

fn is_isomorphism(p: &Poset, q: &Poset, phi: &[usize]) -> bool {
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(phi[a], phi[b])))
}

#[test]
fn small_posets() {
    assert!(!pentagon().is_graded());
    assert!(!pentagon().is_semimodular());
    assert!(diamond().is_totally_semimodular());
    assert!(boolean(3).is_totally_semimodular() && boolean(3).is_graded());
    assert!(chain(4).is_totally_semimodular());
    assert!(are_isomorphic(&chain(3), &diamond()).unwrap().is_none());
    assert!(are_isomorphic(&pentagon(), &pentagon()).unwrap().is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn elements_are_the_subset_lcms(i in ideal_strategy(4, 2, 7)) {
        let l = LcmLattice::build(&i).unwrap();
        prop_assert_eq!(l.elements().to_vec(), subset_lcms(&i));
        prop_assert!(l.element(l.bottom()).is_one());
        prop_assert_eq!(l.element(l.top()), &i.lcm_of_generators());
        let atoms: Vec<Monomial> = l.atoms().iter().map(|&a| l.element(a).clone()).collect();
        prop_assert_eq!(atoms, i.generators().to_vec());
    }

    #[test]
    fn order_is_divisibility_and_join_is_lcm(i in ideal_strategy(3, 3, 5)) {
        let l = LcmLattice::build(&i).unwrap();
        let p = l.poset();
        for a in 0..l.len() {
            for b in 0..l.len() {
                prop_assert_eq!(p.leq(a, b), l.element(a).divides(l.element(b)));
                prop_assert_eq!(l.element(l.join(a, b)), &l.element(a).lcm(l.element(b)));
                prop_assert_eq!(p.join_witnesses(a, b), vec![l.join(a, b)]);
            }
        }
        prop_assert!(p.is_lattice().unwrap());
        let mut covers = l.covers();
        covers.sort_unstable();
        prop_assert_eq!(covers, brute_covers(p));
    }

    #[test]
    fn degree_graded_matches_cover_degrees(i in ideal_strategy(4, 2, 6)) {
        let l = LcmLattice::build(&i).unwrap();
        let brute = brute_covers(l.poset()).iter().filter(|&&(a, _)| a != l.bottom()).all(|&(a, b)| l.degree(b) == l.degree(a) + 1);
        prop_assert_eq!(l.is_degree_graded(), brute);
        let d = i.generators()[0].degree();
        prop_assert_eq!(l.is_d_degree_graded(d), brute && i.generators().iter().all(|g| g.degree() == d));
        // super atoms: elements covering some atom
        let supers: Vec<usize> = (0..l.len())
            .filter(|&b| l.atoms().iter().any(|&a| brute_covers(l.poset()).contains(&(a, b))))
            .collect();
        prop_assert_eq!(l.super_atoms(), supers);
    }

    #[test]
    fn d_degree_graded_squarefree_intervals_are_totally_semimodular(i in squarefree_strategy(6, 6)) {
        let l = LcmLattice::build(&i).unwrap();
        if l.degree_graded_degree().is_some() {
            let p = l.poset();
            for x in 1..l.len() {
                for y in x..l.len() {
                    if p.leq(x, y) {
                        prop_assert!(p.interval(x, y).unwrap().is_totally_semimodular());
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_search_finds_relabellings(i in ideal_strategy(3, 2, 5), seed in any::<u64>()) {
        let l = LcmLattice::build(&i).unwrap();
        let p = l.poset();
        let mut perm: Vec<usize> = (0..p.len()).collect();
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let q = permuted(p, &perm);
        let phi = are_isomorphic(p, &q).unwrap();
        prop_assert!(phi.is_some());
        prop_assert!(is_isomorphism(p, &q, &phi.unwrap()));
        let degrees: Vec<u64> = (0..l.len()).map(|a| l.degree(a) as u64).collect();
        let mut q_degrees = vec![0; l.len()];
        for (a, &b) in perm.iter().enumerate() {
            q_degrees[b] = degrees[a];
        }
        let psi = are_isomorphic_colored(p, &q, &degrees, &q_degrees).unwrap().unwrap();
        prop_assert!((0..l.len()).all(|a| degrees[a] == q_degrees[psi[a]]));
    }

    #[test]
    fn polarization_preserves_the_lattice(i in ideal_strategy(3, 3, 5)) {
        let l = LcmLattice::build(&i).unwrap();
        let m = LcmLattice::build(&i.polarize().unwrap()).unwrap();
        let dl: Vec<u64> = (0..l.len()).map(|a| l.degree(a) as u64).collect();
        let dm: Vec<u64> = (0..m.len()).map(|a| m.degree(a) as u64).collect();
        prop_assert!(are_isomorphic_colored(l.poset(), m.poset(), &dl, &dm).unwrap().is_some());
    }
}
