//! Recursive atom orderings (the working form of CL-shellability) and the
//! Vince-Wachs poset construction.
//!
//! A graded poset `P` admits a recursive atom ordering if `P` has no elements
//! strictly between its bottom and top, or if its atoms can be ordered
//! `a_1, …, a_t` so that
//!
//! 1. every upper interval `[a_j, 1̂]` admits a recursive atom ordering whose
//!    atoms covering some earlier `a_i` come first, and
//! 2. for all `i < j` there is `k < j` such that every common upper bound
//!    `y` of `a_i, a_j` lies above some `z` covering both `a_k` and `a_j`.

mod verify;
mod vince_wachs;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LcmLattice;
use crate::poset::Poset;
use crate::search::{Budget, NodeCounter, OutOfBudget, Search};

pub use verify::verify_rao_certificate;
pub use vince_wachs::{lattice_diagnostics, vince_wachs_poset, ColoredEdge, EdgeColoredGraph, LatticeDiagnostics};

/// Witness for condition 2 on the pair `(i, j)` of positions: the position
/// `k`, and for each minimal common upper bound `y` of `a_i, a_j` an element
/// `z` with `a_k, a_j ≺ z ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub bounds: Vec<(usize, usize)>,
}

/// Atom ordering of one upper interval `[bottom, 1̂]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaoNode {
    pub bottom: usize,
    /// Atoms of the interval that were required to come first.
    pub required_first: Vec<usize>,
    pub ordering: Vec<usize>,
    /// Node id of the ordering chosen for `[ordering[j], 1̂]`.
    pub children: Vec<usize>,
    pub witnesses: Vec<PairWitness>,
}

/// A recursive atom ordering, stored as a DAG of interval orderings. Element
/// indices refer to the poset the certificate was produced for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaoCertificate {
    pub labels: Vec<String>,
    pub root: usize,
    pub nodes: Vec<RaoNode>,
}

impl RaoCertificate {
    pub fn root_ordering(&self) -> &[usize] {
        &self.nodes[self.root].ordering
    }

    pub fn root_labels(&self) -> Vec<String> {
        self.root_ordering().iter().map(|&a| self.labels[a].clone()).collect()
    }
}

struct RaoSearch<'a> {
    poset: &'a Poset,
    top: usize,
    memo: HashMap<(usize, Vec<usize>), Option<usize>>,
    nodes: Vec<RaoNode>,
    counter: NodeCounter,
}

const ATOM_CAP: usize = 64;

impl<'a> RaoSearch<'a> {
    fn new(poset: &'a Poset, budget: Budget) -> Result<Self> {
        if !poset.is_graded() {
            return Err(Error::NotGraded);
        }
        let (_, top) = poset.bounds()?;
        Ok(RaoSearch { poset, top, memo: HashMap::new(), nodes: Vec::new(), counter: budget.counter() })
    }

    /// Certificate with the nodes reachable from `root`, renumbered.
    fn certificate(self, root: usize) -> RaoCertificate {
        let mut new_id: HashMap<usize, usize> = HashMap::new();
        let mut queue = vec![root];
        let mut kept = Vec::new();
        while let Some(id) = queue.pop() {
            if new_id.contains_key(&id) {
                continue;
            }
            new_id.insert(id, kept.len());
            kept.push(id);
            queue.extend(self.nodes[id].children.iter().rev().copied());
        }
        let nodes = kept
            .iter()
            .map(|&id| {
                let mut node = self.nodes[id].clone();
                for c in node.children.iter_mut() {
                    *c = new_id[c];
                }
                node
            })
            .collect();
        RaoCertificate { labels: self.poset.labels().to_vec(), root: 0, nodes }
    }

    fn atoms_of(&self, x: usize) -> Result<Vec<usize>> {
        let atoms = self.poset.upper_covers(x).to_vec();
        if atoms.len() > ATOM_CAP {
            return Err(Error::TooLarge { what: "atom set", size: atoms.len(), cap: ATOM_CAP });
        }
        Ok(atoms)
    }

    /// `[x, 1̂]` has nothing strictly between its endpoints.
    fn trivial(&self, x: usize) -> bool {
        x == self.top || self.poset.upper_covers(x) == [self.top]
    }

    /// Atoms of `[a, 1̂]` that cover one of `earlier`.
    fn required_for(&self, a: usize, earlier: impl Iterator<Item = usize> + Clone) -> Vec<usize> {
        self.poset
            .upper_covers(a)
            .iter()
            .copied()
            .filter(|&c| earlier.clone().any(|e| self.poset.covers_pair(e, c)))
            .collect()
    }

    /// Condition 2 for `a_j` against every atom already placed; returns the
    /// chosen `k` (as an atom) for each `i`, in the order of `placed`.
    fn condition_two(&self, placed: &[usize], aj: usize) -> Option<Vec<usize>> {
        placed
            .iter()
            .map(|&ai| {
                let bounds = self.poset.join_witnesses(ai, aj);
                placed.iter().copied().find(|&ak| bounds.iter().all(|&y| self.common_cover_below(ak, aj, y).is_some()))
            })
            .collect()
    }

    fn common_cover_below(&self, ak: usize, aj: usize, y: usize) -> Option<usize> {
        self.poset.upper_covers(aj).iter().copied().find(|&z| self.poset.covers_pair(ak, z) && self.poset.leq(z, y))
    }

    fn witnesses(&self, ordering: &[usize]) -> Vec<PairWitness> {
        let mut out = Vec::new();
        for j in 1..ordering.len() {
            let ks = self.condition_two(&ordering[..j], ordering[j]).expect("ordering satisfies condition 2");
            for (i, ak) in ks.into_iter().enumerate() {
                let k = ordering.iter().position(|&a| a == ak).expect("k is placed");
                let bounds = self
                    .poset
                    .join_witnesses(ordering[i], ordering[j])
                    .into_iter()
                    .map(|y| (y, self.common_cover_below(ak, ordering[j], y).expect("checked")))
                    .collect();
                out.push(PairWitness { i, j, k, bounds });
            }
        }
        out
    }

    fn push_node(&mut self, bottom: usize, required: Vec<usize>, ordering: Vec<usize>, children: Vec<usize>) -> usize {
        let witnesses = self.witnesses(&ordering);
        self.nodes.push(RaoNode { bottom, required_first: required, ordering, children, witnesses });
        self.nodes.len() - 1
    }

    /// Node id of an ordering of `[x, 1̂]` putting `required` first, if any.
    fn solve(&mut self, x: usize, required: Vec<usize>) -> Result<Option<usize>, SearchError> {
        let key = (x, required);
        if let Some(&hit) = self.memo.get(&key) {
            return Ok(hit);
        }
        let (x, required) = key;
        let result = if self.trivial(x) {
            Some(self.push_node(x, required.clone(), Vec::new(), Vec::new()))
        } else {
            let atoms = self.atoms_of(x)?;
            let mut state = OrderState {
                atoms,
                required: required.clone(),
                dead: HashSet::new(),
                order: Vec::new(),
                children: Vec::new(),
            };
            if self.extend(&mut state, 0)? {
                Some(self.push_node(x, required.clone(), state.order, state.children))
            } else {
                None
            }
        };
        self.memo.insert((x, required), result);
        Ok(result)
    }

    fn extend(&mut self, st: &mut OrderState, placed: u64) -> Result<bool, SearchError> {
        let n = st.atoms.len();
        if st.order.len() == n {
            return Ok(true);
        }
        if st.dead.contains(&placed) {
            return Ok(false);
        }
        let required_left = st.required.iter().any(|r| !st.order.contains(r));
        for pos in 0..n {
            if placed >> pos & 1 == 1 {
                continue;
            }
            let aj = st.atoms[pos];
            if required_left && !st.required.contains(&aj) {
                continue;
            }
            self.counter.tick()?;
            if self.condition_two(&st.order, aj).is_none() {
                continue;
            }
            let req = self.required_for(aj, st.order.iter().copied());
            let Some(child) = self.solve(aj, req)? else { continue };
            st.order.push(aj);
            st.children.push(child);
            if self.extend(st, placed | 1 << pos)? {
                return Ok(true);
            }
            st.order.pop();
            st.children.pop();
        }
        st.dead.insert(placed);
        Ok(false)
    }
}

struct OrderState {
    atoms: Vec<usize>,
    required: Vec<usize>,
    dead: HashSet<u64>,
    order: Vec<usize>,
    children: Vec<usize>,
}

enum SearchError {
    Budget,
    Fatal(Error),
}

impl From<OutOfBudget> for SearchError {
    fn from(_: OutOfBudget) -> Self {
        SearchError::Budget
    }
}

impl From<Error> for SearchError {
    fn from(e: Error) -> Self {
        SearchError::Fatal(e)
    }
}

fn finish(search: RaoSearch<'_>, outcome: Result<Option<usize>, SearchError>) -> Result<Search<RaoCertificate>> {
    match outcome {
        Ok(Some(root)) => Ok(Search::Found(search.certificate(root))),
        Ok(None) => Ok(Search::NotFound),
        Err(SearchError::Budget) => Ok(Search::Exhausted),
        Err(SearchError::Fatal(e)) => Err(e),
    }
}

/// Searches for a recursive atom ordering of a graded poset.
///
/// Interval results are memoised on `(bottom, atoms required first)`, and the
/// atom-ordering search memoises dead prefix sets (both conditions depend on
/// the set of earlier atoms, not their order), so `NotFound` is exhaustive.
pub fn has_recursive_atom_ordering(poset: &Poset, budget: Budget) -> Result<Search<RaoCertificate>> {
    let mut search = RaoSearch::new(poset, budget)?;
    let bottom = poset.bottom().expect("graded posets are bounded");
    let outcome = search.solve(bottom, Vec::new());
    finish(search, outcome)
}

/// Decides whether the given ordering of the atoms of `poset` is the first
/// level of some recursive atom ordering.
pub fn rao_with_root_ordering(poset: &Poset, ordering: &[usize], budget: Budget) -> Result<Search<RaoCertificate>> {
    let mut search = RaoSearch::new(poset, budget)?;
    let bottom = poset.bottom().expect("graded posets are bounded");
    let mut atoms = poset.upper_covers(bottom).to_vec();
    let mut given = ordering.to_vec();
    atoms.sort_unstable();
    given.sort_unstable();
    if atoms != given {
        return Err(Error::Precondition("ordering is not a permutation of the atoms".into()));
    }
    let outcome = (|| -> Result<Option<usize>, SearchError> {
        if search.trivial(bottom) {
            return Ok(Some(search.push_node(bottom, Vec::new(), Vec::new(), Vec::new())));
        }
        let mut children = Vec::new();
        for j in 0..ordering.len() {
            search.counter.tick()?;
            if search.condition_two(&ordering[..j], ordering[j]).is_none() {
                return Ok(None);
            }
            let req = search.required_for(ordering[j], ordering[..j].iter().copied());
            match search.solve(ordering[j], req)? {
                Some(c) => children.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(search.push_node(bottom, Vec::new(), ordering.to_vec(), children)))
    })();
    finish(search, outcome)
}

/// CL-shellability of an lcm-lattice, decided as existence of a recursive
/// atom ordering. Non-graded lattices are `NotFound`.
pub fn is_cl_shellable(lattice: &LcmLattice, budget: Budget) -> Result<Search<RaoCertificate>> {
    if !lattice.poset().is_graded() {
        return Ok(Search::NotFound);
    }
    has_recursive_atom_ordering(lattice.poset(), budget)
}

/// For a `d`-degree graded lcm-lattice, searches only for an atom ordering
/// satisfying condition 2; such an ordering is already a recursive atom
/// ordering because every upper interval is totally semimodular.
pub fn rao_fast_path(lattice: &LcmLattice, d: u32, budget: Budget) -> Result<Search<Vec<usize>>> {
    if !lattice.is_d_degree_graded(d) {
        return Err(Error::Precondition(format!("lattice is not {d}-degree graded")));
    }
    let poset = lattice.poset();
    let search = RaoSearch::new(poset, budget)?;
    let atoms = lattice.atoms().to_vec();
    if atoms.len() > ATOM_CAP {
        return Err(Error::TooLarge { what: "atom set", size: atoms.len(), cap: ATOM_CAP });
    }
    struct Fast<'s, 'a> {
        search: &'s RaoSearch<'a>,
        atoms: Vec<usize>,
        dead: HashSet<u64>,
        order: Vec<usize>,
        counter: NodeCounter,
    }
    impl Fast<'_, '_> {
        fn extend(&mut self, placed: u64) -> Result<bool, OutOfBudget> {
            if self.order.len() == self.atoms.len() {
                return Ok(true);
            }
            if self.dead.contains(&placed) {
                return Ok(false);
            }
            for pos in 0..self.atoms.len() {
                if placed >> pos & 1 == 1 {
                    continue;
                }
                self.counter.tick()?;
                let aj = self.atoms[pos];
                if self.search.condition_two(&self.order, aj).is_some() {
                    self.order.push(aj);
                    if self.extend(placed | 1 << pos)? {
                        return Ok(true);
                    }
                    self.order.pop();
                }
            }
            self.dead.insert(placed);
            Ok(false)
        }
    }
    let mut fast = Fast { search: &search, atoms, dead: HashSet::new(), order: Vec::new(), counter: budget.counter() };
    Ok(match fast.extend(0) {
        Ok(true) => Search::Found(fast.order),
        Ok(false) => Search::NotFound,
        Err(OutOfBudget) => Search::Exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_ideal;
    use crate::poset::examples;

    fn lattice(s: &str) -> LcmLattice {
        LcmLattice::build(&parse_ideal(s).unwrap()).unwrap()
    }

    #[test]
    fn two_element_lattice() {
        let l = lattice("x*y");
        let cert = has_recursive_atom_ordering(l.poset(), Budget::default()).unwrap().found().unwrap();
        assert!(cert.root_ordering().is_empty());
        verify_rao_certificate(l.poset(), &cert).unwrap();
        assert!(is_cl_shellable(&l, Budget::default()).unwrap().is_found());
        assert_eq!(rao_fast_path(&l, 2, Budget::default()).unwrap(), Search::Found(vec![1]));
    }

    #[test]
    fn disjoint_pair() {
        let l = lattice("x*y, z*w");
        let cert = has_recursive_atom_ordering(l.poset(), Budget::default()).unwrap().found().unwrap();
        assert_eq!(cert.root_labels(), ["x*y", "z*w"]);
        verify_rao_certificate(l.poset(), &cert).unwrap();
        let w = &cert.nodes[cert.root].witnesses;
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].bounds, [(3, 3)]);
        assert!(matches!(rao_fast_path(&l, 2, Budget::default()), Err(Error::Precondition(_))));
    }

    #[test]
    fn path_lattice() {
        let l = lattice("x*y, y*z, z*w");
        let cert = is_cl_shellable(&l, Budget::default()).unwrap().found().unwrap();
        verify_rao_certificate(l.poset(), &cert).unwrap();
        let fast = rao_fast_path(&l, 2, Budget::default()).unwrap().found().unwrap();
        let labels: Vec<String> = fast.iter().map(|&a| l.element(a).to_string()).collect();
        assert_eq!(labels, ["x*y", "y*z", "z*w"]);
        assert!(rao_with_root_ordering(l.poset(), &fast, Budget::default()).unwrap().is_found());
    }

    #[test]
    fn non_graded_rejected() {
        assert!(matches!(has_recursive_atom_ordering(&examples::pentagon(), Budget::default()), Err(Error::NotGraded)));
    }

    #[test]
    fn boolean_every_ordering() {
        let b = examples::boolean(3);
        let atoms = b.atoms();
        let mut perms = vec![atoms.clone()];
        // all 6 orderings of 3 atoms
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if i != j && j != k && i != k {
                        perms.push(vec![atoms[i], atoms[j], atoms[k]]);
                    }
                }
            }
        }
        for p in perms {
            let cert = rao_with_root_ordering(&b, &p, Budget::default()).unwrap().found().unwrap();
            verify_rao_certificate(&b, &cert).unwrap();
        }
    }

    #[test]
    fn budget_exhaustion() {
        let l = lattice("x1*x2, x2*x3, x3*x4, x4*x5, x1*x5");
        assert_eq!(has_recursive_atom_ordering(l.poset(), Budget::nodes(1)).unwrap(), Search::Exhausted);
    }
}
