//! The lcm-lattice `L(I)` of a monomial ideal.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VariableContext};
use crate::poset::Poset;

/// Default cap on the number of generators (the lattice can reach `2^k`
/// elements).
pub const DEFAULT_GENERATOR_CAP: usize = 20;

/// The lcm-lattice of a monomial ideal: all lcms of subsets of `G(I)`,
/// ordered by divisibility, canonically sorted so that element 0 is `1` and
/// the last element is `m_L`.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    ctx: VariableContext,
    elements: Vec<Monomial>,
    index: HashMap<Box<[u32]>, usize>,
    poset: Poset,
    atoms: Vec<usize>,
}

impl LcmLattice {
    pub fn build(ideal: &MonomialIdeal) -> Result<Self> {
        Self::build_with_cap(ideal, DEFAULT_GENERATOR_CAP)
    }

    pub fn build_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        ideal.require_nonzero("lcm-lattice of the zero ideal")?;
        let gens = ideal.generators();
        if gens.len() > cap {
            return Err(Error::TooLarge { what: "generator set", size: gens.len(), cap });
        }
        let ctx = ideal.context().clone();
        // every element is a join of atoms, so closing the atoms under
        // joining with single atoms reaches the whole lattice
        let mut seen: HashMap<Box<[u32]>, ()> = HashMap::new();
        let mut elements: Vec<Monomial> = Vec::new();
        let mut frontier: Vec<Monomial> = Vec::new();
        for g in gens {
            if seen.insert(g.exponents().into(), ()).is_none() {
                elements.push(g.clone());
                frontier.push(g.clone());
            }
        }
        while let Some(m) = frontier.pop() {
            for g in gens {
                let j = m.lcm(g);
                if seen.insert(j.exponents().into(), ()).is_none() {
                    elements.push(j.clone());
                    frontier.push(j);
                }
            }
        }
        elements.push(Monomial::one(&ctx));
        elements.sort();
        let index: HashMap<Box<[u32]>, usize> =
            elements.iter().enumerate().map(|(i, m)| (m.exponents().into(), i)).collect();
        let labels = elements.iter().map(|m| m.to_string()).collect();
        let poset = Poset::from_relation(labels, |a, b| elements[a].divides(&elements[b]))?;
        let atoms = gens.iter().map(|g| index[g.exponents()]).collect();
        Ok(LcmLattice { ctx, elements, index, poset, atoms })
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Monomial {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m.exponents()).copied()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Indices of the atoms, i.e. of the minimal generators.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.elements[i].degree()
    }

    /// `a ∨ b = lcm(a, b)`.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let l = self.elements[a].lcm(&self.elements[b]);
        self.index[l.exponents()]
    }

    /// Full join table, row-major.
    pub fn join_table(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|a| (0..self.len()).map(|b| self.join(a, b)).collect()).collect()
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    /// Elements covering at least one atom.
    pub fn super_atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&m| self.poset.lower_covers(m).iter().any(|a| self.atoms.contains(a))).collect()
    }

    /// Every cover `a ≺ b` with `a ≠ 1` raises the degree by exactly one.
    pub fn is_degree_graded(&self) -> bool {
        self.covers()
            .into_iter()
            .filter(|&(a, _)| a != self.bottom())
            .all(|(a, b)| self.degree(b) == self.degree(a) + 1)
    }

    /// Degree-graded with every atom of degree `d`.
    pub fn is_d_degree_graded(&self, d: u32) -> bool {
        self.atoms.iter().all(|&a| self.degree(a) == d) && self.is_degree_graded()
    }

    /// The `d` for which the lattice is `d`-degree graded, if any.
    pub fn degree_graded_degree(&self) -> Option<u32> {
        let d = self.degree(*self.atoms.first()?);
        self.is_d_degree_graded(d).then_some(d)
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            variables: self.ctx.names().to_vec(),
            elements: self.elements.iter().map(|m| m.exponents().to_vec()).collect(),
            labels: self.elements.iter().map(|m| m.to_string()).collect(),
            covers: self.covers(),
            atoms: self.atoms.clone(),
            top: self.top(),
            degrees: (0..self.len()).map(|i| self.degree(i)).collect(),
        }
    }
}

/// Lattice export: exponent vectors, cover edges, atom indices and degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub variables: Vec<String>,
    pub elements: Vec<Vec<u32>>,
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub atoms: Vec<usize>,
    pub top: usize,
    pub degrees: Vec<u32>,
}
