//! Multigraded Betti numbers of a monomial ideal `I`.
//!
//! `β_{i,m}` counts the degree-`m` generators of the `i`-th module in a
//! minimal free resolution of `I` itself (so `β_0` counts `G(I)`). Two
//! independent routes are provided: open intervals `(1, m)` of the
//! lcm-lattice, and the upper Koszul complexes `K^m(I)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{order_complex, reduced_homology, Field, SimplicialComplex};
use crate::lattice::LcmLattice;
use crate::monomial::{Monomial, MonomialIdeal};

/// Cap on the number of divisors of `m_L` enumerated by the Koszul oracle.
pub const ORACLE_DIVISOR_CAP: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: Field,
    entries: BTreeMap<(usize, Monomial), usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: String,
    pub exponents: Vec<u32>,
    pub degree: u32,
    pub beta: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedEntry {
    pub i: usize,
    pub j: u32,
    pub beta: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    pub field: Field,
    pub entries: Vec<BettiEntry>,
    pub graded: Vec<GradedEntry>,
}

impl BettiTable {
    fn from_pairs(field: Field, pairs: impl IntoIterator<Item = (usize, Monomial, usize)>) -> Self {
        let entries = pairs.into_iter().filter(|&(_, _, b)| b > 0).map(|(i, m, b)| ((i, m), b)).collect();
        BettiTable { field, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `β_{i,m}`; zero for anything not stored.
    pub fn get(&self, i: usize, m: &Monomial) -> usize {
        self.entries.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries in (i, canonical monomial) order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> + '_ {
        self.entries.iter().map(|((i, m), &b)| (*i, m, b))
    }

    pub fn multidegrees(&self, i: usize) -> Vec<Monomial> {
        self.nonzero().filter(|&(k, _, _)| k == i).map(|(_, m, _)| m.clone()).collect()
    }

    /// `β_{i,j} = Σ_{deg m = j} β_{i,m}`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for (i, m, b) in self.nonzero() {
            *out.entry((i, m.degree())).or_insert(0) += b;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, _, b) in self.nonzero() {
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += b;
        }
        out
    }

    /// Whether every nonzero `β_{i,m}` has `deg m = i + d`.
    pub fn is_d_linear(&self, d: u32) -> bool {
        self.nonzero().all(|(i, m, _)| m.degree() as usize == i + d as usize)
    }

    /// Rows `i`, columns `j`, zeros shown as `.`.
    pub fn grid(&self) -> String {
        let graded = self.graded();
        if graded.is_empty() {
            return "(empty)\n".into();
        }
        let rows = graded.keys().map(|k| k.0).max().unwrap_or(0);
        let lo = graded.keys().map(|k| k.1).min().unwrap_or(0);
        let hi = graded.keys().map(|k| k.1).max().unwrap_or(0);
        let width = graded.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(hi.to_string().len()) + 1;
        let mut out = format!("{:>4}", "i\\j");
        for j in lo..=hi {
            let _ = write!(out, "{j:>width$}");
        }
        out.push('\n');
        for i in 0..=rows {
            let _ = write!(out, "{i:>4}");
            for j in lo..=hi {
                match graded.get(&(i, j)) {
                    Some(b) => {
                        let _ = write!(out, "{b:>width$}");
                    }
                    None => {
                        let _ = write!(out, "{:>width$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            field: self.field,
            entries: self
                .nonzero()
                .map(|(i, m, beta)| BettiEntry {
                    i,
                    multidegree: m.to_string(),
                    exponents: m.exponents().to_vec(),
                    degree: m.degree(),
                    beta,
                })
                .collect(),
            graded: self.graded().into_iter().map(|((i, j), beta)| GradedEntry { i, j, beta }).collect(),
        }
    }
}

/// `β_{i,m} = dim H̃_{i-1}(O((1, m)))` for `1 ≠ m ∈ L(I)`, zero elsewhere.
pub fn gpw_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let lattice = LcmLattice::build(ideal)?;
    gpw_betti_of_lattice(&lattice, field)
}

pub fn gpw_betti_of_lattice(lattice: &LcmLattice, field: Field) -> Result<BettiTable> {
    let poset = lattice.poset();
    let rows: Vec<Vec<(usize, Monomial, usize)>> = (1..lattice.len())
        .into_par_iter()
        .map(|m| {
            let interval = poset.open_interval(lattice.bottom(), m)?;
            let h = reduced_homology(&order_complex(&interval), field)?;
            let row = h.degrees().map(|(k, b)| ((k + 1) as usize, lattice.element(m).clone(), b)).collect();
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable::from_pairs(field, rows.into_iter().flatten()))
}

/// Upper Koszul complex `K^m(I) = {F ⊆ supp(m) : m / x^F ∈ I}` on the
/// variables of `I`. `None` when `m ∉ I` (the void complex).
pub fn upper_koszul_complex(ideal: &MonomialIdeal, m: &Monomial) -> Result<Option<SimplicialComplex>> {
    let ctx = ideal.context();
    let support = m.support();
    let in_ideal = |mask: u32| {
        let mut e = m.exponents().to_vec();
        for (k, &v) in support.iter().enumerate() {
            if mask >> k & 1 == 1 {
                e[v] -= 1;
            }
        }
        ideal.generators().iter().any(|g| g.exponents().iter().zip(&e).all(|(a, b)| a <= b))
    };
    if !in_ideal(0) {
        return Ok(None);
    }
    let s = support.len();
    let faces: Vec<u32> = (0u32..1 << s).filter(|&f| in_ideal(f)).collect();
    let facets = faces
        .iter()
        .filter(|&&f| (0..s).all(|k| f >> k & 1 == 1 || !in_ideal(f | 1 << k)))
        .map(|&f| (0..s).filter(|k| f >> k & 1 == 1).map(|k| support[k]).collect())
        .collect();
    SimplicialComplex::new(ctx.names().to_vec(), facets).map(Some)
}

/// `β_{i,m} = dim H̃_{i-1}(K^m(I))` over every `m` dividing `m_L`. Uses no
/// lattice or poset code.
pub fn koszul_betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    ideal.require_nonzero("Betti numbers of the zero ideal")?;
    let ctx = ideal.context();
    let top = ideal.lcm_of_generators();
    let bounds = top.exponents().to_vec();
    let count = bounds.iter().try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1));
    let count = match count {
        Some(c) if c <= ORACLE_DIVISOR_CAP => c,
        _ => {
            return Err(Error::TooLarge {
                what: "divisor set of the lcm",
                size: count.unwrap_or(usize::MAX),
                cap: ORACLE_DIVISOR_CAP,
            })
        }
    };
    let rows: Vec<Vec<(usize, Monomial, usize)>> = (0..count)
        .into_par_iter()
        .map(|mut code| {
            let mut exps = vec![0u32; bounds.len()];
            for (v, &b) in bounds.iter().enumerate() {
                exps[v] = (code % (b as usize + 1)) as u32;
                code /= b as usize + 1;
            }
            let m = Monomial::new(ctx, exps)?;
            let Some(k) = upper_koszul_complex(ideal, &m)? else {
                return Ok(Vec::new());
            };
            let h = reduced_homology(&k, field)?;
            let row = h.degrees().map(|(d, b)| ((d + 1) as usize, m.clone(), b)).collect();
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable::from_pairs(field, rows.into_iter().flatten()))
}

/// The degree `d` when `I` is generated in degree `d` and its Betti table is
/// concentrated on `deg m = i + d`.
pub fn has_d_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<Option<u32>> {
    ideal.require_nonzero("linear resolution of the zero ideal")?;
    let Some(d) = ideal.is_equigenerated() else {
        return Ok(None);
    };
    let table = gpw_betti(ideal, field)?;
    Ok(table.is_d_linear(d).then_some(d))
}

/// Multidegrees `m` with `β_{1,m} ≠ 0`, in canonical order.
pub fn first_betti_degrees(ideal: &MonomialIdeal, field: Field) -> Result<Vec<Monomial>> {
    Ok(gpw_betti(ideal, field)?.multidegrees(1))
}

/// The ideal `I₁` generated by the first Betti degrees of `I`.
pub fn build_i1(ideal: &MonomialIdeal, field: Field) -> Result<MonomialIdeal> {
    let degrees = first_betti_degrees(ideal, field)?;
    if degrees.is_empty() {
        return Err(Error::ZeroIdeal("I has no first Betti degrees".into()));
    }
    MonomialIdeal::new(ideal.context(), degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{parse_ideal, parse_monomial};

    const FIELDS: [Field; 2] = [Field::Rationals, Field::Prime(2)];

    fn mono(i: &MonomialIdeal, s: &str) -> Monomial {
        parse_monomial(s, i.context()).unwrap()
    }

    #[test]
    fn two_generators_sharing_a_variable() {
        let i = parse_ideal("x*y, y*z").unwrap();
        for f in FIELDS {
            let t = gpw_betti(&i, f).unwrap();
            let nz: Vec<_> = t.nonzero().map(|(i, m, b)| (i, m.to_string(), b)).collect();
            assert_eq!(nz, [(0, "x*y".into(), 1), (0, "y*z".into(), 1), (1, "x*y*z".into(), 1)]);
            assert_eq!(koszul_betti_oracle(&i, f).unwrap(), t);
        }
        assert_eq!(first_betti_degrees(&i, Field::Rationals).unwrap(), [mono(&i, "x*y*z")]);
    }

    #[test]
    fn disjoint_pair_is_not_linear() {
        let i = parse_ideal("x*y, z*w").unwrap();
        let t = gpw_betti(&i, Field::Rationals).unwrap();
        assert_eq!(t.get(1, &mono(&i, "x*y*z*w")), 1);
        assert_eq!(koszul_betti_oracle(&i, Field::Rationals).unwrap(), t);
        assert_eq!(has_d_linear_resolution(&i, Field::Rationals).unwrap(), None);
    }

    #[test]
    fn path_ideal() {
        let i = parse_ideal("x*y, y*z, z*w").unwrap();
        for f in FIELDS {
            let t = gpw_betti(&i, f).unwrap();
            let top = mono(&i, "x*y*z*w");
            assert!((0..4).all(|k| t.get(k, &top) == 0));
            assert_eq!(t.multidegrees(1), [mono(&i, "x*y*z"), mono(&i, "y*z*w")]);
            assert_eq!(t.totals(), [3, 2]);
            assert_eq!(koszul_betti_oracle(&i, f).unwrap(), t);
            assert_eq!(has_d_linear_resolution(&i, f).unwrap(), Some(2));
        }
        assert_eq!(build_i1(&i, Field::Rationals).unwrap().to_string(), "(x*y*z, y*z*w)");
    }

    #[test]
    fn principal_ideal() {
        let i = parse_ideal("x*y*z").unwrap();
        assert_eq!(has_d_linear_resolution(&i, Field::Rationals).unwrap(), Some(3));
        assert!(first_betti_degrees(&i, Field::Rationals).unwrap().is_empty());
        assert!(matches!(build_i1(&i, Field::Rationals), Err(Error::ZeroIdeal(_))));
    }

    #[test]
    fn koszul_complex_of_a_generator_is_the_empty_complex() {
        let i = parse_ideal("x*y, z*w").unwrap();
        let k = upper_koszul_complex(&i, &mono(&i, "x*y")).unwrap().unwrap();
        assert!(k.is_empty_complex());
        assert!(upper_koszul_complex(&i, &mono(&i, "x*z")).unwrap().is_none());
        let k = upper_koszul_complex(&i, &mono(&i, "x*y*z*w")).unwrap().unwrap();
        assert_eq!(k.facet_labels(), [vec!["x".to_string(), "y".into()], vec!["z".into(), "w".into()]]);
    }

    #[test]
    fn non_squarefree_agrees_with_oracle() {
        let i = parse_ideal("x^2, x*y, y^3").unwrap();
        for f in FIELDS {
            assert_eq!(gpw_betti(&i, f).unwrap(), koszul_betti_oracle(&i, f).unwrap());
        }
        let t = gpw_betti(&i, Field::Rationals).unwrap();
        assert_eq!(t.totals(), [3, 2]);
    }

    #[test]
    fn grid_rendering() {
        let i = parse_ideal("x*y, y*z, z*w").unwrap();
        let g = gpw_betti(&i, Field::Rationals).unwrap().grid();
        assert_eq!(g, " i\\j 2 3\n   0 3 .\n   1 . 2\n");
    }
}
