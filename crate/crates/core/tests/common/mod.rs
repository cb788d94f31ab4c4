#![allow(dead_code)]

use lcmlat::homology::SimplicialComplex;
use lcmlat::monomial::{MonomialIdeal, VariableContext};
use proptest::prelude::*;

/// Ideals on `x1..xn` from raw exponent vectors; zero vectors are dropped and
/// an all-zero draw falls back to `x1`.
pub fn ideal_strategy(max_vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_map(move |rows| {
            let ctx = VariableContext::standard(n);
            let mut rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| r.iter().any(|&e| e > 0)).collect();
            if rows.is_empty() {
                let mut e = vec![0; n];
                e[0] = 1;
                rows.push(e);
            }
            MonomialIdeal::from_exponents(&ctx, rows).unwrap()
        })
    })
}

pub fn squarefree_strategy(max_vars: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(max_vars, 1, max_gens)
}

/// Complexes on `n` vertices given by up to `max_facets` random nonempty
/// vertex sets.
pub fn complex_strategy(n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u32..(1 << n), 1..=max_facets).prop_map(move |masks| {
        let facets = masks.iter().map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect()).collect();
        SimplicialComplex::new((1..=n).map(|i| i.to_string()).collect(), facets).unwrap()
    })
}

/// Every subset of `0..n` that is a face of `c`, as bitmasks.
pub fn face_masks(c: &SimplicialComplex) -> Vec<u32> {
    let n = c.vertices().len();
    (0u32..1 << n).filter(|&m| c.contains_face(&(0..n).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>())).collect()
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
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
