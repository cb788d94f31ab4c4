//! Independent replay of recursive-atom-ordering certificates.
//!
//! Everything here is recomputed from the order relation `leq` alone: covers,
//! upper bounds, gradedness. Nothing is shared with the search.

use std::collections::HashMap;

use super::RaoCertificate;
use crate::poset::Poset;

struct Order<'a> {
    p: &'a Poset,
    n: usize,
}

impl Order<'_> {
    fn le(&self, a: usize, b: usize) -> bool {
        self.p.leq(a, b)
    }

    fn cover(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b) && !(0..self.n).any(|c| c != a && c != b && self.le(a, c) && self.le(c, b))
    }

    fn ups(&self, a: usize) -> Vec<usize> {
        (0..self.n).filter(|&b| self.cover(a, b)).collect()
    }

    /// Lengths of all maximal chains from `a` up to the top.
    fn chain_lengths(&self, a: usize, memo: &mut HashMap<usize, Vec<usize>>) -> Vec<usize> {
        if let Some(v) = memo.get(&a) {
            return v.clone();
        }
        let ups = self.ups(a);
        let mut out: Vec<usize> = if ups.is_empty() {
            vec![0]
        } else {
            ups.iter().flat_map(|&b| self.chain_lengths(b, memo)).map(|l| l + 1).collect()
        };
        out.sort_unstable();
        out.dedup();
        memo.insert(a, out.clone());
        out
    }
}

/// Replays `cert` against the literal definition of a recursive atom
/// ordering of `poset`.
pub fn verify_rao_certificate(poset: &Poset, cert: &RaoCertificate) -> Result<(), String> {
    let o = Order { p: poset, n: poset.len() };
    let bottoms: Vec<usize> = (0..o.n).filter(|&a| (0..o.n).all(|b| o.le(a, b))).collect();
    let tops: Vec<usize> = (0..o.n).filter(|&a| (0..o.n).all(|b| o.le(b, a))).collect();
    let (&[bottom], &[top]) = (bottoms.as_slice(), tops.as_slice()) else {
        return Err("poset is not bounded".into());
    };
    if o.chain_lengths(bottom, &mut HashMap::new()).len() != 1 {
        return Err("poset is not graded".into());
    }
    if cert.labels.len() != o.n || cert.labels.iter().zip(poset.labels()).any(|(a, b)| a != b) {
        return Err("certificate labels do not match the poset".into());
    }
    let root = cert.nodes.get(cert.root).ok_or("missing root node")?;
    if root.bottom != bottom || !root.required_first.is_empty() {
        return Err("root node does not start at the bottom".into());
    }
    let mut verified = vec![false; cert.nodes.len()];
    verify_node(&o, top, cert, cert.root, &mut verified)
}

fn verify_node(
    o: &Order<'_>,
    top: usize,
    cert: &RaoCertificate,
    id: usize,
    verified: &mut [bool],
) -> Result<(), String> {
    if verified[id] {
        return Ok(());
    }
    let node = &cert.nodes[id];
    let x = node.bottom;
    let strictly_inside = (0..o.n).any(|z| z != x && z != top && o.le(x, z) && o.le(z, top));
    if !strictly_inside {
        if !node.ordering.is_empty() {
            return Err(format!("interval above {} is trivial but has an ordering", cert.labels[x]));
        }
        verified[id] = true;
        return Ok(());
    }
    let mut atoms = o.ups(x);
    let mut ord = node.ordering.clone();
    atoms.sort_unstable();
    ord.sort_unstable();
    if atoms != ord {
        return Err(format!("ordering above {} is not a permutation of its atoms", cert.labels[x]));
    }
    let a = &node.ordering;
    // required atoms form a prefix
    let req = &node.required_first;
    if let Some(bad) = a.iter().skip(req.len()).find(|c| req.contains(c)) {
        return Err(format!("{} was required first above {}", cert.labels[*bad], cert.labels[x]));
    }
    if !req.iter().all(|r| a.contains(r)) {
        return Err(format!("required atoms above {} are not atoms", cert.labels[x]));
    }
    // condition 2, using the claimed k for each pair
    for j in 1..a.len() {
        for i in 0..j {
            let w = node
                .witnesses
                .iter()
                .find(|w| w.i == i && w.j == j)
                .ok_or_else(|| format!("missing witness for pair ({i}, {j}) above {}", cert.labels[x]))?;
            if w.k >= j {
                return Err(format!("witness k = {} is not earlier than j = {j}", w.k));
            }
            let (ai, aj, ak) = (a[i], a[j], a[w.k]);
            for y in (0..o.n).filter(|&y| o.le(ai, y) && o.le(aj, y)) {
                let ok = (0..o.n).any(|z| o.cover(ak, z) && o.cover(aj, z) && o.le(z, y));
                if !ok {
                    return Err(format!(
                        "condition 2 fails above {}: no z with {}, {} ≺ z ≤ {}",
                        cert.labels[x], cert.labels[ak], cert.labels[aj], cert.labels[y]
                    ));
                }
            }
            for &(y, z) in &w.bounds {
                if !(o.le(ai, y) && o.le(aj, y) && o.cover(ak, z) && o.cover(aj, z) && o.le(z, y)) {
                    return Err(format!("bad witness pair ({}, {})", cert.labels[y], cert.labels[z]));
                }
            }
        }
    }
    // condition 1
    if node.children.len() != a.len() {
        return Err(format!("missing child orderings above {}", cert.labels[x]));
    }
    for (j, &child) in node.children.iter().enumerate() {
        let c = cert.nodes.get(child).ok_or("dangling child id")?;
        if c.bottom != a[j] {
            return Err(format!("child {j} above {} starts at the wrong element", cert.labels[x]));
        }
        let mut expected: Vec<usize> =
            o.ups(a[j]).into_iter().filter(|&z| a[..j].iter().any(|&ai| o.cover(ai, z))).collect();
        let mut got = c.required_first.clone();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            return Err(format!("child above {} has the wrong required-first set", cert.labels[a[j]]));
        }
        verify_node(o, top, cert, child, verified)?;
    }
    verified[id] = true;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use crate::poset::examples;

    #[test]
    fn tampering_is_detected() {
        let b = examples::boolean(3);
        let mut cert = has_recursive_atom_ordering(&b, Budget::default()).unwrap().found().unwrap();
        verify_rao_certificate(&b, &cert).unwrap();
        let root = cert.root;
        cert.nodes[root].ordering.swap(0, 1);
        assert!(verify_rao_certificate(&b, &cert).is_err());
    }

    #[test]
    fn wrong_poset_is_rejected() {
        let b = examples::boolean(2);
        let cert = has_recursive_atom_ordering(&b, Budget::default()).unwrap().found().unwrap();
        assert!(verify_rao_certificate(&examples::diamond(), &cert).is_err());
    }
}
