use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: u32,
}

/// Simple graph on vertices `1..=n` whose edges carry colors from `colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoredGraph {
    pub n: usize,
    pub colors: Vec<u32>,
    pub edges: Vec<ColoredEdge>,
}

impl EdgeColoredGraph {
    pub fn new(n: usize, colors: Vec<u32>, edges: Vec<ColoredEdge>) -> Result<Self> {
        let mut colors = colors;
        colors.sort_unstable();
        colors.dedup();
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.u == e.v || e.u == 0 || e.v == 0 || e.u > n || e.v > n {
                return Err(Error::Parse(format!("bad edge {{{}, {}}}", e.u, e.v)));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::Parse(format!("repeated edge {{{}, {}}}", e.u, e.v)));
            }
            if colors.binary_search(&e.color).is_err() {
                return Err(Error::Parse(format!("color {} is not declared", e.color)));
            }
        }
        if colors.len() > 16 {
            return Err(Error::TooLarge { what: "color set", size: colors.len(), cap: 16 });
        }
        Ok(EdgeColoredGraph { n, colors, edges })
    }
}

fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a.max(b)] = a.min(b);
    }
    let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 1..=n {
        let r = find(&mut parent, v);
        comps.entry(r).or_default().push(v);
    }
    comps.into_values().collect()
}

fn set_label<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let inner: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// The poset of pairs `(H, J)` with `J` a set of colors and `H` a connected
/// component of the subgraph on the edges colored in `J`, ordered by
/// inclusion in both coordinates, with a minimum `0̂` adjoined.
pub fn vince_wachs_poset(graph: &EdgeColoredGraph) -> Result<Poset> {
    if graph.n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let mut items: Vec<(Vec<usize>, Vec<u32>)> = Vec::new();
    for mask in 0u32..(1 << graph.colors.len()) {
        let j: Vec<u32> =
            graph.colors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &c)| c).collect();
        let edges = graph.edges.iter().filter(|e| j.contains(&e.color)).map(|e| (e.u, e.v));
        for h in components(graph.n, edges) {
            items.push((h, j.clone()));
        }
    }
    let mut labels = vec!["0̂".to_string()];
    labels.extend(items.iter().map(|(h, j)| format!("({},{})", set_label(h), set_label(j))));
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    let csubset = |a: &[u32], b: &[u32]| a.iter().all(|x| b.contains(x));
    Poset::from_relation(labels, |a, b| match (a, b) {
        (0, _) => true,
        (_, 0) => false,
        _ => {
            let ((h1, j1), (h2, j2)) = (&items[a - 1], &items[b - 1]);
            subset(h1, h2) && csubset(j1, j2)
        }
    })
}

/// Boundedness and lattice diagnostics for a finite poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDiagnostics {
    pub elements: usize,
    pub bounded: bool,
    pub maximal: Vec<String>,
    pub graded: bool,
    pub is_lattice: Option<bool>,
    /// Pairs without a least upper bound, with their minimal upper bounds.
    pub missing_joins: Vec<(String, String, Vec<String>)>,
}

pub fn lattice_diagnostics(poset: &Poset) -> LatticeDiagnostics {
    let n = poset.len();
    let mut missing = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let w = poset.join_witnesses(a, b);
            if w.len() != 1 {
                missing.push((
                    poset.label(a).to_string(),
                    poset.label(b).to_string(),
                    w.iter().map(|&i| poset.label(i).to_string()).collect(),
                ));
            }
        }
    }
    LatticeDiagnostics {
        elements: n,
        bounded: poset.is_bounded(),
        maximal: poset.maximal_elements().into_iter().map(|i| poset.label(i).to_string()).collect(),
        graded: poset.is_graded(),
        is_lattice: poset.is_lattice().ok(),
        missing_joins: missing,
    }
}
