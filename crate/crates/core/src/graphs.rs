//! Simple graphs on vertices `1..=n`, chordality with certificates, and edge
//! ideals.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VariableContext};

pub const MAX_VERTICES: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { what: "vertex count", size: n, cap: MAX_VERTICES });
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    /// Edges are 1-based pairs; duplicates are merged, loops rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Parse(format!("edge {{{u},{v}}} outside vertices 1..{n}")));
            }
            g.add(u - 1, v - 1);
        }
        Ok(g)
    }

    fn add(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// 1-based adjacency test.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v) && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adj[v - 1] >> u & 1 == 1).map(|u| u + 1).collect()
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// The subgraph induced on the given 1-based vertices, relabelled
    /// `1..=k` in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph> {
        let mut g = Self::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            if u == 0 || u > self.n || vertices[..a].contains(&u) {
                return Err(Error::Parse(format!("bad vertex {u} for induced subgraph")));
            }
            for (b, &v) in vertices.iter().enumerate().take(a) {
                if self.has_edge(u, v) {
                    g.add(a, b);
                }
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    /// graph6 encoding (`n ≤ 62`).
    pub fn to_graph6(&self) -> String {
        let mut bits = Vec::new();
        for v in 1..self.n {
            for u in 0..v {
                bits.push(self.adj[u] >> v & 1 == 1);
            }
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut c = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    c |= 1 << (5 - k);
                }
            }
            out.push((c + 63) as char);
        }
        out
    }

    pub fn from_graph6(s: &str) -> Result<SimpleGraph> {
        let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
        let bytes = s.as_bytes();
        let bad = || Error::Parse(format!("invalid graph6 string {s:?}"));
        if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(bad());
        }
        let n = (bytes[0] - 63) as usize;
        let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if bytes.len() != 1 + need {
            return Err(bad());
        }
        let mut g = Self::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if (bytes[1 + k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                    g.add(u, v);
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({}, {:?})", self.n, self.edges())
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::new(j.n, &edges).map_err(serde::de::Error::custom)
    }
}

/// Graph JSON or a graph6 string.
pub fn parse_graph(input: &str) -> Result<SimpleGraph> {
    let t = input.trim();
    if t.starts_with('{') {
        Ok(serde_json::from_str(t)?)
    } else {
        SimpleGraph::from_graph6(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum ChordalityCertificate {
    /// A perfect elimination ordering.
    EliminationOrdering(Vec<usize>),
    /// An induced cycle of length at least 4, in cyclic order.
    InducedCycle(Vec<usize>),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::EliminationOrdering(_))
    }
}

fn is_clique(g: &SimpleGraph, set: u64) -> bool {
    (0..g.n).filter(|v| set >> v & 1 == 1).all(|v| set & !(1 << v) & !g.adj[v] == 0)
}

/// Greedy simplicial elimination. Returns an ordering when chordal, else an
/// induced cycle of length at least 4.
pub fn chordality(g: &SimpleGraph) -> ChordalityCertificate {
    let mut alive: u64 = if g.n == 64 { u64::MAX } else { (1 << g.n) - 1 };
    let mut order = Vec::with_capacity(g.n);
    while alive != 0 {
        let next = (0..g.n).find(|&v| alive >> v & 1 == 1 && is_clique(g, g.adj[v] & alive));
        match next {
            Some(v) => {
                order.push(v + 1);
                alive &= !(1 << v);
            }
            None => return ChordalityCertificate::InducedCycle(induced_cycle(g, alive)),
        }
    }
    ChordalityCertificate::EliminationOrdering(order)
}

// `alive` induces a subgraph with no simplicial vertex, so some vertex v lies
// on an induced cycle; its cycle neighbours a, b are joined by a path avoiding
// the rest of N[v], and a shortest such path closes an induced cycle.
fn induced_cycle(g: &SimpleGraph, alive: u64) -> Vec<usize> {
    for v in (0..g.n).filter(|v| alive >> v & 1 == 1) {
        let nbrs: Vec<usize> = (0..g.n).filter(|&u| (g.adj[v] & alive) >> u & 1 == 1).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.adj[a] >> b & 1 == 1 {
                    continue;
                }
                let blocked = (g.adj[v] | 1 << v) & !(1 << a) & !(1 << b);
                if let Some(path) = shortest_path(g, alive & !blocked, a, b) {
                    let mut cycle = vec![v + 1];
                    cycle.extend(path.into_iter().map(|u| u + 1));
                    return cycle;
                }
            }
        }
    }
    unreachable!("a graph without simplicial vertices has an induced cycle")
}

fn shortest_path(g: &SimpleGraph, allowed: u64, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            while *path.last().unwrap() != from {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        for w in (0..g.n).filter(|&w| (g.adj[u] & allowed) >> w & 1 == 1) {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

pub fn is_chordal(g: &SimpleGraph) -> bool {
    chordality(g).is_chordal()
}

pub fn is_cochordal(g: &SimpleGraph) -> bool {
    is_chordal(&g.complement())
}

/// Replays a certificate against `g` without using the elimination search.
pub fn verify_chordality_certificate(g: &SimpleGraph, cert: &ChordalityCertificate) -> Result<(), String> {
    match cert {
        ChordalityCertificate::EliminationOrdering(order) => {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != (1..=g.n).collect::<Vec<_>>() {
                return Err(format!("{order:?} is not a permutation of 1..{}", g.n));
            }
            for (k, &v) in order.iter().enumerate() {
                let later: Vec<usize> = order[k + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
                for (i, &a) in later.iter().enumerate() {
                    if let Some(&b) = later[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                        return Err(format!(
                            "vertex {v} is not simplicial: later neighbours {a}, {b} are not adjacent"
                        ));
                    }
                }
            }
            Ok(())
        }
        ChordalityCertificate::InducedCycle(cycle) => {
            let k = cycle.len();
            if k < 4 {
                return Err(format!("cycle {cycle:?} has length {k} < 4"));
            }
            for i in 0..k {
                for j in i + 1..k {
                    if cycle[i] == cycle[j] {
                        return Err(format!("vertex {} repeated", cycle[i]));
                    }
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    if g.has_edge(cycle[i], cycle[j]) != consecutive {
                        return Err(format!("pair {}, {} breaks the induced cycle", cycle[i], cycle[j]));
                    }
                }
            }
            Ok(())
        }
    }
}

/// `I(G) = (x_i x_j : {i, j} ∈ E)` over `x1..xn`.
pub fn edge_ideal(g: &SimpleGraph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal("edge ideal of an edgeless graph".into()));
    }
    let ctx = VariableContext::standard(g.n);
    let gens = g.edges().into_iter().map(|(u, v)| Monomial::from_support(&ctx, [u - 1, v - 1])).collect();
    MonomialIdeal::new(&ctx, gens)
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices; bit `k` of the index
/// selects the `k`-th pair in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        SimpleGraph::new(n, &edges).expect("valid edges")
    })
}

pub mod named {
    use super::SimpleGraph;

    pub fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        SimpleGraph::new(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        SimpleGraph::new(n, &edges).expect("path")
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        SimpleGraph::new(n, &edges).expect("complete graph")
    }

    /// Two disjoint edges.
    pub fn two_k2() -> SimpleGraph {
        SimpleGraph::new(4, &[(1, 2), (3, 4)]).expect("2K2")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::poset::are_isomorphic;

    fn degree_sequence(g: &SimpleGraph) -> Vec<usize> {
        let mut d: Vec<usize> = (1..=g.n).map(|v| g.neighbors(v).len()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn complements() {
        let c5 = cycle(5).complement();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(degree_sequence(&c5), [2; 5]);
        assert!(matches!(chordality(&c5), ChordalityCertificate::InducedCycle(c) if c.len() == 5));
        assert_eq!(complete(4).complement().edge_count(), 0);
        let p4 = path(4).complement();
        assert_eq!(p4.edges(), [(1, 3), (1, 4), (2, 4)]);
        assert_eq!(p4.complement(), path(4));
        let _ = are_isomorphic;
    }

    #[test]
    fn chordality_examples() {
        match chordality(&cycle(4)) {
            ChordalityCertificate::InducedCycle(c) => {
                assert_eq!(c.len(), 4);
                verify_chordality_certificate(&cycle(4), &ChordalityCertificate::InducedCycle(c)).unwrap();
            }
            other => panic!("{other:?}"),
        }
        let tree = SimpleGraph::new(6, &[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let cert = chordality(&tree);
        assert!(cert.is_chordal());
        verify_chordality_certificate(&tree, &cert).unwrap();
        assert!(!is_chordal(&cycle(5)));
        assert!(is_chordal(&complete(5)));
        assert!(is_cochordal(&path(4)));
        assert!(!is_cochordal(&cycle(5)));
        assert!(!is_cochordal(&two_k2()));
        assert!(is_cochordal(&complete(3)));
    }

    #[test]
    fn certificates_reject_tampering() {
        let g = cycle(4);
        assert!(
            verify_chordality_certificate(&g, &ChordalityCertificate::EliminationOrdering(vec![1, 2, 3, 4])).is_err()
        );
        assert!(verify_chordality_certificate(&g, &ChordalityCertificate::InducedCycle(vec![1, 3, 2, 4])).is_err());
        let k4 = complete(4);
        assert!(verify_chordality_certificate(&k4, &ChordalityCertificate::InducedCycle(vec![1, 2, 3, 4])).is_err());
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(edge_ideal(&path(3)).unwrap().to_string(), "(x1*x2, x2*x3)");
        assert_eq!(edge_ideal(&cycle(4)).unwrap().to_string(), "(x1*x2, x1*x4, x2*x3, x3*x4)");
        assert_eq!(edge_ideal(&path(2)).unwrap().len(), 1);
        assert!(matches!(edge_ideal(&SimpleGraph::empty(3).unwrap()), Err(Error::ZeroIdeal(_))));
    }

    #[test]
    fn graph6_round_trip() {
        assert_eq!(cycle(5).to_graph6(), "Dhc");
        assert_eq!(SimpleGraph::from_graph6("Dhc").unwrap(), cycle(5));
        for g in all_graphs(4) {
            assert_eq!(SimpleGraph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
        assert!(SimpleGraph::from_graph6("D").is_err());
    }

    #[test]
    fn json_format() {
        let g = parse_graph(r#"{"n": 3, "edges": [[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        assert!(parse_graph(r#"{"n": 2, "edges": [[1,1]]}"#).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let h = cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(all_graphs(5).count(), 1024);
    }
}
