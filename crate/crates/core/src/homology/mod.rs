//! Simplicial complexes and their exact reduced homology over a field.

pub mod rank;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::search::{Budget, NodeCounter, OutOfBudget, Search};
use rank::SparseRow;

/// Coefficient field: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if is_prime {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    fn rank(self, rows: &[SparseRow]) -> usize {
        match self {
            Field::Rationals => rank::rank_rational(rows),
            Field::Prime(p) => rank::rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "q" | "qq" | "rationals" => Ok(Field::Rationals),
            _ => {
                let p = s.strip_prefix("fp:").or_else(|| s.strip_prefix("gf")).unwrap_or(&s);
                let p = p.parse::<u64>().map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
                Field::prime(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite simplicial complex stored by its facets.
///
/// Faces are sorted lists of vertex indices. `facets == []` is the void
/// complex (no faces at all); `facets == [[]]` is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(vertices: Vec<String>, faces: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        if vertices.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::Parse("duplicate vertex labels".into()));
        }
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        if let Some(bad) = faces.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::Parse(format!("vertex index {bad} out of range")));
        }
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Complex on vertices named by `labels`, facets given by label.
    pub fn from_labels(vertices: Vec<String>, facets: &[Vec<String>]) -> Result<Self> {
        let faces = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        vertices
                            .iter()
                            .position(|v| v == l)
                            .ok_or_else(|| Error::Parse(format!("unknown vertex {l:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, faces)
    }

    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let all = (0..vertices.len()).collect();
        SimplicialComplex { vertices, facets: vec![all] }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.labels_of(f)).collect()
    }

    pub fn labels_of(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Only the empty face.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `None` for the void complex; `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces grouped by cardinality (index `s` holds faces of size `s`).
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let Some(max) = self.facets.iter().map(Vec::len).max() else { return Vec::new() };
        let mut seen: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); max + 1];
        for facet in &self.facets {
            let k = facet.len();
            for mask in 0u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                seen[face.len()].insert(face);
            }
        }
        seen.into_iter()
            .map(|s| {
                let mut v: Vec<Vec<usize>> = s.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    /// `f[s]` = number of faces with `s` vertices (so `f[0] = 1`).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// `link_Δ(F) = {T ∈ Δ : T ∪ F ∈ Δ, T ∩ F = ∅}` on the same vertex set.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        if !self.contains_face(&f) {
            return Err(Error::NotAFace(
                face.iter().map(|&v| self.vertices.get(v).cloned().unwrap_or_default()).collect(),
            ));
        }
        // G \ F over facets G ⊇ F is automatically an antichain
        let facets = self
            .facets
            .iter()
            .filter(|g| is_subset(&f, g))
            .map(|g| g.iter().copied().filter(|v| f.binary_search(v).is_err()).collect())
            .collect();
        Ok(SimplicialComplex { vertices: self.vertices.clone(), facets })
    }

    /// Restriction of the vertex set to vertices that occur in some face.
    pub fn induced_on_support(&self) -> SimplicialComplex {
        let used: Vec<usize> = {
            let mut s: Vec<usize> = self.facets.iter().flatten().copied().collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let pos: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        SimplicialComplex {
            vertices: used.iter().map(|&v| self.vertices[v].clone()).collect(),
            facets: self.facets.iter().map(|f| f.iter().map(|v| pos[v]).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { vertices: self.vertices.clone(), facets: self.facet_labels() }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// `{"vertices": [...], "facets": [[...], ...]}` with facets given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_labels(self.vertices.clone(), &self.facets)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Vertex {
            Num(u64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Vertex>,
            facets: Vec<Vec<Vertex>>,
        }
        let label = |v: Vertex| match v {
            Vertex::Num(n) => n.to_string(),
            Vertex::Text(s) => s,
        };
        let raw = Raw::deserialize(d)?;
        let vertices = raw.vertices.into_iter().map(label).collect();
        let facets: Vec<Vec<String>> = raw.facets.into_iter().map(|f| f.into_iter().map(label).collect()).collect();
        SimplicialComplex::from_labels(vertices, &facets).map_err(serde::de::Error::custom)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Reduced homology dimensions `dim H̃_i` for `-1 ≤ i ≤ dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field: Field,
    dims: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn get(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&i, &d)| (i, d))
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<i64> {
        self.degrees().filter(|&(_, d)| d > 0).map(|(i, _)| i).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|(i, d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        struct H<'a>(&'a BTreeMap<i64, usize>);
        impl Serialize for H<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(&k.to_string(), v)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("field", &self.field)?;
        m.serialize_entry("h", &H(&self.dims))?;
        m.end()
    }
}

/// Reduced homology over `field` from exact boundary-matrix ranks. The
/// reduced Euler characteristic is cross-checked against the face counts on
/// every call.
pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = complex.faces_by_size();
    let top = faces.len() - 1;
    // ranks[s] = rank of the boundary map from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<&[usize], usize> = faces[s - 1].iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let rows: Vec<SparseRow> = faces[s]
            .iter()
            .map(|face| {
                let mut row: SparseRow = (0..face.len())
                    .map(|drop| {
                        let sub: Vec<usize> =
                            face.iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &v)| v).collect();
                        (index[sub.as_slice()], if drop % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        ranks[s] = field.rank(&rows);
    }
    let mut dims = BTreeMap::new();
    for s in 0..=top {
        let nullity = faces[s].len() - ranks[s];
        dims.insert(s as i64 - 1, nullity - ranks[s + 1]);
    }
    let profile = HomologyProfile { field, dims };
    let from_faces: i64 =
        faces.iter().enumerate().map(|(s, f)| if s % 2 == 1 { f.len() as i64 } else { -(f.len() as i64) }).sum();
    if profile.euler_characteristic() != from_faces {
        return Err(Error::Internal(format!(
            "Euler characteristic mismatch: homology gives {}, face counts give {from_faces}",
            profile.euler_characteristic()
        )));
    }
    Ok(profile)
}

/// Order complex: vertices are the elements of `poset`, faces its chains.
pub fn order_complex(poset: &Poset) -> SimplicialComplex {
    let labels = poset.labels().to_vec();
    if poset.is_empty() {
        return SimplicialComplex { vertices: labels, facets: vec![Vec::new()] };
    }
    let mut facets = Vec::new();
    let mut chain = Vec::new();
    fn walk(poset: &Poset, v: usize, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        chain.push(v);
        let ups = poset.upper_covers(v);
        if ups.is_empty() {
            let mut c = chain.clone();
            c.sort_unstable();
            out.push(c);
        }
        for &w in ups {
            walk(poset, w, chain, out);
        }
        chain.pop();
    }
    for m in poset.minimal_elements() {
        walk(poset, m, &mut chain, &mut facets);
    }
    SimplicialComplex::new(labels, facets).expect("chains index valid vertices")
}

/// Join `Δ₁ ∗ Δ₂` on the disjoint union of the vertex sets.
pub fn join_complex(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    if a.vertices.iter().any(|v| b.vertices.contains(v)) {
        return Err(Error::OverlappingVertices);
    }
    let offset = a.vertices.len();
    let vertices = a.vertices.iter().chain(b.vertices.iter()).cloned().collect();
    let facets = a
        .facets
        .iter()
        .flat_map(|f| b.facets.iter().map(move |g| f.iter().copied().chain(g.iter().map(|v| v + offset)).collect()))
        .collect();
    SimplicialComplex::new(vertices, facets)
}

/// Cohen-Macaulay over `field`: every link (including `link ∅ = Δ`) has
/// vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: Field) -> Result<bool> {
    Ok(cohen_macaulay_obstruction(complex, field)?.is_none())
}

/// A face whose link has homology below its top dimension, if any.
pub fn cohen_macaulay_obstruction(complex: &SimplicialComplex, field: Field) -> Result<Option<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in complex.faces_by_size().into_iter().flatten() {
        if link_fails(complex, &face, field)? {
            return Ok(Some(face));
        }
    }
    Ok(None)
}

fn link_fails(complex: &SimplicialComplex, face: &[usize], field: Field) -> Result<bool> {
    let link = complex.link(face)?;
    let dim = link.dim().expect("link of a face is not void");
    if dim <= 0 {
        // only H̃_{-1} lies below the top, and it vanishes on a nonempty link
        return Ok(false);
    }
    let h = reduced_homology(&link, field)?;
    let fails = h.degrees().any(|(i, d)| i < dim && d > 0);
    Ok(fails)
}

/// Cohen-Macaulayness of a bounded poset: of the order complex of its proper
/// part. A two-element poset is Cohen-Macaulay (its proper part gives `{∅}`).
pub fn is_cm_poset(poset: &Poset, field: Field) -> Result<bool> {
    poset.bounds()?;
    if poset.len() < 2 {
        return Err(Error::Precondition("Cohen-Macaulay poset test needs at least two elements".into()));
    }
    is_cohen_macaulay(&order_complex(&poset.proper_part()?), field)
}

/// Searches for a shelling order of a pure complex.
///
/// Whether a facet may come next depends only on the set of facets already
/// placed, so dead sets are memoised; `NotFound` is exhaustive.
pub fn is_shellable(complex: &SimplicialComplex, budget: Budget) -> Result<Search<Vec<usize>>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let k = complex.facets.len();
    if k > 64 {
        return Err(Error::TooLarge { what: "facet list", size: k, cap: 64 });
    }
    struct Shelling<'a> {
        facets: &'a [Vec<usize>],
        full: u64,
        dead: HashSet<u64>,
        counter: NodeCounter,
        order: Vec<usize>,
    }
    impl Shelling<'_> {
        fn fits(&self, placed: u64, cand: usize) -> bool {
            if placed == 0 {
                return true;
            }
            let f = &self.facets[cand];
            let meets: Vec<Vec<usize>> = (0..self.facets.len())
                .filter(|j| placed >> j & 1 == 1)
                .map(|j| f.iter().copied().filter(|v| self.facets[j].contains(v)).collect())
                .collect();
            // every intersection F ∩ F_j lies in some codimension-one F ∩ F_k
            meets.iter().all(|m| meets.iter().any(|big| big.len() + 1 == f.len() && is_subset(m, big)))
        }

        fn dfs(&mut self, placed: u64) -> std::result::Result<bool, OutOfBudget> {
            if placed == self.full {
                return Ok(true);
            }
            if self.dead.contains(&placed) {
                return Ok(false);
            }
            for cand in 0..self.facets.len() {
                if placed >> cand & 1 == 1 {
                    continue;
                }
                self.counter.tick()?;
                if self.fits(placed, cand) {
                    self.order.push(cand);
                    if self.dfs(placed | 1 << cand)? {
                        return Ok(true);
                    }
                    self.order.pop();
                }
            }
            self.dead.insert(placed);
            Ok(false)
        }
    }
    let mut s = Shelling {
        facets: &complex.facets,
        full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
        dead: HashSet::new(),
        counter: budget.counter(),
        order: Vec::new(),
    };
    Ok(match s.dfs(0) {
        Err(OutOfBudget) => Search::Exhausted,
        Ok(false) => Search::NotFound,
        Ok(true) => Search::Found(s.order),
    })
}

/// Checks a shelling order literally: for every `i ≥ 2` the complex
/// `2^{F_i} ∩ (2^{F_1} ∪ … ∪ 2^{F_{i-1}})` is enumerated face by face and
/// must be pure of dimension `dim F_i - 1`.
pub fn verify_shelling(complex: &SimplicialComplex, ordering: &[usize]) -> Result<(), String> {
    let k = complex.facets.len();
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() {
        return Err("ordering is not a permutation of the facets".into());
    }
    if !complex.is_pure() {
        return Err("complex is not pure".into());
    }
    for i in 1..k {
        let f = &complex.facets[ordering[i]];
        let earlier: Vec<&Vec<usize>> = ordering[..i].iter().map(|&j| &complex.facets[j]).collect();
        let in_union = |face: &[usize]| earlier.iter().any(|g| face.iter().all(|v| g.contains(v)));
        let faces: Vec<Vec<usize>> = (0u64..1 << f.len())
            .map(|mask| (0..f.len()).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect::<Vec<_>>())
            .filter(|face| in_union(face))
            .collect();
        let maximal =
            faces.iter().filter(|a| !faces.iter().any(|b| b.len() > a.len() && a.iter().all(|v| b.contains(v))));
        if let Some(bad) = maximal.into_iter().find(|m| m.len() + 1 != f.len()) {
            return Err(format!(
                "step {}: intersection has a maximal face {:?} of the wrong dimension",
                i + 1,
                complex.labels_of(bad)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::examples;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            (1..=n).map(|i| i.to_string()).collect(),
            facets.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect(),
        )
        .unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[2, 3], &[1, 3]])
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn construction_drops_non_maximal() {
        let c = cx(3, &[&[1, 2], &[1], &[2, 1]]);
        assert_eq!(c.facets(), &[vec![0, 1]]);
        assert_eq!(c.dim(), Some(1));
        assert!(SimplicialComplex::new(vec!["a".into(), "a".into()], vec![]).is_err());
        assert_eq!(SimplicialComplex::void(vec![]).dim(), None);
        assert_eq!(cx(2, &[&[]]).dim(), Some(-1));
    }

    #[test]
    fn homology_examples() {
        let h = reduced_homology(&hollow_triangle(), Field::Rationals).unwrap();
        assert_eq!((h.get(0), h.get(1)), (0, 1));
        let two_points = cx(2, &[&[1], &[2]]);
        assert_eq!(reduced_homology(&two_points, Field::Rationals).unwrap().get(0), 1);
        let empty = cx(0, &[&[]]);
        let h = reduced_homology(&empty, Field::Rationals).unwrap();
        assert_eq!(h.get(-1), 1);
        assert!(matches!(
            reduced_homology(&SimplicialComplex::void(vec![]), Field::Rationals),
            Err(Error::VoidComplex)
        ));
        let h = reduced_homology(&tetra_boundary(), Field::Prime(2)).unwrap();
        assert_eq!(h.support(), [2]);
    }

    #[test]
    fn projective_plane_torsion() {
        // six-vertex RP^2: H̃_1 = Z/2, so it shows up over F_2 only
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 4, 6],
                &[3, 4, 6],
                &[3, 5, 6],
            ],
        );
        assert!(reduced_homology(&rp2, Field::Rationals).unwrap().is_acyclic());
        let h2 = reduced_homology(&rp2, Field::Prime(2)).unwrap();
        assert_eq!((h2.get(1), h2.get(2)), (1, 1));
        assert!(reduced_homology(&rp2, Field::Prime(3)).unwrap().is_acyclic());
        assert!(!is_cohen_macaulay(&rp2, Field::Prime(2)).unwrap());
        assert!(is_cohen_macaulay(&rp2, Field::Rationals).unwrap());
    }

    #[test]
    fn links() {
        let t = hollow_triangle();
        assert_eq!(t.link(&[]).unwrap(), t);
        assert_eq!(t.link(&[0]).unwrap().facets(), &[vec![1], vec![2]]);
        let b = tetra_boundary();
        assert_eq!(b.link(&[0, 1]).unwrap().facets(), &[vec![2], vec![3]]);
        assert!(matches!(t.link(&[0, 1, 2]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&hollow_triangle(), Field::Rationals).unwrap());
        assert!(!is_cohen_macaulay(&cx(3, &[&[1, 2], &[3]]), Field::Rationals).unwrap());
        assert!(is_cohen_macaulay(&cx(4, &[&[1, 2, 3, 4]]), Field::Rationals).unwrap());
        // two disjoint edges: pure but disconnected
        assert!(!is_cohen_macaulay(&cx(4, &[&[1, 2], &[3, 4]]), Field::Prime(2)).unwrap());
    }

    #[test]
    fn order_complexes() {
        assert!(order_complex(&examples::antichain(0)).is_empty_complex());
        assert_eq!(order_complex(&examples::antichain(2)).facets(), &[vec![0], vec![1]]);
        let c = order_complex(&examples::chain(3));
        assert_eq!(c.facets(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn cm_posets() {
        assert!(is_cm_poset(&examples::diamond(), Field::Rationals).unwrap());
        assert!(is_cm_poset(&examples::chain(2), Field::Rationals).unwrap());
        assert!(is_cm_poset(&examples::boolean(3), Field::Prime(2)).unwrap());
        assert!(!is_cm_poset(&examples::pentagon(), Field::Rationals).unwrap());
        assert!(matches!(is_cm_poset(&examples::antichain(2), Field::Rationals), Err(Error::Unbounded)));
    }

    #[test]
    fn joins() {
        let p = cx(1, &[&[1]]);
        let q = SimplicialComplex::new(vec!["a".into()], vec![vec![0]]).unwrap();
        assert_eq!(join_complex(&p, &q).unwrap().facets(), &[vec![0, 1]]);
        let e = SimplicialComplex::new(vec![], vec![vec![]]).unwrap();
        let t = hollow_triangle();
        assert_eq!(join_complex(&e, &t).unwrap(), t);
        let s0a = cx(2, &[&[1], &[2]]);
        let s0b = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![vec![0], vec![1]]).unwrap();
        let circle = join_complex(&s0a, &s0b).unwrap();
        assert_eq!(circle.facets().len(), 4);
        let h = reduced_homology(&circle, Field::Rationals).unwrap();
        assert_eq!(h.support(), [1]);
        assert!(matches!(join_complex(&t, &t), Err(Error::OverlappingVertices)));
    }

    #[test]
    fn shellability_examples() {
        let b = tetra_boundary();
        let order = is_shellable(&b, Budget::default()).unwrap().found().unwrap();
        verify_shelling(&b, &order).unwrap();
        assert_eq!(is_shellable(&cx(4, &[&[1, 2], &[3, 4]]), Budget::default()).unwrap(), Search::NotFound);
        assert!(is_shellable(&cx(3, &[&[1, 2, 3]]), Budget::default()).unwrap().is_found());
        assert!(matches!(is_shellable(&cx(3, &[&[1, 2], &[3]]), Budget::default()), Err(Error::NotPure)));
        assert!(verify_shelling(&cx(4, &[&[1, 2], &[3, 4]]), &[0, 1]).is_err());
        // points are shellable: consecutive intersections are {∅}
        assert!(is_shellable(&cx(3, &[&[1], &[2], &[3]]), Budget::default()).unwrap().is_found());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!(matches!("fp:4".parse::<Field>(), Err(Error::NotPrime(4))));
        assert_eq!(Field::Prime(2).to_string(), "fp:2");
        let h = reduced_homology(&hollow_triangle(), Field::Prime(2)).unwrap();
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"field":"fp:2","h":{"-1":0,"0":0,"1":1}}"#);
    }
}
