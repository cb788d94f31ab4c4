//! Finite posets given by an explicit order relation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest poset accepted by [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 4096;

/// A finite poset with its full order relation and cover relation cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// Linear extension: every element appears after everything below it.
    linear: Vec<usize>,
}

impl Poset {
    /// Builds a poset from a relation `leq(a, b)`, which must be a partial order.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut rel = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                rel[a * n + b] = leq(a, b);
            }
        }
        for a in 0..n {
            if !rel[a * n + a] {
                return Err(Error::Precondition(format!("relation is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && rel[a * n + b] && rel[b * n + a] {
                    return Err(Error::Precondition(format!("relation is not antisymmetric at ({a}, {b})")));
                }
                if rel[a * n + b] {
                    for c in 0..n {
                        if rel[b * n + c] && !rel[a * n + c] {
                            return Err(Error::Precondition("relation is not transitive".into()));
                        }
                    }
                }
            }
        }
        Ok(Self::from_checked(labels, rel))
    }

    /// Builds a poset from cover edges `(a, b)` meaning `a < b`; the order is
    /// their reflexive-transitive closure. Cyclic input is rejected.
    pub fn from_covers(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!("edge ({a}, {b}) out of range")));
            }
            succ[a].push(b);
        }
        let mut rel = vec![false; n * n];
        for s in 0..n {
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                if rel[s * n + v] {
                    continue;
                }
                rel[s * n + v] = true;
                stack.extend(succ[v].iter().copied());
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && rel[a * n + b] && rel[b * n + a] {
                    return Err(Error::Precondition("cover edges contain a cycle".into()));
                }
            }
        }
        Ok(Self::from_checked(labels, rel))
    }

    fn from_checked(labels: Vec<String>, leq: Vec<bool>) -> Self {
        let n = labels.len();
        let down_size: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| leq[a * n + b]).count()).collect();
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&i| (down_size[i], i));
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a * n + b] {
                    continue;
                }
                let skipped = (0..n).any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
                if !skipped {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        Poset { labels, leq, up, down, linear }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Whether `b` covers `a`.
    pub fn covers_pair(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(&b)
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    /// All cover edges `(a, b)` with `a ≺ b`, in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.up[a].iter().map(move |&b| (a, b))).collect()
    }

    /// Elements listed so that everything below an element precedes it.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements()[..] {
            [b] => Some(b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements()[..] {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    pub(crate) fn bounds(&self) -> Result<(usize, usize)> {
        self.bottom().zip(self.top()).ok_or(Error::Unbounded)
    }

    /// Elements covering the bottom element.
    pub fn atoms(&self) -> Vec<usize> {
        self.bottom().map(|b| self.up[b].clone()).unwrap_or_default()
    }

    /// Induced subposet on `elements` (kept in the given order).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&i| self.labels[i].clone()).collect();
        let k = elements.len();
        let mut rel = vec![false; k * k];
        for (x, &a) in elements.iter().enumerate() {
            for (y, &b) in elements.iter().enumerate() {
                rel[x * k + y] = self.leq(a, b);
            }
        }
        Self::from_checked(labels, rel)
    }

    pub fn interval_elements(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        if !self.leq(x, y) {
            return Err(Error::Incomparable(x, y));
        }
        Ok((0..self.len()).filter(|&z| self.leq(x, z) && self.leq(z, y)).collect())
    }

    /// The closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Result<Poset> {
        Ok(self.induced(&self.interval_elements(x, y)?))
    }

    pub fn open_interval_elements(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        let mut els = self.interval_elements(x, y)?;
        els.retain(|&z| z != x && z != y);
        Ok(els)
    }

    /// The open interval `(x, y)`.
    pub fn open_interval(&self, x: usize, y: usize) -> Result<Poset> {
        Ok(self.induced(&self.open_interval_elements(x, y)?))
    }

    /// `P` with its bottom and top removed.
    pub fn proper_part(&self) -> Result<Poset> {
        let (b, t) = self.bounds()?;
        if b == t {
            return Ok(self.induced(&[]));
        }
        self.open_interval(b, t)
    }

    /// Bounded, and all maximal chains have the same length.
    pub fn is_graded(&self) -> bool {
        let Ok((bottom, top)) = self.bounds() else { return false };
        let n = self.len();
        let mut shortest = vec![usize::MAX; n];
        let mut longest = vec![0usize; n];
        shortest[bottom] = 0;
        for &v in &self.linear {
            if shortest[v] == usize::MAX {
                continue;
            }
            for &w in &self.up[v] {
                shortest[w] = shortest[w].min(shortest[v] + 1);
                longest[w] = longest[w].max(longest[v] + 1);
            }
        }
        shortest[top] == longest[top]
    }

    /// Rank of each element (length of any saturated chain from the bottom),
    /// when the poset is graded.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        if !self.is_graded() {
            return None;
        }
        let mut rank = vec![0usize; self.len()];
        for &v in &self.linear {
            for &w in &self.up[v] {
                rank[w] = rank[w].max(rank[v] + 1);
            }
        }
        Some(rank)
    }

    /// Upper semimodularity of `[x, y]`: whenever `a`, `b` in the interval
    /// cover a common element, some element of the interval covers both.
    pub fn interval_is_semimodular(&self, x: usize, y: usize) -> bool {
        let inside = |z: usize| self.leq(x, z) && self.leq(z, y);
        (0..self.len()).filter(|&c| inside(c)).all(|c| {
            let ups: Vec<usize> = self.up[c].iter().copied().filter(|&a| self.leq(a, y)).collect();
            ups.iter().enumerate().all(|(i, &a)| {
                ups[i + 1..].iter().all(|&b| self.up[a].iter().any(|&d| self.leq(d, y) && self.up[b].contains(&d)))
            })
        })
    }

    pub fn is_semimodular(&self) -> bool {
        (0..self.len()).all(|c| {
            let ups = &self.up[c];
            ups.iter()
                .enumerate()
                .all(|(i, &a)| ups[i + 1..].iter().all(|&b| self.up[a].iter().any(|d| self.up[b].contains(d))))
        })
    }

    /// Bounded, and every closed interval is semimodular.
    pub fn is_totally_semimodular(&self) -> bool {
        self.is_bounded()
            && (0..self.len())
                .all(|x| (0..self.len()).filter(|&y| self.leq(x, y)).all(|y| self.interval_is_semimodular(x, y)))
    }

    /// Minimal upper bounds of `{a, b}`.
    pub fn join_witnesses(&self, a: usize, b: usize) -> Vec<usize> {
        let ubs: Vec<usize> = (0..self.len()).filter(|&u| self.leq(a, u) && self.leq(b, u)).collect();
        ubs.iter().copied().filter(|&u| !ubs.iter().any(|&v| self.lt(v, u))).collect()
    }

    /// Maximal lower bounds of `{a, b}`.
    pub fn meet_witnesses(&self, a: usize, b: usize) -> Vec<usize> {
        let lbs: Vec<usize> = (0..self.len()).filter(|&u| self.leq(u, a) && self.leq(u, b)).collect();
        lbs.iter().copied().filter(|&u| !lbs.iter().any(|&v| self.lt(u, v))).collect()
    }

    /// Every pair has a unique join and a unique meet.
    pub fn is_lattice(&self) -> Result<bool> {
        self.bounds()?;
        let n = self.len();
        Ok((0..n)
            .all(|a| (a + 1..n).all(|b| self.join_witnesses(a, b).len() == 1 && self.meet_witnesses(a, b).len() == 1)))
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson { labels: self.labels.clone(), covers: self.covers() }
    }
}

/// Serialized poset: labels and cover edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<Poset> {
        Poset::from_covers(self.labels.clone(), &self.covers)
    }
}

/// An order isomorphism `P → Q` as a vector `phi[p] = q`, if one exists.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Result<Option<Vec<usize>>> {
    are_isomorphic_colored(p, q, &vec![0; p.len()], &vec![0; q.len()])
}

/// Order isomorphism that additionally maps each element to one of equal
/// color (for instance, equal monomial degree).
pub fn are_isomorphic_colored(p: &Poset, q: &Poset, p_colors: &[u64], q_colors: &[u64]) -> Result<Option<Vec<usize>>> {
    for size in [p.len(), q.len()] {
        if size > ISOMORPHISM_CAP {
            return Err(Error::TooLarge { what: "poset", size, cap: ISOMORPHISM_CAP });
        }
    }
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return Ok(None);
    }
    let sig = |poset: &Poset, colors: &[u64], i: usize| {
        let n = poset.len();
        let below = (0..n).filter(|&j| poset.leq(j, i)).count();
        let above = (0..n).filter(|&j| poset.leq(i, j)).count();
        (colors[i], below, above, poset.up[i].len(), poset.down[i].len())
    };
    let p_sig: Vec<_> = (0..p.len()).map(|i| sig(p, p_colors, i)).collect();
    let q_sig: Vec<_> = (0..q.len()).map(|i| sig(q, q_colors, i)).collect();
    let mut ps = p_sig.clone();
    let mut qs = q_sig.clone();
    ps.sort_unstable();
    qs.sort_unstable();
    if ps != qs {
        return Ok(None);
    }
    let order = p.linear.clone();
    let mut phi = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    fn extend(
        depth: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        p_sig: &[(u64, usize, usize, usize, usize)],
        q_sig: &[(u64, usize, usize, usize, usize)],
        phi: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else { return true };
        for y in 0..q.len() {
            if used[y] || p_sig[x] != q_sig[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let fw = phi[w];
                p.leq(w, x) == q.leq(fw, y) && p.leq(x, w) == q.leq(y, fw)
            });
            if !consistent {
                continue;
            }
            phi[x] = y;
            used[y] = true;
            if extend(depth + 1, order, p, q, p_sig, q_sig, phi, used) {
                return true;
            }
            used[y] = false;
            phi[x] = usize::MAX;
        }
        false
    }
    Ok(extend(0, &order, p, q, &p_sig, &q_sig, &mut phi, &mut used).then_some(phi))
}

/// Standard small posets used in tests and examples.
pub mod examples {
    use super::Poset;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub fn chain(n: usize) -> Poset {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(labels(n), &edges).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_covers(labels(n), &[]).unwrap()
    }

    /// `0 < a < c < 1`, `0 < b < 1`, elements `[0, a, b, c, 1]`.
    pub fn pentagon() -> Poset {
        Poset::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
            &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
        )
        .unwrap()
    }

    /// `0 < a, b < 1`.
    pub fn diamond() -> Poset {
        Poset::from_covers(vec!["0".into(), "a".into(), "b".into(), "1".into()], &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap()
    }

    /// Boolean lattice of subsets of an `n`-set; element `i` is the bitmask.
    pub fn boolean(n: usize) -> Poset {
        let size = 1usize << n;
        Poset::from_relation((0..size).map(|i| format!("{i:b}")).collect(), |a, b| a & b == a).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn chain_covers() {
        assert_eq!(chain(3).covers(), [(0, 1), (1, 2)]);
    }

    #[test]
    fn relation_validation() {
        let bad = Poset::from_relation(vec!["a".into(), "b".into()], |_, _| true);
        assert!(bad.is_err());
        assert!(Poset::from_covers(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn semimodularity() {
        assert!(chain(4).is_semimodular());
        assert!(chain(4).is_totally_semimodular());
        assert!(!pentagon().is_semimodular());
        assert!(diamond().is_totally_semimodular());
        assert!(boolean(3).is_totally_semimodular());
    }

    #[test]
    fn gradedness() {
        assert!(!pentagon().is_graded());
        assert!(diamond().is_graded());
        assert!(boolean(3).is_graded());
        assert!(!antichain(2).is_graded());
        assert_eq!(boolean(2).rank_function().unwrap(), [0, 1, 1, 2]);
    }

    #[test]
    fn intervals() {
        let b = boolean(3);
        assert_eq!(b.interval(1, 7).unwrap().len(), 4);
        assert!(b.open_interval(0, 1).unwrap().is_empty());
        assert!(matches!(b.interval(1, 2), Err(Error::Incomparable(1, 2))));
        let d = diamond().open_interval(0, 3).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.covers().is_empty());
    }

    #[test]
    fn lattice_checks() {
        assert!(diamond().is_lattice().unwrap());
        // 0 < x, y < u, v < 1 with both x, y below both u, v
        let bowtie = Poset::from_covers(
            ["0", "x", "y", "u", "v", "1"].map(String::from).to_vec(),
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        assert!(!bowtie.is_lattice().unwrap());
        assert_eq!(bowtie.join_witnesses(1, 2), [3, 4]);
        assert!(matches!(antichain(2).is_lattice(), Err(Error::Unbounded)));
    }

    #[test]
    fn isomorphism() {
        let b = boolean(3);
        let phi = are_isomorphic(&b, &b).unwrap().unwrap();
        for x in 0..b.len() {
            for y in 0..b.len() {
                assert_eq!(b.leq(x, y), b.leq(phi[x], phi[y]));
            }
        }
        assert!(are_isomorphic(&chain(3), &diamond()).unwrap().is_none());
        assert!(are_isomorphic(&chain(4), &diamond()).unwrap().is_none());
        assert!(are_isomorphic(&pentagon(), &pentagon()).unwrap().is_some());
        let identity = are_isomorphic(&chain(5), &chain(5)).unwrap().unwrap();
        assert_eq!(identity, [0, 1, 2, 3, 4]);
        let d = diamond();
        assert!(are_isomorphic_colored(&d, &d, &[0, 1, 2, 3], &[0, 2, 1, 3]).unwrap().is_some());
        assert!(are_isomorphic_colored(&d, &d, &[0, 1, 1, 3], &[0, 1, 2, 3]).unwrap().is_none());
    }
}
