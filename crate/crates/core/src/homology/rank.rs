//! Exact ranks of sparse integer matrices over ℚ and over 𝔽_p.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse row: `(column, value)` sorted by column, no explicit zeros.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over 𝔽_p by sparse Gaussian elimination.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(usize, u64)> =
            row.iter().map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64)).filter(|&(_, v)| v != 0).collect();
        while let Some(&(lead, lv)) = r.first() {
            match pivots.get(&lead) {
                Some(piv) => r = axpy_mod(&r, piv, p - lv, p),
                None => {
                    let inv = inverse_mod(lv, p);
                    let normalized = r.iter().map(|&(c, v)| (c, v * inv % p)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `r + factor * piv` over 𝔽_p (`piv` has leading coefficient 1).
fn axpy_mod(r: &[(usize, u64)], piv: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(r.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < piv.len() {
        let take_r = j >= piv.len() || (i < r.len() && r[i].0 < piv[j].0);
        let take_p = i >= r.len() || (j < piv.len() && piv[j].0 < r[i].0);
        if take_r {
            out.push(r[i]);
            i += 1;
        } else if take_p {
            out.push((piv[j].0, factor * piv[j].1 % p));
            j += 1;
        } else {
            let v = (r[i].1 + factor * piv[j].1) % p;
            if v != 0 {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

/// Integer scalar for fraction-free elimination. `comb` returns `a*x - b*y`,
/// or `None` on overflow.
trait Exact: Clone + PartialEq {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Exact for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Rank over ℚ by fraction-free elimination: rows stay integral and are
/// divided by their content after every step. Runs in `i64` and restarts
/// with big integers if an intermediate value overflows.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    rank_integral::<i64>(rows).unwrap_or_else(|| rank_integral::<BigInt>(rows).expect("big integers do not overflow"))
}

fn rank_integral<T: Exact>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(usize, T)> = row.iter().filter(|e| e.1 != 0).map(|&(c, v)| (c, T::from_i64(v))).collect();
        loop {
            let Some((lead, lv)) = r.first().cloned() else { break };
            let Some(piv) = pivots.get(&lead) else {
                pivots.insert(lead, r);
                break;
            };
            // r <- piv_lead * r - r_lead * piv, which cancels the leading entry
            let pl = piv[0].1.clone();
            let mut out: Vec<(usize, T)> = Vec::with_capacity(r.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            let zero = T::zero();
            while i < r.len() || j < piv.len() {
                let (col, a, b) = if j >= piv.len() || (i < r.len() && r[i].0 < piv[j].0) {
                    i += 1;
                    (r[i - 1].0, &r[i - 1].1, &zero)
                } else if i >= r.len() || piv[j].0 < r[i].0 {
                    j += 1;
                    (piv[j - 1].0, &zero, &piv[j - 1].1)
                } else {
                    i += 1;
                    j += 1;
                    (r[i - 1].0, &r[i - 1].1, &piv[j - 1].1)
                };
                let v = T::comb(&pl, a, &lv, b)?;
                if !v.is_zero() {
                    out.push((col, v));
                }
            }
            if let Some(first) = out.first() {
                let mut g = first.1.clone();
                for (_, v) in &out[1..] {
                    if g.is_unit() {
                        break;
                    }
                    g = g.gcd(v);
                }
                if !g.is_unit() {
                    for e in out.iter_mut() {
                        e.1 = e.1.div_exact(&g);
                    }
                }
            }
            r = out;
        }
    }
    Some(pivots.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(m: &[&[i64]]) -> Vec<SparseRow> {
        m.iter().map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &v)| (c, v)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        let id = dense(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank_rational(&id), 2);
        assert_eq!(rank_mod_p(&id, 2), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i64 << 40;
        let m = dense(&[&[big, 1, 0], &[1, big, 1], &[0, 1, big], &[big, big, big]]);
        assert_eq!(rank_integral::<i64>(&m), None);
        assert_eq!(rank_rational(&m), 3);
    }

    #[test]
    fn inverse() {
        for p in [2u64, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a * inverse_mod(a, p) % p, 1);
            }
        }
    }
}
