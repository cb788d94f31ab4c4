//! Exact monomial and monomial-ideal arithmetic.

mod ideal;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use ideal::{
    minimalize, verify_quotient_certificate, ColonWitness, MonomialIdeal, QuotientCertificate, QuotientStep,
    LQ_GENERATOR_CAP,
};
pub use parse::{natural_cmp, parse_ideal, parse_monomial, IdealJson};

/// Ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableContext {
    names: Arc<[String]>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::Parse(format!("duplicate or empty variable name {name:?}")));
            }
        }
        Ok(VariableContext { names: names.into() })
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        VariableContext { names: (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().into() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn same_as(&self, other: &VariableContext) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

/// A monomial `x^a` recorded as an exponent vector over a [`VariableContext`].
///
/// Monomials are ordered canonically: by total degree first, then
/// lexicographically with the first variable heaviest (`xy` before `yz`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    ctx: VariableContext,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(ctx: &VariableContext) -> Self {
        Monomial { ctx: ctx.clone(), exps: vec![0; ctx.len()].into() }
    }

    pub fn new(ctx: &VariableContext, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ctx.len() {
            return Err(Error::Parse(format!(
                "exponent vector of length {} in a context of {} variables",
                exps.len(),
                ctx.len()
            )));
        }
        Ok(Monomial { ctx: ctx.clone(), exps: exps.into() })
    }

    pub fn variable(ctx: &VariableContext, index: usize) -> Self {
        let mut exps = vec![0; ctx.len()];
        exps[index] = 1;
        Monomial { ctx: ctx.clone(), exps: exps.into() }
    }

    /// Squarefree monomial `x^F` on the given variable indices.
    pub fn from_support(ctx: &VariableContext, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; ctx.len()];
        for i in support {
            exps[i] = 1;
        }
        Monomial { ctx: ctx.clone(), exps: exps.into() }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Index of the variable if this monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    fn check(&self, other: &Monomial) {
        assert!(self.ctx.same_as(&other.ctx), "monomials from different contexts");
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.check(other);
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        self.check(other);
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| f(a, b)).collect();
        Monomial { ctx: self.ctx.clone(), exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.zip_with(other, |a, b| a - b))
    }

    /// `self / gcd(self, other)`, the colon generator contributed by `self`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// Same exponents, new context of equal length.
    pub fn with_context(&self, ctx: &VariableContext) -> Result<Monomial> {
        Monomial::new(ctx, self.exps.to_vec())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.ctx.cmp(&other.ctx))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, &e) in self.ctx.names().iter().zip(self.exps.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ctx: &VariableContext, e: &[u32]) -> Monomial {
        Monomial::new(ctx, e.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic() {
        let ctx = VariableContext::new(["x", "y", "z"]).unwrap();
        let a = m(&ctx, &[2, 1, 0]);
        let b = m(&ctx, &[1, 1, 1]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 1, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 1, 0]);
        assert_eq!(a.colon(&b).exponents(), &[1, 0, 0]);
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.degree(), 3);
        assert!(!a.is_squarefree());
        assert!(b.is_squarefree());
        assert_eq!(a.to_string(), "x^2*y");
        assert_eq!(Monomial::one(&ctx).to_string(), "1");
        assert_eq!(m(&ctx, &[0, 1, 0]).as_variable(), Some(1));
        assert_eq!(m(&ctx, &[0, 2, 0]).as_variable(), None);
    }

    #[test]
    fn canonical_order() {
        let ctx = VariableContext::new(["x", "y", "z", "w"]).unwrap();
        let mut v = [m(&ctx, &[0, 0, 1, 1]), m(&ctx, &[1, 1, 1, 0]), m(&ctx, &[1, 1, 0, 0]), m(&ctx, &[0, 1, 1, 0])];
        v.sort();
        let s: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x*y", "y*z", "z*w", "x*y*z"]);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(VariableContext::new(["x", "x"]).is_err());
        assert!(Monomial::new(&VariableContext::standard(2), vec![1]).is_err());
    }
}
