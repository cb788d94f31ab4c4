use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Monomial, VariableContext};
use crate::error::{Error, Result};
use crate::search::{Budget, NodeCounter, OutOfBudget, Search};

/// Largest generator count accepted by the linear-quotient search.
pub const LQ_GENERATOR_CAP: usize = 64;

/// Inclusion-minimal antichain of `generators` under divisibility, sorted
/// canonically. The unit monomial is allowed here (it absorbs everything).
pub fn minimalize(mut generators: Vec<Monomial>) -> Result<Vec<Monomial>> {
    if let Some(first) = generators.first() {
        let ctx = first.context().clone();
        if generators.iter().any(|g| !g.context().same_as(&ctx)) {
            return Err(Error::ContextMismatch);
        }
    }
    generators.sort();
    generators.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(generators.len());
    for g in generators {
        // canonical order is degree-first, so any divisor of g was seen already
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// A monomial ideal, stored by its minimal generators in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: VariableContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ctx: &VariableContext, generators: Vec<Monomial>) -> Result<Self> {
        if generators.iter().any(|g| !g.context().same_as(ctx)) {
            return Err(Error::ContextMismatch);
        }
        if generators.iter().any(Monomial::is_one) {
            return Err(Error::UnitGenerator);
        }
        Ok(MonomialIdeal { ctx: ctx.clone(), gens: minimalize(generators)? })
    }

    pub fn from_exponents(ctx: &VariableContext, exps: Vec<Vec<u32>>) -> Result<Self> {
        let gens = exps.into_iter().map(|e| Monomial::new(ctx, e)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, gens)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal(what.to_string()))
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `m_L`, the lcm of all minimal generators.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(&self.ctx), |acc, g| acc.lcm(g))
    }

    /// The common degree of all minimal generators, if there is one.
    pub fn is_equigenerated(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// Minimal generators of the colon ideal `(I : v)`, namely the
    /// minimalization of `{u / gcd(u, v) : u in G(I)}`.
    pub fn colon_generators(&self, v: &Monomial) -> Result<Vec<Monomial>> {
        if !v.context().same_as(&self.ctx) {
            return Err(Error::ContextMismatch);
        }
        minimalize(self.gens.iter().map(|u| u.colon(v)).collect())
    }

    /// Whether `(I : m)` is generated by variables. The unit ideal does not
    /// count: `1` is not a variable.
    pub fn is_linear_divisor(&self, m: &Monomial) -> Result<bool> {
        self.require_nonzero("linear divisor of the zero ideal")?;
        Ok(self.colon_generators(m)?.iter().all(|g| g.as_variable().is_some()))
    }

    /// Searches for an ordering of `G(I)` with linear quotients.
    ///
    /// Candidates are tried in canonical order, which makes the first descent
    /// greedy over the generators that are currently linear divisors;
    /// backtracking (with memoised dead prefixes) makes `NotFound` exhaustive.
    pub fn find_linear_quotients_order(&self, budget: Budget) -> Result<Search<QuotientCertificate>> {
        self.require_nonzero("linear quotients of the zero ideal")?;
        let k = self.gens.len();
        if k > LQ_GENERATOR_CAP {
            return Err(Error::TooLarge { what: "generator set", size: k, cap: LQ_GENERATOR_CAP });
        }
        let mut search = LqSearch {
            gens: &self.gens,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            dead: HashSet::new(),
            counter: budget.counter(),
            order: Vec::with_capacity(k),
        };
        match search.dfs(0) {
            Err(OutOfBudget) => Ok(Search::Exhausted),
            Ok(false) => Ok(Search::NotFound),
            Ok(true) => {
                let order = search.order;
                Ok(Search::Found(QuotientCertificate::build(self, order)))
            }
        }
    }

    /// Polarization: each `x_j^a` becomes `x_{j,1} ... x_{j,a}` over fresh
    /// variables named `{x_j}_{k}`. Variables absent from every generator are
    /// dropped.
    pub fn polarize(&self) -> Result<MonomialIdeal> {
        self.require_nonzero("polarization of the zero ideal")?;
        let n = self.ctx.len();
        let maxes: Vec<u32> = (0..n).map(|j| self.gens.iter().map(|g| g.exponents()[j]).max().unwrap_or(0)).collect();
        let mut names = Vec::new();
        let mut offsets = Vec::with_capacity(n);
        for (j, &a) in maxes.iter().enumerate() {
            offsets.push(names.len());
            for k in 1..=a {
                names.push(format!("{}_{}", self.ctx.names()[j], k));
            }
        }
        let ctx = VariableContext::new(names)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0; ctx.len()];
                for (j, &a) in g.exponents().iter().enumerate() {
                    for k in 0..a as usize {
                        exps[offsets[j] + k] = 1;
                    }
                }
                Monomial::new(&ctx, exps)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(&ctx, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

struct LqSearch<'a> {
    gens: &'a [Monomial],
    full: u64,
    dead: HashSet<u64>,
    counter: NodeCounter,
    order: Vec<usize>,
}

impl LqSearch<'_> {
    fn dfs(&mut self, placed: u64) -> Result<bool, OutOfBudget> {
        if placed == self.full {
            return Ok(true);
        }
        if self.dead.contains(&placed) {
            return Ok(false);
        }
        for cand in 0..self.gens.len() {
            if placed >> cand & 1 == 1 {
                continue;
            }
            self.counter.tick()?;
            if placed == 0 || colon_is_linear(self.gens, placed, cand) {
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

/// `((gens in placed) : gens[cand])` is generated by variables.
fn colon_is_linear(gens: &[Monomial], placed: u64, cand: usize) -> bool {
    let v = &gens[cand];
    let quotients: Vec<Monomial> = (0..gens.len()).filter(|j| placed >> j & 1 == 1).map(|j| gens[j].colon(v)).collect();
    let vars: Vec<usize> = quotients.iter().filter_map(Monomial::as_variable).collect();
    quotients.iter().all(|q| vars.iter().any(|&x| q.exponents()[x] > 0))
}

/// Why one earlier generator's colon contribution is redundant: the variable
/// `variable` (contributed by the generator at position `via`) divides it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonWitness {
    pub earlier: usize,
    pub via: usize,
    pub variable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientStep {
    pub position: usize,
    /// Minimal generators of the colon ideal at this step.
    pub colon: Vec<String>,
    pub witnesses: Vec<ColonWitness>,
}

/// A linear-quotients ordering together with per-step witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCertificate {
    /// Indices into the ideal's canonical generator list.
    pub ordering: Vec<usize>,
    pub generators: Vec<String>,
    pub steps: Vec<QuotientStep>,
}

impl QuotientCertificate {
    fn build(ideal: &MonomialIdeal, ordering: Vec<usize>) -> Self {
        let gens = ideal.generators();
        let mut steps = Vec::new();
        for pos in 1..ordering.len() {
            let v = &gens[ordering[pos]];
            let quotients: Vec<Monomial> = ordering[..pos].iter().map(|&g| gens[g].colon(v)).collect();
            let witnesses = quotients
                .iter()
                .enumerate()
                .map(|(earlier, q)| {
                    let (via, variable) = quotients
                        .iter()
                        .enumerate()
                        .find_map(|(via, r)| r.as_variable().filter(|&x| q.exponents()[x] > 0).map(|x| (via, x)))
                        .expect("ordering was accepted by the search");
                    ColonWitness { earlier, via, variable }
                })
                .collect();
            let colon = minimalize(quotients).expect("same context").iter().map(|m| m.to_string()).collect();
            steps.push(QuotientStep { position: pos, colon, witnesses });
        }
        QuotientCertificate { generators: ordering.iter().map(|&g| gens[g].to_string()).collect(), ordering, steps }
    }
}

/// Replays a linear-quotients certificate against `ideal` using only monomial
/// arithmetic: at every step each earlier colon contribution `u_j / gcd(u_j, u_i)`
/// must be divisible by a witnessed variable that itself occurs as a colon
/// contribution.
pub fn verify_quotient_certificate(ideal: &MonomialIdeal, cert: &QuotientCertificate) -> Result<(), String> {
    let gens = ideal.generators();
    let k = gens.len();
    let mut seen = vec![false; k];
    if cert.ordering.len() != k {
        return Err(format!("ordering has {} entries, ideal has {k} generators", cert.ordering.len()));
    }
    for &g in &cert.ordering {
        if g >= k || std::mem::replace(&mut seen[g], true) {
            return Err(format!("ordering is not a permutation (index {g})"));
        }
    }
    for (pos, &g) in cert.ordering.iter().enumerate() {
        if cert.generators.get(pos) != Some(&gens[g].to_string()) {
            return Err(format!("generator label mismatch at position {pos}"));
        }
    }
    if cert.steps.len() != k.saturating_sub(1) {
        return Err("wrong number of steps".into());
    }
    for (idx, step) in cert.steps.iter().enumerate() {
        let pos = idx + 1;
        if step.position != pos || step.witnesses.len() != pos {
            return Err(format!("malformed step {idx}"));
        }
        let current = &gens[cert.ordering[pos]];
        for (j, w) in step.witnesses.iter().enumerate() {
            if w.earlier != j || w.via >= pos || w.variable >= ideal.context().len() {
                return Err(format!("malformed witness at step {pos}"));
            }
            let x = Monomial::variable(ideal.context(), w.variable);
            let via = gens[cert.ordering[w.via]].colon(current);
            if via != x {
                return Err(format!("step {pos}: {} / gcd is {via}, not the variable {x}", gens[cert.ordering[w.via]]));
            }
            let q = gens[cert.ordering[j]].colon(current);
            if !x.divides(&q) {
                return Err(format!("step {pos}: {x} does not divide {q}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(names: &[&str]) -> VariableContext {
        VariableContext::new(names.iter().copied()).unwrap()
    }

    fn parse(c: &VariableContext, s: &str) -> Monomial {
        crate::monomial::parse_monomial(s, c).unwrap()
    }

    fn ideal(c: &VariableContext, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(c, gens.iter().map(|g| parse(c, g)).collect()).unwrap()
    }

    fn strs(ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn minimalize_examples() {
        let c = ctx(&["x", "y", "z", "w"]);
        let p = |v: &[&str]| v.iter().map(|g| parse(&c, g)).collect::<Vec<_>>();
        assert_eq!(strs(&minimalize(p(&["x*y", "x*y*z"])).unwrap()), ["x*y"]);
        assert_eq!(strs(&minimalize(p(&["x^2", "x^3", "y"])).unwrap()), ["y", "x^2"]);
        assert_eq!(strs(&minimalize(p(&["x*y", "y*z", "z*w"])).unwrap()), ["x*y", "y*z", "z*w"]);
        assert!(minimalize(vec![]).unwrap().is_empty());
        let other = ctx(&["a"]);
        assert!(matches!(minimalize(vec![parse(&c, "x"), parse(&other, "a")]), Err(Error::ContextMismatch)));
    }

    #[test]
    fn unit_generator_rejected() {
        let c = ctx(&["x"]);
        assert!(matches!(MonomialIdeal::new(&c, vec![Monomial::one(&c)]), Err(Error::UnitGenerator)));
    }

    #[test]
    fn colon_examples() {
        let c = ctx(&["x", "y", "z"]);
        let i = ideal(&c, &["x*y", "y*z"]);
        assert_eq!(strs(&i.colon_generators(&parse(&c, "z")).unwrap()), ["y"]);
        assert_eq!(strs(&i.colon_generators(&Monomial::one(&c)).unwrap()), ["x*y", "y*z"]);
        let j = ideal(&c, &["x^2*y", "y*z"]);
        assert_eq!(strs(&j.colon_generators(&parse(&c, "x*y")).unwrap()), ["x", "z"]);
    }

    #[test]
    fn linear_divisor_examples() {
        let c = ctx(&["x", "y", "z", "w"]);
        let i = ideal(&c, &["x*y", "y*z"]);
        assert!(i.is_linear_divisor(&parse(&c, "z*w")).unwrap());
        let p = ideal(&c, &["x*y"]);
        assert!(!p.is_linear_divisor(&parse(&c, "z*w")).unwrap());
        // colon by a generator is the unit ideal, which is not variable-generated
        assert!(!p.is_linear_divisor(&parse(&c, "x*y")).unwrap());
    }

    #[test]
    fn linear_quotients_examples() {
        let c = ctx(&["x", "y", "z", "w"]);
        let path = ideal(&c, &["x*y", "y*z", "z*w"]);
        let cert = path.find_linear_quotients_order(Budget::default()).unwrap().found().unwrap();
        assert_eq!(cert.generators, ["x*y", "y*z", "z*w"]);
        verify_quotient_certificate(&path, &cert).unwrap();

        let c5 = VariableContext::standard(5);
        let cycle = ideal(&c5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
        assert_eq!(cycle.find_linear_quotients_order(Budget::default()).unwrap(), Search::NotFound);

        let single = ideal(&c, &["x*y*z"]);
        let cert = single.find_linear_quotients_order(Budget::default()).unwrap().found().unwrap();
        assert_eq!(cert.ordering, [0]);
        assert!(cert.steps.is_empty());
    }

    #[test]
    fn tampered_certificate_rejected() {
        let c = ctx(&["x", "y", "z", "w"]);
        let path = ideal(&c, &["x*y", "y*z", "z*w"]);
        let mut cert = path.find_linear_quotients_order(Budget::default()).unwrap().found().unwrap();
        cert.steps[1].witnesses[0].variable = 3;
        assert!(verify_quotient_certificate(&path, &cert).is_err());
    }

    #[test]
    fn tiny_budget_exhausts() {
        let c5 = VariableContext::standard(5);
        let cycle = ideal(&c5, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
        assert_eq!(cycle.find_linear_quotients_order(Budget::nodes(3)).unwrap(), Search::Exhausted);
    }

    #[test]
    fn polarization_examples() {
        let c = ctx(&["x", "y", "z"]);
        let p = ideal(&c, &["x^2", "x*y"]).polarize().unwrap();
        assert_eq!(p.context().names(), ["x_1", "x_2", "y_1"]);
        assert_eq!(p.to_string(), "(x_1*x_2, x_1*y_1)");
        assert_eq!(ideal(&c, &["x^3"]).polarize().unwrap().to_string(), "(x_1*x_2*x_3)");
        let sf = ideal(&c, &["x*y", "y*z"]).polarize().unwrap();
        assert_eq!(sf.to_string(), "(x_1*y_1, y_1*z_1)");
        assert!(sf.is_squarefree());
    }

    #[test]
    fn equigenerated_examples() {
        let c = ctx(&["x", "y", "z"]);
        assert_eq!(ideal(&c, &["x*y", "y*z"]).is_equigenerated(), Some(2));
        assert_eq!(ideal(&c, &["x*y", "x*y*z"]).is_equigenerated(), Some(2));
        assert_eq!(ideal(&c, &["x", "y*z"]).is_equigenerated(), None);
    }
}
