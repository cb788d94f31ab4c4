//! Corpus specifications and seeded instance generation.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{all_graphs, edge_ideal, named, GraphJson, SimpleGraph};
use crate::monomial::{parse_ideal, IdealJson, Monomial, MonomialIdeal, VariableContext};

/// One corpus component. Specs are written as `part+part+...`:
///
/// - `all-graphs-N`: the labelled graphs on exactly `N` vertices
/// - `graphs-upto-N`: the labelled graphs on `1..=N` vertices
/// - `named-graphs`: C5, C6, P4, 2K2, K4, K3
/// - `random-squarefree:d=3,n=6,count=200,seed=0[,min=1,max=10]`
/// - `random-monomial:n=4,maxexp=3,count=100,seed=0[,maxgens=5]`
/// - `sampled-squarefree:n=5,count=200,seed=0`
/// - `ideal:<generators>`
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusPart {
    AllGraphs { n: usize },
    GraphsUpTo { n: usize },
    NamedGraphs,
    RandomSquarefree { d: usize, n: usize, min: usize, max: usize, count: usize, seed: u64 },
    RandomMonomial { n: usize, maxexp: u32, maxgens: usize, count: usize, seed: u64 },
    SampledSquarefree { n: usize, count: usize, seed: u64 },
    Ideal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub parts: Vec<CorpusPart>,
}

pub const MAX_ENUMERATED_GRAPH_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    Graph { name: String, graph: GraphJson },
    Ideal { name: String, ideal: IdealJson },
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Graph { name, .. } | Instance::Ideal { name, .. } => name,
        }
    }

    pub fn graph(&self) -> Result<Option<SimpleGraph>> {
        match self {
            Instance::Graph { graph, .. } => Ok(Some(serde_json::from_value(serde_json::to_value(graph)?)?)),
            Instance::Ideal { .. } => Ok(None),
        }
    }

    /// The ideal under test; `None` for an edgeless graph.
    pub fn ideal(&self) -> Result<Option<MonomialIdeal>> {
        match self {
            Instance::Ideal { ideal, .. } => ideal.to_ideal().map(Some),
            Instance::Graph { .. } => {
                let g = self.graph()?.expect("graph instance");
                if g.edge_count() == 0 {
                    Ok(None)
                } else {
                    edge_ideal(&g).map(Some)
                }
            }
        }
    }

    fn of_graph(name: String, g: &SimpleGraph) -> Self {
        Instance::Graph { name, graph: g.to_json() }
    }

    fn of_ideal(name: String, i: &MonomialIdeal) -> Self {
        Instance::Ideal { name, ideal: i.into() }
    }
}

fn kv(body: &str) -> Result<Vec<(String, String)>> {
    body.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (k, v) = s.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {s:?}")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn num<T: FromStr>(pairs: &[(String, String)], key: &str, default: Option<T>) -> Result<T> {
    match pairs.iter().find(|(k, _)| k == key) {
        Some((_, v)) => v.parse().map_err(|_| Error::Parse(format!("bad value for {key}: {v:?}"))),
        None => default.ok_or_else(|| Error::Parse(format!("missing corpus parameter {key}"))),
    }
}

fn check_keys(pairs: &[(String, String)], allowed: &[&str]) -> Result<()> {
    match pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => Err(Error::Parse(format!("unknown corpus parameter {k:?}"))),
        None => Ok(()),
    }
}

impl FromStr for CorpusPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(text) = s.strip_prefix("ideal:") {
            parse_ideal(text)?;
            return Ok(CorpusPart::Ideal(text.to_string()));
        }
        let graph_order = |rest: &str| -> Result<usize> {
            let n: usize = rest.parse().map_err(|_| Error::Parse(format!("bad graph order in {s:?}")))?;
            if n > MAX_ENUMERATED_GRAPH_ORDER {
                return Err(Error::TooLarge {
                    what: "enumerated graph order",
                    size: n,
                    cap: MAX_ENUMERATED_GRAPH_ORDER,
                });
            }
            Ok(n)
        };
        if let Some(rest) = s.strip_prefix("all-graphs-") {
            return Ok(CorpusPart::AllGraphs { n: graph_order(rest)? });
        }
        if let Some(rest) = s.strip_prefix("graphs-upto-") {
            return Ok(CorpusPart::GraphsUpTo { n: graph_order(rest)? });
        }
        if s == "named-graphs" {
            return Ok(CorpusPart::NamedGraphs);
        }
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        let p = kv(body)?;
        match kind {
            "random-squarefree" => {
                check_keys(&p, &["d", "n", "min", "max", "count", "seed"])?;
                let (d, n) = (num(&p, "d", None)?, num(&p, "n", None)?);
                let (min, max) = (num(&p, "min", Some(1))?, num(&p, "max", Some(10))?);
                if d == 0 || d > n || n > 16 || min == 0 || min > max {
                    return Err(Error::Parse(format!("inconsistent parameters in {s:?}")));
                }
                Ok(CorpusPart::RandomSquarefree {
                    d,
                    n,
                    min,
                    max,
                    count: num(&p, "count", None)?,
                    seed: num(&p, "seed", Some(0))?,
                })
            }
            "random-monomial" => {
                check_keys(&p, &["n", "maxexp", "maxgens", "count", "seed"])?;
                let (n, maxexp, maxgens) =
                    (num(&p, "n", None)?, num(&p, "maxexp", None)?, num(&p, "maxgens", Some(5))?);
                if n == 0 || n > 8 || maxexp < 2 || maxgens == 0 {
                    return Err(Error::Parse(format!("inconsistent parameters in {s:?}")));
                }
                Ok(CorpusPart::RandomMonomial {
                    n,
                    maxexp,
                    maxgens,
                    count: num(&p, "count", None)?,
                    seed: num(&p, "seed", Some(0))?,
                })
            }
            "sampled-squarefree" => {
                check_keys(&p, &["n", "count", "seed"])?;
                let n = num(&p, "n", None)?;
                if !(3..=8).contains(&n) {
                    return Err(Error::Parse(format!("sampled-squarefree needs 3 <= n <= 8, got {n}")));
                }
                Ok(CorpusPart::SampledSquarefree { n, count: num(&p, "count", None)?, seed: num(&p, "seed", Some(0))? })
            }
            _ => Err(Error::Parse(format!("unknown corpus {s:?}"))),
        }
    }
}

impl fmt::Display for CorpusPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusPart::AllGraphs { n } => write!(f, "all-graphs-{n}"),
            CorpusPart::GraphsUpTo { n } => write!(f, "graphs-upto-{n}"),
            CorpusPart::NamedGraphs => f.write_str("named-graphs"),
            CorpusPart::RandomSquarefree { d, n, min, max, count, seed } => {
                write!(f, "random-squarefree:d={d},n={n},min={min},max={max},count={count},seed={seed}")
            }
            CorpusPart::RandomMonomial { n, maxexp, maxgens, count, seed } => {
                write!(f, "random-monomial:n={n},maxexp={maxexp},maxgens={maxgens},count={count},seed={seed}")
            }
            CorpusPart::SampledSquarefree { n, count, seed } => {
                write!(f, "sampled-squarefree:n={n},count={count},seed={seed}")
            }
            CorpusPart::Ideal(text) => write!(f, "ideal:{text}"),
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut rest = s.trim();
        // `ideal:` swallows the remainder, so it must come last
        while !rest.is_empty() {
            if rest.starts_with("ideal:") {
                parts.push(rest.parse()?);
                break;
            }
            let (head, tail) = rest.split_once('+').unwrap_or((rest, ""));
            parts.push(head.parse()?);
            rest = tail.trim();
        }
        if parts.is_empty() {
            return Err(Error::Parse("empty corpus spec".into()));
        }
        Ok(CorpusSpec { parts })
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl CorpusSpec {
    /// Replaces the seed of every random part.
    pub fn with_seed(mut self, seed: u64) -> Self {
        for p in &mut self.parts {
            match p {
                CorpusPart::RandomSquarefree { seed: s, .. }
                | CorpusPart::RandomMonomial { seed: s, .. }
                | CorpusPart::SampledSquarefree { seed: s, .. } => *s = seed,
                _ => {}
            }
        }
        self
    }

    pub fn instances(&self) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for p in &self.parts {
            out.extend(p.instances()?);
        }
        Ok(out)
    }
}

impl CorpusPart {
    pub fn instances(&self) -> Result<Vec<Instance>> {
        match *self {
            CorpusPart::AllGraphs { n } => Ok(graphs_on(n)),
            CorpusPart::GraphsUpTo { n } => Ok((1..=n).flat_map(graphs_on).collect()),
            CorpusPart::NamedGraphs => {
                Ok(named_graphs().into_iter().map(|(name, g)| Instance::of_graph(name.into(), &g)).collect())
            }
            CorpusPart::RandomSquarefree { d, n, min, max, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|k| {
                        Ok(Instance::of_ideal(
                            format!("random-squarefree seed={seed} #{k}"),
                            &random_squarefree(&mut rng, d, n, min, max)?,
                        ))
                    })
                    .collect()
            }
            CorpusPart::RandomMonomial { n, maxexp, maxgens, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|k| {
                        Ok(Instance::of_ideal(
                            format!("random-monomial seed={seed} #{k}"),
                            &random_non_squarefree(&mut rng, n, maxexp, maxgens)?,
                        ))
                    })
                    .collect()
            }
            CorpusPart::SampledSquarefree { n, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|k| {
                        Ok(Instance::of_ideal(
                            format!("sampled-squarefree seed={seed} #{k}"),
                            &sampled_squarefree(&mut rng, n)?,
                        ))
                    })
                    .collect()
            }
            CorpusPart::Ideal(ref text) => Ok(vec![Instance::of_ideal(text.clone(), &parse_ideal(text)?)]),
        }
    }
}

fn graphs_on(n: usize) -> Vec<Instance> {
    all_graphs(n).map(|g| Instance::of_graph(format!("n={n} g6={}", g.to_graph6()), &g)).collect()
}

pub fn named_graphs() -> Vec<(&'static str, SimpleGraph)> {
    vec![
        ("C5", named::cycle(5)),
        ("C6", named::cycle(6)),
        ("P4", named::path(4)),
        ("2K2", named::two_k2()),
        ("K4", named::complete(4)),
        ("K3", named::complete(3)),
    ]
}

fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    rng.gen_range(0..n as u32) as usize
}

fn subsets_of_size(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == d)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

/// A generator count uniform in `min..=max` (clamped to the number of
/// candidates), then that many distinct uniform degree-`d` squarefree
/// monomials on `x1..xn`.
pub fn random_squarefree(rng: &mut ChaCha8Rng, d: usize, n: usize, min: usize, max: usize) -> Result<MonomialIdeal> {
    let ctx = VariableContext::standard(n);
    let pool = subsets_of_size(n, d);
    let max = max.min(pool.len());
    let k = min.min(max) + below(rng, max - min.min(max) + 1);
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    while chosen.len() < k {
        let c = below(rng, pool.len());
        if !chosen.contains(&c) {
            chosen.push(c);
        }
    }
    MonomialIdeal::new(
        &ctx,
        chosen.into_iter().map(|c| Monomial::from_support(&ctx, pool[c].iter().copied())).collect(),
    )
}

/// Non-squarefree ideals on `1..=n` variables with exponents at most
/// `maxexp`; about half are generated in a single degree. Samples until the
/// minimal generators are not all squarefree.
pub fn random_non_squarefree(rng: &mut ChaCha8Rng, n: usize, maxexp: u32, maxgens: usize) -> Result<MonomialIdeal> {
    loop {
        let nv = 1 + below(rng, n);
        let ctx = VariableContext::standard(nv);
        let k = 1 + below(rng, maxgens);
        let equi = rng.gen_bool(0.5);
        let top = maxexp as usize * nv;
        let degree = 2 + below(rng, top.min(2 * maxexp as usize) - 1);
        let mut gens = Vec::with_capacity(k);
        while gens.len() < k {
            let e: Vec<u32> = (0..nv).map(|_| below(rng, maxexp as usize + 1) as u32).collect();
            let deg: u32 = e.iter().sum();
            if deg == 0 || (equi && deg as usize != degree) {
                continue;
            }
            gens.push(Monomial::new(&ctx, e)?);
        }
        let ideal = MonomialIdeal::new(&ctx, gens)?;
        if !ideal.is_squarefree() {
            return Ok(ideal);
        }
    }
}

/// Squarefree ideals on `3..=n` variables: generator degrees are drawn from
/// `1..=nv`, with about half of the ideals forced to a single degree.
pub fn sampled_squarefree(rng: &mut ChaCha8Rng, n: usize) -> Result<MonomialIdeal> {
    let nv = 3 + below(rng, n - 2);
    let ctx = VariableContext::standard(nv);
    let equi = rng.gen_bool(0.5);
    let degree = 1 + below(rng, nv);
    let k = 1 + below(rng, 6);
    let mut gens = Vec::with_capacity(k);
    for _ in 0..k {
        let d = if equi { degree } else { 1 + below(rng, nv) };
        let pool = subsets_of_size(nv, d);
        gens.push(Monomial::from_support(&ctx, pool[below(rng, pool.len())].iter().copied()));
    }
    MonomialIdeal::new(&ctx, gens)
}
