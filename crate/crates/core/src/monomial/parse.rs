use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialIdeal, VariableContext};
use crate::error::{Error, Result};

/// Parses `x*y^2*z`, `x1^2*x3` or `1` over a known context.
pub fn parse_monomial(s: &str, ctx: &VariableContext) -> Result<Monomial> {
    let mut exps = vec![0u32; ctx.len()];
    for (name, e) in factors(s)? {
        let i = ctx.index_of(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[i] += e;
    }
    Monomial::new(ctx, exps)
}

fn factors(s: &str) -> Result<Vec<(&str, u32)>> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|tok| {
            let tok = tok.trim();
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                    (n.trim(), e)
                }
                None => (tok, 1),
            };
            let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse(format!("bad variable name {name:?}")));
            }
            Ok((name, exp))
        })
        .collect()
}

/// Orders `x2` before `x10`: compares alphabetic prefixes, then numeric
/// suffixes, then the full string.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn split(s: &str) -> (&str, Option<u64>) {
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        (&s[..cut], s[cut..].parse().ok())
    }
    let (pa, na) = split(a);
    let (pb, nb) = split(b);
    pa.cmp(pb).then(na.cmp(&nb)).then_with(|| a.cmp(b))
}

/// Parses a comma- or whitespace-separated list of monomial strings,
/// optionally wrapped in parentheses. Variables are inferred in order of
/// first appearance, or sorted naturally when every name ends in a digit.
fn parse_ideal_text(s: &str) -> Result<MonomialIdeal> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let terms: Vec<&str> =
        body.split(|c: char| c == ',' || c == ';' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    let mut names: Vec<String> = Vec::new();
    for t in &terms {
        for (name, _) in factors(t)? {
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    if names.iter().all(|n| n.ends_with(|c: char| c.is_ascii_digit())) {
        names.sort_by(|a, b| natural_cmp(a, b));
    }
    let ctx = VariableContext::new(names)?;
    let gens = terms.iter().map(|t| parse_monomial(t, &ctx)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(&ctx, gens)
}

/// Reads an ideal from either the JSON form or the plain-text form.
pub fn parse_ideal(input: &str) -> Result<MonomialIdeal> {
    if input.trim_start().starts_with('{') {
        serde_json::from_str::<IdealJson>(input)?.to_ideal()
    } else {
        parse_ideal_text(input)
    }
}

/// Serialized form of an ideal. Generators are exponent vectors on input and
/// output; monomial strings are also accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<GeneratorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pretty: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorJson {
    Exponents(Vec<u32>),
    Text(String),
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let ctx = VariableContext::new(self.variables.iter().cloned())?;
        let gens = self
            .generators
            .iter()
            .map(|g| match g {
                GeneratorJson::Exponents(e) => Monomial::new(&ctx, e.clone()),
                GeneratorJson::Text(s) => parse_monomial(s, &ctx),
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(&ctx, gens)
    }
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            variables: ideal.context().names().to_vec(),
            generators: ideal.generators().iter().map(|g| GeneratorJson::Exponents(g.exponents().to_vec())).collect(),
            pretty: Some(ideal.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_string_styles() {
        let i = parse_ideal("x*y^2*z, y*z").unwrap();
        assert_eq!(i.context().names(), ["x", "y", "z"]);
        assert_eq!(i.to_string(), "(y*z)");
        let j = parse_ideal("(x1^2*x3, x10*x2)").unwrap();
        assert_eq!(j.context().names(), ["x1", "x2", "x3", "x10"]);
        assert_eq!(j.generators()[1].exponents(), &[2, 0, 1, 0]);
    }

    #[test]
    fn json_form() {
        let i = parse_ideal(r#"{"variables":["x","y","z"],"generators":[[1,1,0],[0,1,1]]}"#).unwrap();
        assert_eq!(i.to_string(), "(x*y, y*z)");
        let back: IdealJson = (&i).into();
        let text = serde_json::to_string(&back).unwrap();
        assert_eq!(text, r#"{"variables":["x","y","z"],"generators":[[1,1,0],[0,1,1]],"pretty":"(x*y, y*z)"}"#);
        let mixed = parse_ideal(r#"{"variables":["x","y"],"generators":["x^2", [1,1]]}"#).unwrap();
        assert_eq!(mixed.to_string(), "(x^2, x*y)");
    }

    #[test]
    fn parse_errors() {
        let ctx = VariableContext::standard(2);
        assert!(parse_monomial("x3", &ctx).is_err());
        assert!(parse_monomial("x1^a", &ctx).is_err());
        assert!(parse_monomial("2*x1", &ctx).is_err());
        assert!(parse_ideal(r#"{"variables":["x"],"generators":[[1,1]]}"#).is_err());
        assert_eq!(parse_monomial(" 1 ", &ctx).unwrap(), Monomial::one(&ctx));
    }
}
