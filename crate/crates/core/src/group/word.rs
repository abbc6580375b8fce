use std::fmt;
use std::str::FromStr;

use super::table::{Elem, GroupTable};
use crate::error::{GroupError, Result};

/// A word in named generators, e.g. `z^-1 x z x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ElementWord(pub Vec<(String, i64)>);

impl ElementWord {
    pub fn new(letters: Vec<(String, i64)>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.0
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(l, _)| l.as_str())
    }

    /// Evaluates the word left to right in `g`.
    pub fn evaluate(&self, g: &GroupTable) -> Result<Elem> {
        self.evaluate_with(|label| g.generator(label), g)
    }

    pub(crate) fn evaluate_with(
        &self,
        lookup: impl Fn(&str) -> Option<Elem>,
        g: &GroupTable,
    ) -> Result<Elem> {
        let mut acc = g.identity();
        for (label, exp) in &self.0 {
            let e = lookup(label).ok_or_else(|| GroupError::UnknownLabel(label.clone()))?;
            acc = g.mul(acc, g.pow(e, *exp));
        }
        Ok(acc)
    }
}

impl fmt::Display for ElementWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (label, exp)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *exp == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{label}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Parses `x^-1 y z^2`, `x*y`, or `1` (the empty word). Letters are separated
/// by whitespace or `*`.
impl FromStr for ElementWord {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in s.split(|c: char| c.is_whitespace() || c == '*') {
            if token.is_empty() || token == "1" {
                continue;
            }
            let (label, exp) = match token.split_once('^') {
                Some((l, e)) => {
                    let exp = e.parse::<i64>().map_err(|_| {
                        GroupError::InvalidSpec(format!("bad exponent in `{token}`"))
                    })?;
                    (l, exp)
                }
                None => (token, 1),
            };
            if label.is_empty()
                || !label
                    .chars()
                    .all(|c| c.is_alphanumeric() || c == '_' || c == '.')
            {
                return Err(GroupError::InvalidSpec(format!("bad generator in `{token}`")));
            }
            letters.push((label.to_string(), exp));
        }
        Ok(Self(letters))
    }
}

/// True iff every word evaluates to the identity.
pub fn verify_relations(g: &GroupTable, words: &[ElementWord]) -> Result<bool> {
    for w in words {
        if w.evaluate(g)? != g.identity() {
            return Ok(false);
        }
    }
    Ok(true)
}
