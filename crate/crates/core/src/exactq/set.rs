use std::collections::HashSet;

use super::rational::{parse_rational, Rational};
use super::ExactError;

/// A finite set of rationals in insertion order with a hash index.
#[derive(Clone, Debug, Default)]
pub struct RatSet {
    items: Vec<Rational>,
    index: HashSet<Rational>,
}

impl RatSet {
    pub fn new() -> Self {
        RatSet::default()
    }

    /// Inserts `r`; returns false when it was already present.
    pub fn insert(&mut self, r: Rational) -> bool {
        if self.index.contains(&r) {
            return false;
        }
        self.index.insert(r.clone());
        self.items.push(r);
        true
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.index.contains(r)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.items
    }

    /// Elements in ascending order.
    pub fn sorted(&self) -> Vec<Rational> {
        let mut v = self.items.clone();
        v.sort();
        v
    }

    pub fn from_ints(values: impl IntoIterator<Item = i64>) -> Self {
        values
            .into_iter()
            .map(|n| Rational::from_integer(n.into()))
            .collect()
    }
}

impl PartialEq for RatSet {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
    }
}

impl Eq for RatSet {}

impl FromIterator<Rational> for RatSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut s = RatSet::new();
        for r in iter {
            s.insert(r);
        }
        s
    }
}

impl<'a> IntoIterator for &'a RatSet {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Reads one rational per line; blank lines and lines starting with '#' are
/// skipped. Repeated values are an error.
pub fn parse_set_file(text: &str) -> Result<RatSet, ExactError> {
    let mut set = RatSet::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let r = parse_rational(t).map_err(|e| ExactError::SetFile { line: i + 1, message: e.to_string() })?;
        if !set.insert(r) {
            return Err(ExactError::SetFile { line: i + 1, message: format!("duplicate value {t}") });
        }
    }
    Ok(set)
}
