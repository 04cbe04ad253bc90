use std::collections::BTreeMap;
use std::fmt;

use super::{BracketedWord, LankeError, Tree};
use crate::linalg::Rational;

/// A rational combination of normalized bracketed words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LAnKeElement {
    terms: BTreeMap<BracketedWord, Rational>,
}

impl LAnKeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c * tree`, normalizing the tree first.
    pub fn add_tree(&mut self, c: &Rational, tree: &Tree, n: usize) -> Result<(), LankeError> {
        if let Some((w, sign)) = BracketedWord::normalize(tree, n)? {
            let c = if sign < 0 { -c } else { c.clone() };
            self.add_word(&c, w);
        }
        Ok(())
    }

    pub fn add_word(&mut self, c: &Rational, w: BracketedWord) {
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<BracketedWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LAnKeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { "" } else { " + " };
            write!(f, "{sep}{c}*{w}")?;
        }
        Ok(())
    }
}
