//! Finite prefixes of real sequences as exact rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A finite prefix `(a_0, ..., a_N)` of a sequence, stored exactly.
///
/// Index `n` holds `a_n`. A prefix is never empty; operations that shorten
/// prefixes return a new `MomentPrefix` whose `len` is the authoritative
/// output length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPrefix {
    terms: Vec<Rational>,
}

impl MomentPrefix {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        Ok(Self { terms })
    }

    /// Convenience constructor from integer terms. Panics on an empty slice.
    pub fn from_integers(terms: &[i64]) -> Self {
        assert!(!terms.is_empty(), "prefix must be nonempty");
        Self {
            terms: terms.iter().map(|&n| int(n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest index `N` of the prefix `(a_0..a_N)`.
    pub fn max_index(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &Rational {
        &self.terms[n]
    }

    pub fn is_all_zero(&self) -> bool {
        self.terms.iter().all(Zero::is_zero)
    }

    /// The shift operator: drops the first `s` terms.
    pub fn shift(&self, s: usize) -> Result<MomentPrefix> {
        if self.terms.len() <= s {
            return Err(Error::InsufficientTerms {
                required: s + 1,
                actual: self.terms.len(),
            });
        }
        Ok(MomentPrefix {
            terms: self.terms[s..].to_vec(),
        })
    }
}
