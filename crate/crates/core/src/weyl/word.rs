use std::fmt;

use serde::{Deserialize, Serialize};

use super::ExtAffineWeylElement;
use crate::error::{Error, Result};

/// A word in the Coxeter generators `s_0, ..., s_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, rank: usize) -> Result<ExtAffineWeylElement> {
        let mut g = ExtAffineWeylElement::identity(rank);
        for &i in self.0.iter().rev() {
            if i > rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank });
            }
            g = g.left_mul_generator(i);
        }
        Ok(g)
    }

    pub fn is_reduced(&self, rank: usize) -> Result<bool> {
        Ok(self.evaluate(rank)?.length() == self.len())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.0).map_err(|_| fmt::Error)?)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}
