use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Element;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;
use crate::weyl::Parabolic;

/// The two maximal finite parabolic subalgebras.
///
/// `H0` is generated by `t_0, ..., t_{n-1}` and `Hn` by `t_1, ..., t_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParabolicLabel {
    H0,
    Hn,
}

impl ParabolicLabel {
    pub fn generators(self, rank: usize) -> Vec<usize> {
        match self {
            ParabolicLabel::H0 => (0..rank).collect(),
            ParabolicLabel::Hn => (1..=rank).collect(),
        }
    }

    pub fn parabolic(self, rank: usize) -> Parabolic {
        Parabolic::new(rank, &self.generators(rank)).expect("maximal parabolics are finite")
    }

    pub fn name(self) -> &'static str {
        match self {
            ParabolicLabel::H0 => "H_0",
            ParabolicLabel::Hn => "H_n",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Parabolic(ParabolicLabel),
    Full,
}

impl Domain {
    pub fn generators(self, rank: usize) -> Vec<usize> {
        match self {
            Domain::Parabolic(label) => label.generators(rank),
            Domain::Full => (0..=rank).collect(),
        }
    }
}

/// A one-dimensional character: an eigenvalue for each generator of its
/// domain, each a root of that generator's quadratic relation.
#[derive(Clone, PartialEq, Eq)]
pub struct Character<C> {
    name: String,
    domain: Domain,
    rank: usize,
    values: BTreeMap<usize, Laurent<C>>,
}

impl<C: Coefficient> Character<C> {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        rank: usize,
        values: BTreeMap<usize, Laurent<C>>,
    ) -> Result<Self> {
        let gens = domain.generators(rank);
        for &i in &gens {
            let v = values.get(&i).ok_or_else(|| {
                Error::OutsideCharacterDomain(format!("no value given for t_{i}"))
            })?;
            let ok = if i == 0 {
                *v == Laurent::one() || *v == Laurent::from_int(-1)
            } else {
                *v == Laurent::q() || *v == Laurent::from_int(-1)
            };
            if !ok {
                return Err(Error::InvalidCharacterValue {
                    index: i,
                    value: v.to_string(),
                });
            }
        }
        if let Some(&extra) = values.keys().find(|i| !gens.contains(i)) {
            return Err(Error::OutsideCharacterDomain(format!(
                "t_{extra} is not in the domain"
            )));
        }
        Ok(Self {
            name: name.into(),
            domain,
            rank,
            values,
        })
    }

    fn build(name: &str, domain: Domain, rank: usize, f: impl Fn(usize) -> Laurent<C>) -> Self {
        let values = domain.generators(rank).into_iter().map(|i| (i, f(i))).collect();
        Self::new(name, domain, rank, values).expect("distinguished characters are valid")
    }

    /// `sgn` on `H_n`: every `t_i ↦ -1`.
    pub fn sgn(rank: usize) -> Self {
        Self::build("sgn", Domain::Parabolic(ParabolicLabel::Hn), rank, |_| {
            Laurent::from_int(-1)
        })
    }

    /// `sgn'` on `H_n`: `t_n ↦ q`, other `t_i ↦ -1`.
    pub fn sgn_prime(rank: usize) -> Self {
        Self::build("sgn'", Domain::Parabolic(ParabolicLabel::Hn), rank, |i| {
            if i == rank {
                Laurent::q()
            } else {
                Laurent::from_int(-1)
            }
        })
    }

    /// `ε^±` on `H_0`: `t_0 ↦ ±1`, other `t_i ↦ -1`.
    pub fn epsilon(rank: usize, plus: bool) -> Self {
        let name = if plus { "eps+" } else { "eps-" };
        Self::build(name, Domain::Parabolic(ParabolicLabel::H0), rank, |i| {
            if i == 0 {
                Laurent::from_int(if plus { 1 } else { -1 })
            } else {
                Laurent::from_int(-1)
            }
        })
    }

    /// `St^±` on all of `H`: `t_0 ↦ ±1`, `t_i ↦ -1` for `i ≥ 1`.
    pub fn steinberg(rank: usize, plus: bool) -> Self {
        let name = if plus { "St+" } else { "St-" };
        Self::build(name, Domain::Full, rank, |i| {
            if i == 0 {
                Laurent::from_int(if plus { 1 } else { -1 })
            } else {
                Laurent::from_int(-1)
            }
        })
    }

    /// The index character `t_0 ↦ 1`, `t_i ↦ q`.
    pub fn triv_index(rank: usize) -> Self {
        Self::build("triv", Domain::Full, rank, |i| {
            if i == 0 {
                Laurent::one()
            } else {
                Laurent::q()
            }
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Eigenvalue of `t_i`, if `i` lies in the domain.
    pub fn value(&self, i: usize) -> Option<&Laurent<C>> {
        self.values.get(&i)
    }

    pub fn values(&self) -> &BTreeMap<usize, Laurent<C>> {
        &self.values
    }

    /// `χ(T_w)` for `w` given by a word in the domain's generators.
    pub fn value_on_word(&self, letters: &[usize]) -> Result<Laurent<C>> {
        letters.iter().try_fold(Laurent::one(), |acc, &i| {
            self.values
                .get(&i)
                .map(|v| &acc * v)
                .ok_or_else(|| Error::OutsideCharacterDomain(format!("t_{i}")))
        })
    }

    /// Extends the character linearly and multiplicatively to `a`.
    pub fn apply(&self, a: &Element<C>) -> Result<Laurent<C>> {
        if a.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: a.rank(),
            });
        }
        let mut total = Laurent::zero();
        for (w, c) in a.iter() {
            let v = self
                .value_on_word(w.reduced_word().letters())
                .map_err(|_| Error::OutsideCharacterDomain(w.to_string()))?;
            total += &(&v * c);
        }
        Ok(total)
    }

    /// Whether `full` agrees with `self` on every generator of `self`'s
    /// domain.
    pub fn agrees_with(&self, full: &Character<C>) -> bool {
        self.values
            .iter()
            .all(|(i, v)| full.value(*i).is_some_and(|w| w == v))
    }
}

impl<C: Coefficient> fmt::Debug for Character<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.name, self.values)
    }
}

/// Eigenvalues of `t'_0, ..., t'_{n+1}` on the Iwahori-fixed line of the
/// Steinberg representation of the type-D̃ algebra: `t'_0 ↦ 1`, all
/// others `↦ -1`.
pub fn d_steinberg_values(n: usize) -> Vec<i64> {
    (0..=n + 1).map(|i| if i == 0 { 1 } else { -1 }).collect()
}
