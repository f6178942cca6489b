use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;
use crate::weyl::{ExtAffineWeylElement, Word};

/// A single factor `T_{s_i}` or `T_{s_i}^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenOp {
    pub index: usize,
    pub inverse: bool,
}

impl GenOp {
    pub fn t(index: usize) -> Self {
        Self {
            index,
            inverse: false,
        }
    }

    pub fn t_inv(index: usize) -> Self {
        Self {
            index,
            inverse: true,
        }
    }
}

/// Factors of `T_w` along the reduced word of `w`, in the order they are
/// applied to a vector on the right (innermost first).
pub fn basis_ops(w: &ExtAffineWeylElement) -> Vec<GenOp> {
    w.reduced_word().letters().iter().rev().map(|&i| GenOp::t(i)).collect()
}

/// Factors of `T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1}` in application
/// order.
pub fn basis_inverse_ops(w: &ExtAffineWeylElement) -> Vec<GenOp> {
    w.reduced_word().letters().iter().map(|&i| GenOp::t_inv(i)).collect()
}

/// Accumulates `c` into `map[key]`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: std::hash::Hash + Eq, C: Coefficient>(
    map: &mut FxHashMap<K, Laurent<C>>,
    key: K,
    c: Laurent<C>,
) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// `(q - 1) c`.
pub(crate) fn times_q_minus_one<C: Coefficient>(c: &Laurent<C>) -> Laurent<C> {
    &c.shift(1) - c
}

/// `(q^{-1} - 1) c`.
pub(crate) fn times_qinv_minus_one<C: Coefficient>(c: &Laurent<C>) -> Laurent<C> {
    &c.shift(-1) - c
}

/// An element `Σ c_w T_w` of the Iwahori–Hecke algebra with parameters
/// `q_{s_0} = 1` and `q_{s_i} = q` for `i ≠ 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<C> {
    rank: usize,
    terms: FxHashMap<ExtAffineWeylElement, Laurent<C>>,
}

impl<C: Coefficient> Element<C> {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: FxHashMap::default(),
        }
    }

    pub fn unit(rank: usize) -> Self {
        Self::basis(&ExtAffineWeylElement::identity(rank))
    }

    /// `T_w`.
    pub fn basis(w: &ExtAffineWeylElement) -> Self {
        Self::monomial(w.clone(), Laurent::one())
    }

    pub fn monomial(w: ExtAffineWeylElement, c: Laurent<C>) -> Self {
        let mut out = Self::zero(w.rank());
        accumulate(&mut out.terms, w, c);
        out
    }

    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        Ok(Self::basis(&ExtAffineWeylElement::generator(index, rank)?))
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExtAffineWeylElement, Laurent<C>)>,
    {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            assert_eq!(w.rank(), rank, "rank mismatch in Hecke element");
            accumulate(&mut out.terms, w, c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ExtAffineWeylElement) -> Laurent<C> {
        self.terms.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Terms in hash order.
    pub fn iter(&self) -> impl Iterator<Item = (&ExtAffineWeylElement, &Laurent<C>)> {
        self.terms.iter()
    }

    /// Terms ordered by length, then canonical reduced word.
    pub fn sorted_terms(&self) -> Vec<(ExtAffineWeylElement, Laurent<C>)> {
        let mut keyed: Vec<_> = self
            .terms
            .iter()
            .map(|(w, c)| ((w.length(), w.reduced_word()), w.clone(), c.clone()))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// Largest Coxeter length in the support.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|w| w.length()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, a)| (w.clone(), a * c)))
    }

    /// `T_{s_i} · self`.
    pub fn left_mul_generator(&self, i: usize) -> Self {
        let mut out = FxHashMap::default();
        out.reserve(self.terms.len() * 2);
        for (w, c) in &self.terms {
            let sw = w.left_mul_generator(i);
            if i == 0 || !w.is_left_descent(i) {
                accumulate(&mut out, sw, c.clone());
            } else {
                accumulate(&mut out, sw, c.shift(1));
                accumulate(&mut out, w.clone(), times_q_minus_one(c));
            }
        }
        Self {
            rank: self.rank,
            terms: out,
        }
    }

    /// `T_{s_i}^{-1} · self`.
    pub fn left_mul_generator_inverse(&self, i: usize) -> Self {
        let mut out = FxHashMap::default();
        out.reserve(self.terms.len() * 2);
        for (w, c) in &self.terms {
            let sw = w.left_mul_generator(i);
            if i == 0 || w.is_left_descent(i) {
                accumulate(&mut out, sw, c.clone());
            } else {
                accumulate(&mut out, sw, c.shift(-1));
                accumulate(&mut out, w.clone(), times_qinv_minus_one(c));
            }
        }
        Self {
            rank: self.rank,
            terms: out,
        }
    }

    /// `self · T_{s_i}`.
    pub fn right_mul_generator(&self, i: usize) -> Self {
        let mut out = FxHashMap::default();
        for (w, c) in &self.terms {
            let ws = w.right_mul_generator(i);
            if i == 0 || !w.is_right_descent(i) {
                accumulate(&mut out, ws, c.clone());
            } else {
                accumulate(&mut out, ws, c.shift(1));
                accumulate(&mut out, w.clone(), times_q_minus_one(c));
            }
        }
        Self {
            rank: self.rank,
            terms: out,
        }
    }

    pub fn apply_op(&self, op: GenOp) -> Self {
        if op.inverse {
            self.left_mul_generator_inverse(op.index)
        } else {
            self.left_mul_generator(op.index)
        }
    }

    /// Applies `ops` on the left, first element first.
    pub fn apply_ops(&self, ops: &[GenOp]) -> Self {
        ops.iter().fold(self.clone(), |acc, &op| acc.apply_op(op))
    }

    /// Exact product `self · other`, expanding each `T_u` of the left factor
    /// along its reduced word.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = FxHashMap::default();
        for (u, a) in &self.terms {
            let prod = other.apply_ops(&basis_ops(u));
            for (w, c) in prod.terms {
                accumulate(&mut out, w, &c * a);
            }
        }
        Ok(Self {
            rank: self.rank,
            terms: out,
        })
    }

    /// `T_w^{-1}`.
    pub fn basis_inverse(w: &ExtAffineWeylElement) -> Self {
        Self::unit(w.rank()).apply_ops(&basis_inverse_ops(w))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| {
                    serde_json::json!({
                        "element": w,
                        "coefficient": c.to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(rank: usize, v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("Hecke element must be a JSON array".into()))?;
        let mut out = Self::zero(rank);
        for item in arr {
            let w: ExtAffineWeylElement = serde_json::from_value(item["element"].clone())
                .map_err(|e| Error::Parse(e.to_string()))?;
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            let c = Laurent::from_json(&item["coefficient"])?;
            accumulate(&mut out.terms, w, c);
        }
        Ok(out)
    }
}

impl<C: Coefficient> Serialize for Element<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Element<C> {
    /// The rank is taken from the first term; an empty array has rank 0.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        let rank = v
            .get(0)
            .and_then(|t| t.get("element"))
            .and_then(|e| e.get("trans"))
            .and_then(|t| t.as_array())
            .map_or(0, Vec::len);
        Self::from_json(rank, &v).map_err(D::Error::custom)
    }
}

impl<C: Coefficient> fmt::Display for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(w, c)| format!("({c})*T{}", Word::from(w.reduced_word().letters().to_vec())))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coefficient> fmt::Debug for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coefficient> Add<&Element<C>> for &Element<C> {
    type Output = Element<C>;
    fn add(self, rhs: &Element<C>) -> Element<C> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &Element<C> {
    type Output = Element<C>;
    fn neg(self) -> Element<C> {
        Element {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl<C: Coefficient> Sub<&Element<C>> for &Element<C> {
    type Output = Element<C>;
    fn sub(self, rhs: &Element<C>) -> Element<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Mul<&Element<C>> for &Element<C> {
    type Output = Element<C>;
    /// Panics on rank mismatch.
    fn mul(self, rhs: &Element<C>) -> Element<C> {
        self.multiply(rhs).expect("rank mismatch in Hecke product")
    }
}
