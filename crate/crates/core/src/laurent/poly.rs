use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A Laurent polynomial in `q` with exact integer coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    low: i32,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(<C as Coefficient>::from_i64(c))
    }

    /// `c · q^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                low: exp,
                coeffs: vec![c],
            }
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let map = terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
            let slot = m.entry(e).or_insert_with(C::zero);
            *slot = slot.add_exact(&c);
            m
        });
        let (Some(&lo), Some(&hi)) = (map.keys().next(), map.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self { low: lo, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> C {
        let idx = exp as i64 - self.low as i64;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Whether this is a unit of `Z[q, q^-1]`, i.e. `±q^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| a.mul_exact(c)).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact value at the integer `q = v`.
    pub fn eval_int(&self, v: &C) -> Result<Ratio<C>> {
        if self.is_zero() {
            return Ok(Ratio::from_integer(C::zero()));
        }
        if v.is_zero() {
            return if self.low < 0 {
                Err(Error::ZeroEvaluation)
            } else {
                Ok(Ratio::from_integer(self.coeff(0)))
            };
        }
        // Horner on the polynomial part, then divide by v^(-low).
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_exact(v).add_exact(c);
        }
        let mut pow = C::one();
        for _ in 0..self.low.unsigned_abs() {
            pow = pow.mul_exact(v);
        }
        Ok(if self.low >= 0 {
            Ratio::from_integer(acc.mul_exact(&pow))
        } else {
            Ratio::new(acc, pow)
        })
    }

    /// Exact quotient in `Z[q, q^-1]`, or `None` if `divisor` does not
    /// divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.coeffs.len() == 1 {
            let d = &divisor.coeffs[0];
            let mut coeffs = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                let (quot, rem) = c.div_rem(d);
                if !rem.is_zero() {
                    return None;
                }
                coeffs.push(quot);
            }
            return Some(Self {
                low: self.low - divisor.low,
                coeffs,
            });
        }
        // Long division of the polynomial parts from the top degree down.
        let mut rem = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return None;
        }
        let lead = d.last().expect("nonzero divisor");
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![C::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, di) in d.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_exact(&c.mul_exact(di));
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(
            Self {
                low: self.low - divisor.low,
                coeffs: quot,
            }
            .normalized(),
        )
    }

    /// Size measure for pivot selection: stored span, then the number of
    /// coefficients that are not `±1`.
    pub(crate) fn weight(&self) -> (usize, usize) {
        (self.coeffs.len(), self.coeffs.iter().filter(|c| !c.abs().is_one()).count())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let lo = self.low.min(other.low);
        let hi = self.high_exp().unwrap().max(other.high_exp().unwrap());
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] = c.clone();
        }
        let off = (other.low - lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[off + i];
            *slot = if negate {
                slot.sub_exact(c)
            } else {
                slot.add_exact(c)
            };
        }
        Self { low: lo, coeffs }.normalized()
    }
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
}

impl<C: Coefficient> One for Laurent<C> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<C: Coefficient> Add<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        self.add_impl(rhs, false)
    }
}

impl<C: Coefficient> Sub<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        self.add_impl(rhs, true)
    }
}

impl<C: Coefficient> Mul<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_exact(&a.mul_exact(b));
            }
        }
        Laurent {
            low: self.low + rhs.low,
            coeffs,
        }
        .normalized()
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: &Laurent<C>) -> Laurent<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        // in-place fast path when rhs fits inside self's stored range
        if !self.is_zero() && !rhs.is_zero() && rhs.low >= self.low {
            let off = (rhs.low - self.low) as usize;
            if off + rhs.coeffs.len() <= self.coeffs.len() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    self.coeffs[off + i] = self.coeffs[off + i].add_exact(c);
                }
                let taken = std::mem::take(self);
                *self = taken.normalized();
                return;
            }
        }
        *self = self.add_impl(rhs, false);
    }
}

impl<C: Coefficient> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        *self = self.add_impl(rhs, true);
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    /// Descending powers, e.g. `q^2 - 1 + 3*q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

pub(crate) fn coeff_to_json<C: Coefficient>(c: &C) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn coeff_from_json<C: Coefficient>(v: &serde_json::Value) -> Option<C> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().and_then(<C as num_traits::FromPrimitive>::from_i64),
        serde_json::Value::String(s) => C::from_str_radix(s, 10).ok(),
        _ => None,
    }
}

impl<C: Coefficient> Laurent<C> {
    /// JSON object mapping exponent strings to integer coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms()
            .map(|(e, c)| (e.to_string(), coeff_to_json(c)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("Laurent polynomial must be a JSON object".into()))?;
        let terms = obj
            .iter()
            .map(|(k, v)| {
                let e = k
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(format!("exponent {k:?}: {e}")))?;
                let c = coeff_from_json::<C>(v)
                    .ok_or_else(|| Error::Parse(format!("coefficient {v}")))?;
                Ok((e, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }
}

impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}
