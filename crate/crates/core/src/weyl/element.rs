use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use super::functional::AffineFunctional;
use super::signed_perm::{Images, SignedPermutation};
use super::word::Word;
use crate::error::{Error, Result};
use crate::scalar::{scalar_from_i64, Scalar};

pub(crate) type Trans = SmallVec<[i32; 8]>;

/// An element `x ↦ w(x) + λ` of the extended affine Weyl group `W ⋉ Z^n`
/// of type C̃n.
///
/// The Coxeter generators are `s_0: x_1 ↦ 1 - x_1`, `s_i` swapping
/// `x_i, x_{i+1}` and `s_n: x_n ↦ -x_n`; the base alcove is
/// `1/2 > x_1 > ... > x_n > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineWeylElement {
    perm: SignedPermutation,
    trans: Trans,
}

impl ExtAffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            perm: SignedPermutation::identity(rank),
            trans: SmallVec::from_elem(0, rank),
        }
    }

    pub fn new(perm: SignedPermutation, trans: &[i32]) -> Result<Self> {
        if perm.rank() != trans.len() {
            return Err(Error::RankMismatch {
                left: perm.rank(),
                right: trans.len(),
            });
        }
        Ok(Self {
            perm,
            trans: trans.iter().copied().collect(),
        })
    }

    pub fn translation(lambda: &[i32]) -> Self {
        Self {
            perm: SignedPermutation::identity(lambda.len()),
            trans: lambda.iter().copied().collect(),
        }
    }

    /// The Coxeter generator `s_index`, `0 <= index <= rank`.
    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        if rank == 0 || index > rank {
            return Err(Error::GeneratorOutOfRange { index, rank });
        }
        Ok(Self::identity(rank).left_mul_generator(index))
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.perm
    }

    pub fn trans(&self) -> Vec<i32> {
        self.trans.to_vec()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.trans.iter().all(|&m| m == 0)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut trans = self.trans.clone();
        for (i, &m) in other.trans.iter().enumerate() {
            let (j, s) = self.perm.image(i);
            trans[j] += s as i32 * m;
        }
        Self {
            perm: self.perm.compose(&other.perm),
            trans,
        }
    }

    pub fn inverse(&self) -> Self {
        let perm = self.perm.inverse();
        let mut trans: Trans = SmallVec::from_elem(0, self.rank());
        for (i, &m) in self.trans.iter().enumerate() {
            let (j, s) = perm.image(i);
            trans[j] = -(s as i32) * m;
        }
        Self { perm, trans }
    }

    /// `w(p) + λ`.
    pub fn act<T: Scalar>(&self, p: &[T]) -> Vec<T> {
        assert_eq!(p.len(), self.rank(), "point dimension must equal the rank");
        let mut out = self.perm.apply(p);
        for (o, &m) in out.iter_mut().zip(&self.trans) {
            *o = o.clone() + scalar_from_i64::<T>(m as i64);
        }
        out
    }

    /// Membership in the affine Weyl group `W_a` (even translation sum).
    pub fn in_affine_subgroup(&self) -> bool {
        self.trans.iter().map(|&m| m as i64).sum::<i64>() % 2 == 0
    }

    /// Image of the interior point `x*` scaled by `2(n+1)`, so that
    /// `x*_j = n + 1 - j` and every coordinate stays integral.
    #[inline]
    fn scaled_sample(&self) -> SmallVec<[i64; 8]> {
        let n = self.rank() as i64;
        let base: SmallVec<[i64; 8]> = (1..=n).map(|j| n + 1 - j).collect();
        let mut y = self.perm.apply_i64(&base);
        let d = 2 * (n + 1);
        for (yi, &m) in y.iter_mut().zip(&self.trans) {
            *yi += d * m as i64;
        }
        y
    }

    #[inline]
    fn descent_in_scaled(y: &[i64], index: usize) -> bool {
        let n = y.len();
        if index == 0 {
            y[0] > n as i64 + 1
        } else if index < n {
            y[index - 1] < y[index]
        } else {
            y[n - 1] < 0
        }
    }

    /// Whether `length(s_index · self) < length(self)`.
    #[inline]
    pub fn is_left_descent(&self, index: usize) -> bool {
        Self::descent_in_scaled(&self.scaled_sample(), index)
    }

    /// Whether `length(self · s_index) < length(self)`.
    pub fn is_right_descent(&self, index: usize) -> bool {
        self.inverse().is_left_descent(index)
    }

    /// Left descent set, computed by evaluating the simple affine
    /// functionals at the image of the base-alcove sample point.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.rank();
        let image = self.act(&sample_point(n));
        AffineFunctional::simple(n)
            .iter()
            .enumerate()
            .filter(|(_, a)| a.eval(&image) < Ratio::from_integer(0))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let y = self.scaled_sample();
        (0..=self.rank())
            .filter(|&i| Self::descent_in_scaled(&y, i))
            .collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        self.inverse().left_descents()
    }

    /// Coxeter length: the number of hyperplanes separating the base
    /// alcove from its image.
    pub fn length(&self) -> usize {
        let y = self.scaled_sample();
        let h = y.len() as i64 + 1;
        let d = 2 * h;
        let mut count = 0i64;
        for i in 0..y.len() {
            count += y[i].div_euclid(h).abs();
            for j in i + 1..y.len() {
                count += (y[i] - y[j]).div_euclid(d).abs();
                count += (y[i] + y[j]).div_euclid(d).abs();
            }
        }
        count as usize
    }

    /// `s_index · self`.
    pub fn left_mul_generator(&self, index: usize) -> Self {
        let n = self.rank();
        assert!(index <= n, "generator index {index} out of range");
        let mut out = self.clone();
        let images: &mut Images = out.perm.raw_mut();
        if index == 0 {
            for v in images.iter_mut() {
                if v.unsigned_abs() == 1 {
                    *v = -*v;
                }
            }
            out.trans[0] = 1 - out.trans[0];
        } else if index < n {
            let (a, b) = (index as u8, index as u8 + 1);
            for v in images.iter_mut() {
                let abs = v.unsigned_abs();
                if abs == a {
                    *v = v.signum() * b as i8;
                } else if abs == b {
                    *v = v.signum() * a as i8;
                }
            }
            out.trans.swap(index - 1, index);
        } else {
            for v in images.iter_mut() {
                if v.unsigned_abs() as usize == n {
                    *v = -*v;
                }
            }
            out.trans[n - 1] = -out.trans[n - 1];
        }
        out
    }

    /// `self · s_index`.
    pub fn right_mul_generator(&self, index: usize) -> Self {
        let n = self.rank();
        assert!(index <= n, "generator index {index} out of range");
        let mut out = self.clone();
        if index == 0 {
            let (j, s) = self.perm.image(0);
            out.trans[j] += s as i32;
            out.perm.raw_mut()[0] = -self.perm.raw()[0];
        } else if index < n {
            out.perm.raw_mut().swap(index - 1, index);
        } else {
            out.perm.raw_mut()[n - 1] = -self.perm.raw()[n - 1];
        }
        out
    }

    /// Reduced word obtained by repeatedly stripping the smallest left
    /// descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::new();
        let mut g = self.clone();
        loop {
            let y = g.scaled_sample();
            match (0..=g.rank()).find(|&i| Self::descent_in_scaled(&y, i)) {
                Some(i) => {
                    letters.push(i);
                    g = g.left_mul_generator(i);
                }
                None => break,
            }
        }
        debug_assert!(g.is_identity());
        Word::new(letters)
    }

    /// Number of letters other than `s_0` in a reduced word.
    pub fn weighted_length(&self) -> usize {
        self.reduced_word().letters().iter().filter(|&&i| i != 0).count()
    }
}

/// The interior point `x*_j = (n + 1 - j) / (2(n + 1))` of the base alcove.
pub fn sample_point(rank: usize) -> Vec<Ratio<i64>> {
    let n = rank as i64;
    (1..=n).map(|j| Ratio::new(n + 1 - j, 2 * (n + 1))).collect()
}

impl<'a> Mul<&'a ExtAffineWeylElement> for &'a ExtAffineWeylElement {
    type Output = ExtAffineWeylElement;

    /// Panics on rank mismatch; use [`ExtAffineWeylElement::compose`] for a
    /// fallible product.
    fn mul(self, rhs: &'a ExtAffineWeylElement) -> ExtAffineWeylElement {
        self.compose(rhs).expect("rank mismatch in product")
    }
}

impl fmt::Display for ExtAffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "perm=[{}];trans=[{}]",
            join(self.perm.images().iter().map(|v| v.to_string()).collect()),
            join(self.trans.iter().map(|v| v.to_string()).collect())
        )
    }
}

impl fmt::Debug for ExtAffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i32>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.strip_prefix('+')
                .unwrap_or(t)
                .parse::<i32>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl FromStr for ExtAffineWeylElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, t) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `perm=[..];trans=[..]`, got {s:?}")))?;
        let p = p
            .trim()
            .strip_prefix("perm=")
            .ok_or_else(|| Error::Parse("missing `perm=`".into()))?;
        let t = t
            .trim()
            .strip_prefix("trans=")
            .ok_or_else(|| Error::Parse("missing `trans=`".into()))?;
        let perm = SignedPermutation::from_images(&parse_int_list(p)?)?;
        Self::new(perm, &parse_int_list(t)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    perm: Vec<i32>,
    trans: Vec<i32>,
}

impl Serialize for ExtAffineWeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            perm: self.perm.images(),
            trans: self.trans(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExtAffineWeylElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let perm = SignedPermutation::from_images(&repr.perm).map_err(serde::de::Error::custom)?;
        Self::new(perm, &repr.trans).map_err(serde::de::Error::custom)
    }
}

/// Builds an element from `raw` parts already known to be consistent.
pub(crate) fn from_parts(images: Images, trans: Trans) -> ExtAffineWeylElement {
    ExtAffineWeylElement {
        perm: SignedPermutation::from_images_unchecked(images),
        trans,
    }
}
