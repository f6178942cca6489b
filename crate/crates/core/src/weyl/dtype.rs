use std::fmt;

use rustc_hash::FxHashSet;
use smallvec::SmallVec;

use super::element::{from_parts, Trans};
use super::signed_perm::SignedPermutation;
use super::ExtAffineWeylElement;
use crate::error::{Error, Result};
use crate::scalar::{scalar_from_i64, Scalar};

/// An element of the type-D̃ extended affine Weyl group acting on
/// `R^{n+1}`.
///
/// The Weyl part is stored as a full signed permutation; [`Self::in_weyl_d`]
/// tests membership in the even-sign-change subgroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DExtElement {
    perm: SignedPermutation,
    trans: Trans,
}

impl DExtElement {
    /// Identity on `R^dim`, `dim = n + 1`.
    pub fn identity(dim: usize) -> Self {
        Self {
            perm: SignedPermutation::identity(dim),
            trans: SmallVec::from_elem(0, dim),
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

    /// Generators `s_0, ..., s_{n+1}` on `R^{n+1}`: `s_0` is the central
    /// symmetry `(x_1, x_{n+1}) ↦ (1 - x_1, -x_{n+1})`, `s_i` swaps
    /// `x_i, x_{i+1}` for `1 <= i <= n`, and `s_{n+1}` is the reflection in
    /// `e_n + e_{n+1}`.
    pub fn generator(index: usize, n: usize) -> Result<Self> {
        if n == 0 || index > n + 1 {
            return Err(Error::GeneratorOutOfRange { index, rank: n });
        }
        let dim = n + 1;
        let mut images: Vec<i32> = (1..=dim as i32).collect();
        let mut trans = vec![0; dim];
        match index {
            0 => {
                images[0] = -1;
                images[n] = -(dim as i32);
                trans[0] = 1;
            }
            i if i <= n => images.swap(i - 1, i),
            _ => {
                images[n - 1] = -(dim as i32);
                images[n] = -(n as i32);
            }
        }
        Self::new(SignedPermutation::from_images(&images)?, &trans)
    }

    pub fn dim(&self) -> usize {
        self.trans.len()
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.perm
    }

    pub fn trans(&self) -> Vec<i32> {
        self.trans.to_vec()
    }

    pub fn in_weyl_d(&self) -> bool {
        self.perm.is_even()
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::RankMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let mut trans = self.trans.clone();
        for (i, &m) in other.trans.iter().enumerate() {
            let (j, s) = self.perm.image(i);
            trans[j] += s as i32 * m;
        }
        Ok(Self {
            perm: self.perm.compose(&other.perm),
            trans,
        })
    }

    pub fn act<T: Scalar>(&self, p: &[T]) -> Vec<T> {
        assert_eq!(p.len(), self.dim());
        let mut out = self.perm.apply(p);
        for (o, &m) in out.iter_mut().zip(&self.trans) {
            *o = o.clone() + scalar_from_i64::<T>(m as i64);
        }
        out
    }

    /// Conjugation by the linear map `e_{n+1} ↦ -e_{n+1}`.
    pub fn sigma(&self) -> Self {
        let last = self.dim() as i8;
        let flip = |v: i8| if v.unsigned_abs() as i8 == last { -v } else { v };
        let mut images = SmallVec::new();
        for (i, &v) in self.perm.raw().iter().enumerate() {
            let v = flip(v);
            images.push(if i + 1 == self.dim() { -v } else { v });
        }
        let mut trans = self.trans.clone();
        let k = self.dim() - 1;
        trans[k] = -trans[k];
        Self {
            perm: SignedPermutation::from_images_unchecked(images),
            trans,
        }
    }

    pub fn is_sigma_fixed(&self) -> bool {
        self.sigma() == *self
    }

    /// Restriction of a σ-fixed element to `E = span(e_1, ..., e_n)`.
    pub fn fold(&self) -> Result<ExtAffineWeylElement> {
        if !self.is_sigma_fixed() {
            return Err(Error::NotSigmaFixed);
        }
        let n = self.dim() - 1;
        let images = self.perm.raw()[..n].iter().copied().collect();
        let trans = self.trans[..n].iter().copied().collect();
        Ok(from_parts(images, trans))
    }
}

impl fmt::Debug for DExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm={:?};trans={:?}", self.perm.images(), self.trans())
    }
}

/// Elements of word length at most `radius` in the generators
/// `s_0, ..., s_{n+1}`, in breadth-first order.
pub fn d_ball(n: usize, radius: usize) -> Vec<DExtElement> {
    let gens: Vec<_> = (0..=n + 1)
        .map(|i| DExtElement::generator(i, n).expect("valid generator"))
        .collect();
    let id = DExtElement::identity(n + 1);
    let mut seen = FxHashSet::default();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut layer = out.clone();
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &layer {
            for s in &gens {
                let h = s.compose(g).expect("same dimension");
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
