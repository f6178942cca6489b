use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub(crate) type Images = SmallVec<[i8; 8]>;

/// An element of the hyperoctahedral group acting on `R^n`.
///
/// `images[i] = ±(j + 1)` means `e_{i+1} ↦ ±e_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Images,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        assert!(rank < i8::MAX as usize, "rank {rank} too large");
        Self {
            images: (1..=rank as i8).collect(),
        }
    }

    pub fn from_images(images: &[i32]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] || n >= i8::MAX as usize {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[a - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&v| v as i8).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Images) -> Self {
        Self { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> Vec<i32> {
        self.images.iter().map(|&v| v as i32).collect()
    }

    pub(crate) fn raw(&self) -> &[i8] {
        &self.images
    }

    pub(crate) fn raw_mut(&mut self) -> &mut Images {
        &mut self.images
    }

    /// Target coordinate (0-based) and sign of `w(e_{i+1})`.
    #[inline]
    pub fn image(&self, i: usize) -> (usize, i8) {
        let v = self.images[i];
        ((v.unsigned_abs() - 1) as usize, v.signum())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        let images = other
            .images
            .iter()
            .map(|&v| {
                let (j, s) = self.image((v.unsigned_abs() - 1) as usize);
                s * v.signum() * (j as i8 + 1)
            })
            .collect();
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images: Images = SmallVec::from_elem(0, self.rank());
        for i in 0..self.rank() {
            let (j, s) = self.image(i);
            images[j] = s * (i as i8 + 1);
        }
        Self { images }
    }

    /// Applies the linear map to a coordinate vector.
    pub fn apply<T: Scalar>(&self, x: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); x.len()];
        for (i, xi) in x.iter().enumerate() {
            let (j, s) = self.image(i);
            out[j] = if s > 0 { xi.clone() } else { -xi.clone() };
        }
        out
    }

    pub(crate) fn apply_i64(&self, x: &[i64]) -> SmallVec<[i64; 8]> {
        let mut out: SmallVec<[i64; 8]> = SmallVec::from_elem(0, x.len());
        for (i, &xi) in x.iter().enumerate() {
            let (j, s) = self.image(i);
            out[j] = s as i64 * xi;
        }
        out
    }

    pub fn sign_changes(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// Membership in the type-D Weyl group (even number of sign changes).
    pub fn is_even(&self) -> bool {
        self.sign_changes().is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}
