//! Finite Weyl groups of types A, B, D and functions on them.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::SignedPermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylType {
    A,
    B,
    D,
}

/// A finite Weyl group with its elements enumerated in order of length.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    kind: WeylType,
    rank: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    lengths: Vec<usize>,
    index: FxHashMap<SignedPermutation, usize>,
}

impl FiniteWeylGroup {
    /// `A_m` acting on `m + 1` coordinates, `B_m` and `D_m` on `m`.
    pub fn new(kind: WeylType, rank: usize) -> Result<Self> {
        let min = match kind {
            WeylType::A | WeylType::B => 1,
            WeylType::D => 2,
        };
        if rank < min {
            return Err(Error::Parse(format!("rank {rank} too small for type {kind:?}")));
        }
        let dim = if kind == WeylType::A { rank + 1 } else { rank };
        let swap = |i: usize| {
            let mut img: Vec<i32> = (1..=dim as i32).collect();
            img.swap(i, i + 1);
            SignedPermutation::from_images(&img).expect("transposition")
        };
        let mut generators: Vec<_> = (0..dim - 1).map(swap).collect();
        let mut last: Vec<i32> = (1..=dim as i32).collect();
        match kind {
            WeylType::A => {}
            WeylType::B => {
                last[dim - 1] = -(dim as i32);
                generators.push(SignedPermutation::from_images(&last).expect("sign change"));
            }
            WeylType::D => {
                last[dim - 2] = -(dim as i32);
                last[dim - 1] = -(dim as i32 - 1);
                generators.push(SignedPermutation::from_images(&last).expect("signed swap"));
            }
        }

        let id = SignedPermutation::identity(dim);
        let mut elements = vec![id.clone()];
        let mut lengths = vec![0];
        let mut index = FxHashMap::default();
        index.insert(id.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for s in &generators {
                let g = elements[k].compose(s);
                if !index.contains_key(&g) {
                    index.insert(g.clone(), elements.len());
                    queue.push_back(elements.len());
                    lengths.push(lengths[k] + 1);
                    elements.push(g);
                }
            }
        }
        Ok(Self {
            kind,
            rank,
            generators,
            elements,
            lengths,
            index,
        })
    }

    pub fn kind(&self) -> WeylType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn length(&self, k: usize) -> usize {
        self.lengths[k]
    }

    pub fn index_of(&self, g: &SignedPermutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn sign(&self) -> FunctionOnW {
        FunctionOnW {
            values: self
                .lengths
                .iter()
                .map(|&l| if l % 2 == 0 { 1 } else { -1 })
                .collect(),
        }
    }

    pub fn delta_identity(&self) -> FunctionOnW {
        let mut values = vec![0; self.order()];
        values[0] = 1;
        FunctionOnW { values }
    }

    /// Indicator functions of the left cosets `{w, s_α w}`.
    pub fn parabolic_invariants(&self, alpha: usize) -> Result<Vec<FunctionOnW>> {
        let s = self.generators.get(alpha).ok_or(Error::GeneratorOutOfRange {
            index: alpha,
            rank: self.rank,
        })?;
        let mut out = Vec::new();
        for (k, w) in self.elements.iter().enumerate() {
            let j = self.index[&s.compose(w)];
            if k < j {
                let mut values = vec![0; self.order()];
                values[k] = 1;
                values[j] = 1;
                out.push(FunctionOnW { values });
            }
        }
        Ok(out)
    }

    /// Whether `δ_e` lies outside the span of all parabolic invariants,
    /// by exact rank and by pairing with the sign character.
    pub fn delta_membership(&self) -> DeltaReport {
        let invariants: Vec<FunctionOnW> = (0..self.generators.len())
            .flat_map(|a| self.parabolic_invariants(a).expect("valid root"))
            .collect();
        let mut rows: Vec<Vec<i64>> = invariants.iter().map(|f| f.values.clone()).collect();
        let span_rank = rational_rank(&rows);
        let delta = self.delta_identity();
        rows.push(delta.values.clone());
        let rank_with_delta = rational_rank(&rows);
        let sgn = self.sign();
        let sign_certificate =
            invariants.iter().all(|f| f.pair(&sgn) == 0) && delta.pair(&sgn) == 1;
        DeltaReport {
            group: self.to_string(),
            dim: self.order(),
            span_rank,
            rank_with_delta,
            not_in_span: rank_with_delta > span_rank,
            sign_certificate,
        }
    }
}

impl fmt::Display for FiniteWeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.kind, self.rank)
    }
}

/// An integer-valued function on a finite Weyl group, indexed like
/// [`FiniteWeylGroup::elements`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionOnW {
    pub values: Vec<i64>,
}

impl FunctionOnW {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Counting-measure pairing.
    pub fn pair(&self, other: &Self) -> i64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub group: String,
    pub dim: usize,
    pub span_rank: usize,
    pub rank_with_delta: usize,
    pub not_in_span: bool,
    pub sign_certificate: bool,
}

/// Rank over `Q` by sparse elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    // pivot column -> reduced row with leading entry at that column
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, BigRational> = row
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(c, v)| (c, BigRational::from_integer((*v).into())))
            .collect();
        while let Some((&lead, lv)) = r.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                break;
            };
            let factor = lv / &p[&lead];
            for (c, pv) in p {
                let e = r.entry(*c).or_insert_with(BigRational::zero);
                *e -= &factor * pv;
                if e.is_zero() {
                    r.remove(c);
                }
            }
        }
        if let Some((&lead, lv)) = r.iter().next() {
            if !lv.is_one() {
                let inv = lv.recip();
                for v in r.values_mut() {
                    *v *= &inv;
                }
            }
            pivots.insert(lead, r);
        }
    }
    pivots.len()
}
