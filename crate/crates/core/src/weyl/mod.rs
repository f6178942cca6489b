//! The extended affine Weyl group of type C̃n and the type-D̃ group that
//! folds onto it.

mod dtype;
mod element;
mod functional;
mod signed_perm;
mod word;

use rustc_hash::FxHashSet;

pub use dtype::{d_ball, DExtElement};
pub use element::{sample_point, ExtAffineWeylElement};
pub use functional::AffineFunctional;
pub use signed_perm::SignedPermutation;
pub use word::Word;


use crate::error::{Error, Result};

/// All elements of Coxeter length at most `max_length`, ordered by length
/// and then by canonical reduced word.
pub fn ball(rank: usize, max_length: usize) -> Vec<ExtAffineWeylElement> {
    let mut out = vec![ExtAffineWeylElement::identity(rank)];
    let mut layer = out.clone();
    for _ in 0..max_length {
        let mut seen = FxHashSet::default();
        let mut next = Vec::new();
        for g in &layer {
            for i in 0..=rank {
                if !g.is_left_descent(i) {
                    let h = g.left_mul_generator(i);
                    if seen.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
        }
        let mut keyed: Vec<_> = next.into_iter().map(|g| (g.reduced_word(), g)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        layer = keyed.into_iter().map(|(_, g)| g).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// A set `J` of generators whose parabolic subgroup `W_J` has been
/// verified to be finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parabolic {
    rank: usize,
    generators: Vec<usize>,
    order: usize,
}

impl Parabolic {
    pub fn new(rank: usize, generators: &[usize]) -> Result<Self> {
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if let Some(&bad) = gens.iter().find(|&&i| i > rank) {
            return Err(Error::GeneratorOutOfRange { index: bad, rank });
        }
        let bound = (1..=rank).product::<usize>() << rank;
        let mut seen = FxHashSet::default();
        let id = ExtAffineWeylElement::identity(rank);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(g) = frontier.pop() {
            for &i in &gens {
                let h = g.left_mul_generator(i);
                if seen.insert(h.clone()) {
                    if seen.len() > bound {
                        return Err(Error::InfiniteParabolic {
                            subset: gens,
                            bound,
                        });
                    }
                    frontier.push(h);
                }
            }
        }
        Ok(Self {
            rank,
            generators: gens,
            order: seen.len(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, i: usize) -> bool {
        self.generators.binary_search(&i).is_ok()
    }

    /// `|W_J|`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether `g` is the minimal-length element of `g W_J`.
    pub fn is_minimal(&self, g: &ExtAffineWeylElement) -> bool {
        let inv = g.inverse();
        !self.generators.iter().any(|&j| inv.is_left_descent(j))
    }
}

/// Writes `g = rep · tail` with `tail ∈ W_J` and `rep` minimal in `g W_J`;
/// lengths add.
pub fn parabolic_factorize(
    g: &ExtAffineWeylElement,
    j: &Parabolic,
) -> Result<(ExtAffineWeylElement, ExtAffineWeylElement)> {
    if g.rank() != j.rank() {
        return Err(Error::RankMismatch {
            left: g.rank(),
            right: j.rank(),
        });
    }
    let mut rep = g.clone();
    let mut tail = ExtAffineWeylElement::identity(g.rank());
    loop {
        let inv = rep.inverse();
        match j.generators().iter().find(|&&i| inv.is_left_descent(i)) {
            Some(&i) => {
                rep = rep.right_mul_generator(i);
                tail = tail.left_mul_generator(i);
            }
            None => return Ok((rep, tail)),
        }
    }
}
