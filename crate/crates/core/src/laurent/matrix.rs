use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Laurent;
use crate::scalar::Coefficient;

/// An integral domain with exact division, as needed by fraction-free
/// elimination.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// `self / divisor`, known to be exact.
    fn div_exact(&self, divisor: &Self) -> Self;
    /// Smaller is a cheaper pivot.
    fn weight(&self) -> (usize, usize);
}

impl<C: Coefficient> ExactDomain for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        self.exact_div(divisor)
            .expect("fraction-free elimination produced an inexact division")
    }
    fn weight(&self) -> (usize, usize) {
        Laurent::weight(self)
    }
}

impl ExactDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % divisor)));
        self / divisor
    }
    fn weight(&self) -> (usize, usize) {
        (self.bits() as usize, 0)
    }
}

/// Fraction-free (Bareiss) row echelon reduction. Returns the pivots in
/// order; their count is the rank over the fraction field.
pub fn fraction_free_pivots<T: ExactDomain>(rows: &mut [Vec<T>]) -> Vec<T> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[col] = T::zero();
        }
        prev = pivot.clone();
        pivots.push(pivot);
        r += 1;
    }
    pivots
}

/// A dense matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<Laurent<C>>,
}

/// Outcome of a certified rank computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    /// Rank over `Q(q)` from fraction-free elimination.
    pub rank: usize,
    /// Integer points at which the matrix was re-ranked.
    pub points: Vec<i64>,
    /// Rank over `Q` at each point.
    pub evaluated_ranks: Vec<usize>,
    /// Whether every evaluated rank equals `rank`.
    pub certified: bool,
}

impl<C: Coefficient> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Laurent::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Laurent::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Laurent<C>>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Laurent<C> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Laurent<C>) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Laurent<C>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Laurent<C>>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, factor: &Laurent<C>) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// Rank over the fraction field `Q(q)`.
    pub fn rank(&self) -> usize {
        self.pivots().len()
    }

    fn pivots(&self) -> Vec<Laurent<C>> {
        let mut rows = self.to_rows();
        if self.rows > self.cols {
            rows = transpose(&rows);
        }
        fraction_free_pivots(&mut rows)
    }

    /// Rank over `Q` after substituting the integer `v` for `q`.
    pub fn rank_at(&self, v: i64) -> usize {
        assert!(v != 0, "evaluation point must be nonzero");
        let vb = BigInt::from(v);
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                // clear negative powers row by row; this scales by a unit
                let low = row.iter().filter_map(|p| p.low_exp()).min().unwrap_or(0);
                row.iter().map(|p| eval_poly_part(p, low, &vb)).collect()
            })
            .collect();
        if self.rows > self.cols {
            rows = transpose(&rows);
        }
        fraction_free_pivots(&mut rows).len()
    }

    /// Rank over `Q(q)`, cross-checked against the ranks at three
    /// pseudo-random integer points where no pivot vanishes.
    pub fn rank_certified(&self, seed: u64) -> RankCertificate {
        let pivots = self.pivots();
        let rank = pivots.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points = Vec::new();
        let mut attempts = 0;
        while points.len() < 3 && attempts < 1000 {
            attempts += 1;
            let mag: i64 = rng.gen_range(2..=97);
            let v = if rng.gen_bool(0.5) { mag } else { -mag };
            if points.contains(&v) {
                continue;
            }
            let vb = BigInt::from(v);
            let vanishes = pivots.iter().any(|p| {
                let low = p.low_exp().unwrap_or(0);
                Zero::is_zero(&eval_poly_part(p, low, &vb))
            });
            if !vanishes {
                points.push(v);
            }
        }
        let evaluated_ranks: Vec<usize> = points.iter().map(|&v| self.rank_at(v)).collect();
        let certified = points.len() == 3 && evaluated_ranks.iter().all(|&r| r == rank);
        RankCertificate {
            rank,
            points,
            evaluated_ranks,
            certified,
        }
    }
}

impl<C: Coefficient> std::fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

/// Value at `v` of `q^{-low} · p`, which is a polynomial when `low` is at
/// most the lowest exponent of `p`.
fn eval_poly_part<C: Coefficient>(p: &Laurent<C>, low: i32, v: &BigInt) -> BigInt {
    let mut acc = <BigInt as Zero>::zero();
    for (e, c) in p.terms() {
        let k = (e - low) as u32;
        acc += c.to_bigint().expect("integer coefficient") * v.pow(k);
    }
    acc
}

fn transpose<T: Clone>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    let ncols = rows.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Laurent<BigInt>;

    fn c(v: i64) -> P {
        P::from_int(v)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<BigInt>::identity(3).rank(), 3);
        let q = P::q();
        let m = Matrix::from_rows(vec![vec![q.clone(), q.pow(2)], vec![c(1), q.clone()]]);
        assert_eq!(m.rank(), 1);
        let m = Matrix::from_rows(vec![vec![c(-1), q.clone()], vec![c(1), c(1)]]);
        assert_eq!(m.rank(), 2);
        let cert = m.rank_certified(7);
        assert!(cert.certified);
        assert_eq!(cert.points.len(), 3);
    }

    #[test]
    fn evaluation_can_drop_rank() {
        // det = q - 2 vanishes at q = 2
        let m = Matrix::from_rows(vec![vec![P::q(), c(2)], vec![c(1), c(1)]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_at(2), 1);
        assert_eq!(m.rank_at(3), 2);
        let cert = m.rank_certified(1);
        assert!(!cert.points.contains(&2));
        assert!(cert.certified);
    }

    #[test]
    fn rank_of_empty_and_zero() {
        assert_eq!(Matrix::<BigInt>::zeros(0, 0).rank(), 0);
        assert_eq!(Matrix::<BigInt>::zeros(3, 2).rank(), 0);
    }

    #[test]
    fn tall_matrices() {
        let q = P::q();
        let m = Matrix::from_rows(vec![
            vec![q.clone(), c(0)],
            vec![c(1), c(1)],
            vec![&q + &c(1), c(1)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn bareiss_on_integers() {
        let mut rows = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(5)],
        ];
        assert_eq!(fraction_free_pivots(&mut rows).len(), 2);
    }
}
