//! Additive character sums over prime fields, computed exactly in `Z[ζ_p]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// An element of `Z[ζ_p]` in the basis `1, ζ, …, ζ^{p-2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<C> {
    p: u64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Cyclotomic<C> {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            coeffs: vec![C::zero(); (p - 1) as usize],
        }
    }

    pub fn from_int(p: u64, v: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = <C as Coefficient>::from_i64(v);
        out
    }

    pub fn one(p: u64) -> Self {
        Self::from_int(p, 1)
    }

    /// `ζ^k`, reduced using `1 + ζ + … + ζ^{p-1} = 0`.
    pub fn zeta_pow(p: u64, k: i64) -> Self {
        let mut out = Self::zero(p);
        out.add_zeta_pow(k, &C::one());
        out
    }

    fn add_zeta_pow(&mut self, k: i64, c: &C) {
        let e = k.rem_euclid(self.p as i64) as usize;
        if e == self.coeffs.len() {
            for x in &mut self.coeffs {
                *x = x.sub_exact(c);
            }
        } else {
            self.coeffs[e] = self.coeffs[e].add_exact(c);
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "cyclotomic fields differ");
    }
}

impl<C: Coefficient> Add for &Cyclotomic<C> {
    type Output = Cyclotomic<C>;
    fn add(self, other: Self) -> Cyclotomic<C> {
        self.check(other);
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_exact(b)).collect(),
        }
    }
}

impl<C: Coefficient> Sub for &Cyclotomic<C> {
    type Output = Cyclotomic<C>;
    fn sub(self, other: Self) -> Cyclotomic<C> {
        self.check(other);
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_exact(b)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &Cyclotomic<C> {
    type Output = Cyclotomic<C>;
    fn neg(self) -> Cyclotomic<C> {
        &Cyclotomic::zero(self.p) - self
    }
}

impl<C: Coefficient> Mul for &Cyclotomic<C> {
    type Output = Cyclotomic<C>;
    fn mul(self, other: Self) -> Cyclotomic<C> {
        self.check(other);
        let mut out = Cyclotomic::zero(self.p);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.add_zeta_pow((i + j) as i64, &a.mul_exact(b));
                }
            }
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for Cyclotomic<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<C: Coefficient> fmt::Debug for Cyclotomic<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[p={}] {self}", self.p)
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3 && !p.is_multiple_of(2) && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn residue(p: u64, a: i64) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Err(Error::DegenerateCharacter(p));
    }
    Ok(r)
}

fn inverse_mod(t: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = t % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// `Σ_{t ∈ F_p} ζ^{a t}`.
pub fn full_sum<C: Coefficient>(p: u64, a: i64) -> Result<Cyclotomic<C>> {
    let a = residue(p, a)?;
    let mut out = Cyclotomic::zero(p);
    for t in 0..p {
        out.add_zeta_pow((a * t % p) as i64, &C::one());
    }
    Ok(out)
}

/// `Σ_{t ∈ F_p^×} ζ^{a / t}`.
pub fn inverse_sum<C: Coefficient>(p: u64, a: i64) -> Result<Cyclotomic<C>> {
    let a = residue(p, a)?;
    let mut out = Cyclotomic::zero(p);
    for t in 1..p {
        out.add_zeta_pow((a * inverse_mod(t, p) % p) as i64, &C::one());
    }
    Ok(out)
}

/// `Σ_{t ∈ F_p^×} ζ^{a t}`, which equals [`inverse_sum`] because inversion
/// permutes `F_p^×`.
pub fn unit_sum<C: Coefficient>(p: u64, a: i64) -> Result<Cyclotomic<C>> {
    Ok(&full_sum::<C>(p, a)? - &Cyclotomic::one(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussReport {
    pub p: u64,
    pub a: i64,
    pub full_sum_zero: bool,
    pub inverse_sum_minus_one: bool,
    pub paths_agree: bool,
}

impl GaussReport {
    pub fn passed(&self) -> bool {
        self.full_sum_zero && self.inverse_sum_minus_one && self.paths_agree
    }
}

pub fn gauss_report<C: Coefficient>(p: u64, a: i64) -> Result<GaussReport> {
    let full = full_sum::<C>(p, a)?;
    let inv = inverse_sum::<C>(p, a)?;
    let units = unit_sum::<C>(p, a)?;
    Ok(GaussReport {
        p,
        a,
        full_sum_zero: full.is_zero(),
        inverse_sum_minus_one: inv == Cyclotomic::from_int(p, -1),
        paths_agree: inv == units,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = Cyclotomic<i64>;

    #[test]
    fn ring_basics() {
        let z = Z::zeta_pow(5, 1);
        let mut acc = Z::one(5);
        for _ in 0..5 {
            acc = &acc * &z;
        }
        assert_eq!(acc, Z::one(5));
        assert_eq!(Z::zeta_pow(5, 4), -&(&(&(&Z::one(5) + &z) + &Z::zeta_pow(5, 2)) + &Z::zeta_pow(5, 3)));
    }

    #[test]
    fn examples() {
        assert!(full_sum::<i64>(3, 1).unwrap().is_zero());
        assert!(full_sum::<i64>(5, 2).unwrap().is_zero());
        assert!(full_sum::<i64>(7, 3).unwrap().is_zero());
        assert_eq!(inverse_sum::<i64>(3, 1).unwrap(), Z::from_int(3, -1));
        assert_eq!(inverse_sum::<i64>(5, 1).unwrap(), Z::from_int(5, -1));
        assert_eq!(inverse_sum::<i64>(11, 7).unwrap(), Z::from_int(11, -1));
    }

    #[test]
    fn errors() {
        assert_eq!(full_sum::<i64>(5, 10), Err(Error::DegenerateCharacter(5)));
        assert_eq!(inverse_sum::<i64>(9, 1), Err(Error::NotOddPrime(9)));
        assert_eq!(full_sum::<i64>(2, 1), Err(Error::NotOddPrime(2)));
    }
}
