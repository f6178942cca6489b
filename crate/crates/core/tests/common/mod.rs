#![allow(dead_code)]

pub mod oracle;

use affine_hecke::hecke::Element;
use affine_hecke::weyl::ExtAffineWeylElement;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

pub fn s(i: usize, n: usize) -> ExtAffineWeylElement {
    ExtAffineWeylElement::generator(i, n).unwrap()
}

pub fn word(letters: &[usize], n: usize) -> ExtAffineWeylElement {
    letters.iter().fold(ExtAffineWeylElement::identity(n), |g, &i| &g * &s(i, n))
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..=n)).collect()
}

/// Converts a library element to the oracle's normal-form keyed map.
pub fn to_oracle(rw: &mut oracle::Rewriter, h: &Element<BigInt>) -> oracle::HeckeO {
    h.iter()
        .map(|(w, c)| {
            let key = rw.normal_form(w.reduced_word().letters());
            let poly = c.terms().map(|(e, v)| (e, v.to_i64().unwrap())).collect();
            (key, poly)
        })
        .collect()
}
