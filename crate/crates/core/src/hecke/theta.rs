//! Bernstein elements `θ_λ = T_{t_μ} · T_{t_ν}^{-1}` for `λ = μ - ν` with
//! `μ, ν` dominant.

use super::element::{basis_inverse_ops, basis_ops, GenOp};
use super::Element;
use crate::scalar::Coefficient;
use crate::weyl::ExtAffineWeylElement;

/// `μ_1 ≥ μ_2 ≥ ... ≥ μ_n ≥ 0`.
pub fn is_dominant(mu: &[i32]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1]) && mu.last().is_none_or(|&m| m >= 0)
}

/// Splits `λ = μ - ν` along the fundamental coweights
/// `ω_k = e_1 + ... + e_k`: with `c_k = λ_k - λ_{k+1}` (and `λ_{n+1} = 0`),
/// `μ` collects the positive `c_k ω_k` and `ν` the negative ones.
pub fn dominant_decomposition(lambda: &[i32]) -> (Vec<i32>, Vec<i32>) {
    let n = lambda.len();
    let mut mu = vec![0; n];
    let mut nu = vec![0; n];
    for k in 0..n {
        let next = if k + 1 < n { lambda[k + 1] } else { 0 };
        let c = lambda[k] - next;
        let target = if c > 0 { &mut mu } else { &mut nu };
        for x in target.iter_mut().take(k + 1) {
            *x += c.abs();
        }
    }
    assert!(is_dominant(&mu) && is_dominant(&nu), "decomposition not dominant");
    debug_assert!((0..n).all(|i| mu[i] - nu[i] == lambda[i]));
    (mu, nu)
}

/// Factors of `T_{t_μ} T_{t_ν}^{-1}` in application order.
pub fn theta_ops_from(mu: &[i32], nu: &[i32]) -> Vec<GenOp> {
    assert!(is_dominant(mu) && is_dominant(nu), "θ needs dominant parts");
    let mut ops = basis_inverse_ops(&ExtAffineWeylElement::translation(nu));
    ops.extend(basis_ops(&ExtAffineWeylElement::translation(mu)));
    ops
}

pub fn theta_ops(lambda: &[i32]) -> Vec<GenOp> {
    let (mu, nu) = dominant_decomposition(lambda);
    theta_ops_from(&mu, &nu)
}

/// `θ_λ` via the canonical decomposition.
pub fn theta<C: Coefficient>(lambda: &[i32]) -> Element<C> {
    Element::unit(lambda.len()).apply_ops(&theta_ops(lambda))
}

/// `T_{t_μ} T_{t_ν}^{-1}` for an explicitly chosen dominant pair.
pub fn theta_from<C: Coefficient>(mu: &[i32], nu: &[i32]) -> Element<C> {
    assert_eq!(mu.len(), nu.len());
    Element::unit(mu.len()).apply_ops(&theta_ops_from(mu, nu))
}

/// Upper bound on the Coxeter length of any support element of `θ_λ`.
pub fn theta_length_bound(lambda: &[i32]) -> usize {
    let (mu, nu) = dominant_decomposition(lambda);
    ExtAffineWeylElement::translation(&mu).length() + ExtAffineWeylElement::translation(&nu).length()
}
