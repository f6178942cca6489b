//! Exact arithmetic in `Z[q, q^-1]` and rank computations over `Q(q)`.

mod matrix;
mod poly;

pub use matrix::{fraction_free_pivots, ExactDomain, Matrix, RankCertificate};
pub use poly::Laurent;

