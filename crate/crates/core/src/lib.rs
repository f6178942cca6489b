//! Extended affine Weyl group of type C̃n, its Iwahori–Hecke algebra with
//! unequal parameters (`q_0 = 1`, `q_i = q`), Bernstein elements, induced
//! modules from the maximal finite parabolic subalgebras, and a few
//! finite-group and character-sum checks around them.
//!
//! Everything algebraic is generic over the integer [`Coefficient`] type;
//! the aliases below fix it to [`BigInt`].

pub mod charsum;
pub mod error;
pub mod finitew;
pub mod hecke;
pub mod induce;
pub mod laurent;
pub mod scalar;
pub mod weyl;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::{Coefficient, Scalar};
pub use weyl::{ExtAffineWeylElement, SignedPermutation, Word};

pub type LaurentPoly = laurent::Laurent<BigInt>;
pub type LaurentMatrix = laurent::Matrix<BigInt>;
pub type HeckeElement = hecke::Element<BigInt>;
pub type CharacterSpec = hecke::Character<BigInt>;
pub type InducedModule = induce::Module<BigInt>;
pub type ModuleVector = induce::Vector<BigInt>;
pub type CyclotomicInteger = charsum::Cyclotomic<BigInt>;
