//! Exact polynomial arithmetic over the rationals and prime fields, with a
//! Buchberger Groebner basis engine and a plain-text system format.

mod error;
mod field;
mod groebner;
mod modular;
mod monomial;
mod poly;
mod text;
mod zpoly;

pub use error::PolyError;
pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use groebner::{buchberger, groebner, ideal_equal, leading_monomials, specialize, GbConfig, GbStats, GbStrategy, GroebnerBasis, QuotientDim};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::{PolyRing, Polynomial};
pub use text::{parse_polynomial, AnySystem, System};
pub use modular::rational_reconstruct;
