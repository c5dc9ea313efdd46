//! Coefficient fields, monomials, polynomials and the small amount of dense
//! linear algebra the rest of the crate needs.

pub mod field;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod series;

pub use field::{
    domain_sqrt, is_prime, primes_with_sqrt, CoefficientDomain, ExactField, Field, PrimeField, QuadElem,
    QuadraticField, Rationals, DEFAULT_PRIME,
};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_polynomial;
pub use poly::{default_var_names, product, ArithOp, Polynomial};
pub use series::IntPoly;
