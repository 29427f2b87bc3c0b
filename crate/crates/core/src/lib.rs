//! Exact computation of Hodge spectra, Hodge ideals, and jumping-ideal
//! spectra of isolated hypersurface singularities.
//!
//! The crate has two computation pipelines over a shared exact kernel:
//!
//! - weighted homogeneous germs: the closed-form spectrum, the weighted
//!   monomial basis of the Milnor algebra, the Hodge-ideal recursion, and
//!   the jumping-ideal spectrum `Sp^tau`, together with a verifier that the
//!   three routes agree ([`hodge_wh`]);
//! - Newton non-degenerate germs: the Newton boundary, the piecewise
//!   linear weight `h`, the non-degeneracy test, the Newton filtration
//!   recursion, and the two spectra `Sp^tau` / `Sp^mu` ([`newton`]).
//!
//! The kernel is exact throughout: sparse polynomials over big rationals
//! ([`poly`]), a Buchberger engine with weighted orders and an at-origin
//! local colength ([`groebner`]), and fractional Laurent polynomials with
//! rational exponents ([`series`]).

pub mod error;
pub mod groebner;
pub mod hodge_wh;
pub mod milnor;
pub mod newton;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod series;

pub use error::{Error, Result};
pub use groebner::{
    buchberger_reduced, saturation_contains_one, Colength, Ideal, StandardMonomials,
};
pub use order::{MonomialOrder, TieBreak};
pub use parse::parse_polynomial;
pub use poly::{
    default_variable_names, format_polynomial, infer_weights, is_weighted_homogeneous,
    monomial_weight, Exponent, Polynomial, WeightSystem,
};
pub use rat::Rat;
pub use series::FracLaurent;
