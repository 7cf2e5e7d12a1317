//! Exact computations with apolar ideals of determinants, permanents,
//! hafnians and immanants of generic and generic symmetric matrices.
//!
//! Polynomials live in a [`ring::RingSpec`]; the dual ring acts on them by
//! differentiation or contraction ([`pairing`]). The [`apolar`] module
//! computes Hilbert functions, annihilator slices and generator profiles,
//! [`groebner`] checks Groebner bases, [`ranks`] turns Hilbert data into rank
//! lower bounds and [`symgroup`] provides the character theory.

pub mod apolar;
pub mod combinatorics;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod pairing;
pub mod parse;
pub mod ranks;
pub mod report;
pub mod ring;
pub mod subspace;
pub mod symgroup;
pub mod tables;

pub use error::{Error, ParseError, Result};
pub use groebner::MonomialOrder;
pub use invariants::Form;
pub use pairing::Pairing;
pub use ring::{Flavor, Layout, Monomial, Polynomial, Rational, RingSpec, VarId};
pub use subspace::GradedSubspace;
