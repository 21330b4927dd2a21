//! Exact-arithmetic kernel for quasishuffle double bialgebras over a
//! commutative, cocommutative base bialgebra: words with the quasishuffle
//! and shuffle products, deconcatenation and contraction–extraction
//! coproducts, the coaction into the unitary extension of the base, the
//! universal morphism attached to a character, the Hoffman isomorphism,
//! the character-monoid action on morphisms, and the double bialgebra of
//! decorated graphs with its chromatic specializations. A brute-force
//! verification harness checks every structural identity on small
//! enumerated instances.

pub mod error;
pub mod expr;
pub mod graph;
pub mod harness;
pub mod host;
pub mod lincomb;
pub mod morphism;
pub mod poly;
pub mod quasishuffle;
pub mod scalar;
pub mod vspec;
pub mod word;

pub use error::{Error, Result};
