//! Exact-arithmetic toolkit for quintic Del Pezzo surfaces over the rationals.
//!
//! The crate is organized around three pipelines:
//! construction of an anticanonically embedded surface from a quintic seed
//! polynomial ([`construct`]), rational parametrization of such a surface
//! ([`parametrize`]), and isomorphism testing through the Galois action on
//! the ten lines ([`galois`]). Everything below them is exact kernel code:
//! rational scalars and factorization ([`scalar`]), number fields
//! ([`numfield`]), sparse multivariate polynomials ([`mpoly`]) and a small
//! Buchberger engine ([`groebner`]).

pub mod cli;
pub mod construct;
pub mod error;
pub mod field;
pub mod galois;
pub mod groebner;
pub mod mpoly;
pub mod numfield;
pub mod parametrize;
pub mod parse;
pub mod scalar;

pub use error::{Dp5Error, Result};
