//! Quasi-shuffle algebra of multiple zeta values.
//!
//! * [`word_algebra`]: words `z_{s_1} ... z_{s_r}`, rational word
//!   polynomials, the harmonic and star products, and the multinomial closed
//!   forms for powers of a single letter.
//! * [`combinatorics`]: exact multinomial, Stirling, Delannoy and Fubini
//!   numbers and the Fubini/Delannoy split identity.
//! * [`numeric`]: truncated nested-sum evaluation of multiple zeta, zeta-star,
//!   Hurwitz and t-values, and their linear extension to word polynomials.
//! * [`cli`]: the `mzv` command-line front end.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod numeric;
pub mod word_algebra;

pub use error::{Error, Result};
