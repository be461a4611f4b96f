//! Exact golden (Fibonacci) quantum calculus.
//!
//! Everything here is computed over arbitrary-precision integers, rationals
//! and the golden ring `Z[φ]` (with its fraction field `Q(φ)`); nothing is
//! ever approximated. The crate covers Fibonacci sequences and Fibonomials,
//! golden binomials and golden polynomials, the golden derivative, golden
//! analytic functions in two variables, and the Carlitz binomial matrices
//! whose characteristic polynomials are golden binomials.
//!
//! ```
//! use golden_core::carlitz::{build_carlitz, char_poly};
//!
//! let a3 = build_carlitz(3).unwrap();
//! let q3 = char_poly(&a3);
//! assert_eq!(q3.to_string(), "x^3 - 2x^2 - 2x + 1");
//! ```

pub mod analytic;
pub mod bipoly;
pub mod carlitz;
mod error;
pub mod golden_ring;
pub mod goldpoly;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use golden_ring::{GoldenInt, GoldenRational};
pub use matrix::IntMatrix;
pub use poly::Poly;
pub use ring::{Field, Integer, Rational, Ring};
