//! Exact division of univariate polynomials over the rationals.
//!
//! Three independent routes produce the quotient and remainder:
//!
//! - [`polycore::long_divide`], the schoolbook algorithm, used as the oracle;
//! - [`closedform`], explicit formulas driven by a linear recurrent sequence
//!   built from the divisor's coefficients;
//! - [`detengine`], formulas in terms of Hankel, bordered and lower
//!   Hessenberg-Toeplitz determinants.
//!
//! [`methods`] dispatches between them so callers can compare results.

pub mod closedform;
pub mod detengine;
mod error;
pub mod methods;
pub mod polycore;

pub use error::{Error, Result};
pub use methods::Method;
pub use polycore::{DivisionResult, DivisorViews, Polynomial, Rational};
