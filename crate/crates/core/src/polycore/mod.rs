//! Scalars, dense polynomials, the long-division oracle and divisor views.

mod division;
mod interpolate;
mod poly;
mod views;

pub use division::{long_divide, monic_reduction, DivisionResult};
pub use interpolate::lagrange_interpolate;
pub use poly::{normalize, Polynomial};
pub use views::{divisor_views, DivisorViews};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds `num/den`; panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `(-1)^e` as a rational.
pub(crate) fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `base^e` for a possibly negative exponent. `base` must be nonzero when `e < 0`.
pub(crate) fn pow_i(base: &Rational, e: i32) -> Rational {
    num_traits::Pow::pow(base, e)
}
