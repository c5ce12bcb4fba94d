use num_traits::Zero;

use super::{Polynomial, Rational};
use crate::{Error, Result};

/// Lagrange interpolation through `(x_i, y_i)`. The result has degree below
/// the number of points and is exact.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateNode);
        }
    }
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = Rational::from_integer(1.into());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = xi - xj;
            basis = &basis * &Polynomial::new(vec![-xj, Rational::from_integer(1.into())]);
            denom *= diff;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}
