use num_traits::{Inv, Zero};

use super::{Polynomial, Rational};
use crate::{Error, Result};

/// Quotient and remainder of `f / g`, satisfying `f = g*q + r` with `r`
/// zero or of degree below `deg g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
}

impl DivisionResult {
    pub fn new(quotient: Polynomial, remainder: Polynomial) -> Self {
        DivisionResult {
            quotient,
            remainder,
        }
    }

    /// Checks `f = g*q + r` and the remainder degree bound exactly.
    pub fn satisfies(&self, f: &Polynomial, g: &Polynomial) -> bool {
        let Some(m) = g.degree() else {
            return false;
        };
        let degree_ok = match self.remainder.degree() {
            None => true,
            Some(d) => d < m,
        };
        degree_ok && &(g * &self.quotient) + &self.remainder == *f
    }
}

/// Schoolbook long division. Every other division route is checked
/// against this.
pub fn long_divide(f: &Polynomial, g: &Polynomial) -> Result<DivisionResult> {
    let m = g.degree().ok_or(Error::ZeroDivisor)?;
    let n = match f.degree() {
        Some(n) if n >= m => n,
        _ => return Ok(DivisionResult::new(Polynomial::zero(), f.clone())),
    };
    let lead_inv = g.coeffs()[m].clone().inv();
    let mut rem: Vec<Rational> = f.coeffs().to_vec();
    let mut quot = vec![Rational::zero(); n - m + 1];
    for k in (0..=n - m).rev() {
        let c = &rem[k + m] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, gi) in g.coeffs().iter().enumerate() {
            rem[k + i] -= &c * gi;
        }
        quot[k] = c;
    }
    rem.truncate(m);
    Ok(DivisionResult::new(Polynomial::new(quot), Polynomial::new(rem)))
}

/// Divides by the monic associate `g / b_m`, then rescales the quotient by
/// `1/b_m`. The remainder is unchanged by the rescaling.
pub fn monic_reduction(f: &Polynomial, g: &Polynomial) -> Result<DivisionResult> {
    let lead = g.leading().ok_or(Error::ZeroDivisor)?.clone();
    let lead_inv = lead.inv();
    let monic = g.scale(&lead_inv);
    let DivisionResult {
        quotient,
        remainder,
    } = long_divide(f, &monic)?;
    Ok(DivisionResult::new(quotient.scale(&lead_inv), remainder))
}
