use num_traits::Zero;

use super::{Polynomial, Rational};
use crate::{Error, Result};

/// One divisor seen through the three coefficient conventions in use.
///
/// For `g = b_m x^m + g_{m-1} x^{m-1} + ... + g_0`:
///
/// - `raw` is `g` itself,
/// - `monic_tail[i] = g_i / b_m`,
/// - `negated_tail[i] = -g_i`, i.e. `g = b_m x^m - c_{m-1} x^{m-1} - ... - c_0`.
///
/// Every recurrence in [`crate::closedform`] is written over the negated
/// tail. Lookups outside `0..m` return zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorViews {
    raw: Polynomial,
    lead: Rational,
    monic_tail: Vec<Rational>,
    negated_tail: Vec<Rational>,
}

impl DivisorViews {
    pub fn new(g: &Polynomial) -> Result<Self> {
        let m = g.degree().ok_or(Error::ZeroDivisor)?;
        let lead = g.coeffs()[m].clone();
        let tail = &g.coeffs()[..m];
        Ok(DivisorViews {
            raw: g.clone(),
            monic_tail: tail.iter().map(|c| c / &lead).collect(),
            negated_tail: tail.iter().map(|c| -c).collect(),
            lead,
        })
    }

    pub fn raw(&self) -> &Polynomial {
        &self.raw
    }

    /// Leading coefficient `b_m`.
    pub fn lead(&self) -> &Rational {
        &self.lead
    }

    pub fn degree(&self) -> usize {
        self.monic_tail.len()
    }

    pub fn monic_tail(&self) -> &[Rational] {
        &self.monic_tail
    }

    pub fn negated_tail(&self) -> &[Rational] {
        &self.negated_tail
    }

    /// `g_i`, zero outside `0..=m`.
    pub fn raw_at(&self, i: i64) -> Rational {
        self.raw.coeff_signed(i)
    }

    /// `beta_i = g_i / b_m`, zero outside `0..m`.
    pub fn monic_at(&self, i: i64) -> Rational {
        tail_at(&self.monic_tail, i)
    }

    /// `c_i = -g_i`, zero outside `0..m`.
    pub fn negated_at(&self, i: i64) -> Rational {
        tail_at(&self.negated_tail, i)
    }
}

/// Views of `g`; fails only for the zero polynomial.
pub fn divisor_views(g: &Polynomial) -> Result<DivisorViews> {
    DivisorViews::new(g)
}

fn tail_at(tail: &[Rational], i: i64) -> Rational {
    usize::try_from(i)
        .ok()
        .and_then(|i| tail.get(i).cloned())
        .unwrap_or_else(Rational::zero)
}
