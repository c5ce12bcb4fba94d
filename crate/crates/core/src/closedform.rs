//! Quotient and remainder from linear recurrent sequences.
//!
//! Write the divisor as `g = b_m x^m - c_{m-1} x^{m-1} - ... - c_0`. Two
//! sequences drive everything here:
//!
//! ```text
//! s_1 = 1,      s_r = sum_{i=1}^{r-1} (c_{m-i} / b_m) s_{r-i}   (monic divisor)
//! t_1 = 1/b_m,  t_r = (1/b_m) sum_{i=1}^{r-1} c_{m-i} t_{r-i}   (general divisor)
//! ```
//!
//! with `c_j = 0` outside `0..m`, so `b_m t_r = s_r`. For `f = a_n x^n + ... + a_0`
//! the quotient coefficients are
//!
//! ```text
//! d_{n-m-k} = sum_{j=0}^{k} t_{k+1-j} a_{n-j},   k = 0..=n-m
//! ```
//!
//! and the remainder follows from matching the low coefficients of
//! `f = g q + r`: `r_k = a_k + sum_{i+j=k} c_i d_j` for `k < m`.
//!
//! The quotient formula only touches `a_m..=a_n`; the low coefficients of the
//! dividend cannot influence it.

use num_traits::{Inv, One, Zero};

use crate::polycore::{DivisionResult, DivisorViews, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `s_r`, built from the monic associate of the divisor.
    SMonic,
    /// `t_r`, built from the divisor as given.
    TGeneral,
}

/// The first `len()` terms of `s` or `t`, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrentSequence {
    terms: Vec<Rational>,
    views: DivisorViews,
    kind: SequenceKind,
}

impl RecurrentSequence {
    /// Term `r`, 1-based. Panics if `r` is 0 or past the computed horizon.
    pub fn term(&self, r: usize) -> &Rational {
        assert!(r >= 1, "recurrent sequences are indexed from 1");
        &self.terms[r - 1]
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn views(&self) -> &DivisorViews {
        &self.views
    }
}

/// `x_1 = first`, `x_r = scale * sum_{i=1}^{min(r-1, m)} c_{m-i} x_{r-i}`.
fn unroll(views: &DivisorViews, first: Rational, scale: &Rational, count: usize) -> Vec<Rational> {
    let m = views.degree();
    let tail = views.negated_tail();
    let mut terms = Vec::with_capacity(count);
    terms.push(first);
    for r in 2..=count {
        let mut acc = Rational::zero();
        for i in 1..=(r - 1).min(m) {
            let c = &tail[m - i];
            if !c.is_zero() {
                acc += c * &terms[r - i - 1];
            }
        }
        terms.push(acc * scale);
    }
    terms
}

pub fn s_sequence(views: &DivisorViews, count: usize) -> Result<RecurrentSequence> {
    if count == 0 {
        return Err(Error::EmptySequence);
    }
    let scale = views.lead().clone().inv();
    Ok(RecurrentSequence {
        terms: unroll(views, Rational::one(), &scale, count),
        views: views.clone(),
        kind: SequenceKind::SMonic,
    })
}

pub fn t_sequence(views: &DivisorViews, count: usize) -> Result<RecurrentSequence> {
    if count == 0 {
        return Err(Error::EmptySequence);
    }
    let scale = views.lead().clone().inv();
    Ok(RecurrentSequence {
        terms: unroll(views, scale.clone(), &scale, count),
        views: views.clone(),
        kind: SequenceKind::TGeneral,
    })
}

/// Requires `t.len() >= n - m + 1`.
fn quotient_from_t(f: &Polynomial, n: usize, m: usize, t: &RecurrentSequence) -> Polynomial {
    let a = f.coeffs();
    let top = n - m;
    let mut d = vec![Rational::zero(); top + 1];
    for k in 0..=top {
        let mut acc = Rational::zero();
        for j in 0..=k {
            let coeff = &a[n - j];
            if !coeff.is_zero() {
                acc += t.term(k + 1 - j) * coeff;
            }
        }
        d[top - k] = acc;
    }
    Polynomial::new(d)
}

fn degrees(f: &Polynomial, g: &Polynomial) -> Result<(usize, usize)> {
    let m = g.degree().ok_or(Error::ZeroDivisor)?;
    match f.degree() {
        Some(n) if n >= m => Ok((n, m)),
        dividend => Err(Error::DegreeTooSmall {
            dividend,
            divisor: m,
        }),
    }
}

/// Quotient of `f / g` from the `t` sequence. Needs `deg f >= deg g`.
pub fn quotient_closed(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (n, m) = degrees(f, g)?;
    let views = DivisorViews::new(g)?;
    let t = t_sequence(&views, n - m + 1)?;
    Ok(quotient_from_t(f, n, m, &t))
}

/// Remainder of `f / g` given the true quotient `q`:
/// `r_k = a_k + sum_{i+j=k, i<m} c_i d_j` for `k < m`.
pub fn remainder_closed(f: &Polynomial, g: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let views = DivisorViews::new(g)?;
    let m = views.degree();
    let c = views.negated_tail();
    let r = (0..m)
        .map(|k| {
            let mut acc = f.coeff(k);
            for (i, ci) in c.iter().enumerate().take(k + 1) {
                let dj = q.coeff(k - i);
                if !dj.is_zero() {
                    acc += ci * dj;
                }
            }
            acc
        })
        .collect();
    Ok(Polynomial::new(r))
}

/// Full division through the recurrent-sequence formulas. Dividends of lower
/// degree than the divisor and constant divisors are answered directly.
pub fn divide_closed(f: &Polynomial, g: &Polynomial) -> Result<DivisionResult> {
    let m = g.degree().ok_or(Error::ZeroDivisor)?;
    let n = match f.degree() {
        Some(n) if n >= m => n,
        _ => return Ok(DivisionResult::new(Polynomial::zero(), f.clone())),
    };
    if m == 0 {
        let inv = g.coeffs()[0].clone().inv();
        return Ok(DivisionResult::new(f.scale(&inv), Polynomial::zero()));
    }
    let views = DivisorViews::new(g)?;
    let t = t_sequence(&views, n - m + 1)?;
    let q = quotient_from_t(f, n, m, &t);
    let r = remainder_closed(f, g, &q)?;
    Ok(DivisionResult::new(q, r))
}
