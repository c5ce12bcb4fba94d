use std::fmt;
use std::str::FromStr;

use crate::closedform::{divide_closed, remainder_closed};
use crate::detengine::DetEngine;
use crate::polycore::{long_divide, DivisionResult, Polynomial};
use crate::{Error, Result};

/// The four independent division routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    LongDiv,
    Closed,
    DetFormula,
    DetRatio,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::LongDiv,
        Method::Closed,
        Method::DetFormula,
        Method::DetRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::LongDiv => "longdiv",
            Method::Closed => "closed",
            Method::DetFormula => "det-formula",
            Method::DetRatio => "det-ratio",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Divides `f` by `g` with the chosen method.
///
/// `det-formula` pairs the determinant quotient with the closed-form
/// remainder; `det-ratio` recovers the remainder as `f - g q`. Dividends of
/// lower degree than the divisor give `(0, f)` for every method.
pub fn divide(method: Method, f: &Polynomial, g: &Polynomial, engine: &DetEngine) -> Result<DivisionResult> {
    let m = g.degree().ok_or(Error::ZeroDivisor)?;
    if method == Method::LongDiv {
        return long_divide(f, g);
    }
    if method == Method::Closed {
        return divide_closed(f, g);
    }
    if f.degree().is_none_or(|n| n < m) {
        return Ok(DivisionResult::new(Polynomial::zero(), f.clone()));
    }
    match method {
        Method::DetFormula => {
            let q = engine.quotient_from_dets(f, g)?;
            let r = remainder_closed(f, g, &q)?;
            Ok(DivisionResult::new(q, r))
        }
        Method::DetRatio => {
            let q = engine.quotient_ratio(f, g)?;
            let r = f - &(g * &q);
            Ok(DivisionResult::new(q, r))
        }
        Method::LongDiv | Method::Closed => unreachable!(),
    }
}
