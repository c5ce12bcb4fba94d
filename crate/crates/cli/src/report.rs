use serde::{Deserialize, Serialize};

use polydiv_core::methods::Method;
use polydiv_core::{DivisionResult, Polynomial};

use crate::render::{coefficient_strings, render};

/// Per-method equality against the long-division result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub longdiv: bool,
    pub closed: bool,
    #[serde(rename = "det-formula")]
    pub det_formula: bool,
    #[serde(rename = "det-ratio")]
    pub det_ratio: bool,
}

impl Agreement {
    pub fn get(&self, method: Method) -> bool {
        match method {
            Method::LongDiv => self.longdiv,
            Method::Closed => self.closed,
            Method::DetFormula => self.det_formula,
            Method::DetRatio => self.det_ratio,
        }
    }

    pub fn set(&mut self, method: Method, value: bool) {
        match method {
            Method::LongDiv => self.longdiv = value,
            Method::Closed => self.closed = value,
            Method::DetFormula => self.det_formula = value,
            Method::DetRatio => self.det_ratio = value,
        }
    }

    pub fn all(&self) -> bool {
        Method::ALL.into_iter().all(|m| self.get(m))
    }
}

/// Wire form of one division. Coefficient arrays are ascending and every
/// scalar is an exact `"num"` or `"num/den"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionReport {
    pub dividend: String,
    pub divisor: String,
    pub method: String,
    pub quotient: Vec<String>,
    pub remainder: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
}

impl DivisionReport {
    /// `None` if `result` does not satisfy `f = g q + r`.
    pub fn new(
        f: &Polynomial,
        g: &Polynomial,
        method: Method,
        result: &DivisionResult,
    ) -> Option<Self> {
        if !result.satisfies(f, g) {
            return None;
        }
        Some(DivisionReport {
            dividend: render(f),
            divisor: render(g),
            method: method.name().to_string(),
            quotient: coefficient_strings(&result.quotient),
            remainder: coefficient_strings(&result.remainder),
            agreement: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn division_text(f: &Polynomial, g: &Polynomial, method: Method, r: &DivisionResult) -> String {
    format!(
        "dividend:  {}\ndivisor:   {}\nmethod:    {}\nquotient:  {}\nremainder: {}\n",
        render(f),
        render(g),
        method,
        render(&r.quotient),
        render(&r.remainder)
    )
}
