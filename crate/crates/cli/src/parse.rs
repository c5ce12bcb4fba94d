//! Polynomial text syntax.
//!
//! Two forms are accepted:
//!
//! - terms: `3x^4 - 2x + 1/2`, `-x^2+x`, `2*x`. Coefficients are integers or
//!   `int/int`; exponents are non-negative integers; repeated powers add up.
//! - coefficient list, ascending: `[1/2, -2, 0, 0, 3]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use polydiv_core::{Polynomial, Rational};

use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Errors raised while reading a polynomial: bad syntax, or a value past
/// the configured limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    Syntax(ParseError),
    Limit(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Syntax(e) => write!(f, "parse error at {e}"),
            InputError::Limit(msg) => write!(f, "input limit exceeded: {msg}"),
        }
    }
}

impl std::error::Error for InputError {}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    limits: &'a Limits,
}

type PResult<T> = Result<T, InputError>;

impl<'a> Scanner<'a> {
    fn new(text: &str, limits: &'a Limits) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            limits,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(InputError::Syntax(ParseError {
            column: self.pos + 1,
            message: message.into(),
        }))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        match self.digits() {
            Some(d) => Ok(d.parse().expect("ascii digits")),
            None => self.err("expected a digit"),
        }
    }

    /// `digits ['/' digits]`, unsigned.
    fn magnitude(&mut self) -> PResult<Rational> {
        let num = self.integer()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den_col = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                self.pos = den_col;
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> PResult<usize> {
        self.skip_ws();
        if self.peek() == Some('-') {
            return self.err("negative exponent");
        }
        let col = self.pos;
        let e = self.integer()?;
        match usize::try_from(&e) {
            Ok(e) if e <= self.limits.max_degree => Ok(e),
            _ => {
                self.pos = col;
                Err(InputError::Limit(format!(
                    "exponent {e} exceeds the maximum degree {}",
                    self.limits.max_degree
                )))
            }
        }
    }

    /// Term after its sign: `coef [*] x [^ e]`, `coef`, or `x [^ e]`.
    fn term_body(&mut self) -> PResult<(Rational, usize)> {
        self.skip_ws();
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.magnitude()?),
            Some('x') => None,
            Some(c) => return self.err(format!("unexpected `{c}` where a term should start")),
            None => return self.err("expected a term"),
        };
        let had_star = self.eat('*');
        self.skip_ws();
        if self.peek() == Some('x') {
            self.pos += 1;
            let power = if self.eat('^') { self.exponent()? } else { 1 };
            Ok((coef.unwrap_or_else(|| Rational::from_integer(1.into())), power))
        } else if had_star {
            self.err("expected `x` after `*`")
        } else {
            Ok((coef.expect("digit branch"), 0))
        }
    }

    fn terms(&mut self) -> PResult<Polynomial> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (c, power) = self.term_body()?;
            let c = if negative { -c } else { c };
            *acc.entry(power).or_insert_with(Rational::zero) += c;
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return self.err(format!("unexpected `{c}`")),
            }
            self.pos += 1;
        }
        let degree = acc.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); degree + 1];
        for (p, c) in acc {
            coeffs[p] = c;
        }
        Ok(Polynomial::new(coeffs))
    }

    fn list(&mut self) -> PResult<Polynomial> {
        let mut coeffs = Vec::new();
        if self.eat(']') {
            return Ok(Polynomial::zero());
        }
        loop {
            let negative = if self.eat('-') {
                true
            } else {
                self.eat('+');
                false
            };
            let c = self.magnitude()?;
            coeffs.push(if negative { -c } else { c });
            if coeffs.len() > self.limits.max_degree + 1 {
                return Err(InputError::Limit(format!(
                    "more than {} coefficients",
                    self.limits.max_degree + 1
                )));
            }
            if self.eat(',') {
                continue;
            }
            if self.eat(']') {
                break;
            }
            self.skip_ws();
            return self.err("expected `,` or `]`");
        }
        Ok(Polynomial::new(coeffs))
    }

    fn polynomial(&mut self) -> PResult<Polynomial> {
        self.skip_ws();
        let p = if self.eat('[') {
            self.list()?
        } else {
            self.terms()?
        };
        self.skip_ws();
        if let Some(c) = self.peek() {
            return self.err(format!("trailing `{c}`"));
        }
        Ok(p)
    }
}

/// Parses either syntax, enforcing `limits` on degree and coefficient size.
pub fn parse_polynomial_with(text: &str, limits: &Limits) -> Result<Polynomial, InputError> {
    let p = Scanner::new(text, limits).polynomial()?;
    limits.check(&p)?;
    Ok(p)
}

/// Parses with the default limits.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, InputError> {
    parse_polynomial_with(text, &Limits::default())
}
