use std::fmt::Write;

use num_traits::{One, Signed, Zero};
use polydiv_core::{Polynomial, Rational};

/// `"num"` or `"num/den"`.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// Ascending coefficient strings, the JSON wire form.
pub fn coefficient_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

/// Compact human form, highest power first: `x^2+x+2`, `-1/2x^3+x-1`.
/// Parses back to the same polynomial.
pub fn render(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (power, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if power == 0 || !mag.is_one() {
            write!(out, "{mag}").unwrap();
        }
        match power {
            0 => {}
            1 => out.push('x'),
            _ => write!(out, "x^{power}").unwrap(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(render(&Polynomial::from_ints(&[2, 1, 1])), "x^2+x+2");
        assert_eq!(render(&Polynomial::from_ints(&[2, 3])), "3x+2");
        assert_eq!(render(&Polynomial::from_ints(&[-1, -1, 1])), "x^2-x-1");
        assert_eq!(render(&Polynomial::zero()), "0");
        assert_eq!(render(&Polynomial::from_ints(&[1])), "1");
        assert_eq!(render(&Polynomial::from_ints(&[-1])), "-1");
        let p = Polynomial::new(vec![
            Rational::from_integer((-1).into()),
            Rational::one(),
            Rational::zero(),
            Rational::new((-1).into(), 2.into()),
        ]);
        assert_eq!(render(&p), "-1/2x^3+x-1");
    }

    #[test]
    fn coefficient_strings_are_exact() {
        let p = Polynomial::new(vec![
            Rational::new(3.into(), 6.into()),
            Rational::from_integer((-7).into()),
        ]);
        assert_eq!(coefficient_strings(&p), vec!["1/2", "-7"]);
    }
}
