use polydiv_core::Polynomial;

use crate::parse::InputError;

pub const DEFAULT_MAX_DEGREE: usize = 512;
pub const DEFAULT_MAX_COEFF_BITS: u64 = 4096;
pub const MAX_DEGREE_ENV: &str = "POLYDIV_MAX_DEGREE";

/// Bounds on accepted input, protecting exact arithmetic from blowup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    /// Applies to numerator and denominator separately.
    pub max_coeff_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_coeff_bits: DEFAULT_MAX_COEFF_BITS,
        }
    }
}

impl Limits {
    /// Defaults, with the degree cap taken from `POLYDIV_MAX_DEGREE` if set.
    pub fn from_env() -> Result<Self, String> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(MAX_DEGREE_ENV) {
            limits.max_degree = v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_DEGREE_ENV} must be a non-negative integer, got `{v}`"))?;
        }
        Ok(limits)
    }

    pub fn check(&self, p: &Polynomial) -> Result<(), InputError> {
        if let Some(d) = p.degree() {
            if d > self.max_degree {
                return Err(InputError::Limit(format!(
                    "degree {d} exceeds the maximum degree {}",
                    self.max_degree
                )));
            }
        }
        for c in p.coeffs() {
            let bits = c.numer().bits().max(c.denom().bits());
            if bits > self.max_coeff_bits {
                return Err(InputError::Limit(format!(
                    "coefficient of {bits} bits exceeds {} bits",
                    self.max_coeff_bits
                )));
            }
        }
        Ok(())
    }
}
