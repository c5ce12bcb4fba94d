use thiserror::Error;

use polydiv_core::closedform::{s_sequence, t_sequence};
use polydiv_core::detengine::{delta_pure_closed, DeltaPureSpec, DeltaVariant, DetEngine};
use polydiv_core::methods::{divide, Method};
use polydiv_core::polycore::DivisorViews;
use polydiv_core::{DivisionResult, Polynomial};

use crate::limits::Limits;
use crate::parse::{parse_polynomial_with, InputError};
use crate::render::rational_string;
use crate::report::{division_text, Agreement, DivisionReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("{0}")]
    Domain(#[from] polydiv_core::Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(InputError::Syntax(_)) => EXIT_PARSE,
            CliError::Input(InputError::Limit(_)) | CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaKind {
    PureDirect,
    PureClosed,
    CorFlipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    S,
    T,
}

/// Shared settings for one invocation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Context {
    pub limits: Limits,
    pub engine: DetEngine,
    /// Test-only: perturb this method's quotient inside `verify`.
    pub fault: Option<Method>,
}

fn parse_pair(ctx: &Context, dividend: &str, divisor: &str) -> Result<(Polynomial, Polynomial), CliError> {
    let f = parse_polynomial_with(dividend, &ctx.limits)?;
    let g = parse_polynomial_with(divisor, &ctx.limits)?;
    if g.is_zero() {
        return Err(polydiv_core::Error::ZeroDivisor.into());
    }
    Ok((f, g))
}

pub fn cmd_divide(
    ctx: &Context,
    dividend: &str,
    divisor: &str,
    method: Method,
    format: Format,
) -> Result<String, CliError> {
    let (f, g) = parse_pair(ctx, dividend, divisor)?;
    let result = divide(method, &f, &g, &ctx.engine)?;
    let report = DivisionReport::new(&f, &g, method, &result).ok_or_else(|| {
        CliError::Mismatch(format!("{method} produced a result violating f = g*q + r"))
    })?;
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => division_text(&f, &g, method, &result),
    })
}

/// Result of running every method on one input.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub dividend: Polynomial,
    pub divisor: Polynomial,
    pub results: Vec<(Method, DivisionResult)>,
    pub report: DivisionReport,
    /// First disagreement with long division, if any.
    pub mismatch: Option<String>,
}

impl VerifyOutcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.report.to_json() + "\n",
            Format::Text => {
                let oracle = &self.results[0].1;
                let mut out = division_text(&self.dividend, &self.divisor, Method::LongDiv, oracle);
                let agreement = self.report.agreement.as_ref().expect("verify sets agreement");
                for m in Method::ALL {
                    let flag = if agreement.get(m) { "ok" } else { "MISMATCH" };
                    out.push_str(&format!("{:<12}{flag}\n", m.name()));
                }
                out
            }
        }
    }
}

fn first_difference(expected: &DivisionResult, got: &DivisionResult) -> Option<String> {
    for (part, e, g) in [
        ("quotient", &expected.quotient, &got.quotient),
        ("remainder", &expected.remainder, &got.remainder),
    ] {
        let len = e.coeffs().len().max(g.coeffs().len());
        if let Some(i) = (0..len).find(|&i| e.coeff(i) != g.coeff(i)) {
            return Some(format!(
                "{part} coefficient of x^{i}: expected {}, got {}",
                rational_string(&e.coeff(i)),
                rational_string(&g.coeff(i))
            ));
        }
    }
    None
}

/// Runs all four methods (concurrently) and compares each with long division.
pub fn verify(ctx: &Context, f: &Polynomial, g: &Polynomial) -> Result<VerifyOutcome, CliError> {
    let engine = ctx.engine;
    let computed: Vec<(Method, polydiv_core::Result<DivisionResult>)> = std::thread::scope(|s| {
        let handles: Vec<_> = Method::ALL
            .into_iter()
            .map(|m| (m, s.spawn(move || divide(m, f, g, &engine))))
            .collect();
        handles
            .into_iter()
            .map(|(m, h)| (m, h.join().expect("division thread panicked")))
            .collect()
    });
    let mut results = Vec::with_capacity(4);
    for (m, r) in computed {
        let mut r = r?;
        if ctx.fault == Some(m) {
            r.quotient = &r.quotient + &Polynomial::one();
        }
        results.push((m, r));
    }

    let oracle = results[0].1.clone();
    let mut agreement = Agreement {
        longdiv: true,
        closed: true,
        det_formula: true,
        det_ratio: true,
    };
    let mut mismatch = None;
    for (m, r) in &results {
        let diff = if *m == Method::LongDiv {
            (!r.satisfies(f, g)).then(|| "long division violates f = g*q + r".to_string())
        } else {
            first_difference(&oracle, r)
        };
        if let Some(d) = diff {
            agreement.set(*m, false);
            mismatch.get_or_insert_with(|| format!("{m} disagrees with longdiv: {d}"));
        }
    }

    let mut report = DivisionReport::new(f, g, Method::LongDiv, &oracle).ok_or_else(|| {
        CliError::Mismatch("long division violates f = g*q + r".to_string())
    })?;
    report.agreement = Some(agreement);
    Ok(VerifyOutcome {
        dividend: f.clone(),
        divisor: g.clone(),
        results,
        report,
        mismatch,
    })
}

pub fn cmd_verify(ctx: &Context, dividend: &str, divisor: &str) -> Result<VerifyOutcome, CliError> {
    let (f, g) = parse_pair(ctx, dividend, divisor)?;
    verify(ctx, &f, &g)
}

pub fn cmd_delta(ctx: &Context, divisor: &str, k: usize, kind: DeltaKind) -> Result<String, CliError> {
    let g = parse_polynomial_with(divisor, &ctx.limits)?;
    let cap = ctx.limits.max_degree + 1;
    if k > cap {
        return Err(InputError::Limit(format!("determinant order {k} exceeds {cap}")).into());
    }
    let spec = DeltaPureSpec::new(DivisorViews::new(&g)?, k)?;
    let value = match kind {
        DeltaKind::PureDirect => ctx.engine.delta_pure_direct(&spec, DeltaVariant::Standard)?,
        DeltaKind::PureClosed => delta_pure_closed(&spec, DeltaVariant::Standard),
        DeltaKind::CorFlipped => delta_pure_closed(&spec, DeltaVariant::Flipped),
    };
    Ok(rational_string(&value) + "\n")
}

pub fn cmd_sequence(ctx: &Context, divisor: &str, kind: SeqKind, count: usize) -> Result<String, CliError> {
    let g = parse_polynomial_with(divisor, &ctx.limits)?;
    let cap = ctx.limits.max_degree + 1;
    if count > cap {
        return Err(InputError::Limit(format!("sequence length {count} exceeds {cap}")).into());
    }
    let views = DivisorViews::new(&g)?;
    let seq = match kind {
        SeqKind::S => s_sequence(&views, count)?,
        SeqKind::T => t_sequence(&views, count)?,
    };
    let terms: Vec<String> = seq.terms().iter().map(rational_string).collect();
    Ok(terms.join(", ") + "\n")
}
