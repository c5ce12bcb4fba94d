//! Determinant formulas for the quotient.
//!
//! Dividing `f` (degree `n`) by `g` (degree `m`) and matching the top
//! `n - m + 1` coefficients of `f = g q + r` gives a linear system `H d = a`
//! with a backward upper-triangular Hankel matrix `H`. Bordering `H` with the
//! dividend column `a` and the monomial row `(x^{n-m}, ..., x, 1, 0)` gives a
//! matrix `W` with `det W = -det(H) q(x)`. Reversing the rows of `W`, after
//! cycling its last row and column to the front, gives a lower Hessenberg
//! matrix whose leading minors `Delta_k` produce the quotient coefficients
//! directly.
//!
//! Two families of `Delta_k` appear:
//!
//! - mixed: first column `a_n, a_{n-1}, ...`, the rest the Toeplitz shift of
//!   the raw divisor coefficients `g_m, g_{m-1}, ...`;
//! - pure: built only from the divisor, first column `-c_{m-1}, -c_{m-2}, ...`
//!   (negated tail), superdiagonal `b_m`. These have a closed form in the `t`
//!   sequence of [`crate::closedform`].
//!
//! Every matrix this module builds is checked against [`DetEngine::max_order`].

mod matrix;

pub use matrix::{anti_identity_sign, det_cofactor, det_oracle, hessenberg_minors, ExactMatrix};

use num_traits::{One, Zero};

use crate::closedform::t_sequence;
use crate::polycore::{lagrange_interpolate, pow_i, sign_pow, DivisorViews, Polynomial, Rational};
use crate::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 64;

/// Parameters of a mixed `Delta_k`: the dividend's top coefficients in the
/// first column, raw divisor coefficients elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMixedSpec {
    f: Polynomial,
    g: Polynomial,
    k: usize,
}

impl DeltaMixedSpec {
    /// Requires `deg f >= deg g` and `1 <= k <= deg f - deg g + 1`.
    pub fn new(f: Polynomial, g: Polynomial, k: usize) -> Result<Self> {
        let (n, m) = degrees(&f, &g)?;
        let max = n - m + 1;
        if k == 0 || k > max {
            return Err(Error::IndexOutOfRange { index: k, max });
        }
        Ok(DeltaMixedSpec { f, g, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Parameters of a pure `Delta_k`, built from the divisor alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPureSpec {
    views: DivisorViews,
    k: usize,
}

impl DeltaPureSpec {
    pub fn new(views: DivisorViews, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidOrder);
        }
        Ok(DeltaPureSpec { views, k })
    }

    pub fn views(&self) -> &DivisorViews {
        &self.views
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Sign convention of the pure `Delta_k` matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeltaVariant {
    /// Lower triangle `-c_{m-1-i+j}`, superdiagonal `b_m`.
    /// `Delta_k = (-1)^k b_m^k sum_{i=1}^k t_i c_{m-k-1+i}`.
    Standard,
    /// Every entry negated: lower triangle `c_{m-1-i+j}`, superdiagonal `-b_m`.
    /// `Delta_k = b_m^k sum_{i=1}^k t_i c_{m-k-1+i}`.
    Flipped,
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

/// Fixed interpolation nodes `0, 1, -1, 2, -2, ...`.
pub fn interpolation_nodes(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|i| {
            let mag = i.div_ceil(2) as i64;
            let v = if i % 2 == 1 { mag } else { -mag };
            Rational::from_integer(v.into())
        })
        .collect()
}

/// Builds and evaluates the structured matrices, refusing any matrix whose
/// order exceeds `max_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetEngine {
    max_order: usize,
}

impl Default for DetEngine {
    fn default() -> Self {
        DetEngine {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl DetEngine {
    pub fn new(max_order: usize) -> Self {
        DetEngine { max_order }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::MatrixTooLarge {
                order,
                cap: self.max_order,
            });
        }
        Ok(())
    }

    /// The order-`(n-m+1)` backward upper-triangular Hankel matrix `H` with
    /// `H[i][j] = g_{2m-n+i+j}` (0-based), out-of-range coefficients zero.
    pub fn build_hankel(&self, g: &Polynomial, n: usize) -> Result<ExactMatrix> {
        let m = g.degree().ok_or(Error::ZeroDivisor)?;
        if n < m {
            return Err(Error::DegreeTooSmall {
                dividend: Some(n),
                divisor: m,
            });
        }
        let order = n - m + 1;
        self.check(order)?;
        let base = 2 * m as i64 - n as i64;
        Ok(ExactMatrix::from_fn(order, |i, j| {
            g.coeff_signed(base + (i + j) as i64)
        }))
    }

    /// `det H = (-1)^{(t-1)(t-2)/2} b_m^{t-1}` with `t - 1 = n - m + 1`.
    pub fn hankel_det_closed(&self, g: &Polynomial, n: usize) -> Result<Rational> {
        let m = g.degree().ok_or(Error::ZeroDivisor)?;
        if n < m {
            return Err(Error::DegreeTooSmall {
                dividend: Some(n),
                divisor: m,
            });
        }
        let order = n - m + 1;
        self.check(order)?;
        let lead = &g.coeffs()[m];
        Ok(sign_pow(order * (order - 1) / 2) * pow_i(lead, order as i32))
    }

    /// The bordered matrix `W = [[H, a], [x^T, 0]]` at `x = x0`, where
    /// `a = (a_m, ..., a_n)` and `x^T = (x0^{n-m}, ..., x0, 1)`.
    pub fn build_bordered(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        x0: &Rational,
    ) -> Result<ExactMatrix> {
        let (n, m) = degrees(f, g)?;
        let k = n - m + 1;
        self.check(k + 1)?;
        let h = self.build_hankel(g, n)?;
        let powers: Vec<Rational> = (0..k).map(|j| pow_i(x0, (k - 1 - j) as i32)).collect();
        Ok(ExactMatrix::from_fn(k + 1, |i, j| match (i < k, j < k) {
            (true, true) => h.get(i, j).clone(),
            (true, false) => f.coeff(m + i),
            (false, true) => powers[j].clone(),
            (false, false) => Rational::zero(),
        }))
    }

    pub fn det_w_at(&self, f: &Polynomial, g: &Polynomial, x0: &Rational) -> Result<Rational> {
        Ok(det_oracle(&self.build_bordered(f, g, x0)?))
    }

    /// Mixed `Delta_k` matrix: `M[i][0] = a_{n-i}`, `M[i][j] = g_{m-i+j-1}`
    /// for `j >= 1` (0-based).
    pub fn build_delta_mixed(&self, spec: &DeltaMixedSpec) -> Result<ExactMatrix> {
        self.check(spec.k)?;
        Ok(mixed_matrix(&spec.f, &spec.g, spec.k))
    }

    /// Mixed `Delta_k` by the Hessenberg minor recursion.
    pub fn delta_mixed(&self, spec: &DeltaMixedSpec) -> Result<Rational> {
        let m = self.build_delta_mixed(spec)?;
        Ok(hessenberg_minors(&m).pop().expect("k >= 1"))
    }

    /// `Delta_1..=Delta_{n-m+1}` in one pass.
    pub fn mixed_deltas(&self, f: &Polynomial, g: &Polynomial) -> Result<Vec<Rational>> {
        let (n, m) = degrees(f, g)?;
        let k = n - m + 1;
        self.check(k)?;
        Ok(hessenberg_minors(&mixed_matrix(f, g, k)))
    }

    /// `d_j = (-1)^{n-m+j} b_m^{j-(n-m+1)} Delta_{n-m+1-j}`.
    pub fn quotient_from_dets(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (n, m) = degrees(f, g)?;
        let deltas = self.mixed_deltas(f, g)?;
        let lead = &g.coeffs()[m];
        let top = n - m;
        let d = (0..=top)
            .map(|j| {
                let e = j as i32 - (top as i32 + 1);
                sign_pow(top + j) * pow_i(lead, e) * &deltas[top - j]
            })
            .collect();
        Ok(Polynomial::new(d))
    }

    /// `q = -det(W) / det(H)`, with `det W` evaluated at `n - m + 1` fixed
    /// nodes and the values interpolated.
    pub fn quotient_ratio(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (n, m) = degrees(f, g)?;
        let det_h = det_oracle(&self.build_hankel(g, n)?);
        let points = interpolation_nodes(n - m + 1)
            .into_iter()
            .map(|x0| {
                let w = self.det_w_at(f, g, &x0)?;
                Ok((x0, -w / &det_h))
            })
            .collect::<Result<Vec<_>>>()?;
        lagrange_interpolate(&points)
    }

    /// Last-row expansion of the bordered Hessenberg matrix `H_t`,
    /// `t = n - m + 2`:
    /// `sum_{i=2}^{t} (-1)^{t-i} x0^{t-i} b_m^{t-i} Delta_{i-1}`.
    pub fn hessenberg_det_expansion(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        x0: &Rational,
    ) -> Result<Rational> {
        let (n, m) = degrees(f, g)?;
        let t = n - m + 2;
        self.check(t)?;
        let deltas = self.mixed_deltas(f, g)?;
        let scaled_x = x0 * &g.coeffs()[m];
        let mut sum = Rational::zero();
        for i in 2..=t {
            let e = t - i;
            sum += sign_pow(e) * pow_i(&scaled_x, e as i32) * &deltas[i - 2];
        }
        Ok(sum)
    }

    /// Pure `Delta_k` matrix in the requested sign variant.
    pub fn build_delta_pure(
        &self,
        spec: &DeltaPureSpec,
        variant: DeltaVariant,
    ) -> Result<ExactMatrix> {
        self.check(spec.k)?;
        let views = &spec.views;
        let m = views.degree() as i64;
        let flip = match variant {
            DeltaVariant::Standard => Rational::one(),
            DeltaVariant::Flipped => -Rational::one(),
        };
        Ok(ExactMatrix::from_fn(spec.k, |i, j| {
            let v = if j == i + 1 {
                views.lead().clone()
            } else if j <= i {
                -views.negated_at(m - 1 - i as i64 + j as i64)
            } else {
                Rational::zero()
            };
            v * &flip
        }))
    }

    /// Pure `Delta_k` by brute-force determinant.
    pub fn delta_pure_direct(&self, spec: &DeltaPureSpec, variant: DeltaVariant) -> Result<Rational> {
        Ok(det_oracle(&self.build_delta_pure(spec, variant)?))
    }
}

fn mixed_matrix(f: &Polynomial, g: &Polynomial, k: usize) -> ExactMatrix {
    let n = f.degree().expect("validated") as i64;
    let m = g.degree().expect("validated") as i64;
    ExactMatrix::from_fn(k, |i, j| {
        if j == 0 {
            f.coeff_signed(n - i as i64)
        } else {
            g.coeff_signed(m - i as i64 + j as i64 - 1)
        }
    })
}

/// Pure `Delta_k` from the `t` sequence, without building a matrix.
pub fn delta_pure_closed(spec: &DeltaPureSpec, variant: DeltaVariant) -> Rational {
    let views = &spec.views;
    let k = spec.k;
    let m = views.degree() as i64;
    let t = t_sequence(views, k).expect("k >= 1");
    let mut sum = Rational::zero();
    for i in 1..=k {
        let c = views.negated_at(m - (k as i64 + 1) + i as i64);
        if !c.is_zero() {
            sum += t.term(i) * c;
        }
    }
    let scale = pow_i(views.lead(), k as i32);
    match variant {
        DeltaVariant::Standard => sign_pow(k) * scale * sum,
        DeltaVariant::Flipped => scale * sum,
    }
}
