use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polycore::Rational;

/// Dense square matrix of exact rationals, row-major, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    /// Panics unless `entries.len() == order * order`.
    pub fn new(order: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), order * order, "matrix must be square");
        ExactMatrix { order, entries }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let order = rows.len();
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        Self::new(order, entries)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Ones on the anti-diagonal.
    pub fn anti_identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i + j + 1 == order {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> ExactMatrix {
        assert!(k <= self.order);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.order, rhs.order);
        Self::from_fn(self.order, |i, j| {
            (0..self.order).fold(Rational::zero(), |acc, l| acc + self.get(i, l) * rhs.get(l, j))
        })
    }

    pub fn scale(&self, c: &Rational) -> ExactMatrix {
        ExactMatrix {
            order: self.order,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Zero above the superdiagonal.
    pub fn is_lower_hessenberg(&self) -> bool {
        (0..self.order).all(|i| (i + 2..self.order).all(|j| self.get(i, j).is_zero()))
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first cleared of denominators, so elimination runs over
/// integers and every intermediate division is exact.
pub fn det_oracle(m: &ExactMatrix) -> Rational {
    let n = m.order();
    if n == 0 {
        return Rational::one();
    }
    let mut denom = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        denom *= l;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Rational::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, denom)
}

/// Laplace expansion along the first row. Exponential cost; meant for
/// small cross-checks.
pub fn det_cofactor(m: &ExactMatrix) -> Rational {
    fn minor(m: &ExactMatrix, col: usize) -> ExactMatrix {
        let n = m.order();
        ExactMatrix::from_fn(n - 1, |i, j| {
            let jj = if j < col { j } else { j + 1 };
            m.get(i + 1, jj).clone()
        })
    }
    match m.order() {
        0 => Rational::one(),
        1 => m.get(0, 0).clone(),
        n => (0..n).fold(Rational::zero(), |acc, j| {
            let e = m.get(0, j);
            if e.is_zero() {
                return acc;
            }
            let term = e * det_cofactor(&minor(m, j));
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

/// Determinant of the order-`t` anti-identity, `(-1)^{t(t-1)/2}`.
pub fn anti_identity_sign(t: usize) -> Rational {
    crate::polycore::sign_pow(t * t.saturating_sub(1) / 2)
}

/// All leading principal minors `D_1..D_n` of a lower Hessenberg matrix,
/// by expanding each `D_i` along its last row:
///
/// ```text
/// D_i = sum_{j=1}^{i} (-1)^{i-j} h_{i,j} (prod_{l=j}^{i-1} h_{l,l+1}) D_{j-1},  D_0 = 1
/// ```
///
/// The caller guarantees the Hessenberg shape.
pub fn hessenberg_minors(m: &ExactMatrix) -> Vec<Rational> {
    debug_assert!(m.is_lower_hessenberg());
    let n = m.order();
    let mut d = Vec::with_capacity(n + 1);
    d.push(Rational::one());
    for i in 1..=n {
        let mut acc = Rational::zero();
        // product of superdiagonal entries h_{j,j+1}..h_{i-1,i}, built from j = i down
        let mut chain = Rational::one();
        for j in (1..=i).rev() {
            if j < i {
                chain *= m.get(j - 1, j);
                if chain.is_zero() {
                    break;
                }
            }
            let h = m.get(i - 1, j - 1);
            if h.is_zero() {
                continue;
            }
            let term = h * &chain * &d[j - 1];
            if (i - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        d.push(acc);
    }
    d.remove(0);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, ratio};

    #[test]
    fn identity_has_unit_determinant() {
        assert_eq!(det_oracle(&ExactMatrix::identity(5)), rat(1));
        assert_eq!(det_cofactor(&ExactMatrix::identity(4)), rat(1));
    }

    #[test]
    fn two_by_two() {
        let m = ExactMatrix::from_int_rows(&[&[-1, 1], &[-1, -1]]);
        assert_eq!(det_oracle(&m), rat(2));
        assert_eq!(det_cofactor(&m), rat(2));
    }

    #[test]
    fn zero_row_gives_zero() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3], &[0, 0, 0], &[4, 5, 6]]);
        assert_eq!(det_oracle(&m), rat(0));
        assert_eq!(det_cofactor(&m), rat(0));
    }

    #[test]
    fn pivoting_and_fractions() {
        // needs a row swap at the first step
        let m = ExactMatrix::from_rows(vec![
            vec![rat(0), ratio(1, 2), rat(3)],
            vec![ratio(2, 3), rat(1), rat(0)],
            vec![rat(1), rat(-1), ratio(5, 7)],
        ]);
        // hand cofactor expansion along the first row:
        // -1/2*(2/3*5/7 - 0) + 3*(2/3*(-1) - 1) = -5/21 - 5 = -110/21
        assert_eq!(det_cofactor(&m), ratio(-110, 21));
        assert_eq!(det_oracle(&m), ratio(-110, 21));
    }

    #[test]
    fn anti_identity_signs() {
        let expected = [1, -1, -1, 1, 1, -1, -1, 1, 1, -1];
        for (t, &e) in (1..=10).zip(expected.iter()) {
            assert_eq!(anti_identity_sign(t), rat(e), "t = {t}");
            assert_eq!(det_oracle(&ExactMatrix::anti_identity(t)), rat(e), "t = {t}");
        }
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(det_oracle(&ExactMatrix::new(0, vec![])), rat(1));
    }

    #[test]
    fn hessenberg_minors_match_oracle() {
        let m = ExactMatrix::from_int_rows(&[
            &[2, 3, 0, 0],
            &[-1, 4, 5, 0],
            &[7, 0, -2, 1],
            &[3, 1, 6, -4],
        ]);
        let minors = hessenberg_minors(&m);
        for k in 1..=4 {
            assert_eq!(minors[k - 1], det_oracle(&m.leading(k)), "k = {k}");
        }
    }

    #[test]
    fn hessenberg_minors_with_zero_superdiagonal() {
        let m = ExactMatrix::from_int_rows(&[&[2, 0, 0], &[-1, 4, 5], &[7, 3, -2]]);
        let minors = hessenberg_minors(&m);
        assert_eq!(minors[2], det_oracle(&m));
    }
}
