use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntegerPolynomial;

/// Integral domain with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, where the caller guarantees divisibility.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(Zero::is_zero(&r), "inexact division in Bareiss elimination");
        q
    }
}

impl ExactRing for IntegerPolynomial {
    fn zero() -> Self {
        IntegerPolynomial::zero()
    }
    fn one() -> Self {
        IntegerPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        IntegerPolynomial::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        IntegerPolynomial::div_exact(self, rhs).expect("inexact division in Bareiss elimination")
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact. The empty matrix has determinant one.
pub fn determinant<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    let mut m: Vec<Vec<R>> = matrix.to_vec();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return R::zero();
        };
        if pivot_row != k {
            m.swap(pivot_row, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { R::one() } else { m[n - 1][n - 1].clone() };
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Resultant of two integer polynomials, as the determinant of their
/// Sylvester matrix.
pub fn resultant(f: &IntegerPolynomial, g: &IntegerPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return <BigInt as Zero>::zero();
    };
    if m == 0 {
        return num_traits::pow(f.coeff(0), n);
    }
    if n == 0 {
        return num_traits::pow(g.coeff(0), m);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![<BigInt as Zero>::zero(); size];
        for (i, c) in f.coefficients().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![<BigInt as Zero>::zero(); size];
        for (i, c) in g.coefficients().iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    determinant(&rows)
}
