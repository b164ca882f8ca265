use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{cos_2pi_enclosure, FixedInterval};
use super::poly::{totient, IntegerPolynomial};
use super::rotation::RotationNumber;
use super::sign::Sign;
use crate::error::{Error, Result};

/// Default starting precision for certified sign evaluation.
pub const DEFAULT_START_BITS: u32 = 64;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial.
///
/// Built bottom-up over the divisors of `n`: each `Phi_d` is `t^d - 1`
/// divided exactly by the `Phi_e` of the proper divisors `e | d`.
pub fn cyclotomic_polynomial(n: u64) -> IntegerPolynomial {
    assert!(n >= 1, "cyclotomic_polynomial needs n >= 1");
    let divs = divisors(n);
    let mut known: BTreeMap<u64, IntegerPolynomial> = BTreeMap::new();
    for &d in &divs {
        let mut p = IntegerPolynomial::t_pow_minus_one(d as usize);
        for (&e, phi) in &known {
            if d % e == 0 {
                p = p.div_exact(phi).expect("Phi_e divides t^d - 1 for e | d");
            }
        }
        known.insert(d, p);
    }
    known.remove(&n).expect("n is its own divisor")
}

/// The cyclotomic field `Q(zeta_n) = Q[t] / Phi_n(t)`.
///
/// The field is abstract: which primitive `n`-th root `t` stands for is
/// chosen only when a sign is certified (see [`certified_sign`]).
#[derive(Debug)]
pub struct CyclotomicField {
    level: u64,
    modulus: IntegerPolynomial,
    degree: usize,
    /// Coefficients of `t^k mod Phi_n` for `k < powers.len()`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(level: u64) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(level);
        let degree = modulus.degree().expect("cyclotomic polynomials are nonzero");
        debug_assert_eq!(degree as u64, totient(level));
        let count = (level as usize + 1).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut current = vec![BigInt::zero(); degree];
        current[0] = BigInt::one();
        if degree == 1 {
            // t = -Phi_n(0) modulo a linear modulus.
            let root = -modulus.coeff(0);
            let mut value = BigInt::one();
            for _ in 0..count {
                powers.push(vec![value.clone()]);
                value *= &root;
            }
        } else {
            for _ in 0..count {
                powers.push(current.clone());
                // multiply by t and reduce the overflow coefficient
                let top = current.pop().expect("degree >= 2");
                current.insert(0, BigInt::zero());
                if !top.is_zero() {
                    for (j, c) in modulus.coefficients()[..degree].iter().enumerate() {
                        current[j] -= &top * c;
                    }
                }
            }
        }
        Arc::new(CyclotomicField {
            level,
            modulus,
            degree,
            powers,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &IntegerPolynomial {
        &self.modulus
    }

    fn power(&self, k: usize) -> &[BigInt] {
        &self.powers[k]
    }
}

/// An element of `Q(zeta_n)`, stored as an integer coefficient vector of
/// length `deg Phi_n` over a positive common denominator, in lowest terms.
#[derive(Clone)]
pub struct CyclotomicElement {
    field: Arc<CyclotomicField>,
    numer: Vec<BigInt>,
    denom: BigInt,
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.level == other.field.level
            && self.denom == other.denom
            && self.numer == other.numer
    }
}

impl Eq for CyclotomicElement {}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = IntegerPolynomial::new(self.numer.clone());
        if self.denom.is_one() {
            write!(f, "[{poly}]_{}", self.field.level)
        } else {
            write!(f, "[({poly})/{}]_{}", self.denom, self.field.level)
        }
    }
}

impl CyclotomicElement {
    fn from_parts(field: &Arc<CyclotomicField>, numer: Vec<BigInt>, denom: BigInt) -> Self {
        let mut e = CyclotomicElement {
            field: Arc::clone(field),
            numer,
            denom,
        };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            for c in &mut self.numer {
                *c = -&*c;
            }
        }
        if self.numer.iter().all(Zero::is_zero) {
            self.denom = BigInt::one();
            return;
        }
        let g = self
            .numer
            .iter()
            .fold(self.denom.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            for c in &mut self.numer {
                *c = &*c / &g;
            }
            self.denom = &self.denom / &g;
        }
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, &BigInt::zero())
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, k: &BigInt) -> Self {
        let mut numer = vec![BigInt::zero(); field.degree];
        numer[0] = k.clone();
        Self::from_parts(field, numer, BigInt::one())
    }

    pub fn from_i64(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self::from_integer(field, &BigInt::from(k))
    }

    /// `t^k` for any integer `k`, using `t^n = 1`.
    pub fn t_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.level as i64;
        let idx = k.rem_euclid(n) as usize;
        Self::from_parts(field, field.power(idx).to_vec(), BigInt::one())
    }

    /// Reduces an integer polynomial in `t` into the field.
    pub fn from_polynomial(field: &Arc<CyclotomicField>, p: &IntegerPolynomial) -> Self {
        let mut numer = vec![BigInt::zero(); field.degree];
        let n = field.level as usize;
        for (i, c) in p.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, b) in numer.iter_mut().zip(field.power(i % n)) {
                *slot += c * b;
            }
        }
        Self::from_parts(field, numer, BigInt::one())
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn level(&self) -> u64 {
        self.field.level
    }

    /// Numerator coefficients, lowest degree first, length `deg Phi_n`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.numer
    }

    /// Positive common denominator (one for elements of `Z[zeta_n]`).
    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.iter().all(Zero::is_zero)
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.level, other.field.level,
            "cyclotomic elements from different fields"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        let numer = self
            .numer
            .iter()
            .zip(&rhs.numer)
            .map(|(a, b)| a * &rhs.denom + b * &self.denom)
            .collect();
        Self::from_parts(&self.field, numer, &self.denom * &rhs.denom)
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            field: Arc::clone(&self.field),
            numer: self.numer.iter().map(|c| -c).collect(),
            denom: self.denom.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        let d = self.field.degree;
        let mut wide = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.numer.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.numer.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut numer: Vec<BigInt> = wide.drain(..d).collect();
        for (k, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, b) in numer.iter_mut().zip(self.field.power(d + k)) {
                *slot += &c * b;
            }
        }
        Self::from_parts(&self.field, numer, &self.denom * &rhs.denom)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_parts(
            &self.field,
            self.numer.iter().map(|c| c * k).collect(),
            self.denom.clone(),
        )
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus = self.field.modulus.to_rational();
        let poly = IntegerPolynomial::new(self.numer.clone()).to_rational();
        let inv = poly.inverse_mod(&modulus)?;
        // inv has rational coefficients; clear denominators, then fold in ours.
        let common = inv
            .coefficients()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut numer = vec![BigInt::zero(); self.field.degree];
        for (slot, c) in numer.iter_mut().zip(inv.coefficients()) {
            *slot = c.numer() * (&common / c.denom()) * &self.denom;
        }
        Some(Self::from_parts(&self.field, numer, common))
    }

    /// Complex conjugate, the automorphism `t -> t^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.field.level as usize;
        let mut numer = vec![BigInt::zero(); self.field.degree];
        for (j, c) in self.numer.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, b) in numer.iter_mut().zip(self.field.power((n - j % n) % n)) {
                *slot += c * b;
            }
        }
        Self::from_parts(&self.field, numer, self.denom.clone())
    }

    /// Whether the element is fixed by complex conjugation, i.e. real under
    /// every complex embedding.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Floating-point value at `t = exp(2 pi i q/n)` as `(re, im)`.
    pub fn eval_f64(&self, at: &RotationNumber) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.field.level as f64;
        let q = at.numerator() as f64;
        let denom = self.denom.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.numer.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * q * j as f64 / n;
            let c = c.to_f64().unwrap_or(f64::NAN);
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re / denom, im / denom)
    }
}

/// Evaluates real cyclotomic elements at a fixed primitive root of unity,
/// caching the cosine enclosures per precision.
pub(crate) struct CircleEvaluator {
    at: RotationNumber,
    start_bits: u32,
    cosines: BTreeMap<u32, Vec<FixedInterval>>,
}

impl CircleEvaluator {
    pub(crate) fn new(at: RotationNumber, start_bits: u32) -> Self {
        CircleEvaluator {
            at,
            start_bits: start_bits.max(53),
            cosines: BTreeMap::new(),
        }
    }

    fn cosines(&mut self, bits: u32, degree: usize) -> &[FixedInterval] {
        let at = self.at;
        let table = self.cosines.entry(bits).or_default();
        while table.len() < degree {
            let j = table.len() as u64;
            let n = at.denominator();
            let r = BigRational::new(
                BigInt::from((j * at.numerator()) % n),
                BigInt::from(n),
            );
            table.push(cos_2pi_enclosure(&r, bits));
        }
        &table[..degree]
    }

    /// Sign of a nonzero real element. Precision doubles until the enclosure
    /// excludes zero, which must eventually happen because the value is
    /// nonzero.
    pub(crate) fn sign_of_nonzero(&mut self, x: &CyclotomicElement) -> Sign {
        debug_assert!(!x.is_zero());
        let mut bits = self.start_bits;
        loop {
            let cos = self.cosines(bits, x.numer.len());
            let mut acc = FixedInterval::exact_int(&BigInt::zero(), cos[0].bits());
            for (c, iv) in x.numer.iter().zip(cos) {
                if !c.is_zero() {
                    acc = acc.add(&iv.mul_int(c));
                }
            }
            match acc.sign() {
                Some(Sign::Zero) | None => bits *= 2,
                Some(s) => return s,
            }
        }
    }

    pub(crate) fn sign(&mut self, x: &CyclotomicElement) -> Result<Sign> {
        if x.level() != self.at.denominator() {
            return Err(Error::LevelMismatch {
                level: x.level(),
                denominator: self.at.denominator(),
            });
        }
        if !x.is_real() {
            return Err(Error::NotReal);
        }
        if x.is_zero() {
            return Ok(Sign::Zero);
        }
        Ok(self.sign_of_nonzero(x))
    }
}

/// Certified sign of a real cyclotomic element evaluated at
/// `t = exp(2 pi i q/n)`, where `at = q/n` and `n` is the element's level.
///
/// Zero is decided exactly on the coefficients. Otherwise the value is
/// enclosed by interval evaluation starting at 64 bits, doubling the
/// precision until the enclosure excludes zero.
pub fn certified_sign(x: &CyclotomicElement, at: &RotationNumber) -> Result<Sign> {
    CircleEvaluator::new(*at, DEFAULT_START_BITS).sign(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), p(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(15), p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).coefficients().contains(&BigInt::from(-2)));
    }

    #[test]
    fn field_arithmetic_at_level_five() {
        let f = CyclotomicField::new(5);
        let t = CyclotomicElement::t_pow(&f, 1);
        let t5 = (0..5).fold(CyclotomicElement::from_i64(&f, 1), |acc, _| acc.mul(&t));
        assert_eq!(t5, CyclotomicElement::from_i64(&f, 1));
        // 1 + t + t^2 + t^3 + t^4 = 0
        let sum = (0..5).fold(CyclotomicElement::zero(&f), |acc, k| {
            acc.add(&CyclotomicElement::t_pow(&f, k))
        });
        assert!(sum.is_zero());
        let x = t.add(&CyclotomicElement::from_i64(&f, 3));
        let inv = x.inverse().unwrap();
        assert_eq!(x.mul(&inv), CyclotomicElement::from_i64(&f, 1));
    }

    #[test]
    fn conjugation_and_reality() {
        let f = CyclotomicField::new(5);
        let t = CyclotomicElement::t_pow(&f, 1);
        let tinv = CyclotomicElement::t_pow(&f, -1);
        assert_eq!(t.conj(), tinv);
        assert!(t.add(&tinv).is_real());
        assert!(!t.is_real());
    }

    #[test]
    fn linear_levels() {
        for n in [1u64, 2] {
            let f = CyclotomicField::new(n);
            let t = CyclotomicElement::t_pow(&f, 1);
            let expected = if n == 1 { 1 } else { -1 };
            assert_eq!(t, CyclotomicElement::from_i64(&f, expected));
            assert!(t.is_real());
        }
    }

    #[test]
    fn certified_signs_of_examples() {
        let f = CyclotomicField::new(5);
        let at = RotationNumber::new(1, 5).unwrap();
        assert_eq!(certified_sign(&CyclotomicElement::zero(&f), &at), Ok(Sign::Zero));
        assert_eq!(
            certified_sign(&CyclotomicElement::from_i64(&f, -3), &at),
            Ok(Sign::Negative)
        );
        let trace = CyclotomicElement::t_pow(&f, 1).add(&CyclotomicElement::t_pow(&f, -1));
        assert_eq!(certified_sign(&trace, &at), Ok(Sign::Positive));
        // the same element at the other embedding, 2cos(144 deg) < 0
        let at2 = RotationNumber::new(2, 5).unwrap();
        assert_eq!(certified_sign(&trace, &at2), Ok(Sign::Negative));
        assert_eq!(
            certified_sign(&CyclotomicElement::t_pow(&f, 1), &at),
            Err(Error::NotReal)
        );
        let wrong = RotationNumber::new(1, 7).unwrap();
        assert!(matches!(
            certified_sign(&trace, &wrong),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn tiny_nonzero_values_are_resolved() {
        // 2cos(2pi/12) = sqrt(3); 97 - 56 sqrt(3) ~ 0.0089 and its powers
        // shrink fast, so the sign needs more than one precision step.
        let f = CyclotomicField::new(12);
        let at = RotationNumber::new(1, 12).unwrap();
        let sqrt3 = CyclotomicElement::t_pow(&f, 1).add(&CyclotomicElement::t_pow(&f, -1));
        let base = CyclotomicElement::from_i64(&f, 97).sub(&sqrt3.scale(&BigInt::from(56)));
        let tiny = (0..12).fold(CyclotomicElement::from_i64(&f, 1), |acc, _| acc.mul(&base));
        assert_eq!(certified_sign(&tiny, &at), Ok(Sign::Positive));
        assert_eq!(certified_sign(&tiny.neg(), &at), Ok(Sign::Negative));
    }
}
