use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// The point `exp(2 pi i q/n)` of the unit circle, stored as the reduced
/// fraction `q/n` with `0 <= q < n`. The point `1` is `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationNumber {
    numerator: u64,
    denominator: u64,
}

impl RotationNumber {
    /// Builds `numerator/denominator` reduced modulo 1 and to lowest terms.
    pub fn new(numerator: i64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidRotation("denominator must be positive".into()));
        }
        let n = denominator as i128;
        let q = (numerator as i128).rem_euclid(n) as u64;
        let g = q.gcd(&denominator);
        Ok(RotationNumber {
            numerator: q / g,
            denominator: denominator / g,
        })
    }

    /// The point `1 = exp(0)`.
    pub fn identity() -> Self {
        RotationNumber {
            numerator: 0,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_identity(&self) -> bool {
        self.numerator == 0
    }

    /// Complex conjugate point, `(n - q)/n`.
    pub fn conjugate(&self) -> Self {
        Self::new(-(self.numerator as i64), self.denominator).expect("denominator is positive")
    }

    /// The point raised to the `k`-th power.
    pub fn pow(&self, k: i64) -> Self {
        let n = self.denominator as i128;
        let q = (self.numerator as i128 * k as i128).rem_euclid(n) as i64;
        Self::new(q, self.denominator).expect("denominator is positive")
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.numerator), BigInt::from(self.denominator))
    }

    /// Converts a rational in `[0, 1)` back to a rotation number.
    pub fn from_rational(r: &BigRational) -> Result<Self> {
        let num = i64::try_from(r.numer())
            .map_err(|_| Error::InvalidRotation(format!("{r} is too large")))?;
        let den = u64::try_from(r.denom())
            .map_err(|_| Error::InvalidRotation(format!("{r} is too large")))?;
        Self::new(num, den)
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl Ord for RotationNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for RotationNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for RotationNumber {
    type Err = Error;

    /// Parses `"q/n"`; `q` may be negative or exceed `n` and is reduced mod 1.
    fn from_str(s: &str) -> Result<Self> {
        let (q, n) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::InvalidRotation(format!("expected q/n, got {s:?}")))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| Error::InvalidRotation(format!("bad numerator in {s:?}")))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidRotation(format!("bad denominator in {s:?}")))?;
        Self::new(q, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms_mod_one() {
        let r = RotationNumber::new(-3, 15).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (4, 5));
        assert_eq!(RotationNumber::new(7, 7).unwrap(), RotationNumber::identity());
        assert!(RotationNumber::new(1, 0).is_err());
    }

    #[test]
    fn parse_and_display() {
        let r: RotationNumber = "12/15".parse().unwrap();
        assert_eq!(r.to_string(), "4/5");
        assert!("1.5".parse::<RotationNumber>().is_err());
        assert_eq!(RotationNumber::identity().to_string(), "0/1");
    }

    #[test]
    fn ordering_and_conjugation() {
        let a = RotationNumber::new(1, 6).unwrap();
        let b = RotationNumber::new(1, 5).unwrap();
        assert!(a < b);
        assert_eq!(a.conjugate(), RotationNumber::new(5, 6).unwrap());
        assert_eq!(RotationNumber::new(2, 5).unwrap().pow(3), RotationNumber::new(1, 5).unwrap());
    }
}
