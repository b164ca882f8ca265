//! Fixed-point interval arithmetic with outward rounding.
//!
//! An interval at precision `bits` is a pair of integers `[lo, hi]` denoting
//! the real interval `[lo / 2^bits, hi / 2^bits]`. Every operation rounds the
//! lower endpoint down and the upper endpoint up, so the true value is always
//! enclosed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::sign::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FixedInterval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl FixedInterval {
    pub(crate) fn exact_int(k: &BigInt, bits: u32) -> Self {
        let v = k << bits;
        FixedInterval {
            lo: v.clone(),
            hi: v,
            bits,
        }
    }

    /// Enclosure of `num / den` with `den > 0`.
    pub(crate) fn ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        debug_assert!(den.is_positive());
        let scaled = num << bits;
        FixedInterval {
            lo: floor_div(&scaled, den),
            hi: ceil_div(&scaled, den),
            bits,
        }
    }

    /// Symmetric interval `[-mag, mag]` in raw units.
    fn symmetric(mag: BigInt, bits: u32) -> Self {
        FixedInterval {
            lo: -mag.clone(),
            hi: mag,
            bits,
        }
    }

    pub(crate) fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        FixedInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
            bits: self.bits,
        }
    }

    pub(crate) fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub(crate) fn neg(&self) -> Self {
        FixedInterval {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub(crate) fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        let unit = BigInt::one() << self.bits;
        FixedInterval {
            lo: floor_div(min, &unit),
            hi: ceil_div(max, &unit),
            bits: self.bits,
        }
    }

    pub(crate) fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            FixedInterval {
                lo: b,
                hi: a,
                bits: self.bits,
            }
        } else {
            FixedInterval {
                lo: a,
                hi: b,
                bits: self.bits,
            }
        }
    }

    /// Division by a positive integer.
    pub(crate) fn div_int(&self, k: &BigInt) -> Self {
        debug_assert!(k.is_positive());
        FixedInterval {
            lo: floor_div(&self.lo, k),
            hi: ceil_div(&self.hi, k),
            bits: self.bits,
        }
    }

    /// Largest absolute value in the interval, in raw units.
    pub(crate) fn magnitude(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value in the interval, in raw units.
    pub(crate) fn mignitude(&self) -> BigInt {
        if self.lo.is_positive() {
            self.lo.clone()
        } else if self.hi.is_negative() {
            -&self.hi
        } else {
            BigInt::zero()
        }
    }

    /// Enclosure of `x^2`, which unlike `mul` stays non-negative.
    pub(crate) fn square(&self) -> Self {
        let unit = BigInt::one() << self.bits;
        let lo = self.mignitude();
        let hi = self.magnitude();
        FixedInterval {
            lo: floor_div(&(&lo * &lo), &unit),
            hi: ceil_div(&(&hi * &hi), &unit),
            bits: self.bits,
        }
    }

    /// Enclosure of `1/x`, or `None` if the interval contains zero.
    pub(crate) fn recip(&self) -> Option<Self> {
        if self.hi.is_negative() {
            return self.neg().recip().map(|r| r.neg());
        }
        if !self.lo.is_positive() {
            return None;
        }
        let scaled = BigInt::one() << (2 * self.bits);
        Some(FixedInterval {
            lo: floor_div(&scaled, &self.hi),
            hi: ceil_div(&scaled, &self.lo),
            bits: self.bits,
        })
    }

    pub(crate) fn zero(bits: u32) -> Self {
        Self::exact_int(&BigInt::zero(), bits)
    }

    pub(crate) fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub(crate) fn lower(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.bits)
    }

    pub(crate) fn upper(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.bits)
    }
}

/// Enclosure of `atan(1/m)` for an integer `m >= 2`.
fn atan_inverse(m: u64, bits: u32) -> FixedInterval {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let threshold = BigInt::one();
    let mut sum = FixedInterval::exact_int(&BigInt::zero(), bits);
    let mut power = m.clone();
    let mut k: u64 = 0;
    loop {
        let den = &power * BigInt::from(2 * k + 1);
        let term = FixedInterval::ratio(&BigInt::one(), &den, bits);
        if term.hi <= threshold {
            // Alternating series with decreasing terms: the tail is bounded
            // by the first omitted term.
            return sum.add(&FixedInterval::symmetric(term.hi, bits));
        }
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        power *= &m2;
        k += 1;
    }
}

/// Enclosure of pi by Machin's formula.
pub(crate) fn pi_enclosure(bits: u32) -> FixedInterval {
    let a = atan_inverse(5, bits).mul_int(&BigInt::from(16));
    let b = atan_inverse(239, bits).mul_int(&BigInt::from(4));
    a.sub(&b)
}

/// Taylor series for cos (`odd = false`) or sin (`odd = true`) on an interval
/// inside `[0, 1]`, where the series alternates with decreasing terms.
fn taylor(theta: &FixedInterval, odd: bool, bits: u32) -> FixedInterval {
    let theta2 = theta.mul(theta);
    let mut term = if odd {
        theta.clone()
    } else {
        FixedInterval::exact_int(&BigInt::one(), bits)
    };
    let mut sum = FixedInterval::exact_int(&BigInt::zero(), bits);
    let mut k: u64 = 0;
    let threshold = BigInt::one();
    loop {
        if term.magnitude() <= threshold {
            return sum.add(&FixedInterval::symmetric(term.magnitude() + 1u32, bits));
        }
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        let (a, b) = if odd {
            (2 * k + 2, 2 * k + 3)
        } else {
            (2 * k + 1, 2 * k + 2)
        };
        term = term.mul(&theta2).div_int(&BigInt::from(a * b));
        k += 1;
    }
}

/// Enclosure of `cos(2 pi r)` for a rational `r`, at `bits` bits of
/// precision plus internal guard bits.
pub(crate) fn cos_2pi_enclosure(r: &BigRational, bits: u32) -> FixedInterval {
    let work = bits + 32;
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let eighth = BigRational::new(1.into(), 8.into());

    let mut x = r - r.floor();
    if x > half {
        x = &one - &x;
    }
    let mut negate = false;
    if x > quarter {
        x = &half - &x;
        negate = true;
    }
    let (arg, odd) = if x > eighth {
        (&quarter - &x, true)
    } else {
        (x, false)
    };
    // theta = 2 pi arg, with arg in [0, 1/8], so theta <= pi/4 < 1.
    let pi = pi_enclosure(work);
    let theta = pi
        .mul_int(&(arg.numer() * BigInt::from(2)))
        .div_int(arg.denom());
    let value = taylor(&theta, odd, work);
    let value = if negate { value.neg() } else { value };
    value.rescale(bits)
}

/// Enclosure of `2 cos(2 pi r)`.
pub(crate) fn two_cos_enclosure(r: &BigRational, bits: u32) -> FixedInterval {
    cos_2pi_enclosure(r, bits).mul_int(&BigInt::from(2))
}

impl FixedInterval {
    /// Rounds outward to a coarser precision.
    pub(crate) fn rescale(&self, bits: u32) -> Self {
        if bits >= self.bits {
            let shift = bits - self.bits;
            return FixedInterval {
                lo: &self.lo << shift,
                hi: &self.hi << shift,
                bits,
            };
        }
        let unit = BigInt::one() << (self.bits - bits);
        FixedInterval {
            lo: floor_div(&self.lo, &unit),
            hi: ceil_div(&self.hi, &unit),
            bits,
        }
    }

    pub(crate) fn bits(&self) -> u32 {
        self.bits
    }
}
