//! The signature function as a step function on the circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_scalars::{simplest_rational_between, RootArc, RotationNumber};
use crate::seifert::KnotSpec;

use super::{jump_candidates, signature_at, AlphaPoint, GENERIC_ZERO_THRESHOLD};

/// One row of a profile listing, in increasing order of rotation number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProfileSegment {
    /// An open arc `(start, end)` of rotation numbers on which `sigma` is
    /// constant. The endpoints are certified bounds for the neighbouring
    /// jumps, or `0` and `1`.
    Arc {
        start: BigRational,
        end: BigRational,
        value: i64,
    },
    /// A jump location and, when it is an exact root of unity, the value of
    /// `sigma` there.
    Jump { location: RootArc, value: Option<i64> },
}

/// `sigma` on all of `S^1 \ {1}`.
///
/// With jumps `j_0 < ... < j_{m-1}`, `arc_values[i]` for `i >= 1` is the
/// value on `(j_{i-1}, j_i)` and `arc_values[0]` is the value on the arc
/// through `1`, that is `(j_{m-1}, 1) u (0, j_0)`. With no jumps there is a
/// single arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    jumps: Vec<RootArc>,
    arc_values: Vec<i64>,
    arc_samples: Vec<RotationNumber>,
    jump_values: Vec<Option<i64>>,
}

fn sample_points(jumps: &[RootArc]) -> Vec<BigRational> {
    let zero = BigRational::zero();
    if jumps.is_empty() {
        return vec![BigRational::new(1.into(), 2.into())];
    }
    let mut out = vec![simplest_rational_between(&zero, &jumps[0].lower_bound())];
    for pair in jumps.windows(2) {
        out.push(simplest_rational_between(
            &pair[0].upper_bound(),
            &pair[1].lower_bound(),
        ));
    }
    out
}

/// Computes the full profile. Arc values are certified signatures at one
/// root of unity inside each arc.
pub fn profile(knot: &KnotSpec) -> SignatureProfile {
    let jumps = jump_candidates(knot);
    let arc_samples: Vec<RotationNumber> = sample_points(&jumps)
        .iter()
        .map(|r| RotationNumber::from_rational(r).expect("sample lies in (0, 1)"))
        .collect();
    let arc_values: Vec<i64> = arc_samples
        .par_iter()
        .map(|r| signature_at(knot, &AlphaPoint::Exact(*r)).signature)
        .collect();
    let jump_values: Vec<Option<i64>> = jumps
        .par_iter()
        .map(|j| {
            j.exact()
                .map(|r| signature_at(knot, &AlphaPoint::Exact(r)).signature)
        })
        .collect();
    SignatureProfile {
        jumps,
        arc_values,
        arc_samples,
        jump_values,
    }
}

impl SignatureProfile {
    pub fn jumps(&self) -> &[RootArc] {
        &self.jumps
    }

    pub fn arc_values(&self) -> &[i64] {
        &self.arc_values
    }

    /// The root of unity at which each arc value was computed.
    pub fn arc_samples(&self) -> &[RotationNumber] {
        &self.arc_samples
    }

    pub fn jump_values(&self) -> &[Option<i64>] {
        &self.jump_values
    }

    /// Signed size of the jump at `jumps[i]`, from the arc on its left to the
    /// arc on its right.
    pub fn jump_size(&self, i: usize) -> i64 {
        let right = self.arc_values[(i + 1) % self.arc_values.len()];
        right - self.arc_values[i]
    }

    /// Rows in increasing order, starting at `0` and ending at `1`. The arc
    /// through `1` is listed as its two halves.
    pub fn segments(&self) -> Vec<ProfileSegment> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        if self.jumps.is_empty() {
            return vec![ProfileSegment::Arc {
                start: zero,
                end: one,
                value: self.arc_values[0],
            }];
        }
        let mut out = Vec::with_capacity(2 * self.jumps.len() + 1);
        let mut start = zero;
        for (i, jump) in self.jumps.iter().enumerate() {
            out.push(ProfileSegment::Arc {
                start,
                end: jump.lower_bound(),
                value: self.arc_values[i],
            });
            out.push(ProfileSegment::Jump {
                location: jump.clone(),
                value: self.jump_values[i],
            });
            start = jump.upper_bound();
        }
        out.push(ProfileSegment::Arc {
            start,
            end: one,
            value: self.arc_values[0],
        });
        out
    }

    /// Half the sum of the arc values on either side of `jumps[i]`.
    pub fn averaged_at_jump(&self, i: usize) -> Result<BigRational> {
        let left = self.arc_values[i];
        let right = self.arc_values[(i + 1) % self.arc_values.len()];
        let sum = left + right;
        let value = BigRational::new(BigInt::from(sum), BigInt::from(2));
        if sum % 2 != 0 {
            return Err(Error::ParityViolation {
                at: self.jumps[i].to_string(),
                value,
            });
        }
        Ok(value)
    }

    /// Index of the arc containing a rotation number known not to be a jump.
    fn arc_index(&self, x: f64) -> usize {
        self.jumps
            .iter()
            .position(|j| x < j.lower_bound().to_f64().unwrap_or(f64::NAN))
            .unwrap_or(0)
    }

    /// Averaged signature from the profile alone.
    ///
    /// An exact `alpha` that is neither a listed exact jump nor certifiably
    /// outside every isolating interval is rejected with `NearJump`; use
    /// [`super::averaged_sigma`] in that case.
    pub fn averaged(&self, alpha: &AlphaPoint) -> Result<BigRational> {
        match alpha {
            AlphaPoint::Exact(r) => {
                if r.is_identity() {
                    return Ok(BigRational::zero());
                }
                if let Some(i) = self.jumps.iter().position(|j| j.exact() == Some(*r)) {
                    return self.averaged_at_jump(i);
                }
                let x = r.to_rational();
                if self
                    .jumps
                    .iter()
                    .any(|j| j.lower_bound() <= x && x <= j.upper_bound())
                {
                    return Err(Error::NearJump { angle: r.as_f64() });
                }
                let idx = self
                    .jumps
                    .iter()
                    .position(|j| x < j.lower_bound())
                    .unwrap_or(0);
                Ok(BigRational::from(BigInt::from(self.arc_values[idx])))
            }
            AlphaPoint::Generic(x) => {
                if *x == 0.0 {
                    return Ok(BigRational::zero());
                }
                let near = self.jumps.iter().any(|j| {
                    let lo = j.lower_bound().to_f64().unwrap_or(f64::NAN);
                    let hi = j.upper_bound().to_f64().unwrap_or(f64::NAN);
                    *x >= lo - GENERIC_ZERO_THRESHOLD && *x <= hi + GENERIC_ZERO_THRESHOLD
                });
                if near {
                    return Err(Error::NearJump { angle: *x });
                }
                Ok(BigRational::from(BigInt::from(self.arc_values[self.arc_index(*x)])))
            }
        }
    }
}
