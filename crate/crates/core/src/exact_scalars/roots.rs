use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::cyclotomic_polynomial;
use super::interval::two_cos_enclosure;
use super::poly::{totient, IntegerPolynomial, RatPoly};
use super::rotation::RotationNumber;
use crate::error::{Error, Result};

/// A root of a polynomial on the unit circle, located either exactly (a root
/// of unity) or by an open rational interval of rotation numbers containing
/// exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootArc {
    ExactRotation(RotationNumber),
    IsolatedInterval { lo: BigRational, hi: BigRational },
}

impl RootArc {
    /// Largest rational known to lie at or below the root.
    pub fn lower_bound(&self) -> BigRational {
        match self {
            RootArc::ExactRotation(r) => r.to_rational(),
            RootArc::IsolatedInterval { lo, .. } => lo.clone(),
        }
    }

    /// Smallest rational known to lie at or above the root.
    pub fn upper_bound(&self) -> BigRational {
        match self {
            RootArc::ExactRotation(r) => r.to_rational(),
            RootArc::IsolatedInterval { hi, .. } => hi.clone(),
        }
    }

    pub fn exact(&self) -> Option<RotationNumber> {
        match self {
            RootArc::ExactRotation(r) => Some(*r),
            RootArc::IsolatedInterval { .. } => None,
        }
    }

    /// Approximate rotation number (interval midpoint for isolated roots).
    pub fn approx(&self) -> f64 {
        match self {
            RootArc::ExactRotation(r) => r.as_f64(),
            RootArc::IsolatedInterval { lo, hi } => {
                ((lo + hi) / BigRational::from(BigInt::from(2)))
                    .to_f64()
                    .unwrap_or(f64::NAN)
            }
        }
    }

    pub fn conjugate(&self) -> RootArc {
        match self {
            RootArc::ExactRotation(r) => RootArc::ExactRotation(r.conjugate()),
            RootArc::IsolatedInterval { lo, hi } => RootArc::IsolatedInterval {
                lo: BigRational::one() - hi,
                hi: BigRational::one() - lo,
            },
        }
    }
}

impl fmt::Display for RootArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootArc::ExactRotation(r) => write!(f, "{r}"),
            RootArc::IsolatedInterval { lo, hi } => write!(f, "interval:{lo}..{hi}"),
        }
    }
}

/// The rational with the smallest denominator strictly between `lo` and `hi`
/// (smallest numerator among ties), found by continued-fraction descent of
/// the Stern-Brocot tree. Requires `0 <= lo < hi`.
pub fn simplest_rational_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo < hi && !lo.is_negative(), "need 0 <= lo < hi");
    simplest_in(lo, Some(hi))
}

/// Simplest rational in the open interval `(lo, hi)`, `hi = None` meaning
/// infinity. `lo >= 0`.
fn simplest_in(lo: &BigRational, hi: Option<&BigRational>) -> BigRational {
    let fl = lo.floor();
    let candidate = &fl + BigRational::one();
    if hi.map_or(true, |h| &candidate < h) {
        return candidate;
    }
    let hi = hi.expect("bounded when no integer fits");
    // Both ends lie in [fl, fl + 1]; recurse on the reciprocals of the
    // fractional parts.
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner_lo = hi_frac.recip();
    let inner = if lo_frac.is_zero() {
        simplest_in(&inner_lo, None)
    } else {
        let inner_hi = lo_frac.recip();
        simplest_in(&inner_lo, Some(&inner_hi))
    };
    fl + inner.recip()
}

/// Trace polynomial `Q` with `p(t) = t^m Q(t + 1/t)` for a palindromic `p` of
/// degree `2m`.
fn trace_polynomial(p: &IntegerPolynomial) -> IntegerPolynomial {
    let deg = p.degree().expect("nonzero");
    debug_assert!(deg % 2 == 0 && p.reciprocal() == *p);
    let m = deg / 2;
    // t^k + t^-k as a polynomial in x = t + 1/t
    let x = IntegerPolynomial::from_i64s(&[0, 1]);
    let mut prev = IntegerPolynomial::from_i64s(&[2]);
    let mut cur = x.clone();
    let mut q = IntegerPolynomial::constant(p.coeff(m));
    for k in 1..=m {
        q = &q + &cur.scale(&p.coeff(m + k));
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    q
}

fn squarefree(p: &RatPoly) -> RatPoly {
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0
}

struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    fn new(p: &RatPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }

    fn poly(&self) -> &RatPoly {
        &self.chain[0]
    }

    /// A rational strictly inside `(a, b)` that is not a root.
    fn split_point(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let width = b - a;
        for m in 2i64.. {
            for i in 1..m {
                if i.gcd(&m) != 1 {
                    continue;
                }
                let c = a + &width * BigRational::new(i.into(), m.into());
                if !self.poly().eval(&c).is_zero() {
                    return c;
                }
            }
        }
        unreachable!("a nonzero polynomial has finitely many roots")
    }

    /// Disjoint open intervals, each containing exactly one root, covering
    /// all roots in `(a, b)`. Endpoints must not be roots.
    fn isolate(&self, a: &BigRational, b: &BigRational) -> Vec<(BigRational, BigRational)> {
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone())];
        while let Some((lo, hi)) = stack.pop() {
            match self.count(&lo, &hi) {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let c = self.split_point(&lo, &hi);
                    stack.push((c.clone(), hi));
                    stack.push((lo, c));
                }
            }
        }
        out.sort();
        out
    }

    /// Shrinks an isolating interval until both endpoints have moved strictly
    /// inward and the width is at most a quarter of the original.
    fn refine_inside(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        let target = (b - a) / BigRational::from(BigInt::from(4));
        let (mut lo, mut hi) = (a.clone(), b.clone());
        while &lo == a || &hi == b || &hi - &lo > target {
            let c = self.split_point(&lo, &hi);
            if self.count(&lo, &c) == 1 {
                hi = c;
            } else {
                lo = c;
            }
        }
        (lo, hi)
    }
}

/// A rational rotation `r` in `(0, 1/2)` with `u < 2cos(2 pi r) < v`,
/// certified by interval evaluation. Requires `-2 <= u < v <= 2`.
fn rotation_with_trace_in(u: &BigRational, v: &BigRational) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    let center = (u + v) / &two;
    let width = v - u;
    // enclosure width must stay below a quarter of the target window
    let mut bits = 64u32;
    while BigRational::new(BigInt::from(16), BigInt::one() << bits) > width {
        bits += 16;
    }
    let mut lo = BigRational::zero();
    let mut hi = BigRational::new(1.into(), 2.into());
    loop {
        let m = (&lo + &hi) / &two;
        let enclosure = two_cos_enclosure(&m, bits);
        let (xl, xh) = (enclosure.lower(), enclosure.upper());
        if &xl > u && &xh < v {
            return m;
        }
        if (xl + xh) / &two > center {
            lo = m;
        } else {
            hi = m;
        }
    }
}

/// All roots of `p` on the unit circle, sorted by rotation number.
///
/// `p` must be palindromic up to sign after removing powers of `t`. Roots at
/// `t = 1` and `t = -1` are split off first. Roots of unity are found by
/// exact division by cyclotomic polynomials and reported exactly; the other
/// unit-circle roots are isolated as real roots of the trace polynomial in
/// `(-2, 2)` with Sturm sequences and reported as rational rotation
/// intervals, one for each member of a conjugate pair.
pub fn isolate_unit_circle_roots(p: &IntegerPolynomial) -> Result<Vec<RootArc>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut p, _) = p.strip_t_powers();
    let rev = p.reciprocal();
    if rev != p && rev != -&p {
        return Err(Error::NotPalindromic(p.to_string()));
    }

    let mut arcs = Vec::new();
    for (point, factor, rotation) in [
        (1i64, [-1i64, 1], RotationNumber::identity()),
        (-1, [1, 1], RotationNumber::new(1, 2).expect("valid")),
    ] {
        let point = BigInt::from(point);
        let factor = IntegerPolynomial::from_i64s(&factor);
        if p.eval(&point).is_zero() {
            arcs.push(RootArc::ExactRotation(rotation));
            while p.eval(&point).is_zero() {
                p = p.div_exact(&factor).expect("linear factor of a root");
            }
        }
    }

    let deg = p.degree().expect("nonzero");
    if deg > 0 {
        let mut rest = p.clone();
        let bound = 2 * (deg as u64) * (deg as u64) + 2;
        for n in 3..=bound {
            let rest_deg = rest.degree().expect("nonzero") as u64;
            if rest_deg == 0 {
                break;
            }
            if totient(n) > rest_deg {
                continue;
            }
            let phi = cyclotomic_polynomial(n);
            if let Some(mut q) = rest.div_exact(&phi) {
                while let Some(next) = q.div_exact(&phi) {
                    q = next;
                }
                rest = q;
                for k in 1..n {
                    if k.gcd(&n) == 1 {
                        arcs.push(RootArc::ExactRotation(
                            RotationNumber::new(k as i64, n).expect("valid"),
                        ));
                    }
                }
            }
        }
        if rest.degree().expect("nonzero") > 0 {
            arcs.extend(isolate_non_cyclotomic(&p, &rest));
        }
    }

    arcs.sort_by(|a, b| a.lower_bound().cmp(&b.lower_bound()));
    Ok(arcs)
}

/// Unit-circle roots of `rest` (palindromic, no roots of unity), isolated
/// against all roots of `full` so that no returned interval contains any
/// other root of `full`.
fn isolate_non_cyclotomic(full: &IntegerPolynomial, rest: &IntegerPolynomial) -> Vec<RootArc> {
    let full_sf = squarefree(&trace_polynomial(full).to_rational());
    let rest_sf = squarefree(&trace_polynomial(rest).to_rational());
    let sturm = SturmChain::new(&full_sf);
    let two = BigRational::from(BigInt::from(2));
    let mut arcs = Vec::new();
    for (a, b) in sturm.isolate(&-&two, &two) {
        let (fa, fb) = (rest_sf.eval(&a), rest_sf.eval(&b));
        if fa.is_positive() == fb.is_positive() {
            continue;
        }
        let (a_in, b_in) = sturm.refine_inside(&a, &b);
        // larger trace means smaller rotation on (0, 1/2)
        let r_lo = rotation_with_trace_in(&b_in, &b);
        let r_hi = rotation_with_trace_in(&a, &a_in);
        let arc = RootArc::IsolatedInterval { lo: r_lo, hi: r_hi };
        arcs.push(arc.conjugate());
        arcs.push(arc);
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn rot(q: i64, n: u64) -> RootArc {
        RootArc::ExactRotation(RotationNumber::new(q, n).unwrap())
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    /// Numeric oracle: eigenvalues of the companion matrix.
    fn numeric_unit_circle_roots(c: &[i64]) -> Vec<f64> {
        try_numeric_unit_circle_roots(c).expect("Schur iteration converges")
    }

    /// Companion-matrix eigenvalues, or `None` if the QR iteration stalls.
    fn try_numeric_unit_circle_roots(c: &[i64]) -> Option<Vec<f64>> {
        let mut c = c.to_vec();
        while c.first() == Some(&0) {
            c.remove(0);
        }
        let n = c.len() - 1;
        if n == 0 {
            return Some(vec![]);
        }
        let lead = *c.last().unwrap() as f64;
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = 1.0;
        }
        for i in 0..n {
            m[(i, n - 1)] = -(c[i] as f64) / lead;
        }
        let mut out: Vec<f64> = m
            .try_schur(1e-14, 100_000)?
            .complex_eigenvalues()
            .iter()
            .filter(|z| (z.norm() - 1.0).abs() < 1e-9)
            .map(|z| z.im.atan2(z.re).rem_euclid(2.0 * std::f64::consts::PI) / (2.0 * std::f64::consts::PI))
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Some(out)
    }

    #[test]
    fn trefoil_alexander_roots() {
        let arcs = isolate_unit_circle_roots(&p(&[1, -1, 1])).unwrap();
        assert_eq!(arcs, vec![rot(1, 6), rot(5, 6)]);
        let numeric = numeric_unit_circle_roots(&[1, -1, 1]);
        assert!((numeric[0] - 1.0 / 6.0).abs() < 1e-12);
        assert!((numeric[1] - 5.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn primitive_tenth_roots() {
        let arcs = isolate_unit_circle_roots(&p(&[1, -1, 1, -1, 1])).unwrap();
        assert_eq!(arcs, vec![rot(1, 10), rot(3, 10), rot(7, 10), rot(9, 10)]);
        let numeric = numeric_unit_circle_roots(&[1, -1, 1, -1, 1]);
        let expected = [0.1, 0.3, 0.7, 0.9];
        for (x, e) in numeric.iter().zip(expected) {
            assert!((x - e).abs() < 1e-9);
        }
    }

    #[test]
    fn constants_and_errors() {
        assert_eq!(isolate_unit_circle_roots(&p(&[1])).unwrap(), vec![]);
        assert_eq!(isolate_unit_circle_roots(&p(&[0, 0, 5])).unwrap(), vec![]);
        assert_eq!(
            isolate_unit_circle_roots(&IntegerPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert!(matches!(
            isolate_unit_circle_roots(&p(&[1, 2])),
            Err(Error::NotPalindromic(_))
        ));
    }

    #[test]
    fn roots_at_plus_and_minus_one() {
        // (t - 1)(t + 1)^2 is anti-palindromic
        let poly = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[1, 1]);
        let arcs = isolate_unit_circle_roots(&poly).unwrap();
        assert_eq!(arcs, vec![rot(0, 1), rot(1, 2)]);
    }

    #[test]
    fn non_cyclotomic_roots_are_isolated() {
        // 2t^2 - t + 2: trace x = 1/2, rotation arccos(1/4)/(2 pi)
        let arcs = isolate_unit_circle_roots(&p(&[2, -1, 2])).unwrap();
        assert_eq!(arcs.len(), 2);
        let expected = (0.25f64).acos() / (2.0 * std::f64::consts::PI);
        match &arcs[0] {
            RootArc::IsolatedInterval { lo, hi } => {
                assert!(lo.to_f64().unwrap() < expected && expected < hi.to_f64().unwrap());
            }
            other => panic!("expected an interval, got {other:?}"),
        }
        assert_eq!(arcs[1], arcs[0].conjugate());
    }

    #[test]
    fn mixed_cyclotomic_and_isolated_roots() {
        // Phi_6 * (t^4 - t^3 - t^2 - t + 1) has a Salem-type factor with two
        // unit-circle roots and two real roots off the circle.
        let salem = p(&[1, -1, -1, -1, 1]);
        let poly = &p(&[1, -1, 1]) * &salem;
        let arcs = isolate_unit_circle_roots(&poly).unwrap();
        let numeric = numeric_unit_circle_roots(&[1, -2, 1, -1, 1, -2, 1]);
        assert_eq!(arcs.len(), numeric.len());
        assert_eq!(arcs.iter().filter(|a| a.exact().is_some()).count(), 2);
        for (arc, x) in arcs.iter().zip(&numeric) {
            let lo = arc.lower_bound().to_f64().unwrap();
            let hi = arc.upper_bound().to_f64().unwrap();
            assert!(lo - 1e-12 <= *x && *x <= hi + 1e-12, "{arc} vs {x}");
        }
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational_between(&rat(0, 1), &rat(1, 1)), rat(1, 2));
        assert_eq!(simplest_rational_between(&rat(1, 6), &rat(5, 6)), rat(1, 2));
        assert_eq!(simplest_rational_between(&rat(0, 1), &rat(1, 10)), rat(1, 11));
        assert_eq!(simplest_rational_between(&rat(1, 10), &rat(3, 10)), rat(1, 4));
        assert_eq!(simplest_rational_between(&rat(3, 10), &rat(7, 10)), rat(1, 2));
        assert_eq!(simplest_rational_between(&rat(7, 10), &rat(9, 10)), rat(3, 4));
        assert_eq!(simplest_rational_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
    }

    /// Brute force over denominators.
    fn simplest_brute(lo: &BigRational, hi: &BigRational) -> BigRational {
        for q in 1i64.. {
            for pnum in 0..=q {
                let r = rat(pnum, q);
                if &r > lo && &r < hi {
                    return r;
                }
            }
        }
        unreachable!()
    }

    proptest! {
        #[test]
        fn simplest_matches_brute_force(a in 0i64..80, b in 0i64..80, d in 1i64..80, e in 1i64..80) {
            prop_assume!(a <= d && b <= e);
            let (x, y) = (rat(a, d), rat(b, e));
            prop_assume!(x != y);
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            prop_assert_eq!(simplest_rational_between(&lo, &hi), simplest_brute(&lo, &hi));
        }

        #[test]
        fn arc_count_matches_numeric_oracle(half in proptest::collection::vec(-4i64..=4, 1..=6), mid in -6i64..=6) {
            // palindromic polynomial of degree 2 * half.len()
            let mut c = half.clone();
            c.push(mid);
            c.extend(half.iter().rev());
            prop_assume!(c[0] != 0);
            let poly = p(&c);
            let rp = poly.to_rational();
            prop_assume!(rp.gcd(&rp.derivative()).degree() == Some(0));
            let arcs = isolate_unit_circle_roots(&poly).unwrap();
            let numeric = try_numeric_unit_circle_roots(&c);
            prop_assume!(numeric.is_some());
            let numeric = numeric.unwrap();
            prop_assert_eq!(arcs.len(), numeric.len(), "poly {}", poly);
            for (arc, x) in arcs.iter().zip(&numeric) {
                let lo = arc.lower_bound().to_f64().unwrap();
                let hi = arc.upper_bound().to_f64().unwrap();
                prop_assert!(lo - 1e-9 <= *x && *x <= hi + 1e-9, "{} vs {}", arc, x);
            }
        }
    }
}
