//! Levine-Tristram signatures `sigma_alpha(K)`: the Hermitian forms
//! `(1 - alpha) A + (1 - conj alpha) A^T`, their certified signatures at
//! roots of unity, the step-function profile on the circle, and the
//! averaged signature at jump points.

mod congruence;
mod enclosure;
mod profile;

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact_scalars::{
    isolate_unit_circle_roots, CyclotomicElement, CyclotomicField, RootArc, RotationNumber,
};
use crate::seifert::{alexander_polynomial, KnotSpec, SeifertMatrix};

pub use profile::{profile, ProfileSegment, SignatureProfile};

/// Starting precision, in bits, for certified pivot signs.
pub const DEFAULT_START_BITS: u32 = 64;

/// Relative threshold below which a floating eigenvalue counts as zero.
pub const GENERIC_ZERO_THRESHOLD: f64 = 1e-9;

/// A point `alpha` of the unit circle.
///
/// Roots of unity are exact and give certified results. Other points are
/// floating rotation numbers in `[0, 1)` and every result derived from them
/// is flagged uncertified.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AlphaPoint {
    Exact(RotationNumber),
    Generic(f64),
}

impl AlphaPoint {
    pub fn exact(numerator: i64, denominator: u64) -> Result<Self> {
        Ok(AlphaPoint::Exact(RotationNumber::new(numerator, denominator)?))
    }

    /// A floating rotation number, reduced into `[0, 1)`.
    pub fn generic(rotation: f64) -> Result<Self> {
        if !rotation.is_finite() {
            return Err(Error::InvalidRotation(format!("{rotation} is not finite")));
        }
        Ok(AlphaPoint::Generic(rotation.rem_euclid(1.0)))
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, AlphaPoint::Exact(_))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            AlphaPoint::Exact(r) => r.as_f64(),
            AlphaPoint::Generic(x) => *x,
        }
    }
}

impl fmt::Display for AlphaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaPoint::Exact(r) => write!(f, "{r}"),
            AlphaPoint::Generic(x) => write!(f, "{x}"),
        }
    }
}

/// `H(alpha)` over `Q(zeta_n)` where `alpha = exp(2 pi i q/n)` is the field
/// generator `t` evaluated at the embedding chosen by `at`.
#[derive(Clone, Debug)]
pub struct ExactHermitian {
    at: RotationNumber,
    size: usize,
    entries: Vec<CyclotomicElement>,
}

impl ExactHermitian {
    pub fn at(&self) -> RotationNumber {
        self.at
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &CyclotomicElement {
        &self.entries[i * self.size + j]
    }

    /// Exact check that the matrix equals its conjugate transpose.
    pub fn is_hermitian(&self) -> bool {
        (0..self.size).all(|i| (i..self.size).all(|j| *self.entry(i, j) == self.entry(j, i).conj()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CyclotomicElement::is_zero)
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.size, self.size, |i, j| {
            let (re, im) = self.entry(i, j).eval_f64(&self.at);
            Complex64::new(re, im)
        })
    }
}

#[derive(Clone, Debug)]
pub enum HermitianForm {
    Exact(ExactHermitian),
    Generic(DMatrix<Complex64>),
}

impl HermitianForm {
    pub fn is_hermitian(&self) -> bool {
        match self {
            HermitianForm::Exact(h) => h.is_hermitian(),
            HermitianForm::Generic(m) => {
                let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
                (m - m.adjoint()).iter().all(|z| z.norm() <= 1e-12 * scale)
            }
        }
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        match self {
            HermitianForm::Exact(h) => h.to_complex(),
            HermitianForm::Generic(m) => m.clone(),
        }
    }
}

fn exact_form(a: &SeifertMatrix, at: RotationNumber) -> ExactHermitian {
    let field: Arc<CyclotomicField> = CyclotomicField::new(at.denominator());
    let one_minus_t = CyclotomicElement::from_i64(&field, 1).sub(&CyclotomicElement::t_pow(&field, 1));
    let one_minus_tbar = one_minus_t.conj();
    let n = a.size();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let x = one_minus_t.scale(&BigInt::from(a.get(i, j)));
            let y = one_minus_tbar.scale(&BigInt::from(a.get(j, i)));
            entries.push(x.add(&y));
        }
    }
    ExactHermitian { at, size: n, entries }
}

fn generic_form(a: &SeifertMatrix, rotation: f64) -> DMatrix<Complex64> {
    let alpha = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * rotation);
    let one = Complex64::new(1.0, 0.0);
    let (u, v) = (one - alpha, one - alpha.conj());
    DMatrix::from_fn(a.size(), a.size(), |i, j| {
        u * a.get(i, j) as f64 + v * a.get(j, i) as f64
    })
}

/// `H(alpha) = (1 - alpha) A + (1 - conj alpha) A^T`.
pub fn hermitian_form(a: &SeifertMatrix, alpha: &AlphaPoint) -> HermitianForm {
    match alpha {
        AlphaPoint::Exact(r) => HermitianForm::Exact(exact_form(a, *r)),
        AlphaPoint::Generic(x) => HermitianForm::Generic(generic_form(a, *x)),
    }
}

/// Signature and nullity of `H(alpha)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignatureReading {
    pub signature: i64,
    pub nullity: usize,
    pub certified: bool,
}

/// Eigenvalue sign count of a Hermitian matrix, with eigenvalues of modulus
/// at most `GENERIC_ZERO_THRESHOLD * |H|_F` counted as zero.
pub fn floating_signature(m: &DMatrix<Complex64>) -> (i64, usize) {
    let n = m.nrows();
    if n == 0 {
        return (0, 0);
    }
    let norm = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return (0, n);
    }
    let threshold = GENERIC_ZERO_THRESHOLD * norm;
    let eigen = m.clone().symmetric_eigenvalues();
    let mut signature = 0i64;
    let mut nullity = 0usize;
    for &lambda in eigen.iter() {
        if lambda.abs() <= threshold {
            nullity += 1;
        } else if lambda > 0.0 {
            signature += 1;
        } else {
            signature -= 1;
        }
    }
    (signature, nullity)
}

/// Precision beyond which the enclosure path gives up and hands over to
/// exact field arithmetic.
const ENCLOSURE_MAX_BITS: u32 = 1 << 14;

/// `det H(alpha)` is a unit multiple of `(1 - alpha)^{2g} Delta(alpha)`, so
/// `H(alpha)` is singular exactly at `alpha = 1` and at roots of `Delta`.
fn is_nonsingular(knot: &KnotSpec, at: RotationNumber) -> bool {
    if at.is_identity() {
        return knot.matrix().size() == 0;
    }
    let field = CyclotomicField::new(at.denominator());
    let delta = alexander_polynomial(knot).polynomial;
    !CyclotomicElement::from_polynomial(&field, &delta).is_zero()
}

fn exact_signature(knot: &KnotSpec, at: RotationNumber, start_bits: u32) -> (i64, usize) {
    let a = knot.matrix();
    if is_nonsingular(knot, at) {
        let mut bits = start_bits.max(53);
        while bits <= ENCLOSURE_MAX_BITS {
            if let Some(signature) = enclosure::try_signature(a, at, bits) {
                return (signature, 0);
            }
            bits *= 2;
        }
    }
    let form = exact_form(a, at);
    congruence::signature_and_nullity(&form, start_bits)
        .expect("H(alpha) is Hermitian, so every pivot is real")
}

/// `sigma_alpha(K)` and the nullity of `H(alpha)`.
pub fn signature_at(knot: &KnotSpec, alpha: &AlphaPoint) -> SignatureReading {
    signature_at_with(knot, alpha, DEFAULT_START_BITS)
}

/// As [`signature_at`], with an explicit starting precision for certified
/// sign evaluation.
pub fn signature_at_with(knot: &KnotSpec, alpha: &AlphaPoint, start_bits: u32) -> SignatureReading {
    let a = knot.matrix();
    match alpha {
        AlphaPoint::Exact(r) => {
            let (signature, nullity) = exact_signature(knot, *r, start_bits);
            SignatureReading {
                signature,
                nullity,
                certified: true,
            }
        }
        AlphaPoint::Generic(x) => {
            let (signature, nullity) = floating_signature(&generic_form(a, *x));
            SignatureReading {
                signature,
                nullity,
                certified: false,
            }
        }
    }
}

/// Unit-circle roots of the Alexander polynomial: every jump of the
/// signature function lies among them.
pub fn jump_candidates(knot: &KnotSpec) -> Vec<RootArc> {
    let delta = alexander_polynomial(knot);
    isolate_unit_circle_roots(&delta.polynomial)
        .expect("Alexander polynomials of Seifert matrices are palindromic")
}

/// Average of the one-sided limits of `sigma` at `alpha`: the arc value away
/// from jumps, half the sum of the neighbouring arc values at a jump.
pub fn averaged_sigma(knot: &KnotSpec, alpha: &AlphaPoint) -> Result<BigRational> {
    match alpha {
        AlphaPoint::Exact(r) => {
            let jumps = jump_candidates(knot);
            if jumps.iter().any(|j| j.exact() == Some(*r)) {
                return profile(knot).averaged(alpha);
            }
            Ok(BigRational::from(BigInt::from(signature_at(knot, alpha).signature)))
        }
        AlphaPoint::Generic(_) => profile(knot).averaged(alpha),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::{from_matrix, mirror, torus_knot};

    fn trefoil() -> KnotSpec {
        from_matrix("trefoil", vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    fn exact(q: i64, n: u64) -> AlphaPoint {
        AlphaPoint::exact(q, n).unwrap()
    }

    /// Independent float oracle: real symmetric 2n x 2n embedding of H.
    fn oracle(a: &SeifertMatrix, rotation: f64) -> (i64, usize) {
        let h = generic_form(a, rotation);
        let n = h.nrows();
        let real = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
            let z = h[(i % n, j % n)];
            match (i < n, j < n) {
                (true, true) | (false, false) => z.re,
                (true, false) => -z.im,
                (false, true) => z.im,
            }
        });
        let norm = h.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let eig = real.symmetric_eigenvalues();
        let thr = 1e-9 * norm.max(1e-300);
        let pos = eig.iter().filter(|&&x| x > thr).count() as i64;
        let neg = eig.iter().filter(|&&x| x < -thr).count() as i64;
        let zero = eig.len() as i64 - pos - neg;
        ((pos - neg) / 2, (zero / 2) as usize)
    }

    #[test]
    fn hermitian_form_examples() {
        let a = trefoil();
        let at_one = hermitian_form(a.matrix(), &exact(0, 1));
        match &at_one {
            HermitianForm::Exact(h) => assert!(h.is_zero()),
            HermitianForm::Generic(_) => unreachable!(),
        }
        let at_minus_one = hermitian_form(a.matrix(), &exact(1, 2)).to_complex();
        let expected = [[-4.0, 2.0], [2.0, -4.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((at_minus_one[(i, j)] - Complex64::new(expected[i][j], 0.0)).norm() < 1e-12);
            }
        }
        for alpha in [exact(1, 3), exact(2, 7), AlphaPoint::Generic(0.3)] {
            assert!(hermitian_form(a.matrix(), &alpha).is_hermitian());
        }
    }

    #[test]
    fn signature_examples() {
        let t = trefoil();
        let r = signature_at(&t, &exact(0, 1));
        assert_eq!((r.signature, r.nullity, r.certified), (0, 2, true));
        assert_eq!(signature_at(&t, &exact(1, 2)).signature, -2);
        assert_eq!(oracle(t.matrix(), 0.5), (-2, 0));
        assert_eq!(signature_at(&t, &exact(1, 3)).signature, -2);
        assert_eq!(oracle(t.matrix(), 1.0 / 3.0), (-2, 0));

        let t25 = torus_knot(2, 5).unwrap();
        let r = signature_at(&t25, &exact(2, 5));
        assert_eq!((r.signature, r.nullity), (-4, 0));
        assert_eq!(oracle(t25.matrix(), 0.4), (-4, 0));
        let jump = signature_at(&t25, &exact(1, 10));
        assert_eq!(jump.nullity, 1);
        assert_eq!(jump.signature, -1);
    }

    #[test]
    fn jump_point_oracle() {
        let t25 = torus_knot(2, 5).unwrap();
        let (sig, null) = oracle(t25.matrix(), 0.1);
        let exact_reading = signature_at(&t25, &exact(1, 10));
        assert_eq!((exact_reading.signature, exact_reading.nullity), (sig, null));
    }

    #[test]
    fn generic_points_are_uncertified() {
        let t = trefoil();
        let r = signature_at(&t, &AlphaPoint::Generic(0.5));
        assert_eq!((r.signature, r.nullity, r.certified), (-2, 0, false));
        let r = signature_at(&t, &AlphaPoint::Generic(0.0));
        assert_eq!((r.signature, r.nullity), (0, 2));
    }

    #[test]
    fn hyperbolic_pairs_are_handled() {
        // H(-1) = 2(A + A^T) vanishes on the diagonal for this A, forcing the
        // 2x2 hyperbolic rule.
        let k = from_matrix("hyp", vec![vec![0, 1], vec![0, 0]]).unwrap();
        let r = signature_at(&k, &exact(1, 2));
        assert_eq!((r.signature, r.nullity), (0, 0));
        assert_eq!(oracle(k.matrix(), 0.5), (0, 0));
        let bigger = from_matrix(
            "hyp2",
            vec![vec![0, 1, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 0, 0]],
        )
        .unwrap();
        for q in 1..7 {
            let r = signature_at(&bigger, &exact(q, 7));
            assert_eq!((r.signature, r.nullity), oracle(bigger.matrix(), q as f64 / 7.0));
        }
    }

    #[test]
    fn jump_candidates_examples() {
        assert!(jump_candidates(&KnotSpec::unknot()).is_empty());
        let tre: Vec<String> = jump_candidates(&trefoil()).iter().map(|a| a.to_string()).collect();
        assert_eq!(tre, vec!["1/6", "5/6"]);
        let t25: Vec<String> = jump_candidates(&torus_knot(2, 5).unwrap())
            .iter()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(t25, vec!["1/10", "3/10", "7/10", "9/10"]);
    }

    #[test]
    fn averaged_examples() {
        let t = trefoil();
        assert_eq!(averaged_sigma(&t, &exact(1, 2)).unwrap(), BigRational::from(BigInt::from(-2)));
        let t25 = torus_knot(2, 5).unwrap();
        assert_eq!(averaged_sigma(&t25, &exact(1, 10)).unwrap(), BigRational::from(BigInt::from(-1)));
        for alpha in [exact(1, 3), exact(0, 1), AlphaPoint::Generic(0.77)] {
            assert_eq!(
                averaged_sigma(&KnotSpec::unknot(), &alpha).unwrap(),
                BigRational::from(BigInt::from(0))
            );
        }
        assert_eq!(
            averaged_sigma(&t25, &AlphaPoint::Generic(0.5)).unwrap(),
            BigRational::from(BigInt::from(-4))
        );
        assert!(matches!(
            averaged_sigma(&t25, &AlphaPoint::Generic(0.1 + 1e-12)),
            Err(Error::NearJump { .. })
        ));
    }

    #[test]
    fn enclosure_and_exact_paths_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut compared = 0;
        while compared < 60 {
            let g = rng.gen_range(1..=3);
            let n = 2 * g;
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = rng.gen_range(-3..=3);
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            for k in 0..g {
                rows[2 * k][2 * k + 1] += 1;
            }
            let knot = from_matrix("r", rows).unwrap();
            let den = rng.gen_range(2..=15);
            let at = RotationNumber::new(rng.gen_range(1..den as i64), den).unwrap();
            if !is_nonsingular(&knot, at) {
                continue;
            }
            let exact = congruence::signature_and_nullity(&exact_form(knot.matrix(), at), 64).unwrap();
            let fast = enclosure::try_signature(knot.matrix(), at, 64).or_else(|| enclosure::try_signature(knot.matrix(), at, 256));
            assert_eq!(Some(exact.0), fast, "{:?} at {at}", knot.matrix().rows());
            assert_eq!(exact.1, 0);
            compared += 1;
        }
    }

    #[test]
    fn mirror_flips_signature() {
        let t = torus_knot(3, 4).unwrap();
        let m = mirror(&t);
        for q in 1..12 {
            let a = signature_at(&t, &exact(q, 12));
            let b = signature_at(&m, &exact(q, 12));
            assert_eq!(a.signature, -b.signature);
            assert_eq!(a.nullity, b.nullity);
        }
    }
}
