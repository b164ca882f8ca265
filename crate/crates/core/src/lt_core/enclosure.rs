//! Congruence elimination on outward-rounded enclosures of `H(alpha)`.
//!
//! Only valid when `H(alpha)` is known to be nonsingular: then every Schur
//! complement is nonsingular too, so at high enough precision each step finds
//! either a diagonal pivot whose enclosure excludes zero or a 2x2 block with
//! certifiably negative determinant. A run that finds neither reports failure
//! and the caller retries at higher precision.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact_scalars::{cos_2pi_enclosure, FixedInterval, RotationNumber, Sign};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug)]
struct Cx {
    re: FixedInterval,
    im: FixedInterval,
}

impl Cx {
    fn real(re: FixedInterval) -> Self {
        let im = FixedInterval::zero(re.bits());
        Cx { re, im }
    }

    fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    fn scale(&self, x: &FixedInterval) -> Cx {
        Cx {
            re: self.re.mul(x),
            im: self.im.mul(x),
        }
    }

    fn conj(&self) -> Cx {
        Cx {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    fn norm_sqr(&self) -> FixedInterval {
        self.re.square().add(&self.im.square())
    }
}

fn form(a: &SeifertMatrix, at: RotationNumber, bits: u32) -> Vec<Vec<Cx>> {
    let r = at.to_rational();
    let quarter = BigRational::new(1.into(), 4.into());
    let cos = cos_2pi_enclosure(&r, bits);
    let sin = cos_2pi_enclosure(&(&r - &quarter), bits);
    let one_minus_cos = FixedInterval::exact_int(&BigInt::from(1), bits).sub(&cos);
    let n = a.size();
    // (1 - alpha) x + (1 - conj alpha) y = (x + y)(1 - cos) + i (y - x) sin
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (x, y) = (a.get(i, j), a.get(j, i));
                    let re = one_minus_cos.mul_int(&BigInt::from(x + y));
                    if i == j {
                        Cx::real(re)
                    } else {
                        Cx {
                            re,
                            im: sin.mul_int(&BigInt::from(y - x)),
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// `m_rs - correction(r, index of s)` over the kept indices, Hermitian by
/// construction.
fn schur<F>(m: &[Vec<Cx>], rest: &[usize], correction: F) -> Vec<Vec<Cx>>
where
    F: Fn(usize, usize) -> Cx,
{
    let k = rest.len();
    let mut next: Vec<Vec<Option<Cx>>> = vec![vec![None; k]; k];
    for (a, &r) in rest.iter().enumerate() {
        for (b, &s) in rest.iter().enumerate().skip(a) {
            let value = m[r][s].sub(&correction(r, b));
            if a == b {
                next[a][b] = Some(Cx::real(value.re));
            } else {
                next[b][a] = Some(value.conj());
                next[a][b] = Some(value);
            }
        }
    }
    next.into_iter()
        .map(|row| row.into_iter().map(|x| x.expect("filled")).collect())
        .collect()
}

/// Signature of a nonsingular `H(alpha)` at `bits` of working precision, or
/// `None` if the enclosures are too wide to decide a step.
pub(crate) fn try_signature(a: &SeifertMatrix, at: RotationNumber, bits: u32) -> Option<i64> {
    let mut m = form(a, at, bits);
    let mut signature = 0i64;
    loop {
        let n = m.len();
        if n == 0 {
            return Some(signature);
        }
        let diagonal = (0..n)
            .filter_map(|i| match m[i][i].re.sign() {
                Some(Sign::Positive) => Some((i, 1)),
                Some(Sign::Negative) => Some((i, -1)),
                _ => None,
            })
            .max_by_key(|&(i, _)| m[i][i].re.mignitude());
        if let Some((i, sign)) = diagonal {
            signature += sign;
            let inv = m[i][i].re.recip()?;
            let rest: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let w: Vec<Cx> = rest.iter().map(|&s| m[i][s].scale(&inv)).collect();
            m = schur(&m, &rest, |r, b| m[r][i].mul(&w[b]));
            continue;
        }
        // A block [[p, b], [conj b, q]] with |b|^2 > pq is indefinite and
        // contributes nothing to the signature.
        let block = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let det = m[i][i].re.mul(&m[j][j].re).sub(&m[i][j].norm_sqr());
                (det.sign() == Some(Sign::Negative)).then(|| (i, j, det))
            })
            .max_by_key(|(_, _, det)| det.mignitude());
        let (i, j, det) = block?;
        let inv_det = det.recip()?;
        let (p, q, b) = (m[i][i].clone(), m[j][j].clone(), m[i][j].clone());
        let rest: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        // [u_s; v_s] = M^{-1} [m_is; m_js] with M^{-1} = [[q, -b], [-conj b, p]] / det
        let u: Vec<Cx> = rest
            .iter()
            .map(|&s| q.mul(&m[i][s]).sub(&b.mul(&m[j][s])).scale(&inv_det))
            .collect();
        let v: Vec<Cx> = rest
            .iter()
            .map(|&s| p.mul(&m[j][s]).sub(&b.conj().mul(&m[i][s])).scale(&inv_det))
            .collect();
        m = schur(&m, &rest, |r, k| m[r][i].mul(&u[k]).add(&m[r][j].mul(&v[k])));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_at_minus_one() {
        let a = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        let at = RotationNumber::new(1, 2).unwrap();
        assert_eq!(try_signature(&a, at, 64), Some(-2));
    }

    #[test]
    fn zero_diagonal_uses_blocks() {
        let a = SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        for q in 1..5 {
            let at = RotationNumber::new(q, 5).unwrap();
            assert_eq!(try_signature(&a, at, 64), Some(0));
        }
    }
}
