//! Signature and nullity of an exact Hermitian matrix by symmetric
//! congruence elimination over a cyclotomic field.

use crate::error::Result;
use crate::exact_scalars::{CircleEvaluator, CyclotomicElement};

use super::ExactHermitian;

fn cost(x: &CyclotomicElement) -> u64 {
    x.coefficients().iter().map(|c| c.bits()).sum::<u64>() + x.denominator().bits()
}

/// Returns `(signature, nullity)`.
///
/// Each step splits off either a nonzero diagonal pivot, whose certified sign
/// enters the signature, or, when the whole remaining diagonal vanishes but
/// the block does not, a hyperbolic 2x2 pair that contributes nothing. Only
/// the Schur complement is carried forward; a zero block ends the loop and
/// counts towards the nullity.
pub(crate) fn signature_and_nullity(form: &ExactHermitian, start_bits: u32) -> Result<(i64, usize)> {
    let mut eval = CircleEvaluator::new(form.at, start_bits);
    let mut m: Vec<Vec<CyclotomicElement>> = (0..form.size)
        .map(|i| (0..form.size).map(|j| form.entry(i, j).clone()).collect())
        .collect();
    let mut signature = 0i64;
    loop {
        let n = m.len();
        if n == 0 {
            return Ok((signature, 0));
        }
        let diagonal = (0..n)
            .filter(|&i| !m[i][i].is_zero())
            .min_by_key(|&i| cost(&m[i][i]));
        if let Some(i) = diagonal {
            let pivot = m[i][i].clone();
            signature += eval.sign(&pivot)?.to_i64();
            let inv = pivot.inverse().expect("nonzero pivot");
            let rest: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            let w: Vec<CyclotomicElement> = rest.iter().map(|&s| inv.mul(&m[i][s])).collect();
            m = schur(&m, &rest, |r, b| m[r][i].mul(&w[b]));
            continue;
        }
        let off = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((i, j)) = off else {
            return Ok((signature, n));
        };
        // [[0, b], [conj b, 0]] has signature 0; eliminate it as a block:
        // H'_rs = H_rs - H_ri H_js / conj(b) - H_rj H_is / b
        let b = m[i][j].clone();
        let inv_b = b.inverse().expect("nonzero entry");
        let inv_b_bar = inv_b.conj();
        let rest: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        let u: Vec<CyclotomicElement> = rest.iter().map(|&s| m[j][s].mul(&inv_b_bar)).collect();
        let v: Vec<CyclotomicElement> = rest.iter().map(|&s| m[i][s].mul(&inv_b)).collect();
        m = schur(&m, &rest, |r, k| m[r][i].mul(&u[k]).add(&m[r][j].mul(&v[k])));
    }
}

/// `H_rs - correction(r, index of s)` over the kept indices, computing the
/// upper triangle and filling the lower one by conjugation.
fn schur<F>(m: &[Vec<CyclotomicElement>], rest: &[usize], correction: F) -> Vec<Vec<CyclotomicElement>>
where
    F: Fn(usize, usize) -> CyclotomicElement,
{
    let k = rest.len();
    let mut next: Vec<Vec<Option<CyclotomicElement>>> = vec![vec![None; k]; k];
    for (a, &r) in rest.iter().enumerate() {
        for (b, &s) in rest.iter().enumerate().skip(a) {
            let value = m[r][s].sub(&correction(r, b));
            if a != b {
                next[b][a] = Some(value.conj());
            }
            next[a][b] = Some(value);
        }
    }
    next.into_iter()
        .map(|row| row.into_iter().map(|x| x.expect("filled")).collect())
        .collect()
}
