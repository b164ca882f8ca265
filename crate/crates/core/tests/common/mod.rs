#![allow(dead_code)]

use ltsig_core::{from_matrix, torus_knot, KnotSpec, SeifertMatrix};
use nalgebra::DMatrix;
use rand::Rng;

pub fn builtin_knots() -> Vec<KnotSpec> {
    let mut out = vec![KnotSpec::unknot()];
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)] {
        out.push(torus_knot(p, q).unwrap());
    }
    out
}

/// A random Seifert matrix of even size in `2..=max_size` with entries in
/// `[-3, 3]`: a symmetric matrix plus the standard symplectic part, followed
/// by random elementary congruences that keep the entries in range.
pub fn random_seifert<R: Rng>(rng: &mut R, max_size: usize) -> KnotSpec {
    let g = rng.gen_range(1..=max_size / 2);
    let n = 2 * g;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-3..=3);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    for k in 0..g {
        let (i, j) = (2 * k, 2 * k + 1);
        a[i][j] = rng.gen_range(-3..=2) + 1;
        a[j][i] = a[i][j] - 1;
    }
    for _ in 0..rng.gen_range(0..6) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut b = a.clone();
        for c in 0..n {
            b[i][c] += s * a[j][c];
        }
        let rows = b.clone();
        for r in 0..n {
            b[r][i] += s * rows[r][j];
        }
        if b.iter().flatten().all(|x| x.abs() <= 3) {
            a = b;
        }
    }
    from_matrix("random", a).expect("congruence keeps the matrix valid")
}

fn complex_form(a: &SeifertMatrix, rotation: f64) -> Vec<Vec<(f64, f64)>> {
    let theta = 2.0 * std::f64::consts::PI * rotation;
    let (c, s) = (theta.cos(), theta.sin());
    let n = a.size();
    let mut h = vec![vec![(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j) as f64;
            let y = a.get(j, i) as f64;
            // (1 - alpha) x + (1 - conj alpha) y
            h[i][j] = ((1.0 - c) * (x + y), -s * x + s * y);
        }
    }
    h
}

/// Eigenvalues of the real symmetric `2n x 2n` embedding of `H(alpha)`
/// (each eigenvalue of `H` appears twice) and the Frobenius norm of `H`.
pub fn embedded_eigenvalues(a: &SeifertMatrix, rotation: f64) -> (Vec<f64>, f64) {
    let h = complex_form(a, rotation);
    let n = h.len();
    let real = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (re, im) = h[i % n][j % n];
        match (i < n, j < n) {
            (true, true) | (false, false) => re,
            (true, false) => -im,
            (false, true) => im,
        }
    });
    let norm = h
        .iter()
        .flatten()
        .map(|(re, im)| re * re + im * im)
        .sum::<f64>()
        .sqrt();
    (real.symmetric_eigenvalues().iter().copied().collect(), norm)
}

/// Floating signature and nullity of `H(alpha)` with zero threshold
/// `rel * |H|`.
pub fn float_signature(a: &SeifertMatrix, rotation: f64, rel: f64) -> (i64, usize) {
    let (eig, norm) = embedded_eigenvalues(a, rotation);
    let thr = rel * norm;
    let pos = eig.iter().filter(|&&x| x > thr).count() as i64;
    let neg = eig.iter().filter(|&&x| x < -thr).count() as i64;
    let zero = eig.len() as i64 - pos - neg;
    ((pos - neg) / 2, (zero / 2) as usize)
}

/// Floating signature, or `None` when the smallest eigenvalue is below
/// `rel * |H|` and the count cannot be trusted.
pub fn float_signature_if_separated(a: &SeifertMatrix, rotation: f64, rel: f64) -> Option<i64> {
    let (eig, norm) = embedded_eigenvalues(a, rotation);
    if eig.is_empty() {
        return Some(0);
    }
    if eig.iter().any(|x| x.abs() < rel * norm) {
        return None;
    }
    Some(float_signature(a, rotation, rel).0)
}
