//! Seifert matrices, knot constructors and Alexander polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_scalars::{determinant, resultant, IntegerPolynomial};

/// Integer Seifert form `A` of a genus-`g` surface: a `2g x 2g` matrix with
/// `det(A - A^T) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    /// Validates shape and unimodularity of the antisymmetrization.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::NotSquare {
                rows: size,
                len: bad.len(),
            });
        }
        if size % 2 == 1 {
            return Err(Error::OddSize { size });
        }
        let m = SeifertMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        };
        let det = m.antisymmetrization_determinant();
        if !det.is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(m)
    }

    pub fn empty() -> Self {
        SeifertMatrix {
            size: 0,
            entries: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn genus(&self) -> usize {
        self.size / 2
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        if self.size == 0 {
            return Vec::new();
        }
        self.entries.chunks(self.size).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        SeifertMatrix { size: n, entries }
    }

    /// `det(A - A^T)`.
    pub fn antisymmetrization_determinant(&self) -> BigInt {
        let n = self.size;
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(self.get(i, j) - self.get(j, i)))
                    .collect()
            })
            .collect();
        determinant(&rows)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A named knot, carried by one of its Seifert matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotSpec {
    name: String,
    matrix: SeifertMatrix,
}

impl KnotSpec {
    pub fn new(name: impl Into<String>, matrix: SeifertMatrix) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::EmptyName);
        }
        Ok(KnotSpec { name, matrix })
    }

    pub fn unknot() -> Self {
        KnotSpec {
            name: "unknot".into(),
            matrix: SeifertMatrix::empty(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &SeifertMatrix {
        &self.matrix
    }

    pub fn genus(&self) -> usize {
        self.matrix.genus()
    }

    pub fn with_name(&self, name: impl Into<String>) -> Result<Self> {
        KnotSpec::new(name, self.matrix.clone())
    }
}

/// Validates a user-supplied Seifert matrix and names it.
pub fn from_matrix(name: &str, entries: Vec<Vec<i64>>) -> Result<KnotSpec> {
    KnotSpec::new(name, SeifertMatrix::new(entries)?)
}

/// The `(p, q)` torus knot, as the fiber surface of the positive braid
/// `(s_1 s_2 ... s_{p-1})^q`.
///
/// One basis curve ("brick") per pair of consecutive occurrences of the same
/// generator. A brick has self-linking `-1`; consecutive bricks of one
/// generator link `+1` in one order; bricks of adjacent generators link
/// `-1` when the lower-index brick starts first and `+1` when the
/// higher-index brick starts first.
pub fn torus_knot(p: u32, q: u32) -> Result<KnotSpec> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "torus knot parameters must be at least 2, got ({p},{q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let columns = (p - 1) as usize;
    let per_column = (q - 1) as usize;
    let size = columns * per_column;
    let index = |col: usize, m: usize| col * per_column + m;
    let mut rows = vec![vec![0i64; size]; size];
    for col in 0..columns {
        for m in 0..per_column {
            let a = index(col, m);
            rows[a][a] = -1;
            if m + 1 < per_column {
                rows[a][index(col, m + 1)] = 1;
            }
            if col + 1 < columns {
                // brick (col+1, m) starts one crossing after brick (col, m)
                rows[a][index(col + 1, m)] = -1;
                if m >= 1 {
                    // brick (col+1, m-1) starts before brick (col, m)
                    rows[index(col + 1, m - 1)][a] = 1;
                }
            }
        }
    }
    from_matrix(&format!("T({p},{q})"), rows)
}

/// Mirror image: Seifert matrix `-A^T`.
pub fn mirror(knot: &KnotSpec) -> KnotSpec {
    let t = knot.matrix.transpose();
    KnotSpec {
        name: format!("mirror({})", knot.name),
        matrix: SeifertMatrix {
            size: t.size,
            entries: t.entries.iter().map(|x| -x).collect(),
        },
    }
}

/// Connected sum: block-diagonal Seifert matrix.
pub fn connected_sum(a: &KnotSpec, b: &KnotSpec) -> KnotSpec {
    let (n, m) = (a.matrix.size, b.matrix.size);
    let size = n + m;
    let mut entries = vec![0i64; size * size];
    for i in 0..n {
        for j in 0..n {
            entries[i * size + j] = a.matrix.get(i, j);
        }
    }
    for i in 0..m {
        for j in 0..m {
            entries[(n + i) * size + n + j] = b.matrix.get(i, j);
        }
    }
    KnotSpec {
        name: format!("{}#{}", a.name, b.name),
        matrix: SeifertMatrix { size, entries },
    }
}

/// Alexander polynomial in symmetric normal form: `t^shift * polynomial`
/// with `polynomial(0) != 0`, `polynomial(1) = 1`, and `polynomial`
/// palindromic, so that the Laurent polynomial is invariant under
/// `t -> 1/t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentNormalForm {
    pub polynomial: IntegerPolynomial,
    pub shift: i64,
}

impl fmt::Display for LaurentNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.polynomial)
        } else {
            write!(f, "t^{} * ({})", self.shift, self.polynomial)
        }
    }
}

/// Normalizes a polynomial that is an Alexander polynomial up to units
/// `+-t^k`.
pub(crate) fn normalize_alexander(raw: &IntegerPolynomial) -> LaurentNormalForm {
    let (mut p, _) = raw.strip_t_powers();
    if p.eval(&BigInt::one()).is_negative() {
        p = -p;
    }
    let deg = p.degree().unwrap_or(0) as i64;
    LaurentNormalForm {
        polynomial: p,
        shift: -(deg / 2),
    }
}

/// `det(A - t A^T)` by fraction-free elimination over `Z[t]`, normalized.
pub fn alexander_polynomial(knot: &KnotSpec) -> LaurentNormalForm {
    let a = &knot.matrix;
    let n = a.size;
    let rows: Vec<Vec<IntegerPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| IntegerPolynomial::from_i64s(&[a.get(i, j), -a.get(j, i)]))
                .collect()
        })
        .collect();
    normalize_alexander(&determinant(&rows))
}

/// Order of `H_1` of the `n`-fold cyclic branched cover,
/// `|prod_{j=1}^{n-1} Delta(zeta_n^j)|`, computed exactly as the absolute
/// resultant of `Delta` and `1 + t + ... + t^{n-1}`. Zero means infinite
/// homology.
pub fn branched_cover_h1_order(knot: &KnotSpec, n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "branched cover order must be at least 2, got {n}"
        )));
    }
    let delta = alexander_polynomial(knot).polynomial;
    let geometric = IntegerPolynomial::new(vec![BigInt::one(); n as usize]);
    let res = resultant(&delta, &geometric);
    Ok(if res.is_zero() { res } else { res.abs() })
}
