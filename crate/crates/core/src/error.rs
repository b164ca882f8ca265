use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NotSquare: matrix has {rows} rows but a row of length {len}")]
    NotSquare { rows: usize, len: usize },
    #[error("OddSize: Seifert matrix has odd size {size}")]
    OddSize { size: usize },
    #[error("NotUnimodular: det(A - A^T) = {det}, expected 1")]
    NotUnimodular { det: BigInt },
    #[error("EmptyName: knot name must be nonempty")]
    EmptyName,
    #[error("NotCoprime: torus knot parameters ({p},{q}) are not coprime")]
    NotCoprime { p: u32, q: u32 },
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
    #[error("InvalidRotation: {0}")]
    InvalidRotation(String),
    #[error("ZeroPolynomial: operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("NotPalindromic: {0} is not palindromic up to sign and unit")]
    NotPalindromic(String),
    #[error("NotReal: element is not fixed by complex conjugation")]
    NotReal,
    #[error("LevelMismatch: element level {level} does not match rotation denominator {denominator}")]
    LevelMismatch { level: u64, denominator: u64 },
    #[error("NearJump: angle {angle} lies within 1e-9 of a signature jump")]
    NearJump { angle: f64 },
    #[error("ParityViolation: averaged signature {value} at {at} is not an integer")]
    ParityViolation { at: String, value: BigRational },
    #[error("NotPrimePower: character order {d} is not a prime power")]
    NotPrimePower { d: u64 },
    #[error("NotHomologySphereCover: |H1|={order}")]
    NotHomologySphereCover { order: BigInt },
}
