//! Exact scalars for computations on the unit circle: rotation numbers,
//! integer polynomials, cyclotomic field elements with certified signs, and
//! isolation of unit-circle roots.

mod cyclotomic;
mod interval;
mod linalg;
mod poly;
mod roots;
mod rotation;
mod sign;

pub use cyclotomic::{certified_sign, cyclotomic_polynomial, CyclotomicElement, CyclotomicField};
pub use linalg::{determinant, resultant, ExactRing};
pub use poly::IntegerPolynomial;
pub use roots::{isolate_unit_circle_roots, simplest_rational_between, RootArc};
pub use rotation::RotationNumber;
pub use sign::Sign;

pub(crate) use cyclotomic::CircleEvaluator;
pub(crate) use interval::{cos_2pi_enclosure, FixedInterval};
