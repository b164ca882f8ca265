//! Certified Levine-Tristram signatures of knots, computed from Seifert
//! matrices, together with the signature invariants of knotted tori in
//! homology `S^1 x S^3` that reduce to sums of knot signatures (product tori,
//! twist spins, circle bundles).
//!
//! Results at roots of unity are certified. Where `H(alpha)` is provably
//! nonsingular the elimination runs on outward-rounded enclosures with
//! adaptive precision; at roots of the Alexander polynomial it runs in exact
//! cyclotomic arithmetic, with each pivot sign decided by an exact zero test
//! followed by interval evaluation. Points of the circle given only as
//! floating angles are supported but always reported as uncertified.

pub mod error;
pub mod exact_scalars;
pub mod lt_core;
pub mod seifert;
pub mod torus_invariants;

pub use error::{Error, Result};
pub use exact_scalars::{
    certified_sign, cyclotomic_polynomial, isolate_unit_circle_roots, CyclotomicElement,
    CyclotomicField, IntegerPolynomial, RootArc, RotationNumber, Sign,
};
pub use lt_core::{
    averaged_sigma, floating_signature, hermitian_form, jump_candidates, profile, signature_at,
    signature_at_with, AlphaPoint, HermitianForm, ProfileSegment, SignatureProfile,
    SignatureReading, DEFAULT_START_BITS,
};
pub use seifert::{
    alexander_polynomial, branched_cover_h1_order, connected_sum, from_matrix, mirror,
    torus_knot, KnotSpec, LaurentNormalForm, SeifertMatrix,
};
pub use torus_invariants::{
    circle_bundle_sigma, echeverria_example, eigenspace_sum_identity_check, equivariant_casson,
    fo_conjecture_rhs, product_sigma, twist_spin_sigma, CassonInput, EcheverriaComparison,
    TwistSpinInput,
};
