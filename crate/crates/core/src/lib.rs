//! Exact computations on affine Weyl groups: root systems, alcoves and Shi
//! coefficients, inversion sets, and standard and twisted length functions
//! attached to the biclosed sets `y·A(Δ₁, Δ₂)`.
//!
//! All arithmetic is exact. Roots live in simple-root coordinates and the
//! coroot pairing `⟨x, α∨⟩` is the only geometric primitive.
//!
//! ```
//! use alcove_kit::{build_root_system, AffineElement, shi_vector};
//!
//! let rs = build_root_system("A2".parse().unwrap());
//! let w = AffineElement::from_word(&rs, &[0, 1]).unwrap();
//! assert_eq!(shi_vector(&w).length(), 2);
//! ```

pub mod affine_group;
pub mod biclosed_twisted;
pub mod cli;
pub mod enumeration_verify;
mod error;
pub mod inversions;
mod linalg;
pub mod render;
pub mod root_system;
pub mod shi_vectors;
pub mod weyl_finite;

pub use affine_group::{conjugate_reflection, parse_word, AffineElement, Reflection};
pub use biclosed_twisted::{
    closure_check, twisted_cocycle_check, twisted_length_def, twisted_length_lemma,
    twisted_length_lemma_rminus, twisted_length_prop, twisted_length_theorem,
    twisted_length_theorem_rminus, AffinePosRoot, BiclosedSpec, Sign, SimpleSet, SubsetPair,
    Window,
};
pub use enumeration_verify::{
    enumerate, run_suite, run_suite_on, Bounds, ElementTable, Suite, VerificationReport,
};
pub use error::{Error, Result};
pub use inversions::{cocycle_check, inversion_set, InversionSet};
pub use render::{render_alcoves, svg_annotation, RenderSpec};
pub use root_system::{build_root_system, CartanType, Family, Rational, Root, RootSystem};
pub use shi_vectors::{
    length_from_shi, shi_inverse_identity_check, shi_vector, shi_vector_oracle, ShiVector,
};
pub use weyl_finite::FiniteWeylElement;
