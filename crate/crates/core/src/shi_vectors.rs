//! Shi coefficients `k(w, α)`: the unit strips `k < ⟨x, α∨⟩ < k + 1` that
//! cut out the alcove `A_w = w(A_e)`.
//!
//! Two independent computations are provided. [`shi_vector`] floors the
//! pairings of `w(x₀)` for an interior point `x₀` of `A_e`;
//! [`shi_vector_oracle`] reads the coefficients off the decomposition
//! `w = τ_x w̄`. They must agree everywhere.

use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::affine_group::AffineElement;
use crate::error::{Error, Result};
use crate::root_system::{Rational, RootSystem};

/// The tuple `(k(w, α))` over positive roots, in root-index order.
#[derive(Debug, Clone)]
pub struct ShiVector {
    rs: Arc<RootSystem>,
    entries: Vec<i64>,
}

impl PartialEq for ShiVector {
    fn eq(&self, other: &Self) -> bool {
        self.rs.is_same_system(&other.rs) && self.entries == other.entries
    }
}

impl Eq for ShiVector {}

impl std::hash::Hash for ShiVector {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl ShiVector {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// `k(w, γ)` for any root index, with `k(w, -α) = -k(w, α)`.
    pub fn at(&self, root: usize) -> i64 {
        if self.rs.is_positive_index(root) {
            self.entries[root]
        } else {
            -self.entries[self.rs.negate_index(root)]
        }
    }

    /// `k(w, γ∨)`, which is `k(w, γ)`.
    pub fn at_coroot(&self, root: usize) -> i64 {
        self.at(root)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&k| k == 0)
    }

    /// `Σ |k(w, α)|`, the Coxeter length of `w`.
    pub fn length(&self) -> u64 {
        self.entries.iter().map(|k| k.unsigned_abs()).sum()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

impl PartialEq<[i64]> for ShiVector {
    fn eq(&self, other: &[i64]) -> bool {
        self.entries == other
    }
}

/// JSON object keyed by root label, e.g. `{"alpha_1": -1, "alpha_2": 0, ...}`.
impl Serialize for ShiVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (root, k) in self.rs.positive_roots().iter().zip(&self.entries) {
            map.serialize_entry(&root.label(), k)?;
        }
        map.end()
    }
}

/// Floors `⟨w(x), α∨⟩` over positive roots for an arbitrary base point `x`.
/// Fails if `w(x)` lies on some hyperplane `H_{α,k}`.
pub fn shi_vector_from_point(w: &AffineElement, x: &[Rational]) -> Result<ShiVector> {
    let rs = w.root_system();
    let image = w.act_vector(x);
    let entries = (0..rs.num_positive())
        .map(|a| {
            let v = rs.pairing_at(&image, a);
            if v.is_integer() {
                Err(Error::OnHyperplane {
                    root: rs.root(a).coords().to_vec(),
                    level: v.to_integer(),
                })
            } else {
                Ok(v.floor().to_integer())
            }
        })
        .collect::<Result<_>>()?;
    Ok(ShiVector {
        rs: Arc::clone(rs),
        entries,
    })
}

/// The Shi vector of `w`, by flooring pairings at the image of the interior
/// point of the fundamental alcove.
///
/// # Panics
///
/// If the image of the interior point lands on a hyperplane, which would mean
/// the interior point is not interior.
pub fn shi_vector(w: &AffineElement) -> ShiVector {
    shi_vector_from_point(w, w.root_system().interior_point())
        .expect("interior point images never lie on a hyperplane")
}

/// `k(w, α) = ⟨x, α∨⟩ - [w̄⁻¹(α) < 0]` for `w = τ_x w̄`.
pub fn shi_vector_oracle(w: &AffineElement) -> ShiVector {
    let rs = w.root_system();
    let inv = w.finite_part().inverse();
    let entries = (0..rs.num_positive())
        .map(|a| {
            let shift = if rs.is_positive_index(inv.act_root_index(a)) {
                0
            } else {
                -1
            };
            rs.pairing_lattice(w.translation(), a) + shift
        })
        .collect();
    ShiVector {
        rs: Arc::clone(rs),
        entries,
    }
}

pub fn length_from_shi(sv: &ShiVector) -> u64 {
    sv.length()
}

/// Checks `k(w⁻¹, α) = -k(w, w̄(α))` for every positive root.
pub fn shi_inverse_identity_check(w: &AffineElement) -> bool {
    let rs = w.root_system();
    let direct = shi_vector(w);
    let inverse = shi_vector(&w.inverse());
    (0..rs.num_positive()).all(|a| inverse.at(a) == -direct.at(w.finite_part().act_root_index(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_system;

    fn rs(name: &str) -> Arc<RootSystem> {
        build_root_system(name.parse().unwrap())
    }

    fn word(rs: &Arc<RootSystem>, w: &[usize]) -> AffineElement {
        AffineElement::from_word(rs, w).unwrap()
    }

    #[test]
    fn identity_is_zero() {
        for name in ["A2", "B3", "G2"] {
            let r = rs(name);
            let sv = shi_vector(&AffineElement::identity(&r));
            assert!(sv.is_zero());
            assert_eq!(sv.length(), 0);
        }
    }

    #[test]
    fn a2_generator_examples() {
        let a2 = rs("A2");
        let s1 = word(&a2, &[1]);
        assert_eq!(shi_vector(&s1).entries(), &[-1, 0, 0]);
        assert_eq!(shi_vector_oracle(&s1).entries(), &[-1, 0, 0]);
        assert_eq!(length_from_shi(&shi_vector(&s1)), 1);
        let s0 = word(&a2, &[0]);
        assert_eq!(shi_vector(&s0).entries(), &[0, 0, 1]);
        // ⟨s₀(x₀), θ∨⟩ = 2 - 2/3
        let img = s0.act_vector(a2.interior_point());
        assert_eq!(a2.pairing_at(&img, 2), Rational::new(4, 3));
    }

    #[test]
    fn conventions_on_lookup() {
        let a2 = rs("A2");
        let sv = shi_vector(&word(&a2, &[1]));
        assert_eq!(sv.at(a2.negate_index(0)), 1);
        assert_eq!(sv.at_coroot(0), sv.at(0));
    }

    #[test]
    fn oracle_on_translations() {
        let b2 = rs("B2");
        let t = AffineElement::translation_by(&b2, vec![2, -1]).unwrap();
        let sv = shi_vector_oracle(&t);
        for a in 0..b2.num_positive() {
            assert_eq!(sv.at(a), b2.pairing_lattice(&[2, -1], a));
        }
        assert_eq!(sv, shi_vector(&t));
    }

    #[test]
    fn on_hyperplane_is_an_error() {
        let a2 = rs("A2");
        let origin = a2.zero_rational();
        assert!(matches!(
            shi_vector_from_point(&AffineElement::identity(&a2), &origin),
            Err(Error::OnHyperplane { .. })
        ));
    }

    #[test]
    fn inverse_identity_on_involutions() {
        let g2 = rs("G2");
        for i in 0..=2 {
            assert!(shi_inverse_identity_check(&word(&g2, &[i])));
        }
        assert!(shi_inverse_identity_check(&AffineElement::identity(&g2)));
        assert!(shi_inverse_identity_check(&word(&g2, &[0, 1, 2, 1, 0, 2])));
    }

    #[test]
    fn json_keys_are_root_labels() {
        let b2 = rs("B2");
        let v = serde_json::to_string(&shi_vector(&word(&b2, &[1]))).unwrap();
        assert_eq!(
            v,
            r#"{"alpha_1":-1,"alpha_2":0,"alpha_1+alpha_2":0,"alpha_1+2alpha_2":0}"#
        );
    }
}
