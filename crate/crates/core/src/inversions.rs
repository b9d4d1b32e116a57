//! Inversion sets `N(w)`: the reflections whose hyperplanes separate `A_e`
//! from `A_w`.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::affine_group::{conjugate_reflection, AffineElement, Reflection};
use crate::error::Result;
use crate::root_system::RootSystem;
use crate::shi_vectors::shi_vector;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionSet {
    reflections: BTreeSet<Reflection>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.reflections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reflections.is_empty()
    }

    pub fn contains(&self, r: &Reflection) -> bool {
        self.reflections.contains(r)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Reflection> {
        self.reflections.iter()
    }

    /// `A + B`, the symmetric difference.
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        InversionSet {
            reflections: self
                .reflections
                .symmetric_difference(&other.reflections)
                .copied()
                .collect(),
        }
    }

    /// `y A y⁻¹`.
    pub fn conjugate(&self, y: &AffineElement) -> Self {
        InversionSet {
            reflections: self.iter().map(|r| conjugate_reflection(y, r)).collect(),
        }
    }

    /// Pairs `(root coordinates, level)` for display or serialization.
    pub fn to_pairs(&self, rs: &RootSystem) -> Vec<(Vec<i64>, i64)> {
        self.iter()
            .map(|r| (r.root(rs).coords().to_vec(), r.level()))
            .collect()
    }
}

impl FromIterator<Reflection> for InversionSet {
    fn from_iter<I: IntoIterator<Item = Reflection>>(iter: I) -> Self {
        InversionSet {
            reflections: iter.into_iter().collect(),
        }
    }
}

impl Serialize for InversionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|r| (r.root_index(), r.level())))
    }
}

/// Hyperplanes `H_{α,j}` strictly between `A_e` and `A_w`, read from the Shi
/// vector: levels `1..=k` when `k(w,α) = k ≥ 1`, levels `k+1..=0` when
/// `k ≤ -1`.
pub fn inversion_set(w: &AffineElement) -> InversionSet {
    let sv = shi_vector(w);
    sv.entries()
        .iter()
        .enumerate()
        .flat_map(|(a, &k)| {
            let levels = if k >= 1 { 1..=k } else { k + 1..=0 };
            levels.map(move |j| (a, j))
        })
        .map(|(a, j)| Reflection::canonical(w.root_system(), a, j))
        .collect()
}

/// Checks the reflection cocycle law `N(xy) = N(x) + x N(y) x⁻¹`.
pub fn cocycle_check(x: &AffineElement, y: &AffineElement) -> Result<bool> {
    let xy = x.multiply(y)?;
    let rhs = inversion_set(x).symmetric_difference(&inversion_set(y).conjugate(x));
    Ok(inversion_set(&xy) == rhs)
}
