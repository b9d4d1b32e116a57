//! The affine Weyl group `W_a = ZΦ ⋊ W`, its Coxeter generators, and affine
//! reflections `s_{α,k}`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Rational, Root, RootSystem};
use crate::weyl_finite::FiniteWeylElement;

/// `w = τ_x · w̄`: translation by `x ∈ ZΦ` after the finite part `w̄`.
///
/// Acts on `V` by `v ↦ x + w̄(v)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineElement {
    translation: Vec<i64>,
    #[serde(rename = "finite")]
    finite: FiniteWeylElement,
}

impl AffineElement {
    pub fn new(translation: Vec<i64>, finite: FiniteWeylElement) -> Result<Self> {
        let rank = finite.root_system().rank();
        if translation.len() != rank {
            return Err(Error::DimensionMismatch {
                got: translation.len(),
                rank,
            });
        }
        Ok(AffineElement {
            translation,
            finite,
        })
    }

    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        AffineElement {
            translation: vec![0; rs.rank()],
            finite: FiniteWeylElement::identity(rs),
        }
    }

    pub fn translation_by(rs: &Arc<RootSystem>, x: Vec<i64>) -> Result<Self> {
        Self::new(x, FiniteWeylElement::identity(rs))
    }

    /// Coxeter generator `i`: `0` is `s_{θ,1}` with `θ` the highest short
    /// root, `1..=rank` are the simple reflections.
    pub fn generator(rs: &Arc<RootSystem>, i: usize) -> Result<Self> {
        match i {
            0 => {
                // s_{θ,1}(v) = v - (⟨v,θ∨⟩ - 1)θ = s_θ(v) + θ
                let theta = rs.highest_short_index();
                Ok(AffineElement {
                    translation: rs.root(theta).coords().to_vec(),
                    finite: FiniteWeylElement::reflection(rs, theta),
                })
            }
            i if i <= rs.rank() => Ok(AffineElement {
                translation: vec![0; rs.rank()],
                finite: FiniteWeylElement::simple_reflection(rs, i)?,
            }),
            _ => Err(Error::GeneratorIndexOutOfRange {
                index: i,
                rank: rs.rank(),
            }),
        }
    }

    /// All `rank + 1` Coxeter generators, indexed as in [`AffineElement::generator`].
    pub fn generators(rs: &Arc<RootSystem>) -> Vec<Self> {
        (0..=rs.rank())
            .map(|i| Self::generator(rs, i).expect("index in range"))
            .collect()
    }

    /// Left-to-right product `g_{i₁} ⋯ g_{i_p}`.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let gens = Self::generators(rs);
        let mut w = Self::identity(rs);
        for &i in word {
            let g = gens.get(i).ok_or(Error::GeneratorIndexOutOfRange {
                index: i,
                rank: rs.rank(),
            })?;
            w = &w * g;
        }
        Ok(w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.finite.root_system()
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    pub fn finite_part(&self) -> &FiniteWeylElement {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.iter().all(|&c| c == 0)
    }

    /// `(x, u)(y, v) = (x + u(y), uv)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let finite = self.finite.multiply(&other.finite)?;
        let moved = self.finite.act_lattice(&other.translation);
        let translation = self
            .translation
            .iter()
            .zip(moved)
            .map(|(a, b)| a + b)
            .collect();
        Ok(AffineElement {
            translation,
            finite,
        })
    }

    /// `(x, u)⁻¹ = (-u⁻¹(x), u⁻¹)`.
    pub fn inverse(&self) -> Self {
        let finite = self.finite.inverse();
        let translation = finite
            .act_lattice(&self.translation)
            .into_iter()
            .map(|c| -c)
            .collect();
        AffineElement {
            translation,
            finite,
        }
    }

    pub fn act_vector(&self, v: &[Rational]) -> Vec<Rational> {
        self.finite
            .act_vector(v)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, &t)| a + t)
            .collect()
    }

    pub fn act_lattice(&self, v: &[i64]) -> Vec<i64> {
        self.finite
            .act_lattice(v)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, t)| a + t)
            .collect()
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineElement")
            .field("translation", &self.translation)
            .field("finite", &self.finite.matrix_rows())
            .finish()
    }
}

/// Panics on mixed root systems; see [`AffineElement::multiply`].
impl std::ops::Mul for &AffineElement {
    type Output = AffineElement;

    fn mul(self, rhs: &AffineElement) -> AffineElement {
        self.multiply(rhs).expect("operands share a root system")
    }
}

/// The affine reflection `s_{α,k}` fixing `H_{α,k} = {x : ⟨x, α∨⟩ = k}`,
/// normalized so that `α` is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    root: usize,
    level: i64,
}

impl Reflection {
    /// Normalizes `H_{-α,k} = H_{α,-k}` for any root index.
    pub fn canonical(rs: &RootSystem, root: usize, level: i64) -> Self {
        if rs.is_positive_index(root) {
            Reflection { root, level }
        } else {
            Reflection {
                root: rs.negate_index(root),
                level: -level,
            }
        }
    }

    /// Requires `root` to be a positive root.
    pub fn new(rs: &RootSystem, root: &Root, level: i64) -> Result<Self> {
        let idx = rs
            .index_of(root.coords())
            .ok_or_else(|| Error::NotARoot(root.coords().to_vec()))?;
        if !rs.is_positive_index(idx) {
            return Err(Error::NotPositive(root.coords().to_vec()));
        }
        Ok(Reflection { root: idx, level })
    }

    pub fn root_index(&self) -> usize {
        self.root
    }

    pub fn root<'a>(&self, rs: &'a RootSystem) -> &'a Root {
        rs.root(self.root)
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// `s_{α,k} = (kα, s_α)`.
    pub fn to_element(&self, rs: &Arc<RootSystem>) -> AffineElement {
        AffineElement {
            translation: rs
                .root(self.root)
                .coords()
                .iter()
                .map(|c| c * self.level)
                .collect(),
            finite: FiniteWeylElement::reflection(rs, self.root),
        }
    }
}

/// `y · s_{α,k} · y⁻¹` in canonical form.
///
/// For `y = (x, ȳ)` the image is `s_{ȳα, k + ⟨x, (ȳα)∨⟩}`.
pub fn conjugate_reflection(y: &AffineElement, r: &Reflection) -> Reflection {
    let rs = y.root_system();
    let beta = y.finite.act_root_index(r.root);
    let level = r.level + rs.pairing_lattice(&y.translation, beta);
    Reflection::canonical(rs, beta, level)
}

/// Parses a comma-separated list of indices such as `0,1,2,0`. The empty
/// string is the empty list.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::ParseIndexList(s.to_string()))
        })
        .collect()
}
