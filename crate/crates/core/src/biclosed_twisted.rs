//! Biclosed sets of affine reflections and twisted length functions.
//!
//! For subsets `Δ₁, Δ₂` of simple roots let
//!
//! ```text
//! Φ⁺₁,₂ = [(Φ∨)⁺ ∖ span(Δ₁)] ⊔ [Φ∨ ∩ span(Δ₂)]
//! A₁,₂  = { s_ε : ε ∈ Φ̃⁺₁,₂ }
//! ```
//!
//! where `θ̃ = θ + ℕδ` for positive `θ` and `θ + ℕ*δ` for negative `θ`. Under
//! `α∨ + kδ ↦ H_{α,-k}` this gives the membership rule of
//! [`SubsetPair::a12_contains`]. Every biclosed set is a twisted conjugate
//! `y·A₁,₂ = N(y) + y A₁,₂ y⁻¹` with `⟨Δ₁, Δ₂⟩ = 0`; [`BiclosedSpec`] holds
//! that finite description and answers membership without materializing the
//! (infinite) set.
//!
//! The twisted length is `ℓ_A(w) = ℓ(w) - 2|N(w⁻¹) ∩ A|`. Besides the
//! definition, four closed forms in Shi coefficients are provided:
//! [`twisted_length_prop`], [`twisted_length_lemma`],
//! [`twisted_length_theorem`], and the variants
//! [`twisted_length_lemma_rminus`] / [`twisted_length_theorem_rminus`] that
//! drop the `r⁺` term.
//!
//! The `r⁺` term in the lemma and theorem forms does not match the
//! definition. An `α` with `k(x⁻¹, α) > 0` contributes hyperplanes at
//! positive levels, which lie in `A₁,₂` only through `-α ∈ Φ⁺₁,₂`, and that
//! case is already counted by `r⁻` via `k(x⁻¹, -α) < 0`. Already for
//! `Δ₁ = Δ₂ = ∅` and `x = s_{θ,1}` the definition gives `+1` while
//! `ℓ(x) + 2r⁻ - 2r⁺` gives `-1`. Both forms are kept so the discrepancy can
//! be checked.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::affine_group::{conjugate_reflection, AffineElement, Reflection};
use crate::error::{Error, Result};
use crate::inversions::{inversion_set, InversionSet};
use crate::root_system::RootSystem;
use crate::shi_vectors::{shi_vector, ShiVector};

/// A subset of simple roots, stored as a bitmask over zero-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSet(u32);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    /// From one-based simple indices.
    pub fn from_indices(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        indices.iter().try_fold(SimpleSet(0), |acc, &i| {
            let z = rs.simple_index(i)?;
            Ok(SimpleSet(acc.0 | (1 << z)))
        })
    }

    /// Parses `"1,3"`; the empty string is `∅`.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let idx = crate::affine_group::parse_word(s)?;
        Self::from_indices(rs, &idx)
    }

    pub fn from_mask(mask: u32) -> Self {
        SimpleSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, zero_based: usize) -> bool {
        self.0 & (1 << zero_based) != 0
    }

    /// Whether a root with this support lies in `span(Δ)`.
    pub fn spans_support(self, support: u32) -> bool {
        support & !self.0 == 0
    }

    /// All `2^rank` subsets.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSet> {
        (0..1u32 << rank).map(SimpleSet)
    }

    /// One-based indices.
    pub fn indices(self) -> Vec<usize> {
        (0..32)
            .filter(|&i| self.contains(i))
            .map(|i| i + 1)
            .collect()
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.indices();
        if idx.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SimpleSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

/// The pair `(Δ₁, Δ₂)` determining `Φ⁺₁,₂` and `A₁,₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SubsetPair {
    pub delta1: SimpleSet,
    pub delta2: SimpleSet,
}

impl SubsetPair {
    pub fn new(delta1: SimpleSet, delta2: SimpleSet) -> Self {
        SubsetPair { delta1, delta2 }
    }

    pub fn empty() -> Self {
        Self::new(SimpleSet::EMPTY, SimpleSet::EMPTY)
    }

    /// All `4^rank` pairs.
    pub fn all(rank: usize) -> Vec<SubsetPair> {
        SimpleSet::all(rank)
            .flat_map(|d1| SimpleSet::all(rank).map(move |d2| SubsetPair::new(d1, d2)))
            .collect()
    }

    /// Pairs with `⟨Δ₁, Δ₂⟩ = 0`.
    pub fn all_orthogonal(rs: &RootSystem) -> Vec<SubsetPair> {
        Self::all(rs.rank())
            .into_iter()
            .filter(|p| p.is_orthogonal(rs))
            .collect()
    }

    pub fn is_orthogonal(&self, rs: &RootSystem) -> bool {
        let n = rs.rank();
        (0..n).filter(|&i| self.delta1.contains(i)).all(|i| {
            (0..n)
                .filter(|&j| self.delta2.contains(j))
                .all(|j| rs.gram()[i][j] == 0)
        })
    }

    /// Membership of the signed root `γ` (as `γ∨`) in `Φ⁺₁,₂`.
    pub fn phi12_contains(&self, rs: &RootSystem, gamma: usize) -> bool {
        let support = rs.support(gamma);
        (rs.is_positive_index(gamma) && !self.delta1.spans_support(support))
            || self.delta2.spans_support(support)
    }

    /// `s_{α,k} ∈ A₁,₂` iff `k ≤ 0 ∧ α∨ ∈ Φ⁺₁,₂` or `k ≥ 1 ∧ -α∨ ∈ Φ⁺₁,₂`.
    pub fn a12_contains(&self, rs: &RootSystem, r: &Reflection) -> bool {
        if r.level() <= 0 {
            self.phi12_contains(rs, r.root_index())
        } else {
            self.phi12_contains(rs, rs.negate_index(r.root_index()))
        }
    }

    fn orthogonality(&self, rs: &RootSystem) -> Result<()> {
        if self.is_orthogonal(rs) {
            Ok(())
        } else {
            Err(Error::NotOrthogonal {
                delta1: self.delta1.to_string(),
                delta2: self.delta2.to_string(),
            })
        }
    }
}

impl fmt::Display for SubsetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Δ₁={}, Δ₂={})", self.delta1, self.delta2)
    }
}

/// `B = y·A₁,₂ = N(y) + y A₁,₂ y⁻¹`.
#[derive(Debug, Clone)]
pub struct BiclosedSpec {
    pair: SubsetPair,
    y: AffineElement,
    y_inv: AffineElement,
    n_y: InversionSet,
}

impl BiclosedSpec {
    pub fn new(pair: SubsetPair, y: AffineElement) -> Self {
        BiclosedSpec {
            pair,
            y_inv: y.inverse(),
            n_y: inversion_set(&y),
            y,
        }
    }

    /// `A₁,₂` itself (`y = e`).
    pub fn raw(rs: &Arc<RootSystem>, pair: SubsetPair) -> Self {
        Self::new(pair, AffineElement::identity(rs))
    }

    pub fn pair(&self) -> SubsetPair {
        self.pair
    }

    pub fn y(&self) -> &AffineElement {
        &self.y
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        self.y.root_system()
    }

    /// `r ∈ B` iff `r ∈ N(y)` xor `y⁻¹ r y ∈ A₁,₂`.
    pub fn contains(&self, r: &Reflection) -> bool {
        let pulled = conjugate_reflection(&self.y_inv, r);
        self.n_y.contains(r) ^ self.pair.a12_contains(self.root_system(), &pulled)
    }
}

/// Free-function form of [`SubsetPair::phi12_contains`].
pub fn phi12_contains(pair: &SubsetPair, rs: &RootSystem, gamma: usize) -> bool {
    pair.phi12_contains(rs, gamma)
}

/// Free-function form of [`SubsetPair::a12_contains`].
pub fn a12_contains(pair: &SubsetPair, rs: &RootSystem, r: &Reflection) -> bool {
    pair.a12_contains(rs, r)
}

/// Free-function form of [`BiclosedSpec::contains`].
pub fn b_contains(spec: &BiclosedSpec, r: &Reflection) -> bool {
    spec.contains(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// Terms with `k ≤ 0`.
    Minus,
    /// Terms with `k > 0`.
    Plus,
}

fn r_stat_of(pair: &SubsetPair, sv: &ShiVector, sign: Sign) -> i64 {
    let rs = sv.root_system();
    (0..rs.roots().len())
        .filter(|&g| pair.phi12_contains(rs, g))
        .map(|g| sv.at(g))
        .filter(|&k| match sign {
            Sign::Minus => k <= 0,
            Sign::Plus => k > 0,
        })
        .sum()
}

/// `r^±₁,₂(x)`: the sum of `k(x, γ)` over `γ ∈ Φ⁺₁,₂` with `k ≤ 0` (minus)
/// or `k > 0` (plus), negative `γ` read through `k(x,-α) = -k(x,α)`.
pub fn r_stat(pair: &SubsetPair, x: &AffineElement, sign: Sign) -> i64 {
    r_stat_of(pair, &shi_vector(x), sign)
}

/// `R^±₁,₂(x, y) = r^±₁,₂(yx) - r^±₁,₂(y)`.
pub fn relative_r_stat(
    pair: &SubsetPair,
    x: &AffineElement,
    y: &AffineElement,
    sign: Sign,
) -> Result<i64> {
    let yx = y.multiply(x)?;
    Ok(r_stat(pair, &yx, sign) - r_stat(pair, y, sign))
}

fn length(w: &AffineElement) -> i64 {
    shi_vector(w).length() as i64
}

/// `ℓ_B(x) = ℓ(x) - 2|N(x⁻¹) ∩ B|`.
pub fn twisted_length_def(spec: &BiclosedSpec, x: &AffineElement) -> i64 {
    let n = inversion_set(&x.inverse());
    let hits = n.iter().filter(|r| spec.contains(r)).count() as i64;
    n.len() as i64 - 2 * hits
}

/// `Σ_{α ∈ Φ⁺} k(x⁻¹, α)`, the twisted length for `A = A(∅, ∅)`.
pub fn twisted_length_prop(x: &AffineElement) -> i64 {
    shi_vector(&x.inverse()).sum()
}

/// `ℓ(x) + 2r⁻₁,₂(x⁻¹) - 2r⁺₁,₂(x⁻¹)` for `A₁,₂`. Disagrees with the
/// definition in general; see the module docs.
pub fn twisted_length_lemma(pair: &SubsetPair, x: &AffineElement) -> i64 {
    let sv = shi_vector(&x.inverse());
    sv.length() as i64 + 2 * r_stat_of(pair, &sv, Sign::Minus)
        - 2 * r_stat_of(pair, &sv, Sign::Plus)
}

/// `ℓ(x) + 2r⁻₁,₂(x⁻¹)`, which equals `ℓ_{A₁,₂}(x)` for every `Δ₁, Δ₂`.
pub fn twisted_length_lemma_rminus(pair: &SubsetPair, x: &AffineElement) -> i64 {
    let sv = shi_vector(&x.inverse());
    sv.length() as i64 + 2 * r_stat_of(pair, &sv, Sign::Minus)
}

/// `ℓ(xy) - ℓ(y) + 2R⁻₁,₂(x⁻¹, y⁻¹) - 2R⁺₁,₂(x⁻¹, y⁻¹)` for `B = y·A₁,₂`.
///
/// Rejects non-orthogonal `(Δ₁, Δ₂)`.
pub fn twisted_length_theorem(spec: &BiclosedSpec, x: &AffineElement) -> Result<i64> {
    let (base, minus, plus) = theorem_terms(spec, x)?;
    Ok(base + 2 * minus - 2 * plus)
}

/// `ℓ(xy) - ℓ(y) + 2R⁻₁,₂(x⁻¹, y⁻¹)`, which equals `ℓ_{y·A₁,₂}(x)`.
pub fn twisted_length_theorem_rminus(spec: &BiclosedSpec, x: &AffineElement) -> Result<i64> {
    let (base, minus, _) = theorem_terms(spec, x)?;
    Ok(base + 2 * minus)
}

fn theorem_terms(spec: &BiclosedSpec, x: &AffineElement) -> Result<(i64, i64, i64)> {
    let pair = spec.pair();
    pair.orthogonality(spec.root_system())?;
    let y = spec.y();
    let xy = x.multiply(y)?;
    let x_inv = x.inverse();
    let y_inv = y.inverse();
    let base = length(&xy) - length(y);
    let minus = relative_r_stat(&pair, &x_inv, &y_inv, Sign::Minus)?;
    let plus = relative_r_stat(&pair, &x_inv, &y_inv, Sign::Plus)?;
    Ok((base, minus, plus))
}

/// Checks `ℓ_A(xy) = ℓ_A(y) + ℓ_{y·A}(x)` for `A = A₁,₂`.
pub fn twisted_cocycle_check(
    pair: &SubsetPair,
    x: &AffineElement,
    y: &AffineElement,
) -> Result<bool> {
    let rs = x.root_system();
    let raw = BiclosedSpec::raw(rs, *pair);
    let xy = x.multiply(y)?;
    let twisted = BiclosedSpec::new(*pair, y.clone());
    Ok(twisted_length_def(&raw, &xy)
        == twisted_length_def(&raw, y) + twisted_length_def(&twisted, x))
}

/// A positive affine root `γ∨ + kδ`: `k ≥ 0`, and `k ≥ 1` when `γ < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePosRoot {
    finite: usize,
    delta: i64,
}

impl AffinePosRoot {
    pub fn new(rs: &RootSystem, finite: usize, delta: i64) -> Result<Self> {
        if delta < 0 || (delta == 0 && !rs.is_positive_index(finite)) {
            return Err(Error::InvalidAffineRoot);
        }
        Ok(AffinePosRoot { finite, delta })
    }

    pub fn finite(&self) -> usize {
        self.finite
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// `γ∨ + kδ ↦ H_{γ,-k}`.
    pub fn to_reflection(&self, rs: &RootSystem) -> Reflection {
        Reflection::canonical(rs, self.finite, -self.delta)
    }

    pub fn from_reflection(rs: &RootSystem, r: &Reflection) -> Self {
        if r.level() <= 0 {
            AffinePosRoot {
                finite: r.root_index(),
                delta: -r.level(),
            }
        } else {
            AffinePosRoot {
                finite: rs.negate_index(r.root_index()),
                delta: r.level(),
            }
        }
    }
}

/// Finite window of positive affine roots: `δ`-coefficient at most
/// `max_delta` and finite part of absolute height at most `max_height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub max_delta: i64,
    pub max_height: i64,
}

impl Window {
    pub fn all_heights(max_delta: i64) -> Self {
        Window {
            max_delta,
            max_height: i64::MAX,
        }
    }

    pub fn roots(&self, rs: &RootSystem) -> Vec<AffinePosRoot> {
        let mut out = Vec::new();
        for k in 0..=self.max_delta {
            for g in 0..rs.roots().len() {
                if rs.root(g).height().abs() > self.max_height {
                    continue;
                }
                if let Ok(a) = AffinePosRoot::new(rs, g, k) {
                    out.push(a);
                }
            }
        }
        out
    }
}

/// Finite-window test that both the set and its complement are closed:
/// whenever `c = p·a + q·b` with real `p, q > 0`, `a, b` in the set forces
/// `c` in the set and `a, b` outside forces `c` outside.
pub fn closure_check<F>(rs: &RootSystem, membership: F, window: Window) -> bool
where
    F: Fn(&AffinePosRoot) -> bool,
{
    let roots = window.roots(rs);
    // (γ∨ in simple-coroot coordinates, k)
    let vecs: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| {
            let mut v = rs.coroot_coords(a.finite);
            v.push(a.delta);
            v
        })
        .collect();
    let inside: Vec<bool> = roots.iter().map(&membership).collect();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if inside[i] != inside[j] {
                continue;
            }
            for c in 0..roots.len() {
                if inside[c] == inside[i] || c == i || c == j {
                    continue;
                }
                if in_open_cone(&vecs[i], &vecs[j], &vecs[c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `c = p·a + q·b` for some rationals `p, q > 0`.
fn in_open_cone(a: &[i64], b: &[i64], c: &[i64]) -> bool {
    let n = a.len();
    for s in 0..n {
        for t in s + 1..n {
            let det = a[s] * b[t] - a[t] * b[s];
            if det == 0 {
                continue;
            }
            let p = c[s] * b[t] - c[t] * b[s];
            let q = a[s] * c[t] - a[t] * c[s];
            if p * det.signum() <= 0 || q * det.signum() <= 0 {
                return false;
            }
            return (0..n).all(|r| c[r] * det == p * a[r] + q * b[r]);
        }
    }
    // a and b are parallel
    false
}
