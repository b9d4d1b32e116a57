//! Finite irreducible crystallographic root systems under Bourbaki labeling.
//!
//! Roots are integer vectors in the simple-root basis. The Gram matrix is the
//! symmetrized Cartan matrix normalized so that short roots have squared
//! length 2; with that choice every inner product between lattice vectors is
//! an integer, and so is every coroot pairing of a root-lattice vector.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// Exact rational scalar.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A validated irreducible Cartan type such as `B3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if valid {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Squared lengths of the simple roots.
    fn simple_norms(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram, zero-based.
    fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let chain = |len: usize| {
            (0..len.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>()
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseCartanType(s.to_string())),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::ParseCartanType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Bitmask of simple indices (zero-based) with a nonzero coordinate.
    pub fn support(&self) -> u32 {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Human-readable label such as `alpha_1+2alpha_2`.
    pub fn label(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("alpha_{}", i + 1));
        }
        out
    }
}

impl std::ops::Neg for &Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// An irreducible crystallographic root system.
///
/// Roots are indexed: positive roots occupy `0..n_pos` sorted by height (ties
/// broken by reverse lexicographic order, so index `i < rank` is the simple
/// root `α_{i+1}`), and the negative of root `i` sits at `i + n_pos`.
pub struct RootSystem {
    cartan_type: CartanType,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    // pairing(x, α) = Σ x_i · pairing_rows[α][i]
    pairing_rows: Vec<Vec<i64>>,
    norms: Vec<i64>,
    supports: Vec<u32>,
    highest_short: usize,
    interior: Vec<Rational>,
    interior_scale: i64,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("type", &self.cartan_type)
            .field("positive_roots", &self.n_pos)
            .finish()
    }
}

/// Builds the root system of `cartan_type` by closing the simple roots under
/// the simple reflections.
pub fn build_root_system(cartan_type: CartanType) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(cartan_type))
}

impl RootSystem {
    fn build(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let simple_norms = cartan_type.simple_norms();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = simple_norms[i];
        }
        for (i, j) in cartan_type.edges() {
            let v = -simple_norms[i].max(simple_norms[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }

        let inner = |x: &[i64], y: &[i64]| -> i64 {
            (0..n)
                .map(|i| x[i] * (0..n).map(|j| gram[i][j] * y[j]).sum::<i64>())
                .sum()
        };

        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for s in &simple {
            seen.insert(s.clone(), ());
            queue.push_back(s.clone());
        }
        while let Some(beta) = queue.pop_front() {
            for (i, alpha) in simple.iter().enumerate() {
                let c = 2 * inner(&beta, alpha) / simple_norms[i];
                let image: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect();
                if !seen.contains_key(&image) {
                    seen.insert(image.clone(), ());
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Vec<i64>> = seen
            .into_keys()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut roots: Vec<Root> = positive.iter().cloned().map(Root::new).collect();
        roots.extend(
            positive
                .iter()
                .map(|r| Root::new(r.iter().map(|c| -c).collect())),
        );

        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let norms: Vec<i64> = roots.iter().map(|r| inner(&r.coords, &r.coords)).collect();
        let pairing_rows: Vec<Vec<i64>> = roots
            .iter()
            .zip(&norms)
            .map(|(r, &nr)| {
                (0..n)
                    .map(|i| {
                        let num = 2 * (0..n).map(|j| gram[i][j] * r.coords[j]).sum::<i64>();
                        debug_assert_eq!(num % nr, 0);
                        num / nr
                    })
                    .collect()
            })
            .collect();
        let supports = roots.iter().map(Root::support).collect();

        let short = *norms.iter().min().expect("nonempty");
        let highest_short = (0..n_pos)
            .filter(|&i| norms[i] == short)
            .max_by_key(|&i| roots[i].height())
            .expect("a short positive root exists");

        // p with pairing(p, α_i) = 1 for all simple α_i, i.e. (G p)_i = |α_i|²/2.
        let a: Vec<Vec<Rational>> = gram
            .iter()
            .map(|row| row.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect();
        let b: Vec<Rational> = simple_norms.iter().map(|&v| Rational::new(v, 2)).collect();
        let p = linalg::solve(a, b).expect("Gram matrix is nondegenerate");

        let mut rs = RootSystem {
            cartan_type,
            gram,
            roots,
            n_pos,
            index,
            pairing_rows,
            norms,
            supports,
            highest_short,
            interior: Vec::new(),
            interior_scale: 0,
        };
        let top = rs.pairing_at(&p, highest_short);
        debug_assert!(top.is_integer());
        let scale = top.to_integer() + 1;
        rs.interior = p.iter().map(|v| v / scale).collect();
        rs.interior_scale = scale;
        rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Integer Gram matrix of the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_rational(&self) -> Vec<Vec<Rational>> {
        self.gram
            .iter()
            .map(|row| row.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect()
    }

    /// All roots, positive first.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    /// Index of `-root(idx)`.
    pub fn negate_index(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    /// Squared length `⟨α, α⟩` of root `idx`.
    pub fn norm(&self, idx: usize) -> i64 {
        self.norms[idx]
    }

    pub fn support(&self, idx: usize) -> u32 {
        self.supports[idx]
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| x[i] * (0..n).map(|j| self.gram[i][j] * y[j]).sum::<i64>())
            .sum()
    }

    /// `⟨x, α∨⟩` for a rational vector `x` and an arbitrary root `alpha`.
    pub fn pairing(&self, x: &[Rational], alpha: &Root) -> Result<Rational> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                got: x.len(),
                rank: self.rank(),
            });
        }
        let idx = self
            .index_of(alpha.coords())
            .ok_or_else(|| Error::NotARoot(alpha.coords().to_vec()))?;
        Ok(self.pairing_at(x, idx))
    }

    /// `⟨x, α∨⟩` with `α = root(idx)`.
    pub fn pairing_at(&self, x: &[Rational], idx: usize) -> Rational {
        x.iter()
            .zip(&self.pairing_rows[idx])
            .fold(Rational::zero(), |acc, (v, &c)| acc + v * c)
    }

    /// `⟨x, α∨⟩` for a root-lattice vector; always an integer.
    pub fn pairing_lattice(&self, x: &[i64], idx: usize) -> i64 {
        x.iter()
            .zip(&self.pairing_rows[idx])
            .map(|(v, c)| v * c)
            .sum()
    }

    /// The unique short positive root of maximal height (θ).
    pub fn highest_short_root(&self) -> &Root {
        &self.roots[self.highest_short]
    }

    pub fn highest_short_index(&self) -> usize {
        self.highest_short
    }

    /// A point of the open fundamental alcove: `p / M` where `p` pairs to 1
    /// with every simple root and `M = ⟨p, θ∨⟩ + 1`.
    pub fn interior_point(&self) -> &[Rational] {
        &self.interior
    }

    /// The denominator `M` of [`RootSystem::interior_point`].
    pub fn interior_scale(&self) -> i64 {
        self.interior_scale
    }

    /// Coordinates of `α∨` in the basis of simple coroots.
    pub fn coroot_coords(&self, idx: usize) -> Vec<i64> {
        let nr = self.norms[idx];
        self.roots[idx]
            .coords
            .iter()
            .enumerate()
            .map(|(i, &c)| c * self.gram[i][i] / nr)
            .collect()
    }

    pub fn is_same_system(&self, other: &RootSystem) -> bool {
        std::ptr::eq(self, other) || self.cartan_type == other.cartan_type
    }

    pub(crate) fn check_same(&self, other: &RootSystem) -> Result<()> {
        if self.is_same_system(other) {
            Ok(())
        } else {
            Err(Error::MixedRootSystems {
                left: self.cartan_type,
                right: other.cartan_type,
            })
        }
    }

    /// Converts a one-based simple index to zero-based, validating range.
    pub fn simple_index(&self, one_based: usize) -> Result<usize> {
        if one_based == 0 || one_based > self.rank() {
            Err(Error::SimpleIndexOutOfRange {
                index: one_based,
                rank: self.rank(),
            })
        } else {
            Ok(one_based - 1)
        }
    }

    pub(crate) fn unit(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| i64::from(i == j)).collect()
    }

    #[cfg(test)]
    pub(crate) fn zero_rational(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.rank()]
    }
}

impl Serialize for RootSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let gram: Vec<Vec<String>> = self
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Rational::from_integer(v).to_string())
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("RootSystem", 3)?;
        s.serialize_field("type", &self.cartan_type)?;
        s.serialize_field("positive_roots", self.positive_roots())?;
        s.serialize_field("gram", &gram)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> Arc<RootSystem> {
        build_root_system(name.parse().unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn roots_of(rs: &RootSystem) -> Vec<Vec<i64>> {
        rs.positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect()
    }

    #[test]
    fn type_validation() {
        assert!("A1".parse::<CartanType>().is_ok());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("D2".parse::<CartanType>().is_err());
        assert!("E5".parse::<CartanType>().is_err());
        assert!("F3".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert_eq!("b3".parse::<CartanType>().unwrap().to_string(), "B3");
    }

    #[test]
    fn rank_two_positive_roots() {
        assert_eq!(
            roots_of(&rs("A2")),
            vec![vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(
            roots_of(&rs("B2")),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(rs("G2").roots().len(), 12);
    }

    #[test]
    fn root_counts_match_known_orders() {
        for (name, count) in [
            ("A1", 2),
            ("A3", 12),
            ("A4", 20),
            ("B3", 18),
            ("C3", 18),
            ("B4", 32),
            ("D4", 24),
            ("F4", 48),
            ("E6", 72),
            ("E8", 240),
        ] {
            assert_eq!(rs(name).roots().len(), count, "{name}");
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let x: Vec<Rational> = vec![q(1, 1), q(0, 1)];
        assert_eq!(a2.pairing(&x, &Root::new(vec![0, 1])).unwrap(), q(-1, 1));
        let b2 = rs("B2");
        let a1: Vec<Rational> = vec![q(1, 1), q(0, 1)];
        let a2v: Vec<Rational> = vec![q(0, 1), q(1, 1)];
        assert_eq!(b2.pairing(&a2v, &Root::new(vec![1, 0])).unwrap(), q(-1, 1));
        assert_eq!(b2.pairing(&a1, &Root::new(vec![0, 1])).unwrap(), q(-2, 1));
        for name in ["A3", "B3", "C3", "G2", "F4"] {
            let r = rs(name);
            for i in 0..r.rank() {
                assert_eq!(r.pairing_lattice(&r.unit(i), i), 2);
            }
        }
        assert!(a2.pairing(&x, &Root::new(vec![1, 2])).is_err());
        assert!(a2.pairing(&[q(1, 1)], &Root::new(vec![1, 0])).is_err());
    }

    #[test]
    fn highest_short_roots() {
        assert_eq!(rs("A2").highest_short_root().coords(), &[1, 1]);
        assert_eq!(rs("B2").highest_short_root().coords(), &[1, 1]);
        assert_eq!(rs("G2").highest_short_root().coords(), &[2, 1]);
        assert_eq!(rs("B3").highest_short_root().coords(), &[1, 1, 1]);
        assert_eq!(rs("C3").highest_short_root().coords(), &[1, 2, 1]);
        assert_eq!(rs("F4").highest_short_root().coords(), &[1, 2, 3, 2]);
    }

    #[test]
    fn interior_point_scale_is_coxeter_number() {
        // ⟨p, θ∨⟩ is the height of the highest coroot, i.e. h - 1.
        for (name, h) in [
            ("A2", 3),
            ("B2", 4),
            ("G2", 6),
            ("A3", 4),
            ("B3", 6),
            ("C3", 6),
            ("F4", 12),
        ] {
            assert_eq!(rs(name).interior_scale(), h, "{name}");
        }
        let a2 = rs("A2");
        assert_eq!(a2.pairing_at(a2.interior_point(), 2), q(2, 3));
    }

    #[test]
    fn interior_point_lies_in_fundamental_alcove() {
        for name in [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "E6",
        ] {
            let r = rs(name);
            let m = r.interior_scale();
            for i in 0..r.rank() {
                assert_eq!(r.pairing_at(r.interior_point(), i), q(1, m));
            }
            for a in 0..r.num_positive() {
                let v = r.pairing_at(r.interior_point(), a);
                assert!(v > q(0, 1) && v < q(1, 1), "{name} root {a}");
            }
        }
    }

    #[test]
    fn closure_and_two_lengths() {
        for name in ["A3", "B3", "C4", "D4", "G2", "F4"] {
            let r = rs(name);
            for a in 0..r.roots().len() {
                for i in 0..r.rank() {
                    let c = r.pairing_lattice(r.root(a).coords(), i);
                    let img: Vec<i64> = r
                        .root(a)
                        .coords()
                        .iter()
                        .enumerate()
                        .map(|(j, &v)| v - if j == i { c } else { 0 })
                        .collect();
                    assert!(r.index_of(&img).is_some());
                }
            }
            let mut lens: Vec<i64> = (0..r.roots().len()).map(|i| r.norm(i)).collect();
            lens.sort();
            lens.dedup();
            assert!(lens.len() <= 2);
            assert_eq!(lens[0], 2);
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(&*rs("B2")).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "type": "B2",
                "positive_roots": [[1, 0], [0, 1], [1, 1], [1, 2]],
                "gram": [["4", "-2"], ["-2", "2"]]
            })
        );
    }

    #[test]
    fn labels() {
        assert_eq!(Root::new(vec![1, 2]).label(), "alpha_1+2alpha_2");
        assert_eq!(Root::new(vec![0, -1]).label(), "-alpha_2");
    }
}
