//! Elements of the finite Weyl group.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_system::{Rational, Root, RootSystem};

/// An element of the finite Weyl group `W`.
///
/// Stored twice: as the integer matrix acting on simple-root coordinates
/// (column `j` is the image of `α_{j+1}`), which decides equality, and as the
/// permutation it induces on root indices.
#[derive(Clone)]
pub struct FiniteWeylElement {
    rs: Arc<RootSystem>,
    matrix: Vec<i64>,
    perm: Vec<u32>,
}

impl FiniteWeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let n = rs.rank();
        let matrix = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        let perm = (0..rs.roots().len() as u32).collect();
        FiniteWeylElement {
            rs: Arc::clone(rs),
            matrix,
            perm,
        }
    }

    /// The simple reflection `s_i` for a one-based index `i`.
    pub fn simple_reflection(rs: &Arc<RootSystem>, i: usize) -> Result<Self> {
        let idx = rs.simple_index(i)?;
        Ok(Self::reflection(rs, idx))
    }

    /// The linear reflection `s_α` for the root at index `root`.
    pub fn reflection(rs: &Arc<RootSystem>, root: usize) -> Self {
        let n = rs.rank();
        let alpha = rs.root(root).coords();
        let mut matrix = vec![0i64; n * n];
        for c in 0..n {
            let e = rs.unit(c);
            let p = rs.pairing_lattice(&e, root);
            for r in 0..n {
                matrix[r * n + c] = e[r] - p * alpha[r];
            }
        }
        Self::from_matrix(rs, matrix)
    }

    fn from_matrix(rs: &Arc<RootSystem>, matrix: Vec<i64>) -> Self {
        let n = rs.rank();
        let perm = rs
            .roots()
            .iter()
            .map(|root| {
                let img: Vec<i64> = (0..n)
                    .map(|r| (0..n).map(|c| matrix[r * n + c] * root.coords()[c]).sum())
                    .collect();
                rs.index_of(&img)
                    .expect("Weyl group elements permute the roots") as u32
            })
            .collect();
        FiniteWeylElement {
            rs: Arc::clone(rs),
            matrix,
            perm,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Row-major `rank × rank` matrix on simple-root coordinates.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        self.matrix
            .chunks(self.rs.rank())
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.rs.check_same(&other.rs)?;
        let n = self.rs.rank();
        let mut matrix = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                matrix[r * n + c] = (0..n)
                    .map(|k| self.matrix[r * n + k] * other.matrix[k * n + c])
                    .sum();
            }
        }
        let perm = other.perm.iter().map(|&j| self.perm[j as usize]).collect();
        Ok(FiniteWeylElement {
            rs: Arc::clone(&self.rs),
            matrix,
            perm,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rs.rank();
        let mut perm = vec![0u32; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        let mut matrix = vec![0i64; n * n];
        for c in 0..n {
            // index c is the simple root α_{c+1}
            let img = self.rs.root(perm[c] as usize).coords();
            for r in 0..n {
                matrix[r * n + c] = img[r];
            }
        }
        FiniteWeylElement {
            rs: Arc::clone(&self.rs),
            matrix,
            perm,
        }
    }

    /// Image of the root at index `idx`, as an index.
    pub fn act_root_index(&self, idx: usize) -> usize {
        self.perm[idx] as usize
    }

    pub fn act_root(&self, root: &Root) -> Result<Root> {
        let idx = self
            .rs
            .index_of(root.coords())
            .ok_or_else(|| Error::NotARoot(root.coords().to_vec()))?;
        Ok(self.rs.root(self.act_root_index(idx)).clone())
    }

    pub fn act_lattice(&self, x: &[i64]) -> Vec<i64> {
        let n = self.rs.rank();
        (0..n)
            .map(|r| (0..n).map(|c| self.matrix[r * n + c] * x[c]).sum())
            .collect()
    }

    pub fn act_vector(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.rs.rank();
        (0..n)
            .map(|r| {
                (0..n).fold(Rational::zero(), |acc, c| {
                    acc + x[c] * self.matrix[r * n + c]
                })
            })
            .collect()
    }

    /// Multiplicative order, by repeated multiplication.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = &p * self;
            k += 1;
        }
        k
    }
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.cartan_type() == other.rs.cartan_type() && self.matrix == other.matrix
    }
}

impl Eq for FiniteWeylElement {}

impl Hash for FiniteWeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteWeylElement")
            .field("type", &self.rs.cartan_type())
            .field("matrix", &self.matrix_rows())
            .finish()
    }
}

impl Serialize for FiniteWeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix_rows().serialize(serializer)
    }
}

/// Panics if the operands come from different root systems; use
/// [`FiniteWeylElement::multiply`] to get an error instead.
impl std::ops::Mul for &FiniteWeylElement {
    type Output = FiniteWeylElement;

    fn mul(self, rhs: &FiniteWeylElement) -> FiniteWeylElement {
        self.multiply(rhs).expect("operands share a root system")
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use super::*;
    use crate::root_system::build_root_system;

    fn rs(name: &str) -> Arc<RootSystem> {
        build_root_system(name.parse().unwrap())
    }

    fn closure(rs: &Arc<RootSystem>) -> Vec<FiniteWeylElement> {
        let gens: Vec<_> = (1..=rs.rank())
            .map(|i| FiniteWeylElement::simple_reflection(rs, i).unwrap())
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([FiniteWeylElement::identity(rs)]);
        seen.insert(FiniteWeylElement::identity(rs));
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let u = &w * g;
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
            out.push(w);
        }
        out
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = rs("A2");
        let s1 = FiniteWeylElement::simple_reflection(&a2, 1).unwrap();
        assert_eq!(
            s1.act_root(&Root::new(vec![1, 0])).unwrap().coords(),
            &[-1, 0]
        );
        assert_eq!(
            s1.act_root(&Root::new(vec![0, 1])).unwrap().coords(),
            &[1, 1]
        );
        let b2 = rs("B2");
        let s2 = FiniteWeylElement::simple_reflection(&b2, 2).unwrap();
        assert_eq!(
            s2.act_root(&Root::new(vec![1, 0])).unwrap().coords(),
            &[1, 2]
        );
        assert!(FiniteWeylElement::simple_reflection(&b2, 0).is_err());
        assert!(FiniteWeylElement::simple_reflection(&b2, 3).is_err());
    }

    #[test]
    fn group_laws() {
        let a2 = rs("A2");
        let s1 = FiniteWeylElement::simple_reflection(&a2, 1).unwrap();
        let s2 = FiniteWeylElement::simple_reflection(&a2, 2).unwrap();
        assert!((&s1 * &s1).is_identity());
        assert_eq!((&s1 * &s2).order(), 3);
        let g2 = rs("G2");
        let t1 = FiniteWeylElement::simple_reflection(&g2, 1).unwrap();
        let t2 = FiniteWeylElement::simple_reflection(&g2, 2).unwrap();
        assert_eq!((&t1 * &t2).order(), 6);
    }

    #[test]
    fn mixed_systems_rejected() {
        let s = FiniteWeylElement::simple_reflection(&rs("A2"), 1).unwrap();
        let t = FiniteWeylElement::simple_reflection(&rs("B2"), 1).unwrap();
        assert!(matches!(
            s.multiply(&t),
            Err(Error::MixedRootSystems { .. })
        ));
        // independently built copies of the same type are compatible
        let u = FiniteWeylElement::simple_reflection(&rs("A2"), 2).unwrap();
        assert!(s.multiply(&u).is_ok());
    }

    #[test]
    fn group_orders_by_closure() {
        for (name, order) in [
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A3", 24),
            ("B3", 48),
            ("C3", 48),
        ] {
            assert_eq!(closure(&rs(name)).len(), order, "{name}");
        }
    }

    #[test]
    fn elements_permute_roots_and_preserve_form() {
        for name in ["A2", "B2", "G2", "B3"] {
            let r = rs(name);
            for w in closure(&r) {
                let mut imgs: Vec<usize> =
                    (0..r.roots().len()).map(|i| w.act_root_index(i)).collect();
                for i in 0..r.roots().len() {
                    let a = r.root(i).coords();
                    assert_eq!(w.act_lattice(a), r.root(imgs[i]).coords());
                    assert_eq!(imgs[r.negate_index(i)], r.negate_index(imgs[i]));
                    for j in 0..r.roots().len() {
                        let b = r.root(j).coords();
                        assert_eq!(r.inner(&w.act_lattice(a), &w.act_lattice(b)), r.inner(a, b));
                    }
                }
                imgs.sort();
                imgs.dedup();
                assert_eq!(imgs.len(), r.roots().len());
                assert!((&w * &w.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn inverse_reverses_products() {
        let r = rs("B3");
        let all = closure(&r);
        for (i, u) in all.iter().enumerate().step_by(7) {
            let v = &all[(i * 13 + 5) % all.len()];
            assert_eq!((u * v).inverse(), &v.inverse() * &u.inverse());
        }
    }
}
