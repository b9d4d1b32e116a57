//! Small dense exact solver used for the interior point and for alcove
//! vertices.

use num_traits::Zero;

use crate::root_system::Rational;

/// Solves the square system `a·x = b` by Gauss–Jordan elimination over the
/// rationals. Returns `None` when `a` is singular.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in col..n {
            a[col][c] *= inv;
        }
        b[col] *= inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
                let v = b[col];
                b[r] -= f * v;
            }
        }
    }
    Some(b)
}
