//! Exact Gaussian elimination over ℚ.

use num_rational::BigRational;
use num_traits::Zero;

pub(crate) struct Solution {
    pub rank: usize,
    pub consistent: bool,
    /// A particular solution with free variables set to zero.
    pub x: Vec<BigRational>,
}

impl Solution {
    pub fn nullity(&self) -> usize {
        self.x.len() - self.rank
    }
}

/// Solve `a·x = b` for a dense `rows × cols` matrix.
pub(crate) fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>, cols: usize) -> Solution {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for k in c..cols {
            a[r][k] = &a[r][k] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
                let t = &f * &b[r];
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let consistent = b[r..].iter().all(Zero::is_zero);
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Solution {
        rank: pivots.len(),
        consistent,
        x,
    }
}
