//! Smith normal form of integer matrices, with transformation certificate.
//!
//! Arithmetic is arbitrary precision: the transformation matrices of the
//! naive elimination can grow far beyond machine integers even for small
//! inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<i128>>;
pub type BigMatrix = Vec<Vec<BigInt>>;

/// `u * a * v == d`, with `u`, `v` unimodular and `d` diagonal with
/// nonnegative entries `d[0][0] | d[1][1] | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub d: BigMatrix,
    pub u: BigMatrix,
    pub v: BigMatrix,
}

impl Smith {
    /// Diagonal entries, including zeros, `min(rows, cols)` of them.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(self.d.first().map_or(0, |r| r.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn to_big(a: &IntMatrix) -> BigMatrix {
    a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> BigMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); m];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    *o += x * y;
                }
            }
            out
        })
        .collect()
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(a: &BigMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = x / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `target -= factor * source`, entrywise.
fn axpy(target: &mut [BigInt], source: &[BigInt], factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= s * factor;
        }
    }
}

/// `a / b` rounded to the nearest integer.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    let twice: BigInt = &r * 2;
    if (b.is_positive() && twice > *b) || (b.is_negative() && twice < *b) {
        q + 1
    } else {
        q
    }
}

/// Computes the Smith normal form of `a` together with the row and column
/// transformations.
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut d = to_big(a);
    let mut u = identity(rows);
    // Column operations are recorded as row operations on the transpose.
    let mut vt = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            vt.swap(t, pj);
            let p = d[t][t].clone();

            let mut clean = true;
            for i in t + 1..rows {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&d[i][t], &p);
                let (pivot_row, pivot_u) = (d[t].clone(), u[t].clone());
                axpy(&mut d[i], &pivot_row, &q);
                axpy(&mut u[i], &pivot_u, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&d[t][j], &p);
                for row in d.iter_mut() {
                    if !row[t].is_zero() {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                let pivot_v = vt[t].clone();
                axpy(&mut vt[j], &pivot_v, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // The pivot must divide every remaining entry.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d[i][j].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let (row_i, u_i) = (d[i].clone(), u[i].clone());
                    let minus_one = -BigInt::one();
                    axpy(&mut d[t], &row_i, &minus_one);
                    axpy(&mut u[t], &u_i, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }

    let v = (0..cols)
        .map(|i| (0..cols).map(|j| vt[j][i].clone()).collect())
        .collect();
    Smith { d, u, v }
}

/// Diagonal entries of the Smith form that exceed one, as machine integers;
/// `None` if one does not fit.
pub fn torsion_coefficients(s: &Smith) -> Option<Vec<u64>> {
    s.diagonal()
        .iter()
        .filter(|x| *x > &BigInt::one())
        .map(|x| u64::try_from(x).ok())
        .collect()
}
