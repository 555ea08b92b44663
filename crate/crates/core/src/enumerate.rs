//! Vertex and fundamental solutions of matching systems.
//!
//! Vertices are found by the double description method, inserting one
//! equation at a time and discarding inadmissible rays as soon as they
//! appear. Two rays are combined only when they span a 2-face of the
//! current cone, checked exactly by a rank computation on their joint
//! support.
//!
//! Fundamental solutions are the minimal nonzero admissible solutions.
//! Since admissibility is inherited by smaller vectors, an admissible
//! solution is a sum of two nonzero admissible solutions exactly when some
//! nonzero solution lies strictly below it, so the fundamental set is the
//! admissible part of the Hilbert basis of the whole solution monoid. It is
//! computed with the Contejean-Devie completion procedure.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::normal::MatchingSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of rays or candidates held at once.
    pub max_solutions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_solutions: 100_000 }
    }
}

fn too_many(what: &str, limit: usize) -> Error {
    Error::ResourceExceeded(format!("{what} exceeded {limit}"))
}

struct Ray {
    x: Vec<i128>,
    support: Vec<u64>,
}

fn support_of(x: &[i128]) -> Vec<u64> {
    let mut s = vec![0u64; x.len().div_ceil(64)];
    for (i, &v) in x.iter().enumerate() {
        if v != 0 {
            s[i / 64] |= 1 << (i % 64);
        }
    }
    s
}

fn bits(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter()
        .enumerate()
        .flat_map(|(w, &word)| (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| 64 * w + b))
}

/// Exact rank of an integer matrix.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    rank_i128(rows).unwrap_or_else(|| rank_big(rows))
}

fn rank_i128(rows: &[Vec<i128>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).filter(|&i| m[i][c] != 0).min_by_key(|&i| m[i][c].abs()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[rank][c], m[i][c]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            let mut content = 0i128;
            for j in c..cols {
                let v = m[i][j].checked_mul(fa)?.checked_sub(m[rank][j].checked_mul(fb)?)?;
                m[i][j] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for j in c..cols {
                    m[i][j] /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[rank][c].clone(), m[i][c].clone());
            for j in c..cols {
                let v = &m[i][j] * &a - &m[rank][j] * &b;
                m[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

fn primitive(mut x: Vec<i128>) -> Vec<i128> {
    let g = x.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        for v in x.iter_mut() {
            *v /= g;
        }
    }
    x
}

fn dot(a: &[i64], x: &[i128]) -> Option<i128> {
    a.iter()
        .zip(x)
        .filter(|(&c, _)| c != 0)
        .try_fold(0i128, |acc, (&c, &v)| acc.checked_add((c as i128).checked_mul(v)?))
}

fn to_u64(x: &[i128]) -> Result<Vec<u64>> {
    x.iter()
        .map(|&v| u64::try_from(v).map_err(|_| Error::ResourceExceeded("coordinate does not fit in 64 bits".into())))
        .collect()
}

/// Admissible extreme rays of `{x >= 0 : rows * x = 0}`, each as its
/// smallest integer vector, sorted lexicographically.
pub fn vertex_solutions(sys: &MatchingSystem, limits: Limits) -> Result<Vec<Vec<u64>>> {
    let n = sys.dim();
    let blocks = sys.quad_blocks();
    let admissible = |s: &[u64]| {
        blocks
            .iter()
            .all(|b| b.iter().filter(|&&i| s[i / 64] >> (i % 64) & 1 == 1).count() <= 1)
    };
    let mut rays: Vec<Ray> = (0..n)
        .map(|i| {
            let mut x = vec![0i128; n];
            x[i] = 1;
            Ray { support: support_of(&x), x }
        })
        .collect();
    let mut order: Vec<&Vec<i64>> = sys.rows.iter().collect();
    // Equations sorted by their last column keep the intermediate ray
    // sets small.
    order.sort_by_key(|r| (r.iter().rposition(|&x| x != 0), r.iter().position(|&x| x != 0)));
    let mut processed: Vec<Vec<i128>> = vec![];
    for row in order {
        let values: Vec<i128> = rays
            .iter()
            .map(|r| dot(row, &r.x).ok_or_else(|| Error::ResourceExceeded("arithmetic overflow".into())))
            .collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        let mut next: Vec<Ray> = vec![];
        let bound = rank(&processed) + 2;
        for &p in &pos {
            for &q in &neg {
                let joint: Vec<u64> = rays[p].support.iter().zip(&rays[q].support).map(|(a, b)| a | b).collect();
                let size = joint.iter().map(|w| w.count_ones() as usize).sum::<usize>();
                if size > bound || !admissible(&joint) {
                    continue;
                }
                // Any other current ray supported inside S rules out a 2-face.
                let inside = |r: &Ray| r.support.iter().zip(&joint).all(|(a, b)| a & !b == 0);
                if rays.iter().enumerate().any(|(i, r)| i != p && i != q && inside(r)) {
                    continue;
                }
                // p and q span a 2-face iff the processed equations have
                // rank |S| - 2 on the joint support S.
                let cols: Vec<usize> = bits(&joint).collect();
                let sub: Vec<Vec<i128>> = processed
                    .iter()
                    .filter(|r| cols.iter().any(|&c| r[c] != 0))
                    .map(|r| cols.iter().map(|&c| r[c]).collect())
                    .collect();
                if sub.len() + 2 < cols.len() || rank(&sub) + 2 != cols.len() {
                    continue;
                }
                let (a, b) = (values[p], -values[q]);
                let x: Option<Vec<i128>> = rays[p]
                    .x
                    .iter()
                    .zip(&rays[q].x)
                    .map(|(&u, &v)| b.checked_mul(u)?.checked_add(a.checked_mul(v)?))
                    .collect();
                let x = primitive(x.ok_or_else(|| Error::ResourceExceeded("arithmetic overflow".into()))?);
                next.push(Ray { support: joint, x });
                if next.len() > limits.max_solutions {
                    return Err(too_many("vertex enumeration rays", limits.max_solutions));
                }
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            if values[i] == 0 {
                next.push(r);
            }
        }
        if next.len() > limits.max_solutions {
            return Err(too_many("vertex enumeration rays", limits.max_solutions));
        }
        rays = next;
        processed.push(row.iter().map(|&c| c as i128).collect());
    }
    let mut out: Vec<Vec<u64>> = rays.iter().map(|r| to_u64(&r.x)).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Minimal nonzero admissible solutions of `rows * x = 0`, `x >= 0`,
/// sorted lexicographically.
///
/// The admissible part of the solution cone is the union of its maximal
/// admissible faces, each spanned by a maximal family of compatible vertex
/// solutions. A minimal element of a face is minimal in the whole cone, so
/// the bases of the faces are computed separately and merged.
pub fn fundamental_solutions(sys: &MatchingSystem, limits: Limits) -> Result<Vec<Vec<u64>>> {
    let vertices = vertex_solutions(sys, limits)?;
    let blocks = sys.quad_blocks();
    let quad_of = |v: &[u64]| -> Vec<Option<usize>> {
        blocks.iter().map(|b| (0..3).find(|&i| v[b[i]] > 0)).collect()
    };
    let types: Vec<Vec<Option<usize>>> = vertices.iter().map(|v| quad_of(v)).collect();
    let compatible = |i: usize, j: usize| {
        types[i].iter().zip(&types[j]).all(|(a, b)| a.is_none() || b.is_none() || a == b)
    };
    let k = vertices.len();
    let adj: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| i != j && compatible(i, j)).collect()).collect();
    let mut faces = vec![];
    maximal_cliques(&adj, vec![], (0..k).collect(), vec![], &mut faces, limits)?;
    let mut out: HashSet<Vec<u64>> = HashSet::new();
    for face in faces {
        let gens: Vec<&Vec<u64>> = face.iter().map(|&i| &vertices[i]).collect();
        out.extend(face_basis(&gens, limits)?);
        if out.len() > limits.max_solutions {
            return Err(too_many("fundamental solutions", limits.max_solutions));
        }
    }
    let mut out: Vec<Vec<u64>> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

fn maximal_cliques(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limits: Limits,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
            if out.len() > limits.max_solutions {
                return Err(too_many("admissible faces", limits.max_solutions));
            }
        }
        return Ok(());
    }
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
    let (mut p, mut x) = (p, x);
    for v in p.clone().into_iter().filter(|&v| !adj[pivot][v]) {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        maximal_cliques(adj, r2, p2, x2, out, limits)?;
        p.retain(|&u| u != v);
        x.push(v);
    }
    Ok(())
}

/// Basis of the monoid of lattice points in the cone spanned by `face`.
///
/// Any element `x` lies in the cone of some linearly independent subset
/// `B` of the generators. If a coefficient of `x` over `B` is at least one,
/// subtracting that generator leaves a smaller lattice point of the cone,
/// so basis elements other than the generators lie in the half-open
/// parallelepiped of some `B`. Those points are collected for every
/// maximal independent `B` and the reducible ones dropped.
fn face_basis(face: &[&Vec<u64>], limits: Limits) -> Result<Vec<Vec<u64>>> {
    let rows: Vec<Vec<i128>> = face.iter().map(|v| v.iter().map(|&x| x as i128).collect()).collect();
    let d = rank(&rows);
    let mut candidates: HashSet<Vec<u64>> = face.iter().map(|v| (*v).clone()).collect();
    let mut chosen = vec![];
    let mut budget = limits.max_solutions;
    independent_sets(&rows, d, 0, &mut chosen, &mut budget, &mut |set| {
        let gens: Vec<&Vec<u64>> = set.iter().map(|&i| face[i]).collect();
        candidates.extend(parallelepiped_points(&gens, limits)?);
        if candidates.len() > limits.max_solutions {
            return Err(too_many("fundamental solution candidates", limits.max_solutions));
        }
        Ok(())
    })?;
    let mut candidates: Vec<Vec<u64>> = candidates.into_iter().collect();
    candidates.sort_by_key(|x| (x.iter().sum::<u64>(), x.clone()));
    let mut basis: Vec<Vec<u64>> = vec![];
    for x in candidates {
        if !basis.iter().any(|b| b.iter().zip(&x).all(|(p, q)| p <= q)) {
            basis.push(x);
        }
    }
    Ok(basis)
}

fn independent_sets(
    rows: &[Vec<i128>],
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    budget: &mut usize,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if chosen.len() == d {
        if *budget == 0 {
            return Err(Error::ResourceExceeded("too many simplicial cones in a face".into()));
        }
        *budget -= 1;
        return visit(chosen);
    }
    for i in start..rows.len() {
        if rows.len() - i < d - chosen.len() {
            break;
        }
        chosen.push(i);
        let sub: Vec<Vec<i128>> = chosen.iter().map(|&j| rows[j].clone()).collect();
        if rank(&sub) == chosen.len() {
            independent_sets(rows, d, i + 1, chosen, budget, visit)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// Nonzero lattice points `sum c_i g_i` with every `c_i` in `[0, 1)`, for
/// linearly independent generators `g_i`.
fn parallelepiped_points(gens: &[&Vec<u64>], limits: Limits) -> Result<Vec<Vec<u64>>> {
    let d = gens.len();
    let n = gens[0].len();
    // Rows on which the generators are already independent.
    let mut picked: Vec<usize> = vec![];
    let mut picked_rows: Vec<Vec<i128>> = vec![];
    for j in 0..n {
        if picked.len() == d {
            break;
        }
        let row: Vec<i128> = gens.iter().map(|g| g[j] as i128).collect();
        picked_rows.push(row);
        if rank(&picked_rows) == picked_rows.len() {
            picked.push(j);
        } else {
            picked_rows.pop();
        }
    }
    let square: Vec<Vec<BigInt>> = picked_rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    // Coset representatives of Z^d modulo the column lattice, read off a
    // lower triangular Hermite form.
    let mut h = square.clone();
    for r in 0..d {
        loop {
            let nonzero: Vec<usize> = (r..d).filter(|&c| !h[r][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&c) = nonzero.first() {
                    for row in h.iter_mut() {
                        row.swap(r, c);
                    }
                }
                break;
            }
            let c0 = *nonzero.iter().min_by_key(|&&c| h[r][c].magnitude().clone()).unwrap();
            for &c in &nonzero {
                if c != c0 {
                    let q = &h[r][c] / &h[r][c0];
                    for row in h.iter_mut() {
                        let v = &row[c] - &q * &row[c0];
                        row[c] = v;
                    }
                }
            }
        }
    }
    let diag: Vec<u64> = (0..d)
        .map(|r| u64::try_from(h[r][r].magnitude().clone()).map_err(|_| too_many("parallelepiped size", limits.max_solutions)))
        .collect::<Result<_>>()?;
    let count = diag.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x));
    if count.is_none_or(|c| c > limits.max_solutions as u64) {
        return Err(too_many("parallelepiped size", limits.max_solutions));
    }
    // Fraction-free Gauss-Jordan: row i of `inv` over `den[i]` is row i of
    // the inverse of the square block.
    let mut aug: Vec<Vec<BigInt>> = square
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..d).map(|j| BigInt::from((i == j) as i32)));
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d).find(|&i| !aug[i][c].is_zero()).expect("square block is nonsingular");
        aug.swap(c, p);
        for i in 0..d {
            if i != c && !aug[i][c].is_zero() {
                let (a, b) = (aug[c][c].clone(), aug[i][c].clone());
                let pivot = aug[c].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot) {
                    *x = &*x * &a - y * &b;
                }
            }
        }
    }
    let mut den = vec![];
    let mut inv = vec![];
    for (i, row) in aug.into_iter().enumerate() {
        let sign = if row[i] < BigInt::zero() { BigInt::from(-1) } else { BigInt::from(1) };
        den.push(&row[i] * &sign);
        inv.push(row[d..].iter().map(|x| x * &sign).collect::<Vec<BigInt>>());
    }
    let lcm = den.iter().fold(BigInt::from(1), |l, x| l.lcm(x));
    let mut out = vec![];
    let mut y = vec![0u64; d];
    loop {
        let mut total = vec![BigInt::zero(); n];
        for i in 0..d {
            let num: BigInt = inv[i].iter().zip(&y).map(|(a, &b)| a * BigInt::from(b)).sum();
            let frac = num.mod_floor(&den[i]) * (&lcm / &den[i]);
            if !frac.is_zero() {
                for (t, &g) in total.iter_mut().zip(gens[i].iter()) {
                    *t += &frac * BigInt::from(g);
                }
            }
        }
        if total.iter().any(|t| !t.is_zero()) && total.iter().all(|t| t.is_multiple_of(&lcm)) {
            let x: Option<Vec<u64>> = total.iter().map(|t| u64::try_from(t / &lcm).ok()).collect();
            out.push(x.ok_or_else(|| Error::ResourceExceeded("coordinate does not fit in 64 bits".into()))?);
        }
        let mut k = 0;
        while k < d {
            y[k] += 1;
            if y[k] < diag[k] {
                break;
            }
            y[k] = 0;
            k += 1;
        }
        if k == d {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::normal::{quad_matching_system, standard_matching_system, Coords};

    fn system(rows: Vec<Vec<i64>>, tets: usize, coords: Coords) -> MatchingSystem {
        MatchingSystem { coords, tets, rows }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(rank(&[]), 0);
        let big = i128::MAX / 3;
        assert_eq!(rank(&[vec![big, 1], vec![1, big]]), 2);
    }

    #[test]
    fn lone_tetrahedron_standard_and_quad() {
        let t = fixtures::lone_tetrahedron();
        let s = standard_matching_system(&t);
        let v = vertex_solutions(&s, Limits::default()).unwrap();
        assert_eq!(v.len(), 7);
        assert_eq!(fundamental_solutions(&s, Limits::default()).unwrap(), v);
        let q = quad_matching_system(&t);
        assert_eq!(vertex_solutions(&q, Limits::default()).unwrap().len(), 3);
    }

    #[test]
    fn diagonal_cone() {
        // One quad block of size three, so no admissibility effect with two
        // free coordinates beyond it: a = b on coordinates 0 and 1.
        let s = system(vec![vec![1, -1, 0]], 1, Coords::Quad);
        assert_eq!(fundamental_solutions(&s, Limits::default()).unwrap(), vec![vec![0, 0, 1]]);
        let s = system(vec![vec![1, -1, 0, 0, 0, 0, 0]], 1, Coords::Standard);
        let f = fundamental_solutions(&s, Limits::default()).unwrap();
        assert!(f.contains(&vec![1, 1, 0, 0, 0, 0, 0]));
        assert!(!f.iter().any(|x| x[0] == 1 && x[1] == 0));
    }

    #[test]
    fn hilbert_basis_is_larger_than_vertex_set() {
        // x0 + x1 = 2 x2: vertices (2,0,1) and (0,2,1), plus (1,1,1).
        let s = system(vec![vec![1, 1, -2, 0, 0, 0, 0]], 1, Coords::Standard);
        let v = vertex_solutions(&s, Limits::default()).unwrap();
        let f = fundamental_solutions(&s, Limits::default()).unwrap();
        assert!(v.contains(&vec![2, 0, 1, 0, 0, 0, 0]) && v.contains(&vec![0, 2, 1, 0, 0, 0, 0]));
        assert!(!v.contains(&vec![1, 1, 1, 0, 0, 0, 0]));
        assert!(f.contains(&vec![1, 1, 1, 0, 0, 0, 0]));
        assert_eq!(v.len(), 6);
        assert_eq!(f.len(), 7);
    }

    #[test]
    fn budget_is_enforced() {
        let s = standard_matching_system(&fixtures::torus_cross_interval());
        let r = vertex_solutions(&s, Limits { max_solutions: 5 });
        assert!(matches!(r, Err(Error::ResourceExceeded(_))));
    }
}
