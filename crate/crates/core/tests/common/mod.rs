//! Shared helpers for integration tests: random triangulations and
//! brute-force enumeration oracles.
#![allow(dead_code)]

use cusp_core::normal::MatchingSystem;
use cusp_core::{Perm4, Triangulation};
use rand::seq::SliceRandom;
use rand::Rng;

fn all_perms() -> Vec<Perm4> {
    let mut out = vec![];
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    if let Some(p) = Perm4::new([a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// A connected valid triangulation with `1..=max_tets` tetrahedra and
/// random face pairings; some faces may stay unglued.
pub fn random_triangulation<R: Rng>(rng: &mut R, max_tets: usize, glue_prob: f64) -> Triangulation {
    let perms = all_perms();
    loop {
        let n = rng.gen_range(1..=max_tets);
        let mut faces: Vec<(usize, usize)> = (0..n).flat_map(|t| (0..4).map(move |f| (t, f))).collect();
        faces.shuffle(rng);
        let mut list = vec![];
        while faces.len() >= 2 && rng.gen_bool(glue_prob) {
            let (t, f) = faces.pop().unwrap();
            let (u, g) = faces.pop().unwrap();
            let p = *perms.iter().filter(|p| p.apply(f) == g).collect::<Vec<_>>().choose(rng).unwrap();
            list.push((t, f, u, *p));
        }
        if let Ok(tri) = Triangulation::from_gluings(n, &list) {
            if tri.is_connected() {
                return tri;
            }
        }
    }
}

/// A random orientable triangulation in which every face is glued.
pub fn random_closed_orientable<R: Rng>(rng: &mut R, max_tets: usize) -> Triangulation {
    loop {
        let t = random_triangulation(rng, max_tets, 1.0);
        if t.is_orientable() && !t.has_boundary_faces() {
            return t;
        }
    }
}

fn nullspace(rows: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    // Reduced row echelon form over the rationals, kept integral row by row.
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            // x_f = L, x_pivot = -m[k][f] * L / m[k][pivot], L = lcm of pivots.
            let l = pivots.iter().enumerate().fold(1i128, |l, (k, &pc)| lcm(l, m[k][pc].abs()));
            let mut v = vec![0i128; cols];
            v[f] = l;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[k][f] * (l / m[k][pc]);
            }
            v
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// Extreme rays by support: a support set S carries an extreme ray exactly
/// when the equations restricted to S have a one-dimensional kernel spanned
/// by a vector positive on all of S.
pub fn brute_vertices(sys: &MatchingSystem) -> Vec<Vec<u64>> {
    let n = sys.dim();
    let blocks = sys.quad_blocks();
    let mut out = vec![];
    for mask in 1u64..(1u64 << n) {
        if blocks.iter().any(|b| b.iter().filter(|&&i| mask >> i & 1 == 1).count() > 1) {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let rows: Vec<Vec<i128>> = sys.rows.iter().map(|r| cols.iter().map(|&c| r[c] as i128).collect()).collect();
        let kernel = nullspace(&rows, cols.len());
        if kernel.len() != 1 {
            continue;
        }
        let v = &kernel[0];
        let sign = if v[0] < 0 { -1 } else { 1 };
        if v.iter().any(|&x| x * sign <= 0) {
            continue;
        }
        let g = v.iter().fold(0i128, |g, &x| gcd(g, x));
        let mut x = vec![0u64; n];
        for (k, &c) in cols.iter().enumerate() {
            x[c] = (v[k] * sign / g) as u64;
        }
        out.push(x);
    }
    out.sort();
    out
}

/// Minimal nonzero admissible solutions with every entry at most `bound`,
/// by scanning the box in order of increasing coordinate sum.
pub fn brute_fundamental(sys: &MatchingSystem, bound: u64) -> Vec<Vec<u64>> {
    let n = sys.dim();
    let rows: Vec<Vec<i64>> = sys.rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let block_of: Vec<Option<[usize; 3]>> =
        (0..n).map(|i| sys.quad_blocks().into_iter().find(|b| b.contains(&i))).collect();
    let mut found: Vec<Vec<u64>> = vec![];
    for total in 1..=bound * n as u64 {
        let mut x = vec![0u64; n];
        let mut partial = vec![0i64; rows.len()];
        let mut fresh = vec![];
        scan(0, total, bound, &rows, &block_of, &mut x, &mut partial, &found, &mut fresh);
        found.extend(fresh);
    }
    found.sort();
    found
}

#[allow(clippy::too_many_arguments)]
fn scan(
    i: usize,
    left: u64,
    bound: u64,
    rows: &[Vec<i64>],
    block_of: &[Option<[usize; 3]>],
    x: &mut Vec<u64>,
    partial: &mut Vec<i64>,
    found: &[Vec<u64>],
    fresh: &mut Vec<Vec<u64>>,
) {
    let n = x.len();
    // Each equation must still be able to reach zero using the remaining
    // coordinates i..n with values in [0, bound].
    for (r, row) in rows.iter().enumerate() {
        let (mut lo, mut hi) = (partial[r], partial[r]);
        for &c in &row[i..] {
            let reach = c * bound.min(left) as i64;
            if reach > 0 {
                hi += reach;
            } else {
                lo += reach;
            }
        }
        if lo > 0 || hi < 0 {
            return;
        }
    }
    if i == n {
        if left == 0 && !found.iter().any(|f| f.iter().zip(x.iter()).all(|(a, b)| a <= b)) {
            fresh.push(x.clone());
        }
        return;
    }
    let max = if let Some(b) = block_of[i] {
        if b.iter().any(|&j| j < i && x[j] > 0) {
            0
        } else {
            bound.min(left)
        }
    } else {
        bound.min(left)
    };
    if i == n - 1 && left > max {
        return;
    }
    for v in 0..=max {
        x[i] = v;
        for (r, row) in rows.iter().enumerate() {
            partial[r] += row[i] * v as i64;
        }
        scan(i + 1, left - v, bound, rows, block_of, x, partial, found, fresh);
        for (r, row) in rows.iter().enumerate() {
            partial[r] -= row[i] * v as i64;
        }
    }
    x[i] = 0;
}
