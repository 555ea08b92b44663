//! Permutations of the four vertices of a tetrahedron.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A bijection of `{0, 1, 2, 3}`, stored as its image array.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm4([u8; 4]);

/// The six edges of a tetrahedron, by vertex pair.
pub const EDGE_VERTICES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Edge number of the edge joining vertices `a` and `b`.
pub fn edge_number(a: usize, b: usize) -> usize {
    debug_assert!(a != b && a < 4 && b < 4);
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

/// The two vertices not in `{a, b}`, in increasing order.
pub fn complement_pair(a: usize, b: usize) -> [usize; 2] {
    let mut out = [0; 2];
    let mut k = 0;
    for v in 0..4 {
        if v != a && v != b {
            out[k] = v;
            k += 1;
        }
    }
    out
}

/// The unique vertex not in `{a, b, c}`.
pub fn fourth_vertex(a: usize, b: usize, c: usize) -> usize {
    6 - a - b - c
}

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its images. Returns `None` unless the
    /// images are a bijection of `{0,1,2,3}`.
    pub fn new(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// Permutation that sends `a0->b0, a1->b1, a2->b2`; the fourth vertex goes
    /// to the fourth vertex.
    pub fn from_three(a: [usize; 3], b: [usize; 3]) -> Perm4 {
        let mut img = [0u8; 4];
        for k in 0..3 {
            img[a[k]] = b[k] as u8;
        }
        img[fourth_vertex(a[0], a[1], a[2])] = fourth_vertex(b[0], b[1], b[2]) as u8;
        Perm4::new(img).expect("from_three on non-distinct vertices")
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm4(inv)
    }

    /// `self.compose(other)` applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[other.0[i] as usize];
        }
        Perm4(out)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..256u32).filter_map(|code| {
            let img = [
                (code & 3) as u8,
                ((code >> 2) & 3) as u8,
                ((code >> 4) & 3) as u8,
                ((code >> 6) & 3) as u8,
            ];
            Perm4::new(img)
        })
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn there_are_24_permutations() {
        assert_eq!(Perm4::all().count(), 24);
        assert_eq!(Perm4::all().filter(|p| p.sign() == 1).count(), 12);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm4::new([0, 0, 1, 2]).is_none());
        assert!(Perm4::new([0, 1, 2, 4]).is_none());
    }

    #[test]
    fn inverse_and_compose() {
        for p in Perm4::all() {
            assert_eq!(p.compose(&p.inverse()), Perm4::IDENTITY);
            for q in Perm4::all() {
                assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
            }
        }
    }

    #[test]
    fn edge_numbers_round_trip() {
        for (e, [a, b]) in EDGE_VERTICES.iter().enumerate() {
            assert_eq!(edge_number(*a, *b), e);
            assert_eq!(edge_number(*b, *a), e);
        }
    }

    #[test]
    fn from_three_fixes_fourth() {
        let p = Perm4::from_three([0, 1, 2], [1, 2, 0]);
        assert_eq!(p.apply(3), 3);
        assert_eq!(p.apply(0), 1);
    }
}
