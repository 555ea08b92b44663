//! First homology, of the manifold and of its boundary.
//!
//! H1 of the manifold is computed from the dual cell structure: one 0-cell
//! per tetrahedron, one 1-cell per interior triangle, one 2-cell per
//! interior edge. This complex is a spine of the manifold with vertex
//! neighbourhoods removed, so ideal and finite triangulations are handled
//! alike.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, torsion_coefficients, IntMatrix};
use crate::triangulation::Triangulation;

/// A finitely generated abelian group `Z^rank + Z/t1 + ... + Z/tk` with
/// `t1 | t2 | ... | tk` and every `ti >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of an integer matrix acting on column vectors: the group
    /// `Z^rows / image`.
    pub fn cokernel(m: &IntMatrix, rows: usize) -> Result<Self> {
        if m.is_empty() || m[0].is_empty() {
            return Ok(HomologyGroup::free(rows));
        }
        let s = smith_normal_form(m);
        let torsion = torsion_coefficients(&s)
            .ok_or_else(|| Error::ResourceExceeded("torsion coefficient exceeds 64 bits".into()))?;
        Ok(HomologyGroup {
            rank: rows - s.rank(),
            torsion,
        })
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("{r} Z")),
        }
        for t in &self.torsion {
            parts.push(format!("Z_{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Interior triangles, numbered densely, with the embedding used to orient
/// each one's dual edge (from the tetrahedron of that embedding outward).
pub(crate) fn interior_triangles(tri: &Triangulation) -> (Vec<Option<usize>>, Vec<(usize, usize)>) {
    let sk = tri.skeleton();
    let mut index = vec![None; sk.triangles.len()];
    let mut oriented = vec![];
    for (i, class) in sk.triangles.iter().enumerate() {
        if !class.is_boundary() {
            index[i] = Some(oriented.len());
            oriented.push(class.embeddings[0]);
        }
    }
    (index, oriented)
}

/// The boundary map from dual 2-cells (interior edges) to dual 1-cells
/// (interior triangles), as a matrix with one row per interior triangle and
/// one column per interior edge.
pub fn dual_boundary_matrix(tri: &Triangulation) -> IntMatrix {
    let sk = tri.skeleton();
    let (tindex, oriented) = interior_triangles(tri);
    let interior_edges: Vec<usize> = (0..sk.edges.len()).filter(|&e| !sk.edges[e].boundary).collect();
    let mut m = vec![vec![0i128; interior_edges.len()]; oriented.len()];
    for (col, &e) in interior_edges.iter().enumerate() {
        let (tet, en) = sk.edges[e].embeddings[0];
        let ring = tri.edge_ring(tet, en).expect("interior edge has a ring");
        for (t, p) in ring {
            let face = p.apply(2);
            let class = sk.triangle_of[t][face];
            let row = tindex[class].expect("ring crosses interior faces");
            let sign = if oriented[row] == (t, face) { 1 } else { -1 };
            m[row][col] += sign;
        }
    }
    m
}

/// H1 of the manifold (ideal vertices removed, boundary kept).
pub fn homology_h1(tri: &Triangulation) -> Result<HomologyGroup> {
    let (_, oriented) = interior_triangles(tri);
    let f = oriented.len();
    let components = tri.skeleton().component_count;
    // rank of the dual edge-to-vertex boundary map
    let rank_d1 = tri.size() - components;
    let d2 = dual_boundary_matrix(tri);
    let coker = HomologyGroup::cokernel(&d2, f)?;
    // ker d1 is a direct summand of C1 containing im d2, so only the free
    // rank needs adjusting.
    Ok(HomologyGroup {
        rank: coker.rank - rank_d1,
        torsion: coker.torsion,
    })
}

/// Rank of a 0/1 matrix over Z/2, rows given as bit vectors.
pub(crate) fn rank_mod2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let words = rows.first().map_or(0, |r| r.len());
    for bit in 0..words * 64 {
        let (w, b) = (bit / 64, bit % 64);
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of H1(B; Z/2) for each boundary component B, from the
/// cellular chain complex of the boundary triangulation.
pub fn boundary_homology_z2(tri: &Triangulation) -> Vec<usize> {
    let sk = tri.skeleton();
    tri.boundary_components()
        .iter()
        .map(|bc| {
            let eidx = |e: usize| bc.edges.binary_search(&e).expect("edge of this component");
            let vidx = |v: usize| bc.vertices.binary_search(&v).expect("vertex of this component");
            let words_e = bc.edges.len().div_ceil(64).max(1);
            let words_v = bc.vertices.len().div_ceil(64).max(1);
            // d1: edges -> vertices, one row per edge
            let mut d1 = vec![vec![0u64; words_v]; bc.edges.len()];
            for (i, &e) in bc.edges.iter().enumerate() {
                let [a, b] = sk.edges[e].ends;
                for v in [vidx(a), vidx(b)] {
                    d1[i][v / 64] ^= 1 << (v % 64);
                }
            }
            // d2: triangles -> edges, one row per triangle
            let mut d2 = vec![vec![0u64; words_e]; bc.triangles.len()];
            for (i, &(t, f)) in bc.triangles.iter().enumerate() {
                for (a, b) in crate::triangulation::face_edges(f) {
                    let e = eidx(sk.edge_of[t][crate::perm::edge_number(a, b)]);
                    d2[i][e / 64] ^= 1 << (e % 64);
                }
            }
            bc.edges.len() - rank_mod2(d1) - rank_mod2(d2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::free(0).to_string(), "0");
        let g = HomologyGroup { rank: 2, torsion: vec![2, 6] };
        assert_eq!(g.to_string(), "2 Z + Z_2 + Z_6");
    }

    #[test]
    fn ball_is_trivial() {
        assert!(homology_h1(&fixtures::lone_tetrahedron()).unwrap().is_trivial());
        assert_eq!(boundary_homology_z2(&fixtures::lone_tetrahedron()), vec![0]);
    }

    #[test]
    fn figure_eight_is_z() {
        assert_eq!(homology_h1(&fixtures::figure_eight()).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn torus_cross_interval_is_z2() {
        let t = fixtures::torus_cross_interval();
        assert_eq!(homology_h1(&t).unwrap(), HomologyGroup::free(2));
        assert_eq!(boundary_homology_z2(&t), vec![2, 2]);
    }
}
