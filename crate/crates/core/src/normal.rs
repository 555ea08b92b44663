//! Normal surface coordinates and matching equations.
//!
//! Standard coordinates have seven entries per tetrahedron: the triangle
//! types at vertices 0..3, then the three quadrilateral types. Quad type
//! `q` separates the vertex pair `QUAD_PAIRS[q][0]` (which contains vertex
//! 0) from `QUAD_PAIRS[q][1]`. Quad coordinates keep only the last three.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{complement_pair, edge_number, EDGE_VERTICES};
use crate::triangulation::Triangulation;

pub const QUAD_PAIRS: [[[usize; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

/// The quad type separating `a` and `b` from the other two vertices.
pub fn quad_separating(a: usize, b: usize) -> usize {
    let x = if a == 0 { b } else if b == 0 { a } else { 6 - a - b };
    x - 1
}

/// The quad types whose discs cross edge `{a, b}`.
pub fn quads_crossing(a: usize, b: usize) -> [usize; 2] {
    let [c, d] = complement_pair(a, b);
    [quad_separating(a, c), quad_separating(a, d)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coords {
    Standard,
    Quad,
}

impl Coords {
    pub fn per_tet(self) -> usize {
        match self {
            Coords::Standard => 7,
            Coords::Quad => 3,
        }
    }

    /// Offset of the quad block within a tetrahedron's entries.
    pub fn quad_offset(self) -> usize {
        match self {
            Coords::Standard => 4,
            Coords::Quad => 0,
        }
    }
}

/// A vector of normal coordinates together with the triangulation it
/// refers to (by hash).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalVector {
    pub coords: Coords,
    pub entries: Vec<u64>,
    pub triangulation: String,
}

impl NormalVector {
    pub fn new(tri: &Triangulation, coords: Coords, entries: Vec<u64>) -> Self {
        NormalVector {
            coords,
            entries,
            triangulation: triangulation_hash(tri),
        }
    }

    pub fn tets(&self) -> usize {
        self.entries.len() / self.coords.per_tet()
    }

    pub fn quads(&self, tet: usize) -> [u64; 3] {
        let o = self.coords.per_tet() * tet + self.coords.quad_offset();
        [self.entries[o], self.entries[o + 1], self.entries[o + 2]]
    }

    /// Triangle coordinate; panics in quad coordinates.
    pub fn triangle(&self, tet: usize, vertex: usize) -> u64 {
        assert_eq!(self.coords, Coords::Standard);
        self.entries[7 * tet + vertex]
    }

    pub fn quad(&self, tet: usize, q: usize) -> u64 {
        self.quads(tet)[q]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_admissible(&self) -> bool {
        (0..self.tets()).all(|t| self.quads(t).iter().filter(|&&x| x > 0).count() <= 1)
    }

    /// The quad type used in `tet`, if any.
    pub fn quad_type(&self, tet: usize) -> Option<(usize, u64)> {
        self.quads(tet).iter().enumerate().find(|x| *x.1 > 0).map(|(q, &n)| (q, n))
    }

    /// Number of points where the surface meets edge `{a, b}` of `tet`.
    pub fn edge_weight(&self, tet: usize, a: usize, b: usize) -> u64 {
        let q: u64 = quads_crossing(a, b).iter().map(|&q| self.quad(tet, q)).sum();
        q + self.triangle(tet, a) + self.triangle(tet, b)
    }

    /// Sum of two vectors in the same coordinates.
    pub fn add(&self, other: &NormalVector) -> NormalVector {
        NormalVector {
            coords: self.coords,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            triangulation: self.triangulation.clone(),
        }
    }

    /// Quad coordinates of a standard vector.
    pub fn to_quad(&self) -> NormalVector {
        match self.coords {
            Coords::Quad => self.clone(),
            Coords::Standard => NormalVector {
                coords: Coords::Quad,
                entries: (0..self.tets()).flat_map(|t| self.quads(t)).collect(),
                triangulation: self.triangulation.clone(),
            },
        }
    }
}

impl fmt::Display for NormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.coords {
            Coords::Standard => "std",
            Coords::Quad => "quad",
        };
        let body: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{tag}({})", body.join(" "))
    }
}

/// 64-bit FNV-1a of the canonical gluing table, in hex.
pub fn triangulation_hash(tri: &Triangulation) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in tri.fingerprint().bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

/// Homogeneous linear system `rows * x = 0` over nonnegative `x`, with one
/// quad block per tetrahedron for admissibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingSystem {
    pub coords: Coords,
    pub tets: usize,
    pub rows: Vec<Vec<i64>>,
}

impl MatchingSystem {
    pub fn dim(&self) -> usize {
        self.tets * self.coords.per_tet()
    }

    /// Coordinate indices of each tetrahedron's quad block.
    pub fn quad_blocks(&self) -> Vec<[usize; 3]> {
        (0..self.tets)
            .map(|t| {
                let o = t * self.coords.per_tet() + self.coords.quad_offset();
                [o, o + 1, o + 2]
            })
            .collect()
    }

    pub fn is_solution(&self, x: &[u64]) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>() == 0)
    }

    pub fn is_admissible(&self, x: &[u64]) -> bool {
        self.quad_blocks().iter().all(|b| b.iter().filter(|&&i| x[i] > 0).count() <= 1)
    }
}

/// Number of normal arcs on face `face` of `tet` cutting off `vertex`,
/// as a coefficient row: the triangle at `vertex` and the quad separating
/// `vertex` and `face` from the rest.
fn arc_row(row: &mut [i64], tet: usize, face: usize, vertex: usize, sign: i64) {
    row[7 * tet + vertex] += sign;
    row[7 * tet + 4 + quad_separating(vertex, face)] += sign;
}

/// Three equations per interior triangle: arc counts agree on both sides.
pub fn standard_matching_system(tri: &Triangulation) -> MatchingSystem {
    let n = tri.size();
    let mut rows = vec![];
    for t in 0..n {
        for f in 0..4 {
            let Some(g) = tri.adjacent(t, f) else { continue };
            // each glued pair once
            if (g.tet, g.perm.apply(f)) < (t, f) {
                continue;
            }
            for v in (0..4).filter(|&v| v != f) {
                let mut row = vec![0i64; 7 * n];
                arc_row(&mut row, t, f, v, 1);
                arc_row(&mut row, g.tet, g.perm.apply(f), g.perm.apply(v), -1);
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    MatchingSystem {
        coords: Coords::Standard,
        tets: n,
        rows,
    }
}

/// One Q-matching equation per interior edge.
pub fn quad_matching_system(tri: &Triangulation) -> MatchingSystem {
    let n = tri.size();
    let sk = tri.skeleton();
    let mut rows = vec![];
    for class in &sk.edges {
        if class.boundary {
            continue;
        }
        let (t, e) = class.embeddings[0];
        let ring = tri.edge_ring(t, e).expect("interior edge");
        let mut row = vec![0i64; 3 * n];
        for (t, p) in ring {
            row[3 * t + quad_separating(p.apply(0), p.apply(2))] += 1;
            row[3 * t + quad_separating(p.apply(0), p.apply(3))] -= 1;
        }
        if row.iter().any(|&x| x != 0) {
            rows.push(row);
        }
    }
    MatchingSystem {
        coords: Coords::Quad,
        tets: n,
        rows,
    }
}

/// The standard system with every disc type that meets a boundary edge
/// forced to zero. Its solutions are the closed normal surfaces, which
/// form a face of the solution cone.
pub fn closed_matching_system(tri: &Triangulation) -> MatchingSystem {
    let mut sys = standard_matching_system(tri);
    let sk = tri.skeleton();
    let n = tri.size();
    for t in 0..n {
        let on_boundary = |a: usize, b: usize| sk.edges[sk.edge_of[t][edge_number(a, b)]].boundary;
        let mut zero = vec![];
        for v in 0..4 {
            if (0..4).any(|x| x != v && on_boundary(v, x)) {
                zero.push(7 * t + v);
            }
        }
        for [a, b] in EDGE_VERTICES {
            if on_boundary(a, b) {
                zero.extend(quads_crossing(a, b).map(|q| 7 * t + 4 + q));
            }
        }
        zero.sort();
        zero.dedup();
        for c in zero {
            let mut row = vec![0i64; 7 * n];
            row[c] = 1;
            sys.rows.push(row);
        }
    }
    sys
}

pub fn matching_system(tri: &Triangulation, coords: Coords) -> MatchingSystem {
    match coords {
        Coords::Standard => standard_matching_system(tri),
        Coords::Quad => quad_matching_system(tri),
    }
}

/// The standard vector of the link of vertex class `v`.
pub fn vertex_link(tri: &Triangulation, v: usize) -> NormalVector {
    let mut entries = vec![0u64; 7 * tri.size()];
    for &(t, c) in &tri.skeleton().vertices[v].corners {
        entries[7 * t + c] += 1;
    }
    NormalVector::new(tri, Coords::Standard, entries)
}

/// True if subtracting some vertex link leaves a nonnegative vector.
pub fn has_vertex_linking_component(tri: &Triangulation, s: &NormalVector) -> bool {
    (0..tri.vertex_count()).any(|v| {
        tri.skeleton().vertices[v]
            .corners
            .iter()
            .all(|&(t, c)| s.triangle(t, c) > 0)
    })
}

/// The unique standard solution with the given quads and no vertex-linking
/// components: triangle counts are propagated around each vertex link and
/// shifted to be minimal.
pub fn quad_to_standard(tri: &Triangulation, q: &NormalVector) -> Result<NormalVector> {
    if q.coords != Coords::Quad || q.entries.len() != 3 * tri.size() {
        return Err(Error::Inadmissible("expected a quad vector for this triangulation".into()));
    }
    if !q.is_admissible() {
        return Err(Error::Inadmissible("two quad types in one tetrahedron".into()));
    }
    let n = tri.size();
    let quad = |t: usize, a: usize, f: usize| q.quad(t, quad_separating(a, f)) as i128;
    let mut offset: Vec<Option<i128>> = vec![None; 4 * n];
    let mut entries = vec![0u64; 7 * n];
    for t in 0..n {
        for (k, &x) in q.quads(t).iter().enumerate() {
            entries[7 * t + 4 + k] = x;
        }
    }
    for class in &tri.skeleton().vertices {
        let (t0, c0) = class.corners[0];
        offset[4 * t0 + c0] = Some(0);
        let mut queue = VecDeque::from([(t0, c0)]);
        while let Some((t, c)) = queue.pop_front() {
            let here = offset[4 * t + c].expect("visited");
            for f in (0..4).filter(|&f| f != c) {
                let Some(g) = tri.adjacent(t, f) else { continue };
                let (u, uc, uf) = (g.tet, g.perm.apply(c), g.perm.apply(f));
                // tri(t,c) + quad(t; c,f) = tri(u,uc) + quad(u; uc,uf)
                let there = here + quad(t, c, f) - quad(u, uc, uf);
                match offset[4 * u + uc] {
                    None => {
                        offset[4 * u + uc] = Some(there);
                        queue.push_back((u, uc));
                    }
                    Some(x) if x != there => {
                        return Err(Error::Inadmissible(
                            "quad vector does not extend to a normal surface".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let min = class.corners.iter().map(|&(t, c)| offset[4 * t + c].expect("visited")).min().unwrap_or(0);
        for &(t, c) in &class.corners {
            let x = offset[4 * t + c].expect("visited") - min;
            entries[7 * t + c] = u64::try_from(x).map_err(|_| Error::ResourceExceeded("coordinate overflow".into()))?;
        }
    }
    Ok(NormalVector {
        coords: Coords::Standard,
        entries,
        triangulation: q.triangulation.clone(),
    })
}

/// Standard coordinates of a vector given in either system.
pub fn to_standard(tri: &Triangulation, v: &NormalVector) -> Result<NormalVector> {
    match v.coords {
        Coords::Standard => Ok(v.clone()),
        Coords::Quad => quad_to_standard(tri, v),
    }
}

/// Number of points where the surface meets each edge class.
pub fn edge_weights(tri: &Triangulation, s: &NormalVector) -> Vec<u64> {
    let sk = tri.skeleton();
    sk.edges
        .iter()
        .map(|class| {
            let (t, e) = class.embeddings[0];
            let [a, b] = crate::perm::EDGE_VERTICES[e];
            s.edge_weight(t, a, b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn quad_types() {
        assert_eq!(quad_separating(0, 1), 0);
        assert_eq!(quad_separating(2, 3), 0);
        assert_eq!(quad_separating(1, 3), 1);
        assert_eq!(quad_separating(3, 0), 2);
        assert_eq!(quad_separating(1, 2), 2);
        let mut c = quads_crossing(0, 1);
        c.sort();
        assert_eq!(c, [1, 2]);
    }

    #[test]
    fn lone_tetrahedron_systems_are_empty() {
        let t = fixtures::lone_tetrahedron();
        assert!(standard_matching_system(&t).rows.is_empty());
        assert!(quad_matching_system(&t).rows.is_empty());
    }

    #[test]
    fn figure_eight_has_twelve_standard_equations() {
        let s = standard_matching_system(&fixtures::figure_eight());
        assert_eq!(s.rows.len(), 12);
        assert_eq!(s.dim(), 14);
    }

    #[test]
    fn vertex_links_solve_the_standard_system() {
        for tri in [fixtures::figure_eight(), fixtures::solid_torus(), fixtures::torus_cross_interval()] {
            let sys = standard_matching_system(&tri);
            for v in 0..tri.vertex_count() {
                let l = vertex_link(&tri, v);
                assert!(sys.is_solution(&l.entries));
                assert!(has_vertex_linking_component(&tri, &l));
            }
        }
    }

    #[test]
    fn zero_quad_vector_is_empty_surface() {
        let t = fixtures::solid_torus();
        let z = NormalVector::new(&t, Coords::Quad, vec![0; 3]);
        assert!(quad_to_standard(&t, &z).unwrap().is_zero());
    }

    #[test]
    fn inadmissible_quads_are_rejected() {
        let t = fixtures::solid_torus();
        let v = NormalVector::new(&t, Coords::Quad, vec![1, 1, 0]);
        assert!(matches!(quad_to_standard(&t, &v), Err(Error::Inadmissible(_))));
    }
}
