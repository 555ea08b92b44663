//! Tetrahedra with face gluings, plus the skeleton derived from them.
//!
//! Conventions: face `f` of a tetrahedron is the face opposite vertex `f`.
//! A gluing `(tet, face f) -> (other, perm)` identifies vertex `i` of `tet`
//! with vertex `perm[i]` of `other`, so face `f` meets face `perm[f]`.

use serde::{Deserialize, Serialize};

use crate::dsu::{Dsu, ParityDsu};
use crate::error::{Error, Result};
use crate::perm::{edge_number, fourth_vertex, Perm4, EDGE_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gluing {
    pub tet: usize,
    pub perm: Perm4,
}

/// Topological type of a vertex link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkType {
    Sphere,
    Disc,
    Torus,
    KleinBottle,
    /// Any other closed surface.
    Closed { euler: i64, orientable: bool },
}

impl LinkType {
    pub fn is_closed(&self) -> bool {
        !matches!(self, LinkType::Disc)
    }
    pub fn is_ideal(&self) -> bool {
        !matches!(self, LinkType::Sphere | LinkType::Disc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub corners: Vec<(usize, usize)>,
    pub link: LinkType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    /// Every `(tet, edge number)` belonging to the class.
    pub embeddings: Vec<(usize, usize)>,
    pub boundary: bool,
    /// Vertex classes at the two ends, as seen from the first embedding.
    pub ends: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleClass {
    /// One or two `(tet, face)` pairs.
    pub embeddings: Vec<(usize, usize)>,
}

impl TriangleClass {
    pub fn is_boundary(&self) -> bool {
        self.embeddings.len() == 1
    }
}

/// A connected component of the (real, triangulated) boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryComponent {
    /// Boundary faces `(tet, face)` in this component.
    pub triangles: Vec<(usize, usize)>,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub euler: i64,
    pub orientable: bool,
}

impl BoundaryComponent {
    pub fn is_torus(&self) -> bool {
        self.orientable && self.euler == 0
    }
    pub fn is_sphere(&self) -> bool {
        self.euler == 2
    }
    /// Genus of an orientable component (number of crosscaps otherwise).
    pub fn genus(&self) -> i64 {
        if self.orientable {
            (2 - self.euler) / 2
        } else {
            2 - self.euler
        }
    }
    /// One vertex, three edges, two triangles.
    pub fn is_minimal(&self) -> bool {
        self.vertices.len() == 1 && self.edges.len() == 3 && self.triangles.len() == 2
    }
}

/// Skeletal data computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub vertex_of: Vec<[usize; 4]>,
    pub edge_of: Vec<[usize; 6]>,
    /// True when edge `e` of a tetrahedron, read from its lower-numbered
    /// vertex to its higher one, runs against the direction of its class
    /// (the direction of the class's first embedding).
    pub edge_reversed: Vec<[bool; 6]>,
    pub triangle_of: Vec<[usize; 4]>,
    pub vertices: Vec<VertexClass>,
    pub edges: Vec<EdgeClass>,
    pub triangles: Vec<TriangleClass>,
    pub boundary_components: Vec<BoundaryComponent>,
    /// For each boundary face `(tet, face)`, the index of its boundary component.
    pub boundary_component_of: Vec<[Option<usize>; 4]>,
    pub component_of: Vec<usize>,
    pub component_count: usize,
    pub orientable: bool,
}

/// An immutable triangulation. Every move produces a fresh value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[Option<Gluing>; 4]>,
    skeleton: Skeleton,
}

/// Where a walk around a boundary edge ends up: the neighbouring boundary
/// face, and the vertex of that face opposite the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeWalkEnd {
    pub tet: usize,
    pub face: usize,
    pub a: usize,
    pub b: usize,
    pub opposite: usize,
}

impl Triangulation {
    /// Builds and validates a triangulation from per-tetrahedron gluings.
    pub fn new(gluings: Vec<[Option<Gluing>; 4]>) -> Result<Triangulation> {
        let n = gluings.len();
        for (t, faces) in gluings.iter().enumerate() {
            for (f, g) in faces.iter().enumerate() {
                let Some(g) = g else { continue };
                if g.tet >= n {
                    return Err(Error::TetOutOfRange { tet: g.tet, size: n });
                }
                let target_face = g.perm.apply(f);
                if g.tet == t && target_face == f {
                    return Err(Error::FaceGluedToSelf { tet: t, face: f });
                }
                match gluings[g.tet][target_face] {
                    Some(back) if back.tet == t && back.perm == g.perm.inverse() => {}
                    _ => return Err(Error::NonInvolutiveGluing { tet: t, face: f }),
                }
            }
        }
        let skeleton = compute_skeleton(&gluings)?;
        Ok(Triangulation { gluings, skeleton })
    }

    /// Builds from a list of gluings `(tet, face, other, perm)`, filling in
    /// the reverse direction.
    pub fn from_gluings(size: usize, list: &[(usize, usize, usize, Perm4)]) -> Result<Triangulation> {
        let mut g: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; size];
        for &(t, f, u, p) in list {
            if t >= size || u >= size {
                return Err(Error::TetOutOfRange { tet: t.max(u), size });
            }
            let uf = p.apply(f);
            if t == u && uf == f {
                return Err(Error::FaceGluedToSelf { tet: t, face: f });
            }
            if g[t][f].is_some() || g[u][uf].is_some() {
                return Err(Error::NonInvolutiveGluing { tet: t, face: f });
            }
            g[t][f] = Some(Gluing { tet: u, perm: p });
            g[u][uf] = Some(Gluing { tet: t, perm: p.inverse() });
        }
        Triangulation::new(g)
    }

    pub fn size(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluings(&self) -> &[[Option<Gluing>; 4]] {
        &self.gluings
    }

    pub fn adjacent(&self, tet: usize, face: usize) -> Option<Gluing> {
        self.gluings[tet][face]
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertices.len()
    }
    pub fn edge_count(&self) -> usize {
        self.skeleton.edges.len()
    }
    pub fn triangle_count(&self) -> usize {
        self.skeleton.triangles.len()
    }

    /// `V - E + F - T` of the cell complex (ideal vertices counted as vertices).
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.triangle_count() as i64
            - self.size() as i64
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton.component_count <= 1
    }

    pub fn is_orientable(&self) -> bool {
        self.skeleton.orientable
    }

    /// True if some vertex link is a closed surface other than a sphere.
    pub fn is_ideal(&self) -> bool {
        self.skeleton.vertices.iter().any(|v| v.link.is_ideal())
    }

    pub fn ideal_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.skeleton.vertices[v].link.is_ideal())
            .collect()
    }

    pub fn has_boundary_faces(&self) -> bool {
        !self.skeleton.boundary_components.is_empty()
    }

    pub fn boundary_components(&self) -> &[BoundaryComponent] {
        &self.skeleton.boundary_components
    }

    /// Number of ends: real boundary components plus ideal vertices.
    pub fn cusp_count(&self) -> usize {
        self.skeleton.boundary_components.len() + self.ideal_vertices().len()
    }

    pub fn boundary_triangle_count(&self) -> usize {
        self.skeleton
            .boundary_components
            .iter()
            .map(|b| b.triangles.len())
            .sum()
    }

    /// True when no face is left unglued and no vertex is ideal.
    pub fn is_closed(&self) -> bool {
        !self.has_boundary_faces() && !self.is_ideal()
    }

    /// Walks around the edge `{a, b}` of boundary face `(tet, face)` through
    /// the interior until the other boundary face on that edge is reached.
    pub fn walk_boundary_edge(&self, tet: usize, face: usize, a: usize, b: usize) -> EdgeWalkEnd {
        debug_assert!(self.gluings[tet][face].is_none());
        let mut t = tet;
        let (mut a, mut b) = (a, b);
        let mut from = face;
        let mut to = fourth_vertex(a, b, face);
        // Each step passes through one face containing the edge; the walk
        // visits each edge embedding at most once.
        for _ in 0..=4 * self.size() + 4 {
            match self.gluings[t][to] {
                None => {
                    return EdgeWalkEnd {
                        tet: t,
                        face: to,
                        a,
                        b,
                        opposite: from,
                    }
                }
                Some(g) => {
                    let p = g.perm;
                    let (na, nb, nfrom, nto) = (p.apply(a), p.apply(b), p.apply(to), p.apply(from));
                    t = g.tet;
                    a = na;
                    b = nb;
                    from = nfrom;
                    to = nto;
                }
            }
        }
        unreachable!("edge walk from a boundary face did not terminate")
    }

    /// The cyclic sequence of `(tet, perm)` around an interior edge, starting
    /// from edge number `edge` of `tet`. In each entry `perm[0], perm[1]` are
    /// the edge's endpoints; the ring leaves a tetrahedron through the face
    /// opposite `perm[2]` and enters the next one through the face opposite
    /// its `perm[3]`. Returns `None` for boundary edges.
    pub fn edge_ring(&self, tet: usize, edge: usize) -> Option<Vec<(usize, Perm4)>> {
        let [a, b] = EDGE_VERTICES[edge];
        let others = crate::perm::complement_pair(a, b);
        let start = Perm4::from_three([0, 1, 2], [a, b, others[0]]);
        let mut ring = vec![];
        let mut t = tet;
        let mut p = start;
        for _ in 0..=6 * self.size() {
            ring.push((t, p));
            // exit through the face opposite p[2]
            let g = self.gluings[t][p.apply(2)]?;
            let q = g.perm;
            // new frame: 0,1 same edge; new p[3] is the image of the exit-face
            // opposite vertex (entry face), new p[2] is the remaining one.
            let na = q.apply(p.apply(0));
            let nb = q.apply(p.apply(1));
            let entry = q.apply(p.apply(2));
            let next2 = fourth_vertex(na, nb, entry);
            t = g.tet;
            p = Perm4::from_three([0, 1, 2], [na, nb, next2]);
            debug_assert_eq!(p.apply(3), entry);
            if t == tet && p == start {
                return Some(ring);
            }
        }
        None
    }

    /// Disjoint union of several triangulations.
    pub fn disjoint_union(parts: &[Triangulation]) -> Result<Triangulation> {
        let mut g = Vec::new();
        for part in parts {
            let off = g.len();
            for faces in &part.gluings {
                let mut row = [None; 4];
                for f in 0..4 {
                    row[f] = faces[f].map(|x| Gluing {
                        tet: x.tet + off,
                        perm: x.perm,
                    });
                }
                g.push(row);
            }
        }
        Triangulation::new(g)
    }

    /// Splits into connected components, preserving tetrahedron order.
    pub fn components(&self) -> Vec<Triangulation> {
        let k = self.skeleton.component_count;
        if k <= 1 {
            return vec![self.clone()];
        }
        let mut index_in = vec![0; self.size()];
        let mut counts = vec![0; k];
        for t in 0..self.size() {
            let c = self.skeleton.component_of[t];
            index_in[t] = counts[c];
            counts[c] += 1;
        }
        let mut rows: Vec<Vec<[Option<Gluing>; 4]>> = vec![Vec::new(); k];
        for t in 0..self.size() {
            let mut row = [None; 4];
            for f in 0..4 {
                row[f] = self.gluings[t][f].map(|x| Gluing {
                    tet: index_in[x.tet],
                    perm: x.perm,
                });
            }
            rows[self.skeleton.component_of[t]].push(row);
        }
        rows.into_iter()
            .map(|r| Triangulation::new(r).expect("component of a valid triangulation"))
            .collect()
    }

    /// Boundary edge classes of boundary component `bc`.
    pub fn boundary_edges(&self, bc: usize) -> &[usize] {
        &self.skeleton.boundary_components[bc].edges
    }

    /// Sorted gluing data, used for hashing and provenance.
    pub fn fingerprint(&self) -> String {
        crate::format::to_gluing_table(self)
    }
}

impl Skeleton {
    fn empty() -> Skeleton {
        Skeleton {
            vertex_of: vec![],
            edge_of: vec![],
            edge_reversed: vec![],
            triangle_of: vec![],
            vertices: vec![],
            edges: vec![],
            triangles: vec![],
            boundary_components: vec![],
            boundary_component_of: vec![],
            component_of: vec![],
            component_count: 0,
            orientable: true,
        }
    }
}

fn compute_skeleton(gluings: &[[Option<Gluing>; 4]]) -> Result<Skeleton> {
    let n = gluings.len();

    // Components and orientability.
    let mut comp = Dsu::new(n);
    let mut orient = ParityDsu::new(n);
    let mut orientable = true;
    for (t, faces) in gluings.iter().enumerate() {
        for g in faces.iter().flatten() {
            comp.union(t, g.tet);
            // Consistently oriented tetrahedra are glued by odd permutations.
            if !orient.union(t, g.tet, g.perm.sign() == 1) {
                orientable = false;
            }
        }
    }
    let (component_of, component_count) = comp.labels();

    // Vertices.
    let mut vd = Dsu::new(4 * n);
    for (t, faces) in gluings.iter().enumerate() {
        for (f, g) in faces.iter().enumerate() {
            let Some(g) = g else { continue };
            for v in (0..4).filter(|&v| v != f) {
                vd.union(4 * t + v, 4 * g.tet + g.perm.apply(v));
            }
        }
    }
    let (vlabels, vcount) = vd.labels();
    let vertex_of: Vec<[usize; 4]> = (0..n)
        .map(|t| [vlabels[4 * t], vlabels[4 * t + 1], vlabels[4 * t + 2], vlabels[4 * t + 3]])
        .collect();

    // Edges, with orientation parity to detect reversed self-identification.
    let mut ed = ParityDsu::new(6 * n);
    let mut ed_plain = Dsu::new(6 * n);
    for (t, faces) in gluings.iter().enumerate() {
        for (f, g) in faces.iter().enumerate() {
            let Some(g) = g else { continue };
            for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
                if a == f || b == f {
                    continue;
                }
                let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                let e2 = edge_number(ia, ib);
                if !ed.union(6 * t + e, 6 * g.tet + e2, ia > ib) {
                    return Err(Error::InvalidEdge { tet: t });
                }
                ed_plain.union(6 * t + e, 6 * g.tet + e2);
            }
        }
    }
    let (elabels, ecount) = ed_plain.labels();
    let edge_of: Vec<[usize; 6]> = (0..n)
        .map(|t| {
            let mut row = [0; 6];
            for e in 0..6 {
                row[e] = elabels[6 * t + e];
            }
            row
        })
        .collect();

    // Triangles.
    let mut td = Dsu::new(4 * n);
    for (t, faces) in gluings.iter().enumerate() {
        for (f, g) in faces.iter().enumerate() {
            if let Some(g) = g {
                td.union(4 * t + f, 4 * g.tet + g.perm.apply(f));
            }
        }
    }
    let (tlabels, tcount) = td.labels();
    let triangle_of: Vec<[usize; 4]> = (0..n)
        .map(|t| [tlabels[4 * t], tlabels[4 * t + 1], tlabels[4 * t + 2], tlabels[4 * t + 3]])
        .collect();
    let mut triangles = vec![TriangleClass { embeddings: vec![] }; tcount];
    for t in 0..n {
        for f in 0..4 {
            triangles[triangle_of[t][f]].embeddings.push((t, f));
        }
    }

    let mut class_parity: Vec<Option<bool>> = vec![None; ecount];
    let mut edge_reversed = vec![[false; 6]; n];
    for t in 0..n {
        for e in 0..6 {
            let parity = ed.find(6 * t + e).1;
            let first = *class_parity[edge_of[t][e]].get_or_insert(parity);
            edge_reversed[t][e] = parity != first;
        }
    }

    let mut edges: Vec<EdgeClass> = (0..ecount)
        .map(|_| EdgeClass {
            embeddings: vec![],
            boundary: false,
            ends: [0, 0],
        })
        .collect();
    for t in 0..n {
        for e in 0..6 {
            let class = &mut edges[edge_of[t][e]];
            if class.embeddings.is_empty() {
                let [a, b] = EDGE_VERTICES[e];
                class.ends = [vertex_of[t][a], vertex_of[t][b]];
            }
            class.embeddings.push((t, e));
        }
    }
    for t in 0..n {
        for f in 0..4 {
            if gluings[t][f].is_none() {
                for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
                    if a != f && b != f {
                        edges[edge_of[t][e]].boundary = true;
                    }
                }
            }
        }
    }

    // Vertex links: triangles are corners, edges are face-corners, vertices
    // are edge-ends.
    let mut corner_orient = ParityDsu::new(4 * n);
    let mut link_orientable = vec![true; vcount];
    let mut end_dsu = Dsu::new(12 * n); // (t, v, w) with w != v, indexed 12t + 3v + slot
    let end_index = |t: usize, v: usize, w: usize| -> usize {
        let slot = if w < v { w } else { w - 1 };
        12 * t + 3 * v + slot
    };
    let mut link_faces = vec![0i64; vcount];
    let mut link_edges2 = vec![0i64; vcount]; // doubled count of link edges
    let mut link_boundary = vec![false; vcount];
    for t in 0..n {
        for v in 0..4 {
            let vc = vertex_of[t][v];
            link_faces[vc] += 1;
            for f in (0..4).filter(|&f| f != v) {
                match gluings[t][f] {
                    None => {
                        link_edges2[vc] += 2;
                        link_boundary[vc] = true;
                    }
                    Some(g) => {
                        link_edges2[vc] += 1;
                        let p = g.perm;
                        if !corner_orient.union(4 * t + v, 4 * g.tet + p.apply(v), p.sign() == 1) {
                            link_orientable[vc] = false;
                        }
                        for w in (0..4).filter(|&w| w != v && w != f) {
                            end_dsu.union(end_index(t, v, w), end_index(g.tet, p.apply(v), p.apply(w)));
                        }
                    }
                }
            }
        }
    }
    let mut end_roots: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); vcount];
    for t in 0..n {
        for v in 0..4 {
            for w in (0..4).filter(|&w| w != v) {
                let r = end_dsu.find(end_index(t, v, w));
                end_roots[vertex_of[t][v]].insert(r);
            }
        }
    }
    let mut vertices = Vec::with_capacity(vcount);
    let mut corners: Vec<Vec<(usize, usize)>> = vec![vec![]; vcount];
    for t in 0..n {
        for v in 0..4 {
            corners[vertex_of[t][v]].push((t, v));
        }
    }
    for vc in 0..vcount {
        let euler = end_roots[vc].len() as i64 - link_edges2[vc] / 2 + link_faces[vc];
        let link = if link_boundary[vc] {
            if euler == 1 && link_orientable[vc] {
                LinkType::Disc
            } else {
                return Err(Error::InvalidVertexLink { vertex: vc });
            }
        } else {
            match (euler, link_orientable[vc]) {
                (2, _) => LinkType::Sphere,
                (0, true) => LinkType::Torus,
                (0, false) => LinkType::KleinBottle,
                (e, o) => LinkType::Closed { euler: e, orientable: o },
            }
        };
        vertices.push(VertexClass {
            corners: std::mem::take(&mut corners[vc]),
            link,
        });
    }

    // Boundary components.
    let mut bface_index = vec![[usize::MAX; 4]; n];
    let mut bfaces = vec![];
    for t in 0..n {
        for f in 0..4 {
            if gluings[t][f].is_none() {
                bface_index[t][f] = bfaces.len();
                bfaces.push((t, f));
            }
        }
    }
    let mut bd = Dsu::new(bfaces.len());
    {
        // A throwaway value so the edge walk can be reused before the
        // skeleton exists; the walk only reads gluings.
        let tri = Triangulation {
            gluings: gluings.to_vec(),
            skeleton: Skeleton::empty(),
        };
        for (i, &(t, f)) in bfaces.iter().enumerate() {
            for (a, b) in face_edges(f) {
                let end = tri.walk_boundary_edge(t, f, a, b);
                bd.union(i, bface_index[end.tet][end.face]);
            }
        }
    }
    let (blabels, bcount) = bd.labels();
    let mut boundary_components: Vec<BoundaryComponent> = (0..bcount)
        .map(|_| BoundaryComponent {
            triangles: vec![],
            edges: vec![],
            vertices: vec![],
            euler: 0,
            // The boundary of an orientable manifold is orientable; inputs
            // that are not orientable fail every precondition anyway.
            orientable,
        })
        .collect();
    let mut boundary_component_of = vec![[None; 4]; n];
    for (i, &(t, f)) in bfaces.iter().enumerate() {
        let c = blabels[i];
        boundary_component_of[t][f] = Some(c);
        let bc = &mut boundary_components[c];
        bc.triangles.push((t, f));
        for v in (0..4).filter(|&v| v != f) {
            bc.vertices.push(vertex_of[t][v]);
        }
        for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
            if a != f && b != f {
                bc.edges.push(edge_of[t][e]);
            }
        }
    }
    for bc in &mut boundary_components {
        bc.vertices.sort_unstable();
        bc.vertices.dedup();
        bc.edges.sort_unstable();
        bc.edges.dedup();
        bc.euler = bc.vertices.len() as i64 - bc.edges.len() as i64 + bc.triangles.len() as i64;
    }

    Ok(Skeleton {
        vertex_of,
        edge_of,
        edge_reversed,
        triangle_of,
        vertices,
        edges,
        triangles,
        boundary_components,
        boundary_component_of,
        component_of,
        component_count,
        orientable,
    })
}

/// The three edges of face `f`, as vertex pairs.
pub fn face_edges(f: usize) -> [(usize, usize); 3] {
    let vs: Vec<usize> = (0..4).filter(|&v| v != f).collect();
    [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lone_tetrahedron() {
        let t = Triangulation::new(vec![[None; 4]]).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count(), t.triangle_count()), (4, 6, 4));
        assert_eq!(t.euler_characteristic(), 1);
        assert_eq!(t.boundary_components().len(), 1);
        assert!(t.boundary_components()[0].is_sphere());
        assert!(t.skeleton().vertices.iter().all(|v| v.link == LinkType::Disc));
        assert!(t.is_connected());
        assert!(!t.is_ideal());
    }

    #[test]
    fn face_glued_to_itself_rejected() {
        let err = Triangulation::from_gluings(1, &[(0, 0, 0, Perm4::IDENTITY)]).unwrap_err();
        assert_eq!(err, Error::FaceGluedToSelf { tet: 0, face: 0 });
    }

    #[test]
    fn non_involutive_rejected() {
        let p = Perm4::new([1, 0, 2, 3]).unwrap();
        let mut g = vec![[None; 4]; 2];
        g[0][0] = Some(Gluing { tet: 1, perm: p });
        assert!(matches!(
            Triangulation::new(g),
            Err(Error::NonInvolutiveGluing { .. })
        ));
    }

    #[test]
    fn figure_eight_skeleton() {
        let t = fixtures::figure_eight();
        assert_eq!(t.size(), 2);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 2);
        assert_eq!(t.triangle_count(), 4);
        assert_eq!(t.skeleton().vertices[0].link, LinkType::Torus);
        assert_eq!(t.euler_characteristic(), 1);
        assert!(t.is_orientable());
        assert!(t.is_ideal());
        assert!(!t.has_boundary_faces());
    }

    #[test]
    fn edge_rings_cover_every_embedding() {
        let t = fixtures::figure_eight();
        for class in &t.skeleton().edges {
            let (tet, e) = class.embeddings[0];
            let ring = t.edge_ring(tet, e).unwrap();
            assert_eq!(ring.len(), class.embeddings.len());
        }
    }

    #[test]
    fn gluing_involutive_everywhere() {
        let t = fixtures::figure_eight();
        for tet in 0..t.size() {
            for f in 0..4 {
                let g = t.adjacent(tet, f).unwrap();
                let back = t.adjacent(g.tet, g.perm.apply(f)).unwrap();
                assert_eq!(back.tet, tet);
                assert_eq!(back.perm.compose(&g.perm), Perm4::IDENTITY);
            }
        }
    }

    #[test]
    fn components_split() {
        let one = Triangulation::new(vec![[None; 4]]).unwrap();
        let two = Triangulation::disjoint_union(&[one.clone(), one]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components().len(), 2);
    }
}
