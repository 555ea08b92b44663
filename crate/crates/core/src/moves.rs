//! Boundary moves: two-two moves, folds, cusp simplification and the
//! fillings obtained by folding a minimal cusp.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{edge_number, fourth_vertex, Perm4};
use crate::triangulation::{face_edges, Gluing, Triangulation};

/// A boundary edge seen from one of its two boundary triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryEdge {
    /// Boundary face `(tet, face)` on one side, with the edge's vertices.
    pub tet: usize,
    pub face: usize,
    pub a: usize,
    pub b: usize,
    /// The boundary face on the other side, with the images of `a`, `b`
    /// and the vertex opposite the edge.
    pub other_tet: usize,
    pub other_face: usize,
    pub other_a: usize,
    pub other_b: usize,
    pub other_opposite: usize,
}

impl BoundaryEdge {
    pub fn opposite(&self) -> usize {
        fourth_vertex(self.a, self.b, self.face)
    }

    /// True when both sides are the same boundary triangle.
    pub fn is_degenerate(&self) -> bool {
        self.tet == self.other_tet && self.face == self.other_face
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStatus {
    pub embedded: bool,
    pub coembedded: bool,
}

/// Locates boundary edge class `edge` from one of its boundary triangles.
pub fn locate_boundary_edge(tri: &Triangulation, edge: usize) -> Result<BoundaryEdge> {
    let sk = tri.skeleton();
    let class = sk
        .edges
        .get(edge)
        .ok_or_else(|| Error::NotBoundaryEdge(format!("edge {edge}")))?;
    if !class.boundary {
        return Err(Error::NotBoundaryEdge(format!("edge {edge}")));
    }
    for &(t, e) in &class.embeddings {
        for f in 0..4 {
            if tri.adjacent(t, f).is_some() {
                continue;
            }
            for (a, b) in face_edges(f) {
                if edge_number(a, b) == e {
                    let end = tri.walk_boundary_edge(t, f, a, b);
                    return Ok(BoundaryEdge {
                        tet: t,
                        face: f,
                        a,
                        b,
                        other_tet: end.tet,
                        other_face: end.face,
                        other_a: end.a,
                        other_b: end.b,
                        other_opposite: end.opposite,
                    });
                }
            }
        }
    }
    Err(Error::NotBoundaryEdge(format!("edge {edge}")))
}

/// Embedded: the endpoints are distinct vertices. Coembedded: the vertices
/// opposite the edge in its two boundary triangles are distinct.
pub fn boundary_edge_status(tri: &Triangulation, edge: usize) -> Result<EdgeStatus> {
    let be = locate_boundary_edge(tri, edge)?;
    let sk = tri.skeleton();
    let [x, y] = sk.edges[edge].ends;
    Ok(EdgeStatus {
        embedded: x != y,
        coembedded: sk.vertex_of[be.tet][be.opposite()] != sk.vertex_of[be.other_tet][be.other_opposite],
    })
}

fn perm_from_pairs(pairs: [(usize, usize); 4]) -> Perm4 {
    let mut img = [0u8; 4];
    for (x, y) in pairs {
        img[x] = y as u8;
    }
    Perm4::new(img).expect("pairs form a bijection")
}

/// Glues a fresh tetrahedron across the two boundary triangles meeting at
/// `edge`. The new tetrahedron is last; its edge 2-3 is the new boundary
/// edge, between its faces 0 and 1.
pub fn two_two_move(tri: &Triangulation, edge: usize) -> Result<Triangulation> {
    let be = locate_boundary_edge(tri, edge)?;
    if be.is_degenerate() {
        return Err(Error::Precondition(format!(
            "edge {edge} has the same boundary triangle on both sides"
        )));
    }
    let n = tri.size();
    let mut g: Vec<[Option<Gluing>; 4]> = tri.gluings().to_vec();
    // Face 2 (vertices 0,1,3) goes onto the first triangle, face 3 (0,1,2)
    // onto the second; the mirror choice would serve equally well.
    let p = perm_from_pairs([(0, be.a), (1, be.b), (3, be.opposite()), (2, be.face)]);
    let q = perm_from_pairs([
        (0, be.other_a),
        (1, be.other_b),
        (2, be.other_opposite),
        (3, be.other_face),
    ]);
    let mut row = [None; 4];
    row[2] = Some(Gluing { tet: be.tet, perm: p });
    row[3] = Some(Gluing { tet: be.other_tet, perm: q });
    g[be.tet][be.face] = Some(Gluing { tet: n, perm: p.inverse() });
    g[be.other_tet][be.other_face] = Some(Gluing { tet: n, perm: q.inverse() });
    g.push(row);
    Triangulation::new(g)
}

/// Identifies the two boundary triangles at `edge` by the map fixing the
/// edge (the close-the-book move).
pub fn fold_along_edge(tri: &Triangulation, edge: usize) -> Result<Triangulation> {
    let be = locate_boundary_edge(tri, edge)?;
    if be.is_degenerate() {
        return Err(Error::Precondition(format!(
            "edge {edge} has the same boundary triangle on both sides"
        )));
    }
    let p = perm_from_pairs([
        (be.a, be.other_a),
        (be.b, be.other_b),
        (be.opposite(), be.other_opposite),
        (be.face, be.other_face),
    ]);
    let mut g: Vec<[Option<Gluing>; 4]> = tri.gluings().to_vec();
    g[be.tet][be.face] = Some(Gluing { tet: be.other_tet, perm: p });
    g[be.other_tet][be.other_face] = Some(Gluing { tet: be.tet, perm: p.inverse() });
    Triangulation::new(g).map_err(|e| Error::Precondition(format!("fold along edge {edge} is degenerate: {e}")))
}

fn boundary_edge_classes_all(tri: &Triangulation) -> Vec<usize> {
    (0..tri.edge_count())
        .filter(|&e| tri.skeleton().edges[e].boundary)
        .collect()
}

/// Makes every boundary component one-vertex, by two-two moves on embedded
/// boundary edges each followed by folds along coembedded ones. Only the
/// boundary pattern is simplified.
pub fn simplify_cusps(tri: &Triangulation) -> Result<Triangulation> {
    for bc in tri.boundary_components() {
        if !bc.is_torus() {
            return Err(Error::Precondition("every boundary component must be a torus".into()));
        }
    }
    let mut cur = tri.clone();
    let mut budget = 2 * tri.boundary_triangle_count() + 4;
    loop {
        let mut degenerate = None;
        let mut embedded = None;
        for e in boundary_edge_classes_all(&cur) {
            if !boundary_edge_status(&cur, e)?.embedded {
                continue;
            }
            if locate_boundary_edge(&cur, e)?.is_degenerate() {
                degenerate.get_or_insert(e);
            } else {
                embedded = Some(e);
                break;
            }
        }
        let target = match (embedded, degenerate) {
            (Some(e), _) => e,
            // A boundary triangle folded onto itself along an embedded edge
            // is a cone around a degree-one vertex. Flipping its third edge
            // first raises that degree.
            (None, Some(e)) => third_edge(&cur, e)?,
            (None, None) => break,
        };
        if budget == 0 {
            return Err(Error::ResourceExceeded("cusp simplification did not terminate".into()));
        }
        budget -= 1;
        let before = cur.boundary_triangle_count();
        cur = two_two_move(&cur, target)?;
        loop {
            let coembedded = boundary_edge_classes_all(&cur).into_iter().find(|&f| {
                let ok = locate_boundary_edge(&cur, f).map_or(false, |be| !be.is_degenerate());
                ok && boundary_edge_status(&cur, f).map_or(false, |s| s.coembedded)
            });
            let Some(f) = coembedded else { break };
            cur = fold_along_edge(&cur, f)?;
        }
        if embedded.is_some() && cur.boundary_triangle_count() >= before {
            return Err(Error::ResourceExceeded("cusp simplification made no progress".into()));
        }
    }
    Ok(cur)
}

/// The edge of the boundary triangle on both sides of `edge` that is not
/// identified with `edge`.
fn third_edge(tri: &Triangulation, edge: usize) -> Result<usize> {
    let be = locate_boundary_edge(tri, edge)?;
    let sk = tri.skeleton();
    face_edges(be.face)
        .into_iter()
        .map(|(a, b)| sk.edge_of[be.tet][edge_number(a, b)])
        .find(|&e| e != edge && !locate_boundary_edge(tri, e).map_or(true, |x| x.is_degenerate()))
        .ok_or_else(|| Error::Precondition(format!("boundary triangle at edge {edge} is degenerate")))
}

/// The three triangulations obtained by folding a minimal torus boundary
/// component along each of its edges.
pub fn fold_fillings(tri: &Triangulation, component: usize) -> Result<Vec<Triangulation>> {
    let bc = tri
        .boundary_components()
        .get(component)
        .ok_or_else(|| Error::Precondition(format!("no boundary component {component}")))?;
    if !(bc.is_torus() && bc.is_minimal()) {
        return Err(Error::Precondition(format!(
            "boundary component {component} is not a minimal torus"
        )));
    }
    bc.edges.iter().map(|&e| fold_along_edge(tri, e)).collect()
}

/// Classes of the three edges of a minimal torus boundary component in
/// `H1(T^2) = Z^2`, signed so that `v + w = x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeClassTriple {
    pub edges: [usize; 3],
    pub classes: [[i64; 2]; 3],
}

impl EdgeClassTriple {
    /// True when all three classes agree modulo the subgroup generated by `g`.
    pub fn all_congruent_mod(&self, g: [i64; 2]) -> bool {
        let multiple = |d: [i64; 2]| d[0] * g[1] - d[1] * g[0] == 0 && {
            // d is a rational multiple of g; require an integer multiple.
            if g[0] != 0 {
                d[0] % g[0] == 0
            } else {
                d[1] % g[1] == 0
            }
        };
        let [v, w, x] = self.classes;
        multiple([v[0] - w[0], v[1] - w[1]]) && multiple([w[0] - x[0], w[1] - x[1]])
    }
}

/// Reads off the edge classes of a minimal torus boundary component. The
/// basis of `H1` is given by the first two edges; the single vertex is the
/// spanning tree.
pub fn boundary_edge_classes(tri: &Triangulation, component: usize) -> Result<EdgeClassTriple> {
    let sk = tri.skeleton();
    let bc = tri
        .boundary_components()
        .get(component)
        .ok_or_else(|| Error::Precondition(format!("no boundary component {component}")))?;
    if !(bc.is_torus() && bc.is_minimal()) {
        return Err(Error::Precondition(format!(
            "boundary component {component} is not a minimal torus"
        )));
    }
    let edges = [bc.edges[0], bc.edges[1], bc.edges[2]];
    // Boundary of each triangle as a signed combination of the three edges.
    let relation = |&(t, f): &(usize, usize)| -> [i64; 3] {
        let vs: Vec<usize> = (0..4).filter(|&v| v != f).collect();
        let mut r = [0i64; 3];
        for (x, y, sign) in [(vs[0], vs[1], 1), (vs[1], vs[2], 1), (vs[0], vs[2], -1)] {
            let en = edge_number(x, y);
            let k = edges.iter().position(|&e| e == sk.edge_of[t][en]).expect("edge of this torus");
            r[k] += if sk.edge_reversed[t][en] { -sign } else { sign };
        }
        r
    };
    let r1 = relation(&bc.triangles[0]);
    let r2 = relation(&bc.triangles[1]);
    let neg: [i64; 3] = [-r1[0], -r1[1], -r1[2]];
    if r1.iter().any(|x| x.abs() != 1) || (r2 != r1 && r2 != neg) {
        return Err(Error::Precondition(format!(
            "boundary component {component} is not a one-vertex torus"
        )));
    }
    // r1 = s1 E1 + s2 E2 + s3 E3 = 0, so with v = s1 E1, w = s2 E2 and
    // x = -s3 E3 we get v + w = x, and E1, E2 form a basis.
    let (s1, s2) = (r1[0], r1[1]);
    Ok(EdgeClassTriple {
        edges,
        classes: [[s1, 0], [0, s2], [s1, s2]],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homology::{boundary_homology_z2, homology_h1};

    #[test]
    fn lone_tetrahedron_edges_are_embedded_and_coembedded() {
        let t = fixtures::lone_tetrahedron();
        for e in 0..6 {
            let s = boundary_edge_status(&t, e).unwrap();
            assert!(s.embedded && s.coembedded);
        }
    }

    #[test]
    fn one_vertex_torus_edges_are_not_embedded() {
        let t = fixtures::torus_cross_interval();
        for bc in t.boundary_components() {
            for &e in &bc.edges {
                let s = boundary_edge_status(&t, e).unwrap();
                assert!(!s.embedded && !s.coembedded);
            }
        }
    }

    #[test]
    fn interior_edge_is_rejected() {
        let t = fixtures::figure_eight();
        assert!(matches!(boundary_edge_status(&t, 0), Err(Error::NotBoundaryEdge(_))));
    }

    #[test]
    fn two_two_adds_a_tetrahedron_and_keeps_boundary() {
        let t = fixtures::lone_tetrahedron();
        let m = two_two_move(&t, 0).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.boundary_triangle_count(), 4);
        assert!(m.is_orientable());
        assert_eq!(homology_h1(&m).unwrap(), homology_h1(&t).unwrap());
        // The new edge is coembedded because the old one was embedded.
        let new_edge = m.skeleton().edge_of[1][edge_number(2, 3)];
        assert!(boundary_edge_status(&m, new_edge).unwrap().coembedded);
    }

    #[test]
    fn fold_on_ball_removes_two_triangles() {
        let t = fixtures::lone_tetrahedron();
        let f = fold_along_edge(&t, 0).unwrap();
        assert_eq!(f.boundary_triangle_count(), 2);
        assert!(f.is_orientable());
        assert!(homology_h1(&f).unwrap().is_trivial());
        assert!(f.boundary_components()[0].is_sphere());
    }

    #[test]
    fn simplify_cusps_leaves_minimal_input_alone() {
        let t = fixtures::torus_cross_interval();
        assert_eq!(simplify_cusps(&t).unwrap(), t);
    }

    #[test]
    fn simplify_cusps_on_two_two_moved_product() {
        let t = fixtures::torus_cross_interval();
        let e = t.boundary_components()[0].edges[0];
        let moved = two_two_move(&t, e).unwrap();
        let s = simplify_cusps(&moved).unwrap();
        for bc in s.boundary_components() {
            assert!(bc.is_minimal());
        }
        assert_eq!(homology_h1(&s).unwrap(), homology_h1(&t).unwrap());
        assert_eq!(boundary_homology_z2(&s), vec![2, 2]);
    }

    #[test]
    fn fillings_of_product_are_solid_tori_homologically() {
        let t = fixtures::torus_cross_interval();
        let fills = fold_fillings(&t, 0).unwrap();
        assert_eq!(fills.len(), 3);
        for f in fills {
            assert_eq!(f.boundary_components().len(), 1);
            assert_eq!(homology_h1(&f).unwrap(), crate::homology::HomologyGroup::free(1));
        }
    }

    #[test]
    fn edge_classes_of_minimal_torus() {
        let t = fixtures::torus_cross_interval();
        for c in 0..2 {
            let triple = boundary_edge_classes(&t, c).unwrap();
            let [v, w, x] = triple.classes;
            assert_eq!([v[0] + w[0], v[1] + w[1]], x);
            assert_eq!((v[0] * w[1] - v[1] * w[0]).abs(), 1);
            for g in [[1, 0], [0, 1], [1, 1], [2, 3], [-5, 5]] {
                assert!(!triple.all_congruent_mod(g));
            }
        }
    }

    #[test]
    fn congruence_mod_g() {
        let t = EdgeClassTriple {
            edges: [0, 1, 2],
            classes: [[2, 0], [4, 0], [6, 0]],
        };
        assert!(t.all_congruent_mod([2, 0]));
        assert!(!t.all_congruent_mod([4, 0]));
        assert!(!t.all_congruent_mod([0, 1]));
    }
}
