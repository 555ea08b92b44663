//! Truncation of ideal vertices, and size reduction by vertex collapses.
//!
//! Truncation cones each tetrahedron from its centre over its truncated
//! boundary: every face becomes a polygon (a triangle with each ideal
//! corner cut off) coned from the face centre, and each ideal corner
//! contributes one cap triangle. A tetrahedron with all four vertices ideal
//! becomes 4 * 6 + 4 = 28 tetrahedra.
//!
//! Simplification contracts edges between distinct vertices (flattening the
//! tetrahedra around them), applies 3-2 moves, and uses 4-4 and 2-3 moves
//! to leave local minima. Every move checks that it keeps the topology.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{edge_number, Perm4};
use crate::triangulation::{Gluing, LinkType, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Point {
    Centre,
    FaceCentre(usize),
    Vertex(usize),
    /// Point on edge `{a, b}` near the ideal vertex `a`.
    Near(usize, usize),
}

impl Point {
    fn map(self, p: Perm4, face: usize) -> Point {
        match self {
            Point::Centre => Point::Centre,
            Point::FaceCentre(f) => {
                debug_assert_eq!(f, face);
                Point::FaceCentre(p.apply(f))
            }
            Point::Vertex(a) => Point::Vertex(p.apply(a)),
            Point::Near(a, b) => Point::Near(p.apply(a), p.apply(b)),
        }
    }
}

/// Boundary polygon of face `f`, in cyclic order.
fn face_polygon(f: usize, ideal: [bool; 4]) -> Vec<Point> {
    let vs: Vec<usize> = (0..4).filter(|&v| v != f).collect();
    let mut out = vec![];
    for i in 0..3 {
        let (prev, a, next) = (vs[(i + 2) % 3], vs[i], vs[(i + 1) % 3]);
        if ideal[a] {
            out.push(Point::Near(a, prev));
            out.push(Point::Near(a, next));
        } else {
            out.push(Point::Vertex(a));
        }
    }
    out
}

fn pieces(ideal: [bool; 4]) -> Vec<[Point; 4]> {
    let mut out = vec![];
    for f in 0..4 {
        let poly = face_polygon(f, ideal);
        for i in 0..poly.len() {
            out.push([Point::Centre, Point::FaceCentre(f), poly[i], poly[(i + 1) % poly.len()]]);
        }
    }
    for a in 0..4 {
        if ideal[a] {
            let o: Vec<usize> = (0..4).filter(|&v| v != a).collect();
            out.push([Point::Centre, Point::Near(a, o[0]), Point::Near(a, o[1]), Point::Near(a, o[2])]);
        }
    }
    out
}

fn face_key(pts: &[Point; 4], skip: usize) -> Vec<Point> {
    let mut k: Vec<Point> = (0..4).filter(|&i| i != skip).map(|i| pts[i]).collect();
    k.sort();
    k
}

/// Replaces every ideal vertex by a boundary component. Triangulations
/// without ideal vertices are returned unchanged.
pub fn truncate(tri: &Triangulation) -> Result<Triangulation> {
    let sk = tri.skeleton();
    if sk.vertices.iter().all(|v| !v.link.is_ideal()) {
        return Ok(tri.clone());
    }
    let n = tri.size();
    let mut per_tet = vec![];
    let mut offset = vec![0usize; n + 1];
    for t in 0..n {
        let ideal = [0, 1, 2, 3].map(|v| sk.vertices[sk.vertex_of[t][v]].link.is_ideal());
        let p = pieces(ideal);
        offset[t + 1] = offset[t] + p.len();
        per_tet.push(p);
    }
    // Faces of pieces by their point sets, per tetrahedron.
    let lookup: Vec<HashMap<Vec<Point>, Vec<(usize, usize)>>> = per_tet
        .iter()
        .map(|ps| {
            let mut m: HashMap<Vec<Point>, Vec<(usize, usize)>> = HashMap::new();
            for (i, pts) in ps.iter().enumerate() {
                for skip in 0..4 {
                    m.entry(face_key(pts, skip)).or_default().push((i, skip));
                }
            }
            m
        })
        .collect();
    let mut rows: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; offset[n]];
    for t in 0..n {
        for (i, pts) in per_tet[t].iter().enumerate() {
            for skip in 0..4 {
                let face_pts: Vec<Point> = (0..4).filter(|&k| k != skip).map(|k| pts[k]).collect();
                let (target_tet, image): (usize, Vec<Point>) = if skip == 0 {
                    // On the surface of the original tetrahedron.
                    let Point::FaceCentre(f) = pts[1] else { continue };
                    match tri.adjacent(t, f) {
                        None => continue,
                        Some(g) => (g.tet, face_pts.iter().map(|p| p.map(g.perm, f)).collect()),
                    }
                } else {
                    (t, face_pts.clone())
                };
                let mut key = image.clone();
                key.sort();
                let Some(&(j, jskip)) = lookup[target_tet]
                    .get(&key)
                    .and_then(|c| c.iter().find(|&&(j, js)| !(target_tet == t && j == i && js == skip)))
                else {
                    return Err(Error::Precondition("truncation: unmatched face".into()));
                };
                let target = &per_tet[target_tet][j];
                let mut img = [0u8; 4];
                img[skip] = jskip as u8;
                for (k, fp) in (0..4).filter(|&k| k != skip).zip(image.iter()) {
                    img[k] = target.iter().position(|q| q == fp).expect("matched point") as u8;
                }
                let perm = Perm4::new(img).expect("bijection");
                rows[offset[t] + i][skip] = Some(Gluing {
                    tet: offset[target_tet] + j,
                    perm,
                });
            }
        }
    }
    Triangulation::new(rows)
}

fn transposition(a: usize, b: usize) -> Perm4 {
    let mut img = [0u8, 1, 2, 3];
    img.swap(a, b);
    Perm4::new(img).expect("transposition")
}

/// Replaces a ball made of the tetrahedra in `region` by the tetrahedra in
/// `new`. Vertices are given abstract labels; the outer faces of both sides
/// must match by label set. Returns `None` when they do not, or when the
/// result is not a valid triangulation.
fn retriangulate(tri: &Triangulation, region: &[(usize, [usize; 4])], new: &[[usize; 4]]) -> Option<Triangulation> {
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, &(t, _)) in region.iter().enumerate() {
        if slot.insert(t, i).is_some() {
            return None;
        }
    }
    let key = |l: &[usize; 4], f: usize| {
        let mut k: Vec<usize> = (0..4).filter(|&i| i != f).map(|i| l[i]).collect();
        k.sort();
        k
    };
    let mut outer: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
    for &(t, l) in region {
        for f in 0..4 {
            let internal = tri.adjacent(t, f).map_or(false, |g| {
                slot.get(&g.tet).map_or(false, |&j| {
                    let lu = region[j].1;
                    (0..4).filter(|&k| k != f).all(|k| l[k] == lu[g.perm.apply(k)])
                })
            });
            if !internal && outer.insert(key(&l, f), (t, f)).is_some() {
                return None;
            }
        }
    }
    let mut faces: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (n, l) in new.iter().enumerate() {
        for f in 0..4 {
            faces.entry(key(l, f)).or_default().push((n, f));
        }
    }
    let singles = faces.values().filter(|v| v.len() == 1).count();
    if singles != outer.len() || faces.iter().any(|(k, v)| v.len() > 2 || (v.len() == 1 && !outer.contains_key(k))) {
        return None;
    }
    let kept: Vec<usize> = (0..tri.size()).filter(|t| !slot.contains_key(t)).collect();
    let mut index = vec![usize::MAX; tri.size()];
    for (i, &t) in kept.iter().enumerate() {
        index[t] = i;
    }
    let base = kept.len();
    // Vertex map from old region tetrahedron positions to positions in the
    // new tetrahedron holding the same outer face.
    let to_new = |t: usize, f: usize| -> (usize, Perm4) {
        let l = region[slot[&t]].1;
        let (n, nf) = faces[&key(&l, f)][0];
        let mut img = [0u8; 4];
        for k in 0..4 {
            img[k] = if k == f { nf as u8 } else { new[n].iter().position(|&x| x == l[k]).expect("label") as u8 };
        }
        (base + n, Perm4::new(img).expect("bijection"))
    };
    let mut rows: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; base + new.len()];
    for &t in &kept {
        for f in 0..4 {
            rows[index[t]][f] = tri.adjacent(t, f).map(|g| match slot.get(&g.tet) {
                None => Gluing { tet: index[g.tet], perm: g.perm },
                Some(_) => {
                    let (nt, m) = to_new(g.tet, g.perm.apply(f));
                    Gluing { tet: nt, perm: m.compose(&g.perm) }
                }
            });
        }
    }
    for (n, l) in new.iter().enumerate() {
        for f in 0..4 {
            let v = &faces[&key(l, f)];
            rows[base + n][f] = if v.len() == 2 {
                let (m, mf) = if v[0] == (n, f) { v[1] } else { v[0] };
                let mut img = [0u8; 4];
                for k in 0..4 {
                    img[k] = if k == f { mf as u8 } else { new[m].iter().position(|&x| x == l[k]).expect("label") as u8 };
                }
                Some(Gluing { tet: base + m, perm: Perm4::new(img)? })
            } else {
                let (t, of) = outer[&key(l, f)];
                let (_, m1) = to_new(t, of);
                let m1_inv = m1.inverse();
                tri.adjacent(t, of).map(|g| match slot.get(&g.tet) {
                    None => Gluing { tet: index[g.tet], perm: g.perm.compose(&m1_inv) },
                    Some(_) => {
                        let (nt, m2) = to_new(g.tet, g.perm.apply(of));
                        Gluing { tet: nt, perm: m2.compose(&g.perm.compose(&m1_inv)) }
                    }
                })
            };
        }
    }
    Triangulation::new(rows).ok()
}

/// Labels of the tetrahedra around an interior edge: the edge ends are 0
/// and 1, the link vertices 2, 3, ... in ring order.
fn edge_star(tri: &Triangulation, edge: usize) -> Option<Vec<(usize, [usize; 4])>> {
    let class = &tri.skeleton().edges[edge];
    if class.boundary {
        return None;
    }
    let (t, e) = class.embeddings[0];
    let ring = tri.edge_ring(t, e)?;
    let k = ring.len();
    Some(
        ring.iter()
            .enumerate()
            .map(|(i, &(t, p))| {
                let mut l = [0usize; 4];
                l[p.apply(0)] = 0;
                l[p.apply(1)] = 1;
                l[p.apply(2)] = 2 + i;
                l[p.apply(3)] = 2 + (i + 1) % k;
                (t, l)
            })
            .collect(),
    )
}

/// Replaces the three tetrahedra around an interior edge of degree three
/// by two.
pub fn three_two(tri: &Triangulation, edge: usize) -> Option<Triangulation> {
    let star = edge_star(tri, edge)?;
    if star.len() != 3 {
        return None;
    }
    retriangulate(tri, &star, &[[0, 2, 3, 4], [1, 2, 3, 4]])
}

/// Retriangulates the octahedron around an interior edge of degree four,
/// using the link diagonal through link vertex `first` (0 or 1).
pub fn four_four(tri: &Triangulation, edge: usize, first: usize) -> Option<Triangulation> {
    let star = edge_star(tri, edge)?;
    if star.len() != 4 {
        return None;
    }
    let (x, y) = (2 + first, 4 + first);
    let (u, v) = (3 - first, 5 - first);
    retriangulate(tri, &star, &[[x, y, 0, u], [x, y, u, 1], [x, y, 1, v], [x, y, v, 0]])
}

/// Replaces the two tetrahedra on either side of an interior triangle by
/// three around a new edge.
pub fn two_three(tri: &Triangulation, tet: usize, face: usize) -> Option<Triangulation> {
    let g = tri.adjacent(tet, face)?;
    if g.tet == tet {
        return None;
    }
    let mut l = [0usize; 4];
    let mut lu = [0usize; 4];
    l[face] = 0;
    lu[g.perm.apply(face)] = 1;
    for (i, k) in (0..4).filter(|&k| k != face).enumerate() {
        l[k] = 2 + i;
        lu[g.perm.apply(k)] = 2 + i;
    }
    retriangulate(tri, &[(tet, l), (g.tet, lu)], &[[0, 1, 2, 3], [0, 1, 3, 4], [0, 1, 4, 2]])
}

/// Contracts an edge joining two distinct vertices, flattening the
/// tetrahedra around it. Returns `None` when the move does not apply or
/// might change the topology.
pub fn collapse_edge(tri: &Triangulation, edge: usize) -> Option<Triangulation> {
    let sk = tri.skeleton();
    let class = sk.edges.get(edge)?;
    let [u, v] = class.ends;
    let (lu, lv) = (sk.vertices[u].link, sk.vertices[v].link);
    if u == v || (lu.is_ideal() && lv.is_ideal()) {
        return None;
    }
    let on_boundary = |l: LinkType| l == LinkType::Disc;
    if (on_boundary(lu) && on_boundary(lv) && !class.boundary)
        || (lu.is_ideal() && on_boundary(lv))
        || (lv.is_ideal() && on_boundary(lu))
    {
        return None;
    }
    let mut ring: HashMap<usize, (usize, usize)> = HashMap::new();
    for &(t, e) in &class.embeddings {
        let [a, b] = crate::perm::EDGE_VERTICES[e];
        if ring.insert(t, (a, b)).is_some() {
            return None;
        }
    }
    // Edges and triangles that get identified must not close up a loop.
    let mut edges = crate::dsu::Dsu::new(sk.edges.len());
    let mut seen_triangles = std::collections::HashSet::new();
    for (&t, &(a, b)) in &ring {
        for k in crate::perm::complement_pair(a, b) {
            let face = crate::perm::fourth_vertex(a, b, k);
            if seen_triangles.insert(sk.triangle_of[t][face])
                && !edges.union(sk.edge_of[t][edge_number(a, k)], sk.edge_of[t][edge_number(b, k)])
            {
                return None;
            }
        }
    }
    let boundary_node = sk.triangles.len();
    let mut triangles = crate::dsu::Dsu::new(boundary_node + 1);
    for (&t, &(a, b)) in &ring {
        let node = |f: usize| {
            if tri.adjacent(t, f).is_none() {
                boundary_node
            } else {
                sk.triangle_of[t][f]
            }
        };
        if !triangles.union(node(a), node(b)) {
            return None;
        }
    }

    let mut index = vec![usize::MAX; tri.size()];
    let mut next = 0;
    for t in 0..tri.size() {
        if !ring.contains_key(&t) {
            index[t] = next;
            next += 1;
        }
    }
    let mut rows: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; next];
    for t in 0..tri.size() {
        if ring.contains_key(&t) {
            continue;
        }
        for f in 0..4 {
            let Some(mut g) = tri.adjacent(t, f) else { continue };
            // Walk through flattened tetrahedra, tracking the map from t's
            // positions to the current tetrahedron's positions.
            let mut m = g.perm;
            let mut cur = g.tet;
            let mut cur_face = m.apply(f);
            let mut steps = 0;
            let result = loop {
                let Some(&(a, b)) = ring.get(&cur) else {
                    break Some(Gluing { tet: index[cur], perm: m });
                };
                if cur_face != a && cur_face != b {
                    return None;
                }
                let swap = transposition(a, b);
                let out_face = swap.apply(cur_face);
                m = swap.compose(&m);
                match tri.adjacent(cur, out_face) {
                    None => break None,
                    Some(h) => {
                        m = h.perm.compose(&m);
                        cur_face = h.perm.apply(out_face);
                        cur = h.tet;
                    }
                }
                steps += 1;
                if steps > ring.len() {
                    return None;
                }
            };
            g = match result {
                None => {
                    rows[index[t]][f] = None;
                    continue;
                }
                Some(g) => g,
            };
            if g.tet == index[t] && g.perm.apply(f) == f {
                return None;
            }
            rows[index[t]][f] = Some(g);
        }
    }
    let out = Triangulation::new(rows).ok()?;
    let genus = |x: &Triangulation| -> Vec<i64> {
        let mut g: Vec<i64> = x.boundary_components().iter().map(|b| b.euler).collect();
        g.sort();
        g
    };
    let same = out.is_orientable() == tri.is_orientable()
        && out.vertex_count() + 1 == tri.vertex_count()
        && out.skeleton().component_count == sk.component_count
        && genus(&out) == genus(tri)
        && out.ideal_vertices().len() == tri.ideal_vertices().len();
    same.then_some(out)
}

/// Repeatedly collapses edges, largest degree first, until none applies.
pub fn collapse_edges(tri: &Triangulation) -> Triangulation {
    let mut cur = tri.clone();
    'outer: loop {
        let mut order: Vec<usize> = (0..cur.edge_count()).collect();
        order.sort_by_key(|&e| std::cmp::Reverse(cur.skeleton().edges[e].embeddings.len()));
        for e in order {
            if let Some(next) = collapse_edge(&cur, e) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

fn reduce_greedy(tri: &Triangulation) -> Triangulation {
    let mut cur = collapse_edges(tri);
    'outer: loop {
        for e in 0..cur.edge_count() {
            if cur.skeleton().edges[e].embeddings.len() == 3 {
                if let Some(next) = three_two(&cur, e) {
                    cur = collapse_edges(&next);
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Attempts per random walk phase, and the longest walk tried.
const WALK_ATTEMPTS: usize = 600;
const WALK_LENGTH: usize = 12;

fn random_move<R: Rng>(tri: &Triangulation, rng: &mut R) -> Option<Triangulation> {
    if rng.gen_bool(0.5) {
        let edges: Vec<usize> = (0..tri.edge_count()).filter(|&e| tri.skeleton().edges[e].embeddings.len() == 4).collect();
        let &e = edges.choose(rng)?;
        four_four(tri, e, rng.gen_range(0..2))
    } else {
        two_three(tri, rng.gen_range(0..tri.size()), rng.gen_range(0..4))
    }
}

/// Random 2-3 and 4-4 moves followed by greedy reduction, until something
/// smaller than `tri` turns up.
fn random_walk<R: Rng>(tri: &Triangulation, rng: &mut R) -> Option<Triangulation> {
    for _ in 0..WALK_ATTEMPTS {
        let mut cur = tri.clone();
        for _ in 0..rng.gen_range(1..=WALK_LENGTH) {
            if let Some(next) = random_move(&cur, rng) {
                cur = next;
            }
        }
        let cur = reduce_greedy(&cur);
        if cur.size() < tri.size() {
            return Some(cur);
        }
    }
    None
}

/// Shrinks a triangulation by vertex collapses and 3-2 moves, using 4-4
/// and 2-3 moves to get out of local minima. The topology is unchanged.
/// Deterministic: the random walks use a fixed seed.
pub fn simplify(tri: &Triangulation) -> Triangulation {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cur = reduce_greedy(tri);
    loop {
        let mut best: Option<Triangulation> = None;
        for e in 0..cur.edge_count() {
            if cur.skeleton().edges[e].embeddings.len() != 4 {
                continue;
            }
            for first in 0..2 {
                if let Some(next) = four_four(&cur, e, first) {
                    let next = reduce_greedy(&next);
                    if next.size() < best.as_ref().map_or(cur.size(), |b| b.size()) {
                        best = Some(next);
                    }
                }
            }
        }
        if best.is_none() {
            for t in 0..cur.size() {
                for f in 0..4 {
                    if let Some(next) = two_three(&cur, t, f) {
                        let next = reduce_greedy(&next);
                        if next.size() < best.as_ref().map_or(cur.size(), |b| b.size()) {
                            best = Some(next);
                        }
                    }
                }
            }
        }
        if best.is_none() && cur.size() > 1 {
            best = random_walk(&cur, &mut rng);
        }
        match best {
            Some(b) => cur = b,
            None => return cur,
        }
    }
}

/// Cones every boundary component to a single vertex: one new tetrahedron
/// over each boundary triangle, with apex at vertex 3. Torus boundary
/// components become ideal vertices.
pub fn cone_boundary(tri: &Triangulation) -> Result<Triangulation> {
    let n = tri.size();
    let faces: Vec<(usize, usize)> = (0..n)
        .flat_map(|t| (0..4).map(move |f| (t, f)))
        .filter(|&(t, f)| tri.adjacent(t, f).is_none())
        .collect();
    let index: HashMap<(usize, usize), usize> = faces.iter().enumerate().map(|(k, &tf)| (tf, n + k)).collect();
    // Cone vertex i < 3 sits over vertex sigma(i) of the boundary face.
    let sigma = |f: usize| -> Perm4 {
        let vs: Vec<usize> = (0..4).filter(|&v| v != f).collect();
        Perm4::from_three([0, 1, 2], [vs[0], vs[1], vs[2]])
    };
    let mut list = vec![];
    for (k, &(t, f)) in faces.iter().enumerate() {
        let c = n + k;
        let s = sigma(f);
        list.push((c, 3, t, s));
        for i in 0..3 {
            let [j, l] = [(i + 1) % 3, (i + 2) % 3];
            let end = tri.walk_boundary_edge(t, f, s.apply(j), s.apply(l));
            let d = index[&(end.tet, end.face)];
            let inv = sigma(end.face).inverse();
            let i2 = inv.apply(end.opposite);
            if (c, i) < (d, i2) {
                let p = Perm4::from_three([j, l, 3], [inv.apply(end.a), inv.apply(end.b), 3]);
                list.push((c, i, d, p));
            }
        }
    }
    let mut gluings: Vec<(usize, usize, usize, Perm4)> = vec![];
    for t in 0..n {
        for f in 0..4 {
            if let Some(g) = tri.adjacent(t, f) {
                if (t, f) < (g.tet, g.perm.apply(f)) {
                    gluings.push((t, f, g.tet, g.perm));
                }
            }
        }
    }
    gluings.extend(list);
    Triangulation::from_gluings(n + faces.len(), &gluings)
}

/// Truncates ideal vertices and then shrinks the result, leaving every
/// torus boundary component with one vertex.
pub fn truncate_and_simplify(tri: &Triangulation) -> Result<Triangulation> {
    let cur = simplify(&truncate(tri)?);
    if !cur.boundary_components().iter().all(|b| b.is_torus()) {
        return Ok(cur);
    }
    Ok(simplify(&crate::moves::simplify_cusps(&cur)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::Presentation;
    use crate::homology::{homology_h1, HomologyGroup};

    #[test]
    fn coning_undoes_truncation() {
        for t in [fixtures::figure_eight(), fixtures::whitehead_link(), fixtures::solid_torus()] {
            let finite = truncate_and_simplify(&t).unwrap();
            let coned = cone_boundary(&finite).unwrap();
            assert!(!coned.has_boundary_faces());
            let links: Vec<LinkType> = coned.ideal_vertices().iter().map(|&v| coned.skeleton().vertices[v].link).collect();
            assert_eq!(links.len(), finite.boundary_components().len());
            assert!(links.iter().all(|&l| l == LinkType::Torus));
            assert_eq!(homology_h1(&coned).unwrap(), homology_h1(&t).unwrap());
            assert_eq!(homology_h1(&simplify(&coned)).unwrap(), homology_h1(&t).unwrap());
        }
    }

    #[test]
    fn truncated_figure_eight() {
        let t = truncate(&fixtures::figure_eight()).unwrap();
        assert_eq!(t.size(), 56);
        assert!(!t.is_ideal());
        assert!(t.is_orientable());
        assert_eq!(t.boundary_components().len(), 1);
        assert!(t.boundary_components()[0].is_torus());
        assert_eq!(homology_h1(&t).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn truncation_keeps_cusp_count_and_homology() {
        for tri in [fixtures::trefoil(), fixtures::whitehead_link(), fixtures::torus_link_2_4()] {
            let t = truncate(&tri).unwrap();
            assert_eq!(t.boundary_components().len(), tri.ideal_vertices().len());
            assert!(t.boundary_components().iter().all(|b| b.is_torus()));
            assert_eq!(homology_h1(&t).unwrap(), homology_h1(&tri).unwrap());
        }
    }

    #[test]
    fn finite_input_is_unchanged() {
        let t = fixtures::solid_torus();
        assert_eq!(truncate(&t).unwrap(), t);
    }

    #[test]
    fn collapsed_truncations_keep_topology() {
        for tri in [
            fixtures::figure_eight(),
            fixtures::trefoil(),
            fixtures::whitehead_link(),
            fixtures::torus_link_2_4(),
        ] {
            let t = truncate_and_simplify(&tri).unwrap();
            assert!(t.size() <= 20, "{} tetrahedra", t.size());
            assert!(t.is_orientable());
            assert_eq!(t.boundary_components().len(), tri.ideal_vertices().len());
            assert!(t.boundary_components().iter().all(|b| b.is_torus()));
            assert_eq!(homology_h1(&t).unwrap(), homology_h1(&tri).unwrap());
            let homs = |x: &Triangulation, n| {
                let mut p = Presentation::of(x);
                p.simplify(200);
                p.count_homs_to_symmetric(n, 100_000_000).expect("small presentation")
            };
            assert_eq!(homs(&t, 3), homs(&tri, 3));
            assert_eq!(homs(&t, 4), homs(&tri, 4));
            assert!(t.boundary_components().iter().all(|b| b.is_minimal()));
        }
    }

    #[test]
    fn local_moves_keep_invariants() {
        let t = truncate_and_simplify(&fixtures::figure_eight()).unwrap();
        let h = homology_h1(&t).unwrap();
        let mut tried = 0;
        for e in 0..t.edge_count() {
            for first in 0..2 {
                if let Some(m) = four_four(&t, e, first) {
                    assert_eq!(m.size(), t.size());
                    assert_eq!(homology_h1(&m).unwrap(), h);
                    tried += 1;
                }
            }
        }
        for tet in 0..t.size() {
            for f in 0..4 {
                if let Some(m) = two_three(&t, tet, f) {
                    assert_eq!(m.size(), t.size() + 1);
                    assert_eq!(homology_h1(&m).unwrap(), h);
                    for e in 0..m.edge_count() {
                        if let Some(back) = three_two(&m, e) {
                            assert_eq!(back.size(), t.size());
                            assert_eq!(homology_h1(&back).unwrap(), h);
                        }
                    }
                    tried += 1;
                }
            }
        }
        assert!(tried > 0);
    }
}
