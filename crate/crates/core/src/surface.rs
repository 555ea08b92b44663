//! Normal surfaces rebuilt from standard coordinates.
//!
//! Inside a tetrahedron the discs of each type are stacked: triangle `k` at
//! vertex `v` is the `k`-th one out from `v`, and quad `k` of type `q` is
//! the `k`-th one out from the side of `QUAD_PAIRS[q][0]` (side A). Around
//! vertex `v` of face `f`, the arcs are numbered outward from `v`: first the
//! triangles at `v`, then the quads whose arc on `f` cuts off `v`. Points on
//! edge `{a, b}` are numbered from the lower vertex. Gluing a face keeps the
//! arc and point numbering, which is how discs are matched across faces.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::dsu::{Dsu, ParityDsu};
use crate::error::{Error, Result};
use crate::normal::{to_standard, Coords, NormalVector, QUAD_PAIRS};
use crate::perm::{edge_number, EDGE_VERTICES};
use crate::triangulation::Triangulation;

/// Largest number of normal discs handled.
pub const MAX_DISCS: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Sphere,
    Disc,
    ProjectivePlane,
    Torus,
    Annulus,
    KleinBottle,
    MobiusBand,
}

/// One boundary curve and its class in `H1` of the boundary component it
/// lies on, with Z/2 coefficients, as intersection parities against
/// [`boundary_cycle_basis`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub boundary_component: usize,
    pub class: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub euler: i64,
    pub orientable: bool,
    pub connected: bool,
    pub components: usize,
    pub boundary_curves: Vec<BoundaryCurve>,
    /// The complement of the surface is disconnected.
    pub separating: bool,
    /// Some component is the link of a vertex.
    pub vertex_linking: bool,
    /// Set for connected surfaces of nonnegative Euler characteristic.
    pub kind: Option<SurfaceKind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Disc {
    Triangle { tet: usize, vertex: usize, k: u64 },
    Quad { tet: usize, k: u64 },
}

/// Disc counts and index arithmetic for one surface.
pub(crate) struct Layout {
    pub tri: Vec<[u64; 4]>,
    pub quad: Vec<Option<(usize, u64)>>,
    disc_base: Vec<u64>,
    point_base: Vec<[u64; 6]>,
    pub discs: u64,
    pub points: u64,
}

impl Layout {
    pub fn new(tri: &Triangulation, s: &NormalVector) -> Result<Layout> {
        if s.coords != Coords::Standard || s.entries.len() != 7 * tri.size() {
            return Err(Error::Inadmissible("expected a standard vector for this triangulation".into()));
        }
        if !s.is_admissible() {
            return Err(Error::Inadmissible("two quad types in one tetrahedron".into()));
        }
        let n = tri.size();
        let total: u64 = s.entries.iter().sum();
        if total > MAX_DISCS {
            return Err(Error::ResourceExceeded(format!("surface has {total} discs")));
        }
        let mut l = Layout {
            tri: (0..n).map(|t| [0, 1, 2, 3].map(|v| s.triangle(t, v))).collect(),
            quad: (0..n).map(|t| s.quad_type(t)).collect(),
            disc_base: vec![],
            point_base: vec![],
            discs: 0,
            points: 0,
        };
        for t in 0..n {
            l.disc_base.push(l.discs);
            l.discs += l.tri[t].iter().sum::<u64>() + l.nq(t);
            let mut pb = [0; 6];
            for (e, &[a, b]) in EDGE_VERTICES.iter().enumerate() {
                pb[e] = l.points;
                l.points += l.weight(t, a, b);
            }
            l.point_base.push(pb);
        }
        Ok(l)
    }

    pub fn nq(&self, t: usize) -> u64 {
        self.quad[t].map_or(0, |(_, n)| n)
    }

    /// True if `v` lies on side A of the quads of `t`.
    pub fn side_a(&self, t: usize, v: usize) -> bool {
        self.quad[t].is_some_and(|(q, _)| QUAD_PAIRS[q][0].contains(&v))
    }

    pub fn crosses(&self, t: usize, a: usize, b: usize) -> bool {
        self.quad[t].is_some() && self.side_a(t, a) != self.side_a(t, b)
    }

    pub fn weight(&self, t: usize, a: usize, b: usize) -> u64 {
        self.tri[t][a] + self.tri[t][b] + if self.crosses(t, a, b) { self.nq(t) } else { 0 }
    }

    /// The vertex paired with `f` by the quad type of `t`.
    pub fn partner(&self, t: usize, f: usize) -> Option<usize> {
        let (q, _) = self.quad[t]?;
        QUAD_PAIRS[q].iter().find(|p| p.contains(&f)).map(|p| p[0] + p[1] - f)
    }

    /// Number of arcs around vertex `v` on face `f`.
    pub fn arc_count(&self, t: usize, f: usize, v: usize) -> u64 {
        self.tri[t][v] + if self.partner(t, f) == Some(v) { self.nq(t) } else { 0 }
    }

    /// Position of quad `k` counted outward from the side of `v`.
    pub fn quad_rank(&self, t: usize, v: usize, k: u64) -> u64 {
        if self.side_a(t, v) {
            k
        } else {
            self.nq(t) - 1 - k
        }
    }

    pub fn disc_index(&self, d: Disc) -> usize {
        let i = match d {
            Disc::Triangle { tet, vertex, k } => self.disc_base[tet] + self.tri[tet][..vertex].iter().sum::<u64>() + k,
            Disc::Quad { tet, k } => self.disc_base[tet] + self.tri[tet].iter().sum::<u64>() + k,
        };
        i as usize
    }

    pub fn disc_list(&self) -> Vec<Disc> {
        let mut out = Vec::with_capacity(self.discs as usize);
        for t in 0..self.tri.len() {
            for v in 0..4 {
                out.extend((0..self.tri[t][v]).map(|k| Disc::Triangle { tet: t, vertex: v, k }));
            }
            out.extend((0..self.nq(t)).map(|k| Disc::Quad { tet: t, k }));
        }
        out
    }

    /// Index of the point at position `pos` from `a` on edge `{a, b}`.
    pub fn point_index(&self, t: usize, a: usize, b: usize, pos: u64) -> usize {
        let e = edge_number(a, b);
        let from_low = if a < b { pos } else { self.weight(t, a, b) - 1 - pos };
        (self.point_base[t][e] + from_low) as usize
    }

    /// The disc containing the arc at `pos` around `v` on face `f`.
    pub fn disc_of_arc(&self, t: usize, v: usize, pos: u64) -> Disc {
        if pos < self.tri[t][v] {
            Disc::Triangle { tet: t, vertex: v, k: pos }
        } else {
            let r = pos - self.tri[t][v];
            Disc::Quad { tet: t, k: self.quad_rank(t, v, r) }
        }
    }

    /// Position from `a` of the point where disc `d` meets edge `{a, b}`.
    pub fn position_on_edge(&self, d: Disc, a: usize) -> u64 {
        match d {
            Disc::Triangle { k, .. } => k,
            Disc::Quad { tet, k } => self.tri[tet][a] + self.quad_rank(tet, a, k),
        }
    }

    /// The cycle of edges `(from, to)` a disc meets, in boundary order.
    /// Consecutive entries share a vertex.
    pub fn disc_edges(&self, d: Disc) -> Vec<(usize, usize)> {
        match d {
            Disc::Triangle { vertex, .. } => {
                (0..4).filter(|&b| b != vertex).map(|b| (vertex, b)).collect()
            }
            Disc::Quad { tet, .. } => {
                let (q, _) = self.quad[tet].expect("quad disc in a tetrahedron without quads");
                let [[a1, a2], [b1, b2]] = QUAD_PAIRS[q];
                vec![(a1, b1), (a2, b1), (a2, b2), (a1, b2)]
            }
        }
    }

    /// Whether the boundary cycle of `d` runs along its arc around `v` from
    /// edge `{v, x}` to edge `{v, y}`.
    pub fn runs(&self, d: Disc, v: usize, x: usize, y: usize) -> bool {
        let edges = self.disc_edges(d);
        let m = edges.len();
        let has = |e: (usize, usize), a: usize, b: usize| (e.0 == a && e.1 == b) || (e.0 == b && e.1 == a);
        (0..m).any(|i| has(edges[i], v, x) && has(edges[(i + 1) % m], v, y))
    }
}

/// Arcs and their endpoints, grouped into surface components.
pub(crate) struct Assembly {
    pub layout: Layout,
    pub discs: Vec<Disc>,
    /// Component of each disc.
    pub component: Vec<usize>,
    pub components: usize,
    pub orientable: Vec<bool>,
    pub euler: Vec<i64>,
    /// Boundary arcs as pairs of point classes, with their component.
    pub boundary_arcs: Vec<(usize, usize, usize)>,
    /// Class of every point, and the edge class it lies on.
    pub point_class: Vec<usize>,
    pub point_edge: Vec<usize>,
}

pub(crate) fn assemble(tri: &Triangulation, s: &NormalVector) -> Result<Assembly> {
    let l = Layout::new(tri, s)?;
    let discs = l.disc_list();
    let nd = discs.len();
    let mut orient = ParityDsu::new(nd);
    let mut conflicts = vec![];
    let mut points = Dsu::new(l.points as usize);
    let mut arc_disc = vec![];
    let mut boundary_raw = vec![];
    for t in 0..tri.size() {
        for f in 0..4 {
            let face: Vec<usize> = (0..4).filter(|&v| v != f).collect();
            match tri.adjacent(t, f) {
                None => {
                    for &v in &face {
                        let [x, y] = others(&face, v);
                        for pos in 0..l.arc_count(t, f, v) {
                            let d = l.disc_index(l.disc_of_arc(t, v, pos));
                            boundary_raw.push((l.point_index(t, v, x, pos), l.point_index(t, v, y, pos), d));
                            arc_disc.push(d);
                        }
                    }
                }
                Some(g) => {
                    let (u, p) = (g.tet, g.perm);
                    for (a, b) in crate::triangulation::face_edges(f) {
                        for pos in 0..l.weight(t, a, b) {
                            points.union(l.point_index(t, a, b, pos), l.point_index(u, p.apply(a), p.apply(b), pos));
                        }
                    }
                    for &v in &face {
                        let [x, y] = others(&face, v);
                        if (u, p.apply(f)) < (t, f) {
                            continue;
                        }
                        for pos in 0..l.arc_count(t, f, v) {
                            let d1 = l.disc_of_arc(t, v, pos);
                            let d2 = l.disc_of_arc(u, p.apply(v), pos);
                            let same = l.runs(d1, v, x, y) == l.runs(d2, p.apply(v), p.apply(x), p.apply(y));
                            let (i1, i2) = (l.disc_index(d1), l.disc_index(d2));
                            if !orient.union(i1, i2, same) {
                                conflicts.push(i1);
                            }
                            arc_disc.push(i1);
                        }
                    }
                }
            }
        }
    }
    let mut comp = Dsu::new(nd);
    for i in 0..nd {
        let (r, _) = orient.find(i);
        comp.union(i, r);
    }
    let (component, count) = comp.labels();
    let mut orientable = vec![true; count];
    for &i in &conflicts {
        orientable[component[i]] = false;
    }
    let (point_class, _) = points.labels();
    let mut point_edge = vec![0usize; l.points as usize];
    let mut point_comp: HashMap<usize, usize> = HashMap::new();
    for (i, &d) in discs.iter().enumerate() {
        let t = match d {
            Disc::Triangle { tet, .. } | Disc::Quad { tet, .. } => tet,
        };
        for (a, b) in l.disc_edges(d) {
            let p = l.point_index(t, a, b, l.position_on_edge(d, a));
            point_edge[p] = tri.skeleton().edge_of[t][edge_number(a, b)];
            point_comp.insert(point_class[p], component[i]);
        }
    }
    let mut euler = vec![0i64; count];
    for &c in &component {
        euler[c] += 1;
    }
    for &d in &arc_disc {
        euler[component[d]] -= 1;
    }
    for (_, &c) in point_comp.iter() {
        euler[c] += 1;
    }
    let boundary_arcs = boundary_raw
        .into_iter()
        .map(|(p, q, d)| (point_class[p], point_class[q], component[d]))
        .collect();
    Ok(Assembly {
        layout: l,
        discs,
        component,
        components: count,
        orientable,
        euler,
        boundary_arcs,
        point_class,
        point_edge,
    })
}

fn others(face: &[usize], v: usize) -> [usize; 2] {
    let o: Vec<usize> = face.iter().copied().filter(|&w| w != v).collect();
    [o[0], o[1]]
}

/// For each boundary component, 1-cycles of boundary edge classes whose
/// homology classes form a basis of `H1` with Z/2 coefficients.
pub fn boundary_cycle_basis(tri: &Triangulation) -> Vec<Vec<Vec<usize>>> {
    let sk = tri.skeleton();
    sk.boundary_components
        .iter()
        .map(|bc| {
            let index: HashMap<usize, usize> = bc.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
            let m = bc.edges.len();
            let vector = |edges: &[usize]| {
                let mut v = vec![false; m];
                for e in edges {
                    v[index[e]] ^= true;
                }
                v
            };
            // Spanning tree of the boundary 1-skeleton.
            let mut tree = Dsu::new(tri.vertex_count());
            let mut tree_edges = vec![];
            let mut extra = vec![];
            for &e in &bc.edges {
                let [a, b] = sk.edges[e].ends;
                if tree.union(a, b) {
                    tree_edges.push(e);
                } else {
                    extra.push(e);
                }
            }
            let mut adj: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
            for &e in &tree_edges {
                let [a, b] = sk.edges[e].ends;
                adj.entry(a).or_default().push((b, e));
                adj.entry(b).or_default().push((a, e));
            }
            let path = |from: usize, to: usize| -> Vec<usize> {
                let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
                let mut stack = vec![from];
                let mut seen = vec![from];
                while let Some(x) = stack.pop() {
                    if x == to {
                        break;
                    }
                    for &(y, e) in adj.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
                        if !seen.contains(&y) {
                            seen.push(y);
                            prev.insert(y, (x, e));
                            stack.push(y);
                        }
                    }
                }
                let mut out = vec![];
                let mut x = to;
                while x != from {
                    let (p, e) = prev[&x];
                    out.push(e);
                    x = p;
                }
                out
            };
            let mut span: Vec<Vec<bool>> = vec![];
            let reduce = |span: &Vec<Vec<bool>>, mut v: Vec<bool>| {
                for row in span {
                    let lead = row.iter().position(|&x| x).expect("nonzero row");
                    if v[lead] {
                        for (a, b) in v.iter_mut().zip(row) {
                            *a ^= *b;
                        }
                    }
                }
                v
            };
            let insert = |span: &mut Vec<Vec<bool>>, v: Vec<bool>| -> bool {
                let r = reduce(span, v);
                let Some(lead) = r.iter().position(|&x| x) else { return false };
                for row in span.iter_mut() {
                    if row[lead] {
                        for (a, b) in row.iter_mut().zip(&r) {
                            *a ^= *b;
                        }
                    }
                }
                span.push(r);
                span.sort_by_key(|row| row.iter().position(|&x| x));
                true
            };
            for &(t, f) in &bc.triangles {
                let edges: Vec<usize> = crate::triangulation::face_edges(f)
                    .iter()
                    .map(|&(a, b)| sk.edge_of[t][edge_number(a, b)])
                    .collect();
                insert(&mut span, vector(&edges));
            }
            let mut basis = vec![];
            for &e in &extra {
                let [a, b] = sk.edges[e].ends;
                let mut cycle = path(b, a);
                cycle.push(e);
                if insert(&mut span, vector(&cycle)) {
                    basis.push(cycle);
                }
            }
            basis
        })
        .collect()
}

/// Intersection parities of the whole boundary of `s` with each basis
/// cycle, per boundary component. Additive in `s`.
pub fn boundary_class(tri: &Triangulation, s: &NormalVector) -> Result<Vec<Vec<u8>>> {
    let s = to_standard(tri, s)?;
    let weights = crate::normal::edge_weights(tri, &s);
    Ok(boundary_cycle_basis(tri)
        .iter()
        .map(|cycles| {
            cycles
                .iter()
                .map(|c| (c.iter().map(|&e| weights[e]).sum::<u64>() % 2) as u8)
                .collect()
        })
        .collect())
}

/// Full reconstruction of the surface with coordinates `s`.
pub fn reconstruct(tri: &Triangulation, s: &NormalVector) -> Result<SurfaceReport> {
    let s = to_standard(tri, s)?;
    if s.is_zero() {
        return Err(Error::Inadmissible("the zero vector is not a surface".into()));
    }
    let asm = assemble(tri, &s)?;
    let curves = boundary_curves(tri, &asm);
    let mut per_component_curves = vec![0usize; asm.components];
    for (c, _) in &curves {
        per_component_curves[*c] += 1;
    }
    let connected = asm.components == 1;
    let euler: i64 = asm.euler.iter().sum();
    let orientable = asm.orientable.iter().all(|&o| o);
    let kind = if connected {
        surface_kind(euler, orientable, per_component_curves[0])
    } else {
        None
    };
    let vertex_linking = split_components(tri, &s)?.iter().any(|c| is_vertex_link(tri, c));
    Ok(SurfaceReport {
        euler,
        orientable,
        connected,
        components: asm.components,
        boundary_curves: curves.into_iter().map(|(_, c)| c).collect(),
        separating: complement_classes(tri, &s)? > tri.skeleton().component_count,
        vertex_linking,
        kind,
    })
}

pub fn surface_kind(euler: i64, orientable: bool, boundary: usize) -> Option<SurfaceKind> {
    use SurfaceKind::*;
    match (euler, orientable, boundary) {
        (2, true, 0) => Some(Sphere),
        (1, true, 1) => Some(Disc),
        (1, false, 0) => Some(ProjectivePlane),
        (0, true, 0) => Some(Torus),
        (0, true, 2) => Some(Annulus),
        (0, false, 0) => Some(KleinBottle),
        (0, false, 1) => Some(MobiusBand),
        _ => None,
    }
}

/// Boundary curves with the surface component each belongs to.
fn boundary_curves(tri: &Triangulation, asm: &Assembly) -> Vec<(usize, BoundaryCurve)> {
    let arcs = &asm.boundary_arcs;
    if arcs.is_empty() {
        return vec![];
    }
    let mut curves = Dsu::new(arcs.len());
    let mut at_point: HashMap<usize, usize> = HashMap::new();
    for (i, &(p, q, _)) in arcs.iter().enumerate() {
        for x in [p, q] {
            if let Some(&j) = at_point.get(&x) {
                curves.union(i, j);
            } else {
                at_point.insert(x, i);
            }
        }
    }
    let (label, count) = curves.labels();
    // Edge class of each point class, and each curve's points.
    let mut class_edge: HashMap<usize, usize> = HashMap::new();
    for (p, &c) in asm.point_class.iter().enumerate() {
        class_edge.insert(c, asm.point_edge[p]);
    }
    let mut curve_points: Vec<Vec<usize>> = vec![vec![]; count];
    let mut curve_comp = vec![0; count];
    for (i, &(p, q, c)) in arcs.iter().enumerate() {
        curve_points[label[i]].push(p);
        curve_points[label[i]].push(q);
        curve_comp[label[i]] = c;
    }
    let sk = tri.skeleton();
    let basis = boundary_cycle_basis(tri);
    let edge_bc: HashMap<usize, usize> = sk
        .boundary_components
        .iter()
        .enumerate()
        .flat_map(|(i, bc)| bc.edges.iter().map(move |&e| (e, i)))
        .collect();
    (0..count)
        .map(|k| {
            let mut pts = curve_points[k].clone();
            pts.sort();
            pts.dedup();
            let mut on_edge: HashMap<usize, u64> = HashMap::new();
            for p in &pts {
                *on_edge.entry(class_edge[p]).or_default() += 1;
            }
            let bc = edge_bc[&class_edge[&pts[0]]];
            let class = basis[bc]
                .iter()
                .map(|c| (c.iter().map(|e| on_edge.get(e).copied().unwrap_or(0)).sum::<u64>() % 2) as u8)
                .collect();
            (curve_comp[k], BoundaryCurve { boundary_component: bc, class })
        })
        .collect()
}

/// Each connected component as its own standard vector, in order of the
/// component's first disc.
pub fn split_components(tri: &Triangulation, s: &NormalVector) -> Result<Vec<NormalVector>> {
    let s = to_standard(tri, s)?;
    let asm = assemble(tri, &s)?;
    let mut out = vec![vec![0u64; 7 * tri.size()]; asm.components];
    for (i, d) in asm.discs.iter().enumerate() {
        let entry = match *d {
            Disc::Triangle { tet, vertex, .. } => 7 * tet + vertex,
            Disc::Quad { tet, .. } => 7 * tet + 4 + asm.layout.quad[tet].expect("quad").0,
        };
        out[asm.component[i]][entry] += 1;
    }
    Ok(out.into_iter().map(|e| NormalVector::new(tri, Coords::Standard, e)).collect())
}

/// True if `s` is exactly the link of one vertex class.
pub fn is_vertex_link(tri: &Triangulation, s: &NormalVector) -> bool {
    let Ok(s) = to_standard(tri, s) else { return false };
    (0..tri.vertex_count()).any(|v| crate::normal::vertex_link(tri, v).entries == s.entries)
}

/// Regions of the complement inside each tetrahedron. Corner `(v, j)` lies
/// between triangles `j - 1` and `j` at `v` (the vertex itself for `j = 0`).
/// Without quads the rest is one central cell; with quads it is side A,
/// the slabs between consecutive quads, and side B.
pub(crate) struct Regions {
    base: Vec<usize>,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Region {
    Corner(usize, u64),
    Central,
    SideA,
    Slab(u64),
    SideB,
}

/// A piece of face `f` cut out by the arcs: piece `i` around `v` lies
/// between arcs `i - 1` and `i`; `None` is the central piece.
pub(crate) type FacePiece = (usize, Option<(usize, u64)>);

impl Regions {
    pub fn new(l: &Layout) -> Regions {
        let mut base = vec![];
        let mut count = 0;
        for t in 0..l.tri.len() {
            base.push(count);
            count += l.tri[t].iter().sum::<u64>() as usize + if l.nq(t) == 0 { 1 } else { l.nq(t) as usize + 1 };
        }
        Regions { base, count }
    }

    pub fn index(&self, l: &Layout, t: usize, r: Region) -> usize {
        let corners = l.tri[t].iter().sum::<u64>() as usize;
        self.base[t]
            + match r {
                Region::Corner(v, j) => l.tri[t][..v].iter().sum::<u64>() as usize + j as usize,
                Region::Central | Region::SideA => corners,
                Region::Slab(k) => corners + k as usize,
                Region::SideB => corners + l.nq(t) as usize,
            }
    }

}

/// The region beyond the outermost triangle at `v`.
pub(crate) fn beyond_triangles(l: &Layout, t: usize, v: usize) -> Region {
    if l.nq(t) == 0 {
        Region::Central
    } else if l.side_a(t, v) {
        Region::SideA
    } else {
        Region::SideB
    }
}

pub(crate) fn piece_region(l: &Layout, t: usize, (f, piece): FacePiece) -> Region {
    match piece {
        Some((v, i)) => {
            let tv = l.tri[t][v];
            if i < tv {
                Region::Corner(v, i)
            } else if i == tv {
                beyond_triangles(l, t, v)
            } else {
                let j = i - tv;
                let k = if l.side_a(t, v) { j } else { l.nq(t) - j };
                Region::Slab(k)
            }
        }
        None => {
            if l.nq(t) == 0 {
                Region::Central
            } else if l.side_a(t, f) {
                Region::SideB
            } else {
                Region::SideA
            }
        }
    }
}

pub(crate) fn face_pieces(l: &Layout, t: usize, f: usize) -> Vec<FacePiece> {
    let mut out = vec![];
    for v in (0..4).filter(|&v| v != f) {
        out.extend((0..l.arc_count(t, f, v)).map(|i| (f, Some((v, i)))));
    }
    out.push((f, None));
    out
}

/// The two regions on either side of a disc: towards the vertex (or side A)
/// first.
pub(crate) fn disc_sides(l: &Layout, d: Disc) -> (usize, Region, Region) {
    match d {
        Disc::Triangle { tet, vertex, k } => {
            let outer = if k + 1 < l.tri[tet][vertex] {
                Region::Corner(vertex, k + 1)
            } else {
                beyond_triangles(l, tet, vertex)
            };
            (tet, Region::Corner(vertex, k), outer)
        }
        Disc::Quad { tet, k } => {
            let a = if k == 0 { Region::SideA } else { Region::Slab(k) };
            let b = if k + 1 == l.nq(tet) { Region::SideB } else { Region::Slab(k + 1) };
            (tet, a, b)
        }
    }
}

/// Union-find of all regions, glued across faces.
pub(crate) fn complement(tri: &Triangulation, l: &Layout) -> (Regions, Vec<usize>, usize) {
    let regions = Regions::new(l);
    let mut dsu = Dsu::new(regions.count);
    for t in 0..tri.size() {
        for f in 0..4 {
            let Some(g) = tri.adjacent(t, f) else { continue };
            let (u, p) = (g.tet, g.perm);
            for piece in face_pieces(l, t, f) {
                let mapped = (p.apply(f), piece.1.map(|(v, i)| (p.apply(v), i)));
                let a = regions.index(l, t, piece_region(l, t, piece));
                let b = regions.index(l, u, piece_region(l, u, mapped));
                dsu.union(a, b);
            }
        }
    }
    let (labels, count) = dsu.labels();
    (regions, labels, count)
}

fn complement_classes(tri: &Triangulation, s: &NormalVector) -> Result<usize> {
    let l = Layout::new(tri, s)?;
    Ok(complement(tri, &l).2)
}

/// True if removing the surface disconnects its component of the
/// manifold. For a connected surface: its two sides are not joined.
pub fn is_separating(tri: &Triangulation, s: &NormalVector) -> Result<bool> {
    let s = to_standard(tri, s)?;
    let l = Layout::new(tri, &s)?;
    let discs = l.disc_list();
    let Some(&d) = discs.first() else {
        return Err(Error::Inadmissible("the zero vector is not a surface".into()));
    };
    let (regions, labels, _) = complement(tri, &l);
    let (t, a, b) = disc_sides(&l, d);
    Ok(labels[regions.index(&l, t, a)] != labels[regions.index(&l, t, b)])
}
