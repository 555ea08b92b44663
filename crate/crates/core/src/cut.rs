//! Triangulating the complement of a normal surface.
//!
//! Each region of a tetrahedron cut by the surface is a ball whose boundary
//! is made of face pieces and normal discs. The region is coned from a new
//! centre point over its boundary polygons; polygons with more than three
//! corners are first coned from their own centre. Face pieces are matched
//! across the gluings of the original faces, and the two copies of each
//! disc stay unglued, forming the boundary along the surface.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::normal::{to_standard, NormalVector};
use crate::perm::Perm4;
use crate::surface::{disc_sides, face_pieces, piece_region, Disc, FacePiece, Layout, Region, Regions};
use crate::triangulation::Triangulation;

/// Largest complement triangulation built before simplification.
pub const MAX_CUT_TETS: usize = 400_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Label {
    Cell(usize),
    Vertex(usize),
    /// Point on edge `{a, b}` with `a < b`, numbered from `a`.
    Point(usize, usize, u64),
    PieceCentre(FacePiece),
    DiscCentre(usize),
}

struct Small {
    tet: usize,
    labels: [Label; 4],
    /// Face of the original tetrahedron holding the face opposite the
    /// cell centre, if it is a face piece.
    on_face: Option<usize>,
}

fn point(l: &Layout, t: usize, x: usize, y: usize, pos: u64) -> Label {
    if x < y {
        Label::Point(x, y, pos)
    } else {
        Label::Point(y, x, l.weight(t, x, y) - 1 - pos)
    }
}

fn piece_polygon(l: &Layout, t: usize, (f, piece): FacePiece) -> Vec<Label> {
    let face: Vec<usize> = (0..4).filter(|&v| v != f).collect();
    match piece {
        Some((v, i)) => {
            let o: Vec<usize> = face.iter().copied().filter(|&w| w != v).collect();
            let (x, y) = (o[0], o[1]);
            if i == 0 {
                vec![Label::Vertex(v), point(l, t, v, x, 0), point(l, t, v, y, 0)]
            } else {
                vec![point(l, t, v, x, i - 1), point(l, t, v, x, i), point(l, t, v, y, i), point(l, t, v, y, i - 1)]
            }
        }
        None => {
            let mut out = vec![];
            for k in 0..3 {
                let (w, prev, next) = (face[k], face[(k + 2) % 3], face[(k + 1) % 3]);
                let c = l.arc_count(t, f, w);
                if c == 0 {
                    out.push(Label::Vertex(w));
                } else {
                    out.push(point(l, t, w, prev, c - 1));
                    out.push(point(l, t, w, next, c - 1));
                }
            }
            out
        }
    }
}

fn disc_polygon(l: &Layout, d: Disc) -> Vec<Label> {
    let t = match d {
        Disc::Triangle { tet, .. } | Disc::Quad { tet, .. } => tet,
    };
    l.disc_edges(d)
        .into_iter()
        .map(|(a, b)| point(l, t, a, b, l.position_on_edge(d, a)))
        .collect()
}

fn map_label(l: &Layout, u: usize, p: Perm4, x: Label) -> Label {
    match x {
        Label::Vertex(v) => Label::Vertex(p.apply(v)),
        Label::Point(a, b, pos) => point(l, u, p.apply(a), p.apply(b), pos),
        Label::PieceCentre((f, piece)) => Label::PieceCentre((p.apply(f), piece.map(|(v, i)| (p.apply(v), i)))),
        other => other,
    }
}

fn sorted3(mut k: [Label; 3]) -> [Label; 3] {
    k.sort();
    k
}

fn face_labels(s: &Small, opposite: usize) -> [Label; 3] {
    let v: Vec<Label> = (0..4).filter(|&i| i != opposite).map(|i| s.labels[i]).collect();
    [v[0], v[1], v[2]]
}

/// The manifold cut open along the surface, one triangulation per
/// component of the complement.
pub fn cut_along(tri: &Triangulation, s: &NormalVector) -> Result<Vec<Triangulation>> {
    let s = to_standard(tri, s)?;
    let l = Layout::new(tri, &s)?;
    let regions = Regions::new(&l);
    let mut smalls: Vec<Small> = vec![];
    let mut discs_in: Vec<Vec<Disc>> = vec![vec![]; tri.size()];
    for d in l.disc_list() {
        let (Disc::Triangle { tet, .. } | Disc::Quad { tet, .. }) = d;
        discs_in[tet].push(d);
    }
    for t in 0..tri.size() {
        let mut polygons: HashMap<Region, Vec<(Label, Vec<Label>, Option<usize>)>> = HashMap::new();
        for f in 0..4 {
            for piece in face_pieces(&l, t, f) {
                let r = piece_region(&l, t, piece);
                polygons.entry(r).or_default().push((Label::PieceCentre(piece), piece_polygon(&l, t, piece), Some(f)));
            }
        }
        for &d in &discs_in[t] {
            let (_, a, b) = disc_sides(&l, d);
            let poly = disc_polygon(&l, d);
            let centre = Label::DiscCentre(l.disc_index(d));
            polygons.entry(a).or_default().push((centre, poly.clone(), None));
            polygons.entry(b).or_default().push((centre, poly, None));
        }
        let mut keys: Vec<Region> = polygons.keys().copied().collect();
        keys.sort_by_key(|r| regions.index(&l, t, *r));
        for r in keys {
            let cell = Label::Cell(regions.index(&l, t, r));
            for (centre, poly, on_face) in &polygons[&r] {
                if poly.len() == 3 {
                    smalls.push(Small { tet: t, labels: [cell, poly[0], poly[1], poly[2]], on_face: *on_face });
                } else {
                    for i in 0..poly.len() {
                        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
                        smalls.push(Small { tet: t, labels: [cell, *centre, a, b], on_face: *on_face });
                    }
                }
            }
            if smalls.len() > MAX_CUT_TETS {
                return Err(Error::ResourceExceeded(format!("complement needs more than {MAX_CUT_TETS} tetrahedra")));
            }
        }
    }
    let mut list: Vec<(usize, usize, usize, Perm4)> = vec![];
    let glue = |list: &mut Vec<(usize, usize, usize, Perm4)>, a: usize, i: usize, b: usize, j: usize, image: &dyn Fn(Label) -> Label| {
        let mut img = [0u8; 4];
        img[i] = j as u8;
        for k in (0..4).filter(|&k| k != i) {
            let target = image(smalls[a].labels[k]);
            img[k] = (0..4).find(|&m| m != j && smalls[b].labels[m] == target).expect("matching corner") as u8;
        }
        list.push((a, i, b, Perm4::new(img).expect("bijection")));
    };
    // Faces through the cell centre, matched within each cell.
    let mut open: HashMap<[Label; 3], (usize, usize)> = HashMap::new();
    for (a, sm) in smalls.iter().enumerate() {
        for i in 1..4 {
            let key = sorted3(face_labels(sm, i));
            match open.remove(&key) {
                Some((b, j)) => glue(&mut list, b, j, a, i, &|x| x),
                None => {
                    open.insert(key, (a, i));
                }
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::Precondition("complement cell boundary is not closed".into()));
    }
    // Face pieces, matched across the original gluings.
    let mut pieces: HashMap<(usize, [Label; 3]), usize> = HashMap::new();
    for (a, sm) in smalls.iter().enumerate() {
        if sm.on_face.is_some() {
            pieces.insert((sm.tet, sorted3(face_labels(sm, 0))), a);
        }
    }
    for (a, sm) in smalls.iter().enumerate() {
        let Some(f) = sm.on_face else { continue };
        let Some(g) = tri.adjacent(sm.tet, f) else { continue };
        let (t, u, p) = (sm.tet, g.tet, g.perm);
        let image = |x: Label| map_label(&l, u, p, x);
        let key = sorted3(face_labels(sm, 0).map(image));
        let &b = pieces.get(&(u, key)).ok_or_else(|| Error::Precondition("face piece without a partner".into()))?;
        if (t, f, a) < (u, p.apply(f), b) {
            glue(&mut list, a, 0, b, 0, &image);
        }
    }
    let cut = Triangulation::from_gluings(smalls.len(), &list)?;
    Ok(cut.components())
}
