//! Faults: connected normal surfaces of nonnegative Euler characteristic
//! that are not inessential in one of the ways the definition allows, and
//! the three scans over fundamental and vertex solutions that find them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cut::cut_along;
use crate::enumerate::{fundamental_solutions, vertex_solutions};
use crate::error::{Error, Result};
use crate::homology::{homology_h1, HomologyGroup};
use crate::normal::{closed_matching_system, matching_system, quad_to_standard, Coords, NormalVector};
use crate::recognition::{is_boundary_compressible, is_solid_torus, is_three_ball, is_torus_cross_interval, Budget};
use crate::surface::{reconstruct, split_components, SurfaceKind, SurfaceReport};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Nonorientable,
    Sphere,
    Disc,
    Torus,
    Annulus,
}

/// Recognizer verdicts on one piece of the complement; checks that were
/// not needed are left out.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PieceEvidence {
    pub tetrahedra: usize,
    pub homology: Option<HomologyGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub three_ball: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solid_torus: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus_cross_interval: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_compressible: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultCertificate {
    pub branch: Branch,
    pub surface: NormalVector,
    pub report: SurfaceReport,
    /// Number of complement components; empty evidence when no cut was needed.
    pub piece_count: Option<usize>,
    pub pieces: Vec<PieceEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub pieces: Vec<Triangulation>,
    /// Whether the surface separates, i.e. there are at least two pieces.
    pub separating: bool,
}

/// The complement of a connected surface.
pub fn cuts_off(tri: &Triangulation, s: &NormalVector) -> Result<CutResult> {
    let pieces = cut_along(tri, s)?;
    Ok(CutResult { separating: pieces.len() >= 2, pieces })
}

fn branch_of(r: &SurfaceReport) -> Option<Branch> {
    if !r.orientable {
        return Some(Branch::Nonorientable);
    }
    match r.kind? {
        SurfaceKind::Sphere => Some(Branch::Sphere),
        SurfaceKind::Disc => Some(Branch::Disc),
        SurfaceKind::Torus => Some(Branch::Torus),
        SurfaceKind::Annulus => Some(Branch::Annulus),
        _ => None,
    }
}

fn evidence(p: &Triangulation) -> Result<PieceEvidence> {
    Ok(PieceEvidence { tetrahedra: p.size(), homology: Some(homology_h1(p)?), ..Default::default() })
}

/// Evaluates the definition of a fault on a connected surface with
/// `chi >= 0`. Returns the certificate when it is one.
pub fn is_fault(tri: &Triangulation, s: &NormalVector, budget: &Budget) -> Result<Option<FaultCertificate>> {
    let report = reconstruct(tri, s)?;
    if !report.connected {
        return Err(Error::Precondition("fault test needs a connected surface".into()));
    }
    if report.euler < 0 {
        return Err(Error::Precondition(format!("surface has Euler characteristic {}", report.euler)));
    }
    let branch = branch_of(&report).expect("connected surfaces with chi >= 0 have a kind");
    let mut cert = FaultCertificate { branch, surface: s.clone(), report, piece_count: None, pieces: vec![] };
    if branch == Branch::Nonorientable {
        return Ok(Some(cert));
    }
    let cut = cuts_off(tri, s)?;
    cert.piece_count = Some(cut.pieces.len());
    if cut.pieces.len() != 2 {
        return Ok(Some(cert));
    }
    let mut ev: Vec<PieceEvidence> = cut.pieces.iter().map(evidence).collect::<Result<_>>()?;
    let pieces = &cut.pieces;
    let inessential = match branch {
        Branch::Sphere => {
            let mut any = false;
            for (e, p) in ev.iter_mut().zip(pieces) {
                let b = is_three_ball(p)?;
                e.three_ball = Some(b);
                if b {
                    any = true;
                    break;
                }
            }
            any
        }
        Branch::Disc => {
            for (e, p) in ev.iter_mut().zip(pieces) {
                e.three_ball = Some(is_three_ball(p)?);
            }
            ev.iter().filter(|e| e.three_ball == Some(true)).count() == 1
        }
        Branch::Torus => {
            let mut any = false;
            for (e, p) in ev.iter_mut().zip(pieces) {
                let t2i = is_torus_cross_interval(p, budget)?.verdict;
                e.torus_cross_interval = Some(t2i);
                if t2i {
                    any = true;
                    break;
                }
                let bc = is_boundary_compressible(p, budget)?;
                e.boundary_compressible = Some(bc);
                if bc {
                    any = true;
                    break;
                }
            }
            any
        }
        Branch::Annulus => {
            for (e, p) in ev.iter_mut().zip(pieces) {
                e.three_ball = Some(is_three_ball(p)?);
            }
            if ev.iter().any(|e| e.three_ball == Some(true)) {
                true
            } else {
                for (e, p) in ev.iter_mut().zip(pieces) {
                    e.solid_torus = Some(is_solid_torus(p, budget)?);
                }
                ev.iter().filter(|e| e.solid_torus == Some(true)).count() == 1
            }
        }
        Branch::Nonorientable => unreachable!(),
    };
    cert.pieces = ev;
    Ok((!inessential).then_some(cert))
}

/// Connected components of the given solutions, in order of first
/// appearance, without repeats.
fn components_in_order(tri: &Triangulation, solutions: Vec<NormalVector>) -> Result<Vec<NormalVector>> {
    let mut seen = HashSet::new();
    let mut out = vec![];
    for s in solutions {
        let mut parts = split_components(tri, &s)?;
        parts.sort_by(|a, b| a.entries.cmp(&b.entries));
        for c in parts {
            if seen.insert(c.entries.clone()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Outcome of a scan: the first fault found, and how many candidate
/// surfaces the scan enumerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scan {
    pub fault: Option<FaultCertificate>,
    pub candidates: usize,
}

/// Scans the fundamental closed normal surfaces in standard coordinates for
/// a closed fault. Vertex-linking components are skipped. On a finite
/// triangulation the scan runs over the face of closed surfaces.
pub fn fundamental_closed_fault_scan(tri: &Triangulation, budget: &Budget) -> Result<Scan> {
    budget.check_size(tri)?;
    let sys = if tri.has_boundary_faces() { closed_matching_system(tri) } else { matching_system(tri, Coords::Standard) };
    let limits = budget.limits();
    let solutions: Vec<NormalVector> = fundamental_solutions(&sys, limits)?
        .into_iter()
        .map(|x| NormalVector::new(tri, Coords::Standard, x))
        .collect();
    let candidates = solutions.len();
    for c in components_in_order(tri, solutions)? {
        let r = reconstruct(tri, &c)?;
        if r.vertex_linking || r.euler < 0 || !r.boundary_curves.is_empty() {
            continue;
        }
        if let Some(cert) = is_fault(tri, &c, budget)? {
            return Ok(Scan { fault: Some(cert), candidates });
        }
    }
    Ok(Scan { fault: None, candidates })
}

pub fn has_fundamental_closed_fault(tri: &Triangulation, budget: &Budget) -> Result<Option<FaultCertificate>> {
    Ok(fundamental_closed_fault_scan(tri, budget)?.fault)
}

fn quad_vertex_surfaces(tri: &Triangulation, budget: &Budget) -> Result<(Vec<NormalVector>, usize)> {
    if !tri.ideal_vertices().is_empty() {
        return Err(Error::Precondition("annulus scans need a finite triangulation".into()));
    }
    budget.check_size(tri)?;
    let sys = matching_system(tri, Coords::Quad);
    let limits = budget.limits();
    let standard = vertex_solutions(&sys, limits)?
        .into_iter()
        .map(|q| quad_to_standard(tri, &NormalVector::new(tri, Coords::Quad, q)))
        .collect::<Result<Vec<_>>>()?;
    let count = standard.len();
    Ok((components_in_order(tri, standard)?, count))
}

/// Scans vertex solutions in quad coordinates of a finite triangulation
/// for an annulus fault.
pub fn vertex_quad_annulus_fault_scan(tri: &Triangulation, budget: &Budget) -> Result<Scan> {
    let (surfaces, candidates) = quad_vertex_surfaces(tri, budget)?;
    for c in surfaces {
        let r = reconstruct(tri, &c)?;
        if r.kind != Some(SurfaceKind::Annulus) {
            continue;
        }
        if let Some(cert) = is_fault(tri, &c, budget)? {
            return Ok(Scan { fault: Some(cert), candidates });
        }
    }
    Ok(Scan { fault: None, candidates })
}

pub fn has_vertex_quad_annulus_fault(tri: &Triangulation, budget: &Budget) -> Result<Option<FaultCertificate>> {
    Ok(vertex_quad_annulus_fault_scan(tri, budget)?.fault)
}

/// Scans vertex solutions in quad coordinates of a finite triangulation
/// for a non-separating annulus; every such annulus is a fault.
pub fn nonsep_vertex_quad_annulus_scan(tri: &Triangulation, budget: &Budget) -> Result<Scan> {
    if tri.boundary_components().len() < 2 {
        return Err(Error::Precondition("needs at least two boundary components".into()));
    }
    let (surfaces, candidates) = quad_vertex_surfaces(tri, budget)?;
    for c in surfaces {
        let report = reconstruct(tri, &c)?;
        if report.kind == Some(SurfaceKind::Annulus) && !report.separating {
            let fault = FaultCertificate { branch: Branch::Annulus, surface: c, report, piece_count: Some(1), pieces: vec![] };
            return Ok(Scan { fault: Some(fault), candidates });
        }
    }
    Ok(Scan { fault: None, candidates })
}

pub fn has_nonsep_vertex_quad_annulus(tri: &Triangulation, budget: &Budget) -> Result<Option<FaultCertificate>> {
    Ok(nonsep_vertex_quad_annulus_scan(tri, budget)?.fault)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::normal::vertex_link;

    #[test]
    fn vertex_link_is_not_a_fault() {
        let t = fixtures::figure_eight();
        assert!(is_fault(&t, &vertex_link(&t, 0), &Budget::default()).unwrap().is_none());
    }

    #[test]
    fn meridian_disc_is_a_fault() {
        let t = fixtures::solid_torus();
        let disc = NormalVector::new(&t, Coords::Standard, vec![0, 0, 1, 1, 0, 0, 1]);
        let cert = is_fault(&t, &disc, &Budget::default()).unwrap().unwrap();
        assert_eq!(cert.branch, Branch::Disc);
        assert_eq!(cert.piece_count, Some(1));
    }

    #[test]
    fn mobius_band_is_nonorientable_fault() {
        let t = fixtures::solid_torus();
        let m = NormalVector::new(&t, Coords::Standard, vec![0, 0, 0, 0, 0, 1, 0]);
        assert_eq!(is_fault(&t, &m, &Budget::default()).unwrap().unwrap().branch, Branch::Nonorientable);
    }
}
