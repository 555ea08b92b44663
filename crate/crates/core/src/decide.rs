//! The hyperbolicity decision: precondition checks, then the closed-fault,
//! compressing-disc and annulus stages in order.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faults::{
    fundamental_closed_fault_scan, is_fault, nonsep_vertex_quad_annulus_scan, vertex_quad_annulus_fault_scan,
    FaultCertificate,
};
use crate::format::to_gluing_table;
use crate::homology::{homology_h1, HomologyGroup};
use crate::moves::simplify_cusps;
use crate::recognition::{compressing_disc_prepared, prepare, solid_torus_prepared, Budget, Step};
use crate::simplify::{cone_boundary, simplify};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Hyperbolic,
    NotHyperbolic,
    PreconditionFailed,
    ResourceExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Hyperbolic => "HYPERBOLIC",
            Status::NotHyperbolic => "NOT_HYPERBOLIC",
            Status::PreconditionFailed => "PRECONDITION_FAILED",
            Status::ResourceExceeded => "RESOURCE_EXCEEDED",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PreconditionFailure {
    Empty,
    Disconnected,
    NonOrientable,
    EmptyBoundary,
    NonTorusBoundary,
}

impl PreconditionFailure {
    pub fn code(self) -> &'static str {
        match self {
            PreconditionFailure::Empty => "empty",
            PreconditionFailure::Disconnected => "disconnected",
            PreconditionFailure::NonOrientable => "non_orientable",
            PreconditionFailure::EmptyBoundary => "empty_boundary",
            PreconditionFailure::NonTorusBoundary => "non_torus_boundary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    ClosedFaults,
    CompressingDisc,
    NonseparatingAnnulus,
    AnnulusFaults,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub stage: Stage,
    pub candidates: usize,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A fault, with the triangulation (as a gluing table) its surface lives in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCertificate {
    pub stage: Stage,
    pub triangulation: String,
    #[serde(flatten)]
    pub fault: FaultCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<VerdictCertificate>,
    pub trace: Vec<TraceEntry>,
}

impl Verdict {
    fn failed(reason: &str) -> Verdict {
        Verdict { status: Status::PreconditionFailed, reason: Some(reason.to_string()), certificate: None, trace: vec![] }
    }
}

/// Connected, orientable, with nonempty boundary made of tori (real
/// boundary components or ideal vertex links).
pub fn check_preconditions(tri: &Triangulation) -> std::result::Result<(), PreconditionFailure> {
    if tri.size() == 0 {
        return Err(PreconditionFailure::Empty);
    }
    if !tri.is_connected() {
        return Err(PreconditionFailure::Disconnected);
    }
    if !tri.is_orientable() {
        return Err(PreconditionFailure::NonOrientable);
    }
    let sk = tri.skeleton();
    let ideal: Vec<_> = sk.vertices.iter().filter(|v| v.link.is_ideal()).collect();
    if ideal.is_empty() && tri.boundary_components().is_empty() {
        return Err(PreconditionFailure::EmptyBoundary);
    }
    let ideal_tori = ideal.iter().all(|v| v.link == crate::triangulation::LinkType::Torus);
    if !ideal_tori || !tri.boundary_components().iter().all(|b| b.is_torus()) {
        return Err(PreconditionFailure::NonTorusBoundary);
    }
    Ok(())
}

struct Run {
    trace: Vec<TraceEntry>,
    clock: Instant,
}

impl Run {
    fn record(&mut self, stage: Stage, candidates: usize, note: Option<String>) {
        let elapsed_ms = self.clock.elapsed().as_millis() as u64;
        self.trace.push(TraceEntry { stage, candidates, elapsed_ms, note });
        self.clock = Instant::now();
    }

    fn finish(self, status: Status, certificate: Option<VerdictCertificate>) -> Verdict {
        Verdict { status, reason: None, certificate, trace: self.trace }
    }

    fn found(self, stage: Stage, tri: &Triangulation, fault: FaultCertificate) -> Verdict {
        let certificate = VerdictCertificate { stage, triangulation: to_gluing_table(tri), fault };
        self.finish(Status::NotHyperbolic, Some(certificate))
    }
}

/// Decides whether the interior of the manifold admits a complete
/// hyperbolic metric of finite volume.
pub fn is_hyperbolic(tri: &Triangulation, budget: &Budget) -> Verdict {
    if let Err(f) = check_preconditions(tri) {
        return Verdict::failed(f.code());
    }
    let mut run = Run { trace: vec![], clock: Instant::now() };
    match stages(tri, budget, &mut run) {
        Ok(Some((stage, t, fault))) => run.found(stage, &t, fault),
        Ok(None) => run.finish(Status::Hyperbolic, None),
        Err(e) => {
            let status = match e {
                Error::ResourceExceeded(_) => Status::ResourceExceeded,
                _ => Status::PreconditionFailed,
            };
            let mut v = run.finish(status, None);
            v.reason = Some(e.to_string());
            v
        }
    }
}

type Found = Option<(Stage, Triangulation, FaultCertificate)>;

fn stages(tri: &Triangulation, budget: &Budget, run: &mut Run) -> Result<Found> {
    // Closed surfaces are searched in an ideal triangulation: coning the
    // boundary tori of finite input gives far smaller systems than
    // restricting the finite one to closed surfaces.
    let (ideal, note) = if tri.has_boundary_faces() {
        let coned = simplify(&cone_boundary(&simplify_cusps(&simplify(tri))?)?);
        let note = format!("boundary coned, {} tetrahedra", coned.size());
        (coned, Some(note))
    } else {
        (tri.clone(), None)
    };
    budget.check_size(&ideal)?;
    let scan = fundamental_closed_fault_scan(&ideal, budget)?;
    run.record(Stage::ClosedFaults, scan.candidates, note);
    if let Some(fault) = scan.fault {
        return Ok(Some((Stage::ClosedFaults, ideal, fault)));
    }

    let t = prepare(tri)?;
    budget.check_size(&t)?;
    // With no closed fault the manifold is irreducible, and an irreducible
    // manifold with compressible torus boundary is a solid torus.
    let one_torus = t.boundary_components().len() == 1 && homology_h1(&t)? == HomologyGroup::free(1);
    if !one_torus {
        run.record(Stage::CompressingDisc, 0, Some("boundary is not one torus with H1 = Z".into()));
    } else if !solid_torus_prepared(&t, budget)? {
        run.record(Stage::CompressingDisc, 0, Some("not a solid torus".into()));
    } else {
        let (disc, candidates) = compressing_disc_prepared(&t, budget)?;
        run.record(Stage::CompressingDisc, candidates, None);
        if let Some(cert) = disc.certificate {
            let Step::Cut { surface } = &cert.steps[0] else { unreachable!("disc certificates cut") };
            let fault = is_fault(&t, surface, budget)?
                .ok_or_else(|| Error::Precondition("essential disc failed the fault test".into()))?;
            return Ok(Some((Stage::CompressingDisc, t, fault)));
        }
    }

    let (stage, scan) = if t.boundary_components().len() >= 2 {
        (Stage::NonseparatingAnnulus, nonsep_vertex_quad_annulus_scan(&t, budget)?)
    } else {
        (Stage::AnnulusFaults, vertex_quad_annulus_fault_scan(&t, budget)?)
    };
    run.record(stage, scan.candidates, None);
    Ok(scan.fault.map(|f| (stage, t, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn preconditions() {
        assert_eq!(check_preconditions(&fixtures::figure_eight()), Ok(()));
        assert_eq!(check_preconditions(&fixtures::lone_tetrahedron()), Err(PreconditionFailure::NonTorusBoundary));
        let closed = crate::moves::fold_fillings(&prepare(&fixtures::solid_torus()).unwrap(), 0).unwrap();
        assert_eq!(check_preconditions(&closed[0]), Err(PreconditionFailure::EmptyBoundary));
    }

    #[test]
    fn solid_torus_has_disc_certificate() {
        let v = is_hyperbolic(&fixtures::solid_torus(), &Budget::default());
        assert_eq!(v.status, Status::NotHyperbolic);
        let c = v.certificate.unwrap();
        assert_eq!(c.stage, Stage::CompressingDisc);
        assert_eq!(c.fault.branch, crate::faults::Branch::Disc);
    }
}
