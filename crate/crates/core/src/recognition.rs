//! Recognition of the small manifolds the fault tests cut off: 3-balls,
//! solid tori and `T^2 x I`, together with compressing discs and splitting
//! annuli found among vertex normal surfaces.
//!
//! Inputs may be finite or ideal. Every predicate first truncates ideal
//! vertices and simplifies, so surfaces in certificates refer to that
//! prepared triangulation, which the certificate records.
//!
//! Balls and solid tori are recognised by their fundamental groups: a
//! compact 3-manifold with one sphere boundary component and trivial `pi_1`
//! is a ball, and one with one torus boundary component and `pi_1 = Z` is a
//! solid torus (both by geometrisation). When the presentation does not
//! simplify far enough, homomorphism counts into small symmetric groups
//! rule candidates out, and the solid torus test falls back to searching
//! for a meridian disc among vertex normal surfaces.

use serde::{Deserialize, Serialize};

use crate::cut::cut_along;
use crate::enumerate::{vertex_solutions, Limits};
use crate::error::{Error, Result};
use crate::format::to_gluing_table;
use crate::group::{factorial, GroupShape, Presentation};
use crate::homology::{homology_h1, HomologyGroup};
use crate::moves::{fold_fillings, simplify_cusps};
use crate::normal::{matching_system, quad_to_standard, Coords, NormalVector};
use crate::simplify::truncate_and_simplify;
use crate::surface::{reconstruct, split_components, SurfaceKind};
use crate::triangulation::Triangulation;

/// Limits on the normal surface searches made during recognition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest prepared triangulation on which surfaces are enumerated.
    pub max_tets: usize,
    pub max_solutions: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_tets: 64, max_solutions: 100_000 }
    }
}

impl Budget {
    pub fn limits(&self) -> Limits {
        Limits { max_solutions: self.max_solutions }
    }

    pub fn check_size(&self, tri: &Triangulation) -> Result<()> {
        if tri.size() > self.max_tets {
            return Err(Error::ResourceExceeded(format!(
                "{} tetrahedra exceeds the limit of {}",
                tri.size(),
                self.max_tets
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Cut { surface: NormalVector },
    Fill { component: usize, edge: usize },
}

/// Steps to replay on `triangulation` (a gluing table).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub triangulation: String,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionResult {
    pub verdict: bool,
    pub certificate: Option<Certificate>,
}

impl RecognitionResult {
    fn no() -> Self {
        RecognitionResult { verdict: false, certificate: None }
    }

    fn yes(tri: &Triangulation, steps: Vec<Step>) -> Self {
        RecognitionResult {
            verdict: true,
            certificate: Some(Certificate { triangulation: to_gluing_table(tri), steps }),
        }
    }
}

const MAX_RELATOR_LENGTH: usize = 20_000;
const HOM_SEARCH_LIMIT: u64 = 3_000_000;

pub fn is_connected(tri: &Triangulation) -> bool {
    tri.is_connected()
}

/// Truncated and simplified, with one-vertex torus boundaries.
pub fn prepare(tri: &Triangulation) -> Result<Triangulation> {
    truncate_and_simplify(tri)
}

fn simplified_group(tri: &Triangulation) -> Presentation {
    let mut p = Presentation::of(tri);
    p.simplify(MAX_RELATOR_LENGTH);
    p
}

/// True when some count of homomorphisms into `S_n` differs from `expected(n)`.
fn homs_rule_out(p: &Presentation, expected: impl Fn(usize) -> u64) -> bool {
    (2..=5).any(|n| p.count_homs_to_symmetric(n, HOM_SEARCH_LIMIT).is_some_and(|c| c != expected(n)))
}

fn ball_prepared(t: &Triangulation) -> Result<bool> {
    let bcs = t.boundary_components();
    if !t.is_connected() || !t.ideal_vertices().is_empty() || bcs.len() != 1 || !bcs[0].is_sphere() {
        return Ok(false);
    }
    if !homology_h1(t)?.is_trivial() {
        return Ok(false);
    }
    let p = simplified_group(t);
    if p.shape() == GroupShape::Trivial {
        return Ok(true);
    }
    if homs_rule_out(&p, |_| 1) {
        return Ok(false);
    }
    Err(Error::ResourceExceeded("could not decide whether a homology ball is simply connected".into()))
}

pub fn is_three_ball(tri: &Triangulation) -> Result<bool> {
    if !tri.ideal_vertices().is_empty() {
        return Ok(false);
    }
    ball_prepared(&prepare(tri)?)
}

pub fn solid_torus_prepared(t: &Triangulation, budget: &Budget) -> Result<bool> {
    let bcs = t.boundary_components();
    if !t.is_connected() || !t.is_orientable() || bcs.len() != 1 || !bcs[0].is_torus() {
        return Ok(false);
    }
    if homology_h1(t)? != HomologyGroup::free(1) {
        return Ok(false);
    }
    let p = simplified_group(t);
    if p.shape() == GroupShape::Cyclic(0) {
        return Ok(true);
    }
    if homs_rule_out(&p, factorial) {
        return Ok(false);
    }
    let (disc, _) = compressing_disc_prepared(t, budget)?;
    let Some(cert) = disc.certificate else { return Ok(false) };
    let Step::Cut { surface } = &cert.steps[0] else { unreachable!("disc certificates cut") };
    let pieces = cut_along(t, surface)?;
    Ok(pieces.len() == 1 && is_three_ball(&pieces[0])?)
}

pub fn is_solid_torus(tri: &Triangulation, budget: &Budget) -> Result<bool> {
    solid_torus_prepared(&prepare(tri)?, budget)
}

fn count_sphere_boundaries(parts: &[Triangulation]) -> usize {
    parts.iter().map(|p| p.boundary_components().iter().filter(|b| b.is_sphere()).count()).sum()
}

fn disc_is_essential(t: &Triangulation, disc: &NormalVector, class: &[u8], component: usize) -> Result<bool> {
    let bc = &t.boundary_components()[component];
    if bc.is_sphere() {
        return Ok(false);
    }
    if class.iter().any(|&x| x == 1) {
        return Ok(true);
    }
    if bc.is_torus() {
        // A separating curve on a torus bounds a disc there.
        return Ok(false);
    }
    // On higher genus, a separating curve is inessential exactly when
    // cutting along the disc exposes a new sphere.
    let pieces = cut_along(t, disc)?;
    Ok(count_sphere_boundaries(&pieces) == count_sphere_boundaries(std::slice::from_ref(t)))
}

/// The disc search on an already prepared triangulation, with the number of
/// vertex solutions enumerated.
pub fn compressing_disc_prepared(t: &Triangulation, budget: &Budget) -> Result<(RecognitionResult, usize)> {
    if t.boundary_components().is_empty() {
        return Err(Error::Precondition("compressing discs need a boundary".into()));
    }
    budget.check_size(t)?;
    let sys = matching_system(t, Coords::Standard);
    let solutions = vertex_solutions(&sys, budget.limits())?;
    let count = solutions.len();
    for v in solutions {
        let s = NormalVector::new(t, Coords::Standard, v);
        for c in split_components(t, &s)? {
            let r = reconstruct(t, &c)?;
            if r.kind != Some(SurfaceKind::Disc) {
                continue;
            }
            let curve = &r.boundary_curves[0];
            if disc_is_essential(t, &c, &curve.class, curve.boundary_component)? {
                return Ok((RecognitionResult::yes(t, vec![Step::Cut { surface: c }]), count));
            }
        }
    }
    Ok((RecognitionResult::no(), count))
}

/// Searches the vertex normal surfaces in standard coordinates for a disc
/// whose boundary is essential in the boundary of the manifold.
pub fn has_compressing_disc(tri: &Triangulation, budget: &Budget) -> Result<RecognitionResult> {
    Ok(compressing_disc_prepared(&prepare(tri)?, budget)?.0)
}

/// A compressing disc exists, or the manifold is a 3-ball.
pub fn is_boundary_compressible(tri: &Triangulation, budget: &Budget) -> Result<bool> {
    let t = prepare(tri)?;
    if ball_prepared(&t)? {
        return Ok(true);
    }
    Ok(compressing_disc_prepared(&t, budget)?.0.verdict)
}

fn nonsep_annulus_prepared(t: &Triangulation, budget: &Budget) -> Result<RecognitionResult> {
    budget.check_size(t)?;
    let sys = matching_system(t, Coords::Quad);
    for q in vertex_solutions(&sys, budget.limits())? {
        let s = quad_to_standard(t, &NormalVector::new(t, Coords::Quad, q))?;
        let r = reconstruct(t, &s)?;
        if r.kind != Some(SurfaceKind::Annulus) || r.separating {
            continue;
        }
        let pieces = cut_along(t, &s)?;
        if pieces.len() == 1 && is_solid_torus(&pieces[0], budget)? {
            return Ok(RecognitionResult::yes(t, vec![Step::Cut { surface: s }]));
        }
    }
    Ok(RecognitionResult::no())
}

/// Some non-separating vertex annulus in quad coordinates cuts the
/// manifold into a solid torus.
pub fn splits_along_nonsep_annulus_into_solid_torus(tri: &Triangulation, budget: &Budget) -> Result<RecognitionResult> {
    nonsep_annulus_prepared(&prepare(tri)?, budget)
}

/// Two torus boundary components, a non-separating vertex annulus cutting
/// the manifold into a solid torus, and all three fold fillings of one
/// boundary component solid tori.
pub fn is_torus_cross_interval(tri: &Triangulation, budget: &Budget) -> Result<RecognitionResult> {
    if !tri.is_connected() {
        return Err(Error::Precondition("triangulation is not connected".into()));
    }
    let t = prepare(tri)?;
    if t.boundary_components().iter().any(|b| !b.is_torus()) {
        return Err(Error::Precondition("every boundary component must be a torus".into()));
    }
    if t.boundary_components().len() != 2 {
        return Ok(RecognitionResult::no());
    }
    if !nonsep_annulus_prepared(&t, budget)?.verdict {
        return Ok(RecognitionResult::no());
    }
    let t = simplify_cusps(&t)?;
    let edges = t.boundary_components()[0].edges.clone();
    let mut steps = vec![];
    for (filled, edge) in fold_fillings(&t, 0)?.iter().zip(edges) {
        if !is_solid_torus(filled, budget)? {
            return Ok(RecognitionResult::no());
        }
        steps.push(Step::Fill { component: 0, edge });
    }
    Ok(RecognitionResult::yes(&t, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn balls() {
        assert!(is_three_ball(&fixtures::lone_tetrahedron()).unwrap());
        assert!(!is_three_ball(&fixtures::solid_torus()).unwrap());
        assert!(!is_three_ball(&fixtures::figure_eight()).unwrap());
    }

    #[test]
    fn solid_tori() {
        let b = Budget::default();
        assert!(is_solid_torus(&fixtures::solid_torus(), &b).unwrap());
        assert!(!is_solid_torus(&fixtures::torus_cross_interval(), &b).unwrap());
        assert!(!is_solid_torus(&fixtures::trefoil(), &b).unwrap());
        assert!(!is_solid_torus(&fixtures::lone_tetrahedron(), &b).unwrap());
    }

    #[test]
    fn compressing_discs() {
        let b = Budget::default();
        let r = has_compressing_disc(&fixtures::solid_torus(), &b).unwrap();
        assert!(r.verdict);
        assert!(!has_compressing_disc(&fixtures::lone_tetrahedron(), &b).unwrap().verdict);
        assert!(!has_compressing_disc(&fixtures::torus_cross_interval(), &b).unwrap().verdict);
        assert!(is_boundary_compressible(&fixtures::lone_tetrahedron(), &b).unwrap());
        assert!(!is_boundary_compressible(&fixtures::torus_cross_interval(), &b).unwrap());
    }

    #[test]
    fn torus_cross_interval() {
        let b = Budget::default();
        let r = is_torus_cross_interval(&fixtures::torus_cross_interval(), &b).unwrap();
        assert!(r.verdict);
        assert_eq!(r.certificate.unwrap().steps.len(), 3);
        assert!(!is_torus_cross_interval(&fixtures::solid_torus(), &b).unwrap().verdict);
    }
}
