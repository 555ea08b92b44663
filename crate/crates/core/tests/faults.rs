use cusp_core::enumerate::{fundamental_solutions, vertex_solutions, Limits};
use cusp_core::faults::*;
use cusp_core::fixtures;
use cusp_core::format::from_isosig;
use cusp_core::normal::{matching_system, quad_to_standard, vertex_link, Coords, NormalVector};
use cusp_core::recognition::{is_torus_cross_interval, prepare, Budget};
use cusp_core::surface::{reconstruct, SurfaceKind};

fn budget() -> Budget {
    Budget::default()
}

#[test]
fn vertex_link_cuts_off_a_collar() {
    let t = fixtures::figure_eight();
    let cut = cuts_off(&t, &vertex_link(&t, 0)).unwrap();
    assert!(cut.separating);
    assert_eq!(cut.pieces.len(), 2);
    let collars = cut
        .pieces
        .iter()
        .filter(|p| is_torus_cross_interval(p, &budget()).unwrap().verdict)
        .count();
    assert_eq!(collars, 1);
    assert!(is_fault(&t, &vertex_link(&t, 0), &budget()).unwrap().is_none());
}

#[test]
fn meridian_disc_cuts_off_nothing() {
    let t = fixtures::solid_torus();
    let disc = NormalVector::new(&t, Coords::Standard, vec![0, 0, 1, 1, 0, 0, 1]);
    let cut = cuts_off(&t, &disc).unwrap();
    assert!(!cut.separating);
    assert_eq!(cut.pieces.len(), 1);
    let cert = is_fault(&t, &disc, &budget()).unwrap().unwrap();
    assert_eq!(cert.branch, Branch::Disc);
}

#[test]
fn projective_plane_is_a_fault() {
    // Two-tetrahedron RP^3.
    let t = from_isosig("cMcabbgqw").unwrap();
    let sys = matching_system(&t, Coords::Standard);
    let planes: Vec<NormalVector> = fundamental_solutions(&sys, Limits::default())
        .unwrap()
        .into_iter()
        .map(|x| NormalVector::new(&t, Coords::Standard, x))
        .filter(|s| reconstruct(&t, s).unwrap().kind == Some(SurfaceKind::ProjectivePlane))
        .collect();
    assert!(!planes.is_empty());
    for p in planes {
        assert_eq!(is_fault(&t, &p, &budget()).unwrap().unwrap().branch, Branch::Nonorientable);
    }
}

#[test]
fn negative_euler_characteristic_is_misuse() {
    let t = prepare(&fixtures::torus_cross_interval()).unwrap();
    let sys = matching_system(&t, Coords::Standard);
    let s = vertex_solutions(&sys, Limits::default())
        .unwrap()
        .into_iter()
        .map(|x| NormalVector::new(&t, Coords::Standard, x))
        .find(|s| reconstruct(&t, s).unwrap().euler < 0)
        .unwrap();
    assert!(is_fault(&t, &s, &budget()).is_err());
}

#[test]
fn closed_scans() {
    let b = budget();
    assert!(has_fundamental_closed_fault(&fixtures::figure_eight(), &b).unwrap().is_none());
    let sphere = has_fundamental_closed_fault(&fixtures::figure_eight_sum_lens(), &b).unwrap().unwrap();
    assert_eq!(sphere.branch, Branch::Sphere);
    assert_eq!(sphere.piece_count, Some(2));
    assert!(sphere.pieces.iter().all(|p| p.three_ball == Some(false)));

    // One torus boundary component, cut from RP^3 # RP^3; it contains a
    // closed normal Klein bottle.
    let k = from_isosig("dHPabccdjw").unwrap();
    let cert = has_fundamental_closed_fault(&k, &b).unwrap().unwrap();
    assert_eq!(cert.branch, Branch::Nonorientable);
    assert_eq!(cert.report.euler, 0);
}

#[test]
fn annulus_scans() {
    let b = budget();
    let trefoil = prepare(&fixtures::trefoil()).unwrap();
    let cert = has_vertex_quad_annulus_fault(&trefoil, &b).unwrap().unwrap();
    assert_eq!(cert.branch, Branch::Annulus);
    assert_eq!(cert.piece_count, Some(2));
    assert!(cert.pieces.iter().all(|p| p.solid_torus == Some(true)));
    let fig8 = prepare(&fixtures::figure_eight()).unwrap();
    assert!(has_vertex_quad_annulus_fault(&fig8, &b).unwrap().is_none());

    let whitehead = prepare(&fixtures::whitehead_link()).unwrap();
    assert!(has_nonsep_vertex_quad_annulus(&whitehead, &b).unwrap().is_none());
    let seifert = prepare(&fixtures::torus_link_2_4()).unwrap();
    let nonsep = has_nonsep_vertex_quad_annulus(&seifert, &b).unwrap().unwrap();
    assert!(!nonsep.report.separating);
    // The non-separating scan is a restriction of the full annulus scan.
    assert!(has_vertex_quad_annulus_fault(&seifert, &b).unwrap().is_some());
    assert!(has_nonsep_vertex_quad_annulus(&trefoil, &b).is_err());
}

#[test]
fn nonseparating_annuli_are_faults() {
    let t = fixtures::torus_cross_interval();
    let sys = matching_system(&t, Coords::Quad);
    let mut seen = 0;
    for q in vertex_solutions(&sys, Limits::default()).unwrap() {
        let s = quad_to_standard(&t, &NormalVector::new(&t, Coords::Quad, q)).unwrap();
        let r = reconstruct(&t, &s).unwrap();
        if r.kind == Some(SurfaceKind::Annulus) && !r.separating {
            let cert = is_fault(&t, &s, &budget()).unwrap().unwrap();
            assert_eq!(cert.piece_count, Some(1));
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn nonzero_boundary_class_means_nonseparating() {
    for t in [fixtures::solid_torus(), fixtures::torus_cross_interval(), prepare(&fixtures::trefoil()).unwrap()] {
        let sys = matching_system(&t, Coords::Standard);
        for x in vertex_solutions(&sys, Limits::default()).unwrap() {
            let s = NormalVector::new(&t, Coords::Standard, x);
            let r = reconstruct(&t, &s).unwrap();
            let mut total = vec![vec![0u8; 2]; t.boundary_components().len()];
            for c in &r.boundary_curves {
                for (k, bit) in c.class.iter().enumerate() {
                    total[c.boundary_component][k] ^= bit;
                }
            }
            if total.iter().flatten().any(|&b| b == 1) {
                assert!(!r.separating);
                assert_eq!(cuts_off(&t, &s).unwrap().pieces.len(), 1);
            }
        }
    }
}

#[test]
fn scans_are_deterministic() {
    let b = budget();
    let t = prepare(&fixtures::trefoil()).unwrap();
    let first = vertex_quad_annulus_fault_scan(&t, &b).unwrap();
    let again = vertex_quad_annulus_fault_scan(&t, &b).unwrap();
    assert_eq!(first, again);
}

#[test]
fn certificate_json_has_branch_coordinates_and_pieces() {
    let t = prepare(&fixtures::trefoil()).unwrap();
    let cert = has_vertex_quad_annulus_fault(&t, &budget()).unwrap().unwrap();
    let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["branch"], "annulus");
    assert_eq!(v["surface"]["coords"], "standard");
    assert!(v["surface"]["entries"].as_array().unwrap().len() == 7 * t.size());
    assert_eq!(v["pieces"].as_array().unwrap().len(), 2);
    assert_eq!(v["pieces"][0]["solid_torus"], true);
}
