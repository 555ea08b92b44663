use cusp_core::cut::cut_along;
use cusp_core::fixtures;
use cusp_core::format::{from_isosig, parse_gluing_table};
use cusp_core::homology::{homology_h1, HomologyGroup};
use cusp_core::moves::{fold_along_edge, fold_fillings, two_two_move};
use cusp_core::recognition::*;
use cusp_core::simplify::truncate_and_simplify;
use cusp_core::Triangulation;

fn budget() -> Budget {
    Budget::default()
}

#[test]
fn connectivity() {
    let lone = fixtures::lone_tetrahedron();
    assert!(is_connected(&lone));
    assert!(is_connected(&fixtures::figure_eight()));
    let two = Triangulation::disjoint_union(&[lone.clone(), lone]).unwrap();
    assert!(!is_connected(&two));
}

#[test]
fn punctured_lens_spaces_are_not_balls() {
    // Punctured L(3,1) and L(5,2), as isomorphism signatures.
    for (sig, torsion) in [("iHrALMkbddffghhaaaaakar", 3), ("hHrALQbddffggaaaaakj", 5)] {
        let t = from_isosig(sig).unwrap();
        assert_eq!(t.boundary_components().len(), 1);
        assert!(t.boundary_components()[0].is_sphere());
        assert_eq!(homology_h1(&t).unwrap().torsion, vec![torsion]);
        assert!(!is_three_ball(&t).unwrap());
    }
}

#[test]
fn folding_a_ball_keeps_a_ball() {
    let lone = fixtures::lone_tetrahedron();
    let e = lone.boundary_edges(0)[0];
    let t = two_two_move(&lone, e).unwrap();
    let coembedded = (0..t.edge_count())
        .filter(|&f| t.skeleton().edges[f].boundary)
        .find(|&f| cusp_core::moves::boundary_edge_status(&t, f).is_ok_and(|s| s.coembedded))
        .unwrap();
    assert!(is_three_ball(&fold_along_edge(&t, coembedded).unwrap()).unwrap());
}

#[test]
fn solid_torus_certificate_replays() {
    let r = has_compressing_disc(&fixtures::solid_torus(), &budget()).unwrap();
    assert!(r.verdict);
    let cert = r.certificate.unwrap();
    let t = parse_gluing_table(&cert.triangulation, 1).unwrap();
    let [Step::Cut { surface }] = cert.steps.as_slice() else { panic!("one cut") };
    let pieces = cut_along(&t, surface).unwrap();
    assert_eq!(pieces.len(), 1);
    assert!(is_three_ball(&pieces[0]).unwrap());
}

#[test]
fn compressing_discs_on_cusped_fixtures() {
    let b = budget();
    assert!(!has_compressing_disc(&fixtures::figure_eight(), &b).unwrap().verdict);
    assert!(!has_compressing_disc(&fixtures::trefoil(), &b).unwrap().verdict);
    assert!(!is_boundary_compressible(&fixtures::figure_eight(), &b).unwrap());
    assert!(is_boundary_compressible(&fixtures::solid_torus(), &b).unwrap());
}

#[test]
fn splitting_annuli() {
    let b = budget();
    let r = splits_along_nonsep_annulus_into_solid_torus(&fixtures::torus_cross_interval(), &b).unwrap();
    assert!(r.verdict);
    let cert = r.certificate.unwrap();
    let t = parse_gluing_table(&cert.triangulation, 1).unwrap();
    let [Step::Cut { surface }] = cert.steps.as_slice() else { panic!("one cut") };
    let pieces = cut_along(&t, surface).unwrap();
    assert_eq!(pieces.len(), 1);
    assert!(is_solid_torus(&pieces[0], &b).unwrap());
    assert!(!splits_along_nonsep_annulus_into_solid_torus(&fixtures::figure_eight(), &b).unwrap().verdict);
    assert!(!splits_along_nonsep_annulus_into_solid_torus(&fixtures::solid_torus(), &b).unwrap().verdict);
}

#[test]
fn torus_cross_interval_and_a_seifert_piece() {
    let b = budget();
    let r = is_torus_cross_interval(&fixtures::torus_cross_interval(), &b).unwrap();
    assert!(r.verdict);
    let cert = r.certificate.unwrap();
    let t = parse_gluing_table(&cert.triangulation, 1).unwrap();
    assert_eq!(homology_h1(&t).unwrap(), HomologyGroup::free(2));
    for filled in fold_fillings(&t, 0).unwrap() {
        assert!(is_solid_torus(&filled, &b).unwrap());
    }

    // The (2,4) torus link exterior fibres over the annulus with one
    // exceptional fibre of order 2. It splits along a vertical annulus
    // into a solid torus, and one filling has H1 = Z + Z/2.
    let seifert = fixtures::torus_link_2_4();
    assert!(splits_along_nonsep_annulus_into_solid_torus(&seifert, &b).unwrap().verdict);
    assert!(!is_torus_cross_interval(&seifert, &b).unwrap().verdict);
    let t = truncate_and_simplify(&seifert).unwrap();
    let groups: Vec<HomologyGroup> = fold_fillings(&t, 0).unwrap().iter().map(|f| homology_h1(f).unwrap()).collect();
    assert!(groups.contains(&HomologyGroup { rank: 1, torsion: vec![2] }));

    assert!(!is_torus_cross_interval(&fixtures::solid_torus(), &b).unwrap().verdict);
    assert!(is_torus_cross_interval(&fixtures::lone_tetrahedron(), &b).is_err());
}

#[test]
fn torus_cross_interval_survives_boundary_moves() {
    let b = budget();
    let t = fixtures::torus_cross_interval();
    for e in (0..t.edge_count()).filter(|&e| t.skeleton().edges[e].boundary) {
        let Ok(moved) = two_two_move(&t, e) else { continue };
        assert!(is_torus_cross_interval(&moved, &b).unwrap().verdict);
    }
}

#[test]
fn budgets_give_resource_errors() {
    let tiny = Budget { max_tets: 64, max_solutions: 2 };
    let err = has_compressing_disc(&fixtures::figure_eight(), &tiny).unwrap_err();
    assert!(matches!(err, cusp_core::Error::ResourceExceeded(_)));
    let small = Budget { max_tets: 3, max_solutions: 100_000 };
    assert!(matches!(
        has_compressing_disc(&fixtures::figure_eight(), &small),
        Err(cusp_core::Error::ResourceExceeded(_))
    ));
}
