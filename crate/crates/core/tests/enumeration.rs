mod common;

use cusp_core::enumerate::{fundamental_solutions, vertex_solutions, Limits};
use cusp_core::fixtures;
use cusp_core::normal::{matching_system, Coords};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn fixture_counts_are_frozen() {
    // (vertex, fundamental) counts in standard coordinates. Regina 7.3
    // reports the same vector sets for these four triangulations.
    let cases = [
        ("figure-eight", fixtures::figure_eight(), 1, 1),
        ("trefoil", fixtures::trefoil(), 2, 2),
        ("whitehead", fixtures::whitehead_link(), 3, 3),
        ("t24", fixtures::torus_link_2_4(), 6, 6),
    ];
    for (name, t, v, f) in cases {
        let s = matching_system(&t, Coords::Standard);
        assert_eq!(vertex_solutions(&s, Limits::default()).unwrap().len(), v, "{name}");
        assert_eq!(fundamental_solutions(&s, Limits::default()).unwrap().len(), f, "{name}");
    }
}

#[test]
fn two_tetrahedron_fixtures_match_oracles() {
    for t in [fixtures::figure_eight(), fixtures::trefoil()] {
        let s = matching_system(&t, Coords::Standard);
        assert_eq!(vertex_solutions(&s, Limits::default()).unwrap(), common::brute_vertices(&s));
        let q = matching_system(&t, Coords::Quad);
        assert_eq!(vertex_solutions(&q, Limits::default()).unwrap(), common::brute_vertices(&q));
        assert_eq!(fundamental_solutions(&q, Limits::default()).unwrap(), common::brute_fundamental(&q, 6));
    }
}

fn check_against_oracles(s: &cusp_core::normal::MatchingSystem, label: &str) {
    let v = vertex_solutions(s, Limits::default()).unwrap();
    assert_eq!(v, common::brute_vertices(s), "{label}");
    if s.dim() <= 10 {
        let f = fundamental_solutions(s, Limits::default()).unwrap();
        let boxed: Vec<Vec<u64>> = f.iter().filter(|x| x.iter().all(|&e| e <= 6)).cloned().collect();
        assert_eq!(boxed, common::brute_fundamental(s, 6), "{label}");
    }
}

#[test]
fn random_small_systems_match_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let t = common::random_triangulation(&mut rng, 3, 0.8);
        check_against_oracles(&matching_system(&t, Coords::Quad), &t.fingerprint());
        if t.size() <= 2 {
            check_against_oracles(&matching_system(&t, Coords::Standard), &t.fingerprint());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn enumerated_solutions_are_admissible_and_consistent(seed in any::<u64>(), quad in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = common::random_triangulation(&mut rng, 3, 0.85);
        let s = matching_system(&t, if quad { Coords::Quad } else { Coords::Standard });
        let v = vertex_solutions(&s, Limits::default()).unwrap();
        let f = fundamental_solutions(&s, Limits::default()).unwrap();
        for x in v.iter().chain(&f) {
            prop_assert!(s.is_solution(x));
            prop_assert!(s.is_admissible(x));
            prop_assert!(x.iter().any(|&e| e > 0));
        }
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                // Primitive vectors are proportional only when equal.
                prop_assert_ne!(a, b);
            }
            prop_assert!(f.contains(a));
        }
    }
}
