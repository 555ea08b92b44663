//! Small named triangulations used by the tests, the acceptance suite and
//! the command-line tool.

use crate::format::from_isosig;
use crate::perm::Perm4;
use crate::triangulation::Triangulation;

fn perm(images: [u8; 4]) -> Perm4 {
    Perm4::new(images).expect("fixture permutation")
}

/// A single tetrahedron with no gluings: a 3-ball.
pub fn lone_tetrahedron() -> Triangulation {
    Triangulation::from_gluings(1, &[]).expect("lone tetrahedron")
}

/// Two-tetrahedron ideal triangulation of the figure-eight knot complement.
pub fn figure_eight() -> Triangulation {
    from_isosig("cPcbbbiht").expect("figure-eight signature")
}

/// One-tetrahedron layered solid torus.
pub fn solid_torus() -> Triangulation {
    from_isosig("bGaj").expect("layered solid torus signature")
}

/// Two-tetrahedron ideal triangulation of the trefoil knot complement.
pub fn trefoil() -> Triangulation {
    from_isosig("cPcbbbadu").expect("trefoil signature")
}

/// Four-tetrahedron ideal triangulation of the Whitehead link complement.
pub fn whitehead_link() -> Triangulation {
    from_isosig("eLPkbdcddhgggb").expect("Whitehead link signature")
}

/// Complement of the (2,4) torus link: Seifert fibred over the annulus with
/// one cone point of order 2.
pub fn torus_link_2_4() -> Triangulation {
    from_isosig("eLAkbccddeebdc").expect("torus link signature")
}

/// Six-tetrahedron ideal triangulation of the connected sum of the
/// figure-eight knot complement with the lens space L(3,1).
pub fn figure_eight_sum_lens() -> Triangulation {
    from_isosig("gLAzQbbcdeffhtoggak").expect("connected sum signature")
}

/// Product of the one-vertex two-triangle torus with an interval: six
/// tetrahedra, two boundary tori, each already minimal.
pub fn torus_cross_interval() -> Triangulation {
    // Tetrahedra 0..3 form the prism over the upper triangle, 3..6 over the
    // lower one; each prism is the ordered staircase [0_0..k_0, k_1..2_1].
    let shift = perm([1, 2, 3, 0]);
    let back = perm([3, 0, 1, 2]);
    let id = Perm4::IDENTITY;
    Triangulation::from_gluings(
        6,
        &[
            (0, 1, 1, id),
            (1, 2, 2, id),
            (3, 1, 4, id),
            (4, 2, 5, id),
            (0, 3, 4, shift),
            (1, 3, 5, shift),
            (1, 0, 3, back),
            (2, 0, 4, back),
            (0, 2, 3, id),
            (2, 1, 5, id),
        ],
    )
    .expect("torus cross interval")
}

/// Fixture names accepted by [`by_name`].
pub const NAMES: [&str; 8] = [
    "lone-tetrahedron",
    "solid-torus",
    "torus-cross-interval",
    "figure-eight",
    "trefoil",
    "whitehead",
    "torus-link-2-4",
    "figure-eight-sum-lens",
];

pub fn by_name(name: &str) -> Option<Triangulation> {
    Some(match name {
        "lone-tetrahedron" => lone_tetrahedron(),
        "solid-torus" => solid_torus(),
        "torus-cross-interval" => torus_cross_interval(),
        "figure-eight" => figure_eight(),
        "trefoil" => trefoil(),
        "whitehead" => whitehead_link(),
        "torus-link-2-4" => torus_link_2_4(),
        "figure-eight-sum-lens" => figure_eight_sum_lens(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_cross_interval_has_two_minimal_tori() {
        let t = torus_cross_interval();
        assert!(t.is_orientable());
        assert!(t.is_connected());
        assert!(!t.is_ideal());
        assert_eq!(t.boundary_components().len(), 2);
        for b in t.boundary_components() {
            assert!(b.is_torus() && b.is_minimal(), "{b:?}");
        }
    }

    #[test]
    fn signature_fixtures_parse() {
        assert_eq!(solid_torus().boundary_components().len(), 1);
        assert!(solid_torus().boundary_components()[0].is_torus());
        assert_eq!(trefoil().ideal_vertices().len(), 1);
        assert_eq!(whitehead_link().ideal_vertices().len(), 2);
        assert_eq!(torus_link_2_4().ideal_vertices().len(), 2);
        assert_eq!(figure_eight_sum_lens().ideal_vertices().len(), 1);
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
    }
}
