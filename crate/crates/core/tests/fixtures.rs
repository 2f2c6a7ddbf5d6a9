//! Checks on the dimer and cone files shipped in `fixtures/`.

use std::path::PathBuf;

use nccr_core::dimer::{
    all_faces_hexagonal, dual_quiver, generate_hexagonal_dimer, is_consistent, mckay_quiver, quiver_isomorphic,
    steady_decision_dimer, toric_polygon, zigzag_paths, MatchingLimits, ZigzagPath,
};
use nccr_core::polygon::LatticePolygon;
use nccr_core::toric::{class_group, cones_equivalent, cone_from_i64, validate_cone};
use nccr_core::{ConeData, ConeError, DimerModel, FinAbGroup, GroupElement};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn model(name: &str) -> DimerModel {
    DimerModel::from_json(&fixture(name)).unwrap()
}

fn z14(xs: &[i64]) -> Vec<GroupElement> {
    xs.iter().map(|&x| GroupElement::torsion_from(&[x])).collect()
}

fn normals_match_zigzags(m: &DimerModel) {
    let zs = zigzag_paths(m);
    let sum = zs.iter().fold([0, 0], |a, z| [a[0] + z.class[0], a[1] + z.class[1]]);
    assert_eq!(sum, [0, 0]);
    let mut from_zigzags: Vec<[i64; 2]> = zs.iter().map(ZigzagPath::normal).collect();
    let mut from_polygon = toric_polygon(m, MatchingLimits::default()).unwrap().edge_normals();
    from_zigzags.sort_unstable();
    from_polygon.sort_unstable();
    assert_eq!(from_zigzags, from_polygon);
}

#[test]
fn sigma_dimer_fixture() {
    let m = model("sigma_dimer.json");
    assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (16, 24, 8));
    assert!(is_consistent(&m).consistent);
    assert!(!all_faces_hexagonal(&m));
    let p = toric_polygon(&m, MatchingLimits::default()).unwrap();
    let square = LatticePolygon::from_points([[1, 1], [-1, 1], [-1, -1], [1, -1]]);
    assert!(p.lattice_equivalent(&square));
    assert_eq!(p.twice_area(), 8);
    let sigma = cone_from_i64(&[&[1, 1, 1], &[-1, 1, 1], &[-1, -1, 1], &[1, -1, 1]], 3).unwrap();
    assert!(cones_equivalent(&p.cone().unwrap(), &sigma));
    normals_match_zigzags(&m);
    let r = steady_decision_dimer(&m, MatchingLimits::default()).unwrap();
    assert!(!r.steady);
    assert_eq!(r.class_group.group.to_string(), "Z + Z/2 + Z/2");
}

#[test]
fn hexagonal_fixture_matches_generated_model() {
    let m = model("hexagonal_z14.json");
    assert_eq!((m.num_vertices(), m.num_edges(), m.num_faces()), (28, 42, 14));
    assert!(is_consistent(&m).consistent);
    assert!(all_faces_hexagonal(&m));
    let g = FinAbGroup::cyclic(14);
    let w = z14(&[1, 5, 8]);
    let q = dual_quiver(&m);
    assert!(q.is_well_formed());
    let mckay = mckay_quiver(&g, &w).unwrap();
    assert!(quiver_isomorphic(&q.quiver, &mckay).unwrap());
    let generated = dual_quiver(&generate_hexagonal_dimer(&g, &w).unwrap());
    assert!(quiver_isomorphic(&q.quiver, &generated.quiver).unwrap());
    // a different action of the same group gives a different quiver
    let other = mckay_quiver(&g, &z14(&[1, 1, 12])).unwrap();
    assert!(!quiver_isomorphic(&q.quiver, &other).unwrap());
    normals_match_zigzags(&m);
    let r = steady_decision_dimer(&m, MatchingLimits::default()).unwrap();
    assert!(r.steady);
    let quotient = r.quotient.unwrap();
    assert_eq!(quotient.group, g);
    assert!(nccr_core::toric::weights_equivalent(&g, &quotient.weights, &w));
}

#[test]
fn desk_fixtures() {
    let hex = model("one_hexagon.json");
    assert_eq!(hex.num_faces(), 1);
    normals_match_zigzags(&hex);
    let r = steady_decision_dimer(&hex, MatchingLimits::default()).unwrap();
    assert!(r.steady);
    assert_eq!(r.polygon.describe(), "unit triangle");

    let con = model("conifold.json");
    normals_match_zigzags(&con);
    let r = steady_decision_dimer(&con, MatchingLimits::default()).unwrap();
    assert!(r.consistent() && !r.hexagonal && !r.steady);
    assert_eq!(r.class_group.group.to_string(), "Z");
}

#[test]
fn cone_fixtures() {
    let sigma = ConeData::from_json(&fixture("sigma_cone.json")).unwrap();
    assert_eq!(class_group(&sigma).group.to_string(), "Z + Z/2 + Z/2");
    let octant = ConeData::from_json(&fixture("octant.json")).unwrap();
    assert!(class_group(&octant).group.is_trivial());
    let square = ConeData::from_json(&fixture("square_cone.json")).unwrap();
    assert_eq!(class_group(&square).group.to_string(), "Z");
    assert!(matches!(
        ConeData::from_json(&fixture("non_primitive.json")),
        Err(ConeError::NonPrimitive { index: 2, .. })
    ));
    assert!(validate_cone(sigma.rays().to_vec(), 3).is_ok());
}
