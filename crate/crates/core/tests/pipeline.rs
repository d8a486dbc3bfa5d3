use sumstab::geometry::{convex_progression, Polytope};
use sumstab::infconv::{functional_deficit, inf_convolution, lower_convex_hull, parse_function, write_function};
use sumstab::lattice::compress::{compress_all, is_down_set};
use sumstab::lattice::io::{parse_set, set_from_json, set_to_json, write_set};
use sumstab::rational::{int, ratio};
use sumstab::sumset::{doubling_deficit, minkowski_sum};
use sumstab::LatticeSet;

#[test]
fn text_and_json_round_trip() {
    let a = parse_set("# triangle\n0 0\n3 0\n0 3\n1 1\n", None).unwrap();
    assert_eq!(parse_set(&write_set(&a), Some(2)).unwrap(), a);
    assert_eq!(set_from_json(&set_to_json(&a).to_string()).unwrap(), a);
    assert!(parse_set("1 2\n3\n", None).is_err());
}

#[test]
fn hull_progression_and_deficit_agree_on_a_triangle() {
    let a = LatticeSet::from_arrays(&[[0, 0], [4, 0], [0, 4]]);
    let report = convex_progression(&a).unwrap();
    // 15 lattice points in the closed triangle
    assert_eq!(report.co.len(), 15);
    // the lattice of A is 4Z^2, so only co(A) \ A is large
    assert_eq!(report.gap, 0);
    assert_eq!(report.co_hat, a);
    assert_eq!(report.co_gap(&a), 12);
    let hull = Polytope::convex_hull(&a).unwrap();
    assert_eq!(hull.volume(), &int(8));
    assert_eq!(hull.lattice_points().unwrap(), report.co);
    let filled = doubling_deficit(&report.co).unwrap();
    assert_eq!(filled.card_sum, minkowski_sum(&report.co, &report.co).unwrap().len());
    assert!(filled.deficit < 0);
}

#[test]
fn compression_keeps_size_and_never_grows_sumset() {
    let a = LatticeSet::from_arrays(&[[2, 5], [4, 5], [7, 1], [3, 3], [3, 8], [9, 9]]);
    let c = compress_all(&a).unwrap();
    assert_eq!(c.len(), a.len());
    assert!(is_down_set(&c));
    let sum = |s: &LatticeSet| minkowski_sum(s, s).unwrap().len();
    assert!(sum(&c) <= sum(&a));
}

#[test]
fn function_pipeline() {
    let f = parse_function("0 0\n1 3\n2 1\n3 3\n").unwrap();
    let hull = lower_convex_hull(&f).unwrap();
    assert_eq!(hull.values(), &[int(0), ratio(1, 2), int(1), int(3)]);
    assert_eq!(parse_function(&write_function(&hull)).unwrap(), hull);
    let conv = inf_convolution(&f).unwrap();
    assert_eq!(conv.domain().len(), 7);
    assert_eq!(conv.values()[0], int(0));
    let r = functional_deficit(&f).unwrap();
    assert_eq!(r.hull_deficit, f.sum() - hull.sum());
}
