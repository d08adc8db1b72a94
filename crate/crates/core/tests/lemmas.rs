use approx::assert_relative_eq;
use isotri::geom::{is_isosceles, Point, Tolerance, Triangle};
use isotri::lemmas::minkowski::{minkowski_mean, polygon_perimeter};
use isotri::lemmas::sampling::{random_scalene, sample_rng};
use isotri::lemmas::{
    check_container_inequalities, check_embedded_inequalities, check_hinge,
    check_min_perimeter_types, check_minkowski_perimeter, check_structural, hinge_margin,
    min_perimeter_type, run_lemma, LEMMA_IDS,
};
use isotri::oracle::{oracle_solve, OracleConfig};
use isotri::reference::instance;
use isotri::solver::{shares_side_and_angle, solve, Problem};
use isotri::special::{container_specials, embedded_specials, ContainerKind, EmbeddedKind};
use isotri::CandidateKind;

fn emb_area(t: &Triangle, k: EmbeddedKind) -> f64 {
    embedded_specials(t, Tolerance::default())
        .unwrap()
        .into_iter()
        .find(|c| c.kind == CandidateKind::Embedded(k))
        .unwrap()
        .area
}

fn cont_perimeter(t: &Triangle, k: ContainerKind) -> f64 {
    container_specials(t, Tolerance::default())
        .unwrap()
        .into_iter()
        .find(|c| c.kind == CandidateKind::Container(k))
        .unwrap()
        .perimeter
}

#[test]
fn inequality_suites_hold() {
    for seed in [1, 99] {
        let e = check_embedded_inequalities(10_000, seed);
        assert_eq!(e.failures, 0, "{:?}", e.details.first());
        assert!(e.details.is_empty() && e.worst_margin > 0.0);
        let c = check_container_inequalities(10_000, seed);
        assert_eq!(c.failures, 0, "{:?}", c.details.first());
        assert!(c.details.is_empty() && c.worst_margin > 0.0);
    }
}

#[test]
fn embedded_boundary_scan() {
    // ar(AB1C) < ar(ABC1) tightens as b approaches c.
    let mut prev = f64::INFINITY;
    for gap in [1e-1, 1e-2, 1e-3] {
        let t = Triangle::from_sides(0.6, 1.0 - gap, 1.0).unwrap();
        let lo = emb_area(&t, EmbeddedKind::AB1C);
        let hi = emb_area(&t, EmbeddedKind::ABC1);
        let slack = (hi - lo) / hi;
        assert!(slack > 0.0 && slack < prev, "gap {gap}: slack {slack}");
        prev = slack;
    }
    assert!(prev < 3e-3);
}

#[test]
fn container_boundary_scan() {
    // per(ABC') < per(ABC'') tightens as a approaches b.
    let mut prev = f64::INFINITY;
    for gap in [1e-1, 1e-2, 1e-3] {
        let t = Triangle::from_sides(0.8 * (1.0 - gap), 0.8, 1.0).unwrap();
        let lo = cont_perimeter(&t, ContainerKind::ABCPrime);
        let hi = cont_perimeter(&t, ContainerKind::ABCDoublePrime);
        let slack = (hi - lo) / hi;
        assert!(slack > 0.0 && slack < prev, "gap {gap}: slack {slack}");
        prev = slack;
    }
    assert!(prev < 1e-3);
}

#[test]
fn sampler_never_yields_isosceles() {
    let tol = Tolerance::with_eps_rel(9e-4).unwrap();
    for i in 0..10_000 {
        let t = random_scalene(&mut sample_rng(61, i));
        assert!(!is_isosceles(&t, tol).is_isosceles(), "sample {i}");
        let mut s = t.sides();
        s.sort_by(f64::total_cmp);
        assert!(
            s[1] - s[0] >= 9.99e-4 * s[2] && s[2] - s[1] >= 9.99e-4 * s[2],
            "sample {i}"
        );
    }
}

#[test]
fn minkowski_cases() {
    let tri = [
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(0.5, 1.5),
    ];
    let homothetic = tri.map(|p| p * 2.5 + Point::new(4.0, -1.0));
    let k = minkowski_mean(&tri, &homothetic);
    assert_eq!(k.len(), 3);
    assert_relative_eq!(
        polygon_perimeter(&k),
        0.5 * (polygon_perimeter(&tri) + polygon_perimeter(&homothetic)),
        max_relative = 1e-12
    );

    let other = [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.3),
        Point::new(0.2, 2.0),
    ];
    let k = minkowski_mean(&tri, &other);
    assert!(k.len() >= 4);
    assert_relative_eq!(
        polygon_perimeter(&k),
        0.5 * (polygon_perimeter(&tri) + polygon_perimeter(&other)),
        max_relative = 1e-12
    );

    let k = minkowski_mean(&tri, &tri);
    assert_eq!(k.len(), 3);
    for p in k {
        assert!(tri.iter().any(|q| p.dist(*q) < 1e-12));
    }

    let r = check_minkowski_perimeter(10_000, 5);
    assert_eq!(r.failures, 0, "{:?}", r.details.first());
}

#[test]
fn hinge_cases() {
    assert_eq!(hinge_margin(2.0, 3.0, 1.0, 1.0), 0.0);
    assert!(hinge_margin(2.0, 3.0, 1.0, 1.0 + 1e-8) > 0.0);
    assert!(hinge_margin(2.0, 3.0, 1e-7, 2e-7) > 0.0);
    let r = check_hinge(10_000, 5);
    assert_eq!(r.failures, 0);
    assert!(r.worst_margin > 0.0);
}

#[test]
fn max_area_witnesses_share_side_and_angle() {
    let cfg = OracleConfig::default();
    let tol = Tolerance::with_eps_rel(1e-6).unwrap();
    for i in 0..100 {
        let t = random_scalene(&mut sample_rng(67, i));
        let o = oracle_solve(&t, Problem::MaxAreaEmbedded, cfg).unwrap();
        assert!(shares_side_and_angle(&o.witness, &t, tol), "sample {i}");
    }
}

#[test]
fn structural_special_cases() {
    let cfg = OracleConfig::default();
    let tol = Tolerance::with_eps_rel(1e-6).unwrap();
    let t7 = instance(0.7, 1.57);
    let o = oracle_solve(&t7, Problem::MinPerimContainer, cfg).unwrap();
    assert!(!shares_side_and_angle(&o.witness, &t7, tol));

    let iso = Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(1.0, 3.0),
    )
    .unwrap();
    for p in Problem::ALL {
        let o = oracle_solve(&iso, p, cfg).unwrap();
        for v in o.witness.vertices() {
            assert!(iso.vertices().iter().any(|q| v.dist(*q) <= 1e-6), "{p}");
        }
    }

    let r = check_structural(3, 71, cfg);
    assert_eq!(r.failures, 0, "{:?}", r.details);
}

#[test]
fn min_perimeter_type_membership_and_instances() {
    let r = check_min_perimeter_types(10_000, 73);
    assert_eq!(r.failures, 0);
    assert_eq!(r.tally.values().sum::<usize>(), 10_000);
    assert!(!r.tally.contains_key("other"));

    let tol = Tolerance::default();
    let w7 = solve(&instance(0.7, 1.57), Problem::MinPerimContainer, tol).unwrap();
    assert_eq!(min_perimeter_type(w7.winner().kind), Some("ex2"));
    let w8 = solve(&instance(0.8, 1.62474), Problem::MinPerimContainer, tol).unwrap();
    assert_eq!(min_perimeter_type(w8.winner().kind), Some("apex"));
    assert_relative_eq!(w8.optimum, 4.264431, epsilon = 5e-6);
    assert!(w8.optimum < 4.264511);
}

#[test]
fn checks_are_deterministic() {
    let cfg = OracleConfig::default();
    for id in LEMMA_IDS.iter().filter(|&&id| id != "structural") {
        let a = run_lemma(id, 500, 9, cfg).unwrap();
        let b = run_lemma(id, 500, 9, cfg).unwrap();
        assert_eq!(a, b, "{id}");
    }
    assert!(run_lemma("nope", 1, 1, cfg).is_none());
}
