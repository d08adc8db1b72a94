use std::f64::consts::PI;

use approx::assert_relative_eq;
use isotri::geom::{contains_triangle, is_isosceles, Point, Tolerance, Triangle};
use isotri::lemmas::min_perimeter_type;
use isotri::lemmas::sampling::{random_scalene, sample_rng};
use isotri::lemmas::structure::{container_defects, embedded_defects};
use isotri::nonspecial::x_star;
use isotri::reference::instance;
use isotri::solver::{shares_side_and_angle, solve, Problem};
use isotri::special::{embedded_specials, EmbeddedKind};
use isotri::CandidateKind;
use rand::Rng;

fn right() -> Triangle {
    Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
}

#[test]
fn right_triangle_optima() {
    let t = right();
    let tol = Tolerance::default();
    let cases = [
        (Problem::MaxAreaEmbedded, 4.8, "emb:AB'C"),
        (Problem::MaxPerimEmbedded, 11.25, "emb:ABC1"),
        (Problem::MinAreaContainer, 7.5, "cont:ABC'"),
        (
            Problem::MinPerimContainer,
            10.0 + 10.0 / 10f64.sqrt(),
            "cont:ABC'",
        ),
    ];
    for (p, value, kind) in cases {
        let r = solve(&t, p, tol).unwrap();
        assert_relative_eq!(r.optimum, value, max_relative = 1e-12);
        assert_eq!(r.winner().kind.name(), kind, "{p}");
        assert!(r.shares_side_and_angle, "{p}");
    }
}

#[test]
fn v07_instance_has_nonspecial_winner() {
    let r = solve(
        &instance(0.7, 1.57),
        Problem::MinPerimContainer,
        Tolerance::default(),
    )
    .unwrap();
    assert_eq!(r.winner().kind.name(), "nonspecial:ex2");
    assert_relative_eq!(r.optimum, 4.056333, epsilon = 5e-6);
    assert!(!r.shares_side_and_angle);
}

#[test]
fn isosceles_input_is_fixed_point() {
    let tol = Tolerance::default();
    for t in [
        Triangle::from_sides(1.0, 1.0, 1.0).unwrap(),
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 5.0),
        )
        .unwrap(),
    ] {
        for p in Problem::ALL {
            let r = solve(&t, p, tol).unwrap();
            assert_eq!(r.winner().kind, CandidateKind::Input);
            assert_eq!(r.optimum, t.metric(p.metric()));
            assert_eq!(r.winner().triangle, Some(t));
        }
    }
}

#[test]
fn shares_side_and_angle_examples() {
    let tol = Tolerance::default();
    let t = Triangle::new(
        Point::new(0.2, 0.1),
        Point::new(3.1, 0.4),
        Point::new(1.1, 1.7),
    )
    .unwrap();
    let abpc = embedded_specials(&t, tol)
        .unwrap()
        .into_iter()
        .find(|c| c.kind == CandidateKind::Embedded(EmbeddedKind::ABPrimeC))
        .unwrap();
    assert!(shares_side_and_angle(&t, &abpc.triangle.unwrap(), tol));

    let t7 = instance(0.7, 1.57);
    let w = solve(&t7, Problem::MinPerimContainer, tol)
        .unwrap()
        .winner()
        .triangle
        .unwrap();
    assert!(!shares_side_and_angle(&t7, &w, tol));

    let far = t.map(|p| p + Point::new(100.0, 0.0)).unwrap();
    assert!(!shares_side_and_angle(&t, &far, tol));
}

#[test]
fn winner_invariants() {
    let tol = Tolerance::default();
    for i in 0..2000 {
        let t = random_scalene(&mut sample_rng(23, i));
        for p in Problem::ALL {
            let r = solve(&t, p, tol).unwrap();
            assert!(!r.winners.is_empty());
            for w in &r.winners {
                assert!(w.valid, "{p} sample {i}");
                let tri = w.triangle.unwrap();
                assert!(is_isosceles(&tri, tol).is_isosceles());
                if p.is_container() {
                    assert!(contains_triangle(&tri, &t, tol));
                } else {
                    assert!(contains_triangle(&t, &tri, tol));
                }
                assert!((w.metric(p.metric()) - r.optimum).abs() <= tol.eps_rel * r.optimum);
            }
            assert_eq!(r.optimum, r.winner().metric(p.metric()));
            // Nothing valid in the table beats the optimum.
            for c in r.table.iter().filter(|c| c.valid) {
                let m = c.metric(p.metric());
                if p.is_container() {
                    assert!(m >= r.optimum);
                } else {
                    assert!(m <= r.optimum);
                }
            }
        }
    }
}

#[test]
fn winners_share_side_and_angle() {
    let tol = Tolerance::default();
    for i in 0..10_000 {
        let t = random_scalene(&mut sample_rng(29, i));
        for p in [
            Problem::MaxAreaEmbedded,
            Problem::MaxPerimEmbedded,
            Problem::MinAreaContainer,
        ] {
            assert!(
                solve(&t, p, tol).unwrap().shares_side_and_angle,
                "{p} sample {i}"
            );
        }
    }
}

#[test]
fn winner_sets() {
    // The max-perimeter embedded set is asserted by the acceptance suite.
    let tol = Tolerance::default();
    let area_emb = ["emb:A'BC", "emb:AB'C", "emb:ABC1"];
    let area_cont = ["cont:AB'C", "cont:ABC'", "cont:AB1C"];
    for i in 0..10_000 {
        let t = random_scalene(&mut sample_rng(31, i));
        let k = solve(&t, Problem::MaxAreaEmbedded, tol)
            .unwrap()
            .winner()
            .kind
            .name();
        assert!(area_emb.contains(&k.as_str()), "{k} sample {i}");
        let k = solve(&t, Problem::MinAreaContainer, tol)
            .unwrap()
            .winner()
            .kind
            .name();
        assert!(area_cont.contains(&k.as_str()), "{k} sample {i}");
        let k = solve(&t, Problem::MinPerimContainer, tol)
            .unwrap()
            .winner()
            .kind;
        assert!(min_perimeter_type(k).is_some(), "{k} sample {i}");
    }
}

#[test]
fn similarity_equivariance() {
    let tol = Tolerance::default();
    let mut rng = sample_rng(37, 0);
    for i in 0..300 {
        let t = random_scalene(&mut sample_rng(41, i));
        let s: f64 = 10f64.powf(rng.random_range(-1.0..1.0));
        let rot: f64 = rng.random_range(0.0..2.0 * PI);
        let shift = Point::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
        let flip = rng.random_bool(0.5);
        let f = |p: Point| {
            let q = if flip { Point::new(p.x, -p.y) } else { p };
            q.rotate(rot) * s + shift
        };
        let u = t.map(f).unwrap();
        for p in Problem::ALL {
            let a = solve(&t, p, tol).unwrap();
            let b = solve(&u, p, tol).unwrap();
            let k = if p.metric() == isotri::Metric::Area {
                s * s
            } else {
                s
            };
            assert_relative_eq!(b.optimum, a.optimum * k, max_relative = 1e-9);
            let wa = a.winner().triangle.unwrap().map(f).unwrap();
            let wb = b.winner().triangle.unwrap();
            let eps = 1e-7 * u.diameter();
            let same = wa
                .vertices()
                .iter()
                .all(|p| wb.vertices().iter().any(|q| p.dist(*q) <= eps));
            // Near-ties may swap the reported winner; values must still agree.
            if a.winners.len() == 1 && b.winners.len() == 1 {
                assert!(same, "{p} sample {i}");
            }
        }
    }
}

#[test]
fn winners_satisfy_structural_conditions() {
    let tol = Tolerance::default();
    for i in 0..2000 {
        let t = random_scalene(&mut sample_rng(43, i));
        for p in Problem::ALL {
            let w = solve(&t, p, tol).unwrap().winner().triangle.unwrap();
            let d = if p.is_container() {
                container_defects(&t, &w)
            } else {
                embedded_defects(&t, &w, p == Problem::MaxAreaEmbedded)
            };
            assert!(d.holds(1e-6), "{p} sample {i}: {:?}", d.worst());
        }
    }
}

#[test]
fn boundary_case_ex2_ties_abcbar() {
    let v = 0.8;
    let t = instance(v, x_star(v).unwrap().value);
    let r = solve(&t, Problem::MinPerimContainer, Tolerance::default()).unwrap();
    let per = |name: &str| {
        r.table
            .iter()
            .filter(|c| c.valid && c.kind.name() == name)
            .map(|c| c.perimeter)
            .fold(f64::INFINITY, f64::min)
    };
    assert_relative_eq!(
        per("nonspecial:ex2"),
        per("cont:ABCbar"),
        max_relative = 1e-12
    );
}

#[test]
fn problem_names_roundtrip() {
    for p in Problem::ALL {
        assert_eq!(p.name().parse::<Problem>().unwrap(), p);
    }
    assert!("largest".parse::<Problem>().is_err());
}
