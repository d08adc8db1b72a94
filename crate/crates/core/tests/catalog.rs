use approx::assert_relative_eq;
use isotri::geom::{contains_triangle, is_isosceles, normalize, Point, Tolerance, Triangle};
use isotri::lemmas::sampling::{random_scalene, sample_rng};
use isotri::special::{
    closed_form_area, closed_form_perimeter, container_specials, embedded_specials, ContainerKind,
    EmbeddedKind,
};
use isotri::{Candidate, CandidateKind, Error};

fn right() -> Triangle {
    Triangle::from_sides(3.0, 4.0, 5.0).unwrap()
}

fn instance7() -> Triangle {
    Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(1.57, 0.0),
        Point::new(1.0, 0.7),
    )
    .unwrap()
}

fn emb(t: &Triangle, k: EmbeddedKind) -> Candidate {
    embedded_specials(t, Tolerance::default())
        .unwrap()
        .into_iter()
        .find(|c| c.kind == CandidateKind::Embedded(k))
        .unwrap()
}

fn cont(t: &Triangle, k: ContainerKind) -> Candidate {
    container_specials(t, Tolerance::default())
        .unwrap()
        .into_iter()
        .find(|c| c.kind == CandidateKind::Container(k))
        .unwrap()
}

/// Every vertex of `x` is within `eps` of some vertex of `pts` and vice versa.
fn same_vertices(x: &Triangle, pts: [Point; 3], eps: f64) -> bool {
    let near = |p: Point, qs: &[Point]| qs.iter().any(|q| p.dist(*q) <= eps);
    x.vertices().iter().all(|&p| near(p, &pts)) && pts.iter().all(|&p| near(p, &x.vertices()))
}

#[test]
fn embedded_areas_on_right_triangle() {
    let t = right();
    assert_relative_eq!(
        emb(&t, EmbeddedKind::APrimeBC).area,
        4.5,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        emb(&t, EmbeddedKind::ABPrimeC).area,
        4.8,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        emb(&t, EmbeddedKind::ABC1).area,
        4.6875,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        emb(&t, EmbeddedKind::ABC1).perimeter,
        11.25,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        emb(&t, EmbeddedKind::ABPrimeC).perimeter,
        8.0 + 8.0 / 10f64.sqrt(),
        max_relative = 1e-12
    );
}

#[test]
fn a1bc_on_right_triangle_uses_bisector_of_bc() {
    // The bisector of BC meets AB at its midpoint when the angle at C is
    // right, so the construction exists: legs 2.5, base 3.
    let c = emb(&right(), EmbeddedKind::A1BC);
    assert!(c.exists && c.valid);
    assert_relative_eq!(c.area, 3.0, max_relative = 1e-12);
    assert_relative_eq!(c.perimeter, 8.0, max_relative = 1e-12);
}

#[test]
fn container_values_on_right_triangle() {
    let t = right();
    assert_relative_eq!(
        cont(&t, ContainerKind::ABPrimeC).perimeter,
        8.0 + 4.0 * 2f64.sqrt(),
        max_relative = 1e-12
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::ABCPrime).perimeter,
        10.0 + 10.0 / 10f64.sqrt(),
        max_relative = 1e-12
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::ABCBar).perimeter,
        5.0 + 25.0 / 3.0,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::ABCPrime).area,
        7.5,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::ABPrimeC).area,
        8.0,
        max_relative = 1e-12
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::AB1C).area,
        7.68,
        max_relative = 1e-12
    );
}

#[test]
fn container_values_on_instance() {
    let t = instance7();
    assert_relative_eq!(
        cont(&t, ContainerKind::ABPrimeC).perimeter,
        4.229145,
        epsilon = 5e-6
    );
    assert_relative_eq!(
        cont(&t, ContainerKind::ABCPrime).perimeter,
        4.084007,
        epsilon = 5e-6
    );
}

#[test]
fn abar_container_on_acute_shape() {
    let t = Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(0.8, 1.5),
    )
    .unwrap();
    let s = normalize(&t, Tolerance::default());
    assert!(s.is_acute());
    let c = cont(&t, ContainerKind::ABarBC);
    assert!(c.valid);
    assert_relative_eq!(
        c.perimeter,
        s.a * (1.0 + 1.0 / s.gamma.cos()),
        max_relative = 1e-10
    );
}

#[test]
fn isosceles_input_rejected() {
    let eq = Triangle::from_sides(1.0, 1.0, 1.0).unwrap();
    assert_eq!(
        embedded_specials(&eq, Tolerance::default()).unwrap_err(),
        Error::NotScalene
    );
    assert_eq!(
        container_specials(&eq, Tolerance::default()).unwrap_err(),
        Error::NotScalene
    );
}

#[test]
fn tags_are_disjoint_and_complete() {
    let t = instance7();
    let e = embedded_specials(&t, Tolerance::default()).unwrap();
    let c = container_specials(&t, Tolerance::default()).unwrap();
    assert_eq!(e.len(), 9);
    assert_eq!(c.len(), 9);
    let names: std::collections::BTreeSet<String> =
        e.iter().chain(&c).map(|x| x.kind.name()).collect();
    assert_eq!(names.len(), 18);
    for x in &e {
        assert!(x.kind.name().starts_with("emb:"));
        assert_eq!(CandidateKind::parse(&x.kind.name()), Some(x.kind));
    }
    for x in &c {
        assert!(x.kind.name().starts_with("cont:"));
        assert_eq!(CandidateKind::parse(&x.kind.name()), Some(x.kind));
    }
}

/// Rebuilds selected specials directly from the labeled vertices and
/// compares vertex sets with the catalog.
#[test]
fn constructions_match_direct_rebuild() {
    let tol = Tolerance::default();
    for i in 0..500 {
        let t = random_scalene(&mut sample_rng(7, i));
        let s = normalize(&t, tol);
        let [a, b, c] = s.labeled(&t);
        let eps = 1e-10 * t.diameter();
        let u = |from: Point, to: Point| (to - from).unit();

        let a_prime = c + u(c, a) * s.a;
        assert!(same_vertices(
            emb(&t, EmbeddedKind::APrimeBC).triangle.as_ref().unwrap(),
            [a_prime, b, c],
            eps
        ));
        let b_prime = a + u(a, b) * s.b;
        assert!(same_vertices(
            emb(&t, EmbeddedKind::ABPrimeC).triangle.as_ref().unwrap(),
            [a, b_prime, c],
            eps
        ));
        let a_dprime = b + u(b, a) * s.a;
        assert!(same_vertices(
            emb(&t, EmbeddedKind::ADoublePrimeBC)
                .triangle
                .as_ref()
                .unwrap(),
            [a_dprime, b, c],
            eps
        ));
        let c1 = a + u(a, c) * (0.5 * s.c / s.alpha.cos());
        assert!(same_vertices(
            emb(&t, EmbeddedKind::ABC1).triangle.as_ref().unwrap(),
            [a, b, c1],
            eps
        ));

        let c_prime = a + u(a, c) * s.c;
        assert!(same_vertices(
            cont(&t, ContainerKind::ABCPrime).triangle.as_ref().unwrap(),
            [a, b, c_prime],
            eps
        ));
        let b_prime_c = c + u(c, b) * s.b;
        assert!(same_vertices(
            cont(&t, ContainerKind::ABPrimeC).triangle.as_ref().unwrap(),
            [a, b_prime_c, c],
            eps
        ));
        let c_bar = b + u(b, c) * (0.5 * s.c / s.beta.cos());
        assert!(same_vertices(
            cont(&t, ContainerKind::ABCBar).triangle.as_ref().unwrap(),
            [a, b, c_bar],
            eps
        ));
    }
}

#[test]
fn candidate_invariants_on_random_triangles() {
    let tol = Tolerance::default();
    for i in 0..10_000 {
        let t = random_scalene(&mut sample_rng(11, i));
        let s = normalize(&t, tol);
        let e = embedded_specials(&t, tol).unwrap();
        let c = container_specials(&t, tol).unwrap();
        for (x, inside) in e
            .iter()
            .map(|x| (x, true))
            .chain(c.iter().map(|x| (x, false)))
        {
            if !x.valid {
                continue;
            }
            let w = x.triangle.as_ref().unwrap();
            if inside {
                assert!(
                    contains_triangle(&t, w, tol),
                    "{} not inside (sample {i})",
                    x.kind
                );
            } else {
                assert!(
                    contains_triangle(w, &t, tol),
                    "{} does not contain (sample {i})",
                    x.kind
                );
            }
            assert!(
                is_isosceles(w, tol).is_isosceles(),
                "{} not isosceles (sample {i})",
                x.kind
            );
            assert_relative_eq!(x.area, w.area(), max_relative = 1e-10);
            assert_relative_eq!(x.perimeter, w.perimeter(), max_relative = 1e-10);
            let special = x.kind.special().unwrap();
            assert_relative_eq!(x.area, closed_form_area(special, &s), max_relative = 1e-10);
            assert_relative_eq!(
                x.perimeter,
                closed_form_perimeter(special, &s),
                max_relative = 1e-10
            );
        }
    }
}

#[test]
fn embedded_specials_share_side_and_angle() {
    let tol = Tolerance::default();
    for i in 0..1000 {
        let t = random_scalene(&mut sample_rng(13, i));
        for x in embedded_specials(&t, tol)
            .unwrap()
            .iter()
            .filter(|x| x.valid)
        {
            let w = x.triangle.unwrap();
            assert!(
                isotri::solver::shares_side_and_angle(&w, &t, tol),
                "{} sample {i}",
                x.kind
            );
        }
    }
}

#[test]
fn obtuse_shape_marks_base_angle_container_invalid() {
    let t = Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(3.0, 0.0),
        Point::new(0.6, 0.5),
    )
    .unwrap();
    assert!(normalize(&t, Tolerance::default()).is_obtuse());
    let c = cont(&t, ContainerKind::ABarBC);
    assert!(!c.valid);
}
