//! Planar primitives, triangle metrics, shape normalization and
//! tolerance-relaxed containment predicates.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counter-clockwise rotation by a quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn unit(self) -> Point {
        self * (1.0 / self.norm())
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of `abc`; positive when counter-clockwise.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Orthogonal projection of `p` onto the line through `a` and `b`.
pub fn project_onto_line(p: Point, a: Point, b: Point) -> Point {
    let d = b - a;
    a + d * ((p - a).dot(d) / d.dot(d))
}

/// Affine parameter of the projection of `p` on the segment `a -> b`.
pub fn segment_param(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    (p - a).dot(d) / d.dot(d)
}

/// Distance from `p` to the closed segment `ab`.
pub fn dist_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let t = segment_param(p, a, b).clamp(0.0, 1.0);
    p.dist(a.lerp(b, t))
}

/// Distance from `p` to the infinite line through `a` and `b`.
pub fn dist_to_line(p: Point, a: Point, b: Point) -> f64 {
    orient(a, b, p).abs() / a.dist(b)
}

/// Intersection of the lines `p + s*d` and `q + u*e`, returned as the
/// parameter pair `(s, u)`. `None` when the lines are parallel to within
/// `rel` (measured on the sine of the angle between them).
pub fn line_intersection(p: Point, d: Point, q: Point, e: Point, rel: f64) -> Option<(f64, f64)> {
    let den = d.cross(e);
    if den.abs() <= rel * d.norm() * e.norm() {
        return None;
    }
    let w = q - p;
    Some((w.cross(e) / den, w.cross(d) / den))
}

/// Intersection point of the perpendicular bisector of `ab` with the line
/// through `c` and `d`; also returns the parameter along `c -> d`.
pub fn bisector_meets_line(
    a: Point,
    b: Point,
    c: Point,
    d: Point,
    rel: f64,
) -> Option<(Point, f64)> {
    let mid = a.lerp(b, 0.5);
    let dir = (b - a).perp();
    let (_, u) = line_intersection(mid, dir, c, d - c, rel)?;
    Some((c + (d - c) * u, u))
}

/// Numerical tolerances shared by the predicates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative tolerance, scaled by the relevant triangle diameter for
    /// distances.
    pub eps_rel: f64,
    /// Degeneracy threshold on `|2 * signed area| / diam^2`.
    pub eps_degenerate: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_rel: 1e-9,
            eps_degenerate: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(eps_rel: f64, eps_degenerate: f64) -> Result<Self, Error> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(eps_rel) || !ok(eps_degenerate) {
            return Err(Error::InvalidInput(format!(
                "tolerances must be finite and positive (got {eps_rel}, {eps_degenerate})"
            )));
        }
        Ok(Self {
            eps_rel,
            eps_degenerate,
        })
    }

    pub fn with_eps_rel(eps_rel: f64) -> Result<Self, Error> {
        Self::new(eps_rel, Tolerance::default().eps_degenerate)
    }
}

/// Which quantity an optimization problem ranks by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Area,
    Perimeter,
}

/// A nondegenerate triangle stored counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[Point; 3]", into = "[Point; 3]")]
pub struct Triangle {
    p: [Point; 3],
}

impl TryFrom<[Point; 3]> for Triangle {
    type Error = Error;
    fn try_from(p: [Point; 3]) -> Result<Self, Error> {
        Triangle::new(p[0], p[1], p[2])
    }
}

impl From<Triangle> for [Point; 3] {
    fn from(t: Triangle) -> Self {
        t.p
    }
}

impl Triangle {
    pub fn new(p0: Point, p1: Point, p2: Point) -> Result<Self, Error> {
        Self::with_tolerance(p0, p1, p2, Tolerance::default())
    }

    /// Validates finiteness and nondegeneracy, then canonicalizes to
    /// counter-clockwise order (swapping the last two vertices if needed).
    pub fn with_tolerance(p0: Point, p1: Point, p2: Point, tol: Tolerance) -> Result<Self, Error> {
        if !(p0.is_finite() && p1.is_finite() && p2.is_finite()) {
            return Err(Error::NonFinite);
        }
        let diam = p0.dist(p1).max(p1.dist(p2)).max(p2.dist(p0));
        let o = orient(p0, p1, p2);
        if diam == 0.0 || o.abs() <= tol.eps_degenerate * diam * diam {
            return Err(Error::DegenerateTriangle);
        }
        let p = if o > 0.0 { [p0, p1, p2] } else { [p0, p2, p1] };
        Ok(Self { p })
    }

    /// Places a triangle with the given side lengths: longest side on the
    /// positive x-axis starting at the origin, third vertex above it.
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self, Error> {
        let mut s = [a, b, c];
        if s.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(Error::InvalidInput(format!(
                "side lengths must be positive and finite (got {a}, {b}, {c})"
            )));
        }
        s.sort_by(f64::total_cmp);
        let [short, mid, long] = s;
        if short + mid <= long {
            return Err(Error::InvalidInput(format!(
                "side lengths {a}, {b}, {c} violate the strict triangle inequality"
            )));
        }
        // Third vertex at distance `mid` from the origin and `short` from (long, 0).
        let x = (long * long + mid * mid - short * short) / (2.0 * long);
        let y = (mid * mid - x * x).max(0.0).sqrt();
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(long, 0.0),
            Point::new(x, y),
        )
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.p
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.p[i % 3]
    }

    /// Length of the side opposite vertex `i`.
    pub fn side(&self, i: usize) -> f64 {
        self.vertex(i + 1).dist(self.vertex(i + 2))
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.side(0), self.side(1), self.side(2)]
    }

    /// Directed edge from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (Point, Point) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn signed_area(&self) -> f64 {
        0.5 * orient(self.p[0], self.p[1], self.p[2])
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    pub fn perimeter(&self) -> f64 {
        self.sides().iter().sum()
    }

    pub fn metric(&self, m: Metric) -> f64 {
        match m {
            Metric::Area => self.area(),
            Metric::Perimeter => self.perimeter(),
        }
    }

    pub fn diameter(&self) -> f64 {
        let [a, b, c] = self.sides();
        a.max(b).max(c)
    }

    pub fn centroid(&self) -> Point {
        (self.p[0] + self.p[1] + self.p[2]) * (1.0 / 3.0)
    }

    /// Interior angle at vertex `i`, from coordinates.
    pub fn angle(&self, i: usize) -> f64 {
        let o = self.vertex(i);
        let u = self.vertex(i + 1) - o;
        let w = self.vertex(i + 2) - o;
        u.cross(w).abs().atan2(u.dot(w))
    }

    /// Applies a point map to every vertex and re-validates.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Triangle, Error> {
        Triangle::new(f(self.p[0]), f(self.p[1]), f(self.p[2]))
    }

    /// Index of the vertex of `self` within `eps` of `q`, if any.
    pub fn vertex_near(&self, q: Point, eps: f64) -> Option<usize> {
        (0..3).find(|&i| self.p[i].dist(q) <= eps)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.p[0], self.p[1], self.p[2])
    }
}

/// Side lengths and angles in the canonical labeling `a <= b <= c`
/// (`a = |BC|`, `b = |AC|`, `c = |AB|`), hence `alpha <= beta <= gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleShape {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// `vertex_map[k]` is the index in the source triangle of vertex
    /// A (k = 0), B (k = 1) or C (k = 2).
    pub vertex_map: [usize; 3],
    /// Two sides agree to within `eps_rel * diam`.
    pub isosceles: bool,
}

impl TriangleShape {
    /// The source triangle's vertices in `[A, B, C]` order.
    pub fn labeled(&self, t: &Triangle) -> [Point; 3] {
        self.vertex_map.map(|i| t.vertex(i))
    }

    pub fn is_acute(&self) -> bool {
        self.gamma < PI / 2.0
    }

    pub fn is_obtuse(&self) -> bool {
        self.gamma > PI / 2.0
    }
}

/// Sorts sides and angles into the canonical labeling. Angles come from the
/// side lengths (law of cosines in `atan2` form, with a cancellation-safe
/// Heron area), not from coordinates.
pub fn normalize(t: &Triangle, tol: Tolerance) -> TriangleShape {
    let sides = t.sides();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| sides[i].total_cmp(&sides[j]).then(i.cmp(&j)));
    let [a, b, c] = order.map(|i| sides[i]);

    // Kahan's Heron formula needs sides in descending order: c >= b >= a.
    let four_area = ((c + (b + a)) * (a - (c - b)) * (a + (c - b)) * (c + (b - a)))
        .max(0.0)
        .sqrt();
    let angle = |opp: f64, s1: f64, s2: f64| four_area.atan2(s1 * s1 + s2 * s2 - opp * opp);
    let alpha = angle(a, b, c);
    let beta = angle(b, a, c);
    let gamma = angle(c, a, b);

    let diam_eps = tol.eps_rel * c;
    TriangleShape {
        a,
        b,
        c,
        alpha,
        beta,
        gamma,
        vertex_map: order,
        isosceles: (b - a) <= diam_eps || (c - b) <= diam_eps,
    }
}

/// Point membership, counting points within `eps_rel * diam(outer)` of the
/// boundary as inside.
pub fn contains(outer: &Triangle, p: Point, tol: Tolerance) -> bool {
    let slack = tol.eps_rel * outer.diameter();
    (0..3).all(|i| {
        let (a, b) = outer.edge(i);
        orient(a, b, p) / a.dist(b) >= -slack
    })
}

pub fn contains_triangle(outer: &Triangle, inner: &Triangle, tol: Tolerance) -> bool {
    inner.vertices().iter().all(|&p| contains(outer, p, tol))
}

/// Equal-side pairs of a triangle, as indices of sides (side `i` is
/// opposite vertex `i`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IsoscelesCheck {
    pub equal_pairs: Vec<(usize, usize)>,
}

impl IsoscelesCheck {
    pub fn is_isosceles(&self) -> bool {
        !self.equal_pairs.is_empty()
    }

    pub fn is_equilateral(&self) -> bool {
        self.equal_pairs.len() == 3
    }

    /// Apex vertex (between the two equal sides) of a non-equilateral
    /// isosceles triangle.
    pub fn apex(&self) -> Option<usize> {
        match self.equal_pairs.as_slice() {
            [(i, j)] => Some(3 - i - j),
            _ => None,
        }
    }
}

pub fn is_isosceles(t: &Triangle, tol: Tolerance) -> IsoscelesCheck {
    let s = t.sides();
    let mut equal_pairs = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if (s[i] - s[j]).abs() <= tol.eps_rel * s[i].max(s[j]) {
            equal_pairs.push((i, j));
        }
    }
    IsoscelesCheck { equal_pairs }
}

/// Orientation-preserving or reflecting similarity
/// `world = origin + scale * (x * axis + sign * y * axis.perp())`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Similarity {
    pub origin: Point,
    /// Unit vector of the local +x direction.
    pub axis: Point,
    pub scale: f64,
    pub reflect: bool,
}

impl Similarity {
    pub fn identity() -> Self {
        Self {
            origin: Point::default(),
            axis: Point::new(1.0, 0.0),
            scale: 1.0,
            reflect: false,
        }
    }

    pub fn to_world(&self, q: Point) -> Point {
        let y = if self.reflect { -q.y } else { q.y };
        self.origin + (self.axis * q.x + self.axis.perp() * y) * self.scale
    }

    pub fn to_local(&self, p: Point) -> Point {
        let d = (p - self.origin) * (1.0 / self.scale);
        let y = self.axis.cross(d);
        Point::new(self.axis.dot(d), if self.reflect { -y } else { y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tri(p: [(f64, f64); 3]) -> Triangle {
        Triangle::new(
            Point::new(p[0].0, p[0].1),
            Point::new(p[1].0, p[1].1),
            Point::new(p[2].0, p[2].1),
        )
        .unwrap()
    }

    fn equilateral() -> Triangle {
        tri([(0.0, 0.0), (1.0, 0.0), (0.5, 3f64.sqrt() / 2.0)])
    }

    #[test]
    fn normalize_right_triangle() {
        let s = normalize(
            &tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]),
            Tolerance::default(),
        );
        assert_relative_eq!(s.a, 3.0, max_relative = 1e-15);
        assert_relative_eq!(s.b, 4.0, max_relative = 1e-15);
        assert_relative_eq!(s.c, 5.0, max_relative = 1e-15);
        assert_relative_eq!(s.alpha, (0.6f64).asin(), max_relative = 1e-14);
        assert_relative_eq!(s.gamma, PI / 2.0, max_relative = 1e-14);
        assert!(!s.isosceles);
    }

    #[test]
    fn normalize_flags_equilateral() {
        let s = normalize(&equilateral(), Tolerance::default());
        assert!(s.isosceles);
        assert_relative_eq!(s.a, 1.0, max_relative = 1e-15);
        assert_relative_eq!(s.c, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn normalize_maps_vertices() {
        let t = tri([(0.0, 0.0), (1.57, 0.0), (1.0, 0.7)]);
        let s = normalize(&t, Tolerance::default());
        let [a, b, c] = s.labeled(&t);
        assert_eq!(a, Point::new(0.0, 0.0));
        assert_eq!(b, Point::new(1.57, 0.0));
        assert_eq!(c, Point::new(1.0, 0.7));
        assert_relative_eq!(s.c, 1.57, max_relative = 1e-15);
    }

    #[test]
    fn areas_and_perimeters() {
        let rt = tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        assert_relative_eq!(rt.area(), 6.0);
        assert_relative_eq!(rt.perimeter(), 12.0);
        assert_relative_eq!(tri([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).area(), 0.5);
        assert_relative_eq!(
            equilateral().area(),
            3f64.sqrt() / 4.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(equilateral().perimeter(), 3.0, max_relative = 1e-15);
        let t = tri([(0.0, 0.0), (1.57, 0.0), (1.0, 0.7)]);
        assert_relative_eq!(t.perimeter(), 3.69338, epsilon = 1e-5);
    }

    #[test]
    fn stored_ccw() {
        let t = tri([(0.0, 0.0), (0.0, 3.0), (4.0, 0.0)]);
        assert!(t.signed_area() > 0.0);
    }

    #[test]
    fn rejects_collinear_and_nonfinite() {
        let p = |x, y| Point::new(x, y);
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)),
            Err(Error::DegenerateTriangle)
        );
        assert_eq!(
            Triangle::new(p(0.0, 0.0), p(1e6, 0.0), p(2e6, 1e-8)),
            Err(Error::DegenerateTriangle)
        );
        assert_eq!(
            Triangle::new(p(f64::NAN, 0.0), p(1.0, 0.0), p(0.0, 1.0)),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn from_sides_places_canonically() {
        let t = Triangle::from_sides(3.0, 4.0, 5.0).unwrap();
        let v = t.vertices();
        assert_eq!(v[0], Point::new(0.0, 0.0));
        assert_eq!(v[1], Point::new(5.0, 0.0));
        assert!(v[2].y > 0.0);
        assert_relative_eq!(t.area(), 6.0, max_relative = 1e-14);
        assert!(Triangle::from_sides(1.0, 2.0, 3.0).is_err());
        assert!(Triangle::from_sides(1.0, -2.0, 3.0).is_err());
    }

    #[test]
    fn containment() {
        let tol = Tolerance::default();
        let t = equilateral();
        assert!(contains(&t, t.centroid(), tol));
        for v in t.vertices() {
            assert!(contains(&t, v, tol));
        }
        // One unit below the base edge.
        assert!(!contains(&t, Point::new(0.5, -1.0), tol));
        assert!(contains_triangle(&t, &t, tol));
    }

    #[test]
    fn isosceles_pairs() {
        let tol = Tolerance::default();
        assert!(!is_isosceles(&tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]), tol).is_isosceles());
        let legs = is_isosceles(&tri([(0.0, 0.0), (2.0, 0.0), (1.0, 5.0)]), tol);
        assert_eq!(legs.equal_pairs.len(), 1);
        assert_eq!(
            legs.apex()
                .map(|i| tri([(0.0, 0.0), (2.0, 0.0), (1.0, 5.0)]).vertex(i)),
            Some(Point::new(1.0, 5.0))
        );
        assert!(is_isosceles(&equilateral(), tol).is_equilateral());
    }

    #[test]
    fn similarity_round_trip() {
        let s = Similarity {
            origin: Point::new(1.0, -2.0),
            axis: Point::new(0.6, 0.8),
            scale: 2.5,
            reflect: true,
        };
        let q = Point::new(0.3, 0.7);
        let back = s.to_local(s.to_world(q));
        assert_relative_eq!(back.x, q.x, epsilon = 1e-15);
        assert_relative_eq!(back.y, q.y, epsilon = 1e-15);
    }
}
