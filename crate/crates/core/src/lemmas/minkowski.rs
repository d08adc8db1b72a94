//! Minkowski sum and mean of convex polygons by edge-sequence merge.

use crate::geom::Point;

fn bottom_index(p: &[Point]) -> usize {
    (0..p.len())
        .min_by(|&i, &j| p[i].y.total_cmp(&p[j].y).then(p[i].x.total_cmp(&p[j].x)))
        .expect("polygon has vertices")
}

fn edges_from_bottom(p: &[Point]) -> Vec<Point> {
    let n = p.len();
    let s = bottom_index(p);
    (0..n)
        .map(|k| p[(s + k + 1) % n] - p[(s + k) % n])
        .collect()
}

/// Half-plane rank of a direction for angular order starting at angle 0.
fn upper(d: Point) -> bool {
    d.y > 0.0 || (d.y == 0.0 && d.x > 0.0)
}

/// `a` comes strictly before `b` in counter-clockwise angle order from +x.
fn angle_before(a: Point, b: Point) -> bool {
    match (upper(a), upper(b)) {
        (true, false) => true,
        (false, true) => false,
        _ => a.cross(b) > 0.0,
    }
}

/// Drops vertices whose adjacent edges are parallel, up to `rel`.
pub fn merge_collinear(p: &[Point], rel: f64) -> Vec<Point> {
    let n = p.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = p[(i + n - 1) % n];
        let next = p[(i + 1) % n];
        let e0 = p[i] - prev;
        let e1 = next - p[i];
        if e0.cross(e1).abs() > rel * e0.norm() * e1.norm() || e0.dot(e1) < 0.0 {
            out.push(p[i]);
        }
    }
    out
}

/// Minkowski sum of two convex polygons given counter-clockwise.
pub fn minkowski_sum(p: &[Point], q: &[Point]) -> Vec<Point> {
    let ep = edges_from_bottom(p);
    let eq = edges_from_bottom(q);
    let mut cur = p[bottom_index(p)] + q[bottom_index(q)];
    let mut out = Vec::with_capacity(ep.len() + eq.len());
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        out.push(cur);
        let take_p = j == eq.len() || (i < ep.len() && !angle_before(eq[j], ep[i]));
        let take_q = i == ep.len() || (j < eq.len() && !angle_before(ep[i], eq[j]));
        let mut step = Point::default();
        if take_p {
            step = step + ep[i];
            i += 1;
        }
        if take_q {
            step = step + eq[j];
            j += 1;
        }
        cur = cur + step;
    }
    merge_collinear(&out, 1e-12)
}

/// `(p + q) / 2`.
pub fn minkowski_mean(p: &[Point], q: &[Point]) -> Vec<Point> {
    minkowski_sum(p, q).into_iter().map(|v| v * 0.5).collect()
}

pub fn polygon_perimeter(p: &[Point]) -> f64 {
    (0..p.len()).map(|i| p[i].dist(p[(i + 1) % p.len()])).sum()
}
