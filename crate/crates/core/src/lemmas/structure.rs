//! Incidence conditions an optimal witness must satisfy, each measured as
//! a defect: a distance (relative to the input's diameter) that is zero
//! when the condition holds exactly.

use crate::geom::{dist_to_segment, Point, Triangle};

#[derive(Debug, Clone, PartialEq)]
pub struct Defects(pub Vec<(&'static str, f64)>);

impl Defects {
    pub fn worst(&self) -> (&'static str, f64) {
        self.0
            .iter()
            .copied()
            .fold(("none", 0.0), |acc, d| if d.1 > acc.1 { d } else { acc })
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|d| d.0 == name).map(|d| d.1)
    }

    pub fn holds(&self, eps: f64) -> bool {
        self.0.iter().all(|d| d.1 <= eps)
    }
}

fn sides(t: &Triangle) -> [(Point, Point); 3] {
    [t.edge(0), t.edge(1), t.edge(2)]
}

fn dist_to_boundary(p: Point, t: &Triangle) -> f64 {
    sides(t)
        .iter()
        .map(|&(a, b)| dist_to_segment(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

fn nearest_vertex(p: Point, t: &Triangle) -> f64 {
    t.vertices()
        .iter()
        .map(|q| q.dist(p))
        .fold(f64::INFINITY, f64::min)
}

/// Some side of `outer` contains (the endpoints of) a side of `inner`.
fn side_in_side(inner: &Triangle, outer: &Triangle) -> f64 {
    let mut best = f64::INFINITY;
    for (p, q) in sides(inner) {
        for (a, b) in sides(outer) {
            best = best.min(dist_to_segment(p, a, b).max(dist_to_segment(q, a, b)));
        }
    }
    best
}

/// Every side of `outer` carries a vertex of `inner`.
fn every_side_touched(inner: &Triangle, outer: &Triangle) -> f64 {
    sides(outer)
        .iter()
        .map(|&(a, b)| {
            inner
                .vertices()
                .iter()
                .map(|&p| dist_to_segment(p, a, b))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Every vertex of `inner` lies on the boundary of `outer`.
fn all_on_boundary(inner: &Triangle, outer: &Triangle) -> f64 {
    inner
        .vertices()
        .iter()
        .map(|&p| dist_to_boundary(p, outer))
        .fold(0.0, f64::max)
}

fn shared_vertex(x: &Triangle, y: &Triangle) -> f64 {
    x.vertices()
        .iter()
        .map(|&p| nearest_vertex(p, y))
        .fold(f64::INFINITY, f64::min)
}

/// The three boundary arcs `m_A -> C -> m_B`, `m_B -> A -> m_C`,
/// `m_C -> B -> m_A` (midpoints of the sides opposite each vertex) each
/// receive exactly one witness vertex. Measured as the best assignment's
/// largest vertex-to-arc distance.
pub fn midpoint_arc_defect(t: &Triangle, w: &Triangle) -> f64 {
    let v = t.vertices();
    let mid = |i: usize| v[(i + 1) % 3].lerp(v[(i + 2) % 3], 0.5);
    // Arc k passes through vertex k, between the midpoints of its two sides.
    let arcs: [[Point; 3]; 3] = std::array::from_fn(|k| [mid((k + 1) % 3), v[k], mid((k + 2) % 3)]);
    let d = |p: Point, arc: &[Point; 3]| {
        dist_to_segment(p, arc[0], arc[1]).min(dist_to_segment(p, arc[1], arc[2]))
    };
    let wv = w.vertices();
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS
        .iter()
        .map(|perm| (0..3).map(|k| d(wv[perm[k]], &arcs[k])).fold(0.0, f64::max))
        .fold(f64::INFINITY, f64::min)
}

/// Conditions on an optimal embedded isosceles witness `w` of `t`.
pub fn embedded_defects(t: &Triangle, w: &Triangle, with_midpoint_arcs: bool) -> Defects {
    let diam = t.diameter();
    let mut v = vec![
        ("side-in-side", side_in_side(w, t) / diam),
        ("every-side-touched", every_side_touched(w, t) / diam),
        ("vertices-on-boundary", all_on_boundary(w, t) / diam),
        ("shared-vertex", shared_vertex(w, t) / diam),
    ];
    if with_midpoint_arcs {
        v.push(("midpoint-arcs", midpoint_arc_defect(t, w) / diam));
    }
    Defects(v)
}

/// Conditions on an optimal isosceles container `w` of `t`.
pub fn container_defects(t: &Triangle, w: &Triangle) -> Defects {
    let diam = t.diameter();
    // A side of the container holding two input vertices.
    let two_on_side = sides(w)
        .iter()
        .map(|&(a, b)| {
            let mut d = t.vertices().map(|p| dist_to_segment(p, a, b));
            d.sort_by(f64::total_cmp);
            d[1]
        })
        .fold(f64::INFINITY, f64::min);
    Defects(vec![
        ("side-holds-two-vertices", two_on_side / diam),
        ("every-side-touched", every_side_touched(t, w) / diam),
        ("vertices-on-boundary", all_on_boundary(t, w) / diam),
        ("shared-vertex", shared_vertex(t, w) / diam),
    ])
}
