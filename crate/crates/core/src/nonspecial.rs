//! Non-special minimum-perimeter container families: the fixed-apex-angle
//! construction over a vertex and its opposite side line, and the
//! one-parameter `f_v` family in normalized coordinates.

use serde::Serialize;

use crate::geom::{
    contains_triangle, dist_to_line, project_onto_line, Point, Similarity, Tolerance, Triangle,
};
use crate::optimize::golden_section_by;
use crate::special::{Candidate, CandidateKind, NonSpecialKind};
use crate::Error;

/// Apex angle minimizing `2/sin x + 1/cos(x/2)` on `(0, pi)`.
///
/// Stationarity reduces to `s^3 + 2s^2 - 1 = 0` in `s = sin(x/2)`, whose
/// admissible root is `(sqrt 5 - 1)/2`; the arctangent form below is the
/// same number.
pub fn gamma_star() -> f64 {
    let r5 = 5f64.sqrt();
    4.0 * ((1.0 + r5 - (2.0 * (1.0 + r5)).sqrt()) / 2.0).atan()
}

/// `2/sin(gamma) + 1/cos(gamma/2)`: perimeter of the apex triangle per unit
/// distance from the shared vertex to the base line.
pub fn apex_perimeter_factor(gamma: f64) -> f64 {
    2.0 / gamma.sin() + 1.0 / (0.5 * gamma).cos()
}

/// Isosceles triangles `PRS` with `R, S` on a line `l`, apex `R` with
/// angle `gamma`, and legs `|RP| = |RS|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApexFamily {
    pub vertex: Point,
    /// Foot of the perpendicular from `vertex` to `l`.
    pub foot: Point,
    /// Unit direction along `l` pointing from `R` towards `S`.
    pub direction: Point,
    pub m: f64,
    pub gamma: f64,
}

impl ApexFamily {
    /// `l` is the line through `l0` and `l1`; `forward` picks the
    /// orientation of `S` relative to `R`.
    pub fn new(
        vertex: Point,
        l0: Point,
        l1: Point,
        forward: bool,
        gamma: f64,
    ) -> Result<Self, Error> {
        if !(gamma > 0.0 && gamma < std::f64::consts::PI) {
            return Err(Error::InvalidInput(format!(
                "apex angle {gamma} outside (0, pi)"
            )));
        }
        let m = dist_to_line(vertex, l0, l1);
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::DegenerateTriangle);
        }
        let d = (l1 - l0).unit();
        Ok(Self {
            vertex,
            foot: project_onto_line(vertex, l0, l1),
            direction: if forward { d } else { -d },
            m,
            gamma,
        })
    }

    pub fn with_gamma(&self, gamma: f64) -> Self {
        Self { gamma, ..*self }
    }

    /// `(P, R, S)`.
    pub fn points(&self) -> [Point; 3] {
        let r = self.foot - self.direction * (self.m / self.gamma.tan());
        let s = r + self.direction * (self.m / self.gamma.sin());
        [self.vertex, r, s]
    }

    pub fn triangle(&self) -> Result<Triangle, Error> {
        let [p, r, s] = self.points();
        Triangle::new(p, r, s)
    }

    pub fn perimeter(&self) -> f64 {
        self.m * apex_perimeter_factor(self.gamma)
    }
}

/// The six apex-family candidates at `gamma_star()`: each vertex as `P`,
/// both orientations along the opposite side line.
pub fn apex_candidates(t: &Triangle, tol: Tolerance) -> Vec<Candidate> {
    let g = gamma_star();
    let kind = CandidateKind::NonSpecial(NonSpecialKind::Apex);
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        for forward in [true, false] {
            let note = format!(
                "P = vertex {i}, base line through vertices {} and {}, {}",
                (i + 1) % 3,
                (i + 2) % 3,
                if forward { "+" } else { "-" }
            );
            let fam = ApexFamily::new(t.vertex(i), t.vertex(i + 1), t.vertex(i + 2), forward, g);
            match fam.and_then(|f| f.triangle()) {
                Ok(c) => {
                    let valid = contains_triangle(&c, t, tol);
                    out.push(Candidate::new(kind, Some(c), true, valid, note));
                }
                Err(e) => out.push(Candidate::missing(kind, format!("{note}; {e}"))),
            }
        }
    }
    out
}

/// Perimeter of the normalized container with `P = (0,0)`, `S = (x,0)` and
/// apex `R` above `PS` on the line through `S` and `(1, v)`.
pub fn f_v(v: f64, x: f64) -> f64 {
    let u = x - 1.0;
    x * (1.0 + (1.0 + v * v / (u * u)).sqrt())
}

/// `sqrt(48 v^6 + 81 v^4) - 9 v^2`, evaluated without cancellation.
pub fn delta_v(v: f64) -> f64 {
    let v2 = v * v;
    let v4 = v2 * v2;
    let v6 = v4 * v2;
    48.0 * v6 / ((48.0 * v6 + 81.0 * v4).sqrt() + 9.0 * v2)
}

/// Root of `(x-1)^3 (x+1) = v^2` by Ferrari's method, written through
/// `delta_v`.
pub fn x_star_radical(v: f64) -> f64 {
    let d = delta_v(v);
    let v6 = v.powi(6);
    let p = (2.0 * d / 9.0).cbrt();
    let q = (32.0 * v6 / (3.0 * d)).cbrt();
    let a = 1.0 + p - q;
    let ra = a.sqrt();
    0.5 * (1.0 - ra + (2.0 + q - p + 2.0 / ra).sqrt())
}

/// `f_v(c) < f_v(d)`, decided from a factored difference so the
/// comparison stays exact near the minimum.
fn f_v_lower(v: f64, c: f64, d: f64) -> bool {
    let (uc, ud) = (c - 1.0, d - 1.0);
    let v2 = v * v;
    let sa = (1.0 + v2 / (uc * uc)).sqrt();
    let sb = (1.0 + v2 / (ud * ud)).sqrt();
    let factor = 1.0 + sa - d * v2 * (uc + ud) / (uc * uc * ud * ud * (sa + sb));
    (c - d) * factor < 0.0
}

/// Window on which the radical is cross-checked.
pub const RADICAL_WINDOW: (f64, f64) = (0.56, 1.732_050_807_568_877_2);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XStarBranch {
    /// Numeric minimizer confirmed by the radical.
    RadicalChecked,
    /// Outside the radical's window; numeric value only.
    NumericOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XStar {
    pub value: f64,
    pub numeric: f64,
    pub radical: Option<f64>,
    pub branch: XStarBranch,
}

/// Minimizer of `f_v` on `(1, inf)`.
pub fn x_star(v: f64) -> Result<XStar, Error> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "v must be positive and finite (got {v})"
        )));
    }
    // Geometric scan from just right of the pole outwards.
    let xs: Vec<f64> = (0..=80).map(|k| 1.0 + 1e-6 * 1.3f64.powi(k)).collect();
    let mut best = 0;
    for i in 1..xs.len() {
        if f_v_lower(v, xs[i], xs[best]) {
            best = i;
        }
    }
    if best == 0 || best == xs.len() - 1 {
        return Err(Error::NoInteriorMinimum { v });
    }
    let numeric = golden_section_by(xs[best - 1], xs[best + 1], 1e-16, 400, |c, d| {
        f_v_lower(v, c, d)
    });

    if v >= RADICAL_WINDOW.0 && v < RADICAL_WINDOW.1 {
        let radical = x_star_radical(v);
        if !((radical - numeric).abs() <= 1e-8) {
            return Err(Error::ClosedFormMismatch {
                v,
                numeric,
                radical,
            });
        }
        Ok(XStar {
            value: numeric,
            numeric,
            radical: Some(radical),
            branch: XStarBranch::RadicalChecked,
        })
    } else {
        Ok(XStar {
            value: numeric,
            numeric,
            radical: None,
            branch: XStarBranch::NumericOnly,
        })
    }
}

/// Normalized frame of one vertex assignment: `P` at the origin, the base
/// vertex at `(x_b, 0)`, the third vertex at `(1, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ex2Family {
    pub v: f64,
    pub x_b: f64,
    pub frame: Similarity,
}

impl Ex2Family {
    /// `None` when the third vertex does not project strictly in front of
    /// `P` along the base direction.
    pub fn new(p: Point, base: Point, third: Point) -> Option<Self> {
        let axis = (base - p).unit();
        let q = third - p;
        let k = axis.dot(q);
        if !(k > 0.0) {
            return None;
        }
        let y = axis.cross(q);
        let frame = Similarity {
            origin: p,
            axis,
            scale: k,
            reflect: y < 0.0,
        };
        Some(Self {
            v: y.abs() / k,
            x_b: base.dist(p) / k,
            frame,
        })
    }

    /// `(P, R, S)` in normalized coordinates.
    pub fn local_points(&self, x: f64) -> [Point; 3] {
        let r = Point::new(0.5 * x, self.v * x / (2.0 * (x - 1.0)));
        [Point::new(0.0, 0.0), r, Point::new(x, 0.0)]
    }

    pub fn points(&self, x: f64) -> [Point; 3] {
        self.local_points(x).map(|q| self.frame.to_world(q))
    }

    pub fn perimeter(&self, x: f64) -> f64 {
        self.frame.scale * f_v(self.v, x)
    }
}

/// The six `f_v`-family candidates, one per ordered choice of shared vertex
/// and base vertex, each at the constrained minimizer `max(x*, x_b)`.
pub fn ex2_candidates(t: &Triangle, tol: Tolerance) -> Vec<Candidate> {
    let kind = CandidateKind::NonSpecial(NonSpecialKind::Ex2);
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        for j in [(i + 1) % 3, (i + 2) % 3] {
            let k = 3 - i - j;
            let note = format!("P = vertex {i}, vertex {j} on PS, vertex {k} on RS");
            let Some(fam) = Ex2Family::new(t.vertex(i), t.vertex(j), t.vertex(k)) else {
                out.push(Candidate::missing(
                    kind,
                    format!("{note}; third vertex behind P"),
                ));
                continue;
            };
            let xs = match x_star(fam.v) {
                Ok(xs) => xs,
                Err(e) => {
                    out.push(Candidate::missing(kind, format!("{note}; {e}")));
                    continue;
                }
            };
            let x_eff = xs.value.max(fam.x_b);
            let clamp = if x_eff > xs.value {
                ", clamped to x_b"
            } else {
                ""
            };
            let note = format!(
                "{note}; v = {:.6}, x_b = {:.6}, x = {:.9}{clamp}",
                fam.v, fam.x_b, x_eff
            );
            let [p, r, s] = fam.points(x_eff);
            match Triangle::new(p, r, s) {
                Ok(c) => {
                    let valid = contains_triangle(&c, t, tol);
                    let mut cand = Candidate::new(kind, Some(c), true, valid, note);
                    cand.perimeter = fam.perimeter(x_eff);
                    out.push(cand);
                }
                Err(e) => out.push(Candidate::missing(kind, format!("{note}; {e}"))),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_star_matches_sine_root() {
        let s = (5f64.sqrt() - 1.0) / 2.0;
        assert_relative_eq!(gamma_star(), 2.0 * s.asin(), max_relative = 1e-14);
    }

    #[test]
    fn radical_solves_quartic() {
        for v in [0.56, 0.7, 0.8, 1.0, 1.3, 1.7] {
            let x = x_star_radical(v);
            let r = (x - 1.0).powi(3) * (x + 1.0);
            assert_relative_eq!(r, v * v, max_relative = 1e-12);
        }
    }

    #[test]
    fn x_star_outside_window_is_numeric() {
        let xs = x_star(3.0).unwrap();
        assert_eq!(xs.branch, XStarBranch::NumericOnly);
        assert!(xs.value > 2.0);
        assert_relative_eq!(
            (xs.value - 1.0).powi(3) * (xs.value + 1.0),
            9.0,
            max_relative = 1e-10
        );
    }

    #[test]
    fn rejects_bad_v() {
        assert!(x_star(0.0).is_err());
        assert!(x_star(f64::NAN).is_err());
    }

    #[test]
    fn ex2_frame_of_right_triangle() {
        // A = (0,0) shared, B on the base, C third: the 3-4-5 frame.
        let t = Triangle::from_sides(3.0, 4.0, 5.0).unwrap();
        let [a, b, c] = t.vertices();
        let fam = Ex2Family::new(a, b, c).unwrap();
        assert_relative_eq!(fam.v, 0.75, max_relative = 1e-12);
        assert_relative_eq!(fam.x_b, 1.5625, max_relative = 1e-12);
    }
}
