//! Reference numeric instances, recomputed.

use serde::Serialize;

use crate::geom::{Point, Tolerance, Triangle};
use crate::nonspecial::{apex_candidates, f_v, gamma_star, x_star};
use crate::special::{container_specials, CandidateKind, ContainerKind};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub label: String,
    pub computed: f64,
    pub expected: f64,
    /// Absolute tolerance, in `unit`.
    pub tolerance: f64,
    pub unit: &'static str,
}

impl ReferenceRow {
    pub fn diff(&self) -> f64 {
        (self.computed - self.expected).abs()
    }

    pub fn passed(&self) -> bool {
        self.diff() <= self.tolerance
    }
}

/// `A = (0,0)`, `B = (b, 0)`, `C = (1, v)`.
pub fn instance(v: f64, b: f64) -> Triangle {
    Triangle::new(Point::new(0.0, 0.0), Point::new(b, 0.0), Point::new(1.0, v))
        .expect("instance is nondegenerate")
}

fn container_perimeter(t: &Triangle, k: ContainerKind) -> Result<f64, Error> {
    let c = container_specials(t, Tolerance::default())?;
    Ok(c.iter()
        .find(|c| c.kind == CandidateKind::Container(k))
        .map_or(f64::NAN, |c| c.perimeter))
}

/// Angle at vertex `at` of the triangle `(p, at, q)`, in degrees.
fn angle_deg(p: Point, at: Point, q: Point) -> f64 {
    let u = p - at;
    let w = q - at;
    u.cross(w).abs().atan2(u.dot(w)).to_degrees()
}

/// The eleven reference values. `tolerance` overrides every row's
/// tolerance when given.
pub fn reference_rows(tolerance: Option<f64>) -> Result<Vec<ReferenceRow>, Error> {
    let t7 = instance(0.7, 1.57);
    let t8 = instance(0.8, 1.62474);
    let x7 = x_star(0.7)?.value;
    let x8 = x_star(0.8)?.value;

    let [a8, b8, c8] = t8.vertices();
    let cbar = container_specials(&t8, Tolerance::default())?
        .into_iter()
        .find(|c| c.kind == CandidateKind::Container(ContainerKind::ABCBar))
        .and_then(|c| c.triangle)
        .ok_or(Error::InvalidInput("C-bar container missing".into()))?;
    let cbar_pt = cbar
        .vertices()
        .into_iter()
        .find(|p| p.dist(a8) > 1e-9 && p.dist(b8) > 1e-9)
        .expect("container has a new vertex");
    let apex = apex_candidates(&t8, Tolerance::default())
        .into_iter()
        .filter(|c| c.valid)
        .map(|c| c.perimeter)
        .fold(f64::INFINITY, f64::min);

    let row =
        |label: &str, computed: f64, expected: f64, tol: f64, unit: &'static str| ReferenceRow {
            label: label.to_string(),
            computed,
            expected,
            tolerance: tolerance.unwrap_or(tol),
            unit,
        };
    Ok(vec![
        row("gamma*", gamma_star().to_degrees(), 76.3466, 1e-4, "deg"),
        row("x*(0.7)", x7, 1.57517, 1e-5, ""),
        row("f_0.7(x*)", f_v(0.7, x7), 4.056333, 5e-6, ""),
        row(
            "per(AB'C), v=0.7",
            container_perimeter(&t7, ContainerKind::ABPrimeC)?,
            4.229145,
            5e-6,
            "",
        ),
        row(
            "per(ABC'), v=0.7",
            container_perimeter(&t7, ContainerKind::ABCPrime)?,
            4.084007,
            5e-6,
            "",
        ),
        row("x*(0.8)", x8, 1.62474, 1e-5, ""),
        row("f_0.8(x*)", f_v(0.8, x8), 4.264511, 5e-6, ""),
        row(
            "per(ABC'), v=0.8",
            container_perimeter(&t8, ContainerKind::ABCPrime)?,
            4.3250804,
            5e-6,
            "",
        ),
        row(
            "angle B-Cbar-A, v=0.8",
            angle_deg(b8, cbar_pt, a8),
            75.974334,
            5e-5,
            "deg",
        ),
        row(
            "angle BCA, v=0.8",
            angle_deg(b8, c8, a8),
            89.327359,
            5e-5,
            "deg",
        ),
        row("apex per, v=0.8", apex, 4.264431, 5e-6, ""),
    ])
}
