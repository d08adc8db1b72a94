//! Minimum-perimeter winner types over the shape simplex.

use std::f64::consts::PI;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::geom::Tolerance;
use crate::lemmas::min_perimeter_type;
use crate::lemmas::sampling::{triangle_from_angles, ANGLE_MARGIN};
use crate::solver::{solve, Problem};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCell {
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub winner: String,
    pub winner_type: String,
    pub optimum: f64,
}

/// Cell centres of an `n x n` grid over `alpha in (0, 60)`,
/// `beta in (0, 90)` degrees, kept where `alpha < beta < gamma` with the
/// sampler's margin.
pub fn grid_shapes(n: usize) -> Vec<(f64, f64)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let alpha = (i as f64 + 0.5) / n as f64 * PI / 3.0;
            let beta = (j as f64 + 0.5) / n as f64 * PI / 2.0;
            let gamma = PI - alpha - beta;
            if beta - alpha > ANGLE_MARGIN && gamma - beta > ANGLE_MARGIN {
                v.push((alpha, beta));
            }
        }
    }
    v
}

pub fn sweep_min_perimeter(n: usize, tol: Tolerance) -> Vec<SweepCell> {
    let cell = |&(alpha, beta): &(f64, f64)| {
        let t = triangle_from_angles(alpha, beta);
        let r = solve(&t, Problem::MinPerimContainer, tol).expect("grid shapes are scalene");
        let kind = r.winner().kind;
        SweepCell {
            alpha_deg: alpha.to_degrees(),
            beta_deg: beta.to_degrees(),
            winner: kind.name(),
            winner_type: min_perimeter_type(kind).unwrap_or("other").to_string(),
            optimum: r.optimum,
        }
    };
    let shapes = grid_shapes(n);
    #[cfg(feature = "parallel")]
    return shapes.par_iter().map(cell).collect();
    #[cfg(not(feature = "parallel"))]
    return shapes.iter().map(cell).collect();
}
