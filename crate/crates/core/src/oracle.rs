//! Brute-force cross-check: optimize directly over every isosceles shape
//! and orientation, solving the inner placement exactly at each pose.
//!
//! A pose `(gamma, theta)` fixes the canonical isosceles triangle with
//! apex angle `gamma`, unit legs and apex at the origin, rotated by
//! `theta`. Mirror symmetry of isosceles shapes makes reflections
//! redundant.

use std::f64::consts::{PI, TAU};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{line_intersection, Metric, Point, Triangle};
use crate::optimize::nelder_mead;
use crate::solver::Problem;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShapePose {
    pub gamma: f64,
    pub theta: f64,
}

impl ShapePose {
    pub fn new(gamma: f64, theta: f64) -> Result<Self, Error> {
        if !(gamma > 0.0 && gamma < PI && theta.is_finite()) {
            return Err(Error::InvalidPose);
        }
        Ok(Self {
            gamma,
            theta: theta.rem_euclid(TAU),
        })
    }

    /// Vertices of the rotated canonical shape, counter-clockwise, apex
    /// first.
    pub fn shape(&self) -> [Point; 3] {
        let (s, c) = (0.5 * self.gamma).sin_cos();
        [Point::new(0.0, 0.0), Point::new(c, -s), Point::new(c, s)].map(|q| q.rotate(self.theta))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    pub grid_gamma: usize,
    pub grid_theta: usize,
    pub refine_iters: usize,
    pub refine_starts: usize,
    pub param_tol: f64,
    pub value_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_gamma: 720,
            grid_theta: 720,
            refine_iters: 200,
            refine_starts: 5,
            param_tol: 1e-10,
            value_tol: 1e-9,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let ints = [
            self.grid_gamma,
            self.grid_theta,
            self.refine_iters,
            self.refine_starts,
        ];
        let reals = [self.param_tol, self.value_tol];
        if ints.contains(&0) || reals.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
            return Err(Error::InvalidInput(
                "oracle configuration values must be positive".into(),
            ));
        }
        if self.grid_gamma < 3 || self.grid_theta < 3 {
            return Err(Error::InvalidInput(
                "oracle grids need at least 3 cells per axis".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    pub witness: Triangle,
    pub pose: ShapePose,
    pub evaluations: usize,
    pub converged: bool,
    pub diagnostics: String,
}

/// Outward unit normal of the directed edge `p -> q` of a CCW polygon.
fn outward_normal(p: Point, q: Point) -> Point {
    let e = q - p;
    Point::new(e.y, -e.x).unit()
}

fn support(pts: &[Point; 3], n: Point) -> f64 {
    pts.iter()
        .map(|p| n.dot(*p))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// The minimal triangle with the pose's edge directions enclosing `t`:
/// each edge lies on the support line of `t` in its outward normal.
pub fn min_enclosing_at_pose(
    t: &Triangle,
    pose: ShapePose,
    metric: Metric,
) -> Result<(f64, Triangle), Error> {
    let q = pose.shape();
    let tv = t.vertices();
    let normals: [Point; 3] = std::array::from_fn(|j| outward_normal(q[j], q[(j + 1) % 3]));
    let h: [f64; 3] = normals.map(|n| support(&tv, n));
    // Vertex j sits between edge j-1 and edge j.
    let mut verts = [Point::default(); 3];
    for j in 0..3 {
        let (n0, h0) = (normals[(j + 2) % 3], h[(j + 2) % 3]);
        let (n1, h1) = (normals[j], h[j]);
        let (p0, p1) = (n0 * h0, n1 * h1);
        let (s, _) =
            line_intersection(p0, n0.perp(), p1, n1.perp(), 1e-14).ok_or(Error::InvalidPose)?;
        verts[j] = p0 + n0.perp() * s;
    }
    let w = Triangle::new(verts[0], verts[1], verts[2]).map_err(|_| Error::InvalidPose)?;
    Ok((w.metric(metric), w))
}

/// Largest scale of the posed shape fitting in `t`, from the closed form
/// `s = 2 area(t) / sum_j |e_j| h_Q(n_j)` (edge lengths and outward
/// normals of `t`, support function of the unit shape). Equivalent to the
/// basis-enumeration LP because all three edge constraints are tight at
/// the optimum of a triangle-in-triangle homothety.
pub fn embedded_scale_support(t: &Triangle, pose: ShapePose) -> f64 {
    let q = pose.shape();
    let mut denom = 0.0;
    for j in 0..3 {
        let (a, b) = t.edge(j);
        denom += a.dist(b) * support(&q, outward_normal(a, b));
    }
    2.0 * t.area() / denom
}

/// Maximal scaled, translated copy of the posed shape inside `t`, by
/// enumerating all 84 bases of the 9-constraint LP in `(s, tx, ty)`.
pub fn max_embedded_at_pose(t: &Triangle, pose: ShapePose) -> Result<(f64, Triangle), Error> {
    let q = pose.shape();
    let mut rows = Vec::with_capacity(9);
    for j in 0..3 {
        let (a, b) = t.edge(j);
        let n = outward_normal(a, b);
        let h = n.dot(a);
        for qi in q {
            rows.push(([n.dot(qi), n.x, n.y], h));
        }
    }
    let scale = t.diameter();
    let slack = 1e-12 * scale;
    let mut best: Option<[f64; 3]> = None;
    for i in 0..9 {
        for j in (i + 1)..9 {
            for k in (j + 1)..9 {
                let Some(x) = solve3([rows[i], rows[j], rows[k]]) else {
                    continue;
                };
                let feasible = rows
                    .iter()
                    .all(|(r, h)| r[0] * x[0] + r[1] * x[1] + r[2] * x[2] <= h + slack);
                if feasible && best.is_none_or(|b| x[0] > b[0]) {
                    best = Some(x);
                }
            }
        }
    }
    let [s, tx, ty] = best.ok_or(Error::InvalidPose)?;
    assert!(s > 0.0, "scale at the LP optimum must be positive");
    let off = Point::new(tx, ty);
    let w = Triangle::new(q[0] * s + off, q[1] * s + off, q[2] * s + off)
        .map_err(|_| Error::InvalidPose)?;
    Ok((s, w))
}

/// Cramer's rule with a relative singularity guard.
fn solve3(rows: [([f64; 3], f64); 3]) -> Option<[f64; 3]> {
    let m = rows.map(|r| r.0);
    let rhs = rows.map(|r| r.1);
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    let norm: f64 = m.iter().flatten().map(|v| v.abs()).fold(0.0, f64::max);
    if d.abs() <= 1e-12 * norm.powi(3) {
        return None;
    }
    let mut x = [0.0; 3];
    for (c, xc) in x.iter_mut().enumerate() {
        let mut mc = m;
        for r in 0..3 {
            mc[r][c] = rhs[r];
        }
        *xc = det(mc) / d;
    }
    Some(x)
}

fn unit_shape_metric(gamma: f64, s: f64, metric: Metric) -> f64 {
    match metric {
        Metric::Area => 0.5 * s * s * gamma.sin(),
        Metric::Perimeter => s * (2.0 + 2.0 * (0.5 * gamma).sin()),
    }
}

/// Objective to minimize at a pose: the container metric, or the negated
/// embedded metric. `+inf` outside the admissible pose domain.
fn objective(t: &Triangle, problem: Problem, gamma: f64, theta: f64) -> f64 {
    let Ok(pose) = ShapePose::new(gamma, theta) else {
        return f64::INFINITY;
    };
    if problem.is_container() {
        min_enclosing_at_pose(t, pose, problem.metric()).map_or(f64::INFINITY, |(v, _)| v)
    } else {
        -unit_shape_metric(gamma, embedded_scale_support(t, pose), problem.metric())
    }
}

pub fn oracle_solve(
    t: &Triangle,
    problem: Problem,
    cfg: OracleConfig,
) -> Result<OracleResult, Error> {
    cfg.validate()?;
    let (ng, nt) = (cfg.grid_gamma, cfg.grid_theta);
    let dg = PI / ng as f64;
    let dt = TAU / nt as f64;
    let gamma_at = |k: usize| (k as f64 + 0.5) * dg;
    let theta_at = |l: usize| l as f64 * dt;

    let row = |k: usize| -> Vec<f64> {
        (0..nt)
            .map(|l| objective(t, problem, gamma_at(k), theta_at(l)))
            .collect()
    };
    #[cfg(feature = "parallel")]
    let grid: Vec<Vec<f64>> = (0..ng).into_par_iter().map(row).collect();
    #[cfg(not(feature = "parallel"))]
    let grid: Vec<Vec<f64>> = (0..ng).map(row).collect();
    let mut evaluations = ng * nt;

    // Seeds: 8-neighbour local minima (theta wraps, gamma does not).
    let mut seeds: Vec<(f64, usize, usize)> = Vec::new();
    for k in 0..ng {
        for l in 0..nt {
            let v = grid[k][l];
            if !v.is_finite() {
                continue;
            }
            let mut is_min = true;
            'nb: for dk in -1i64..=1 {
                let kk = k as i64 + dk;
                if kk < 0 || kk >= ng as i64 {
                    continue;
                }
                for dl in -1i64..=1 {
                    if dk == 0 && dl == 0 {
                        continue;
                    }
                    let ll = (l as i64 + dl).rem_euclid(nt as i64) as usize;
                    if grid[kk as usize][ll] < v {
                        is_min = false;
                        break 'nb;
                    }
                }
            }
            if is_min {
                seeds.push((v, k, l));
            }
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    seeds.truncate(cfg.refine_starts);

    let f = |x: &[f64; 2]| objective(t, problem, x[0], x[1]);
    let max_evals = 4 * cfg.refine_iters;
    let mut best: Option<(f64, [f64; 2])> = None;
    let mut converged = false;
    for &(v0, k, l) in &seeds {
        let mut x = [gamma_at(k), theta_at(l)];
        let mut fx = v0;
        for shrink in [1.0, 0.1, 0.01] {
            let r = nelder_mead(
                &f,
                x,
                [dg * shrink, dt * shrink],
                cfg.value_tol * 1e-3,
                cfg.param_tol,
                max_evals,
            );
            evaluations += r.evaluations;
            converged |= r.converged;
            if r.fx <= fx {
                x = r.x;
                fx = r.fx;
            }
        }
        let better = match best {
            None => true,
            Some((bv, bx)) => fx < bv || (fx == bv && (x[0], x[1]) < (bx[0], bx[1])),
        };
        if better {
            best = Some((fx, x));
        }
    }
    let (_, x) = best.ok_or(Error::DegenerateTriangle)?;
    let pose = ShapePose::new(x[0], x[1])?;
    let (value, witness) = if problem.is_container() {
        min_enclosing_at_pose(t, pose, problem.metric())?
    } else {
        let (s, w) = max_embedded_at_pose(t, pose)?;
        (unit_shape_metric(pose.gamma, s, problem.metric()), w)
    };
    let diagnostics = format!(
        "grid {ng}x{nt}; {} seeds; nelder-mead with restarts at steps x1, x0.1, x0.01 of a cell; {} evaluations per run cap",
        seeds.len(),
        max_evals
    );
    Ok(OracleResult {
        value,
        witness,
        pose,
        evaluations,
        converged,
        diagnostics,
    })
}
