//! The four optimization problems, solved by ranking every candidate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::geom::{dist_to_line, normalize, Metric, Point, Tolerance, Triangle};
use crate::nonspecial::{apex_candidates, ex2_candidates};
use crate::oracle::OracleResult;
use crate::special::{container_specials, embedded_specials, Candidate, CandidateKind};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    MinAreaContainer,
    MinPerimContainer,
    MaxAreaEmbedded,
    MaxPerimEmbedded,
}

impl Problem {
    pub const ALL: [Problem; 4] = [
        Problem::MaxAreaEmbedded,
        Problem::MaxPerimEmbedded,
        Problem::MinAreaContainer,
        Problem::MinPerimContainer,
    ];

    pub fn metric(self) -> Metric {
        match self {
            Problem::MinAreaContainer | Problem::MaxAreaEmbedded => Metric::Area,
            Problem::MinPerimContainer | Problem::MaxPerimEmbedded => Metric::Perimeter,
        }
    }

    pub fn is_container(self) -> bool {
        matches!(self, Problem::MinAreaContainer | Problem::MinPerimContainer)
    }

    /// True when `x` is strictly better than `y` for this problem.
    pub fn better(self, x: f64, y: f64) -> bool {
        if self.is_container() {
            x < y
        } else {
            x > y
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::MinAreaContainer => "min-area-container",
            Problem::MinPerimContainer => "min-perim-container",
            Problem::MaxAreaEmbedded => "max-area-embedded",
            Problem::MaxPerimEmbedded => "max-perim-embedded",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown problem '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResult {
    pub problem: Problem,
    pub optimum: f64,
    /// Every valid candidate within `eps_rel` relative of the optimum, in
    /// table order.
    pub winners: Vec<Candidate>,
    /// All candidates: valid ones ranked best first, then the rest in
    /// generation order.
    pub table: Vec<Candidate>,
    pub shares_side_and_angle: bool,
    pub oracle_check: Option<OracleResult>,
}

impl SolveResult {
    pub fn winner(&self) -> &Candidate {
        &self.winners[0]
    }
}

/// Candidates considered for `problem`, in generation order.
pub fn candidates(t: &Triangle, problem: Problem, tol: Tolerance) -> Result<Vec<Candidate>, Error> {
    Ok(match problem {
        Problem::MaxAreaEmbedded | Problem::MaxPerimEmbedded => embedded_specials(t, tol)?,
        Problem::MinAreaContainer => container_specials(t, tol)?,
        Problem::MinPerimContainer => {
            let mut v = container_specials(t, tol)?;
            v.extend(apex_candidates(t, tol));
            v.extend(ex2_candidates(t, tol));
            v
        }
    })
}

pub fn solve(t: &Triangle, problem: Problem, tol: Tolerance) -> Result<SolveResult, Error> {
    let metric = problem.metric();
    if normalize(t, tol).isosceles {
        let c = Candidate::new(
            CandidateKind::Input,
            Some(*t),
            true,
            true,
            "input is already isosceles",
        );
        return Ok(SolveResult {
            problem,
            optimum: t.metric(metric),
            winners: vec![c.clone()],
            table: vec![c],
            shares_side_and_angle: true,
            oracle_check: None,
        });
    }

    let all = candidates(t, problem, tol)?;
    let (mut valid, invalid): (Vec<_>, Vec<_>) = all.into_iter().partition(|c| c.valid);
    if valid.is_empty() {
        // Cannot happen for a scalene input: the first-kind specials always exist.
        return Err(Error::InvalidInput("no valid candidate".into()));
    }
    valid.sort_by(|x, y| {
        let (a, b) = (x.metric(metric), y.metric(metric));
        if problem.is_container() {
            a.total_cmp(&b)
        } else {
            b.total_cmp(&a)
        }
    });
    let optimum = valid[0].metric(metric);
    let winners: Vec<Candidate> = valid
        .iter()
        .filter(|c| (c.metric(metric) - optimum).abs() <= tol.eps_rel * optimum.abs())
        .cloned()
        .collect();
    let shares = winners[0]
        .triangle
        .as_ref()
        .is_some_and(|w| shares_side_and_angle(t, w, tol));
    let mut table = valid;
    table.extend(invalid);
    Ok(SolveResult {
        problem,
        optimum,
        winners,
        table,
        shares_side_and_angle: shares,
        oracle_check: None,
    })
}

/// True when the triangles meet at a common vertex `E` with equal interior
/// angles there, and a side of one issuing from `E` lies along a side of
/// the other (so the shorter is a common segment).
pub fn shares_side_and_angle(a: &Triangle, b: &Triangle, tol: Tolerance) -> bool {
    const ANGLE_EPS: f64 = 1e-7;
    let eps = tol.eps_rel * a.diameter().max(b.diameter());
    for i in 0..3 {
        let e = a.vertex(i);
        let Some(j) = b.vertex_near(e, eps) else {
            continue;
        };
        if (a.angle(i) - b.angle(j)).abs() > ANGLE_EPS {
            continue;
        }
        let a_ends = [a.vertex(i + 1), a.vertex(i + 2)];
        let b_ends = [b.vertex(j + 1), b.vertex(j + 2)];
        let along = |x: Point, y: Point| {
            let (short, long) = if e.dist(x) <= e.dist(y) {
                (x, y)
            } else {
                (y, x)
            };
            (short - e).dot(long - e) > 0.0 && dist_to_line(short, e, long) <= eps
        };
        if a_ends.iter().any(|&x| b_ends.iter().any(|&y| along(x, y))) {
            return true;
        }
    }
    false
}
