//! Machine-readable result documents.

use serde::{Deserialize, Serialize};

use crate::geom::{Point, Tolerance, Triangle};
use crate::oracle::OracleResult;
use crate::solver::{shares_side_and_angle, SolveResult};
use crate::special::Candidate;

/// Rounds to `digits` significant digits; non-finite values pass through.
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let e = x.abs().log10().floor() as i32;
    let p = digits - 1 - e;
    if !(-300..=300).contains(&p) {
        return x;
    }
    let s = 10f64.powi(p);
    (x * s).round() / s
}

/// Number formatted to 6 significant digits for people.
pub fn human(x: f64) -> String {
    if !x.is_finite() {
        return "-".into();
    }
    format!("{}", round_sig(x, 6))
}

const DIGITS: i32 = 12;

fn r(x: f64) -> f64 {
    round_sig(x, DIGITS)
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then(|| r(x))
}

fn verts(t: &Triangle) -> [[f64; 2]; 3] {
    t.vertices().map(|p: Point| [r(p.x), r(p.y)])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDoc {
    pub vertices: [[f64; 2]; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WinnerDoc {
    pub kind: String,
    pub vertices: [[f64; 2]; 3],
    pub area: f64,
    pub perimeter: f64,
    pub shares_side_and_angle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub kind: String,
    pub vertices: Option<[[f64; 2]; 3]>,
    pub area: Option<f64>,
    pub perimeter: Option<f64>,
    pub exists: bool,
    pub valid: bool,
    pub note: String,
}

impl From<&Candidate> for CandidateDoc {
    fn from(c: &Candidate) -> Self {
        Self {
            kind: c.kind.name(),
            vertices: c.triangle.as_ref().map(verts),
            area: finite(c.area),
            perimeter: finite(c.perimeter),
            exists: c.exists,
            valid: c.valid,
            note: c.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub value: f64,
    pub gamma_deg: f64,
    pub theta_deg: f64,
    pub converged: bool,
    pub evaluations: usize,
    pub witness: [[f64; 2]; 3],
    pub diagnostics: String,
}

impl From<&OracleResult> for OracleDoc {
    fn from(o: &OracleResult) -> Self {
        Self {
            value: r(o.value),
            gamma_deg: r(o.pose.gamma.to_degrees()),
            theta_deg: r(o.pose.theta.to_degrees()),
            converged: o.converged,
            evaluations: o.evaluations,
            witness: verts(&o.witness),
            diagnostics: o.diagnostics.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: String,
    pub input: InputDoc,
    pub optimum: f64,
    pub winners: Vec<WinnerDoc>,
    pub candidates: Vec<CandidateDoc>,
    pub oracle: Option<OracleDoc>,
}

impl SolveReport {
    pub fn new(t: &Triangle, res: &SolveResult, tol: Tolerance) -> Self {
        let winners = res
            .winners
            .iter()
            .filter_map(|w| {
                let tri = w.triangle.as_ref()?;
                Some(WinnerDoc {
                    kind: w.kind.name(),
                    vertices: verts(tri),
                    area: r(w.area),
                    perimeter: r(w.perimeter),
                    shares_side_and_angle: shares_side_and_angle(t, tri, tol),
                })
            })
            .collect();
        Self {
            problem: res.problem.name().to_string(),
            input: InputDoc { vertices: verts(t) },
            optimum: r(res.optimum),
            winners,
            candidates: res.table.iter().map(CandidateDoc::from).collect(),
            oracle: res.oracle_check.as_ref().map(OracleDoc::from),
        }
    }
}
