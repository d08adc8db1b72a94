//! Optimal isosceles triangles attached to a scalene triangle: the
//! smallest isosceles containers and largest embedded isosceles triangles
//! by area and by perimeter, together with a brute-force oracle that
//! cross-checks the constructive solver.

// `!(x <= y)` is used on purpose so NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod error;
pub mod geom;
pub mod lemmas;
pub mod nonspecial;
pub mod optimize;
pub mod oracle;
pub mod reference;
pub mod report;
pub mod solver;
pub mod special;
pub mod svg;
pub mod sweep;

pub use error::Error;
pub use geom::{Metric, Point, Tolerance, Triangle, TriangleShape};
pub use solver::{solve, Problem, SolveResult};
pub use special::{Candidate, CandidateKind};
