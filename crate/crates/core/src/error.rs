use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("triangle is degenerate (collinear within tolerance)")]
    DegenerateTriangle,
    #[error("input contains a non-finite coordinate")]
    NonFinite,
    #[error("constructions require a scalene triangle")]
    NotScalene,
    #[error("f_v has no interior minimum for v = {v}")]
    NoInteriorMinimum { v: f64 },
    #[error("closed-form x* disagrees with numeric minimizer for v = {v}: numeric {numeric}, radical {radical}")]
    ClosedFormMismatch { v: f64, numeric: f64, radical: f64 },
    #[error("pose outside the admissible domain")]
    InvalidPose,
    #[error("{0}")]
    InvalidInput(String),
}
