//! Seedable, executable checks of the inequalities and structural facts
//! the solver relies on.

pub mod minkowski;
pub mod sampling;
pub mod structure;

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{normalize, Point, Tolerance};
use crate::oracle::{oracle_solve, OracleConfig};
use crate::solver::{solve, Problem};
use crate::special::{
    container_specials, embedded_specials, Candidate, CandidateKind, ContainerKind, EmbeddedKind,
    NonSpecialKind,
};
use minkowski::{minkowski_mean, polygon_perimeter};
use sampling::{random_scalene, sample_rng};
use structure::{container_defects, embedded_defects};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub lemma_id: String,
    pub samples: usize,
    pub failures: usize,
    /// Smallest slack observed over all assertions (negative on failure).
    pub worst_margin: f64,
    pub seed: u64,
    pub details: Vec<String>,
    /// Per-category counts, for checks that classify samples.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tally: BTreeMap<String, usize>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of one sample: named margins (positive = holds) plus an input
/// description for failure details, and an optional category.
struct SampleOutcome {
    margins: Vec<(String, f64)>,
    input: String,
    category: Option<String>,
}

fn run_check(
    lemma_id: &str,
    samples: usize,
    seed: u64,
    per_sample: impl Fn(&mut ChaCha8Rng) -> SampleOutcome + Sync,
) -> CheckReport {
    let one = |i: usize| per_sample(&mut sample_rng(seed, i as u64));
    #[cfg(feature = "parallel")]
    let outcomes: Vec<SampleOutcome> = (0..samples).into_par_iter().map(one).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<SampleOutcome> = (0..samples).map(one).collect();

    let mut failures = 0;
    let mut worst_margin = f64::INFINITY;
    let mut details = Vec::new();
    let mut tally = BTreeMap::new();
    for (i, o) in outcomes.iter().enumerate() {
        let mut failed = false;
        for (name, m) in &o.margins {
            worst_margin = worst_margin.min(*m);
            if !(*m > 0.0) {
                failed = true;
                details.push(format!("sample {i}: {name} margin {m:e} on {}", o.input));
            }
        }
        failures += usize::from(failed);
        if let Some(c) = &o.category {
            *tally.entry(c.clone()).or_insert(0) += 1;
        }
    }
    CheckReport {
        lemma_id: lemma_id.to_string(),
        samples,
        failures,
        worst_margin,
        seed,
        details,
        tally,
    }
}

/// Relative slack of `lo < hi`.
fn slack(lo: f64, hi: f64) -> f64 {
    (hi - lo) / hi.abs()
}

fn find(v: &[Candidate], kind: CandidateKind) -> &Candidate {
    v.iter()
        .find(|c| c.kind == kind)
        .expect("catalog lists every kind")
}

/// Strict pairwise ordering among the embedded specials' areas, including
/// the acute-only and obtuse-only items.
pub fn check_embedded_inequalities(samples: usize, seed: u64) -> CheckReport {
    let tol = Tolerance::default();
    run_check("embedded-area-inequalities", samples, seed, |rng| {
        let t = random_scalene(rng);
        let s = normalize(&t, tol);
        let e = embedded_specials(&t, tol).expect("sampler yields scalene shapes");
        let ar = |k: EmbeddedKind| find(&e, CandidateKind::Embedded(k)).area;
        use EmbeddedKind::*;
        let mut margins = vec![
            (
                "(i) A''BC < A'BC".to_string(),
                slack(ar(ADoublePrimeBC), ar(APrimeBC)),
            ),
            (
                "(ii) A1BC < AB'C".to_string(),
                slack(ar(A1BC), ar(ABPrimeC)),
            ),
            ("(ii) AB1C < ABC1".to_string(), slack(ar(AB1C), ar(ABC1))),
            (
                "(iii) AbarBC < ABC1".to_string(),
                slack(ar(ABarBC), ar(ABC1)),
            ),
        ];
        if s.is_acute() {
            margins.push((
                "(iii) AbbarBC < ABbarC".into(),
                slack(ar(ADoubleBarBC), ar(ABBarC)),
            ));
            margins.push((
                "(iii) ABbarC < AB'C".into(),
                slack(ar(ABBarC), ar(ABPrimeC)),
            ));
        }
        if s.gamma > PI / 2.0 + 1e-6 {
            margins.push(("(iv) A'BC < ABC1".into(), slack(ar(APrimeBC), ar(ABC1))));
        }
        SampleOutcome {
            margins,
            input: t.to_string(),
            category: None,
        }
    })
}

/// Strict pairwise ordering among the container specials' perimeters.
pub fn check_container_inequalities(samples: usize, seed: u64) -> CheckReport {
    let tol = Tolerance::default();
    run_check("container-perimeter-inequalities", samples, seed, |rng| {
        let t = random_scalene(rng);
        let s = normalize(&t, tol);
        let c = container_specials(&t, tol).expect("sampler yields scalene shapes");
        let per = |k: ContainerKind| find(&c, CandidateKind::Container(k)).perimeter;
        use ContainerKind::*;
        let mut margins = vec![
            (
                "(i) ABC' < ABC''".to_string(),
                slack(per(ABCPrime), per(ABCDoublePrime)),
            ),
            (
                "(i) AB'C < AB1C".to_string(),
                slack(per(ABPrimeC), per(AB1C)),
            ),
            (
                "(ii) ABC' < ABC2".to_string(),
                slack(per(ABCPrime), per(ABC2)),
            ),
            ("(ii) ABC2 < ABC1".to_string(), slack(per(ABC2), per(ABC1))),
        ];
        if s.is_acute() {
            margins.push((
                "(iii) ABC' < AbarBC".into(),
                slack(per(ABCPrime), per(ABarBC)),
            ));
            margins.push((
                "(iii) AbarBC < ABbarC".into(),
                slack(per(ABarBC), per(ABBarC)),
            ));
        }
        SampleOutcome {
            margins,
            input: t.to_string(),
            category: None,
        }
    })
}

/// Convex polygon with `n` vertices on a random ellipse.
fn random_convex(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    let rx = rng.random_range(0.2..3.0);
    let ry = rng.random_range(0.2..3.0);
    let rot = rng.random_range(0.0..TAU);
    let shift = Point::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
    let mut ang: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
    ang.sort_by(f64::total_cmp);
    ang.iter()
        .map(|a| Point::new(rx * a.cos(), ry * a.sin()).rotate(rot) + shift)
        .collect()
}

/// Perimeter of a Minkowski mean equals the mean of the perimeters; the
/// mean of two non-homothetic triangles has at least four sides.
pub fn check_minkowski_perimeter(samples: usize, seed: u64) -> CheckReport {
    run_check("minkowski-mean-perimeter", samples, seed, |rng| {
        let n1 = rng.random_range(3..=4);
        let n2 = rng.random_range(3..=4);
        let p = random_convex(rng, n1);
        let q = random_convex(rng, n2);
        let k = minkowski_mean(&p, &q);
        let expect = 0.5 * (polygon_perimeter(&p) + polygon_perimeter(&q));
        let err = (polygon_perimeter(&k) - expect).abs() / expect;
        let mut margins = vec![("perimeter identity".to_string(), 1e-9 - err)];
        if n1 == 3 && n2 == 3 {
            margins.push(("mean has >= 4 edges".into(), k.len() as f64 - 3.5));
        }
        SampleOutcome {
            margins,
            input: format!("{p:?} + {q:?}"),
            category: None,
        }
    })
}

/// Perimeter of the triangle with legs `x`, `y` at angle `phi`, with the
/// third side in cancellation-free form.
pub fn hinge_perimeter(x: f64, y: f64, phi: f64) -> f64 {
    let s = (0.5 * phi).sin();
    x + y + ((x - y).powi(2) + 4.0 * x * y * s * s).sqrt()
}

/// Relative slack of the hinge inequality for `phi < phi2`.
pub fn hinge_margin(x: f64, y: f64, phi: f64, phi2: f64) -> f64 {
    slack(hinge_perimeter(x, y, phi), hinge_perimeter(x, y, phi2))
}

/// Two fixed legs at a larger angle give a larger perimeter.
pub fn check_hinge(samples: usize, seed: u64) -> CheckReport {
    run_check("hinge", samples, seed, |rng| {
        let x = rng.random_range(0.1..10.0);
        let y = rng.random_range(0.1..10.0);
        let mut phi = rng.random_range(1e-6..PI - 1e-6);
        let mut phi2 = rng.random_range(1e-6..PI - 1e-6);
        if phi > phi2 {
            std::mem::swap(&mut phi, &mut phi2);
        }
        let margins = if phi2 - phi > 1e-12 {
            vec![(
                "per(phi) < per(phi')".to_string(),
                hinge_margin(x, y, phi, phi2),
            )]
        } else {
            Vec::new()
        };
        SampleOutcome {
            margins,
            input: format!("legs ({x}, {y}), angles ({phi}, {phi2})"),
            category: None,
        }
    })
}

/// Relative distance below which a structural condition counts as met.
pub const STRUCTURAL_EPS: f64 = 1e-6;

/// Oracle witnesses of every problem satisfy the incidence conditions of
/// optimal embedded triangles and containers.
pub fn check_structural(samples: usize, seed: u64, cfg: OracleConfig) -> CheckReport {
    run_check("structural", samples, seed, |rng| {
        let t = random_scalene(rng);
        let mut margins = Vec::new();
        for problem in Problem::ALL {
            let Ok(r) = oracle_solve(&t, problem, cfg) else {
                margins.push((format!("{problem}: oracle failed"), -1.0));
                continue;
            };
            let d = if problem.is_container() {
                container_defects(&t, &r.witness)
            } else {
                embedded_defects(&t, &r.witness, problem == Problem::MaxAreaEmbedded)
            };
            for (name, defect) in d.0 {
                margins.push((format!("{problem}: {name}"), STRUCTURAL_EPS - defect));
            }
        }
        SampleOutcome {
            margins,
            input: t.to_string(),
            category: None,
        }
    })
}

/// Short type label of a minimum-perimeter container winner.
pub fn min_perimeter_type(kind: CandidateKind) -> Option<&'static str> {
    match kind {
        CandidateKind::Container(ContainerKind::ABPrimeC) => Some("AB'C"),
        CandidateKind::Container(ContainerKind::ABCPrime) => Some("ABC'"),
        CandidateKind::Container(ContainerKind::ABCBar) => Some("ABCbar"),
        CandidateKind::NonSpecial(NonSpecialKind::Apex) => Some("apex"),
        CandidateKind::NonSpecial(NonSpecialKind::Ex2) => Some("ex2"),
        _ => None,
    }
}

/// Minimum-perimeter container winners are always of one of five types.
/// Ties between a special and a coinciding non-special count as the
/// special.
pub fn check_min_perimeter_types(samples: usize, seed: u64) -> CheckReport {
    let tol = Tolerance::default();
    run_check("min-perimeter-types", samples, seed, |rng| {
        let t = random_scalene(rng);
        let r = solve(&t, Problem::MinPerimContainer, tol).expect("scalene input");
        let kind = r.winner().kind;
        let ty = min_perimeter_type(kind);
        SampleOutcome {
            margins: vec![(
                format!("winner {kind} among the five types"),
                if ty.is_some() { 1.0 } else { -1.0 },
            )],
            input: t.to_string(),
            category: Some(ty.unwrap_or("other").to_string()),
        }
    })
}

/// Lemma identifiers accepted by [`run_lemma`].
pub const LEMMA_IDS: [&str; 6] = [
    "embedded",
    "container",
    "minkowski",
    "hinge",
    "structural",
    "types",
];

pub fn run_lemma(id: &str, samples: usize, seed: u64, cfg: OracleConfig) -> Option<CheckReport> {
    Some(match id {
        "embedded" => check_embedded_inequalities(samples, seed),
        "container" => check_container_inequalities(samples, seed),
        "minkowski" => check_minkowski_perimeter(samples, seed),
        "hinge" => check_hinge(samples, seed),
        "structural" => check_structural(samples, seed, cfg),
        "types" => check_min_perimeter_types(samples, seed),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hinge_equal_angles_equal_perimeters() {
        assert_eq!(hinge_margin(1.0, 2.0, 0.7, 0.7), 0.0);
        assert!(hinge_margin(1.0, 2.0, 0.7, 0.7 + 1e-8) > 0.0);
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(
            check_embedded_inequalities(50, 9),
            check_embedded_inequalities(50, 9)
        );
    }

    #[test]
    fn unknown_lemma() {
        assert!(run_lemma("nope", 1, 0, OracleConfig::default()).is_none());
    }
}
