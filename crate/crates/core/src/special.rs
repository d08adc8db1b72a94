//! The eighteen special constructions: nine isosceles triangles embedded
//! in a scalene triangle and nine isosceles containers, each with a
//! closed-form area and perimeter in terms of the canonical shape.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::geom::{
    bisector_meets_line, contains_triangle, is_isosceles, normalize, project_onto_line,
    segment_param, Metric, Point, Tolerance, Triangle, TriangleShape,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EmbeddedKind {
    /// `A'` on `AC` with `|A'C| = a`.
    APrimeBC,
    /// `B'` on `AB` with `|AB'| = b`.
    ABPrimeC,
    /// `A''` on `AB` with `|A''B| = a`.
    ADoublePrimeBC,
    /// `A1` on `AB` equidistant from `B` and `C`.
    A1BC,
    /// `B1` on `AB` equidistant from `A` and `C`.
    AB1C,
    /// `C1` on `AC` equidistant from `A` and `B`.
    ABC1,
    /// `A-bar` on `AB` with `|CA-bar| = a`.
    ABarBC,
    /// `A-double-bar` on `AC` with `|BA-double-bar| = a` (acute only).
    ADoubleBarBC,
    /// `B-bar` on `BC` with `|AB-bar| = b` (acute only).
    ABBarC,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContainerKind {
    /// `B'` on ray `CB` with `|CB'| = b`.
    ABPrimeC,
    /// `C'` on ray `AC` with `|AC'| = c`.
    ABCPrime,
    /// `C''` on ray `BC` with `|BC''| = c`.
    ABCDoublePrime,
    /// `B1` on ray `AB` with `|CB1| = b`.
    AB1C,
    /// `C1` on ray `AC` with `|BC1| = c`.
    ABC1,
    /// `C2` on ray `BC` with `|AC2| = c`.
    ABC2,
    /// `A-bar` on line `AC` equidistant from `B` and `C`.
    ABarBC,
    /// `B-bar` on line `BC` equidistant from `A` and `C`.
    ABBarC,
    /// `C-bar` on line `BC` equidistant from `A` and `B`.
    ABCBar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialKind {
    Embedded(EmbeddedKind),
    Container(ContainerKind),
}

impl From<EmbeddedKind> for SpecialKind {
    fn from(k: EmbeddedKind) -> Self {
        SpecialKind::Embedded(k)
    }
}

impl From<ContainerKind> for SpecialKind {
    fn from(k: ContainerKind) -> Self {
        SpecialKind::Container(k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NonSpecialKind {
    /// Shares one vertex and the supporting line of the opposite side.
    Apex,
    /// One input vertex at the apex, one on each of two container sides.
    Ex2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CandidateKind {
    Embedded(EmbeddedKind),
    Container(ContainerKind),
    NonSpecial(NonSpecialKind),
    /// The input itself, when it is already isosceles.
    Input,
}

impl EmbeddedKind {
    pub const ALL: [EmbeddedKind; 9] = [
        EmbeddedKind::APrimeBC,
        EmbeddedKind::ABPrimeC,
        EmbeddedKind::ADoublePrimeBC,
        EmbeddedKind::A1BC,
        EmbeddedKind::AB1C,
        EmbeddedKind::ABC1,
        EmbeddedKind::ABarBC,
        EmbeddedKind::ADoubleBarBC,
        EmbeddedKind::ABBarC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EmbeddedKind::APrimeBC => "A'BC",
            EmbeddedKind::ABPrimeC => "AB'C",
            EmbeddedKind::ADoublePrimeBC => "A''BC",
            EmbeddedKind::A1BC => "A1BC",
            EmbeddedKind::AB1C => "AB1C",
            EmbeddedKind::ABC1 => "ABC1",
            EmbeddedKind::ABarBC => "AbarBC",
            EmbeddedKind::ADoubleBarBC => "AbbarBC",
            EmbeddedKind::ABBarC => "ABbarC",
        }
    }
}

impl ContainerKind {
    pub const ALL: [ContainerKind; 9] = [
        ContainerKind::ABPrimeC,
        ContainerKind::ABCPrime,
        ContainerKind::ABCDoublePrime,
        ContainerKind::AB1C,
        ContainerKind::ABC1,
        ContainerKind::ABC2,
        ContainerKind::ABarBC,
        ContainerKind::ABBarC,
        ContainerKind::ABCBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContainerKind::ABPrimeC => "AB'C",
            ContainerKind::ABCPrime => "ABC'",
            ContainerKind::ABCDoublePrime => "ABC''",
            ContainerKind::AB1C => "AB1C",
            ContainerKind::ABC1 => "ABC1",
            ContainerKind::ABC2 => "ABC2",
            ContainerKind::ABarBC => "AbarBC",
            ContainerKind::ABBarC => "ABbarC",
            ContainerKind::ABCBar => "ABCbar",
        }
    }
}

impl CandidateKind {
    /// Stable machine name, e.g. `emb:AB'C` or `cont:ABCbar`.
    pub fn name(self) -> String {
        match self {
            CandidateKind::Embedded(k) => format!("emb:{}", k.name()),
            CandidateKind::Container(k) => format!("cont:{}", k.name()),
            CandidateKind::NonSpecial(NonSpecialKind::Apex) => "nonspecial:apex".into(),
            CandidateKind::NonSpecial(NonSpecialKind::Ex2) => "nonspecial:ex2".into(),
            CandidateKind::Input => "input".into(),
        }
    }

    pub fn is_special(self) -> bool {
        matches!(
            self,
            CandidateKind::Embedded(_) | CandidateKind::Container(_)
        )
    }

    pub fn special(self) -> Option<SpecialKind> {
        match self {
            CandidateKind::Embedded(k) => Some(k.into()),
            CandidateKind::Container(k) => Some(k.into()),
            _ => None,
        }
    }

    /// Inverse of [`CandidateKind::name`].
    pub fn parse(s: &str) -> Option<CandidateKind> {
        EmbeddedKind::ALL
            .iter()
            .map(|&k| CandidateKind::Embedded(k))
            .chain(
                ContainerKind::ALL
                    .iter()
                    .map(|&k| CandidateKind::Container(k)),
            )
            .chain([
                CandidateKind::NonSpecial(NonSpecialKind::Apex),
                CandidateKind::NonSpecial(NonSpecialKind::Ex2),
                CandidateKind::Input,
            ])
            .find(|k| k.name() == s)
    }
}

impl From<SpecialKind> for CandidateKind {
    fn from(k: SpecialKind) -> Self {
        match k {
            SpecialKind::Embedded(k) => CandidateKind::Embedded(k),
            SpecialKind::Container(k) => CandidateKind::Container(k),
        }
    }
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for CandidateKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// One candidate triangle. `area` and `perimeter` are NaN when no
/// triangle was produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub kind: CandidateKind,
    pub triangle: Option<Triangle>,
    pub area: f64,
    pub perimeter: f64,
    /// The defining construction point exists.
    pub exists: bool,
    /// Exists, is isosceles, and satisfies the containment relation.
    pub valid: bool,
    pub note: String,
}

impl Candidate {
    pub fn new(
        kind: CandidateKind,
        triangle: Option<Triangle>,
        exists: bool,
        valid: bool,
        note: impl Into<String>,
    ) -> Self {
        let (area, perimeter) =
            triangle.map_or((f64::NAN, f64::NAN), |t| (t.area(), t.perimeter()));
        Self {
            kind,
            triangle,
            area,
            perimeter,
            exists,
            valid: valid && triangle.is_some(),
            note: note.into(),
        }
    }

    pub fn missing(kind: CandidateKind, note: impl Into<String>) -> Self {
        Self::new(kind, None, false, false, note)
    }

    pub fn metric(&self, m: Metric) -> f64 {
        match m {
            Metric::Area => self.area,
            Metric::Perimeter => self.perimeter,
        }
    }
}

/// The two ways the closed forms parametrize an isosceles triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IsoscelesForm {
    /// Two legs of length `leg` meeting at the apex angle `apex`.
    Legs { leg: f64, apex: f64 },
    /// Base of length `base` with both base angles equal to `angle`.
    Base { base: f64, angle: f64 },
}

impl IsoscelesForm {
    pub fn area(self) -> f64 {
        match self {
            IsoscelesForm::Legs { leg, apex } => 0.5 * leg * leg * apex.sin(),
            IsoscelesForm::Base { base, angle } => 0.25 * base * base * angle.tan(),
        }
    }

    pub fn perimeter(self) -> f64 {
        match self {
            IsoscelesForm::Legs { leg, apex } => 2.0 * leg * (1.0 + (0.5 * apex).sin()),
            IsoscelesForm::Base { base, angle } => base * (1.0 + 1.0 / angle.cos()),
        }
    }

    pub fn apex_angle(self) -> f64 {
        match self {
            IsoscelesForm::Legs { apex, .. } => apex,
            IsoscelesForm::Base { angle, .. } => PI - 2.0 * angle,
        }
    }
}

/// Leg/apex or base/base-angle description of a special construction.
pub fn special_form(kind: SpecialKind, s: &TriangleShape) -> IsoscelesForm {
    use IsoscelesForm::{Base, Legs};
    let TriangleShape {
        a,
        b,
        c,
        alpha,
        beta,
        gamma,
        ..
    } = *s;
    match kind {
        SpecialKind::Embedded(k) => match k {
            EmbeddedKind::APrimeBC => Legs {
                leg: a,
                apex: gamma,
            },
            EmbeddedKind::ABPrimeC => Legs {
                leg: b,
                apex: alpha,
            },
            EmbeddedKind::ADoublePrimeBC => Legs { leg: a, apex: beta },
            EmbeddedKind::A1BC => Base {
                base: a,
                angle: beta,
            },
            EmbeddedKind::AB1C => Base {
                base: b,
                angle: alpha,
            },
            EmbeddedKind::ABC1 => Base {
                base: c,
                angle: alpha,
            },
            EmbeddedKind::ABarBC => Legs {
                leg: a,
                apex: PI - 2.0 * beta,
            },
            EmbeddedKind::ADoubleBarBC => Legs {
                leg: a,
                apex: PI - 2.0 * gamma,
            },
            EmbeddedKind::ABBarC => Legs {
                leg: b,
                apex: PI - 2.0 * gamma,
            },
        },
        SpecialKind::Container(k) => match k {
            ContainerKind::ABPrimeC => Legs {
                leg: b,
                apex: gamma,
            },
            ContainerKind::ABCPrime => Legs {
                leg: c,
                apex: alpha,
            },
            ContainerKind::ABCDoublePrime => Legs { leg: c, apex: beta },
            ContainerKind::AB1C => Legs {
                leg: b,
                apex: PI - 2.0 * alpha,
            },
            ContainerKind::ABC1 => Legs {
                leg: c,
                apex: PI - 2.0 * alpha,
            },
            ContainerKind::ABC2 => Legs {
                leg: c,
                apex: PI - 2.0 * beta,
            },
            ContainerKind::ABarBC => Base {
                base: a,
                angle: gamma,
            },
            ContainerKind::ABBarC => Base {
                base: b,
                angle: gamma,
            },
            ContainerKind::ABCBar => Base {
                base: c,
                angle: beta,
            },
        },
    }
}

pub fn closed_form_area(kind: impl Into<SpecialKind>, s: &TriangleShape) -> f64 {
    special_form(kind.into(), s).area()
}

pub fn closed_form_perimeter(kind: impl Into<SpecialKind>, s: &TriangleShape) -> f64 {
    special_form(kind.into(), s).perimeter()
}

pub fn closed_form_metric(kind: impl Into<SpecialKind>, s: &TriangleShape, m: Metric) -> f64 {
    let f = special_form(kind.into(), s);
    match m {
        Metric::Area => f.area(),
        Metric::Perimeter => f.perimeter(),
    }
}

/// Which side of the containment relation a construction must satisfy.
#[derive(Clone, Copy)]
enum Relation {
    Inside,
    Encloses,
}

fn finish(
    kind: CandidateKind,
    t: &Triangle,
    pts: [Point; 3],
    exists: bool,
    relation: Relation,
    tol: Tolerance,
    note: String,
) -> Candidate {
    let Ok(cand) = Triangle::with_tolerance(pts[0], pts[1], pts[2], tol) else {
        return Candidate::missing(kind, format!("{note}; construction degenerates"));
    };
    let iso = is_isosceles(&cand, tol).is_isosceles();
    let related = match relation {
        Relation::Inside => contains_triangle(t, &cand, tol),
        Relation::Encloses => contains_triangle(&cand, t, tol),
    };
    Candidate::new(kind, Some(cand), exists, exists && iso && related, note)
}

fn on_segment(u: f64, tol: Tolerance) -> bool {
    u > tol.eps_rel && u <= 1.0 + tol.eps_rel
}

fn require_scalene(t: &Triangle, tol: Tolerance) -> Result<TriangleShape, Error> {
    let s = normalize(t, tol);
    if s.isosceles {
        return Err(Error::NotScalene);
    }
    Ok(s)
}

/// Builds the nine embedded specials in catalog order.
pub fn embedded_specials(t: &Triangle, tol: Tolerance) -> Result<Vec<Candidate>, Error> {
    let s = require_scalene(t, tol)?;
    let [pa, pb, pc] = s.labeled(t);
    let rel = tol.eps_rel;
    let out = EmbeddedKind::ALL
        .iter()
        .map(|&k| {
            let kind = CandidateKind::Embedded(k);
            let seg = |p: Point, from: Point, to: Point| segment_param(p, from, to);
            let (pts, exists, note) = match k {
                EmbeddedKind::APrimeBC => {
                    let p = pc + (pa - pc) * (s.a / s.b);
                    (
                        [p, pb, pc],
                        on_segment(s.a / s.b, tol),
                        "A' on AC, |A'C| = |BC|",
                    )
                }
                EmbeddedKind::ABPrimeC => {
                    let p = pa + (pb - pa) * (s.b / s.c);
                    (
                        [pa, p, pc],
                        on_segment(s.b / s.c, tol),
                        "B' on AB, |AB'| = |AC|",
                    )
                }
                EmbeddedKind::ADoublePrimeBC => {
                    let p = pb + (pa - pb) * (s.a / s.c);
                    (
                        [p, pb, pc],
                        on_segment(s.a / s.c, tol),
                        "A'' on AB, |A''B| = |BC|",
                    )
                }
                EmbeddedKind::A1BC => match bisector_meets_line(pb, pc, pa, pb, rel) {
                    Some((p, u)) => (
                        [p, pb, pc],
                        on_segment(1.0 - u, tol),
                        "A1 on AB, |A1B| = |A1C|",
                    ),
                    None => return Candidate::missing(kind, "bisector of BC parallel to AB"),
                },
                EmbeddedKind::AB1C => match bisector_meets_line(pa, pc, pa, pb, rel) {
                    Some((p, u)) => ([pa, p, pc], on_segment(u, tol), "B1 on AB, |AB1| = |B1C|"),
                    None => return Candidate::missing(kind, "bisector of AC parallel to AB"),
                },
                EmbeddedKind::ABC1 => match bisector_meets_line(pa, pb, pa, pc, rel) {
                    Some((p, u)) => ([pa, pb, p], on_segment(u, tol), "C1 on AC, |AC1| = |BC1|"),
                    None => return Candidate::missing(kind, "bisector of AB parallel to AC"),
                },
                EmbeddedKind::ABarBC => {
                    let p = project_onto_line(pc, pa, pb) * 2.0 - pb;
                    (
                        [p, pb, pc],
                        on_segment(seg(p, pb, pa), tol),
                        "A-bar on AB, |CA-bar| = |BC|",
                    )
                }
                EmbeddedKind::ADoubleBarBC => {
                    let p = project_onto_line(pb, pa, pc) * 2.0 - pc;
                    let ok = s.is_acute() && on_segment(seg(p, pc, pa), tol);
                    (
                        [p, pb, pc],
                        ok,
                        "A-double-bar on AC, |BA-double-bar| = |BC|",
                    )
                }
                EmbeddedKind::ABBarC => {
                    let p = project_onto_line(pa, pb, pc) * 2.0 - pc;
                    let ok = s.is_acute() && on_segment(seg(p, pc, pb), tol);
                    ([pa, p, pc], ok, "B-bar on BC, |AB-bar| = |AC|")
                }
            };
            if !exists {
                return Candidate::missing(kind, format!("{note}; point not on the side"));
            }
            finish(
                kind,
                t,
                pts,
                exists,
                Relation::Inside,
                tol,
                note.to_string(),
            )
        })
        .collect();
    Ok(out)
}

/// Builds the nine container specials in catalog order.
pub fn container_specials(t: &Triangle, tol: Tolerance) -> Result<Vec<Candidate>, Error> {
    let s = require_scalene(t, tol)?;
    let [pa, pb, pc] = s.labeled(t);
    let rel = tol.eps_rel;
    let out = ContainerKind::ALL
        .iter()
        .map(|&k| {
            let kind = CandidateKind::Container(k);
            let (pts, exists, note) = match k {
                ContainerKind::ABPrimeC => {
                    let p = pc + (pb - pc) * (s.b / s.a);
                    ([pa, p, pc], true, "B' on ray CB, |CB'| = |AC|")
                }
                ContainerKind::ABCPrime => {
                    let p = pa + (pc - pa) * (s.c / s.b);
                    ([pa, pb, p], true, "C' on ray AC, |AC'| = |AB|")
                }
                ContainerKind::ABCDoublePrime => {
                    let p = pb + (pc - pb) * (s.c / s.a);
                    ([pa, pb, p], true, "C'' on ray BC, |BC''| = |AB|")
                }
                ContainerKind::AB1C => {
                    let p = project_onto_line(pc, pa, pb) * 2.0 - pa;
                    (
                        [pa, p, pc],
                        segment_param(p, pa, pb) > rel,
                        "B1 on ray AB, |CB1| = |AC|",
                    )
                }
                ContainerKind::ABC1 => {
                    let p = project_onto_line(pb, pa, pc) * 2.0 - pa;
                    (
                        [pa, pb, p],
                        segment_param(p, pa, pc) > rel,
                        "C1 on ray AC, |BC1| = |AB|",
                    )
                }
                ContainerKind::ABC2 => {
                    let p = project_onto_line(pa, pb, pc) * 2.0 - pb;
                    (
                        [pa, pb, p],
                        segment_param(p, pb, pc) > rel,
                        "C2 on ray BC, |AC2| = |AB|",
                    )
                }
                ContainerKind::ABarBC => match bisector_meets_line(pb, pc, pa, pc, rel) {
                    Some((p, _)) => ([p, pb, pc], true, "A-bar on line AC, |A-bar B| = |A-bar C|"),
                    None => return Candidate::missing(kind, "bisector of BC parallel to AC"),
                },
                ContainerKind::ABBarC => match bisector_meets_line(pa, pc, pb, pc, rel) {
                    Some((p, _)) => ([pa, p, pc], true, "B-bar on line BC, |AB-bar| = |B-bar C|"),
                    None => return Candidate::missing(kind, "bisector of AC parallel to BC"),
                },
                ContainerKind::ABCBar => match bisector_meets_line(pa, pb, pb, pc, rel) {
                    Some((p, _)) => ([pa, pb, p], true, "C-bar on line BC, |AC-bar| = |BC-bar|"),
                    None => return Candidate::missing(kind, "bisector of AB parallel to BC"),
                },
            };
            if !exists {
                return Candidate::missing(kind, format!("{note}; point not on the ray"));
            }
            finish(
                kind,
                t,
                pts,
                exists,
                Relation::Encloses,
                tol,
                note.to_string(),
            )
        })
        .collect();
    Ok(out)
}
