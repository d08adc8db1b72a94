//! wasm-bindgen entry points for the browser demo. Each export returns a
//! JSON string; the `*_doc` functions behind them are plain Rust so they
//! can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use isotri::geom::{Point, Tolerance, Triangle};
use isotri::lemmas::sampling::triangle_from_angles;
use isotri::nonspecial::{f_v, x_star, XStarBranch};
use isotri::report::{round_sig, SolveReport};
use isotri::solver::{solve, Problem};
use isotri::svg::{fv_curve_svg, phase_map_svg, Role, Scene, DEFAULT_SCALE};
use isotri::sweep::sweep_min_perimeter;

const MAX_GRID: u32 = 120;

fn numbers(s: &str) -> Result<Vec<f64>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| format!("'{t}' is not a number"))
        })
        .collect()
}

/// `mode` is `sides` ("a,b,c"), `vertices` ("x,y x,y x,y") or `angles`
/// ("alpha,beta" in degrees).
pub fn parse_triangle(mode: &str, text: &str) -> Result<Triangle, String> {
    let v = numbers(text)?;
    match (mode, v.as_slice()) {
        ("sides", &[a, b, c]) => Triangle::from_sides(a, b, c).map_err(|e| e.to_string()),
        ("vertices", &[x0, y0, x1, y1, x2, y2]) => {
            Triangle::new(Point::new(x0, y0), Point::new(x1, y1), Point::new(x2, y2))
                .map_err(|e| e.to_string())
        }
        ("angles", &[al, be]) if al > 0.0 && be > 0.0 && al + be < 180.0 => {
            Ok(triangle_from_angles(al.to_radians(), be.to_radians()))
        }
        ("angles", &[_, _]) => Err("angles must be positive with sum below 180 degrees".into()),
        ("sides", _) => Err("sides need three lengths".into()),
        ("vertices", _) => Err("vertices need three x,y pairs".into()),
        ("angles", _) => Err("angles need two values in degrees".into()),
        _ => Err(format!("unknown input mode '{mode}'")),
    }
}

/// Solver report plus an SVG with the input, the winner and (optionally)
/// every other valid candidate.
pub fn solve_doc(problem: &str, mode: &str, text: &str, all: bool) -> Result<Value, String> {
    let problem: Problem = problem
        .parse()
        .map_err(|_| format!("unknown problem '{problem}'"))?;
    let t = parse_triangle(mode, text)?;
    let tol = Tolerance::default();
    let res = solve(&t, problem, tol).map_err(|e| e.to_string())?;
    let metric = problem.metric();

    let mut scene = Scene::new(DEFAULT_SCALE).title(format!("{problem}: {}", res.winner().kind));
    scene.add(&t, "input", None, Role::Input);
    if all {
        for c in res.table.iter().filter(|c| c.valid).skip(1) {
            if let Some(tri) = &c.triangle {
                scene.add(tri, c.kind.name(), Some(c.metric(metric)), Role::Candidate);
            }
        }
    }
    let w = res.winner();
    if let Some(tri) = &w.triangle {
        scene.add(tri, w.kind.name(), Some(w.metric(metric)), Role::Winner);
    }
    let report = SolveReport::new(&t, &res, tol);
    Ok(json!({ "report": report, "svg": scene.render() }))
}

/// `f_v` curve with its minimizer.
pub fn fv_doc(v: f64) -> Result<Value, String> {
    let xs = x_star(v).map_err(|e| e.to_string())?;
    let x_max = (2.0 * xs.value).max(xs.value + 1.5);
    Ok(json!({
        "v": v,
        "x_star": round_sig(xs.value, 12),
        "f_min": round_sig(f_v(v, xs.value), 12),
        "radical_checked": xs.branch == XStarBranch::RadicalChecked,
        "svg": fv_curve_svg(v, xs.value, x_max),
    }))
}

/// Minimum-perimeter winner types over an `n x n` shape grid.
pub fn phase_doc(grid: u32) -> Result<Value, String> {
    if !(1..=MAX_GRID).contains(&grid) {
        return Err(format!("grid must be between 1 and {MAX_GRID}"));
    }
    let cells = sweep_min_perimeter(grid as usize, Tolerance::default());
    let mut counts = std::collections::BTreeMap::new();
    for c in &cells {
        *counts.entry(c.winner_type.clone()).or_insert(0usize) += 1;
    }
    Ok(
        json!({ "cells": cells.len(), "counts": counts, "svg": phase_map_svg(&cells, grid as usize) }),
    )
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve_triangle(problem: &str, mode: &str, text: &str, all: bool) -> Result<String, JsError> {
    export(solve_doc(problem, mode, text, all))
}

#[wasm_bindgen]
pub fn fv_curve(v: f64) -> Result<String, JsError> {
    export(fv_doc(v))
}

#[wasm_bindgen]
pub fn phase_map(grid: u32) -> Result<String, JsError> {
    export(phase_doc(grid))
}
