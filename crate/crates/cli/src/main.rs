// `!(x <= y)` is used on purpose so NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use isotri::geom::{Point, Tolerance, Triangle};
use isotri::lemmas::{run_lemma, sampling::triangle_from_angles, LEMMA_IDS};
use isotri::oracle::{oracle_solve, OracleConfig};
use isotri::reference::reference_rows;
use isotri::report::{human, round_sig, OracleDoc, SolveReport};
use isotri::solver::{solve, Problem};
use isotri::svg::{phase_map_svg, Role, Scene, DEFAULT_SCALE};
use isotri::sweep::sweep_min_perimeter;
use isotri::CandidateKind;

/// Relative solver/oracle disagreement beyond which `--oracle` fails.
const CROSS_CHECK_GAP: f64 = 1e-3;

#[derive(Parser)]
#[command(
    name = "isotri",
    version,
    about = "Optimal isosceles containers and embedded isosceles triangles"
)]
struct Cli {
    /// Emit a machine-readable JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Relative geometric tolerance; for `paper-table`, the absolute
    /// comparison tolerance applied to every row.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Side lengths "a,b,c".
    #[arg(long)]
    sides: Option<String>,
    /// Vertices "x,y x,y x,y".
    #[arg(long)]
    vertices: Option<String>,
    /// Two angles "alpha,beta" in degrees (the third is implied).
    #[arg(long)]
    angles: Option<String>,
}

#[derive(Args, Clone)]
struct OracleArgs {
    #[arg(long, default_value_t = 720)]
    grid_gamma: usize,
    #[arg(long, default_value_t = 720)]
    grid_theta: usize,
    #[arg(long, default_value_t = 200)]
    refine_iters: usize,
    #[arg(long, default_value_t = 5)]
    refine_starts: usize,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            grid_gamma: self.grid_gamma,
            grid_theta: self.grid_theta,
            refine_iters: self.refine_iters,
            refine_starts: self.refine_starts,
            ..OracleConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one problem by candidate enumeration.
    Solve {
        #[arg(long)]
        problem: String,
        #[command(flatten)]
        input: InputArgs,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_args: OracleArgs,
        /// Write an SVG of the input and winner.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Include every valid candidate in the SVG.
        #[arg(long)]
        svg_all: bool,
        /// Pixels per unit in SVG output.
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
    },
    /// Run the brute-force oracle and compare with the solver.
    Oracle {
        #[arg(long)]
        problem: String,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        oracle_args: OracleArgs,
    },
    /// Run seeded lemma checks.
    Verify {
        /// One of: all, embedded, container, minkowski, hinge, structural, types.
        #[arg(long, default_value = "all")]
        lemma: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Samples for the oracle-backed structural check under `all`.
        #[arg(long, default_value_t = 10)]
        structural_samples: usize,
        #[command(flatten)]
        oracle_args: OracleArgs,
    },
    /// Recompute the reference numeric instances and diff them.
    PaperTable,
    /// Map minimum-perimeter winner types over the shape simplex.
    Sweep {
        #[arg(long, default_value_t = 60)]
        grid: usize,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a phase-map SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Standalone SVG of an input with candidates overlaid.
    Render {
        #[command(flatten)]
        input: InputArgs,
        /// Overlay this problem's candidates.
        #[arg(long)]
        problem: Option<String>,
        /// Comma-separated candidate kinds to draw (default: all valid).
        #[arg(long)]
        kinds: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SCALE)]
        scale: f64,
        /// Output path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Input(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<isotri::Error> for Failure {
    fn from(e: isotri::Error) -> Self {
        Failure::Input(e.into())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RunRecord {
    tool_version: String,
    command: String,
    timing_ms: f64,
    #[serde(flatten)]
    result: serde_json::Value,
}

fn parse_floats(s: &str, sep: char) -> Result<Vec<f64>> {
    s.split(sep)
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("'{t}' is not a number"))
        })
        .collect()
}

fn parse_input(a: &InputArgs) -> Result<Triangle> {
    if let Some(s) = &a.sides {
        let v = parse_floats(s, ',')?;
        let [x, y, z] = v[..] else {
            bail!("--sides needs three comma-separated lengths");
        };
        return Ok(Triangle::from_sides(x, y, z)?);
    }
    if let Some(s) = &a.vertices {
        let pts = s
            .split_whitespace()
            .map(|p| {
                let c = parse_floats(p, ',')?;
                match c[..] {
                    [x, y] => Ok(Point::new(x, y)),
                    _ => bail!("vertex '{p}' must be 'x,y'"),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let [p, q, r] = pts[..] else {
            bail!("--vertices needs three 'x,y' pairs");
        };
        return Ok(Triangle::new(p, q, r)?);
    }
    if let Some(s) = &a.angles {
        let v = parse_floats(s, ',')?;
        let [al, be] = v[..] else {
            bail!("--angles needs two comma-separated angles in degrees");
        };
        if !(al > 0.0 && be > 0.0 && al + be < 180.0) {
            bail!("angles must be positive with sum below 180 degrees");
        }
        return Ok(triangle_from_angles(al.to_radians(), be.to_radians()));
    }
    Err(anyhow!("one of --sides, --vertices, --angles is required"))
}

fn tolerance(cli: &Cli) -> Result<Tolerance> {
    match cli.tolerance {
        Some(t) => Ok(Tolerance::with_eps_rel(t)?),
        None => Ok(Tolerance::default()),
    }
}

fn parse_problem(s: &str) -> Result<Problem> {
    s.parse::<Problem>().map_err(|_| {
        let names: Vec<&str> = Problem::ALL.iter().map(|p| p.name()).collect();
        anyhow!(
            "unknown problem '{s}' (expected one of {})",
            names.join(", ")
        )
    })
}

fn emit(
    cli: &Cli,
    started: Instant,
    command: &str,
    value: serde_json::Value,
    text: impl FnOnce() -> String,
) -> Result<()> {
    if cli.json {
        let rec = RunRecord {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            timing_ms: round_sig(started.elapsed().as_secs_f64() * 1e3, 6),
            result: value,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&rec).context("serializing record")?
        );
    } else {
        print!("{}", text());
    }
    Ok(())
}

fn write_out(path: &PathBuf, content: &str) -> Result<()> {
    std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let started = Instant::now();
    match &cli.cmd {
        Cmd::Solve {
            problem,
            input,
            oracle,
            oracle_args,
            svg,
            svg_all,
            scale,
        } => {
            let tol = tolerance(cli)?;
            let problem = parse_problem(problem)?;
            let t = parse_input(input)?;
            let mut res = solve(&t, problem, tol)?;
            if *oracle {
                res.oracle_check = Some(oracle_solve(&t, problem, oracle_args.config())?);
            }
            if let Some(path) = svg {
                let mut scene =
                    Scene::new(*scale).title(format!("{problem}: {}", res.winner().kind));
                scene.add(&t, "input", None, Role::Input);
                if *svg_all {
                    for c in res.table.iter().filter(|c| c.valid).skip(1) {
                        if let Some(tri) = &c.triangle {
                            scene.add(
                                tri,
                                c.kind.name(),
                                Some(c.metric(problem.metric())),
                                Role::Candidate,
                            );
                        }
                    }
                }
                let w = res.winner();
                if let Some(tri) = &w.triangle {
                    scene.add(
                        tri,
                        w.kind.name(),
                        Some(w.metric(problem.metric())),
                        Role::Winner,
                    );
                }
                write_out(path, &scene.render())?;
            }
            let report = SolveReport::new(&t, &res, tol);
            let gap = res
                .oracle_check
                .as_ref()
                .map(|o| relative_gap(o.value, res.optimum));
            let value = serde_json::to_value(&report).context("serializing report")?;
            emit(cli, started, "solve", value, || solve_text(&report, gap))?;
            if let Some(g) = gap.filter(|g| !(*g <= CROSS_CHECK_GAP)) {
                return Err(Failure::Verification(format!(
                    "oracle disagrees with solver: relative gap {g:e}"
                )));
            }
            Ok(())
        }
        Cmd::Oracle {
            problem,
            input,
            oracle_args,
        } => {
            let tol = tolerance(cli)?;
            let problem = parse_problem(problem)?;
            let t = parse_input(input)?;
            let o = oracle_solve(&t, problem, oracle_args.config())?;
            let res = solve(&t, problem, tol)?;
            let gap = relative_gap(o.value, res.optimum);
            let doc = OracleDoc::from(&o);
            let value = serde_json::json!({
                "problem": problem.name(),
                "oracle": doc,
                "solver_optimum": round_sig(res.optimum, 12),
                "relative_gap": round_sig(gap, 6),
            });
            emit(cli, started, "oracle", value, || {
                format!(
                    "problem       {problem}\noracle        {}\nsolver        {}\nrelative gap  {:.3e}\npose          gamma {} deg, theta {} deg\nconverged     {}\nevaluations   {}\n{}\n",
                    human(o.value),
                    human(res.optimum),
                    gap,
                    human(doc.gamma_deg),
                    human(doc.theta_deg),
                    o.converged,
                    o.evaluations,
                    o.diagnostics
                )
            })?;
            if !(gap <= CROSS_CHECK_GAP) {
                return Err(Failure::Verification(format!(
                    "oracle disagrees with solver: relative gap {gap:e}"
                )));
            }
            Ok(())
        }
        Cmd::Verify {
            lemma,
            samples,
            structural_samples,
            oracle_args,
        } => {
            let ids: Vec<&str> = if lemma == "all" {
                LEMMA_IDS.to_vec()
            } else if LEMMA_IDS.contains(&lemma.as_str()) {
                vec![lemma.as_str()]
            } else {
                return Err(anyhow!(
                    "unknown lemma '{lemma}' (expected all or one of {})",
                    LEMMA_IDS.join(", ")
                )
                .into());
            };
            let reports: Vec<_> = ids
                .iter()
                .map(|id| {
                    let n = if *id == "structural" && lemma == "all" {
                        *structural_samples
                    } else {
                        *samples
                    };
                    run_lemma(id, n, cli.seed, oracle_args.config()).expect("known lemma id")
                })
                .collect();
            let failed: usize = reports.iter().map(|r| r.failures).sum();
            let value = serde_json::to_value(&reports).context("serializing reports")?;
            emit(
                cli,
                started,
                "verify",
                serde_json::json!({ "reports": value }),
                || {
                    let mut s = format!(
                        "{:<36} {:>8} {:>8} {:>14}\n",
                        "check", "samples", "failures", "worst margin"
                    );
                    for r in &reports {
                        s += &format!(
                            "{:<36} {:>8} {:>8} {:>14.6e}\n",
                            r.lemma_id, r.samples, r.failures, r.worst_margin
                        );
                        for (k, n) in &r.tally {
                            s += &format!("    {k:<12} {n}\n");
                        }
                        for d in r.details.iter().take(5) {
                            s += &format!("    {d}\n");
                        }
                    }
                    s
                },
            )?;
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} failing samples")));
            }
            Ok(())
        }
        Cmd::PaperTable => {
            let rows = reference_rows(cli.tolerance)?;
            let bad = rows.iter().filter(|r| !r.passed()).count();
            let value = serde_json::json!({
                "rows": rows.iter().map(|r| serde_json::json!({
                    "label": r.label,
                    "computed": round_sig(r.computed, 12),
                    "expected": r.expected,
                    "tolerance": r.tolerance,
                    "unit": r.unit,
                    "pass": r.passed(),
                })).collect::<Vec<_>>()
            });
            emit(cli, started, "paper-table", value, || {
                let mut s = format!(
                    "{:<24} {:>16} {:>14} {:>10} {:>10}  status\n",
                    "quantity", "computed", "expected", "|diff|", "tol"
                );
                for r in &rows {
                    s += &format!(
                        "{:<24} {:>16.9} {:>14} {:>10.2e} {:>10.1e}  {}\n",
                        format!("{} {}", r.label, r.unit).trim_end(),
                        r.computed,
                        r.expected,
                        r.diff(),
                        r.tolerance,
                        if r.passed() { "PASS" } else { "FAIL" }
                    );
                }
                s
            })?;
            if bad > 0 {
                return Err(Failure::Verification(format!(
                    "{bad} of {} rows outside tolerance",
                    rows.len()
                )));
            }
            Ok(())
        }
        Cmd::Sweep { grid, out, svg } => {
            if *grid == 0 {
                return Err(anyhow!("--grid must be positive").into());
            }
            let tol = tolerance(cli)?;
            let cells = sweep_min_perimeter(*grid, tol);
            if let Some(p) = svg {
                write_out(p, &phase_map_svg(&cells, *grid))?;
            }
            let mut table = String::from("alpha_deg\tbeta_deg\twinner_type\twinner\toptimum\n");
            for c in &cells {
                table += &format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    round_sig(c.alpha_deg, 12),
                    round_sig(c.beta_deg, 12),
                    c.winner_type,
                    c.winner,
                    round_sig(c.optimum, 12)
                );
            }
            if let Some(p) = out {
                write_out(p, &table)?;
            }
            let mut counts = std::collections::BTreeMap::new();
            for c in &cells {
                *counts.entry(c.winner_type.clone()).or_insert(0usize) += 1;
            }
            let value = serde_json::json!({ "grid": grid, "cells": cells.len(), "counts": counts });
            emit(cli, started, "sweep", value, || {
                if out.is_some() {
                    let mut s = format!("{} cells\n", cells.len());
                    for (k, n) in &counts {
                        s += &format!("  {k:<8} {n}\n");
                    }
                    s
                } else {
                    table.clone()
                }
            })?;
            Ok(())
        }
        Cmd::Render {
            input,
            problem,
            kinds,
            scale,
            out,
        } => {
            let tol = tolerance(cli)?;
            let t = parse_input(input)?;
            let mut scene = Scene::new(*scale);
            scene.add(&t, "input", None, Role::Input);
            if let Some(p) = problem {
                let problem = parse_problem(p)?;
                let res = solve(&t, problem, tol)?;
                let wanted: Option<Vec<CandidateKind>> = match kinds {
                    None => None,
                    Some(k) => Some(
                        k.split(',')
                            .map(|s| {
                                CandidateKind::parse(s.trim())
                                    .ok_or_else(|| anyhow!("unknown candidate kind '{s}'"))
                            })
                            .collect::<Result<_>>()?,
                    ),
                };
                let winner_kind = res.winner().kind;
                for c in res.table.iter().filter(|c| c.valid) {
                    if wanted.as_ref().is_some_and(|w| !w.contains(&c.kind)) {
                        continue;
                    }
                    let role = if c.kind == winner_kind && c.metric(problem.metric()) == res.optimum
                    {
                        Role::Winner
                    } else {
                        Role::Candidate
                    };
                    if let Some(tri) = &c.triangle {
                        scene.add(tri, c.kind.name(), Some(c.metric(problem.metric())), role);
                    }
                }
            } else if kinds.is_some() {
                return Err(anyhow!("--kinds needs --problem").into());
            }
            let svg = scene.render();
            match out {
                Some(p) => write_out(p, &svg)?,
                None => print!("{svg}"),
            }
            Ok(())
        }
    }
}

fn solve_text(r: &SolveReport, gap: Option<f64>) -> String {
    let mut s = format!("problem    {}\n", r.problem);
    for w in &r.winners {
        s += &format!("winner     {}\n", w.kind);
    }
    s += &format!("optimum    {}\n", human(r.optimum));
    if let Some(w) = r.winners.first() {
        s += &format!("shares side and angle: {}\n", w.shares_side_and_angle);
    }
    if let (Some(o), Some(g)) = (&r.oracle, gap) {
        s += &format!(
            "oracle     {} (gap {:.3e}, gamma {} deg, theta {} deg, converged {})\n",
            human(o.value),
            g,
            human(o.gamma_deg),
            human(o.theta_deg),
            o.converged
        );
    }
    s += &format!(
        "\n{:<20} {:>6} {:>6} {:>12} {:>12}\n",
        "candidate", "exists", "valid", "area", "perimeter"
    );
    for c in &r.candidates {
        s += &format!(
            "{:<20} {:>6} {:>6} {:>12} {:>12}\n",
            c.kind,
            c.exists,
            c.valid,
            c.area.map_or("-".into(), human),
            c.perimeter.map_or("-".into(), human)
        );
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
