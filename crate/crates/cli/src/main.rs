//! `cofactor`: rank, closure and motion queries on graphs and frameworks,
//! randomized verification suites, and projective transformations.
//!
//! Every command builds a JSON report. With `--json` the report is printed
//! as is; otherwise a short human-readable summary is printed. Exit status
//! is 0 on success, 1 when a verification fails and 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cofactor_core::cofactor::{dof, is_motion, nontrivial_motion_basis, PinTriple};
use cofactor_core::graph::EdgeSet;
use cofactor_core::io::{
    framework_to_json, graph_to_json, mat3_to_json, motion_to_json, parse_edge_list,
    parse_framework, parse_graph, parse_mat3, parse_motion, parse_points4, points_to_json,
};
use cofactor_core::projective::{
    apply_projective, convert_motion_pipeline, four_point_projective_map, four_point_targets,
};
use cofactor_core::suites::{default_trials, run_suite, SuiteReport, SUITES};
use cofactor_core::{Error, Framework, GenericMatroid};

#[derive(Parser, Debug)]
#[command(
    name = "cofactor",
    version,
    about = "Generic C^1_2-cofactor matroid toolkit"
)]
struct Cli {
    /// Master seed for generic sampling and randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print the full JSON report instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generic rank, independence, rigidity and degrees of freedom of a graph.
    Rank { graph: PathBuf },
    /// Closure of an edge set in the generic matroid on K_n.
    Closure {
        graph: PathBuf,
        /// Edges as `u-v,u-v,...`; defaults to the edges of the graph.
        #[arg(long)]
        edges: Option<String>,
    },
    /// Degrees of freedom and a basis of pinned nontrivial motions.
    Motions {
        framework: PathBuf,
        /// Pinned vertices `a,b,c`.
        #[arg(long, value_delimiter = ',', required = true)]
        pins: Vec<usize>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Trials per suite; each suite has its own default.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Projective transformations of frameworks and motions.
    #[command(subcommand)]
    Projective(ProjectiveCommand),
}

#[derive(Subcommand, Debug)]
enum ProjectiveCommand {
    /// Map sending four points to (1,0), (0,0), (0,1), (1,1).
    Map4 { points: PathBuf },
    /// Apply a 3x3 matrix to a framework.
    Apply { matrix: PathBuf, framework: PathBuf },
    /// Carry a motion of a framework to its image under a matrix.
    Convert {
        framework: PathBuf,
        matrix: PathBuf,
        motion: PathBuf,
    },
}

/// Failure before any result was produced.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    report: Value,
    summary: Vec<String>,
    pass: bool,
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn run_report(
    command: &str,
    inputs: Value,
    results: Value,
    certificates: Value,
    pass: Option<bool>,
) -> Value {
    let mut report = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "certificates": certificates,
    });
    if let Some(p) = pass {
        report["pass"] = json!(p);
    }
    report
}

fn cmd_rank(path: &Path, seed: u64) -> Result<Outcome, InputError> {
    let g = parse_graph(&read(path)?)?;
    let n = g.n();
    let m = GenericMatroid::new(n, seed);
    let rank = m.rank(g.edges());
    let full = if n >= 3 { 3 * n - 6 } else { 0 };
    let rigid = n < 3 || rank == full;
    let dof = full - rank.min(full);
    let independent = rank == g.edge_count();
    let results = json!({
        "rank": rank,
        "per_seed_rank": m.rank_per_seed(g.edges()),
        "edges": g.edge_count(),
        "independent": independent,
        "rigid": rigid,
        "minimally_rigid": rigid && independent,
        "dof": dof,
        "redundant_edges": g.edge_count() - rank,
    });
    Ok(Outcome {
        summary: vec![
            format!("n = {n}, |E| = {}", g.edge_count()),
            format!("rank = {rank}"),
            format!("independent = {independent}"),
            format!("rigid = {rigid}"),
            format!("dof = {dof}"),
        ],
        report: run_report(
            "rank",
            json!({ "graph": graph_to_json(&g) }),
            results,
            json!(m.certificate()),
            None,
        ),
        pass: true,
    })
}

fn cmd_closure(path: &Path, edges: Option<&str>, seed: u64) -> Result<Outcome, InputError> {
    let g = parse_graph(&read(path)?)?;
    let f: EdgeSet = match edges {
        Some(s) => {
            let list = parse_edge_list(s)?;
            for e in &list {
                g.check_vertex(e.v())?;
            }
            list.into_iter().collect()
        }
        None => g.edges().clone(),
    };
    let m = GenericMatroid::new(g.n(), seed);
    let cl = m.closure(&f);
    let list: Vec<[usize; 2]> = cl.iter().map(|e| e.endpoints()).collect();
    let shown: Vec<String> = cl.iter().map(ToString::to_string).collect();
    Ok(Outcome {
        summary: vec![
            format!("rank = {}", m.rank(&f)),
            format!("closure ({} edges): {}", cl.len(), shown.join(" ")),
        ],
        report: run_report(
            "closure",
            json!({ "n": g.n(), "edges": f.iter().map(|e| e.endpoints()).collect::<Vec<_>>() }),
            json!({ "closure": list, "size": cl.len(), "rank": m.rank(&f) }),
            json!(m.certificate()),
            None,
        ),
        pass: true,
    })
}

fn cmd_motions(path: &Path, pins: &[usize], seed: u64) -> Result<Outcome, InputError> {
    let &[a, b, c] = pins else {
        return Err(InputError(format!(
            "--pins needs exactly three vertices, got {}",
            pins.len()
        )));
    };
    let f: Framework = parse_framework(&read(path)?)?;
    let pins = PinTriple::new(a, b, c);
    let d = dof(&f)?;
    let basis = nontrivial_motion_basis(&f, pins)?;
    let verified = basis
        .iter()
        .map(|q| is_motion(&f, q))
        .collect::<Result<Vec<_>, _>>()?;
    let all_verified = verified.iter().all(|&b| b);
    let summary = std::iter::once(format!("dof = {d}"))
        .chain(std::iter::once(format!("pinned motions: {}", basis.len())))
        .chain(
            basis
                .iter()
                .enumerate()
                .map(|(i, q)| format!("motion {i}: {}", motion_to_json(q))),
        )
        .collect();
    Ok(Outcome {
        summary,
        report: run_report(
            "motions",
            json!({ "framework": framework_to_json(&f), "pins": [pins.a, pins.b, pins.c] }),
            json!({
                "dof": d,
                "basis": basis.iter().map(motion_to_json).collect::<Vec<_>>(),
                "motions_verified": all_verified,
            }),
            json!({ "seed": seed, "exact": true }),
            Some(all_verified),
        ),
        pass: all_verified,
    })
}

fn cmd_verify(suite: &str, trials: Option<usize>, seed: u64) -> Result<Outcome, InputError> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(InputError(format!(
            "unknown suite {suite:?}; expected one of: all, {}",
            SUITES.join(", ")
        )));
    };
    let reports: Vec<SuiteReport> = names
        .iter()
        .map(|s| run_suite(s, trials.unwrap_or_else(|| default_trials(s)), seed))
        .collect::<Result<_, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let summary = reports
        .iter()
        .map(|r| {
            format!(
                "{:<22} {} ({} trials, {} checks, {} failures)",
                r.suite,
                if r.pass { "pass" } else { "FAIL" },
                r.trials,
                r.checks,
                r.failures
            )
        })
        .collect();
    Ok(Outcome {
        summary,
        report: run_report(
            "verify",
            json!({ "suite": suite, "trials": trials, "seed": seed }),
            json!(reports),
            json!({ "seed": seed, "trial_rng": "ChaCha8, stream = trial index" }),
            Some(pass),
        ),
        pass,
    })
}

fn cmd_projective(sub: &ProjectiveCommand, seed: u64) -> Result<Outcome, InputError> {
    let certificates = json!({ "seed": seed, "exact": true });
    match sub {
        ProjectiveCommand::Map4 { points } => {
            let src = parse_points4(&read(points)?)?;
            let m = four_point_projective_map(&src)?;
            let g = cofactor_core::Graph::empty(4);
            let image = apply_projective(&m, &Framework::new(g, src.to_vec())?)?;
            let ok = image.coords() == four_point_targets();
            Ok(Outcome {
                summary: vec![
                    format!("matrix = {}", mat3_to_json(&m)),
                    format!("targets reached = {ok}"),
                ],
                report: run_report(
                    "projective map4",
                    json!({ "points": points_to_json(&src) }),
                    json!({ "matrix": mat3_to_json(&m), "images": points_to_json(image.coords()), "targets_reached": ok }),
                    certificates,
                    Some(ok),
                ),
                pass: ok,
            })
        }
        ProjectiveCommand::Apply { matrix, framework } => {
            let m = parse_mat3(&read(matrix)?)?;
            let f = parse_framework(&read(framework)?)?;
            let image = apply_projective(&m, &f)?;
            let back = apply_projective(&m.inverse()?, &image)?;
            let ok = back == f;
            Ok(Outcome {
                summary: vec![
                    format!("image = {}", framework_to_json(&image)),
                    format!("round trip = {ok}"),
                ],
                report: run_report(
                    "projective apply",
                    json!({ "matrix": mat3_to_json(&m), "framework": framework_to_json(&f) }),
                    json!({ "image": framework_to_json(&image), "round_trip": ok }),
                    certificates,
                    Some(ok),
                ),
                pass: ok,
            })
        }
        ProjectiveCommand::Convert {
            framework,
            matrix,
            motion,
        } => {
            let f = parse_framework(&read(framework)?)?;
            let m = parse_mat3(&read(matrix)?)?;
            let q = parse_motion(&read(motion)?)?;
            if q.len() != f.n() {
                return Err(InputError(format!(
                    "motion has {} vertices, framework has {}",
                    q.len(),
                    f.n()
                )));
            }
            let input_is_motion = is_motion(&f, &q)?;
            let image = apply_projective(&m, &f)?;
            let out = convert_motion_pipeline(&f, &image, &m, &q)?;
            let output_is_motion = is_motion(&image, &out)?;
            let ok = input_is_motion == output_is_motion;
            Ok(Outcome {
                summary: vec![
                    format!("motion = {}", motion_to_json(&out)),
                    format!("input is a motion = {input_is_motion}"),
                    format!("output is a motion = {output_is_motion}"),
                ],
                report: run_report(
                    "projective convert",
                    json!({ "framework": framework_to_json(&f), "matrix": mat3_to_json(&m), "motion": motion_to_json(&q) }),
                    json!({
                        "image": framework_to_json(&image),
                        "motion": motion_to_json(&out),
                        "input_is_motion": input_is_motion,
                        "output_is_motion": output_is_motion,
                    }),
                    certificates,
                    Some(ok),
                ),
                pass: ok,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Rank { graph } => cmd_rank(graph, cli.seed),
        Command::Closure { graph, edges } => cmd_closure(graph, edges.as_deref(), cli.seed),
        Command::Motions { framework, pins } => cmd_motions(framework, pins, cli.seed),
        Command::Verify { suite, trials } => cmd_verify(suite, *trials, cli.seed),
        Command::Projective(sub) => cmd_projective(sub, cli.seed),
    };
    match outcome {
        Ok(o) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&o.report).expect("serializable report")
                );
            } else {
                for line in &o.summary {
                    println!("{line}");
                }
            }
            if o.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
