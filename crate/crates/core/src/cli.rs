//! Command-line driver. All output is line-delimited JSON on stdout; DOT is
//! opt-in. Exit codes: 0 success, 1 criterion failure, 2 usage errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::criteria::{cycle_condition, qef_criterion};
use crate::enumerate::{census, canonical_code, enumerate_mpgs, AlphaPolicy, CensusRow};
use crate::error::Result;
use crate::fixtures::{all_fixture_names, load_fixture, verify_facts, build_unverified};
use crate::io::{
    census_row_json, configuration_json, cycle_verdict_json, parse_graph_json,
    qef_verdict_json, synthesis_json, to_dot, GraphJson,
};
use crate::plane::PlaneGraph;
use crate::qcc::{classify_case, face_configuration};
use crate::synthesis::{build_center_host, build_supergraph};

#[derive(Parser)]
#[command(
    name = "planar-center",
    about = "Decide and certify when a maximal planar graph is the center of a planar graph",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eccentricity profile plus per-face quasi-eccentric configurations.
    Analyze {
        /// Graph JSON file ("-" for stdin).
        input: PathBuf,
    },
    /// Run both criteria (face criterion and cycle condition) with witnesses.
    Check {
        input: PathBuf,
        /// Target eccentricity; defaults to the diameter.
        #[arg(long)]
        alpha: Option<u32>,
    },
    /// Build a certified host graph (or the exact-center planar host).
    Synthesize {
        input: PathBuf,
        #[arg(long)]
        alpha: Option<u32>,
        /// Build the trimmed planar host whose center is exactly the input
        /// (needs alpha >= diameter + 3; defaults to diameter + 3).
        #[arg(long)]
        exact_center: bool,
        /// Use the classical four-vertex universal augmentation instead;
        /// works for any connected graph but loses planarity whenever the
        /// input has a vertex of degree three or more.
        #[arg(long, conflicts_with_all = ["alpha", "exact_center"])]
        augment: bool,
        /// Also write a DOT rendering of the host, input vertices filled.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Enumerate maximal planar graphs of one order, optionally with the
    /// criterion census.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        census: bool,
        /// Also write the census as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include each class's full plane-graph JSON.
        #[arg(long)]
        graphs: bool,
    },
    /// List the built-in example graphs, verify their facts, or dump one.
    Fixtures {
        #[arg(long)]
        verify_all: bool,
        /// Print one fixture's graph JSON.
        #[arg(long)]
        dump: Option<String>,
    },
    /// Re-emit a graph in another format.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

fn read_input(path: &PathBuf) -> Result<GraphJson> {
    let text = if path.as_os_str() == "-" {
        use std::io::Read;
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| crate::error::Error::NotASubgraphMap(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| crate::error::Error::NotASubgraphMap(format!("{}: {e}", path.display())))?
    };
    parse_graph_json(&text)
}

fn load_plane(path: &PathBuf) -> Result<PlaneGraph> {
    read_input(path)?.to_plane()
}

/// Run the CLI; returns the process exit status.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            println!("{}", json!({"error": e.to_string()}));
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze { input } => {
            let pg = load_plane(&input)?;
            let profile = pg.graph().eccentricity_profile()?;
            println!(
                "{}",
                json!({
                    "order": pg.graph().order(),
                    "size": pg.graph().size(),
                    "faces": pg.face_count(),
                    "radius": profile.radius,
                    "diameter": profile.diameter,
                    "eccentricities": profile.eccentricity,
                    "center": profile.center(),
                })
            );
            if pg.is_maximal_plane() && pg.graph().order() >= 4 {
                for face in pg.faces() {
                    let cfg = face_configuration(&pg, &face)?;
                    let label = classify_case(&cfg)?;
                    println!("{}", configuration_json(&cfg, Some(label.kind.name())));
                }
            }
            Ok(0)
        }
        Command::Check { input, alpha } => {
            let pg = load_plane(&input)?;
            let profile = pg.graph().eccentricity_profile()?;
            let alpha = alpha.unwrap_or(profile.diameter);
            let qef = qef_criterion(&pg, alpha)?;
            println!("{}", qef_verdict_json(&qef));
            let cyc = cycle_condition(&pg, None, None)?;
            println!("{}", cycle_verdict_json(&cyc));
            Ok(if qef.pass && cyc.pass { 0 } else { 1 })
        }
        Command::Synthesize { input, alpha, exact_center, augment, dot } => {
            if augment {
                let g = read_input(&input)?.to_graph()?;
                let (host, image) = crate::synthesis::hedetniemi(&g)?;
                let profile = host.eccentricity_profile()?;
                println!(
                    "{}",
                    json!({
                        "construction": "universal-augmentation",
                        "host": GraphJson::from_graph(&host),
                        "embedding": image,
                        "radius": profile.radius,
                        "center": profile.center(),
                        "planarity": "unknown",
                    })
                );
                if let Some(path) = dot {
                    std::fs::write(&path, to_dot(&host, &image)).map_err(|e| {
                        crate::error::Error::NotASubgraphMap(format!("{}: {e}", path.display()))
                    })?;
                }
                return Ok(0);
            }
            let pg = load_plane(&input)?;
            let profile = pg.graph().eccentricity_profile()?;
            let report = if exact_center {
                let alpha = alpha.unwrap_or(profile.diameter + 3);
                build_center_host(&pg, alpha)
            } else {
                let alpha = alpha.unwrap_or(profile.diameter);
                build_supergraph(&pg, alpha)
            };
            match report {
                Ok(r) => {
                    println!("{}", synthesis_json(&r));
                    if let Some(path) = dot {
                        std::fs::write(&path, to_dot(&r.host, r.image())).map_err(|e| {
                            crate::error::Error::NotASubgraphMap(format!("{}: {e}", path.display()))
                        })?;
                    }
                    Ok(0)
                }
                Err(crate::error::Error::CriterionFails { vertex }) => {
                    println!(
                        "{}",
                        json!({"error": "criterion fails", "failing_vertex": vertex})
                    );
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Enumerate { order, census: with_census, csv, graphs } => {
            if with_census || csv.is_some() {
                let rows = census(order, AlphaPolicy::Diameter)?;
                for row in &rows {
                    println!("{}", census_row_json(row));
                }
                let failures = rows.iter().filter(|r| !r.qef_pass).count();
                println!(
                    "{}",
                    json!({"summary": {"order": order, "classes": rows.len(), "qef_failures": failures}})
                );
                if let Some(path) = csv {
                    let mut text = String::from(CensusRow::csv_header());
                    text.push('\n');
                    for row in &rows {
                        text.push_str(&row.csv_line());
                        text.push('\n');
                    }
                    std::fs::write(&path, text).map_err(|e| {
                        crate::error::Error::NotASubgraphMap(format!("{}: {e}", path.display()))
                    })?;
                }
            } else {
                let classes = enumerate_mpgs(order)?;
                for pg in &classes {
                    let mut line = json!({"code": canonical_code(pg).to_string(), "order": order});
                    if graphs {
                        line["graph"] = serde_json::to_value(GraphJson::from_plane(pg))
                            .expect("serializable");
                    }
                    println!("{line}");
                }
                println!("{}", json!({"summary": {"order": order, "classes": classes.len()}}));
            }
            Ok(0)
        }
        Command::Fixtures { verify_all, dump } => {
            if let Some(name) = dump {
                let fx = load_fixture(&name)?;
                let j = match &fx.plane {
                    Some(p) => GraphJson::from_plane(p),
                    None => GraphJson::from_graph(&fx.graph),
                };
                println!("{}", serde_json::to_string(&j).expect("serializable"));
                return Ok(0);
            }
            let mut all_ok = true;
            for name in all_fixture_names() {
                if verify_all {
                    let fx = build_unverified(name)?;
                    let checks = verify_facts(&fx)?;
                    let ok = checks.iter().all(|(_, ok)| *ok);
                    all_ok &= ok;
                    println!(
                        "{}",
                        json!({
                            "fixture": name,
                            "facts": checks.len(),
                            "pass": ok,
                            "failed": checks.iter().filter(|(_, ok)| !ok).map(|(d, _)| d).collect::<Vec<_>>(),
                        })
                    );
                } else {
                    let fx = build_unverified(name)?;
                    println!(
                        "{}",
                        json!({
                            "fixture": name,
                            "order": fx.graph.order(),
                            "size": fx.graph.size(),
                            "description": fx.description,
                        })
                    );
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Export { input, format } => {
            let j = read_input(&input)?;
            match format {
                ExportFormat::Json => {
                    // normalize through the constructors
                    let out = match j.rotations {
                        Some(_) => GraphJson::from_plane(&j.to_plane()?),
                        None => GraphJson::from_graph(&j.to_graph()?),
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
                ExportFormat::Dot => {
                    println!("{}", to_dot(&j.to_graph()?, &[]));
                }
            }
            Ok(0)
        }
    }
}
