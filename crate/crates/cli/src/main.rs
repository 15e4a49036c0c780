use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclink::cmap::random_cyclic_graph;
use cyclink::format::{parse_diagram_file, parse_graph_file, write_diagram, write_graph};
use cyclink::invariants::{f_expansion, f_recursive, InvariantReport, MAX_ENUMERATION};
use cyclink::medial::{medial, tait_graph};
use cyclink::suite::{self, SuiteConfig};
use cyclink::{SignedCyclicGraph, VirtualDiagram};

#[derive(Parser, Debug)]
#[command(name = "cyclink", version, about = "Signed cyclic graphs, virtual link diagrams and their bracket polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for state sums and verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Deletion-marking polynomial of a graph, by subset expansion.
    Fpoly {
        graph: PathBuf,
        /// Also run the edge recursion and require agreement.
        #[arg(long)]
        recursive: bool,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION as u64))]
        max_edges: u64,
    },
    /// Medial diagram of a graph, with the edge-to-crossing map as comments.
    Medial { graph: PathBuf },
    /// Three-variable bracket of a diagram.
    Bracket {
        diagram: PathBuf,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION as u64))]
        max_crossings: u64,
        /// Report elapsed milliseconds in JSON output.
        #[arg(long)]
        timed: bool,
    },
    /// Jones polynomial of a diagram.
    Jones {
        diagram: PathBuf,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION as u64))]
        max_crossings: u64,
        #[arg(long)]
        timed: bool,
    },
    /// Checkerboard coloring of the faces, or "not colorable".
    Checkerboard { diagram: PathBuf },
    /// Tait graph of the black faces.
    Tait {
        diagram: PathBuf,
        /// Use the complementary coloring.
        #[arg(long)]
        complement: bool,
    },
    /// Replace a crossing by its virtualization.
    Virtualize { diagram: PathBuf, crossing: usize },
    /// Exchange over and under at a crossing.
    Switch { diagram: PathBuf, crossing: usize },
    /// Partial dual of a graph at one edge.
    Pdual { graph: PathBuf, edge: usize },
    /// Run every identity and property check.
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(0..=5))]
        max_edges: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=4))]
        max_vertices: u64,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        /// Number of seeded random graphs.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(0..=16))]
        random_max_edges: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(0..=3))]
        max_crossings: u64,
    },
    /// Seeded random graph.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        vertices: u64,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability that an edge is positive.
        #[arg(long, default_value_t = 0.5)]
        sign_bias: f64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::input(e)
    }
}

type Outcome = Result<String, Failure>;

fn load_graph(path: &PathBuf) -> Result<SignedCyclicGraph, Failure> {
    parse_graph_file(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &PathBuf) -> Result<VirtualDiagram, Failure> {
    parse_diagram_file(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn render(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> serde_json::Value) -> String {
    match format {
        Format::Text => text(),
        Format::Json => format!("{}\n", value()),
    }
}

fn check_limit(count: usize, limit: u64, what: &str) -> Result<(), Failure> {
    if count as u64 > limit {
        return Err(Failure::input(format!("{count} {what} exceeds the limit of {limit}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Fpoly {
            graph,
            recursive,
            max_edges,
        } => {
            let g = load_graph(&graph)?;
            check_limit(g.edge_count(), max_edges, "edges")?;
            let expansion = f_expansion(&g);
            let rec = recursive.then(|| f_recursive(&g));
            if let Some(r) = &rec {
                if *r != expansion {
                    return Err(Failure {
                        code: 3,
                        message: format!("expansion {expansion} differs from recursion {r}"),
                    });
                }
            }
            Ok(render(
                format,
                || format!("{expansion}\n"),
                || {
                    let mut v = json!({ "fpoly": expansion.to_json() });
                    if rec.is_some() {
                        v["recursive_agrees"] = json!(true);
                    }
                    v
                },
            ))
        }
        Command::Medial { graph } => {
            let g = load_graph(&graph)?;
            let (d, map) = medial(&g);
            let edges: Vec<_> = (0..g.edge_count())
                .map(|e| (e, map.crossing_of(e), g.sign(e).symbol()))
                .collect();
            Ok(render(
                format,
                || {
                    let mut out = write_diagram(&d);
                    for (e, c, s) in &edges {
                        out.push_str(&format!("# edge {e} ({s}) -> crossing {c}\n"));
                    }
                    out
                },
                || {
                    json!({
                        "diagram": write_diagram(&d),
                        "map": edges.iter().map(|(e, c, s)| json!({"edge": e, "crossing": c, "sign": s.to_string()})).collect::<Vec<_>>(),
                    })
                },
            ))
        }
        Command::Bracket {
            diagram,
            max_crossings,
            timed,
        } => {
            let d = load_diagram(&diagram)?;
            check_limit(d.crossing_count(), max_crossings, "crossings")?;
            let report = InvariantReport::compute(&d, timed);
            Ok(render(format, || format!("{}\n", report.bracket), || report.to_json()))
        }
        Command::Jones {
            diagram,
            max_crossings,
            timed,
        } => {
            let d = load_diagram(&diagram)?;
            check_limit(d.crossing_count(), max_crossings, "crossings")?;
            let report = InvariantReport::compute(&d, timed);
            Ok(render(format, || format!("{}\n", report.jones), || report.to_json()))
        }
        Command::Checkerboard { diagram } => {
            let d = load_diagram(&diagram)?;
            let faces = d.faces();
            let coloring = d.checkerboard_coloring();
            Ok(render(
                format,
                || match &coloring {
                    None => "not colorable\n".to_string(),
                    Some((faces, c)) => {
                        let mut out = format!("colorable\ngenus {}\n", faces.genus());
                        for (i, (face, black)) in faces.faces.iter().zip(&c.black).enumerate() {
                            let ports: Vec<String> = face.iter().map(|p| p.to_string()).collect();
                            let color = if *black { "black" } else { "white" };
                            out.push_str(&format!("face {i} {color}: {}\n", ports.join(" ")));
                        }
                        if faces.free_loops > 0 {
                            out.push_str(&format!("free loops {}\n", faces.free_loops));
                        }
                        out
                    }
                },
                || {
                    let face_list = |black: Option<&Vec<bool>>| {
                        faces
                            .faces
                            .iter()
                            .enumerate()
                            .map(|(i, f)| match black {
                                Some(b) => json!({"ports": f, "black": b[i]}),
                                None => json!({"ports": f}),
                            })
                            .collect::<Vec<_>>()
                    };
                    json!({
                        "colorable": coloring.is_some(),
                        "genus": faces.genus(),
                        "free_loops": faces.free_loops,
                        "faces": face_list(coloring.as_ref().map(|(_, c)| &c.black)),
                    })
                },
            ))
        }
        Command::Tait { diagram, complement } => {
            let d = load_diagram(&diagram)?;
            let Some((faces, coloring)) = d.checkerboard_coloring() else {
                return Err(Failure {
                    code: 4,
                    message: format!("{}: diagram is not checkerboard colorable", diagram.display()),
                });
            };
            let coloring = if complement { coloring.complement() } else { coloring };
            let g = tait_graph(&d, &faces, &coloring).map_err(|e| Failure::input(anyhow!(e)))?;
            Ok(render(format, || write_graph(&g), || json!({ "graph": write_graph(&g) })))
        }
        Command::Virtualize { diagram, crossing } => {
            let d = load_diagram(&diagram)?.virtualize(crossing).map_err(Failure::input)?;
            Ok(render(format, || write_diagram(&d), || json!({ "diagram": write_diagram(&d) })))
        }
        Command::Switch { diagram, crossing } => {
            let d = load_diagram(&diagram)?.switch_crossing(crossing).map_err(Failure::input)?;
            Ok(render(format, || write_diagram(&d), || json!({ "diagram": write_diagram(&d) })))
        }
        Command::Pdual { graph, edge } => {
            let g = load_graph(&graph)?.partial_dual_edge(edge).map_err(Failure::input)?;
            Ok(render(format, || write_graph(&g), || json!({ "graph": write_graph(&g) })))
        }
        Command::Verify {
            max_edges,
            max_vertices,
            seed,
            random,
            random_max_edges,
            max_crossings,
        } => {
            let cfg = SuiteConfig {
                max_edges: max_edges as usize,
                max_vertices: max_vertices as usize,
                random_count: random,
                random_max_edges: random_max_edges as usize,
                seed,
                max_crossings: max_crossings as usize,
                ..SuiteConfig::default()
            };
            let results = suite::run(&cfg);
            let all_passed = results.iter().all(|r| r.passed());
            let out = render(
                format,
                || results.iter().map(|r| format!("{r}\n")).collect(),
                || json!({ "passed": all_passed, "checks": results.iter().map(|r| r.to_json()).collect::<Vec<_>>() }),
            );
            if all_passed {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure {
                    code: 3,
                    message: "verification failed".into(),
                })
            }
        }
        Command::Gen {
            vertices,
            edges,
            seed,
            sign_bias,
        } => {
            if !(0.0..=1.0).contains(&sign_bias) {
                return Err(Failure {
                    code: 1,
                    message: format!("--sign-bias must lie in [0, 1], got {sign_bias}"),
                });
            }
            check_limit(edges, 64, "edges")?;
            let g = random_cyclic_graph(vertices as usize, edges, sign_bias, seed);
            Ok(render(format, || write_graph(&g), || json!({ "graph": write_graph(&g) })))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
