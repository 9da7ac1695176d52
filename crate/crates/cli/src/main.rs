//! `great-shadow`: shadow expansion, planarity verdicts, witnesses,
//! drawings, the exhaustive sweep and keyboard routability from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when the answer is negative (not a bipartite
//! cactus, not routable, sweep discrepancies), 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use great_shadow::circuit::{parse_matrix, routability_report, Certificate, Routability};
use great_shadow::embedding::{embed_shadow, render_shadow};
use great_shadow::generators::random_graph;
use great_shadow::io::{parse_graph, parse_graph6_stream};
use great_shadow::oracle::{equivalence_sweep, sweep_graphs, SweepReport};
use great_shadow::recognition::small_shadow_planar;
use great_shadow::shadow::{build, ShadowKind};
use great_shadow::witness::shadow_witness;
use great_shadow::{classify, great_shadow, Graph, Verdict};

#[derive(Parser)]
#[command(name = "great-shadow", version, about = "Great shadow planarity toolkit")]
struct Cli {
    /// Output format: JSON for scripts, or a short human summary.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Bound on brute-force work: sweep order limit, random graph order.
    #[arg(long, global = true)]
    max_size: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Great,
    Small,
    Mycielski,
}

#[derive(Subcommand)]
enum Command {
    /// Print the great shadow, small shadow or Mycielskian of a graph.
    Shadow {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Great)]
        kind: Kind,
    },
    /// Decide whether S(G) is planar, i.e. whether G is a bipartite cactus.
    Check {
        graph: PathBuf,
        /// Decide planarity of the small shadow s(G) instead.
        #[arg(long)]
        small_shadow: bool,
    },
    /// Emit a K3,3 subdivision in S(G) when G is not a bipartite cactus.
    Witness { graph: PathBuf },
    /// Draw S(G) for a bipartite cactus as SVG.
    Draw {
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the rotation system as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check the planarity theorem on every connected graph up to an order.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Check a graph6 stream instead of enumerating.
        #[arg(long)]
        g6: Option<PathBuf>,
        /// Additionally check this many random graphs (uses --seed).
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Routability report for a keyboard matrix file.
    Keyboard {
        matrix: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

/// Input problems map to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, InputError> {
    parse_graph(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Result<(), InputError> {
    fs::write(path, body).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(format: Format, value: &T, summary: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Pretty => println!("{}", summary()),
    }
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::BipartiteCactus { .. } => "bipartite cactus: S(G) is planar",
        Verdict::NotBipartite { .. } => "not bipartite: S(G) is not planar",
        Verdict::NotCactus { .. } => "not a cactus: S(G) is not planar",
    }
}

fn shadow_cmd(cli: &Cli, path: &Path, kind: Kind) -> Outcome {
    let g = read_graph(path)?;
    let kind = match kind {
        Kind::Great => ShadowKind::GreatShadow,
        Kind::Small => ShadowKind::SmallShadow,
        Kind::Mycielski => ShadowKind::Mycielskian,
    };
    let s = build(&g, kind);
    let out = json!({
        "kind": kind,
        "original_order": s.original_order,
        "order": s.graph.order(),
        "size": s.graph.size(),
        "edges": s.graph.edges(),
    });
    emit(cli.format, &out, || {
        format!("{:?}: {} vertices, {} edges", kind, s.graph.order(), s.graph.size())
    });
    Ok(true)
}

fn check_cmd(cli: &Cli, path: &Path, small: bool) -> Outcome {
    let g = read_graph(path)?;
    if small {
        let d = small_shadow_planar(&g)?;
        emit(cli.format, &d, || {
            if d.planar {
                "s(G) is planar".to_string()
            } else {
                format!("s(G) is not planar: {:?}", d.violation)
            }
        });
        return Ok(d.planar);
    }
    let v = classify(&g);
    emit(cli.format, &v, || verdict_name(&v).to_string());
    Ok(v.is_bipartite_cactus())
}

fn witness_cmd(cli: &Cli, path: &Path) -> Outcome {
    let g = read_graph(path)?;
    match shadow_witness(&g)? {
        None => {
            let out = json!({ "witness": null, "reason": "G is a bipartite cactus, S(G) is planar" });
            emit(cli.format, &out, || "no witness: S(G) is planar".to_string());
            Ok(false)
        }
        Some(w) => {
            let valid = w.check(&great_shadow(&g).graph).is_ok();
            let out = json!({ "witness": w, "valid": valid });
            emit(cli.format, &out, || {
                format!("K3,3 in S(G): {:?} | {:?} (valid: {valid})", w.delta1, w.delta2)
            });
            Ok(true)
        }
    }
}

fn draw_cmd(cli: &Cli, path: &Path, out: &Path, json_out: Option<&Path>) -> Outcome {
    let g = read_graph(path)?;
    if !classify(&g).is_bipartite_cactus() {
        eprintln!("S(G) is not planar; run `witness` for a K3,3");
        return Ok(false);
    }
    let drawing = render_shadow(&g)?;
    write(out, &drawing.to_svg())?;
    if let Some(p) = json_out {
        let rs = embed_shadow(&g)?;
        write(p, &serde_json::to_string_pretty(&rs.to_json())?)?;
    }
    let summary = json!({
        "svg": out.display().to_string(),
        "vertices": drawing.positions.len(),
        "edges": drawing.edges.len(),
        "crossings": drawing.crossing_count(),
    });
    emit(cli.format, &summary, || format!("wrote {}", out.display()));
    Ok(true)
}

fn verify_cmd(cli: &Cli, max_n: usize, g6: Option<&Path>, random: usize) -> Outcome {
    let mut report: SweepReport = match g6 {
        Some(p) => sweep_graphs(&parse_graph6_stream(&read(p)?)?),
        None => equivalence_sweep(max_n, cli.max_size.unwrap_or(great_shadow::oracle::DEFAULT_SWEEP_LIMIT))?,
    };
    if random > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        let top = cli.max_size.unwrap_or(12).max(1);
        let graphs: Vec<Graph> = (0..random)
            .map(|_| {
                let n = rng.gen_range(1..=top);
                random_graph(n, rng.gen_range(0.05..0.5), &mut rng)
            })
            .collect();
        let extra = sweep_graphs(&graphs);
        report.graphs_checked += extra.graphs_checked;
        report.discrepancies.extend(extra.discrepancies);
        report.edge_law_violations.extend(extra.edge_law_violations);
    }
    emit(cli.format, &report, || {
        let mut s = String::new();
        for o in &report.per_order {
            s.push_str(&format!(
                "n={}: {} graphs, {} bipartite cacti, {} planar shadows\n",
                o.order, o.graphs, o.bipartite_cacti, o.planar_shadows
            ));
        }
        s.push_str(&format!(
            "{} graphs checked, {} discrepancies",
            report.graphs_checked,
            report.discrepancies.len()
        ));
        s
    });
    Ok(report.is_clean())
}

fn keyboard_cmd(cli: &Cli, path: &Path, out: &Path, svg: Option<&Path>) -> Outcome {
    let k = parse_matrix(&read(path)?)?;
    let report = routability_report(&k)?;
    write(out, &serde_json::to_string_pretty(&report)?)?;
    if let (Some(p), Certificate::Embedding { svg, .. }) = (svg, &report.certificate) {
        write(p, svg)?;
    }
    let routable = report.verdict == Routability::SingleSided;
    emit(cli.format, &json!({ "verdict": report.verdict, "report": out.display().to_string() }), || {
        if routable {
            "routable on a single-sided board".to_string()
        } else {
            "not routable on a single-sided board".to_string()
        }
    });
    Ok(routable)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Shadow { graph, kind } => shadow_cmd(cli, graph, *kind),
        Command::Check { graph, small_shadow } => check_cmd(cli, graph, *small_shadow),
        Command::Witness { graph } => witness_cmd(cli, graph),
        Command::Draw { graph, out, json } => draw_cmd(cli, graph, out, json.as_deref()),
        Command::Verify { max_n, g6, random } => verify_cmd(cli, *max_n, g6.as_deref(), *random),
        Command::Keyboard { matrix, out, svg } => keyboard_cmd(cli, matrix, out, svg.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
