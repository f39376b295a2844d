use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tricyclic::annular::{render_svg, synthesize_drawing, validate_drawing};
use tricyclic::builder::{extract_build_script, random_pinched_sum, random_safely_buildable, replay};
use tricyclic::decomposition::{decompose_with_budget, recompose};
use tricyclic::oracle::{enumerate_cycles, oracle_is_l_cyclic, oracle_is_weightable, DEFAULT_MAX_CYCLES};
use tricyclic::weighting::{
    find_weak_double_cycle_with_budget, integerize, normalize_zero_one, solve_weighting_with_budget,
    verify_weighting, WeakDoubleCycle, Weighting,
};
use tricyclic::{
    parse_edge_list, to_edge_list, AnnularDrawing, BuildScript, Certificate, DecompositionTree, Digraph, Error,
};

mod report;

#[derive(Parser)]
#[command(name = "tricyclic", version, about = "Digraphs whose directed cycles all have length three")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cycle length used for rings and the oracle.
    #[arg(long, global = true, default_value_t = 3)]
    l: usize,
    /// Give up once this many directed cycles have been listed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CYCLES)]
    max_cycles: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for commands that take several files.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the main artifact here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Report every structural property of one or more edge-list files.
    Check { files: Vec<PathBuf> },
    /// Split into pinched pieces along special arcs.
    Decompose { file: PathBuf },
    /// Extract a build script from a degree-two vertex sequence.
    Build {
        file: PathBuf,
        /// Replay the script and fail unless it rebuilds the input.
        #[arg(long)]
        replay: bool,
    },
    /// Synthesize a 3-annular drawing.
    Draw {
        file: PathBuf,
        /// Also write the drawing as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Find a weighting, or a weak double-cycle when none exists.
    Weight {
        file: PathBuf,
        #[arg(long, conflicts_with = "zero_one")]
        integer: bool,
        #[arg(long)]
        zero_one: bool,
    },
    /// Write a random edge list.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex count, or the largest piece size for pinched sums.
        #[arg(long)]
        n: usize,
        /// Number of pieces for pinched sums.
        #[arg(long, default_value_t = 3)]
        pieces: usize,
    },
    /// List cycles and the brute-force verdicts.
    Oracle { file: PathBuf },
    /// Check a JSON artifact against the digraph it was made for.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Artifact,
        artifact: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Safe,
    Pinched,
}

#[derive(Clone, Copy, ValueEnum)]
enum Artifact {
    Certificate,
    Tree,
    Script,
    Drawing,
    Weighting,
    Obstruction,
}

/// A failed command: exit 1 for a negative verdict, 2 for bad input.
enum Failure {
    Verdict { message: String, artifact: Option<String> },
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidLabels(_)
            | Error::VertexOutOfRange(_)
            | Error::Loop(_)
            | Error::DuplicateArc(..)
            | Error::Io(_)
            | Error::InvalidArgument(_)
            | Error::TooSmall { .. } => Failure::Input(e.to_string()),
            _ => Failure::Verdict { message: e.to_string(), artifact: None },
        }
    }
}

fn verdict(message: impl Into<String>) -> Failure {
    Failure::Verdict { message: message.into(), artifact: None }
}

fn read_graph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let budget = cli.max_cycles;
    match &cli.command {
        Command::Check { files } => {
            if files.is_empty() {
                return Err(Failure::Input("no input files".into()));
            }
            let reports = report::check_all(files, cli.l, budget, cli.jobs)?;
            Ok(match reports.as_slice() {
                [one] => to_json(one),
                many => to_json(&many),
            })
        }
        Command::Decompose { file } => {
            let g = read_graph(file)?;
            Ok(to_json(&decompose_with_budget(&g, budget)?))
        }
        Command::Build { file, replay: check } => {
            let g = read_graph(file)?;
            let script = extract_build_script(&g)?;
            if *check && replay(&script)? != g {
                return Err(verdict("replayed script does not rebuild the input"));
            }
            Ok(to_json(&script))
        }
        Command::Draw { file, svg } => {
            let g = read_graph(file)?;
            let drawing = synthesize_drawing(&g)?;
            if let Err(v) = validate_drawing(&g, &drawing) {
                return Err(verdict(format!("synthesized drawing is invalid: {v}")));
            }
            if let Some(path) = svg {
                write_file(path, &render_svg(&g, &drawing))?;
            }
            Ok(to_json(&drawing))
        }
        Command::Weight { file, integer, zero_one } => weight(&read_graph(file)?, *integer, *zero_one, budget),
        Command::Generate { kind, n, pieces } => {
            let g = match kind {
                Kind::Safe => random_safely_buildable(cli.seed, *n)?,
                Kind::Pinched => random_pinched_sum(cli.seed, *pieces, *n)?,
            };
            Ok(to_edge_list(&g))
        }
        Command::Oracle { file } => {
            let g = read_graph(file)?;
            let cycles = enumerate_cycles(&g, budget)?;
            let cyclic = oracle_is_l_cyclic(&g, cli.l, budget)?;
            Ok(to_json(&json!({
                "cycles": cycles,
                "l": cli.l,
                "l_cyclic": cyclic.holds,
                "witness": cyclic.witness,
                "weightable": oracle_is_weightable(&g, budget)?,
            })))
        }
        Command::Validate { file, kind, artifact } => {
            let g = read_graph(file)?;
            let ok = match kind {
                Artifact::Certificate => read_json::<Certificate>(artifact)?.verify(&g),
                Artifact::Tree => recompose(&read_json::<DecompositionTree>(artifact)?).is_ok_and(|h| h == g),
                Artifact::Script => replay(&read_json::<BuildScript>(artifact)?).is_ok_and(|h| h == g),
                Artifact::Drawing => validate_drawing(&g, &read_json::<AnnularDrawing>(artifact)?).is_ok(),
                Artifact::Weighting => verify_weighting(&g, &read_json::<Weighting>(artifact)?).unwrap_or(false),
                Artifact::Obstruction => read_json::<WeakDoubleCycle>(artifact)?.verify(&g),
            };
            if !ok {
                return Err(verdict("artifact does not validate"));
            }
            Ok(to_json(&json!({ "valid": true })))
        }
    }
}

fn weight(g: &Digraph, integer: bool, zero_one: bool, budget: usize) -> Result<String, Failure> {
    let Some(w) = solve_weighting_with_budget(g, budget)? else {
        let obstruction = find_weak_double_cycle_with_budget(g, budget)?;
        return Err(Failure::Verdict {
            message: "digraph is not weightable".into(),
            artifact: Some(to_json(&obstruction)),
        });
    };
    if !(integer || zero_one) {
        return Ok(to_json(&w));
    }
    let w = integerize(g, &w)?;
    if !zero_one {
        return Ok(to_json(&w));
    }
    Ok(to_json(&normalize_zero_one(g, &w)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let emit = |text: &str| -> Result<(), Failure> {
        match &cli.output {
            Some(path) => write_file(path, text),
            None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Input(e.to_string())),
        }
    };
    let result = run(&cli).and_then(|text| emit(&text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict { message, artifact }) => {
            eprintln!("{message}");
            if let Some(text) = artifact {
                if let Err(Failure::Input(e) | Failure::Verdict { message: e, .. }) = emit(&text) {
                    eprintln!("{e}");
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
