use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use popkit_core::{
    canonical_example, convexify_by_flips, find_pockets, pocket_flip, pocket_flipturn, pop,
    popturn, AlternatingSpec, CanonicalKind, ConvexifyOutcome, Execution, FlipMode, PocketStrategy, Polygon,
    Rational, SearchConfig, SearchStatus, SignVector, DEFAULT_FLIP_CAP,
};
use serde::Serialize;

use crate::document::PolygonDocument;
use crate::server;
use crate::svg::{render_strip, render_svg, SvgOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "popkit", version, about = "Exact pop, popturn and pocket flip experiments on polygons")]
struct Cli {
    /// Read the input document from FILE instead of stdin.
    #[arg(short, long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to FILE instead of stdout.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a polygon document.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Apply one operation to the input polygon.
    Apply {
        #[command(subcommand)]
        op: ApplyOp,
    },
    /// Print the classification report of the input polygon.
    Check,
    /// List the pockets of a simple input polygon.
    Pockets,
    /// Flip pockets until the polygon is convex.
    Convexify {
        #[arg(long, value_enum, default_value_t = ModeArg::Flip)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::First)]
        strategy: StrategyArg,
        /// Seed for `--strategy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_FLIP_CAP)]
        cap: usize,
    },
    /// Breadth-first search for a shortest convexifying pop sequence.
    Search {
        #[arg(long, default_value_t = 8)]
        max_depth: usize,
        #[arg(long, default_value_t = popkit_core::search::DEFAULT_BIT_LIMIT)]
        bit_limit: u64,
        /// Drop states in which two non-adjacent vertices coincide.
        #[arg(long)]
        forbid_coincident: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Classify every sign vector of A(x, y, sigma).
    FamilySearch {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        sequential: bool,
    },
    /// Render the input polygon as SVG.
    Render {
        #[arg(long)]
        no_axes: bool,
        #[arg(long)]
        no_labels: bool,
        #[arg(long, default_value_t = 400)]
        size: u32,
        /// Also render the result of popping these vertices in turn, one
        /// panel per step.
        #[arg(long, value_delimiter = ',')]
        pops: Vec<usize>,
    },
    /// Run the local HTTP service.
    Serve {
        /// Defaults to $POPKIT_PORT, then 8765.
        #[arg(long)]
        port: Option<u16>,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// A(x, y, sigma) from explicit parameters.
    Alternating {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Signs as a string over {+,-}, e.g. ++---+.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// The simple example family member.
    P1 {
        #[arg(long)]
        k: usize,
    },
    /// The self-intersecting example family member.
    P2 {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ApplyOp {
    Pop {
        #[arg(long)]
        vertex: usize,
    },
    Popturn {
        #[arg(long)]
        vertex: usize,
    },
    Flip {
        /// Index into the `pockets` listing.
        #[arg(long)]
        pocket: usize,
    },
    Flipturn {
        #[arg(long)]
        pocket: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Flip,
    Flipturn,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    First,
    LargestLid,
    Random,
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Validation(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Validation(_) => EXIT_VALIDATION,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Validation(m) => m,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

struct Io<'a> {
    input: Option<PathBuf>,
    output: Option<PathBuf>,
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_document(&mut self) -> Result<PolygonDocument, CliError> {
        let mut bytes = Vec::new();
        match &self.input {
            Some(path) => {
                bytes = fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            None => {
                self.stdin.read_to_end(&mut bytes).map_err(|e| CliError::Io(e.to_string()))?;
            }
        }
        PolygonDocument::parse(&bytes).map_err(invalid)
    }

    fn read_polygon(&mut self) -> Result<(Polygon, PolygonDocument), CliError> {
        let doc = self.read_document()?;
        let polygon = doc.to_polygon().map_err(invalid)?;
        Ok((polygon, doc))
    }

    fn write(&mut self, bytes: &[u8]) -> Result<(), CliError> {
        match &self.output {
            Some(path) => fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => self.stdout.write_all(bytes).map_err(|e| CliError::Io(e.to_string())),
        }
    }

    fn write_json(&mut self, value: &impl Serialize) -> Result<(), CliError> {
        let mut bytes = serde_json::to_vec_pretty(value).expect("report serializes");
        bytes.push(b'\n');
        self.write(&bytes)
    }

    fn note(&mut self, line: &str) {
        let _ = writeln!(self.stderr, "{line}");
    }
}

fn parse_rationals(list: &str) -> Result<Vec<Rational>, CliError> {
    list.split(',').map(|t| t.trim().parse::<Rational>().map_err(invalid)).collect()
}

/// Run the command line `args` (program name first) and return the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { input: cli.input, output: cli.output, stdin, stdout, stderr };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            io.note(&format!("error: {}", e.message()));
            e.code()
        }
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Gen { kind } => {
            let (spec, name) = match kind {
                GenKind::Alternating { x, y, sigma } => {
                    let signs: SignVector = sigma.parse().map_err(invalid)?;
                    let spec = AlternatingSpec::new(parse_rationals(&x)?, parse_rationals(&y)?, signs).map_err(invalid)?;
                    (spec, format!("A(x={x}, y={y}, sigma={sigma})"))
                }
                GenKind::P1 { k } => (canonical_example(CanonicalKind::P1, k).map_err(invalid)?, format!("P1 k={k}")),
                GenKind::P2 { k } => (canonical_example(CanonicalKind::P2, k).map_err(invalid)?, format!("P2 k={k}")),
            };
            let doc = PolygonDocument::from_polygon(&spec.build()).named(name, "popkit gen");
            io.write(&doc.encode())?;
            Ok(EXIT_OK)
        }
        Command::Apply { op } => {
            let (polygon, doc) = io.read_polygon()?;
            let result = match op {
                ApplyOp::Pop { vertex } => pop(&polygon, vertex),
                ApplyOp::Popturn { vertex } => popturn(&polygon, vertex),
                ApplyOp::Flip { pocket } | ApplyOp::Flipturn { pocket } => {
                    let pockets = find_pockets(&polygon).map_err(invalid)?;
                    let pk = pockets.get(pocket).ok_or_else(|| {
                        invalid(format!("pocket {pocket} out of range, polygon has {} pockets", pockets.len()))
                    })?;
                    if matches!(op, ApplyOp::Flip { .. }) {
                        pocket_flip(&polygon, pk)
                    } else {
                        pocket_flipturn(&polygon, pk)
                    }
                }
            }
            .map_err(invalid)?;
            let out = PolygonDocument::from_polygon(&result).with_metadata(doc.metadata);
            io.write(&out.encode())?;
            Ok(EXIT_OK)
        }
        Command::Check => {
            let (polygon, _) = io.read_polygon()?;
            io.write_json(&polygon.classify())?;
            Ok(EXIT_OK)
        }
        Command::Pockets => {
            let (polygon, _) = io.read_polygon()?;
            let pockets = find_pockets(&polygon).map_err(invalid)?;
            io.write_json(&serde_json::json!({ "pockets": pockets }))?;
            Ok(EXIT_OK)
        }
        Command::Convexify { mode, strategy, seed, cap } => {
            let (polygon, doc) = io.read_polygon()?;
            let mode = match mode {
                ModeArg::Flip => FlipMode::Flip,
                ModeArg::Flipturn => FlipMode::Flipturn,
            };
            let strategy = match strategy {
                StrategyArg::First => PocketStrategy::First,
                StrategyArg::LargestLid => PocketStrategy::LargestLid,
                StrategyArg::Random => PocketStrategy::SeededRandom(seed),
            };
            let outcome = convexify_by_flips(&polygon, mode, strategy, cap).map_err(invalid)?;
            let out = PolygonDocument::from_polygon(outcome.polygon()).with_metadata(doc.metadata);
            io.write(&out.encode())?;
            match outcome {
                ConvexifyOutcome::Convex { operations, .. } => {
                    io.note(&format!("convex after {operations} operations"));
                    Ok(EXIT_OK)
                }
                ConvexifyOutcome::CapExhausted { operations, .. } => {
                    io.note(&format!("cap exhausted after {operations} operations"));
                    Ok(EXIT_LIMIT)
                }
            }
        }
        Command::Search { max_depth, bit_limit, forbid_coincident, sequential } => {
            let (polygon, _) = io.read_polygon()?;
            let config = SearchConfig::new(max_depth)
                .bit_limit(bit_limit)
                .allow_coincident(!forbid_coincident)
                .execution(execution(sequential));
            let outcome = popkit_core::search_pop_convexification(&polygon, &config);
            io.write_json(&outcome)?;
            Ok(match outcome.status {
                SearchStatus::Convexified | SearchStatus::ProvenImpossible => EXIT_OK,
                SearchStatus::DepthExhausted | SearchStatus::BitSizeAborted => EXIT_LIMIT,
            })
        }
        Command::FamilySearch { x, y, sequential } => {
            let report = popkit_core::exhaustive_family_search_with(
                &parse_rationals(&x)?,
                &parse_rationals(&y)?,
                execution(sequential),
            )
            .map_err(invalid)?;
            io.write_json(&report)?;
            Ok(EXIT_OK)
        }
        Command::Render { no_axes, no_labels, size, pops } => {
            let (polygon, _) = io.read_polygon()?;
            let options = SvgOptions { show_axes: !no_axes, label_vertices: !no_labels, canvas_size: size };
            let svg = if pops.is_empty() {
                render_svg(&polygon, &options)
            } else {
                let mut frames = vec![polygon];
                let mut captions = vec!["start".to_string()];
                for &v in &pops {
                    let next = pop(frames.last().expect("nonempty"), v).map_err(invalid)?;
                    frames.push(next);
                    captions.push(format!("pop p{}", v + 1));
                }
                render_strip(&frames, &captions, &options)
            };
            io.write(svg.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Serve { port } => {
            let port = port.unwrap_or_else(server::default_port);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| CliError::Io(e.to_string()))?;
            io.note(&format!("listening on http://127.0.0.1:{port}"));
            runtime
                .block_on(server::serve(port))
                .map_err(|e| CliError::Io(e.to_string()))?;
            Ok(EXIT_OK)
        }
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}
