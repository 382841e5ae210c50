use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quadbook::io::bench::{self, Family, Pipeline};
use quadbook::io::format::{parse_edge_list, serialize_edge_list, EmbeddingDocument, ParseError};
use quadbook::io::gen;
use quadbook::io::svg::{render_book_svg, render_cycle_svg};
use quadbook::oracle::{oracle_two_page, OracleError, DEFAULT_N_CAP};
use quadbook::subham::{subham_triconnected, SubhamError};
use quadbook::twopage::{embed_two_page, EmbedError};
use quadbook::{verify_book_embedding, verify_subhamiltonian, Graph};

#[derive(Parser)]
#[command(name = "quadbook", version, about = "Two-page book embeddings of planar graphs with maximum degree four")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Two-page embedding of a connected or disconnected 4-planar graph.
    Embed {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Subhamiltonian cycle of a triconnected 4-planar graph.
    Subham {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Checks an embedding or cycle document against a graph.
    Verify { graph: PathBuf, embedding: PathBuf },
    /// Brute-force search for a two-page embedding.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        cap: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Writes generated graphs as edge lists.
    Gen {
        family: GenFamily,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Levels (prism_stack) or separating triangles (gadget_chain).
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count (random_4planar, enumerate_small).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// File for one graph, directory for enumerate_small.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Arc diagram of an embedding or cycle document.
    Render {
        graph: PathBuf,
        embedding: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// CSV `family,n,m,millis` over increasing sizes.
    Bench {
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pipeline: Option<PipelineArg>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Grid,
    PrismStack,
    GadgetChain,
    Random4planar,
    EnumerateSmall,
    K4,
    Octahedron,
    Cube,
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineArg {
    Embed,
    Subham,
}

/// Exit status with a diagnostic for standard error.
struct Failure {
    code: u8,
    msg: String,
}

const VERIFY_FAILED: u8 = 1;
const BAD_INPUT: u8 = 2;
const INTERNAL: u8 = 3;

fn fail(code: u8, msg: impl ToString) -> Failure {
    Failure { code, msg: msg.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(BAD_INPUT, format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| fail(BAD_INPUT, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    let code = match e {
        ParseError::Mismatch(_) => VERIFY_FAILED,
        _ => BAD_INPUT,
    };
    fail(code, format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn load_doc(path: &Path) -> Result<EmbeddingDocument, Failure> {
    EmbeddingDocument::parse(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn embed_failure(e: EmbedError) -> Failure {
    let code = match e {
        EmbedError::Degree { .. } | EmbedError::NonPlanar => BAD_INPUT,
        EmbedError::Verification(_) => VERIFY_FAILED,
        _ => INTERNAL,
    };
    fail(code, e)
}

fn subham_failure(e: SubhamError) -> Failure {
    let code = match e {
        SubhamError::NotPlanar | SubhamError::DegreeTooHigh(_) | SubhamError::NotSimple | SubhamError::NotTriconnected => {
            BAD_INPUT
        }
        _ => INTERNAL,
    };
    fail(code, e)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| fail(BAD_INPUT, format!("missing --{flag}")))
}

fn generate(family: GenFamily, rows: Option<usize>, cols: Option<usize>, k: Option<usize>, n: Option<usize>, seed: u64) -> Result<Vec<Graph>, Failure> {
    let bad = |e: gen::GenError| fail(BAD_INPUT, e);
    Ok(match family {
        GenFamily::Grid => vec![gen::grid(need(rows, "rows")?, need(cols, "cols")?).map_err(bad)?],
        GenFamily::PrismStack => vec![gen::prism_stack(need(k, "k")?).map_err(bad)?],
        GenFamily::GadgetChain => vec![gen::gadget_chain(need(k, "k")?).map_err(bad)?],
        GenFamily::Random4planar => vec![gen::random_4planar(need(n, "n")?, seed).map_err(bad)?],
        GenFamily::EnumerateSmall => gen::enumerate_small(need(n, "n")?).map_err(bad)?,
        GenFamily::K4 => vec![gen::complete4()],
        GenFamily::Octahedron => vec![gen::octahedron()],
        GenFamily::Cube => vec![gen::cube()],
    })
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Embed { input, out } => {
            let g = load_graph(&input)?;
            let be = embed_two_page(&g).map_err(embed_failure)?;
            write(out.as_deref(), &EmbeddingDocument::from_book(&g, &be).serialize())
        }
        Cmd::Subham { input, out } => {
            let g = load_graph(&input)?;
            let h = subham_triconnected(&g).map_err(subham_failure)?;
            let report = verify_subhamiltonian(&g, &h);
            if !report.pass() {
                return Err(fail(INTERNAL, format!("cycle fails verification: {report}")));
            }
            write(out.as_deref(), &EmbeddingDocument::from_cycle(&h).serialize())
        }
        Cmd::Verify { graph, embedding } => {
            let g = load_graph(&graph)?;
            let doc = load_doc(&embedding)?;
            let report = if doc.cycle.is_some() {
                verify_subhamiltonian(&g, &doc.to_cycle(&g).map_err(|e| parse_failure(&embedding, e))?)
            } else {
                verify_book_embedding(&g, &doc.to_book(&g).map_err(|e| parse_failure(&embedding, e))?)
            };
            if report.pass() {
                println!("ok");
                Ok(())
            } else {
                Err(fail(VERIFY_FAILED, report))
            }
        }
        Cmd::Oracle { graph, cap, out } => {
            let g = load_graph(&graph)?;
            match oracle_two_page(&g, cap) {
                Ok(Some(be)) => write(out.as_deref(), &EmbeddingDocument::from_book(&g, &be).serialize()),
                Ok(None) => Err(fail(VERIFY_FAILED, "no two-page embedding exists")),
                Err(e @ OracleError::TooLarge { .. }) => Err(fail(BAD_INPUT, e)),
            }
        }
        Cmd::Gen { family, rows, cols, k, n, seed, out } => {
            let graphs = generate(family, rows, cols, k, n, seed)?;
            if let GenFamily::EnumerateSmall = family {
                let Some(dir) = out else {
                    let mut text = String::new();
                    for (i, g) in graphs.iter().enumerate() {
                        text.push_str(&format!("# graph {i}\n{}", serialize_edge_list(g)));
                    }
                    return write(None, &text);
                };
                fs::create_dir_all(&dir).map_err(|e| fail(BAD_INPUT, format!("{}: {e}", dir.display())))?;
                for (i, g) in graphs.iter().enumerate() {
                    write(Some(&dir.join(format!("g{i:05}.txt"))), &serialize_edge_list(g))?;
                }
                eprintln!("wrote {} graphs to {}", graphs.len(), dir.display());
                Ok(())
            } else {
                write(out.as_deref(), &serialize_edge_list(&graphs[0]))
            }
        }
        Cmd::Render { graph, embedding, out } => {
            let g = load_graph(&graph)?;
            let doc = load_doc(&embedding)?;
            let svg = if doc.cycle.is_some() {
                render_cycle_svg(&g, &doc.to_cycle(&g).map_err(|e| parse_failure(&embedding, e))?)
            } else {
                render_book_svg(&g, &doc.to_book(&g).map_err(|e| parse_failure(&embedding, e))?)
            };
            write(Some(&out), &svg)
        }
        Cmd::Bench { family, sizes, seed, pipeline, reps } => {
            let pipeline = match pipeline {
                Some(PipelineArg::Embed) => Pipeline::Embed,
                Some(PipelineArg::Subham) => Pipeline::Subham,
                None => family.default_pipeline(),
            };
            let rows = bench::run(family, &sizes, seed, pipeline, reps).map_err(|e| match e {
                bench::BenchError::Gen(e) => fail(BAD_INPUT, e),
                bench::BenchError::Embed { source, .. } => embed_failure(source),
                bench::BenchError::Subham { source, .. } => subham_failure(source),
            })?;
            write(None, &bench::to_csv(&rows))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("quadbook: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
