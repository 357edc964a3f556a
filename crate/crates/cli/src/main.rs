//! `cliquevec`: clique vectors, chordal graphs and threshold realizations
//! from the command line.
//!
//! Every subcommand prints human-readable text, or a single JSON document
//! with `--json`. Exit status is 0 on success, 1 when a vector is rejected
//! or a verification finds a counterexample, and 2 on malformed input.

mod render;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cliquevec::threshold::bvector_count;
use cliquevec::transform::parse_integers;
use cliquevec::verify::{verify, Theorem};
use cliquevec::{
    b_to_c, betti_linear_strand, betti_table_full, bvector_to_word, c_to_b, clique_vector_chordal, connectivity_with,
    enumerate_bvectors, format_graph, graph_to_word, is_chordal, parse_graph, realize, validate, word_to_bvector,
    word_to_graph, BVector, CliqueVector, Convention, Error, Graph, GraphFormat, SdWord,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cliquevec", version, about = "Clique vectors of k-connected chordal graphs")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test chordality and print a perfect elimination order.
    Chordal(GraphInput),
    /// Clique vector of a graph.
    Cliques(GraphInput),
    /// Vertex connectivity.
    Connectivity {
        #[command(flatten)]
        input: GraphInput,
        /// Use kappa(K_n) = n - 1 instead of n.
        #[arg(long)]
        classical: bool,
    },
    /// Transform a clique vector into its b-vector.
    C2b {
        /// Comma-separated integers.
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Transform a b-vector back into a clique vector.
    B2c {
        /// Comma-separated integers.
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Decide whether a clique vector belongs to a k-connected chordal graph.
    Validate { vector: String, k: usize },
    /// Build a k-connected threshold graph with the given clique vector.
    Realize {
        vector: String,
        k: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::EdgeList)]
        output_format: OutputFormat,
    },
    /// Convert between SD-words, b-vectors and threshold graphs.
    Word(WordArgs),
    /// List the b-vectors in B(n, d, k).
    Enumerate {
        n: usize,
        d: usize,
        k: usize,
        /// Print only the number of vectors.
        #[arg(long)]
        count: bool,
    },
    /// Graded Betti numbers of the clique complex (linear strand by default).
    Betti {
        #[command(flatten)]
        input: GraphInput,
        /// Compute the whole table.
        #[arg(long)]
        full: bool,
    },
    /// Exhaustively check a theorem on all small labeled graphs.
    Verify {
        /// main, froberg, betti or counting.
        theorem: String,
        /// Largest vertex count (default: 6, or 9 for counting).
        #[arg(long)]
        nmax: Option<usize>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(value_name = "FILE", required_unless_present = "g6", conflicts_with = "g6")]
    file: Option<String>,
    /// Inline graph6 string.
    #[arg(long, value_name = "GRAPH6")]
    g6: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true)))]
struct WordArgs {
    /// An SD-word such as DDDSSDSDDS.
    #[arg(group = "source")]
    word: Option<String>,
    /// Start from a b-vector.
    #[arg(long, group = "source", value_name = "VECTOR")]
    b: Option<String>,
    /// Start from a threshold graph in a file (`-` for stdin).
    #[arg(long, group = "source", value_name = "FILE")]
    graph: Option<String>,
    /// Start from an inline graph6 string.
    #[arg(long, group = "source", value_name = "GRAPH6")]
    g6: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
    #[arg(long, value_enum, default_value_t = OutputFormat::EdgeList)]
    output_format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    EdgeList,
    Graph6,
}

impl From<OutputFormat> for GraphFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::EdgeList => GraphFormat::EdgeList,
            OutputFormat::Graph6 => GraphFormat::Graph6,
        }
    }
}

/// Text and JSON renderings of one result, plus the exit status.
struct Output {
    text: String,
    json: Value,
    status: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, status: 0 }
    }
}

enum Failure {
    /// Malformed input; exit 2.
    Input(String),
    /// A rejection or failed check; exit 1.
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Rejected(_) | Error::Realization(_) | Error::HomologySelfCheck(_) | Error::ThreadPool(_) => {
                Failure::Rejected(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn load_graph(file: Option<&str>, g6: Option<&str>, format: InputFormat) -> Result<Graph, Failure> {
    let (text, format) = match (g6, file) {
        (Some(s), _) => (s.to_string(), InputFormat::Graph6),
        (None, Some(path)) => (read_source(path)?, format),
        (None, None) => return Err(Failure::Input("no graph given".into())),
    };
    let format = match format {
        InputFormat::Auto => GraphFormat::detect(&text),
        InputFormat::EdgeList => GraphFormat::EdgeList,
        InputFormat::Graph6 => GraphFormat::Graph6,
    };
    Ok(parse_graph(&text, format)?)
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Failure> {
        load_graph(self.file.as_deref(), self.g6.as_deref(), self.input_format)
    }
}

fn parse_clique_vector(s: &str) -> Result<CliqueVector, Failure> {
    Ok(s.parse::<CliqueVector>()?)
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Chordal(input) => {
            let g = input.load()?;
            Ok(match is_chordal(&g)? {
                Some(peo) => Output::ok(
                    format!("chordal\nelimination order: {}", render::join(peo.order(), " ")),
                    json!({ "chordal": true, "elimination_order": peo.order() }),
                ),
                None => Output::ok("not chordal".into(), json!({ "chordal": false, "elimination_order": null })),
            })
        }
        Command::Cliques(input) => {
            let g = input.load()?;
            let (c, method) = match is_chordal(&g)? {
                Some(peo) => (clique_vector_chordal(&g, &peo)?, "elimination-order"),
                None => (g.clique_vector_bruteforce()?, "enumeration"),
            };
            Ok(Output::ok(c.to_string(), json!({ "clique_vector": c, "method": method })))
        }
        Command::Connectivity { input, classical } => {
            let g = input.load()?;
            let convention = if classical { Convention::Classical } else { Convention::Inclusive };
            let kappa = connectivity_with(&g, convention)?;
            Ok(Output::ok(kappa.to_string(), json!({ "connectivity": kappa, "convention": convention })))
        }
        Command::C2b { vector } => {
            let c = parse_integers(&vector)?;
            let b = BVector::new(c_to_b(&c))?;
            Ok(Output::ok(b.to_string(), json!({ "b": b })))
        }
        Command::B2c { vector } => {
            let b = parse_integers(&vector)?;
            let c = BVector::new(b_to_c(&b))?;
            Ok(Output::ok(c.to_string(), json!({ "c": c })))
        }
        Command::Validate { vector, k } => {
            let c = parse_clique_vector(&vector)?;
            let v = validate(&c, k);
            Ok(match v.verdict {
                Ok(()) => Output::ok(
                    format!("valid (b = {})", v.b),
                    json!({ "valid": true, "c": c, "k": k, "b": v.b, "reason": null }),
                ),
                Err(reason) => Output {
                    text: format!("invalid (b = {}): {reason}", v.b),
                    json: json!({ "valid": false, "c": c, "k": k, "b": v.b, "reason": reason.to_string() }),
                    status: 1,
                },
            })
        }
        Command::Realize { vector, k, output_format } => {
            let c = parse_clique_vector(&vector)?;
            let r = realize(&c, k)?;
            let graph = format_graph(&r.graph, output_format.into());
            Ok(Output::ok(
                format!("# word {}\n# b = {}\n# connectivity {}\n{}", r.word, r.b, r.connectivity, graph.trim_end()),
                json!({
                    "c": c,
                    "k": k,
                    "b": r.b,
                    "word": r.word,
                    "connectivity": r.connectivity,
                    "graph": graph,
                    "graph6": format_graph(&r.graph, GraphFormat::Graph6),
                }),
            ))
        }
        Command::Word(args) => word(args),
        Command::Enumerate { n, d, k, count } => {
            let expected = bvector_count(n as u64, d as u64, k as u64);
            if count {
                return Ok(Output::ok(
                    expected.to_string(),
                    json!({ "n": n, "d": d, "k": k, "count": expected.to_string() }),
                ));
            }
            let vectors: Vec<BVector> = enumerate_bvectors(n, d, k).collect();
            let mut text: String = vectors.iter().map(|b| format!("{b}\n")).collect();
            text.push_str(&format!("# count {}", vectors.len()));
            Ok(Output::ok(
                text,
                json!({ "n": n, "d": d, "k": k, "count": vectors.len().to_string(), "b_vectors": vectors }),
            ))
        }
        Command::Betti { input, full } => {
            let g = input.load()?;
            if full {
                let table = betti_table_full(&g)?;
                Ok(Output::ok(
                    render::betti_diagram(&table),
                    json!({
                        "table": table,
                        "projective_dimension": table.projective_dimension(),
                        "depth": table.depth(),
                        "two_linear": table.has_two_linear_resolution(),
                    }),
                ))
            } else {
                let strand = betti_linear_strand(&g)?;
                let entries: Vec<[u64; 3]> = strand.iter().map(|(i, v)| [i as u64, i as u64 + 1, v]).collect();
                let mut text: String = entries.iter().map(|[i, j, v]| format!("beta_{i},{j} = {v}\n")).collect();
                text.push_str(&format!("connectivity {}", strand.connectivity()));
                Ok(Output::ok(
                    text,
                    json!({ "n": g.vertex_count(), "linear_strand": entries, "connectivity": strand.connectivity() }),
                ))
            }
        }
        Command::Verify { theorem, nmax, jobs, output } => {
            let theorem: Theorem = theorem.parse()?;
            let n_max = nmax.unwrap_or(if theorem == Theorem::Counting { 9 } else { 6 });
            let report = verify(theorem, n_max, jobs)?;
            if let Some(path) = output {
                fs::write(&path, report.to_json() + "\n")
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            let status = if report.pass { 0 } else { 1 };
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Output { text: render::report(&report), json, status })
        }
    }
}

fn word(args: WordArgs) -> Result<Output, Failure> {
    let w: SdWord = if let Some(s) = &args.word {
        s.parse()?
    } else if let Some(b) = &args.b {
        bvector_to_word(&b.parse()?)?
    } else {
        let g = load_graph(args.graph.as_deref(), args.g6.as_deref(), args.input_format)?;
        match graph_to_word(&g)? {
            Some(w) => w,
            None => {
                return Ok(Output {
                    text: "not a threshold graph".into(),
                    json: json!({ "threshold": false }),
                    status: 1,
                })
            }
        }
    };
    let g = word_to_graph(&w)?;
    let b = word_to_bvector(&w);
    let c = b.clique_vector()?;
    let kappa = connectivity_with(&g, Convention::Inclusive)?;
    let graph = format_graph(&g, args.output_format.into());
    Ok(Output::ok(
        format!("# word {w}\n# b = {b}\n# c = {c}\n# connectivity {kappa}\n{}", graph.trim_end()),
        json!({
            "threshold": true,
            "word": w,
            "b": b,
            "c": c,
            "connectivity": kappa,
            "graph": graph,
            "graph6": format_graph(&g, GraphFormat::Graph6),
        }),
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.command) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON output"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.status)
        }
        Err(failure) => {
            let (message, status) = match failure {
                Failure::Input(m) => (m, 2),
                Failure::Rejected(m) => (m, 1),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&json!({ "error": message })).expect("JSON output"));
            }
            eprintln!("error: {message}");
            ExitCode::from(status)
        }
    }
}
