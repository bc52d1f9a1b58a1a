//! Command-line front end. Exit codes: 0 for a definitive answer, 1 for usage
//! or input errors, 2 when a budget ran out.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use clawfree::decompose::{find_clique_cutset, find_one_join, find_proper_coherent_w_join};
use clawfree::graph::{is_strong_stable_set, line_graph};
use clawfree::linegraph::{multigraphs_isomorphic, normalize_pendant_bundles, recover_root, verify_root};
use clawfree::recognizers::{cobipartite_partition, linear_interval_order, peculiar_structure};
use clawfree::solver::{solve, SolveInput, Status};
use clawfree::workbench::certificate::{verify_certificate, write_certificate, Certificate};
use clawfree::workbench::generators::{generate, random_harmless, GenSpec, Generated, KINDS};
use clawfree::workbench::io::{format_graph, parse_graph, Format};
use clawfree::{Budget, Error, Graph, Multigraph, VertexSet};

#[derive(Parser)]
#[command(name = "clawfree", version, about = "Strong stable sets and forbidden structures in claw-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Claw-freeness and innocence, with a witness when either fails.
    Check(GraphArgs),
    /// A strong stable set, optionally containing required vertices.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex ids the answer must contain.
        #[arg(long, value_delimiter = ',')]
        require: Vec<usize>,
    },
    /// Builds a member of a named family.
    Generate(GenerateArgs),
    /// Reports the decompositions and structures found.
    Decompose(GraphArgs),
    /// Recovers a line-graph root and rebuilds the graph from it.
    Roundtrip(RoundtripArgs),
    /// Re-checks a JSON certificate from a file or `-`.
    Verify { certificate: String },
}

#[derive(Args)]
struct GraphArgs {
    /// File path, `-` for stdin, or an inline graph6 string.
    input: String,
    /// Input format; guessed from the content when absent.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Print a JSON certificate instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON certificate to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = Budget::default().max_vertices)]
    budget_vertices: usize,
    #[arg(long, default_value_t = Budget::default().max_enumerations)]
    budget_enum: u64,
}

impl Common {
    fn budget(&self) -> Result<Budget, Error> {
        Budget::new(self.budget_vertices, self.budget_enum)
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(KINDS))]
    kind: String,
    /// Cycle length for hole, antihole and clown.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    c1: Option<usize>,
    #[arg(long)]
    c2: Option<usize>,
    /// Connecting path length for handcuff and bicycle.
    #[arg(long)]
    path: Option<usize>,
    /// Three comma-separated path lengths for prism and theta.
    #[arg(long, value_delimiter = ',')]
    paths: Vec<usize>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    rate: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_format, default_value = "graph6")]
    format: Format,
    /// For theta and bicycle, print the multigraph instead of its line graph.
    #[arg(long)]
    root: bool,
}

#[derive(Args)]
struct RoundtripArgs {
    /// Graph to recover a root for; omit to test random roots instead.
    input: Option<String>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Number of random harmless roots to test.
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// Edge count of each random root.
    #[arg(long, default_value_t = 12)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

fn parse_format(s: &str) -> Result<Format, String> {
    Format::parse(s).ok_or_else(|| format!("unknown format `{s}` (use graph6 or edgelist)"))
}

/// Either a definitive answer or a budget exhaustion; anything else is `Err`.
enum Done {
    Answer,
    Budget,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Check(a) => check(a),
        Command::Solve { graph, require } => solve_cmd(graph, require),
        Command::Generate(a) => generate_cmd(a),
        Command::Decompose(a) => decompose(a),
        Command::Roundtrip(a) => roundtrip(a),
        Command::Verify { certificate } => verify(certificate),
    };
    match result {
        Ok(Done::Answer) => ExitCode::SUCCESS,
        Ok(Done::Budget) => ExitCode::from(2),
        Err(e) if e.is_budget() => {
            eprintln!("clawfree: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("clawfree: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(input: &str, format: Option<Format>) -> Result<Graph, Error> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
        s
    } else if std::path::Path::new(input).exists() {
        std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    parse_graph(&text, format.unwrap_or_else(|| guess_format(&text)))
}

/// graph6 lines never contain spaces or `#`; edge lists almost always do.
fn guess_format(text: &str) -> Format {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.trim_start().starts_with('#') || first.trim().contains(char::is_whitespace) {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

fn emit(c: &Certificate, common: &Common, text: impl FnOnce()) -> Result<(), Error> {
    if let Some(path) = &common.out {
        write_certificate(path, c)?;
    }
    if common.json {
        println!("{}", c.to_json());
    } else {
        text();
    }
    Ok(())
}

fn check(a: &GraphArgs) -> Result<Done, Error> {
    let g = read_input(&a.input, a.format)?;
    let b = a.common.budget()?;
    let c = Certificate::check(&g, &b)?;
    emit(&c, &a.common, || {
        println!("status: {}", c.status);
        if let Some(w) = &c.witness {
            println!("witness: {}", serde_json::to_string(w).expect("witnesses serialize"));
        }
        if let Some(d) = &c.detail {
            println!("detail: {d}");
        }
    })?;
    Ok(if c.status == "budget" { Done::Budget } else { Done::Answer })
}

fn solve_cmd(a: &GraphArgs, require: &[usize]) -> Result<Done, Error> {
    let g = read_input(&a.input, a.format)?;
    let b = a.common.budget()?;
    if let Some(&v) = require.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let z: VertexSet = require.iter().collect();
    let c = match solve(&SolveInput::with_required(g.clone(), z), &b) {
        Ok(r) => {
            if let Some(s) = r.s {
                // Never print an unverified answer.
                if !z.is_subset(s) || !is_strong_stable_set(&g, s, &b)? {
                    return Err(Error::Precondition("solver answer failed re-verification".into()));
                }
            }
            Certificate::solved(&g, z, &r, &b)
        }
        Err(e) if e.is_budget() => Certificate::budget(&g, z, &b, &e),
        Err(e) => return Err(e),
    };
    emit(&c, &a.common, || {
        println!("status: {}", c.status);
        if let Some(s) = &c.s {
            println!("s: {s:?}");
        }
        if let Some(d) = &c.detail {
            println!("detail: {d}");
        }
    })?;
    Ok(if c.status == Status::Budget.name() { Done::Budget } else { Done::Answer })
}

fn need(v: Option<usize>, flag: &str, kind: &str) -> Result<usize, Error> {
    v.ok_or_else(|| Error::Precondition(format!("--kind {kind} needs --{flag}")))
}

fn gen_spec(a: &GenerateArgs) -> Result<GenSpec, Error> {
    let kind = a.kind.as_str();
    let three = || -> Result<[usize; 3], Error> {
        <[usize; 3]>::try_from(a.paths.as_slice())
            .map_err(|_| Error::Precondition(format!("--kind {kind} needs --paths with three lengths")))
    };
    Ok(match kind {
        "hole" => GenSpec::Hole { k: need(a.k, "k", kind)? },
        "antihole" => GenSpec::Antihole { k: need(a.k, "k", kind)? },
        "clown" => GenSpec::Clown { k: need(a.k, "k", kind)? },
        "prism" => GenSpec::Prism { paths: three()? },
        "theta" => GenSpec::Theta { paths: three()? },
        "handcuff" => GenSpec::Handcuff { c1: need(a.c1, "c1", kind)?, c2: need(a.c2, "c2", kind)?, path: need(a.path, "path", kind)? },
        "bicycle" => GenSpec::Bicycle { c1: need(a.c1, "c1", kind)?, c2: need(a.c2, "c2", kind)?, path: need(a.path, "path", kind)? },
        "eye-mask" => GenSpec::EyeMask { c1: need(a.c1, "c1", kind)?, c2: need(a.c2, "c2", kind)? },
        "peculiar" => GenSpec::Peculiar { size: need(a.size, "size", kind)?, clique: a.clique.unwrap_or(1), seed: a.seed },
        "line-of-harmless" => GenSpec::LineOfHarmless { size: need(a.size, "size", kind)?, seed: a.seed },
        "augmented-line" => GenSpec::AugmentedLine { size: need(a.size, "size", kind)?, rate: a.rate, seed: a.seed },
        "gadget-extension" => GenSpec::GadgetExtension { size: need(a.size, "size", kind)?, seed: a.seed },
        _ => unreachable!("clap restricts the kind"),
    })
}

fn multigraph_text(b: &Multigraph) -> String {
    let mut out = format!("# n = {}\n", b.n());
    for &(u, v) in b.edges() {
        out += &format!("{u} {v}\n");
    }
    out
}

fn generate_cmd(a: &GenerateArgs) -> Result<Done, Error> {
    let generated = generate(&gen_spec(a)?)?;
    match &generated {
        Generated::Multigraph(b) if a.root => print!("{}", multigraph_text(b)),
        _ => print!("{}", format_graph(&generated.as_graph()?, a.format)),
    }
    Ok(Done::Answer)
}

fn decompose(a: &GraphArgs) -> Result<Done, Error> {
    let g = read_input(&a.input, a.format)?;
    let b = a.common.budget()?;
    let report = json!({
        "n": g.n(),
        "clique_cutset": find_clique_cutset(&g),
        "one_join": find_one_join(&g),
        "w_join": find_proper_coherent_w_join(&g, &b)?,
        "cobipartite": cobipartite_partition(&g),
        "linear_interval": linear_interval_order(&g, &b)?,
        "peculiar": peculiar_structure(&g, &b)?,
        "line_graph_root": if g.is_connected() { recover_root(&g, &b)? } else { None },
    });
    if let Some(path) = &a.common.out {
        std::fs::write(path, report.to_string() + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    if a.common.json {
        println!("{report}");
    } else if let Some(fields) = report.as_object() {
        for (key, value) in fields {
            println!("{key}: {}", if value.is_null() { "none".to_string() } else { value.to_string() });
        }
    }
    Ok(Done::Answer)
}

fn roundtrip(a: &RoundtripArgs) -> Result<Done, Error> {
    let b = a.common.budget()?;
    if let Some(input) = &a.input {
        let g = read_input(input, a.format)?;
        let r = recover_root(&g, &b)?;
        let ok = r.as_ref().is_some_and(|r| verify_root(&g, r));
        let report = json!({ "line_graph": r.is_some(), "verified": ok, "root": r });
        if a.common.json {
            println!("{report}");
        } else {
            match &r {
                Some(r) => print!("root verified: {ok}\n{}", multigraph_text(&r.root)),
                None => println!("not a line graph"),
            }
        }
        return Ok(Done::Answer);
    }
    let mut passed = 0;
    for i in 0..a.count {
        let root = random_harmless(a.size, a.seed.wrapping_add(i as u64))?;
        let g = line_graph(&root)?.0;
        let ok = match recover_root(&g, &b)? {
            Some(r) => verify_root(&g, &r) && multigraphs_isomorphic(&normalize_pendant_bundles(&r.root), &normalize_pendant_bundles(&root)),
            None => false,
        };
        passed += ok as usize;
    }
    if a.common.json {
        println!("{}", json!({ "tested": a.count, "passed": passed }));
    } else {
        println!("{passed}/{} roots recovered up to isomorphism", a.count);
    }
    if passed != a.count {
        return Err(Error::Precondition(format!("{} round trips failed", a.count - passed)));
    }
    Ok(Done::Answer)
}

fn verify(path: &str) -> Result<Done, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?
    };
    let c = Certificate::from_json(&text)?;
    if verify_certificate(&c)? {
        println!("verified: {}", c.status);
        Ok(Done::Answer)
    } else {
        Err(Error::Precondition(format!("certificate with status `{}` does not verify", c.status)))
    }
}
