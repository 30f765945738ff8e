//! `quasitree` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a checked contract fails, 2 on usage,
//! parse or capacity errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasitree::enumerate::{class_forms, Limits, CANONICAL_CAP};
use quasitree::formats::{emit_edge_list, encode_graph6, parse_graphs, InputFormat};
use quasitree::verify::{
    check_lemma_f, check_lemma_g, contract_mismatches, sweep, LemmaCheckResult, SweepConfig,
};
use quasitree::{harmonic_index, BoundId, FamilySpec, Graph, GraphClass, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "quasitree",
    version,
    about = "Harmonic index and diameter of quasi-tree graphs"
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, |E|, H, D, minimum degree and quasi-tree witnesses.
    Index(IndexArgs),
    /// Check bounds over every graph of a class in an order range.
    Verify(VerifyArgs),
    /// Write one graph6 line per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Check the two auxiliary inequalities on exact rational grids.
    Lemmas(LemmaArgs),
    /// Build a named family member and print it with its closed form.
    Family(FamilyArgs),
    /// Transcode between graph6 and edge lists.
    Convert(ConvertArgs),
}

#[derive(Args, Debug)]
struct Source {
    /// Named graph such as "V(1,1)", "U(7)" or "K4-".
    #[arg(long, conflicts_with = "input")]
    family: Option<FamilySpec>,
    /// Input file (default: stdin).
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Input format.
    #[arg(long, value_enum, default_value = "auto")]
    from: FromFormat,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FromFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum IndexFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct IndexArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "text")]
    format: IndexFormat,
    /// Also print k-digit decimal approximations.
    #[arg(long, value_name = "K")]
    decimal: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BoundSet {
    /// Quasi-tree lower bounds, checked against the built-in contract.
    Qt,
    /// The conjectured connected-graph lower bounds (report only).
    Conj1,
    /// Lower bounds for trees (report only).
    Tree,
    /// Upper bounds for connected graphs (report only).
    Upper,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Order range, inclusive: "3..8" or a single order.
    #[arg(long, value_parser = parse_range, default_value = "3..8")]
    n: (usize, usize),
    #[arg(long, value_enum, default_value = "qt")]
    bounds: BoundSet,
    /// Explicit bound ids (e.g. QT_ADDITIVE); overrides --bounds, report only.
    #[arg(long, value_delimiter = ',')]
    bound: Vec<BoundId>,
    /// Graph class to sweep (default follows the bound set).
    #[arg(long)]
    class: Option<GraphClass>,
    /// Raise the largest order the enumerator accepts.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=CANONICAL_CAP as i64))]
    cap: Option<u8>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_name = "K")]
    decimal: Option<usize>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "quasi-tree")]
    class: GraphClass,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=CANONICAL_CAP as i64))]
    cap: Option<u8>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    /// Largest x on the grid for f(x, y).
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(i64).range(2..))]
    fx: i64,
    /// Largest y on the grid for f(x, y).
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(i64).range(2..))]
    fy: i64,
    /// Largest x for the chain on g.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(i64).range(2..))]
    gx: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    spec: FamilySpec,
    /// Print only the graph in this format.
    #[arg(long, value_enum)]
    to: Option<GraphFormat>,
    #[arg(long, value_name = "K")]
    decimal: Option<usize>,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    from: FromFormat,
    #[arg(long, value_enum)]
    to: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<quasitree::Error> for Failure {
    fn from(e: quasitree::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..=").or_else(|| s.split_once("..")) {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load_graphs(text: &str, from: FromFormat) -> Result<Vec<Graph>, Failure> {
    let format = match from {
        FromFormat::Auto => quasitree::formats::detect_format(text),
        FromFormat::Graph6 => InputFormat::Graph6,
        FromFormat::EdgeList => InputFormat::EdgeList,
    };
    let graphs = parse_graphs(text, format)?;
    if graphs.is_empty() {
        return Err(usage("no graphs in input"));
    }
    Ok(graphs)
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn limits_with(cap: Option<u8>) -> Limits {
    let mut limits = Limits::default();
    if let Some(c) = cap {
        let c = c as usize;
        limits.connected = c;
        limits.quasi_tree = c;
        limits.tree = c;
        limits.unicyclic = c;
        limits.via_trees = c;
    }
    limits
}

fn show(r: &Rational, decimal: Option<usize>) -> String {
    match decimal {
        Some(k) => format!("{r} (~{})", r.to_decimal(k)),
        None => r.to_string(),
    }
}

struct IndexRecord {
    graph6: String,
    n: usize,
    m: usize,
    harmonic: Rational,
    diameter: usize,
    min_degree: usize,
    quasi_tree: bool,
    witnesses: Vec<usize>,
}

fn index_record(g: &Graph) -> Result<IndexRecord, Failure> {
    let diameter = g.diameter()?;
    let harmonic = harmonic_index(g)?;
    let witnesses = g.quasi_tree_witnesses()?.vertices().to_vec();
    Ok(IndexRecord {
        graph6: encode_graph6(g)?,
        n: g.order(),
        m: g.edge_count(),
        harmonic,
        diameter,
        min_degree: g.min_degree().unwrap_or(0),
        quasi_tree: g.is_quasi_tree(),
        witnesses,
    })
}

fn cmd_index(args: IndexArgs) -> Result<u8, Failure> {
    let graphs = match args.source.family {
        Some(spec) => vec![spec.build()?],
        None => load_graphs(&read_source(args.source.input.as_ref())?, args.source.from)?,
    };
    let records = graphs
        .iter()
        .map(index_record)
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    match args.format {
        IndexFormat::Text => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "graph6      {}", r.graph6);
                let _ = writeln!(out, "n           {}", r.n);
                let _ = writeln!(out, "edges       {}", r.m);
                let _ = writeln!(out, "H           {}", show(&r.harmonic, args.decimal));
                let _ = writeln!(out, "D           {}", r.diameter);
                let _ = writeln!(out, "min degree  {}", r.min_degree);
                let yes = if r.quasi_tree { "yes" } else { "no" };
                let list: Vec<String> = r.witnesses.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "quasi-tree  {yes}");
                if !list.is_empty() {
                    let _ = writeln!(out, "witnesses   {}", list.join(" "));
                }
            }
        }
        IndexFormat::Csv => {
            out.push_str("graph6,n,edges,harmonic,diameter,min_degree,quasi_tree,witnesses");
            if args.decimal.is_some() {
                out.push_str(",harmonic_approx");
            }
            out.push('\n');
            for r in &records {
                let list: Vec<String> = r.witnesses.iter().map(|v| v.to_string()).collect();
                let _ = write!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.graph6,
                    r.n,
                    r.m,
                    r.harmonic,
                    r.diameter,
                    r.min_degree,
                    r.quasi_tree,
                    list.join(" ")
                );
                if let Some(k) = args.decimal {
                    let _ = write!(out, ",{}", r.harmonic.to_decimal(k));
                }
                out.push('\n');
            }
        }
        IndexFormat::Json => {
            let values: Vec<serde_json::Value> = records
                .iter()
                .map(|r| {
                    let mut v = serde_json::json!({
                        "graph6": r.graph6,
                        "n": r.n,
                        "edges": r.m,
                        "harmonic": r.harmonic.to_string(),
                        "diameter": r.diameter,
                        "min_degree": r.min_degree,
                        "quasi_tree": r.quasi_tree,
                        "witnesses": r.witnesses,
                    });
                    if let Some(k) = args.decimal {
                        v["harmonic_approx"] = serde_json::json!(r.harmonic.to_decimal(k));
                    }
                    v
                })
                .collect();
            out = serde_json::to_string_pretty(&values).expect("json");
            out.push('\n');
        }
    }
    write_output(None, &out)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let (bounds, default_class): (Vec<BoundId>, GraphClass) = if !args.bound.is_empty() {
        (args.bound.clone(), GraphClass::Connected)
    } else {
        match args.bounds {
            BoundSet::Qt => (BoundId::QUASI_TREE.to_vec(), GraphClass::QuasiTree),
            BoundSet::Conj1 => (BoundId::CONJECTURE_1.to_vec(), GraphClass::Connected),
            BoundSet::Tree => (BoundId::TREE.to_vec(), GraphClass::Tree),
            BoundSet::Upper => (BoundId::UPPER.to_vec(), GraphClass::Connected),
        }
    };
    let class = args.class.unwrap_or(default_class);
    let contract =
        args.bound.is_empty() && args.bounds == BoundSet::Qt && class == GraphClass::QuasiTree;
    let (n_min, n_max) = args.n;
    let mut config = SweepConfig::new(class, n_min, n_max, &bounds);
    config.limits = limits_with(args.cap);
    let report = sweep(&config)?;
    let problems = if contract {
        contract_mismatches(&report)
    } else {
        Vec::new()
    };
    let mut text = match args.format {
        ReportFormat::Json => report.to_json(args.timing),
        ReportFormat::Text => report.to_text(args.decimal, args.timing),
    };
    if args.format == ReportFormat::Text {
        text.push('\n');
        if !contract {
            text.push_str("contract: not checked (report only)\n");
        } else if problems.is_empty() {
            text.push_str("contract: satisfied\n");
        } else {
            text.push_str("contract: VIOLATED\n");
            for p in &problems {
                let _ = writeln!(text, "  {p}");
            }
        }
    }
    write_output(args.out.as_ref(), &text)?;
    if !problems.is_empty() {
        for p in &problems {
            eprintln!("contract violated: {p}");
        }
        return Ok(1);
    }
    Ok(0)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, Failure> {
    let forms = class_forms(args.n, args.class, &limits_with(args.cap))?;
    let mut text = String::with_capacity(forms.len() * (args.n + 2));
    for f in &forms {
        let _ = writeln!(text, "{f}");
    }
    write_output(args.out.as_ref(), &text)?;
    Ok(0)
}

fn lemma_text(out: &mut String, title: &str, r: &LemmaCheckResult) {
    let at: Vec<String> = r.argmin.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(
        out,
        "{title}: {}  grid {}  points {}  min {} at ({})",
        if r.passed() { "PASS" } else { "FAIL" },
        r.grid,
        r.points,
        r.min_value,
        at.join(", ")
    );
    if let Some(f) = &r.failure {
        let at: Vec<String> = f.point.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "  first failure at ({}): {} ({})",
            at.join(", "),
            f.value,
            f.reason
        );
    }
}

fn cmd_lemmas(args: LemmaArgs) -> Result<u8, Failure> {
    let (f, g) = rayon::join(
        || check_lemma_f(args.fx, args.fy),
        || check_lemma_g(args.gx),
    );
    let (f, g) = (f?, g?);
    let text = match args.format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&[&f, &g]).expect("json");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            lemma_text(&mut s, "f(x,y) > 0", &f);
            lemma_text(&mut s, "x/(x+2) >= g(x) >= 11/28, g increasing", &g);
            s
        }
    };
    write_output(None, &text)?;
    Ok(if f.passed() && g.passed() { 0 } else { 1 })
}

fn cmd_family(args: FamilyArgs) -> Result<u8, Failure> {
    let g = args.spec.build()?;
    let text = match args.to {
        Some(GraphFormat::Graph6) => format!("{}\n", encode_graph6(&g)?),
        Some(GraphFormat::EdgeList) => emit_edge_list(&g),
        None => {
            let mut s = String::new();
            let r = index_record(&g)?;
            let _ = writeln!(s, "family      {}", args.spec);
            let _ = writeln!(s, "graph6      {}", r.graph6);
            let _ = writeln!(s, "n           {}", r.n);
            let _ = writeln!(s, "edges       {}", r.m);
            let _ = writeln!(s, "H           {}", show(&r.harmonic, args.decimal));
            let _ = writeln!(s, "D           {}", r.diameter);
            match args.spec.closed_form() {
                Ok((h, d)) => {
                    let agrees = h == r.harmonic && d == r.diameter;
                    let _ = writeln!(
                        s,
                        "closed form H = {}, D = {} ({})",
                        show(&h, args.decimal),
                        d,
                        if agrees { "matches" } else { "MISMATCH" }
                    );
                    if !agrees {
                        write_output(None, &s)?;
                        return Ok(1);
                    }
                }
                Err(e) => {
                    let _ = writeln!(s, "closed form -  ({e})");
                }
            }
            s.push_str("edges:\n");
            for (u, v) in g.edges() {
                let _ = writeln!(s, "  {u} {v}");
            }
            s
        }
    };
    write_output(None, &text)?;
    Ok(0)
}

fn cmd_convert(args: ConvertArgs) -> Result<u8, Failure> {
    let graphs = load_graphs(&read_source(args.input.as_ref())?, args.from)?;
    let mut text = String::new();
    for (i, g) in graphs.iter().enumerate() {
        match args.to {
            GraphFormat::Graph6 => {
                let _ = writeln!(text, "{}", encode_graph6(g)?);
            }
            GraphFormat::EdgeList => {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(&emit_edge_list(g));
            }
        }
    }
    write_output(args.out.as_ref(), &text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Index(a) => cmd_index(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Lemmas(a) => cmd_lemmas(a),
        Command::Family(a) => cmd_family(a),
        Command::Convert(a) => cmd_convert(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
