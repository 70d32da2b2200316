//! `longcycle`: invariants, family generators, enumeration and checks.

use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use longcycle_core::enumeration::{shard, UniverseSpec};
use longcycle_core::families::{Family, Params};
use longcycle_core::invariants::Budget;
use longcycle_core::{graph6, Error, Graph, InvariantProfile};
use longcycle_verifier::{
    run_all, run_check, witness_search, CheckParams, CheckReport, Outcome, Runner, SearchMode, Tier, WitnessProfile,
};
use serde_json::json;

const EXIT_USAGE: u8 = 64;
const EXIT_FORMAT: u8 = 65;
const EXIT_PARTIAL: u8 = 2;

#[derive(Parser)]
#[command(name = "longcycle", version, about = "Exact long-cycle invariants of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant profile of each graph6 line (file or stdin, up to
    /// the first blank line).
    Invariant(InvariantArgs),
    /// Build a member of a named family.
    Generate(GenerateArgs),
    /// Stream one graph per isomorphism class as graph6.
    Enumerate(EnumerateArgs),
    /// Run a verifier check by id, or `all-gating` / `all-extended`.
    Check(CheckArgs),
    /// Search for a graph matching a witness profile (`a`, `b` or `c`).
    Search(SearchArgs),
}

#[derive(Args)]
struct InvariantArgs {
    /// Input file; stdin when absent.
    file: Option<PathBuf>,
    /// Include the detour and cummerbund cover sets.
    #[arg(long)]
    sets: bool,
    #[arg(long)]
    json: bool,
    /// Node-expansion cap per graph.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family id.
    family: String,
    /// Comma-separated branch lengths for `theta`.
    lengths: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Print the family's claimed invariants against the computed ones.
    #[arg(long)]
    certify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    connected: bool,
    /// Minimum vertex connectivity.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    bipartite: bool,
    #[arg(long)]
    girth: Option<usize>,
    /// Comma-separated forbidden induced subgraphs (p4, c4, 2k2, claw).
    #[arg(long, value_delimiter = ',')]
    free: Vec<String>,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Part `i/m` of the universe.
    #[arg(long, value_parser = parse_shard)]
    shard: Option<(usize, usize)>,
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Check id, `all-gating` or `all-extended`.
    id: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Sub-claim for girth-cc: g4, g5, g6even, g6odd.
    #[arg(long)]
    part: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = TierArg::Gating)]
    tier: TierArg,
    /// Node-expansion cap per graph; exhausting it makes the outcome partial.
    #[arg(long)]
    budget: Option<u64>,
    /// Number of universe shards (results do not depend on it).
    #[arg(long)]
    shards: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Gating,
    Extended,
}

#[derive(Args)]
struct SearchArgs {
    /// Profile name: a, b or c.
    profile: String,
    /// Randomized local search with this many evaluations; exhaustive
    /// search when absent.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

fn parse_shard(s: &str) -> Result<(usize, usize), String> {
    let (i, m) = s.split_once('/').ok_or("expected i/m")?;
    let i: usize = i.parse().map_err(|_| "bad shard index")?;
    let m: usize = m.parse().map_err(|_| "bad shard count")?;
    if m == 0 || i >= m {
        return Err(format!("need 0 ≤ i < m, got {i}/{m}"));
    }
    Ok((i, m))
}

/// A failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format { .. } => Failure(EXIT_FORMAT, e.to_string()),
            Error::Timeout(_) => Failure(EXIT_PARTIAL, e.to_string()),
            _ => Failure(EXIT_USAGE, e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Invariant(a) => invariant(a),
        Command::Generate(a) => generate(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Check(a) => check(a),
        Command::Search(a) => search(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("longcycle: {msg}");
            ExitCode::from(code)
        }
    }
}

/// graph6 lines up to the first blank line or end of input.
fn read_graphs(file: Option<PathBuf>) -> Result<Vec<Graph>, Failure> {
    let reader: Box<dyn BufRead> = match file {
        Some(p) => Box::new(io::BufReader::new(std::fs::File::open(p)?)),
        None => Box::new(io::stdin().lock()),
    };
    let mut graphs = Vec::new();
    for (no, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            break;
        }
        let g = graph6::decode(line).map_err(|e| Failure(EXIT_FORMAT, format!("line {}: {e}", no + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn invariant(a: InvariantArgs) -> Result<u8, Failure> {
    let graphs = read_graphs(a.file)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in &graphs {
        let mut budget = a.budget.map_or_else(Budget::unlimited, Budget::nodes);
        let (p, sets) = InvariantProfile::with_sets(g, &mut budget)?;
        let g6 = graph6::encode(g);
        if a.json {
            let mut v = json!({ "graph6": g6, "profile": p });
            if a.sets {
                v["cover_sets"] = json!(sets);
            }
            writeln!(out, "{v}")?;
        } else {
            let girth = p.girth.map_or_else(|| "inf".to_string(), |x| x.to_string());
            write!(
                out,
                "{g6} n={} m={} delta={} kappa={} girth={girth} c={} detour={} dc={} cc={} \
                 detour_covered={} cummerbund_covered={} bipartite={}",
                p.order,
                p.size,
                p.min_degree,
                p.kappa,
                p.circumference,
                p.detour_order,
                p.dc,
                p.cc,
                p.detour_covered,
                p.cummerbund_covered,
                p.bipartite
            )?;
            if a.sets {
                write!(out, " detour_set={:?} cummerbund_set={:?}", sets.detour, sets.cummerbund)?;
            }
            writeln!(out)?;
        }
    }
    Ok(0)
}

fn parse_lengths(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure(EXIT_USAGE, format!("bad branch length {x:?}"))))
        .collect()
}

fn write_graph(out: &mut impl Write, g: &Graph, format: Format) -> io::Result<()> {
    match format {
        Format::Graph6 => writeln!(out, "{}", graph6::encode(g)),
        Format::Edges => {
            let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "{} {}", g.order(), edges.join(" "))
        }
    }
}

fn generate(a: GenerateArgs) -> Result<u8, Failure> {
    let params = Params {
        n: a.n,
        k: a.k,
        q: a.q,
        m: a.m,
        a: a.a,
        b: a.b,
        i: a.i,
        girth: a.girth,
        lengths: a.lengths.as_deref().map(parse_lengths).transpose()?.unwrap_or_default(),
    };
    let family = Family::parse(&a.family, &params)?;
    let mut out = io::stdout().lock();
    if a.certify {
        let cert = family.certify()?;
        writeln!(out, "{}", serde_json::to_string_pretty(&cert).expect("serializable"))?;
        return Ok(if cert.ok() { 0 } else { 1 });
    }
    write_graph(&mut out, &family.build()?, a.format)?;
    Ok(0)
}

fn enumerate(a: EnumerateArgs) -> Result<u8, Failure> {
    let mut spec = UniverseSpec::new(a.n);
    if a.connected {
        spec = spec.connected();
    }
    if let Some(k) = a.k {
        spec = spec.k_connected(k);
    }
    if a.bipartite {
        spec = spec.bipartite();
    }
    if let Some(g) = a.girth {
        spec = spec.girth_at_least(g);
    }
    if !a.free.is_empty() {
        let names: Vec<&str> = a.free.iter().map(String::as_str).collect();
        spec = spec.induced_free(&names);
    }
    if let Some(d) = a.min_degree {
        spec = spec.min_degree(d);
    }
    if let Some(m) = a.max_edges {
        spec = spec.max_edges(m);
    }
    let (i, m) = a.shard.unwrap_or((0, 1));
    let stream = shard(&spec, i, m)?;
    let mut out = BufWriter::new(io::stdout().lock());
    if a.count_only {
        writeln!(out, "{}", stream.count())?;
    } else {
        for g in stream {
            write_graph(&mut out, &g, a.format)?;
        }
    }
    Ok(0)
}

fn runner(shards: Option<usize>, budget: Option<u64>) -> Runner {
    let mut r = Runner::from_env();
    if let Some(s) = shards {
        r.shards = s.max(1);
    }
    r.with_budget(budget)
}

fn print_reports(reports: &[CheckReport], as_json: bool) -> Result<u8, Failure> {
    let mut out = io::stdout().lock();
    if as_json {
        let text = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(reports).expect("serializable")
        };
        writeln!(out, "{text}")?;
    } else {
        for r in reports {
            writeln!(
                out,
                "{:<20} {:<15} {:>9} graphs {:>8} ms",
                r.check_id,
                serde_json::to_value(r.outcome).expect("serializable").as_str().unwrap_or("?"),
                r.universe_size,
                r.elapsed_ms
            )?;
            for c in &r.counterexamples {
                writeln!(out, "    {} {}", c.graph6, c.reason)?;
            }
            if let Some(m) = r.details.get("mismatches") {
                writeln!(out, "    {m}")?;
            }
        }
    }
    let worst = reports.iter().map(|r| r.outcome).fold(Outcome::Pass, Outcome::worst);
    Ok(worst.exit_code() as u8)
}

fn check(a: CheckArgs) -> Result<u8, Failure> {
    let r = runner(a.shards, a.budget);
    let tier = match a.tier {
        TierArg::Gating => Tier::Gating,
        TierArg::Extended => Tier::Extended,
    };
    let reports = match a.id.as_str() {
        "all-gating" => run_all(Tier::Gating, &r)?,
        "all-extended" => run_all(Tier::Extended, &r)?,
        id => {
            let p = CheckParams {
                tier,
                n: a.n,
                k: a.k,
                part: a.part,
                seed: a.seed,
            };
            vec![run_check(id, &p, &r)?]
        }
    };
    print_reports(&reports, a.json)
}

/// Seed used when `--seed` is absent.
const DEFAULT_SEARCH_SEED: u64 = 7;

fn search(a: SearchArgs) -> Result<u8, Failure> {
    let profile = WitnessProfile::by_name(&a.profile)
        .ok_or_else(|| Failure(EXIT_USAGE, format!("unknown profile {:?}; expected a, b or c", a.profile)))?;
    let mode = match a.budget {
        Some(budget) => SearchMode::Randomized {
            budget,
            seed: a.seed.unwrap_or(DEFAULT_SEARCH_SEED),
        },
        None => SearchMode::Exhaustive,
    };
    let report = witness_search(&profile, mode, &Runner::from_env())?;
    if !a.json {
        for w in &report.witnesses {
            println!("{}", w.graph6);
        }
    }
    print_reports(std::slice::from_ref(&report), a.json)
}
