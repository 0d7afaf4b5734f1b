//! `ifs`: build, inspect, classify and verify intersecting families.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ifs_core::classifier::{classify_3graph, classify_rgraph, decompose_matching, decompose_th4prime, embed};
use ifs_core::constructions::{build_construction, layout_table};
use ifs_core::harness::enumerate::{for_each_level, DEFAULT_CEILING};
use ifs_core::harness::{verify, EnumerationFilter, Statement, VerifyParams};
use ifs_core::io::{family_to_text, parse_any, parse_hypergraph_auto, to_json, to_text, Parsed};
use ifs_core::kernel::{b_kernel, kernel_bound};
use ifs_core::sunflower::{find_sunflower, find_sunflower_with_core};
use ifs_core::{Construction, Error, H3Index, Hypergraph, SetFamily, ThresholdScheme, VertexSet};

#[derive(Parser)]
#[command(name = "ifs", version, about = "Intersecting uniform set families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction.
    Gen(GenArgs),
    /// Report intersection, matching number and cover number.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Find a k-sunflower, optionally with a fixed core.
    Sunflower {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Core vertices, e.g. "1 2".
        #[arg(long)]
        core: Option<String>,
    },
    /// Compute the sunflower kernel B(H) and its counting bound.
    Kernel {
        #[arg(long)]
        file: PathBuf,
        /// `r+1` or `rs:S`.
        #[arg(long, default_value = "r+1")]
        scheme: ThresholdScheme,
        #[arg(long)]
        json: bool,
    },
    /// Classify against the structure templates.
    Classify {
        #[arg(long)]
        file: PathBuf,
        /// Peel s-1 vertices first (families with matching number <= s).
        #[arg(long)]
        s: Option<usize>,
        /// Use the kernel route for r >= 4 with cover number <= 2.
        #[arg(long)]
        kernel_route: bool,
    },
    /// Enumerate one family per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Check one of the finitely checkable statements.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Txt,
    Json,
}

#[derive(Args)]
struct GenArgs {
    /// em, hm, hm_t, hm0, hm_dp, fp, h3fam, h3lift.
    id: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// star or 0..5.
    #[arg(long)]
    i: Option<H3Index>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "txt")]
    format: Format,
    /// Print the special-vertex layout of every construction and exit.
    #[arg(long)]
    layout: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Include non-intersecting families.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    tau_le: Option<usize>,
    #[arg(long)]
    tau_ge: Option<usize>,
    #[arg(long)]
    min_edges: Option<usize>,
    #[arg(long)]
    max_edges: Option<usize>,
    #[arg(long)]
    maximal: bool,
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// FOLK, TH4_MAIN, TH4_A, TH4_B, LEMMA_2EDGES, COUNTS or KERNEL_PROPS.
    statement: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_support: Option<usize>,
    /// Comma-separated uniformities for COUNTS.
    #[arg(long, value_delimiter = ',')]
    r_values: Option<Vec<usize>>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    ceiling: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
    /// Write the report here; counterexamples go beside it.
    #[arg(long)]
    json_report: Option<PathBuf>,
}

/// Why a command could not run: bad input (exit 2) or a failed check (1).
enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    parse_hypergraph_auto(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_core(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut core = VertexSet::EMPTY;
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| Failure::Usage(format!("bad core vertex `{tok}`")))?;
        if v == 0 || v > n {
            return Err(Failure::Usage(format!("core vertex {v} outside 1..{n}")));
        }
        core.insert(v);
    }
    Ok(core)
}

fn install_threads(threads: Option<usize>) -> Outcome {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn gen(a: GenArgs) -> Outcome {
    if a.layout {
        println!("{}", layout_table());
        return Ok(());
    }
    let id = a.id.ok_or_else(|| Failure::Usage("missing construction id (or --layout)".into()))?;
    let (Some(n), Some(r)) = (a.n, a.r) else {
        return Err(Failure::Usage("--n and --r are required".into()));
    };
    let c = Construction::from_parts(&id, a.s, a.t, a.i)?;
    let h = build_construction(c, n, r)?;
    let text = match a.format {
        Format::Txt => to_text(&h),
        Format::Json => to_json(&h) + "\n",
    };
    match a.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn check(file: &Path) -> Outcome {
    let h = read_hypergraph(file)?;
    println!("n: {}", h.n());
    println!("r: {}", h.r());
    println!("edges: {}", h.len());
    println!("intersecting: {}", h.is_intersecting());
    println!("matching number: {}", h.matching_number());
    println!("cover number: {}", h.cover_number());
    Ok(())
}

fn sunflower(file: &Path, k: usize, core: Option<String>) -> Outcome {
    if k < 2 {
        return Err(Failure::Usage("--k must be at least 2".into()));
    }
    let family = match parse_any(&read(file)?)? {
        Parsed::Uniform(h) => h.to_family(),
        Parsed::Family(f) => f,
    };
    let found = match core {
        Some(text) => find_sunflower_with_core(&family, parse_core(&text, family.n())?, k),
        None => find_sunflower(&family, k),
    };
    match found {
        Some(s) => {
            println!("core {}", s.core);
            for m in &s.members {
                println!("{m}");
            }
        }
        None => println!("none"),
    }
    Ok(())
}

fn kernel(file: &Path, scheme: ThresholdScheme, json: bool) -> Outcome {
    let h = read_hypergraph(file)?;
    let d = b_kernel(&h, scheme);
    let bound = kernel_bound(&h, &d);
    if json {
        let mut v = serde_json::to_value(&d).map_err(|e| Failure::Usage(e.to_string()))?;
        v["bound"] = serde_json::json!(bound.to_string());
        v["edges"] = serde_json::json!(h.len());
        println!("{}", serde_json::to_string_pretty(&v).expect("json value"));
        return Ok(());
    }
    println!("scheme: {scheme}");
    println!("|B*| = {}, |B'| = {}, |B''| = {}", d.b_star.len(), d.b_prime.len(), d.b_dprime.len());
    for (i, layer) in &d.by_size {
        println!("|B_{i}| = {}", layer.len());
    }
    println!("bound: {bound} >= |H| = {}", h.len());
    print_family("B'", &d.b_prime);
    print_family("B''", &d.b_dprime);
    Ok(())
}

fn print_family(name: &str, f: &SetFamily) {
    println!("# {name}");
    for line in family_to_text(f).lines().skip(1) {
        println!("{line}");
    }
}

fn classify(file: &Path, s: Option<usize>, kernel_route: bool) -> Outcome {
    let h = read_hypergraph(file)?;
    if let Some(s) = s {
        let d = decompose_matching(&h, s)?;
        println!("Z: {}", d.z);
        println!("verdict: {}", d.verdict.kind);
        if let Some(w) = &d.verdict.witness {
            println!("witness (on H - Z): {w}");
        }
        return Ok(());
    }
    if kernel_route {
        let d = decompose_th4prime(&h)?;
        println!("verdict: {}", d.verdict.kind);
        println!("removed: {}", d.removed);
        if let Some(w) = &d.verdict.witness {
            println!("witness: {w}");
        }
        return Ok(());
    }
    let verdict = if h.r() == 3 {
        classify_3graph(&h)?
    } else if h.cover_number() <= 1 {
        match embed(&h, Construction::Em { s: 1 })? {
            Some(e) => ifs_core::Verdict { kind: ifs_core::VerdictKind::Star, witness: Some(e) },
            None => ifs_core::Verdict { kind: ifs_core::VerdictKind::None, witness: None },
        }
    } else {
        classify_rgraph(&h)?
    };
    println!("verdict: {}", verdict.kind);
    if let Some(w) = &verdict.witness {
        println!("witness: {w}");
    }
    Ok(())
}

fn enumerate(a: EnumerateArgs) -> Outcome {
    install_threads(a.threads)?;
    let filter = EnumerationFilter {
        intersecting: !a.all,
        tau_le: a.tau_le,
        tau_ge: a.tau_ge,
        min_edges: a.min_edges,
        max_edges: a.max_edges,
        maximal_only: a.maximal,
    };
    let mut count = 0usize;
    for_each_level(a.n, a.r, &filter, a.ceiling, |level| {
        for h in level {
            count += 1;
            if !a.count_only {
                println!("# class {count}");
                print!("{}", to_text(h));
                println!();
            }
        }
    })?;
    if a.count_only {
        println!("{count}");
    }
    Ok(())
}

fn run_verify(a: VerifyArgs) -> Outcome {
    install_threads(a.threads)?;
    let statement: Statement = a.statement.parse()?;
    let d = VerifyParams::default();
    let p = VerifyParams {
        n: a.n.unwrap_or(d.n),
        max_support: a.max_support.unwrap_or(d.max_support),
        r_values: a.r_values.unwrap_or(d.r_values),
        n_max: a.n_max.unwrap_or(d.n_max),
        samples: a.samples.unwrap_or(d.samples),
        seed: a.seed.unwrap_or(d.seed),
        ceiling: a.ceiling.unwrap_or(d.ceiling),
    };
    let report = verify(statement, &p)?;
    println!("{} {}: {}", if report.passed { "PASS" } else { "FAIL" }, report.statement, report.scope);
    println!("checked {} in {:.2}s", report.checked, report.wall_time_secs);
    for note in &report.notes {
        println!("  {note}");
    }
    if let Some(path) = &a.json_report {
        fs::write(path, report.to_json() + "\n")?;
        for (i, cex) in report.counterexamples.iter().enumerate() {
            let file = path.with_extension(format!("cex{}.txt", i + 1));
            fs::write(&file, cex)?;
            println!("  counterexample written to {}", file.display());
        }
    } else {
        for cex in &report.counterexamples {
            print!("{cex}");
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Check { file } => check(&file),
        Command::Sunflower { file, k, core } => sunflower(&file, k, core),
        Command::Kernel { file, scheme, json } => kernel(&file, scheme, json),
        Command::Classify { file, s, kernel_route } => classify(&file, s, kernel_route),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => run_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
