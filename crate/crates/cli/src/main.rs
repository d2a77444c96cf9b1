//! `slq` — command-line front end for the signless Laplacian spectral-sum
//! verification toolkit.
//!
//! Output is line-oriented JSON: one object per check row, with an aggregate
//! report object appended by `sweep` (or alone under `--summary`). Exit codes:
//! 0 all checks passed, 2 a certified violation was found, 1 operational
//! error.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use slq_core::charpoly;
use slq_core::enumerate;
use slq_core::graph6;
use slq_core::verify::{self, Checks, KSelect, Mode, SweepOptions, SweepSource};
use slq_core::{FamilySpec, GraphClass};

#[derive(Parser)]
#[command(
    name = "slq",
    version,
    about = "Verify signless Laplacian spectral-sum bounds S_k^+(G) <= e(G) + k(k+1)/2"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Write output to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check graphs against the conjecture, the classical bounds, or lemma claims
    Check(RunArgs),
    /// Bulk-run checks and append an aggregate JSON report
    Sweep(RunArgs),
    /// List connected graphs up to isomorphism as graph6 lines
    Enumerate(EnumArgs),
    /// Evaluate every classical bound for each requested k
    Bounds(BoundsArgs),
    /// Print exact integer polynomial coefficients (constant term first)
    Poly(PolyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
    Bicyclic,
    Tricyclic,
    All,
}

impl ClassArg {
    fn to_class(self) -> Option<GraphClass> {
        match self {
            ClassArg::Tree => Some(GraphClass::Tree),
            ClassArg::Unicyclic => Some(GraphClass::Unicyclic),
            ClassArg::Bicyclic => Some(GraphClass::Bicyclic),
            ClassArg::Tricyclic => Some(GraphClass::Tricyclic),
            ClassArg::All => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Float,
    Certified,
}

impl ModeArg {
    fn to_mode(self) -> Mode {
        match self {
            ModeArg::Float => Mode::FloatOnly,
            ModeArg::Certified => Mode::Certified,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChecksArg {
    Conjecture,
    Bounds,
    Lemmas,
    All,
}

impl ChecksArg {
    fn to_checks(self) -> Checks {
        match self {
            ChecksArg::Conjecture => Checks::Conjecture,
            ChecksArg::Bounds => Checks::Bounds,
            ChecksArg::Lemmas => Checks::Lemmas,
            ChecksArg::All => Checks::All,
        }
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Family instance like "theta(3,4,2)" or "u1(5,2)"; repeatable
    #[arg(long = "family", value_name = "SPEC")]
    family: Vec<String>,
    /// Path to a file of graph6 lines, or `-` for stdin
    #[arg(long = "graph6", value_name = "PATH")]
    graph6: Option<String>,
    /// All connected graphs on N vertices up to isomorphism
    #[arg(long = "enumerate", value_name = "N")]
    enumerate: Option<usize>,
    /// Restrict enumerated graphs by cyclomatic class
    #[arg(long = "class", value_enum, default_value_t = ClassArg::All)]
    class: ClassArg,
    /// Allow enumeration orders 9 and 10 (slow)
    #[arg(long = "large-ok")]
    large_ok: bool,
}

impl SourceArgs {
    fn to_source(&self) -> anyhow::Result<SweepSource> {
        let picked = usize::from(!self.family.is_empty())
            + usize::from(self.graph6.is_some())
            + usize::from(self.enumerate.is_some());
        if picked != 1 {
            bail!("pick exactly one source: --family, --graph6, or --enumerate");
        }
        if !self.family.is_empty() {
            let specs = self
                .family
                .iter()
                .map(|s| s.parse::<FamilySpec>())
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(SweepSource::Families(specs));
        }
        if let Some(path) = &self.graph6 {
            let text = if path == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
            };
            return Ok(SweepSource::Graph6Lines(
                text.lines().map(str::to_string).collect(),
            ));
        }
        Ok(SweepSource::Enumeration {
            n: self.enumerate.unwrap(),
            class: self.class.to_class(),
            large_ok: self.large_ok,
        })
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// "all" or a comma-separated list like "1,2,3"
    #[arg(long, default_value = "all")]
    k: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Certified)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = ChecksArg::Conjecture)]
    checks: ChecksArg,
    /// Suppress per-check rows; print only the aggregate report
    #[arg(long)]
    summary: bool,
}

#[derive(Args)]
struct EnumArgs {
    /// Number of vertices
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ClassArg::All)]
    class: ClassArg,
    /// Allow orders 9 and 10 (slow)
    #[arg(long = "large-ok")]
    large_ok: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// "all" or a comma-separated list like "1,2,3"
    #[arg(long, default_value = "all")]
    k: String,
}

#[derive(Args)]
struct PolyArgs {
    /// Family instance whose signless Laplacian characteristic polynomial to print
    #[arg(long = "family", value_name = "SPEC")]
    family: Vec<String>,
    /// Named lemma polynomial (available: u1quintic)
    #[arg(long)]
    lemma: Option<String>,
    /// Order parameter for --lemma
    #[arg(long)]
    n: Option<usize>,
    /// Pendant-count parameter for --lemma
    #[arg(long)]
    a: Option<usize>,
}

fn parse_k(s: &str) -> anyhow::Result<KSelect> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(KSelect::All);
    }
    let mut ks = Vec::new();
    for part in s.split(',') {
        let k: usize = part.trim().parse().with_context(|| format!("bad k value `{part}`"))?;
        if k == 0 {
            bail!("k values must be >= 1");
        }
        ks.push(k);
    }
    if ks.is_empty() {
        bail!("--k needs at least one value");
    }
    Ok(KSelect::List(ks))
}

fn run_checks(
    args: &RunArgs,
    always_report: bool,
    out: &mut dyn Write,
) -> anyhow::Result<u8> {
    let source = args.source.to_source()?;
    let opts = SweepOptions {
        mode: args.mode.to_mode(),
        checks: args.checks.to_checks(),
        ks: parse_k(&args.k)?,
    };
    let mut werr: Option<io::Error> = None;
    let report = verify::sweep(&source, &opts, |row| {
        if args.summary || werr.is_some() {
            return;
        }
        match serde_json::to_string(row) {
            Ok(s) => {
                if let Err(e) = writeln!(out, "{s}") {
                    werr = Some(e);
                }
            }
            Err(e) => werr = Some(e.into()),
        }
    })?;
    if let Some(e) = werr {
        return Err(e.into());
    }
    if args.summary || always_report {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    }
    Ok(if report.violations.is_empty() { 0 } else { 2 })
}

fn cmd_enumerate(args: &EnumArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let graphs = if args.large_ok {
        enumerate::connected_graphs_large_ok(args.n)?
    } else {
        enumerate::connected_graphs(args.n)?
    };
    let class = args.class.to_class();
    for g in graphs {
        if class.map_or(true, |c| g.graph_class() == c) {
            writeln!(out, "{}", graph6::encode(&g))?;
        }
    }
    Ok(0)
}

fn cmd_bounds(args: &BoundsArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let source = args.source.to_source()?;
    let ks = parse_k(&args.k)?;
    for (_, g) in verify::source_graphs(&source)? {
        for rep in verify::check_bounds(&g, &ks)? {
            writeln!(out, "{}", serde_json::to_string(&rep)?)?;
        }
    }
    Ok(0)
}

fn cmd_poly(args: &PolyArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    if let Some(lemma) = &args.lemma {
        if !args.family.is_empty() {
            bail!("poly takes either --family or --lemma, not both");
        }
        if lemma != "u1quintic" {
            bail!("unknown --lemma `{lemma}` (available: u1quintic)");
        }
        let n = args.n.context("--lemma u1quintic requires --n")?;
        let a = args.a.context("--lemma u1quintic requires --a")?;
        writeln!(out, "{}", charpoly::u1_quintic(n, a)?.dump())?;
        return Ok(0);
    }
    if args.family.is_empty() {
        bail!("poly needs --family or --lemma");
    }
    for spec in &args.family {
        let g = spec.parse::<FamilySpec>()?.build()?;
        writeln!(out, "{}", charpoly::char_poly_q(&g)?.dump())?;
    }
    Ok(0)
}

fn run() -> anyhow::Result<u8> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be >= 1");
        }
        // ignore the error if a pool already exists (e.g. repeated in tests)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    let code = match &cli.cmd {
        Cmd::Check(args) => run_checks(args, false, &mut out)?,
        Cmd::Sweep(args) => run_checks(args, true, &mut out)?,
        Cmd::Enumerate(args) => cmd_enumerate(args, &mut out)?,
        Cmd::Bounds(args) => cmd_bounds(args, &mut out)?,
        Cmd::Poly(args) => cmd_poly(args, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
