use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use hlmenger::edgelist::{parse_edge_list, write_edge_list};
use hlmenger::report::Target;
use hlmenger::verify::{run_check, CheckKind, CheckRequest, Subject};
use hlmenger::{bcdc, gen_family, line_graph, FamilyKind};

/// Hypercube-like networks, line graphs, and strong Menger edge connectivity checks.
#[derive(Parser, Debug)]
#[command(name = "hlmenger", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a hypercube-like network as an edge list.
    Gen(GenArgs),
    /// Build the line graph of an edge list.
    Linegraph(LinegraphArgs),
    /// Emit the BCDC original graph A_n and logical graph B_n.
    Bcdc(BcdcArgs),
    /// Run a named check and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    /// hypercube, crossed, mobius0, mobius1, ltq or random.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Seed for the random family.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the recursive join record (bijection per level) as JSON.
    #[arg(long)]
    construction: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LinegraphArgs {
    #[arg(long = "in", required_unless_present = "bcdc", conflicts_with = "bcdc")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the line vertex → base edge map as JSON.
    #[arg(long)]
    provenance: Option<PathBuf>,
    /// Emit A_n and B_n for the crossed cube of dimension `--n` instead.
    #[arg(long, requires = "n")]
    bcdc: bool,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct BcdcArgs {
    #[arg(long)]
    n: usize,
    /// Where to write A_n; with neither path both go to stdout.
    #[arg(long)]
    original: Option<PathBuf>,
    /// Where to write B_n.
    #[arg(long)]
    logical: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// smec, ft-smec, cond-ft-smec, lemma32, lemma41, appendixA,
    /// tight-uncond, tight-cond, validate or prop31.
    #[arg(long)]
    check: String,
    /// Fault bound; defaults to the check's tolerated bound at dimension n.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Seed for sampling and for the random family.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Append the deterministic adversarial fault sets.
    #[arg(long)]
    adversarial: bool,
    /// Tightness checks: certify every admissible target vertex.
    #[arg(long)]
    all_targets: bool,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Exhaustive mode refuses more fault sets than this.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u128,
    /// Edge list of a base network (or of the line graph itself with `--line`).
    #[arg(long = "in", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Treat `--in` as the graph under test rather than its base network.
    #[arg(long, requires = "input")]
    line: bool,
    #[arg(long, required_unless_present = "input")]
    family: Option<String>,
    /// Dimension; required with `--family`, optional with `--in --line`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let kind = FamilyKind::parse(&a.family, a.seed)?;
    let h = gen_family(kind, a.n)?;
    emit(a.out.as_deref(), &write_edge_list(h.graph()))?;
    if let Some(p) = a.construction {
        emit(Some(&p), &(serde_json::to_string_pretty(&h.record())? + "\n"))?;
    }
    Ok(())
}

fn cmd_bcdc(n: usize, original: Option<&Path>, logical: Option<&Path>) -> Result<()> {
    let pair = bcdc(n)?;
    if let Some(bad) = pair.check().into_iter().find(|c| !c.passed) {
        bail!("BCDC integrity check `{}` failed: {}", bad.name, bad.detail);
    }
    let a = write_edge_list(&pair.original);
    let b = write_edge_list(pair.logical.graph());
    if original.is_none() && logical.is_none() {
        return emit(None, &format!("c original A_{n}\n{a}c logical B_{n}\n{b}"));
    }
    if let Some(p) = original {
        emit(Some(p), &a)?;
    }
    if let Some(p) = logical {
        emit(Some(p), &b)?;
    }
    Ok(())
}

fn cmd_linegraph(a: LinegraphArgs) -> Result<()> {
    if a.bcdc {
        let n = a.n.context("--bcdc needs --n")?;
        return cmd_bcdc(n, None, a.out.as_deref());
    }
    let path = a.input.context("--in is required")?;
    let text = String::from_utf8(read(&path)?).context("input is not UTF-8")?;
    let base = parse_edge_list(&text)?;
    let lg = line_graph(&base);
    emit(a.out.as_deref(), &write_edge_list(lg.graph()))?;
    if let Some(p) = a.provenance {
        emit(Some(&p), &(serde_json::to_string_pretty(&lg.provenance())? + "\n"))?;
    }
    Ok(())
}

fn subject(a: &VerifyArgs) -> Result<Subject> {
    if let Some(path) = &a.input {
        let bytes = read(path)?;
        let text = std::str::from_utf8(&bytes).context("input is not UTF-8")?;
        let g = parse_edge_list(text)?;
        let target = Target {
            input: Some(path.display().to_string()),
            sha256: Some(hex::encode(Sha256::digest(&bytes))),
            n: a.n,
            ..Target::default()
        };
        return Ok(if a.line {
            Subject::line(g, a.n, target)
        } else {
            Subject::base(g, target)
        });
    }
    let family = a.family.as_deref().context("--family or --in is required")?;
    let n = a.n.context("--family needs --n")?;
    Ok(Subject::family(FamilyKind::parse(family, a.seed)?, n)?)
}

fn cmd_verify(a: VerifyArgs) -> Result<bool> {
    let check: CheckKind = a.check.parse()?;
    let s = subject(&a)?;
    let mut req = CheckRequest::new(check)
        .with_adversarial(a.adversarial)
        .with_jobs(a.jobs);
    req.m = a.m;
    req.all_targets = a.all_targets;
    req.budget = a.budget;
    if a.mode == ModeArg::Sample {
        req = req.sampled(a.samples, a.seed);
    }
    let report = run_check(&s, &req)?;
    emit(a.out.as_deref(), &(report.to_json() + "\n"))?;
    let c = &report.counts;
    eprintln!(
        "{}: {} (visited {}, skipped {}, failures {}, {:.2}s)",
        report.check_name,
        if report.passed() { "pass" } else { "COUNTEREXAMPLE" },
        c.visited + c.adversarial_visited,
        c.skipped_conditional,
        c.failures,
        report.timing.wall_seconds,
    );
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a).map(|_| true),
        Command::Linegraph(a) => cmd_linegraph(a).map(|_| true),
        Command::Bcdc(a) => cmd_bcdc(a.n, a.original.as_deref(), a.logical.as_deref()).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
