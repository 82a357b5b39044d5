use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;

use kcl_core::cayley::{
    nonunits, power_of_cycle, theorem_graph, unitary, unitary_complement, units, CayleySpec, CirculantSpec,
    DihedralSpec, TheoremId, TheoremOptions,
};
use kcl_core::choosability::{
    choice_number, is_f_choosable, ChoosabilityOptions, ChoosabilityStatus, DEFAULT_BUDGET_NODES,
};
use kcl_core::dimacs::{read_dimacs, write_dimacs};
use kcl_core::kernels::{kernel_perfect, KernelCheckOptions, KernelStatus, DEFAULT_EXHAUSTIVE_CAP};
use kcl_core::list_coloring::{galvin_color, verify_list_coloring, GalvinOutcome, ListAssignment};
use kcl_core::orientation::OrientationStrategy;
use kcl_core::report::{verify, VerifyOptions};
use kcl_core::{Digraph, Error, Graph, Result};

const EXIT_ERROR: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kcl",
    version,
    about = "Kernel-perfect orientations and exact choosability of Cayley graphs"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a graph as DIMACS plus its spec as JSON.
    Gen(GenArgs),
    /// Check a theorem instance against exact computations.
    Verify(VerifyArgs),
    /// Decide whether a digraph is kernel-perfect.
    KernelCheck(KernelArgs),
    /// Color a digraph from lists by repeatedly coloring kernels.
    Color(ColorArgs),
    /// Decide f-choosability or compute the choice number.
    Ch(ChArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Unitary,
    Complement,
    Circulant,
    Power,
    Dihedral,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    /// Order of the cyclic group (rotation order for dihedral graphs).
    #[arg(long)]
    n: usize,
    /// Connection set for `circulant` (comma-separated residues).
    #[arg(long, value_delimiter = ',')]
    connection: Option<Vec<usize>>,
    /// Power for `power`.
    #[arg(long)]
    k: Option<usize>,
    /// Rotation generators for `dihedral`.
    #[arg(long, value_delimiter = ',')]
    rotations: Option<Vec<usize>>,
    /// Reflection generators for `dihedral`.
    #[arg(long, value_delimiter = ',')]
    reflections: Option<Vec<usize>>,
    /// Build the instance of this theorem instead.
    #[arg(long)]
    theorem: Option<TheoremId>,
    /// Extra rotation generators for the corollary instances.
    #[arg(long, value_delimiter = ',')]
    s2: Option<Vec<usize>>,
    /// Skip the odd-order and two-prime-divisor preconditions.
    #[arg(long)]
    force: bool,
    /// Add the reflections r and r1 to corollary graphs.
    #[arg(long)]
    with_reflections: bool,
    /// Write `<out>.dimacs` and `<out>.json`; DIMACS goes to stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance family to check.
    #[arg(long)]
    theorem: TheoremId,
    /// Order of the cyclic group (rotation order for dihedral graphs).
    #[arg(long)]
    n: usize,
    /// Extra rotation generators for the corollary instances.
    #[arg(long, value_delimiter = ',')]
    s2: Option<Vec<usize>>,
    /// Orientation strategy; repeatable (default: paper_literal and completed).
    #[arg(long = "strategy")]
    strategies: Vec<OrientationStrategy>,
    /// Search-node budget for the choosability enumeration.
    #[arg(long, env = "KCL_BUDGET_NODES", default_value_t = DEFAULT_BUDGET_NODES)]
    budget_nodes: u64,
    /// Maximum number of supports in the kernel sweep.
    #[arg(long)]
    budget_subsets: Option<u64>,
    /// Sample random supports instead of sweeping all of them.
    #[arg(long)]
    sample: bool,
    /// Seed for sampled supports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest order swept exhaustively by the kernel check.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    exhaustive_cap: usize,
    /// Skip the choice number computation.
    #[arg(long)]
    skip_ch: bool,
    /// Skip the odd-order and two-prime-divisor preconditions.
    #[arg(long)]
    force: bool,
    /// Add the reflections r and r1 to corollary graphs.
    #[arg(long)]
    with_reflections: bool,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct KernelArgs {
    /// Digraph JSON file.
    digraph: PathBuf,
    /// Maximum number of supports examined.
    #[arg(long)]
    budget_subsets: Option<u64>,
    /// Sample random supports instead of sweeping all of them.
    #[arg(long)]
    sample: bool,
    /// Seed for sampled supports.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest order swept exhaustively by the kernel check.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    exhaustive_cap: usize,
}

#[derive(Args)]
struct ColorArgs {
    /// Digraph JSON file.
    digraph: PathBuf,
    /// List assignment JSON file.
    lists: PathBuf,
}

#[derive(Args)]
struct ChArgs {
    /// DIMACS graph file.
    graph: PathBuf,
    /// Decide k-choosability.
    #[arg(long, conflicts_with = "exact", required_unless_present = "exact")]
    k: Option<usize>,
    /// Compute the choice number.
    #[arg(long)]
    exact: bool,
    /// Search-node budget for the choosability enumeration.
    #[arg(long, env = "KCL_BUDGET_NODES", default_value_t = DEFAULT_BUDGET_NODES)]
    budget_nodes: u64,
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn theorem_options(s2: Option<Vec<usize>>, force: bool, with_reflections: bool) -> TheoremOptions {
    TheoremOptions {
        s2: s2.unwrap_or_default(),
        force,
        with_reflections,
    }
}

fn gen(a: GenArgs) -> Result<u8> {
    let missing = |what: &str| Error::InvalidSpec(format!("--{what} is required for this family"));
    let (spec, graph): (CayleySpec, Graph) = if let Some(id) = a.theorem {
        if id.is_dihedral() != matches!(a.family, Family::Dihedral) {
            return Err(Error::InvalidSpec(format!(
                "{id} does not build a {} graph",
                family_name(a.family)
            )));
        }
        let inst = theorem_graph(id, a.n, &theorem_options(a.s2, a.force, a.with_reflections))?;
        (inst.spec, inst.graph)
    } else {
        match a.family {
            Family::Unitary => (
                CayleySpec::Circulant(CirculantSpec::new(a.n, units(a.n)?)?),
                unitary(a.n)?,
            ),
            Family::Complement => (
                CayleySpec::Circulant(CirculantSpec::new(a.n, nonunits(a.n)?)?),
                unitary_complement(a.n)?,
            ),
            Family::Circulant => {
                let spec = CirculantSpec::new(a.n, a.connection.ok_or_else(|| missing("connection"))?)?;
                let g = CayleySpec::Circulant(spec.clone()).build()?;
                (CayleySpec::Circulant(spec), g)
            }
            Family::Power => {
                let k = a.k.ok_or_else(|| missing("k"))?;
                let g = power_of_cycle(a.n, k)?;
                let conn = (1..=k).flat_map(|j| [j, a.n - j]);
                (CayleySpec::Circulant(CirculantSpec::new(a.n, conn)?), g)
            }
            Family::Dihedral => {
                let spec = DihedralSpec::new(
                    a.n,
                    a.rotations.ok_or_else(|| missing("rotations"))?,
                    a.reflections.unwrap_or_default(),
                )?;
                let spec = CayleySpec::Dihedral(spec);
                let g = spec.build()?;
                (spec, g)
            }
        }
    };
    let dimacs = write_dimacs(&graph);
    match a.out {
        Some(prefix) => {
            let dpath = prefix.with_extension("dimacs");
            let jpath = prefix.with_extension("json");
            fs::write(&dpath, dimacs)?;
            fs::write(&jpath, serde_json::to_string_pretty(&spec)? + "\n")?;
            eprintln!(
                "wrote {} ({} vertices, {} edges) and {}",
                dpath.display(),
                graph.n(),
                graph.edge_count(),
                jpath.display()
            );
        }
        None => print!("{dimacs}"),
    }
    Ok(0)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Unitary => "unitary",
        Family::Complement => "complement",
        Family::Circulant => "circulant",
        Family::Power => "power",
        Family::Dihedral => "dihedral",
    }
}

fn kernel_options(budget: Option<u64>, sample: bool, seed: u64, cap: usize) -> KernelCheckOptions {
    KernelCheckOptions {
        budget,
        exhaustive_cap: cap,
        sample_seed: sample.then_some(seed),
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let mut opts = VerifyOptions {
        theorem: theorem_options(a.s2, a.force, a.with_reflections),
        kernel: kernel_options(a.budget_subsets, a.sample, a.seed, a.exhaustive_cap),
        choosability: ChoosabilityOptions {
            budget_nodes: a.budget_nodes,
        },
        skip_ch: a.skip_ch,
        ..VerifyOptions::default()
    };
    if !a.strategies.is_empty() {
        opts.strategies = a.strategies;
    }
    let report = verify(a.theorem, a.n, &opts)?;
    let json = serde_json::to_string_pretty(&report)? + "\n";
    match a.json.as_deref() {
        Some(p) if p == Path::new("-") => print!("{json}"),
        Some(p) => {
            fs::write(p, &json)?;
            print!("{}", report.summary());
        }
        None => print!("{}", report.summary()),
    }
    Ok(report.exit_code() as u8)
}

fn cmd_kernel(a: KernelArgs) -> Result<u8> {
    let d: Digraph = serde_json::from_str(&read(&a.digraph)?)?;
    let verdict = kernel_perfect(
        &d,
        &kernel_options(a.budget_subsets, a.sample, a.seed, a.exhaustive_cap),
    )?;
    print_json(&verdict)?;
    Ok(if verdict.status == KernelStatus::BudgetExceeded {
        EXIT_BUDGET
    } else {
        0
    })
}

#[derive(Serialize)]
struct ColorOutput {
    #[serde(flatten)]
    outcome: GalvinOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn cmd_color(a: ColorArgs) -> Result<u8> {
    let d: Digraph = serde_json::from_str(&read(&a.digraph)?)?;
    let lists: ListAssignment = serde_json::from_str(&read(&a.lists)?)?;
    let outcome = galvin_color(&d, &lists)?;
    let verified = match &outcome {
        GalvinOutcome::Colored { coloring, .. } => Some(verify_list_coloring(d.underlying(), &lists, coloring)?),
        GalvinOutcome::NoKernel { .. } => None,
    };
    let code = if verified == Some(true) { 0 } else { EXIT_REFUTED };
    print_json(&ColorOutput { outcome, verified })?;
    Ok(code)
}

fn cmd_ch(a: ChArgs) -> Result<u8> {
    let g = read_dimacs(&read(&a.graph)?)?;
    let opts = ChoosabilityOptions {
        budget_nodes: a.budget_nodes,
    };
    match a.k {
        Some(k) => {
            if k == 0 {
                return Err(Error::InvalidLists("list size must be positive".into()));
            }
            let v = is_f_choosable(&g, &vec![k; g.n()], &opts);
            print_json(&v)?;
            Ok(if v.status == ChoosabilityStatus::BudgetExceeded {
                EXIT_BUDGET
            } else {
                0
            })
        }
        None => {
            let c = choice_number(&g, &opts);
            print_json(&c)?;
            Ok(if c.exact.is_none() { EXIT_BUDGET } else { 0 })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            log::warn!("thread pool: {e}");
        }
        info!("using {t} worker threads");
    }
    match cli.cmd {
        Cmd::Gen(a) => gen(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::KernelCheck(a) => cmd_kernel(a),
        Cmd::Color(a) => cmd_color(a),
        Cmd::Ch(a) => cmd_ch(a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
