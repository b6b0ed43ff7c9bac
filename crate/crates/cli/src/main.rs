use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use tensorcount::counters::count_hamiltonian;
use tensorcount::engine::{plan_exhaustive, plan_greedy, ContractionPlan, DEFAULT_EXHAUSTIVE_LIMIT};
use tensorcount::graph::{read_graph, Graph};
use tensorcount::oracle::{brute_cycle_spectrum, brute_edge_colorings, brute_hamiltonian};
use tensorcount::rings::eval_power_sum;
use tensorcount::{
    count_edge_colorings, count_spanning_cycles, count_tait, cycle_spectrum, cycle_spectrum_with,
    eval_cycle_function, Error, ErrorKind, SpectrumOptions,
};

/// Exact edge-coloring and cycle counts by symmetric tensor contraction.
#[derive(Debug, Parser)]
#[command(name = "tensorcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count proper edge colorings with r colors.
    Colorings {
        #[arg(long = "r")]
        r: usize,
        input: PathBuf,
    },
    /// Count 3-edge colorings of a cubic graph.
    Tait { input: PathBuf },
    /// Count spanning 2-regular subgraphs.
    SpanningCycles { input: PathBuf },
    /// Count Hamiltonian cycles.
    Hamiltonian { input: PathBuf },
    /// Print every cycle-type count as one line of JSON.
    Spectrum {
        /// Only report cycle types up to this weight.
        #[arg(long)]
        max_weight: Option<usize>,
        /// Evaluate interpolation points in parallel.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        input: PathBuf,
    },
    /// Evaluate the cycle generating function at integer x and t.
    Eval {
        /// Comma-separated integers x_1, ..., x_{r-1}.
        #[arg(long = "x")]
        x: String,
        #[arg(long = "t")]
        t: String,
        input: PathBuf,
    },
    /// Print a contraction order and its predicted cost.
    Plan {
        #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
        strategy: Strategy,
        /// Vertex ids for `--strategy given`, separated by spaces or commas.
        #[arg(long)]
        order: Option<String>,
        /// Number of colors used in the cost model.
        #[arg(long = "r", default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        input: PathBuf,
    },
    /// Compare the engine with brute-force enumeration on this graph.
    Verify { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Greedy,
    Exhaustive,
    Given,
}

fn load(path: &PathBuf) -> Result<Graph, Error> {
    if path.as_os_str() == "-" {
        read_graph(io::stdin().lock())
    } else {
        read_graph(File::open(path)?)
    }
}

fn parse_int(s: &str) -> Result<BigInt, Error> {
    s.trim()
        .parse()
        .map_err(|_| Error::Argument(format!("`{s}` is not an integer")))
}

fn parse_order(s: &str) -> Result<Vec<usize>, Error> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Argument(format!("`{t}` is not a vertex id")))
        })
        .collect()
}

fn run(cmd: Command, out: &mut impl Write) -> Result<(), Error> {
    match cmd {
        Command::Colorings { r, input } => {
            writeln!(out, "{}", count_edge_colorings(&load(&input)?, r))?;
        }
        Command::Tait { input } => {
            writeln!(out, "{}", count_tait(&load(&input)?)?)?;
        }
        Command::SpanningCycles { input } => {
            writeln!(out, "{}", count_spanning_cycles(&load(&input)?))?;
        }
        Command::Hamiltonian { input } => {
            writeln!(out, "{}", count_hamiltonian(&load(&input)?)?)?;
        }
        Command::Spectrum { max_weight, threads, input } => {
            let g = load(&input)?;
            let opts = SpectrumOptions {
                max_weight,
                threads,
                ..SpectrumOptions::default()
            };
            let spectrum = cycle_spectrum_with(&g, &opts)?;
            writeln!(out, "{}", spectrum.to_json(g.vertex_count()))?;
        }
        Command::Eval { x, t, input } => {
            let x = x
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(parse_int)
                .collect::<Result<Vec<_>, _>>()?;
            let t = parse_int(&t)?;
            writeln!(out, "{}", eval_cycle_function(&load(&input)?, &x, &t))?;
        }
        Command::Plan { strategy, order, r, limit, input } => {
            let g = load(&input)?;
            let plan = match (strategy, order) {
                (Strategy::Greedy, None) => plan_greedy(&g, r),
                (Strategy::Exhaustive, None) => plan_exhaustive(&g, r, limit)?,
                (Strategy::Given, Some(order)) => ContractionPlan::new(&g, parse_order(&order)?, r)?,
                (Strategy::Given, None) => {
                    return Err(Error::Argument("--strategy given needs --order".into()))
                }
                (_, Some(_)) => {
                    return Err(Error::Argument("--order is only used with --strategy given".into()))
                }
            };
            let ids: Vec<String> = plan.order().iter().map(ToString::to_string).collect();
            writeln!(out, "order: {}", ids.join(" "))?;
            writeln!(out, "cost: {}", plan.predicted_cost())?;
        }
        Command::Verify { input } => verify(&load(&input)?, out)?,
    }
    Ok(())
}

/// Runs each engine counter next to its brute-force oracle, within the
/// sizes the oracles can handle.
fn verify(g: &Graph, out: &mut impl Write) -> Result<(), Error> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut mismatches = 0;
    let mut report = |out: &mut dyn Write, what: String, engine: BigInt, oracle: BigInt| -> io::Result<()> {
        if engine == oracle {
            writeln!(out, "ok {what}: {engine}")
        } else {
            mismatches += 1;
            writeln!(out, "MISMATCH {what}: engine {engine}, oracle {oracle}")
        }
    };
    let mut spectrum_mismatch = false;

    if m <= 16 {
        for r in 1..=g.max_degree() + 1 {
            report(out, format!("colorings r={r}"), count_edge_colorings(g, r), brute_edge_colorings(g, r))?;
        }
    } else {
        writeln!(out, "skip colorings: {m} edges")?;
    }

    if m <= 24 {
        let brute = brute_cycle_spectrum(g);
        let spanning = brute.iter().filter(|(l, _)| l.weight() == n).map(|(_, c)| c.clone()).sum();
        report(out, "spanning-cycles".into(), count_spanning_cycles(g), spanning)?;
        let x: Vec<BigInt> = (1..=n as i64).map(|i| BigInt::from(if i % 2 == 0 { -i } else { i })).collect();
        let t = BigInt::from(2);
        let poly = brute
            .iter()
            .map(|(l, c)| t.pow((n - l.weight()) as u32) * eval_power_sum(l, &x) * c)
            .sum();
        report(out, "eval".into(), eval_cycle_function(g, &x, &t), poly)?;
        let spectrum = cycle_spectrum(g, None)?;
        if spectrum == brute {
            writeln!(out, "ok spectrum: {} types", spectrum.len())?;
        } else {
            spectrum_mismatch = true;
            writeln!(
                out,
                "MISMATCH spectrum: engine {}, oracle {}",
                spectrum.to_json(n),
                brute.to_json(n)
            )?;
        }
    } else {
        writeln!(out, "skip spectrum: {m} edges")?;
    }

    if (3..=14).contains(&n) {
        report(out, "hamiltonian".into(), count_hamiltonian(g)?, brute_hamiltonian(g))?;
    } else {
        writeln!(out, "skip hamiltonian: {n} vertices")?;
    }

    let mismatches = mismatches + usize::from(spectrum_mismatch);
    if mismatches > 0 {
        return Err(Error::Inconsistent(format!("{mismatches} check(s) disagree with the oracle")));
    }
    Ok(())
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Internal => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
