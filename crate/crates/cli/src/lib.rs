//! The `exactcolor` command line.
//!
//! [`run`] takes the argument vector and two writers so tests can drive the
//! tool in-process. Results go to `stdout`, diagnostics to `stderr`.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use exactcolor::cnf::MAX_VARIABLE_CAP;
use exactcolor::corpus::{decomposition_corpus, DEFAULT_SEED};
use exactcolor::reductions::combine_with;
use exactcolor::solver::DEFAULT_NODE_BUDGET;
use exactcolor::verify::{
    controls, parity_campaign, prop1_campaign, rho_campaign, sigma_campaign, CampaignReport,
    ChiMode, VerifyConfig,
};
use exactcolor::{
    chromatic_number, mk_set, parse_dimacs_cnf, read_dimacs, write_dimacs, write_dot, CnfError,
    CnfFormula, GapReduction, MonotoneChain, OracleRho, ParseError, ReductionError, SatConfig,
    Sigma, SolverConfig, SolverError,
};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

pub const NODE_BUDGET_ENV: &str = "EXACTCOLOR_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "exactcolor",
    version,
    about = "3-CNF to coloring reductions and an exact chromatic-number solver"
)]
pub struct Cli {
    /// Colour assignments the exact search may try per k-colorability question.
    #[arg(long, global = true, env = NODE_BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,

    /// Largest variable count brute-force satisfiability will enumerate.
    #[arg(long, global = true, default_value_t = 24,
          value_parser = clap::value_parser!(u64).range(1..=MAX_VARIABLE_CAP as u64))]
    pub var_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a DIMACS CNF file to a DIMACS edge graph.
    Reduce {
        #[arg(value_enum)]
        reduction: ReductionName,
        cnf: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Combine 2k formulas, ρ on odd and σ on even positions.
    Combine {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(required = true)]
        cnfs: Vec<PathBuf>,
        /// Print the join/union expression instead of the flattened graph.
        #[arg(long)]
        composite: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Chromatic number of a DIMACS edge graph, with a witness coloring.
    Chi {
        graph: PathBuf,
        /// Emit the colored graph as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Members of M_k, space separated.
    Mkset {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Run a verification campaign and print its JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReductionName {
    Sigma,
    Rho,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CampaignName {
    Sigma,
    Rho,
    Parity,
    Prop1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Compositional,
    Monolithic,
}

impl From<ModeArg> for ChiMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Compositional => ChiMode::Compositional,
            ModeArg::Monolithic => ChiMode::Monolithic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Control {
    /// `rho`: a stand-in that always returns K4.
    BrokenRho,
    /// `parity`: σ on odd and ρ on even positions.
    Swapped,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub campaign: CampaignName,
    /// Chain half-length for `parity`.
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random inputs: formulas for sigma/rho (default 200), extra 6-7 vertex
    /// graphs for prop1 (default 100).
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum, default_value = "compositional")]
    pub mode: ModeArg,
    /// Largest i checked by prop1.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_i: u64,
    /// Replace a component by a deliberately broken one.
    #[arg(long, value_enum)]
    pub control: Option<Control>,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("writing output: {0}")]
    Output(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(_)
            | CliError::Cnf(CnfError::VariableCapExceeded { .. })
            | CliError::Reduction(ReductionError::Cnf(CnfError::VariableCapExceeded { .. })) => {
                EXIT_UNDECIDED
            }
            CliError::Output(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs the tool and returns its exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let solver = SolverConfig {
        node_budget: cli.node_budget,
    };
    let sat = SatConfig {
        variable_cap: cli.var_cap as usize,
    };
    match &cli.command {
        Command::Reduce {
            reduction,
            cnf,
            output,
        } => {
            let phi = read_cnf(cnf)?;
            let g = match reduction {
                ReductionName::Sigma => Sigma.reduce(&phi)?,
                ReductionName::Rho => OracleRho { sat }.reduce(&phi)?,
            };
            emit(output, stdout, &write_dimacs(&g))?;
            Ok(EXIT_OK)
        }
        Command::Combine {
            k,
            cnfs,
            composite,
            output,
        } => {
            let chain = read_chain(*k as usize, cnfs, &sat)?;
            let c = combine_with(&chain, &OracleRho { sat }, &Sigma)?;
            let text = if *composite {
                c.to_string()
            } else {
                write_dimacs(&c.flatten())
            };
            emit(output, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Chi { graph, dot } => {
            let g = read_graph(graph)?;
            let r = chromatic_number(&g, &solver)?;
            let mut text = format!("chi {}\n", r.chi);
            if *dot {
                text.push_str(&write_dot(&g, Some(&r.witness)));
            } else {
                let colors: Vec<String> = r
                    .witness
                    .assignment()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                text.push_str(&format!("coloring {}\n", colors.join(" ")));
            }
            stdout
                .write_all(text.as_bytes())
                .map_err(CliError::Output)?;
            Ok(EXIT_OK)
        }
        Command::Mkset { k } => {
            let m = mk_set(*k as usize)?;
            writeln!(stdout, "{m}").map_err(CliError::Output)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let cfg = VerifyConfig {
                solver,
                sat,
                seed: args.seed,
                timings: args.timings,
            };
            let report = campaign(args, &cfg)?;
            stdout
                .write_all(report.to_json().as_bytes())
                .map_err(CliError::Output)?;
            for case in report.failing_cases() {
                writeln!(
                    stderr,
                    "{} {:?}: expected {}, observed {}{}",
                    case.key,
                    case.status,
                    case.expected,
                    case.observed,
                    case.detail
                        .as_ref()
                        .map(|d| format!(" ({d})"))
                        .unwrap_or_default()
                )
                .map_err(CliError::Output)?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else if report.stats.failed == 0 {
                EXIT_UNDECIDED
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn campaign(args: &VerifyArgs, cfg: &VerifyConfig) -> Result<CampaignReport, CliError> {
    // whether the campaign's control applies; any other control is a usage error
    let control = |applies: Option<Control>| match args.control {
        Some(c) if Some(c) != applies => Err(CliError::Usage(format!(
            "--control {} does not apply to this campaign",
            c.to_possible_value().unwrap().get_name()
        ))),
        c => Ok(c.is_some()),
    };
    let count = |default| args.count.unwrap_or(default);
    Ok(match args.campaign {
        CampaignName::Sigma => {
            control(None)?;
            sigma_campaign(count(200), cfg)
        }
        CampaignName::Rho => {
            if control(Some(Control::BrokenRho))? {
                rho_campaign(count(200), &controls::ConstantK4, cfg)
            } else {
                rho_campaign(count(200), &OracleRho { sat: cfg.sat }, cfg)
            }
        }
        CampaignName::Parity => {
            let k = args.k as usize;
            if control(Some(Control::Swapped))? {
                controls::swapped_parity_campaign(k, args.mode.into(), cfg)?
            } else {
                parity_campaign(k, args.mode.into(), cfg)?
            }
        }
        CampaignName::Prop1 => {
            control(None)?;
            let graphs = decomposition_corpus(cfg.seed, count(100));
            prop1_campaign(&graphs, args.max_i as usize, cfg, Some(cfg.seed))
        }
    })
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn read_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parse_dimacs_cnf(&read_text(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<exactcolor::Graph, CliError> {
    read_dimacs(&read_text(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads exactly `2k` formulas and checks that they form a monotone chain.
fn read_chain(k: usize, paths: &[PathBuf], sat: &SatConfig) -> Result<MonotoneChain, CliError> {
    if paths.len() != 2 * k {
        return Err(CliError::Usage(format!(
            "-k {k} needs exactly {} formulas, got {}",
            2 * k,
            paths.len()
        )));
    }
    let formulas = paths
        .iter()
        .map(|p| read_cnf(p))
        .collect::<Result<Vec<_>, _>>()?;
    MonotoneChain::new(formulas, sat).map_err(|e| match e {
        CnfError::NotMonotone { index } => CliError::Usage(format!(
            "formulas are not monotone: formula {} ({}) is satisfiable but formula {} ({}) is not",
            index + 1,
            paths[index].display(),
            index,
            paths[index - 1].display()
        )),
        e => CliError::Cnf(e),
    })
}

fn emit(output: &Output, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &output.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::Output),
    }
}
