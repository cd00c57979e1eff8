use std::path::PathBuf;
use std::process::ExitCode;

use chebsig::{check, run, run_all, write_report, ChebFit, Experiment, ExperimentReport, HarnessError, Options, SpacingChoice};
use chebsig_core::signal::{FilterMode, RngSeed, UnevenMode};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chebsig", version, about = "Chebyshev and Fourier interpolation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Interpolant through seeded random data; extrema and dense evaluation
    Random,
    /// Error versus degree for e^x and 1/(1+25x^2)
    Converge,
    /// Degree-9 sin interpolants on [-6,6] and [0,6]
    Scale,
    /// Adaptive length versus wave number
    Wavelen,
    /// Chebyshev coefficient magnitudes (tanh sum, stripe, atan)
    Coeffs,
    /// Gamma-variate reconstruction, Chebyshev versus Fourier
    Gamma,
    /// Amplitude and phase spectrum of the gamma samples
    Spectrum,
    /// Deviation of the Chebyshev fit at its nodes
    Deviation,
    /// Moving-average filtering of the noisy gamma curve
    Filter,
    /// Node families, Legendre comparison and distance profiles
    Nodes,
    /// Condition numbers of Chebyshev and monomial bases
    Condition,
    /// Every experiment
    RunAll,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Even,
    Uneven,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnevenArg {
    Sorted,
    Modulated,
}

#[derive(Clone, Copy, ValueEnum)]
enum FitArg {
    NodeValues,
    Resample,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    Causal,
    Centered,
}

#[derive(Args)]
struct Flags {
    /// Point count (random: data points, nodes: nodes per family)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(2..))]
    n: Option<u64>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "off")]
    noise: OnOff,
    #[arg(long, global = true, value_enum, default_value = "even")]
    spacing: SpacingArg,
    #[arg(long, global = true, value_enum, default_value = "sorted")]
    uneven_mode: UnevenArg,
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    window: u64,
    #[arg(long, global = true, value_enum, default_value = "node-values")]
    cheb_fit: FitArg,
    #[arg(long, global = true, value_enum, default_value = "causal")]
    filter_mode: FilterArg,
    /// Also write SVG line plots next to the CSV files
    #[arg(long, global = true)]
    svg: bool,
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Run golden assertions; exit 1 if any fails
    #[arg(long, global = true)]
    check: bool,
}

impl Flags {
    fn options(&self) -> Options {
        Options {
            n: self.n.map(|v| v as usize),
            seed: RngSeed(self.seed),
            noise: matches!(self.noise, OnOff::On),
            spacing: match self.spacing {
                SpacingArg::Even => SpacingChoice::Even,
                SpacingArg::Uneven => SpacingChoice::Uneven,
            },
            uneven_mode: match self.uneven_mode {
                UnevenArg::Sorted => UnevenMode::Sorted,
                UnevenArg::Modulated => UnevenMode::Modulated,
            },
            window: self.window as usize,
            cheb_fit: match self.cheb_fit {
                FitArg::NodeValues => ChebFit::NodeValues,
                FitArg::Resample => ChebFit::Resample,
            },
            filter_mode: match self.filter_mode {
                FilterArg::Causal => FilterMode::Causal,
                FilterArg::Centered => FilterMode::Centered,
            },
        }
    }
}

fn experiment(cmd: Command) -> Option<Experiment> {
    Some(match cmd {
        Command::Random => Experiment::Random,
        Command::Converge => Experiment::Converge,
        Command::Scale => Experiment::Scale,
        Command::Wavelen => Experiment::Wavelen,
        Command::Coeffs => Experiment::Coeffs,
        Command::Gamma => Experiment::Gamma,
        Command::Spectrum => Experiment::Spectrum,
        Command::Deviation => Experiment::Deviation,
        Command::Filter => Experiment::Filter,
        Command::Nodes => Experiment::Nodes,
        Command::Condition => Experiment::Condition,
        Command::RunAll => return None,
    })
}

fn execute(cli: &Cli) -> Result<bool, HarnessError> {
    let opts = cli.flags.options();
    let reports: Vec<(Experiment, ExperimentReport)> = match experiment(cli.command) {
        Some(exp) => vec![(exp, run(exp, &opts)?)],
        None => run_all(&opts)?,
    };
    let mut all_passed = true;
    for (exp, report) in &reports {
        let dir = write_report(report, &cli.flags.out, cli.flags.svg)?;
        println!("{}: wrote {}", report.name(), dir.display());
        if cli.flags.check {
            for c in check(*exp, report, &opts)? {
                all_passed &= c.passed;
                println!("  {} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.label, c.detail);
            }
        }
    }
    Ok(all_passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("chebsig: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
