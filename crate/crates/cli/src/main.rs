use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fano212_cli::{run, Command, Format, Options, Output};

#[derive(Parser)]
#[command(name = "fano212", version, about = "Exact checks for three (1,1)-divisors in P^3 x P^3 with a cyclic action")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Instance file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Tree,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the model and that the action preserves its pencil.
    Validate,
    /// Smoothness of the quartic and of both centres; `--full` adds the threefold.
    Smooth {
        #[arg(long)]
        full: bool,
    },
    /// Whether the group makes X a G-Fano threefold.
    Gfano,
    /// Characters on the Lie algebras of both Jacobians.
    Chars {
        /// Also compute them by the independent oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Formula against oracle for both Jacobians.
    Verify,
    /// Cohomology of O_X(a, b).
    Cohomology {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Hilbert polynomials of both blowdown centres.
    Hilbert,
    /// The Picard lattice and its invariant part.
    Picard,
    /// Linearisability of the action.
    Verdict,
    /// Write a seeded random swap-equivariant instance.
    Random {
        #[arg(long)]
        order: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        weights: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        exponents: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut options = Options { input: cli.input, ..Options::default() };
    let command = match cli.command {
        Cmd::Validate => Command::Validate,
        Cmd::Smooth { full } => {
            options.full = full;
            Command::Smooth
        }
        Cmd::Gfano => Command::Gfano,
        Cmd::Chars { oracle } => {
            options.oracle = oracle;
            Command::Chars
        }
        Cmd::Verify => Command::Verify,
        Cmd::Cohomology { a, b } => {
            options.a = Some(a);
            options.b = Some(b);
            Command::Cohomology
        }
        Cmd::Hilbert => Command::Hilbert,
        Cmd::Picard => Command::Picard,
        Cmd::Verdict => Command::Verdict,
        Cmd::Random { order, weights, exponents, seed, out } => {
            options.order = Some(order);
            options.weights = Some(weights);
            options.exponents = Some(exponents);
            options.seed = Some(seed);
            options.out = out;
            Command::Random
        }
    };
    let format = match cli.format {
        FormatArg::Plain => Format::Plain,
        FormatArg::Tree => Format::Tree,
    };
    let (report, output) = run(command, &options);
    let text = match output {
        Output::Instance(text) if report.exit_code() == 0 => text,
        _ => report.render(format),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    ExitCode::from(report.exit_code())
}
