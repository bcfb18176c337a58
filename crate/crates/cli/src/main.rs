use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grassmoduli::moduli::{classify_components, moduli_report, Parity};
use grassmoduli::partition::{dim_gl, Partition};
use grassmoduli::verify::{run, Suite, VerifyConfig};

mod render;

use render::{ComponentRow, Format};

#[derive(Parser)]
#[command(
    name = "grassmoduli",
    version,
    about = "Exact decomposition of the square of F(kϖ_q) and the moduli dimension dim V_k"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components of F(kϖ_q)⊗F(kϖ_q) with parity, dimension, center weight and GS flag.
    Decompose {
        #[command(flatten)]
        pqk: Pqk,
        #[arg(long, value_enum, default_value_t = ParityFilter::Both)]
        parity: ParityFilter,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension of V_k, computed two ways, with consistency flags.
    Moduli {
        #[command(flatten)]
        pqk: Pqk,
        #[command(flatten)]
        out: Output,
    },
    /// Runs the oracle cross-checks; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
        /// Restrict to these suites (repeatable or comma separated).
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        #[command(flatten)]
        out: Output,
    },
    /// dim V(λ) over GL(n).
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        /// Print 0 instead of failing when λ has more than n rows.
        #[arg(long)]
        allow_zero: bool,
    },
}

#[derive(Args)]
struct Pqk {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Output {
    fn writer(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Failure::Usage(format!("cannot create {}: {e}", path.display()))
            })?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityFilter {
    Sym,
    Alt,
    Both,
}

impl ParityFilter {
    fn admits(self, p: Parity) -> bool {
        match self {
            ParityFilter::Both => true,
            ParityFilter::Sym => p == Parity::Symmetric,
            ParityFilter::Alt => p == Parity::Antisymmetric,
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
    ChecksFailed,
}

impl From<grassmoduli::Error> for Failure {
    fn from(e: grassmoduli::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::ChecksFailed) => ExitCode::from(1),
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Decompose { pqk, parity, out } => {
            let rows: Vec<ComponentRow> = classify_components(pqk.p, pqk.q, pqk.k)?
                .iter()
                .filter(|r| parity.admits(r.parity))
                .map(ComponentRow::from)
                .collect();
            let mut w = out.writer()?;
            render::components(&mut w, &rows, out.format)?;
            w.flush()?;
        }
        Command::Moduli { pqk, out } => {
            let report = moduli_report(pqk.p, pqk.q, pqk.k)?;
            let mut w = out.writer()?;
            render::moduli(&mut w, &report, out.format)?;
            w.flush()?;
        }
        Command::Verify {
            max_n,
            max_k,
            suite,
            out,
        } => {
            let mut cfg = VerifyConfig::new(max_n, max_k)?;
            if !suite.is_empty() {
                cfg = cfg.with_suites(suite);
            }
            let report = run(&cfg);
            // timings go to stderr so standard output is reproducible
            for c in &report.checks {
                eprintln!("{:>8.3}s  {}/{}", c.elapsed.as_secs_f64(), c.suite, c.name);
            }
            let mut w = out.writer()?;
            render::verify(&mut w, &report, out.format)?;
            w.flush()?;
            if !report.ok() {
                return Err(Failure::ChecksFailed);
            }
        }
        Command::Dim {
            n,
            partition,
            allow_zero,
        } => {
            let lambda: Partition = partition.parse()?;
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            if lambda.len() > n && !allow_zero {
                return Err(Failure::Usage(format!(
                    "partition [{lambda}] has {} rows, more than n = {n} (use --allow-zero to print 0)",
                    lambda.len()
                )));
            }
            let mut w = BufWriter::new(io::stdout().lock());
            writeln!(w, "{}", dim_gl(&lambda, n))?;
            w.flush()?;
        }
    }
    Ok(())
}
