//! The `adeg` command line: one subcommand per pipeline, each writing a
//! run manifest whose property ledger decides the exit code.

mod commands;

use crate::fncore::{self, make_basic, BooleanFunction, Gate};
use crate::rational::{self, Q};
use crate::report::{InputDigest, RunManifest, Status};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "adeg", version, about = "Exact approximate-degree workbench")]
pub struct Cli {
    /// Where to write the run manifest.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Arity cap for brute-force enumeration.
    #[arg(long, global = true, env = "ADEG_BRUTE_CAP", default_value_t = fncore::certificate::DEFAULT_BRUTE_CAP)]
    pub brute_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnKind {
    Or,
    And,
    Maj,
    Parity,
}

/// A function given by name and arity, or by a JSON file.
#[derive(Debug, Clone, Args)]
pub struct FnArgs {
    #[arg(long = "fn", value_enum, conflicts_with = "file")]
    pub name: Option<FnKind>,
    #[arg(long, requires = "name")]
    pub n: Option<usize>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

fn parse_q(s: &str) -> Result<Q, String> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(format!("`{s}` is not a rational; write it as p/q"));
    }
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("`{s}` is not +1 or -1")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximate degree by the ascending LP ladder.
    Adeg {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long, value_parser = parse_q)]
        eps: Q,
    },
    /// Optimal error at one degree, with the primal polynomial and dual witness.
    Eps {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual witness of pure high degree at least `d`.
    Dual {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        one_sided: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual block composition of two witness files.
    Compose {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The univariate witness for `OR` on weights up to `k`.
    Omega {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = crate::dualcraft::DEFAULT_C)]
        c: usize,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The amplified witness pipeline at desk scale.
    Amplify {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "D")]
        big_d: Option<usize>,
        #[arg(long = "M")]
        big_m: Option<usize>,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Print the asymptotic schedule for `n` and `d` and stop.
        #[arg(long)]
        schedule: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The reduction chain from a block function to its DNF lift.
    Reduce {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_parser = parse_q, default_value = "1/3")]
        eps: Q,
        #[arg(long)]
        width: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zeroes the overweight mass of a witness file.
    Correct {
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long = "D")]
        big_d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Overweight mass of `Φ ⋆ ψ` by dynamic programming, and the tail lemmas.
    Masscheck {
        #[arg(long = "R")]
        big_r: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Outer witness on `R` bits; defaults to the `AND_R` amplifier.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Secret sharing from dual witnesses.
    Share {
        #[command(subcommand)]
        action: ShareCommand,
    },
    /// Certificate complexity, the `f*` lift and `MAJ` amplification.
    Cert {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long, value_parser = parse_q, default_value = "1/3")]
        eps: Q,
        #[arg(long)]
        fstar: bool,
        #[arg(long)]
        maj: Option<usize>,
    },
    /// CSV tables: a degree ladder, or the ledger of a manifest.
    Report {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ShareCommand {
    /// Builds a scheme from a witness file or an LP dual witness.
    Make {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Split {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        secret: i8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Reconstruct {
        #[arg(long)]
        bundle: PathBuf,
        #[command(flatten)]
        f: FnArgs,
    },
    Audit {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        d: usize,
    },
    Advantage {
        #[arg(long)]
        scheme: PathBuf,
        #[command(flatten)]
        f: FnArgs,
        #[arg(long, default_value_t = 0)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Adeg { .. } => "adeg",
            Command::Eps { .. } => "eps",
            Command::Dual { .. } => "dual",
            Command::Compose { .. } => "compose",
            Command::Omega { .. } => "omega",
            Command::Amplify { .. } => "amplify",
            Command::Reduce { .. } => "reduce",
            Command::Correct { .. } => "correct",
            Command::Masscheck { .. } => "masscheck",
            Command::Share { action } => match action {
                ShareCommand::Make { .. } => "share-make",
                ShareCommand::Split { .. } => "share-split",
                ShareCommand::Reconstruct { .. } => "share-reconstruct",
                ShareCommand::Audit { .. } => "share-audit",
                ShareCommand::Advantage { .. } => "share-advantage",
            },
            Command::Cert { .. } => "cert",
            Command::Report { .. } => "report",
        }
    }
}

/// State threaded through one command.
pub struct Run {
    pub manifest: RunManifest,
    pub brute_cap: usize,
}

impl Run {
    pub fn read_input(&mut self, path: &Path) -> anyhow::Result<String> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        self.manifest.inputs.push(InputDigest::of_file(path)?);
        Ok(text)
    }

    pub fn load_fn(&mut self, a: &FnArgs) -> anyhow::Result<BooleanFunction> {
        match (&a.name, &a.file) {
            (Some(kind), None) => {
                let n = a.n.context("--fn needs --n")?;
                self.manifest.param("fn", format!("{kind:?}").to_lowercase());
                self.manifest.param("n", n);
                let gate = match kind {
                    FnKind::Or => Gate::Or,
                    FnKind::And => Gate::And,
                    FnKind::Maj => Gate::Maj,
                    FnKind::Parity => Gate::Parity,
                };
                Ok(make_basic(gate, n)?)
            }
            (None, Some(path)) => {
                let text = self.read_input(path)?;
                Ok(fncore::io::from_json(&text)?)
            }
            _ => anyhow::bail!("give exactly one of --fn or --file"),
        }
    }

    pub fn write_output(&mut self, key: &str, path: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
        if let Some(p) = path {
            std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            self.manifest.param(key, p.display());
        }
        Ok(())
    }
}

fn print_ledger(m: &RunManifest) {
    for p in m.properties.iter() {
        let status = match p.status {
            Status::CertifiedExact => "CERTIFIED_EXACT",
            Status::Reported => "REPORTED",
            Status::Failed => "FAILED",
        };
        match (&p.lhs, &p.relation, &p.rhs) {
            (Some(l), Some(r), Some(h)) => eprintln!("{status:16} {}  {l} {r} {h}", p.name),
            _ => eprintln!("{status:16} {}", p.name),
        }
    }
}

/// Parses arguments, runs the command, writes the manifest and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return 0;
            }
            let path = args
                .iter()
                .skip_while(|a| a.as_os_str() != "--manifest")
                .nth(1)
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("adeg-error.manifest.json"));
            let mut m = RunManifest::new("error");
            m.output("error", e.kind().to_string());
            if let Err(io) = m.write_atomic(&path) {
                eprintln!("error: writing manifest {}: {io}", path.display());
            }
            return 1;
        }
    };
    let name = cli.command.name();
    let manifest_path = cli
        .manifest
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("adeg-{name}.manifest.json")));
    let mut run = Run {
        manifest: RunManifest::new(name),
        brute_cap: cli.brute_cap,
    };
    let start = Instant::now();
    let outcome = commands::dispatch(&cli.command, &mut run);
    run.manifest.wall_time_seconds = start.elapsed().as_secs_f64();
    let code = match &outcome {
        Ok(()) => run.manifest.properties.exit_code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            run.manifest.output("error", format!("{e:#}"));
            1
        }
    };
    print_ledger(&run.manifest);
    if let Err(e) = run.manifest.write_atomic(&manifest_path) {
        eprintln!("error: writing manifest {}: {e}", manifest_path.display());
        return 1;
    }
    code
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
