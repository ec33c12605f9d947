mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grouprep::Error;

use report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "grouprep",
    version,
    about = "Exact representation theory of small finite groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub source: Source,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
pub struct Source {
    /// Generator file.
    #[arg(long, global = true, value_name = "FILE")]
    pub group: Option<PathBuf>,

    /// Multiplication table in the CSV layout written by `table --format csv`.
    #[arg(long, global = true, value_name = "FILE")]
    pub table: Option<PathBuf>,

    /// Built-in group.
    #[arg(long, global = true, value_name = "NAME")]
    pub fixture: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplication table.
    Table,
    /// Element orders.
    Orders,
    /// Conjugacy classes.
    Classes,
    /// All proper nontrivial subgroups.
    Subgroups {
        /// Largest group order searched.
        #[arg(long, default_value_t = grouprep::structure::DEFAULT_LATTICE_BOUND)]
        bound: usize,
    },
    /// Proper nontrivial normal subgroups.
    Normal,
    /// Coset decomposition.
    Cosets {
        /// Comma-separated element labels.
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Quotient by a normal subgroup.
    Quotient {
        #[arg(long)]
        subgroup: String,
    },
    /// Pairs of elements generating the group.
    Genpairs {
        #[arg(long)]
        count_only: bool,
    },
    /// Character table.
    Chartable,
    /// Irreducible representation matrices.
    Irreps,
    /// Orthonormality of the matrix elements and of the characters.
    Orthocheck,
    /// Clebsch-Gordan series, or the transform for one product.
    Cg {
        #[arg(long, requires = "right")]
        left: Option<String>,
        #[arg(long, requires = "left")]
        right: Option<String>,
    },
    /// Regular representation and its reduction.
    Regular {
        /// Use the intrinsic (right) regular representation.
        #[arg(long)]
        intrinsic: bool,
    },
    /// Irreducible basis, ideals and idempotents of the group algebra.
    Idempotents,
    /// Symmetry-adapted polynomial basis.
    Funcbasis {
        #[arg(long)]
        irrep: String,
        #[arg(long)]
        seed: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Analysis(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Analysis(e) => match e {
                Error::Parse { .. }
                | Error::UnknownLabel(_)
                | Error::UnknownIrrep(_)
                | Error::NotAPermutation(_)
                | Error::NotAGroup(_)
                | Error::MixedKind
                | Error::OrderExceeded(_) => 2,
                _ => 1,
            },
        }
    }
}

fn load(source: &Source) -> Result<input::Input, CliError> {
    match (&source.group, &source.table, &source.fixture) {
        (Some(path), _, _) => input::generator_file(path),
        (_, Some(path), _) => input::table_file(path),
        (_, _, Some(name)) => input::fixture(name),
        _ => Err(CliError::Input(
            "no group given: use --group FILE, --table FILE or --fixture td".into(),
        )),
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
    let outcome = load(&cli.source).and_then(|input| {
        let report = commands::run(&cli.command, &input)?;
        Ok((input, report))
    });
    match outcome {
        Ok((input, report)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(cli.format, &input.group).as_bytes());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                if cli.format == Format::Csv {
                    for c in report.checks.iter().filter(|c| !c.passed) {
                        eprintln!("check failed: {}", c.name);
                    }
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
