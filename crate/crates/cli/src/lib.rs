//! Command-line front end: `cwx <command> (--input PATH | --zoo NAME [--param K]...) [flags]`.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation failure, 4 search budget
//! exceeded, 5 inapplicable operation or bad argument.

mod commands;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cwx_core::{CWComplex, Error};

#[derive(Parser, Debug)]
#[command(name = "cwx", version, about = "Homology, Laplacian spectra and boundary expansion of CW complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cell counts, degrees, boundary cells and incidence matrices.
    Info {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Checks ∂∂ = 0, index ranges and the regularity assertion.
    Validate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Betti numbers over F2 or Q.
    Betti {
        #[command(flatten)]
        source: Source,
        /// Dimension; all dimensions when omitted.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long)]
        reduced: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Laplacian spectrum and, for one-sided kinds, the smallest nontrivial eigenvalue.
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// Dimension; the top dimension when omitted.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = KindArg::Lower)]
        kind: KindArg,
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value_t = cwx_core::DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Exact boundary or coboundary expansion constant with a witness.
    Expansion {
        #[command(flatten)]
        source: Source,
        /// Dimension; the top dimension when omitted.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = VariantArg::Boundary)]
        variant: VariantArg,
        #[arg(long)]
        reduced: bool,
        /// Search budget as log2 of the number of candidates.
        #[arg(long)]
        budget: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Sweep cut of a top cochain; defaults to the λ_d eigenvector.
    Sweep {
        #[command(flatten)]
        source: Source,
        /// Comma-separated values, one per top cell.
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
        #[arg(long, default_value_t = cwx_core::DEFAULT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// λ_d, h_d, m, the hypotheses and both bounds.
    Cheeger {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        budget: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Coherent orientation of the top cells, or a witness that none exists.
    Orient {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// A cwx file or a facet list (sniffed by the `cwx 1` header).
    #[arg(long, conflicts_with = "zoo", required_unless_present = "zoo")]
    pub input: Option<PathBuf>,
    /// A named complex such as `path`, `torus_7` or `book`.
    #[arg(long)]
    pub zoo: Option<String>,
    /// Integer parameter for `--zoo`.
    #[arg(long, requires = "zoo", allow_hyphen_values = true)]
    pub param: Vec<i64>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FieldArg {
    F2,
    Q,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KindArg {
    Upper,
    Lower,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum VariantArg {
    Boundary,
    Coboundary,
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn failure(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::Invalid(_) => 3,
        Error::Budget(_) => 4,
        Error::Inapplicable(_) | Error::Argument(_) | Error::Eigen(_) => 5,
    }
}

impl Source {
    fn load(&self) -> Result<CWComplex, Outcome> {
        let complex = match (&self.input, &self.zoo) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Outcome::failure(2, format!("cannot read {}: {e}\n", path.display())))?;
                cwx_core::parse_input(&text)
            }
            (None, Some(name)) => cwx_core::zoo(name, &self.param),
            (None, None) => unreachable!("clap requires one input source"),
        };
        complex.map_err(|e| Outcome::failure(exit_code(&e), format!("error: {e}\n")))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::failure(2, text) } else { Outcome::ok(text) };
        }
    };
    commands::dispatch(cli.command)
}
