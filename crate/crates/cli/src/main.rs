//! `frobgp`: command-line access to the workbench.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frobgp_core::io::Loader;
use frobgp_core::Error;

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "frobgp",
    version,
    about = "Exact Gorenstein homological algebra over finite-dimensional algebras"
)]
struct Cli {
    /// Search bound for resolutions and dimensions.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    /// Seed for randomized witness searches and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, simples and indecomposable projectives and injectives of an algebra.
    AlgebraInfo { algebra: String },
    /// Dimension, top, socle and radical layers of a module.
    ModuleInfo { module: PathBuf },
    /// spdi, sidp and the Gorenstein dimension of an algebra.
    Profile { algebra: String },
    /// Gorenstein projective dimension of a module.
    Gpd { module: PathBuf },
    /// Gorenstein injective dimension of a module.
    Gid { module: PathBuf },
    /// Minimal projective resolution up to the bound.
    Resolve { module: PathBuf },
    /// Totalize the quasi-bicomplex of a module and read off its Gpd.
    Totalize { module: PathBuf },
    /// Decide whether an extension or bimodule is Frobenius.
    FrobeniusVerify { file: PathBuf },
    /// Compare Gpd before and after restriction and induction.
    TransferCheck { extension: PathBuf },
    /// Compare global Gorenstein dimensions along an extension.
    GlgdimCheck { extension: PathBuf },
    /// Show that the projection from a product algebra does not reflect Gorenstein projectives.
    CounterexampleProduct {
        b: String,
        b_prime: String,
        module: PathBuf,
    },
    /// Defects, stable categories and stable Hom along an extension or bimodule.
    TriequivCheck { file: PathBuf },
    /// The free and forgetful functors between graded modules and complexes.
    ComplexCheck {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Every acceptance property over the bundled corpus.
    Suite,
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let loader = Loader::new();
    let bound = cli.bound as usize;
    let seed = cli.seed;
    match &cli.command {
        Command::AlgebraInfo { algebra } => commands::algebra_info(&loader, algebra),
        Command::ModuleInfo { module } => commands::module_info(&loader, module),
        Command::Profile { algebra } => commands::profile(&loader, algebra, bound),
        Command::Gpd { module } => commands::gorenstein_dim(&loader, module, bound, false),
        Command::Gid { module } => commands::gorenstein_dim(&loader, module, bound, true),
        Command::Resolve { module } => commands::resolve(&loader, module, bound),
        Command::Totalize { module } => commands::totalize(&loader, module, bound),
        Command::FrobeniusVerify { file } => commands::frobenius_verify(&loader, file, seed),
        Command::TransferCheck { extension } => commands::transfer_check(&loader, extension, bound, seed),
        Command::GlgdimCheck { extension } => commands::glgdim_check(&loader, extension, bound, seed),
        Command::CounterexampleProduct { b, b_prime, module } => {
            commands::counterexample(&loader, b, b_prime, module, bound)
        }
        Command::TriequivCheck { file } => commands::triequiv_check(&loader, file, bound),
        Command::ComplexCheck { files } => commands::complex_check(&loader, files, bound),
        Command::Suite => Ok(commands::suite(bound, seed)),
    }
}

/// 1 for a failed property, 2 for anything wrong with the input.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Violation { .. } | Error::LiftFailed(_) | Error::NoHomotopy(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            eprintln!("property failed: {f}");
        }
        ExitCode::from(1)
    }
}
