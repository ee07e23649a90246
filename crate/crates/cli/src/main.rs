use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pretri_core::prescat::DEFAULT_SEARCH_CAP;

use pretri::commands::{self, Control, Options, Output};
use pretri::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "pretri", version, about = "Exact computations for pseudo-triangulated categories")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Largest object rank in enumerated windows.
    #[arg(long, default_value_t = 2, global = true)]
    rank_bound: usize,
    /// Longest path length used when computing presented categories.
    #[arg(long = "lmax", default_value_t = 8, global = true)]
    l_max: usize,
    /// Re-check results against their defining properties.
    #[arg(long, global = true)]
    paranoid: bool,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the machine report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Cap on enumerated candidates (section search, element lists, K0 search).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Smith normal form of an integer matrix, e.g. "[[2,4],[6,8]]".
    Snf { matrix: String },
    /// Abelian group presented by relation rows.
    Group { matrix: String },
    /// Hom groups of a presented category (`builtin:R` or a JSON file).
    Homtable { presentation: String },
    /// Chosen distinguished triangle of a Z/4 matrix.
    Cone { matrix: String },
    /// Theta(f, g) and the comparison from Upsilon; objects are d, c, i, t or matrices.
    Theta { f: String, g: String },
    /// Toda bifunctor value Upsilon(f, g).
    Upsilon { f: String, g: String },
    /// Massey product {h, g, f} of Z/4 matrices.
    Massey { f: String, g: String, h: String },
    /// Grothendieck group of F(Z/4) on the rank window.
    K0,
    /// Idempotents of a presented category, or the Karoubi-completed Triangles0 extension.
    Karoubi { presentation: Option<String> },
    /// The six-step check that Triangles0 is not a pushforward along theta.
    VerifyMuro {
        #[arg(long, value_enum, default_value_t = Control::None)]
        control: Control,
    },
    /// Search for a section of the quotient SOURCE -> TARGET.
    SectionSearch { source: String, target: String },
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let default_budget = match cli.verb {
        Verb::K0 => 1 << 12,
        Verb::Karoubi { .. } => 1 << 20,
        _ => DEFAULT_SEARCH_CAP,
    };
    let o = Options {
        rank_bound: cli.rank_bound,
        l_max: cli.l_max,
        paranoid: cli.paranoid,
        budget: cli.budget.unwrap_or(default_budget),
        threads: cli.threads,
    };
    match &cli.verb {
        Verb::Snf { matrix } => commands::snf(matrix, &o),
        Verb::Group { matrix } => commands::group(matrix),
        Verb::Homtable { presentation } => commands::homtable(presentation, &o),
        Verb::Cone { matrix } => commands::cone_cmd(matrix, &o),
        Verb::Theta { f, g } => commands::theta(f, g, &o),
        Verb::Upsilon { f, g } => commands::upsilon(f, g),
        Verb::Massey { f, g, h } => commands::massey(f, g, h),
        Verb::K0 => commands::k0(&o),
        Verb::Karoubi { presentation } => commands::karoubi(presentation.as_deref(), &o),
        Verb::VerifyMuro { control } => commands::verify_muro(&o, *control),
        Verb::SectionSearch { source, target } => commands::section(source, target, &o),
    }
}

fn emit(cli: &Cli, out: &Output) -> std::io::Result<()> {
    match cli.format {
        Format::Text => std::io::stdout().write_all(out.text.as_bytes()),
        Format::Machine => match &cli.output {
            Some(path) => std::fs::write(path, &out.machine),
            None => std::io::stdout().write_all(out.machine.as_bytes()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("pretri: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("pretri: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Budget(_) => 3,
            })
        }
    }
}
