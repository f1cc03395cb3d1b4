use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homhopf::format::{self, BraidingExport, OutFormat, Suite};
use homhopf::h4::{H4Family, H4Params, H4Table, H4_BASIS};
use homhopf::Scalar;

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "homhopf",
    version,
    about = "Check Hom-Hopf algebras, Yetter-Drinfeld Hom-modules and their braidings"
)]
struct Cli {
    /// Report format for `check`.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Algebra,
    Coalgebra,
    Hopf,
    Yd,
    Tcat,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Coalgebra => Suite::Coalgebra,
            SuiteArg::Hopf => Suite::Hopf,
            SuiteArg::Yd => Suite::Yd,
            SuiteArg::Tcat => Suite::Tcat,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutArg {
    Csv,
    Json,
}

impl From<OutArg> for OutFormat {
    fn from(o: OutArg) -> Self {
        match o {
            OutArg::Csv => OutFormat::Csv,
            OutArg::Json => OutFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every identity of a suite on a definition file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Seed for the random group words of the T-category suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the braiding matrix of two Yetter-Drinfeld modules of a file.
    Braid {
        file: PathBuf,
        #[arg(short = 'm')]
        m: String,
        #[arg(short = 'n')]
        n: String,
        #[arg(long, value_enum, default_value_t = OutArg::Csv)]
        out: OutArg,
        /// Write the image of each basis element as a row.
        #[arg(long)]
        printed: bool,
    },
    /// Built-in examples.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// The braiding of H4A and H4B over H4.
    H4 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        c: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        cp: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        cpp: Scalar,
        #[arg(long, value_enum, default_value_t = OutArg::Csv)]
        out: OutArg,
        #[arg(long)]
        printed: bool,
    },
}

fn parse_rational(s: &str) -> Result<Scalar, String> {
    let q: Scalar = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not an integer or a fraction p/q"))?;
    Ok(q)
}

fn load(path: &PathBuf) -> Result<(format::DefinitionFile, format::Resolved), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = format::parse_definition(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let resolved = format::resolve(&file).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((file, resolved))
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn layout_note(printed: bool) {
    if printed {
        eprintln!("note: row i is the image of input basis element i");
    } else {
        eprintln!("note: column j is the image of input basis element j; --printed transposes");
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Check { file, suite, seed } => {
            let (_, resolved) = load(&file)?;
            let report = format::run_checks(&resolved, suite.into(), seed).map_err(|e| e.to_string())?;
            match cli.report {
                ReportFormat::Text => emit(&format!("{report}\n")),
                ReportFormat::Json => emit(&format!("{}\n", report.to_json())),
            }
            Ok(if report.all_passed() { 0 } else { EXIT_FAIL })
        }
        Command::Braid {
            file,
            m,
            n,
            out,
            printed,
        } => {
            let (def, resolved) = load(&file)?;
            let text =
                format::emit_braiding(&resolved, &def, &m, &n, out.into(), printed).map_err(|e| e.to_string())?;
            layout_note(printed);
            emit(&text);
            Ok(0)
        }
        Command::Demo {
            which:
                Demo::H4 {
                    c,
                    cp,
                    cpp,
                    out,
                    printed,
                },
        } => {
            let params = H4Params::new(c, cp, cpp).map_err(|e| e.to_string())?;
            let family = H4Family::new(&params).map_err(|e| e.to_string())?;
            let basis: Vec<String> = H4_BASIS.iter().map(|s| s.to_string()).collect();
            let export = BraidingExport::new(
                &family.canonical(H4Table::H4A),
                &family.canonical(H4Table::H4B),
                &basis,
                &basis,
                printed,
            );
            layout_note(printed);
            match OutFormat::from(out) {
                OutFormat::Csv => emit(&export.to_csv()),
                OutFormat::Json => emit(&format!("{}\n", export.to_json())),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
