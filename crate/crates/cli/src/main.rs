mod commands;
mod report;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k2res::algebra::Presentation;
use k2res::corpus::{Corpus, CorpusReport};
use k2res::module::ModuleSpec;
use k2res::stanley_reisner::IdealText;
use k2res::{DynFp, FieldSpec, Gf32003, Rational};

use commands::Overrides;

/// Exit status classes.
const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "k2res", version, about = "Minimal resolutions, K2 criteria and Stanley-Reisner analysis")]
struct Cli {
    /// Coefficient field: q or gf:<p>.
    #[arg(long, global = true, default_value = "gf:32003")]
    field: String,
    /// Homological bound N.
    #[arg(long, global = true)]
    max_hom: Option<usize>,
    /// Internal degree bound D.
    #[arg(long, global = true)]
    max_deg: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a simplicial complex, its Alexander dual and its face ring.
    AnalyzeComplex { file: PathBuf },
    /// Resolve a module over a presented algebra.
    Resolve {
        /// Algebra file (`vars:`, `commutative:`, `rel:` lines).
        #[arg(long)]
        algebra: PathBuf,
        /// trivial | ideal:<file> | cyclic:<file> | quotient:<file>,<file> | component:<i>,<j>:<file>
        #[arg(long, default_value = "trivial")]
        module: String,
    },
    /// Run the built-in corpus of worked examples.
    Corpus {
        /// Only items whose id matches, e.g. Ex7.1 or 8.1.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<k2res::Error> for Failure {
    fn from(e: k2res::Error) -> Self {
        let (code, hint) = match e {
            k2res::Error::Bound(_) => (EXIT_BOUND, "; raise --max-deg or --max-hom, or lower the other bound"),
            k2res::Error::Parse { .. } | k2res::Error::Input(_) => (EXIT_PARSE, ""),
        };
        Failure { code, message: format!("{e}{hint}") }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_IO, message: format!("cannot read {}: {e}", path.display()) })
}

fn ideal_generators(path: &Path) -> Result<Vec<String>, Failure> {
    let text = IdealText::parse(&read(path)?)
        .map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", path.display()) })?;
    Ok(text.monomials.into_iter().map(|(_, m)| m).collect())
}

fn parse_module(arg: &str) -> Result<ModuleSpec, Failure> {
    let bad = || Failure { code: EXIT_PARSE, message: format!("cannot read module spec '{arg}'") };
    if arg == "trivial" {
        return Ok(ModuleSpec::Trivial);
    }
    let (kind, rest) = arg.split_once(':').ok_or_else(bad)?;
    Ok(match kind {
        "ideal" => ModuleSpec::Ideal(ideal_generators(Path::new(rest))?),
        "cyclic" => ModuleSpec::Cyclic(ideal_generators(Path::new(rest))?),
        "quotient" => {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            ModuleSpec::Quotient { gens: ideal_generators(Path::new(a))?, sub: ideal_generators(Path::new(b))? }
        }
        "component" => {
            let (range, file) = rest.split_once(':').ok_or_else(bad)?;
            let (lo, hi) = range.split_once(',').ok_or_else(bad)?;
            ModuleSpec::Component {
                lo: lo.trim().parse().map_err(|_| bad())?,
                hi: hi.trim().parse().map_err(|_| bad())?,
                ideal: ideal_generators(Path::new(file))?,
            }
        }
        _ => return Err(bad()),
    })
}

/// Run `$f::<F>(args)` with `F` chosen from the field spec.
macro_rules! over_field {
    ($spec:expr, $($f:ident)::+, $($arg:expr),*) => {
        match $spec {
            FieldSpec::Rationals => $($f)::+::<Rational>($($arg),*),
            FieldSpec::Prime(FieldSpec::DEFAULT_PRIME) => $($f)::+::<Gf32003>($($arg),*),
            FieldSpec::Prime(p) => {
                DynFp::set_modulus(p)?;
                $($f)::+::<DynFp>($($arg),*)
            }
        }
    };
}

fn emit<T: serde::Serialize + std::fmt::Display>(value: &T, format: Format) -> Result<(), Failure> {
    let text = match format {
        Format::Text => value.to_string(),
        Format::Json => serde_json::to_string_pretty(value)
            .map_err(|e| Failure { code: EXIT_IO, message: format!("cannot serialize the report: {e}") })?,
    };
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure { code: EXIT_IO, message: format!("cannot write the report: {e}") })
        }
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let field: FieldSpec = cli.field.parse()?;
    let field_name = field.to_string();
    let o = Overrides { max_hom: cli.max_hom, max_deg: cli.max_deg };
    match &cli.command {
        Command::AnalyzeComplex { file } => {
            let text = read(file)?;
            let path = file.display().to_string();
            let report = over_field!(field, commands::analyze_complex, &path, &text, &field_name, o)?;
            emit(&report, cli.format)?;
            if report.violations() > 0 {
                return Err(Failure { code: EXIT_MISMATCH, message: "an implication was violated".into() });
            }
        }
        Command::Resolve { algebra, module } => {
            let presentation = Presentation::parse(&read(algebra)?)
                .map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", algebra.display()) })?;
            let spec = parse_module(module)?;
            let input = BTreeMap::from([
                ("algebra".to_string(), algebra.display().to_string()),
                ("module".to_string(), module.clone()),
            ]);
            let report = over_field!(field, commands::resolve, input, &presentation, &spec, &field_name, o)?;
            emit(&report, cli.format)?;
            if report.violations() > 0 {
                return Err(Failure { code: EXIT_MISMATCH, message: "the Euler/Hilbert identity failed".into() });
            }
        }
        Command::Corpus { only } => {
            let corpus = Corpus::builtin()?;
            if let Some(p) = only {
                if corpus.select(Some(p)).is_empty() {
                    return Err(Failure { code: EXIT_PARSE, message: format!("no corpus item matches '{p}'") });
                }
            }
            let report: CorpusReport = over_field!(field, run_corpus, &corpus, &field_name, only.as_deref());
            emit(&report, cli.format)?;
            if !report.passed() {
                return Err(Failure { code: EXIT_MISMATCH, message: "corpus mismatch".into() });
            }
        }
    }
    Ok(())
}

fn run_corpus<F: k2res::Scalar>(corpus: &Corpus, field: &str, only: Option<&str>) -> CorpusReport {
    corpus.run::<F>(field, only)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
