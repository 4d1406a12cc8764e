use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use neutro_core::algebra::{EvalConfig, DEFAULT_MATERIALIZE_CAP};
use neutro_core::oracle::{
    check_representation, check_strong, check_weak, representation_schemes, standard_suite, Budget,
    CheckOutcome, GradeGrid, Verdict,
};
use neutro_core::query::{evaluate, parse, Catalog, Mode};
use neutro_core::Error;

use crate::catalog::{CatalogDir, DEFAULT_DIR};
use crate::demo::{example2_report, tanks_report};
use crate::document::{load_relation, render_document, scheme_line};
use crate::error::CliError;
use crate::table::format_table;

pub const CAP_ENV: &str = "NEUTRO_MATERIALIZE_CAP";

#[derive(Debug, Parser)]
#[command(name = "neutro", version, about = "Query engine for belief/doubt graded relations")]
struct Cli {
    /// Catalog directory.
    #[arg(long, global = true, default_value = DEFAULT_DIR)]
    catalog: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Add a relation document to the catalog under NAME.
    Load { name: String, file: PathBuf },
    /// List catalog relations.
    List,
    /// Print a relation.
    Show { name: String },
    /// Print a relation's classification.
    Check { name: String },
    /// Evaluate a query against the catalog.
    Eval {
        /// Apply operators directly instead of split/apply/combine.
        #[arg(long)]
        raw: bool,
        query: String,
    },
    /// Exhaustively check the operators against their fuzzy counterparts.
    Verify {
        /// Grid denominator k, grades {0, 1/k, ..., 1}.
        #[arg(long, default_value_t = 2)]
        grid: u32,
        /// Largest tuple space enumerated.
        #[arg(long, default_value_t = 4)]
        budget: u32,
    },
    /// Run a bundled worked example.
    Demo { which: DemoName },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DemoName {
    Example2,
    Tanks,
}

fn eval_config() -> Result<EvalConfig, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|materialize_cap| EvalConfig { materialize_cap })
            .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(EvalConfig {
            materialize_cap: DEFAULT_MATERIALIZE_CAP,
        }),
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

fn report_outcome(out: &mut dyn Write, label: &str, outcome: &CheckOutcome) -> std::io::Result<bool> {
    match &outcome.verdict {
        Verdict::Holds => {
            writeln!(out, "{label}: holds ({} instances)", outcome.instances)?;
            Ok(true)
        }
        Verdict::Counterexample(operands) => {
            writeln!(out, "{label}: COUNTEREXAMPLE after {} instances", outcome.instances)?;
            for (i, r) in operands.iter().enumerate() {
                write!(out, "  operand {}:\n{}", i + 1, indent(&render_document(r)))?;
            }
            Ok(false)
        }
    }
}

fn verify(out: &mut dyn Write, grid: u32, budget: u32) -> Result<(), CliError> {
    let grid = GradeGrid::new(grid).map_err(|e| CliError::Usage(e.to_string()))?;
    let budget = Budget {
        max_tuple_space: budget as u128,
        ..Budget::default()
    };
    let io = |e: std::io::Error| CliError::io(Path::new("<stdout>"), e);
    let (mut failed, mut skipped, mut checks) = (0usize, 0usize, 0usize);
    let mut tally = |out: &mut dyn Write, label: String, res: Result<CheckOutcome, Error>| -> Result<(), CliError> {
        match res {
            Ok(o) => {
                checks += 1;
                if !report_outcome(out, &label, &o).map_err(io)? {
                    failed += 1;
                }
            }
            Err(Error::BudgetExceeded(why)) => {
                skipped += 1;
                writeln!(out, "{label}: skipped ({why})").map_err(io)?;
            }
            Err(e) => return Err(e.into()),
        }
        Ok(())
    };
    for case in standard_suite() {
        let weak = check_weak(&case.neutro_op, &case.fuzzy_op, &case.schemes, grid, &budget);
        tally(out, format!("weak   {}", case.name), weak)?;
        let strong = check_strong(&case.neutro_op, &case.fuzzy_op, &case.schemes, grid, &budget);
        tally(out, format!("strong {}", case.name), strong)?;
    }
    for s in representation_schemes() {
        let res = check_representation(&s, grid, &budget);
        tally(out, format!("reps   singleton iff total on {s}"), res)?;
    }
    writeln!(out, "{checks} checks, {failed} with counterexamples, {skipped} skipped").map_err(io)?;
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} check(s) found counterexamples")));
    }
    Ok(())
}

fn load_for_query(cat: &CatalogDir, names: &[&str]) -> Result<Catalog, CliError> {
    let mut catalog = Catalog::new();
    for name in names {
        if cat.entries().iter().any(|e| e.name == *name) {
            catalog.insert(*name, cat.load(name)?);
        }
    }
    Ok(catalog)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::io(Path::new("<stdout>"), e);
    match cli.command {
        Command::Load { name, file } => {
            let r = load_relation(&file)?;
            let mut cat = CatalogDir::open(&cli.catalog)?;
            cat.insert(&name, &r)?;
            writeln!(out, "loaded {name}: {} stored tuple(s) on {}", r.stored_len(), r.scheme()).map_err(io)?;
        }
        Command::List => {
            let cat = CatalogDir::open(&cli.catalog)?;
            for e in cat.entries() {
                let r = cat.load(&e.name)?;
                writeln!(out, "{}\t{}\t{} stored", e.name, r.scheme(), r.stored_len()).map_err(io)?;
            }
        }
        Command::Show { name } => {
            let r = CatalogDir::open(&cli.catalog)?.load(&name)?;
            write!(out, "{}\n{}", scheme_line(r.scheme()), format_table(&r)).map_err(io)?;
        }
        Command::Check { name } => {
            let r = CatalogDir::open(&cli.catalog)?.load(&name)?;
            let c = r.classify();
            writeln!(out, "{name}: {}", r.scheme()).map_err(io)?;
            for (label, flag) in [
                ("functional", c.functional),
                ("consistent", c.consistent),
                ("complete", c.complete),
                ("total", c.total),
                ("pseudo_consistent", c.pseudo_consistent),
            ] {
                writeln!(out, "{label}: {flag}").map_err(io)?;
            }
        }
        Command::Eval { raw, query } => {
            let config = eval_config()?;
            let expr = parse(&query)?;
            let cat = CatalogDir::open(&cli.catalog)?;
            let catalog = load_for_query(&cat, &expr.relations())?;
            let mode = if raw { Mode::Raw } else { Mode::Robust };
            let r = evaluate(&expr, &catalog, mode, &config)?;
            write!(out, "{}\n{}", scheme_line(r.scheme()), format_table(&r)).map_err(io)?;
        }
        Command::Verify { grid, budget } => verify(out, grid, budget)?,
        Command::Demo { which } => {
            let config = eval_config()?;
            let (text, mismatches) = match which {
                DemoName::Example2 => example2_report(&config)?,
                DemoName::Tanks => tanks_report(&config)?,
            };
            write!(out, "{text}").map_err(io)?;
            if !mismatches.is_empty() {
                return Err(CliError::Mismatch(format!(
                    "tables differ from the expected ones: {}",
                    mismatches.join(", ")
                )));
            }
        }
    }
    Ok(())
}

/// Runs one command line and returns the process exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    1
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
