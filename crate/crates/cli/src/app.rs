use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use symfun::partition::all_partitions;
use symfun::repmodules::{from_psi, PsiSpec};
use symfun::schur::to_schur;
use symfun::tableaux::foulkes_oracle;
use symfun::verify::{self, CheckKind, CheckReport, DegreeRecord, Options, Status};
use symfun::Partition;

use crate::basis::{expand, Basis, Expansion};
use crate::error::CliError;
use crate::eval::evaluate;
use crate::output::{render_expansion, schur_sum, Format};
use crate::parse::parse;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "symfun", version, about = "Exact symmetric-function computations and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print it in a chosen basis.
    Compute {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "s")]
        basis: Basis,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run named checks.
    Verify(VerifyArgs),
    /// Print a stored table next to its recomputed values.
    Table {
        #[arg(long)]
        name: String,
    },
    /// Combinatorial oracles.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
    /// Sweep a conjecture and report Schur positivity per degree.
    Conjecture {
        #[arg(long)]
        name: String,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value = "")]
        opts: String,
    },
    /// List the available checks.
    List,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "all")]
    check: Vec<String>,
    #[arg(long = "max-degree")]
    max_degree: Option<usize>,
    #[arg(long, default_value = "", conflicts_with = "all")]
    opts: String,
    #[arg(long, conflicts_with = "check")]
    all: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// Count standard tableaux by major index modulo n, next to the character formula.
    Foulkes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        shape: Option<Partition>,
    },
}

/// Runs the command line `args` (including the program name), writing to `out` and `err`,
/// and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Syntax { offset, .. } = e {
                let _ = writeln!(err, "offset: {offset}");
            }
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Compute { expr, basis, degree, format } => {
            let value = evaluate(&parse(&expr)?, degree)?;
            emit(out, &render_expansion(&expand(&value, basis), format));
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify_cmd(args, out),
        Command::Table { name } => table_cmd(&name, out),
        Command::Oracle { which: Oracle::Foulkes { n, r, shape } } => foulkes_cmd(n, r, shape, out),
        Command::Conjecture { name, max_n, opts } => conjecture_cmd(&name, max_n, &opts, out),
        Command::List => {
            for c in verify::list_checks() {
                let kind = match c.kind {
                    CheckKind::Identity => "identity",
                    CheckKind::Table => "table",
                    CheckKind::Conjecture => "conjecture",
                };
                emit(out, &format!("{}\t{kind}\t{}\t{}\t{}\n", c.name, c.default_degree, c.ceiling, c.anchor));
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Refuted => "refuted",
        Status::PositivityReport => "positivity-report",
    }
}

fn record_text(r: &DegreeRecord) -> String {
    let Some(d) = &r.detail else {
        return String::new();
    };
    let what = d.as_term().or_else(|| d.note.clone()).unwrap_or_default();
    format!("{}: {what}", d.identity)
}

fn verify_cmd(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let opts = Options::parse(&args.opts)?;
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let names = if args.all { Vec::new() } else { args.check };
    let mut reports = Vec::new();
    for r in verify::run_many(&names, args.max_degree, &opts, jobs)? {
        reports.push(r?);
    }
    match args.format {
        Format::Text => {
            for rep in &reports {
                let failing = rep.failing_degrees();
                emit(
                    out,
                    &format!(
                        "{}\t{}\tmax degree {}\t{} ms{}\n",
                        rep.name,
                        status_name(rep.status),
                        rep.max_degree,
                        rep.runtime_ms,
                        if failing.is_empty() { String::new() } else { format!("\tfailing {failing:?}") }
                    ),
                );
                for r in rep.per_degree.iter().filter(|r| !r.pass) {
                    emit(out, &format!("  n={}\t{}\n", r.degree, record_text(r)));
                }
            }
        }
        Format::Json => {
            let value = serde_json::to_value(&reports).expect("reports serialize");
            emit(out, &format!("{}\n", serde_json::to_string_pretty(&value).expect("json")));
        }
        Format::Csv => emit(out, &reports_csv(&reports)),
    }
    let refuted = reports.iter().any(|r| r.status == Status::Refuted);
    Ok(if refuted { EXIT_REFUTED } else { EXIT_OK })
}

fn reports_csv(reports: &[CheckReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["check", "status", "degree", "pass", "identity", "basis", "partition", "coeff", "note"])
        .expect("csv");
    for rep in reports {
        for r in &rep.per_degree {
            let d = r.detail.as_ref();
            let field = |f: fn(&verify::Detail) -> Option<&String>| d.and_then(f).cloned().unwrap_or_default();
            w.write_record([
                rep.name.clone(),
                status_name(rep.status).to_string(),
                r.degree.to_string(),
                r.pass.to_string(),
                d.map(|d| d.identity.clone()).unwrap_or_default(),
                field(|d| d.basis.as_ref()),
                field(|d| d.partition.as_ref()),
                field(|d| d.coeff.as_ref()),
                field(|d| d.note.as_ref()),
            ])
            .expect("csv");
        }
    }
    String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
}

fn table_cmd(name: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let (degree, golden) = verify::golden_table(name)?;
    let (_, computed) = verify::table_values(name)?;
    let computed: BTreeMap<(String, String), Expansion> = computed
        .into_iter()
        .map(|(row, col, f)| ((row, col), expand(&f, Basis::S)))
        .collect();
    emit(out, &format!("{name} (degree {degree})\nrow\tcolumn\tstored\trecomputed\tmatch\n"));
    let mut all_match = true;
    for cell in golden {
        let stored: Expansion = cell.value.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
        let fresh = computed.get(&(cell.row.clone(), cell.column.clone()));
        let ok = fresh == Some(&stored);
        all_match &= ok;
        emit(
            out,
            &format!(
                "{}\t{}\t{}\t{}\t{}\n",
                cell.row,
                cell.column,
                schur_sum(&stored),
                fresh.map_or_else(|| "missing".into(), schur_sum),
                if ok { "yes" } else { "NO" }
            ),
        );
    }
    Ok(if all_match { EXIT_OK } else { EXIT_REFUTED })
}

fn foulkes_cmd(n: usize, r: usize, shape: Option<Partition>, out: &mut dyn Write) -> Result<i32, CliError> {
    if n == 0 {
        return Err(symfun::Error::Domain("n must be positive".into()).into());
    }
    let character = to_schur(&from_psi(&PsiSpec::Foulkes(r as u64), n)?, n);
    let shapes = match shape {
        Some(l) => vec![l],
        None => all_partitions(n),
    };
    emit(out, "shape\ttableaux\tcharacter\n");
    let mut agree = true;
    for l in shapes {
        let count = foulkes_oracle(&l, r, n)?;
        let coeff = character.coeff(&l);
        agree &= coeff == symfun::symfunc::int(count as i64);
        emit(out, &format!("{l}\t{count}\t{coeff}\n"));
    }
    Ok(if agree { EXIT_OK } else { EXIT_REFUTED })
}

fn conjecture_cmd(name: &str, max_n: Option<usize>, opts: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let full = if name.starts_with("conj.") { name.to_string() } else { format!("conj.{name}") };
    let info = verify::list_checks().into_iter().find(|c| c.name == full);
    if !info.is_some_and(|c| c.kind == CheckKind::Conjecture) {
        return Err(symfun::Error::UnknownCheck(name.into()).into());
    }
    let rep = verify::run_check(&full, max_n, &Options::parse(opts)?)?;
    emit(out, &format!("{}\tdegrees up to {}\n", rep.name, rep.max_degree));
    for r in &rep.per_degree {
        if r.pass {
            emit(out, &format!("{}\tpositive\n", r.degree));
        } else {
            emit(out, &format!("{}\tnot positive\t{}\n", r.degree, record_text(r)));
        }
    }
    Ok(EXIT_OK)
}
