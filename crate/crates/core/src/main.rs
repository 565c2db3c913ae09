use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sptlab_core::oracle::Oracle;
use sptlab_core::rational::{self, Rational};
use sptlab_core::stats::{crank_table, rank_table};
use sptlab_core::verify::{self, ComputeStat, CongruenceStat, Outcome, Precomputed};
use sptlab_core::{Error, StatTable, Variant, VerificationReport};

#[derive(Parser)]
#[command(name = "sptlab", version, about = "Exact checks of partition q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Rank,
    Crank,
    /// Rank counts by enumeration (n <= 40).
    RankOracle,
    /// Combinatorial crank counts by enumeration (n <= 40).
    CrankOracle,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a statistic for n = 0..=upto.
    Compute {
        /// p, spt, spt_j, spt_j_star, SPT_plus, N_k, M_k, eta_k or mu_k
        #[arg(long)]
        stat: String,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Check one identity.
    Verify {
        #[arg(long)]
        identity: String,
        /// printed or corrected
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        /// x,y,z,w for eq2_specialized, e.g. 2,3,5,7 or 1/2,1/3,1/5,1/7
        #[arg(long)]
        params: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Check every registered identity.
    VerifyAll {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Check stat(stride * n) = 0 (mod m) for stride * n <= upto.
    Congruence {
        /// SPT_plus, SPT_plus_decomposed, M2, M4, eta4 or spt2
        #[arg(long)]
        stat: String,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        stride: usize,
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Export a rank or crank table as CSV rows `n,m,count`.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        upto: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` when every expectation is met.
fn run(command: Command) -> Result<bool, Error> {
    let mut out = io::stdout().lock();
    match command {
        Command::Compute { stat, j, k, upto, format } => {
            let stat: ComputeStat = stat.parse()?;
            let rows = verify::compute(stat, upto, j, k)?;
            write_values(&mut out, &rows, format);
            Ok(true)
        }
        Command::Verify { identity, variant, order, params, format } => {
            let variant = variant.map(|v| v.parse::<Variant>()).transpose()?;
            let params = params.map(|p| parse_params(&p)).transpose()?;
            let outcome = verify::run_identity(&identity, order, variant, params)?;
            write_outcomes(&mut out, std::slice::from_ref(&outcome), format);
            Ok(outcome.met())
        }
        Command::VerifyAll { order, format } => {
            let outcomes = verify::run_all(order)?;
            write_outcomes(&mut out, &outcomes, format);
            Ok(outcomes.iter().all(Outcome::met))
        }
        Command::Congruence { stat, modulus, stride, upto, format } => {
            let stat: CongruenceStat = stat.parse()?;
            let ctx = Precomputed::new(upto);
            let report = verify::check_congruence(&ctx, stat, modulus, stride, upto)?;
            write_report(&mut out, &report, format);
            Ok(report.passed())
        }
        Command::Table { kind, upto } => {
            let table = match kind {
                TableKind::Rank => rank_table(upto),
                TableKind::Crank => crank_table(upto),
                TableKind::RankOracle => Oracle::default().stat_tables(upto)?.0,
                TableKind::CrankOracle => Oracle::default().stat_tables(upto)?.1,
            };
            write_table(&mut out, &table);
            Ok(true)
        }
    }
}

fn parse_params(s: &str) -> Result<[Rational; 4], Error> {
    let values: Vec<Rational> = s.split(',').map(rational::parse).collect::<Result<_, _>>()?;
    values
        .try_into()
        .map_err(|_| Error::InvalidArgument("--params needs exactly four values x,y,z,w".into()))
}

fn write_values(out: &mut impl Write, rows: &[(usize, Rational)], format: TableFormat) {
    match format {
        TableFormat::Csv => {
            let _ = writeln!(out, "n,value");
            for (n, v) in rows {
                let _ = writeln!(out, "{n},{}", rational::format(v));
            }
        }
        TableFormat::Json => {
            let arr: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, v)| serde_json::json!({ "n": n, "value": rational::format(v) }))
                .collect();
            let _ = writeln!(out, "{}", serde_json::Value::Array(arr));
        }
    }
}

fn write_report(out: &mut impl Write, report: &VerificationReport, format: ReportFormat) {
    let _ = match format {
        ReportFormat::Text => writeln!(out, "{report}"),
        ReportFormat::Json => writeln!(out, "{}", report.to_json()),
    };
}

fn write_outcomes(out: &mut impl Write, outcomes: &[Outcome], format: ReportFormat) {
    match format {
        ReportFormat::Json => {
            let value = if outcomes.len() == 1 {
                outcomes[0].report.to_json()
            } else {
                serde_json::Value::Array(outcomes.iter().map(|o| o.report.to_json()).collect())
            };
            let _ = writeln!(out, "{value}");
        }
        ReportFormat::Text => {
            for o in outcomes {
                let mark = if o.met() { "ok " } else { "UNEXPECTED" };
                let _ = writeln!(out, "{mark} {}", o.report);
            }
            let met = outcomes.iter().filter(|o| o.met()).count();
            let _ = writeln!(out, "{met}/{} reports match their expected status", outcomes.len());
        }
    }
}

fn write_table(out: &mut impl Write, table: &StatTable) {
    let _ = writeln!(out, "n,m,count");
    for (n, row) in table.rows().iter().enumerate() {
        for (m, c) in row.terms() {
            let _ = writeln!(out, "{n},{m},{c}");
        }
    }
}
