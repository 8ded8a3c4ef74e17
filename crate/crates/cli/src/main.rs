//! Command-line front end: exact power-sum coefficients, integrality
//! thresholds, the verification sweep, and the supporting number triangles.
//!
//! Every rational in every output format is rendered exactly ("num/den");
//! no floating point is ever printed.  Exit codes: 0 on success, 1 when the
//! verification sweep finds a disagreement on the coprime grid, 2 on usage
//! or parameter errors.

use std::process::ExitCode;

use apsum::bernoulli::bernoulli_number;
use apsum::integrality::{integrality_threshold, verify_integrality_grid, IntegralityReport};
use apsum::powersum::{coeffs_whitney, ProgressionParams};
use apsum::report::{reports_to_csv, reports_to_json};
use apsum::triangles::{stirling1_row, stirling2_row, whitney_row};
use apsum::{Error, Int};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "apsum",
    version,
    about = "Exact coefficients and integrality of power sums of arithmetic progressions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of r^n + (m+r)^n + ... + ((l-1)m+r)^n as a polynomial in l.
    Coeffs {
        /// Step of the progression.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        m: i64,
        /// Offset of the progression.
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        r: i64,
        /// Exponent.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// The integrality thresholds F(1) .. F(max-n).
    Ftable {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
    },
    /// A single integrality threshold F(n).
    Fvalue {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Check the criterion "coefficients integral iff F(n) | m" on a grid.
    Verify {
        #[arg(long = "max-m", value_parser = clap::value_parser!(i64).range(1..))]
        max_m: i64,
        #[arg(long = "max-r", value_parser = clap::value_parser!(i64).range(0..))]
        max_r: i64,
        #[arg(long = "max-n", value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Restrict the grid to gcd(m, r) = 1, the setting of the criterion.
        #[arg(long = "coprime-only", default_value_t = true, action = ArgAction::Set)]
        coprime_only: bool,
    },
    /// The Bernoulli number B_n.
    Bernoulli {
        #[arg(long)]
        n: usize,
    },
    /// Row n of the r-Whitney triangle with step m and offset r.
    Whitney {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: usize,
    },
    /// Row n of a Stirling triangle.
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingKind {
    /// Signed Stirling numbers of the first kind.
    #[value(alias = "1")]
    First,
    /// Stirling numbers of the second kind.
    #[value(alias = "2")]
    Second,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Coeffs { m, r, n } => {
            let coeffs = coeffs_whitney(&ProgressionParams::new(m, r, n))?;
            match cli.format {
                Format::Table => {
                    println!("{coeffs}");
                    println!("{}", coeffs.coeff_list_string());
                }
                Format::Csv => {
                    let mut w = csv_writer();
                    write_record(
                        &mut w,
                        ["m", "r", "n", "degree", "coefficients", "polynomial"],
                    );
                    write_record(
                        &mut w,
                        [
                            m.to_string(),
                            r.to_string(),
                            n.to_string(),
                            coeffs.degree_string(),
                            coeffs.coeff_list_string(),
                            coeffs.to_string(),
                        ],
                    );
                    print!("{}", csv_into_string(w));
                }
                Format::Json => print_json(&json!({
                    "m": m.to_string(),
                    "r": r.to_string(),
                    "n": n.to_string(),
                    "degree": coeffs.degree_string(),
                    "coefficients": coeffs.coeff_strings(),
                    "polynomial": coeffs.to_string(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Ftable { max_n } => {
            let table: Vec<(u32, Int)> =
                (1..=max_n).map(|n| (n, integrality_threshold(n))).collect();
            match cli.format {
                Format::Table => {
                    for (n, f) in &table {
                        println!("{n}, {f}");
                    }
                }
                Format::Csv => {
                    let mut w = csv_writer();
                    write_record(&mut w, ["n", "F"]);
                    for (n, f) in &table {
                        write_record(&mut w, [n.to_string(), f.to_string()]);
                    }
                    print!("{}", csv_into_string(w));
                }
                Format::Json => {
                    let rows: Vec<_> = table
                        .iter()
                        .map(|(n, f)| json!({"n": n.to_string(), "F": f.to_string()}))
                        .collect();
                    print_json(&json!(rows));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Fvalue { n } => {
            let f = integrality_threshold(n);
            match cli.format {
                Format::Table => println!("{f}"),
                Format::Csv => {
                    let mut w = csv_writer();
                    write_record(&mut w, ["n", "F"]);
                    write_record(&mut w, [n.to_string(), f.to_string()]);
                    print!("{}", csv_into_string(w));
                }
                Format::Json => print_json(&json!({"n": n.to_string(), "F": f.to_string()})),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            max_m,
            max_r,
            max_n,
            coprime_only,
        } => {
            let reports = verify_integrality_grid(max_m, max_r, max_n, coprime_only);
            match cli.format {
                Format::Table => {
                    for rep in &reports {
                        println!("{}", report_line(rep));
                    }
                }
                Format::Csv => print!("{}", reports_to_csv(&reports)),
                Format::Json => println!("{}", reports_to_json(&reports)),
            }
            let disagreements: Vec<_> = reports
                .iter()
                .filter(|rep| rep.params.m.gcd(&rep.params.r) == 1 && !rep.agrees)
                .collect();
            if disagreements.is_empty() {
                eprintln!("{} reports; every coprime point agrees", reports.len());
                Ok(ExitCode::SUCCESS)
            } else {
                for rep in &disagreements {
                    eprintln!("DISAGREES: {}", report_line(rep));
                }
                eprintln!(
                    "{} of {} coprime points disagree",
                    disagreements.len(),
                    reports.len()
                );
                Ok(ExitCode::from(1))
            }
        }

        Command::Bernoulli { n } => {
            let b = bernoulli_number(n);
            match cli.format {
                Format::Table => println!("{b}"),
                Format::Csv => {
                    let mut w = csv_writer();
                    write_record(&mut w, ["n", "B"]);
                    write_record(&mut w, [n.to_string(), b.to_string()]);
                    print!("{}", csv_into_string(w));
                }
                Format::Json => print_json(&json!({"n": n.to_string(), "B": b.to_string()})),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Whitney { m, r, n } => {
            let row = whitney_row(m, r, n);
            print_row(
                &[
                    ("m", m.to_string()),
                    ("r", r.to_string()),
                    ("n", n.to_string()),
                ],
                &row,
                cli.format,
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Stirling { kind, n } => {
            let (name, row) = match kind {
                StirlingKind::First => ("first", stirling1_row(n)),
                StirlingKind::Second => ("second", stirling2_row(n)),
            };
            print_row(
                &[("kind", name.to_string()), ("n", n.to_string())],
                &row,
                cli.format,
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn report_line(rep: &IntegralityReport) -> String {
    format!(
        "m={} r={} n={} F={} is_integral={} predicate={} agrees={}",
        rep.params.m,
        rep.params.r,
        rep.params.n,
        rep.threshold,
        rep.is_integral,
        rep.predicate,
        rep.agrees
    )
}

fn print_row(fields: &[(&str, String)], row: &[Int], format: Format) {
    match format {
        Format::Table => {
            let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("{}", entries.join(" "));
        }
        Format::Csv => {
            let mut w = csv_writer();
            write_record(&mut w, ["k", "value"]);
            for (k, v) in row.iter().enumerate() {
                write_record(&mut w, [k.to_string(), v.to_string()]);
            }
            print!("{}", csv_into_string(w));
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (key, value) in fields {
                obj.insert((*key).to_string(), json!(value));
            }
            let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
            obj.insert("row".to_string(), json!(entries));
            print_json(&serde_json::Value::Object(obj));
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("rendering JSON is infallible")
    );
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn write_record<I, T>(w: &mut csv::Writer<Vec<u8>>, record: I)
where
    I: IntoIterator<Item = T>,
    T: AsRef<[u8]>,
{
    w.write_record(record).expect("in-memory write");
}

fn csv_into_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
