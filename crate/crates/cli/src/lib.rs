//! Command implementations for the `sytpoly` binary.
//!
//! Every command renders into an [`Output`] instead of printing, so the
//! binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sytpoly::verify::{self, Status, VerificationReport, DEFAULT_MAX_K};
use sytpoly::{
    a_coefficients, alpha_chain, bijection::transcript, dimension_hook, enumerate_restricted,
    eval_f_large, fit_binomial_coefficients, Direction, Error, Partition, Pivot, RestrictionWindow,
    StandardTableau,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sytpoly",
    version,
    about = "Standard Young tableaux, restricted counts and the polynomials f^(n-k,λ)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Down,
    Up,
}

impl From<DirectionArg> for Direction {
    fn from(value: DirectionArg) -> Self {
        match value {
            DirectionArg::Down => Direction::Down,
            DirectionArg::Up => Direction::Up,
        }
    }
}

#[derive(Debug, Args)]
pub struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ShapeArg {
    /// Partition as comma-separated parts, e.g. `3,2,1` (empty for ∅).
    #[arg(long)]
    pub shape: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of standard tableaux of a shape, or of (n−k, λ) with --n.
    Dimension {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The a- and b-coefficients of the polynomial n ↦ f^(n−k,λ).
    Coeffs {
        #[command(flatten)]
        shape: ShapeArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Number of tableaux whose entries α+1, …, α+h climb strictly down rows.
    Count {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        alpha: usize,
        /// Also list the tableaux in canonical order.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Applies one step of the down or up map to a tableau.
    Bijection {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// `{"shape":[..],"rows":[[..],..]}` or the text form `1 2 3 / 4 5 / 6`.
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// For every tableau of the top window, its chain down to α = 0.
    Table {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Re-checks every identity over all partitions of size at most --max-k.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
        /// Run a single named check.
        #[arg(long)]
        check: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(error: Error) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {error}\n"),
        }
    }
}

pub fn execute(cli: Cli) -> Output {
    let result = match cli.command {
        Command::Dimension { shape, n, format } => dimension(&shape.shape, n, format.format),
        Command::Coeffs { shape, format } => coeffs(&shape.shape, format.format),
        Command::Count {
            shape,
            h,
            alpha,
            list,
            format,
        } => count(&shape.shape, h, alpha, list, format.format),
        Command::Bijection {
            shape,
            h,
            alpha,
            direction,
            tableau,
            format,
        } => bijection(
            &shape.shape,
            h,
            alpha,
            direction.into(),
            &tableau,
            format.format,
        ),
        Command::Table { shape, h, format } => table(&shape.shape, h, format.format),
        Command::Verify {
            max_k,
            check,
            format,
        } => return verify(max_k, check.as_deref(), format.format),
    };
    match result {
        Ok(stdout) => Output::ok(stdout),
        Err(error) => Output::error(error),
    }
}

fn json_line(value: &Value) -> String {
    let mut line = serde_json::to_string(value).expect("values always serialize");
    line.push('\n');
    line
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types always serialize")
}

fn dimension(shape: &str, n: Option<usize>, format: Format) -> Result<String, Error> {
    let lambda = Partition::parse(shape)?;
    let value = match n {
        Some(n) => eval_f_large(&lambda, n)?,
        None => dimension_hook(&lambda)?,
    };
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let mut record = json!({ "shape": to_value(&lambda) });
            if let Some(n) = n {
                record["n"] = json!(n);
            }
            record["dimension"] = to_value(&exact_number(&value.to_string()));
            json_line(&record)
        }
    })
}

/// A decimal string as an exact JSON number.
fn exact_number(decimal: &str) -> serde_json::Number {
    decimal
        .parse()
        .expect("decimal integers are valid JSON numbers")
}

fn coeffs(shape: &str, format: Format) -> Result<String, Error> {
    let lambda = Partition::parse(shape)?;
    let a = a_coefficients(&lambda)?;
    let b = fit_binomial_coefficients(&lambda)?;
    Ok(match format {
        Format::Text => {
            let list = |values: &[_]| {
                values
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            };
            format!("a=[{}]\nb=[{}]\n", list(&a.a), list(b.coeffs()))
        }
        Format::Json => json_line(&json!({
            "lambda": to_value(&lambda),
            "a": to_value(&a)["a"],
            "b": to_value(&b)["b"],
        })),
    })
}

fn count(shape: &str, h: usize, alpha: usize, list: bool, format: Format) -> Result<String, Error> {
    let lambda = Partition::parse(shape)?;
    let members = enumerate_restricted(&lambda, RestrictionWindow { h, alpha })?;
    Ok(match format {
        Format::Text => {
            let mut out = format!("{}\n", members.len());
            if list {
                for t in &members {
                    let _ = writeln!(out, "{}", t.to_text());
                }
            }
            out
        }
        Format::Json => {
            let mut record = json!({
                "shape": to_value(&lambda),
                "h": h,
                "alpha": alpha,
                "count": members.len(),
            });
            if list {
                record["tableaux"] = to_value(&members);
            }
            json_line(&record)
        }
    })
}

/// Accepts tableau JSON, falling back to the text form.
fn parse_tableau(text: &str) -> Result<StandardTableau, Error> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::MalformedTableau(e.to_string()));
    }
    StandardTableau::parse_text(text)
}

fn bijection(
    shape: &str,
    h: usize,
    alpha: usize,
    direction: Direction,
    tableau: &str,
    format: Format,
) -> Result<String, Error> {
    let lambda = Partition::parse(shape)?;
    let tableau = parse_tableau(tableau)?;
    if tableau.shape() != &lambda {
        return Err(Error::MalformedTableau(format!(
            "tableau has shape {} but --shape is {lambda}",
            tableau.shape()
        )));
    }
    let record = transcript(&tableau, h, alpha, direction)?;
    Ok(match format {
        Format::Text => {
            let pivot = match record.pivot {
                Some(Pivot::Q(q)) => format!("q={}", q.0),
                Some(Pivot::P(p)) => format!("p={}", p.0),
                None => "none (identity)".to_string(),
            };
            format!(
                "input:  {}\npivot:  {pivot}\noutput: {}\n",
                record.input.to_text(),
                record.output.to_text()
            )
        }
        Format::Json => json_line(&to_value(&record)),
    })
}

fn table(shape: &str, h: usize, format: Format) -> Result<String, Error> {
    let lambda = Partition::parse(shape)?;
    let k = lambda.weight();
    if h > k {
        return Err(Error::WindowOutOfRange { h, alpha: 0, k });
    }
    let top = enumerate_restricted(&lambda, RestrictionWindow { h, alpha: k - h })?;
    let chains = top
        .iter()
        .map(|t| alpha_chain(t, h))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let header: Vec<String> = (0..=k - h).map(|alpha| format!("alpha={alpha}")).collect();
            let _ = writeln!(out, "{}", header.join(" | "));
            for chain in &chains {
                let cells: Vec<String> = chain.iter().map(StandardTableau::to_text).collect();
                let _ = writeln!(out, "{}", cells.join(" | "));
            }
            out
        }
        Format::Json => json_line(&json!({
            "shape": to_value(&lambda),
            "h": h,
            "alphas": (0..=k - h).collect::<Vec<_>>(),
            "chains": to_value(&chains),
        })),
    })
}

fn verify(max_k: usize, check: Option<&str>, format: Format) -> Output {
    let reports = match verify::run(max_k, check) {
        Ok(reports) => reports,
        Err(error) => return Output::error(error),
    };
    let failed = reports.iter().any(|r| !r.passed());
    let stdout = match format {
        Format::Text => render_reports(&reports),
        Format::Json => reports.iter().map(|r| json_line(&to_value(r))).collect(),
    };
    let stderr = if failed {
        let names: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.check.as_str())
            .collect();
        format!("verification failed: {}\n", names.join(", "))
    } else {
        String::new()
    };
    Output {
        code: if failed { EXIT_VERIFY_FAILED } else { EXIT_OK },
        stdout,
        stderr,
    }
}

fn render_reports(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let width = reports.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut total = 0;
    for report in reports {
        total += report.cases_run;
        let status = match report.status {
            Status::Passed => "PASS",
            Status::Failed => "FAIL",
            Status::Skipped => "SKIP",
        };
        let _ = writeln!(
            out,
            "{status} {:width$}  k={}..{}  cases={}",
            report.check, report.k_range[0], report.k_range[1], report.cases_run
        );
        for failure in &report.failures {
            let _ = writeln!(
                out,
                "     {} {}: expected {}, got {}",
                failure.partition, failure.params, failure.expected, failure.actual
            );
        }
    }
    let _ = writeln!(out, "{} checks, {total} cases", reports.len());
    out
}
