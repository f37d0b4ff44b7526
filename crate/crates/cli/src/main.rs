//! Command-line frontend: exact counters, asymptotic estimates, error
//! tables, the finite-N ln Z sweep, the intermediate-regime fit, and the
//! named constants, all emitted as machine-readable CSV/TSV/JSON.
//!
//! Output contract: byte-stable for identical inputs; counts printed exactly
//! (no separators), reals at 6 significant digits unless `--digits` says
//! otherwise; diagnostics and progress go to stderr only. Exit codes:
//! 0 success, 2 usage, 3 domain error, 4 precision exhausted.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use partitions::asymptotic::{
    hr_corrected, hr_estimate, wright_corrected, wright_estimate, Estimate,
};
use partitions::exact::{
    count_variant, linear_series, plane_series, PartitionFamily, PartitionKind, Restriction,
};
use partitions::finite::{
    fugacity_at_saddle, ln_z_unrestricted, zn_recurrence, Precision, RecurrenceConfig,
};
use partitions::fitlab::{build_dataset, fit_model, FitSample, NRule};
use partitions::specfun::zeta_prime_minus1;
use partitions::thermo::Dimension;

mod render;
use render::{format_sig, Table};

#[derive(Parser)]
#[command(
    name = "partitions",
    version,
    about = "Exact and asymptotic counting of integer and plane partitions"
)]
struct Cli {
    /// Output format for tabular commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Significant digits for real-valued columns
    #[arg(long, global = true, default_value_t = 6)]
    digits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Tsv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Linear,
    Plane,
}

#[derive(Subcommand)]
enum Command {
    /// Exact partition counts (arbitrary precision)
    Count(CountArgs),
    /// Asymptotic estimates in log and linear form
    Estimate(EstimateArgs),
    /// Relative errors (percent) of the main and corrected estimates
    Errors(ErrorsArgs),
    /// ln Z_N sweep at x = e^{-beta0(n)}, one column per n
    #[command(name = "zn-table")]
    ZnTable(ZnTableArgs),
    /// Fit the intermediate-regime model to ln-ratio data (JSON output)
    Fit(FitArgs),
    /// Named constants at up to 70 digits
    Constants,
    /// Data behind the error-comparison figures
    Figure(FigureArgs),
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma-separated list of n values
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Restrict to at most N parts
    #[arg(long, conflicts_with_all = ["distinct", "max_part_value", "power_parts"])]
    max_parts: Option<u64>,
    /// Restrict to pairwise distinct parts (linear only)
    #[arg(long, conflicts_with_all = ["max_part_value", "power_parts"])]
    distinct: bool,
    /// Restrict part values to at most s (linear only)
    #[arg(long, conflicts_with = "power_parts")]
    max_part_value: Option<u64>,
    /// Restrict parts to e-th powers (linear only)
    #[arg(long)]
    power_parts: Option<u32>,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Use the third-order (Bessel-corrected) form
    #[arg(long)]
    corrected: bool,
    /// Constant c for plane estimates: zeta-prime, minus-one-sixth, or a number
    #[arg(long, default_value = "zeta-prime")]
    c: String,
}

#[derive(Args)]
struct ErrorsArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Constant c for plane estimates: zeta-prime, minus-one-sixth, or a number
    #[arg(long, default_value = "zeta-prime")]
    c: String,
}

#[derive(Args)]
struct ZnTableArgs {
    /// Ensemble dimension (1 or 2)
    #[arg(long = "D", default_value_t = 2)]
    dimension: u32,
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    /// Particle-number rows
    #[arg(long = "N", value_delimiter = ',', required = true)]
    parts: Vec<u64>,
    /// Mantissa contract: double (53 bits) or extended (106 bits);
    /// PARTITIONS_MANTISSA_BITS=53|106 sets the default
    #[arg(long, value_enum)]
    precision: Option<PrecisionArg>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PrecisionArg {
    Double,
    Extended,
}

#[derive(Args)]
struct FitArgs {
    /// n values for dataset construction
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "100,200,500,1000,2000,5000,10000"
    )]
    n: Vec<u64>,
    /// Window of N/n^{2/3} multipliers, "lo,hi" within [0.3, 3]
    #[arg(long, default_value = "0.3,3")]
    window: String,
    /// N-grid: "table" (standard sweep rows) or "even:<points>"
    #[arg(long, default_value = "table")]
    grid: String,
    /// Fit a dataset read from CSV (columns n,N,ln_ratio) instead
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Also write the dataset used as CSV
    #[arg(long)]
    dataset_out: Option<std::path::PathBuf>,
    #[arg(long, value_enum)]
    precision: Option<PrecisionArg>,
}

#[derive(Args)]
struct FigureArgs {
    /// fig2 (linear, n = 2..200) or fig3 (plane, n = 2..60)
    #[arg(long, value_enum)]
    which: Figure,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Figure {
    Fig2,
    Fig3,
}

enum CliError {
    Usage(String),
    Lib(partitions::Error),
    Io(std::io::Error),
}

impl From<partitions::Error> for CliError {
    fn from(e: partitions::Error) -> Self {
        CliError::Lib(e)
    }
}
impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Lib(partitions::Error::PrecisionExhausted { .. }) => 4,
        CliError::Lib(_) => 3,
        CliError::Io(_) => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = run(&cli, &mut out) {
        eprintln!("{e}");
        std::process::exit(exit_code(&e));
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Count(args) => cmd_count(cli, args, out),
        Command::Estimate(args) => cmd_estimate(cli, args, out),
        Command::Errors(args) => cmd_errors(cli, args, out),
        Command::ZnTable(args) => cmd_zn_table(cli, args, out),
        Command::Fit(args) => cmd_fit(args, out),
        Command::Constants => cmd_constants(cli, out),
        Command::Figure(args) => cmd_figure(cli, args, out),
    }
}

fn emit(table: Table, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Csv => table.write_delimited(out, ","),
        Format::Tsv => table.write_delimited(out, "\t"),
        Format::Json => table.write_json(out),
    }
    .map_err(CliError::Io)
}

fn parse_c(spec: &str) -> Result<f64, CliError> {
    match spec {
        "zeta-prime" => Ok(zeta_prime_minus1()),
        "minus-one-sixth" => Ok(-1.0 / 6.0),
        other => other.parse::<f64>().map_err(|_| {
            CliError::Usage(format!(
                "--c must be zeta-prime, minus-one-sixth, or a number, got '{other}'"
            ))
        }),
    }
}

fn restriction_of(args: &CountArgs) -> Result<Restriction, CliError> {
    Ok(if let Some(parts) = args.max_parts {
        Restriction::MaxParts(parts)
    } else if args.distinct {
        Restriction::DistinctParts
    } else if let Some(s) = args.max_part_value {
        Restriction::MaxPartValue(s)
    } else if let Some(e) = args.power_parts {
        Restriction::PowerParts(e)
    } else {
        Restriction::None
    })
}

fn cmd_count(cli: &Cli, args: &CountArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let family = PartitionFamily {
        kind: match args.family {
            Family::Linear => PartitionKind::Linear,
            Family::Plane => PartitionKind::Plane,
        },
        restriction: restriction_of(args)?,
    };
    let mut table = Table::new(["n", "count"]);
    for &n in &args.n {
        let count = count_variant(n, &family)?;
        table.row([n.to_string(), count.to_string()]);
    }
    emit(table, cli.format, out)
}

fn estimates_for(family: Family, corrected: bool, c: f64, n: f64) -> partitions::Result<Estimate> {
    match (family, corrected) {
        (Family::Linear, false) => hr_estimate(n),
        (Family::Linear, true) => hr_corrected(n),
        (Family::Plane, false) => wright_estimate(n, c),
        (Family::Plane, true) => wright_corrected(n, c),
    }
}

fn cmd_estimate(cli: &Cli, args: &EstimateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let c = parse_c(&args.c)?;
    let mut table = Table::new(["n", "log_value", "value"]);
    for &n in &args.n {
        let est = estimates_for(args.family, args.corrected, c, n as f64)?;
        table.row([
            n.to_string(),
            format_sig(est.log_value, cli.digits),
            format_sig(est.value, cli.digits),
        ]);
    }
    emit(table, cli.format, out)
}

fn cmd_errors(cli: &Cli, args: &ErrorsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let c = parse_c(&args.c)?;
    let max_n = *args
        .n
        .iter()
        .max()
        .ok_or_else(|| CliError::Usage("empty --n".into()))? as usize;
    if max_n > 600 && args.family == Family::Plane {
        eprintln!("computing exact plane counts to n={max_n}; this can take a while");
    }
    let exact = match args.family {
        Family::Linear => linear_series(max_n as u64),
        Family::Plane => plane_series(max_n as u64),
    };
    let (main_col, corr_col) = match args.family {
        Family::Linear => ("hr_err_pct", "hr_corrected_err_pct"),
        Family::Plane => ("wright_err_pct", "wright_corrected_err_pct"),
    };
    let mut table = Table::new(["n", main_col, corr_col]);
    for &n in &args.n {
        if n == 0 {
            return Err(CliError::Usage("error tables need n >= 1".into()));
        }
        let main = estimates_for(args.family, false, c, n as f64)?;
        let corr = estimates_for(args.family, true, c, n as f64)?;
        let e = &exact[n as usize];
        table.row([
            n.to_string(),
            format_sig(main.relative_error(e) * 100.0, cli.digits),
            format_sig(corr.relative_error(e) * 100.0, cli.digits),
        ]);
    }
    emit(table, cli.format, out)
}

fn precision_from(arg: Option<PrecisionArg>) -> Result<Precision, CliError> {
    if let Some(p) = arg {
        return Ok(match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Extended => Precision::Extended,
        });
    }
    match std::env::var("PARTITIONS_MANTISSA_BITS") {
        Err(_) => Ok(Precision::Double),
        Ok(v) => match v.as_str() {
            "53" => Ok(Precision::Double),
            "106" => Ok(Precision::Extended),
            other => Err(CliError::Usage(format!(
                "PARTITIONS_MANTISSA_BITS must be 53 or 106, got '{other}'"
            ))),
        },
    }
}

fn cmd_zn_table(cli: &Cli, args: &ZnTableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let dim = match args.dimension {
        1 => Dimension::D1,
        2 => Dimension::D2,
        other => {
            return Err(CliError::Usage(format!(
                "--D must be 1 or 2 for the sweep table, got {other}"
            )))
        }
    };
    let precision = precision_from(args.precision)?;
    if args.parts.is_empty() || args.parts.contains(&0) {
        return Err(CliError::Usage("--N rows must be positive".into()));
    }
    let n_max = *args.parts.iter().max().unwrap() as usize;
    let mut headers = vec!["N".to_string()];
    headers.extend(args.n.iter().map(|n| n.to_string()));
    let mut columns = Vec::new();
    for &n in &args.n {
        if n_max >= 2000 || n >= 5000 {
            eprintln!("computing column n={n} (N up to {n_max})");
        }
        let x = fugacity_at_saddle(dim, n as f64)?;
        let cfg = RecurrenceConfig {
            dimension: args.dimension,
            x,
            n_max,
            precision,
        };
        let t = zn_recurrence(&cfg)?;
        let inf = ln_z_unrestricted(dim, x)?;
        columns.push((t, inf));
    }
    let mut table = Table::from_headers(headers);
    for &parts in &args.parts {
        let mut row = vec![parts.to_string()];
        for (t, _) in &columns {
            row.push(format_sig(t.ln_z[parts as usize], cli.digits));
        }
        table.row_vec(row);
    }
    let mut row = vec!["inf".to_string()];
    for (_, inf) in &columns {
        row.push(format_sig(*inf, cli.digits));
    }
    table.row_vec(row);
    emit(table, cli.format, out)
}

fn parse_window(spec: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "--window must be 'lo,hi', got '{spec}'"
        )));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad window bound '{}'", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad window bound '{}'", parts[1])))?;
    Ok((lo, hi))
}

fn read_dataset(path: &std::path::Path) -> Result<Vec<FitSample>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with("n,")) {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 3 {
            return Err(CliError::Usage(format!(
                "dataset line {} must have 3 columns (n,N,ln_ratio)",
                i + 1
            )));
        }
        let parse = |s: &str, what: &str| -> Result<f64, CliError> {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad {what} '{s}' on dataset line {}", i + 1)))
        };
        out.push(FitSample {
            n: parse(cols[0], "n")? as u64,
            parts: parse(cols[1], "N")? as u64,
            ln_ratio: parse(cols[2], "ln_ratio")?,
        });
    }
    Ok(out)
}

fn cmd_fit(args: &FitArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let data = if let Some(path) = &args.input {
        read_dataset(path)?
    } else {
        let (lo, hi) = parse_window(&args.window)?;
        let rule = if args.grid == "table" {
            NRule::TableRows { lo, hi }
        } else if let Some(points) = args.grid.strip_prefix("even:") {
            let points: usize = points
                .parse()
                .map_err(|_| CliError::Usage(format!("bad grid '{}'", args.grid)))?;
            NRule::Even { lo, hi, points }
        } else {
            return Err(CliError::Usage(format!(
                "--grid must be 'table' or 'even:<points>', got '{}'",
                args.grid
            )));
        };
        let precision = precision_from(args.precision)?;
        build_dataset(&args.n, rule, precision)?
    };
    if let Some(path) = &args.dataset_out {
        let mut f = std::fs::File::create(path)?;
        writeln!(f, "n,N,ln_ratio")?;
        for s in &data {
            writeln!(f, "{},{},{}", s.n, s.parts, format_sig(s.ln_ratio, 12))?;
        }
    }
    let fit = fit_model(&data)?;
    let grid: Vec<[u64; 2]> = data.iter().map(|s| [s.n, s.parts]).collect();
    let doc = serde_json::json!({
        "params": fit,
        "samples": data.len(),
        "grid": grid,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(())
}

fn cmd_constants(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    use partitions::specfun::{LN_GLAISHER_DECIMAL, ZETA_3_DECIMAL, ZETA_PRIME_MINUS_ONE_DECIMAL};
    let digits = cli.digits.clamp(1, 70);
    let mut table = Table::new(["name", "value"]);
    let rows: [(&str, &str); 3] = [
        ("zeta3", ZETA_3_DECIMAL),
        ("zeta_prime_minus1", ZETA_PRIME_MINUS_ONE_DECIMAL),
        ("ln_glaisher", LN_GLAISHER_DECIMAL),
    ];
    for (name, decimal) in rows {
        table.row([name.to_string(), render::truncate_decimal(decimal, digits)]);
    }
    // the combination the plane formulas use, derived from the string
    let two_z3 = 2.0 * partitions::specfun::zeta3();
    table.row(["two_zeta3".to_string(), format_sig(two_z3, digits.min(17))]);
    emit(table, cli.format, out)
}

fn cmd_figure(cli: &Cli, args: &FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (family, range_end) = match args.which {
        Figure::Fig2 => (Family::Linear, 200u64),
        Figure::Fig3 => (Family::Plane, 60u64),
    };
    let exact = match family {
        Family::Linear => linear_series(range_end),
        Family::Plane => plane_series(range_end),
    };
    let c = zeta_prime_minus1();
    let mut table = Table::new(["n", "relative_error_main", "relative_error_corrected"]);
    for n in 2..=range_end {
        let main = estimates_for(family, false, c, n as f64)?;
        let corr = estimates_for(family, true, c, n as f64)?;
        let e = &exact[n as usize];
        table.row([
            n.to_string(),
            format_sig(main.relative_error(e), cli.digits),
            format_sig(corr.relative_error(e), cli.digits),
        ]);
    }
    emit(table, cli.format, out)
}
