use std::process::ExitCode;

use capflat_cli::{run_sweep, FlatReport, OraclePolicy, SweepConfig};
use capflat_core::{
    catalan, render, CapDiagram, Error as CoreError, RenderStyle, TallyProfile, WeightFunction,
};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "capflat",
    version,
    about = "Cap diagrams, tally functions and flat-set enumeration on the number line",
    after_help = "Exit codes: 0 verified/ok, 1 violation found, 2 usage error, 3 resource abort."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the flat set of a weight function with its decomposition.
    Flat {
        /// Weight function as comma-separated increasing integers, e.g. "2,4";
        /// empty for the rank-zero function.
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a weight line, its cap diagram, and/or its tally profile.
    Render {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(long, value_enum, default_value_t = What::All)]
        what: What,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
    /// Sweep every weight function of a rank (anchor pinned) and verify the
    /// size bounds, move-count bound, decomposition laws and oracle agreement.
    Verify {
        #[arg(long)]
        rank: usize,
        /// Window width; the smallest entry may sit this far left of the
        /// anchor. Defaults to 2*rank + 6.
        #[arg(long)]
        window: Option<i64>,
        /// Worker threads for the sweep (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest rank the sweep will accept before aborting.
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Brute-force oracle on every function ("all"), on N seeded samples
        /// ("sample:N"), or per-rank default (all up to rank 4, then 200).
        #[arg(long, default_value = "default")]
        oracle: String,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print C_0..C_n and re-verify the fundamental recurrence on the way.
    Catalan { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Wt,
    Cap,
    Tally,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
    Svg,
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("capflat: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_weight(spec: &str) -> Result<WeightFunction, ExitCode> {
    WeightFunction::parse(spec).map_err(usage_error)
}

fn cmd_flat(spec: &str, format: Format) -> ExitCode {
    let f = match parse_weight(spec) {
        Ok(f) => f,
        Err(code) => return code,
    };
    match FlatReport::for_weight_function(&f) {
        Ok(report) => {
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e @ CoreError::CatalanOverflow(_)) => {
            eprintln!("capflat: {e}");
            ExitCode::from(EXIT_RESOURCE)
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_render(spec: &str, what: What, style: Style) -> ExitCode {
    let f = match parse_weight(spec) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let style = match style {
        Style::Ascii => RenderStyle::Ascii,
        Style::Svg => RenderStyle::Svg,
    };
    let caps = match what {
        What::Cap | What::All => Some(CapDiagram::of(&f)),
        _ => None,
    };
    let tally = match what {
        What::Tally | What::All if f.is_empty() => {
            return usage_error("tally requires at least one marked point");
        }
        What::Tally | What::All => Some(TallyProfile::new(&f).expect("nonempty")),
        _ => None,
    };
    match render(&f, caps.as_ref(), tally.as_ref(), style) {
        Ok(picture) => {
            print!("{picture}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn parse_oracle(oracle: &str, rank: usize) -> Result<OraclePolicy, String> {
    match oracle {
        "default" => Ok(OraclePolicy::default_for_rank(rank)),
        "all" => Ok(OraclePolicy::All),
        _ => match oracle.strip_prefix("sample:").map(str::parse) {
            Some(Ok(n)) => Ok(OraclePolicy::Sample(n)),
            _ => Err(format!(
                "--oracle must be \"all\", \"default\" or \"sample:N\", got {oracle:?}"
            )),
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    rank: usize,
    window: Option<i64>,
    jobs: Option<usize>,
    max_rank: usize,
    oracle: &str,
    seed: u64,
    format: Format,
) -> ExitCode {
    if rank == 0 {
        return usage_error("--rank must be at least 1");
    }
    let window = window.unwrap_or(2 * rank as i64 + 6);
    if window < 2 * rank as i64 {
        return usage_error(format!("--window must be at least 2*rank = {}", 2 * rank));
    }
    let oracle = match parse_oracle(oracle, rank) {
        Ok(policy) => policy,
        Err(message) => return usage_error(message),
    };
    let config = SweepConfig {
        rank,
        window,
        oracle,
        seed,
    };

    if rank > max_rank {
        // Clean abort: emit the empty report flagged incomplete.
        let mut report = capflat_cli::SweepReport {
            rank,
            window,
            anchor: 2 * rank as i64,
            normalization: String::new(),
            tested: 0,
            max_flat_size: 0,
            catalan_bound: catalan(rank + 1).unwrap_or(0),
            extremal: Vec::new(),
            min_flat_size: 0,
            rank_plus_one: rank + 1,
            minimal: Vec::new(),
            oracle_checked: 0,
            stability_checked: 0,
            incomplete: true,
            violations: Vec::new(),
        };
        report.normalization = format!("aborted: rank {rank} exceeds --max-rank {max_rank}");
        match format {
            Format::Text => print!("{}", report.to_text()),
            Format::Json => print!("{}", report.to_json()),
        }
        eprintln!("capflat: rank {rank} exceeds --max-rank {max_rank}; aborting");
        return ExitCode::from(EXIT_RESOURCE);
    }

    let report = match jobs {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| run_sweep(&config)),
        _ => run_sweep(&config),
    };
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn cmd_catalan(n: usize) -> ExitCode {
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        match catalan(k) {
            Ok(c) => values.push(c),
            Err(e) => {
                eprintln!("capflat: {e}");
                return ExitCode::from(EXIT_RESOURCE);
            }
        }
    }
    let rendered: Vec<String> = values.iter().map(u64::to_string).collect();
    println!("{}", rendered.join(", "));
    for m in 1..=n {
        let sum: u64 = (1..=m).map(|i| values[m - i] * values[i - 1]).sum();
        if sum != values[m] {
            eprintln!("capflat: fundamental recurrence FAILED at C_{m}");
            return ExitCode::from(EXIT_VIOLATION);
        }
    }
    println!("fundamental recurrence verified through C_{n}");
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Flat { f, format } => cmd_flat(&f, format),
        Command::Render { f, what, style } => cmd_render(&f, what, style),
        Command::Verify {
            rank,
            window,
            jobs,
            max_rank,
            oracle,
            seed,
            format,
        } => cmd_verify(rank, window, jobs, max_rank, &oracle, seed, format),
        Command::Catalan { n } => cmd_catalan(n),
    }
}
