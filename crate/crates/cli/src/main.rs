//! `ncmotzkin`: exact counts, series expansions, identity checks and path
//! bijections from the command line.
//!
//! Exit status: 0 success, 1 verification mismatch or computation failure,
//! 2 usage or bounds error.

mod limits;
mod report;
mod verify;
mod weights;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncmotzkin::bijections::{
    choice_motzkin_paths, contract_dyck, expand_motzkin, from_schroder, labeled_motzkin_paths,
    odd_h_to_peaks, peaks_to_odd_h, strip_contract, strip_expand, to_schroder, Floor,
    HChoice, PairLabel,
};
use ncmotzkin::contfrac::{j_expand, qd_extract, s_expand};
use ncmotzkin::paths::{
    count_no_even_peaks, count_sch_even, enumerate_paths, has_even_peak, is_sch_even,
    weighted_sum, Flavor, LatticePath,
};
use ncmotzkin::partitions::count_nc_bounded;
use ncmotzkin::series::gf_nc2;
use ncmotzkin::{JFraction, Rational, SFraction, Weights};

use limits::{Limits, LIMITS_ENV};
use report::{render, Format, ReportRow, Status};
use verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "ncmotzkin", version, about = "Exact weighted path sums, continued fractions and k-distant noncrossing partitions")]
struct Cli {
    /// Emit one JSON object per row.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with rationals as p/q.
    #[arg(long, global = true)]
    csv: bool,
    /// Largest partition size for brute-force counts.
    #[arg(long, global = true)]
    max_partition_n: Option<usize>,
    /// Largest x-length for exhaustive path enumeration.
    #[arg(long, global = true)]
    max_path_len: Option<usize>,
    /// Largest series order.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count partitions or weighted paths for a range of n.
    Count(CountArgs),
    /// Expand an S-fraction, J-fraction or the closed-form generating function.
    Expand(ExpandArgs),
    /// Check identities exactly; exits 1 on the first mismatch.
    Verify(VerifyArgs),
    /// Apply a path bijection and its inverse.
    Bijection(BijectionArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountKind {
    /// k-distant noncrossing partitions (brute force).
    Ncp,
    /// Weighted Motzkin path sums.
    Motzkin,
    /// Weighted Dyck path sums.
    Dyck,
    /// Schröder paths with all horizontal steps at even height.
    SchroderEven,
    /// Schröder paths without peaks at even height (enumeration).
    NoEvenPeaks,
}

#[derive(Args, Debug)]
struct CountArgs {
    kind: CountKind,
    /// Distance parameter for `ncp`.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Named weights: fib2, alpha-beta, nc0, nc1, nc3 (Motzkin); d, ones (Dyck).
    #[arg(long)]
    weights: Option<String>,
    /// Inline horizontal weights, e.g. `1,2,3,3...`.
    #[arg(long)]
    h: Option<String>,
    /// Inline down-step weights for Motzkin paths.
    #[arg(long)]
    down: Option<String>,
    /// Inline down-step weights for Dyck paths.
    #[arg(long)]
    coeffs: Option<String>,
    /// A single n or an inclusive range `a..b`.
    #[arg(long)]
    n: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpandKind {
    S,
    J,
    Gf,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    kind: ExpandKind,
    /// Named weights (d, ones for `s`; fib2, alpha-beta, nc0, nc1, nc3 for `j`).
    #[arg(long)]
    weights: Option<String>,
    /// Inline S-fraction coefficients.
    #[arg(long)]
    coeffs: Option<String>,
    /// Inline J-fraction diagonal.
    #[arg(long)]
    h: Option<String>,
    /// Inline J-fraction subdiagonal.
    #[arg(long)]
    down: Option<String>,
    #[arg(long)]
    order: usize,
    /// Recover this many S-fraction coefficients from the expansion instead.
    #[arg(long)]
    invert: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BijectionKind {
    /// Dyck path read in pairs.
    Contract,
    /// Dyck path without its first and last steps, read in pairs.
    Strip,
    /// Schröder path in SCH_even to a choice-decorated Motzkin path.
    Schroder,
    /// Horizontal steps at odd height to peaks.
    Peaks,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    kind: BijectionKind,
    /// Path word, e.g. `UUDDUD` or `UDH2`.
    #[arg(long, required_unless_present = "all")]
    path: Option<String>,
    /// Check the round trip on every input of each size up to --n.
    #[arg(long, requires = "n")]
    all: bool,
    #[arg(long)]
    n: Option<usize>,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<ncmotzkin::Error> for Failure {
    fn from(e: ncmotzkin::Error) -> Self {
        match e {
            ncmotzkin::Error::LimitExceeded { .. } => Failure::Usage(e.to_string()),
            ncmotzkin::Error::InvalidPath(_)
            | ncmotzkin::Error::InvalidDecoration { .. }
            | ncmotzkin::Error::OutsideDomain { .. } => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

type Outcome = Result<Vec<ReportRow>, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad range {text:?}; use N or A..B"));
    match text.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n: usize = text.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

fn count(args: &CountArgs, limits: &Limits) -> Outcome {
    let range = parse_range(&args.n)?;
    let top = *range.end();
    let mut rows = Vec::new();
    match args.kind {
        CountKind::Ncp => {
            Limits::check("partition size n", top, limits.partitions).or_else(usage)?;
            for n in range {
                let c = count_nc_bounded(args.k, n, limits.partitions)?;
                rows.push(ReportRow::ok(n).with("count", Rational::from_integer(c.into())));
            }
        }
        CountKind::Motzkin => {
            Limits::check("path length", top, limits.order).or_else(usage)?;
            let w = weights::motzkin_weights(args.weights.as_deref(), args.h.as_deref(), args.down.as_deref())
                .or_else(usage)?;
            for n in range {
                rows.push(ReportRow::ok(n).with("sum", weighted_sum(Flavor::Motzkin, n, &w)?));
            }
        }
        CountKind::Dyck => {
            Limits::check("semi-length", top, limits.order).or_else(usage)?;
            let c = weights::dyck_sequence(args.weights.as_deref(), args.coeffs.as_deref()).or_else(usage)?;
            let w = Weights::dyck(c);
            for n in range {
                rows.push(ReportRow::ok(n).with("sum", weighted_sum(Flavor::Dyck, n, &w)?));
            }
        }
        CountKind::SchroderEven => {
            Limits::check("semi-length", top, limits.order).or_else(usage)?;
            for n in range {
                let c = Rational::from_integer(count_sch_even(n).into());
                rows.push(ReportRow::ok(n).with("count", c));
            }
        }
        CountKind::NoEvenPeaks => {
            Limits::check("path length", 2 * top, limits.paths).or_else(usage)?;
            for n in range {
                let c = Rational::from_integer(count_no_even_peaks(n).into());
                rows.push(ReportRow::ok(n).with("count", c));
            }
        }
    }
    Ok(rows)
}

fn expand(args: &ExpandArgs, limits: &Limits) -> Outcome {
    Limits::check("series order", args.order, limits.order).or_else(usage)?;
    let series = match args.kind {
        ExpandKind::Gf => {
            if args.weights.is_some() || args.coeffs.is_some() || args.h.is_some() || args.down.is_some() {
                return usage("`expand gf` takes no weights");
            }
            gf_nc2::<Rational>(args.order)
        }
        ExpandKind::S => {
            let c = weights::dyck_sequence(args.weights.as_deref(), args.coeffs.as_deref()).or_else(usage)?;
            s_expand(&SFraction::new(c), args.order)
        }
        ExpandKind::J => {
            let w = weights::motzkin_weights(args.weights.as_deref(), args.h.as_deref(), args.down.as_deref())
                .or_else(usage)?;
            let Weights::Motzkin { horizontal, down } = w else {
                unreachable!("motzkin_weights returns Motzkin weights")
            };
            j_expand(&JFraction::new(horizontal, down), args.order)
        }
    };
    match args.invert {
        None => Ok(series
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(n, c)| ReportRow::ok(n).with("coeff", c))
            .collect()),
        Some(m) => {
            if m > args.order {
                return usage(format!("--invert {m} needs --order >= {m}"));
            }
            let cs = qd_extract(&series, m).map_err(|e| Failure::Compute(e.to_string()))?;
            Ok(cs
                .into_iter()
                .enumerate()
                .map(|(i, c)| ReportRow::ok(i).with("c", c))
                .collect())
        }
    }
}

fn labels_text(labels: &[PairLabel]) -> String {
    let items: Vec<&str> = labels
        .iter()
        .map(|l| match l {
            PairLabel::FromUD => "UD",
            PairLabel::FromDU => "DU",
        })
        .collect();
    items.join(",")
}

fn choices_text(choices: &[HChoice]) -> String {
    let items: Vec<&str> = choices
        .iter()
        .map(|c| match c {
            HChoice::AsUD => "UD",
            HChoice::AsDU => "DU",
            HChoice::AsHH => "HH",
        })
        .collect();
    items.join(",")
}

fn bijection_single(kind: BijectionKind, word: &str) -> Outcome {
    let row = match kind {
        BijectionKind::Contract | BijectionKind::Strip => {
            let p = LatticePath::parse(Flavor::Dyck, word)?;
            let (m, back) = if matches!(kind, BijectionKind::Contract) {
                let m = contract_dyck(&p)?;
                let back = expand_motzkin(&m)?;
                (m, back)
            } else {
                let m = strip_contract(&p)?;
                let back = strip_expand(&m)?;
                (m, back)
            };
            ReportRow::ok(p.len())
                .with("input", p.to_string())
                .with("motzkin", m.path().to_string())
                .with("labels", labels_text(m.labels()))
                .with("inverse", back.to_string())
                .mark(back == p)
        }
        BijectionKind::Schroder => {
            let s = LatticePath::parse(Flavor::Schroder, word)?;
            let c = from_schroder(&s)?;
            let back = to_schroder(&c)?;
            ReportRow::ok(s.len())
                .with("input", s.to_string())
                .with("motzkin", c.path().to_string())
                .with("choices", choices_text(c.choices()))
                .with("inverse", back.to_string())
                .mark(back == s)
        }
        BijectionKind::Peaks => {
            let s = LatticePath::parse(Flavor::Schroder, word)?;
            let t = odd_h_to_peaks(&s)?;
            let back = peaks_to_odd_h(&t)?;
            ReportRow::ok(s.len())
                .with("input", s.to_string())
                .with("image", t.to_string())
                .with("inverse", back.to_string())
                .mark(back == s)
        }
    };
    Ok(vec![row])
}

fn bijection_all(kind: BijectionKind, top: usize, limits: &Limits) -> Outcome {
    Limits::check("path length", 2 * top, limits.paths).or_else(usage)?;
    let mut rows = Vec::new();
    for n in 0..=top {
        let (checked, ok) = match kind {
            BijectionKind::Contract => {
                let mut ok = true;
                let mut checked = 0;
                for p in enumerate_paths(Flavor::Dyck, n) {
                    ok &= expand_motzkin(&contract_dyck(&p)?)? == p;
                    checked += 1;
                }
                for m in labeled_motzkin_paths(n, Floor::Ground) {
                    ok &= contract_dyck(&expand_motzkin(&m)?)? == m;
                    checked += 1;
                }
                (checked, ok)
            }
            BijectionKind::Strip => {
                let mut ok = true;
                let mut checked = 0;
                for p in enumerate_paths(Flavor::Dyck, n).filter(|p| !p.is_empty()) {
                    ok &= strip_expand(&strip_contract(&p)?)? == p;
                    checked += 1;
                }
                (checked, ok)
            }
            BijectionKind::Schroder => {
                let decorated = choice_motzkin_paths(n);
                let mut ok = true;
                for c in &decorated {
                    let s = to_schroder(c)?;
                    ok &= is_sch_even(&s) && &from_schroder(&s)? == c;
                }
                let target = enumerate_paths(Flavor::Schroder, n).filter(is_sch_even).count();
                (decorated.len(), ok && decorated.len() == target)
            }
            BijectionKind::Peaks => {
                let mut ok = true;
                let mut checked = 0;
                for s in enumerate_paths(Flavor::Schroder, n).filter(|s| !has_even_peak(s)) {
                    ok &= peaks_to_odd_h(&odd_h_to_peaks(&s)?)? == s;
                    checked += 1;
                }
                (checked, ok)
            }
        };
        rows.push(
            ReportRow::ok(n)
                .with("checked", Rational::from_integer(checked.into()))
                .mark(ok),
        );
    }
    Ok(rows)
}

fn limits_from(cli: &Cli) -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var(LIMITS_ENV) {
        limits = limits.parse_overrides(&text).or_else(usage)?;
    }
    if let Some(v) = cli.max_partition_n {
        limits.partitions = v;
    }
    if let Some(v) = cli.max_path_len {
        limits.paths = v;
    }
    if let Some(v) = cli.max_order {
        limits.order = v;
    }
    Ok(limits)
}

fn run(cli: &Cli) -> Outcome {
    let limits = limits_from(cli)?;
    match &cli.command {
        Command::Count(args) => count(args, &limits),
        Command::Expand(args) => expand(args, &limits),
        Command::Verify(args) => verify::run(args.suite, args.max_n, &limits).or_else(usage),
        Command::Bijection(args) => match (&args.path, args.all) {
            (Some(word), false) => bijection_single(args.kind, word),
            (None, true) => bijection_all(args.kind, args.n.unwrap_or(0), &limits),
            _ => usage("give either --path or --all --n N"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Table
    };
    match run(&cli) {
        Ok(rows) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(render(&rows, format).as_bytes());
            if let Some(bad) = rows.iter().find(|r| r.status == Status::Mismatch) {
                eprintln!("mismatch:\n{}", render(std::slice::from_ref(bad), Format::Table).trim_end());
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
