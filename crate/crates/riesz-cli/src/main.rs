use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riesz_bounds::certifier::{self, CertifierConfig};
use riesz_bounds::extremal::{self, Direction, SearchConfig};
use riesz_bounds::functions::{claim_catalog, sharp_constant_forward, sharp_constant_reverse, ExponentPair, Expected};
use riesz_bounds::interval::Interval;
use riesz_bounds::report::{self, Report, Status};
use riesz_bounds::torus::{self, default_grid_size, TorusFunction, TorusGrid};

/// Exit code for bad flags, unreadable inputs and invalid parameters.
const USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "riesz", version, about = "Certify the scalar inequalities behind the sharp Riesz projection bounds and test the bounds numerically")]
struct Cli {
    /// Cap on worker threads; results do not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one claim, or the whole catalog over the default grid.
    Certify(CertifyArgs),
    /// Check random polynomials against the sharp constants.
    Scan(ScanArgs),
    /// Norms and ratios of one polynomial read from a coefficient file.
    Ratio(RatioArgs),
    /// Search for polynomials with a large ratio.
    Extremize(ExtremizeArgs),
    /// Enclose the stationary points of F and evaluate F there.
    Stationary(StationaryArgs),
    /// Summarize the certificates, scans and searches stored in a directory.
    Report(ReportArgs),
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, conflicts_with = "conjugate")]
    s: Option<f64>,
    /// Use s = p / (p - 1).
    #[arg(long)]
    conjugate: bool,
}

impl PairArgs {
    /// `None` when no `--p` was given.
    fn pair(&self) -> Result<Option<ExponentPair>, String> {
        match (self.p, self.s, self.conjugate) {
            (None, None, false) => Ok(None),
            (None, _, _) => Err("--s and --conjugate need --p".into()),
            (Some(_), None, false) => Err("give --s or --conjugate with --p".into()),
            (Some(p), None, true) => ExponentPair::conjugate(p).map(Some).map_err(|e| e.to_string()),
            (Some(p), Some(s), _) => ExponentPair::new(p, s).map(Some).map_err(|e| e.to_string()),
        }
    }

    fn require(&self) -> Result<ExponentPair, String> {
        self.pair()?.ok_or_else(|| "--p is required".into())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Proved,
    Refuted,
}

#[derive(Args)]
struct CertifyArgs {
    /// Claim id, e.g. C1; all claims when omitted.
    #[arg(long)]
    claim: Option<String>,
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, default_value_t = 40)]
    max_depth: u32,
    #[arg(long, default_value_t = 10_000_000)]
    max_boxes: u64,
    /// Prove the bound with this much room to spare.
    #[arg(long, default_value_t = 0.0)]
    margin: f64,
    /// Override the expected verdict of every certificate.
    #[arg(long, value_enum)]
    expect: Option<ExpectArg>,
    /// Leave out elapsed_ms and tool_version so reruns compare byte for byte.
    #[arg(long)]
    stable_output: bool,
    /// Print the catalog instead of certifying.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    p_list: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 16)]
    degree: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Quadrature grid size; defaults to the accuracy-checked size for the degree.
    #[arg(long)]
    grid_size: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RatioArgs {
    #[arg(long)]
    coeffs: PathBuf,
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long)]
    grid_size: Option<usize>,
}

#[derive(Args)]
struct ExtremizeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Sweep over these p at conjugate s instead of a single run.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["p", "s", "conjugate"])]
    p_list: Option<Vec<f64>>,
    /// fwd or rev; chosen from p when omitted.
    #[arg(long)]
    direction: Option<Direction>,
    #[arg(long, default_value_t = 16)]
    degree: usize,
    #[arg(long, default_value_t = 20_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    /// Search state as JSON, or the sweep table as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Coefficients of the best polynomial.
    #[arg(long)]
    best: Option<PathBuf>,
}

#[derive(Args)]
struct StationaryArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, default_value_t = 0.1)]
    lo: f64,
    #[arg(long, default_value_t = 0.99)]
    hi: f64,
    #[arg(long, default_value_t = 64)]
    pieces: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long = "in")]
    dir: PathBuf,
}

/// Failure of a subcommand: a usage problem, or a finished run with a status.
enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.workers {
        if n == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    let result = match cli.command {
        Command::Certify(a) => certify(a),
        Command::Scan(a) => scan(a),
        Command::Ratio(a) => ratio(a),
        Command::Extremize(a) => extremize(a),
        Command::Stationary(a) => stationary(a),
        Command::Report(a) => report(a),
    };
    match result {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(USAGE)
        }
    }
}

/// Writes `text` to `out`, or to stdout when no path was given.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e)),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn certify(a: CertifyArgs) -> Result<Status, Failure> {
    if a.list {
        let mut text = String::new();
        for c in claim_catalog() {
            text.push_str(&format!("{:<10} {:<22} {}\n", c.id, c.fn_id.name(), c.citation));
        }
        emit(a.out.as_deref(), &text)?;
        return Ok(Status::Success);
    }
    let cfg = CertifierConfig {
        max_depth: a.max_depth,
        max_boxes: a.max_boxes,
        strictness_margin: a.margin,
        ..CertifierConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    let pair = a.pair.pair()?;
    let certs = match &a.claim {
        Some(id) => {
            let inst = certifier::instance(id, pair).map_err(|e| e.to_string())?;
            vec![certifier::certify(&inst, &cfg).map_err(|e| e.to_string())?]
        }
        None => {
            let grid = pair.map_or_else(certifier::default_grid, |p| vec![p]);
            certifier::verify_all(&claim_catalog(), &grid, &cfg)
        }
    };
    let expect = a.expect.map(|e| match e {
        ExpectArg::Proved => Expected::Proved,
        ExpectArg::Refuted => Expected::Refuted,
    });
    emit(a.out.as_deref(), &report::certificates_json(&certs, a.stable_output))?;
    for c in &certs {
        let pair = match (c.p, c.s) {
            (Some(p), Some(s)) => format!(" p={p} s={s}"),
            _ => String::new(),
        };
        eprintln!("{}{pair}: {:?}", c.claim_id, c.verdict);
    }
    Ok(report::status(&certs, expect))
}

fn scan(a: ScanArgs) -> Result<Status, Failure> {
    let grid = a.grid_size.unwrap_or_else(|| default_grid_size(a.degree));
    let rows = torus::scan_ratios(&a.p_list, a.trials, a.degree, a.seed, grid).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    torus::write_scan_csv(&rows, &mut buf).map_err(|e| e.to_string())?;
    emit(a.out.as_deref(), &String::from_utf8_lossy(&buf))?;
    let worst = rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    let bad = rows.iter().filter(|r| r.margin < -report::MARGIN_TOLERANCE).count();
    eprintln!("{} rows, min margin {worst:.3e}, {bad} above the constant", rows.len());
    Ok(if bad > 0 { Status::Violation } else { Status::Success })
}

fn ratio(a: RatioArgs) -> Result<Status, Failure> {
    let pair = a.pair.require()?;
    let text = fs::read_to_string(&a.coeffs).map_err(|e| Failure::Io(a.coeffs.clone(), e))?;
    let f = TorusFunction::from_json(&text).map_err(|e| e.to_string())?;
    let m = a.grid_size.unwrap_or_else(|| default_grid_size(f.degree()));
    let grid = TorusGrid::new(m).map_err(|e| e.to_string())?;
    let r = grid.report(&f, &pair).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&r).expect("report serializes"));
    let over_forward = sharp_constant_forward(&pair).is_ok_and(|c| r.ratio_forward > c + report::MARGIN_TOLERANCE);
    let over_reverse = sharp_constant_reverse(&pair).is_ok_and(|c| r.ratio_reverse > c + report::MARGIN_TOLERANCE);
    Ok(if over_forward || over_reverse { Status::Violation } else { Status::Success })
}

fn extremize(a: ExtremizeArgs) -> Result<Status, Failure> {
    let cfg = SearchConfig { restarts: a.restarts, ..SearchConfig::default() };
    if let Some(ps) = &a.p_list {
        let rows = extremal::sweep(ps, a.degree, a.budget, a.seed, &cfg);
        let mut buf = Vec::new();
        extremal::write_sweep_csv(&rows, &mut buf).map_err(|e| e.to_string())?;
        emit(a.out.as_deref(), &String::from_utf8_lossy(&buf))?;
        let violated = rows.iter().any(|r| r.ceiling_violations.unwrap_or(0) > 0);
        let failed = rows.iter().any(|r| r.error.is_some());
        return Ok(if violated {
            Status::Violation
        } else if failed {
            Status::Inconclusive
        } else {
            Status::Success
        });
    }
    let pair = match a.pair.pair()? {
        Some(pair) => pair,
        None => return Err("give --p or --p-list".to_string().into()),
    };
    let direction = a.direction.unwrap_or_else(|| Direction::for_p(pair.p));
    let st = extremal::maximize_ratio(&pair, a.degree, direction, a.budget, a.seed, &cfg).map_err(|e| e.to_string())?;
    emit(a.out.as_deref(), &(serde_json::to_string_pretty(&st).expect("state serializes") + "\n"))?;
    if let Some(path) = &a.best {
        fs::write(path, st.best.to_json() + "\n").map_err(|e| Failure::Io(path.clone(), e))?;
    }
    eprintln!(
        "best ratio {:.9} (fine grid {:.9}) of C = {:.9}, fraction {:.4}, {} evaluations",
        st.best_ratio,
        st.best_ratio_fine,
        st.constant,
        st.fraction(),
        st.iterations
    );
    Ok(if st.ceiling_violations > 0 { Status::Violation } else { Status::Success })
}

fn stationary(a: StationaryArgs) -> Result<Status, Failure> {
    let pair = a.pair.require()?;
    let range = Interval::new(a.lo, a.hi).map_err(|e| e.to_string())?;
    let pts = certifier::stationary_points(&pair, range, a.pieces, a.tol).map_err(|e| e.to_string())?;
    println!("{}", serde_json::to_string_pretty(&pts).expect("points serialize"));
    Ok(Status::Success)
}

fn report(a: ReportArgs) -> Result<Status, Failure> {
    let r = Report::from_dir(&a.dir).map_err(|e| Failure::Io(a.dir.clone(), e))?;
    print!("{}", r.render());
    Ok(r.status())
}
