//! Command-line dispatcher behind the `shifted-rgf` binary.
//!
//! Exit codes: 0 success (including a finished scan with no
//! counterexample), 1 a checked claim failed, 2 usage or input error,
//! 3 a conjecture scan found a counterexample.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bijection::{count_ballot_words_dp, count_ballot_words_enum, from_word, qanalog_partitions, to_word};
use crate::error::Error;
use crate::explore::{run_scan, ScanFamily, ScanSpec};
use crate::genfun::{qanalog, qbinom, rgf};
use crate::polyseq::{IntPoly, SeqDiagnostics};
use crate::qstruct::{self, build_ftable};
use crate::shapes::{make_family, Shape, ShapeFamily};
use crate::verdict::{ClaimVerdict, Witness};
use crate::verify::{self, AtConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

/// Environment variable naming the default directory for scan checkpoints.
pub const CHECKPOINT_DIR_ENV: &str = "SHIFTED_RGF_CHECKPOINT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "shifted-rgf",
    version,
    about = "Rank-generating functions of partitions inside Ferrers shapes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank-generating function of one shape, with diagnostics.
    Rgf {
        /// Parts ("9,7,5,3") or a family ("arith:n=19,t=2,b=4").
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "shifted")]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Gaussian polynomial C(n, k)_q.
    Qbinom {
        n: usize,
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Shifted-shape q-analog of binomial(a, b).
    Qanalog {
        a: usize,
        b: usize,
        #[arg(long)]
        json: bool,
    },
    /// Table of f(a, c) as CSV rows a,c,f.
    Ftable {
        #[arg(long, default_value_t = qstruct::DEFAULT_AMAX)]
        amax: usize,
        /// Write to this file instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Ballot-word counts and the partition/word correspondence.
    Bijection {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Check the correspondence over every partition in the shape.
        #[arg(long)]
        verify: bool,
        /// How many correspondences to print.
        #[arg(long, default_value_t = 8)]
        show: usize,
    },
    /// Verify a claim over a finite range.
    Check(CheckArgs),
    /// Run a conjecture scan.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Shifted,
    Straight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckId {
    Eq4,
    Uni,
    At,
    P1,
    Decomp3,
    Named,
    StantonB3,
    FacA,
    FacB,
    FacC,
    FacCMonotone,
    Ohara,
    RemarkCoeff,
    Oracle,
    Symmetry,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub which: CheckId,
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long)]
    pub tmax: Option<usize>,
    #[arg(long)]
    pub amax: Option<usize>,
    #[arg(long)]
    pub cmax: Option<usize>,
    #[arg(long)]
    pub pmax: Option<usize>,
    #[arg(long)]
    pub bound: Option<usize>,
    /// For `check at`: the sweep for step t runs to n = multiplier * t.
    #[arg(long)]
    pub budget_multiplier: Option<usize>,
    /// For `check at`: the decrement law is checked for 3 <= t <= this.
    #[arg(long)]
    pub law_tmax: Option<usize>,
    #[arg(long, default_value_t = 20260101)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanId {
    Centr,
    Arith,
    Flawless,
    Peaks,
    Truncated,
    #[value(name = "open-b5-b7")]
    OpenB5B7,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(value_enum)]
    pub which: ScanId,
    /// Main bound: n for centr, a for arith, size for flawless, n for
    /// peaks and truncated, largest part for open-b5-b7.
    #[arg(long)]
    pub budget: usize,
    /// Step bound for peaks.
    #[arg(long, default_value_t = 8)]
    pub tmax: usize,
    /// Length bound for truncated.
    #[arg(long, default_value_t = 7)]
    pub bmax: usize,
    /// Number of parts for peaks.
    #[arg(long, default_value_t = 4)]
    pub parts: usize,
    /// Peak count that marks a shape as notable in peaks.
    #[arg(long, default_value_t = 3)]
    pub target: usize,
    /// Scan arithmetic progressions whose last part exceeds the step.
    #[arg(long)]
    pub complement: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 64)]
    pub chunk: usize,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// JSON form of `rgf`, `qbinom`, and `qanalog` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub label: String,
    pub poly: IntPoly,
    pub diagnostics: SeqDiagnostics,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Json(_) | Error::Checkpoint(_) => EXIT_CLAIM_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Rgf { shape, kind, json } => {
            let family: ShapeFamily = shape.parse()?;
            let shape = match (make_family(&family)?, kind) {
                (Shape::Strict(s), Kind::Shifted) => Shape::Strict(s),
                (s, Kind::Straight) => Shape::Straight(s.into_straight()),
                (Shape::Straight(s), Kind::Shifted) => {
                    return Err(Failure {
                        code: EXIT_USAGE,
                        message: format!("shifted shapes need strictly decreasing parts, got {s}"),
                    })
                }
            };
            let label = format!(
                "{shape} ({})",
                if kind == Kind::Shifted { "shifted" } else { "straight" }
            );
            print_poly(out, label, rgf(&shape), json)
        }
        Command::Qbinom { n, k, json } => print_poly(out, format!("C({n},{k})_q"), qbinom(n, k)?, json),
        Command::Qanalog { a, b, json } => print_poly(out, format!("C({a},{b})^q"), qanalog(a, b)?, json),
        Command::Ftable { amax, csv } => {
            let table = build_ftable(amax);
            let sink: Box<dyn Write + '_> = match &csv {
                Some(path) => Box::new(std::fs::File::create(path)?),
                None => Box::new(&mut *out),
            };
            let mut w = csv::Writer::from_writer(sink);
            let io = |e: csv::Error| Failure {
                code: EXIT_CLAIM_FAILED,
                message: e.to_string(),
            };
            w.write_record(["a", "c", "f"]).map_err(io)?;
            for (a, c, f) in table.entries() {
                w.write_record([a.to_string(), c.to_string(), f.to_string()])
                    .map_err(io)?;
            }
            w.flush()?;
            drop(w);
            if let Some(path) = csv {
                writeln!(out, "wrote {} rows to {}", table.entries().count(), path.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::Bijection { a, b, verify, show } => run_bijection(out, a, b, verify, show),
        Command::Check(args) => run_check(out, args),
        Command::Scan(args) => run_scan_cmd(out, args),
    }
}

fn print_poly(out: &mut dyn Write, label: String, poly: IntPoly, json: bool) -> CmdResult {
    let diagnostics = poly.diagnose()?;
    if json {
        let report = PolyReport {
            label,
            poly,
            diagnostics,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(Error::from)?)?;
        return Ok(EXIT_OK);
    }
    let d = &diagnostics;
    let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    writeln!(out, "{label}")?;
    writeln!(out, "coefficients: {}", poly.coeff_strings().join(","))?;
    writeln!(out, "polynomial: {poly}")?;
    writeln!(out, "unimodal: {}", d.unimodal)?;
    writeln!(out, "peak_count: {}", d.peak_count)?;
    writeln!(out, "peak_degrees: {}", list(&d.peak_degrees))?;
    writeln!(out, "symmetric: {}", d.symmetric)?;
    writeln!(out, "flawless: {}", d.flawless)?;
    writeln!(out, "log_concave: {}", d.log_concave)?;
    writeln!(
        out,
        "first_dip: {}",
        d.first_dip.map_or_else(|| "none".to_string(), |i| i.to_string())
    )?;
    Ok(EXIT_OK)
}

fn run_bijection(out: &mut dyn Write, a: usize, b: usize, verify: bool, show: usize) -> CmdResult {
    let partitions = qanalog_partitions(a, b)?;
    let dp = count_ballot_words_dp(a, b)?;
    writeln!(
        out,
        "shape: <{}>",
        (0..b)
            .map(|i| (a - 2 * i - 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    )?;
    writeln!(out, "partitions inside shape: {}", partitions.len())?;
    writeln!(out, "ballot words (dp): {dp}")?;
    if a <= 24 {
        writeln!(out, "ballot words (enumerated): {}", count_ballot_words_enum(a, b)?)?;
    }
    for mu in partitions.iter().take(show) {
        writeln!(out, "{mu} <-> {}", to_word(mu, a)?)?;
    }
    if verify {
        let mut ok = dp == partitions.len().into();
        for mu in &partitions {
            let w = to_word(mu, a)?;
            ok &= w.is_ballot() && w.ones() <= b && from_word(&w)? == *mu;
        }
        writeln!(out, "bijection verified: {ok}")?;
        if !ok {
            return Ok(EXIT_CLAIM_FAILED);
        }
    }
    Ok(EXIT_OK)
}

fn run_check(out: &mut dyn Write, args: CheckArgs) -> CmdResult {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        })?;
    let verdicts: Vec<ClaimVerdict> = pool.install(|| match args.which {
        CheckId::Eq4 => vec![verify::check_eq4(args.nmax.unwrap_or(100))],
        CheckId::Uni => vec![verify::check_theorem_uni(args.nmax.unwrap_or(100))],
        CheckId::At => {
            let d = AtConfig::default();
            let cfg = AtConfig {
                tmax: args.tmax.unwrap_or(d.tmax),
                budget_multiplier: args.budget_multiplier.unwrap_or(d.budget_multiplier),
                law_tmax: args.law_tmax.unwrap_or(d.law_tmax),
            };
            let report = verify::check_theorem_at(cfg);
            let mut v = report.verdict;
            for th in report.thresholds {
                v.note(Witness::new(
                    format!("t={}", th.t),
                    format!(
                        "least nonunimodal n up to {}: {}",
                        th.n_budget,
                        th.min_nonunimodal_n.map_or_else(|| "none".into(), |n| n.to_string())
                    ),
                ));
            }
            vec![v]
        }
        CheckId::P1 => vec![verify::check_lemma_p1(args.pmax.unwrap_or(25))],
        CheckId::Decomp3 => vec![verify::check_three_part_decomposition(args.pmax.unwrap_or(25))],
        CheckId::Named => verify::check_named_shapes(),
        CheckId::StantonB3 => vec![verify::check_stanton_b3(args.bound.unwrap_or(25))],
        CheckId::FacA => vec![qstruct::check_fac_a(args.amax.unwrap_or(40), args.cmax.unwrap_or(80))],
        CheckId::FacB => vec![qstruct::check_fac_b(args.amax.unwrap_or(40))],
        CheckId::FacC => vec![qstruct::check_fac_c(args.amax.unwrap_or(500))],
        CheckId::FacCMonotone => vec![qstruct::check_fac_c_monotone(args.amax.unwrap_or(500))],
        CheckId::Ohara => vec![qstruct::check_ohara_recursion(args.amax.unwrap_or(30))],
        CheckId::RemarkCoeff => vec![qstruct::check_remark_coeff_formula(
            args.amax.unwrap_or(30),
            args.tmax.unwrap_or(60),
        )],
        CheckId::Oracle => vec![verify::check_oracle_equivalence(
            args.bound.unwrap_or(12),
            5,
            500,
            args.seed,
        )],
        CheckId::Symmetry => vec![verify::check_symmetry_characterization(args.bound.unwrap_or(15))],
    });
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&verdicts).map_err(Error::from)?)?;
    } else {
        for v in &verdicts {
            writeln!(out, "{}", v.summary_line())?;
            for w in &v.witnesses {
                writeln!(out, "  {}: {}", w.shape, w.detail)?;
            }
        }
    }
    Ok(if verdicts.iter().all(|v| v.holds) {
        EXIT_OK
    } else {
        EXIT_CLAIM_FAILED
    })
}

fn run_scan_cmd(out: &mut dyn Write, args: ScanArgs) -> CmdResult {
    let family = match args.which {
        ScanId::Centr => ScanFamily::Centr { nmax: args.budget },
        ScanId::Arith => ScanFamily::Arith {
            amax: args.budget,
            complement: args.complement,
        },
        ScanId::Flawless => ScanFamily::Arith3 {
            size_budget: args.budget,
        },
        ScanId::Peaks => ScanFamily::Arith2 {
            parts: args.parts,
            nmax: args.budget,
            tmax: args.tmax,
            target_peaks: args.target,
        },
        ScanId::Truncated => ScanFamily::TruncatedStaircase {
            bmax: args.bmax,
            nmax: args.budget,
        },
        ScanId::OpenB5B7 => ScanFamily::OpenB5B7 { max_part: args.budget },
    };
    let checkpoint = args.checkpoint.clone().or_else(|| {
        std::env::var_os(CHECKPOINT_DIR_ENV).map(|dir| PathBuf::from(dir).join(format!("{}.json", family.name())))
    });
    let mut spec = ScanSpec::new(family).jobs(args.jobs).chunk_size(args.chunk);
    if let Some(path) = checkpoint {
        spec = spec.checkpoint(path);
    }
    let report = run_scan(&spec)?;
    let json = report.to_json()?;
    if let Some(path) = &args.out {
        std::fs::write(path, &json)?;
    }
    if args.json {
        writeln!(out, "{json}")?;
    } else {
        writeln!(out, "scan {}: {}", report.spec.name(), report.conclusion)?;
        writeln!(out, "max peak count: {}", report.max_peak_count)?;
        for c in &report.counterexamples {
            writeln!(
                out,
                "COUNTEREXAMPLE {} ({}): {} [oracle: {}]",
                c.shape,
                c.params,
                c.coeffs.join(","),
                match c.oracle_confirmed {
                    Some(true) => "confirmed",
                    Some(false) => "MISMATCH",
                    None => "over budget",
                }
            )?;
        }
        for w in &report.notable {
            writeln!(out, "notable {}: {}", w.shape, w.detail)?;
        }
    }
    Ok(if report.has_counterexamples() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}
