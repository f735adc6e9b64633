//! Resumable conjecture scans.
//!
//! A scan enumerates its parameter cells in lexicographic order of the
//! parameter tuple, evaluates them chunk by chunk on a rayon pool, and folds
//! the results into a [`ScanReport`] in cell order. After each chunk the
//! partial report is written to the checkpoint file (temp file + rename), so
//! a later run with the same family picks up where the last one stopped.
//! Reports carry no timestamps or worker counts: the same family always
//! yields the same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{oracle_rgf, rgf_shifted, Containment, DEFAULT_ORACLE_BUDGET};
use crate::polyseq::{diagnose, SeqDiagnostics};
use crate::shapes::{make_family, strict_partitions_of, strict_shapes_bounded, ShapeFamily, StrictShape};
use crate::verdict::Witness;

/// Which conjecture or open regime to probe, with its bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "conjecture_id", rename_all = "snake_case")]
pub enum ScanFamily {
    /// Central q-analogs `C(2n+1, n)^q` and `C(2n, n)^q`, `1 <= n <= nmax`.
    Centr { nmax: usize },
    /// `⟨a, a-t, …, a-(b-1)t⟩` with last part in `[1, t]`, `a <= amax`.
    /// With `complement`, the last part is instead above `t`.
    Arith { amax: usize, complement: bool },
    /// Peak counts over `⟨n, n-t, …⟩` with `parts` parts, `n <= nmax`,
    /// `t <= tmax`; shapes reaching `target_peaks` are recorded.
    Arith2 {
        parts: usize,
        nmax: usize,
        tmax: usize,
        target_peaks: usize,
    },
    /// Flawlessness of `F_λ` for every strict `λ` with `|λ| <= size_budget`.
    Arith3 { size_budget: usize },
    /// `⟨n, n-1, …, n-(b-1)⟩` for `b <= bmax`, `b <= n <= nmax`.
    TruncatedStaircase { bmax: usize, nmax: usize },
    /// All strict shapes with exactly 5 or exactly 7 parts, largest part
    /// at most `max_part`.
    OpenB5B7 { max_part: usize },
}

impl ScanFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ScanFamily::Centr { .. } => "centr",
            ScanFamily::Arith { .. } => "arith",
            ScanFamily::Arith2 { .. } => "arith2",
            ScanFamily::Arith3 { .. } => "arith3",
            ScanFamily::TruncatedStaircase { .. } => "truncated_staircase",
            ScanFamily::OpenB5B7 { .. } => "open_b5_b7",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSpec {
    pub family: ScanFamily,
    pub jobs: usize,
    pub chunk_size: usize,
    pub checkpoint: Option<PathBuf>,
    /// Stop (as if interrupted) after this many chunks in this run.
    pub stop_after_chunks: Option<usize>,
}

impl ScanSpec {
    pub fn new(family: ScanFamily) -> Self {
        ScanSpec {
            family,
            jobs: 1,
            chunk_size: 64,
            checkpoint: None,
            stop_after_chunks: None,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn chunk_size(mut self, n: usize) -> Self {
        self.chunk_size = n.max(1);
        self
    }

    pub fn checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    pub fn stop_after_chunks(mut self, n: usize) -> Self {
        self.stop_after_chunks = Some(n);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub shape: StrictShape,
    pub params: String,
    pub coeffs: Vec<String>,
    pub diagnostics: SeqDiagnostics,
    /// Brute-force recomputation agrees; `None` when the shape is over the
    /// enumeration budget.
    pub oracle_confirmed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub spec: ScanFamily,
    pub total_cells: usize,
    pub shapes_tested: usize,
    pub counterexamples: Vec<Counterexample>,
    pub notable: Vec<Witness>,
    pub max_peak_count: usize,
    /// Half-open ranges `[start, end)` of finished cell indices.
    pub completed_ranges: Vec<[usize; 2]>,
    pub finished: bool,
    pub conclusion: String,
}

impl ScanReport {
    fn empty(spec: ScanFamily, total_cells: usize) -> Self {
        ScanReport {
            spec,
            total_cells,
            shapes_tested: 0,
            counterexamples: Vec::new(),
            notable: Vec::new(),
            max_peak_count: 0,
            completed_ranges: Vec::new(),
            finished: false,
            conclusion: "in progress".into(),
        }
    }

    fn cursor(&self) -> usize {
        self.completed_ranges.last().map_or(0, |r| r[1])
    }

    pub fn has_counterexamples(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Clone, Debug)]
struct Cell {
    shape: StrictShape,
    params: String,
    /// Number of parts, for per-length rules.
    parts: usize,
}

fn cells(family: &ScanFamily) -> Vec<Cell> {
    let cell = |shape: StrictShape, params: String| Cell {
        parts: shape.len(),
        shape,
        params,
    };
    let family_shape = |f: ShapeFamily| make_family(&f).ok().and_then(|s| s.into_strict());
    let mut out = Vec::new();
    match *family {
        ScanFamily::Centr { nmax } => {
            for n in 1..=nmax {
                for a in [2 * n, 2 * n + 1] {
                    if let Some(s) = family_shape(ShapeFamily::QAnalog { a, b: n }) {
                        out.push(cell(s, format!("a={a},b={n}")));
                    }
                }
            }
        }
        ScanFamily::Arith { amax, complement } => {
            for a in 1..=amax {
                for b in 1..=a {
                    if b == 1 {
                        // a single part: the step is immaterial, keep t = a
                        if !complement {
                            out.push(cell(
                                StrictShape::new([a]).expect("one part"),
                                format!("a={a},b=1,t={a}"),
                            ));
                        }
                        continue;
                    }
                    for t in 1..=(a - 1) / (b - 1) {
                        let last = a - (b - 1) * t;
                        if (last <= t) == complement {
                            continue;
                        }
                        if let Some(s) = family_shape(ShapeFamily::Arithmetic { n: a, t, b }) {
                            out.push(cell(s, format!("a={a},b={b},t={t}")));
                        }
                    }
                }
            }
        }
        ScanFamily::Arith2 { parts, nmax, tmax, .. } => {
            for n in 1..=nmax {
                for t in 1..=tmax {
                    if let Some(s) = family_shape(ShapeFamily::Arithmetic { n, t, b: parts }) {
                        out.push(cell(s, format!("n={n},t={t},b={parts}")));
                    }
                }
            }
        }
        ScanFamily::Arith3 { size_budget } => {
            for size in 1..=size_budget {
                let mut ps = strict_partitions_of(size);
                ps.sort();
                for s in ps {
                    out.push(cell(s, format!("size={size}")));
                }
            }
        }
        ScanFamily::TruncatedStaircase { bmax, nmax } => {
            for b in 1..=bmax {
                for n in b..=nmax {
                    if let Some(s) = family_shape(ShapeFamily::TruncatedStaircase { n, b }) {
                        out.push(cell(s, format!("b={b},n={n}")));
                    }
                }
            }
        }
        ScanFamily::OpenB5B7 { max_part } => {
            for b in [5, 7] {
                for s in strict_shapes_bounded(max_part, b).into_iter().filter(|s| s.len() == b) {
                    out.push(cell(s, format!("b={b}")));
                }
            }
        }
    }
    out
}

enum Finding {
    Counterexample,
    Notable(String),
    Nothing,
}

fn classify(family: &ScanFamily, cell: &Cell, d: &SeqDiagnostics) -> Finding {
    match family {
        ScanFamily::Centr { .. } | ScanFamily::Arith { .. } | ScanFamily::OpenB5B7 { .. } => {
            if d.unimodal {
                Finding::Nothing
            } else {
                Finding::Counterexample
            }
        }
        ScanFamily::Arith3 { .. } => {
            if d.flawless {
                Finding::Nothing
            } else {
                Finding::Counterexample
            }
        }
        ScanFamily::Arith2 { target_peaks, .. } => {
            if d.peak_count >= *target_peaks {
                Finding::Notable(format!("peak_count={} at {:?}", d.peak_count, d.peak_degrees))
            } else {
                Finding::Nothing
            }
        }
        ScanFamily::TruncatedStaircase { .. } => match (d.unimodal, cell.parts) {
            (true, _) => Finding::Nothing,
            // six parts is the length where nonunimodal truncated staircases are known
            (false, 6) => Finding::Notable(format!(
                "nonunimodal, peak_count={}, dip at {}",
                d.peak_count,
                d.first_dip.unwrap_or_default()
            )),
            (false, _) => Finding::Counterexample,
        },
    }
}

struct Evaluated {
    cell: Cell,
    coeffs: Vec<String>,
    diagnostics: SeqDiagnostics,
}

fn evaluate(cell: Cell) -> Evaluated {
    let f = rgf_shifted(&cell.shape);
    let diagnostics = diagnose(&f).expect("rank-generating functions are nonzero");
    Evaluated {
        coeffs: f.coeff_strings(),
        cell,
        diagnostics,
    }
}

fn oracle_confirms(shape: &StrictShape) -> Option<bool> {
    let o = oracle_rgf(shape.parts(), Containment::Strict, DEFAULT_ORACLE_BUDGET).ok()?;
    Some(o == rgf_shifted(shape))
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn load_checkpoint(path: &Path, family: &ScanFamily) -> Result<Option<ScanReport>> {
    if !path.exists() {
        return Ok(None);
    }
    let report: ScanReport = serde_json::from_str(&fs::read_to_string(path)?)?;
    if report.spec != *family {
        return Err(Error::Checkpoint(format!(
            "{} holds a {} scan with different bounds",
            path.display(),
            report.spec.name()
        )));
    }
    Ok(Some(report))
}

/// Summary lines that need the whole range: per-length last nonunimodal
/// `n` for truncated staircases, and presence of the known six-part cases.
fn finalize(report: &mut ScanReport) {
    if let ScanFamily::TruncatedStaircase { bmax, nmax } = report.spec {
        let mut last_bad: BTreeMap<usize, usize> = BTreeMap::new();
        let mut bad: Vec<StrictShape> = report.counterexamples.iter().map(|c| c.shape.clone()).collect();
        bad.extend(report.notable.iter().filter_map(|w| w.shape.parse().ok()));
        let bad_shapes: Vec<(usize, usize)> = bad.iter().map(|s| (s.len(), s.largest())).collect();
        for (b, n) in bad_shapes {
            let e = last_bad.entry(b).or_default();
            *e = (*e).max(n);
        }
        let mut summary = Vec::new();
        for (b, n) in &last_bad {
            summary.push(Witness::new(
                format!("b={b}"),
                format!("largest nonunimodal n in range: {n} (unimodal for {}..={nmax})", n + 1),
            ));
        }
        for n in [15usize, 17, 19] {
            if bmax >= 6 && nmax >= n {
                let key = format!("{},{},{},{},{},{}", n, n - 1, n - 2, n - 3, n - 4, n - 5);
                let found = report.notable.iter().any(|w| w.shape == key);
                summary.push(Witness::new(
                    key,
                    if found {
                        "known nonunimodal case reproduced"
                    } else {
                        "known nonunimodal case NOT reproduced"
                    },
                ));
            }
        }
        report.notable.extend(summary);
    }
    report.finished = true;
    report.conclusion = if report.counterexamples.is_empty() {
        format!("no counterexample in range ({} shapes)", report.shapes_tested)
    } else {
        format!(
            "{} counterexample(s) found among {} shapes",
            report.counterexamples.len(),
            report.shapes_tested
        )
    };
}

pub fn run_scan(spec: &ScanSpec) -> Result<ScanReport> {
    let all = cells(&spec.family);
    let mut report = match &spec.checkpoint {
        Some(path) => load_checkpoint(path, &spec.family)?,
        None => None,
    }
    .unwrap_or_else(|| ScanReport::empty(spec.family.clone(), all.len()));
    if report.finished {
        return Ok(report);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| Error::Checkpoint(format!("cannot start worker pool: {e}")))?;

    let mut chunks_run = 0;
    while report.cursor() < all.len() {
        if spec.stop_after_chunks.is_some_and(|n| chunks_run >= n) {
            return Ok(report);
        }
        let start = report.cursor();
        let end = (start + spec.chunk_size).min(all.len());
        let results: Vec<Evaluated> = pool.install(|| all[start..end].par_iter().cloned().map(evaluate).collect());
        for r in results {
            report.shapes_tested += 1;
            report.max_peak_count = report.max_peak_count.max(r.diagnostics.peak_count);
            match classify(&spec.family, &r.cell, &r.diagnostics) {
                Finding::Counterexample => report.counterexamples.push(Counterexample {
                    oracle_confirmed: oracle_confirms(&r.cell.shape),
                    shape: r.cell.shape,
                    params: r.cell.params,
                    coeffs: r.coeffs,
                    diagnostics: r.diagnostics,
                }),
                Finding::Notable(detail) => report.notable.push(Witness::new(
                    r.cell
                        .shape
                        .parts()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                    format!("{}: {detail}", r.cell.params),
                )),
                Finding::Nothing => {}
            }
        }
        match report.completed_ranges.last_mut() {
            Some(r) if r[1] == start => r[1] = end,
            _ => report.completed_ranges.push([start, end]),
        }
        chunks_run += 1;
        if report.cursor() == all.len() {
            finalize(&mut report);
        }
        if let Some(path) = &spec.checkpoint {
            write_atomic(path, &report.to_json()?)?;
        }
    }
    if !report.finished {
        // empty family
        finalize(&mut report);
    }
    Ok(report)
}

pub fn scan_centr(nmax: usize, jobs: usize) -> Result<ScanReport> {
    run_scan(&ScanSpec::new(ScanFamily::Centr { nmax }).jobs(jobs))
}

pub fn scan_arith(amax: usize, jobs: usize) -> Result<ScanReport> {
    run_scan(
        &ScanSpec::new(ScanFamily::Arith {
            amax,
            complement: false,
        })
        .jobs(jobs),
    )
}

pub fn scan_flawless(size_budget: usize, jobs: usize) -> Result<ScanReport> {
    run_scan(&ScanSpec::new(ScanFamily::Arith3 { size_budget }).jobs(jobs))
}

pub fn scan_peaks(parts: usize, nmax: usize, tmax: usize, target_peaks: usize, jobs: usize) -> Result<ScanReport> {
    run_scan(
        &ScanSpec::new(ScanFamily::Arith2 {
            parts,
            nmax,
            tmax,
            target_peaks,
        })
        .jobs(jobs),
    )
}

pub fn scan_truncated_staircase(bmax: usize, nmax: usize, jobs: usize) -> Result<ScanReport> {
    run_scan(&ScanSpec::new(ScanFamily::TruncatedStaircase { bmax, nmax }).jobs(jobs))
}
