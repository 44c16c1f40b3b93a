//! Batch census over graph6 catalogs.
//!
//! Lines are processed in fixed-size batches: each batch is computed in
//! parallel (one graph per work unit), written in input order, and then
//! checkpointed, so at most one batch of work is ever in flight.

mod checkpoint;
mod report;

pub use checkpoint::{catalog_digest, Checkpoint};
pub use report::{emit_report, ReportFormat, ReportWriter};

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Seek};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::embedding::{
    genus_distribution_with, EmbeddingError, EnumerationOptions, GenusDistribution, DEFAULT_BUDGET,
};
use crate::graph::{parse_graph6, GraphError};
use crate::poly::{analyze_with, AnalysisError, AnalysisOptions, AnalysisReport};

/// Orders at or above this split a single graph's rotation range across
/// workers instead of relying on graph-level parallelism alone.
const LARGE_ORDER: usize = 20;

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: graph is not cubic")]
    NotCubic { line: usize },
    #[error("line {line}: {source}")]
    Embedding { line: usize, source: EmbeddingError },
    #[error("line {line}: {source}")]
    Analysis { line: usize, source: AnalysisError },
    #[error("I/O error near line {line}: {source}")]
    Io { line: usize, source: io::Error },
    #[error("checkpoint does not match catalog (expected digest {expected}, found {found})")]
    CheckpointMismatch { expected: String, found: String },
    #[error("malformed checkpoint: {0}")]
    BadCheckpoint(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Classification of one catalog graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRecord {
    pub graph6: String,
    pub order: usize,
    pub distribution: GenusDistribution,
    pub log_concave: bool,
    pub real_rooted: bool,
    pub cone_violation: bool,
    pub non_lc_quadratic: bool,
    /// Wall time for this graph; kept out of reports so they stay
    /// reproducible.
    pub compute_millis: u64,
}

/// Per-order census counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub total: u64,
    pub non_real: u64,
    pub cone_violation: u64,
    /// Expected to stay zero; any entry is a log-concavity counterexample.
    pub non_log_concave: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurveySummary {
    pub by_order: BTreeMap<usize, OrderCounts>,
    /// Lines dropped under the non-strict policy: `(line number, reason)`.
    pub skipped: Vec<(usize, String)>,
}

impl SurveySummary {
    pub fn add(&mut self, r: &SurveyRecord) {
        let c = self.by_order.entry(r.order).or_default();
        c.total += 1;
        c.non_real += u64::from(!r.real_rooted);
        c.cone_violation += u64::from(r.cone_violation);
        c.non_log_concave += u64::from(!r.log_concave);
    }

    pub fn is_empty(&self) -> bool {
        self.by_order.is_empty()
    }

    pub fn total_graphs(&self) -> u64 {
        self.by_order.values().map(|c| c.total).sum()
    }

    pub fn log_concavity_failures(&self) -> u64 {
        self.by_order.values().map(|c| c.non_log_concave).sum()
    }
}

/// One line per order in the census layout `n: non-real / total`.
impl fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in &self.by_order {
            writeln!(
                f,
                "{n}: {} / {}  (cone violations: {}, non-log-concave: {})",
                c.non_real, c.total, c.cone_violation, c.non_log_concave
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurveyOptions {
    pub workers: Option<usize>,
    /// Abort on unparsable or non-cubic lines instead of skipping them.
    pub strict: bool,
    pub budget: u64,
    pub force_budget: bool,
    /// Lines per parallel batch (and per checkpoint).
    pub batch: usize,
    /// Stop after this many catalog lines, leaving a resumable checkpoint.
    pub max_lines: Option<usize>,
    pub analysis: AnalysisOptions,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            workers: None,
            strict: true,
            budget: DEFAULT_BUDGET,
            force_budget: false,
            batch: 256,
            max_lines: None,
            analysis: AnalysisOptions::default(),
        }
    }
}

/// Classifies one graph6 line (1-based `line` for error reporting).
pub fn survey_line(
    line: usize,
    text: &str,
    opts: &SurveyOptions,
) -> Result<SurveyRecord, SurveyError> {
    let started = Instant::now();
    let g = parse_graph6(text).map_err(|source| SurveyError::Graph { line, source })?;
    if !g.is_cubic() {
        return Err(SurveyError::NotCubic { line });
    }
    let enumeration = EnumerationOptions {
        budget: opts.budget,
        force: opts.force_budget,
        workers: if g.vertex_count() >= LARGE_ORDER {
            None
        } else {
            Some(1)
        },
    };
    let distribution = genus_distribution_with(&g, &enumeration)
        .map_err(|source| SurveyError::Embedding { line, source })?;
    let report: AnalysisReport<f64> = analyze_with(&distribution.to_polynomial(), &opts.analysis)
        .map_err(|source| SurveyError::Analysis { line, source })?;
    Ok(SurveyRecord {
        graph6: text.trim_end().to_string(),
        order: g.vertex_count(),
        distribution,
        log_concave: report.log_concave,
        real_rooted: report.real_rooted,
        cone_violation: report.has_cone_violation(),
        non_lc_quadratic: report.has_non_lc_quadratic(),
        compute_millis: started.elapsed().as_millis() as u64,
    })
}

fn skippable(e: &SurveyError) -> bool {
    matches!(e, SurveyError::Graph { .. } | SurveyError::NotCubic { .. })
}

/// Processes one batch of `(line number, text)` pairs, preserving order.
fn process_batch(
    batch: &[(usize, String)],
    opts: &SurveyOptions,
    summary: &mut SurveySummary,
) -> Result<Vec<SurveyRecord>, SurveyError> {
    let results: Vec<Result<SurveyRecord, SurveyError>> = batch
        .par_iter()
        .map(|(line, text)| survey_line(*line, text, opts))
        .collect();
    let mut records = Vec::with_capacity(results.len());
    for result in results {
        match result {
            Ok(r) => {
                summary.add(&r);
                records.push(r);
            }
            Err(e) if !opts.strict && skippable(&e) => {
                let line = match &e {
                    SurveyError::Graph { line, .. } | SurveyError::NotCubic { line } => *line,
                    _ => unreachable!(),
                };
                summary.skipped.push((line, e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(records)
}

fn with_pool<T: Send>(
    workers: Option<usize>,
    f: impl FnOnce() -> Result<T, SurveyError> + Send,
) -> Result<T, SurveyError> {
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| SurveyError::ThreadPool(e.to_string()))?
            .install(f),
        None => f(),
    }
}

/// Reads `(line number, text)` pairs, skipping blank lines, until `limit`
/// lines have been consumed. Returns the pairs and the lines consumed.
fn read_batch<R: BufRead>(
    lines: &mut io::Lines<R>,
    first_line: usize,
    limit: usize,
) -> Result<(Vec<(usize, String)>, usize), SurveyError> {
    let mut out = Vec::new();
    let mut consumed = 0;
    while consumed < limit {
        let Some(next) = lines.next() else { break };
        let line = first_line + consumed;
        let text = next.map_err(|source| SurveyError::Io { line, source })?;
        consumed += 1;
        if !text.trim().is_empty() {
            out.push((line, text));
        }
    }
    Ok((out, consumed))
}

/// In-memory census of a graph6 stream: records in input order and the
/// per-order summary.
pub fn run_survey<R: BufRead + Send>(
    catalog: R,
    opts: &SurveyOptions,
) -> Result<(SurveySummary, Vec<SurveyRecord>), SurveyError> {
    with_pool(opts.workers, || {
        let mut summary = SurveySummary::default();
        let mut records = Vec::new();
        let mut lines = catalog.lines();
        let mut done = 0;
        let cap = opts.max_lines.unwrap_or(usize::MAX);
        loop {
            let want = opts.batch.max(1).min(cap - done);
            let (batch, consumed) = read_batch(&mut lines, done + 1, want)?;
            if consumed == 0 {
                break;
            }
            done += consumed;
            records.extend(process_batch(&batch, opts, &mut summary)?);
        }
        Ok((summary, records))
    })
}

/// Where a file-backed survey writes and how it resumes.
#[derive(Debug, Clone)]
pub struct SurveyTarget<'a> {
    pub catalog: &'a Path,
    pub report: &'a Path,
    pub format: ReportFormat,
    /// Checkpoint file; `None` disables checkpointing.
    pub checkpoint: Option<&'a Path>,
    /// Continue from an existing checkpoint instead of starting over.
    pub resume: bool,
}

/// File-backed census with checkpointing. After every batch the report is
/// flushed and the checkpoint (catalog digest, lines done, report length,
/// running summary) is replaced atomically. On resume the report is
/// truncated to the checkpointed length, so an interrupted-and-resumed run
/// yields the same report bytes as an uninterrupted one.
pub fn survey_file(
    target: &SurveyTarget<'_>,
    opts: &SurveyOptions,
) -> Result<SurveySummary, SurveyError> {
    let io_err = |line: usize| move |source: io::Error| SurveyError::Io { line, source };
    let digest = catalog_digest(target.catalog).map_err(io_err(0))?;

    let existing = match (target.resume, target.checkpoint) {
        (true, Some(path)) if path.exists() => Some(Checkpoint::load(path)?),
        _ => None,
    };
    let mut state = match existing {
        Some(cp) => {
            if cp.catalog_sha256 != digest {
                return Err(SurveyError::CheckpointMismatch {
                    expected: cp.catalog_sha256,
                    found: digest,
                });
            }
            cp
        }
        None => Checkpoint::fresh(digest),
    };

    let mut report_file = if state.lines_done == 0 && state.report_bytes == 0 {
        File::create(target.report).map_err(io_err(0))?
    } else {
        let f = OpenOptions::new()
            .write(true)
            .open(target.report)
            .map_err(io_err(state.lines_done))?;
        let len = f.metadata().map_err(io_err(state.lines_done))?.len();
        if len < state.report_bytes {
            return Err(SurveyError::BadCheckpoint(format!(
                "report has {len} bytes, checkpoint expects at least {}",
                state.report_bytes
            )));
        }
        f.set_len(state.report_bytes)
            .map_err(io_err(state.lines_done))?;
        f
    };
    report_file
        .seek(io::SeekFrom::End(0))
        .map_err(io_err(state.lines_done))?;

    let mut writer = ReportWriter::with_offset(
        io::BufWriter::new(report_file),
        target.format,
        state.report_bytes,
    );
    if state.report_bytes == 0 {
        writer.header().map_err(io_err(0))?;
    }

    let reader = BufReader::new(File::open(target.catalog).map_err(io_err(0))?);
    let mut lines = reader.lines();
    for skip in 0..state.lines_done {
        match lines.next() {
            Some(Ok(_)) => {}
            Some(Err(source)) => {
                return Err(SurveyError::Io {
                    line: skip + 1,
                    source,
                })
            }
            None => break,
        }
    }

    let cap = opts
        .max_lines
        .map_or(usize::MAX, |m| state.lines_done.saturating_add(m));
    with_pool(opts.workers, || {
        loop {
            let want = opts.batch.max(1).min(cap - state.lines_done);
            let (batch, consumed) = read_batch(&mut lines, state.lines_done + 1, want)?;
            if consumed == 0 {
                break;
            }
            let records = process_batch(&batch, opts, &mut state.summary)?;
            for r in &records {
                writer.write(r).map_err(io_err(state.lines_done + 1))?;
            }
            state.lines_done += consumed;
            state.report_bytes = writer.flush().map_err(io_err(state.lines_done))?;
            if let Some(path) = target.checkpoint {
                state.store(path).map_err(io_err(state.lines_done))?;
            }
        }
        Ok(())
    })?;
    state.report_bytes = writer.flush().map_err(io_err(state.lines_done))?;
    if let Some(path) = target.checkpoint {
        state.store(path).map_err(io_err(state.lines_done))?;
    }
    Ok(state.summary)
}

/// Reads a whole catalog file into a census without writing anything.
pub fn survey_catalog(
    path: &Path,
    opts: &SurveyOptions,
) -> Result<(SurveySummary, Vec<SurveyRecord>), SurveyError> {
    let file = File::open(path).map_err(|source| SurveyError::Io { line: 0, source })?;
    run_survey(BufReader::new(file), opts)
}

/// Removes a checkpoint file if present.
pub fn clear_checkpoint(path: &Path) -> io::Result<()> {
    match fs::remove_file(path) {
        Err(e) if e.kind() != io::ErrorKind::NotFound => Err(e),
        _ => Ok(()),
    }
}
