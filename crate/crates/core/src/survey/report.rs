use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use super::SurveyRecord;

/// Output format for survey records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    /// One JSON object per line; coefficients are decimal strings.
    JsonLines,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" | "jsonl" | "json-lines" => Ok(ReportFormat::JsonLines),
            other => Err(format!(
                "unknown report format `{other}` (expected csv or json)"
            )),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Csv => "csv",
            ReportFormat::JsonLines => "json",
        })
    }
}

const CSV_HEADER: [&str; 7] = [
    "graph6",
    "n",
    "coefficients",
    "log_concave",
    "real_rooted",
    "cone_violation",
    "non_lc_quadratic",
];

#[derive(Serialize)]
struct JsonRecord<'a> {
    graph6: &'a str,
    n: usize,
    distribution: Vec<String>,
    log_concave: bool,
    real_rooted: bool,
    cone_violation: bool,
    non_lc_quadratic: bool,
}

/// Counts bytes passed through to the inner writer.
struct Counting<W> {
    inner: W,
    bytes: u64,
}

impl<W: Write> Write for Counting<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.bytes += n as u64;
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

enum Sink<W: Write> {
    Csv(Box<csv::Writer<Counting<W>>>),
    Json(Counting<W>),
}

/// Streaming record writer that tracks how many bytes reached its sink.
pub struct ReportWriter<W: Write> {
    sink: Sink<W>,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(writer: W, format: ReportFormat) -> Self {
        Self::with_offset(writer, format, 0)
    }

    /// Starts the byte count at `offset` (for appending to an existing report).
    pub fn with_offset(writer: W, format: ReportFormat, offset: u64) -> Self {
        let counting = Counting {
            inner: writer,
            bytes: offset,
        };
        let sink = match format {
            ReportFormat::Csv => Sink::Csv(Box::new(
                csv::WriterBuilder::new()
                    .has_headers(false)
                    .from_writer(counting),
            )),
            ReportFormat::JsonLines => Sink::Json(counting),
        };
        ReportWriter { sink }
    }

    /// Column header; a no-op for JSON lines.
    pub fn header(&mut self) -> io::Result<()> {
        match &mut self.sink {
            Sink::Csv(w) => w.write_record(CSV_HEADER).map_err(io::Error::from),
            Sink::Json(_) => Ok(()),
        }
    }

    pub fn write(&mut self, r: &SurveyRecord) -> io::Result<()> {
        let counts = r.distribution.counts();
        match &mut self.sink {
            Sink::Csv(w) => {
                let coeffs = counts
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    r.graph6.clone(),
                    r.order.to_string(),
                    coeffs,
                    r.log_concave.to_string(),
                    r.real_rooted.to_string(),
                    r.cone_violation.to_string(),
                    r.non_lc_quadratic.to_string(),
                ])
                .map_err(io::Error::from)
            }
            Sink::Json(w) => {
                let row = JsonRecord {
                    graph6: &r.graph6,
                    n: r.order,
                    distribution: counts.iter().map(u64::to_string).collect(),
                    log_concave: r.log_concave,
                    real_rooted: r.real_rooted,
                    cone_violation: r.cone_violation,
                    non_lc_quadratic: r.non_lc_quadratic,
                };
                serde_json::to_writer(&mut *w, &row)?;
                w.write_all(b"\n")
            }
        }
    }

    /// Flushes everything and returns the total byte count (including the
    /// starting offset).
    pub fn flush(&mut self) -> io::Result<u64> {
        match &mut self.sink {
            Sink::Csv(w) => {
                w.flush()?;
                Ok(w.get_ref().bytes)
            }
            Sink::Json(w) => {
                w.flush()?;
                Ok(w.bytes)
            }
        }
    }
}

/// Writes `records` in full. CSV output always carries the header row, so an
/// empty survey yields just the header.
pub fn emit_report<W: Write>(
    records: &[SurveyRecord],
    format: ReportFormat,
    writer: W,
) -> io::Result<()> {
    let mut out = ReportWriter::new(writer, format);
    out.header()?;
    for r in records {
        out.write(r)?;
    }
    out.flush().map(|_| ())
}
