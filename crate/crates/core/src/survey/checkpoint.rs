use std::fs::{self, File};
use std::io::{self, Read, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

use super::{OrderCounts, SurveyError, SurveySummary};

/// Hex SHA-256 of a file's contents.
pub fn catalog_digest(path: &Path) -> io::Result<String> {
    let mut file = File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = vec![0u8; 1 << 16];
    loop {
        let n = file.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

/// Resumable survey state, stored as plain `key value` lines:
///
/// ```text
/// catalog_sha256 <hex>
/// lines_done <count>
/// report_bytes <count>
/// order <n> <total> <non_real> <cone_violation> <non_log_concave>
/// skipped <line> <reason>
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub catalog_sha256: String,
    pub lines_done: usize,
    pub report_bytes: u64,
    pub summary: SurveySummary,
}

fn bad(msg: impl Into<String>) -> SurveyError {
    SurveyError::BadCheckpoint(msg.into())
}

fn number<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T, SurveyError> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(format!("bad or missing {what}")))
}

impl Checkpoint {
    pub fn fresh(catalog_sha256: String) -> Self {
        Checkpoint {
            catalog_sha256,
            lines_done: 0,
            report_bytes: 0,
            summary: SurveySummary::default(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "catalog_sha256 {}\nlines_done {}\nreport_bytes {}\n",
            self.catalog_sha256, self.lines_done, self.report_bytes
        );
        for (n, c) in &self.summary.by_order {
            s += &format!(
                "order {n} {} {} {} {}\n",
                c.total, c.non_real, c.cone_violation, c.non_log_concave
            );
        }
        for (line, reason) in &self.summary.skipped {
            s += &format!("skipped {line} {}\n", reason.replace('\n', " "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, SurveyError> {
        let mut digest = None;
        let mut lines_done = None;
        let mut report_bytes = None;
        let mut summary = SurveySummary::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "catalog_sha256" => digest = Some(rest.trim().to_string()),
                "lines_done" => lines_done = Some(number(Some(rest.trim()), "lines_done")?),
                "report_bytes" => report_bytes = Some(number(Some(rest.trim()), "report_bytes")?),
                "order" => {
                    let mut f = rest.split_whitespace();
                    let n: usize = number(f.next(), "order")?;
                    let counts = OrderCounts {
                        total: number(f.next(), "total")?,
                        non_real: number(f.next(), "non_real")?,
                        cone_violation: number(f.next(), "cone_violation")?,
                        non_log_concave: number(f.next(), "non_log_concave")?,
                    };
                    summary.by_order.insert(n, counts);
                }
                "skipped" => {
                    let (at, reason) = rest.split_once(' ').unwrap_or((rest, ""));
                    summary
                        .skipped
                        .push((number(Some(at), "skipped line")?, reason.to_string()));
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        Ok(Checkpoint {
            catalog_sha256: digest.ok_or_else(|| bad("missing catalog_sha256"))?,
            lines_done: lines_done.ok_or_else(|| bad("missing lines_done"))?,
            report_bytes: report_bytes.ok_or_else(|| bad("missing report_bytes"))?,
            summary,
        })
    }

    pub fn load(path: &Path) -> Result<Self, SurveyError> {
        let text =
            fs::read_to_string(path).map_err(|source| SurveyError::Io { line: 0, source })?;
        Self::parse(&text)
    }

    /// Writes to a sibling temporary file, syncs it, and renames it over
    /// `path`.
    pub fn store(&self, path: &Path) -> io::Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = Path::new(&tmp);
        {
            let mut f = File::create(tmp)?;
            f.write_all(self.to_text().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(tmp, path)
    }
}
