//! Newline-delimited corpus processing.

use std::io::{self, BufRead, Write};

use qsq_core::{Lexicon, ParserMode};
use serde::Serialize;

use crate::{analyze, Analysis};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MissingCounts {
    pub question_word: usize,
    pub time: usize,
    pub subject: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    /// Non-blank lines seen.
    pub count: usize,
    pub parsed: usize,
    /// Lines with no content words at all.
    pub empty: usize,
    pub overall_ok: usize,
    pub time_defaulted: usize,
    pub missing: MissingCounts,
}

#[derive(Serialize)]
struct LineResult<'a> {
    line: usize,
    query: &'a str,
    #[serde(flatten)]
    outcome: Outcome,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Outcome {
    Parsed(Box<Analysis>),
    Failed { error: String },
}

/// Parses every non-blank line of `input`, writing one JSON object per
/// query and a final `{"summary": ...}` line to `out`.
pub fn run_batch<R: BufRead, W: Write>(
    lex: &Lexicon,
    input: R,
    mode: ParserMode,
    out: &mut W,
) -> io::Result<BatchSummary> {
    let mut summary = BatchSummary::default();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let query = line.trim();
        if query.is_empty() {
            continue;
        }
        summary.count += 1;
        let outcome = match analyze(lex, query, mode) {
            Ok(analysis) => {
                let d = &analysis.diagnostics;
                summary.parsed += 1;
                summary.overall_ok += d.overall_ok as usize;
                summary.time_defaulted += d.time_defaulted as usize;
                summary.missing.question_word += !d.flags.question_word as usize;
                summary.missing.time += !d.flags.time as usize;
                summary.missing.subject += !d.flags.subject as usize;
                Outcome::Parsed(Box::new(analysis))
            }
            Err(e) => {
                summary.empty += 1;
                Outcome::Failed {
                    error: e.to_string(),
                }
            }
        };
        let record = LineResult {
            line: idx + 1,
            query,
            outcome,
        };
        serde_json::to_writer(&mut *out, &record)?;
        writeln!(out)?;
    }
    serde_json::to_writer(&mut *out, &serde_json::json!({ "summary": &summary }))?;
    writeln!(out)?;
    Ok(summary)
}
