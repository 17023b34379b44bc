//! Front ends for the qsq parser: single-query analysis, corpus batch
//! runs, a latency benchmark, and a small local HTTP service.
//!
//! The binary in `main.rs` is a thin clap wrapper over these functions; the
//! CLI and the HTTP service both serialize the same [`Analysis`] value so
//! their output is byte-identical for the same input.

pub mod batch;
pub mod bench;
pub mod server;

use std::fmt::Write as _;
use std::path::Path;

use qsq_core::{
    diagnose, load_lexicon, parse, Lexicon, LexiconError, ParseDiagnostics, ParseError, ParserMode,
    QueryTuple, TemporalRef, TimeSource,
};
use serde::{Deserialize, Serialize};

/// Parse result plus diagnostics: the JSON body of `qsq parse` and of
/// `POST /parse`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub tuple: QueryTuple,
    pub diagnostics: ParseDiagnostics,
}

pub fn analyze(lex: &Lexicon, query: &str, mode: ParserMode) -> Result<Analysis, ParseError> {
    let tuple = parse(lex, query, mode)?;
    let diagnostics = diagnose(&tuple, lex);
    Ok(Analysis { tuple, diagnostics })
}

/// Loads the lexicon at `path`, or the bundled one when no path is given.
pub fn open_lexicon(path: Option<&Path>) -> Result<Lexicon, LexiconError> {
    match path {
        Some(p) => load_lexicon(p),
        None => Ok(Lexicon::bundled()),
    }
}

impl Analysis {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("analysis serializes")
    }

    /// Aligned, human-oriented rendering. Not a stable format.
    pub fn to_text(&self) -> String {
        let t = &self.tuple;
        let d = &self.diagnostics;
        let list = |items: &[String]| {
            if items.is_empty() {
                "-".to_string()
            } else {
                items.join(", ")
            }
        };
        let mut out = String::new();
        let rows = [
            (
                "question word",
                t.question_word.clone().unwrap_or_else(|| "-".into()),
            ),
            ("tense", format!("{:?}", t.tense).to_lowercase()),
            (
                "time",
                t.times
                    .iter()
                    .map(describe_time)
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
            ("subjects", list(&t.subjects)),
            ("qualifiers", list(&t.qualifiers)),
            ("aggregations", list(&t.aggregations)),
            ("comparison", comparison_text(t)),
            ("mode", t.mode.to_string()),
        ];
        for (label, value) in rows {
            let _ = writeln!(out, "{label:<14} {value}");
        }
        let flag_rows = [
            (
                "q_w",
                d.flags.question_word,
                &d.suggestions.question_word,
                false,
            ),
            ("t", d.flags.time, &d.suggestions.time, d.time_defaulted),
            ("s", d.flags.subject, &d.suggestions.subject, false),
        ];
        for (label, present, suggestions, defaulted) in flag_rows {
            let mut line = format!("[{}] {label:<4}", if present { "green" } else { " red " });
            if defaulted {
                line.push_str(" (not stated, substituted)");
            }
            if !suggestions.is_empty() {
                let _ = write!(line, " try: {}", suggestions.join(", "));
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
        let _ = writeln!(
            out,
            "{:<14} {}",
            "overall",
            if d.overall_ok { "ok" } else { "incomplete" }
        );
        out
    }
}

fn describe_time(t: &TemporalRef) -> String {
    match t.source {
        TimeSource::DefaultedNow => "(now)".into(),
        TimeSource::InferredLastOccurrence => "(last occurrence)".into(),
        _ => t.term.clone(),
    }
}

fn comparison_text(t: &QueryTuple) -> String {
    if !t.is_comparison {
        return "no".into();
    }
    t.comparison_arms
        .iter()
        .map(|arm| match &arm.aggregation {
            Some(agg) => format!("{} ({agg})", arm.time.term),
            None => arm.time.term.clone(),
        })
        .collect::<Vec<_>>()
        .join(" vs ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_mentions_every_element() {
        let lex = Lexicon::bundled();
        let a = analyze(
            &lex,
            "Did I sleep more hours on average in March or June?",
            ParserMode::Ivt,
        )
        .unwrap();
        let text = a.to_text();
        assert!(text.contains("march (averag) vs june (averag)"));
        assert!(text.contains("tense          past"));
        assert!(text.contains("question word  -"));
        assert!(text.contains("overall        incomplete"));

        let a = analyze(&lex, "how much yesterday", ParserMode::Ivt).unwrap();
        let text = a.to_text();
        assert!(text.contains("[ red ] s    try: sleep, eat, drink, walk, run"));
    }

    #[test]
    fn json_has_tuple_then_diagnostics() {
        let lex = Lexicon::bundled();
        let json = analyze(&lex, "When did I talk to Sally?", ParserMode::Ivt)
            .unwrap()
            .to_json();
        assert!(json.starts_with(r#"{"tuple":{"question_word":"when","tense":"past""#));
        assert!(json.contains(r#""diagnostics":{"flags":{"question_word":true,"time":true,"subject":true},"time_defaulted":true"#));
    }
}
