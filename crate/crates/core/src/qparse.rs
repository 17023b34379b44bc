//! Five-tuple extraction: question word, verb tense, time, subjects and
//! aggregations, pulled from a bag of categorized tokens.
//!
//! Word order only matters in two places: the first question word wins,
//! and in comparison queries each time is bound to the aggregation word
//! closest to it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{Lexicon, LexiconCategory};
use crate::textnorm::{self, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tense {
    Past,
    Present,
    Future,
}

/// Parser ablation level: bag of words only, plus verb tense, plus time
/// comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParserMode {
    Bl,
    Iv,
    #[default]
    Ivt,
}

impl ParserMode {
    pub const ALL: [ParserMode; 3] = [ParserMode::Bl, ParserMode::Iv, ParserMode::Ivt];

    pub fn as_str(self) -> &'static str {
        match self {
            ParserMode::Bl => "bl",
            ParserMode::Iv => "iv",
            ParserMode::Ivt => "ivt",
        }
    }
}

impl fmt::Display for ParserMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParserMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bl" => Ok(ParserMode::Bl),
            "iv" => Ok(ParserMode::Iv),
            "ivt" => Ok(ParserMode::Ivt),
            other => Err(format!(
                "unknown parser mode {other:?} (expected bl, iv or ivt)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeSource {
    ExplicitTerm,
    MonthName,
    WeekdayName,
    DefaultedNow,
    InferredLastOccurrence,
}

impl TimeSource {
    pub fn is_synthetic(self) -> bool {
        matches!(
            self,
            TimeSource::DefaultedNow | TimeSource::InferredLastOccurrence
        )
    }
}

/// One notion of time in a query. Synthetic references have an empty
/// term and position -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TemporalRef {
    pub source: TimeSource,
    pub term: String,
    pub position: i64,
}

impl TemporalRef {
    fn synthetic(source: TimeSource) -> TemporalRef {
        debug_assert!(source.is_synthetic());
        TemporalRef {
            source,
            term: String::new(),
            position: -1,
        }
    }

    pub fn is_synthetic(&self) -> bool {
        self.source.is_synthetic()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonArm {
    pub time: TemporalRef,
    pub aggregation: Option<String>,
}

/// Parse result. Serialized field order is part of the wire format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryTuple {
    pub question_word: Option<String>,
    pub tense: Tense,
    pub times: Vec<TemporalRef>,
    pub subjects: Vec<String>,
    pub qualifiers: Vec<String>,
    pub aggregations: Vec<String>,
    pub is_comparison: bool,
    pub comparison_arms: Vec<ComparisonArm>,
    pub mode: ParserMode,
}

impl QueryTuple {
    pub fn explicit_times(&self) -> impl Iterator<Item = &TemporalRef> {
        self.times.iter().filter(|t| !t.is_synthetic())
    }

    pub fn has_defaulted_time(&self) -> bool {
        self.times.iter().any(TemporalRef::is_synthetic)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("query has no content words")]
    EmptyQuery,
}

/// Heuristic past-tense check for words the lexicon does not know.
/// "-eed" endings (need, speed) are left alone.
fn looks_past_participle(surface: &str) -> bool {
    let lower = surface.to_lowercase();
    lower.chars().count() >= 4 && lower.ends_with("ed") && !lower.ends_with("eed")
}

/// Verb tense of a token bag. Past outranks future; present is the default.
pub fn detect_tense(tokens: &[Token], lex: &Lexicon) -> Tense {
    let mut future = false;
    for token in tokens {
        match lex.tense_of(&token.stem) {
            Some(Tense::Past) => return Tense::Past,
            Some(Tense::Future) => future = true,
            _ => {}
        }
        if token.kinds.is_empty() && looks_past_participle(&token.surface) {
            return Tense::Past;
        }
    }
    if future {
        Tense::Future
    } else {
        Tense::Present
    }
}

fn explicit_ref(token: &Token, lex: &Lexicon) -> TemporalRef {
    let source = if lex.is_month(&token.stem) {
        TimeSource::MonthName
    } else if lex.is_weekday(&token.stem) {
        TimeSource::WeekdayName
    } else {
        TimeSource::ExplicitTerm
    };
    TemporalRef {
        source,
        term: token.stem.clone(),
        position: token.position as i64,
    }
}

/// Binds each time to its nearest aggregation token. Among equally near
/// aggregations the earlier one wins. An aggregation exactly as far from
/// an earlier arm's time as from this one belongs to the earlier arm, and
/// this arm is left without one.
fn bind_arms(times: &[TemporalRef], aggregations: &[&Token]) -> Vec<ComparisonArm> {
    times
        .iter()
        .enumerate()
        .map(|(idx, time)| {
            let nearest = aggregations
                .iter()
                .min_by_key(|a| ((a.position as i64 - time.position).abs(), a.position));
            let aggregation = nearest.and_then(|agg| {
                let dist = (agg.position as i64 - time.position).abs();
                let claimed = times[..idx]
                    .iter()
                    .any(|earlier| (agg.position as i64 - earlier.position).abs() == dist);
                (!claimed).then(|| agg.stem.clone())
            });
            ComparisonArm {
                time: time.clone(),
                aggregation,
            }
        })
        .collect()
}

/// Builds the query tuple from tokenizer output.
pub fn extract_tuple(
    tokens: &[Token],
    lex: &Lexicon,
    mode: ParserMode,
) -> Result<QueryTuple, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::EmptyQuery);
    }

    let question_word = tokens
        .iter()
        .find(|t| t.is(LexiconCategory::QuestionWord))
        .map(|t| t.stem.clone());
    let subjects = tokens
        .iter()
        .filter(|t| t.is(LexiconCategory::Subject))
        .map(|t| t.stem.clone())
        .collect();
    let qualifiers = tokens
        .iter()
        .filter(|t| t.kinds.is_empty())
        .map(|t| t.stem.clone())
        .collect();
    let aggregation_tokens: Vec<&Token> = tokens
        .iter()
        .filter(|t| t.is(LexiconCategory::Aggregation))
        .collect();
    let aggregations = aggregation_tokens.iter().map(|t| t.stem.clone()).collect();

    let tense = match mode {
        ParserMode::Bl => Tense::Present,
        ParserMode::Iv | ParserMode::Ivt => detect_tense(tokens, lex),
    };

    let mut times: Vec<TemporalRef> = tokens
        .iter()
        .filter(|t| t.is(LexiconCategory::Temporal))
        .map(|t| explicit_ref(t, lex))
        .collect();

    let mut comparison_arms = Vec::new();
    if times.is_empty() {
        let source = if tense == Tense::Past {
            TimeSource::InferredLastOccurrence
        } else {
            TimeSource::DefaultedNow
        };
        times.push(TemporalRef::synthetic(source));
    } else if mode == ParserMode::Ivt && times.len() >= 2 {
        comparison_arms = bind_arms(&times, &aggregation_tokens);
    }

    Ok(QueryTuple {
        question_word,
        tense,
        times,
        subjects,
        qualifiers,
        aggregations,
        is_comparison: !comparison_arms.is_empty(),
        comparison_arms,
        mode,
    })
}

/// Tokenizes and extracts in one step.
pub fn parse(lex: &Lexicon, text: &str, mode: ParserMode) -> Result<QueryTuple, ParseError> {
    extract_tuple(&textnorm::tokenize(lex, text), lex, mode)
}
