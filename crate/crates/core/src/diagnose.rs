//! Presence checks for the three user-facing query elements (question
//! word, time, subject) and single-word suggestions for whatever is
//! missing.

use serde::{Deserialize, Serialize};

use crate::lexicon::{Lexicon, LexiconCategory};
use crate::qparse::QueryTuple;
use crate::textnorm::{self, PHRASE_JOINER};

/// Maximum suggestions per category.
pub const SUGGESTION_LIMIT: usize = 5;

const QUESTION_WORD_ORDER: [&str; 5] = ["what", "when", "how much", "how many", "how often"];
const TEMPORAL_ORDER: [&str; 5] = ["today", "yesterday", "week", "month", "year"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementFlags {
    pub question_word: bool,
    pub time: bool,
    pub subject: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suggestions {
    pub question_word: Vec<String>,
    pub time: Vec<String>,
    pub subject: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseDiagnostics {
    pub flags: ElementFlags,
    /// The time was substituted ("now" or last occurrence) rather than stated.
    pub time_defaulted: bool,
    pub suggestions: Suggestions,
    pub overall_ok: bool,
}

/// Suggestion text for a lexicon entry: one whitespace-free word the
/// tokenizer maps back onto the same entry ("how much" -> "how-much").
fn as_single_word(raw: &str) -> String {
    textnorm::split_words(raw)
        .into_iter()
        .map(|w| w.normalized)
        .collect::<Vec<_>>()
        .join(PHRASE_JOINER)
}

fn canonical(lex: &Lexicon, words: &[&str], kind: LexiconCategory) -> Vec<String> {
    words
        .iter()
        .filter(|w| lex.categories_of(w).contains(kind))
        .take(SUGGESTION_LIMIT)
        .map(|w| as_single_word(w))
        .collect()
}

fn subject_suggestions(lex: &Lexicon) -> Vec<String> {
    lex.ranked_subjects()
        .iter()
        .filter_map(|stem| lex.display_form(stem))
        .take(SUGGESTION_LIMIT)
        .map(as_single_word)
        .collect()
}

/// Flags and suggestions for a parsed query.
///
/// A substituted time counts as present (the parser always supplies one);
/// `time_defaulted` tells the caller it was not stated explicitly.
pub fn diagnose(tuple: &QueryTuple, lex: &Lexicon) -> ParseDiagnostics {
    let flags = ElementFlags {
        question_word: tuple.question_word.is_some(),
        time: !tuple.times.is_empty(),
        subject: !tuple.subjects.is_empty(),
    };
    let time_defaulted = tuple.explicit_times().next().is_none() && tuple.has_defaulted_time();

    let mut suggestions = Suggestions::default();
    if !flags.question_word {
        suggestions.question_word =
            canonical(lex, &QUESTION_WORD_ORDER, LexiconCategory::QuestionWord);
    }
    if !flags.time {
        suggestions.time = canonical(lex, &TEMPORAL_ORDER, LexiconCategory::Temporal);
    }
    if !flags.subject {
        suggestions.subject = subject_suggestions(lex);
    }

    ParseDiagnostics {
        overall_ok: flags.question_word && flags.time && flags.subject,
        flags,
        time_defaulted,
        suggestions,
    }
}
