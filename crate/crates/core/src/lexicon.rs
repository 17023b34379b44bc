//! Categorized word store consulted by the tokenizer and the parser.
//!
//! A lexicon is loaded from a JSON document, validated once, and never
//! mutated afterwards. Every raw entry is stored under its stem, so a
//! lookup is a single map probe on the tokenizer's output. Multi-word
//! entries ("how often", "last month") are keyed by their word stems
//! joined with [`PHRASE_JOINER`] and also feed the phrase table used for
//! greedy merging.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qparse::Tense;
use crate::textnorm::{self, PHRASE_JOINER};

const BUNDLED_LEXICON: &str = include_str!("../data/lexicon.json");

pub const MONTHS: [&str; 12] = [
    "january",
    "february",
    "march",
    "april",
    "may",
    "june",
    "july",
    "august",
    "september",
    "october",
    "november",
    "december",
];

pub const WEEKDAYS: [&str; 7] = [
    "monday",
    "tuesday",
    "wednesday",
    "thursday",
    "friday",
    "saturday",
    "sunday",
];

const MANDATORY_AGGREGATIONS: [&str; 8] = [
    "average", "miles", "amount", "next", "last", "more", "often", "daily",
];

const MANDATORY_COMMANDS: [&str; 4] = ["find", "tell", "give", "show"];

/// Word category a lexicon entry can belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexiconCategory {
    QuestionWord,
    Temporal,
    Subject,
    Aggregation,
    Command,
    StopWord,
    TenseMarker,
}

impl LexiconCategory {
    pub const ALL: [LexiconCategory; 7] = [
        LexiconCategory::QuestionWord,
        LexiconCategory::Temporal,
        LexiconCategory::Subject,
        LexiconCategory::Aggregation,
        LexiconCategory::Command,
        LexiconCategory::StopWord,
        LexiconCategory::TenseMarker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LexiconCategory::QuestionWord => "question_word",
            LexiconCategory::Temporal => "temporal",
            LexiconCategory::Subject => "subject",
            LexiconCategory::Aggregation => "aggregation",
            LexiconCategory::Command => "command",
            LexiconCategory::StopWord => "stop_word",
            LexiconCategory::TenseMarker => "tense_marker",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for LexiconCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Set of [`LexiconCategory`] kinds, packed into a byte.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct KindSet(u8);

impl KindSet {
    pub const EMPTY: KindSet = KindSet(0);

    pub fn contains(self, kind: LexiconCategory) -> bool {
        self.0 & kind.bit() != 0
    }

    pub fn insert(&mut self, kind: LexiconCategory) {
        self.0 |= kind.bit();
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = LexiconCategory> {
        LexiconCategory::ALL
            .into_iter()
            .filter(move |k| self.contains(*k))
    }
}

impl FromIterator<LexiconCategory> for KindSet {
    fn from_iter<I: IntoIterator<Item = LexiconCategory>>(iter: I) -> Self {
        let mut set = KindSet::EMPTY;
        for kind in iter {
            set.insert(kind);
        }
        set
    }
}

impl fmt::Debug for KindSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for KindSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed lexicon{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    Malformed {
        line: Option<usize>,
        message: String,
    },
    #[error("lexicon is missing mandatory entry {0:?}")]
    MissingMandatoryEntry(String),
}

/// On-disk representation. Also the serialization target, with
/// `subject_ranks` filled in for every subject.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    version: String,
    categories: BTreeMap<LexiconCategory, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    tense_markers: BTreeMap<String, Tense>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    subject_ranks: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    version: String,
    entries: HashMap<String, KindSet>,
    tense_markers: HashMap<String, Tense>,
    subject_frequency: HashMap<String, u32>,
    /// Subject stems in suggestion order: rank, then file order.
    subjects_ranked: Vec<String>,
    /// First stem of a phrase -> phrases (as stem sequences), longest first.
    phrases: HashMap<String, Vec<Vec<String>>>,
    months: HashSet<String>,
    weekdays: HashSet<String>,
    /// Stem -> first raw entry that produced it.
    display: HashMap<String, String>,
    source: LexiconFile,
}

/// Reads and validates a lexicon file.
pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Lexicon::from_json_str(&text)
}

/// Stem key for a raw (possibly multi-word) entry.
fn entry_key(raw: &str) -> Vec<String> {
    textnorm::split_words(raw)
        .into_iter()
        .map(|w| textnorm::stem(&w.normalized))
        .collect()
}

fn line_of(text: &str, word: &str) -> Option<usize> {
    let needle = format!("\"{word}\"");
    text.lines()
        .position(|l| l.contains(&needle))
        .map(|i| i + 1)
}

impl Lexicon {
    /// The lexicon shipped with the crate.
    pub fn bundled() -> Lexicon {
        Lexicon::from_json_str(BUNDLED_LEXICON).expect("bundled lexicon is valid")
    }

    pub fn bundled_json() -> &'static str {
        BUNDLED_LEXICON
    }

    pub fn from_json_str(text: &str) -> Result<Lexicon, LexiconError> {
        let file: LexiconFile =
            serde_json::from_str(text).map_err(|e| LexiconError::Malformed {
                line: Some(e.line()),
                message: e.to_string(),
            })?;
        Lexicon::build(file, text)
    }

    fn build(mut file: LexiconFile, text: &str) -> Result<Lexicon, LexiconError> {
        let malformed = |word: Option<&str>, message: String| LexiconError::Malformed {
            line: word.and_then(|w| line_of(text, w)),
            message,
        };

        if file.version.trim().is_empty() {
            return Err(malformed(None, "version must be a non-empty string".into()));
        }

        let mut entries: HashMap<String, KindSet> = HashMap::new();
        let mut display: HashMap<String, String> = HashMap::new();
        let mut phrases: HashMap<String, Vec<Vec<String>>> = HashMap::new();
        let mut subjects_in_order: Vec<(String, String)> = Vec::new();

        for (&kind, words) in &file.categories {
            for raw in words {
                if raw.chars().any(char::is_uppercase) {
                    return Err(malformed(
                        Some(raw),
                        format!("entry {raw:?} must be lowercase"),
                    ));
                }
                let stems = entry_key(raw);
                if stems.is_empty() {
                    return Err(malformed(
                        Some(raw),
                        format!("entry {raw:?} has no word characters"),
                    ));
                }
                let key = stems.join(PHRASE_JOINER);
                entries.entry(key.clone()).or_default().insert(kind);
                display.entry(key.clone()).or_insert_with(|| raw.clone());
                if stems.len() > 1 {
                    let bucket = phrases.entry(stems[0].clone()).or_default();
                    if !bucket.contains(&stems) {
                        bucket.push(stems);
                    }
                }
                if kind == LexiconCategory::Subject {
                    subjects_in_order.push((raw.clone(), key));
                }
            }
        }
        for bucket in phrases.values_mut() {
            // longest first; stable so file order breaks ties
            bucket.sort_by_key(|p| std::cmp::Reverse(p.len()));
        }

        let marker_words: HashSet<&String> = file
            .categories
            .get(&LexiconCategory::TenseMarker)
            .map(|ws| ws.iter().collect())
            .unwrap_or_default();
        let mut tense_markers = HashMap::new();
        for (raw, &tense) in &file.tense_markers {
            if !marker_words.contains(raw) {
                return Err(malformed(
                    Some(raw),
                    format!("tense marker {raw:?} is not listed under \"tense_marker\""),
                ));
            }
            tense_markers.insert(entry_key(raw).join(PHRASE_JOINER), tense);
        }
        for raw in &marker_words {
            if !file.tense_markers.contains_key(*raw) {
                return Err(malformed(
                    Some(raw),
                    format!("tense marker {raw:?} has no entry in \"tense_markers\""),
                ));
            }
        }

        for (key, kinds) in &entries {
            if kinds.contains(LexiconCategory::StopWord)
                && kinds.contains(LexiconCategory::TenseMarker)
            {
                let raw = display.get(key).map(String::as_str);
                return Err(malformed(
                    raw,
                    format!("{key:?} cannot be both a stop word and a tense marker"),
                ));
            }
        }

        let subject_words: HashSet<&String> =
            subjects_in_order.iter().map(|(raw, _)| raw).collect();
        for (raw, &rank) in &file.subject_ranks {
            if !subject_words.contains(raw) {
                return Err(malformed(
                    Some(raw),
                    format!("ranked word {raw:?} is not a subject"),
                ));
            }
            if rank == 0 {
                return Err(malformed(
                    Some(raw),
                    format!("rank for {raw:?} must be >= 1"),
                ));
            }
        }

        let mut subject_frequency: HashMap<String, u32> = HashMap::new();
        let mut resolved_ranks = BTreeMap::new();
        let mut first_seen: Vec<String> = Vec::new();
        for (idx, (raw, key)) in subjects_in_order.iter().enumerate() {
            let rank = file
                .subject_ranks
                .get(raw)
                .copied()
                .unwrap_or(idx as u32 + 1);
            resolved_ranks.insert(raw.clone(), rank);
            match subject_frequency.get_mut(key) {
                Some(existing) => *existing = (*existing).min(rank),
                None => {
                    subject_frequency.insert(key.clone(), rank);
                    first_seen.push(key.clone());
                }
            }
        }
        let mut subjects_ranked = first_seen;
        // stable sort keeps file order among equal ranks
        subjects_ranked.sort_by_key(|k| subject_frequency[k]);
        file.subject_ranks = resolved_ranks;

        let temporal_kind = |word: &str| {
            let key = entry_key(word).join(PHRASE_JOINER);
            match entries.get(&key) {
                Some(k) if k.contains(LexiconCategory::Temporal) => Ok(key),
                _ => Err(LexiconError::MissingMandatoryEntry(word.to_string())),
            }
        };
        let months = MONTHS
            .iter()
            .map(|m| temporal_kind(m))
            .collect::<Result<HashSet<_>, _>>()?;
        let weekdays = WEEKDAYS
            .iter()
            .map(|d| temporal_kind(d))
            .collect::<Result<HashSet<_>, _>>()?;
        let required = MANDATORY_AGGREGATIONS
            .iter()
            .map(|w| (*w, LexiconCategory::Aggregation))
            .chain(
                MANDATORY_COMMANDS
                    .iter()
                    .map(|w| (*w, LexiconCategory::Command)),
            );
        for (word, kind) in required {
            let key = entry_key(word).join(PHRASE_JOINER);
            if !entries.get(&key).is_some_and(|k| k.contains(kind)) {
                return Err(LexiconError::MissingMandatoryEntry(word.to_string()));
            }
        }

        Ok(Lexicon {
            version: file.version.clone(),
            entries,
            tense_markers,
            subject_frequency,
            subjects_ranked,
            phrases,
            months,
            weekdays,
            display,
            source: file,
        })
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    /// Categories of `word`. Accepts either a stem or a raw word; raw words
    /// are normalized the same way the tokenizer does before the lookup.
    pub fn categories_of(&self, word: &str) -> KindSet {
        if let Some(kinds) = self.entries.get(word) {
            return *kinds;
        }
        let key = entry_key(word).join(PHRASE_JOINER);
        self.entries.get(&key).copied().unwrap_or_default()
    }

    pub fn tense_of(&self, stem: &str) -> Option<Tense> {
        self.tense_markers.get(stem).copied()
    }

    pub fn is_month(&self, stem: &str) -> bool {
        self.months.contains(stem)
    }

    pub fn is_weekday(&self, stem: &str) -> bool {
        self.weekdays.contains(stem)
    }

    pub fn subject_rank(&self, stem: &str) -> Option<u32> {
        self.subject_frequency.get(stem).copied()
    }

    /// Subject stems ordered for suggestion.
    pub fn ranked_subjects(&self) -> &[String] {
        &self.subjects_ranked
    }

    /// Phrases beginning with `stem`, longest first.
    pub fn phrases_starting_with(&self, stem: &str) -> &[Vec<String>] {
        self.phrases.get(stem).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Human-facing spelling of a stem: the first raw entry that produced it.
    pub fn display_form(&self, stem: &str) -> Option<&str> {
        self.display.get(stem).map(String::as_str)
    }

    /// Raw entries of one category, in file order.
    pub fn words(&self, kind: LexiconCategory) -> &[String] {
        self.source
            .categories
            .get(&kind)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Serializes back to the lexicon file format. Subject ranks are
    /// written explicitly, so reloading reproduces an equal lexicon.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.source).expect("lexicon serializes")
    }
}
