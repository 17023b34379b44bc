//! Text normalization: word splitting, stemming, phrase merging and
//! stop-word removal.

mod porter;

use serde::Serialize;

use crate::lexicon::{KindSet, Lexicon, LexiconCategory};

/// Separator between word stems inside a merged phrase stem.
pub const PHRASE_JOINER: &str = "-";

/// A word as it appeared in the input, and its lowercase alphanumeric form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawWord {
    pub surface: String,
    pub normalized: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    /// Original text; words of a merged phrase are joined by a space.
    pub surface: String,
    pub stem: String,
    /// Index of the (first) word in the sequence before stop-word removal.
    pub position: usize,
    pub kinds: KindSet,
}

impl Token {
    pub fn is(&self, kind: LexiconCategory) -> bool {
        self.kinds.contains(kind)
    }
}

/// Splits on whitespace and hyphens, trims surrounding punctuation and
/// drops anything non-alphanumeric inside a word ("what's" -> "whats").
/// Pieces with no alphanumeric characters are not words.
pub fn split_words(text: &str) -> Vec<RawWord> {
    text.split(|c: char| c.is_whitespace() || matches!(c, '-' | '\u{2010}'..='\u{2015}'))
        .filter_map(|piece| {
            let surface = piece.trim_matches(|c: char| !c.is_alphanumeric());
            let normalized: String = surface
                .chars()
                .filter(|c| c.is_alphanumeric())
                .flat_map(char::to_lowercase)
                .collect();
            (!normalized.is_empty()).then(|| RawWord {
                surface: surface.to_string(),
                normalized,
            })
        })
        .collect()
}

/// One pass of the Porter algorithm (reference C behavior) over a
/// lowercase word.
pub fn porter_single_pass(word: &str) -> String {
    porter::porter_once(word)
}

/// Porter stem of a single word, iterated to a fixed point so that
/// `stem(stem(w)) == stem(w)`.
pub fn stem(word: &str) -> String {
    let mut current = word.to_lowercase();
    loop {
        let next = porter::porter_once(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Turns raw query text into categorized tokens.
///
/// Multi-word lexicon phrases are merged greedily (longest match first)
/// before stop words are dropped; positions always refer to the word
/// sequence before removal.
pub fn tokenize(lex: &Lexicon, text: &str) -> Vec<Token> {
    let words = split_words(text);
    let stems: Vec<String> = words.iter().map(|w| stem(&w.normalized)).collect();

    let mut tokens = Vec::with_capacity(words.len());
    let mut i = 0;
    while i < words.len() {
        let span = lex
            .phrases_starting_with(&stems[i])
            .iter()
            .find(|p| stems[i..].starts_with(p))
            .map_or(1, Vec::len);

        let (surface, token_stem) = if span == 1 {
            (words[i].surface.clone(), stems[i].clone())
        } else {
            let surface = words[i..i + span]
                .iter()
                .map(|w| w.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            (surface, stems[i..i + span].join(PHRASE_JOINER))
        };
        let kinds = lex.categories_of(&token_stem);
        if !kinds.contains(LexiconCategory::StopWord) {
            tokens.push(Token {
                surface,
                stem: token_stem,
                position: i,
                kinds,
            });
        }
        i += span;
    }
    tokens
}
