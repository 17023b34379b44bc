//! Lightweight natural-language parser for quantified-self queries.
//!
//! A query like "Did I sleep more hours on average in March or June?" is
//! reduced to a five-part tuple (question word, verb tense, time, tracking
//! subjects, aggregation words) by categorizing each word against a small
//! lexicon. No parse tree is built, so a parse costs a few microseconds.
//!
//! ```
//! use qsq_core::{diagnose, parse, Lexicon, ParserMode, Tense};
//!
//! let lex = Lexicon::bundled();
//! let tuple = parse(&lex, "When did I talk to Sally?", ParserMode::Ivt).unwrap();
//! assert_eq!(tuple.tense, Tense::Past);
//! assert!(diagnose(&tuple, &lex).overall_ok);
//! ```

pub mod diagnose;
pub mod lexicon;
pub mod qparse;
pub mod textnorm;

pub use diagnose::{diagnose, ElementFlags, ParseDiagnostics, Suggestions};
pub use lexicon::{load_lexicon, KindSet, Lexicon, LexiconCategory, LexiconError};
pub use qparse::{
    detect_tense, extract_tuple, parse, ComparisonArm, ParseError, ParserMode, QueryTuple,
    TemporalRef, Tense, TimeSource,
};
pub use textnorm::{stem, tokenize, Token};
