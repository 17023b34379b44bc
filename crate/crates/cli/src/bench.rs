//! Parse latency benchmark.
//!
//! Each query is parsed once to warm up, then `repetitions` more times.
//! A query's latency is the mean wall time of its timed parses; only the
//! `parse` call sits inside the timer.

use std::hint::black_box;
use std::time::Instant;

use qsq_core::{parse, Lexicon, ParserMode};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("benchmark corpus has no queries")]
    EmptyCorpus,
    #[error("repetitions must be at least 1")]
    NoRepetitions,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub query_count: usize,
    pub repetitions: usize,
    pub mode: ParserMode,
    pub lexicon_version: String,
    /// Time to load and validate the lexicon, outside the per-parse figures.
    pub lexicon_load_us: f64,
    pub median_us: f64,
    pub p95_us: f64,
    pub max_us: f64,
    /// Mean per-parse latency of each query, in corpus order.
    pub latencies_us: Vec<f64>,
}

/// Nearest-rank percentile of an ascending slice.
pub fn percentile(sorted: &[f64], pct: f64) -> f64 {
    assert!(!sorted.is_empty());
    let rank = ((pct / 100.0) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

pub fn run_bench(
    lex: &Lexicon,
    queries: &[String],
    mode: ParserMode,
    repetitions: usize,
    lexicon_load_us: f64,
) -> Result<BenchReport, BenchError> {
    if queries.is_empty() {
        return Err(BenchError::EmptyCorpus);
    }
    if repetitions == 0 {
        return Err(BenchError::NoRepetitions);
    }

    for q in queries {
        let _ = black_box(parse(lex, black_box(q), mode));
    }

    let latencies_us: Vec<f64> = queries
        .iter()
        .map(|q| {
            let mut total = 0.0;
            for _ in 0..repetitions {
                let start = Instant::now();
                let result = parse(lex, black_box(q), mode);
                total += start.elapsed().as_secs_f64();
                let _ = black_box(result);
            }
            total * 1e6 / repetitions as f64
        })
        .collect();

    let mut sorted = latencies_us.clone();
    sorted.sort_by(f64::total_cmp);
    Ok(BenchReport {
        query_count: queries.len(),
        repetitions,
        mode,
        lexicon_version: lex.version().to_string(),
        lexicon_load_us,
        median_us: percentile(&sorted, 50.0),
        p95_us: percentile(&sorted, 95.0),
        max_us: *sorted.last().unwrap(),
        latencies_us,
    })
}
