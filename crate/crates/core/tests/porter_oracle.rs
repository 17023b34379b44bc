//! Stemmer checked against vectors frozen from an independent Porter
//! implementation (see fixtures/gen_porter_vectors.py).

use qsq_core::stem;
use qsq_core::textnorm::porter_single_pass;

const VECTORS: &str = include_str!("fixtures/porter_vectors.tsv");

fn vectors() -> impl Iterator<Item = (&'static str, &'static str)> {
    VECTORS
        .lines()
        .map(|l| l.split_once('\t').expect("word<TAB>stem"))
}

#[test]
fn single_pass_matches_reference_vectors() {
    let mismatches: Vec<String> = vectors()
        .filter_map(|(word, expected)| {
            let got = porter_single_pass(word);
            (got != expected).then(|| format!("{word}: expected {expected}, got {got}"))
        })
        .collect();
    assert!(vectors().count() > 9000);
    assert!(
        mismatches.is_empty(),
        "{} mismatches:\n{}",
        mismatches.len(),
        mismatches.join("\n")
    );
}

#[test]
fn fixed_point_stem_extends_reference() {
    for (word, expected) in vectors() {
        let mut s = expected.to_string();
        loop {
            let next = porter_single_pass(&s);
            if next == s {
                break;
            }
            s = next;
        }
        assert_eq!(stem(word), s, "{word}");
    }
}
