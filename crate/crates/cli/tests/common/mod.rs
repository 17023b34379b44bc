//! Shared fixtures: the golden query corpus and a seeded query generator
//! that records where it put every word, so tests can compute expected
//! values without going through the parser.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};

pub const GOLDEN_QUERIES: [&str; 8] = [
    "On average, how often do I eat daily?",
    "How often, do I eat, on average?",
    "When did I talk to Sally?",
    "When will my next medical check-up be?",
    "Am I more active this month or last month?",
    "Did I sleep more hours on average in March or June?",
    "find me a job that matches my qualifications.",
    "what are the available food deals?",
];

const QUESTION_WORDS: [&str; 6] = ["what", "when", "where", "how much", "how many", "how often"];
const SUBJECTS: [&str; 12] = [
    "sleep",
    "eat",
    "walk",
    "run",
    "steps",
    "calories",
    "weight",
    "mood",
    "heart rate",
    "coffee",
    "check up",
    "spend",
];
// "last" and "next" are also temporal, so they stay out of this pool
const AGGREGATIONS: [&str; 9] = [
    "average", "daily", "more", "often", "miles", "amount", "total", "less", "weekly",
];
const TIMES: [&str; 14] = [
    "today",
    "yesterday",
    "tomorrow",
    "now",
    "march",
    "june",
    "may",
    "monday",
    "friday",
    "last week",
    "this month",
    "next year",
    "last night",
    "weekend",
];
const FILLERS: [&str; 12] = [
    "i", "my", "the", "on", "in", "of", "for", "to", "a", "and", "or", "do",
];
const QUALIFIERS: [&str; 4] = ["sally", "gym", "mom", "visited"];
const PAST_MARKERS: [&str; 3] = ["did", "was", "had"];
const FUTURE_MARKERS: [&str; 3] = ["will", "shall", "gonna"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Question,
    Subject,
    Aggregation,
    Time,
    Filler,
    Command,
    Qualifier,
    PastMarker,
    FutureMarker,
}

/// One lexical unit. Multi-word units ("how often") are never split.
#[derive(Debug, Clone)]
pub struct Unit {
    pub text: &'static str,
    pub role: Role,
}

#[derive(Debug, Clone)]
pub struct GeneratedQuery {
    pub units: Vec<Unit>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedTense {
    Past,
    Present,
    Future,
}

impl GeneratedQuery {
    pub fn text(&self) -> String {
        self.units
            .iter()
            .map(|u| u.text)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Word index of each unit's first word.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = 0;
        self.units
            .iter()
            .map(|u| {
                let p = pos;
                pos += u.text.split(' ').count();
                p
            })
            .collect()
    }

    pub fn positions_of(&self, role: Role) -> Vec<usize> {
        self.positions()
            .into_iter()
            .zip(&self.units)
            .filter(|(_, u)| u.role == role)
            .map(|(p, _)| p)
            .collect()
    }

    pub fn count(&self, role: Role) -> usize {
        self.units.iter().filter(|u| u.role == role).count()
    }

    pub fn expected_tense(&self) -> ExpectedTense {
        let past = self.units.iter().any(|u| {
            u.role == Role::PastMarker || (u.role == Role::Qualifier && u.text.ends_with("ed"))
        });
        if past {
            ExpectedTense::Past
        } else if self.count(Role::FutureMarker) > 0 {
            ExpectedTense::Future
        } else {
            ExpectedTense::Present
        }
    }

    pub fn shuffled(&self, rng: &mut StdRng) -> GeneratedQuery {
        let mut units = self.units.clone();
        units.shuffle(rng);
        GeneratedQuery { units }
    }
}

pub struct QueryGenerator {
    rng: StdRng,
}

impl QueryGenerator {
    pub fn new(seed: u64) -> Self {
        QueryGenerator {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut StdRng {
        &mut self.rng
    }

    fn pick(&mut self, pool: &[&'static str], role: Role, n: usize, out: &mut Vec<Unit>) {
        for _ in 0..n {
            out.push(Unit {
                text: pool.choose(&mut self.rng).unwrap(),
                role,
            });
        }
    }

    fn build(
        &mut self,
        question: bool,
        times: usize,
        subjects: usize,
        aggregations: usize,
    ) -> GeneratedQuery {
        let mut units = Vec::new();
        if question {
            self.pick(&QUESTION_WORDS, Role::Question, 1, &mut units);
        }
        self.pick(&TIMES, Role::Time, times, &mut units);
        self.pick(&SUBJECTS, Role::Subject, subjects, &mut units);
        self.pick(&AGGREGATIONS, Role::Aggregation, aggregations, &mut units);
        match self.rng.random_range(0..4) {
            0 => self.pick(&PAST_MARKERS, Role::PastMarker, 1, &mut units),
            1 => self.pick(&FUTURE_MARKERS, Role::FutureMarker, 1, &mut units),
            _ => {}
        }
        let qualifiers = self.rng.random_range(0..=1);
        self.pick(&QUALIFIERS, Role::Qualifier, qualifiers, &mut units);
        let fillers = self.rng.random_range(0..=4);
        self.pick(&FILLERS, Role::Filler, fillers, &mut units);
        units.shuffle(&mut self.rng);
        GeneratedQuery { units }
    }

    /// One question word, 0-1 times, 1-2 subjects, 0-2 aggregations, fillers.
    pub fn non_comparison(&mut self) -> GeneratedQuery {
        let times = self.rng.random_range(0..=1);
        let subjects = self.rng.random_range(1..=2);
        let aggregations = self.rng.random_range(0..=2);
        self.build(true, times, subjects, aggregations)
    }

    /// Same shape but with 2-3 times and 0-3 aggregations.
    pub fn comparison(&mut self) -> GeneratedQuery {
        let times = self.rng.random_range(2..=3);
        let subjects = self.rng.random_range(1..=2);
        let aggregations = self.rng.random_range(0..=3);
        self.build(true, times, subjects, aggregations)
    }

    /// Like `non_comparison`, but about one query in ten opens with a
    /// command word instead of a question word.
    pub fn corpus_line(&mut self) -> (GeneratedQuery, bool) {
        let command = self.rng.random_bool(0.095);
        let mut q = self.non_comparison();
        if command {
            q.units.retain(|u| u.role != Role::Question);
            let verb = ["find", "show", "tell", "give"]
                .choose(&mut self.rng)
                .unwrap();
            q.units.insert(
                0,
                Unit {
                    text: verb,
                    role: Role::Command,
                },
            );
        }
        (q, command)
    }
}
