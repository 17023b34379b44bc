//! Porter suffix stripping.
//!
//! Follows the reference C implementation of the algorithm, including its
//! two departures from the published rules (`bli -> ble` and `logi -> log`)
//! and the short-word guard that leaves words of one or two letters alone.
//! Input is expected to be lowercase; anything that is not pure ASCII
//! lowercase letters is returned unchanged.

/// Working buffer for a single word. `end` is the index of the last live
/// byte, `j` the boundary set by the last successful `ends` probe.
struct Word {
    b: Vec<u8>,
    end: usize,
    j: isize,
}

impl Word {
    fn cons(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.cons(i - 1),
            _ => true,
        }
    }

    /// Number of VC sequences in `b[0..=j]`.
    fn measure(&self) -> usize {
        let j = self.j;
        let mut n = 0;
        let mut i: isize = 0;
        loop {
            if i > j {
                return n;
            }
            if !self.cons(i as usize) {
                break;
            }
            i += 1;
        }
        i += 1;
        loop {
            loop {
                if i > j {
                    return n;
                }
                if self.cons(i as usize) {
                    break;
                }
                i += 1;
            }
            i += 1;
            n += 1;
            loop {
                if i > j {
                    return n;
                }
                if !self.cons(i as usize) {
                    break;
                }
                i += 1;
            }
            i += 1;
        }
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.stem_len()).any(|i| !self.cons(i))
    }

    fn double_cons(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.cons(i)
    }

    /// consonant-vowel-consonant ending at `i`, where the final consonant
    /// is not w, x or y.
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.cons(i) || self.cons(i - 1) || !self.cons(i - 2) {
            return false;
        }
        !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    fn stem_len(&self) -> usize {
        (self.j + 1) as usize
    }

    /// Checks whether `b[..=end]` ends with `suffix`; on success sets `j`
    /// to the index just before the suffix (-1 when it covers the word).
    fn ends(&mut self, suffix: &str) -> bool {
        let s = suffix.as_bytes();
        let len = self.end + 1;
        if s.len() > len || &self.b[len - s.len()..len] != s {
            return false;
        }
        self.j = self.end as isize - s.len() as isize;
        true
    }

    fn set_to(&mut self, replacement: &str) {
        let keep = self.stem_len();
        self.b.truncate(keep);
        self.b.extend_from_slice(replacement.as_bytes());
        self.end = keep + replacement.len() - 1;
    }

    fn replace_if_measured(&mut self, replacement: &str) {
        if self.measure() > 0 {
            self.set_to(replacement);
        }
    }

    fn truncate_to_end(&mut self) {
        self.b.truncate(self.end + 1);
    }

    fn step1ab(&mut self) {
        if self.b[self.end] == b's' {
            if self.ends("sses") {
                self.end -= 2;
            } else if self.ends("ies") {
                self.set_to("i");
            } else if self.b[self.end - 1] != b's' {
                self.end -= 1;
            }
            self.truncate_to_end();
        }
        if self.ends("eed") {
            if self.measure() > 0 {
                self.end -= 1;
                self.truncate_to_end();
            }
        } else if (self.ends("ed") || self.ends("ing")) && self.vowel_in_stem() {
            self.end = self.j as usize;
            self.truncate_to_end();
            if self.ends("at") {
                self.set_to("ate");
            } else if self.ends("bl") {
                self.set_to("ble");
            } else if self.ends("iz") {
                self.set_to("ize");
            } else if self.double_cons(self.end) {
                if !matches!(self.b[self.end], b'l' | b's' | b'z') {
                    self.end -= 1;
                    self.truncate_to_end();
                }
            } else if self.measure() == 1 && self.cvc(self.end) {
                self.j = self.end as isize;
                self.set_to("e");
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends("y") && self.vowel_in_stem() {
            self.b[self.end] = b'i';
        }
    }

    /// Tries each `(suffix, replacement)` in order; the first suffix that
    /// matches ends the search whether or not the measure allows the swap.
    fn first_rule(&mut self, rules: &[(&str, &str)]) {
        for (suffix, replacement) in rules {
            if self.ends(suffix) {
                self.replace_if_measured(replacement);
                return;
            }
        }
    }

    fn step2(&mut self) {
        if self.end == 0 {
            return;
        }
        let rules: &[(&str, &str)] = match self.b[self.end - 1] {
            b'a' => &[("ational", "ate"), ("tional", "tion")],
            b'c' => &[("enci", "ence"), ("anci", "ance")],
            b'e' => &[("izer", "ize")],
            b'l' => &[
                ("bli", "ble"),
                ("alli", "al"),
                ("entli", "ent"),
                ("eli", "e"),
                ("ousli", "ous"),
            ],
            b'o' => &[("ization", "ize"), ("ation", "ate"), ("ator", "ate")],
            b's' => &[
                ("alism", "al"),
                ("iveness", "ive"),
                ("fulness", "ful"),
                ("ousness", "ous"),
            ],
            b't' => &[("aliti", "al"), ("iviti", "ive"), ("biliti", "ble")],
            b'g' => &[("logi", "log")],
            _ => return,
        };
        self.first_rule(rules);
    }

    fn step3(&mut self) {
        let rules: &[(&str, &str)] = match self.b[self.end] {
            b'e' => &[("icate", "ic"), ("ative", ""), ("alize", "al")],
            b'i' => &[("iciti", "ic")],
            b'l' => &[("ical", "ic"), ("ful", "")],
            b's' => &[("ness", "")],
            _ => return,
        };
        self.first_rule(rules);
    }

    fn step4(&mut self) {
        if self.end == 0 {
            return;
        }
        let suffixes: &[&str] = match self.b[self.end - 1] {
            b'a' => &["al"],
            b'c' => &["ance", "ence"],
            b'e' => &["er"],
            b'i' => &["ic"],
            b'l' => &["able", "ible"],
            b'n' => &["ant", "ement", "ment", "ent"],
            b'o' => {
                let ion = self.ends("ion")
                    && self.j >= 0
                    && matches!(self.b[self.j as usize], b's' | b't');
                if !ion && !self.ends("ou") {
                    return;
                }
                &[]
            }
            b's' => &["ism"],
            b't' => &["ate", "iti"],
            b'u' => &["ous"],
            b'v' => &["ive"],
            b'z' => &["ize"],
            _ => return,
        };
        if !suffixes.is_empty() && !suffixes.iter().any(|s| self.ends(s)) {
            return;
        }
        if self.measure() > 1 {
            self.end = self.j as usize;
            self.truncate_to_end();
        }
    }

    fn step5(&mut self) {
        self.j = self.end as isize;
        if self.b[self.end] == b'e' {
            let m = self.measure();
            if m > 1 || (m == 1 && !self.cvc(self.end - 1)) {
                self.end -= 1;
            }
        }
        if self.b[self.end] == b'l' && self.double_cons(self.end) && self.measure() > 1 {
            self.end -= 1;
        }
        self.truncate_to_end();
    }
}

/// One pass of the Porter algorithm over a lowercase word.
pub(crate) fn porter_once(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|c| c.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut w = Word {
        b: word.as_bytes().to_vec(),
        end: word.len() - 1,
        j: 0,
    };
    w.step1ab();
    if w.end > 0 {
        w.step1c();
        w.step2();
        w.step3();
        w.step4();
        w.step5();
    }
    w.truncate_to_end();
    // only ASCII bytes were ever written
    String::from_utf8(w.b).expect("ascii")
}
