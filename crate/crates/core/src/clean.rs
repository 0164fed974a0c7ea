//! Corpus cleaning filters.
//!
//! Mirrors the starting-dataset hygiene applied before corruption: duplicate
//! removal, minimum token and POS-diversity thresholds, character bounds on
//! the rendered text, and an ambiguous-punctuation filter.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::conllu::{render_text, AnnotatedSentence, ParsedCorpus};

/// Per-reason rejection counters for one cleaning run.
///
/// `output_count` always equals `input_count` minus the sum of all rejection
/// counters; every rejected sentence is counted under exactly one reason.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningReport {
    pub input_count: usize,
    pub deduplicated: usize,
    pub too_short: usize,
    pub too_simple: usize,
    pub char_bounds: usize,
    pub ambiguous_punct: usize,
    pub structural_rejects: usize,
    pub output_count: usize,
}

impl CleaningReport {
    /// The arithmetic invariant linking the counters.
    pub fn balanced(&self) -> bool {
        self.input_count
            == self.output_count
                + self.deduplicated
                + self.too_short
                + self.too_simple
                + self.char_bounds
                + self.ambiguous_punct
                + self.structural_rejects
    }
}

/// Minimum token count for a sentence to survive.
pub const MIN_TOKENS: usize = 5;
/// Minimum number of distinct UPOS tags.
pub const MIN_DISTINCT_UPOS: usize = 5;
/// Inclusive character bounds on the rendered text.
pub const MIN_CHARS: usize = 2;
pub const MAX_CHARS: usize = 5_000;

/// Apply all cleaning filters, preserving the order of survivors.
///
/// Rejection reasons are checked in a fixed order per sentence — duplicate,
/// too short, too simple, character bounds, ambiguous punctuation — so each
/// rejection increments exactly one counter. Duplicate detection operates on
/// rendered text and also remembers texts of sentences that were themselves
/// rejected later, keeping the first occurrence authoritative.
pub fn clean_corpus(corpus: &ParsedCorpus) -> (Vec<AnnotatedSentence>, CleaningReport) {
    let mut report = CleaningReport {
        input_count: corpus.sentences.len() + corpus.structural_rejects,
        structural_rejects: corpus.structural_rejects,
        ..CleaningReport::default()
    };
    let mut seen: HashSet<String> = HashSet::new();
    let mut kept = Vec::new();

    for sentence in &corpus.sentences {
        let rendered = render_text(sentence);
        if !seen.insert(rendered.clone()) {
            report.deduplicated += 1;
            continue;
        }
        if sentence.tokens.len() < MIN_TOKENS {
            report.too_short += 1;
            continue;
        }
        let distinct_upos: HashSet<&str> =
            sentence.tokens.iter().map(|t| t.upos.as_str()).collect();
        if distinct_upos.len() < MIN_DISTINCT_UPOS {
            report.too_simple += 1;
            continue;
        }
        let chars = rendered.chars().count();
        if !(MIN_CHARS..=MAX_CHARS).contains(&chars) {
            report.char_bounds += 1;
            continue;
        }
        if has_ambiguous_punctuation(sentence, &rendered) {
            report.ambiguous_punct += 1;
            continue;
        }
        kept.push(sentence.clone());
    }

    report.output_count = kept.len();
    debug_assert!(report.balanced());
    (kept, report)
}

/// The ambiguous-punctuation predicate: unbalanced paired delimiters
/// `( ) [ ] " « »` anywhere in the rendered text, or a sentence-terminal
/// character `.` `!` `?` occurring in any token other than the last.
fn has_ambiguous_punctuation(sentence: &AnnotatedSentence, rendered: &str) -> bool {
    if !delimiters_balanced(rendered) {
        return true;
    }
    let last = sentence.tokens.len().saturating_sub(1);
    sentence.tokens[..last]
        .iter()
        .any(|t| t.form.contains(['.', '!', '?']))
}

fn delimiters_balanced(text: &str) -> bool {
    let mut stack: Vec<char> = Vec::new();
    let mut quotes = 0usize;
    for c in text.chars() {
        match c {
            '(' | '[' | '«' => stack.push(c),
            ')' => {
                if stack.pop() != Some('(') {
                    return false;
                }
            }
            ']' => {
                if stack.pop() != Some('[') {
                    return false;
                }
            }
            '»' => {
                if stack.pop() != Some('«') {
                    return false;
                }
            }
            '"' => quotes += 1,
            _ => {}
        }
    }
    stack.is_empty() && quotes.is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::sent;

    fn clean_one(sentence: AnnotatedSentence) -> CleaningReport {
        clean_corpus(&ParsedCorpus::from_sentences(vec![sentence])).1
    }

    // A sentence passing every filter: 6 tokens, 6 distinct UPOS.
    fn good(id: &str) -> AnnotatedSentence {
        sent(id, |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("så").upos("VERB").deprel("root").head(0);
            b.t("en").upos("DET").deprel("det").head(4);
            b.t("bil").upos("NOUN").deprel("obj").head(2);
            b.t("her").upos("ADV").deprel("advmod").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        })
    }

    #[test]
    fn four_tokens_is_too_short() {
        let s = sent("x", |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("så").upos("VERB").deprel("root").head(0);
            b.t("bilen").upos("NOUN").deprel("obj").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        });
        let report = clean_one(s);
        assert_eq!(report.too_short, 1);
        assert_eq!(report.output_count, 0);
        assert!(report.balanced());
    }

    #[test]
    fn two_distinct_tags_is_too_simple() {
        let s = sent("x", |b| {
            for form in ["hus", "bil", "bog", "vogn", "kat"] {
                b.t(form).upos("NOUN").deprel("root").head(0);
            }
            b.t(".").upos("PUNCT").deprel("punct").head(1);
        });
        let report = clean_one(s);
        assert_eq!(report.too_simple, 1);
        assert!(report.balanced());
    }

    #[test]
    fn duplicate_text_excluded_second_time() {
        let mut a = good("a");
        let mut b = good("b");
        a.raw_text = None;
        b.raw_text = None;
        let (kept, report) =
            clean_corpus(&ParsedCorpus::from_sentences(vec![a.clone(), b]));
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].id, "a");
        assert_eq!(report.deduplicated, 1);
        assert!(report.balanced());
    }

    #[test]
    fn oversized_sentence_hits_char_bounds() {
        let long = "a".repeat(1_200);
        let s = sent("x", |b| {
            b.t(&long).upos("NOUN").deprel("root").head(0);
            b.t(&long).upos("VERB").deprel("dep").head(1);
            b.t(&long).upos("ADJ").deprel("dep").head(1);
            b.t(&long).upos("ADV").deprel("dep").head(1);
            b.t(&long).upos("DET").deprel("dep").head(1);
        });
        let report = clean_one(s);
        assert_eq!(report.char_bounds, 1);
    }

    #[test]
    fn unbalanced_paren_is_ambiguous() {
        let s = sent("x", |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("så").upos("VERB").deprel("root").head(0);
            b.t("en").upos("DET").deprel("det").head(5);
            b.t("(").upos("PUNCT").deprel("punct").head(5).glue();
            b.t("bil").upos("NOUN").deprel("obj").head(2);
            b.t("her").upos("ADV").deprel("advmod").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        });
        let report = clean_one(s);
        assert_eq!(report.ambiguous_punct, 1);
    }

    #[test]
    fn mid_sentence_terminal_is_ambiguous() {
        let s = sent("x", |b| {
            b.t("Kom").upos("VERB").deprel("root").head(0).glue();
            b.t("!").upos("PUNCT").deprel("punct").head(1);
            b.t("Hun").upos("PRON").deprel("nsubj").head(4);
            b.t("løber").upos("VERB").deprel("parataxis").head(1);
            b.t("mod").upos("ADP").deprel("case").head(6);
            b.t("huset").upos("NOUN").deprel("obl").head(4).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(4);
        });
        let report = clean_one(s);
        assert_eq!(report.ambiguous_punct, 1);
    }

    #[test]
    fn final_terminal_is_fine() {
        let report = clean_one(good("x"));
        assert_eq!(report.output_count, 1);
        assert!(report.balanced());
    }

    #[test]
    fn structural_rejects_carry_into_report() {
        let corpus = ParsedCorpus {
            sentences: vec![good("x")],
            structural_rejects: 3,
        };
        let (_, report) = clean_corpus(&corpus);
        assert_eq!(report.input_count, 4);
        assert_eq!(report.structural_rejects, 3);
        assert_eq!(report.output_count, 1);
        assert!(report.balanced());
    }

    #[test]
    fn cleaning_is_idempotent() {
        let sentences = vec![good("a"), good("b"), good("c")];
        let (once, r1) = clean_corpus(&ParsedCorpus::from_sentences(sentences));
        let (twice, r2) = clean_corpus(&ParsedCorpus::from_sentences(once.clone()));
        assert_eq!(once, twice);
        assert_eq!(r1.output_count, r2.output_count);
        assert_eq!(r2.input_count, r2.output_count);
    }
}
