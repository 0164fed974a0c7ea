//! The two generic fallback corruptions: flipping an adjacent token pair and
//! deleting a token. Broadly applicable, so they carry safeguards that keep
//! the result reliably ungrammatical.

use crate::conllu::{AnnotatedSentence, AnnotatedToken};
use crate::rules::RulePack;

use super::{CandidateSite, Edit};

const BLOCKED_UPOS: [&str; 3] = ["ADJ", "PUNCT", "PROPN"];

fn blocked(t: &AnnotatedToken) -> bool {
    BLOCKED_UPOS.contains(&t.upos.as_str())
}

fn is_terminal_punct(form: &str) -> bool {
    !form.is_empty() && form.chars().all(|c| matches!(c, '.' | '!' | '?'))
}

/// Swap an adjacent token pair. Pairs involving adjectives, punctuation, or
/// proper nouns are skipped, as are pairs of identical forms (the swap would
/// be invisible) and the sentence-final terminator.
pub(super) fn flip(sentence: &AnnotatedSentence, _pack: &RulePack) -> Vec<CandidateSite> {
    let tokens = &sentence.tokens;
    let last = tokens.len().saturating_sub(1);
    (0..tokens.len().saturating_sub(1))
        .filter_map(|pos| {
            let (a, b) = (&tokens[pos], &tokens[pos + 1]);
            if blocked(a) || blocked(b) || a.form == b.form {
                return None;
            }
            if pos + 1 == last && is_terminal_punct(&b.form) {
                return None;
            }
            Some(CandidateSite::single(Edit::Flip { pos }))
        })
        .collect()
}

/// Delete one token whose word class makes the removal reliably break the
/// sentence: main verbs, auxiliaries, adpositions, and determiners.
pub(super) fn delete(sentence: &AnnotatedSentence, _pack: &RulePack) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|&(_pos, t)| matches!(t.upos.as_str(), "VERB" | "AUX" | "ADP" | "DET")).map(|(pos, _t)| CandidateSite::single(Edit::Delete { pos }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{candidate_sites, corrupt, CorruptionKind, EditLocus};
    use crate::rules::RulePack;
    use crate::synth::sent;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn flip_swaps_selected_pair() {
        let pack = RulePack::default();
        let s = sent("x", |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("så").upos("VERB").deprel("root").head(0);
            b.t("bilen").upos("NOUN").deprel("obj").head(2);
            b.t("i").upos("ADP").deprel("case").head(5);
            b.t("går").upos("NOUN").deprel("obl").head(2);
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        });
        let sites = candidate_sites(CorruptionKind::BasicFlip, &s, &pack);
        // Eligible pairs: (Hun,så), (så,bilen), (bilen,i), (i,går).
        assert_eq!(sites.len(), 4);
        // Find the outcome flipping (så, bilen), i.e. positions 2 and 3.
        let mut seen = std::collections::HashSet::new();
        for seed in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let o = corrupt(CorruptionKind::BasicFlip, &s, &pack, &mut rng).unwrap();
            if o.locus == EditLocus::Adjacent(2, 3) {
                assert_eq!(o.corrupted_text, "Hun bilen så i går .");
            }
            seen.insert(o.corrupted_text);
        }
        assert_eq!(seen.len(), 4, "all four flips should be reachable");
    }

    #[test]
    fn flip_blocks_two_token_punct_sentence() {
        let pack = RulePack::default();
        let s = sent("x", |b| {
            b.t("Ja").upos("INTJ").deprel("root").head(0);
            b.t("!").upos("PUNCT").deprel("punct").head(1);
        });
        assert!(candidate_sites(CorruptionKind::BasicFlip, &s, &pack).is_empty());
    }

    #[test]
    fn flip_skips_identical_forms() {
        let pack = RulePack::default();
        let s = sent("x", |b| {
            b.t("meget").upos("ADV").deprel("advmod").head(2);
            b.t("meget").upos("ADV").deprel("advmod").head(3);
            b.t("ofte").upos("ADV").deprel("root").head(0);
        });
        let sites = candidate_sites(CorruptionKind::BasicFlip, &s, &pack);
        // (meget, meget) is out; (meget, ofte) stays.
        assert_eq!(sites.len(), 1);
    }

    #[test]
    fn delete_removes_token_and_following_space() {
        let pack = RulePack::default();
        let s = sent("x", |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("så").upos("VERB").deprel("root").head(0);
            b.t("bilen").upos("NOUN").deprel("obj").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        });
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let o = corrupt(CorruptionKind::BasicDelete, &s, &pack, &mut rng).unwrap();
        // "så" is the only eligible token.
        assert_eq!(o.corrupted_text, "Hun bilen.");
        assert_eq!(o.locus, EditLocus::Token(2));
        assert_eq!(o.corrupted_form, "");
    }

    #[test]
    fn delete_requires_eligible_pos() {
        let pack = RulePack::default();
        let s = sent("x", |b| {
            b.t("meget").upos("ADV").deprel("advmod").head(2);
            b.t("hurtigt").upos("ADV").deprel("root").head(0);
        });
        assert!(candidate_sites(CorruptionKind::BasicDelete, &s, &pack).is_empty());
    }
}
