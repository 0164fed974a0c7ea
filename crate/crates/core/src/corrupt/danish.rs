//! Candidate-site enumeration for the Danish-specific corruptors.
//!
//! Each function inspects surface forms, UPOS tags, morphological features,
//! and dependency relations, and returns every position where the corruption
//! would apply. Guards err on the side of returning fewer sites: a missed
//! candidate costs coverage, a bad candidate costs precision.

use crate::conllu::{AnnotatedSentence, AnnotatedToken};
use crate::rules::{match_case, suffix_groups, swaps, RulePack, VerbFamily};

use super::{site_replace, CandidateSite, Edit};

const PROPN: &str = "PROPN";

fn is_propn(t: &AnnotatedToken) -> bool {
    t.upos == PROPN
}

/// Swap *en*/*et* when it is a determiner (`det`) attached to a noun.
/// Numeral uses are excluded by the DET tag.
pub(super) fn indefinite_determiner(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    let Some(table) = pack.swap_table(swaps::ARTICLES) else {
        return Vec::new();
    };
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if t.upos != "DET" || t.base_deprel() != "det" || is_propn(t) {
                return None;
            }
            let head = sentence.token(t.head)?;
            if head.upos != "NOUN" {
                return None;
            }
            let replacement = table.swap(&t.form)?;
            Some(site_replace(pos, replacement))
        })
        .collect()
}

/// Generic driver for the suffix-rule corruptors: first matching rule in the
/// group wins per token.
fn suffix_sites(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
    groups: &[&str],
) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if is_propn(t) {
                return None;
            }
            groups
                .iter()
                .flat_map(|g| pack.suffix_group(g))
                .find(|rule| rule.matches(t))
                .and_then(|rule| rule.apply(&t.form))
                .map(|form| site_replace(pos, form))
        })
        .collect()
}

/// Swap the definite-singular noun suffix -en <-> -et.
pub(super) fn suffix_determiner(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    suffix_sites(sentence, pack, &[suffix_groups::SUFFIX_DETERMINER])
}

/// Silent-d confusion: noun -ene -> -ende, verb/adjective -ende -> -ene.
pub(super) fn ende_ene(sentence: &AnnotatedSentence, pack: &RulePack) -> Vec<CandidateSite> {
    suffix_sites(sentence, pack, &[suffix_groups::ENDE_ENE])
}

/// R problem on verbs: present -rer -> -re, infinitive -re -> -rer.
pub(super) fn r_problem_verb(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    suffix_sites(sentence, pack, &[suffix_groups::R_PROBLEM_VERB])
}

/// R problem on nouns: -erne -> -ene (Plur Def), -ere -> -er (Plur Ind),
/// -eren -> -erne (Sing Def).
pub(super) fn r_problem_noun(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    suffix_sites(sentence, pack, &[suffix_groups::R_PROBLEM_NOUN])
}

/// R problem on adjectives: comparative -ere -> -er. The reverse direction
/// often yields a valid comparative, so it only runs behind the
/// `adjective_r_reverse` configuration flag.
pub(super) fn r_problem_adjective(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    if pack.adjective_r_reverse {
        suffix_sites(
            sentence,
            pack,
            &[
                suffix_groups::R_PROBLEM_ADJECTIVE,
                suffix_groups::R_PROBLEM_ADJECTIVE_REVERSE,
            ],
        )
    } else {
        suffix_sites(sentence, pack, &[suffix_groups::R_PROBLEM_ADJECTIVE])
    }
}

/// Swap *nogle*/*nogen*. The candidate is located by finding the noun
/// immediately following the pronoun (the nearest NOUN in linear order, as
/// in *nogle helt nye steder*) and checking pronoun-noun number agreement:
/// *nogle* pairs with plural nouns, *nogen* with singular ones. Sentences
/// containing `?` or a negation adverb (*ikke*, *aldrig*) are excluded
/// entirely — the swap can stay acceptable in interrogative or negative
/// constructions.
pub(super) fn nogle_nogen(sentence: &AnnotatedSentence, pack: &RulePack) -> Vec<CandidateSite> {
    let Some(table) = pack.swap_table(swaps::NOGLE_NOGEN) else {
        return Vec::new();
    };
    let blocked = sentence.tokens.iter().any(|t| {
        t.form.contains('?') || matches!(t.form.to_lowercase().as_str(), "ikke" | "aldrig")
    });
    if blocked {
        return Vec::new();
    }
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if is_propn(t) {
                return None;
            }
            let replacement = table.swap(&t.form)?;
            let noun = sentence.tokens[pos + 1..].iter().find(|u| u.upos == "NOUN")?;
            let agrees = match t.form.to_lowercase().as_str() {
                "nogle" => noun.has_feat("Number", "Plur"),
                "nogen" => noun.has_feat("Number", "Sing"),
                _ => true,
            };
            agrees.then(|| site_replace(pos, replacement))
        })
        .collect()
}

/// Wrong-case personal pronouns: subject forms in `nsubj`/`conj` positions
/// become object forms, object forms in `obj`/`obl` positions become
/// subject forms.
pub(super) fn pronoun_case(sentence: &AnnotatedSentence, pack: &RulePack) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if t.upos != "PRON" {
                return None;
            }
            let replacement = match t.base_deprel() {
                "nsubj" | "conj" => pack.pronoun_case.object_form(&t.form)?,
                "obj" | "obl" => pack.pronoun_case.subject_form(&t.form)?,
                _ => return None,
            };
            Some(site_replace(pos, replacement))
        })
        .collect()
}

/// Replace object-position *som* with *der*. *Der* is restricted to subject
/// position, so the swap is reliably wrong exactly when the relative clause
/// has an overt subject of its own; *som* as clause subject is left alone,
/// and the der -> som direction is not applied at all.
pub(super) fn som_der(sentence: &AnnotatedSentence, _pack: &RulePack) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if is_propn(t) || t.form.to_lowercase() != "som" {
                return None;
            }
            if !matches!(t.base_deprel(), "obj" | "obl") || t.head == 0 {
                return None;
            }
            let has_overt_subject = sentence
                .tokens
                .iter()
                .any(|u| u.head == t.head && u.index != t.index && u.base_deprel() == "nsubj");
            if !has_overt_subject {
                return None;
            }
            Some(site_replace(pos, match_case(&t.form, "der")))
        })
        .collect()
}

/// Replace subject *han*/*hun* with impersonal *det*, but only when an
/// earlier noun or name offers a potential referent; a bare sentence-initial
/// pronoun has no antecedent to clash with.
pub(super) fn personal_pronoun(
    sentence: &AnnotatedSentence,
    _pack: &RulePack,
) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if t.upos != "PRON"
                || t.base_deprel() != "nsubj"
                || !matches!(t.form.to_lowercase().as_str(), "han" | "hun")
            {
                return None;
            }
            let has_referent = sentence.tokens[..pos]
                .iter()
                .any(|u| u.upos == "NOUN" || u.upos == PROPN);
            if !has_referent {
                return None;
            }
            Some(site_replace(pos, match_case(&t.form, "det")))
        })
        .collect()
}

/// Replace a word with one of its attested misspellings. The site is the
/// token; when a word has several variants one is picked uniformly after
/// site selection.
pub(super) fn spelling_error(
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if is_propn(t) {
                return None;
            }
            let variants = pack.lexicon.variants(&t.form)?;
            let edits: Vec<Edit> = variants
                .iter()
                .map(|v| Edit::Replace {
                    pos,
                    form: match_case(&t.form, v),
                })
                .collect();
            (!edits.is_empty()).then_some(CandidateSite { edits })
        })
        .collect()
}

/// Swap between the *ligge* and *lægge* inflection families. The families
/// differ in transitivity, so the swap is wrong exactly when the clause's
/// object situation matches the original verb: *ligge* forms must have no
/// `obj` dependent, *lægge* forms must have one.
pub(super) fn ligge_laegge(sentence: &AnnotatedSentence, pack: &RulePack) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if t.upos != "VERB" {
                return None;
            }
            let (family, counterpart) = pack.verb_forms.lookup(&t.form)?;
            let has_object = sentence.has_dependent(t.index, "obj");
            let fits = match family {
                VerbFamily::Intransitive => !has_object,
                VerbFamily::Transitive => has_object,
            };
            fits.then(|| site_replace(pos, counterpart))
        })
        .collect()
}

/// Rewrite genitive marking into a wrong variant: bare -s becomes
/// apostrophe-s (*Peters* -> *Peter's*), bare apostrophe after s/x/z becomes
/// apostrophe-s (*Jens'* -> *Jens's*). Detection uses `Case=Gen` when
/// features are present, otherwise a suffix heuristic over nominals followed
/// by a noun. Proper nouns are allowed: the edit targets the clitic.
pub(super) fn genitive(sentence: &AnnotatedSentence, _pack: &RulePack) -> Vec<CandidateSite> {
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if t.upos != "NOUN" && t.upos != PROPN {
                return None;
            }
            let marked_genitive = t.has_feat("Case", "Gen");
            let heuristic = t.feats.is_empty()
                && sentence
                    .tokens
                    .get(pos + 1)
                    .is_some_and(|next| next.upos == "NOUN");
            if !marked_genitive && !heuristic {
                return None;
            }
            let rewritten = rewrite_genitive(&t.form)?;
            Some(site_replace(pos, rewritten))
        })
        .collect()
}

fn rewrite_genitive(form: &str) -> Option<String> {
    let chars: Vec<char> = form.chars().collect();
    match chars.as_slice() {
        // Bare-apostrophe genitive after s/x/z: Jens' -> Jens's
        [.., prev, '\''] if matches!(prev.to_lowercase().next(), Some('s' | 'x' | 'z')) => {
            Some(format!("{}'s", &form[..form.len() - 1]))
        }
        // Bare -s genitive: Peters -> Peter's
        [first, .., last]
            if last.to_lowercase().next() == Some('s')
                && !form.contains('\'')
                && first.is_alphabetic() =>
        {
            let cut = form.len() - last.len_utf8();
            Some(format!("{}'s", &form[..cut]))
        }
        _ => None,
    }
}

/// Confuse the present-tense verb *får* with the function word *for*.
pub(super) fn faar_for(sentence: &AnnotatedSentence, pack: &RulePack) -> Vec<CandidateSite> {
    let Some(table) = pack.swap_table(swaps::FAAR_FOR) else {
        return Vec::new();
    };
    sentence
        .tokens
        .iter()
        .enumerate()
        .filter_map(|(pos, t)| {
            if is_propn(t) {
                return None;
            }
            let replacement = table.swap(&t.form)?;
            let eligible = match t.upos.as_str() {
                // The verb side: får as a form of få. "for" can also be
                // tagged VERB (past of fare) and must not swap there.
                "VERB" => {
                    t.form.to_lowercase() == "får" && t.lemma.to_lowercase() == "få"
                }
                // The function-word side.
                "ADP" | "SCONJ" => true,
                _ => false,
            };
            eligible.then(|| site_replace(pos, replacement))
        })
        .collect()
}
