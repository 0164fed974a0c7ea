//! The corruption functions: pure transformations from an annotated sentence
//! to at most one [`CorruptionOutcome`].
//!
//! Every corruptor follows the same contract: enumerate candidate edit sites
//! from annotations and the [`RulePack`], return `None` when no site exists,
//! otherwise pick one site uniformly with the caller's rng and materialize a
//! single edit. Proper nouns are never edit targets, with one exception:
//! the genitive corruptor, since Danish genitives attach predominantly to
//! names and the edit touches the clitic rather than the name itself.

mod basic;
mod danish;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::conllu::{render_forms, render_text, AnnotatedSentence};
use crate::rules::RulePack;

/// The closed set of corruption kinds. Declaration order is canonical: it
/// fixes tie-breaking in the pipeline and the category axis of kind
/// distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorruptionKind {
    IndefiniteDeterminer,
    SuffixDeterminer,
    NogleNogen,
    EndeEne,
    PronounCase,
    SomDer,
    PersonalPronoun,
    SpellingError,
    LiggeLaegge,
    RProblemVerb,
    RProblemNoun,
    RProblemAdjective,
    Genitive,
    FaarFor,
    BasicFlip,
    BasicDelete,
}

impl CorruptionKind {
    /// All kinds in canonical order.
    pub const ALL: [CorruptionKind; 16] = [
        CorruptionKind::IndefiniteDeterminer,
        CorruptionKind::SuffixDeterminer,
        CorruptionKind::NogleNogen,
        CorruptionKind::EndeEne,
        CorruptionKind::PronounCase,
        CorruptionKind::SomDer,
        CorruptionKind::PersonalPronoun,
        CorruptionKind::SpellingError,
        CorruptionKind::LiggeLaegge,
        CorruptionKind::RProblemVerb,
        CorruptionKind::RProblemNoun,
        CorruptionKind::RProblemAdjective,
        CorruptionKind::Genitive,
        CorruptionKind::FaarFor,
        CorruptionKind::BasicFlip,
        CorruptionKind::BasicDelete,
    ];

    /// Stable string identifier used in exports and judgment mappings.
    pub fn identifier(&self) -> &'static str {
        match self {
            CorruptionKind::IndefiniteDeterminer => "indefinite_determiner",
            CorruptionKind::SuffixDeterminer => "suffix_determiner",
            CorruptionKind::NogleNogen => "nogle_nogen",
            CorruptionKind::EndeEne => "ende_ene",
            CorruptionKind::PronounCase => "pronoun_case",
            CorruptionKind::SomDer => "som_der",
            CorruptionKind::PersonalPronoun => "personal_pronoun",
            CorruptionKind::SpellingError => "spelling_error",
            CorruptionKind::LiggeLaegge => "ligge_laegge",
            CorruptionKind::RProblemVerb => "r_problem_verb",
            CorruptionKind::RProblemNoun => "r_problem_noun",
            CorruptionKind::RProblemAdjective => "r_problem_adjective",
            CorruptionKind::Genitive => "genitive",
            CorruptionKind::FaarFor => "faar_for",
            CorruptionKind::BasicFlip => "basic_flip",
            CorruptionKind::BasicDelete => "basic_delete",
        }
    }

    /// Human-readable label for printed tables.
    pub fn label(&self) -> &'static str {
        match self {
            CorruptionKind::IndefiniteDeterminer => "Indefinite determiner",
            CorruptionKind::SuffixDeterminer => "Suffix determiner",
            CorruptionKind::NogleNogen => "Nogle vs nogen",
            CorruptionKind::EndeEne => "Ende vs ene",
            CorruptionKind::PronounCase => "Pronouns obj vs subj",
            CorruptionKind::SomDer => "Som vs der",
            CorruptionKind::PersonalPronoun => "Han/hun vs det",
            CorruptionKind::SpellingError => "Spelling errors",
            CorruptionKind::LiggeLaegge => "Ligge vs lægge",
            CorruptionKind::RProblemVerb => "R problem (verbs)",
            CorruptionKind::RProblemNoun => "R problem (nouns)",
            CorruptionKind::RProblemAdjective => "R problem (adjectives)",
            CorruptionKind::Genitive => "Genitive",
            CorruptionKind::FaarFor => "Får vs for",
            CorruptionKind::BasicFlip => "Basic 1 (flip neighbors)",
            CorruptionKind::BasicDelete => "Basic 2 (delete)",
        }
    }

    pub fn from_identifier(id: &str) -> Option<CorruptionKind> {
        CorruptionKind::ALL
            .into_iter()
            .find(|k| k.identifier() == id)
    }

    /// Position in the canonical order.
    pub fn canonical_index(&self) -> usize {
        CorruptionKind::ALL
            .iter()
            .position(|k| k == self)
            .expect("kind present in ALL")
    }
}

impl std::fmt::Display for CorruptionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.identifier())
    }
}

/// Where a corruption edited the sentence, in 1-based token indices of the
/// original sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EditLocus {
    /// A single token was rewritten or deleted.
    Token(usize),
    /// An adjacent token pair was swapped (counts as one locus).
    Adjacent(usize, usize),
}

/// The atomic product of a corruptor: one corrupted rendering plus enough
/// metadata to audit and revert the edit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorruptionOutcome {
    pub sentence_id: String,
    pub kind: CorruptionKind,
    pub corrupted_text: String,
    pub original_text: String,
    pub locus: EditLocus,
    pub original_form: String,
    /// Empty for deletions; for flips, the swapped pair joined by a space.
    pub corrupted_form: String,
}

/// One concrete edit against a sentence (positions are 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Edit {
    Replace { pos: usize, form: String },
    Flip { pos: usize },
    Delete { pos: usize },
}

/// A candidate edit site. Most corruptors offer exactly one edit per site;
/// the spelling corruptor offers one per misspelling variant, picked
/// uniformly after the site itself is chosen.
#[derive(Debug, Clone)]
pub(crate) struct CandidateSite {
    pub edits: Vec<Edit>,
}

impl CandidateSite {
    pub(crate) fn single(edit: Edit) -> Self {
        CandidateSite { edits: vec![edit] }
    }
}

pub(crate) fn site_replace(pos: usize, form: String) -> CandidateSite {
    CandidateSite::single(Edit::Replace { pos, form })
}

/// Enumerate the candidate edit sites of `kind` for this sentence.
pub(crate) fn candidate_sites(
    kind: CorruptionKind,
    sentence: &AnnotatedSentence,
    pack: &RulePack,
) -> Vec<CandidateSite> {
    match kind {
        CorruptionKind::IndefiniteDeterminer => danish::indefinite_determiner(sentence, pack),
        CorruptionKind::SuffixDeterminer => danish::suffix_determiner(sentence, pack),
        CorruptionKind::NogleNogen => danish::nogle_nogen(sentence, pack),
        CorruptionKind::EndeEne => danish::ende_ene(sentence, pack),
        CorruptionKind::PronounCase => danish::pronoun_case(sentence, pack),
        CorruptionKind::SomDer => danish::som_der(sentence, pack),
        CorruptionKind::PersonalPronoun => danish::personal_pronoun(sentence, pack),
        CorruptionKind::SpellingError => danish::spelling_error(sentence, pack),
        CorruptionKind::LiggeLaegge => danish::ligge_laegge(sentence, pack),
        CorruptionKind::RProblemVerb => danish::r_problem_verb(sentence, pack),
        CorruptionKind::RProblemNoun => danish::r_problem_noun(sentence, pack),
        CorruptionKind::RProblemAdjective => danish::r_problem_adjective(sentence, pack),
        CorruptionKind::Genitive => danish::genitive(sentence, pack),
        CorruptionKind::FaarFor => danish::faar_for(sentence, pack),
        CorruptionKind::BasicFlip => basic::flip(sentence, pack),
        CorruptionKind::BasicDelete => basic::delete(sentence, pack),
    }
}

/// True when the corruptor has at least one candidate site. Needs no rng:
/// applicability is deterministic.
pub fn is_applicable(kind: CorruptionKind, sentence: &AnnotatedSentence, pack: &RulePack) -> bool {
    !candidate_sites(kind, sentence, pack).is_empty()
}

/// Apply the corruption of `kind` to the sentence, or `None` when no
/// candidate site exists. Site choice (and, for spelling, variant choice) is
/// uniform via `rng`; identical `(sentence, pack, rng state)` triples always
/// produce identical outcomes.
pub fn corrupt<R: Rng + ?Sized>(
    kind: CorruptionKind,
    sentence: &AnnotatedSentence,
    pack: &RulePack,
    rng: &mut R,
) -> Option<CorruptionOutcome> {
    let sites = candidate_sites(kind, sentence, pack);
    if sites.is_empty() {
        return None;
    }
    let site = if sites.len() == 1 {
        &sites[0]
    } else {
        &sites[rng.random_range(0..sites.len())]
    };
    let edit = if site.edits.len() == 1 {
        &site.edits[0]
    } else {
        &site.edits[rng.random_range(0..site.edits.len())]
    };
    Some(materialize(kind, sentence, edit))
}

fn materialize(kind: CorruptionKind, sentence: &AnnotatedSentence, edit: &Edit) -> CorruptionOutcome {
    let original_text = render_text(sentence);
    let forms: Vec<&str> = sentence.tokens.iter().map(|t| t.form.as_str()).collect();
    let spaces: Vec<bool> = sentence.tokens.iter().map(|t| t.space_after).collect();

    let (corrupted_text, locus, original_form, corrupted_form) = match edit {
        Edit::Replace { pos, form } => {
            let mut new_forms = forms.clone();
            new_forms[*pos] = form.as_str();
            (
                render_forms(new_forms.into_iter(), spaces.iter().copied()),
                EditLocus::Token(pos + 1),
                sentence.tokens[*pos].form.clone(),
                form.clone(),
            )
        }
        Edit::Flip { pos } => {
            // The space skeleton stays positional so a swap next to glued
            // punctuation does not invent or drop whitespace.
            let mut new_forms = forms.clone();
            new_forms.swap(*pos, pos + 1);
            (
                render_forms(new_forms.into_iter(), spaces.iter().copied()),
                EditLocus::Adjacent(pos + 1, pos + 2),
                format!("{} {}", forms[*pos], forms[pos + 1]),
                format!("{} {}", forms[pos + 1], forms[*pos]),
            )
        }
        Edit::Delete { pos } => {
            let mut new_forms = forms.clone();
            let mut new_spaces = spaces.clone();
            new_forms.remove(*pos);
            new_spaces.remove(*pos);
            (
                render_forms(new_forms.into_iter(), new_spaces.into_iter()),
                EditLocus::Token(pos + 1),
                sentence.tokens[*pos].form.clone(),
                String::new(),
            )
        }
    };

    CorruptionOutcome {
        sentence_id: sentence.id.clone(),
        kind,
        corrupted_text,
        original_text,
        locus,
        original_form,
        corrupted_form,
    }
}

/// Audit an outcome against its source sentence: the corrupted text must
/// differ from the original, be reproducible by re-applying the single edit
/// described by the locus, and revert to the original text when the locus is
/// undone. Returns false on any violation.
pub fn verify_single_edit(sentence: &AnnotatedSentence, outcome: &CorruptionOutcome) -> bool {
    if outcome.corrupted_text == outcome.original_text {
        return false;
    }
    if render_text(sentence) != outcome.original_text {
        return false;
    }
    let forms: Vec<&str> = sentence.tokens.iter().map(|t| t.form.as_str()).collect();
    let spaces: Vec<bool> = sentence.tokens.iter().map(|t| t.space_after).collect();
    match outcome.locus {
        EditLocus::Token(i) => {
            let pos = i.checked_sub(1).filter(|p| *p < forms.len());
            let Some(pos) = pos else { return false };
            if forms[pos] != outcome.original_form {
                return false;
            }
            let rebuilt = if outcome.corrupted_form.is_empty() {
                let mut f = forms.clone();
                let mut s = spaces.clone();
                f.remove(pos);
                s.remove(pos);
                render_forms(f.into_iter(), s.into_iter())
            } else {
                let mut f = forms.clone();
                f[pos] = outcome.corrupted_form.as_str();
                render_forms(f.into_iter(), spaces.iter().copied())
            };
            rebuilt == outcome.corrupted_text
        }
        EditLocus::Adjacent(i, j) => {
            if j != i + 1 || i == 0 || j > forms.len() {
                return false;
            }
            let mut f = forms.clone();
            f.swap(i - 1, j - 1);
            render_forms(f.into_iter(), spaces.iter().copied()) == outcome.corrupted_text
        }
    }
}
