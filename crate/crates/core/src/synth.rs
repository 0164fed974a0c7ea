//! Synthetic Danish-like corpora: a fluent sentence builder plus a seeded
//! generator assembling sentences from clause frames that cover every
//! corruptor's candidate patterns. Used by tests, fuzzing, and benchmarks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conllu::{render_text, AnnotatedSentence, AnnotatedToken};

/// Incrementally assembles an [`AnnotatedSentence`]; indices are assigned
/// from push order and `raw_text` is set to the rendering.
#[derive(Default)]
pub struct SentenceBuilder {
    tokens: Vec<AnnotatedToken>,
}

impl SentenceBuilder {
    /// Append a token; defaults: lemma = lowercased form, UPOS `X`,
    /// head 0, deprel `dep`, space after.
    pub fn t(&mut self, form: &str) -> TokenCfg<'_> {
        let index = self.tokens.len() + 1;
        self.tokens.push(AnnotatedToken {
            index,
            form: form.to_string(),
            lemma: form.to_lowercase(),
            upos: "X".to_string(),
            feats: Default::default(),
            head: 0,
            deprel: "dep".to_string(),
            space_after: true,
        });
        TokenCfg {
            token: self.tokens.last_mut().expect("just pushed"),
        }
    }

    fn build(self, id: &str) -> AnnotatedSentence {
        let mut sentence = AnnotatedSentence {
            id: id.to_string(),
            tokens: self.tokens,
            raw_text: None,
        };
        debug_assert!(
            sentence.tokens.iter().all(|t| t.head <= sentence.tokens.len()),
            "head out of range in synthetic sentence {id}"
        );
        sentence.raw_text = Some(render_text(&sentence));
        sentence
    }
}

/// Chainable configuration of the token just pushed.
pub struct TokenCfg<'a> {
    token: &'a mut AnnotatedToken,
}

impl TokenCfg<'_> {
    pub fn upos(self, upos: &str) -> Self {
        self.token.upos = upos.to_string();
        self
    }

    pub fn lemma(self, lemma: &str) -> Self {
        self.token.lemma = lemma.to_string();
        self
    }

    /// Morphological features as `Name=Value|Name=Value`.
    pub fn feats(self, feats: &str) -> Self {
        for item in feats.split('|').filter(|i| !i.is_empty()) {
            if let Some((k, v)) = item.split_once('=') {
                self.token.feats.insert(k.to_string(), v.to_string());
            }
        }
        self
    }

    pub fn head(self, head: usize) -> Self {
        self.token.head = head;
        self
    }

    pub fn deprel(self, deprel: &str) -> Self {
        self.token.deprel = deprel.to_string();
        self
    }

    /// No space after this token (next token attaches directly).
    pub fn glue(self) -> Self {
        self.token.space_after = false;
        self
    }
}

/// Build a sentence through a closure over the builder.
pub fn sent(id: &str, f: impl FnOnce(&mut SentenceBuilder)) -> AnnotatedSentence {
    let mut builder = SentenceBuilder::default();
    f(&mut builder);
    builder.build(id)
}

struct Noun {
    lemma: &'static str,
    sing_ind: &'static str,
    sing_def: &'static str,
    plur_ind: &'static str,
    plur_def: &'static str,
    neuter: bool,
}

const NOUNS: &[Noun] = &[
    Noun { lemma: "bil", sing_ind: "bil", sing_def: "bilen", plur_ind: "biler", plur_def: "bilerne", neuter: false },
    Noun { lemma: "hus", sing_ind: "hus", sing_def: "huset", plur_ind: "huse", plur_def: "husene", neuter: true },
    Noun { lemma: "bog", sing_ind: "bog", sing_def: "bogen", plur_ind: "bøger", plur_def: "bøgerne", neuter: false },
    Noun { lemma: "kage", sing_ind: "kage", sing_def: "kagen", plur_ind: "kager", plur_def: "kagerne", neuter: false },
    Noun { lemma: "dreng", sing_ind: "dreng", sing_def: "drengen", plur_ind: "drenge", plur_def: "drengene", neuter: false },
    Noun { lemma: "lærer", sing_ind: "lærer", sing_def: "læreren", plur_ind: "lærere", plur_def: "lærerne", neuter: false },
    Noun { lemma: "bord", sing_ind: "bord", sing_def: "bordet", plur_ind: "borde", plur_def: "bordene", neuter: true },
    Noun { lemma: "æble", sing_ind: "æble", sing_def: "æblet", plur_ind: "æbler", plur_def: "æblerne", neuter: true },
    Noun { lemma: "gave", sing_ind: "gave", sing_def: "gaven", plur_ind: "gaver", plur_def: "gaverne", neuter: false },
    Noun { lemma: "vogn", sing_ind: "vogn", sing_def: "vognen", plur_ind: "vogne", plur_def: "vognene", neuter: false },
    Noun { lemma: "by", sing_ind: "by", sing_def: "byen", plur_ind: "byer", plur_def: "byerne", neuter: false },
    Noun { lemma: "skole", sing_ind: "skole", sing_def: "skolen", plur_ind: "skoler", plur_def: "skolerne", neuter: false },
    Noun { lemma: "have", sing_ind: "have", sing_def: "haven", plur_ind: "haver", plur_def: "haverne", neuter: false },
    Noun { lemma: "barn", sing_ind: "barn", sing_def: "barnet", plur_ind: "børn", plur_def: "børnene", neuter: true },
];

struct Verb {
    lemma: &'static str,
    inf: &'static str,
    pres: &'static str,
    past: &'static str,
}

const VERBS: &[Verb] = &[
    Verb { lemma: "løbe", inf: "løbe", pres: "løber", past: "løb" },
    Verb { lemma: "køre", inf: "køre", pres: "kører", past: "kørte" },
    Verb { lemma: "se", inf: "se", pres: "ser", past: "så" },
    Verb { lemma: "købe", inf: "købe", pres: "køber", past: "købte" },
    Verb { lemma: "spise", inf: "spise", pres: "spiser", past: "spiste" },
    Verb { lemma: "høre", inf: "høre", pres: "hører", past: "hørte" },
    Verb { lemma: "lave", inf: "lave", pres: "laver", past: "lavede" },
    Verb { lemma: "bære", inf: "bære", pres: "bærer", past: "bar" },
];

const NAMES: &[&str] = &["Peter", "Anna", "Jens", "Lars", "Mette", "Søren"];
const SUBJ_PRONOUNS: &[(&str, &str)] = &[
    ("jeg", "Nom"),
    ("du", "Nom"),
    ("han", "Nom"),
    ("hun", "Nom"),
    ("vi", "Nom"),
    ("de", "Nom"),
];
const OBJ_PRONOUNS: &[&str] = &["mig", "dig", "ham", "hende", "os", "dem"];
const ADVERBS: &[&str] = &["ofte", "altid", "nu", "her", "gerne", "tit", "igen"];
const SPELLING_ADVERBS: &[&str] = &["selvfølgelig", "desværre", "virkelig", "altså"];
const PREPOSITIONS: &[&str] = &["i", "på", "til", "med", "under", "ved"];
const CMP_ADJECTIVES: &[&str] = &["hurtigere", "smukkere", "billigere", "finere"];
const POS_ADJECTIVES: &[&str] = &["stor", "flot", "rød", "gammel", "fin", "interessant"];

fn cap(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn noun_feats(neuter: bool, definite: bool, plural: bool) -> String {
    format!(
        "Definite={}|Gender={}|Number={}",
        if definite { "Def" } else { "Ind" },
        if neuter { "Neut" } else { "Com" },
        if plural { "Plur" } else { "Sing" },
    )
}

/// A seeded generator of cleaning-grade synthetic sentences (>=5 tokens,
/// >=5 distinct UPOS, balanced punctuation, unique ids).
pub struct CorpusGenerator {
    rng: ChaCha8Rng,
    counter: usize,
}

impl CorpusGenerator {
    pub fn new(seed: u64) -> Self {
        CorpusGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            counter: 0,
        }
    }

    /// Generate `n` sentences.
    pub fn corpus(&mut self, n: usize) -> Vec<AnnotatedSentence> {
        (0..n).map(|_| self.sentence()).collect()
    }

    /// Generate one sentence from a randomly chosen clause frame.
    pub fn sentence(&mut self) -> AnnotatedSentence {
        self.counter += 1;
        let id = format!("synt-{:05}", self.counter);
        let frame = self.rng.random_range(0..12u32);
        let mut b = SentenceBuilder::default();
        match frame {
            0 => self.transitive_clause(&mut b),
            1 => self.ligge_laegge_clause(&mut b),
            2 => self.relative_clause(&mut b),
            3 => self.nogle_clause(&mut b),
            4 => self.genitive_clause(&mut b),
            5 => self.reported_speech(&mut b),
            6 => self.faar_clause(&mut b),
            7 => self.comparative_clause(&mut b),
            8 => self.spelling_clause(&mut b),
            9 => self.plural_listening(&mut b),
            10 => self.object_pronoun_clause(&mut b),
            11 => self.infinitive_clause(&mut b),
            _ => unreachable!(),
        }
        b.build(&id)
    }

    fn pick<'a, T>(&mut self, pool: &'a [T]) -> &'a T {
        pool.choose(&mut self.rng).expect("non-empty pool")
    }

    // "Hun ser en bil på vejen ." and variants.
    fn transitive_clause(&mut self, b: &mut SentenceBuilder) {
        let verb = self.pick(VERBS);
        let obj = self.pick(NOUNS);
        let place = self.pick(NOUNS);
        let prep = *self.pick(PREPOSITIONS);
        let subj_kind = self.rng.random_range(0..3u32);
        // Token layout: subj(1) verb(2) det(3) obj(4) prep(5) place(6) .(7)
        match subj_kind {
            0 => {
                let (p, _) = *self.pick(SUBJ_PRONOUNS);
                b.t(&cap(p)).upos("PRON").lemma(p).feats("Case=Nom|PronType=Prs").deprel("nsubj").head(2);
            }
            1 => {
                b.t(self.pick(NAMES)).upos("PROPN").deprel("nsubj").head(2);
            }
            _ => {
                let n = self.pick(NOUNS);
                b.t(&cap(n.sing_def)).upos("NOUN").lemma(n.lemma)
                    .feats(&noun_feats(n.neuter, true, false)).deprel("nsubj").head(2);
            }
        }
        b.t(verb.pres).upos("VERB").lemma(verb.lemma)
            .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
        b.t(if obj.neuter { "et" } else { "en" }).upos("DET").lemma("en")
            .feats("PronType=Art").deprel("det").head(4);
        b.t(obj.sing_ind).upos("NOUN").lemma(obj.lemma)
            .feats(&noun_feats(obj.neuter, false, false)).deprel("obj").head(2);
        b.t(prep).upos("ADP").deprel("case").head(6);
        b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
            .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(2).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(2);
    }

    // "Bogen ligger altid på bordet ." / "Peter lægger bogen på bordet ."
    fn ligge_laegge_clause(&mut self, b: &mut SentenceBuilder) {
        let place = self.pick(NOUNS);
        let prep = *self.pick(PREPOSITIONS);
        if self.rng.random_bool(0.5) {
            let thing = self.pick(NOUNS);
            b.t(&cap(thing.sing_def)).upos("NOUN").lemma(thing.lemma)
                .feats(&noun_feats(thing.neuter, true, false)).deprel("nsubj").head(2);
            b.t("ligger").upos("VERB").lemma("ligge")
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
            b.t(self.pick(ADVERBS)).upos("ADV").deprel("advmod").head(2);
            b.t(prep).upos("ADP").deprel("case").head(5);
            b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
                .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        } else {
            let thing = self.pick(NOUNS);
            b.t(self.pick(NAMES)).upos("PROPN").deprel("nsubj").head(2);
            b.t("lægger").upos("VERB").lemma("lægge")
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
            b.t(thing.sing_def).upos("NOUN").lemma(thing.lemma)
                .feats(&noun_feats(thing.neuter, true, false)).deprel("obj").head(2);
            b.t(prep).upos("ADP").deprel("case").head(6);
            b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
                .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        }
    }

    // "Drengen , som jeg så , løber ofte ." or a subject relative.
    fn relative_clause(&mut self, b: &mut SentenceBuilder) {
        let head_noun = self.pick(NOUNS);
        let matrix = self.pick(VERBS);
        if self.rng.random_bool(0.6) {
            // som in object position with an overt clause subject.
            let (p, _) = *self.pick(SUBJ_PRONOUNS);
            let rel = self.pick(VERBS);
            b.t(&cap(head_noun.sing_def)).upos("NOUN").lemma(head_noun.lemma)
                .feats(&noun_feats(head_noun.neuter, true, false)).deprel("nsubj").head(7).glue();
            b.t(",").upos("PUNCT").deprel("punct").head(5);
            b.t("som").upos("PRON").lemma("som").feats("PronType=Rel").deprel("obj").head(5);
            b.t(p).upos("PRON").feats("Case=Nom|PronType=Prs").deprel("nsubj").head(5);
            b.t(rel.past).upos("VERB").lemma(rel.lemma)
                .feats("Mood=Ind|Tense=Past|VerbForm=Fin").deprel("acl:relcl").head(1).glue();
            b.t(",").upos("PUNCT").deprel("punct").head(5);
            b.t(matrix.pres).upos("VERB").lemma(matrix.lemma)
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
            b.t(self.pick(ADVERBS)).upos("ADV").deprel("advmod").head(7).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(7);
        } else {
            // som as the relative clause subject: not a som_der candidate.
            let rel = self.pick(VERBS);
            b.t(&cap(head_noun.sing_def)).upos("NOUN").lemma(head_noun.lemma)
                .feats(&noun_feats(head_noun.neuter, true, false)).deprel("nsubj").head(6).glue();
            b.t(",").upos("PUNCT").deprel("punct").head(4);
            b.t("som").upos("PRON").lemma("som").feats("PronType=Rel").deprel("nsubj").head(4);
            b.t(rel.pres).upos("VERB").lemma(rel.lemma)
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("acl:relcl").head(1).glue();
            b.t(",").upos("PUNCT").deprel("punct").head(4);
            b.t(matrix.pres).upos("VERB").lemma(matrix.lemma)
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
            b.t("her").upos("ADV").deprel("advmod").head(6).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(6);
        }
    }

    // "Nogle børn spiser kager i haven ." — sometimes with negation or a
    // question mark, which block the corruptor.
    fn nogle_clause(&mut self, b: &mut SentenceBuilder) {
        let verb = self.pick(VERBS);
        let obj = self.pick(NOUNS);
        let place = self.pick(NOUNS);
        let subject = self.pick(NOUNS);
        let negated = self.rng.random_bool(0.2);
        let question = !negated && self.rng.random_bool(0.15);
        let (pronoun, plural) = if self.rng.random_bool(0.7) {
            ("Nogle", true)
        } else {
            ("Nogen", false)
        };
        let subj_form = if plural { subject.plur_ind } else { subject.sing_ind };
        b.t(pronoun).upos("DET").lemma(pronoun.to_lowercase().as_str())
            .feats("PronType=Ind").deprel("det").head(2);
        b.t(subj_form).upos("NOUN").lemma(subject.lemma)
            .feats(&noun_feats(subject.neuter, false, plural)).deprel("nsubj").head(3);
        b.t(verb.pres).upos("VERB").lemma(verb.lemma)
            .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
        if negated {
            b.t("ikke").upos("ADV").deprel("advmod").head(3);
        }
        b.t(obj.plur_ind).upos("NOUN").lemma(obj.lemma)
            .feats(&noun_feats(obj.neuter, false, true)).deprel("obj").head(3);
        let prep_head = b.tokens.len() + 2;
        b.t(self.pick(PREPOSITIONS)).upos("ADP").deprel("case").head(prep_head);
        b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
            .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(3).glue();
        b.t(if question { "?" } else { "." }).upos("PUNCT").deprel("punct").head(3);
    }

    // "Peters bil er stor ." / "Jens' hus ligger i byen ."
    fn genitive_clause(&mut self, b: &mut SentenceBuilder) {
        let owner = *self.pick(NAMES);
        let owned = self.pick(NOUNS);
        let genitive = if owner.ends_with('s') {
            format!("{owner}'")
        } else {
            format!("{owner}s")
        };
        b.t(&genitive).upos("PROPN").lemma(owner).feats("Case=Gen").deprel("nmod:poss").head(2);
        b.t(owned.sing_ind).upos("NOUN").lemma(owned.lemma)
            .feats(&noun_feats(owned.neuter, false, false)).deprel("nsubj").head(4);
        b.t("er").upos("AUX").lemma("være").feats("Mood=Ind|Tense=Pres|VerbForm=Fin")
            .deprel("cop").head(4);
        b.t(self.pick(POS_ADJECTIVES)).upos("ADJ").feats("Degree=Pos").deprel("root").head(0);
        b.t(self.pick(ADVERBS)).upos("ADV").deprel("advmod").head(4).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(4);
    }

    // "Peter siger , at han køber kagen nu ."
    fn reported_speech(&mut self, b: &mut SentenceBuilder) {
        let verb = self.pick(VERBS);
        let obj = self.pick(NOUNS);
        let pronoun = if self.rng.random_bool(0.5) { "han" } else { "hun" };
        b.t(self.pick(NAMES)).upos("PROPN").deprel("nsubj").head(2);
        b.t("siger").upos("VERB").lemma("sige")
            .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0).glue();
        b.t(",").upos("PUNCT").deprel("punct").head(6);
        b.t("at").upos("SCONJ").deprel("mark").head(6);
        b.t(pronoun).upos("PRON").feats("Case=Nom|PronType=Prs").deprel("nsubj").head(6);
        b.t(verb.pres).upos("VERB").lemma(verb.lemma)
            .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("ccomp").head(2);
        b.t(obj.sing_def).upos("NOUN").lemma(obj.lemma)
            .feats(&noun_feats(obj.neuter, true, false)).deprel("obj").head(6);
        b.t("nu").upos("ADV").deprel("advmod").head(6).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(2);
    }

    // "Hun får en gave af Peter ." / "Han købte kagen for Anna ."
    fn faar_clause(&mut self, b: &mut SentenceBuilder) {
        let obj = self.pick(NOUNS);
        if self.rng.random_bool(0.5) {
            let (p, _) = *self.pick(SUBJ_PRONOUNS);
            b.t(&cap(p)).upos("PRON").lemma(p).feats("Case=Nom|PronType=Prs").deprel("nsubj").head(2);
            b.t("får").upos("VERB").lemma("få")
                .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
            b.t(if obj.neuter { "et" } else { "en" }).upos("DET").lemma("en")
                .feats("PronType=Art").deprel("det").head(4);
            b.t(obj.sing_ind).upos("NOUN").lemma(obj.lemma)
                .feats(&noun_feats(obj.neuter, false, false)).deprel("obj").head(2);
            b.t("af").upos("ADP").deprel("case").head(6);
            b.t(self.pick(NAMES)).upos("PROPN").deprel("obl").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        } else {
            let verb = self.pick(VERBS);
            b.t("Han").upos("PRON").lemma("han").feats("Case=Nom|PronType=Prs").deprel("nsubj").head(2);
            b.t(verb.past).upos("VERB").lemma(verb.lemma)
                .feats("Mood=Ind|Tense=Past|VerbForm=Fin").deprel("root").head(0);
            b.t(obj.sing_def).upos("NOUN").lemma(obj.lemma)
                .feats(&noun_feats(obj.neuter, true, false)).deprel("obj").head(2);
            b.t("for").upos("ADP").lemma("for").deprel("case").head(5);
            b.t(self.pick(NAMES)).upos("PROPN").deprel("obl").head(2).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        }
    }

    // "Bilen er hurtigere end vognen ."
    fn comparative_clause(&mut self, b: &mut SentenceBuilder) {
        let left = self.pick(NOUNS);
        let right = self.pick(NOUNS);
        b.t(&cap(left.sing_def)).upos("NOUN").lemma(left.lemma)
            .feats(&noun_feats(left.neuter, true, false)).deprel("nsubj").head(3);
        b.t("er").upos("AUX").lemma("være").feats("Mood=Ind|Tense=Pres|VerbForm=Fin")
            .deprel("cop").head(3);
        b.t(self.pick(CMP_ADJECTIVES)).upos("ADJ").feats("Degree=Cmp").deprel("root").head(0);
        b.t("end").upos("ADP").deprel("case").head(5);
        b.t(right.sing_def).upos("NOUN").lemma(right.lemma)
            .feats(&noun_feats(right.neuter, true, false)).deprel("obl").head(3).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(3);
    }

    // "Huset er selvfølgelig meget flot ."
    fn spelling_clause(&mut self, b: &mut SentenceBuilder) {
        let subj = self.pick(NOUNS);
        b.t(&cap(subj.sing_def)).upos("NOUN").lemma(subj.lemma)
            .feats(&noun_feats(subj.neuter, true, false)).deprel("nsubj").head(5);
        b.t("er").upos("AUX").lemma("være").feats("Mood=Ind|Tense=Pres|VerbForm=Fin")
            .deprel("cop").head(5);
        b.t(self.pick(SPELLING_ADVERBS)).upos("ADV").deprel("advmod").head(5);
        b.t("meget").upos("ADV").deprel("advmod").head(5);
        b.t(self.pick(POS_ADJECTIVES)).upos("ADJ").feats("Degree=Pos").deprel("root").head(0).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(5);
    }

    // "Lærerne hører ofte æblerne i skolen ." — plural definites for the
    // noun r-problem and silent-d suffixes.
    fn plural_listening(&mut self, b: &mut SentenceBuilder) {
        let subj = self.pick(NOUNS);
        let obj = self.pick(NOUNS);
        let place = self.pick(NOUNS);
        b.t(&cap(subj.plur_def)).upos("NOUN").lemma(subj.lemma)
            .feats(&noun_feats(subj.neuter, true, true)).deprel("nsubj").head(2);
        let verb = self.pick(VERBS);
        b.t(verb.pres).upos("VERB").lemma(verb.lemma)
            .feats("Mood=Ind|Tense=Pres|VerbForm=Fin").deprel("root").head(0);
        b.t(self.pick(ADVERBS)).upos("ADV").deprel("advmod").head(2);
        b.t(obj.plur_def).upos("NOUN").lemma(obj.lemma)
            .feats(&noun_feats(obj.neuter, true, true)).deprel("obj").head(2);
        b.t(self.pick(PREPOSITIONS)).upos("ADP").deprel("case").head(6);
        b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
            .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(2).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(2);
    }

    // "Vi så dem ved huset ."
    fn object_pronoun_clause(&mut self, b: &mut SentenceBuilder) {
        let verb = self.pick(VERBS);
        let place = self.pick(NOUNS);
        let (subj, _) = *self.pick(SUBJ_PRONOUNS);
        let obj = *self.pick(OBJ_PRONOUNS);
        b.t(&cap(subj)).upos("PRON").lemma(subj).feats("Case=Nom|PronType=Prs").deprel("nsubj").head(2);
        b.t(verb.past).upos("VERB").lemma(verb.lemma)
            .feats("Mood=Ind|Tense=Past|VerbForm=Fin").deprel("root").head(0);
        b.t(obj).upos("PRON").lemma(obj).feats("Case=Acc|PronType=Prs").deprel("obj").head(2);
        b.t(self.pick(PREPOSITIONS)).upos("ADP").deprel("case").head(5);
        b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
            .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(2).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(2);
    }

    // "Hun vil gerne køre til byen ."
    fn infinitive_clause(&mut self, b: &mut SentenceBuilder) {
        let verb = self.pick(VERBS);
        let place = self.pick(NOUNS);
        let (p, _) = *self.pick(SUBJ_PRONOUNS);
        b.t(&cap(p)).upos("PRON").lemma(p).feats("Case=Nom|PronType=Prs").deprel("nsubj").head(2);
        b.t("vil").upos("AUX").lemma("ville").feats("Mood=Ind|Tense=Pres|VerbForm=Fin")
            .deprel("aux").head(4);
        b.t("gerne").upos("ADV").deprel("advmod").head(4);
        b.t(verb.inf).upos("VERB").lemma(verb.lemma).feats("VerbForm=Inf").deprel("root").head(0);
        b.t("til").upos("ADP").deprel("case").head(6);
        b.t(place.sing_def).upos("NOUN").lemma(place.lemma)
            .feats(&noun_feats(place.neuter, true, false)).deprel("obl").head(4).glue();
        b.t(".").upos("PUNCT").deprel("punct").head(4);
    }
}

/// Shortcut: a seeded corpus of `n` synthetic sentences.
pub fn synth_corpus(n: usize, seed: u64) -> Vec<AnnotatedSentence> {
    CorpusGenerator::new(seed).corpus(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clean::clean_corpus;
    use crate::conllu::ParsedCorpus;
    use crate::corrupt::{is_applicable, CorruptionKind};
    use crate::rules::RulePack;

    #[test]
    fn builder_sets_indices_and_raw_text() {
        let s = sent("b1", |b| {
            b.t("Hun").upos("PRON").deprel("nsubj").head(2);
            b.t("løber").upos("VERB").deprel("root").head(0).glue();
            b.t(".").upos("PUNCT").deprel("punct").head(2);
        });
        assert_eq!(s.tokens[0].index, 1);
        assert_eq!(s.tokens[2].index, 3);
        assert_eq!(s.raw_text.as_deref(), Some("Hun løber."));
    }

    #[test]
    fn generator_is_deterministic() {
        let a = synth_corpus(50, 99);
        let b = synth_corpus(50, 99);
        assert_eq!(a, b);
        let c = synth_corpus(50, 100);
        assert_ne!(a, c);
    }

    #[test]
    fn generated_sentences_mostly_survive_cleaning() {
        let corpus = synth_corpus(300, 7);
        let (kept, report) = clean_corpus(&ParsedCorpus::from_sentences(corpus));
        // Duplicates are possible with a small vocabulary; nothing else
        // should reject.
        assert_eq!(report.too_short, 0);
        assert_eq!(report.too_simple, 0);
        assert_eq!(report.char_bounds, 0);
        assert!(kept.len() > 200, "kept only {}", kept.len());
    }

    #[test]
    fn every_kind_has_candidates_somewhere() {
        let corpus = synth_corpus(400, 42);
        let pack = RulePack::default();
        for kind in CorruptionKind::ALL {
            let hits = corpus
                .iter()
                .filter(|s| is_applicable(kind, s, &pack))
                .count();
            assert!(hits > 0, "no candidates for {kind} in 400 sentences");
        }
    }
}
