//! Danish linguistic knowledge as data: swap tables, suffix rules, pronoun
//! case maps, the *ligge*/*lægge* inflection family, and misspelling
//! lexicons. Everything ships with built-in defaults and can be overridden
//! or extended from a plain-text rule file.
//!
//! # Rule file format
//!
//! UTF-8 text, `#` starts a comment, entries are `lhs <TAB> rhs` under a
//! section header:
//!
//! ```text
//! [swap:articles]        # bidirectional surface-form swaps
//! en\tet
//! [suffix:ende_ene]      # match \t replace [\t UPOS,UPOS [\t Feat=Val|...]]
//! ene\tende\tNOUN
//! [lexicon]              # correct \t misspelling (repeat lines for variants)
//! appelsin\tapplesin
//! [pronoun_case]         # subject \t object
//! jeg\tmig
//! [verb_forms]           # no-object form \t object-taking form
//! ligger\tlægger
//! [categories:genitive]  # accepted checker categories, one per line
//! GEN_APOSTROPHE
//! [config]               # named constants
//! js_threshold\t0.01
//! ```

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::conllu::AnnotatedToken;
use crate::error::{Error, Result};

/// Copy the capitalization of `pattern`'s first letter onto `replacement`.
///
/// Sentence-initial corruptions must not introduce a spurious casing error on
/// top of the intended one, so replacements always mirror the first letter.
pub fn match_case(pattern: &str, replacement: &str) -> String {
    let Some(first) = pattern.chars().next() else {
        return replacement.to_string();
    };
    let mut chars = replacement.chars();
    let Some(rfirst) = chars.next() else {
        return String::new();
    };
    if first.is_uppercase() {
        rfirst.to_uppercase().chain(chars).collect()
    } else if first.is_lowercase() {
        rfirst.to_lowercase().chain(chars).collect()
    } else {
        replacement.to_string()
    }
}

/// A bidirectional surface-form swap (case-insensitive match,
/// case-preserving replacement). The mapping is an involution: applying it
/// twice restores the original form modulo case.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SwapTable {
    mapping: BTreeMap<String, String>,
}

impl SwapTable {
    /// Register `a <-> b`. Self-mappings and conflicting re-mappings are
    /// load errors.
    pub fn insert(&mut self, section: &str, a: &str, b: &str) -> Result<()> {
        let a = a.to_lowercase();
        let b = b.to_lowercase();
        if a == b {
            return Err(Error::RuleLoad {
                section: section.to_string(),
                message: format!("entry {a:?} maps to itself"),
            });
        }
        for (k, v) in [(&a, &b), (&b, &a)] {
            if let Some(existing) = self.mapping.get(k) {
                if existing != v {
                    return Err(Error::RuleLoad {
                        section: section.to_string(),
                        message: format!(
                            "{k:?} already maps to {existing:?}; remapping to {v:?} would break the involution"
                        ),
                    });
                }
            }
        }
        self.mapping.insert(a.clone(), b.clone());
        self.mapping.insert(b, a);
        Ok(())
    }

    /// Counterpart of `form`, case-preserved, if the table knows it.
    pub fn swap(&self, form: &str) -> Option<String> {
        self.mapping
            .get(&form.to_lowercase())
            .map(|r| match_case(form, r))
    }

    pub fn contains(&self, form: &str) -> bool {
        self.mapping.contains_key(&form.to_lowercase())
    }

    /// All directed entries (each pair appears twice).
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.mapping.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }
}

/// A suffix rewrite constrained by POS and morphological features.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixRule {
    pub match_suffix: String,
    pub replace_suffix: String,
    /// Accepted UPOS tags; empty means any.
    pub required_upos: BTreeSet<String>,
    /// Features that must all be present with these values.
    pub required_feats: BTreeMap<String, String>,
}

impl SuffixRule {
    pub fn new(match_suffix: &str, replace_suffix: &str) -> Self {
        SuffixRule {
            match_suffix: match_suffix.to_string(),
            replace_suffix: replace_suffix.to_string(),
            required_upos: BTreeSet::new(),
            required_feats: BTreeMap::new(),
        }
    }

    pub fn upos(mut self, tags: &[&str]) -> Self {
        self.required_upos = tags.iter().map(|t| t.to_string()).collect();
        self
    }

    pub fn feat(mut self, name: &str, value: &str) -> Self {
        self.required_feats
            .insert(name.to_string(), value.to_string());
        self
    }

    fn validate(&self, section: &str) -> Result<()> {
        if self.match_suffix.is_empty() {
            return Err(Error::RuleLoad {
                section: section.to_string(),
                message: "empty match suffix".into(),
            });
        }
        if self.match_suffix == self.replace_suffix {
            return Err(Error::RuleLoad {
                section: section.to_string(),
                message: format!("suffix {:?} replaces itself", self.match_suffix),
            });
        }
        Ok(())
    }

    /// True when the token satisfies the POS/feature constraints and the
    /// form ends with the suffix leaving a non-empty stem.
    pub fn matches(&self, token: &AnnotatedToken) -> bool {
        if !self.required_upos.is_empty() && !self.required_upos.contains(&token.upos) {
            return false;
        }
        if !self
            .required_feats
            .iter()
            .all(|(k, v)| token.has_feat(k, v))
        {
            return false;
        }
        self.apply(&token.form).is_some()
    }

    /// Rewrite the suffix, preserving the stem. `None` when the form does
    /// not end with the suffix or the stem would be empty.
    pub fn apply(&self, form: &str) -> Option<String> {
        let lower = form.to_lowercase();
        if !lower.ends_with(&self.match_suffix) {
            return None;
        }
        if lower.chars().count() <= self.match_suffix.chars().count() {
            return None;
        }
        // Suffixes are ASCII, so lowercasing preserved byte offsets; guard
        // the boundary anyway for exotic input.
        let cut = form.len().checked_sub(self.match_suffix.len())?;
        if !form.is_char_boundary(cut) {
            return None;
        }
        Some(format!("{}{}", &form[..cut], self.replace_suffix))
    }
}

/// Subject <-> object personal pronoun mapping. Bijective, with disjoint
/// domains, e.g. *jeg* -> *mig*, *I* -> *jer*.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PronounCaseTable {
    to_object: BTreeMap<String, String>,
    to_subject: BTreeMap<String, String>,
}

impl PronounCaseTable {
    pub fn insert(&mut self, subject: &str, object: &str) -> Result<()> {
        let s = subject.to_lowercase();
        let o = object.to_lowercase();
        let section = "pronoun_case";
        if s == o {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{s:?} maps to itself"),
            });
        }
        if self.to_object.contains_key(&o) || self.to_subject.contains_key(&s) {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{s:?}/{o:?} overlaps the opposite domain"),
            });
        }
        if let Some(prev) = self.to_object.insert(s.clone(), o.clone()) {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{s:?} already mapped to {prev:?}"),
            });
        }
        if let Some(prev) = self.to_subject.insert(o.clone(), s) {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{o:?} already mapped to {prev:?}"),
            });
        }
        Ok(())
    }

    pub fn object_form(&self, subject: &str) -> Option<String> {
        self.to_object
            .get(&subject.to_lowercase())
            .map(|r| match_case(subject, r))
    }

    pub fn subject_form(&self, object: &str) -> Option<String> {
        self.to_subject
            .get(&object.to_lowercase())
            .map(|r| match_case(object, r))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.to_object.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// Which side of the *ligge*/*lægge* family a verb form belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerbFamily {
    /// *ligge* side: grammatical only without a direct object.
    Intransitive,
    /// *lægge* side: grammatical only with a direct object.
    Transitive,
}

/// Paired inflections of the *ligge*/*lægge* family
/// (*ligger* <-> *lægger*, *lå* <-> *lagde*, ...).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerbFormTable {
    pairs: Vec<(String, String)>,
}

impl VerbFormTable {
    /// Register an (intransitive form, transitive form) inflection pair.
    pub fn insert(&mut self, intransitive: &str, transitive: &str) -> Result<()> {
        let a = intransitive.to_lowercase();
        let b = transitive.to_lowercase();
        let section = "verb_forms";
        if a == b {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{a:?} pairs with itself"),
            });
        }
        if self.lookup(&a).is_some() || self.lookup(&b).is_some() {
            return Err(Error::RuleLoad {
                section: section.into(),
                message: format!("{a:?}/{b:?} collides with an existing pair"),
            });
        }
        self.pairs.push((a, b));
        Ok(())
    }

    /// Family membership and the paired counterpart for a form.
    pub fn lookup(&self, form: &str) -> Option<(VerbFamily, String)> {
        let lower = form.to_lowercase();
        for (intr, trans) in &self.pairs {
            if *intr == lower {
                return Some((VerbFamily::Intransitive, match_case(form, trans)));
            }
            if *trans == lower {
                return Some((VerbFamily::Transitive, match_case(form, intr)));
            }
        }
        None
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }
}

/// Attested misspellings per correct surface form.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MisspellingLexicon {
    entries: BTreeMap<String, Vec<String>>,
}

impl MisspellingLexicon {
    pub fn insert(&mut self, correct: &str, misspelling: &str) -> Result<()> {
        let key = correct.to_lowercase();
        let wrong = misspelling.to_lowercase();
        if key == wrong {
            return Err(Error::RuleLoad {
                section: "lexicon".into(),
                message: format!("misspelling of {correct:?} equals the correct form"),
            });
        }
        let variants = self.entries.entry(key).or_default();
        if !variants.contains(&wrong) {
            variants.push(wrong);
        }
        Ok(())
    }

    /// Misspelling variants for a lowercased surface form.
    pub fn variants(&self, form: &str) -> Option<&[String]> {
        self.entries
            .get(&form.to_lowercase())
            .map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &[String])> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }
}

/// Names of the built-in swap tables.
pub mod swaps {
    pub const ARTICLES: &str = "articles";
    pub const NOGLE_NOGEN: &str = "nogle_nogen";
    pub const FAAR_FOR: &str = "faar_for";
}

/// Names of the built-in suffix rule groups.
pub mod suffix_groups {
    pub const SUFFIX_DETERMINER: &str = "suffix_determiner";
    pub const ENDE_ENE: &str = "ende_ene";
    pub const R_PROBLEM_VERB: &str = "r_problem_verb";
    pub const R_PROBLEM_NOUN: &str = "r_problem_noun";
    pub const R_PROBLEM_ADJECTIVE: &str = "r_problem_adjective";
    pub const R_PROBLEM_ADJECTIVE_REVERSE: &str = "r_problem_adjective_reverse";
}

/// The full bundle of linguistic rules plus named configuration constants.
/// Immutable after load; shareable across corruption workers.
#[derive(Debug, Clone, PartialEq)]
pub struct RulePack {
    pub swaps: BTreeMap<String, SwapTable>,
    pub suffix_rules: BTreeMap<String, Vec<SuffixRule>>,
    pub pronoun_case: PronounCaseTable,
    pub verb_forms: VerbFormTable,
    pub lexicon: MisspellingLexicon,
    /// Accepted checker categories per corruption kind identifier.
    pub categories: BTreeMap<String, BTreeSet<String>>,
    /// Train/test Jensen-Shannon divergence ceiling.
    pub js_threshold: f64,
    /// Enable the -er -> -ere direction of the adjective r-problem. Off by
    /// default: it frequently produces a valid comparative.
    pub adjective_r_reverse: bool,
}

impl Default for RulePack {
    fn default() -> Self {
        builtin_pack()
    }
}

impl RulePack {
    pub fn swap_table(&self, name: &str) -> Option<&SwapTable> {
        self.swaps.get(name)
    }

    pub fn suffix_group(&self, name: &str) -> &[SuffixRule] {
        self.suffix_rules
            .get(name)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Deterministic dump of every table and constant, for digesting into
    /// run manifests.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (name, table) in &self.swaps {
            let _ = writeln!(out, "[swap:{name}]");
            for (a, b) in table.entries() {
                let _ = writeln!(out, "{a}\t{b}");
            }
        }
        for (name, rules) in &self.suffix_rules {
            let _ = writeln!(out, "[suffix:{name}]");
            for r in rules {
                let upos: Vec<&str> = r.required_upos.iter().map(String::as_str).collect();
                let feats: Vec<String> = r
                    .required_feats
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.match_suffix,
                    r.replace_suffix,
                    upos.join(","),
                    feats.join("|")
                );
            }
        }
        let _ = writeln!(out, "[pronoun_case]");
        for (s, o) in self.pronoun_case.pairs() {
            let _ = writeln!(out, "{s}\t{o}");
        }
        let _ = writeln!(out, "[verb_forms]");
        for (a, b) in self.verb_forms.pairs() {
            let _ = writeln!(out, "{a}\t{b}");
        }
        let _ = writeln!(out, "[lexicon]");
        for (k, vs) in self.lexicon.entries() {
            for v in vs {
                let _ = writeln!(out, "{k}\t{v}");
            }
        }
        for (kind, cats) in &self.categories {
            let _ = writeln!(out, "[categories:{kind}]");
            for c in cats {
                let _ = writeln!(out, "{c}");
            }
        }
        let _ = writeln!(out, "[config]");
        let _ = writeln!(out, "adjective_r_reverse\t{}", self.adjective_r_reverse);
        let _ = writeln!(out, "js_threshold\t{}", self.js_threshold);
        out
    }
}

/// Built-in defaults covering standard Danish grammar.
///
/// The misspelling lexicon is a small illustrative sample of commonly
/// misspelled Danish words, not an authoritative error list; supply a
/// `[lexicon]` section to replace or extend it.
fn builtin_pack() -> RulePack {
    let mut pack = RulePack {
        swaps: BTreeMap::new(),
        suffix_rules: BTreeMap::new(),
        pronoun_case: PronounCaseTable::default(),
        verb_forms: VerbFormTable::default(),
        lexicon: MisspellingLexicon::default(),
        categories: BTreeMap::new(),
        js_threshold: 0.01,
        adjective_r_reverse: false,
    };

    let mut articles = SwapTable::default();
    articles.insert(swaps::ARTICLES, "en", "et").unwrap();
    pack.swaps.insert(swaps::ARTICLES.into(), articles);

    let mut nogle = SwapTable::default();
    nogle.insert(swaps::NOGLE_NOGEN, "nogle", "nogen").unwrap();
    pack.swaps.insert(swaps::NOGLE_NOGEN.into(), nogle);

    let mut faar = SwapTable::default();
    faar.insert(swaps::FAAR_FOR, "får", "for").unwrap();
    pack.swaps.insert(swaps::FAAR_FOR.into(), faar);

    pack.suffix_rules.insert(
        suffix_groups::SUFFIX_DETERMINER.into(),
        vec![
            SuffixRule::new("en", "et")
                .upos(&["NOUN"])
                .feat("Definite", "Def")
                .feat("Number", "Sing"),
            SuffixRule::new("et", "en")
                .upos(&["NOUN"])
                .feat("Definite", "Def")
                .feat("Number", "Sing"),
        ],
    );
    pack.suffix_rules.insert(
        suffix_groups::ENDE_ENE.into(),
        vec![
            SuffixRule::new("ene", "ende").upos(&["NOUN"]),
            SuffixRule::new("ende", "ene").upos(&["VERB", "ADJ"]),
        ],
    );
    pack.suffix_rules.insert(
        suffix_groups::R_PROBLEM_VERB.into(),
        vec![
            SuffixRule::new("rer", "re")
                .upos(&["VERB"])
                .feat("Tense", "Pres"),
            SuffixRule::new("re", "rer")
                .upos(&["VERB"])
                .feat("VerbForm", "Inf"),
        ],
    );
    pack.suffix_rules.insert(
        suffix_groups::R_PROBLEM_NOUN.into(),
        vec![
            SuffixRule::new("erne", "ene")
                .upos(&["NOUN"])
                .feat("Number", "Plur")
                .feat("Definite", "Def"),
            SuffixRule::new("ere", "er")
                .upos(&["NOUN"])
                .feat("Number", "Plur")
                .feat("Definite", "Ind"),
            SuffixRule::new("eren", "erne")
                .upos(&["NOUN"])
                .feat("Number", "Sing")
                .feat("Definite", "Def"),
        ],
    );
    pack.suffix_rules.insert(
        suffix_groups::R_PROBLEM_ADJECTIVE.into(),
        vec![SuffixRule::new("ere", "er")
            .upos(&["ADJ"])
            .feat("Degree", "Cmp")],
    );
    pack.suffix_rules.insert(
        suffix_groups::R_PROBLEM_ADJECTIVE_REVERSE.into(),
        vec![SuffixRule::new("er", "ere")
            .upos(&["ADJ"])
            .feat("Degree", "Pos")],
    );

    for (s, o) in [
        ("jeg", "mig"),
        ("du", "dig"),
        ("han", "ham"),
        ("hun", "hende"),
        ("vi", "os"),
        ("i", "jer"),
        ("de", "dem"),
    ] {
        pack.pronoun_case.insert(s, o).unwrap();
    }

    for (intr, trans) in [
        ("ligge", "lægge"),
        ("ligger", "lægger"),
        ("lå", "lagde"),
        ("ligget", "lagt"),
        ("liggende", "læggende"),
    ] {
        pack.verb_forms.insert(intr, trans).unwrap();
    }

    for (correct, wrong) in [
        ("adresse", "addresse"),
        ("alligevel", "aligevel"),
        ("alligevel", "alligvel"),
        ("altså", "alså"),
        ("appelsin", "applesin"),
        ("chokolade", "chokolate"),
        ("desværre", "desvære"),
        ("forskellige", "forskillige"),
        ("hyggelig", "hygelig"),
        ("interessant", "interresant"),
        ("interessant", "intersant"),
        ("kærlighed", "kærlihed"),
        ("lejlighed", "lejlihed"),
        ("ordentlig", "ordenlig"),
        ("overraskelse", "overaskelse"),
        ("parallel", "paralel"),
        ("professionel", "proffesionel"),
        ("restaurant", "resturant"),
        ("sandsynligvis", "sansynligvis"),
        ("selvfølgelig", "selfølgelig"),
        ("succes", "sucess"),
        ("terrasse", "terasse"),
        ("virkelig", "virklig"),
    ] {
        pack.lexicon.insert(correct, wrong).unwrap();
    }

    pack
}

/// Load the built-in pack, overlaying entries from a rule file when given.
pub fn load_rule_pack(path: Option<&Path>) -> Result<RulePack> {
    let mut pack = builtin_pack();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path)?;
        merge_rule_file(&mut pack, &text)?;
    }
    Ok(pack)
}

/// Merge a rule file into an existing pack. Entries extend the matching
/// table; invariants are re-validated on every insertion.
pub fn merge_rule_file(pack: &mut RulePack, text: &str) -> Result<()> {
    let mut section: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim_end();
        if line.trim().is_empty() {
            continue;
        }
        if let Some(name) = line.trim().strip_prefix('[') {
            let name = name.strip_suffix(']').ok_or_else(|| Error::Parse {
                line: lineno + 1,
                message: format!("unterminated section header {line:?}"),
            })?;
            section = Some(validate_section(name)?.to_string());
            continue;
        }
        let Some(section) = section.as_deref() else {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "entry before any section header".into(),
            });
        };
        merge_entry(pack, section, line, lineno + 1)?;
    }
    Ok(())
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn validate_section(name: &str) -> Result<&str> {
    let known = name == "lexicon"
        || name == "pronoun_case"
        || name == "verb_forms"
        || name == "config"
        || name.strip_prefix("swap:").is_some_and(|n| !n.is_empty())
        || name.strip_prefix("suffix:").is_some_and(|n| !n.is_empty())
        || name
            .strip_prefix("categories:")
            .is_some_and(|n| !n.is_empty());
    if known {
        Ok(name)
    } else {
        Err(Error::RuleLoad {
            section: name.to_string(),
            message: "unknown section name".into(),
        })
    }
}

fn merge_entry(pack: &mut RulePack, section: &str, line: &str, lineno: usize) -> Result<()> {
    let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
    let two = |what: &str| -> Result<(&str, &str)> {
        if cols.len() < 2 || cols[0].is_empty() || cols[1].is_empty() {
            Err(Error::Parse {
                line: lineno,
                message: format!("{what} entry needs `lhs<TAB>rhs`"),
            })
        } else {
            Ok((cols[0], cols[1]))
        }
    };

    if let Some(name) = section.strip_prefix("swap:") {
        let (a, b) = two("swap")?;
        return pack.swaps.entry(name.to_string()).or_default().insert(
            section, a, b,
        );
    }
    if let Some(name) = section.strip_prefix("suffix:") {
        let (m, r) = two("suffix")?;
        let mut rule = SuffixRule::new(m, r);
        if let Some(upos) = cols.get(2).filter(|c| !c.is_empty()) {
            rule.required_upos = upos.split(',').map(|t| t.trim().to_string()).collect();
        }
        if let Some(feats) = cols.get(3).filter(|c| !c.is_empty()) {
            for item in feats.split('|') {
                let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: format!("feature constraint {item:?} is not Name=Value"),
                })?;
                rule.required_feats
                    .insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        rule.validate(section)?;
        pack.suffix_rules
            .entry(name.to_string())
            .or_default()
            .push(rule);
        return Ok(());
    }
    if let Some(kind) = section.strip_prefix("categories:") {
        if cols.is_empty() || cols[0].is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "empty category entry".into(),
            });
        }
        pack.categories
            .entry(kind.to_string())
            .or_default()
            .insert(cols[0].to_string());
        return Ok(());
    }
    match section {
        "lexicon" => {
            let (c, w) = two("lexicon")?;
            pack.lexicon.insert(c, w)
        }
        "pronoun_case" => {
            let (s, o) = two("pronoun_case")?;
            pack.pronoun_case.insert(s, o)
        }
        "verb_forms" => {
            let (a, b) = two("verb_forms")?;
            pack.verb_forms.insert(a, b)
        }
        "config" => {
            let (key, value) = two("config")?;
            match key {
                "js_threshold" => {
                    pack.js_threshold = value.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        message: format!("js_threshold {value:?} is not a number"),
                    })?;
                }
                "adjective_r_reverse" => {
                    pack.adjective_r_reverse =
                        value.parse().map_err(|_| Error::Parse {
                            line: lineno,
                            message: format!("adjective_r_reverse {value:?} is not a bool"),
                        })?;
                }
                other => {
                    return Err(Error::RuleLoad {
                        section: section.to_string(),
                        message: format!("unknown config key {other:?}"),
                    })
                }
            }
            Ok(())
        }
        other => Err(Error::RuleLoad {
            section: other.to_string(),
            message: "unknown section name".into(),
        }),
    }
}
