//! CoNLL-U ingestion and surface rendering.
//!
//! Sentences arrive as ten-column tab-separated blocks. Only the columns the
//! corruptors consume are retained: surface form, lemma, universal POS tag,
//! morphological features, head and dependency relation, plus the
//! `SpaceAfter=No` flag from the MISC column, which drives surface rendering.
//!
//! Blocks containing multiword-token ranges (ids like `3-4`) or empty nodes
//! (ids like `3.1`) are dropped whole and counted as structural rejects, as
//! are blocks whose rendered text disagrees with their `# text` comment.

use std::collections::BTreeMap;
use std::io::BufRead;

use crate::error::{Error, Result};

/// One syntactic word of an annotated sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedToken {
    /// 1-based position within the sentence.
    pub index: usize,
    /// Surface form, never empty.
    pub form: String,
    pub lemma: String,
    /// Universal POS tag (`NOUN`, `VERB`, ...).
    pub upos: String,
    /// Morphological features, e.g. `Number -> Plur`, `Definite -> Def`.
    pub feats: BTreeMap<String, String>,
    /// Head token index; 0 means root.
    pub head: usize,
    /// Dependency relation to the head.
    pub deprel: String,
    /// False when MISC carried `SpaceAfter=No`.
    pub space_after: bool,
}

impl AnnotatedToken {
    /// Feature lookup by name.
    pub fn feat(&self, name: &str) -> Option<&str> {
        self.feats.get(name).map(String::as_str)
    }

    /// True when the feature is present with exactly this value.
    pub fn has_feat(&self, name: &str, value: &str) -> bool {
        self.feat(name) == Some(value)
    }

    /// Dependency relation with any subtype stripped (`nsubj:pass` -> `nsubj`).
    pub fn base_deprel(&self) -> &str {
        self.deprel.split(':').next().unwrap_or(&self.deprel)
    }
}

/// A dependency-annotated sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedSentence {
    /// Corpus sentence id (from `# sent_id`, or synthesized when absent).
    pub id: String,
    pub tokens: Vec<AnnotatedToken>,
    /// Original `# text` comment when present.
    pub raw_text: Option<String>,
}

impl AnnotatedSentence {
    /// Token by 1-based index.
    pub fn token(&self, index: usize) -> Option<&AnnotatedToken> {
        self.tokens.get(index.checked_sub(1)?)
    }

    /// True when any dependent of `head_index` carries this base deprel.
    pub fn has_dependent(&self, head_index: usize, base_deprel: &str) -> bool {
        self.tokens
            .iter()
            .any(|t| t.head == head_index && t.base_deprel() == base_deprel)
    }
}

/// Parse result: surviving sentences plus the count of dropped blocks.
#[derive(Debug, Clone, Default)]
pub struct ParsedCorpus {
    pub sentences: Vec<AnnotatedSentence>,
    /// Blocks dropped for multiword ranges, empty nodes, or `# text` mismatch.
    pub structural_rejects: usize,
}

impl ParsedCorpus {
    /// Wrap already-parsed sentences (no structural rejects).
    pub fn from_sentences(sentences: Vec<AnnotatedSentence>) -> Self {
        ParsedCorpus {
            sentences,
            structural_rejects: 0,
        }
    }
}

/// Render the surface text: forms concatenated, with a single space after
/// every token whose `space_after` is true except the last. Never produces
/// trailing whitespace.
pub fn render_text(sentence: &AnnotatedSentence) -> String {
    render_forms(
        sentence.tokens.iter().map(|t| t.form.as_str()),
        sentence.tokens.iter().map(|t| t.space_after),
    )
}

/// Rendering over raw form/space pairs; used when materializing corruptions.
pub(crate) fn render_forms<'a>(
    forms: impl Iterator<Item = &'a str>,
    space_after: impl Iterator<Item = bool>,
) -> String {
    let mut forms = forms.peekable();
    let mut spaces = space_after;
    let mut out = String::new();
    while let Some(form) = forms.next() {
        out.push_str(form);
        let space = spaces.next().unwrap_or(true);
        if space && forms.peek().is_some() {
            out.push(' ');
        }
    }
    out
}

/// Parse a CoNLL-U stream into sentences.
///
/// A blank line terminates a sentence block; `#` lines are comments, of which
/// `# sent_id = ...` and `# text = ...` are honored. Malformed token lines
/// (wrong column count, unparseable indices, heads out of range) are errors
/// naming the line number; structurally unusable blocks are silently dropped
/// and counted.
pub fn parse_conllu<R: BufRead>(reader: R) -> Result<ParsedCorpus> {
    let mut parser = BlockParser::default();
    for (lineno, line) in reader.lines().enumerate() {
        parser.line(lineno + 1, &line?)?;
    }
    parser.finish()
}

/// Convenience wrapper over [`parse_conllu`] for in-memory sources.
pub fn parse_conllu_str(source: &str) -> Result<ParsedCorpus> {
    parse_conllu(source.as_bytes())
}

#[derive(Default)]
struct BlockParser {
    corpus: ParsedCorpus,
    sent_id: Option<String>,
    raw_text: Option<String>,
    tokens: Vec<AnnotatedToken>,
    // Set when the block contains a multiword range or empty node.
    drop_block: bool,
    seen_any: bool,
    block_ordinal: usize,
    first_line: usize,
}

impl BlockParser {
    fn line(&mut self, lineno: usize, line: &str) -> Result<()> {
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() {
            return self.end_block(lineno);
        }
        self.seen_any = true;
        if self.tokens.is_empty() && !self.drop_block && self.first_line == 0 {
            self.first_line = lineno;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("sent_id") {
                if let Some(v) = value.trim_start().strip_prefix('=') {
                    self.sent_id = Some(v.trim().to_string());
                }
            } else if let Some(value) = comment.trim().strip_prefix("text") {
                if let Some(v) = value.trim_start().strip_prefix('=') {
                    self.raw_text = Some(v.trim().to_string());
                }
            }
            return Ok(());
        }
        self.token_line(lineno, trimmed)
    }

    fn token_line(&mut self, lineno: usize, line: &str) -> Result<()> {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 10 tab-separated columns, found {}", cols.len()),
            });
        }
        let id = cols[0];
        if id.contains('-') || id.contains('.') {
            // Multiword range or empty node: reject the whole block.
            self.drop_block = true;
            return Ok(());
        }
        if self.drop_block {
            return Ok(());
        }
        let index: usize = id.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("unparseable token id {id:?}"),
        })?;
        if index != self.tokens.len() + 1 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("token id {index} out of sequence"),
            });
        }
        if cols[1].is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "empty surface form".into(),
            });
        }
        let head: usize = cols[6].parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("unparseable head index {:?}", cols[6]),
        })?;
        let feats = parse_feats(cols[5]);
        let space_after = !cols[9]
            .split('|')
            .any(|item| item.trim() == "SpaceAfter=No");
        self.tokens.push(AnnotatedToken {
            index,
            form: cols[1].to_string(),
            lemma: cols[2].to_string(),
            upos: cols[3].to_string(),
            feats,
            head,
            deprel: cols[7].to_string(),
            space_after,
        });
        Ok(())
    }

    fn end_block(&mut self, lineno: usize) -> Result<()> {
        if !self.seen_any {
            return Ok(());
        }
        self.block_ordinal += 1;
        if self.drop_block {
            self.corpus.structural_rejects += 1;
        } else if !self.tokens.is_empty() {
            let n = self.tokens.len();
            for t in &self.tokens {
                if t.head > n {
                    return Err(Error::Parse {
                        line: lineno.saturating_sub(1),
                        message: format!(
                            "token {} has head {} but the sentence has {} tokens",
                            t.index, t.head, n
                        ),
                    });
                }
            }
            let id = self
                .sent_id
                .take()
                .unwrap_or_else(|| format!("s{}", self.block_ordinal));
            let sentence = AnnotatedSentence {
                id,
                tokens: std::mem::take(&mut self.tokens),
                raw_text: self.raw_text.take(),
            };
            match &sentence.raw_text {
                Some(text) if render_text(&sentence) != *text => {
                    // Rendering disagrees with the source text: reject.
                    self.corpus.structural_rejects += 1;
                }
                _ => self.corpus.sentences.push(sentence),
            }
        }
        self.sent_id = None;
        self.raw_text = None;
        self.tokens.clear();
        self.drop_block = false;
        self.seen_any = false;
        self.first_line = 0;
        Ok(())
    }

    fn finish(mut self) -> Result<ParsedCorpus> {
        self.end_block(usize::MAX)?;
        Ok(self.corpus)
    }
}

fn parse_feats(column: &str) -> BTreeMap<String, String> {
    let mut feats = BTreeMap::new();
    if column == "_" || column.is_empty() {
        return feats;
    }
    for item in column.split('|') {
        if let Some((name, value)) = item.split_once('=') {
            feats.insert(name.to_string(), value.to_string());
        }
    }
    feats
}

/// Serialize a sentence back to a CoNLL-U block (including the trailing
/// blank line). Columns we do not model are written as `_`.
pub fn to_conllu(sentence: &AnnotatedSentence) -> String {
    let mut out = String::new();
    out.push_str(&format!("# sent_id = {}\n", sentence.id));
    out.push_str(&format!("# text = {}\n", render_text(sentence)));
    for t in &sentence.tokens {
        let feats = if t.feats.is_empty() {
            "_".to_string()
        } else {
            t.feats
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join("|")
        };
        let misc = if t.space_after { "_" } else { "SpaceAfter=No" };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t{}\n",
            t.index, t.form, t.lemma, t.upos, feats, t.head, t.deprel, misc
        ));
    }
    out.push('\n');
    out
}

/// Serialize a whole corpus (one block per sentence).
pub fn corpus_to_conllu(sentences: &[AnnotatedSentence]) -> String {
    sentences.iter().map(to_conllu).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE_TOKENS: &str = "\
# sent_id = a1
# text = Hun løber.
1\tHun\thun\tPRON\t_\tCase=Nom\t2\tnsubj\t_\t_
2\tløber\tløbe\tVERB\t_\tTense=Pres\t0\troot\t_\tSpaceAfter=No
3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
";

    #[test]
    fn parses_three_token_block() {
        let corpus = parse_conllu_str(THREE_TOKENS).unwrap();
        assert_eq!(corpus.sentences.len(), 1);
        assert_eq!(corpus.structural_rejects, 0);
        let s = &corpus.sentences[0];
        assert_eq!(s.id, "a1");
        assert_eq!(s.tokens.len(), 3);
        assert_eq!(s.tokens[0].form, "Hun");
        assert_eq!(s.tokens[1].lemma, "løbe");
        assert_eq!(s.tokens[1].feat("Tense"), Some("Pres"));
        assert!(!s.tokens[1].space_after);
        assert_eq!(s.tokens[2].head, 2);
        assert_eq!(s.raw_text.as_deref(), Some("Hun løber."));
    }

    #[test]
    fn multiword_range_drops_sentence() {
        let src = "\
1\tVil\tville\tAUX\t_\t_\t0\troot\t_\t_
2-3\tdudet\t_\t_\t_\t_\t_\t_\t_\t_
2\tdu\tdu\tPRON\t_\t_\t1\tnsubj\t_\t_
3\tdet\tden\tPRON\t_\t_\t1\tobj\t_\t_
";
        let corpus = parse_conllu_str(src).unwrap();
        assert!(corpus.sentences.is_empty());
        assert_eq!(corpus.structural_rejects, 1);
    }

    #[test]
    fn empty_node_drops_sentence() {
        let src = "\
1\tJa\tja\tINTJ\t_\t_\t0\troot\t_\t_
1.1\tx\tx\tVERB\t_\t_\t_\t_\t_\t_
";
        let corpus = parse_conllu_str(src).unwrap();
        assert!(corpus.sentences.is_empty());
        assert_eq!(corpus.structural_rejects, 1);
    }

    #[test]
    fn two_blocks_give_two_sentences() {
        let src = "\
1\tJa\tja\tINTJ\t_\t_\t0\troot\t_\t_

1\tNej\tnej\tINTJ\t_\t_\t0\troot\t_\t_
";
        let corpus = parse_conllu_str(src).unwrap();
        assert_eq!(corpus.sentences.len(), 2);
        // Missing sent_id comments synthesize sequential ids.
        assert_eq!(corpus.sentences[0].id, "s1");
        assert_eq!(corpus.sentences[1].id, "s2");
    }

    #[test]
    fn wrong_column_count_names_line() {
        let src = "1\tJa\tja\tINTJ\t_\t_\t0\troot\t_\n";
        let err = parse_conllu_str(src).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn head_out_of_range_is_error() {
        let src = "1\tJa\tja\tINTJ\t_\t_\t4\troot\t_\t_\n";
        assert!(matches!(
            parse_conllu_str(src),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn text_mismatch_is_structural_reject() {
        let src = "\
# text = Noget helt andet
1\tJa\tja\tINTJ\t_\t_\t0\troot\t_\t_
";
        let corpus = parse_conllu_str(src).unwrap();
        assert!(corpus.sentences.is_empty());
        assert_eq!(corpus.structural_rejects, 1);
    }

    #[test]
    fn render_inserts_single_spaces() {
        let corpus = parse_conllu_str(THREE_TOKENS).unwrap();
        assert_eq!(render_text(&corpus.sentences[0]), "Hun løber.");
    }

    #[test]
    fn render_single_token() {
        let src = "1\tJa\tja\tINTJ\t_\t_\t0\troot\t_\t_\n";
        let corpus = parse_conllu_str(src).unwrap();
        assert_eq!(render_text(&corpus.sentences[0]), "Ja");
    }

    #[test]
    fn render_glued_punctuation() {
        let src = "\
1\t(\t(\tPUNCT\t_\t_\t0\troot\t_\tSpaceAfter=No
2\t)\t)\tPUNCT\t_\t_\t1\tpunct\t_\t_
";
        let corpus = parse_conllu_str(src).unwrap();
        assert_eq!(render_text(&corpus.sentences[0]), "()");
    }

    #[test]
    fn serialize_then_parse_round_trips() {
        let corpus = parse_conllu_str(THREE_TOKENS).unwrap();
        let text = corpus_to_conllu(&corpus.sentences);
        let reparsed = parse_conllu_str(&text).unwrap();
        assert_eq!(reparsed.sentences, corpus.sentences);
    }
}
