//! Synset to lemma store.
//!
//! The on-disk format is UTF-8 TSV with four columns:
//!
//! ```text
//! # lang  pos  offset    lemmas
//! en      n    10287213  man|adult_male
//! ```
//!
//! `pos` is one of `n`, `v`, `a`, `r`. Lines starting with `#` and blank
//! lines are ignored. The first lemma of a row is the preferred surface form.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use crate::model::{PartOfSpeech, SynsetRef};

const BUNDLED: &str = include_str!("../data/mini-lexicon.tsv");

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("cannot read lexicon {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

type Key = (String, PartOfSpeech, u32);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<Key, Vec<String>>,
    reverse: BTreeMap<(String, PartOfSpeech, String), Vec<u32>>,
}

/// Lemma matching ignores case and treats spaces and underscores alike.
fn normalize(lemma: &str) -> String {
    lemma.trim().to_lowercase().replace(' ', "_")
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// The small lexicon shipped with the crate. Offsets are local to this
    /// project and do not follow any particular Wordnet release.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled lexicon is well formed")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lex = Self::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let row = raw.trim_end_matches('\r');
            if row.trim().is_empty() || row.trim_start().starts_with('#') {
                continue;
            }
            let malformed = |message: String| LexiconError::Malformed { line, message };
            let cols: Vec<&str> = row.split('\t').collect();
            if cols.len() != 4 {
                return Err(malformed(format!("expected 4 columns, found {}", cols.len())));
            }
            let lang = cols[0].trim();
            if lang.is_empty() {
                return Err(malformed("empty language tag".into()));
            }
            let pos = PartOfSpeech::from_letter(cols[1].trim()).ok_or_else(|| malformed(format!("bad part of speech `{}`", cols[1].trim())))?;
            let offset: u64 = cols[2]
                .trim()
                .parse()
                .map_err(|_| malformed(format!("offset `{}` is not a number", cols[2].trim())))?;
            let syn = SynsetRef::new(pos, offset).map_err(|e| malformed(e.to_string()))?;
            let lemmas: Vec<&str> = cols[3].split('|').map(str::trim).collect();
            if lemmas.iter().any(|l| l.is_empty()) {
                return Err(malformed("empty lemma".into()));
            }
            for lemma in lemmas {
                lex.insert(lang, syn, lemma);
            }
        }
        Ok(lex)
    }

    /// Adds one lemma, keeping first-occurrence order and skipping repeats.
    pub fn insert(&mut self, lang: &str, syn: SynsetRef, lemma: &str) {
        let list = self
            .entries
            .entry((lang.to_string(), syn.pos, syn.offset))
            .or_default();
        if list.iter().any(|l| l == lemma) {
            return;
        }
        list.push(lemma.to_string());
        let offsets = self
            .reverse
            .entry((lang.to_string(), syn.pos, normalize(lemma)))
            .or_default();
        if let Err(at) = offsets.binary_search(&syn.offset) {
            offsets.insert(at, syn.offset);
        }
    }

    /// `None` when the synset is absent for that language.
    pub fn lookup(&self, lang: &str, syn: SynsetRef) -> Option<&[String]> {
        self.entries
            .get(&(lang.to_string(), syn.pos, syn.offset))
            .map(Vec::as_slice)
    }

    pub fn preferred(&self, lang: &str, syn: SynsetRef) -> Option<&str> {
        self.lookup(lang, syn).map(|l| l[0].as_str())
    }

    /// Offsets whose lemma list holds `lemma`, ascending.
    pub fn reverse_lookup(&self, lang: &str, pos: PartOfSpeech, lemma: &str) -> Vec<u32> {
        self.reverse
            .get(&(lang.to_string(), pos, normalize(lemma)))
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, SynsetRef, &[String])> {
        self.entries.iter().map(|((lang, pos, offset), lemmas)| {
            (
                lang.as_str(),
                SynsetRef { pos: *pos, offset: *offset },
                lemmas.as_slice(),
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row() {
        let lex = Lexicon::parse("en\tn\t10287213\tman|adult_male\n").unwrap();
        assert_eq!(
            lex.lookup("en", SynsetRef::noun(10287213)).unwrap(),
            ["man", "adult_male"]
        );
        assert_eq!(lex.lookup("en", SynsetRef::noun(1)), None);
        assert_eq!(lex.lookup("en", SynsetRef::verb(10287213)), None);
    }

    #[test]
    fn empty_and_comments() {
        assert!(Lexicon::parse("").unwrap().is_empty());
        assert!(Lexicon::parse("# nothing\n\n  \n").unwrap().is_empty());
    }

    #[test]
    fn malformed_rows_report_their_line() {
        for (text, line) in [
            ("# h\nen\tx\t1\tfoo\n", 2),
            ("en\tn\tabc\tfoo\n", 1),
            ("en\tn\t1\n", 1),
            ("\n\nen\tn\t1\tfoo|\n", 3),
            ("en\tn\t123456789\tfoo\n", 1),
        ] {
            match Lexicon::parse(text) {
                Err(LexiconError::Malformed { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn duplicate_rows_merge_in_order() {
        let lex = Lexicon::parse("en\tn\t5\tb|a\nen\tn\t5\ta|c\n").unwrap();
        assert_eq!(lex.lookup("en", SynsetRef::noun(5)).unwrap(), ["b", "a", "c"]);
    }

    #[test]
    fn reverse_is_normalized() {
        let lex = Lexicon::bundled();
        assert_eq!(lex.reverse_lookup("en", PartOfSpeech::Verb, "eat"), [1168468]);
        assert_eq!(
            lex.reverse_lookup("en", PartOfSpeech::Noun, "adult male"),
            lex.reverse_lookup("en", PartOfSpeech::Noun, "Adult_Male")
        );
        assert_eq!(lex.reverse_lookup("en", PartOfSpeech::Noun, "adult_male"), [10287213]);
        assert!(lex.reverse_lookup("en", PartOfSpeech::Noun, "zeppelin").is_empty());
    }

    #[test]
    fn bundled_content() {
        let lex = Lexicon::bundled();
        assert_eq!(
            lex.lookup("en", SynsetRef::noun(10287213)).unwrap(),
            ["man", "adult_male"]
        );
        let fr_only_en = lex
            .entries()
            .find(|(lang, syn, _)| *lang == "en" && lex.lookup("fr", *syn).is_none())
            .expect("some concept lacks a French mapping");
        assert_eq!(lex.lookup("fr", fr_only_en.1), None);
        let en = lex.entries().filter(|e| e.0 == "en").count();
        let fr = lex.entries().filter(|e| e.0 == "fr").count();
        assert!(en >= 60, "{en}");
        assert!(fr >= 20, "{fr}");
        assert!(lex.reverse_lookup("en", PartOfSpeech::Noun, "bank").len() > 1);
    }

    #[test]
    fn reverse_inverts_entries() {
        let lex = Lexicon::bundled();
        for (lang, syn, lemmas) in lex.entries() {
            for lemma in lemmas {
                assert!(lex.reverse_lookup(lang, syn.pos, lemma).contains(&syn.offset));
            }
        }
    }
}
