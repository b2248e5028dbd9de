//! English to STON for simple clauses of the shape
//!
//! ```text
//! [Det] Adj* Noun [will] Verb [Det] Adj* Noun [Prep [Det] Adj* Noun]
//! ```
//!
//! Words are mapped to synsets through [`Lexicon::reverse_lookup`]. There is
//! no named-entity handling: every content word must be in the lexicon.

use std::fmt;

use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::model::*;
use crate::realize::adposition_word;
use crate::realize::morph::{plural, singular_candidates, verb_forms, verb_stem_candidates};

const LANG: &str = "en";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("PATTERN_MISMATCH: {0}")]
    PatternMismatch(String),
    #[error("UNKNOWN_WORD: `{0}` is not in the lexicon")]
    UnknownWord(String),
    #[error("AMBIGUOUS_SENSE: `{token}` has senses {offsets:?}")]
    AmbiguousSense { token: String, offsets: Vec<u32> },
}

impl EncodeError {
    pub fn code(&self) -> &'static str {
        match self {
            EncodeError::PatternMismatch(_) => "PATTERN_MISMATCH",
            EncodeError::UnknownWord(_) => "UNKNOWN_WORD",
            EncodeError::AmbiguousSense { .. } => "AMBIGUOUS_SENSE",
        }
    }
}

/// What to do when a word has several senses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SensePolicy {
    /// Take the lowest offset and leave a note.
    #[default]
    LowestOffset,
    /// Fail with [`EncodeError::AmbiguousSense`].
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoded {
    pub document: Document,
    /// Warnings such as sense choices made by the tie-break.
    pub notes: Vec<String>,
}

/// Encodes one sentence into a fresh document.
pub fn encode(sentence: &str, lex: &Lexicon) -> Result<Encoded, EncodeError> {
    let mut encoder = Encoder::new(lex);
    encoder.push(sentence)?;
    Ok(encoder.finish())
}

/// Accumulates several sentences into one document, keeping ids unique.
#[derive(Debug)]
pub struct Encoder<'a> {
    lex: &'a Lexicon,
    policy: SensePolicy,
    doc: Document,
    notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VerbForm {
    Base,
    Third,
    Past,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Reading {
    Det { definite: bool },
    Prep(AdpositionType),
    Will,
    Noun { lemma: String, plural: bool },
    Adj { lemma: String },
    Verb { lemma: String, form: VerbForm },
    /// Stands for any open-class word during the shape check.
    Unknown,
}

#[derive(Debug, Clone)]
struct Np<'t> {
    definite: bool,
    adjectives: Vec<(&'t str, String)>,
    noun: (&'t str, String),
    plural: bool,
}

#[derive(Debug, Clone)]
struct Clause<'t> {
    subject: Np<'t>,
    verb: (&'t str, String),
    tense: Tense,
    object: Np<'t>,
    oblique: Option<(AdpositionType, Np<'t>)>,
}

fn preposition(word: &str) -> Option<AdpositionType> {
    if word == "at" {
        return Some(AdpositionType::In);
    }
    // Postposed `ago` does not fit the pattern.
    AdpositionType::ALL
        .iter()
        .copied()
        .filter(|t| *t != AdpositionType::Ago)
        .find(|t| adposition_word(*t) == word)
}

fn identifier_for(lemma: &str) -> String {
    let mut id: String = lemma
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if !id.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
        id.insert(0, '_');
    }
    id
}

impl<'a> Encoder<'a> {
    pub fn new(lex: &'a Lexicon) -> Self {
        Encoder {
            lex,
            policy: SensePolicy::default(),
            doc: Document::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_policy(mut self, policy: SensePolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn finish(self) -> Encoded {
        Encoded {
            document: self.doc,
            notes: self.notes,
        }
    }

    /// Encodes one sentence and appends it. On error nothing is appended.
    pub fn push(&mut self, sentence: &str) -> Result<(), EncodeError> {
        let trimmed = sentence.trim();
        let (body, typ) = match trimmed.chars().last() {
            Some('?') => (&trimmed[..trimmed.len() - 1], SentenceType::Question),
            Some('!') => (&trimmed[..trimmed.len() - 1], SentenceType::Exclamation),
            Some('.') => (&trimmed[..trimmed.len() - 1], SentenceType::Affirmation),
            _ => (trimmed, SentenceType::Affirmation),
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let lowered: Vec<String> = tokens.iter().map(|t| t.to_lowercase()).collect();

        let wild: Vec<Vec<Reading>> = lowered
            .iter()
            .map(|t| {
                let r = self.readings(t);
                if r.is_empty() {
                    vec![Reading::Unknown]
                } else {
                    r
                }
            })
            .collect();
        if match_clause(&tokens, &wild).is_none() {
            return Err(EncodeError::PatternMismatch(format!(
                "`{body}` is not Subject Verb Object [Preposition Noun]"
            )));
        }
        let readings: Vec<Vec<Reading>> = lowered.iter().map(|t| self.readings(t)).collect();
        if let Some(i) = readings.iter().position(Vec::is_empty) {
            return Err(EncodeError::UnknownWord(tokens[i].to_string()));
        }
        let clause = match_clause(&tokens, &readings).ok_or_else(|| {
            EncodeError::PatternMismatch(format!("no reading of `{body}` fits the pattern"))
        })?;
        self.emit(clause, typ)
    }

    fn readings(&self, token: &str) -> Vec<Reading> {
        let mut out = Vec::new();
        match token {
            "the" => out.push(Reading::Det { definite: true }),
            "a" | "an" => out.push(Reading::Det { definite: false }),
            "will" => out.push(Reading::Will),
            _ => {}
        }
        if let Some(t) = preposition(token) {
            out.push(Reading::Prep(t));
        }
        if !out.is_empty() {
            return out;
        }
        let known = |pos, lemma: &str| !self.lex.reverse_lookup(LANG, pos, lemma).is_empty();
        if known(PartOfSpeech::Noun, token) {
            out.push(Reading::Noun {
                lemma: token.to_string(),
                plural: false,
            });
        }
        for s in singular_candidates(token) {
            if s != token && plural(&s) == token && known(PartOfSpeech::Noun, &s) {
                out.push(Reading::Noun {
                    lemma: s,
                    plural: true,
                });
            }
        }
        if known(PartOfSpeech::Adjective, token) {
            out.push(Reading::Adj {
                lemma: token.to_string(),
            });
        }
        for stem in verb_stem_candidates(token) {
            if !known(PartOfSpeech::Verb, &stem) {
                continue;
            }
            let forms = verb_forms(&stem);
            for (surface, form) in [
                (&forms.base, VerbForm::Base),
                (&forms.third, VerbForm::Third),
                (&forms.past, VerbForm::Past),
            ] {
                let reading = Reading::Verb {
                    lemma: stem.clone(),
                    form,
                };
                if surface == token && !out.contains(&reading) {
                    out.push(reading);
                }
            }
        }
        out
    }

    fn synset(&mut self, token: &str, pos: PartOfSpeech, lemma: &str) -> Result<SynsetRef, EncodeError> {
        let offsets = self.lex.reverse_lookup(LANG, pos, lemma);
        match (offsets.as_slice(), self.policy) {
            ([only], _) => Ok(SynsetRef { pos, offset: *only }),
            ([first, ..], SensePolicy::LowestOffset) => {
                self.notes.push(format!(
                    "`{token}` has {} senses {offsets:?}; chose {first:08}",
                    offsets.len()
                ));
                Ok(SynsetRef { pos, offset: *first })
            }
            ([], _) => Err(EncodeError::UnknownWord(token.to_string())),
            _ => Err(EncodeError::AmbiguousSense {
                token: token.to_string(),
                offsets,
            }),
        }
    }

    fn fresh_id(&self, lemma: &str, taken: &[Identifier]) -> Identifier {
        let base = identifier_for(lemma);
        let used = |s: &str| {
            self.doc.declarations().any(|(id, _)| id.as_str() == s) || taken.iter().any(|id| id.as_str() == s)
        };
        let mut candidate = base.clone();
        let mut n = 2;
        while used(&candidate) {
            candidate = format!("{base}{n}");
            n += 1;
        }
        Identifier::new(candidate).expect("sanitized identifier")
    }

    fn role(&mut self, np: &Np<'_>, taken: &[Identifier]) -> Result<Role, EncodeError> {
        let mut role = Role::new(self.fresh_id(&np.noun.1, taken));
        role.syn = Some(self.synset(np.noun.0, PartOfSpeech::Noun, &np.noun.1)?);
        role.defined = np.definite;
        if np.plural {
            role.quantity = Quantity::Plural;
        }
        for (token, lemma) in &np.adjectives {
            let syn = self.synset(token, PartOfSpeech::Adjective, lemma)?;
            role.adjectives.push(AdjectiveBlock {
                syn,
                adverbs: Vec::new(),
            });
        }
        Ok(role)
    }

    fn emit(&mut self, clause: Clause<'_>, typ: SentenceType) -> Result<(), EncodeError> {
        let notes_before = self.notes.len();
        let result = (|| {
            let mut roles = Vec::new();
            let mut taken = Vec::new();
            for np in [Some(&clause.subject), Some(&clause.object), clause.oblique.as_ref().map(|o| &o.1)]
                .into_iter()
                .flatten()
            {
                let role = self.role(np, &taken)?;
                taken.push(role.id.clone());
                roles.push(role);
            }
            let syn = self.synset(clause.verb.0, PartOfSpeech::Verb, &clause.verb.1)?;
            let mut action = Action::new(self.fresh_id(&clause.verb.1, &taken), syn);
            action.tense = Some(clause.tense);
            action.agents = Some(ReferenceGroups::single(roles[0].id.clone()));
            action.themes = Some(ReferenceGroups::single(roles[1].id.clone()));
            if let Some((typ, _)) = clause.oblique {
                action.adpositions.push(AdpositionLink {
                    typ,
                    refs: ReferenceGroups::single(roles[2].id.clone()),
                });
            }
            Ok((roles, action))
        })();
        match result {
            Ok((roles, action)) => {
                self.doc.sentences.push(Sentence {
                    typ,
                    actions: vec![action.id.clone()],
                });
                self.doc.roles.extend(roles);
                self.doc.actions.push(action);
                Ok(())
            }
            Err(e) => {
                self.notes.truncate(notes_before);
                Err(e)
            }
        }
    }
}

/// Every noun phrase starting at `i`, shortest first.
fn noun_phrases<'t>(tokens: &[&'t str], readings: &[Vec<Reading>], i: usize) -> Vec<(Np<'t>, usize)> {
    let mut out = Vec::new();
    let mut starts = vec![(i, false)];
    if let Some(Reading::Det { definite }) = readings.get(i).and_then(|r| {
        r.iter().find(|r| matches!(r, Reading::Det { .. }))
    }) {
        starts.push((i + 1, *definite));
    }
    for (start, definite) in starts {
        let mut adjectives = Vec::new();
        let mut k = start;
        while k < tokens.len() {
            if let Some((lemma, plural)) = readings[k].iter().find_map(|r| match r {
                Reading::Noun { lemma, plural } => Some((lemma.clone(), *plural)),
                Reading::Unknown => Some((tokens[k].to_lowercase(), false)),
                _ => None,
            }) {
                out.push((
                    Np {
                        definite,
                        adjectives: adjectives.clone(),
                        noun: (tokens[k], lemma),
                        plural,
                    },
                    k + 1,
                ));
            }
            match readings[k].iter().find_map(|r| match r {
                Reading::Adj { lemma } => Some(lemma.clone()),
                Reading::Unknown => Some(tokens[k].to_lowercase()),
                _ => None,
            }) {
                Some(lemma) => adjectives.push((tokens[k], lemma)),
                None => break,
            }
            k += 1;
        }
    }
    out
}

fn match_clause<'t>(tokens: &[&'t str], readings: &[Vec<Reading>]) -> Option<Clause<'t>> {
    let n = tokens.len();
    for (subject, i) in noun_phrases(tokens, readings, 0) {
        let will = readings.get(i).is_some_and(|r| r.contains(&Reading::Will));
        let mut verb_starts = vec![(i, false)];
        if will {
            verb_starts.push((i + 1, true));
        }
        for (v, future) in verb_starts {
            let Some(options) = readings.get(v) else {
                continue;
            };
            let verbs: Vec<(String, Tense)> = options
                .iter()
                .filter_map(|r| match r {
                    Reading::Verb { lemma, form } => match (future, form) {
                        (true, VerbForm::Base) => Some((lemma.clone(), Tense::Future)),
                        (true, _) => None,
                        (false, VerbForm::Past) => Some((lemma.clone(), Tense::Past)),
                        (false, _) => Some((lemma.clone(), Tense::Present)),
                    },
                    Reading::Unknown => Some((tokens[v].to_lowercase(), Tense::Present)),
                    _ => None,
                })
                .collect();
            for (lemma, tense) in verbs {
                for (object, j) in noun_phrases(tokens, readings, v + 1) {
                    let clause = |oblique| Clause {
                        subject: subject.clone(),
                        verb: (tokens[v], lemma.clone()),
                        tense,
                        object: object.clone(),
                        oblique,
                    };
                    if j == n {
                        return Some(clause(None));
                    }
                    let Some(typ) = readings[j].iter().find_map(|r| match r {
                        Reading::Prep(t) => Some(*t),
                        _ => None,
                    }) else {
                        continue;
                    };
                    if let Some((oblique, _)) = noun_phrases(tokens, readings, j + 1)
                        .into_iter()
                        .find(|(_, k)| *k == n)
                    {
                        return Some(clause(Some((typ, oblique))));
                    }
                }
            }
        }
    }
    None
}

impl fmt::Display for Encoded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}
