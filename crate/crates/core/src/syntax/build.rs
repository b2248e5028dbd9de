//! Interprets raw blocks as model values.

use std::collections::HashSet;

use super::lexer::{Token, TokenKind};
use super::parser::{RawAttr, RawBlock, RawDocument, RawValue};
use super::{ErrorCode, ParseError, SourceLocation};
use crate::model::*;

pub(super) fn build(raw: RawDocument<'_>) -> (Document, Vec<ParseError>) {
    let mut b = Builder { errors: Vec::new() };
    let mut doc = Document::new();
    doc.roles = raw.roles.iter().filter_map(|r| b.role(r)).collect();
    doc.actions = raw.actions.iter().filter_map(|a| b.action(a)).collect();
    doc.sentences = raw.sentences.iter().filter_map(|s| b.sentence(s)).collect();
    (doc, b.errors)
}

struct Builder {
    errors: Vec<ParseError>,
}

/// Tracks which keys a block has already used.
struct Keys<'a> {
    block: &'static str,
    seen: HashSet<&'a str>,
}

impl<'a> Keys<'a> {
    fn new(block: &'static str) -> Self {
        Keys {
            block,
            seen: HashSet::new(),
        }
    }
}

fn location_of(value: &RawValue<'_>) -> SourceLocation {
    match value {
        RawValue::Scalar(t) => t.location,
        RawValue::List { open, .. } => open.location,
        RawValue::Block(b) => b.head.location,
    }
}

impl Builder {
    fn error(&mut self, location: SourceLocation, code: ErrorCode, message: String) {
        self.errors.push(ParseError::new(location, code, message));
    }

    /// Records the key; false (with a DUPLICATE_KEY error) on a repeat.
    fn first_use<'a>(&mut self, keys: &mut Keys<'a>, key: &Token<'a>) -> bool {
        if keys.seen.insert(key.text) {
            return true;
        }
        self.error(
            key.location,
            ErrorCode::DuplicateKey,
            format!("duplicate key `{}` in {} block", key.text, keys.block),
        );
        false
    }

    fn unknown_key(&mut self, keys: &Keys<'_>, key: &Token<'_>) {
        self.error(
            key.location,
            ErrorCode::UnknownKey,
            format!("unknown key `{}` in {} block", key.text, keys.block),
        );
    }

    fn missing(&mut self, block: &RawBlock<'_>, name: &str, key: &str) {
        if !block.damaged {
            self.error(
                block.head.location,
                ErrorCode::MissingKey,
                format!("{name} block is missing `{key}`"),
            );
        }
    }

    fn invalid(&mut self, location: SourceLocation, message: String) {
        self.error(location, ErrorCode::InvalidValue, message);
    }

    fn scalar<'a>(&mut self, attr: &RawAttr<'a>) -> Option<Token<'a>> {
        match &attr.value {
            RawValue::Scalar(t) => Some(*t),
            other => {
                self.invalid(
                    location_of(other),
                    format!("`{}` takes a single value", attr.key.text),
                );
                None
            }
        }
    }

    fn nested<'r, 'a>(&mut self, attr: &'r RawAttr<'a>) -> Option<&'r RawBlock<'a>> {
        match &attr.value {
            RawValue::Block(b) => Some(b),
            other => {
                self.invalid(
                    location_of(other),
                    format!("`{}` takes a block", attr.key.text),
                );
                None
            }
        }
    }

    fn identifier(&mut self, tok: Token<'_>) -> Option<Identifier> {
        if tok.kind == TokenKind::Ident {
            if let Ok(id) = Identifier::new(tok.text) {
                return Some(id);
            }
        }
        self.invalid(tok.location, format!("`{}` is not an identifier", tok.text));
        None
    }

    fn synset(&mut self, tok: Token<'_>, pos: PartOfSpeech) -> Option<SynsetRef> {
        if tok.kind == TokenKind::Number {
            if let Some(syn) = tok
                .text
                .parse::<u64>()
                .ok()
                .and_then(|n| SynsetRef::new(pos, n).ok())
            {
                return Some(syn);
            }
        }
        self.invalid(
            tok.location,
            format!("`{}` is not a synset offset (0..=99999999)", tok.text),
        );
        None
    }

    fn code<T>(&mut self, tok: Token<'_>, field: &str, decode: impl Fn(&str) -> Option<T>) -> Option<T> {
        let value = decode(tok.text);
        if value.is_none() {
            self.error(
                tok.location,
                ErrorCode::UnknownCode,
                format!("unknown code `{}` for `{field}`", tok.text),
            );
        }
        value
    }

    fn flag(&mut self, tok: Token<'_>, field: &str) -> Option<bool> {
        self.code(tok, field, |s| match s {
            "Y" => Some(true),
            "N" => Some(false),
            _ => None,
        })
    }

    fn group_tokens<'a>(&mut self, attr: &RawAttr<'a>) -> Option<Vec<Vec<Token<'a>>>> {
        match &attr.value {
            RawValue::Scalar(t) => Some(vec![vec![*t]]),
            RawValue::List { groups, .. } => Some(groups.clone()),
            RawValue::Block(b) => {
                self.invalid(
                    b.head.location,
                    format!("`{}` takes a list", attr.key.text),
                );
                None
            }
        }
    }

    fn flat_tokens<'a>(&mut self, attr: &RawAttr<'a>) -> Option<Vec<Token<'a>>> {
        let mut groups = self.group_tokens(attr)?;
        if groups.len() > 1 {
            self.invalid(
                location_of(&attr.value),
                format!("`{}` takes a flat list without `|`", attr.key.text),
            );
            return None;
        }
        groups.pop()
    }

    fn id_list(&mut self, attr: &RawAttr<'_>) -> Option<Vec<Identifier>> {
        let tokens = self.flat_tokens(attr)?;
        let ids: Vec<_> = tokens.into_iter().map(|t| self.identifier(t)).collect();
        ids.into_iter().collect()
    }

    fn synset_list(&mut self, attr: &RawAttr<'_>, pos: PartOfSpeech) -> Option<Vec<SynsetRef>> {
        let tokens = self.flat_tokens(attr)?;
        let syns: Vec<_> = tokens.into_iter().map(|t| self.synset(t, pos)).collect();
        syns.into_iter().collect()
    }

    fn reference_groups(&mut self, attr: &RawAttr<'_>) -> Option<ReferenceGroups> {
        let groups = self.group_tokens(attr)?;
        let mut ok = true;
        let mut ids = Vec::new();
        for group in groups {
            let mut g = Vec::new();
            for tok in group {
                match self.identifier(tok) {
                    Some(id) => g.push(id),
                    None => ok = false,
                }
            }
            ids.push(g);
        }
        if !ok {
            return None;
        }
        // The list grammar never yields an empty group.
        ReferenceGroups::new(ids).ok()
    }

    fn role(&mut self, block: &RawBlock<'_>) -> Option<Role> {
        let mut keys = Keys::new("role");
        let mut ok = true;
        let mut id = None;
        let mut syn = None;
        let mut name = None;
        let mut pronoun = None;
        let mut quantity = Quantity::ONE;
        let mut defined = false;
        let mut adjectives = Vec::new();
        let mut relatives = Vec::new();
        let mut adpositions = Vec::new();

        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "id" | "syn" | "nam" | "qnt" | "def" | "pro" if !self.first_use(&mut keys, &key) => false,
                "id" => self.scalar(attr).and_then(|t| self.identifier(t)).map(|v| id = Some(v)).is_some(),
                "syn" => self
                    .scalar(attr)
                    .and_then(|t| self.synset(t, PartOfSpeech::Noun))
                    .map(|v| syn = Some(v))
                    .is_some(),
                "nam" => self
                    .scalar(attr)
                    .and_then(|t| match ProperName::new(t.text) {
                        Ok(n) => Some(n),
                        Err(_) => {
                            self.invalid(t.location, format!("`{}` is not a valid name", t.text));
                            None
                        }
                    })
                    .map(|v| name = Some(v))
                    .is_some(),
                "qnt" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "qnt", |s| s.parse::<Quantity>().ok()))
                    .map(|v| quantity = v)
                    .is_some(),
                "def" => self
                    .scalar(attr)
                    .and_then(|t| self.flag(t, "def"))
                    .map(|v| defined = v)
                    .is_some(),
                "adj" => self
                    .nested(attr)
                    .and_then(|b| self.adjective(b))
                    .map(|v| adjectives.push(v))
                    .is_some(),
                "rel" => self
                    .nested(attr)
                    .and_then(|b| self.relative(b))
                    .map(|v| relatives.push(v))
                    .is_some(),
                "adp" => self
                    .nested(attr)
                    .and_then(|b| self.adposition(b))
                    .map(|v| adpositions.push(v))
                    .is_some(),
                "pro" => self
                    .nested(attr)
                    .and_then(|b| self.pronoun(b))
                    .map(|v| pronoun = Some(v))
                    .is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        if id.is_none() {
            self.missing(block, "role", "id");
            ok = false;
        }
        if !ok || block.damaged {
            return None;
        }
        Some(Role {
            id: id?,
            syn,
            name,
            pronoun,
            quantity,
            defined,
            adjectives,
            relatives,
            adpositions,
        })
    }

    fn modified(&mut self, block: &RawBlock<'_>, name: &'static str, pos: PartOfSpeech) -> Option<(SynsetRef, Vec<SynsetRef>)> {
        let mut keys = Keys::new(name);
        let mut ok = true;
        let mut syn = None;
        let mut adverbs = Vec::new();
        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "syn" | "adv" if !self.first_use(&mut keys, &key) => false,
                "syn" => self
                    .scalar(attr)
                    .and_then(|t| self.synset(t, pos))
                    .map(|v| syn = Some(v))
                    .is_some(),
                "adv" => self
                    .synset_list(attr, PartOfSpeech::Adverb)
                    .map(|v| adverbs = v)
                    .is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        if syn.is_none() {
            self.missing(block, name, "syn");
            ok = false;
        }
        if !ok || block.damaged {
            return None;
        }
        Some((syn?, adverbs))
    }

    fn adjective(&mut self, block: &RawBlock<'_>) -> Option<AdjectiveBlock> {
        self.modified(block, "adj", PartOfSpeech::Adjective)
            .map(|(syn, adverbs)| AdjectiveBlock { syn, adverbs })
    }

    fn adverb(&mut self, block: &RawBlock<'_>) -> Option<AdverbBlock> {
        self.modified(block, "advb", PartOfSpeech::Adverb)
            .map(|(syn, adverbs)| AdverbBlock { syn, adverbs })
    }

    /// A `typ` + `ref` link block; `decode` interprets the type code.
    fn link<'a, T, R>(
        &mut self,
        block: &RawBlock<'a>,
        name: &'static str,
        decode: impl Fn(&str) -> Option<T>,
        refs: impl Fn(&mut Self, &RawAttr<'a>) -> Option<R>,
    ) -> Option<(T, R)> {
        let mut keys = Keys::new(name);
        let mut ok = true;
        let mut typ = None;
        let mut found = None;
        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "typ" | "ref" if !self.first_use(&mut keys, &key) => false,
                "typ" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "typ", &decode))
                    .map(|v| typ = Some(v))
                    .is_some(),
                "ref" => refs(self, attr).map(|v| found = Some(v)).is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        for (missing, key) in [(typ.is_none(), "typ"), (found.is_none(), "ref")] {
            if missing {
                self.missing(block, name, key);
                ok = false;
            }
        }
        if !ok || block.damaged {
            return None;
        }
        Some((typ?, found?))
    }

    fn relative(&mut self, block: &RawBlock<'_>) -> Option<RelativeLink> {
        self.link(block, "rel", RelativeType::from_code, Self::id_list)
            .map(|(typ, refs)| RelativeLink { typ, refs })
    }

    fn adposition(&mut self, block: &RawBlock<'_>) -> Option<AdpositionLink> {
        self.link(block, "adp", AdpositionType::from_code, Self::reference_groups)
            .map(|(typ, refs)| AdpositionLink { typ, refs })
    }

    fn adverbial(&mut self, block: &RawBlock<'_>) -> Option<AdverbialLink> {
        self.link(block, "cls", AdverbialType::from_code, Self::id_list)
            .map(|(typ, refs)| AdverbialLink { typ, refs })
    }

    fn pronoun(&mut self, block: &RawBlock<'_>) -> Option<Pronoun> {
        let mut keys = Keys::new("pro");
        let mut ok = true;
        let mut pronoun = None;
        let mut refs = Vec::new();
        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "typ" | "ref" if !self.first_use(&mut keys, &key) => false,
                "typ" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "pro.typ", |s| Pronoun::decode(s).ok()))
                    .map(|v| pronoun = Some(v))
                    .is_some(),
                "ref" => self.id_list(attr).map(|v| refs = v).is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        if pronoun.is_none() {
            self.missing(block, "pro", "typ");
            ok = false;
        }
        if !ok || block.damaged {
            return None;
        }
        pronoun.map(|p| p.with_refs(refs))
    }

    fn comparison(&mut self, block: &RawBlock<'_>) -> Option<Comparison> {
        let mut keys = Keys::new("cmp");
        let mut ok = true;
        let mut typ = None;
        let mut refs = Vec::new();
        let mut adj = None;
        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "typ" | "ref" | "adj" if !self.first_use(&mut keys, &key) => false,
                "typ" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "cmp.typ", ComparisonType::from_code))
                    .map(|v| typ = Some(v))
                    .is_some(),
                "ref" => self.id_list(attr).map(|v| refs = v).is_some(),
                "adj" => self
                    .scalar(attr)
                    .and_then(|t| self.synset(t, PartOfSpeech::Adjective))
                    .map(|v| adj = Some(v))
                    .is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        if typ.is_none() {
            self.missing(block, "cmp", "typ");
            ok = false;
        }
        if !ok || block.damaged {
            return None;
        }
        Some(Comparison { typ: typ?, refs, adj })
    }

    fn action(&mut self, block: &RawBlock<'_>) -> Option<Action> {
        let mut keys = Keys::new("action");
        let mut ok = true;
        let mut id = None;
        let mut syn = None;
        let mut agents = None;
        let mut themes = None;
        let mut tense = None;
        let mut progressive = false;
        let mut perfect = false;
        let mut negated = false;
        let mut modality = None;
        let mut adverbs = Vec::new();
        let mut comparison = None;
        let mut adpositions = Vec::new();
        let mut adverbials = Vec::new();

        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "id" | "syn" | "tns" | "prg" | "prf" | "neg" | "mod" | "agt" | "thm" | "cmp"
                    if !self.first_use(&mut keys, &key) =>
                {
                    false
                }
                "id" => self.scalar(attr).and_then(|t| self.identifier(t)).map(|v| id = Some(v)).is_some(),
                "syn" => self
                    .scalar(attr)
                    .and_then(|t| self.synset(t, PartOfSpeech::Verb))
                    .map(|v| syn = Some(v))
                    .is_some(),
                "agt" => self.reference_groups(attr).map(|v| agents = Some(v)).is_some(),
                "thm" => self.reference_groups(attr).map(|v| themes = Some(v)).is_some(),
                "tns" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "tns", Tense::from_code))
                    .map(|v| tense = Some(v))
                    .is_some(),
                "prg" => self.scalar(attr).and_then(|t| self.flag(t, "prg")).map(|v| progressive = v).is_some(),
                "prf" => self.scalar(attr).and_then(|t| self.flag(t, "prf")).map(|v| perfect = v).is_some(),
                "neg" => self.scalar(attr).and_then(|t| self.flag(t, "neg")).map(|v| negated = v).is_some(),
                "mod" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "mod", Modality::from_code))
                    .map(|v| modality = Some(v))
                    .is_some(),
                "advb" => self
                    .nested(attr)
                    .and_then(|b| self.adverb(b))
                    .map(|v| adverbs.push(v))
                    .is_some(),
                "cmp" => self
                    .nested(attr)
                    .and_then(|b| self.comparison(b))
                    .map(|v| comparison = Some(v))
                    .is_some(),
                "adp" => self
                    .nested(attr)
                    .and_then(|b| self.adposition(b))
                    .map(|v| adpositions.push(v))
                    .is_some(),
                "cls" => self
                    .nested(attr)
                    .and_then(|b| self.adverbial(b))
                    .map(|v| adverbials.push(v))
                    .is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        for (missing, key) in [(id.is_none(), "id"), (syn.is_none(), "syn")] {
            if missing {
                self.missing(block, "action", key);
                ok = false;
            }
        }
        if !ok || block.damaged {
            return None;
        }
        Some(Action {
            id: id?,
            syn: syn?,
            agents,
            themes,
            tense,
            progressive,
            perfect,
            negated,
            modality,
            adverbs,
            comparison,
            adpositions,
            adverbials,
        })
    }

    fn sentence(&mut self, block: &RawBlock<'_>) -> Option<Sentence> {
        let mut keys = Keys::new("sentence");
        let mut ok = true;
        let mut typ = None;
        let mut actions = Vec::new();
        for attr in &block.attrs {
            let key = attr.key;
            let good = match key.text {
                "typ" | "act" if !self.first_use(&mut keys, &key) => false,
                "typ" => self
                    .scalar(attr)
                    .and_then(|t| self.code(t, "typ", SentenceType::from_code))
                    .map(|v| typ = Some(v))
                    .is_some(),
                "act" => self.id_list(attr).map(|v| actions = v).is_some(),
                _ => {
                    self.unknown_key(&keys, &key);
                    false
                }
            };
            ok &= good;
        }
        if typ.is_none() {
            self.missing(block, "sentence", "typ");
            ok = false;
        }
        if !ok || block.damaged {
            return None;
        }
        Some(Sentence { typ: typ?, actions })
    }
}
