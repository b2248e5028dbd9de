//! Canonical pretty-printing and minification.
//!
//! Both forms parse back to the same [`Document`]. The canonical form is the
//! diffing anchor: fixed key order, two-space indentation, one attribute per
//! line, default values suppressed and synset offsets padded to 8 digits.

use thiserror::Error;

use crate::model::*;
use crate::validate::{has_errors, validate, Diagnostic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("document has {} validation error(s)", .0.iter().filter(|d| d.severity == crate::validate::Severity::Error).count())]
    Invalid(Vec<Diagnostic>),
}

/// Canonical text of a document that passes validation.
pub fn serialize_canonical(doc: &Document) -> Result<String, CanonError> {
    check(doc)?;
    Ok(format_canonical(doc))
}

/// Minimal text of a document that passes validation.
pub fn serialize_min(doc: &Document) -> Result<String, CanonError> {
    check(doc)?;
    Ok(format_min(doc))
}

fn check(doc: &Document) -> Result<(), CanonError> {
    let diagnostics = validate(doc);
    if has_errors(&diagnostics) {
        Err(CanonError::Invalid(diagnostics))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone)]
enum Scalar {
    Word(String),
    Synset(u32),
}

#[derive(Debug, Clone)]
enum Value {
    Scalar(Scalar),
    List(Vec<Vec<Scalar>>),
}

#[derive(Debug)]
enum Attr {
    Simple(&'static str, Value),
    Nested(Block),
}

#[derive(Debug)]
struct Block {
    head: &'static str,
    attrs: Vec<Attr>,
}

impl Block {
    fn new(head: &'static str) -> Self {
        Block {
            head,
            attrs: Vec::new(),
        }
    }

    fn word(&mut self, key: &'static str, word: impl ToString) {
        self.attrs
            .push(Attr::Simple(key, Value::Scalar(Scalar::Word(word.to_string()))));
    }

    fn synset(&mut self, key: &'static str, syn: SynsetRef) {
        self.attrs
            .push(Attr::Simple(key, Value::Scalar(Scalar::Synset(syn.offset))));
    }

    fn flag(&mut self, key: &'static str, set: bool) {
        if set {
            self.word(key, "Y");
        }
    }

    fn ids<'a>(&mut self, key: &'static str, ids: impl IntoIterator<Item = &'a Identifier>) {
        let group: Vec<Scalar> = ids.into_iter().map(|id| Scalar::Word(id.to_string())).collect();
        if !group.is_empty() {
            self.attrs.push(Attr::Simple(key, Value::List(vec![group])));
        }
    }

    fn groups(&mut self, key: &'static str, refs: &ReferenceGroups) {
        let groups = refs
            .groups()
            .iter()
            .map(|g| g.iter().map(|id| Scalar::Word(id.to_string())).collect())
            .collect();
        self.attrs.push(Attr::Simple(key, Value::List(groups)));
    }

    fn synsets(&mut self, key: &'static str, syns: &[SynsetRef]) {
        if !syns.is_empty() {
            let group = syns.iter().map(|s| Scalar::Synset(s.offset)).collect();
            self.attrs.push(Attr::Simple(key, Value::List(vec![group])));
        }
    }

    fn nested(&mut self, block: Block) {
        self.attrs.push(Attr::Nested(block));
    }
}

fn modified_block(head: &'static str, syn: SynsetRef, adverbs: &[SynsetRef]) -> Block {
    let mut b = Block::new(head);
    b.synset("syn", syn);
    b.synsets("adv", adverbs);
    b
}

fn adposition_block(link: &AdpositionLink) -> Block {
    let mut b = Block::new("adp");
    b.word("typ", link.typ);
    b.groups("ref", &link.refs);
    b
}

fn role_block(role: &Role) -> Block {
    let mut b = Block::new("r");
    b.word("id", &role.id);
    if let Some(syn) = role.syn {
        b.synset("syn", syn);
    }
    if let Some(name) = &role.name {
        b.word("nam", name);
    }
    if !role.quantity.is_default() {
        b.word("qnt", role.quantity);
    }
    b.flag("def", role.defined);
    for adj in &role.adjectives {
        b.nested(modified_block("adj", adj.syn, &adj.adverbs));
    }
    for rel in &role.relatives {
        let mut r = Block::new("rel");
        r.word("typ", rel.typ);
        r.ids("ref", &rel.refs);
        b.nested(r);
    }
    for adp in &role.adpositions {
        b.nested(adposition_block(adp));
    }
    if let Some(pronoun) = &role.pronoun {
        let mut p = Block::new("pro");
        p.word("typ", pronoun.encode());
        p.ids("ref", &pronoun.refs);
        b.nested(p);
    }
    b
}

fn action_block(action: &Action) -> Block {
    let mut b = Block::new("a");
    b.word("id", &action.id);
    b.synset("syn", action.syn);
    if let Some(tense) = action.tense {
        b.word("tns", tense);
    }
    b.flag("prg", action.progressive);
    b.flag("prf", action.perfect);
    b.flag("neg", action.negated);
    if let Some(modality) = action.modality {
        b.word("mod", modality);
    }
    if let Some(agents) = &action.agents {
        b.groups("agt", agents);
    }
    if let Some(themes) = &action.themes {
        b.groups("thm", themes);
    }
    for advb in &action.adverbs {
        b.nested(modified_block("advb", advb.syn, &advb.adverbs));
    }
    if let Some(cmp) = &action.comparison {
        let mut c = Block::new("cmp");
        c.word("typ", cmp.typ);
        c.ids("ref", &cmp.refs);
        if let Some(adj) = cmp.adj {
            c.synset("adj", adj);
        }
        b.nested(c);
    }
    for adp in &action.adpositions {
        b.nested(adposition_block(adp));
    }
    for cls in &action.adverbials {
        let mut c = Block::new("cls");
        c.word("typ", cls.typ);
        c.ids("ref", &cls.refs);
        b.nested(c);
    }
    b
}

fn sentence_block(sentence: &Sentence) -> Block {
    let mut b = Block::new("s");
    b.word("typ", sentence.typ);
    b.ids("act", &sentence.actions);
    b
}

fn sections(doc: &Document) -> [(&'static str, Vec<Block>); 3] {
    [
        ("@roles", doc.roles.iter().map(role_block).collect()),
        ("@actions", doc.actions.iter().map(action_block).collect()),
        ("@sentences", doc.sentences.iter().map(sentence_block).collect()),
    ]
}

fn scalar_text(scalar: &Scalar, padded: bool) -> String {
    match (scalar, padded) {
        (Scalar::Word(w), _) => w.clone(),
        (Scalar::Synset(n), true) => format!("{n:08}"),
        (Scalar::Synset(n), false) => n.to_string(),
    }
}

/// Canonical text without validation; any parsed document can be formatted.
pub fn format_canonical(doc: &Document) -> String {
    fn value(v: &Value) -> String {
        match v {
            Value::Scalar(s) => scalar_text(s, true),
            Value::List(groups) => {
                let groups: Vec<String> = groups
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|s| scalar_text(s, true))
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .collect();
                format!("[{}]", groups.join(" | "))
            }
        }
    }

    fn block(out: &mut String, b: &Block, depth: usize) {
        let indent = "  ".repeat(depth);
        out.push_str(&indent);
        out.push_str(b.head);
        out.push_str(":{\n");
        for attr in &b.attrs {
            match attr {
                Attr::Simple(key, v) => {
                    out.push_str(&indent);
                    out.push_str("  ");
                    out.push_str(key);
                    out.push_str(": ");
                    out.push_str(&value(v));
                    out.push_str(";\n");
                }
                Attr::Nested(inner) => block(out, inner, depth + 1),
            }
        }
        out.push_str(&indent);
        out.push_str("}\n");
    }

    let mut out = String::from("@ston\n");
    for (keyword, blocks) in sections(doc) {
        out.push_str(keyword);
        out.push('\n');
        for b in &blocks {
            block(&mut out, b, 0);
        }
    }
    out.push_str("@end\n");
    out
}

/// Minimal text without validation: whitespace only where two words would
/// otherwise merge, offsets unpadded.
pub fn format_min(doc: &Document) -> String {
    struct Min {
        out: String,
        last_word: bool,
    }

    impl Min {
        fn word(&mut self, w: &str) {
            if self.last_word {
                self.out.push(' ');
            }
            self.out.push_str(w);
            self.last_word = true;
        }

        fn punct(&mut self, p: char) {
            self.out.push(p);
            self.last_word = false;
        }

        fn block(&mut self, b: &Block) {
            self.word(b.head);
            self.punct(':');
            self.punct('{');
            for attr in &b.attrs {
                match attr {
                    Attr::Simple(key, v) => {
                        self.word(key);
                        self.punct(':');
                        match v {
                            Value::Scalar(s) => self.word(&scalar_text(s, false)),
                            Value::List(groups) => {
                                self.punct('[');
                                for (gi, g) in groups.iter().enumerate() {
                                    if gi > 0 {
                                        self.punct('|');
                                    }
                                    for (si, s) in g.iter().enumerate() {
                                        if si > 0 {
                                            self.punct(',');
                                        }
                                        self.word(&scalar_text(s, false));
                                    }
                                }
                                self.punct(']');
                            }
                        }
                        self.punct(';');
                    }
                    Attr::Nested(inner) => self.block(inner),
                }
            }
            self.punct('}');
        }
    }

    let mut min = Min {
        out: String::new(),
        last_word: false,
    };
    min.word("@ston");
    for (keyword, blocks) in sections(doc) {
        min.word(keyword);
        for b in &blocks {
            min.block(b);
        }
    }
    min.word("@end");
    min.out
}
