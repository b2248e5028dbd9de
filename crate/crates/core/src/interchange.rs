//! Lossless conversion between documents and a JSON tree.
//!
//! Keys mirror STON keys (`id`, `syn`, `agt`, ...) and enumeration values keep
//! their STON spellings (`"PA"`, `"IO_FRM"`). Reference groups become arrays
//! of arrays. Defaults are omitted exactly as in the canonical text form.

use std::fmt;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::model::*;
use crate::validate::{has_errors, validate, Diagnostic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeErrorKind {
    Malformed,
    UnknownKey,
    UnknownCode,
    WrongType,
    MissingKey,
    InvalidValue,
}

impl fmt::Display for TreeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeErrorKind::Malformed => "malformed tree",
            TreeErrorKind::UnknownKey => "unknown key",
            TreeErrorKind::UnknownCode => "unknown code",
            TreeErrorKind::WrongType => "wrong type",
            TreeErrorKind::MissingKey => "missing key",
            TreeErrorKind::InvalidValue => "invalid value",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {kind}: {message}")]
pub struct TreeError {
    /// JSON-pointer-like location, e.g. `/actions/0/tns`.
    pub path: String,
    pub kind: TreeErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("document has validation errors")]
    Invalid(Vec<Diagnostic>),
}

/// Interchange text for a valid document.
pub fn to_tree(doc: &Document) -> Result<String, ExportError> {
    let diagnostics = validate(doc);
    if has_errors(&diagnostics) {
        return Err(ExportError::Invalid(diagnostics));
    }
    Ok(to_value(doc).to_string())
}

/// The JSON value for any document, valid or not.
pub fn to_value(doc: &Document) -> Value {
    json!({
        "roles": doc.roles.iter().map(role_value).collect::<Vec<_>>(),
        "actions": doc.actions.iter().map(action_value).collect::<Vec<_>>(),
        "sentences": doc.sentences.iter().map(sentence_value).collect::<Vec<_>>(),
    })
}

fn ids(ids: &[Identifier]) -> Value {
    Value::Array(ids.iter().map(|id| Value::String(id.to_string())).collect())
}

fn groups(refs: &ReferenceGroups) -> Value {
    Value::Array(refs.groups().iter().map(|g| ids(g)).collect())
}

fn offsets(syns: &[SynsetRef]) -> Value {
    Value::Array(syns.iter().map(|s| Value::from(s.offset)).collect())
}

fn modified(syn: SynsetRef, adverbs: &[SynsetRef]) -> Value {
    let mut m = Map::new();
    m.insert("syn".into(), syn.offset.into());
    if !adverbs.is_empty() {
        m.insert("adv".into(), offsets(adverbs));
    }
    Value::Object(m)
}

fn adposition(link: &AdpositionLink) -> Value {
    json!({ "typ": link.typ.code(), "ref": groups(&link.refs) })
}

fn role_value(role: &Role) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), role.id.to_string().into());
    if let Some(syn) = role.syn {
        m.insert("syn".into(), syn.offset.into());
    }
    if let Some(name) = &role.name {
        m.insert("nam".into(), name.to_string().into());
    }
    if !role.quantity.is_default() {
        m.insert("qnt".into(), role.quantity.to_string().into());
    }
    if role.defined {
        m.insert("def".into(), true.into());
    }
    if !role.adjectives.is_empty() {
        let adj = role.adjectives.iter().map(|a| modified(a.syn, &a.adverbs)).collect();
        m.insert("adj".into(), Value::Array(adj));
    }
    if !role.relatives.is_empty() {
        let rel = role
            .relatives
            .iter()
            .map(|r| json!({ "typ": r.typ.to_string(), "ref": ids(&r.refs) }))
            .collect();
        m.insert("rel".into(), Value::Array(rel));
    }
    if !role.adpositions.is_empty() {
        m.insert(
            "adp".into(),
            Value::Array(role.adpositions.iter().map(adposition).collect()),
        );
    }
    if let Some(p) = &role.pronoun {
        let mut pro = Map::new();
        pro.insert("typ".into(), p.encode().into());
        if !p.refs.is_empty() {
            pro.insert("ref".into(), ids(&p.refs));
        }
        m.insert("pro".into(), Value::Object(pro));
    }
    Value::Object(m)
}

fn action_value(action: &Action) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), action.id.to_string().into());
    m.insert("syn".into(), action.syn.offset.into());
    if let Some(t) = action.tense {
        m.insert("tns".into(), t.code().into());
    }
    for (key, set) in [
        ("prg", action.progressive),
        ("prf", action.perfect),
        ("neg", action.negated),
    ] {
        if set {
            m.insert(key.into(), true.into());
        }
    }
    if let Some(md) = action.modality {
        m.insert("mod".into(), md.code().into());
    }
    if let Some(a) = &action.agents {
        m.insert("agt".into(), groups(a));
    }
    if let Some(t) = &action.themes {
        m.insert("thm".into(), groups(t));
    }
    if !action.adverbs.is_empty() {
        let advb = action.adverbs.iter().map(|a| modified(a.syn, &a.adverbs)).collect();
        m.insert("advb".into(), Value::Array(advb));
    }
    if let Some(cmp) = &action.comparison {
        let mut c = Map::new();
        c.insert("typ".into(), cmp.typ.code().into());
        if !cmp.refs.is_empty() {
            c.insert("ref".into(), ids(&cmp.refs));
        }
        if let Some(adj) = cmp.adj {
            c.insert("adj".into(), adj.offset.into());
        }
        m.insert("cmp".into(), Value::Object(c));
    }
    if !action.adpositions.is_empty() {
        m.insert(
            "adp".into(),
            Value::Array(action.adpositions.iter().map(adposition).collect()),
        );
    }
    if !action.adverbials.is_empty() {
        let cls = action
            .adverbials
            .iter()
            .map(|c| json!({ "typ": c.typ.code(), "ref": ids(&c.refs) }))
            .collect();
        m.insert("cls".into(), Value::Array(cls));
    }
    Value::Object(m)
}

fn sentence_value(sentence: &Sentence) -> Value {
    let mut m = Map::new();
    m.insert("typ".into(), sentence.typ.code().into());
    if !sentence.actions.is_empty() {
        m.insert("act".into(), ids(&sentence.actions));
    }
    Value::Object(m)
}

/// Reads interchange text back into a document.
pub fn from_tree(text: &str) -> Result<Document, Vec<TreeError>> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        vec![TreeError {
            path: String::new(),
            kind: TreeErrorKind::Malformed,
            message: e.to_string(),
        }]
    })?;
    from_value(&value)
}

pub fn from_value(value: &Value) -> Result<Document, Vec<TreeError>> {
    let mut reader = Reader { errors: Vec::new() };
    let doc = reader.document(value);
    match doc {
        Some(doc) if reader.errors.is_empty() => Ok(doc),
        _ => Err(reader.errors),
    }
}

struct Reader {
    errors: Vec<TreeError>,
}

impl Reader {
    fn fail<T>(&mut self, path: &str, kind: TreeErrorKind, message: impl Into<String>) -> Option<T> {
        self.errors.push(TreeError {
            path: path.to_string(),
            kind,
            message: message.into(),
        });
        None
    }

    fn object<'v>(&mut self, value: &'v Value, path: &str, allowed: &[&str]) -> Option<&'v Map<String, Value>> {
        let Some(map) = value.as_object() else {
            return self.fail(path, TreeErrorKind::WrongType, "expected an object");
        };
        for key in map.keys() {
            if !allowed.contains(&key.as_str()) {
                self.fail::<()>(&format!("{path}/{key}"), TreeErrorKind::UnknownKey, format!("`{key}` is not allowed here"));
            }
        }
        Some(map)
    }

    fn array<'v>(&mut self, value: &'v Value, path: &str) -> Option<&'v Vec<Value>> {
        match value.as_array() {
            Some(a) => Some(a),
            None => self.fail(path, TreeErrorKind::WrongType, "expected an array"),
        }
    }

    fn string<'v>(&mut self, value: &'v Value, path: &str) -> Option<&'v str> {
        match value.as_str() {
            Some(s) => Some(s),
            None => self.fail(path, TreeErrorKind::WrongType, "expected a string"),
        }
    }

    fn required<'v>(&mut self, map: &'v Map<String, Value>, key: &str, path: &str) -> Option<&'v Value> {
        match map.get(key) {
            Some(v) => Some(v),
            None => self.fail(path, TreeErrorKind::MissingKey, format!("missing `{key}`")),
        }
    }

    fn code<T>(&mut self, value: &Value, path: &str, decode: impl Fn(&str) -> Option<T>) -> Option<T> {
        let s = self.string(value, path)?;
        match decode(s) {
            Some(v) => Some(v),
            None => self.fail(path, TreeErrorKind::UnknownCode, format!("`{s}` is not a known code")),
        }
    }

    fn flag(&mut self, value: &Value, path: &str) -> Option<bool> {
        match value.as_bool() {
            Some(b) => Some(b),
            None => self.fail(path, TreeErrorKind::WrongType, "expected a boolean"),
        }
    }

    fn identifier(&mut self, value: &Value, path: &str) -> Option<Identifier> {
        let s = self.string(value, path)?;
        match Identifier::new(s) {
            Ok(id) => Some(id),
            Err(e) => self.fail(path, TreeErrorKind::InvalidValue, e.to_string()),
        }
    }

    fn synset(&mut self, value: &Value, path: &str, pos: PartOfSpeech) -> Option<SynsetRef> {
        let Some(n) = value.as_u64() else {
            return self.fail(path, TreeErrorKind::WrongType, "expected a non-negative integer");
        };
        match SynsetRef::new(pos, n) {
            Ok(s) => Some(s),
            Err(e) => self.fail(path, TreeErrorKind::InvalidValue, e.to_string()),
        }
    }

    /// Maps every element, keeping going after failures so all are reported.
    fn each<T>(&mut self, value: &Value, path: &str, mut f: impl FnMut(&mut Self, &Value, &str) -> Option<T>) -> Option<Vec<T>> {
        let items = self.array(value, path)?;
        let mut out = Vec::with_capacity(items.len());
        let mut ok = true;
        for (i, item) in items.iter().enumerate() {
            match f(self, item, &format!("{path}/{i}")) {
                Some(v) => out.push(v),
                None => ok = false,
            }
        }
        ok.then_some(out)
    }

    fn ids(&mut self, value: &Value, path: &str) -> Option<Vec<Identifier>> {
        self.each(value, path, Self::identifier)
    }

    fn groups(&mut self, value: &Value, path: &str) -> Option<ReferenceGroups> {
        let groups = self.each(value, path, Self::ids)?;
        match ReferenceGroups::new(groups) {
            Ok(g) => Some(g),
            Err(e) => self.fail(path, TreeErrorKind::InvalidValue, e.to_string()),
        }
    }

    fn synsets(&mut self, value: &Value, path: &str, pos: PartOfSpeech) -> Option<Vec<SynsetRef>> {
        self.each(value, path, |r, v, p| r.synset(v, p, pos))
    }

    fn document(&mut self, value: &Value) -> Option<Document> {
        let map = self.object(value, "", &["roles", "actions", "sentences"])?;
        let mut doc = Document::new();
        let mut ok = true;
        for key in ["roles", "actions", "sentences"] {
            let path = format!("/{key}");
            let Some(list) = self.required(map, key, "") else {
                ok = false;
                continue;
            };
            ok &= match key {
                "roles" => self.each(list, &path, Self::role).map(|v| doc.roles = v).is_some(),
                "actions" => self.each(list, &path, Self::action).map(|v| doc.actions = v).is_some(),
                _ => self.each(list, &path, Self::sentence).map(|v| doc.sentences = v).is_some(),
            };
        }
        ok.then_some(doc)
    }

    fn modified(&mut self, value: &Value, path: &str, pos: PartOfSpeech) -> Option<(SynsetRef, Vec<SynsetRef>)> {
        let m = self.object(value, path, &["syn", "adv"])?;
        let syn = self
            .required(m, "syn", path)
            .and_then(|v| self.synset(v, &format!("{path}/syn"), pos));
        let adverbs = match m.get("adv") {
            Some(v) => self.synsets(v, &format!("{path}/adv"), PartOfSpeech::Adverb),
            None => Some(Vec::new()),
        };
        Some((syn?, adverbs?))
    }

    fn adposition(&mut self, value: &Value, path: &str) -> Option<AdpositionLink> {
        let m = self.object(value, path, &["typ", "ref"])?;
        let typ = self
            .required(m, "typ", path)
            .and_then(|v| self.code(v, &format!("{path}/typ"), AdpositionType::from_code));
        let refs = self
            .required(m, "ref", path)
            .and_then(|v| self.groups(v, &format!("{path}/ref")));
        Some(AdpositionLink { typ: typ?, refs: refs? })
    }

    fn role(&mut self, value: &Value, path: &str) -> Option<Role> {
        let m = self.object(value, path, &["id", "syn", "nam", "qnt", "def", "adj", "rel", "adp", "pro"])?;
        let before = self.errors.len();
        let id = self
            .required(m, "id", path)
            .and_then(|v| self.identifier(v, &format!("{path}/id")));
        let mut role = Role::new(id.unwrap_or_else(|| Identifier::new("_").unwrap()));
        if let Some(v) = m.get("syn") {
            role.syn = self.synset(v, &format!("{path}/syn"), PartOfSpeech::Noun);
        }
        if let Some(v) = m.get("nam") {
            let p = format!("{path}/nam");
            if let Some(s) = self.string(v, &p) {
                match ProperName::new(s) {
                    Ok(n) => role.name = Some(n),
                    Err(e) => {
                        self.fail::<()>(&p, TreeErrorKind::InvalidValue, e.to_string());
                    }
                }
            }
        }
        if let Some(v) = m.get("qnt") {
            if let Some(q) = self.code(v, &format!("{path}/qnt"), |s| s.parse().ok()) {
                role.quantity = q;
            }
        }
        if let Some(v) = m.get("def") {
            role.defined = self.flag(v, &format!("{path}/def")).unwrap_or(false);
        }
        if let Some(v) = m.get("adj") {
            role.adjectives = self
                .each(v, &format!("{path}/adj"), |r, v, p| {
                    r.modified(v, p, PartOfSpeech::Adjective)
                        .map(|(syn, adverbs)| AdjectiveBlock { syn, adverbs })
                })
                .unwrap_or_default();
        }
        if let Some(v) = m.get("rel") {
            role.relatives = self
                .each(v, &format!("{path}/rel"), |r, v, p| {
                    let m = r.object(v, p, &["typ", "ref"])?;
                    let typ = r
                        .required(m, "typ", p)
                        .and_then(|v| r.code(v, &format!("{p}/typ"), RelativeType::from_code));
                    let refs = r.required(m, "ref", p).and_then(|v| r.ids(v, &format!("{p}/ref")));
                    Some(RelativeLink { typ: typ?, refs: refs? })
                })
                .unwrap_or_default();
        }
        if let Some(v) = m.get("adp") {
            role.adpositions = self.each(v, &format!("{path}/adp"), Self::adposition).unwrap_or_default();
        }
        if let Some(v) = m.get("pro") {
            let p = format!("{path}/pro");
            if let Some(pm) = self.object(v, &p, &["typ", "ref"]) {
                let pronoun = self
                    .required(pm, "typ", &p)
                    .and_then(|v| self.code(v, &format!("{p}/typ"), |s| Pronoun::decode(s).ok()));
                let refs = match pm.get("ref") {
                    Some(v) => self.ids(v, &format!("{p}/ref")),
                    None => Some(Vec::new()),
                };
                if let (Some(pronoun), Some(refs)) = (pronoun, refs) {
                    role.pronoun = Some(pronoun.with_refs(refs));
                }
            }
        }
        (self.errors.len() == before).then_some(role)
    }

    fn action(&mut self, value: &Value, path: &str) -> Option<Action> {
        let m = self.object(
            value,
            path,
            &["id", "syn", "tns", "prg", "prf", "neg", "mod", "agt", "thm", "advb", "cmp", "adp", "cls"],
        )?;
        let before = self.errors.len();
        let id = self
            .required(m, "id", path)
            .and_then(|v| self.identifier(v, &format!("{path}/id")));
        let syn = self
            .required(m, "syn", path)
            .and_then(|v| self.synset(v, &format!("{path}/syn"), PartOfSpeech::Verb));
        let (Some(id), Some(syn)) = (id, syn) else {
            return None;
        };
        let mut action = Action::new(id, syn);
        if let Some(v) = m.get("tns") {
            action.tense = self.code(v, &format!("{path}/tns"), Tense::from_code);
        }
        if let Some(v) = m.get("prg") {
            action.progressive = self.flag(v, &format!("{path}/prg")).unwrap_or(false);
        }
        if let Some(v) = m.get("prf") {
            action.perfect = self.flag(v, &format!("{path}/prf")).unwrap_or(false);
        }
        if let Some(v) = m.get("neg") {
            action.negated = self.flag(v, &format!("{path}/neg")).unwrap_or(false);
        }
        if let Some(v) = m.get("mod") {
            action.modality = self.code(v, &format!("{path}/mod"), Modality::from_code);
        }
        if let Some(v) = m.get("agt") {
            action.agents = self.groups(v, &format!("{path}/agt"));
        }
        if let Some(v) = m.get("thm") {
            action.themes = self.groups(v, &format!("{path}/thm"));
        }
        if let Some(v) = m.get("advb") {
            action.adverbs = self
                .each(v, &format!("{path}/advb"), |r, v, p| {
                    r.modified(v, p, PartOfSpeech::Adverb)
                        .map(|(syn, adverbs)| AdverbBlock { syn, adverbs })
                })
                .unwrap_or_default();
        }
        if let Some(v) = m.get("cmp") {
            let p = format!("{path}/cmp");
            if let Some(cm) = self.object(v, &p, &["typ", "ref", "adj"]) {
                let typ = self
                    .required(cm, "typ", &p)
                    .and_then(|v| self.code(v, &format!("{p}/typ"), ComparisonType::from_code));
                let refs = match cm.get("ref") {
                    Some(v) => self.ids(v, &format!("{p}/ref")),
                    None => Some(Vec::new()),
                };
                let adj = match cm.get("adj") {
                    Some(v) => self.synset(v, &format!("{p}/adj"), PartOfSpeech::Adjective).map(Some),
                    None => Some(None),
                };
                if let (Some(typ), Some(refs), Some(adj)) = (typ, refs, adj) {
                    action.comparison = Some(Comparison { typ, refs, adj });
                }
            }
        }
        if let Some(v) = m.get("adp") {
            action.adpositions = self.each(v, &format!("{path}/adp"), Self::adposition).unwrap_or_default();
        }
        if let Some(v) = m.get("cls") {
            action.adverbials = self
                .each(v, &format!("{path}/cls"), |r, v, p| {
                    let m = r.object(v, p, &["typ", "ref"])?;
                    let typ = r
                        .required(m, "typ", p)
                        .and_then(|v| r.code(v, &format!("{p}/typ"), AdverbialType::from_code));
                    let refs = r.required(m, "ref", p).and_then(|v| r.ids(v, &format!("{p}/ref")));
                    Some(AdverbialLink { typ: typ?, refs: refs? })
                })
                .unwrap_or_default();
        }
        (self.errors.len() == before).then_some(action)
    }

    fn sentence(&mut self, value: &Value, path: &str) -> Option<Sentence> {
        let m = self.object(value, path, &["typ", "act"])?;
        let typ = self
            .required(m, "typ", path)
            .and_then(|v| self.code(v, &format!("{path}/typ"), SentenceType::from_code));
        let actions = match m.get("act") {
            Some(v) => self.ids(v, &format!("{path}/act")),
            None => Some(Vec::new()),
        };
        Some(Sentence {
            typ: typ?,
            actions: actions?,
        })
    }
}
