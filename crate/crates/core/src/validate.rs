//! Semantic checks over a parsed document.
//!
//! | code | severity | meaning                                              |
//! |------|----------|------------------------------------------------------|
//! | E01  | error    | identifier declared twice across roles and actions   |
//! | E02  | error    | reference to an undeclared identifier                |
//! | E03  | error    | reference to the wrong kind of block                 |
//! | E04  | error    | role has neither `syn`, a pronoun, nor a name        |
//! | E05  | error    | role has `nam` but no hypernym `syn`                 |
//! | E06  | error    | `cmp` of type L, M or EQ without `ref`               |
//! | E07  | error    | sentence with no actions                             |
//! | W01  | warning  | role never referenced                                |
//! | W02  | warning  | role carries both `nam` and a pronoun                |
//! | W03  | warning  | action referenced by no sentence and no link         |

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::model::{DeclKind, Document, Identifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "ERROR",
            Severity::Warning => "WARNING",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticCode {
    DuplicateId,
    DanglingRef,
    KindMismatch,
    RoleWithoutHead,
    NameWithoutSynset,
    ComparisonWithoutRef,
    EmptySentence,
    UnreferencedRole,
    NameAndPronoun,
    OrphanAction,
}

impl DiagnosticCode {
    pub const ALL: [DiagnosticCode; 10] = [
        DiagnosticCode::DuplicateId,
        DiagnosticCode::DanglingRef,
        DiagnosticCode::KindMismatch,
        DiagnosticCode::RoleWithoutHead,
        DiagnosticCode::NameWithoutSynset,
        DiagnosticCode::ComparisonWithoutRef,
        DiagnosticCode::EmptySentence,
        DiagnosticCode::UnreferencedRole,
        DiagnosticCode::NameAndPronoun,
        DiagnosticCode::OrphanAction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::DuplicateId => "E01",
            DiagnosticCode::DanglingRef => "E02",
            DiagnosticCode::KindMismatch => "E03",
            DiagnosticCode::RoleWithoutHead => "E04",
            DiagnosticCode::NameWithoutSynset => "E05",
            DiagnosticCode::ComparisonWithoutRef => "E06",
            DiagnosticCode::EmptySentence => "E07",
            DiagnosticCode::UnreferencedRole => "W01",
            DiagnosticCode::NameAndPronoun => "W02",
            DiagnosticCode::OrphanAction => "W03",
        }
    }

    pub fn from_str_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == code)
    }

    pub fn severity(self) -> Severity {
        if self.as_str().starts_with('E') {
            Severity::Error
        } else {
            Severity::Warning
        }
    }
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a diagnostic is about.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Subject {
    Declaration(Identifier),
    /// 0-based index into `Document::sentences`.
    Sentence(usize),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Declaration(id) => write!(f, "{id}"),
            Subject::Sentence(i) => write!(f, "sentence #{}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: DiagnosticCode,
    pub subject: Subject,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: {}",
            self.severity, self.code, self.subject, self.message
        )
    }
}

pub fn has_errors(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().any(|d| d.severity == Severity::Error)
}

/// Which declaration kinds a reference site accepts.
#[derive(Clone, Copy)]
enum Accepts {
    Roles,
    Actions,
    Either,
}

struct Checker<'d> {
    kinds: HashMap<&'d Identifier, DeclKind>,
    /// (position in declaration order, diagnostic)
    found: Vec<(usize, Diagnostic)>,
}

impl<'d> Checker<'d> {
    fn push(&mut self, item: usize, code: DiagnosticCode, subject: Subject, message: String) {
        self.found.push((
            item,
            Diagnostic {
                severity: code.severity(),
                code,
                subject,
                message,
            },
        ));
    }

    fn refs<'a>(
        &mut self,
        item: usize,
        subject: &Subject,
        field: &str,
        accepts: Accepts,
        refs: impl IntoIterator<Item = &'a Identifier>,
    ) {
        for target in refs {
            match (self.kinds.get(target), accepts) {
                (None, _) => self.push(
                    item,
                    DiagnosticCode::DanglingRef,
                    subject.clone(),
                    format!("`{field}` references undeclared `{target}`"),
                ),
                (Some(DeclKind::Action), Accepts::Roles) | (Some(DeclKind::Role), Accepts::Actions) => {
                    let kind = self.kinds[target];
                    let wanted = if matches!(accepts, Accepts::Roles) { "role" } else { "action" };
                    self.push(
                        item,
                        DiagnosticCode::KindMismatch,
                        subject.clone(),
                        format!("`{field}` must reference a {wanted}, but `{target}` is a {kind}"),
                    );
                }
                _ => {}
            }
        }
    }
}

/// Checks a document. An empty result means the document is valid for
/// exchange; warnings alone do not make it invalid.
///
/// Diagnostics are ordered by the declaration order of their subject (roles,
/// then actions, then sentences) and then by code.
pub fn validate(doc: &Document) -> Vec<Diagnostic> {
    let mut kinds = HashMap::new();
    for (id, kind) in doc.declarations() {
        kinds.entry(id).or_insert(kind);
    }
    let mut checker = Checker {
        kinds,
        found: Vec::new(),
    };

    let mut declared = HashSet::new();
    for (item, (id, _)) in doc.declarations().enumerate() {
        if !declared.insert(id) {
            checker.push(
                item,
                DiagnosticCode::DuplicateId,
                Subject::Declaration(id.clone()),
                format!("`{id}` is declared more than once"),
            );
        }
    }

    let mut referenced: HashSet<&Identifier> = HashSet::new();

    for (item, role) in doc.roles.iter().enumerate() {
        let subject = Subject::Declaration(role.id.clone());
        // A named role without `syn` is reported as E05 only.
        if role.syn.is_none() && role.pronoun.is_none() && role.name.is_none() {
            checker.push(
                item,
                DiagnosticCode::RoleWithoutHead,
                subject.clone(),
                "role has neither a synset nor a pronoun".into(),
            );
        }
        if role.name.is_some() && role.syn.is_none() {
            checker.push(
                item,
                DiagnosticCode::NameWithoutSynset,
                subject.clone(),
                "named role needs the synset of its hypernym".into(),
            );
        }
        if role.name.is_some() && role.pronoun.is_some() {
            checker.push(
                item,
                DiagnosticCode::NameAndPronoun,
                subject.clone(),
                "role carries both a proper name and a pronoun".into(),
            );
        }
        for rel in &role.relatives {
            checker.refs(item, &subject, "rel.ref", Accepts::Actions, &rel.refs);
            referenced.extend(&rel.refs);
        }
        for adp in &role.adpositions {
            checker.refs(item, &subject, "adp.ref", Accepts::Roles, adp.refs.iter());
            referenced.extend(adp.refs.iter());
        }
        if let Some(pronoun) = &role.pronoun {
            checker.refs(item, &subject, "pro.ref", Accepts::Roles, &pronoun.refs);
            referenced.extend(&pronoun.refs);
        }
    }

    let offset = doc.roles.len();
    for (i, action) in doc.actions.iter().enumerate() {
        let item = offset + i;
        let subject = Subject::Declaration(action.id.clone());
        for (field, groups) in [("agt", &action.agents), ("thm", &action.themes)] {
            if let Some(groups) = groups {
                checker.refs(item, &subject, field, Accepts::Either, groups.iter());
                referenced.extend(groups.iter());
            }
        }
        if let Some(cmp) = &action.comparison {
            if cmp.typ.requires_refs() && cmp.refs.is_empty() {
                checker.push(
                    item,
                    DiagnosticCode::ComparisonWithoutRef,
                    subject.clone(),
                    format!("comparison `{}` needs a reference", cmp.typ),
                );
            }
            checker.refs(item, &subject, "cmp.ref", Accepts::Roles, &cmp.refs);
            referenced.extend(&cmp.refs);
        }
        for adp in &action.adpositions {
            checker.refs(item, &subject, "adp.ref", Accepts::Roles, adp.refs.iter());
            referenced.extend(adp.refs.iter());
        }
        for cls in &action.adverbials {
            checker.refs(item, &subject, "cls.ref", Accepts::Actions, &cls.refs);
            referenced.extend(&cls.refs);
        }
    }

    let offset = offset + doc.actions.len();
    for (i, sentence) in doc.sentences.iter().enumerate() {
        let subject = Subject::Sentence(i);
        if sentence.actions.is_empty() {
            checker.push(
                offset + i,
                DiagnosticCode::EmptySentence,
                subject.clone(),
                "sentence lists no actions".into(),
            );
        }
        checker.refs(offset + i, &subject, "act", Accepts::Actions, &sentence.actions);
        referenced.extend(&sentence.actions);
    }

    for (item, role) in doc.roles.iter().enumerate() {
        if !referenced.contains(&role.id) {
            checker.push(
                item,
                DiagnosticCode::UnreferencedRole,
                Subject::Declaration(role.id.clone()),
                format!("role `{}` is never referenced", role.id),
            );
        }
    }
    for (i, action) in doc.actions.iter().enumerate() {
        if !referenced.contains(&action.id) {
            checker.push(
                doc.roles.len() + i,
                DiagnosticCode::OrphanAction,
                Subject::Declaration(action.id.clone()),
                format!("action `{}` is used by no sentence and no link", action.id),
            );
        }
    }

    let mut found = checker.found;
    found.sort_by_key(|(item, d)| (*item, d.code));
    found.into_iter().map(|(_, d)| d).collect()
}
