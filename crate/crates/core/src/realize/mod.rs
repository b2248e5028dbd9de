//! English surface realization.
//!
//! Each sentence block becomes one line of text. Lemmas come from the
//! lexicon (first lemma wins); inflection comes from [`morph`].

pub mod morph;

use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::model::*;
use crate::validate::{has_errors, validate, Diagnostic};

use morph::{verb_forms, VerbForms};

const LANG: &str = "en";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("synset {}:{:08} not found in the lexicon", .pos.letter(), .offset)]
    SynsetNotFound { pos: PartOfSpeech, offset: u32 },
    #[error("document has validation errors")]
    Invalid(Vec<Diagnostic>),
}

type Words = Vec<String>;
type Result<T> = std::result::Result<T, RealizeError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Subject,
    Object,
}

/// Subject features the finite verb agrees with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Agreement {
    pub person: Person,
    pub plural: bool,
}

impl Agreement {
    pub const THIRD_SINGULAR: Agreement = Agreement {
        person: Person::Third,
        plural: false,
    };
    pub const THIRD_PLURAL: Agreement = Agreement {
        person: Person::Third,
        plural: true,
    };

    fn third_singular(self) -> bool {
        self.person == Person::Third && !self.plural
    }
}

/// The whole document, one line per sentence, each ending in a newline.
pub fn realize_document(doc: &Document, lex: &Lexicon) -> Result<String> {
    let mut out = String::new();
    for line in realize_sentences(doc, lex)? {
        out.push_str(&line?);
        out.push('\n');
    }
    Ok(out)
}

/// Realizes every sentence independently so one missing synset does not
/// hide the others. The outer error is a validation failure.
pub fn realize_sentences(doc: &Document, lex: &Lexicon) -> Result<Vec<Result<String>>> {
    let diagnostics = validate(doc);
    if has_errors(&diagnostics) {
        return Err(RealizeError::Invalid(diagnostics));
    }
    let mut r = Realizer::new(doc, lex);
    Ok(doc.sentences.iter().map(|s| r.sentence(s)).collect())
}

/// Verb group of an action in its default voice: passive when there are
/// themes but no agents (the copula excepted), infinitive when untensed.
pub fn realize_verb_group(action: &Action, lex: &Lexicon, agreement: Agreement) -> Result<Words> {
    let doc = Document::new();
    let r = Realizer::new(&doc, lex);
    let form = if action.tense.is_some() {
        Form::Finite
    } else {
        Form::Infinitive
    };
    let passive = form == Form::Finite
        && action.agents.is_none()
        && action.themes.is_some()
        && !r.is_copula(action)?;
    r.verb_group(action, form, passive, agreement)
}

/// The noun phrase for a role of `doc`, including its links.
pub fn realize_role(doc: &Document, role: &Role, lex: &Lexicon, case: Case) -> Result<Words> {
    Realizer::new(doc, lex).role(role, case, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Form {
    Finite,
    Infinitive,
    Imperative,
}

/// Where the head of a relative clause sits inside that clause.
#[derive(Debug, Clone, Copy)]
enum Gap<'a> {
    None,
    Subject(&'a Role),
    Object(&'a Role),
    Adposition(AdpositionType, &'a Role),
}

#[derive(Debug, Clone, Copy)]
struct ClauseOpts<'a> {
    form: Form,
    gap: Gap<'a>,
    drop_subject: bool,
    bare_subject: bool,
}

impl ClauseOpts<'_> {
    fn new(form: Form) -> Self {
        ClauseOpts {
            form,
            gap: Gap::None,
            drop_subject: false,
            bare_subject: false,
        }
    }
}

pub fn adposition_word(typ: AdpositionType) -> &'static str {
    use AdpositionType::*;
    match typ {
        Ago => "ago",
        From => "from",
        In => "in",
        Since => "since",
        To => "to",
        For => "for",
        Before => "before",
        After => "after",
        By => "by",
        Inside => "inside",
        Outside => "outside",
        Below => "under",
        Above => "above",
        Between => "between",
        Through => "through",
        On => "about",
        With => "with",
        Of => "of",
        As => "as",
        Under => "under",
    }
}

pub fn adverbial_word(typ: AdverbialType) -> &'static str {
    use AdverbialType::*;
    match typ {
        When => "when",
        While => "while",
        Where => "where",
        If => "if",
        So => "so",
        Because => "because",
        Though => "although",
        Like => "as",
        After => "after",
        Before => "before",
    }
}

/// Joins phrases as `a, b and c`.
fn join_list(items: Vec<Words>, conj: &str) -> Words {
    let n = items.len();
    let mut out = Words::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 && i == n - 1 {
            out.push(conj.to_string());
        }
        out.extend(item);
        if i + 2 < n {
            if let Some(last) = out.last_mut() {
                last.push(',');
            }
        }
    }
    out
}

fn pronoun_agreement(p: &Pronoun) -> Agreement {
    Agreement {
        person: if p.kind == PronounKind::Demonstrative {
            Person::Third
        } else {
            p.person
        },
        plural: p.number != GrammaticalNumber::Singular,
    }
}

/// Subjective, objective, possessive determiner, independent possessive.
fn personal_forms(p: &Pronoun) -> [&'static str; 4] {
    let singular = p.number == GrammaticalNumber::Singular;
    match (p.person, singular, p.gender) {
        (Person::First, true, _) => ["I", "me", "my", "mine"],
        (Person::First, false, _) => ["we", "us", "our", "ours"],
        (Person::Second, _, _) => ["you", "you", "your", "yours"],
        (Person::Third, true, Gender::Male) => ["he", "him", "his", "his"],
        (Person::Third, true, Gender::Female) => ["she", "her", "her", "hers"],
        (Person::Third, true, Gender::Neuter) => ["it", "it", "its", "its"],
        (Person::Third, false, _) => ["they", "them", "their", "theirs"],
    }
}

fn demonstrative(proximity: Proximity, plural: bool) -> &'static str {
    match (proximity == Proximity::Proximal, plural) {
        (true, false) => "this",
        (true, true) => "these",
        (false, false) => "that",
        (false, true) => "those",
    }
}

fn is_plural(q: Quantity) -> bool {
    match q {
        Quantity::Plural => true,
        Quantity::Cardinal(n) => n.get() > 1,
        Quantity::Ordinal(_) => false,
    }
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

struct Realizer<'a> {
    doc: &'a Document,
    lex: &'a Lexicon,
    /// Roles and actions being expanded, to cut reference cycles.
    roles: Vec<Identifier>,
    actions: Vec<Identifier>,
}

impl<'a> Realizer<'a> {
    fn new(doc: &'a Document, lex: &'a Lexicon) -> Self {
        Realizer {
            doc,
            lex,
            roles: Vec::new(),
            actions: Vec::new(),
        }
    }

    fn lemma(&self, syn: SynsetRef) -> Result<String> {
        self.lex
            .preferred(LANG, syn)
            .map(|l| l.replace('_', " "))
            .ok_or(RealizeError::SynsetNotFound {
                pos: syn.pos,
                offset: syn.offset,
            })
    }

    fn is_copula(&self, action: &Action) -> Result<bool> {
        Ok(self.lemma(action.syn)? == "be")
    }

    fn sentence(&mut self, sentence: &Sentence) -> Result<String> {
        let (form, terminator) = match sentence.typ {
            SentenceType::Affirmation => (Form::Finite, "."),
            SentenceType::Exclamation => (Form::Finite, "!"),
            SentenceType::Question => (Form::Finite, "?"),
            SentenceType::Imperative => (Form::Imperative, "."),
        };
        let mut parts = Vec::new();
        let mut previous: Option<&Action> = None;
        for id in &sentence.actions {
            let Some(action) = self.doc.action(id) else {
                continue;
            };
            let mut opts = ClauseOpts::new(form);
            opts.drop_subject = previous.is_some_and(|p| {
                action.agents.is_some() && p.agents == action.agents && p.tense.is_some()
            }) && action.tense.is_some();
            parts.push(self.clause(action, opts)?);
            previous = Some(action);
        }
        let text = join_list(parts, "and").join(" ");
        Ok(format!("{}{terminator}", capitalize(&text)))
    }

    fn clause(&mut self, action: &'a Action, opts: ClauseOpts<'a>) -> Result<Words> {
        if self.actions.contains(&action.id) {
            return Ok(vec![verb_forms(&self.lemma(action.syn)?).base]);
        }
        self.actions.push(action.id.clone());
        let out = self.clause_inner(action, opts);
        self.actions.pop();
        out
    }

    fn clause_inner(&mut self, action: &'a Action, opts: ClauseOpts<'a>) -> Result<Words> {
        let form = match opts.form {
            Form::Finite if action.tense.is_none() => Form::Infinitive,
            f => f,
        };
        let subject_gap = matches!(opts.gap, Gap::Subject(_));
        // Without agents the themes move to subject position. That makes the
        // verb passive, except for the copula which has no passive.
        let promoted =
            form == Form::Finite && action.agents.is_none() && action.themes.is_some() && !subject_gap;
        let passive = promoted && !self.is_copula(action)?;
        let (mut subject, mut objects) = if promoted {
            (action.themes.clone(), None)
        } else {
            (action.agents.clone(), action.themes.clone())
        };
        let mut agreement = Agreement::THIRD_SINGULAR;
        if let Gap::Object(head) = opts.gap {
            objects = objects.and_then(|g| g.without(&head.id));
            if promoted {
                subject = subject.and_then(|g| g.without(&head.id));
                if subject.is_none() {
                    agreement = self.role_agreement(head);
                }
            }
        }

        let mut words = Words::new();
        if form == Form::Finite {
            if let Gap::Subject(head) = opts.gap {
                agreement = self.role_agreement(head);
            } else if let Some(groups) = &subject {
                agreement = self.groups_agreement(groups);
                if !opts.drop_subject {
                    words.extend(self.groups(groups, Case::Subject, opts.bare_subject)?);
                }
            }
        }
        words.extend(self.verb_group(action, form, passive, agreement)?);
        if let Some(groups) = &objects {
            words.extend(self.groups(groups, Case::Object, false)?);
        }
        for adv in &action.adverbs {
            for m in &adv.adverbs {
                words.push(self.lemma(*m)?);
            }
            words.push(self.lemma(adv.syn)?);
        }
        if let Some(cmp) = &action.comparison {
            words.extend(self.comparison(cmp)?);
        }
        for link in &action.adpositions {
            let refs = match opts.gap {
                Gap::Adposition(typ, head) if typ == link.typ => link.refs.without(&head.id),
                _ => Some(link.refs.clone()),
            };
            if let Some(refs) = refs {
                words.extend(self.adposition(link.typ, &refs)?);
            }
        }
        for link in &action.adverbials {
            words.push(adverbial_word(link.typ).to_string());
            let mut clauses = Vec::new();
            for id in &link.refs {
                if let Some(a) = self.doc.action(id) {
                    clauses.push(self.clause(a, ClauseOpts::new(Form::Finite))?);
                }
            }
            words.extend(join_list(clauses, "and"));
        }
        Ok(words)
    }

    fn verb_group(&self, action: &Action, form: Form, passive: bool, agr: Agreement) -> Result<Words> {
        #[derive(Clone, Copy, PartialEq)]
        enum Slot {
            Have,
            Progressive,
            Passive,
            Main,
        }
        let main = verb_forms(&self.lemma(action.syn)?);
        let be = verb_forms("be");
        let have = verb_forms("have");
        let mut chain = Vec::new();
        if action.perfect {
            chain.push(Slot::Have);
        }
        if action.progressive {
            chain.push(Slot::Progressive);
        }
        if passive {
            chain.push(Slot::Passive);
        }
        chain.push(Slot::Main);
        let forms_of = |slot: Slot| match slot {
            Slot::Have => &have,
            Slot::Progressive | Slot::Passive => &be,
            Slot::Main => &main,
        };

        let tense = action.tense.unwrap_or(Tense::Present);
        let mut lead: Words = match (action.modality, form) {
            (Some(m), _) => modal_phrase(m, tense).iter().map(|w| w.to_string()).collect(),
            (None, Form::Infinitive) => vec!["to".into()],
            (None, Form::Imperative) => vec![],
            (None, Form::Finite) if tense == Tense::Future => vec!["will".into()],
            (None, Form::Finite) => vec![],
        };
        let finite = lead.is_empty() && form == Form::Finite;

        // Each slot after the first is inflected by the one before it.
        let mut body = Words::new();
        for (i, slot) in chain.iter().enumerate() {
            let f = forms_of(*slot);
            let word = match i.checked_sub(1).map(|p| chain[p]) {
                None if finite => finite_form(f, tense, agr),
                None => f.base.clone(),
                Some(Slot::Have) => f.participle.clone(),
                Some(Slot::Progressive) => f.ing.clone(),
                Some(Slot::Passive) | Some(Slot::Main) => f.participle.clone(),
            };
            body.push(word);
        }

        if action.negated {
            if !lead.is_empty() && form != Form::Infinitive {
                if lead == ["had", "to"] {
                    lead = vec!["did".into(), "not".into(), "have".into(), "to".into()];
                } else if lead == ["can"] {
                    lead = vec!["cannot".into()];
                } else {
                    lead.insert(1, "not".into());
                }
            } else if form == Form::Infinitive {
                lead.insert(0, "not".into());
            } else if form == Form::Imperative {
                lead = vec!["do".into(), "not".into()];
            } else if chain[0] != Slot::Main || main.base == "be" || main.base.starts_with("be ") {
                body.insert(1, "not".into());
            } else {
                let do_forms = verb_forms("do");
                body[0] = main.base.clone();
                lead = vec![finite_form(&do_forms, tense, agr), "not".into()];
            }
        }
        lead.extend(body);
        Ok(lead.join(" ").split(' ').map(str::to_string).collect())
    }

    fn role_agreement(&self, role: &Role) -> Agreement {
        match &role.pronoun {
            Some(p) if role.syn.is_none() && role.name.is_none() => pronoun_agreement(p),
            Some(p) if matches!(p.kind, PronounKind::Subjective | PronounKind::Objective) => Agreement {
                person: p.person,
                plural: is_plural(role.quantity),
            },
            _ => Agreement {
                person: Person::Third,
                plural: is_plural(role.quantity),
            },
        }
    }

    /// English agrees with the nearest disjunct, which is the last group.
    fn groups_agreement(&self, groups: &ReferenceGroups) -> Agreement {
        match groups.groups().last().map(Vec::as_slice) {
            Some([single]) => self
                .doc
                .role(single)
                .map_or(Agreement::THIRD_SINGULAR, |r| self.role_agreement(r)),
            Some(_) => Agreement::THIRD_PLURAL,
            None => Agreement::THIRD_SINGULAR,
        }
    }

    fn groups(&mut self, groups: &ReferenceGroups, case: Case, bare: bool) -> Result<Words> {
        let mut alternatives = Vec::new();
        for group in groups.groups() {
            alternatives.push(self.conjunction(group, case, bare)?);
        }
        Ok(join_list(alternatives, "or"))
    }

    fn conjunction(&mut self, ids: &[Identifier], case: Case, bare: bool) -> Result<Words> {
        let mut items = Vec::new();
        for id in ids {
            if let Some(role) = self.doc.role(id) {
                items.push(self.role(role, case, bare)?);
            } else if let Some(action) = self.doc.action(id) {
                items.push(self.complement(action)?);
            }
        }
        Ok(join_list(items, "and"))
    }

    /// An action standing in for a participant.
    fn complement(&mut self, action: &'a Action) -> Result<Words> {
        if action.tense.is_some() {
            let mut words = vec!["that".to_string()];
            words.extend(self.clause(action, ClauseOpts::new(Form::Finite))?);
            Ok(words)
        } else {
            self.clause(action, ClauseOpts::new(Form::Infinitive))
        }
    }

    fn adposition(&mut self, typ: AdpositionType, refs: &ReferenceGroups) -> Result<Words> {
        let phrase = self.groups(refs, Case::Object, false)?;
        let word = adposition_word(typ).to_string();
        Ok(if typ == AdpositionType::Ago {
            phrase.into_iter().chain([word]).collect()
        } else {
            [word].into_iter().chain(phrase).collect()
        })
    }

    fn comparison(&mut self, cmp: &Comparison) -> Result<Words> {
        let adj = cmp.adj.map(|s| self.lemma(s)).transpose()?;
        let mut refs = Vec::new();
        for id in &cmp.refs {
            if let Some(role) = self.doc.role(id) {
                refs.push(self.role(role, Case::Object, false)?);
            }
        }
        let refs = (!refs.is_empty()).then(|| join_list(refs, "and"));
        let mut words: Words = Vec::new();
        let link = match cmp.typ {
            ComparisonType::More | ComparisonType::Less => {
                let word = if cmp.typ == ComparisonType::More { "more" } else { "less" };
                match (&adj, adj.as_deref().and_then(morph::comparative)) {
                    (Some(_), Some(short)) if cmp.typ == ComparisonType::More => words.push(short),
                    (Some(a), _) => words.extend([word.to_string(), a.clone()]),
                    (None, _) => words.push(word.to_string()),
                }
                "than"
            }
            ComparisonType::Most | ComparisonType::Least => {
                let word = if cmp.typ == ComparisonType::Most { "most" } else { "least" };
                words.push("the".into());
                match (&adj, adj.as_deref().and_then(morph::superlative)) {
                    (Some(_), Some(short)) if cmp.typ == ComparisonType::Most => words.push(short),
                    (Some(a), _) => words.extend([word.to_string(), a.clone()]),
                    (None, _) => words.push(word.to_string()),
                }
                "of"
            }
            ComparisonType::Equal => {
                words.push("as".into());
                words.push(adj.clone().unwrap_or_else(|| "much".into()));
                "as"
            }
        };
        if let Some(refs) = refs {
            words.push(link.into());
            words.extend(refs);
        }
        Ok(words)
    }

    fn role(&mut self, role: &'a Role, case: Case, bare: bool) -> Result<Words> {
        let mut words = self.role_head(role, case, bare)?;
        if self.roles.contains(&role.id) {
            return Ok(words);
        }
        self.roles.push(role.id.clone());
        let out = self.role_links(role, &mut words);
        self.roles.pop();
        out.map(|_| words)
    }

    fn role_links(&mut self, role: &'a Role, words: &mut Words) -> Result<()> {
        for link in &role.adpositions {
            words.extend(self.adposition(link.typ, &link.refs)?);
        }
        let mut relatives = Vec::new();
        for link in &role.relatives {
            relatives.push(self.relative(role, link)?);
        }
        words.extend(join_list(relatives, "and"));
        Ok(())
    }

    fn is_personal(&self, role: &Role) -> Result<bool> {
        if let Some(p) = &role.pronoun {
            if p.person != Person::Third || p.gender != Gender::Neuter {
                return Ok(role.syn.is_none() || p.kind != PronounKind::Possessive);
            }
        }
        match role.syn {
            Some(syn) => Ok(morph::is_person(&self.lemma(syn)?)),
            None => Ok(false),
        }
    }

    fn relative(&mut self, head: &'a Role, link: &RelativeLink) -> Result<Words> {
        let personal = self.is_personal(head)?;
        let (mut words, gap, bare): (Words, Gap<'a>, bool) = match link.typ {
            RelativeType::Subject => (
                vec![if personal { "who" } else { "which" }.into()],
                Gap::Subject(head),
                false,
            ),
            RelativeType::Object => (
                vec![if personal { "whom" } else { "which" }.into()],
                Gap::Object(head),
                false,
            ),
            RelativeType::Possessive => (vec!["whose".into()], Gap::None, true),
            RelativeType::Reason => (vec!["why".into()], Gap::None, false),
            RelativeType::IndirectObject(typ) => (
                vec![
                    adposition_word(typ).into(),
                    if personal { "whom" } else { "which" }.into(),
                ],
                Gap::Adposition(typ, head),
                false,
            ),
        };
        let mut clauses = Vec::new();
        for id in &link.refs {
            if let Some(action) = self.doc.action(id) {
                let mut opts = ClauseOpts::new(Form::Finite);
                opts.gap = gap;
                opts.bare_subject = bare;
                clauses.push(self.clause(action, opts)?);
            }
        }
        words.extend(join_list(clauses, "and"));
        Ok(words)
    }

    fn role_head(&self, role: &Role, case: Case, bare: bool) -> Result<Words> {
        let plural = is_plural(role.quantity);
        if role.syn.is_none() && role.name.is_none() {
            let Some(p) = &role.pronoun else {
                return Ok(Words::new());
            };
            let word = match p.kind {
                PronounKind::Demonstrative => {
                    demonstrative(p.proximity, p.number != GrammaticalNumber::Singular)
                }
                PronounKind::Possessive => personal_forms(p)[3],
                _ => personal_forms(p)[if case == Case::Subject { 0 } else { 1 }],
            };
            return Ok(vec![word.to_string()]);
        }

        let mut words = Words::new();
        let mut article = false;
        if !bare {
            match &role.pronoun {
                Some(p) if p.kind == PronounKind::Possessive => words.push(personal_forms(p)[2].into()),
                Some(p) if p.kind == PronounKind::Demonstrative => {
                    words.push(demonstrative(p.proximity, plural).into())
                }
                // A name already identifies the referent.
                Some(p) if role.name.is_none() => {
                    let forms = personal_forms(p);
                    words.push(forms[if case == Case::Subject { 0 } else { 1 }].into());
                }
                _ if role.defined => words.push("the".into()),
                _ => article = role.name.is_none() && !plural,
            }
        }
        match role.quantity {
            Quantity::Ordinal(n) => words.push(morph::ordinal(n.get())),
            Quantity::Cardinal(n) if n.get() > 1 => words.push(morph::cardinal(n.get())),
            _ => {}
        }
        for adj in &role.adjectives {
            for m in &adj.adverbs {
                words.push(self.lemma(*m)?);
            }
            words.push(self.lemma(adj.syn)?);
        }
        match (&role.name, role.syn) {
            (Some(name), _) => words.push(name.spoken()),
            (None, Some(syn)) => {
                let lemma = self.lemma(syn)?;
                if morph::is_mass(&lemma) {
                    article = false;
                }
                words.push(if plural { morph::plural(&lemma) } else { lemma });
            }
            (None, None) => {}
        }
        if article {
            let next = words.first().cloned().unwrap_or_default();
            words.insert(0, morph::indefinite_article(&next).into());
        }
        Ok(words)
    }
}

fn modal_phrase(m: Modality, tense: Tense) -> &'static [&'static str] {
    match (tense, m) {
        (Tense::Past, Modality::May) => &["might"],
        (Tense::Past, Modality::Can) => &["could"],
        (Tense::Past, Modality::Must) => &["had", "to"],
        (Tense::Future, Modality::May) => &["may"],
        (Tense::Future, Modality::Can) => &["will", "be", "able", "to"],
        (Tense::Future, Modality::Must) => &["will", "have", "to"],
        (_, Modality::May) => &["may"],
        (_, Modality::Can) => &["can"],
        (_, Modality::Must) => &["must"],
    }
}

fn finite_form(f: &VerbForms, tense: Tense, agr: Agreement) -> String {
    let first_singular = agr.person == Person::First && !agr.plural;
    if f.base == "be" {
        return match tense {
            Tense::Past if agr.third_singular() || first_singular => "was",
            Tense::Past => "were",
            _ if first_singular => "am",
            _ if agr.third_singular() => "is",
            _ => "are",
        }
        .to_string();
    }
    match tense {
        Tense::Past => f.past.clone(),
        _ if agr.third_singular() => f.third.clone(),
        _ => f.base.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn lex() -> Lexicon {
        Lexicon::bundled()
    }

    fn action(header: &str) -> Action {
        let doc = parse(&format!(
            "@ston @roles r:{{ id: man; syn: 10287213; }} @actions a:{{ id: x; syn: 1168468; {header} agt: [man]; }} @sentences s:{{ typ: AFF; act: [x]; }} @end"
        ))
        .unwrap();
        doc.actions[0].clone()
    }

    fn group(header: &str, agr: Agreement) -> String {
        realize_verb_group(&action(header), &lex(), agr).unwrap().join(" ")
    }

    fn realize(text: &str) -> String {
        realize_document(&parse(text).unwrap(), &lex()).unwrap()
    }

    #[test]
    fn verb_groups() {
        let sg = Agreement::THIRD_SINGULAR;
        assert_eq!(group("tns: PA; neg: Y;", sg), "did not eat");
        assert_eq!(group("tns: PR; prg: Y;", sg), "is eating");
        assert_eq!(group("tns: PR; prg: Y;", Agreement::THIRD_PLURAL), "are eating");
        assert_eq!(group("tns: PA; prf: Y;", sg), "had eaten");
        assert_eq!(group("tns: FU;", sg), "will eat");
        assert_eq!(group("", sg), "to eat");
        assert_eq!(group("neg: Y;", sg), "not to eat");
        assert_eq!(group("tns: PR;", sg), "eats");
        assert_eq!(group("tns: PR; prf: Y; prg: Y; neg: Y;", sg), "has not been eating");
        assert_eq!(group("tns: FU; neg: Y; prf: Y;", sg), "will not have eaten");
        assert_eq!(group("tns: PA; mod: CAN; neg: Y;", sg), "could not eat");
        assert_eq!(group("tns: PA; mod: MUST; neg: Y;", sg), "did not have to eat");
        let first = Agreement {
            person: Person::First,
            plural: false,
        };
        assert_eq!(group("tns: PR; prg: Y;", first), "am eating");
    }

    #[test]
    fn must_try() {
        let doc = parse(
            "@ston @roles r:{ id: you; pro:{ typ: SSNNFN; } } @actions a:{ id: t; syn: 2530167; tns: PR; mod: MUST; agt: [you]; } @sentences s:{ typ: AFF; act: [t]; } @end",
        )
        .unwrap();
        let g = realize_verb_group(&doc.actions[0], &lex(), Agreement::THIRD_SINGULAR).unwrap();
        assert_eq!(g, ["must", "try"]);
        assert_eq!(realize_document(&doc, &lex()).unwrap(), "You must try.\n");
    }

    #[test]
    fn fat_man() {
        assert_eq!(
            realize(
                "@ston @roles r:{ id: man; syn: 10287213; def: Y; adj:{ syn: 301234; } }
                 r:{ id: food; syn: 7555863; adj:{ syn: 302894; } }
                 @actions a:{ id: eat; syn: 1168468; tns: PR; agt: [man]; thm: [food]; }
                 @sentences s:{ typ: AFF; act: [eat]; } @end"
            ),
            "The fat man eats delicious food.\n"
        );
    }

    #[test]
    fn passive_without_agent() {
        assert_eq!(
            realize(
                "@ston @roles r:{ id: apple; syn: 7739125; }
                 @actions a:{ id: eat; syn: 1168468; tns: PA; thm: [apple]; }
                 @sentences s:{ typ: AFF; act: [eat]; } @end"
            ),
            "An apple was eaten.\n"
        );
    }

    #[test]
    fn agentless_copula_is_not_passive() {
        assert_eq!(
            realize(
                "@ston @roles r:{ id: child; syn: 9917593; def: Y; adj:{ syn: 1799457; } }
                 @actions a:{ id: be; syn: 2604760; tns: PR; prf: Y; thm: [child]; }
                 @sentences s:{ typ: AFF; act: [be]; } @end"
            ),
            "The happy child has been.\n"
        );
    }

    #[test]
    fn empty_document_is_empty_text() {
        assert_eq!(realize_document(&Document::new(), &lex()).unwrap(), "");
    }

    #[test]
    fn roles() {
        let doc = parse(
            "@ston @roles r:{ id: karim; syn: 7846; nam: Karim; }
             r:{ id: novel; syn: 6367879; qnt: O1; pro:{ typ: PTSMFN; ref: [karim]; } }
             r:{ id: trees; syn: 13104059; def: Y; qnt: PL; }
             r:{ id: jijel; syn: 8524735; nam: Jijel; }
             r:{ id: he; pro:{ typ: STSMFN; } }
             r:{ id: three; syn: 10285313; qnt: 3; adj:{ syn: 1382086; adv: [31899]; } }
             @actions @sentences @end",
        )
        .unwrap();
        let lex = lex();
        let show = |i: usize, case| realize_role(&doc, &doc.roles[i], &lex, case).unwrap().join(" ");
        assert_eq!(show(1, Case::Object), "his first novel");
        assert_eq!(show(2, Case::Object), "the trees");
        assert_eq!(show(3, Case::Object), "Jijel");
        assert_eq!(show(4, Case::Subject), "he");
        assert_eq!(show(4, Case::Object), "him");
        assert_eq!(show(5, Case::Object), "three very big boys");
    }

    #[test]
    fn missing_synset() {
        let doc = parse(
            "@ston @roles r:{ id: x; syn: 42; } @actions a:{ id: e; syn: 1168468; tns: PR; agt: [x]; }
             @sentences s:{ typ: AFF; act: [e]; } s:{ typ: IMP; act: [e]; } @end",
        )
        .unwrap();
        let lines = realize_sentences(&doc, &lex()).unwrap();
        assert_eq!(
            lines[0],
            Err(RealizeError::SynsetNotFound {
                pos: PartOfSpeech::Noun,
                offset: 42
            })
        );
        assert_eq!(lines[1].as_deref(), Ok("Eat."));
        assert!(realize_document(&doc, &lex()).is_err());
    }

    #[test]
    fn invalid_documents_are_rejected() {
        let doc = parse("@ston @roles @actions @sentences s:{ typ: AFF; act: [nope]; } @end").unwrap();
        assert!(matches!(realize_document(&doc, &lex()), Err(RealizeError::Invalid(_))));
    }

    #[test]
    fn cyclic_complements_terminate() {
        let out = realize(
            "@ston @roles r:{ id: k; syn: 7846; nam: Karim; }
             @actions a:{ id: a; syn: 1811441; tns: PR; agt: [k]; thm: [b]; }
             a:{ id: b; syn: 1811441; tns: PR; agt: [k]; thm: [a]; }
             @sentences s:{ typ: QST; act: [a]; } @end",
        );
        assert_eq!(out, "Karim hopes that Karim hopes that hope?\n");
    }
}
