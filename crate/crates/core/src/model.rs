//! The language-neutral document model.
//!
//! A [`Document`] is three ordered lists: roles (nominal phrases), actions
//! (verbs with their arguments) and sentences (ordered lists of actions).
//! Roles and actions share one identifier namespace; links between blocks
//! are plain [`Identifier`]s resolved by the validator.

use std::collections::HashSet;
use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("`{0}` is not a valid identifier")]
    InvalidIdentifier(String),
    #[error("`{0}` is not a valid proper name (use underscores for spaces)")]
    InvalidName(String),
    #[error("synset offset {0} exceeds 99999999")]
    SynsetOutOfRange(u64),
    #[error("`{0}` is not a valid quantity")]
    InvalidQuantity(String),
    #[error("pronoun code must be 6 characters, got {0}")]
    PronounCodeLength(usize),
    #[error("invalid pronoun code character `{character}` at position {position}")]
    InvalidPronounCode { position: usize, character: char },
    #[error("reference groups must contain at least one non-empty group")]
    EmptyReferenceGroups,
}

/// Defines an enumeration whose variants round-trip through fixed text codes.
macro_rules! coded_enum {
    (
        $(#[$meta:meta])*
        pub enum $name:ident { $($(#[$vmeta:meta])* $variant:ident = $code:literal),+ $(,)? }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($(#[$vmeta])* $variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn code(self) -> &'static str {
                match self {
                    $($name::$variant => $code),+
                }
            }

            pub fn from_code(code: &str) -> Option<Self> {
                match code {
                    $($code => Some($name::$variant),)+
                    _ => None,
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.code())
            }
        }
    };
}

fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Name of a role or action, `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identifier(String);

impl Identifier {
    pub fn new(text: impl Into<String>) -> Result<Self, ModelError> {
        let text = text.into();
        if is_identifier(&text) {
            Ok(Identifier(text))
        } else {
            Err(ModelError::InvalidIdentifier(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Identifier {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identifier::new(s)
    }
}

/// A proper name carried by a role's `nam` attribute. Spaces are written as
/// underscores, so the stored text is always a single token.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProperName(String);

impl ProperName {
    pub fn new(text: impl Into<String>) -> Result<Self, ModelError> {
        let text = text.into();
        if is_identifier(&text) {
            Ok(ProperName(text))
        } else {
            Err(ModelError::InvalidName(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The name with underscores turned back into spaces.
    pub fn spoken(&self) -> String {
        self.0.replace('_', " ")
    }
}

impl fmt::Display for ProperName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Adjective,
    Adverb,
}

impl PartOfSpeech {
    pub const ALL: [PartOfSpeech; 4] = [
        PartOfSpeech::Noun,
        PartOfSpeech::Verb,
        PartOfSpeech::Adjective,
        PartOfSpeech::Adverb,
    ];

    /// Wordnet-style single letter: n, v, a, r.
    pub fn letter(self) -> char {
        match self {
            PartOfSpeech::Noun => 'n',
            PartOfSpeech::Verb => 'v',
            PartOfSpeech::Adjective => 'a',
            PartOfSpeech::Adverb => 'r',
        }
    }

    pub fn from_letter(letter: &str) -> Option<Self> {
        match letter {
            "n" => Some(PartOfSpeech::Noun),
            "v" => Some(PartOfSpeech::Verb),
            "a" => Some(PartOfSpeech::Adjective),
            "r" => Some(PartOfSpeech::Adverb),
            _ => None,
        }
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PartOfSpeech::Noun => "NOUN",
            PartOfSpeech::Verb => "VERB",
            PartOfSpeech::Adjective => "ADJ",
            PartOfSpeech::Adverb => "ADV",
        };
        f.write_str(name)
    }
}

/// A lexicon concept. The part of speech is never written in STON text; it
/// follows from where the number appears.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynsetRef {
    pub pos: PartOfSpeech,
    pub offset: u32,
}

impl SynsetRef {
    pub const MAX_OFFSET: u32 = 99_999_999;

    pub fn new(pos: PartOfSpeech, offset: u64) -> Result<Self, ModelError> {
        if offset > u64::from(Self::MAX_OFFSET) {
            return Err(ModelError::SynsetOutOfRange(offset));
        }
        Ok(SynsetRef {
            pos,
            offset: offset as u32,
        })
    }

    pub fn noun(offset: u32) -> Self {
        Self::checked(PartOfSpeech::Noun, offset)
    }

    pub fn verb(offset: u32) -> Self {
        Self::checked(PartOfSpeech::Verb, offset)
    }

    pub fn adjective(offset: u32) -> Self {
        Self::checked(PartOfSpeech::Adjective, offset)
    }

    pub fn adverb(offset: u32) -> Self {
        Self::checked(PartOfSpeech::Adverb, offset)
    }

    fn checked(pos: PartOfSpeech, offset: u32) -> Self {
        assert!(offset <= Self::MAX_OFFSET, "synset offset {offset} out of range");
        SynsetRef { pos, offset }
    }
}

impl fmt::Display for SynsetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:08}", self.pos, self.offset)
    }
}

/// Amount of a role. Text forms: `3`, `O2` (ordinal), `PL`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Cardinal(NonZeroU32),
    Ordinal(NonZeroU32),
    Plural,
}

impl Quantity {
    pub const ONE: Quantity = Quantity::Cardinal(NonZeroU32::MIN);

    pub fn cardinal(n: u32) -> Option<Self> {
        NonZeroU32::new(n).map(Quantity::Cardinal)
    }

    pub fn ordinal(n: u32) -> Option<Self> {
        NonZeroU32::new(n).map(Quantity::Ordinal)
    }

    pub fn is_default(&self) -> bool {
        *self == Quantity::ONE
    }

    /// True when the head noun takes its plural form.
    pub fn is_plural(&self) -> bool {
        match self {
            Quantity::Plural => true,
            Quantity::Cardinal(n) => n.get() > 1,
            Quantity::Ordinal(_) => false,
        }
    }
}

impl Default for Quantity {
    fn default() -> Self {
        Quantity::ONE
    }
}

fn parse_positive(digits: &str) -> Option<NonZeroU32> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse::<u32>().ok().and_then(NonZeroU32::new)
}

impl FromStr for Quantity {
    type Err = ModelError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let parsed = if text == "PL" {
            Some(Quantity::Plural)
        } else if let Some(rest) = text.strip_prefix('O') {
            parse_positive(rest).map(Quantity::Ordinal)
        } else {
            parse_positive(text).map(Quantity::Cardinal)
        };
        parsed.ok_or_else(|| ModelError::InvalidQuantity(text.to_string()))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Cardinal(n) => write!(f, "{n}"),
            Quantity::Ordinal(n) => write!(f, "O{n}"),
            Quantity::Plural => f.write_str("PL"),
        }
    }
}

coded_enum! {
    pub enum PronounKind {
        Demonstrative = "D",
        Subjective = "S",
        Objective = "O",
        Possessive = "P",
    }
}

coded_enum! {
    pub enum Person {
        First = "F",
        Second = "S",
        Third = "T",
    }
}

coded_enum! {
    pub enum GrammaticalNumber {
        Singular = "S",
        Dual = "D",
        Plural = "P",
        Undefined = "N",
    }
}

coded_enum! {
    pub enum Gender {
        Female = "F",
        Male = "M",
        Neuter = "N",
    }
}

coded_enum! {
    pub enum Formality {
        Rude = "R",
        Casual = "C",
        Formal = "F",
        Polite = "P",
    }
}

coded_enum! {
    pub enum Proximity {
        Distal = "D",
        Medial = "M",
        Proximal = "P",
        Undefined = "N",
    }
}

/// A pronoun, written as a 6-letter feature code plus the roles it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pronoun {
    pub kind: PronounKind,
    pub person: Person,
    pub number: GrammaticalNumber,
    pub gender: Gender,
    pub formality: Formality,
    pub proximity: Proximity,
    pub refs: Vec<Identifier>,
}

impl Pronoun {
    pub const CODE_LEN: usize = 6;

    /// Legal letters at each of the six code positions.
    pub fn legal_letters(position: usize) -> Vec<char> {
        fn first<T: Copy>(all: &[T], code: impl Fn(T) -> &'static str) -> Vec<char> {
            all.iter().map(|&v| code(v).chars().next().unwrap()).collect()
        }
        match position {
            1 => first(PronounKind::ALL, PronounKind::code),
            2 => first(Person::ALL, Person::code),
            3 => first(GrammaticalNumber::ALL, GrammaticalNumber::code),
            4 => first(Gender::ALL, Gender::code),
            5 => first(Formality::ALL, Formality::code),
            6 => first(Proximity::ALL, Proximity::code),
            _ => Vec::new(),
        }
    }

    /// Decodes a 6-character feature code; the result has no refs.
    pub fn decode(code: &str) -> Result<Pronoun, ModelError> {
        let chars: Vec<char> = code.chars().collect();
        if chars.len() != Self::CODE_LEN {
            return Err(ModelError::PronounCodeLength(chars.len()));
        }
        fn field<T>(
            chars: &[char],
            position: usize,
            decode: impl Fn(&str) -> Option<T>,
        ) -> Result<T, ModelError> {
            let character = chars[position - 1];
            let mut buf = [0u8; 4];
            decode(character.encode_utf8(&mut buf))
                .ok_or(ModelError::InvalidPronounCode { position, character })
        }
        Ok(Pronoun {
            kind: field(&chars, 1, PronounKind::from_code)?,
            person: field(&chars, 2, Person::from_code)?,
            number: field(&chars, 3, GrammaticalNumber::from_code)?,
            gender: field(&chars, 4, Gender::from_code)?,
            formality: field(&chars, 5, Formality::from_code)?,
            proximity: field(&chars, 6, Proximity::from_code)?,
            refs: Vec::new(),
        })
    }

    pub fn encode(&self) -> String {
        [
            self.kind.code(),
            self.person.code(),
            self.number.code(),
            self.gender.code(),
            self.formality.code(),
            self.proximity.code(),
        ]
        .concat()
    }

    pub fn with_refs(mut self, refs: Vec<Identifier>) -> Self {
        self.refs = refs;
        self
    }
}

coded_enum! {
    /// Adpositional relation between a role or action and roles.
    pub enum AdpositionType {
        Ago = "AGO",
        From = "FRM",
        In = "IN",
        Since = "SNC",
        To = "TO",
        For = "FOR",
        Before = "BEF",
        After = "AFT",
        By = "BY",
        Inside = "INS",
        Outside = "OUT",
        Below = "BLW",
        Above = "ABV",
        Between = "BTW",
        Through = "THR",
        On = "ON",
        With = "WTH",
        Of = "OF",
        As = "AS",
        Under = "UND",
    }
}

coded_enum! {
    /// Adverbial clause relation between two actions.
    pub enum AdverbialType {
        When = "WHN",
        While = "WHL",
        Where = "WHR",
        If = "IF",
        So = "SO",
        Because = "BCS",
        Though = "THG",
        Like = "LIK",
        After = "FTR",
        Before = "BFR",
    }
}

coded_enum! {
    pub enum ComparisonType {
        Less = "L",
        More = "M",
        Least = "LT",
        Most = "MT",
        Equal = "EQ",
    }
}

impl ComparisonType {
    /// Superlatives need no second participant.
    pub fn requires_refs(self) -> bool {
        !matches!(self, ComparisonType::Least | ComparisonType::Most)
    }
}

coded_enum! {
    pub enum Tense {
        Past = "PA",
        Present = "PR",
        Future = "FU",
    }
}

coded_enum! {
    pub enum Modality {
        May = "MAY",
        Can = "CAN",
        Must = "MUST",
    }
}

coded_enum! {
    pub enum SentenceType {
        Affirmation = "AFF",
        Exclamation = "EXC",
        Question = "QST",
        Imperative = "IMP",
    }
}

/// How the head role participates in a relative clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelativeType {
    Subject,
    Possessive,
    Object,
    Reason,
    IndirectObject(AdpositionType),
}

impl RelativeType {
    pub fn all() -> impl Iterator<Item = RelativeType> {
        [
            RelativeType::Subject,
            RelativeType::Possessive,
            RelativeType::Object,
            RelativeType::Reason,
        ]
        .into_iter()
        .chain(
            AdpositionType::ALL
                .iter()
                .map(|&a| RelativeType::IndirectObject(a)),
        )
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "SBJ" => Some(RelativeType::Subject),
            "POS" => Some(RelativeType::Possessive),
            "OBJ" => Some(RelativeType::Object),
            "RSN" => Some(RelativeType::Reason),
            _ => code
                .strip_prefix("IO_")
                .and_then(AdpositionType::from_code)
                .map(RelativeType::IndirectObject),
        }
    }
}

impl fmt::Display for RelativeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelativeType::Subject => f.write_str("SBJ"),
            RelativeType::Possessive => f.write_str("POS"),
            RelativeType::Object => f.write_str("OBJ"),
            RelativeType::Reason => f.write_str("RSN"),
            RelativeType::IndirectObject(adp) => write!(f, "IO_{adp}"),
        }
    }
}

/// Coordinated references: alternatives ("or") of co-participant groups ("and").
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReferenceGroups(Vec<Vec<Identifier>>);

impl ReferenceGroups {
    pub fn new(groups: Vec<Vec<Identifier>>) -> Result<Self, ModelError> {
        if groups.is_empty() || groups.iter().any(Vec::is_empty) {
            return Err(ModelError::EmptyReferenceGroups);
        }
        Ok(ReferenceGroups(groups))
    }

    /// A single group holding one identifier.
    pub fn single(id: Identifier) -> Self {
        ReferenceGroups(vec![vec![id]])
    }

    /// Rebuilds groups from a flat identifier list and the group sizes.
    pub fn from_flat(ids: Vec<Identifier>, sizes: &[usize]) -> Result<Self, ModelError> {
        if sizes.iter().sum::<usize>() != ids.len() {
            return Err(ModelError::EmptyReferenceGroups);
        }
        let mut ids = ids.into_iter();
        let groups = sizes
            .iter()
            .map(|&n| ids.by_ref().take(n).collect())
            .collect();
        ReferenceGroups::new(groups)
    }

    pub fn groups(&self) -> &[Vec<Identifier>] {
        &self.0
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Identifier> {
        self.0.iter().flatten()
    }

    pub fn contains(&self, id: &Identifier) -> bool {
        self.iter().any(|r| r == id)
    }

    /// Removes `id` everywhere; `None` when nothing is left.
    pub fn without(&self, id: &Identifier) -> Option<ReferenceGroups> {
        let groups: Vec<Vec<Identifier>> = self
            .0
            .iter()
            .map(|g| g.iter().filter(|r| *r != id).cloned().collect::<Vec<_>>())
            .filter(|g| !g.is_empty())
            .collect();
        ReferenceGroups::new(groups).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjectiveBlock {
    pub syn: SynsetRef,
    pub adverbs: Vec<SynsetRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdverbBlock {
    pub syn: SynsetRef,
    pub adverbs: Vec<SynsetRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelativeLink {
    pub typ: RelativeType,
    pub refs: Vec<Identifier>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdpositionLink {
    pub typ: AdpositionType,
    pub refs: ReferenceGroups,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdverbialLink {
    pub typ: AdverbialType,
    pub refs: Vec<Identifier>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub typ: ComparisonType,
    pub refs: Vec<Identifier>,
    pub adj: Option<SynsetRef>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Role {
    pub id: Identifier,
    pub syn: Option<SynsetRef>,
    pub name: Option<ProperName>,
    pub pronoun: Option<Pronoun>,
    pub quantity: Quantity,
    pub defined: bool,
    pub adjectives: Vec<AdjectiveBlock>,
    pub relatives: Vec<RelativeLink>,
    pub adpositions: Vec<AdpositionLink>,
}

impl Role {
    pub fn new(id: Identifier) -> Self {
        Role {
            id,
            syn: None,
            name: None,
            pronoun: None,
            quantity: Quantity::ONE,
            defined: false,
            adjectives: Vec::new(),
            relatives: Vec::new(),
            adpositions: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub id: Identifier,
    pub syn: SynsetRef,
    /// Absent agents mean the action can only be realized in the passive.
    pub agents: Option<ReferenceGroups>,
    pub themes: Option<ReferenceGroups>,
    /// Absent tense means the action is tense-free.
    pub tense: Option<Tense>,
    pub progressive: bool,
    pub perfect: bool,
    pub negated: bool,
    pub modality: Option<Modality>,
    pub adverbs: Vec<AdverbBlock>,
    pub comparison: Option<Comparison>,
    pub adpositions: Vec<AdpositionLink>,
    pub adverbials: Vec<AdverbialLink>,
}

impl Action {
    pub fn new(id: Identifier, syn: SynsetRef) -> Self {
        Action {
            id,
            syn,
            agents: None,
            themes: None,
            tense: None,
            progressive: false,
            perfect: false,
            negated: false,
            modality: None,
            adverbs: Vec::new(),
            comparison: None,
            adpositions: Vec::new(),
            adverbials: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub typ: SentenceType,
    /// Consecutive actions, in order.
    pub actions: Vec<Identifier>,
}

/// What an identifier is declared as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    Role,
    Action,
}

impl fmt::Display for DeclKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeclKind::Role => "role",
            DeclKind::Action => "action",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub roles: Vec<Role>,
    pub actions: Vec<Action>,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty() && self.actions.is_empty() && self.sentences.is_empty()
    }

    pub fn role(&self, id: &Identifier) -> Option<&Role> {
        self.roles.iter().find(|r| &r.id == id)
    }

    pub fn action(&self, id: &Identifier) -> Option<&Action> {
        self.actions.iter().find(|a| &a.id == id)
    }

    /// Every declared identifier, roles first, in declaration order.
    pub fn declarations(&self) -> impl Iterator<Item = (&Identifier, DeclKind)> {
        self.roles
            .iter()
            .map(|r| (&r.id, DeclKind::Role))
            .chain(self.actions.iter().map(|a| (&a.id, DeclKind::Action)))
    }

    /// Identifiers declared more than once across roles and actions, each
    /// reported at its repeated occurrence.
    pub fn duplicate_ids(&self) -> Vec<&Identifier> {
        let mut seen = HashSet::new();
        self.declarations()
            .filter(|(id, _)| !seen.insert(*id))
            .map(|(id, _)| id)
            .collect()
    }

    /// Appends another document's blocks after this one's.
    pub fn append(&mut self, other: Document) {
        self.roles.extend(other.roles);
        self.actions.extend(other.actions);
        self.sentences.extend(other.sentences);
    }
}
