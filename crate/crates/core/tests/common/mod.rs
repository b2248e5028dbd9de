//! Seeded generators shared by the property and acceptance tests.
#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ston::lexicon::Lexicon;
use ston::*;

pub struct Limits {
    pub roles: usize,
    pub actions: usize,
    pub sentences: usize,
}

pub const LIMITS: Limits = Limits {
    roles: 10,
    actions: 5,
    sentences: 3,
};

const WORDS: &[&str] = &["man", "food", "tree", "eat", "go", "x", "city", "Karim", "_tmp", "a1"];
const NAMES: &[&str] = &["Karim", "Jijel", "Naguib_Mahfouz", "STON", "Oran", "X_1"];

/// Offsets per part of speech, taken from the bundled lexicon so generated
/// documents can also be realized.
pub struct Vocabulary {
    pub nouns: Vec<SynsetRef>,
    pub verbs: Vec<SynsetRef>,
    pub adjectives: Vec<SynsetRef>,
    pub adverbs: Vec<SynsetRef>,
}

impl Vocabulary {
    pub fn bundled() -> Self {
        let lex = Lexicon::bundled();
        let of = |pos| {
            let mut v: Vec<SynsetRef> = lex
                .entries()
                .filter(|(lang, syn, _)| *lang == "en" && syn.pos == pos)
                .map(|(_, syn, _)| syn)
                .collect();
            v.dedup();
            v
        };
        Vocabulary {
            nouns: of(PartOfSpeech::Noun),
            verbs: of(PartOfSpeech::Verb),
            adjectives: of(PartOfSpeech::Adjective),
            adverbs: of(PartOfSpeech::Adverb),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    *items.choose(rng).expect("non-empty")
}

fn id(s: String) -> Identifier {
    Identifier::new(s).expect("generated identifier")
}

fn pronoun(rng: &mut ChaCha8Rng) -> Pronoun {
    let code: String = (1..=6)
        .map(|p| pick(rng, &Pronoun::legal_letters(p)))
        .collect();
    Pronoun::decode(&code).expect("legal code")
}

fn some_of(rng: &mut ChaCha8Rng, pool: &[Identifier], max: usize) -> Vec<Identifier> {
    let n = rng.random_range(1..=max.min(pool.len()).max(1));
    (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect()
}

fn groups(rng: &mut ChaCha8Rng, pool: &[Identifier]) -> ReferenceGroups {
    let n = rng.random_range(1..=2);
    ReferenceGroups::new((0..n).map(|_| some_of(rng, pool, 3)).collect()).unwrap()
}

fn quantity(rng: &mut ChaCha8Rng) -> Quantity {
    match rng.random_range(0..6) {
        0 => Quantity::Plural,
        1 => Quantity::cardinal(rng.random_range(2..30)).unwrap(),
        2 => Quantity::ordinal(rng.random_range(1..30)).unwrap(),
        _ => Quantity::ONE,
    }
}

/// A document with no ERROR diagnostics, within `limits`.
pub fn document(rng: &mut ChaCha8Rng, vocab: &Vocabulary, limits: &Limits) -> Document {
    let n_roles = rng.random_range(0..=limits.roles);
    let n_sentences = rng.random_range(0..=limits.sentences);
    let min_actions = usize::from(n_sentences > 0);
    let n_actions = rng.random_range(min_actions..=limits.actions.max(min_actions));

    let role_ids: Vec<Identifier> = (0..n_roles)
        .map(|i| id(format!("{}_r{i}", pick(rng, WORDS))))
        .collect();
    let action_ids: Vec<Identifier> = (0..n_actions)
        .map(|i| id(format!("{}_a{i}", pick(rng, WORDS))))
        .collect();
    let any_ids: Vec<Identifier> = role_ids.iter().chain(&action_ids).cloned().collect();

    let mut doc = Document::new();
    for rid in &role_ids {
        let mut role = Role::new(rid.clone());
        let head = rng.random_range(0..3);
        if head != 0 {
            role.syn = Some(pick(rng, &vocab.nouns));
            if rng.random_bool(0.2) {
                role.name = Some(ProperName::new(pick(rng, NAMES)).unwrap());
            }
        }
        if head != 1 {
            let mut p = pronoun(rng);
            if rng.random_bool(0.5) {
                p.refs = some_of(rng, &role_ids, 2);
            }
            role.pronoun = Some(p);
        }
        role.quantity = quantity(rng);
        role.defined = rng.random_bool(0.4);
        for _ in 0..rng.random_range(0..3) {
            let adverbs = (0..rng.random_range(0..2)).map(|_| pick(rng, &vocab.adverbs)).collect();
            role.adjectives.push(AdjectiveBlock {
                syn: pick(rng, &vocab.adjectives),
                adverbs,
            });
        }
        if !action_ids.is_empty() {
            for _ in 0..rng.random_range(0..2) {
                let types: Vec<_> = RelativeType::all().collect();
                role.relatives.push(RelativeLink {
                    typ: pick(rng, &types),
                    refs: some_of(rng, &action_ids, 2),
                });
            }
        }
        if !role_ids.is_empty() {
            for _ in 0..rng.random_range(0..2) {
                role.adpositions.push(AdpositionLink {
                    typ: pick(rng, AdpositionType::ALL),
                    refs: groups(rng, &role_ids),
                });
            }
        }
        doc.roles.push(role);
    }

    for aid in &action_ids {
        let mut a = Action::new(aid.clone(), pick(rng, &vocab.verbs));
        if rng.random_bool(0.8) {
            a.tense = Some(pick(rng, Tense::ALL));
        }
        a.progressive = rng.random_bool(0.2);
        a.perfect = rng.random_bool(0.2);
        a.negated = rng.random_bool(0.2);
        if rng.random_bool(0.2) {
            a.modality = Some(pick(rng, Modality::ALL));
        }
        if rng.random_bool(0.7) {
            a.agents = Some(groups(rng, &any_ids));
        }
        if rng.random_bool(0.6) {
            a.themes = Some(groups(rng, &any_ids));
        }
        for _ in 0..rng.random_range(0..2) {
            let adverbs = (0..rng.random_range(0..2)).map(|_| pick(rng, &vocab.adverbs)).collect();
            a.adverbs.push(AdverbBlock {
                syn: pick(rng, &vocab.adverbs),
                adverbs,
            });
        }
        if !role_ids.is_empty() && rng.random_bool(0.2) {
            let typ = pick(rng, ComparisonType::ALL);
            let refs = if typ.requires_refs() || rng.random_bool(0.5) {
                some_of(rng, &role_ids, 2)
            } else {
                Vec::new()
            };
            let adj = rng.random_bool(0.5).then(|| pick(rng, &vocab.adjectives));
            a.comparison = Some(Comparison { typ, refs, adj });
        }
        if !role_ids.is_empty() {
            for _ in 0..rng.random_range(0..3) {
                a.adpositions.push(AdpositionLink {
                    typ: pick(rng, AdpositionType::ALL),
                    refs: groups(rng, &role_ids),
                });
            }
        }
        for _ in 0..rng.random_range(0..2) {
            a.adverbials.push(AdverbialLink {
                typ: pick(rng, AdverbialType::ALL),
                refs: some_of(rng, &action_ids, 2),
            });
        }
        doc.actions.push(a);
    }

    for _ in 0..n_sentences {
        doc.sentences.push(Sentence {
            typ: pick(rng, SentenceType::ALL),
            actions: some_of(rng, &action_ids, 3),
        });
    }
    doc
}

/// A larger realistic document: `n` sentences each with its own roles.
pub fn synthetic(n: usize) -> String {
    let mut roles = String::new();
    let mut actions = String::new();
    let mut sentences = String::new();
    for i in 0..n {
        roles.push_str(&format!(
            "r:{{ id: man{i}; syn: 10287213; def: Y; adj:{{ syn: 00301234; adv: [00031899]; }} }}\n\
             r:{{ id: food{i}; syn: 07555863; qnt: PL; adj:{{ syn: 00302894; }} rel:{{ typ: OBJ; ref: [like{i}]; }} }}\n\
             r:{{ id: city{i}; syn: 08524735; nam: Jijel; }}\n"
        ));
        actions.push_str(&format!(
            "a:{{ id: eat{i}; syn: 01168468; tns: PA; prg: Y; agt: [man{i}]; thm: [food{i}];\n  \
               adp:{{ typ: IN; ref: [city{i}]; }} cls:{{ typ: WHN; ref: [like{i}]; }} }}\n\
             a:{{ id: like{i}; syn: 01776727; tns: PR; agt: [man{i} | city{i}]; thm: [food{i}]; }}\n"
        ));
        sentences.push_str(&format!("s:{{ typ: AFF; act: [eat{i}, like{i}]; }}\n"));
    }
    format!("@ston\n@roles\n{roles}@actions\n{actions}@sentences\n{sentences}@end\n")
}

/// Identifier tokens inside `[...]` lists of a canonical text, as byte ranges.
pub fn list_references(text: &str) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    for tok in ston::tokenize(text).unwrap().windows(2) {
        let (prev, cur) = (tok[0], tok[1]);
        use ston::syntax::TokenKind::*;
        if cur.kind == Ident && matches!(prev.kind, LBracket | Comma | Pipe) {
            out.push(cur.location.offset..cur.location.offset + cur.text.len());
        }
    }
    out
}

/// Byte ranges of values of code-bearing keys: `typ`, `tns`, `mod`.
pub fn code_values(text: &str) -> Vec<std::ops::Range<usize>> {
    let tokens = ston::tokenize(text).unwrap();
    let mut out = Vec::new();
    for w in tokens.windows(3) {
        use ston::syntax::TokenKind::*;
        if w[0].kind == Ident && matches!(w[0].text, "typ" | "tns" | "mod") && w[1].kind == Colon && w[2].kind == Ident {
            out.push(w[2].location.offset..w[2].location.offset + w[2].text.len());
        }
    }
    out
}

pub fn random_seed_from(rng: &mut ChaCha8Rng) -> u64 {
    rng.random()
}
