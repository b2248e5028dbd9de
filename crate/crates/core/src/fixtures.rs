//! The bundled example corpus.
//!
//! Each fixture is a pair of files under `fixtures/`: `NAME.ston` and a TOML
//! sidecar `NAME.expect`:
//!
//! ```toml
//! diagnostics = ["W03"]            # validator codes, in reported order
//! realize = "Karim sleeps."        # English text, one line per sentence
//! fragments = ["sleeps"]           # substrings of the text or the source
//!
//! [stats]                          # optional corpus counts
//! sentences = 1
//! ```

use serde::Deserialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsExpectation {
    pub sentences: usize,
    pub roles: usize,
    pub actions: usize,
    pub distinct_synsets: usize,
    pub relations: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    #[serde(default)]
    pub diagnostics: Vec<String>,
    /// Without the trailing newline.
    pub realize: Option<String>,
    #[serde(default)]
    pub fragments: Vec<String>,
    pub stats: Option<StatsExpectation>,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub expect: Expectation,
}

macro_rules! fixtures {
    ($($name:literal),+ $(,)?) => {
        &[$((
            $name,
            include_str!(concat!("../fixtures/", $name, ".ston")),
            include_str!(concat!("../fixtures/", $name, ".expect")),
        )),+]
    };
}

const FILES: &[(&str, &str, &str)] = fixtures![
    "empty",
    "fat-man",
    "consecutive-actions",
    "relative-sbj",
    "relative-obj",
    "relative-io",
    "comparison-adjective",
    "comparison-verb",
    "proper-names",
    "coordination",
    "two-objects",
    "pronoun-possessive",
    "passive",
    "complementizer",
    "redundancy",
    "adposition-of",
    "adverbial",
    "verb-group",
    "warnings",
    "biography",
];

pub fn fixture_inventory() -> Vec<Fixture> {
    FILES
        .iter()
        .map(|(name, text, expect)| Fixture {
            name,
            text,
            expect: toml::from_str(expect)
                .unwrap_or_else(|e| panic!("fixtures/{name}.expect: {e}")),
        })
        .collect()
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixture_inventory().into_iter().find(|f| f.name == name)
}
