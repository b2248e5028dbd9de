//! Corpus counters.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::model::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusStats {
    pub sentences: usize,
    pub roles: usize,
    pub actions: usize,
    pub distinct_synsets: usize,
    /// Adposition, relative and adverbial links plus every identifier in
    /// agent and theme groups. Pronoun references are not relations.
    pub relations: usize,
    /// Action references in sentence blocks over sentence count; zero for an
    /// empty corpus.
    pub avg_actions_per_sentence: Ratio<u64>,
}

impl CorpusStats {
    pub fn to_value(&self) -> Value {
        json!({
            "sentences": self.sentences,
            "roles": self.roles,
            "actions": self.actions,
            "distinct_synsets": self.distinct_synsets,
            "relations": self.relations,
            "avg_actions_per_sentence": self.avg_actions_per_sentence.to_string(),
        })
    }
}

impl fmt::Display for CorpusStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let avg = self.avg_actions_per_sentence;
        let decimal = *avg.numer() as f64 / *avg.denom() as f64;
        writeln!(f, "sentences                 {}", self.sentences)?;
        writeln!(f, "roles                     {}", self.roles)?;
        writeln!(f, "actions                   {}", self.actions)?;
        writeln!(f, "distinct_synsets          {}", self.distinct_synsets)?;
        writeln!(f, "relations                 {}", self.relations)?;
        write!(f, "avg_actions_per_sentence  {avg} ({decimal:.2})")
    }
}

fn group_size(refs: &Option<ReferenceGroups>) -> usize {
    refs.as_ref().map_or(0, |g| g.iter().count())
}

pub fn stats<'a>(docs: impl IntoIterator<Item = &'a Document>) -> CorpusStats {
    let mut synsets = BTreeSet::new();
    let (mut sentences, mut roles, mut actions, mut relations, mut acts) = (0, 0, 0, 0, 0u64);

    for doc in docs {
        sentences += doc.sentences.len();
        roles += doc.roles.len();
        actions += doc.actions.len();
        acts += doc.sentences.iter().map(|s| s.actions.len() as u64).sum::<u64>();

        for role in &doc.roles {
            synsets.extend(role.syn);
            for adj in &role.adjectives {
                synsets.insert(adj.syn);
                synsets.extend(adj.adverbs.iter().copied());
            }
            relations += role.adpositions.len() + role.relatives.len();
        }
        for action in &doc.actions {
            synsets.insert(action.syn);
            for adv in &action.adverbs {
                synsets.insert(adv.syn);
                synsets.extend(adv.adverbs.iter().copied());
            }
            if let Some(adj) = action.comparison.as_ref().and_then(|c| c.adj) {
                synsets.insert(adj);
            }
            relations += action.adpositions.len()
                + action.adverbials.len()
                + group_size(&action.agents)
                + group_size(&action.themes);
        }
    }

    let avg = if sentences == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(acts, sentences as u64)
    };
    CorpusStats {
        sentences,
        roles,
        actions,
        distinct_synsets: synsets.len(),
        relations,
        avg_actions_per_sentence: avg,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    const FAT_MAN: &str = "@ston @roles
        r:{ id: man; syn: 10287213; def: Y; adj:{ syn: 301234; } }
        r:{ id: food; syn: 7555863; adj:{ syn: 302894; } }
        @actions a:{ id: eat; syn: 1168468; tns: PR; agt: [man]; thm: [food]; }
        @sentences s:{ typ: AFF; act: [eat]; } @end";

    #[test]
    fn empty_corpus() {
        let s = stats([]);
        assert_eq!(
            (s.sentences, s.roles, s.actions, s.distinct_synsets, s.relations),
            (0, 0, 0, 0, 0)
        );
        assert_eq!(s.avg_actions_per_sentence, Ratio::from_integer(0));
    }

    #[test]
    fn fat_man_counts() {
        let s = stats([&parse(FAT_MAN).unwrap()]);
        assert_eq!(
            (s.sentences, s.roles, s.actions, s.distinct_synsets, s.relations),
            (1, 2, 1, 5, 2)
        );
        assert_eq!(s.avg_actions_per_sentence, Ratio::from_integer(1));
    }

    #[test]
    fn gift_counts_three_relations() {
        let doc = parse(
            "@ston @roles r:{ id: man; syn: 10287213; def: Y; } r:{ id: gift; syn: 13265011; }
             r:{ id: boy; syn: 10285313; def: Y; }
             @actions a:{ id: give; syn: 2199590; tns: PA; agt: [man]; thm: [gift];
               adp:{ typ: TO; ref: [boy]; } }
             @sentences s:{ typ: AFF; act: [give]; } @end",
        )
        .unwrap();
        assert_eq!(stats([&doc]).relations, 3);
    }

    #[test]
    fn same_synset_across_documents_counts_once() {
        let doc = parse(FAT_MAN).unwrap();
        let s = stats([&doc, &doc]);
        assert_eq!(s.distinct_synsets, 5);
        assert_eq!(s.relations, 4);
        assert_eq!(s.sentences, 2);
    }
}
