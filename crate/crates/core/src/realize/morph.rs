//! English inflection tables and suffix rules.

/// Inflected forms of a verb lemma, excluding `be` which has its own paradigm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbForms {
    pub base: String,
    pub third: String,
    pub past: String,
    pub participle: String,
    pub ing: String,
}

// base, third singular, past, past participle, present participle
const IRREGULAR_VERBS: &[[&str; 5]] = &[
    ["be", "is", "was", "been", "being"],
    ["have", "has", "had", "had", "having"],
    ["do", "does", "did", "done", "doing"],
    ["eat", "eats", "ate", "eaten", "eating"],
    ["give", "gives", "gave", "given", "giving"],
    ["go", "goes", "went", "gone", "going"],
    ["come", "comes", "came", "come", "coming"],
    ["see", "sees", "saw", "seen", "seeing"],
    ["take", "takes", "took", "taken", "taking"],
    ["make", "makes", "made", "made", "making"],
    ["say", "says", "said", "said", "saying"],
    ["get", "gets", "got", "gotten", "getting"],
    ["bear", "bears", "bore", "born", "bearing"],
    ["write", "writes", "wrote", "written", "writing"],
    ["win", "wins", "won", "won", "winning"],
    ["drink", "drinks", "drank", "drunk", "drinking"],
    ["read", "reads", "read", "read", "reading"],
    ["sleep", "sleeps", "slept", "slept", "sleeping"],
    ["teach", "teaches", "taught", "taught", "teaching"],
    ["speak", "speaks", "spoke", "spoken", "speaking"],
    ["know", "knows", "knew", "known", "knowing"],
    ["think", "thinks", "thought", "thought", "thinking"],
    ["buy", "buys", "bought", "bought", "buying"],
    ["find", "finds", "found", "found", "finding"],
    ["tell", "tells", "told", "told", "telling"],
    ["leave", "leaves", "left", "left", "leaving"],
    ["meet", "meets", "met", "met", "meeting"],
    ["run", "runs", "ran", "run", "running"],
];

const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("man", "men"),
    ("woman", "women"),
    ("child", "children"),
    ("person", "people"),
    ("leaf", "leaves"),
    ("life", "lives"),
    ("wife", "wives"),
    ("knife", "knives"),
    ("half", "halves"),
    ("foot", "feet"),
    ("tooth", "teeth"),
    ("mouse", "mice"),
    ("physics", "physics"),
    ("sheep", "sheep"),
    ("fish", "fish"),
];

const IRREGULAR_GRADES: &[[&str; 3]] = &[
    ["good", "better", "best"],
    ["bad", "worse", "worst"],
    ["far", "farther", "farthest"],
];

/// Nouns that take no indefinite article in the singular.
const MASS_NOUNS: &[&str] = &[
    "food", "water", "meat", "physics", "music", "literature", "coffee", "television",
    "information", "knowledge", "money", "bread", "milk", "rice", "advice", "work",
];

/// Heads that select `who` rather than `which` in relative clauses.
const PERSON_NOUNS: &[&str] = &[
    "person", "man", "woman", "boy", "girl", "child", "mother", "father", "brother", "sister",
    "writer", "author", "student", "teacher", "friend", "family", "people",
];

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

pub fn syllables(word: &str) -> usize {
    let w = word.to_lowercase();
    let mut count = 0;
    let mut prev_vowel = false;
    for c in w.chars() {
        let v = is_vowel(c) || c == 'y';
        if v && !prev_vowel {
            count += 1;
        }
        prev_vowel = v;
    }
    if count > 1 && w.ends_with('e') && !w.ends_with("le") && !w.ends_with("ee") {
        count -= 1;
    }
    count.max(1)
}

/// One syllable ending consonant-vowel-consonant, final not w/x/y.
fn doubles_final(word: &str) -> bool {
    let c: Vec<char> = word.chars().collect();
    let n = c.len();
    n >= 3
        && syllables(word) == 1
        && !is_vowel(c[n - 1])
        && !matches!(c[n - 1], 'w' | 'x' | 'y')
        && is_vowel(c[n - 2])
        && !is_vowel(c[n - 3])
}

fn consonant_y(word: &str) -> bool {
    let mut rev = word.chars().rev();
    rev.next() == Some('y') && rev.next().is_some_and(|c| !is_vowel(c))
}

fn sibilant(word: &str) -> bool {
    ["s", "x", "z", "ch", "sh"].iter().any(|s| word.ends_with(s))
}

/// Applies `f` to the first word of a multi-word lemma such as `look_up`.
fn on_head(lemma: &str, f: impl Fn(&str) -> String) -> String {
    match lemma.split_once(' ') {
        Some((head, rest)) => format!("{} {rest}", f(head)),
        None => f(lemma),
    }
}

/// Applies `f` to the last word of a multi-word lemma such as `adult male`.
fn on_tail(lemma: &str, f: impl Fn(&str) -> String) -> String {
    match lemma.rsplit_once(' ') {
        Some((rest, tail)) => format!("{rest} {}", f(tail)),
        None => f(lemma),
    }
}

pub fn verb_forms(lemma: &str) -> VerbForms {
    let lemma = lemma.replace('_', " ");
    let irregular = |i: usize| {
        move |w: &str| match IRREGULAR_VERBS.iter().find(|r| r[0] == w) {
            Some(row) => row[i].to_string(),
            None => regular_verb(w, i),
        }
    };
    VerbForms {
        base: lemma.clone(),
        third: on_head(&lemma, irregular(1)),
        past: on_head(&lemma, irregular(2)),
        participle: on_head(&lemma, irregular(3)),
        ing: on_head(&lemma, irregular(4)),
    }
}

fn regular_verb(w: &str, form: usize) -> String {
    let stem = &w[..w.len().saturating_sub(1)];
    match form {
        1 if sibilant(w) || w.ends_with('o') => format!("{w}es"),
        1 if consonant_y(w) => format!("{stem}ies"),
        1 => format!("{w}s"),
        2 | 3 if w.ends_with('e') => format!("{w}d"),
        2 | 3 if consonant_y(w) => format!("{stem}ied"),
        2 | 3 if doubles_final(w) => format!("{w}{}ed", &w[w.len() - 1..]),
        2 | 3 => format!("{w}ed"),
        _ if w.ends_with("ie") => format!("{}ying", &w[..w.len() - 2]),
        _ if w.ends_with('e') && !w.ends_with("ee") && !w.ends_with("ye") && !w.ends_with("oe") && w.len() > 2 => {
            format!("{stem}ing")
        }
        _ if doubles_final(w) => format!("{w}{}ing", &w[w.len() - 1..]),
        _ => format!("{w}ing"),
    }
}

pub fn plural(lemma: &str) -> String {
    on_tail(&lemma.replace('_', " "), |w| {
        let lower = w.to_lowercase();
        if let Some((_, p)) = IRREGULAR_PLURALS.iter().find(|(s, _)| *s == lower) {
            return p.to_string();
        }
        if sibilant(w) {
            format!("{w}es")
        } else if consonant_y(w) {
            format!("{}ies", &w[..w.len() - 1])
        } else {
            format!("{w}s")
        }
    })
}

/// Possible singulars of a word; callers confirm with [`plural`].
pub fn singular_candidates(word: &str) -> Vec<String> {
    let mut out: Vec<String> = IRREGULAR_PLURALS
        .iter()
        .filter(|(_, p)| *p == word)
        .map(|(s, _)| s.to_string())
        .collect();
    if let Some(stem) = word.strip_suffix("ies") {
        out.push(format!("{stem}y"));
    }
    for suffix in ["es", "s"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            out.push(stem.to_string());
        }
    }
    out
}

/// Possible base forms of an inflected verb; callers confirm with [`verb_forms`].
pub fn verb_stem_candidates(word: &str) -> Vec<String> {
    let mut out = vec![word.to_string()];
    for row in IRREGULAR_VERBS {
        if row[1..].contains(&word) {
            out.push(row[0].to_string());
        }
    }
    for (suffix, add) in [("ies", "y"), ("ied", "y"), ("es", ""), ("s", ""), ("ed", ""), ("d", ""), ("ing", ""), ("ing", "e")] {
        if let Some(stem) = word.strip_suffix(suffix) {
            out.push(format!("{stem}{add}"));
        }
    }
    if let Some(stem) = word.strip_suffix("ed").or_else(|| word.strip_suffix("ing")) {
        if stem.len() > 1 {
            out.push(stem[..stem.len() - 1].to_string());
        }
    }
    out.dedup();
    out
}

/// `-er` for one-syllable adjectives, `None` when the periphrastic form applies.
pub fn comparative(adj: &str) -> Option<String> {
    graded(adj, 1, "er")
}

pub fn superlative(adj: &str) -> Option<String> {
    graded(adj, 2, "est")
}

fn graded(adj: &str, column: usize, suffix: &str) -> Option<String> {
    if let Some(row) = IRREGULAR_GRADES.iter().find(|r| r[0] == adj) {
        return Some(row[column].to_string());
    }
    if adj.contains(['_', ' ']) || syllables(adj) != 1 {
        return None;
    }
    Some(if adj.ends_with('e') {
        format!("{}{}", adj, &suffix[1..])
    } else if consonant_y(adj) {
        format!("{}i{suffix}", &adj[..adj.len() - 1])
    } else if doubles_final(adj) {
        format!("{adj}{}{suffix}", &adj[adj.len() - 1..])
    } else {
        format!("{adj}{suffix}")
    })
}

pub fn indefinite_article(next: &str) -> &'static str {
    let w = next.to_lowercase();
    let an = if ["uni", "use", "usu", "eu", "one", "once"].iter().any(|p| w.starts_with(p)) {
        false
    } else if ["hour", "honest", "honor", "heir"].iter().any(|p| w.starts_with(p)) {
        true
    } else {
        w.starts_with(is_vowel)
    };
    if an {
        "an"
    } else {
        "a"
    }
}

pub fn is_mass(lemma: &str) -> bool {
    MASS_NOUNS.contains(&lemma.to_lowercase().as_str())
}

pub fn is_person(lemma: &str) -> bool {
    PERSON_NOUNS.contains(&lemma.to_lowercase().as_str())
}

const CARDINALS: [&str; 13] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven",
    "twelve",
];

const ORDINALS: [&str; 13] = [
    "zeroth", "first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth",
    "tenth", "eleventh", "twelfth",
];

pub fn cardinal(n: u32) -> String {
    CARDINALS
        .get(n as usize)
        .map_or_else(|| n.to_string(), |w| w.to_string())
}

pub fn ordinal(n: u32) -> String {
    if let Some(w) = ORDINALS.get(n as usize) {
        return w.to_string();
    }
    let suffix = match (n % 10, n % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{n}{suffix}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_verbs() {
        let f = verb_forms("help");
        assert_eq!((f.third.as_str(), f.past.as_str(), f.ing.as_str()), ("helps", "helped", "helping"));
        let f = verb_forms("try");
        assert_eq!((f.third.as_str(), f.past.as_str(), f.ing.as_str()), ("tries", "tried", "trying"));
        let f = verb_forms("hope");
        assert_eq!((f.third.as_str(), f.past.as_str(), f.ing.as_str()), ("hopes", "hoped", "hoping"));
        let f = verb_forms("stop");
        assert_eq!((f.past.as_str(), f.ing.as_str()), ("stopped", "stopping"));
        let f = verb_forms("watch");
        assert_eq!((f.third.as_str(), f.past.as_str()), ("watches", "watched"));
        let f = verb_forms("die");
        assert_eq!((f.past.as_str(), f.ing.as_str()), ("died", "dying"));
        let f = verb_forms("develop");
        assert_eq!(f.past, "developed");
        let f = verb_forms("play");
        assert_eq!((f.third.as_str(), f.past.as_str()), ("plays", "played"));
    }

    #[test]
    fn irregular_and_phrasal_verbs() {
        let f = verb_forms("eat");
        assert_eq!((f.past.as_str(), f.participle.as_str(), f.ing.as_str()), ("ate", "eaten", "eating"));
        assert_eq!(verb_forms("go").third, "goes");
        assert_eq!(verb_forms("bear").participle, "born");
        assert_eq!(verb_forms("give_up").past, "gave up");
    }

    #[test]
    fn plurals() {
        for (s, p) in [
            ("tree", "trees"),
            ("leaf", "leaves"),
            ("man", "men"),
            ("child", "children"),
            ("city", "cities"),
            ("day", "days"),
            ("box", "boxes"),
            ("church", "churches"),
            ("adult_male", "adult males"),
            ("bank_clerk", "bank clerks"),
        ] {
            assert_eq!(plural(s), p);
        }
    }

    #[test]
    fn grading() {
        assert_eq!(comparative("tall").as_deref(), Some("taller"));
        assert_eq!(comparative("big").as_deref(), Some("bigger"));
        assert_eq!(comparative("large").as_deref(), Some("larger"));
        assert_eq!(comparative("good").as_deref(), Some("better"));
        assert_eq!(superlative("young").as_deref(), Some("youngest"));
        assert_eq!(comparative("delicious"), None);
        assert_eq!(comparative("happy"), None);
        assert_eq!(syllables("large"), 1);
        assert_eq!(syllables("little"), 2);
    }

    #[test]
    fn articles() {
        assert_eq!(indefinite_article("apple"), "an");
        assert_eq!(indefinite_article("gift"), "a");
        assert_eq!(indefinite_article("university"), "a");
        assert_eq!(indefinite_article("hour"), "an");
        assert_eq!(indefinite_article("Old"), "an");
    }

    #[test]
    fn numbers() {
        assert_eq!(ordinal(1), "first");
        assert_eq!(ordinal(21), "21st");
        assert_eq!(ordinal(13), "13th");
        assert_eq!(cardinal(3), "three");
        assert_eq!(cardinal(40), "40");
    }
}
