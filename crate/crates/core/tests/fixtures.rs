use ston::canon::{serialize_canonical, serialize_min};
use ston::encode::encode;
use ston::fixtures::fixture_inventory;
use ston::interchange::{from_tree, to_tree};
use ston::lexicon::Lexicon;
use ston::realize::realize_document;
use ston::stats::stats;
use ston::validate::validate;
use ston::parse;

#[test]
fn inventory_is_large_enough() {
    let names: Vec<_> = fixture_inventory().iter().map(|f| f.name).collect();
    assert!(names.len() >= 12, "{names:?}");
}

#[test]
fn every_fixture_meets_its_expectations() {
    let lex = Lexicon::bundled();
    let mut failures = Vec::new();
    for f in fixture_inventory() {
        let mut fail = |what: String| failures.push(format!("{}: {what}", f.name));
        let doc = match parse(f.text) {
            Ok(doc) => doc,
            Err(errors) => {
                fail(format!("parse errors {errors:?}"));
                continue;
            }
        };
        let codes: Vec<String> = validate(&doc).iter().map(|d| d.code.to_string()).collect();
        if codes != f.expect.diagnostics {
            fail(format!("diagnostics {codes:?}"));
        }
        let canonical = serialize_canonical(&doc).unwrap();
        if parse(&canonical).as_ref() != Ok(&doc) {
            fail("canonical round trip".into());
        }
        if parse(&serialize_min(&doc).unwrap()).as_ref() != Ok(&doc) {
            fail("minified round trip".into());
        }
        if from_tree(&to_tree(&doc).unwrap()).as_ref() != Ok(&doc) {
            fail("interchange round trip".into());
        }
        let text = match realize_document(&doc, &lex) {
            Ok(text) => text,
            Err(e) => {
                fail(format!("realize: {e}"));
                continue;
            }
        };
        if let Some(expected) = &f.expect.realize {
            if text.trim_end_matches('\n') != expected {
                fail(format!("realized {text:?}"));
            }
        }
        for fragment in &f.expect.fragments {
            if !text.contains(fragment.as_str()) && !f.text.contains(fragment.as_str()) {
                fail(format!("missing fragment {fragment:?}"));
            }
        }
        if let Some(want) = &f.expect.stats {
            let s = stats([&doc]);
            let got = (s.sentences, s.roles, s.actions, s.distinct_synsets, s.relations);
            let want = (want.sentences, want.roles, want.actions, want.distinct_synsets, want.relations);
            if got != want {
                fail(format!("stats {got:?}, expected {want:?}"));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn relative_fixture_links_role_to_action() {
    let f = ston::fixtures::fixture("relative-sbj").unwrap();
    let doc = parse(f.text).unwrap();
    let man = doc.role(&"man".parse().unwrap()).unwrap();
    assert_eq!(man.relatives[0].typ, ston::RelativeType::Subject);
    assert!(doc.action(&man.relatives[0].refs[0]).is_some());
}

#[test]
fn empty_fixture_is_empty() {
    let f = ston::fixtures::fixture("empty").unwrap();
    assert!(parse(f.text).unwrap().is_empty());
}

#[test]
fn realized_fixtures_encode_back() {
    let lex = Lexicon::bundled();
    for name in ["fat-man", "two-objects"] {
        let f = ston::fixtures::fixture(name).unwrap();
        let doc = parse(f.text).unwrap();
        let text = realize_document(&doc, &lex).unwrap();
        let encoded = encode(text.trim_end(), &lex).unwrap();
        assert_eq!(encoded.document, doc, "{name}");
    }
}
