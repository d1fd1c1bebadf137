//! Consistency checks on the bundled lexicon.

use wazn::{
    analyze_word, apply_scheme, enumerate_all, match_schemes, AnalysisKind, Category, LexiconSet,
};

#[test]
fn seed_files_on_disk_match_embedded_copy() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/seed");
    assert_eq!(wazn::load_lexicons(&dir).unwrap(), LexiconSet::seed());
}

#[test]
fn roots_are_sorted_triliterals() {
    let lex = LexiconSet::seed();
    let roots: Vec<&str> = lex.roots().map(|r| r.as_str()).collect();
    assert!(roots.windows(2).all(|w| w[0] < w[1]));
    assert!(roots.iter().all(|r| r.chars().count() == 3));
    assert!(roots.contains(&"خرج") && roots.contains(&"هرب"));
}

/// A closed-class word that could also be composed from a known root would
/// hide the derived reading behind the whole-word lookup.
#[test]
fn closed_class_words_are_not_composable() {
    let lex = LexiconSet::seed();
    let words: Vec<&str> = lex
        .stop_words()
        .chain(lex.function_words().map(|(w, _)| w))
        .chain(lex.specific_words())
        .collect();
    for w in words {
        for seg in enumerate_all(w, &lex) {
            let m = match_schemes(seg.base(), &lex);
            assert!(
                m.is_empty(),
                "{w} decomposes as {seg:?} with {:?}",
                m[0].root
            );
        }
    }
}

#[test]
fn no_instantiated_scheme_is_a_closed_class_base() {
    let lex = LexiconSet::seed();
    for root in lex.roots() {
        for s in lex.schemes() {
            let base = apply_scheme(root, s);
            assert!(lex.function_word(&base).is_none(), "{base}");
            assert!(!lex.is_specific(&base), "{base}");
        }
    }
}

#[test]
fn scheme_categories() {
    let lex = LexiconSet::seed();
    let cat = |w: &str| {
        lex.schemes()
            .iter()
            .find(|s| s.wazn() == w)
            .unwrap()
            .category()
    };
    assert_eq!(cat("مفعول"), Category::Noun);
    assert_eq!(cat("انفعل"), Category::Verb);
    assert_eq!(cat("فاعل"), Category::Both);
    assert_eq!(cat("مفاعلة"), Category::Noun);
}

#[test]
fn worked_examples() {
    let lex = LexiconSet::seed();
    let best = |w: &str| analyze_word(w, &lex).best().clone();

    let a = best("صالح");
    assert_eq!(
        (a.scheme.as_deref(), a.root.as_deref()),
        (Some("فاعل"), Some("صلح"))
    );

    assert_eq!(best("مكتوب").category, Some(Category::Noun));

    let a = best("مساجد");
    assert_eq!(
        (a.scheme.as_deref(), a.root.as_deref()),
        (Some("مفاعل"), Some("سجد"))
    );

    let a = best("فكاتيبهم");
    assert_eq!(
        (a.proclitic.as_str(), a.base.as_str(), a.enclitic.as_str()),
        ("ف", "كاتيب", "هم")
    );

    assert_eq!(best("فسمعهم").root.as_deref(), Some("سمع"));
    assert_eq!(best("فسأعلنه").base, "علن");
    assert_eq!(best("أحمد").kind, AnalysisKind::Specific);
}
