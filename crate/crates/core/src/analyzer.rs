//! The analysis pipeline: whole-word lookup, exhaustive segmentation,
//! scheme and root validation, ranking and interpretation.

use std::cmp::Ordering;

use serde::Serialize;

use crate::lexicons::{Category, LexiconSet, SuccessorClass, WordClass};
use crate::normalizer::Token;
use crate::scheme_matcher::match_schemes;
use crate::segmenter::{enumerate_all, Segmentation};

/// Declaration order is rank order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnalysisKind {
    Derived,
    FunctionWord,
    Specific,
    StopWord,
    Unanalyzed,
}

impl AnalysisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AnalysisKind::Derived => "derived",
            AnalysisKind::FunctionWord => "function_word",
            AnalysisKind::Specific => "specific",
            AnalysisKind::StopWord => "stop_word",
            AnalysisKind::Unanalyzed => "unanalyzed",
        }
    }

    pub const ALL: [AnalysisKind; 5] = [
        AnalysisKind::Derived,
        AnalysisKind::FunctionWord,
        AnalysisKind::Specific,
        AnalysisKind::StopWord,
        AnalysisKind::Unanalyzed,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Analysis {
    pub proclitic: String,
    pub prefix: String,
    pub base: String,
    pub suffix: String,
    pub enclitic: String,
    pub root: Option<String>,
    pub scheme: Option<String>,
    pub category: Option<Category>,
    pub kind: AnalysisKind,
    pub successor_class: Option<SuccessorClass>,
    /// Index of the matched scheme in the scheme file.
    #[serde(skip)]
    pub scheme_index: Option<usize>,
}

impl Analysis {
    /// An analysis with `base` as the whole word and no affixes.
    pub fn whole(base: &str, kind: AnalysisKind) -> Self {
        Analysis {
            proclitic: String::new(),
            prefix: String::new(),
            base: base.to_owned(),
            suffix: String::new(),
            enclitic: String::new(),
            root: None,
            scheme: None,
            category: None,
            kind,
            successor_class: None,
            scheme_index: None,
        }
    }

    fn from_segmentation(seg: &Segmentation, kind: AnalysisKind) -> Self {
        Analysis {
            proclitic: seg.proclitic().to_owned(),
            prefix: seg.prefix().to_owned(),
            base: seg.base().to_owned(),
            suffix: seg.suffix().to_owned(),
            enclitic: seg.enclitic().to_owned(),
            ..Analysis::whole("", kind)
        }
    }

    pub fn surface(&self) -> String {
        [
            self.proclitic.as_str(),
            &self.prefix,
            &self.base,
            &self.suffix,
            &self.enclitic,
        ]
        .concat()
    }

    pub fn stripped_len(&self) -> usize {
        [&self.proclitic, &self.prefix, &self.suffix, &self.enclitic]
            .iter()
            .map(|s| s.chars().count())
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisSet {
    pub token: Token,
    /// Best first; never empty.
    pub candidates: Vec<Analysis>,
}

impl AnalysisSet {
    pub fn best(&self) -> &Analysis {
        &self.candidates[0]
    }
}

/// Analyzes one token.
///
/// Non-Arabic tokens come back `Unanalyzed`. A whole-word hit in the stop,
/// function or specific dictionaries yields that single candidate. Anything
/// else goes through segmentation; a word with no valid decomposition is
/// reported as a specific word.
pub fn analyze(token: &Token, lex: &LexiconSet) -> AnalysisSet {
    let candidates = if !token.is_arabic() {
        vec![Analysis::whole(&token.raw, AnalysisKind::Unanalyzed)]
    } else {
        let word = token.normalized.as_str();
        match lex.classify_whole_word(word) {
            WordClass::StopWord => vec![Analysis::whole(word, AnalysisKind::StopWord)],
            WordClass::FunctionWord(class) => vec![Analysis {
                successor_class: Some(class),
                ..Analysis::whole(word, AnalysisKind::FunctionWord)
            }],
            WordClass::Specific => vec![Analysis::whole(word, AnalysisKind::Specific)],
            WordClass::NotFound => segment_and_validate(word, lex),
        }
    };
    let candidates = rank(candidates)
        .into_iter()
        .map(|a| interpret(a, lex))
        .collect();
    AnalysisSet {
        token: token.clone(),
        candidates,
    }
}

/// Convenience wrapper for a single word.
pub fn analyze_word(word: &str, lex: &LexiconSet) -> AnalysisSet {
    analyze(&Token::from_word(word, 0), lex)
}

fn segment_and_validate(word: &str, lex: &LexiconSet) -> Vec<Analysis> {
    let mut out = Vec::new();
    for seg in enumerate_all(word, lex) {
        if let Some(class) = lex.function_word(seg.base()) {
            out.push(Analysis {
                successor_class: Some(class),
                ..Analysis::from_segmentation(&seg, AnalysisKind::FunctionWord)
            });
        } else if lex.is_specific(seg.base()) {
            out.push(Analysis::from_segmentation(&seg, AnalysisKind::Specific));
        } else {
            for m in match_schemes(seg.base(), lex) {
                out.push(Analysis {
                    root: Some(m.root.into_string()),
                    scheme: Some(m.scheme.wazn().to_owned()),
                    scheme_index: Some(m.scheme_index),
                    ..Analysis::from_segmentation(&seg, AnalysisKind::Derived)
                });
            }
        }
    }
    if out.is_empty() {
        out.push(Analysis::whole(word, AnalysisKind::Specific));
    }
    out
}

fn rank_order(a: &Analysis, b: &Analysis) -> Ordering {
    let base_len = |x: &Analysis| x.base.chars().count();
    a.kind
        .cmp(&b.kind)
        .then_with(|| base_len(b).cmp(&base_len(a)))
        .then_with(|| a.stripped_len().cmp(&b.stripped_len()))
        .then_with(|| match (a.scheme_index, b.scheme_index) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        })
        .then_with(|| {
            let key = |x: &'_ Analysis| {
                (
                    x.proclitic.clone(),
                    x.prefix.clone(),
                    x.base.clone(),
                    x.suffix.clone(),
                    x.enclitic.clone(),
                    x.root.clone(),
                )
            };
            key(a).cmp(&key(b))
        })
}

/// Orders candidates best first: by kind (derived, function word, specific,
/// stop word, unanalyzed), then longer base, then fewer stripped letters,
/// then scheme-file order.
pub fn rank(mut candidates: Vec<Analysis>) -> Vec<Analysis> {
    candidates.sort_by(rank_order);
    candidates
}

/// Fills in the grammatical category: the matched scheme's category for a
/// derived analysis, none otherwise.
pub fn interpret(mut analysis: Analysis, lex: &LexiconSet) -> Analysis {
    analysis.category = match (analysis.kind, &analysis.scheme) {
        (AnalysisKind::Derived, Some(wazn)) => analysis
            .scheme_index
            .and_then(|i| lex.schemes().get(i))
            .filter(|s| s.wazn() == wazn)
            .or_else(|| lex.schemes().iter().find(|s| s.wazn() == wazn))
            .map(|s| s.category()),
        _ => None,
    };
    analysis
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StemMode {
    /// The root when one was found, otherwise the base.
    Root,
    /// The base: clitics and affixes removed, scheme letters kept.
    Light,
    /// The five-part split.
    Segment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segments {
    pub proclitic: String,
    pub prefix: String,
    pub base: String,
    pub suffix: String,
    pub enclitic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Stem {
    Text(String),
    Segments(Segments),
}

impl Stem {
    /// The stem as one string; segments are joined with `+`.
    pub fn to_text(&self) -> String {
        match self {
            Stem::Text(s) => s.clone(),
            Stem::Segments(s) => [&s.proclitic, &s.prefix, &s.base, &s.suffix, &s.enclitic]
                .map(|x| x.as_str())
                .join("+"),
        }
    }
}

pub fn stem_of(analysis: &Analysis, mode: StemMode) -> Stem {
    match mode {
        StemMode::Root => Stem::Text(
            analysis
                .root
                .clone()
                .unwrap_or_else(|| analysis.base.clone()),
        ),
        StemMode::Light => Stem::Text(analysis.base.clone()),
        StemMode::Segment => Stem::Segments(Segments {
            proclitic: analysis.proclitic.clone(),
            prefix: analysis.prefix.clone(),
            base: analysis.base.clone(),
            suffix: analysis.suffix.clone(),
            enclitic: analysis.enclitic.clone(),
        }),
    }
}

pub fn stem(token: &Token, mode: StemMode, lex: &LexiconSet) -> Stem {
    stem_of(analyze(token, lex).best(), mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seed() -> LexiconSet {
        LexiconSet::seed()
    }

    fn derived(base: &str, root: &str, scheme_index: usize) -> Analysis {
        Analysis {
            root: Some(root.into()),
            scheme: Some("فعل".into()),
            scheme_index: Some(scheme_index),
            ..Analysis::whole(base, AnalysisKind::Derived)
        }
    }

    #[test]
    fn function_word_short_circuits() {
        let set = analyze_word("في", &seed());
        assert_eq!(set.candidates.len(), 1);
        assert_eq!(set.best().kind, AnalysisKind::FunctionWord);
        assert_eq!(set.best().successor_class, Some(SuccessorClass::Nominal));
        assert_eq!(set.best().category, None);
    }

    #[test]
    fn stop_word_is_reported() {
        let set = analyze_word("هذا", &seed());
        assert_eq!(set.candidates.len(), 1);
        assert_eq!(set.best().kind, AnalysisKind::StopWord);
    }

    #[test]
    fn fasaalanahu() {
        let best = analyze_word("فسأعلنه", &seed()).best().clone();
        assert_eq!(best.kind, AnalysisKind::Derived);
        assert_eq!(
            (
                best.proclitic.as_str(),
                best.prefix.as_str(),
                best.base.as_str(),
                best.suffix.as_str(),
                best.enclitic.as_str()
            ),
            ("فس", "أ", "علن", "", "ه")
        );
        assert_eq!(best.root.as_deref(), Some("علن"));
    }

    #[test]
    fn fasamiahum_prefers_the_real_root() {
        let set = analyze_word("فسمعهم", &seed());
        assert_eq!(set.best().root.as_deref(), Some("سمع"));
        // the function-word reading of مع survives as a lower candidate
        assert!(set
            .candidates
            .iter()
            .any(|a| a.base == "مع" && a.kind == AnalysisKind::FunctionWord));
    }

    #[test]
    fn unknown_word_falls_back_to_specific() {
        let set = analyze_word("غغغغغغ", &seed());
        assert_eq!(set.candidates.len(), 1);
        assert_eq!(set.best().kind, AnalysisKind::Specific);
        assert_eq!(set.best().base, "غغغغغغ");
    }

    #[test]
    fn non_arabic_is_unanalyzed() {
        let set = analyze(&Token::from_word("abc", 3), &seed());
        assert_eq!(set.best().kind, AnalysisKind::Unanalyzed);
        assert_eq!(set.best().base, "abc");
        assert_eq!(set.token.position, 3);
    }

    #[test]
    fn rank_prefers_longer_base() {
        let ranked = rank(vec![derived("حس", "حسس", 0), derived("حسن", "حسن", 0)]);
        assert_eq!(ranked[0].base, "حسن");
    }

    #[test]
    fn rank_singleton() {
        let one = vec![derived("علن", "علن", 0)];
        assert_eq!(rank(one.clone()), one);
    }

    #[test]
    fn rank_kind_precedence() {
        let ranked = rank(vec![
            Analysis::whole("كاتب", AnalysisKind::Specific),
            derived("كتب", "كتب", 0),
        ]);
        assert_eq!(ranked[0].kind, AnalysisKind::Derived);
    }

    #[test]
    fn rank_tiebreaks() {
        let mut a = derived("كتب", "كتب", 0);
        a.proclitic = "ف".into();
        let b = derived("كتب", "كتب", 0);
        assert_eq!(rank(vec![a.clone(), b.clone()])[0], b);
        let c = derived("كتب", "كتب", 3);
        let d = derived("كتب", "كتب", 1);
        assert_eq!(rank(vec![c, d.clone()])[0], d);
    }

    #[test]
    fn categories_come_from_schemes() {
        let lex = seed();
        let best = analyze_word("مكتوب", &lex).best().clone();
        assert_eq!(best.scheme.as_deref(), Some("مفعول"));
        assert_eq!(best.category, Some(Category::Noun));
        let best = analyze_word("انكسر", &lex).best().clone();
        assert_eq!(best.scheme.as_deref(), Some("انفعل"));
        assert_eq!(best.category, Some(Category::Verb));
        let best = analyze_word("صالح", &lex).best().clone();
        assert_eq!(best.scheme.as_deref(), Some("فاعل"));
        assert_eq!(best.category, Some(Category::Both));
    }

    #[test]
    fn interpret_is_idempotent() {
        let lex = seed();
        for a in analyze_word("فسأعلنه", &lex).candidates {
            let once = interpret(a.clone(), &lex);
            assert_eq!(interpret(once.clone(), &lex), once);
            assert_eq!(once, a);
        }
    }

    #[test]
    fn stem_modes() {
        let lex = seed();
        let t = |w| Token::from_word(w, 0);
        assert_eq!(
            stem(&t("صالح"), StemMode::Root, &lex),
            Stem::Text("صلح".into())
        );
        assert_eq!(
            stem(&t("فكاتيبهم"), StemMode::Light, &lex),
            Stem::Text("كاتيب".into())
        );
        assert_eq!(
            stem(&t("فسأعلنه"), StemMode::Segment, &lex),
            Stem::Segments(Segments {
                proclitic: "فس".into(),
                prefix: "أ".into(),
                base: "علن".into(),
                suffix: "".into(),
                enclitic: "ه".into(),
            })
        );
        assert_eq!(
            stem(&t("في"), StemMode::Root, &lex),
            Stem::Text("في".into())
        );
    }

    #[test]
    fn candidates_rebuild_the_token() {
        let lex = seed();
        for w in ["فسأعلنه", "فكاتيبهم", "فسمعهم", "يكتبون", "والكتاب"]
        {
            let set = analyze_word(w, &lex);
            for a in &set.candidates {
                assert_eq!(a.surface(), w);
                assert_eq!(
                    a.kind == AnalysisKind::Derived,
                    a.root.is_some() && a.scheme.is_some()
                );
            }
        }
    }
}
