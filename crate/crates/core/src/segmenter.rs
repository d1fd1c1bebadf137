//! Exhaustive two-layer segmentation.
//!
//! A token is split as proclitic + base1 + enclitic, and each base1 as
//! prefix + base + suffix. Every split whose pieces come from the
//! inventories and whose pair is not listed as incompatible is kept; no
//! split is committed to greedily, since a letter such as س may be a clitic
//! or a radical. Deciding between them is left to the analyzer.

use std::cmp::Ordering;

use serde::Serialize;

use crate::lexicons::LexiconSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CliticDecomposition {
    pub proclitic: String,
    pub base1: String,
    pub enclitic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffixDecomposition {
    pub prefix: String,
    pub base: String,
    pub suffix: String,
}

fn letters(s: &str) -> usize {
    s.chars().count()
}

/// Longest stripped material first, then the longer leading piece, then
/// lexicographic on (leading, trailing).
fn split_order(a: (&str, &str), b: (&str, &str)) -> Ordering {
    let total = |(l, t): (&str, &str)| letters(l) + letters(t);
    total(b)
        .cmp(&total(a))
        .then_with(|| letters(b.0).cmp(&letters(a.0)))
        .then_with(|| a.0.cmp(b.0))
        .then_with(|| a.1.cmp(b.1))
}

/// All `(leading, middle, trailing)` splits of `word` with a non-empty
/// middle, for the given inventories and compatibility predicate.
fn splits<'w>(
    word: &'w str,
    leading: &'w [String],
    trailing: &'w [String],
    compatible: impl Fn(&str, &str) -> bool + 'w,
) -> impl Iterator<Item = (&'w str, &'w str, &'w str)> + 'w {
    leading
        .iter()
        .filter(move |l| word.starts_with(l.as_str()))
        .flat_map(move |l| {
            let rest = &word[l.len()..];
            trailing
                .iter()
                .filter(move |t| t.len() < rest.len() && rest.ends_with(t.as_str()))
                .map(move |t| (l.as_str(), &rest[..rest.len() - t.len()], t.as_str()))
        })
        .filter(move |&(l, _, t)| compatible(l, t))
}

/// True unless the fused string proclitic+enclitic is listed as incompatible.
pub fn clitics_compatible(proclitic: &str, enclitic: &str, lex: &LexiconSet) -> bool {
    let mut fused = String::with_capacity(proclitic.len() + enclitic.len());
    fused.push_str(proclitic);
    fused.push_str(enclitic);
    !lex.is_clitic_incompatible(&fused)
}

pub fn affixes_compatible(prefix: &str, suffix: &str, lex: &LexiconSet) -> bool {
    !lex.is_affix_incompatible(prefix, suffix)
}

/// Every compatible proclitic + base1 + enclitic split of `token`.
///
/// Sorted by decreasing clitic length; the unsplit token always comes last
/// (or tied last).
pub fn strip_clitics(token: &str, lex: &LexiconSet) -> Vec<CliticDecomposition> {
    let mut out: Vec<_> = splits(token, lex.proclitics(), lex.enclitics(), |p, e| {
        clitics_compatible(p, e, lex)
    })
    .map(|(p, b, e)| CliticDecomposition {
        proclitic: p.to_owned(),
        base1: b.to_owned(),
        enclitic: e.to_owned(),
    })
    .collect();
    out.sort_by(|a, b| split_order((&a.proclitic, &a.enclitic), (&b.proclitic, &b.enclitic)));
    out
}

/// Every compatible prefix + base + suffix split of `base1`, in the same
/// order discipline as [`strip_clitics`].
pub fn strip_affixes(base1: &str, lex: &LexiconSet) -> Vec<AffixDecomposition> {
    let mut out: Vec<_> = splits(base1, lex.prefixes(), lex.suffixes(), |p, s| {
        affixes_compatible(p, s, lex)
    })
    .map(|(p, b, s)| AffixDecomposition {
        prefix: p.to_owned(),
        base: b.to_owned(),
        suffix: s.to_owned(),
    })
    .collect();
    out.sort_by(|a, b| split_order((&a.prefix, &a.suffix), (&b.prefix, &b.suffix)));
    out
}

/// A full five-part split of a token.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Segmentation {
    pub clitics: CliticDecomposition,
    pub affixes: AffixDecomposition,
}

impl Segmentation {
    pub fn proclitic(&self) -> &str {
        &self.clitics.proclitic
    }

    pub fn prefix(&self) -> &str {
        &self.affixes.prefix
    }

    pub fn base(&self) -> &str {
        &self.affixes.base
    }

    pub fn suffix(&self) -> &str {
        &self.affixes.suffix
    }

    pub fn enclitic(&self) -> &str {
        &self.clitics.enclitic
    }

    /// Concatenation of the five parts.
    pub fn surface(&self) -> String {
        [
            self.proclitic(),
            self.prefix(),
            self.base(),
            self.suffix(),
            self.enclitic(),
        ]
        .concat()
    }

    /// Letters removed around the base.
    pub fn stripped_len(&self) -> usize {
        [
            self.proclitic(),
            self.prefix(),
            self.suffix(),
            self.enclitic(),
        ]
        .iter()
        .map(|s| letters(s))
        .sum()
    }
}

/// The filtered cross product: each clitic split followed by every affix
/// split of its base1.
pub fn enumerate_all(token: &str, lex: &LexiconSet) -> Vec<Segmentation> {
    strip_clitics(token, lex)
        .into_iter()
        .flat_map(|clitics| {
            strip_affixes(&clitics.base1, lex)
                .into_iter()
                .map(move |affixes| Segmentation {
                    clitics: clitics.clone(),
                    affixes,
                })
        })
        .collect()
}
