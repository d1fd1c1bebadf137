//! Brute-force reference implementations for testing.
//!
//! [`brute_force_decompositions`] tries every proclitic, enclitic, prefix
//! and suffix from the inventories in four nested loops and compares letters
//! directly. It deliberately avoids the segmenter's search so that the two
//! agreeing means something. [`fuzz_generate`] composes inflected words from
//! known roots and schemes for round-trip testing.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lexicons::{LexiconSet, Root};
use crate::scheme_matcher::apply_scheme;
use crate::segmenter::{enumerate_all, Segmentation};

/// A five-part split as seen by the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Decomposition {
    pub proclitic: String,
    pub prefix: String,
    pub base: String,
    pub suffix: String,
    pub enclitic: String,
}

impl From<&Segmentation> for Decomposition {
    fn from(s: &Segmentation) -> Self {
        Decomposition {
            proclitic: s.proclitic().to_owned(),
            prefix: s.prefix().to_owned(),
            base: s.base().to_owned(),
            suffix: s.suffix().to_owned(),
            enclitic: s.enclitic().to_owned(),
        }
    }
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

/// Every compatibility-valid five-part split of `token`, by exhaustive
/// enumeration.
pub fn brute_force_decompositions(token: &str, lex: &LexiconSet) -> BTreeSet<Decomposition> {
    let word = chars(token);
    let n = word.len();
    let mut out = BTreeSet::new();

    for proclitic in lex.proclitics() {
        let p = chars(proclitic);
        for enclitic in lex.enclitics() {
            let e = chars(enclitic);
            for prefix in lex.prefixes() {
                let pre = chars(prefix);
                for suffix in lex.suffixes() {
                    let suf = chars(suffix);
                    let outer = p.len() + pre.len() + suf.len() + e.len();
                    if outer >= n {
                        continue;
                    }
                    let base_start = p.len() + pre.len();
                    let base_end = n - e.len() - suf.len();
                    let fits = word[..p.len()] == p[..]
                        && word[p.len()..base_start] == pre[..]
                        && word[base_end..n - e.len()] == suf[..]
                        && word[n - e.len()..] == e[..];
                    if !fits {
                        continue;
                    }
                    let fused: String = p.iter().chain(e.iter()).collect();
                    if lex.is_clitic_incompatible(&fused)
                        || lex.is_affix_incompatible(prefix, suffix)
                    {
                        continue;
                    }
                    out.insert(Decomposition {
                        proclitic: proclitic.clone(),
                        prefix: prefix.clone(),
                        base: word[base_start..base_end].iter().collect(),
                        suffix: suffix.clone(),
                        enclitic: enclitic.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Difference between the segmenter and the oracle for one token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub token: String,
    pub main_set: BTreeSet<Decomposition>,
    pub oracle_set: BTreeSet<Decomposition>,
    /// In the oracle's set but not produced by the segmenter.
    pub missing: Vec<Decomposition>,
    /// Produced by the segmenter but not by the oracle.
    pub extra: Vec<Decomposition>,
    /// Segmentations the segmenter emitted more than once.
    pub duplicates: usize,
}

impl OracleReport {
    pub fn compare(
        token: &str,
        main: &[Segmentation],
        oracle_set: BTreeSet<Decomposition>,
    ) -> Self {
        let main_set: BTreeSet<Decomposition> = main.iter().map(Decomposition::from).collect();
        let missing = oracle_set.difference(&main_set).cloned().collect();
        let extra = main_set.difference(&oracle_set).cloned().collect();
        OracleReport {
            token: token.to_owned(),
            duplicates: main.len() - main_set.len(),
            main_set,
            oracle_set,
            missing,
            extra,
        }
    }

    pub fn agrees(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates == 0
    }
}

/// Runs the segmenter and the oracle on `token` and diffs them.
pub fn check(token: &str, lex: &LexiconSet) -> OracleReport {
    OracleReport::compare(
        token,
        &enumerate_all(token, lex),
        brute_force_decompositions(token, lex),
    )
}

/// An inflected form built from a known root and scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzCase {
    pub word: String,
    pub root: Root,
    pub scheme: String,
    pub scheme_index: usize,
    pub proclitic: String,
    pub prefix: String,
    pub suffix: String,
    pub enclitic: String,
}

impl FuzzCase {
    pub fn base(&self) -> &str {
        let start = self.proclitic.len() + self.prefix.len();
        &self.word[start..self.word.len() - self.suffix.len() - self.enclitic.len()]
    }
}

/// `n` pseudo-random compositions proclitic + prefix + apply_scheme(root,
/// scheme) + suffix + enclitic, using only compatible clitic and affix
/// pairs. The same seed gives the same list.
pub fn fuzz_generate(lex: &LexiconSet, seed: u64, n: usize) -> Vec<FuzzCase> {
    let roots: Vec<&Root> = lex.roots().collect();
    let schemes: Vec<(usize, _)> = lex.schemes().iter().enumerate().collect();
    let clitic_pairs: Vec<(&String, &String)> = lex
        .proclitics()
        .iter()
        .flat_map(|p| lex.enclitics().iter().map(move |e| (p, e)))
        .filter(|(p, e)| !lex.is_clitic_incompatible(&format!("{p}{e}")))
        .collect();
    let affix_pairs: Vec<(&String, &String)> = lex
        .prefixes()
        .iter()
        .flat_map(|p| lex.suffixes().iter().map(move |s| (p, s)))
        .filter(|(p, s)| !lex.is_affix_incompatible(p, s))
        .collect();
    if roots.is_empty() || schemes.is_empty() || clitic_pairs.is_empty() || affix_pairs.is_empty() {
        return Vec::new();
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let root = *roots.choose(&mut rng).expect("non-empty");
            let &(scheme_index, scheme) = schemes.choose(&mut rng).expect("non-empty");
            let &(proclitic, enclitic) = clitic_pairs.choose(&mut rng).expect("non-empty");
            let &(prefix, suffix) = affix_pairs.choose(&mut rng).expect("non-empty");
            let word = [
                proclitic.as_str(),
                prefix,
                &apply_scheme(root, scheme),
                suffix,
                enclitic,
            ]
            .concat();
            FuzzCase {
                word,
                root: root.clone(),
                scheme: scheme.wazn().to_owned(),
                scheme_index,
                proclitic: proclitic.clone(),
                prefix: prefix.clone(),
                suffix: suffix.clone(),
                enclitic: enclitic.clone(),
            }
        })
        .collect()
}
