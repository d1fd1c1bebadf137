//! Matching a base against the scheme dictionary and moving between a base
//! and its root.
//!
//! A scheme matches a base of the same length when every infix position of
//! the scheme carries the same letter in the base. Deleting those letters
//! leaves the root. All positions are 1-based.

use thiserror::Error;

use crate::lexicons::{EntryError, LexiconSet, Root, SchemeEntry};

/// Caller-side contract violations of [`extract_root`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("base has {base_len} letters but scheme {wazn} has {scheme_len}")]
    LengthMismatch {
        wazn: String,
        base_len: usize,
        scheme_len: usize,
    },
    #[error("extracted root is not valid: {0}")]
    Root(#[from] EntryError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeMatch<'a> {
    pub scheme: &'a SchemeEntry,
    /// Position of `scheme` in the scheme file.
    pub scheme_index: usize,
    pub root: Root,
    pub base: String,
}

/// Every scheme of the same length as `base` whose infix letters line up,
/// and whose extracted root is in the root dictionary. File order.
pub fn match_schemes<'a>(base: &str, lex: &'a LexiconSet) -> Vec<SchemeMatch<'a>> {
    let letters: Vec<char> = base.chars().collect();
    lex.indexed_schemes_of_length(letters.len())
        .filter(|(_, scheme)| fixed_letters_match(&letters, scheme))
        .filter_map(|(scheme_index, scheme)| {
            let root: String = root_letters(&letters, scheme).collect();
            if !lex.has_root(&root) {
                return None;
            }
            Some(SchemeMatch {
                scheme,
                scheme_index,
                root: Root::new(&root).ok()?,
                base: base.to_owned(),
            })
        })
        .collect()
}

fn fixed_letters_match(letters: &[char], scheme: &SchemeEntry) -> bool {
    let pattern = scheme.letters();
    scheme
        .infix_positions()
        .iter()
        .all(|&p| letters[p - 1] == pattern[p - 1])
}

fn root_letters<'l>(
    letters: &'l [char],
    scheme: &'l SchemeEntry,
) -> impl Iterator<Item = char> + 'l {
    letters
        .iter()
        .enumerate()
        .filter(|(i, _)| !scheme.is_infix(i + 1))
        .map(|(_, &c)| c)
}

/// Deletes the letters at the scheme's infix positions. Fixed letters are not
/// checked; the base only needs the scheme's length.
pub fn extract_root(base: &str, scheme: &SchemeEntry) -> Result<Root, ContractError> {
    let letters: Vec<char> = base.chars().collect();
    if letters.len() != scheme.len() {
        return Err(ContractError::LengthMismatch {
            wazn: scheme.wazn().to_owned(),
            base_len: letters.len(),
            scheme_len: scheme.len(),
        });
    }
    let root: String = root_letters(&letters, scheme).collect();
    Ok(Root::new(&root)?)
}

/// Fills the root slots of the scheme with the root's letters, in order.
pub fn apply_scheme(root: &Root, scheme: &SchemeEntry) -> String {
    let mut radicals = root.letters().into_iter();
    scheme
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if scheme.is_infix(i + 1) {
                c
            } else {
                radicals.next().expect("scheme has three root slots")
            }
        })
        .collect()
}
