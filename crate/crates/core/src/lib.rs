//! Morphological analysis and stemming for unvocalized Arabic.
//!
//! Words are recognized without a dictionary of inflected forms: clitics and
//! affixes are stripped in every compatible way, and the remaining base is
//! matched against a dictionary of schemes (patterns over the reference root
//! فعل) to recover a triliteral root and a grammatical category.
//!
//! ```
//! use wazn::{analyze_word, LexiconSet};
//!
//! let lex = LexiconSet::seed();
//! let best = analyze_word("صالح", &lex).best().clone();
//! assert_eq!(best.root.as_deref(), Some("صلح"));
//! assert_eq!(best.scheme.as_deref(), Some("فاعل"));
//! ```

pub mod analyzer;
pub mod lexicons;
pub mod normalizer;
pub mod oracle;
pub mod scheme_matcher;
pub mod segmenter;

pub use analyzer::{
    analyze, analyze_word, interpret, rank, stem, stem_of, Analysis, AnalysisKind, AnalysisSet,
    Segments, Stem, StemMode,
};
pub use lexicons::{
    Category, Inventories, LexiconBuilder, LexiconError, LexiconSet, Root, SchemeEntry,
    SuccessorClass, WordClass,
};
pub use normalizer::{normalize, tokenize, Token, TokenKind};
pub use scheme_matcher::{apply_scheme, extract_root, match_schemes, SchemeMatch};
pub use segmenter::{
    affixes_compatible, clitics_compatible, enumerate_all, strip_affixes, strip_clitics,
    AffixDecomposition, CliticDecomposition, Segmentation,
};

/// Reads a lexicon directory. Same as [`LexiconSet::load`].
pub fn load_lexicons(dir: &std::path::Path) -> Result<LexiconSet, LexiconError> {
    LexiconSet::load(dir)
}
