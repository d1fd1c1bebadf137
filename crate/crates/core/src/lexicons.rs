//! The dictionaries the analyzer consults: schemes, roots, function words,
//! specific words and stop words, plus the two incompatibility tables for
//! clitic and affix pairs.
//!
//! A [`LexiconSet`] is validated once when it is built and is immutable
//! afterwards. Extending the specific-word list yields a new set.
//!
//! On disk a lexicon is a directory of seven UTF-8 files with one record
//! per line, TAB-separated fields, and `#` comment lines:
//!
//! | file | record |
//! |------|--------|
//! | `schemes.tsv` | wazn, comma-separated 1-based infix positions, `verb`/`noun`/`both` |
//! | `roots.txt` | one triliteral root, sorted by code point |
//! | `function_words.tsv` | surface, `nominal`/`verbal`/`common` |
//! | `specific_words.txt` | surface |
//! | `stop_words.txt` | surface |
//! | `clitic_incompat.txt` | fused proclitic+enclitic string |
//! | `affix_incompat.tsv` | prefix, suffix |

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::normalizer::{is_arabic_mark, normalize};

pub const SCHEMES_FILE: &str = "schemes.tsv";
pub const ROOTS_FILE: &str = "roots.txt";
pub const FUNCTION_WORDS_FILE: &str = "function_words.tsv";
pub const SPECIFIC_WORDS_FILE: &str = "specific_words.txt";
pub const STOP_WORDS_FILE: &str = "stop_words.txt";
pub const CLITIC_INCOMPAT_FILE: &str = "clitic_incompat.txt";
pub const AFFIX_INCOMPAT_FILE: &str = "affix_incompat.tsv";

/// Proclitics, in the order of the compatibility table rows.
pub const SEED_PROCLITICS: &[&str] = &[
    "", "ب", "ك", "ل", "ف", "س", "أ", "ال", "بال", "كال", "لل", "فب", "فس", "فال", "فك", "فل",
    "فلل", "أف", "أس", "فبال", "فكال",
];
pub const SEED_ENCLITICS: &[&str] = &[
    "", "ه", "ها", "هما", "هم", "هن", "ك", "كما", "كم", "كن", "ي", "ني", "نا",
];
pub const SEED_PREFIXES: &[&str] = &["", "ا", "ت", "ن", "ي", "إ", "أ"];
pub const SEED_SUFFIXES: &[&str] = &[
    "", "ات", "ية", "ة", "يات", "نا", "ت", "تما", "تم", "تن", "ن", "ين", "ان", "ون", "وا", "ا", "ي",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Verb,
    Noun,
    Both,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Verb => "verb",
            Category::Noun => "noun",
            Category::Both => "both",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "verb" => Some(Category::Verb),
            "noun" => Some(Category::Noun),
            "both" => Some(Category::Both),
            _ => None,
        }
    }
}

/// What may follow a function word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuccessorClass {
    Nominal,
    Verbal,
    Common,
}

impl SuccessorClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SuccessorClass::Nominal => "nominal",
            SuccessorClass::Verbal => "verbal",
            SuccessorClass::Common => "common",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "nominal" => Some(SuccessorClass::Nominal),
            "verbal" => Some(SuccessorClass::Verbal),
            "common" => Some(SuccessorClass::Common),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntryError {
    #[error("infix position {position} outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("infix positions must be strictly increasing")]
    PositionsNotIncreasing,
    #[error("pattern leaves {0} root slots, expected 3")]
    RootSlots(usize),
    #[error("root must have exactly 3 letters, got {0}")]
    RootLength(usize),
    #[error("entry is empty")]
    Empty,
    #[error("entry contains diacritics or tatweel")]
    NotNormalized,
}

fn check_surface(s: &str) -> Result<(), EntryError> {
    if s.is_empty() {
        Err(EntryError::Empty)
    } else if normalize(s) != s {
        Err(EntryError::NotNormalized)
    } else {
        Ok(())
    }
}

/// A pattern over the reference root فعل. `infix_positions` are the 1-based
/// positions holding pattern letters; every other position is a root slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchemeEntry {
    wazn: String,
    letters: Vec<char>,
    infix_positions: Vec<usize>,
    category: Category,
}

impl SchemeEntry {
    pub fn new(
        wazn: &str,
        infix_positions: Vec<usize>,
        category: Category,
    ) -> Result<Self, EntryError> {
        check_surface(wazn)?;
        let letters: Vec<char> = wazn.chars().collect();
        let len = letters.len();
        if let Some(&position) = infix_positions.iter().find(|&&p| p == 0 || p > len) {
            return Err(EntryError::PositionOutOfRange { position, len });
        }
        if infix_positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(EntryError::PositionsNotIncreasing);
        }
        let slots = len - infix_positions.len();
        if slots != 3 {
            return Err(EntryError::RootSlots(slots));
        }
        Ok(SchemeEntry {
            wazn: wazn.to_owned(),
            letters,
            infix_positions,
            category,
        })
    }

    pub fn wazn(&self) -> &str {
        &self.wazn
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn infix_positions(&self) -> &[usize] {
        &self.infix_positions
    }

    pub fn category(&self) -> Category {
        self.category
    }

    /// Length in letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_infix(&self, position: usize) -> bool {
        self.infix_positions.binary_search(&position).is_ok()
    }
}

/// A triliteral root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(String);

impl Root {
    pub fn new(root: &str) -> Result<Self, EntryError> {
        check_surface(root)?;
        match root.chars().count() {
            3 => Ok(Root(root.to_owned())),
            n => Err(EntryError::RootLength(n)),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn letters(&self) -> [char; 3] {
        let mut it = self.0.chars();
        let mut next = || it.next().expect("root has three letters");
        [next(), next(), next()]
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl std::borrow::Borrow<str> for Root {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Result of looking a whole word up in the closed-class dictionaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    StopWord,
    FunctionWord(SuccessorClass),
    Specific,
    NotFound,
}

/// The four clitic and affix lists. Each must contain the empty string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inventories {
    pub proclitics: Vec<String>,
    pub enclitics: Vec<String>,
    pub prefixes: Vec<String>,
    pub suffixes: Vec<String>,
}

impl Default for Inventories {
    fn default() -> Self {
        let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        Inventories {
            proclitics: owned(SEED_PROCLITICS),
            enclitics: owned(SEED_ENCLITICS),
            prefixes: owned(SEED_PREFIXES),
            suffixes: owned(SEED_SUFFIXES),
        }
    }
}

impl Inventories {
    /// Only the empty affix in every slot.
    pub fn empty() -> Self {
        let only_empty = || vec![String::new()];
        Inventories {
            proclitics: only_empty(),
            enclitics: only_empty(),
            prefixes: only_empty(),
            suffixes: only_empty(),
        }
    }

    fn validate(&self, violations: &mut Vec<Violation>) {
        for (name, list) in [
            ("proclitics", &self.proclitics),
            ("enclitics", &self.enclitics),
            ("prefixes", &self.prefixes),
            ("suffixes", &self.suffixes),
        ] {
            if !list.iter().any(String::is_empty) {
                violations.push(Violation::new(name, None, "missing the empty entry"));
            }
            let mut seen = BTreeSet::new();
            for item in list {
                if !seen.insert(item) {
                    violations.push(Violation::new(
                        name,
                        None,
                        format!("duplicate entry {item:?}"),
                    ));
                }
                if normalize(item) != *item {
                    violations.push(Violation::new(
                        name,
                        None,
                        format!("{item:?} is not normalized"),
                    ));
                }
            }
        }
    }
}

/// One failed invariant, located by file (or inventory name) and line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub source: String,
    pub line: Option<usize>,
    pub message: String,
}

impl Violation {
    fn new(source: &str, line: Option<usize>, message: impl Into<String>) -> Self {
        Violation {
            source: source.to_owned(),
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{}: {}", self.source, line, self.message),
            None => write!(f, "{}: {}", self.source, self.message),
        }
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{kind} file not found: {}", path.display())]
    MissingFile { kind: &'static str, path: PathBuf },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{file}:{line}: {message}")]
    Malformed {
        file: String,
        line: usize,
        message: String,
    },
    #[error("lexicon validation failed:\n{}", list_violations(.0))]
    Invalid(Vec<Violation>),
}

fn list_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Immutable bundle of every dictionary plus the clitic/affix inventories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconSet {
    schemes: Vec<SchemeEntry>,
    by_length: BTreeMap<usize, Vec<usize>>,
    roots: BTreeSet<Root>,
    function_words: BTreeMap<String, SuccessorClass>,
    specific_words: BTreeSet<String>,
    stop_words: BTreeSet<String>,
    clitic_incompat: BTreeSet<String>,
    affix_incompat: BTreeSet<(String, String)>,
    inventories: Inventories,
}

/// Raw contents of the seven lexicon files.
#[derive(Debug, Clone, Copy)]
pub struct LexiconSources<'a> {
    pub schemes: &'a str,
    pub roots: &'a str,
    pub function_words: &'a str,
    pub specific_words: &'a str,
    pub stop_words: &'a str,
    pub clitic_incompat: &'a str,
    pub affix_incompat: &'a str,
}

const SEED: LexiconSources<'static> = LexiconSources {
    schemes: include_str!("../data/seed/schemes.tsv"),
    roots: include_str!("../data/seed/roots.txt"),
    function_words: include_str!("../data/seed/function_words.tsv"),
    specific_words: include_str!("../data/seed/specific_words.txt"),
    stop_words: include_str!("../data/seed/stop_words.txt"),
    clitic_incompat: include_str!("../data/seed/clitic_incompat.txt"),
    affix_incompat: include_str!("../data/seed/affix_incompat.tsv"),
};

/// Yields `(line number, fields)` for every record line.
fn records<'a>(text: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split('\t').collect()))
        }
    })
}

fn expect_fields(file: &str, line: usize, fields: &[&str], n: usize) -> Result<(), LexiconError> {
    if fields.len() == n {
        Ok(())
    } else {
        Err(LexiconError::Malformed {
            file: file.to_owned(),
            line,
            message: format!("expected {n} TAB-separated fields, found {}", fields.len()),
        })
    }
}

fn malformed(file: &str, line: usize, message: impl Into<String>) -> LexiconError {
    LexiconError::Malformed {
        file: file.to_owned(),
        line,
        message: message.into(),
    }
}

impl LexiconSet {
    /// The lexicon bundled with the crate.
    pub fn seed() -> Self {
        Self::from_sources(&SEED, Inventories::default()).expect("bundled lexicon is valid")
    }

    pub fn seed_sources() -> LexiconSources<'static> {
        SEED
    }

    /// Reads the seven files from `dir`. The clitic and affix inventories
    /// are the built-in seed lists.
    pub fn load(dir: &Path) -> Result<Self, LexiconError> {
        Self::load_with(dir, Inventories::default())
    }

    pub fn load_with(dir: &Path, inventories: Inventories) -> Result<Self, LexiconError> {
        let read = |file: &'static str, kind: &'static str| -> Result<String, LexiconError> {
            let path = dir.join(file);
            fs::read_to_string(&path).map_err(|source| match source.kind() {
                io::ErrorKind::NotFound => LexiconError::MissingFile { kind, path },
                _ => LexiconError::Io { path, source },
            })
        };
        let schemes = read(SCHEMES_FILE, "schemes")?;
        let roots = read(ROOTS_FILE, "roots")?;
        let function_words = read(FUNCTION_WORDS_FILE, "function words")?;
        let specific_words = read(SPECIFIC_WORDS_FILE, "specific words")?;
        let stop_words = read(STOP_WORDS_FILE, "stop words")?;
        let clitic_incompat = read(CLITIC_INCOMPAT_FILE, "clitic incompatibility")?;
        let affix_incompat = read(AFFIX_INCOMPAT_FILE, "affix incompatibility")?;
        Self::from_sources(
            &LexiconSources {
                schemes: &schemes,
                roots: &roots,
                function_words: &function_words,
                specific_words: &specific_words,
                stop_words: &stop_words,
                clitic_incompat: &clitic_incompat,
                affix_incompat: &affix_incompat,
            },
            inventories,
        )
    }

    /// Parses and validates file contents. Structural problems (wrong field
    /// count, unknown category) stop parsing at the first bad line; invariant
    /// violations are collected and reported together.
    pub fn from_sources(
        src: &LexiconSources<'_>,
        inventories: Inventories,
    ) -> Result<Self, LexiconError> {
        let mut builder = LexiconBuilder::new(inventories);
        let mut violations = Vec::new();

        for (line, fields) in records(src.schemes) {
            expect_fields(SCHEMES_FILE, line, &fields, 3)?;
            let positions = fields[1]
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| malformed(SCHEMES_FILE, line, format!("bad infix position: {e}")))?;
            let category = Category::parse(fields[2].trim()).ok_or_else(|| {
                malformed(
                    SCHEMES_FILE,
                    line,
                    format!("unknown category {:?}", fields[2]),
                )
            })?;
            match SchemeEntry::new(fields[0], positions, category) {
                Ok(entry) => builder.schemes.push(entry),
                Err(e) => violations.push(Violation::new(
                    SCHEMES_FILE,
                    Some(line),
                    format!("{:?}: {e}", fields[0]),
                )),
            }
        }

        let mut previous: Option<String> = None;
        for (line, fields) in records(src.roots) {
            expect_fields(ROOTS_FILE, line, &fields, 1)?;
            let root = fields[0];
            match Root::new(root) {
                Ok(r) => {
                    builder.roots.insert(r);
                }
                Err(e) => violations.push(Violation::new(
                    ROOTS_FILE,
                    Some(line),
                    format!("{root:?}: {e}"),
                )),
            }
            if let Some(prev) = &previous {
                if prev.as_str() >= root {
                    violations.push(Violation::new(
                        ROOTS_FILE,
                        Some(line),
                        format!("{root:?} out of order after {prev:?}"),
                    ));
                }
            }
            previous = Some(root.to_owned());
        }

        for (line, fields) in records(src.function_words) {
            expect_fields(FUNCTION_WORDS_FILE, line, &fields, 2)?;
            let class = SuccessorClass::parse(fields[1].trim()).ok_or_else(|| {
                malformed(
                    FUNCTION_WORDS_FILE,
                    line,
                    format!("unknown class {:?}", fields[1]),
                )
            })?;
            match check_surface(fields[0]) {
                Ok(()) => {
                    builder.function_words.insert(fields[0].to_owned(), class);
                }
                Err(e) => violations.push(Violation::new(
                    FUNCTION_WORDS_FILE,
                    Some(line),
                    format!("{:?}: {e}", fields[0]),
                )),
            }
        }

        for (file, text, set) in [
            (
                SPECIFIC_WORDS_FILE,
                src.specific_words,
                &mut builder.specific_words,
            ),
            (STOP_WORDS_FILE, src.stop_words, &mut builder.stop_words),
            (
                CLITIC_INCOMPAT_FILE,
                src.clitic_incompat,
                &mut builder.clitic_incompat,
            ),
        ] {
            for (line, fields) in records(text) {
                expect_fields(file, line, &fields, 1)?;
                match check_surface(fields[0]) {
                    Ok(()) => {
                        set.insert(fields[0].to_owned());
                    }
                    Err(e) => violations.push(Violation::new(
                        file,
                        Some(line),
                        format!("{:?}: {e}", fields[0]),
                    )),
                }
            }
        }

        for (line, fields) in records(src.affix_incompat) {
            expect_fields(AFFIX_INCOMPAT_FILE, line, &fields, 2)?;
            builder
                .affix_incompat
                .insert((fields[0].to_owned(), fields[1].to_owned()));
        }

        match builder.build() {
            Ok(set) if violations.is_empty() => Ok(set),
            Ok(_) => Err(LexiconError::Invalid(violations)),
            Err(LexiconError::Invalid(more)) => {
                violations.extend(more);
                Err(LexiconError::Invalid(violations))
            }
            Err(e) => Err(e),
        }
    }

    /// Writes the seven files into `dir`, which must exist.
    pub fn write_to_dir(&self, dir: &Path) -> io::Result<()> {
        let mut schemes = String::new();
        for s in &self.schemes {
            let positions: Vec<String> = s.infix_positions.iter().map(|p| p.to_string()).collect();
            schemes.push_str(&format!(
                "{}\t{}\t{}\n",
                s.wazn,
                positions.join(","),
                s.category.as_str()
            ));
        }
        let lines = |items: &mut dyn Iterator<Item = String>| -> String {
            items.map(|s| s + "\n").collect()
        };
        fs::write(dir.join(SCHEMES_FILE), schemes)?;
        fs::write(
            dir.join(ROOTS_FILE),
            lines(&mut self.roots.iter().map(|r| r.0.clone())),
        )?;
        fs::write(
            dir.join(FUNCTION_WORDS_FILE),
            lines(
                &mut self
                    .function_words
                    .iter()
                    .map(|(w, c)| format!("{w}\t{}", c.as_str())),
            ),
        )?;
        fs::write(
            dir.join(SPECIFIC_WORDS_FILE),
            lines(&mut self.specific_words.iter().cloned()),
        )?;
        fs::write(
            dir.join(STOP_WORDS_FILE),
            lines(&mut self.stop_words.iter().cloned()),
        )?;
        fs::write(
            dir.join(CLITIC_INCOMPAT_FILE),
            lines(&mut self.clitic_incompat.iter().cloned()),
        )?;
        fs::write(
            dir.join(AFFIX_INCOMPAT_FILE),
            lines(&mut self.affix_incompat.iter().map(|(p, s)| format!("{p}\t{s}"))),
        )?;
        Ok(())
    }

    /// A new set with `words` added to the specific-word dictionary.
    pub fn with_specific_words<I, S>(&self, words: I) -> Result<Self, LexiconError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut next = self.clone();
        let mut violations = Vec::new();
        for word in words {
            let word = word.as_ref();
            match check_surface(word) {
                Ok(()) => {
                    next.specific_words.insert(word.to_owned());
                }
                Err(e) => violations.push(Violation::new(
                    SPECIFIC_WORDS_FILE,
                    None,
                    format!("{word:?}: {e}"),
                )),
            }
        }
        if violations.is_empty() {
            Ok(next)
        } else {
            Err(LexiconError::Invalid(violations))
        }
    }

    /// All schemes, in file order.
    pub fn schemes(&self) -> &[SchemeEntry] {
        &self.schemes
    }

    /// Schemes whose wazn has `n` letters, in file order.
    pub fn schemes_of_length(&self, n: usize) -> Vec<&SchemeEntry> {
        self.indexed_schemes_of_length(n).map(|(_, s)| s).collect()
    }

    /// Like [`Self::schemes_of_length`], paired with each scheme's file index.
    pub fn indexed_schemes_of_length(
        &self,
        n: usize,
    ) -> impl Iterator<Item = (usize, &SchemeEntry)> + '_ {
        self.by_length
            .get(&n)
            .into_iter()
            .flatten()
            .map(move |&i| (i, &self.schemes[i]))
    }

    pub fn has_root(&self, candidate: &str) -> bool {
        self.roots.contains(candidate)
    }

    pub fn roots(&self) -> impl ExactSizeIterator<Item = &Root> + '_ {
        self.roots.iter()
    }

    /// Stop words first, then function words, then specific words.
    pub fn classify_whole_word(&self, surface: &str) -> WordClass {
        if self.stop_words.contains(surface) {
            WordClass::StopWord
        } else if let Some(&class) = self.function_words.get(surface) {
            WordClass::FunctionWord(class)
        } else if self.specific_words.contains(surface) {
            WordClass::Specific
        } else {
            WordClass::NotFound
        }
    }

    pub fn function_word(&self, surface: &str) -> Option<SuccessorClass> {
        self.function_words.get(surface).copied()
    }

    pub fn is_specific(&self, surface: &str) -> bool {
        self.specific_words.contains(surface)
    }

    pub fn function_words(&self) -> impl Iterator<Item = (&str, SuccessorClass)> + '_ {
        self.function_words.iter().map(|(w, &c)| (w.as_str(), c))
    }

    pub fn specific_words(&self) -> impl Iterator<Item = &str> + '_ {
        self.specific_words.iter().map(String::as_str)
    }

    pub fn stop_words(&self) -> impl Iterator<Item = &str> + '_ {
        self.stop_words.iter().map(String::as_str)
    }

    pub fn is_clitic_incompatible(&self, fused: &str) -> bool {
        self.clitic_incompat.contains(fused)
    }

    pub fn is_affix_incompatible(&self, prefix: &str, suffix: &str) -> bool {
        // Tuple keys need owned strings for lookup.
        self.affix_incompat
            .contains(&(prefix.to_owned(), suffix.to_owned()))
    }

    pub fn proclitics(&self) -> &[String] {
        &self.inventories.proclitics
    }

    pub fn enclitics(&self) -> &[String] {
        &self.inventories.enclitics
    }

    pub fn prefixes(&self) -> &[String] {
        &self.inventories.prefixes
    }

    pub fn suffixes(&self) -> &[String] {
        &self.inventories.suffixes
    }

    pub fn inventories(&self) -> &Inventories {
        &self.inventories
    }
}

/// Programmatic construction of a [`LexiconSet`]. `build` runs the same
/// validation as loading from files.
#[derive(Debug, Clone, Default)]
pub struct LexiconBuilder {
    pub schemes: Vec<SchemeEntry>,
    pub roots: BTreeSet<Root>,
    pub function_words: BTreeMap<String, SuccessorClass>,
    pub specific_words: BTreeSet<String>,
    pub stop_words: BTreeSet<String>,
    pub clitic_incompat: BTreeSet<String>,
    pub affix_incompat: BTreeSet<(String, String)>,
    pub inventories: Option<Inventories>,
}

impl LexiconBuilder {
    pub fn new(inventories: Inventories) -> Self {
        LexiconBuilder {
            inventories: Some(inventories),
            ..Default::default()
        }
    }

    pub fn scheme(mut self, entry: SchemeEntry) -> Self {
        self.schemes.push(entry);
        self
    }

    pub fn root(mut self, root: Root) -> Self {
        self.roots.insert(root);
        self
    }

    pub fn function_word(mut self, surface: &str, class: SuccessorClass) -> Self {
        self.function_words.insert(surface.to_owned(), class);
        self
    }

    pub fn specific_word(mut self, surface: &str) -> Self {
        self.specific_words.insert(surface.to_owned());
        self
    }

    pub fn stop_word(mut self, surface: &str) -> Self {
        self.stop_words.insert(surface.to_owned());
        self
    }

    pub fn clitic_incompat(mut self, fused: &str) -> Self {
        self.clitic_incompat.insert(fused.to_owned());
        self
    }

    pub fn affix_incompat(mut self, prefix: &str, suffix: &str) -> Self {
        self.affix_incompat
            .insert((prefix.to_owned(), suffix.to_owned()));
        self
    }

    pub fn build(self) -> Result<LexiconSet, LexiconError> {
        let inventories = self.inventories.unwrap_or_default();
        let mut violations = Vec::new();
        inventories.validate(&mut violations);

        for (file, words) in [
            (
                FUNCTION_WORDS_FILE,
                self.function_words.keys().collect::<Vec<_>>(),
            ),
            (SPECIFIC_WORDS_FILE, self.specific_words.iter().collect()),
            (STOP_WORDS_FILE, self.stop_words.iter().collect()),
            (CLITIC_INCOMPAT_FILE, self.clitic_incompat.iter().collect()),
        ] {
            for w in words {
                if let Err(e) = check_surface(w) {
                    violations.push(Violation::new(file, None, format!("{w:?}: {e}")));
                }
            }
        }
        for (p, s) in &self.affix_incompat {
            if !inventories.prefixes.contains(p) || !inventories.suffixes.contains(s) {
                violations.push(Violation::new(
                    AFFIX_INCOMPAT_FILE,
                    None,
                    format!("({p:?}, {s:?}) is not a prefix/suffix pair from the inventories"),
                ));
            }
        }
        if self
            .schemes
            .iter()
            .any(|s| s.letters.iter().any(|&c| is_arabic_mark(c)))
        {
            violations.push(Violation::new(SCHEMES_FILE, None, "scheme with diacritics"));
        }

        if !violations.is_empty() {
            return Err(LexiconError::Invalid(violations));
        }

        let mut by_length: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, s) in self.schemes.iter().enumerate() {
            by_length.entry(s.len()).or_default().push(i);
        }
        Ok(LexiconSet {
            schemes: self.schemes,
            by_length,
            roots: self.roots,
            function_words: self.function_words,
            specific_words: self.specific_words,
            stop_words: self.stop_words,
            clitic_incompat: self.clitic_incompat,
            affix_incompat: self.affix_incompat,
            inventories,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sources_with<'a>(schemes: &'a str, roots: &'a str) -> LexiconSources<'a> {
        LexiconSources {
            schemes,
            roots,
            ..LexiconSet::seed_sources()
        }
    }

    #[test]
    fn parses_single_infix_scheme() {
        let lex = LexiconSet::from_sources(
            &sources_with("فاعل\t2\tboth\n", "صلح\n"),
            Inventories::default(),
        )
        .unwrap();
        let s = &lex.schemes()[0];
        assert_eq!(s.wazn(), "فاعل");
        assert_eq!(s.infix_positions(), &[2]);
        assert_eq!(s.category(), Category::Both);
    }

    #[test]
    fn parses_two_infix_scheme() {
        let lex = LexiconSet::from_sources(
            &sources_with("# comment\n\nافتعل\t1,3\tverb\n", "صلح\n"),
            Inventories::default(),
        )
        .unwrap();
        let s = &lex.schemes()[0];
        assert_eq!(s.wazn(), "افتعل");
        assert_eq!(s.infix_positions(), &[1, 3]);
        assert_eq!(s.category(), Category::Verb);
    }

    #[test]
    fn empty_infix_field_is_the_bare_pattern() {
        let lex = LexiconSet::from_sources(
            &sources_with("فعل\t\tboth\r\n", "صلح\n"),
            Inventories::default(),
        )
        .unwrap();
        assert!(lex.schemes()[0].infix_positions().is_empty());
    }

    #[test]
    fn missing_roots_file_is_named() {
        let dir = tempfile::tempdir().unwrap();
        LexiconSet::seed().write_to_dir(dir.path()).unwrap();
        fs::remove_file(dir.path().join(ROOTS_FILE)).unwrap();
        let err = LexiconSet::load(dir.path()).unwrap_err();
        assert!(matches!(
            err,
            LexiconError::MissingFile { kind: "roots", .. }
        ));
        assert!(err.to_string().contains("roots file not found"), "{err}");
    }

    #[test]
    fn malformed_line_reports_file_and_line() {
        let err = LexiconSet::from_sources(
            &sources_with("فعل\t\tboth\nفاعل\t2\n", "صلح\n"),
            Inventories::default(),
        )
        .unwrap_err();
        match err {
            LexiconError::Malformed { file, line, .. } => {
                assert_eq!(file, SCHEMES_FILE);
                assert_eq!(line, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = LexiconSet::from_sources(
            &sources_with("فاعل\t2\tadverb\n", "صلح\n"),
            Inventories::default(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("schemes.tsv:1"), "{err}");
    }

    #[test]
    fn invariant_violations_are_listed_together() {
        let err = LexiconSet::from_sources(
            &sources_with("فاعل\t5\tboth\nفاعل\t\tnoun\n", "كتب\nدحرج\nصلح\n"),
            Inventories::default(),
        )
        .unwrap_err();
        let LexiconError::Invalid(violations) = err else {
            panic!("expected validation error");
        };
        let text: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        assert!(
            text.iter().any(|t| t.starts_with("schemes.tsv:1")),
            "{text:?}"
        );
        assert!(
            text.iter().any(|t| t.starts_with("schemes.tsv:2")),
            "{text:?}"
        );
        assert!(text.iter().any(|t| t.contains("دحرج")), "{text:?}");
        // صلح sorts before كتب
        assert!(text.iter().any(|t| t.contains("out of order")), "{text:?}");
    }

    #[test]
    fn scheme_entry_invariants() {
        assert_eq!(
            SchemeEntry::new("فاعل", vec![0], Category::Both),
            Err(EntryError::PositionOutOfRange {
                position: 0,
                len: 4
            })
        );
        assert_eq!(
            SchemeEntry::new("مفاعل", vec![3, 1], Category::Noun),
            Err(EntryError::PositionsNotIncreasing)
        );
        assert_eq!(
            SchemeEntry::new("مفاعل", vec![1, 1], Category::Noun),
            Err(EntryError::PositionsNotIncreasing)
        );
        assert_eq!(
            SchemeEntry::new("مفاعل", vec![1], Category::Noun),
            Err(EntryError::RootSlots(4))
        );
        assert_eq!(
            SchemeEntry::new("فَاعل", vec![2], Category::Noun),
            Err(EntryError::NotNormalized)
        );
    }

    #[test]
    fn root_must_be_triliteral() {
        assert!(Root::new("كتب").is_ok());
        assert_eq!(Root::new("دحرج"), Err(EntryError::RootLength(4)));
        assert_eq!(Root::new(""), Err(EntryError::Empty));
    }

    #[test]
    fn inventories_need_the_empty_entry() {
        let mut inv = Inventories::default();
        inv.prefixes.retain(|p| !p.is_empty());
        let err = LexiconBuilder::new(inv).build().unwrap_err();
        assert!(
            err.to_string()
                .contains("prefixes: missing the empty entry"),
            "{err}"
        );
    }

    #[test]
    fn seed_inventories_contain_empty() {
        let lex = LexiconSet::seed();
        for list in [
            lex.proclitics(),
            lex.enclitics(),
            lex.prefixes(),
            lex.suffixes(),
        ] {
            assert!(list.iter().any(String::is_empty));
        }
    }

    #[test]
    fn schemes_by_length() {
        let lex = LexiconSet::seed();
        let four: Vec<_> = lex.schemes_of_length(4).iter().map(|s| s.wazn()).collect();
        assert!(four.contains(&"فاعل") && four.contains(&"مفعل"), "{four:?}");
        let three: Vec<_> = lex.schemes_of_length(3);
        assert!(three
            .iter()
            .any(|s| s.wazn() == "فعل" && s.infix_positions().is_empty()));
        assert!(lex.schemes_of_length(50).is_empty());
        // file order is kept
        let idx: Vec<_> = lex.indexed_schemes_of_length(5).map(|(i, _)| i).collect();
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn schemes_of_length_with_hamza_pattern() {
        let lex = LexiconBuilder::new(Inventories::default())
            .scheme(SchemeEntry::new("فاعل", vec![2], Category::Both).unwrap())
            .scheme(SchemeEntry::new("مفعل", vec![1], Category::Noun).unwrap())
            .scheme(SchemeEntry::new("أفعل", vec![1], Category::Verb).unwrap())
            .scheme(SchemeEntry::new("مفعول", vec![1, 4], Category::Noun).unwrap())
            .build()
            .unwrap();
        let four: Vec<_> = lex.schemes_of_length(4).iter().map(|s| s.wazn()).collect();
        assert_eq!(four, ["فاعل", "مفعل", "أفعل"]);
    }

    #[test]
    fn root_lookup() {
        let lex = LexiconSet::seed();
        assert!(lex.has_root("خرج"));
        assert!(lex.has_root("هرب"));
        assert!(!lex.has_root("خخخ"));
        assert!(!lex.has_root(""));
    }

    #[test]
    fn whole_word_classes() {
        let lex = LexiconSet::seed();
        assert_eq!(
            lex.classify_whole_word("في"),
            WordClass::FunctionWord(SuccessorClass::Nominal)
        );
        assert_eq!(
            lex.classify_whole_word("قد"),
            WordClass::FunctionWord(SuccessorClass::Verbal)
        );
        assert_eq!(
            lex.classify_whole_word("و"),
            WordClass::FunctionWord(SuccessorClass::Common)
        );
        assert_eq!(lex.classify_whole_word("أحمد"), WordClass::Specific);
        assert_eq!(lex.classify_whole_word("هذا"), WordClass::StopWord);
        assert_eq!(lex.classify_whole_word("كاتب"), WordClass::NotFound);
    }

    #[test]
    fn stop_words_win_over_function_words() {
        let lex = LexiconBuilder::new(Inventories::default())
            .function_word("ما", SuccessorClass::Common)
            .stop_word("ما")
            .build()
            .unwrap();
        assert_eq!(lex.classify_whole_word("ما"), WordClass::StopWord);
    }

    #[test]
    fn round_trip_through_files() {
        let lex = LexiconSet::seed();
        let dir = tempfile::tempdir().unwrap();
        lex.write_to_dir(dir.path()).unwrap();
        let again = LexiconSet::load(dir.path()).unwrap();
        assert_eq!(lex, again);
    }

    #[test]
    fn extension_leaves_original_untouched() {
        let lex = LexiconSet::seed();
        let extended = lex.with_specific_words(["قسنطينة"]).unwrap();
        assert_eq!(extended.classify_whole_word("قسنطينة"), WordClass::Specific);
        assert_eq!(lex.classify_whole_word("قسنطينة"), WordClass::NotFound);
        assert!(lex.with_specific_words(["قَسنطينة"]).is_err());
    }

    #[test]
    fn queries_are_repeatable() {
        let lex = LexiconSet::seed();
        let snapshot = lex.clone();
        for _ in 0..3 {
            assert!(lex.has_root("كتب"));
            assert_eq!(
                lex.schemes_of_length(5).len(),
                snapshot.schemes_of_length(5).len()
            );
            let _ = lex.classify_whole_word("في");
        }
        assert_eq!(lex, snapshot);
    }

    #[test]
    fn every_scheme_leaves_three_slots() {
        for s in LexiconSet::seed().schemes() {
            assert_eq!(s.len() - s.infix_positions().len(), 3, "{}", s.wazn());
        }
    }
}
