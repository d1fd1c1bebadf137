//! Text normalization and tokenization.
//!
//! Normalization strips vocalization marks and the tatweel (kashida) and
//! leaves every letter untouched. Hamza carriers (أ إ آ ؤ ئ) and ta marbuta
//! are deliberately kept distinct: the clitic and affix inventories rely on
//! them.

use std::ops::Range;

use serde::Serialize;

const TATWEEL: char = '\u{0640}';

/// Arabic combining marks: harakat, tanwin, shadda, sukun, the extended
/// vowel marks, superscript alef and the Quranic annotation signs.
pub fn is_arabic_mark(c: char) -> bool {
    matches!(c,
        '\u{0610}'..='\u{061A}'
        | '\u{064B}'..='\u{065F}'
        | '\u{0670}'
        | '\u{06D6}'..='\u{06DC}'
        | '\u{06DF}'..='\u{06E4}'
        | '\u{06E7}'..='\u{06E8}'
        | '\u{06EA}'..='\u{06ED}')
}

/// Base letters of the Arabic block and the Arabic Supplement block.
pub fn is_arabic_letter(c: char) -> bool {
    matches!(c,
        '\u{0620}'..='\u{063F}'
        | '\u{0641}'..='\u{064A}'
        | '\u{066E}'..='\u{066F}'
        | '\u{0671}'..='\u{06D3}'
        | '\u{06D5}'
        | '\u{06EE}'..='\u{06EF}'
        | '\u{06FA}'..='\u{06FC}'
        | '\u{06FF}'
        | '\u{0750}'..='\u{077F}')
}

fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(c,
            '،' | '؛' | '؟' | '٪' | '٫' | '٬' | '٭' | '۔' | '«' | '»' | '¡' | '¿' | '·'
            | '\u{2010}'..='\u{2027}'
            | '\u{2030}'..='\u{205E}'
            | '\u{3001}'..='\u{3003}'
            | '\u{FD3E}'..='\u{FD3F}')
}

/// Removes diacritics and tatweel. Every other character passes through.
pub fn normalize(raw: &str) -> String {
    raw.chars()
        .filter(|&c| c != TATWEEL && !is_arabic_mark(c))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    /// Arabic letters only (after normalization); eligible for analysis.
    Arabic,
    Punctuation,
    /// Anything else: Latin, digits, mixed script, stray marks.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    pub raw: String,
    pub normalized: String,
    /// 0-based ordinal within the input stream.
    pub position: usize,
    pub kind: TokenKind,
    /// Byte range of `raw` within the text handed to [`tokenize`].
    #[serde(skip)]
    pub span: Range<usize>,
}

impl Token {
    /// Builds a token from a single word, as if it had been tokenized alone.
    pub fn from_word(word: &str, position: usize) -> Self {
        let normalized = normalize(word);
        let kind = classify_word(word, &normalized);
        let normalized = if kind == TokenKind::Arabic {
            normalized
        } else {
            word.to_owned()
        };
        Token {
            raw: word.to_owned(),
            normalized,
            position,
            kind,
            span: 0..word.len(),
        }
    }

    pub fn is_arabic(&self) -> bool {
        self.kind == TokenKind::Arabic
    }
}

fn classify_word(raw: &str, normalized: &str) -> TokenKind {
    if !normalized.is_empty() && normalized.chars().all(is_arabic_letter) {
        TokenKind::Arabic
    } else if raw.chars().all(is_punctuation) {
        TokenKind::Punctuation
    } else {
        TokenKind::Other
    }
}

/// Splits `text` on whitespace and punctuation.
///
/// Each punctuation character becomes its own token. A word is Arabic only
/// if, once normalized, it is non-empty and made solely of Arabic letters;
/// words with digits or Latin letters come out as [`TokenKind::Other`] and
/// keep their raw form. Positions are numbered from 0.
pub fn tokenize(text: &str) -> Vec<Token> {
    tokenize_from(text, 0)
}

/// Like [`tokenize`] but numbers tokens starting at `first_position`, so a
/// stream can be tokenized chunk by chunk.
pub fn tokenize_from(text: &str, first_position: usize) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut word_start: Option<usize> = None;

    let flush = |tokens: &mut Vec<Token>, range: Range<usize>| {
        let raw = &text[range.clone()];
        let mut token = Token::from_word(raw, first_position + tokens.len());
        token.span = range;
        tokens.push(token);
    };

    for (i, c) in text.char_indices() {
        if c.is_whitespace() || is_punctuation(c) {
            if let Some(start) = word_start.take() {
                flush(&mut tokens, start..i);
            }
            if !c.is_whitespace() {
                flush(&mut tokens, i..i + c.len_utf8());
            }
        } else if word_start.is_none() {
            word_start = Some(i);
        }
    }
    if let Some(start) = word_start {
        flush(&mut tokens, start..text.len());
    }
    tokens
}
