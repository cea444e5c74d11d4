//! Preprocessing of raw decree text.
//!
//! Raw bytes are decoded, line endings unified, the text put in Unicode NFC,
//! and the result segmented into non-blank lines of single-space separated
//! words. Everything downstream addresses the text by `(line, word)`.
//!
//! Orthographic folding and digit conversion live here too. Folding only ever
//! produces *matching keys*: the scanner compares folded forms against its
//! keyword tables but every token keeps the original spelling.

use std::fmt;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

const BOM: char = '\u{FEFF}';
const TATWEEL: char = '\u{0640}';

/// Arabic comma, the grammar's phrase terminator.
pub const ARABIC_COMMA: char = '\u{060C}';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("invalid UTF-8 at byte {offset}")]
    InvalidUtf8 { offset: usize },
    /// The character cannot appear in an XML document, so no output could carry it.
    #[error("character U+{codepoint:04X} at byte {offset} is not allowed in a text document")]
    ForbiddenCharacter { offset: usize, codepoint: u32 },
}

/// Byte range of one word inside [`NormalizedText::text`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Word {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Line {
    pub words: Vec<Word>,
}

/// Preprocessed document text.
///
/// `text` holds the lines joined by `\n`, each line being its words joined by
/// a single space. Blank lines never appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedText {
    text: String,
    lines: Vec<Line>,
    source_name: String,
}

impl NormalizedText {
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn word_count(&self, line: usize) -> usize {
        self.lines.get(line).map_or(0, |l| l.words.len())
    }

    pub fn word(&self, line: usize, word: usize) -> &str {
        let w = self.lines[line].words[word];
        &self.text[w.start..w.end]
    }

    /// Words of one line, in order.
    pub fn line_words(&self, line: usize) -> impl Iterator<Item = &str> + '_ {
        self.lines[line]
            .words
            .iter()
            .map(move |w| &self.text[w.start..w.end])
    }

    /// The full text of one line (words separated by single spaces).
    pub fn line_text(&self, line: usize) -> &str {
        let words = &self.lines[line].words;
        match (words.first(), words.last()) {
            (Some(first), Some(last)) => &self.text[first.start..last.end],
            _ => "",
        }
    }

    /// Every word of the document in reading order.
    pub fn all_words(&self) -> impl Iterator<Item = &str> + '_ {
        (0..self.lines.len()).flat_map(move |l| self.line_words(l))
    }
}

/// Decodes and normalizes raw input.
pub fn preprocess(raw: &[u8], source_name: &str) -> Result<NormalizedText, DecodeError> {
    let decoded = std::str::from_utf8(raw).map_err(|e| DecodeError::InvalidUtf8 {
        offset: e.valid_up_to(),
    })?;
    if let Some((offset, ch)) = decoded.char_indices().find(|&(_, c)| !is_document_char(c)) {
        return Err(DecodeError::ForbiddenCharacter {
            offset,
            codepoint: ch as u32,
        });
    }
    // A BOM past the start is the deprecated zero-width no-break space; it is
    // dropped too so that preprocessing stays idempotent.
    let unified = decoded
        .replace(BOM, "")
        .replace("\r\n", "\n")
        .replace('\r', "\n");
    let composed: String = unified.nfc().collect();

    let mut text = String::with_capacity(composed.len());
    let mut lines = Vec::new();
    for raw_line in composed.split('\n') {
        let mut line = Line::default();
        for word in raw_line
            .split(char::is_whitespace)
            .filter(|w| !w.is_empty())
        {
            if line.words.is_empty() {
                if !lines.is_empty() {
                    text.push('\n');
                }
            } else {
                text.push(' ');
            }
            let start = text.len();
            text.push_str(word);
            line.words.push(Word {
                start,
                end: text.len(),
            });
        }
        if !line.words.is_empty() {
            lines.push(line);
        }
    }

    Ok(NormalizedText {
        text,
        lines,
        source_name: source_name.to_owned(),
    })
}

// XML 1.0 `Char` production; the BOM is handled separately.
fn is_document_char(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\r' | '\u{20}'..='\u{D7FF}' | '\u{E000}'..='\u{FFFD}')
        || c >= '\u{10000}'
}

/// Word-final punctuation the scanner may detach from a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Delimiter {
    Comma,
    Dot,
    Colon,
}

impl Delimiter {
    pub fn from_char(c: char) -> Option<Delimiter> {
        match c {
            ARABIC_COMMA => Some(Delimiter::Comma),
            '.' => Some(Delimiter::Dot),
            ':' => Some(Delimiter::Colon),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Delimiter::Comma => ARABIC_COMMA,
            Delimiter::Dot => '.',
            Delimiter::Colon => ':',
        }
    }
}

impl fmt::Display for Delimiter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word reduced to its keyword-matching key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedWord<'a> {
    pub folded: String,
    pub original: &'a str,
    pub trailing: Option<Delimiter>,
}

impl<'a> FoldedWord<'a> {
    /// The original word without its detached trailing punctuation.
    pub fn stem(&self) -> &'a str {
        match self.trailing {
            Some(d) => &self.original[..self.original.len() - d.as_char().len_utf8()],
            None => self.original,
        }
    }
}

/// Folds spelling variants so that e.g. `الامضاء:` matches the keyword `الإمضاء`.
///
/// A single word-final `،`, `.` or `:` is detached, unless the word would
/// become empty or the preceding character is itself one of those marks.
pub fn fold_for_matching(word: &str) -> FoldedWord<'_> {
    let mut trailing = None;
    let mut body = word;
    let mut chars = word.chars().rev();
    if let (Some(last), Some(prev)) = (chars.next(), chars.next()) {
        if let Some(d) = Delimiter::from_char(last) {
            if Delimiter::from_char(prev).is_none() {
                trailing = Some(d);
                body = &word[..word.len() - last.len_utf8()];
            }
        }
    }
    let folded = body.chars().filter_map(fold_char).collect();
    FoldedWord {
        folded,
        original: word,
        trailing,
    }
}

fn fold_char(c: char) -> Option<char> {
    match c {
        '\u{0623}' | '\u{0625}' | '\u{0622}' | '\u{0671}' => Some('\u{0627}'),
        '\u{0629}' => Some('\u{0647}'),
        '\u{0649}' => Some('\u{064A}'),
        TATWEEL => None,
        other => Some(other),
    }
}

/// Replaces Arabic-Indic digits (U+0660..U+0669) with ASCII digits.
pub fn to_western_digits(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            '\u{0660}'..='\u{0669}' => char::from(b'0' + (c as u32 - 0x0660) as u8),
            other => other,
        })
        .collect()
}

/// ASCII or Arabic-Indic decimal digit.
pub fn is_digit(c: char) -> bool {
    c.is_ascii_digit() || ('\u{0660}'..='\u{0669}').contains(&c)
}
