//! Expectation-driven tokenizer.
//!
//! The character classes of the source language overlap: content text may
//! legitimately contain `،`, `.`, `:`, digits, and even keyword spellings.
//! The scanner therefore never decides on its own where a text run ends; the
//! parser hands it a [`StopSet`] naming the token kinds that may follow, and
//! any keyword outside that set is folded into text.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::normalize::{fold_for_matching, is_digit, Delimiter, FoldedWord, NormalizedText};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TokenKind {
    Type,
    Raqm,
    Num,
    String,
    Inna,
    Binaa,
    Haysou,
    Yakour,
    Mada,
    Fi,
    Imdaa,
    Comma,
    Dot,
    Colon,
    Eof,
}

impl TokenKind {
    pub const ALL: [TokenKind; 15] = [
        TokenKind::Type,
        TokenKind::Raqm,
        TokenKind::Num,
        TokenKind::String,
        TokenKind::Inna,
        TokenKind::Binaa,
        TokenKind::Haysou,
        TokenKind::Yakour,
        TokenKind::Mada,
        TokenKind::Fi,
        TokenKind::Imdaa,
        TokenKind::Comma,
        TokenKind::Dot,
        TokenKind::Colon,
        TokenKind::Eof,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TokenKind::Type => "TYPE",
            TokenKind::Raqm => "RAQM",
            TokenKind::Num => "NUM",
            TokenKind::String => "STRING",
            TokenKind::Inna => "INNA",
            TokenKind::Binaa => "BINAA",
            TokenKind::Haysou => "HAYSOU",
            TokenKind::Yakour => "YAKOUR",
            TokenKind::Mada => "MADA",
            TokenKind::Fi => "FI",
            TokenKind::Imdaa => "IMDAA",
            TokenKind::Comma => "COMMA",
            TokenKind::Dot => "DOT",
            TokenKind::Colon => "COLON",
            TokenKind::Eof => "EOF",
        }
    }

    pub fn from_name(name: &str) -> Option<TokenKind> {
        TokenKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// How the kind reads in the source, for diagnostics.
    pub fn describe(self) -> &'static str {
        match self {
            TokenKind::Type => "قانون | قرار | مرسوم",
            TokenKind::Raqm => "رقم",
            TokenKind::Num => "number",
            TokenKind::String => "text",
            TokenKind::Inna => "إن",
            TokenKind::Binaa => "بناء على | وبناء على | وبعد الاطلاع | وبعد موافقة | ونظرا",
            TokenKind::Haysou => "نظرا | وبعد أن | وبما أن | وحيث أن",
            TokenKind::Yakour => "يرسم ما يأتي | يرسم ما يلي | يقرر ما يأتي | يقرر ما يلي",
            TokenKind::Mada => "مادة | المادة",
            TokenKind::Fi => "في",
            TokenKind::Imdaa => "إمضاء | الإمضاء",
            TokenKind::Comma => "،",
            TokenKind::Dot => ".",
            TokenKind::Colon => ":",
            TokenKind::Eof => "end of input",
        }
    }

    fn from_delimiter(d: Delimiter) -> TokenKind {
        match d {
            Delimiter::Comma => TokenKind::Comma,
            Delimiter::Dot => TokenKind::Dot,
            Delimiter::Colon => TokenKind::Colon,
        }
    }

    pub fn is_punctuation(self) -> bool {
        matches!(self, TokenKind::Comma | TokenKind::Dot | TokenKind::Colon)
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word position. `word` may equal the line's word count to denote the
/// position just past the last word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub word: usize,
}

impl Pos {
    pub fn new(line: usize, word: usize) -> Pos {
        Pos { line, word }
    }
}

/// Inclusive word range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Span {
    pub start: Pos,
    pub end: Pos,
}

impl Span {
    pub fn new(start: Pos, end: Pos) -> Span {
        debug_assert!(start <= end);
        Span { start, end }
    }

    pub fn at(pos: Pos) -> Span {
        Span {
            start: pos,
            end: pos,
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}-{}:{}",
            self.start.line + 1,
            self.start.word + 1,
            self.end.line + 1,
            self.end.word + 1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: Span,
}

impl Token {
    pub fn new(kind: TokenKind, lexeme: impl Into<String>, span: Span) -> Token {
        Token {
            kind,
            lexeme: lexeme.into(),
            span,
        }
    }
}

/// One line of the `--dump-tokens` format: `KIND<TAB>span<TAB>lexeme`.
pub fn dump_token(token: &Token) -> String {
    format!("{}\t{}\t{}", token.kind, token.span, token.lexeme)
}

/// Kinds the parser will accept next, which bound STRING accumulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StopSet {
    bits: u16,
    /// Keyword stops only take effect at the start of a line, so a text run may
    /// continue past a mid-line keyword spelling.
    pub line_break_stops: bool,
    /// The parser needs a STRING here; a keyword, punctuation or the end of
    /// input at the cursor is reported as [`ScanError::EmptyString`].
    pub string_required: bool,
}

impl StopSet {
    pub const EMPTY: StopSet = StopSet {
        bits: 0,
        line_break_stops: false,
        string_required: false,
    };

    pub fn of(kinds: &[TokenKind]) -> StopSet {
        let mut set = StopSet::EMPTY;
        for &k in kinds {
            assert!(k != TokenKind::String, "a stop set never contains STRING");
            set.bits |= 1 << k as u16;
        }
        set
    }

    pub fn at_line_breaks(mut self) -> StopSet {
        self.line_break_stops = true;
        self
    }

    pub fn requiring_string(mut self) -> StopSet {
        self.string_required = true;
        self
    }

    pub fn contains(&self, kind: TokenKind) -> bool {
        self.bits & (1 << kind as u16) != 0
    }

    pub fn kinds(&self) -> impl Iterator<Item = TokenKind> + '_ {
        TokenKind::ALL.into_iter().filter(|&k| self.contains(k))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("expected text, found {found}")]
    EmptyString { span: Span, found: TokenKind },
    #[error("unexpected '{punctuation}'")]
    UnexpectedPunctuation { span: Span, punctuation: Delimiter },
}

impl ScanError {
    pub fn span(&self) -> Span {
        match self {
            ScanError::EmptyString { span, .. } | ScanError::UnexpectedPunctuation { span, .. } => {
                *span
            }
        }
    }
}

struct Keyword {
    kind: TokenKind,
    words: Vec<String>,
}

const KEYWORD_TABLE: &[(TokenKind, &str)] = &[
    (TokenKind::Yakour, "يرسم ما يأتي"),
    (TokenKind::Yakour, "يرسم ما يلي"),
    (TokenKind::Yakour, "يقرر ما يأتي"),
    (TokenKind::Yakour, "يقرر ما يلي"),
    (TokenKind::Binaa, "وبعد الاطلاع"),
    (TokenKind::Binaa, "وبعد موافقة"),
    (TokenKind::Binaa, "وبناء على"),
    (TokenKind::Binaa, "بناء على"),
    (TokenKind::Haysou, "وبعد أن"),
    (TokenKind::Haysou, "وبما أن"),
    (TokenKind::Haysou, "وحيث أن"),
    (TokenKind::Type, "قانون"),
    (TokenKind::Type, "قرار"),
    (TokenKind::Type, "مرسوم"),
    (TokenKind::Raqm, "رقم"),
    (TokenKind::Inna, "إن"),
    (TokenKind::Binaa, "ونظرا"),
    (TokenKind::Haysou, "نظرا"),
    (TokenKind::Mada, "مادة"),
    (TokenKind::Mada, "المادة"),
    (TokenKind::Fi, "في"),
    (TokenKind::Imdaa, "إمضاء"),
    (TokenKind::Imdaa, "الإمضاء"),
];

const MAX_PHRASE_WORDS: usize = 3;

/// Keyword phrases in folded form, longest first.
fn keywords() -> &'static [Keyword] {
    static TABLE: OnceLock<Vec<Keyword>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Keyword> = KEYWORD_TABLE
            .iter()
            .map(|&(kind, phrase)| Keyword {
                kind,
                words: phrase
                    .split(' ')
                    .map(|w| fold_for_matching(w).folded)
                    .collect(),
            })
            .collect();
        table.sort_by_key(|k| std::cmp::Reverse(k.words.len()));
        table
    })
}

/// True if the folded word is exactly one of the single-word keywords of `kind`.
pub fn is_keyword_word(word: &str, kind: TokenKind) -> bool {
    let folded = fold_for_matching(word).folded;
    keywords()
        .iter()
        .any(|k| k.kind == kind && k.words.len() == 1 && k.words[0] == folded)
}

/// Recognizes a pure digit run (ASCII or Arabic-Indic), returning its text.
pub fn scan_number(word: &FoldedWord<'_>) -> Option<String> {
    let stem = word.stem();
    (!stem.is_empty() && stem.chars().all(is_digit)).then(|| stem.to_owned())
}

/// Scanner position plus punctuation detached from the last consumed word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanState {
    pub cursor: Pos,
    pending: VecDeque<Token>,
}

impl ScanState {
    pub fn has_pending(&self) -> bool {
        !self.pending.is_empty()
    }
}

pub struct Scanner<'t> {
    text: &'t NormalizedText,
    folded: Vec<Vec<FoldedWord<'t>>>,
    state: ScanState,
}

impl<'t> Scanner<'t> {
    pub fn new(text: &'t NormalizedText) -> Scanner<'t> {
        let folded = (0..text.line_count())
            .map(|l| text.line_words(l).map(fold_for_matching).collect())
            .collect();
        Scanner {
            text,
            folded,
            state: ScanState::default(),
        }
    }

    pub fn text(&self) -> &'t NormalizedText {
        self.text
    }

    pub fn state(&self) -> &ScanState {
        &self.state
    }

    pub fn restore(&mut self, state: ScanState) {
        self.state = state;
    }

    pub fn cursor(&self) -> Pos {
        self.state.cursor
    }

    pub fn at_end(&self) -> bool {
        self.state.pending.is_empty() && self.state.cursor.line >= self.text.line_count()
    }

    /// Moves the cursor to the start of `line`. Pending punctuation must be drained.
    pub fn seek_line(&mut self, line: usize) {
        assert!(self.state.pending.is_empty());
        assert!(line >= self.state.cursor.line);
        self.state.cursor = Pos::new(line, 0);
    }

    fn folded_at(&self, pos: Pos) -> Option<&FoldedWord<'t>> {
        self.folded.get(pos.line).and_then(|l| l.get(pos.word))
    }

    fn next_pos(&self, pos: Pos) -> Pos {
        if pos.word + 1 < self.folded[pos.line].len() {
            Pos::new(pos.line, pos.word + 1)
        } else {
            Pos::new(pos.line + 1, 0)
        }
    }

    fn is_line_final(&self, pos: Pos) -> bool {
        pos.word + 1 == self.folded[pos.line].len()
    }

    /// Position used for tokens and diagnostics at the end of input.
    pub fn eof_pos(&self) -> Pos {
        match self.text.line_count() {
            0 => Pos::default(),
            n => Pos::new(n - 1, self.text.word_count(n - 1)),
        }
    }

    /// Longest keyword phrase of any kind starting at `pos`.
    pub fn match_keyword_phrase(&self, pos: Pos) -> Option<(TokenKind, usize)> {
        self.match_phrase_in(pos, None)
    }

    fn match_phrase_in(&self, pos: Pos, allowed: Option<&StopSet>) -> Option<(TokenKind, usize)> {
        let line = self.folded.get(pos.line)?;
        let avail = line.len().checked_sub(pos.word)?.min(MAX_PHRASE_WORDS);
        keywords()
            .iter()
            .filter(|k| k.words.len() <= avail)
            .filter(|k| allowed.is_none_or(|s| s.contains(k.kind)))
            .find(|k| {
                k.words.iter().enumerate().all(|(i, kw)| {
                    let w = &line[pos.word + i];
                    let last = i + 1 == k.words.len();
                    // inner words of a phrase may not carry punctuation
                    w.folded == *kw && (last || w.trailing.is_none())
                })
            })
            .map(|k| (k.kind, k.words.len()))
    }

    /// How the word at `pos` reads on its own, ignoring expectations: a
    /// keyword phrase, a number, a lone delimiter, or one word of text.
    pub fn classify_at(&self, pos: Pos) -> Option<Token> {
        let word = self.folded.get(pos.line)?.get(pos.word)?;
        if let Some((kind, n)) = self.match_keyword_phrase(pos) {
            let end = Pos::new(pos.line, pos.word + n - 1);
            let lexeme = (0..n)
                .map(|i| self.folded[pos.line][pos.word + i].original)
                .collect::<Vec<_>>()
                .join(" ");
            return Some(Token::new(kind, lexeme, Span::new(pos, end)));
        }
        let kind = if let Some(kind) = standalone_delimiter(word) {
            kind
        } else if scan_number(word).is_some() {
            TokenKind::Num
        } else {
            TokenKind::String
        };
        Some(Token::new(kind, word.original, Span::at(pos)))
    }

    fn keyword_token(&mut self, kind: TokenKind, count: usize) -> Token {
        let start = self.state.cursor;
        let mut pos = start;
        let mut lexeme = String::new();
        for i in 0..count {
            let w = &self.folded[pos.line][pos.word];
            if i > 0 {
                lexeme.push(' ');
            }
            if i + 1 == count {
                lexeme.push_str(w.stem());
                if let Some(d) = w.trailing {
                    self.state
                        .pending
                        .push_back(punctuation_token(d, Span::at(pos)));
                }
            } else {
                lexeme.push_str(w.original);
                pos = Pos::new(pos.line, pos.word + 1);
            }
        }
        let end = pos;
        self.state.cursor = self.next_pos(end);
        Token::new(kind, lexeme, Span::new(start, end))
    }

    /// Returns the next token under the parser's expectations.
    ///
    /// Detached punctuation goes first, then a keyword from `expected`, then a
    /// number when `NUM` is expected, and otherwise a text run.
    pub fn next_token(&mut self, expected: &StopSet) -> Result<Token, ScanError> {
        if let Some(p) = self.state.pending.pop_front() {
            if expected.string_required {
                let span = p.span;
                self.state.pending.push_front(p);
                return Err(ScanError::EmptyString {
                    span,
                    found: self.state.pending[0].kind,
                });
            }
            if expected.contains(p.kind) {
                return Ok(p);
            }
            let punctuation = match p.kind {
                TokenKind::Comma => Delimiter::Comma,
                TokenKind::Dot => Delimiter::Dot,
                _ => Delimiter::Colon,
            };
            let span = p.span;
            self.state.pending.push_front(p);
            return Err(ScanError::UnexpectedPunctuation { span, punctuation });
        }

        let pos = self.state.cursor;
        let Some(word) = self.folded_at(pos) else {
            let eof = Token::new(TokenKind::Eof, "", Span::at(self.eof_pos()));
            if expected.string_required {
                return Err(ScanError::EmptyString {
                    span: eof.span,
                    found: TokenKind::Eof,
                });
            }
            return Ok(eof);
        };

        if let Some(kind) = standalone_delimiter(word) {
            if expected.contains(kind) {
                if expected.string_required {
                    return Err(ScanError::EmptyString {
                        span: Span::at(pos),
                        found: kind,
                    });
                }
                let lexeme = word.original.to_owned();
                self.state.cursor = self.next_pos(pos);
                return Ok(Token::new(kind, lexeme, Span::at(pos)));
            }
        }

        if let Some((kind, count)) = self.match_phrase_in(pos, Some(expected)) {
            if expected.string_required {
                return Err(ScanError::EmptyString {
                    span: Span::at(pos),
                    found: kind,
                });
            }
            return Ok(self.keyword_token(kind, count));
        }

        if expected.contains(TokenKind::Num) {
            if let Some(digits) = scan_number(word) {
                if let Some(d) = word.trailing {
                    self.state
                        .pending
                        .push_back(punctuation_token(d, Span::at(pos)));
                }
                self.state.cursor = self.next_pos(pos);
                return Ok(Token::new(TokenKind::Num, digits, Span::at(pos)));
            }
        }

        Ok(self.scan_string(expected))
    }

    fn scan_string(&mut self, expected: &StopSet) -> Token {
        let start = self.state.cursor;
        let mut pos = start;
        let mut end = start;
        let mut lexeme = String::new();
        while let Some(word) = self.folded_at(pos) {
            if pos != start {
                let keyword_stop = !expected.line_break_stops || pos.word == 0;
                if keyword_stop && self.match_phrase_in(pos, Some(expected)).is_some() {
                    break;
                }
                if standalone_delimiter(word).is_some_and(|k| expected.contains(k)) {
                    break;
                }
                lexeme.push(' ');
            }
            end = pos;
            let stop = word.trailing.filter(|&d| {
                let kind = TokenKind::from_delimiter(d);
                expected.contains(kind) && (d != Delimiter::Dot || self.is_line_final(pos))
            });
            match stop {
                Some(d) => {
                    lexeme.push_str(word.stem());
                    self.state
                        .pending
                        .push_back(punctuation_token(d, Span::at(pos)));
                    pos = self.next_pos(pos);
                    break;
                }
                None => lexeme.push_str(word.original),
            }
            pos = self.next_pos(pos);
        }
        self.state.cursor = pos;
        Token::new(TokenKind::String, lexeme, Span::new(start, end))
    }

    /// Takes the words from the cursor to the end of its line as raw text.
    /// Returns `None` when the cursor is already past the line's last word.
    pub fn take_rest_of_line(&mut self) -> Option<Token> {
        assert!(self.state.pending.is_empty());
        let pos = self.state.cursor;
        let len = self.text.word_count(pos.line);
        if pos.word >= len {
            if pos.line < self.text.line_count() {
                self.state.cursor = Pos::new(pos.line + 1, 0);
            }
            return None;
        }
        let lexeme = self
            .text
            .line_words(pos.line)
            .skip(pos.word)
            .collect::<Vec<_>>()
            .join(" ");
        let end = Pos::new(pos.line, len - 1);
        self.state.cursor = Pos::new(pos.line + 1, 0);
        Some(Token::new(TokenKind::String, lexeme, Span::new(pos, end)))
    }

    /// Takes whole lines from the cursor up to (excluding) `end_line` as one
    /// raw text token. The cursor must be at a line start.
    pub fn take_lines(&mut self, end_line: usize) -> Option<Token> {
        assert!(self.state.pending.is_empty());
        let start = self.state.cursor;
        assert_eq!(start.word, 0);
        if start.line >= end_line {
            return None;
        }
        let lexeme = (start.line..end_line)
            .map(|l| self.text.line_text(l))
            .collect::<Vec<_>>()
            .join(" ");
        let last = end_line - 1;
        let end = Pos::new(last, self.text.word_count(last) - 1);
        self.state.cursor = Pos::new(end_line, 0);
        Some(Token::new(TokenKind::String, lexeme, Span::new(start, end)))
    }

    /// Takes words `[from, to)` of the cursor's line as raw text.
    pub fn take_words(&mut self, to: usize) -> Option<Token> {
        assert!(self.state.pending.is_empty());
        let start = self.state.cursor;
        if start.word >= to {
            return None;
        }
        let lexeme = self
            .text
            .line_words(start.line)
            .skip(start.word)
            .take(to - start.word)
            .collect::<Vec<_>>()
            .join(" ");
        let end = Pos::new(start.line, to - 1);
        self.state.cursor = if to == self.text.word_count(start.line) {
            Pos::new(start.line + 1, 0)
        } else {
            Pos::new(start.line, to)
        };
        Some(Token::new(TokenKind::String, lexeme, Span::new(start, end)))
    }
}

fn standalone_delimiter(word: &FoldedWord<'_>) -> Option<TokenKind> {
    let mut chars = word.original.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Delimiter::from_char(c).map(TokenKind::from_delimiter),
        _ => None,
    }
}

fn punctuation_token(d: Delimiter, span: Span) -> Token {
    Token::new(TokenKind::from_delimiter(d), d.as_char().to_string(), span)
}

/// Rebuilds the word sequence from a token stream: word-derived lexemes are
/// split on spaces and punctuation detached from a word is glued back on.
pub fn reconstruct_words(tokens: &[Token]) -> Vec<String> {
    let mut words: Vec<String> = Vec::new();
    let mut last_end: Option<Pos> = None;
    for t in tokens {
        if t.kind == TokenKind::Eof {
            continue;
        }
        if t.kind.is_punctuation() && last_end == Some(t.span.start) {
            if let Some(w) = words.last_mut() {
                w.push_str(&t.lexeme);
                continue;
            }
        }
        words.extend(t.lexeme.split(' ').map(str::to_owned));
        last_end = Some(t.span.end);
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize::preprocess;

    fn text(s: &str) -> NormalizedText {
        preprocess(s.as_bytes(), "t").unwrap()
    }

    fn stops(kinds: &[TokenKind]) -> StopSet {
        StopSet::of(kinds)
    }

    #[test]
    fn longest_keyword_phrases() {
        let t = text("يرسم ما يأتي:\nبناء على الدستور\nدعوة\nوبعد أن\nرقم");
        let s = Scanner::new(&t);
        assert_eq!(
            s.match_keyword_phrase(Pos::new(0, 0)),
            Some((TokenKind::Yakour, 3))
        );
        assert_eq!(
            s.match_keyword_phrase(Pos::new(1, 0)),
            Some((TokenKind::Binaa, 2))
        );
        assert_eq!(s.match_keyword_phrase(Pos::new(2, 0)), None);
        assert_eq!(
            s.match_keyword_phrase(Pos::new(3, 0)),
            Some((TokenKind::Haysou, 2))
        );
        assert_eq!(
            s.match_keyword_phrase(Pos::new(4, 0)),
            Some((TokenKind::Raqm, 1))
        );
    }

    #[test]
    fn phrase_cannot_span_lines() {
        let t = text("بناء\nعلى");
        let s = Scanner::new(&t);
        assert_eq!(s.match_keyword_phrase(Pos::new(0, 0)), None);
    }

    #[test]
    fn number_automaton() {
        assert_eq!(scan_number(&fold_for_matching("٢٥")), Some("٢٥".into()));
        assert_eq!(scan_number(&fold_for_matching("١:")), Some("١".into()));
        assert_eq!(scan_number(&fold_for_matching("2018")), Some("2018".into()));
        assert_eq!(scan_number(&fold_for_matching("")), None);
        assert_eq!(scan_number(&fold_for_matching("٢٠١٨/٣/١٩")), None);
        assert_eq!(scan_number(&fold_for_matching("٣أ")), None);
    }

    #[test]
    fn issuer_line() {
        let t = text("إن رئيس الجمهورية،\nبناء على الدستور،");
        let mut s = Scanner::new(&t);
        let inna = s.next_token(&stops(&[TokenKind::Inna])).unwrap();
        assert_eq!((inna.kind, inna.lexeme.as_str()), (TokenKind::Inna, "إن"));
        let st = stops(&[TokenKind::Comma, TokenKind::Binaa]);
        let issuer = s.next_token(&st).unwrap();
        assert_eq!(
            (issuer.kind, issuer.lexeme.as_str()),
            (TokenKind::String, "رئيس الجمهورية")
        );
        let comma = s.next_token(&st).unwrap();
        assert_eq!(comma.kind, TokenKind::Comma);
        assert_eq!(comma.span, Span::at(Pos::new(0, 2)));
        let binaa = s.next_token(&st).unwrap();
        assert_eq!(
            (binaa.kind, binaa.lexeme.as_str()),
            (TokenKind::Binaa, "بناء على")
        );
    }

    #[test]
    fn eof_at_end() {
        let t = text("رقم");
        let mut s = Scanner::new(&t);
        s.next_token(&stops(&[TokenKind::Raqm])).unwrap();
        let eof = s.next_token(&stops(&[TokenKind::Eof])).unwrap();
        assert_eq!(eof.kind, TokenKind::Eof);
        assert_eq!(eof.lexeme, "");
        assert_eq!(eof.span, Span::at(Pos::new(0, 1)));
    }

    #[test]
    fn keyword_outside_expected_is_text() {
        let t = text("ينشر هذا المرسوم ويبلغ حيث تدعو الحاجة");
        let mut s = Scanner::new(&t);
        let st = stops(&[TokenKind::Mada, TokenKind::Fi]).at_line_breaks();
        let tok = s.next_token(&st).unwrap();
        assert_eq!(tok.kind, TokenKind::String);
        assert_eq!(tok.lexeme, "ينشر هذا المرسوم ويبلغ حيث تدعو الحاجة");
        assert!(s.at_end());
    }

    #[test]
    fn title_stops_at_line_starting_with_inna() {
        let t = text("دعوة مجلس النواب\nإلى عقد استثنائي\nإن رئيس");
        let mut s = Scanner::new(&t);
        let st = stops(&[TokenKind::Inna]).at_line_breaks();
        let tok = s.next_token(&st).unwrap();
        assert_eq!(tok.lexeme, "دعوة مجلس النواب إلى عقد استثنائي");
        assert_eq!(s.cursor(), Pos::new(2, 0));
    }

    #[test]
    fn line_break_stops_ignore_mid_line_keywords() {
        let t = text("نص أن نص\nإن");
        let mut s = Scanner::new(&t);
        let tok = s
            .next_token(&stops(&[TokenKind::Inna]).at_line_breaks())
            .unwrap();
        assert_eq!(tok.lexeme, "نص أن نص");

        let mut s = Scanner::new(&t);
        let tok = s.next_token(&stops(&[TokenKind::Inna])).unwrap();
        assert_eq!(tok.lexeme, "نص");
    }

    #[test]
    fn dot_only_terminates_at_line_end() {
        let t = text("أ. ب ج.\nد");
        let mut s = Scanner::new(&t);
        let st = stops(&[TokenKind::Comma, TokenKind::Dot]);
        let tok = s.next_token(&st).unwrap();
        assert_eq!(tok.lexeme, "أ. ب ج");
        assert_eq!(s.next_token(&st).unwrap().kind, TokenKind::Dot);
    }

    #[test]
    fn unexpected_comma_is_not_a_terminator() {
        let t = text("قانون الموازنة، المعدل\nإن");
        let mut s = Scanner::new(&t);
        let tok = s
            .next_token(&stops(&[TokenKind::Inna]).at_line_breaks())
            .unwrap();
        assert_eq!(tok.lexeme, "قانون الموازنة، المعدل");
    }

    #[test]
    fn colon_detached_from_yakour_and_number() {
        let t = text("يرسم ما يأتي:\nمادة ١:");
        let mut s = Scanner::new(&t);
        let y = s.next_token(&stops(&[TokenKind::Yakour])).unwrap();
        assert_eq!(
            (y.kind, y.lexeme.as_str()),
            (TokenKind::Yakour, "يرسم ما يأتي")
        );
        assert_eq!(y.span, Span::new(Pos::new(0, 0), Pos::new(0, 2)));
        assert_eq!(
            s.next_token(&stops(&[TokenKind::Colon])).unwrap().kind,
            TokenKind::Colon
        );
        assert_eq!(
            s.next_token(&stops(&[TokenKind::Mada])).unwrap().kind,
            TokenKind::Mada
        );
        let n = s
            .next_token(&stops(&[TokenKind::Num, TokenKind::Colon]))
            .unwrap();
        assert_eq!((n.kind, n.lexeme.as_str()), (TokenKind::Num, "١"));
        assert_eq!(
            s.next_token(&stops(&[TokenKind::Colon])).unwrap().kind,
            TokenKind::Colon
        );
    }

    #[test]
    fn pending_punctuation_must_be_expected() {
        let t = text("مرسوم، رقم");
        let mut s = Scanner::new(&t);
        s.next_token(&stops(&[TokenKind::Type])).unwrap();
        let err = s.next_token(&stops(&[TokenKind::Raqm])).unwrap_err();
        assert!(matches!(
            err,
            ScanError::UnexpectedPunctuation {
                punctuation: Delimiter::Comma,
                ..
            }
        ));
    }

    #[test]
    fn empty_string_when_keyword_at_cursor() {
        let t = text("بناء على");
        let mut s = Scanner::new(&t);
        let st = stops(&[TokenKind::Comma, TokenKind::Binaa]).requiring_string();
        let err = s.next_token(&st).unwrap_err();
        assert_eq!(
            err,
            ScanError::EmptyString {
                span: Span::at(Pos::new(0, 0)),
                found: TokenKind::Binaa
            }
        );
    }

    #[test]
    fn standalone_colon_is_a_delimiter() {
        let t = text("الإمضاء : اسم");
        let mut s = Scanner::new(&t);
        s.next_token(&stops(&[TokenKind::Imdaa])).unwrap();
        let c = s.next_token(&stops(&[TokenKind::Colon])).unwrap();
        assert_eq!(c.kind, TokenKind::Colon);
        let toks = vec![
            Token::new(TokenKind::Imdaa, "الإمضاء", Span::at(Pos::new(0, 0))),
            c,
            s.take_rest_of_line().unwrap(),
        ];
        assert_eq!(reconstruct_words(&toks), vec!["الإمضاء", ":", "اسم"]);
    }

    #[test]
    fn raw_line_takes() {
        let t = text("مادة ١: عقد استثنائي\nسطر أول\nسطر ثان\nبعيدا في ٢٠٢٠");
        let mut s = Scanner::new(&t);
        s.next_token(&stops(&[TokenKind::Mada])).unwrap();
        s.next_token(&stops(&[TokenKind::Num, TokenKind::Colon]))
            .unwrap();
        s.next_token(&stops(&[TokenKind::Colon])).unwrap();
        assert_eq!(s.take_rest_of_line().unwrap().lexeme, "عقد استثنائي");
        let content = s.take_lines(3).unwrap();
        assert_eq!(content.lexeme, "سطر أول سطر ثان");
        assert_eq!(content.span, Span::new(Pos::new(1, 0), Pos::new(2, 1)));
        assert_eq!(s.take_words(1).unwrap().lexeme, "بعيدا");
        assert_eq!(s.cursor(), Pos::new(3, 1));
    }

    #[test]
    fn dump_format() {
        let tok = Token::new(TokenKind::Num, "٢٥", Span::at(Pos::new(0, 2)));
        assert_eq!(dump_token(&tok), "NUM\t1:3-1:3\t٢٥");
    }
}
