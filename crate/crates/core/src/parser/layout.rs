//! Line-layout rules for the document body.
//!
//! The grammar gives no separator between an article's title and content,
//! between the last article's content and the location/date line, or between
//! signatures. Those boundaries are recovered from the line structure here and
//! turned into tokens; the parser then checks the token sequence against the
//! grammar as usual.

use thiserror::Error;

use crate::diagnostic::Diagnostic;
use crate::normalize::{fold_for_matching, is_digit, Delimiter};
use crate::scanner::{is_keyword_word, Pos, Scanner, Span, StopSet, Token, TokenKind};

/// Result of splitting the lines that follow the last article header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrailerSplit {
    /// Index of the location/date line; lines before it are article content.
    pub loc_date: usize,
    /// First signature line; signatures run to the end.
    pub signatures_start: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TrailerError {
    #[error("no signature block, and the last line is not a location/date line")]
    NoSignatureBlock,
    #[error("expected a location/date line before the signature block")]
    MissingLocDate { imdaa_line: usize },
}

fn first_word_is_imdaa<W: AsRef<str>>(words: &[W]) -> bool {
    words
        .first()
        .is_some_and(|w| is_keyword_word(w.as_ref(), TokenKind::Imdaa))
}

/// A bare `في`, without attached punctuation.
fn is_fi_word(word: &str) -> bool {
    let f = fold_for_matching(word);
    f.trailing.is_none() && is_keyword_word(word, TokenKind::Fi)
}

fn has_digit(word: &str) -> bool {
    word.chars().any(is_digit)
}

/// A location/date line has `في` as its second word or contains a number.
pub fn looks_like_loc_date<W: AsRef<str>>(words: &[W]) -> bool {
    words.get(1).is_some_and(|w| is_fi_word(w.as_ref()))
        || words.iter().any(|w| has_digit(w.as_ref()))
}

/// Splits the lines after the last article header into content,
/// location/date line and signature lines, anchored on the first line that
/// starts with `الإمضاء`.
pub fn segment_trailer<L, W>(lines: &[L]) -> Result<TrailerSplit, TrailerError>
where
    L: AsRef<[W]>,
    W: AsRef<str>,
{
    let Some(first_sig) = lines.iter().position(|l| first_word_is_imdaa(l.as_ref())) else {
        return match lines.len().checked_sub(1) {
            Some(last) if looks_like_loc_date(lines[last].as_ref()) => Ok(TrailerSplit {
                loc_date: last,
                signatures_start: lines.len(),
            }),
            _ => Err(TrailerError::NoSignatureBlock),
        };
    };
    if first_sig >= 1 && looks_like_loc_date(lines[first_sig - 1].as_ref()) {
        Ok(TrailerSplit {
            loc_date: first_sig - 1,
            signatures_start: first_sig,
        })
    } else if first_sig >= 2 {
        Ok(TrailerSplit {
            loc_date: first_sig - 2,
            signatures_start: first_sig - 1,
        })
    } else {
        Err(TrailerError::MissingLocDate {
            imdaa_line: first_sig,
        })
    }
}

/// Word ranges of a location/date line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocDateSplit {
    /// Words `[0, location_end)`.
    pub location_end: usize,
    /// Index of the `في` word, if the line has one.
    pub fi: Option<usize>,
    /// Words `[date_start, len)`.
    pub date_start: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LocDateError {
    #[error("a location/date line needs at least two words")]
    TooShort,
    #[error("location/date line has neither 'في' nor a date")]
    NoSeparator,
    #[error("location/date line has an empty location")]
    EmptyLocation,
    #[error("location/date line has an empty date")]
    EmptyDate,
}

/// Splits at a standalone `في`, or else before the first word with a digit.
pub fn split_loc_date<W: AsRef<str>>(words: &[W]) -> Result<LocDateSplit, LocDateError> {
    if words.len() < 2 {
        return Err(LocDateError::TooShort);
    }
    let split = if let Some(fi) = words.iter().position(|w| is_fi_word(w.as_ref())) {
        LocDateSplit {
            location_end: fi,
            fi: Some(fi),
            date_start: fi + 1,
        }
    } else if let Some(d) = words.iter().position(|w| has_digit(w.as_ref())) {
        LocDateSplit {
            location_end: d,
            fi: None,
            date_start: d,
        }
    } else {
        return Err(LocDateError::NoSeparator);
    };
    if split.location_end == 0 {
        Err(LocDateError::EmptyLocation)
    } else if split.date_start >= words.len() {
        Err(LocDateError::EmptyDate)
    } else {
        Ok(split)
    }
}

fn is_article_header(words: &[&str]) -> bool {
    words.first().is_some_and(|w| {
        fold_for_matching(w).trailing.is_none() && is_keyword_word(w, TokenKind::Mada)
    }) && words
        .iter()
        .skip(1)
        .take(3)
        .any(|w| *w == ":" || fold_for_matching(w).trailing == Some(Delimiter::Colon))
}

/// One body line, possibly starting mid-line right after the acknowledgement.
struct BodyLine<'t> {
    line: usize,
    from: usize,
    words: Vec<&'t str>,
}

struct BodyTokens<'s, 't> {
    scanner: &'s mut Scanner<'t>,
    out: Vec<Result<Token, Diagnostic>>,
}

impl<'t> BodyTokens<'_, 't> {
    fn push(&mut self, tok: Option<Token>) {
        if let Some(t) = tok {
            self.out.push(Ok(t));
        }
    }

    fn fail(&mut self, d: Diagnostic) {
        self.out.push(Err(d));
    }

    fn seek(&mut self, l: &BodyLine<'_>) {
        if self.scanner.cursor() < Pos::new(l.line, l.from) {
            self.scanner.seek_line(l.line);
        }
    }

    fn scan(&mut self, stops: &[TokenKind]) -> Option<Token> {
        match self.scanner.next_token(&StopSet::of(stops)) {
            Ok(t) => Some(t),
            Err(e) => {
                self.fail(e.into());
                None
            }
        }
    }

    /// `MADA article-num :` then the rest of the header line as the title.
    /// Returns false if tokenization had to stop.
    fn header(&mut self, l: &BodyLine<'_>) -> bool {
        self.seek(l);
        let Some(mada) = self.scan(&[TokenKind::Mada]) else {
            return false;
        };
        self.push(Some(mada));
        // header detection guarantees a colon within the first words
        loop {
            let Some(tok) = self.scan(&[TokenKind::Num, TokenKind::Colon]) else {
                return false;
            };
            let done = tok.kind == TokenKind::Colon;
            self.push(Some(tok));
            if done || (self.scanner.cursor().line != l.line && !self.scanner.state().has_pending())
            {
                break;
            }
        }
        if self.scanner.cursor().line == l.line {
            let title = self.scanner.take_rest_of_line();
            self.push(title);
        }
        true
    }

    fn content(&mut self, mut lines: &[BodyLine<'_>]) {
        if let Some(first) = lines.first().filter(|l| l.from > 0) {
            self.seek(first);
            let fragment = self.scanner.take_rest_of_line();
            self.push(fragment);
            lines = &lines[1..];
        }
        if let Some(first) = lines.first() {
            self.seek(first);
            let end = lines.last().unwrap().line + 1;
            let tok = self.scanner.take_lines(end);
            self.push(tok);
        }
    }

    fn loc_date(&mut self, l: &BodyLine<'_>) -> bool {
        self.seek(l);
        match split_loc_date(&l.words) {
            Ok(split) => {
                let location = self.scanner.take_words(l.from + split.location_end);
                self.push(location);
                if split.fi.is_some() {
                    let Some(fi) = self.scan(&[TokenKind::Fi]) else {
                        return false;
                    };
                    self.push(Some(fi));
                }
                let date = self.scanner.take_rest_of_line();
                self.push(date);
                true
            }
            Err(e) => {
                let span = line_span(l);
                self.fail(Diagnostic::error(e.to_string(), span, TokenKind::String));
                false
            }
        }
    }

    fn signature_line(&mut self, l: &BodyLine<'_>) -> bool {
        self.seek(l);
        if !first_word_is_imdaa(&l.words) {
            let position = self.scanner.take_rest_of_line();
            self.push(position);
            return true;
        }
        let Some(imdaa) = self.scan(&[TokenKind::Imdaa]) else {
            return false;
        };
        self.push(Some(imdaa));
        let cursor = self.scanner.cursor();
        let colon_follows = self.scanner.state().has_pending()
            || (cursor.line == l.line && l.words.get(cursor.word - l.from) == Some(&":"));
        if colon_follows {
            let Some(colon) = self.scan(&[TokenKind::Colon]) else {
                return false;
            };
            self.push(Some(colon));
        }
        if self.scanner.cursor().line != l.line {
            let at = Pos::new(l.line, l.from + l.words.len());
            self.fail(
                Diagnostic::error("signature line has no name", Span::at(at), TokenKind::Eof)
                    .expecting(&[TokenKind::String]),
            );
            return false;
        }
        let name = self.scanner.take_rest_of_line();
        self.push(name);
        true
    }
}

fn line_span(l: &BodyLine<'_>) -> Span {
    Span::new(
        Pos::new(l.line, l.from),
        Pos::new(l.line, l.from + l.words.len().saturating_sub(1)),
    )
}

/// What the text after the scanner's cursor is expected to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodyShape {
    /// Articles, then the location/date line and signatures.
    Document,
    /// A single location/date line.
    LocDate,
    /// Signature lines only.
    Signatures,
}

fn body_lines<'t>(scanner: &Scanner<'t>) -> Vec<BodyLine<'t>> {
    let text = scanner.text();
    let cursor = scanner.cursor();
    let mut lines = Vec::new();
    for line in cursor.line..text.line_count() {
        let from = if line == cursor.line { cursor.word } else { 0 };
        let words: Vec<&str> = text.line_words(line).skip(from).collect();
        if !words.is_empty() {
            lines.push(BodyLine { line, from, words });
        }
    }
    lines
}

/// Tokenizes everything from the scanner's cursor to the end of input by
/// line layout. A layout error is placed in the list where it occurs and ends
/// tokenization.
pub(crate) fn tokenize_body(
    scanner: &mut Scanner<'_>,
    shape: BodyShape,
) -> Vec<Result<Token, Diagnostic>> {
    let lines = body_lines(scanner);
    let mut body = BodyTokens {
        scanner,
        out: Vec::new(),
    };
    match shape {
        BodyShape::Document => {}
        BodyShape::LocDate => {
            for l in &lines {
                if !body.loc_date(l) {
                    break;
                }
            }
            return body.out;
        }
        BodyShape::Signatures => {
            for l in &lines {
                if !body.signature_line(l) {
                    break;
                }
            }
            return body.out;
        }
    }

    let headers: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| is_article_header(&l.words))
        .map(|(i, _)| i)
        .collect();

    let first_header = headers.first().copied().unwrap_or(lines.len());
    body.content(&lines[..first_header]);
    let Some(&last_header) = headers.last() else {
        return body.out;
    };

    for (k, &h) in headers.iter().enumerate() {
        if !body.header(&lines[h]) {
            return body.out;
        }
        if h != last_header {
            body.content(&lines[h + 1..headers[k + 1]]);
        }
    }

    let trailer = &lines[last_header + 1..];
    let words: Vec<&[&str]> = trailer.iter().map(|l| l.words.as_slice()).collect();
    match segment_trailer(&words) {
        Ok(split) => {
            body.content(&trailer[..split.loc_date]);
            if !body.loc_date(&trailer[split.loc_date]) {
                return body.out;
            }
            for l in &trailer[split.signatures_start..] {
                if !body.signature_line(l) {
                    return body.out;
                }
            }
        }
        Err(TrailerError::NoSignatureBlock) => {
            body.content(trailer);
            let at = body.scanner.eof_pos();
            body.fail(Diagnostic::error(
                TrailerError::NoSignatureBlock.to_string(),
                Span::at(at),
                TokenKind::Eof,
            ));
        }
        Err(e @ TrailerError::MissingLocDate { imdaa_line }) => {
            body.content(&trailer[..imdaa_line]);
            let span = line_span(&trailer[imdaa_line]);
            body.fail(Diagnostic::error(e.to_string(), span, TokenKind::Imdaa));
        }
    }
    body.out
}
