//! Parser and scanner diagnostics, and their caret rendering.

use std::fmt::Write as _;

use crate::normalize::NormalizedText;
use crate::scanner::{ScanError, Span, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn label(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub span: Span,
    /// Sorted, without duplicates.
    pub expected: Vec<TokenKind>,
    pub found: TokenKind,
}

impl Diagnostic {
    pub fn error(message: impl Into<String>, span: Span, found: TokenKind) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            message: message.into(),
            span,
            expected: Vec::new(),
            found,
        }
    }

    pub fn expecting(mut self, kinds: &[TokenKind]) -> Diagnostic {
        self.expected.extend_from_slice(kinds);
        self.expected.sort();
        self.expected.dedup();
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl From<ScanError> for Diagnostic {
    fn from(e: ScanError) -> Diagnostic {
        match e {
            ScanError::EmptyString { span, found } => Diagnostic::error(
                format!("expected {}, found {found}", TokenKind::String),
                span,
                found,
            )
            .expecting(&[TokenKind::String]),
            ScanError::UnexpectedPunctuation { span, punctuation } => {
                let found = match punctuation {
                    crate::normalize::Delimiter::Comma => TokenKind::Comma,
                    crate::normalize::Delimiter::Dot => TokenKind::Dot,
                    crate::normalize::Delimiter::Colon => TokenKind::Colon,
                };
                Diagnostic::error(format!("unexpected '{punctuation}'"), span, found)
            }
        }
    }
}

/// Renders a diagnostic as a header line, the offending source line and a
/// caret marker under the span:
///
/// ```text
/// error: expected RAQM, found NUM at decree.txt:1:2
///  1 | مرسوم ٢٥
///    |       ^^
///    = expected: رقم
/// ```
///
/// Columns count characters, not display cells.
pub fn render_diagnostic(d: &Diagnostic, text: &NormalizedText) -> String {
    let start = d.span.start;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {} at {}:{}:{}",
        d.severity.label(),
        d.message,
        text.source_name(),
        start.line + 1,
        start.word + 1
    );

    let line_no = (start.line + 1).to_string();
    let gutter = " ".repeat(line_no.len());
    let (source, column, width) = if start.line < text.line_count() {
        let words: Vec<&str> = text.line_words(start.line).collect();
        let column: usize = words
            .iter()
            .take(start.word)
            .map(|w| w.chars().count() + 1)
            .sum();
        let width = if start.word >= words.len() {
            1
        } else {
            let last = if d.span.end.line == start.line {
                d.span.end.word.min(words.len() - 1)
            } else {
                words.len() - 1
            };
            let covered = &words[start.word..=last.max(start.word)];
            covered.iter().map(|w| w.chars().count()).sum::<usize>() + covered.len() - 1
        };
        (text.line_text(start.line), column, width)
    } else {
        ("", 0, 1)
    };
    let _ = writeln!(out, " {line_no} | {source}");
    let _ = writeln!(
        out,
        " {gutter} | {}{}",
        " ".repeat(column),
        "^".repeat(width)
    );
    if !d.expected.is_empty() {
        let list: Vec<&str> = d.expected.iter().map(|k| k.describe()).collect();
        let _ = writeln!(out, " {gutter} = expected: {}", list.join(", "));
    }
    out
}
