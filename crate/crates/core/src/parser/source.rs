//! Token sources the parser can run on.
//!
//! [`DocumentSource`] scans real text: expectation-driven up to the
//! acknowledgement phrase, then from a body token list built by line layout.
//! [`TokenStream`] replays a fixed token sequence and records how far the
//! parser looked, which lets the grammar checks prune whole subtrees of
//! inputs.

use crate::diagnostic::Diagnostic;
use crate::normalize::NormalizedText;
use crate::scanner::{Pos, Scanner, Span, StopSet, Token, TokenKind};

use super::layout::{self, BodyShape};

pub trait TokenSource {
    /// Consumes the next token, scanning under `stops` if the source is
    /// expectation-driven.
    fn next(&mut self, stops: &StopSet) -> Result<Token, Diagnostic>;

    /// Kind of the next token, without consuming it.
    fn peek(&mut self, stops: &StopSet) -> Result<TokenKind, Diagnostic>;

    /// Called once the acknowledgement phrase has been consumed; from here on
    /// tokens no longer depend on stop sets and [`TokenSource::look`] works.
    fn begin_body(&mut self);

    /// The token to report when `tok` was not what the parser wanted. Text
    /// scanned under narrow expectations is reclassified word by word, so a
    /// stray number reads as NUM rather than as text.
    fn explain(&self, tok: &Token) -> Token {
        tok.clone()
    }

    /// Kind of the token `n` positions ahead in the body, or `None` if that
    /// position holds a layout error.
    fn look(&mut self, n: usize) -> Option<TokenKind>;
}

/// A fixed token sequence, e.g. one representative token per kind.
#[derive(Debug, Clone)]
pub struct TokenStream {
    tokens: Vec<Token>,
    next: usize,
    high_water: usize,
}

impl TokenStream {
    pub fn new(mut tokens: Vec<Token>) -> TokenStream {
        if tokens.last().is_none_or(|t| t.kind != TokenKind::Eof) {
            let pos = Pos::new(0, tokens.len());
            tokens.push(Token::new(TokenKind::Eof, "", Span::at(pos)));
        }
        TokenStream {
            tokens,
            next: 0,
            high_water: 0,
        }
    }

    /// Builds a stream with one representative lexeme per kind, each token
    /// occupying its own word position on line 1.
    pub fn from_kinds(kinds: &[TokenKind]) -> TokenStream {
        let tokens = kinds
            .iter()
            .enumerate()
            .map(|(i, &k)| Token::new(k, representative(k), Span::at(Pos::new(0, i))))
            .collect();
        TokenStream::new(tokens)
    }

    /// Largest token index the parser has inspected; the EOF token sits at
    /// index `len`.
    pub fn high_water(&self) -> usize {
        self.high_water
    }

    fn at(&mut self, index: usize) -> &Token {
        self.high_water = self.high_water.max(index);
        let last = self.tokens.len() - 1;
        &self.tokens[index.min(last)]
    }
}

/// The lexeme used for `kind` in synthetic streams.
pub fn representative(kind: TokenKind) -> &'static str {
    match kind {
        TokenKind::Type => "مرسوم",
        TokenKind::Raqm => "رقم",
        TokenKind::Num => "١",
        TokenKind::String => "نص",
        TokenKind::Inna => "إن",
        TokenKind::Binaa => "بناء على",
        TokenKind::Haysou => "وحيث أن",
        TokenKind::Yakour => "يرسم ما يأتي",
        TokenKind::Mada => "مادة",
        TokenKind::Fi => "في",
        TokenKind::Imdaa => "الإمضاء",
        TokenKind::Comma => "،",
        TokenKind::Dot => ".",
        TokenKind::Colon => ":",
        TokenKind::Eof => "",
    }
}

impl TokenSource for TokenStream {
    fn next(&mut self, _stops: &StopSet) -> Result<Token, Diagnostic> {
        let i = self.next;
        let tok = self.at(i).clone();
        if tok.kind != TokenKind::Eof {
            self.next += 1;
        }
        Ok(tok)
    }

    fn peek(&mut self, _stops: &StopSet) -> Result<TokenKind, Diagnostic> {
        let i = self.next;
        Ok(self.at(i).kind)
    }

    fn begin_body(&mut self) {}

    fn look(&mut self, n: usize) -> Option<TokenKind> {
        let i = self.next + n;
        Some(self.at(i).kind)
    }
}

/// Scans a preprocessed document, recording every consumed token.
pub struct DocumentSource<'t> {
    scanner: Scanner<'t>,
    body: Option<Vec<Result<Token, Diagnostic>>>,
    body_next: usize,
    shape: BodyShape,
    consumed: Vec<Token>,
}

impl<'t> DocumentSource<'t> {
    pub fn new(text: &'t NormalizedText) -> DocumentSource<'t> {
        DocumentSource::with_shape(text, BodyShape::Document)
    }

    /// A source whose body, once begun, is laid out as `shape`.
    pub fn with_shape(text: &'t NormalizedText, shape: BodyShape) -> DocumentSource<'t> {
        DocumentSource {
            scanner: Scanner::new(text),
            body: None,
            body_next: 0,
            shape,
            consumed: Vec::new(),
        }
    }

    /// Tokens consumed so far, in order.
    pub fn consumed(&self) -> &[Token] {
        &self.consumed
    }

    pub fn into_consumed(self) -> Vec<Token> {
        self.consumed
    }

    fn eof(&self) -> Token {
        Token::new(TokenKind::Eof, "", Span::at(self.scanner.eof_pos()))
    }
}

impl TokenSource for DocumentSource<'_> {
    fn next(&mut self, stops: &StopSet) -> Result<Token, Diagnostic> {
        let tok = match &self.body {
            Some(items) => match items.get(self.body_next) {
                Some(Ok(tok)) => {
                    self.body_next += 1;
                    tok.clone()
                }
                Some(Err(d)) => return Err(d.clone()),
                None => self.eof(),
            },
            None => self.scanner.next_token(stops)?,
        };
        if self
            .consumed
            .last()
            .is_none_or(|t| t.kind != TokenKind::Eof)
        {
            self.consumed.push(tok.clone());
        }
        Ok(tok)
    }

    fn peek(&mut self, stops: &StopSet) -> Result<TokenKind, Diagnostic> {
        if self.body.is_some() {
            return self.look(0).ok_or_else(|| {
                self.body.as_ref().unwrap()[self.body_next]
                    .clone()
                    .unwrap_err()
            });
        }
        let saved = self.scanner.state().clone();
        let result = self.scanner.next_token(stops);
        self.scanner.restore(saved);
        Ok(result?.kind)
    }

    fn explain(&self, tok: &Token) -> Token {
        if self.body.is_some() || tok.kind != TokenKind::String {
            return tok.clone();
        }
        self.scanner
            .classify_at(tok.span.start)
            .unwrap_or_else(|| tok.clone())
    }

    fn begin_body(&mut self) {
        if self.body.is_none() {
            self.body = Some(layout::tokenize_body(&mut self.scanner, self.shape));
            self.body_next = 0;
        }
    }

    fn look(&mut self, n: usize) -> Option<TokenKind> {
        let items = self.body.as_ref()?;
        match items.get(self.body_next + n) {
            Some(Ok(tok)) => Some(tok.kind),
            Some(Err(_)) => None,
            None => Some(TokenKind::Eof),
        }
    }
}
