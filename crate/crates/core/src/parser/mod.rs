//! Recursive-descent parser for decrees, laws and decisions.
//!
//! The grammar, with `◊` read as the Arabic comma:
//!
//! ```text
//! document      → statement title issuer ref-list just-list acknowledge article-list loc-date sig-list
//! statement     → TYPE RAQM NUM
//! title         → STRING
//! issuer        → INNA STRING ◊
//! ref-list      → ref ref-list | ref
//! ref           → BINAA STRING ◊ | BINAA STRING .
//! just-list     → just just-list | λ
//! just          → HAYSOU STRING ◊ | HAYSOU STRING .
//! acknowledge   → YAKOUR :
//! article-list  → article article-list | article
//! article       → MADA article-num : article-title article-content
//! article-num   → NUM | STRING
//! article-title → STRING | λ
//! article-content → STRING
//! loc-date      → STRING FI STRING | STRING STRING
//! sig-list      → sig-type1 sig-type2-list | sig-type1 | sig-type2-list
//! sig-type1     → IMDAA : STRING STRING | λ
//! sig-type2-list → sig-type2 sig-type2-list | sig-type2
//! sig-type2     → STRING IMDAA : STRING
//! ```
//!
//! `sig-list` admits a leading type-1 signature followed by type-2 ones, as
//! real decrees are signed that way.
//!
//! The tail of the body (`[title] content loc-date sig-list`) is a run of
//! STRINGs with a few markers in it; it is parsed with bounded lookahead over
//! token kinds, which keeps the parser deterministic on any token source.

mod ast;
mod dump;
pub mod layout;
mod source;

pub use ast::{Article, DocType, Document, LocDate, Signature, SignatureVariant, Statement};
pub use dump::dump_document;
pub use source::{representative, DocumentSource, TokenSource, TokenStream};

use crate::diagnostic::Diagnostic;
use crate::normalize::NormalizedText;
use crate::scanner::{StopSet, Token, TokenKind};

use TokenKind as K;

/// Entry points of the grammar the parser can start from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StartSymbol {
    Document,
    Statement,
    Title,
    Issuer,
    RefList,
    JustList,
    Acknowledge,
    ArticleList,
    LocDate,
    SigList,
}

impl StartSymbol {
    pub const ALL: [StartSymbol; 10] = [
        StartSymbol::Document,
        StartSymbol::Statement,
        StartSymbol::Title,
        StartSymbol::Issuer,
        StartSymbol::RefList,
        StartSymbol::JustList,
        StartSymbol::Acknowledge,
        StartSymbol::ArticleList,
        StartSymbol::LocDate,
        StartSymbol::SigList,
    ];

    /// The grammar nonterminal this entry point parses.
    pub fn nonterminal(self) -> &'static str {
        match self {
            StartSymbol::Document => "document",
            StartSymbol::Statement => "statement",
            StartSymbol::Title => "title",
            StartSymbol::Issuer => "issuer",
            StartSymbol::RefList => "ref-list",
            StartSymbol::JustList => "just-list",
            StartSymbol::Acknowledge => "acknowledge",
            StartSymbol::ArticleList => "article-list",
            StartSymbol::LocDate => "loc-date",
            StartSymbol::SigList => "sig-list",
        }
    }
}

/// Parses a preprocessed document.
pub fn parse_document(text: &NormalizedText) -> Result<Document, Vec<Diagnostic>> {
    parse_document_traced(text).0
}

/// Like [`parse_document`], also returning every token consumed, in order.
pub fn parse_document_traced(
    text: &NormalizedText,
) -> (Result<Document, Vec<Diagnostic>>, Vec<Token>) {
    let mut parser = Parser::new(DocumentSource::new(text));
    let result = parser.parse_document().map_err(|d| vec![d]);
    (result, parser.into_source().into_consumed())
}

/// Parses one location/date line, e.g. `بيروت في ١ آذار ٢٠٢٠`.
pub fn parse_loc_date_line(text: &NormalizedText) -> Result<LocDate, Diagnostic> {
    let mut parser = Parser::new(DocumentSource::with_shape(text, layout::BodyShape::LocDate));
    parser.src.begin_body();
    let loc_date = parser.parse_loc_date()?;
    parser.expect_eof()?;
    Ok(loc_date)
}

/// Parses the signature lines that close a document.
pub fn parse_signature_lines(text: &NormalizedText) -> Result<Vec<Signature>, Diagnostic> {
    let mut parser = Parser::new(DocumentSource::with_shape(
        text,
        layout::BodyShape::Signatures,
    ));
    parser.src.begin_body();
    let signatures = parser.parse_sig_list(None)?;
    parser.expect_eof()?;
    Ok(signatures)
}

/// Parses a token-kind sequence from `start` using representative lexemes.
/// Returns the parse outcome and the highest token index inspected.
pub fn parse_kinds(start: StartSymbol, kinds: &[TokenKind]) -> (Result<(), Diagnostic>, usize) {
    let mut parser = Parser::new(TokenStream::from_kinds(kinds));
    let result = parser.parse_from(start);
    (result, parser.src.high_water())
}

enum Tail {
    /// The last article is followed by the location/date line and signatures.
    Trailer,
    /// The article list stands alone.
    None,
}

struct Trailer {
    loc_date: LocDate,
    signatures: Vec<Signature>,
}

pub struct Parser<S> {
    src: S,
}

/// "expected A, B or C, found D"
fn found(expected: &[TokenKind], tok: &Token) -> Diagnostic {
    let names: Vec<&str> = expected.iter().map(|k| k.name()).collect();
    let what = match names.split_last() {
        Some((last, rest)) if !rest.is_empty() => format!("{} or {last}", rest.join(", ")),
        _ => names.concat(),
    };
    Diagnostic::error(
        format!("expected {what}, found {}", tok.kind),
        tok.span,
        tok.kind,
    )
    .expecting(expected)
}

const CLAUSE_STARTS: [TokenKind; 3] = [K::Binaa, K::Haysou, K::Yakour];

impl<S: TokenSource> Parser<S> {
    pub fn new(src: S) -> Parser<S> {
        Parser { src }
    }

    pub fn into_source(self) -> S {
        self.src
    }

    fn expect(&mut self, kind: TokenKind, stops: &StopSet) -> Result<Token, Diagnostic> {
        let tok = self.src.next(stops)?;
        if tok.kind == kind {
            Ok(tok)
        } else {
            Err(self.mismatch(&[kind], &tok))
        }
    }

    fn mismatch(&self, expected: &[TokenKind], tok: &Token) -> Diagnostic {
        found(expected, &self.src.explain(tok))
    }

    fn expect_keyword(&mut self, kind: TokenKind) -> Result<Token, Diagnostic> {
        self.expect(kind, &StopSet::of(&[kind]))
    }

    /// A STRING bounded by `stops`.
    fn expect_string(&mut self, stops: StopSet) -> Result<String, Diagnostic> {
        Ok(self.expect(K::String, &stops.requiring_string())?.lexeme)
    }

    /// A STRING in the layout-tokenized body.
    fn body_string(&mut self) -> Result<String, Diagnostic> {
        self.expect_string(StopSet::EMPTY)
    }

    fn expect_eof(&mut self) -> Result<(), Diagnostic> {
        let tok = self.src.next(&StopSet::of(&[K::Eof]))?;
        if tok.kind == K::Eof {
            Ok(())
        } else {
            Err(Diagnostic::error(
                format!("unexpected trailing input: {}", tok.kind),
                tok.span,
                tok.kind,
            )
            .expecting(&[K::Eof]))
        }
    }

    fn is_body_string(&mut self, n: usize) -> bool {
        self.src.look(n) == Some(K::String)
    }

    /// Parses the given nonterminal and requires the input to end there.
    pub fn parse_from(&mut self, start: StartSymbol) -> Result<(), Diagnostic> {
        match start {
            StartSymbol::Document => {
                self.parse_document()?;
                return Ok(());
            }
            StartSymbol::Statement => {
                self.parse_statement()?;
            }
            StartSymbol::Title => {
                self.parse_title()?;
            }
            StartSymbol::Issuer => {
                self.parse_issuer()?;
            }
            StartSymbol::RefList => {
                self.parse_clause_list(K::Binaa)?;
            }
            StartSymbol::JustList => {
                self.parse_clause_list(K::Haysou)?;
            }
            StartSymbol::Acknowledge => self.parse_acknowledge(&[K::Yakour])?,
            StartSymbol::ArticleList => {
                self.src.begin_body();
                self.parse_articles(Tail::None)?;
            }
            StartSymbol::LocDate => {
                self.src.begin_body();
                self.parse_loc_date()?;
            }
            StartSymbol::SigList => {
                self.src.begin_body();
                self.parse_sig_list(None)?;
            }
        }
        self.expect_eof()
    }

    pub fn parse_document(&mut self) -> Result<Document, Diagnostic> {
        let statement = self.parse_statement()?;
        let title = self.parse_title()?;
        let issuer = self.parse_issuer()?;
        let references = self.parse_clause_list(K::Binaa)?;
        let justifications = self.parse_clause_list(K::Haysou)?;
        let ack_expected: &[TokenKind] = if justifications.is_empty() {
            &CLAUSE_STARTS
        } else {
            &[K::Haysou, K::Yakour]
        };
        self.parse_acknowledge(ack_expected)?;
        self.src.begin_body();
        let (articles, trailer) = self.parse_articles(Tail::Trailer)?;
        let trailer = trailer.expect("document tail always parses a trailer");
        self.expect_eof()?;
        Ok(Document {
            statement,
            title,
            issuer,
            references,
            justifications,
            articles,
            loc_date: trailer.loc_date,
            signatures: trailer.signatures,
        })
    }

    /// `statement → TYPE RAQM NUM`
    pub fn parse_statement(&mut self) -> Result<Statement, Diagnostic> {
        let ty = self.expect_keyword(K::Type)?;
        let doc_type = DocType::from_keyword(&ty.lexeme).unwrap_or(DocType::Decree);
        self.expect_keyword(K::Raqm)?;
        let number = self.expect_keyword(K::Num)?.lexeme;
        Ok(Statement { doc_type, number })
    }

    /// `title → STRING`, running up to the line that opens with `إن`.
    pub fn parse_title(&mut self) -> Result<String, Diagnostic> {
        self.expect_string(StopSet::of(&[K::Inna]).at_line_breaks())
    }

    /// `issuer → INNA STRING ◊`
    pub fn parse_issuer(&mut self) -> Result<String, Diagnostic> {
        self.expect_keyword(K::Inna)?;
        let stops = StopSet::of(&[K::Comma, K::Binaa, K::Haysou, K::Yakour]).at_line_breaks();
        let issuer = self.expect_string(stops)?;
        self.expect(K::Comma, &StopSet::of(&[K::Comma]))?;
        Ok(issuer)
    }

    /// `ref-list` for BINAA (at least one clause) or `just-list` for HAYSOU
    /// (possibly empty). Each clause is `kind STRING (◊ | .)`.
    pub fn parse_clause_list(&mut self, kind: TokenKind) -> Result<Vec<String>, Diagnostic> {
        debug_assert!(matches!(kind, K::Binaa | K::Haysou));
        let mut clauses = Vec::new();
        let lookahead = StopSet::of(&CLAUSE_STARTS);
        loop {
            if kind == K::Binaa && clauses.is_empty() {
                self.expect_keyword(K::Binaa)?;
            } else if self.src.peek(&lookahead)? == kind {
                self.src.next(&lookahead)?;
            } else {
                break;
            }
            let stops =
                StopSet::of(&[K::Comma, K::Dot, K::Binaa, K::Haysou, K::Yakour]).at_line_breaks();
            clauses.push(self.expect_string(stops)?);
            let tok = self.src.next(&StopSet::of(&[K::Comma, K::Dot]))?;
            if !matches!(tok.kind, K::Comma | K::Dot) {
                return Err(self.mismatch(&[K::Comma, K::Dot], &tok));
            }
        }
        Ok(clauses)
    }

    /// `acknowledge → YAKOUR :`
    fn parse_acknowledge(&mut self, expected: &[TokenKind]) -> Result<(), Diagnostic> {
        let tok = self.src.next(&StopSet::of(expected))?;
        if tok.kind != K::Yakour {
            return Err(self.mismatch(expected, &tok));
        }
        self.expect(K::Colon, &StopSet::of(&[K::Colon]))?;
        Ok(())
    }

    /// `MADA article-num :`
    fn parse_article_header(&mut self) -> Result<String, Diagnostic> {
        self.expect(K::Mada, &StopSet::EMPTY)?;
        let num = self.src.next(&StopSet::EMPTY)?;
        if !matches!(num.kind, K::Num | K::String) {
            return Err(self.mismatch(&[K::Num, K::String], &num));
        }
        self.expect(K::Colon, &StopSet::EMPTY)?;
        Ok(num.lexeme)
    }

    fn parse_articles(
        &mut self,
        tail: Tail,
    ) -> Result<(Vec<Article>, Option<Trailer>), Diagnostic> {
        let mut articles = Vec::new();
        loop {
            let number = self.parse_article_header()?;
            let mut strings = 0;
            while self.is_body_string(strings) {
                strings += 1;
            }
            if self.src.look(strings) == Some(K::Mada) {
                let (title, content) = self.parse_title_and_content(strings)?;
                articles.push(Article {
                    number,
                    title,
                    content,
                });
                continue;
            }
            return match tail {
                Tail::None => {
                    let (title, content) = self.parse_title_and_content(strings)?;
                    articles.push(Article {
                        number,
                        title,
                        content,
                    });
                    Ok((articles, None))
                }
                Tail::Trailer => {
                    let (article, trailer) = self.parse_last_article(number, strings)?;
                    articles.push(article);
                    Ok((articles, Some(trailer)))
                }
            };
        }
    }

    /// `article-title article-content` where the body holds `count` STRINGs.
    fn parse_title_and_content(
        &mut self,
        count: usize,
    ) -> Result<(Option<String>, String), Diagnostic> {
        match count {
            0 => {
                let tok = self.src.next(&StopSet::EMPTY)?;
                Err(
                    Diagnostic::error("missing article content", tok.span, tok.kind)
                        .expecting(&[K::String]),
                )
            }
            1 => Ok((None, self.body_string()?)),
            _ => {
                let title = self.body_string()?;
                let content = self.body_string()?;
                if count > 2 {
                    let tok = self.src.next(&StopSet::EMPTY)?;
                    return Err(self.mismatch(&[K::Mada, K::Eof], &tok));
                }
                Ok((Some(title), content))
            }
        }
    }

    /// The last article followed by `loc-date sig-list`.
    ///
    /// Token shape: `[S] S (S FI S | S S) [S] G` where the optional trailing S
    /// is the position of a leading type-2 signature and G starts at the
    /// first IMDAA. Whether that S is present is decided from G: a type-1
    /// signature is `IMDAA : S S` and cannot be followed directly by IMDAA.
    fn parse_last_article(
        &mut self,
        number: String,
        leading: usize,
    ) -> Result<(Article, Trailer), Diagnostic> {
        let mut end = leading;
        let fi = (self.src.look(end) == Some(K::Fi)).then_some(end);
        if fi.is_some() {
            end += 1;
            while self.is_body_string(end) {
                end += 1;
            }
        }
        let leading_position = self.src.look(end) == Some(K::Imdaa)
            && !(self.src.look(end + 3) == Some(K::String)
                && self.src.look(end + 4) != Some(K::Imdaa));
        let loc_start = match fi {
            Some(f) => f as isize - 1,
            None => end as isize - leading_position as isize - 2,
        };

        let (title, content) = match loc_start {
            n if n <= 0 => {
                let tok = self.src.next(&StopSet::EMPTY)?;
                return Err(
                    Diagnostic::error("missing article content", tok.span, tok.kind)
                        .expecting(&[K::String]),
                );
            }
            1 => (None, self.body_string()?),
            2 => {
                let title = self.body_string()?;
                (Some(title), self.body_string()?)
            }
            _ => {
                self.body_string()?;
                self.body_string()?;
                let tok = self.src.next(&StopSet::EMPTY)?;
                return Err(Diagnostic::error(
                    "too many text lines between the article header and the location/date line",
                    tok.span,
                    tok.kind,
                )
                .expecting(&[K::Fi, K::Imdaa, K::Eof]));
            }
        };
        let loc_date = self.parse_loc_date()?;
        let position = if leading_position {
            Some(self.body_string()?)
        } else {
            None
        };
        let signatures = self.parse_sig_list(position)?;
        Ok((
            Article {
                number,
                title,
                content,
            },
            Trailer {
                loc_date,
                signatures,
            },
        ))
    }

    /// `loc-date → STRING FI STRING | STRING STRING`
    fn parse_loc_date(&mut self) -> Result<LocDate, Diagnostic> {
        let location = self.body_string()?;
        let had_fi_keyword = self.src.look(0) == Some(K::Fi);
        if had_fi_keyword {
            self.src.next(&StopSet::EMPTY)?;
        }
        let date = self.body_string()?;
        Ok(LocDate {
            location,
            date,
            had_fi_keyword,
        })
    }

    /// `sig-list`: an optional type-1 signature, then type-2 signatures.
    /// `leading_position` is the already-consumed position of a first type-2
    /// signature.
    fn parse_sig_list(
        &mut self,
        leading_position: Option<String>,
    ) -> Result<Vec<Signature>, Diagnostic> {
        let mut signatures = Vec::new();
        if let Some(position) = leading_position {
            let name = self.parse_imdaa_name()?;
            signatures.push(Signature {
                variant: SignatureVariant::Type2,
                name,
                position,
            });
        } else if self.src.look(0) == Some(K::Imdaa) {
            let name = self.parse_imdaa_name()?;
            let position = self.body_string()?;
            signatures.push(Signature {
                variant: SignatureVariant::Type1,
                name,
                position,
            });
        }
        while self.is_body_string(0) {
            let position = self.body_string()?;
            let name = self.parse_imdaa_name()?;
            signatures.push(Signature {
                variant: SignatureVariant::Type2,
                name,
                position,
            });
        }
        Ok(signatures)
    }

    /// `IMDAA : STRING`
    fn parse_imdaa_name(&mut self) -> Result<String, Diagnostic> {
        self.expect(K::Imdaa, &StopSet::EMPTY)?;
        self.expect(K::Colon, &StopSet::EMPTY)?;
        self.body_string()
    }
}
