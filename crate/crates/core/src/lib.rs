//! Compiler from Arabic legal texts (laws, decrees, decisions) to XML.
//!
//! The pipeline is [`normalize::preprocess`], the expectation-driven
//! [`scanner`], the recursive-descent [`parser`] and [`codegen`]:
//!
//! ```
//! let src = "مرسوم رقم ٢٥\nعنوان\nإن رئيس الجمهورية،\nبناء على الدستور،\nيرسم ما يأتي:\n\
//!            مادة ١:\nنص المادة\nبيروت في ١ آذار ٢٠١٨\nالإمضاء: فلان\nرئيس الجمهورية";
//! let xml = legalc_core::compile(src.as_bytes(), "d.txt", &Default::default()).unwrap();
//! assert!(String::from_utf8(xml).unwrap().contains("<contentNumber>25</contentNumber>"));
//! ```

pub mod cli;
pub mod codegen;
pub mod diagnostic;
pub mod normalize;
pub mod parser;
pub mod scanner;

use thiserror::Error;

use codegen::EmitConfig;
use diagnostic::{render_diagnostic, Diagnostic};
use normalize::{preprocess, DecodeError, NormalizedText};
use parser::Document;

/// A document the grammar rejected, with the text the diagnostics point into.
#[derive(Debug, Clone)]
pub struct Rejection {
    pub text: NormalizedText,
    pub diagnostics: Vec<Diagnostic>,
}

impl Rejection {
    /// All diagnostics rendered with source excerpts.
    pub fn render(&self) -> String {
        self.diagnostics
            .iter()
            .map(|d| render_diagnostic(d, &self.text))
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum CompileError {
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("document rejected with {} diagnostic(s)", .0.diagnostics.len())]
    Rejected(Rejection),
}

/// Preprocesses and parses `raw`.
pub fn validate(raw: &[u8], source_name: &str) -> Result<Document, CompileError> {
    let text = preprocess(raw, source_name)?;
    parser::parse_document(&text)
        .map_err(|diagnostics| CompileError::Rejected(Rejection { text, diagnostics }))
}

/// Runs the whole pipeline and returns the serialized XML.
pub fn compile(raw: &[u8], source_name: &str, cfg: &EmitConfig) -> Result<Vec<u8>, CompileError> {
    let doc = validate(raw, source_name)?;
    Ok(codegen::serialize(&codegen::generate(&doc), cfg))
}
