//! Helpers shared by the integration tests.
#![allow(dead_code)]

pub mod cyk;
pub mod gen;

use std::path::PathBuf;

use legalc_core::scanner::TokenKind;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

pub fn corpus_file(name: &str) -> Vec<u8> {
    std::fs::read(corpus_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every accepted corpus document, as (file name, bytes), sorted by name.
pub fn corpus_documents() -> Vec<(String, Vec<u8>)> {
    let mut docs: Vec<(String, Vec<u8>)> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".txt") && !n.starts_with("rejected-"))
        .map(|n| {
            let bytes = corpus_file(&n);
            (n, bytes)
        })
        .collect();
    docs.sort();
    docs
}

/// Token kinds a sequence can contain; EOF only ends input.
pub fn alphabet() -> Vec<TokenKind> {
    TokenKind::ALL
        .into_iter()
        .filter(|k| *k != TokenKind::Eof)
        .collect()
}
