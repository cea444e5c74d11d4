use std::fmt::Write as _;

use super::ast::Document;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Indented one-node-per-line rendering of a parsed document.
pub fn dump_document(doc: &Document) -> String {
    let mut o = String::new();
    let _ = writeln!(o, "document");
    let _ = writeln!(
        o,
        "  statement type={} number={}",
        doc.statement.doc_type, doc.statement.number
    );
    let _ = writeln!(o, "  title {}", quote(&doc.title));
    let _ = writeln!(o, "  issuer {}", quote(&doc.issuer));
    let _ = writeln!(o, "  references ({})", doc.references.len());
    for r in &doc.references {
        let _ = writeln!(o, "    reference {}", quote(r));
    }
    let _ = writeln!(o, "  justifications ({})", doc.justifications.len());
    for j in &doc.justifications {
        let _ = writeln!(o, "    justification {}", quote(j));
    }
    let _ = writeln!(o, "  articles ({})", doc.articles.len());
    for a in &doc.articles {
        let _ = writeln!(o, "    article number={}", a.number);
        match &a.title {
            Some(t) => {
                let _ = writeln!(o, "      title {}", quote(t));
            }
            None => {
                let _ = writeln!(o, "      title -");
            }
        }
        let _ = writeln!(o, "      content {}", quote(&a.content));
    }
    let _ = writeln!(o, "  loc-date fi={}", doc.loc_date.had_fi_keyword);
    let _ = writeln!(o, "    location {}", quote(&doc.loc_date.location));
    let _ = writeln!(o, "    date {}", quote(&doc.loc_date.date));
    let _ = writeln!(o, "  signatures ({})", doc.signatures.len());
    for s in &doc.signatures {
        let _ = writeln!(o, "    signature {}", s.variant.label());
        let _ = writeln!(o, "      name {}", quote(&s.name));
        let _ = writeln!(o, "      position {}", quote(&s.position));
    }
    o
}
