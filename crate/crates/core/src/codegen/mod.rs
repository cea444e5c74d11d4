//! XML generation over the document tree.
//!
//! Each grammar node contributes an opening tag, its content and a closing
//! tag. Those are modelled by [`ElementFrame`], nested into an [`XmlTree`]
//! that [`serialize`] writes out.

mod xml;

pub use xml::{escape_xml, is_xml_name, serialize, EmitConfig, EmitConfigError};

use crate::normalize::to_western_digits;
use crate::parser::{Document, SignatureVariant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Content {
    /// Raw text. Escaping happens at serialization.
    Text(String),
    Frame(ElementFrame),
}

/// One element: opening tag, ordered children, closing tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementFrame {
    pub name: String,
    pub content: Vec<Content>,
}

impl ElementFrame {
    pub fn new(name: impl Into<String>) -> ElementFrame {
        ElementFrame {
            name: name.into(),
            content: Vec::new(),
        }
    }

    pub fn text(name: impl Into<String>, text: impl Into<String>) -> ElementFrame {
        ElementFrame {
            name: name.into(),
            content: vec![Content::Text(text.into())],
        }
    }

    pub fn with(mut self, child: ElementFrame) -> ElementFrame {
        self.content.push(Content::Frame(child));
        self
    }

    pub fn push(&mut self, child: ElementFrame) {
        self.content.push(Content::Frame(child));
    }

    pub fn open_tag(&self) -> String {
        if self.content.is_empty() {
            format!("<{}/>", self.name)
        } else {
            format!("<{}>", self.name)
        }
    }

    /// Empty for a self-closing frame.
    pub fn close_tag(&self) -> String {
        if self.content.is_empty() {
            String::new()
        } else {
            format!("</{}>", self.name)
        }
    }

    pub fn frames(&self) -> impl Iterator<Item = &ElementFrame> {
        self.content.iter().filter_map(|c| match c {
            Content::Frame(f) => Some(f),
            Content::Text(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlTree {
    pub root: ElementFrame,
}

fn list(name: &str, item: &str, values: &[String]) -> ElementFrame {
    let mut frame = ElementFrame::new(name);
    for v in values {
        frame.push(ElementFrame::text(item, v.clone()));
    }
    frame
}

/// Builds the element tree for a document.
///
/// Statement and article numbers are converted to western digits. Every
/// other text keeps its original script. The acknowledgement phrase emits
/// nothing.
pub fn generate(doc: &Document) -> XmlTree {
    let mut root = ElementFrame::new("document")
        .with(ElementFrame::text("type", doc.statement.doc_type.as_str()))
        .with(ElementFrame::text(
            "contentNumber",
            to_western_digits(&doc.statement.number),
        ))
        .with(ElementFrame::text("title", doc.title.clone()))
        .with(ElementFrame::text("issuer", doc.issuer.clone()))
        .with(list("references", "reference", &doc.references))
        .with(list("justifications", "justification", &doc.justifications));

    let mut articles = ElementFrame::new("articles");
    for a in &doc.articles {
        let number = if a.has_numeric_number() {
            to_western_digits(&a.number)
        } else {
            a.number.clone()
        };
        let title = match &a.title {
            Some(t) => ElementFrame::text("articleTitle", t.clone()),
            None => ElementFrame::new("articleTitle"),
        };
        articles.push(
            ElementFrame::new("article")
                .with(ElementFrame::text("articleNumber", number))
                .with(title)
                .with(ElementFrame::text("articleContent", a.content.clone())),
        );
    }
    root.push(articles);
    root.push(ElementFrame::text(
        "issueLocation",
        doc.loc_date.location.clone(),
    ));
    root.push(ElementFrame::text("issueDate", doc.loc_date.date.clone()));

    let mut signatures = ElementFrame::new("signatures");
    for s in &doc.signatures {
        let name = ElementFrame::text("name", s.name.clone());
        let position = ElementFrame::text("position", s.position.clone());
        let sig = match s.variant {
            SignatureVariant::Type1 => ElementFrame::new("signature").with(name).with(position),
            SignatureVariant::Type2 => ElementFrame::new("signature").with(position).with(name),
        };
        signatures.push(sig);
    }
    root.push(signatures);
    XmlTree { root }
}
