use thiserror::Error;

use super::{Content, ElementFrame, XmlTree};

pub const XML_DECLARATION: &str = r#"<?xml version="1.0" encoding="UTF-8"?>"#;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmitConfig {
    root_tag: String,
    indent: usize,
    xml_declaration: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmitConfigError {
    #[error("invalid root tag {0:?}: not an XML name")]
    InvalidRootTag(String),
}

impl Default for EmitConfig {
    fn default() -> EmitConfig {
        EmitConfig {
            root_tag: "document".into(),
            indent: 2,
            xml_declaration: true,
        }
    }
}

impl EmitConfig {
    pub fn new(
        root_tag: &str,
        indent: usize,
        xml_declaration: bool,
    ) -> Result<EmitConfig, EmitConfigError> {
        if !is_xml_name(root_tag) {
            return Err(EmitConfigError::InvalidRootTag(root_tag.to_string()));
        }
        Ok(EmitConfig {
            root_tag: root_tag.to_string(),
            indent,
            xml_declaration,
        })
    }

    pub fn root_tag(&self) -> &str {
        &self.root_tag
    }

    pub fn indent(&self) -> usize {
        self.indent
    }

    pub fn xml_declaration(&self) -> bool {
        self.xml_declaration
    }
}

fn is_name_start(c: char) -> bool {
    matches!(c,
        ':' | 'A'..='Z' | '_' | 'a'..='z'
        | '\u{C0}'..='\u{D6}' | '\u{D8}'..='\u{F6}' | '\u{F8}'..='\u{2FF}'
        | '\u{370}'..='\u{37D}' | '\u{37F}'..='\u{1FFF}' | '\u{200C}'..='\u{200D}'
        | '\u{2070}'..='\u{218F}' | '\u{2C00}'..='\u{2FEF}' | '\u{3001}'..='\u{D7FF}'
        | '\u{F900}'..='\u{FDCF}' | '\u{FDF0}'..='\u{FFFD}' | '\u{10000}'..='\u{EFFFF}')
}

fn is_name_char(c: char) -> bool {
    is_name_start(c)
        || matches!(c, '-' | '.' | '0'..='9' | '\u{B7}' | '\u{300}'..='\u{36F}' | '\u{203F}'..='\u{2040}')
}

/// True if `s` matches the XML 1.0 `Name` production.
pub fn is_xml_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_name_start) && chars.all(is_name_char)
}

/// Escapes the five markup characters, `&` first, and carriage returns,
/// which a parser would otherwise normalize away.
pub fn escape_xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
        .replace('\r', "&#13;")
}

fn write_frame(out: &mut String, frame: &ElementFrame, depth: usize, indent: usize) {
    let pad = " ".repeat(depth * indent);
    out.push_str(&pad);
    out.push_str(&frame.open_tag());
    if frame.content.is_empty() {
        out.push('\n');
        return;
    }
    let inline = frame.content.iter().all(|c| matches!(c, Content::Text(_)));
    if inline {
        for c in &frame.content {
            if let Content::Text(t) = c {
                out.push_str(&escape_xml(t));
            }
        }
    } else {
        out.push('\n');
        for c in &frame.content {
            match c {
                Content::Frame(f) => write_frame(out, f, depth + 1, indent),
                Content::Text(t) => {
                    out.push_str(&" ".repeat((depth + 1) * indent));
                    out.push_str(&escape_xml(t));
                    out.push('\n');
                }
            }
        }
        out.push_str(&pad);
    }
    out.push_str(&frame.close_tag());
    out.push('\n');
}

/// Writes the tree as UTF-8 XML, one element per line, with a trailing
/// newline. The root element is named after `cfg.root_tag()`.
pub fn serialize(tree: &XmlTree, cfg: &EmitConfig) -> Vec<u8> {
    let mut out = String::new();
    if cfg.xml_declaration {
        out.push_str(XML_DECLARATION);
        out.push('\n');
    }
    let root = ElementFrame {
        name: cfg.root_tag.clone(),
        content: tree.root.content.clone(),
    };
    write_frame(&mut out, &root, 0, cfg.indent);
    out.into_bytes()
}
