use std::fmt;

/// A parsed legal document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub statement: Statement,
    pub title: String,
    pub issuer: String,
    /// Never empty.
    pub references: Vec<String>,
    pub justifications: Vec<String>,
    /// Never empty.
    pub articles: Vec<Article>,
    pub loc_date: LocDate,
    pub signatures: Vec<Signature>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DocType {
    /// قانون
    Law,
    /// قرار
    Decision,
    /// مرسوم
    Decree,
}

impl DocType {
    pub fn as_str(self) -> &'static str {
        match self {
            DocType::Law => "قانون",
            DocType::Decision => "قرار",
            DocType::Decree => "مرسوم",
        }
    }

    /// Classifies a TYPE keyword by its folded spelling.
    pub fn from_keyword(word: &str) -> Option<DocType> {
        let folded = crate::normalize::fold_for_matching(word).folded;
        [DocType::Law, DocType::Decision, DocType::Decree]
            .into_iter()
            .find(|t| crate::normalize::fold_for_matching(t.as_str()).folded == folded)
    }
}

impl fmt::Display for DocType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub doc_type: DocType,
    /// Digits in their original script.
    pub number: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Article {
    /// A digit string, or a word number such as `الأولى`.
    pub number: String,
    pub title: Option<String>,
    pub content: String,
}

impl Article {
    pub fn has_numeric_number(&self) -> bool {
        !self.number.is_empty() && self.number.chars().all(crate::normalize::is_digit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocDate {
    pub location: String,
    pub date: String,
    pub had_fi_keyword: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureVariant {
    /// `IMDAA : name` followed by the position.
    Type1,
    /// The position followed by `IMDAA : name`.
    Type2,
}

impl SignatureVariant {
    pub fn label(self) -> &'static str {
        match self {
            SignatureVariant::Type1 => "type1",
            SignatureVariant::Type2 => "type2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub variant: SignatureVariant,
    pub name: String,
    pub position: String,
}
