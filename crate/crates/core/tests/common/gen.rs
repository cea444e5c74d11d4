//! Random well-formed documents paired with the tree they must parse to.

use legalc_core::parser::{
    Article, DocType, Document, LocDate, Signature, SignatureVariant, Statement,
};
use rand::seq::IndexedRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Words that are never keywords, carry no digits and no trailing delimiter.
pub const WORDS: &[&str] = &[
    "مجلس",
    "النواب",
    "الوزراء",
    "رئيس",
    "الجمهورية",
    "الدستور",
    "اقتراح",
    "عقد",
    "استثنائي",
    "برنامج",
    "أعمال",
    "المالية",
    "وزير",
    "الصحة",
    "العامة",
    "تنظيم",
    "المهنة",
    "الجريدة",
    "الرسمية",
    "ينشر",
    "هذا",
    "القرار",
    "يعمل",
    "به",
    "فور",
    "نشره",
    "بيروت",
    "طرابلس",
    "صيدا",
    "سعد",
    "ميشال",
    "عون",
    "نبيه",
    "بري",
    "مؤسسة",
    "كهرباء",
    "لبنان",
    "الطاقة",
    "والمياه",
    "الاستثنائي",
    "الصادر",
    "الموازنة",
    "العامة",
    "ذلك",
    "على",
    "إلى",
    "من",
    "عن",
    "و",
    "-",
    "a&b",
    "<x>",
    "\"قول\"",
    "'ص'",
    "Law",
    "x>y",
    "&amp;",
];

const MONTHS: &[&str] = &["كانون", "شباط", "آذار", "نيسان", "أيار", "حزيران", "تموز"];
const TYPES: &[(&str, DocType)] = &[
    ("قانون", DocType::Law),
    ("قرار", DocType::Decision),
    ("مرسوم", DocType::Decree),
];
const BINAA: &[&str] = &[
    "بناء على",
    "وبناء على",
    "وبعد الاطلاع",
    "وبعد موافقة",
    "ونظرا",
];
const HAYSOU: &[&str] = &["وحيث أن", "وبما أن", "وبعد أن", "نظرا"];
const YAKOUR: &[&str] = &["يرسم ما يأتي", "يرسم ما يلي", "يقرر ما يأتي", "يقرر ما يلي"];
const MADA: &[&str] = &["مادة", "المادة"];
const IMDAA: &[&str] = &["الإمضاء", "إمضاء", "الامضاء"];
const ORDINALS: &[&str] = &["الأولى", "الثانية", "الثالثة", "الأخيرة"];

pub struct Generated {
    pub text: String,
    pub document: Document,
}

struct G {
    rng: ChaCha8Rng,
}

impl G {
    fn phrase(&mut self, max: usize) -> String {
        let n = self.rng.random_range(1..=max);
        (0..n)
            .map(|_| *WORDS.choose(&mut self.rng).unwrap())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Text over one or more lines; returns (source lines, joined value).
    fn lines(&mut self, max_lines: usize) -> (Vec<String>, String) {
        let n = self.rng.random_range(1..=max_lines);
        let lines: Vec<String> = (0..n).map(|_| self.phrase(5)).collect();
        let joined = lines.join(" ");
        (lines, joined)
    }

    fn digits(&mut self, arabic: bool, max: u32) -> String {
        let n = self.rng.random_range(1..=max);
        let s = n.to_string();
        if arabic {
            s.chars()
                .map(|c| char::from_u32(c as u32 - '0' as u32 + 0x0660).unwrap())
                .collect()
        } else {
            s
        }
    }

    fn pick<'a>(&mut self, xs: &[&'a str]) -> &'a str {
        xs.choose(&mut self.rng).unwrap()
    }

    fn terminator(&mut self) -> &'static str {
        if self.rng.random_bool(0.7) {
            "،"
        } else {
            "."
        }
    }
}

pub fn document(seed: u64) -> Generated {
    let mut g = G {
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    let mut out: Vec<String> = Vec::new();

    let (ty, doc_type) = *TYPES.choose(&mut g.rng).unwrap();
    let arabic = g.rng.random_bool(0.8);
    let number = g.digits(arabic, 2000);
    out.push(format!("{ty} رقم {number}"));

    let (title_lines, title) = g.lines(2);
    out.extend(title_lines);

    let issuer = g.phrase(4);
    out.push(format!("إن {issuer}،"));

    let mut references = Vec::new();
    for _ in 0..g.rng.random_range(1..=3) {
        let r = g.phrase(6);
        let kw = g.pick(BINAA);
        let t = g.terminator();
        out.push(format!("{kw} {r}{t}"));
        references.push(r);
    }
    let mut justifications = Vec::new();
    for _ in 0..g.rng.random_range(0..=2) {
        let j = g.phrase(6);
        let kw = g.pick(HAYSOU);
        let t = g.terminator();
        out.push(format!("{kw} {j}{t}"));
        justifications.push(j);
    }
    let yakour = g.pick(YAKOUR);
    out.push(format!("{yakour}:"));

    let mut articles = Vec::new();
    for i in 0..g.rng.random_range(1..=3) {
        let number = match g.rng.random_range(0..3) {
            0 => g.pick(ORDINALS).to_string(),
            1 => (i + 1).to_string(),
            _ => g.digits(true, 40),
        };
        let title = g.rng.random_bool(0.5).then(|| g.phrase(3));
        let mada = g.pick(MADA);
        // "مادة ١: title", "مادة ١ : title" or "مادة ١:" alone
        let colon = if g.rng.random_bool(0.8) { ":" } else { " :" };
        match &title {
            Some(t) => out.push(format!("{mada} {number}{colon} {t}")),
            None => out.push(format!("{mada} {number}{colon}")),
        }
        let (content_lines, content) = g.lines(3);
        out.extend(content_lines);
        articles.push(Article {
            number,
            title,
            content,
        });
    }

    let location = g.phrase(2);
    let day = g.digits(true, 28);
    let month = g.pick(MONTHS);
    let year = g.digits(true, 2030);
    let date = format!("{day} {month} {year}");
    let had_fi_keyword = g.rng.random_bool(0.6);
    if had_fi_keyword {
        out.push(format!("{location} في {date}"));
    } else {
        out.push(format!("{location} {date}"));
    }

    let mut signatures = Vec::new();
    let imdaa = |g: &mut G| g.pick(IMDAA);
    if g.rng.random_bool(0.6) {
        let name = g.phrase(3);
        let position = g.phrase(4);
        let kw = imdaa(&mut g);
        out.push(format!("{kw}: {name}"));
        out.push(position.clone());
        signatures.push(Signature {
            variant: SignatureVariant::Type1,
            name,
            position,
        });
    }
    for _ in 0..g.rng.random_range(0..=2) {
        let name = g.phrase(3);
        let position = g.phrase(4);
        let kw = imdaa(&mut g);
        out.push(position.clone());
        out.push(format!("{kw}: {name}"));
        signatures.push(Signature {
            variant: SignatureVariant::Type2,
            name,
            position,
        });
    }

    Generated {
        text: out.join("\n") + "\n",
        document: Document {
            statement: Statement { doc_type, number },
            title,
            issuer,
            references,
            justifications,
            articles,
            loc_date: LocDate {
                location,
                date,
                had_fi_keyword,
            },
            signatures,
        },
    }
}
