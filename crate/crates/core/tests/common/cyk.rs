//! Grammar membership by CYK, independent of the recursive-descent parser.
//!
//! The grammar is read from a plain-text table, converted to Chomsky normal
//! form (keeping unit rules, which the table applies as a closure) and
//! extended with a prefix grammar: for every nonterminal `A` a primed `A'`
//! derives the nonempty prefixes of `L(A)`. One CYK table then answers both
//! "is this a sentence" and "can this be extended to a sentence".

use std::collections::{BTreeSet, HashMap};

use legalc_core::scanner::TokenKind;

/// Uppercase symbols are terminals, `λ` is the empty alternative.
pub const GRAMMAR: &str = "
document        -> statement title issuer ref-list just-list acknowledge article-list loc-date sig-list
statement       -> TYPE RAQM NUM
title           -> STRING
issuer          -> INNA STRING COMMA
ref-list        -> ref ref-list | ref
ref             -> BINAA STRING COMMA | BINAA STRING DOT
just-list       -> just just-list | λ
just            -> HAYSOU STRING COMMA | HAYSOU STRING DOT
acknowledge     -> YAKOUR COLON
article-list    -> article article-list | article
article         -> MADA article-num COLON article-title article-content
article-num     -> NUM | STRING
article-title   -> STRING | λ
article-content -> STRING
loc-date        -> STRING FI STRING | STRING STRING
sig-list        -> sig-type1 sig-type2-list | sig-type1 | sig-type2-list
sig-type1       -> IMDAA COLON STRING STRING | λ
sig-type2-list  -> sig-type2 sig-type2-list | sig-type2
sig-type2       -> STRING IMDAA COLON STRING
";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Sym {
    T(TokenKind),
    N(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    LengthBound { len: usize, bound: usize },
    UnknownStart(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub accepts: bool,
    /// Some extension (possibly empty) of the input is accepted.
    pub viable_prefix: bool,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }
}

pub struct Oracle {
    names: HashMap<String, usize>,
    /// The table's rules before normal-form conversion, for sampling.
    source_rules: Vec<(usize, Vec<Sym>)>,
    /// Nonterminals of the CNF grammar; `i + n` is the primed copy of `i`.
    n: usize,
    nullable: Vec<bool>,
    terminal_rules: Vec<(usize, TokenKind)>,
    binary_rules: Vec<(usize, usize, usize)>,
    /// `closure[b]`: every `a` with `a ⇒* b` through unit rules, `b` included.
    closure: Vec<Bits>,
    bound: usize,
}

fn parse_table(table: &str) -> (Vec<String>, Vec<(usize, Vec<Sym>)>) {
    let mut names: Vec<String> = Vec::new();
    let index = |name: &str, names: &mut Vec<String>| {
        names.iter().position(|n| n == name).unwrap_or_else(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };
    let mut rules = Vec::new();
    for line in table.lines().filter(|l| !l.trim().is_empty()) {
        let (lhs, rhs) = line.split_once("->").expect("rule needs ->");
        let lhs = index(lhs.trim(), &mut names);
        for alt in rhs.split('|') {
            let mut body = Vec::new();
            for s in alt.split_whitespace() {
                if s == "λ" {
                    continue;
                }
                body.push(if s.chars().next().unwrap().is_ascii_uppercase() {
                    Sym::T(
                        TokenKind::from_name(s).unwrap_or_else(|| panic!("unknown terminal {s}")),
                    )
                } else {
                    Sym::N(index(s, &mut names))
                });
            }
            rules.push((lhs, body));
        }
    }
    (names, rules)
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle::from_table(GRAMMAR)
    }

    pub fn from_table(table: &str) -> Oracle {
        let (names, rules) = parse_table(table);

        // Nullable nonterminals.
        let mut nullable = vec![false; names.len()];
        loop {
            let mut changed = false;
            for (a, body) in &rules {
                if !nullable[*a] && body.iter().all(|s| matches!(s, Sym::N(b) if nullable[*b])) {
                    nullable[*a] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        // DEL: every variant with nullable symbols dropped, minus empty bodies.
        let mut no_eps: BTreeSet<(usize, Vec<Sym>)> = BTreeSet::new();
        let source_rules = rules.clone();
        for (a, body) in &rules {
            let optional: Vec<usize> = (0..body.len())
                .filter(|&i| matches!(body[i], Sym::N(b) if nullable[b]))
                .collect();
            for mask in 0..(1u32 << optional.len()) {
                let v: Vec<Sym> = body
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| {
                        optional
                            .iter()
                            .position(|o| o == i)
                            .is_none_or(|k| mask >> k & 1 == 0)
                    })
                    .map(|(_, s)| *s)
                    .collect();
                if !v.is_empty() {
                    no_eps.insert((*a, v));
                }
            }
        }

        // TERM and BIN over the epsilon-free rules.
        let mut count = names.len();
        let mut term_nt: HashMap<TokenKind, usize> = HashMap::new();
        let mut terminal_rules = Vec::new();
        let mut binary_rules = Vec::new();
        let mut unit_rules = Vec::new();
        for (a, body) in no_eps {
            match body.as_slice() {
                [Sym::T(t)] => terminal_rules.push((a, *t)),
                [Sym::N(b)] => unit_rules.push((a, *b)),
                _ => {
                    let ids: Vec<usize> = body
                        .iter()
                        .map(|s| match s {
                            Sym::N(b) => *b,
                            Sym::T(t) => *term_nt.entry(*t).or_insert_with(|| {
                                count += 1;
                                terminal_rules.push((count - 1, *t));
                                count - 1
                            }),
                        })
                        .collect();
                    let mut lhs = a;
                    for &id in &ids[..ids.len() - 2] {
                        count += 1;
                        binary_rules.push((lhs, id, count - 1));
                        lhs = count - 1;
                    }
                    binary_rules.push((lhs, ids[ids.len() - 2], ids[ids.len() - 1]));
                }
            }
        }

        // Prefix copies: A'→t for A→t, A'→B' and A'→B C' for A→B C,
        // A'→B' for A→B.
        let n = count;
        let p = |x: usize| x + n;
        for &(a, b) in &unit_rules.clone() {
            unit_rules.push((p(a), p(b)));
        }
        for &(a, t) in &terminal_rules.clone() {
            terminal_rules.push((p(a), t));
        }
        for &(a, b, c) in &binary_rules.clone() {
            unit_rules.push((p(a), p(b)));
            binary_rules.push((p(a), b, p(c)));
        }

        let total = 2 * n;
        let mut closure: Vec<Bits> = (0..total)
            .map(|b| {
                let mut s = Bits::new(total);
                s.set(b);
                s
            })
            .collect();
        loop {
            let mut changed = false;
            for &(a, b) in &unit_rules {
                // a ⇒ b, so everything reaching a reaches b.
                for x in 0..total {
                    if closure[a].get(x) && !closure[b].get(x) {
                        closure[b].set(x);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let mut nullable_all = nullable;
        nullable_all.resize(n, false);
        Oracle {
            source_rules,
            names: names.into_iter().enumerate().map(|(i, s)| (s, i)).collect(),
            n,
            nullable: nullable_all,
            terminal_rules,
            binary_rules,
            closure,
            bound: 16,
        }
    }

    pub fn with_bound(mut self, bound: usize) -> Oracle {
        self.bound = bound;
        self
    }

    pub fn check(&self, start: &str, input: &[TokenKind]) -> Result<Verdict, OracleError> {
        let s = *self
            .names
            .get(start)
            .ok_or_else(|| OracleError::UnknownStart(start.to_string()))?;
        let len = input.len();
        if len > self.bound {
            return Err(OracleError::LengthBound {
                len,
                bound: self.bound,
            });
        }
        if len == 0 {
            return Ok(Verdict {
                accepts: self.nullable[s],
                viable_prefix: true,
            });
        }
        let total = 2 * self.n;
        // table[i][l - 1]: nonterminals deriving input[i..i + l]
        let mut table = vec![vec![Bits::new(total); len]; len];
        for (i, &t) in input.iter().enumerate() {
            let mut cell = Bits::new(total);
            for &(a, k) in &self.terminal_rules {
                if k == t {
                    cell.set(a);
                }
            }
            table[i][0] = self.close(&cell);
        }
        for l in 2..=len {
            for i in 0..=len - l {
                let mut cell = Bits::new(total);
                for split in 1..l {
                    let left = &table[i][split - 1];
                    let right = &table[i + split][l - split - 1];
                    for &(a, b, c) in &self.binary_rules {
                        if left.get(b) && right.get(c) {
                            cell.set(a);
                        }
                    }
                }
                table[i][l - 1] = self.close(&cell);
            }
        }
        let top = &table[0][len - 1];
        Ok(Verdict {
            accepts: top.get(s),
            viable_prefix: top.get(s + self.n),
        })
    }

    /// A random sentence of `start` with at most `max_len` tokens, or `None`
    /// if a few attempts all came out longer.
    pub fn sample<R: rand::RngExt>(
        &self,
        start: &str,
        rng: &mut R,
        max_len: usize,
    ) -> Option<Vec<TokenKind>> {
        let s = self.names[start];
        (0..20).find_map(|_| {
            let mut out = Vec::new();
            self.expand(s, rng, max_len, &mut out).then_some(out)
        })
    }

    fn expand<R: rand::RngExt>(
        &self,
        a: usize,
        rng: &mut R,
        max_len: usize,
        out: &mut Vec<TokenKind>,
    ) -> bool {
        let alts: Vec<&Vec<Sym>> = self
            .source_rules
            .iter()
            .filter(|(l, _)| *l == a)
            .map(|(_, b)| b)
            .collect();
        let body = alts[rng.random_range(0..alts.len())];
        for sym in body {
            let ok = match *sym {
                Sym::T(t) => {
                    out.push(t);
                    true
                }
                Sym::N(b) => self.expand(b, rng, max_len, out),
            };
            if !ok || out.len() > max_len {
                return false;
            }
        }
        true
    }

    fn close(&self, cell: &Bits) -> Bits {
        let mut out = cell.clone();
        for b in 0..2 * self.n {
            if cell.get(b) {
                out.or(&self.closure[b]);
            }
        }
        out
    }
}

/// Grammar membership of `input` from the nonterminal `start`.
pub fn oracle_accepts(start: &str, input: &[TokenKind]) -> Result<bool, OracleError> {
    use std::sync::OnceLock;
    static ORACLE: OnceLock<Oracle> = OnceLock::new();
    ORACLE
        .get_or_init(Oracle::new)
        .check(start, input)
        .map(|v| v.accepts)
}
