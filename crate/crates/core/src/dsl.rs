//! A small text format for monoids and schemes.
//!
//! ```text
//! # comments run to the end of the line
//! set saturation_cap 4096
//! monoid M { table [[0,1],[1,1]] identity 0 names ["1", "a"] }
//! monoid P { gens a, b; rels a^2 = a, a*b = b; zero; cap 64 }
//! monoid B = split(free=1, cone=0, torsion=[2], zero=false)
//! scheme X = projective(2)
//! scheme Y { charts U0 = split(cone=1), U1 = split(cone=1); glue U0.p{} ~ U1.p{}; }
//! ```
//!
//! Builtin schemes: `affine(n)`, `projective(n)`, `torus(k)`, `mu(n)`,
//! `d(k)`, `point()`, `idempotent()` and `spec(M)` for a declared monoid.
//! Points are written `chart.p{...}` listing the elements of the prime:
//! element names, quoted names or indices for finite charts; cone
//! coordinates `x0, x1, ...` and `zero` for split charts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::error::{MonoidError, SchemeError};
use crate::monoid::{presentation_of, FiniteMonoid, Presentation, SplitMonoid, Word};
use crate::oracle::{DEFAULT_SEARCH_LIMIT, MAX_ORACLE_GENERATORS};
use crate::projective::DEFAULT_SIZE_CAP;
use crate::saturate::saturate;
use crate::scheme::{
    affine_space, d_scheme, glue_with, idempotent_point, mu, proj_space, spec_f1, torus, F1Scheme, PointRef,
    MAX_PROJECTIVE_DIM,
};
use crate::spectrum::{MonoidChart, PrimeIdeal, SpectrumLimits};

pub const DEFAULT_SATURATION_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{name}: {reason}")]
    Semantic { name: String, reason: String },
    #[error("{name}: {reason}")]
    ResourceCap { name: String, reason: String },
}

fn semantic(name: &str, reason: impl Into<String>) -> DslError {
    DslError::Semantic {
        name: name.to_string(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeFile {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Set { name: String, value: u64 },
    Monoid { name: String, body: MonoidBody },
    Scheme { name: String, body: SchemeBody },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidBody {
    Table {
        rows: Vec<Vec<u64>>,
        identity: u64,
        names: Option<Vec<String>>,
    },
    Presented {
        gens: Vec<String>,
        rels: Vec<(WordExpr, WordExpr)>,
        zero: bool,
        cap: Option<u64>,
    },
    Split(SplitExpr),
}

/// Product of powers; empty is the identity `1`.
pub type WordExpr = Vec<(String, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExpr {
    pub free: u64,
    pub cone: u64,
    pub torsion: Vec<u64>,
    pub zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemeBody {
    Builtin {
        name: String,
        args: Vec<Arg>,
    },
    Charts {
        charts: Vec<(String, ChartExpr)>,
        glue: Vec<(PointExpr, PointExpr)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Int(u64),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChartExpr {
    Monoid(String),
    Split(SplitExpr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointExpr {
    pub chart: String,
    pub items: Vec<PointItem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointItem {
    Index(u64),
    Name(String),
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let err = |line, col, message: String| DslError::Syntax { line, col, message };
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            let n = s
                .parse()
                .map_err(|_| err(tl, tc, format!("integer {s} is too large")))?;
            out.push(Token {
                tok: Tok::Int(n),
                line: tl,
                col: tc,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: tl,
                col: tc,
            });
        } else if c == '"' {
            bump(&mut chars);
            let mut s = String::new();
            loop {
                match bump(&mut chars) {
                    None | Some('\n') => return Err(err(tl, tc, "unterminated string".into())),
                    Some('"') => break,
                    Some('\\') => match bump(&mut chars) {
                        Some(e @ ('"' | '\\')) => s.push(e),
                        Some('n') => s.push('\n'),
                        _ => return Err(err(tl, tc, "bad escape in string".into())),
                    },
                    Some(ch) => s.push(ch),
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                line: tl,
                col: tc,
            });
        } else if "{}[](),;=~.^*".contains(c) {
            bump(&mut chars);
            out.push(Token {
                tok: Tok::Sym(c),
                line: tl,
                col: tc,
            });
        } else {
            return Err(err(tl, tc, format!("unexpected character {c:?}")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, DslError> {
        let t = &self.toks[self.pos];
        Err(DslError::Syntax {
            line: t.line,
            col: t.col,
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, DslError> {
        self.error(format!("expected {wanted}, found {}", self.peek()))
    }

    fn at_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.at_sym(c);
        if hit {
            self.next();
        }
        hit
    }

    fn eat_kw(&mut self, kw: &str) -> bool {
        let hit = self.at_kw(kw);
        if hit {
            self.next();
        }
        hit
    }

    fn expect_sym(&mut self, c: char) -> Result<(), DslError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.unexpected(&format!("`{c}`"))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> Result<(), DslError> {
        if self.eat_kw(kw) {
            Ok(())
        } else {
            self.unexpected(&format!("`{kw}`"))
        }
    }

    fn ident(&mut self) -> Result<String, DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.unexpected("a name"),
        }
    }

    fn int(&mut self) -> Result<u64, DslError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn file(&mut self) -> Result<SchemeFile, DslError> {
        let mut items = Vec::new();
        while *self.peek() != Tok::Eof {
            items.push(self.item()?);
        }
        Ok(SchemeFile { items })
    }

    fn item(&mut self) -> Result<Item, DslError> {
        if self.eat_kw("set") {
            let name = self.ident()?;
            let value = self.int()?;
            self.eat_sym(';');
            Ok(Item::Set { name, value })
        } else if self.eat_kw("monoid") {
            let name = self.ident()?;
            let body = if self.eat_sym('=') {
                MonoidBody::Split(self.split_expr()?)
            } else {
                self.expect_sym('{')?;
                let body = self.monoid_body()?;
                self.expect_sym('}')?;
                body
            };
            Ok(Item::Monoid { name, body })
        } else if self.eat_kw("scheme") {
            let name = self.ident()?;
            let body = if self.eat_sym('=') {
                let builtin = self.ident()?;
                self.expect_sym('(')?;
                let mut args = Vec::new();
                while !self.at_sym(')') {
                    args.push(match self.peek().clone() {
                        Tok::Int(n) => {
                            self.next();
                            Arg::Int(n)
                        }
                        Tok::Ident(s) => {
                            self.next();
                            Arg::Name(s)
                        }
                        _ => return self.unexpected("an argument"),
                    });
                    if !self.eat_sym(',') {
                        break;
                    }
                }
                self.expect_sym(')')?;
                SchemeBody::Builtin { name: builtin, args }
            } else {
                self.expect_sym('{')?;
                let body = self.scheme_body()?;
                self.expect_sym('}')?;
                body
            };
            Ok(Item::Scheme { name, body })
        } else {
            self.unexpected("`monoid`, `scheme` or `set`")
        }
    }

    fn monoid_body(&mut self) -> Result<MonoidBody, DslError> {
        if self.eat_kw("table") {
            let rows = self.int_matrix()?;
            self.expect_kw("identity")?;
            let identity = self.int()?;
            let names = if self.eat_kw("names") {
                self.expect_sym('[')?;
                let mut names = Vec::new();
                while !self.at_sym(']') {
                    names.push(match self.next() {
                        Tok::Str(s) | Tok::Ident(s) => s,
                        Tok::Int(n) => n.to_string(),
                        _ => {
                            self.pos -= 1;
                            return self.unexpected("an element name");
                        }
                    });
                    if !self.eat_sym(',') {
                        break;
                    }
                }
                self.expect_sym(']')?;
                Some(names)
            } else {
                None
            };
            self.eat_sym(';');
            return Ok(MonoidBody::Table { rows, identity, names });
        }
        if !self.eat_kw("gens") {
            return self.unexpected("`table` or `gens`");
        }
        let mut gens = Vec::new();
        if matches!(self.peek(), Tok::Ident(s) if !is_body_keyword(s)) {
            gens.push(self.ident()?);
            while self.eat_sym(',') {
                gens.push(self.ident()?);
            }
        }
        self.eat_sym(';');
        let mut rels = Vec::new();
        if self.eat_kw("rels") {
            loop {
                let l = self.word()?;
                self.expect_sym('=')?;
                let r = self.word()?;
                rels.push((l, r));
                if !self.eat_sym(',') {
                    break;
                }
            }
            self.eat_sym(';');
        }
        let zero = self.eat_kw("zero");
        if zero {
            self.eat_sym(';');
        }
        let cap = if self.eat_kw("cap") {
            let c = self.int()?;
            self.eat_sym(';');
            Some(c)
        } else {
            None
        };
        Ok(MonoidBody::Presented { gens, rels, zero, cap })
    }

    fn int_matrix(&mut self) -> Result<Vec<Vec<u64>>, DslError> {
        self.expect_sym('[')?;
        let mut rows = Vec::new();
        while self.at_sym('[') {
            self.next();
            let mut row = Vec::new();
            while !self.at_sym(']') {
                row.push(self.int()?);
                if !self.eat_sym(',') {
                    break;
                }
            }
            self.expect_sym(']')?;
            rows.push(row);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym(']')?;
        Ok(rows)
    }

    fn word(&mut self) -> Result<WordExpr, DslError> {
        if *self.peek() == Tok::Int(1) {
            self.next();
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        loop {
            let g = self.ident()?;
            let e = if self.eat_sym('^') {
                let e = self.int()?;
                match u32::try_from(e) {
                    Ok(e) if e > 0 => e,
                    _ => return self.error(format!("exponent {e} out of range")),
                }
            } else {
                1
            };
            w.push((g, e));
            if !self.eat_sym('*') {
                break;
            }
        }
        Ok(w)
    }

    fn split_expr(&mut self) -> Result<SplitExpr, DslError> {
        self.expect_kw("split")?;
        self.expect_sym('(')?;
        let mut s = SplitExpr {
            free: 0,
            cone: 0,
            torsion: Vec::new(),
            zero: false,
        };
        let mut seen = BTreeSet::new();
        while !self.at_sym(')') {
            let key = self.ident()?;
            if !seen.insert(key.clone()) {
                return self.error(format!("`{key}` given twice"));
            }
            self.expect_sym('=')?;
            match key.as_str() {
                "free" => s.free = self.int()?,
                "cone" => s.cone = self.int()?,
                "torsion" => {
                    self.expect_sym('[')?;
                    while !self.at_sym(']') {
                        s.torsion.push(self.int()?);
                        if !self.eat_sym(',') {
                            break;
                        }
                    }
                    self.expect_sym(']')?;
                }
                "zero" => {
                    s.zero = match self.ident()?.as_str() {
                        "true" => true,
                        "false" => false,
                        _ => {
                            self.pos -= 1;
                            return self.unexpected("`true` or `false`");
                        }
                    }
                }
                _ => {
                    self.pos -= 2;
                    return self.unexpected("`free`, `cone`, `torsion` or `zero`");
                }
            }
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym(')')?;
        Ok(s)
    }

    fn scheme_body(&mut self) -> Result<SchemeBody, DslError> {
        self.expect_kw("charts")?;
        let mut charts = Vec::new();
        loop {
            let name = self.ident()?;
            self.expect_sym('=')?;
            let expr = if self.at_kw("split") {
                ChartExpr::Split(self.split_expr()?)
            } else {
                ChartExpr::Monoid(self.ident()?)
            };
            charts.push((name, expr));
            if !self.eat_sym(',') {
                break;
            }
        }
        self.eat_sym(';');
        let mut glue = Vec::new();
        while self.eat_kw("glue") {
            let a = self.point()?;
            self.expect_sym('~')?;
            let b = self.point()?;
            glue.push((a, b));
            self.eat_sym(';');
        }
        Ok(SchemeBody::Charts { charts, glue })
    }

    fn point(&mut self) -> Result<PointExpr, DslError> {
        let chart = self.ident()?;
        self.expect_sym('.')?;
        self.expect_kw("p")?;
        self.expect_sym('{')?;
        let mut items = Vec::new();
        while !self.at_sym('}') {
            items.push(match self.next() {
                Tok::Int(n) => PointItem::Index(n),
                Tok::Ident(s) if s == "zero" => PointItem::Zero,
                Tok::Ident(s) | Tok::Str(s) => PointItem::Name(s),
                _ => {
                    self.pos -= 1;
                    return self.unexpected("a point element");
                }
            });
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym('}')?;
        Ok(PointExpr { chart, items })
    }
}

fn is_body_keyword(s: &str) -> bool {
    matches!(s, "rels" | "zero" | "cap")
}

pub fn parse(text: &str) -> Result<SchemeFile, DslError> {
    Parser {
        toks: lex(text)?,
        pos: 0,
    }
    .file()
}

fn is_ident(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

fn word_str(w: &WordExpr) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for SplitExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "split(free={}, cone={}, torsion=[{}], zero={})",
            self.free,
            self.cone,
            join(&self.torsion, u64::to_string),
            self.zero
        )
    }
}

impl fmt::Display for PointExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = join(&self.items, |i| match i {
            PointItem::Index(n) => n.to_string(),
            PointItem::Zero => "zero".into(),
            PointItem::Name(s) if is_ident(s) && s != "zero" => s.clone(),
            PointItem::Name(s) => quote(s),
        });
        write!(f, "{}.p{{{items}}}", self.chart)
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Set { name, value } => writeln!(f, "set {name} {value}"),
            Item::Monoid { name, body } => match body {
                MonoidBody::Split(s) => writeln!(f, "monoid {name} = {s}"),
                MonoidBody::Table { rows, identity, names } => {
                    let rows = join(rows, |r| format!("[{}]", join(r, u64::to_string)));
                    write!(f, "monoid {name} {{\n  table [{rows}] identity {identity}")?;
                    if let Some(names) = names {
                        write!(f, " names [{}]", join(names, |n| quote(n)))?;
                    }
                    writeln!(f, "\n}}")
                }
                MonoidBody::Presented { gens, rels, zero, cap } => {
                    writeln!(f, "monoid {name} {{")?;
                    if gens.is_empty() {
                        writeln!(f, "  gens")?;
                    } else {
                        writeln!(f, "  gens {}", gens.join(", "))?;
                    }
                    if !rels.is_empty() {
                        writeln!(
                            f,
                            "  rels {}",
                            join(rels, |(l, r)| format!("{} = {}", word_str(l), word_str(r)))
                        )?;
                    }
                    if *zero {
                        writeln!(f, "  zero")?;
                    }
                    if let Some(c) = cap {
                        writeln!(f, "  cap {c}")?;
                    }
                    writeln!(f, "}}")
                }
            },
            Item::Scheme { name, body } => match body {
                SchemeBody::Builtin { name: b, args } => {
                    let args = join(args, |a| match a {
                        Arg::Int(n) => n.to_string(),
                        Arg::Name(s) => s.clone(),
                    });
                    writeln!(f, "scheme {name} = {b}({args})")
                }
                SchemeBody::Charts { charts, glue } => {
                    writeln!(f, "scheme {name} {{")?;
                    let charts = join(charts, |(n, c)| match c {
                        ChartExpr::Monoid(m) => format!("{n} = {m}"),
                        ChartExpr::Split(s) => format!("{n} = {s}"),
                    });
                    writeln!(f, "  charts {charts}")?;
                    for (a, b) in glue {
                        writeln!(f, "  glue {a} ~ {b}")?;
                    }
                    writeln!(f, "}}")
                }
            },
        }
    }
}

impl fmt::Display for SchemeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub saturation_cap: usize,
    pub spectrum: SpectrumLimits,
    pub oracle_max_generators: usize,
    pub oracle_search_limit: u128,
    pub k0_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            saturation_cap: DEFAULT_SATURATION_CAP,
            spectrum: SpectrumLimits::default(),
            oracle_max_generators: MAX_ORACLE_GENERATORS,
            oracle_search_limit: DEFAULT_SEARCH_LIMIT,
            k0_cap: DEFAULT_SIZE_CAP,
        }
    }
}

pub const DIRECTIVES: &[&str] = &[
    "saturation_cap",
    "spectrum_max_elements",
    "spectrum_max_cone",
    "oracle_max_generators",
    "oracle_search_limit",
    "k0_cap",
];

impl Settings {
    fn apply(&mut self, name: &str, value: u64) -> Result<(), DslError> {
        let as_usize = || usize::try_from(value).map_err(|_| semantic(name, "value too large"));
        match name {
            "saturation_cap" => self.saturation_cap = as_usize()?,
            "spectrum_max_elements" => {
                if value > 32 {
                    return Err(semantic(name, "finite spectra support at most 32 elements"));
                }
                self.spectrum.max_finite_size = as_usize()?;
            }
            "spectrum_max_cone" => {
                if value > 31 {
                    return Err(semantic(name, "split spectra support at most 31 cone coordinates"));
                }
                self.spectrum.max_cone_rank = value as u32;
            }
            "oracle_max_generators" => self.oracle_max_generators = as_usize()?,
            "oracle_search_limit" => self.oracle_search_limit = u128::from(value),
            "k0_cap" => self.k0_cap = as_usize()?,
            _ => {
                return Err(semantic(
                    name,
                    format!("unknown directive; known: {}", DIRECTIVES.join(", ")),
                ))
            }
        }
        Ok(())
    }
}

/// A declared monoid as a chart, together with a presentation of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMonoid {
    pub name: String,
    pub chart: MonoidChart,
    pub presentation: Presentation,
}

/// A resolved file: every name bound, every gluing validated.
#[derive(Debug, Clone)]
pub struct Document {
    pub settings: Settings,
    pub monoids: Vec<NamedMonoid>,
    pub schemes: Vec<F1Scheme>,
}

impl Document {
    pub fn monoid(&self, name: &str) -> Option<&NamedMonoid> {
        self.monoids.iter().find(|m| m.name == name)
    }

    pub fn scheme(&self, name: &str) -> Option<&F1Scheme> {
        self.schemes.iter().find(|s| s.name == name)
    }

    /// The monoid as a finite Cayley table, saturating finite split monoids.
    pub fn finite_monoid(&self, name: &str) -> Result<FiniteMonoid, DslError> {
        let m = self.monoid(name).ok_or_else(|| semantic(name, "no such monoid"))?;
        match &m.chart {
            MonoidChart::Finite(f) => Ok(f.clone()),
            MonoidChart::Split(s) if s.finite_size().is_some() => {
                saturate(&presentation_of(s), self.settings.saturation_cap).map_err(|e| monoid_error(name, e))
            }
            MonoidChart::Split(s) => Err(semantic(name, format!("{s} is infinite"))),
        }
    }
}

fn monoid_error(name: &str, e: MonoidError) -> DslError {
    match e {
        MonoidError::CapExceeded { .. } => DslError::ResourceCap {
            name: name.to_string(),
            reason: e.to_string(),
        },
        e => semantic(name, e.to_string()),
    }
}

fn scheme_error(name: &str, e: SchemeError) -> DslError {
    match e {
        SchemeError::Spectrum(_) => DslError::ResourceCap {
            name: name.to_string(),
            reason: e.to_string(),
        },
        e => semantic(name, e.to_string()),
    }
}

fn split_monoid(name: &str, s: &SplitExpr) -> Result<SplitMonoid, DslError> {
    let free = u32::try_from(s.free).map_err(|_| semantic(name, "free rank too large"))?;
    let cone = u32::try_from(s.cone).map_err(|_| semantic(name, "cone rank too large"))?;
    SplitMonoid::new(free, cone, s.torsion.clone(), s.zero).map_err(|e| semantic(name, e.to_string()))
}

fn resolve_monoid(name: &str, body: &MonoidBody, settings: &Settings) -> Result<NamedMonoid, DslError> {
    let (chart, presentation) = match body {
        MonoidBody::Split(s) => {
            let s = split_monoid(name, s)?;
            let p = presentation_of(&s);
            (MonoidChart::Split(s), p)
        }
        MonoidBody::Table { rows, identity, names } => {
            let table: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect();
            let m = FiniteMonoid::from_table(&table, *identity as usize, names.clone())
                .map_err(|e| semantic(name, e.to_string()))?;
            let p = m.presentation().0;
            (MonoidChart::Finite(m), p)
        }
        MonoidBody::Presented { gens, rels, zero, cap } => {
            let index: BTreeMap<&str, usize> = gens.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
            let to_word = |w: &WordExpr| -> Result<Word, DslError> {
                let mut out = vec![0u32; gens.len()];
                for (g, e) in w {
                    let i = *index
                        .get(g.as_str())
                        .ok_or_else(|| semantic(name, format!("unknown generator `{g}`")))?;
                    out[i] = out[i]
                        .checked_add(*e)
                        .ok_or_else(|| semantic(name, "exponent overflow"))?;
                }
                Ok(out)
            };
            let relations = rels
                .iter()
                .map(|(l, r)| Ok((to_word(l)?, to_word(r)?)))
                .collect::<Result<Vec<_>, DslError>>()?;
            let p = Presentation::new(gens.clone(), relations, *zero).map_err(|e| semantic(name, e.to_string()))?;
            let cap = cap.map_or(settings.saturation_cap, |c| c as usize);
            let m = saturate(&p, cap).map_err(|e| monoid_error(name, e))?;
            (MonoidChart::Finite(m), p)
        }
    };
    if let MonoidChart::Finite(m) = &chart {
        if m.size() > settings.spectrum.max_finite_size {
            return Err(DslError::ResourceCap {
                name: name.to_string(),
                reason: format!(
                    "{} elements exceed the spectrum bound {}",
                    m.size(),
                    settings.spectrum.max_finite_size
                ),
            });
        }
    }
    Ok(NamedMonoid {
        name: name.to_string(),
        chart,
        presentation,
    })
}

fn int_arg(scheme: &str, builtin: &str, args: &[Arg]) -> Result<u64, DslError> {
    match args {
        [Arg::Int(n)] => Ok(*n),
        _ => Err(semantic(scheme, format!("{builtin}() takes one integer"))),
    }
}

fn resolve_builtin(scheme: &str, builtin: &str, args: &[Arg], monoids: &[NamedMonoid]) -> Result<F1Scheme, DslError> {
    let bounded = |lo: u64, hi: u64| -> Result<u64, DslError> {
        let n = int_arg(scheme, builtin, args)?;
        if n < lo || n > hi {
            return Err(semantic(scheme, format!("{builtin}({n}) needs {lo} <= n <= {hi}")));
        }
        Ok(n)
    };
    let x = match builtin {
        "affine" => affine_space(bounded(0, 31)? as u32),
        "projective" => proj_space(bounded(0, u64::from(MAX_PROJECTIVE_DIM))? as u32),
        "torus" => torus(bounded(0, 1 << 16)? as u32),
        "mu" => mu(bounded(1, 1 << 16)? as usize),
        "d" => d_scheme(bounded(2, 1 << 16)? as usize),
        "point" | "idempotent" => {
            if !args.is_empty() {
                return Err(semantic(scheme, format!("{builtin}() takes no arguments")));
            }
            if builtin == "point" {
                spec_f1()
            } else {
                idempotent_point()
            }
        }
        "spec" => match args {
            [Arg::Name(m)] => {
                let m = monoids
                    .iter()
                    .find(|x| &x.name == m)
                    .ok_or_else(|| semantic(scheme, format!("unknown monoid `{m}`")))?;
                F1Scheme::affine(scheme, m.chart.clone())
            }
            _ => return Err(semantic(scheme, "spec() takes one monoid name")),
        },
        _ => return Err(semantic(scheme, format!("unknown builder `{builtin}`"))),
    };
    Ok(F1Scheme {
        name: scheme.to_string(),
        ..x
    })
}

fn resolve_point(
    scheme: &str,
    charts: &[(String, MonoidChart)],
    p: &PointExpr,
    limits: &SpectrumLimits,
) -> Result<PointRef, DslError> {
    let chart = charts
        .iter()
        .position(|(n, _)| *n == p.chart)
        .ok_or_else(|| semantic(scheme, format!("unknown chart `{}`", p.chart)))?;
    let bad = |what: String| semantic(scheme, format!("{p}: {what}"));
    let prime = match &charts[chart].1 {
        MonoidChart::Finite(m) => {
            let mut bits = 0u32;
            for item in &p.items {
                let x = match item {
                    PointItem::Index(i) if (*i as usize) < m.size() => *i as usize,
                    PointItem::Index(i) => return Err(bad(format!("no element {i}"))),
                    PointItem::Name(s) => m.index_of(s).ok_or_else(|| bad(format!("no element `{s}`")))?,
                    PointItem::Zero => m.zero().ok_or_else(|| bad("monoid has no zero".into()))?,
                };
                bits |= 1 << x;
            }
            PrimeIdeal::Finite(bits)
        }
        MonoidChart::Split(s) => {
            let mut cone = 0u32;
            let mut zero = false;
            for item in &p.items {
                let j = match item {
                    PointItem::Zero if s.has_zero() => {
                        zero = true;
                        continue;
                    }
                    PointItem::Zero => return Err(bad("monoid has no zero".into())),
                    PointItem::Index(j) => *j,
                    PointItem::Name(n) => n
                        .strip_prefix('x')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| bad(format!("`{n}` is not a cone coordinate")))?,
                };
                if j >= u64::from(s.cone_rank()) {
                    return Err(bad(format!("no cone coordinate x{j}")));
                }
                cone |= 1 << j;
            }
            PrimeIdeal::Split { cone, zero }
        }
    };
    let spectrum = charts[chart]
        .1
        .spectrum_with(limits)
        .map_err(|e| scheme_error(scheme, e.into()))?;
    if !spectrum.contains(&prime) {
        return Err(bad("not a prime ideal".into()));
    }
    Ok(PointRef::new(chart, prime))
}

pub fn resolve(file: &SchemeFile) -> Result<Document, DslError> {
    let mut settings = Settings::default();
    for item in &file.items {
        if let Item::Set { name, value } = item {
            settings.apply(name, *value)?;
        }
    }
    let mut monoids: Vec<NamedMonoid> = Vec::new();
    for item in &file.items {
        if let Item::Monoid { name, body } = item {
            if monoids.iter().any(|m| &m.name == name) {
                return Err(semantic(name, "monoid defined twice"));
            }
            monoids.push(resolve_monoid(name, body, &settings)?);
        }
    }
    let mut schemes: Vec<F1Scheme> = Vec::new();
    for item in &file.items {
        let Item::Scheme { name, body } = item else {
            continue;
        };
        if schemes.iter().any(|s| &s.name == name) {
            return Err(semantic(name, "scheme defined twice"));
        }
        let x = match body {
            SchemeBody::Builtin { name: b, args } => resolve_builtin(name, b, args, &monoids)?,
            SchemeBody::Charts { charts, glue } => {
                let mut resolved: Vec<(String, MonoidChart)> = Vec::new();
                for (cname, expr) in charts {
                    if resolved.iter().any(|(n, _)| n == cname) {
                        return Err(semantic(name, format!("chart `{cname}` declared twice")));
                    }
                    let chart = match expr {
                        ChartExpr::Split(s) => MonoidChart::Split(split_monoid(name, s)?),
                        ChartExpr::Monoid(m) => monoids
                            .iter()
                            .find(|x| &x.name == m)
                            .ok_or_else(|| semantic(name, format!("unknown monoid `{m}`")))?
                            .chart
                            .clone(),
                    };
                    resolved.push((cname.clone(), chart));
                }
                let identifications = glue
                    .iter()
                    .map(|(a, b)| {
                        Ok((
                            resolve_point(name, &resolved, a, &settings.spectrum)?,
                            resolve_point(name, &resolved, b, &settings.spectrum)?,
                        ))
                    })
                    .collect::<Result<Vec<_>, DslError>>()?;
                let (chart_names, charts) = resolved.into_iter().unzip();
                F1Scheme {
                    name: name.clone(),
                    charts,
                    chart_names,
                    identifications,
                }
            }
        };
        glue_with(&x, &settings.spectrum).map_err(|e| scheme_error(name, e))?;
        schemes.push(x);
    }
    Ok(Document {
        settings,
        monoids,
        schemes,
    })
}

/// Parses and resolves.
pub fn load(text: &str) -> Result<Document, DslError> {
    resolve(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::zeta_polynomial;

    #[test]
    fn table_monoid() {
        let doc = load("monoid M { table [[0,1],[1,1]] identity 0 }").unwrap();
        let MonoidChart::Finite(m) = &doc.monoid("M").unwrap().chart else {
            panic!("expected a finite chart")
        };
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn builtin_and_split() {
        let doc = load(
            "scheme X = projective(2)\nmonoid B = split(free=1, cone=0, torsion=[2], zero=false)\nscheme G = spec(B)",
        )
        .unwrap();
        assert_eq!(
            zeta_polynomial(doc.scheme("X").unwrap()).unwrap().to_string(),
            "x^2 + x + 1"
        );
        let g = doc.scheme("G").unwrap();
        let pts = g.glue().unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].stalk_units.rank(), 1);
        assert_eq!(pts[0].stalk_units.invariant_factors(), &[2]);
    }

    #[test]
    fn presented_monoid() {
        let doc = load("monoid P { gens a; rels a^2 = a } monoid Q { gens g rels g^3 = 1 zero cap 10 }").unwrap();
        let p = doc.finite_monoid("P").unwrap();
        assert_eq!(p.size(), 2);
        let q = doc.finite_monoid("Q").unwrap();
        assert_eq!(q.size(), 4);
        assert!(q.has_zero());
    }

    #[test]
    fn glued_line() {
        let text = r#"
            # P^1 by hand
            scheme L {
              charts U0 = split(cone=1), U1 = split(cone=1);
              glue U0.p{} ~ U1.p{};
            }
        "#;
        let doc = load(text).unwrap();
        let n = zeta_polynomial(doc.scheme("L").unwrap()).unwrap();
        assert_eq!(n.to_string(), "x + 1");
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("monoid M {\n  table [[0,1]] identity }") {
            Err(DslError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 26)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("scheme X = projective(2"), Err(DslError::Syntax { .. })));
        assert!(matches!(
            parse("monoid M = split(cone=1, cone=2)"),
            Err(DslError::Syntax { .. })
        ));
        assert!(matches!(
            parse("scheme X $"),
            Err(DslError::Syntax { line: 1, col: 10, .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        for text in [
            "scheme X = projective(9)",
            "scheme X = spec(M)",
            "monoid M { gens a; rels b = a }",
            "monoid M { table [[0,1],[1,0]] identity 1 }",
            "monoid M = split(torsion=[4,2])",
            "scheme X = point() scheme X = point()",
            "set frobnicate 3",
            "scheme L { charts U0 = split(cone=1), U1 = split(cone=1, zero=true); glue U0.p{x0} ~ U1.p{zero}; }",
            "scheme L { charts U0 = split(cone=1); glue U0.p{x3} ~ U0.p{}; }",
            "scheme L { charts U0 = split(cone=1), U1 = split(free=2); glue U0.p{} ~ U1.p{}; }",
        ] {
            assert!(matches!(load(text), Err(DslError::Semantic { .. })), "{text}");
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(load("monoid F { gens a }"), Err(DslError::ResourceCap { .. })));
        assert!(matches!(
            load("monoid F { gens a; rels a^40 = 1 }"),
            Err(DslError::ResourceCap { .. })
        ));
        assert!(load("set spectrum_max_elements 32\nmonoid F { gens a; rels a^20 = 1 }").is_ok());
    }

    #[test]
    fn round_trip() {
        let text = r#"
            set k0_cap 10
            monoid M { table [[0,1],[1,1]] identity 0 names ["1", "a b"] }
            monoid P { gens a, b; rels a^2 = a, a*b = b, b^3 = 1; zero; cap 64 }
            monoid E { gens ; zero }
            monoid B = split(free=1, torsion=[2])
            scheme X = projective(2)
            scheme Y = spec(M)
            scheme Z {
              charts U0 = split(cone=1, zero=true), U1 = M
              glue U0.p{zero, x0} ~ U1.p{"a b"}
              glue U0.p{} ~ U1.p{}
            }
        "#;
        let ast = parse(text).unwrap();
        let printed = ast.to_string();
        assert_eq!(parse(&printed).unwrap(), ast);
        assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}
