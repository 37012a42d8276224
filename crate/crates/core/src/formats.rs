//! Text notation for addresses, elements and certificates.
//!
//! Elements are written either as pair lists (`00 -> 1`, one pair per line
//! or comma separated) or in cycle notation (`(00 110 010 101) (011 111)`).

use std::fmt;

use thiserror::Error;

use crate::addresses::Address;
use crate::elements::Element;
use crate::error::Error;
use crate::genmax::{Branch, Certificate};
use crate::structure::cycle_decomposition;
use crate::word::{Token, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("semantic error: {0}")]
    Semantic(String),
}

impl ParseError {
    fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shifts a syntax position that was computed relative to a single line.
    fn at_line(self, line: usize, col_offset: usize) -> Self {
        match self {
            ParseError::Syntax {
                column, message, ..
            } => ParseError::Syntax {
                line,
                column: column + col_offset,
                message,
            },
            other => other,
        }
    }
}

impl From<Error> for ParseError {
    fn from(e: Error) -> Self {
        ParseError::Semantic(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Pairs,
    Cycles,
}

/// Character cursor tracking 1-based line and column.
struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::syntax(self.line, self.column, message)
    }

    /// Skips spaces and tabs; with `newlines`, also line breaks.
    fn skip_blank(&mut self, newlines: bool) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn address(&mut self) -> Result<Address, ParseError> {
        let (line, column) = (self.line, self.column);
        let mut word = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if word.is_empty() {
            return Err(self.error("expected an address"));
        }
        word.parse()
            .map_err(|_| ParseError::syntax(line, column, format!("invalid address {word:?}")))
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        for want in s.chars() {
            match self.peek() {
                Some(c) if c == want => {
                    self.bump();
                }
                _ => return Err(self.error(format!("expected {s:?}"))),
            }
        }
        Ok(())
    }
}

pub fn parse_address(text: &str) -> Result<Address, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_blank(true);
    let a = cur.address()?;
    cur.skip_blank(true);
    if cur.peek().is_some() {
        return Err(cur.error("trailing input after address"));
    }
    Ok(a)
}

/// Addresses separated by whitespace or commas.
pub fn parse_addresses(text: &str) -> Result<Vec<Address>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        cur.skip_blank(true);
        if cur.peek() == Some(',') {
            cur.bump();
            continue;
        }
        if cur.peek().is_none() {
            return Ok(out);
        }
        out.push(cur.address()?);
    }
}

pub fn parse_element(text: &str) -> Result<Element, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_blank(true);
    match cur.peek() {
        None => Err(cur.error("empty input")),
        Some('(') => parse_cycles(cur),
        Some(_) => parse_pairs(cur),
    }
}

fn parse_pairs(mut cur: Cursor<'_>) -> Result<Element, ParseError> {
    let mut pairs = Vec::new();
    loop {
        cur.skip_blank(true);
        if cur.peek().is_none() {
            break;
        }
        let d = cur.address()?;
        cur.skip_blank(false);
        cur.expect("->")?;
        cur.skip_blank(false);
        let r = cur.address()?;
        pairs.push((d, r));
        cur.skip_blank(false);
        match cur.peek() {
            None => break,
            Some(',') | Some('\n') => {
                cur.bump();
            }
            Some(c) => return Err(cur.error(format!("unexpected character {c:?}"))),
        }
    }
    Ok(Element::new(pairs)?)
}

fn parse_cycles(mut cur: Cursor<'_>) -> Result<Element, ParseError> {
    let mut cycles: Vec<Vec<Address>> = Vec::new();
    loop {
        cur.skip_blank(true);
        match cur.peek() {
            None => break,
            Some('(') => {
                cur.bump();
            }
            Some(c) => return Err(cur.error(format!("expected '(' but found {c:?}"))),
        }
        let mut cycle = Vec::new();
        loop {
            cur.skip_blank(true);
            match cur.peek() {
                Some(')') => {
                    cur.bump();
                    break;
                }
                None => return Err(cur.error("unclosed cycle")),
                Some(_) => cycle.push(cur.address()?),
            }
        }
        cycles.push(cycle);
    }
    let all: Vec<&Address> = cycles.iter().flatten().collect();
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            if !x.is_incomparable(y) {
                return Err(ParseError::Semantic(format!(
                    "cycle entries {x} and {y} are not incomparable"
                )));
            }
        }
    }
    let mut g = Element::identity();
    for c in cycles.iter().filter(|c| c.len() >= 2) {
        g = g.compose(&Element::cycle(c)?)?;
    }
    Ok(g)
}

pub fn print_element(g: &Element, style: Style) -> crate::Result<String> {
    match style {
        Style::Pairs => Ok(g.to_string()),
        Style::Cycles => Ok(cycle_decomposition(g)?.to_string()),
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target: {}", self.target.to_line())?;
        for t in self.word.tokens() {
            match t {
                Token::A => writeln!(f, "A")?,
                Token::AInv => writeln!(f, "A^-1")?,
                Token::T(e) => writeln!(f, "T: {}", e.to_line())?,
            }
        }
        writeln!(f, "audit:")?;
        for (name, e) in &self.audit {
            writeln!(f, "{name}: {}", e.to_line())?;
        }
        if let Some(b) = self.branch {
            writeln!(f, "branch: {b}")?;
        }
        Ok(())
    }
}

/// Parses the text written by `Certificate`'s `Display`. Tokens are taken
/// verbatim.
pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (n, first) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::syntax(1, 1, "empty certificate"))?;
    let rest = first
        .strip_prefix("target:")
        .ok_or_else(|| ParseError::syntax(n, 1, "expected \"target:\""))?;
    let target = parse_element(rest).map_err(|e| e.at_line(n, 7))?;

    let mut tokens = Vec::new();
    let mut audit = Vec::new();
    let mut branch = None;
    let mut in_audit = false;
    for (n, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !in_audit {
            match trimmed {
                "A" => tokens.push(Token::A),
                "A^-1" => tokens.push(Token::AInv),
                "audit:" => in_audit = true,
                _ => {
                    let body = trimmed
                        .strip_prefix("T:")
                        .ok_or_else(|| ParseError::syntax(n, 1, "expected a token line"))?;
                    let e = parse_element(body).map_err(|e| e.at_line(n, 2))?;
                    tokens.push(Token::T(e));
                }
            }
            continue;
        }
        let (name, body) = trimmed
            .split_once(':')
            .ok_or_else(|| ParseError::syntax(n, 1, "expected \"name: pairs\""))?;
        if name == "branch" {
            branch = Some(match body.trim() {
                "swap" => Branch::Swap,
                "three-cycle" => Branch::ThreeCycle,
                other => {
                    return Err(ParseError::syntax(
                        n,
                        name.len() + 2,
                        format!("unknown branch {other:?}"),
                    ))
                }
            });
        } else {
            let e = parse_element(body).map_err(|e| e.at_line(n, name.len() + 1))?;
            audit.push((name.to_string(), e));
        }
    }
    Ok(Certificate {
        target,
        word: Word::from_tokens(tokens),
        audit,
        branch,
    })
}
