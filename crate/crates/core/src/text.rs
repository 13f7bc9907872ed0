//! Tokenizer and literal grammar for the octonion text format.
//!
//! A literal is a sum of terms `[+|-] coeff [eK]` or `[+|-] eK`, where `coeff`
//! is an integer, a fraction `p/q`, or (float backend) a decimal. `e0` and a
//! bare coefficient both denote the real part. Whitespace is ignored.
//!
//! A decimal exponent needs an explicit sign (`1e-15`), so `2e1` always reads
//! as two times `e1`.

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Number(String),
    Unit(usize),
    Ident(String),
    Plus,
    Minus,
    Star,
    Tilde,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Unit(k) => format!("unit `e{k}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

/// Returns `Some(k)` if `name` is one of the reserved unit names `e0`..`e7`.
pub fn unit_index(name: &str) -> Option<usize> {
    match name.as_bytes() {
        [b'e', d @ b'0'..=b'7'] => Some(usize::from(d - b'0')),
        _ => None,
    }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let single = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'~' => Some(Tok::Tilde),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, offset: start });
            i += 1;
            continue;
        }
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            i = scan_number(bytes, i);
            out.push(Token {
                tok: Tok::Number(src[start..i].to_string()),
                offset: start,
            });
        } else if b.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &src[start..i];
            let tok = match unit_index(word) {
                Some(k) => Tok::Unit(k),
                None => Tok::Ident(word.to_string()),
            };
            out.push(Token { tok, offset: start });
        } else {
            let found = src[start..].chars().next().unwrap_or(' ');
            return Err(Error::Syntax {
                offset: start,
                expected: vec!["a number, unit, identifier, operator or parenthesis".into()],
                found: format!("`{found}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        offset: src.len(),
    });
    Ok(out)
}

fn scan_digits(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn scan_number(bytes: &[u8], i: usize) -> usize {
    let mut i = scan_digits(bytes, i);
    let at = |k: usize| bytes.get(k).copied();
    if at(i) == Some(b'/') && at(i + 1).is_some_and(|c| c.is_ascii_digit()) {
        return scan_digits(bytes, i + 1);
    }
    if at(i) == Some(b'.') {
        i = scan_digits(bytes, i + 1);
    }
    if matches!(at(i), Some(b'e' | b'E'))
        && matches!(at(i + 1), Some(b'+' | b'-'))
        && at(i + 2).is_some_and(|c| c.is_ascii_digit())
    {
        i = scan_digits(bytes, i + 2);
    }
    i
}

/// Cursor over a token stream, shared with the expression parser.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Result<Self> {
        Ok(Cursor {
            tokens: tokenize(src)?,
            pos: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    pub fn peek_at(&self, ahead: usize) -> &Tok {
        let k = (self.pos + ahead).min(self.tokens.len() - 1);
        &self.tokens[k].tok
    }

    pub fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    pub fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    pub fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    pub fn expect_end(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.error(&["end of input"])),
        }
    }

    /// True if the upcoming tokens start a literal term, optionally signed.
    pub fn at_literal(&self) -> bool {
        match self.peek() {
            Tok::Number(_) | Tok::Unit(_) => true,
            Tok::Plus | Tok::Minus => matches!(self.peek_at(1), Tok::Number(_) | Tok::Unit(_)),
            _ => false,
        }
    }

    /// Parses a literal: one or more signed terms.
    pub fn literal<S: Scalar>(&mut self) -> Result<Octonion<S>> {
        let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Tok::Plus | Tok::Minus if first || self.at_literal() => {
                    matches!(self.bump(), Tok::Minus)
                }
                _ if first => false,
                _ => break,
            };
            let (coeff, unit) = self.term::<S>()?;
            let coeff = if negative { -coeff } else { coeff };
            c[unit] = c[unit].clone() + coeff;
            first = false;
        }
        Ok(Octonion::new(c))
    }

    fn term<S: Scalar>(&mut self) -> Result<(S, usize)> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Number(text) => {
                self.bump();
                let coeff = S::parse_coeff(&text).map_err(|err| match err {
                    Error::InvalidNumber { text, reason } => Error::InvalidNumber {
                        text,
                        reason: format!("{reason} (at byte {offset})"),
                    },
                    other => other,
                })?;
                if let Tok::Unit(k) = *self.peek() {
                    self.bump();
                    Ok((coeff, k))
                } else {
                    Ok((coeff, 0))
                }
            }
            Tok::Unit(k) => {
                self.bump();
                Ok((S::one(), k))
            }
            _ => Err(self.error(&["a number", "a unit e0..e7"])),
        }
    }
}

/// Parses a complete octonion literal such as `2 - 3/4e1 + e7`.
pub fn parse_octonion<S: Scalar>(src: &str) -> Result<Octonion<S>> {
    let mut cursor = Cursor::new(src)?;
    let value = cursor.literal()?;
    cursor.expect_end()?;
    Ok(value)
}
