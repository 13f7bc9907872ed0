//! Octonion expressions.
//!
//! ```text
//! expression := term ('*' term)*
//! term       := atom postfix*
//! postfix    := '~'            conjugate
//!             | '^-1'          inverse
//! atom       := literal | identifier | '(' expression ')'
//! ```
//!
//! `literal` is the octonion text format, so `x * 2 - e1` reads as
//! `x * (2 - e1)`. Unparenthesized chains of `*` group to the left; chains of
//! three or more factors are reported in [`Parsed::defaulted`] because the
//! grouping changes the value.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Scalar;
use crate::text::{unit_index, Cursor, Tok};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr<S: Scalar> {
    Literal(Octonion<S>),
    Var(String),
    Product(Box<Expr<S>>, Box<Expr<S>>),
    Conj(Box<Expr<S>>),
    Inv(Box<Expr<S>>),
}

impl<S: Scalar> Expr<S> {
    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn product(left: Expr<S>, right: Expr<S>) -> Self {
        Expr::Product(Box::new(left), Box::new(right))
    }

    pub fn conj(inner: Expr<S>) -> Self {
        Expr::Conj(Box::new(inner))
    }

    pub fn inv(inner: Expr<S>) -> Self {
        Expr::Inv(Box::new(inner))
    }
}

impl<S: Scalar> fmt::Display for Expr<S> {
    /// Fully parenthesized source text that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(v) => write!(f, "({v})"),
            Expr::Var(name) => f.write_str(name),
            Expr::Product(l, r) => write!(f, "({l}*{r})"),
            Expr::Conj(inner) => write!(f, "{inner}~"),
            Expr::Inv(inner) => write!(f, "{inner}^-1"),
        }
    }
}

/// A run of three or more factors joined by `*` without brackets.
#[derive(Clone, Debug, PartialEq)]
pub struct DefaultedChain<S: Scalar> {
    /// Byte range of the chain in the source.
    pub span: Range<usize>,
    pub factors: Vec<Expr<S>>,
}

impl<S: Scalar> DefaultedChain<S> {
    /// `((f1*f2)*f3)...`, the grouping the parser chose.
    pub fn left_grouped(&self) -> Expr<S> {
        let mut it = self.factors.iter().cloned();
        let first = it.next().expect("chains have factors");
        it.fold(first, Expr::product)
    }

    /// `f1*(f2*(f3...))`
    pub fn right_grouped(&self) -> Expr<S> {
        let mut it = self.factors.iter().rev().cloned();
        let last = it.next().expect("chains have factors");
        it.fold(last, |acc, f| Expr::product(f, acc))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Parsed<S: Scalar> {
    pub expr: Expr<S>,
    pub defaulted: Vec<DefaultedChain<S>>,
}

pub fn parse<S: Scalar>(source: &str) -> Result<Parsed<S>> {
    let mut parser = Parser {
        cursor: Cursor::new(source)?,
        source_len: source.len(),
        defaulted: Vec::new(),
    };
    let expr = parser.expression()?;
    parser.cursor.expect_end()?;
    Ok(Parsed {
        expr,
        defaulted: parser.defaulted,
    })
}

struct Parser<S: Scalar> {
    cursor: Cursor,
    source_len: usize,
    defaulted: Vec<DefaultedChain<S>>,
}

impl<S: Scalar> Parser<S> {
    fn expression(&mut self) -> Result<Expr<S>> {
        let start = self.cursor.offset();
        let mut factors = vec![self.term()?];
        while *self.cursor.peek() == Tok::Star {
            self.cursor.bump();
            factors.push(self.term()?);
        }
        let end = match self.cursor.peek() {
            Tok::End => self.source_len,
            _ => self.cursor.offset(),
        };
        let chain = DefaultedChain {
            span: start..end,
            factors,
        };
        let expr = chain.left_grouped();
        if chain.factors.len() >= 3 {
            self.defaulted.push(chain);
        }
        Ok(expr)
    }

    fn term(&mut self) -> Result<Expr<S>> {
        let mut expr = self.atom()?;
        loop {
            match self.cursor.peek() {
                Tok::Tilde => {
                    self.cursor.bump();
                    expr = Expr::conj(expr);
                }
                Tok::Caret => {
                    self.cursor.bump();
                    if *self.cursor.peek() != Tok::Minus {
                        return Err(self.cursor.error(&["`-1` after `^`"]));
                    }
                    self.cursor.bump();
                    if *self.cursor.peek() != Tok::Number("1".into()) {
                        return Err(self.cursor.error(&["`1` after `^-`"]));
                    }
                    self.cursor.bump();
                    expr = Expr::inv(expr);
                }
                _ => return Ok(expr),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr<S>> {
        if self.cursor.at_literal() {
            return Ok(Expr::Literal(self.cursor.literal()?));
        }
        match self.cursor.peek().clone() {
            Tok::Ident(name) => {
                self.cursor.bump();
                Ok(Expr::Var(name))
            }
            Tok::LParen => {
                self.cursor.bump();
                let inner = self.expression()?;
                if *self.cursor.peek() != Tok::RParen {
                    return Err(self.cursor.error(&["`*`", "`)`"]));
                }
                self.cursor.bump();
                Ok(inner)
            }
            _ => Err(self.cursor.error(&["a literal", "an identifier", "`(`"])),
        }
    }
}

/// Variable bindings. Names follow `[a-zA-Z][a-zA-Z0-9_]*` and may not be one
/// of the unit names `e0`..`e7`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Environment<S: Scalar> {
    bindings: BTreeMap<String, Octonion<S>>,
}

impl<S: Scalar> Environment<S> {
    pub fn new() -> Self {
        Environment {
            bindings: BTreeMap::new(),
        }
    }

    pub fn bind(&mut self, name: &str, value: Octonion<S>) -> Result<()> {
        validate_identifier(name)?;
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    pub fn with(mut self, name: &str, value: Octonion<S>) -> Result<Self> {
        self.bind(name, value)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&Octonion<S>> {
        self.bindings.get(name)
    }
}

pub fn validate_identifier(name: &str) -> Result<()> {
    if unit_index(name).is_some() {
        return Err(Error::ReservedIdentifier(name.to_string()));
    }
    let mut chars = name.chars();
    let valid = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        return Err(Error::InvalidIdentifier(name.to_string()));
    }
    Ok(())
}

pub fn eval_expr<S: Scalar>(expr: &Expr<S>, env: &Environment<S>) -> Result<Octonion<S>> {
    match expr {
        Expr::Literal(v) => Ok(v.clone()),
        Expr::Var(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable(name.clone())),
        Expr::Product(l, r) => Ok(eval_expr(l, env)?.multiply(&eval_expr(r, env)?)),
        Expr::Conj(inner) => Ok(eval_expr(inner, env)?.conjugate()),
        Expr::Inv(inner) => eval_expr(inner, env)?.inverse_named(&inner.to_string()),
    }
}
