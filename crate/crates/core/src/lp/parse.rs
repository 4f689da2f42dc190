//! Concrete syntax for logic programs.
//!
//! ```text
//! % comment
//! a :- not -a.
//! p(X) :- q(X), not r(X).
//! q(b).
//! ```
//!
//! Identifiers are `[a-zA-Z][a-zA-Z0-9_]*`. Inside argument lists an identifier
//! starting with an uppercase letter is a variable. `-` is classical negation,
//! `not` is negation as failure.

use std::fmt;

use thiserror::Error;

use super::literal::{Literal, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Expected { expected: &'static str, found: String },
    #[error("negation as failure is not allowed in a clause head")]
    NafInHead,
    #[error("`not not` is not allowed")]
    NestedNaf,
    #[error("predicate name {0:?} must start with a lowercase letter")]
    UppercasePredicate(String),
    #[error("trailing input after literal")]
    TrailingInput,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(String),
    Var(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) | Term::Var(c) => f.write_str(c),
        }
    }
}

/// A possibly non-ground literal as written in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceLiteral {
    pub predicate: String,
    pub args: Vec<Term>,
    pub negated: bool,
    pub naf: bool,
}

impl SourceLiteral {
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Const(c) => Some(c.as_str()),
            Term::Var(_) => None,
        })
    }

    /// Ground literal under `subst`; the atom symbol is the printed form `p(a,b)`.
    pub(crate) fn instantiate(&self, subst: &dyn Fn(&str) -> String) -> Literal {
        let mut name = self.predicate.clone();
        if !self.args.is_empty() {
            name.push('(');
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    name.push(',');
                }
                match t {
                    Term::Const(c) => name.push_str(c),
                    Term::Var(v) => name.push_str(&subst(v)),
                }
            }
            name.push(')');
        }
        Literal::new(Symbol::new(&name), self.negated, self.naf)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceClause {
    pub head: SourceLiteral,
    pub body: Vec<SourceLiteral>,
    pub line: usize,
}

impl SourceClause {
    pub fn literals(&self) -> impl Iterator<Item = &SourceLiteral> {
        std::iter::once(&self.head).chain(&self.body)
    }

    pub fn is_ground(&self) -> bool {
        self.literals().all(|l| l.variables().next().is_none())
    }
}

/// Parsed program before grounding.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SourceProgram {
    pub clauses: Vec<SourceClause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Minus,
    If,
    Comma,
    Dot,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Number(s) => write!(f, "{s:?}"),
            Tok::Minus => f.write_str("'-'"),
            Tok::If => f.write_str("':-'"),
            Tok::Comma => f.write_str("','"),
            Tok::Dot => f.write_str("'.'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, column: 1 }
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

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while let Some(&c) = self.chars.peek() {
                if c.is_whitespace() {
                    self.bump();
                } else if c == '%' {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else {
                    break;
                }
            }
            let (line, column) = (self.line, self.column);
            let Some(c) = self.bump() else {
                out.push((Tok::Eof, line, column));
                return Ok(out);
            };
            let tok = match c {
                '-' => Tok::Minus,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ':' => {
                    if self.chars.peek() == Some(&'-') {
                        self.bump();
                        Tok::If
                    } else {
                        return Err(ParseError { line, column, kind: ParseErrorKind::UnexpectedChar(':') });
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let mut s = String::from(c);
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            s.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(s)
                }
                c if c.is_ascii_digit() => {
                    let mut s = String::from(c);
                    while let Some(&c) = self.chars.peek() {
                        if c.is_ascii_digit() {
                            s.push(c);
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::Number(s)
                }
                other => return Err(ParseError { line, column, kind: ParseErrorKind::UnexpectedChar(other) }),
            };
            out.push((tok, line, column));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.here();
        ParseError { line, column, kind }
    }

    fn expected(&self, expected: &'static str) -> ParseError {
        self.error(ParseErrorKind::Expected { expected, found: self.peek().to_string() })
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn program(&mut self) -> Result<SourceProgram, ParseError> {
        let mut clauses = Vec::new();
        while *self.peek() != Tok::Eof {
            clauses.push(self.clause()?);
        }
        Ok(SourceProgram { clauses })
    }

    fn clause(&mut self) -> Result<SourceClause, ParseError> {
        let (line, _) = self.here();
        if self.is_not_keyword() {
            return Err(self.error(ParseErrorKind::NafInHead));
        }
        let head = self.classical()?;
        let mut body = Vec::new();
        if self.eat(&Tok::If) {
            loop {
                body.push(self.body_literal()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        if !self.eat(&Tok::Dot) {
            return Err(self.expected("'.' or ','"));
        }
        Ok(SourceClause { head, body, line })
    }

    /// `not` followed by something that can start a literal. A bare atom named
    /// `not` (as in `not.`) is not treated as the keyword.
    fn is_not_keyword(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "not") && matches!(self.peek_at(1), Tok::Ident(_) | Tok::Minus)
    }

    fn body_literal(&mut self) -> Result<SourceLiteral, ParseError> {
        if self.is_not_keyword() {
            self.advance();
            if self.is_not_keyword() {
                return Err(self.error(ParseErrorKind::NestedNaf));
            }
            let mut l = self.classical()?;
            l.naf = true;
            Ok(l)
        } else {
            self.classical()
        }
    }

    fn classical(&mut self) -> Result<SourceLiteral, ParseError> {
        let negated = self.eat(&Tok::Minus);
        let Tok::Ident(predicate) = self.peek().clone() else {
            return Err(self.expected("an atom"));
        };
        if predicate.starts_with(|c: char| c.is_ascii_uppercase()) {
            return Err(self.error(ParseErrorKind::UppercasePredicate(predicate)));
        }
        self.advance();
        let mut args = Vec::new();
        if self.eat(&Tok::LParen) {
            loop {
                let term = match self.advance() {
                    Tok::Ident(s) if s.starts_with(|c: char| c.is_ascii_uppercase()) => Term::Var(s),
                    Tok::Ident(s) | Tok::Number(s) => Term::Const(s),
                    _ => {
                        self.pos -= 1;
                        return Err(self.expected("a term"));
                    }
                };
                args.push(term);
                if self.eat(&Tok::RParen) {
                    break;
                }
                if !self.eat(&Tok::Comma) {
                    return Err(self.expected("',' or ')'"));
                }
            }
        }
        Ok(SourceLiteral { predicate, args, negated, naf: false })
    }
}

/// Parses program text without grounding it.
pub fn parse_source(text: &str) -> Result<SourceProgram, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    Parser { toks, pos: 0 }.program()
}

/// Parses a single ground literal in display form (`a`, `-a`, `not p(b)`).
pub fn parse_literal(text: &str) -> Result<Literal, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let l = p.body_literal()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(ParseErrorKind::TrailingInput));
    }
    if l.variables().next().is_some() {
        return Err(p.error(ParseErrorKind::Expected { expected: "a ground literal", found: text.to_string() }));
    }
    Ok(l.instantiate(&|v| v.to_string()))
}
