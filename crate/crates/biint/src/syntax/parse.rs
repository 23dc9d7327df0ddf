//! Recursive-descent parser for the ASCII surface syntax.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! formula := imp ( "<->" imp )?          equivalence, non-associative
//! imp     := excl ( "->" imp )?          implication, right-associative
//! excl    := or ( "\" or )*              exclusion, left-associative
//! or      := and ( "|" and )*            left-associative
//! and     := unary ( "&" unary )*        left-associative
//! unary   := "!" unary | "~" unary | atom
//! atom    := ident | "T" | "F" | "(" formula ")"
//! ident   := [a-zA-Z][a-zA-Z0-9_]*       except the keywords T, F
//! ```
//!
//! `!`, `~` and `<->` are sugar and expand during parsing, so the result
//! only contains primitive connectives.  Chaining `<->` without parentheses
//! is rejected rather than silently associated.

use super::Formula;
use std::fmt;

/// A parse failure with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.position, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Top,
    Bot,
    LParen,
    RParen,
    And,
    Or,
    Imp,
    Iff,
    Excl,
    Neg,
    Coneg,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("identifier `{name}`"),
            Token::Top => "`T`".into(),
            Token::Bot => "`F`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Imp => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::Excl => "`\\`".into(),
            Token::Neg => "`!`".into(),
            Token::Coneg => "`~`".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            b')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            b'&' => {
                tokens.push((i, Token::And));
                i += 1;
            }
            b'|' => {
                tokens.push((i, Token::Or));
                i += 1;
            }
            b'\\' => {
                tokens.push((i, Token::Excl));
                i += 1;
            }
            b'!' => {
                tokens.push((i, Token::Neg));
                i += 1;
            }
            b'~' => {
                tokens.push((i, Token::Coneg));
                i += 1;
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push((i, Token::Imp));
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected `->` after `-`".into(),
                    });
                }
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    tokens.push((i, Token::Iff));
                    i += 3;
                } else {
                    return Err(ParseError {
                        position: i,
                        message: "expected `<->` after `<`".into(),
                    });
                }
            }
            b if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &input[start..i];
                let token = match name {
                    "T" => Token::Top,
                    "F" => Token::Bot,
                    _ => Token::Ident(name.to_string()),
                };
                tokens.push((start, token));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{}`", &input[i..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(offset, _)| *offset)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.imp()?;
        if self.peek() == Some(&Token::Iff) {
            self.bump();
            let rhs = self.imp()?;
            if self.peek() == Some(&Token::Iff) {
                return Err(self.error(
                    "`<->` does not associate; parenthesise one side".to_string(),
                ));
            }
            return Ok(Formula::iff(lhs, rhs));
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.excl()?;
        if self.peek() == Some(&Token::Imp) {
            self.bump();
            let rhs = self.imp()?; // right-associative
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn excl(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.or()?;
        while self.peek() == Some(&Token::Excl) {
            self.bump();
            let rhs = self.or()?;
            lhs = Formula::excl(lhs, rhs); // left-associative
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Neg) => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Some(Token::Coneg) => {
                self.bump();
                Ok(Formula::coneg(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let position = self.here();
        match self.bump() {
            Some(Token::Ident(name)) => Ok(Formula::Var(name)),
            Some(Token::Top) => Ok(Formula::Top),
            Some(Token::Bot) => Ok(Formula::Bot),
            Some(Token::LParen) => {
                let inner = self.formula()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    Some(t) => Err(ParseError {
                        position: self.tokens[self.pos - 1].0,
                        message: format!("expected `)`, found {}", t.describe()),
                    }),
                    None => Err(ParseError {
                        position: self.end,
                        message: "expected `)`, found end of input".into(),
                    }),
                }
            }
            Some(t) => Err(ParseError {
                position,
                message: format!("expected a formula, found {}", t.describe()),
            }),
            None => Err(ParseError {
                position,
                message: "expected a formula, found end of input".into(),
            }),
        }
    }
}

pub(super) fn parse(input: &str) -> Result<Formula, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: input.len(),
    };
    let f = parser.formula()?;
    if let Some(t) = parser.peek() {
        return Err(ParseError {
            position: parser.here(),
            message: format!("unexpected {} after a complete formula", t.describe()),
        });
    }
    Ok(f)
}
