use std::fmt;

use crate::error::{Error, Result};

/// A source position: 1-based line and column plus the byte offset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(usize),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Dot,
    Eq,
    Arrow,
    DArrow,
    Eof,
}

impl Tok {
    /// How the token is named in "expected one of" lists.
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Nat(n) => format!("`{n}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.text()),
        }
    }

    pub fn text(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Dot => ".",
            Tok::Eq => "=",
            Tok::Arrow => "->",
            Tok::DArrow => "=>",
            Tok::Ident(_) | Tok::Nat(_) | Tok::Eof => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `.lcat` text into tokens. `//` starts a comment running to the
/// end of the line.
pub fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&(offset, c)) = chars.peek() {
        let span = Span { line, col, offset };
        let mut advance = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let (_, c) = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c == '/' {
            advance(&mut chars);
            if chars.peek().map(|p| p.1) != Some('/') {
                return Err(Error::Syntax {
                    line: span.line,
                    col: span.col,
                    message: "stray `/`".into(),
                    expected: vec!["`//`".into()],
                });
            }
            while chars.peek().is_some_and(|p| p.1 != '\n') {
                advance(&mut chars);
            }
            continue;
        }
        let tok = if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                s.push(c);
                advance(&mut chars);
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                advance(&mut chars);
            }
            let n = s.parse().map_err(|_| Error::Syntax {
                line: span.line,
                col: span.col,
                message: format!("number `{s}` is too large"),
                expected: vec!["a natural number".into()],
            })?;
            Tok::Nat(n)
        } else {
            advance(&mut chars);
            match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                '.' => Tok::Dot,
                '-' if chars.peek().map(|p| p.1) == Some('>') => {
                    advance(&mut chars);
                    Tok::Arrow
                }
                '=' if chars.peek().map(|p| p.1) == Some('>') => {
                    advance(&mut chars);
                    Tok::DArrow
                }
                '=' => Tok::Eq,
                _ => {
                    return Err(Error::Syntax {
                        line: span.line,
                        col: span.col,
                        message: format!("unexpected character `{c}`"),
                        expected: vec!["an identifier, a number or punctuation".into()],
                    })
                }
            }
        };
        out.push(Token { tok, span });
    }
    out.push(Token { tok: Tok::Eof, span: Span { line, col, offset: text.len() } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let t = lex("map p : [2] -> [1]\n// note\n  = [0,0]").unwrap();
        assert_eq!(t[0].tok, Tok::Ident("map".into()));
        assert_eq!(t[6].tok, Tok::Arrow);
        let eq = t.iter().find(|x| x.tok == Tok::Eq).unwrap();
        assert_eq!((eq.span.line, eq.span.col), (3, 3));
        assert_eq!(t.last().unwrap().tok, Tok::Eof);
    }

    #[test]
    fn bad_character() {
        let e = lex("category C { objects: a@; }").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, col: 24, .. }));
    }
}
