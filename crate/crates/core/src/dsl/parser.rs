use std::collections::BTreeSet;

use super::VarietyExpr;
use crate::atoms::AtomKind;
use crate::error::{Error, Result, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Word(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Word(w) => w.clone(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

const PRIMARY_START: &[&str] = &[
    "L", "INT", "A", "P", "Gr", "Hilb", "Lin", "C", "Omega", "Sym", "'('",
];

fn syntax(offset: usize, expected: &[&str], found: Option<String>) -> Error {
    Error::Syntax(SyntaxError {
        offset,
        expected: expected
            .iter()
            .map(|s| s.to_string())
            .collect::<BTreeSet<_>>(),
        found,
    })
}

fn lex(source: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = source.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = source[start..i].parse::<u64>().map_err(|_| Error::Arity {
                    offset: start,
                    message: format!("integer {} is too large", &source[start..i]),
                })?;
                toks.push((start, Tok::Int(n)));
                continue;
            }
            b if b.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((start, Tok::Word(source[start..i].to_string())));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => {
                let ch = source[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, PRIMARY_START, Some(format!("{ch:?}"))));
            }
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        syntax(self.offset(), expected, self.peek().map(Tok::describe))
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn int(&mut self) -> Result<(usize, u64)> {
        let offset = self.offset();
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.pos += 1;
                Ok((offset, n))
            }
            _ => Err(self.unexpected(&["INT"])),
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let (offset, n) = self.int()?;
        u32::try_from(n).map_err(|_| Error::Arity {
            offset,
            message: format!("parameter {n} is too large"),
        })
    }

    fn expr(&mut self) -> Result<VarietyExpr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    let lhs = collapse(terms, VarietyExpr::Sum);
                    terms = vec![VarietyExpr::Diff(Box::new(lhs), Box::new(rhs))];
                }
                _ => return Ok(collapse(terms, VarietyExpr::Sum)),
            }
        }
    }

    fn term(&mut self) -> Result<VarietyExpr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(collapse(factors, VarietyExpr::Prod))
    }

    fn factor(&mut self) -> Result<VarietyExpr> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = self.small_int()?;
            return Ok(VarietyExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<VarietyExpr> {
        let start = self.offset();
        let word = match self.peek() {
            Some(&Tok::Int(n)) => {
                self.pos += 1;
                return Ok(VarietyExpr::Lit(n));
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(inner);
            }
            Some(Tok::Word(w)) => w.clone(),
            _ => return Err(self.unexpected(PRIMARY_START)),
        };
        self.pos += 1;
        let atom = match word.as_str() {
            "L" => return Ok(VarietyExpr::Lefschetz),
            "A" => AtomKind::Affine(self.small_int()?),
            "P" => AtomKind::Projective(self.small_int()?),
            "Hilb" => AtomKind::HilbP2(self.small_int()?),
            "Gr" | "Omega" => {
                self.expect(Tok::LParen, "'('")?;
                let k = self.small_int()?;
                self.expect(Tok::Comma, "','")?;
                let n = self.small_int()?;
                self.expect(Tok::RParen, "')'")?;
                if word == "Gr" {
                    AtomKind::Grassmannian { k, n }
                } else {
                    AtomKind::OmegaCurveLocus { k, n }
                }
            }
            "Lin" | "C" => {
                self.expect(Tok::LParen, "'('")?;
                let d = self.small_int()?;
                self.expect(Tok::RParen, "')'")?;
                if word == "Lin" {
                    AtomKind::LinearSystem(d)
                } else {
                    AtomKind::UniversalCurve(d)
                }
            }
            "Sym" => {
                let order = self.small_int()?;
                self.expect(Tok::LParen, "'('")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(VarietyExpr::Sym(order, Box::new(inner)));
            }
            _ => {
                self.pos -= 1;
                return Err(self.unexpected(PRIMARY_START));
            }
        };
        atom.validate().map_err(|message| Error::Arity {
            offset: start,
            message,
        })?;
        Ok(VarietyExpr::Atom(atom))
    }
}

fn collapse(mut items: Vec<VarietyExpr>, wrap: fn(Vec<VarietyExpr>) -> VarietyExpr) -> VarietyExpr {
    if items.len() == 1 {
        items.pop().expect("one item")
    } else {
        wrap(items)
    }
}

/// Parses DSL source into an expression tree.
pub fn parse(source: &str) -> Result<VarietyExpr> {
    let mut parser = Parser {
        toks: lex(source)?,
        pos: 0,
        end: source.len(),
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(expr)
}
